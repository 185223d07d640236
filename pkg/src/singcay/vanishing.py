"""Vanishing certificates and executable checks of the vanishing lemmas.

An element ``g`` is vanishing when some irreducible character takes the
value 0 on it.  A certificate names the character and says why it vanishes:
either the value was computed and is exactly zero (``direct_zero``), or
the p-part of ``g`` moves more points than the defect group of the
character's p-block can (``defect_exclusion``).

Each check in :data:`CHECKS` is declarative: a range of ``n``, the groups it
covers, a hypothesis selecting classes, a conclusion producing one witness
per class, and the classes that are known counterexamples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .algebraic import AlgebraicValue
from .blocks import BlockDescriptor, diagram_with_core, min_defect_support, minimal_block
from .characters import (
    ALT,
    SYM,
    CharacterLabel,
    ClassLabel,
    character_splits,
    character_table,
    characters_of,
    class_splits,
    classes_of,
    degree,
    is_even_type,
    value,
)
from .config import CONFIG, check_bound
from .groups import (
    element_order,
    element_orders,
    fixed_points,
    is_23_number,
    is_max_support,
    is_real_in_An,
    p_part_support,
    support,
)
from .partitions import Partition, is_symmetric, near_square, symmetric_partition, transpose

DIRECT = "direct_zero"
DEFECT = "defect_exclusion"

PASS = "pass"
FAIL = "fail"
OUT_OF_RANGE = "out_of_range"
KNOWN = "known_exception"

# certificates for defect exclusions are double-checked by evaluation up to here
EVAL_LIMIT = 40


class UndecidedError(RuntimeError):
    """No certificate was found and the class is outside the exhaustive range."""


@dataclass(frozen=True)
class VanishCertificate:
    kind: str
    character: CharacterLabel | None = None
    block: BlockDescriptor | None = None
    value_checked: AlgebraicValue | None = None
    cls: ClassLabel | None = None

    def __post_init__(self):
        if self.kind == DIRECT:
            if self.character is None or self.value_checked is None or not self.value_checked.is_zero():
                raise ValueError("direct_zero needs a character with value exactly 0")
        elif self.kind == DEFECT:
            if self.block is None or self.cls is None:
                raise ValueError("defect_exclusion needs a block and the class")
            if p_part_support(self.cls.cycle_type, self.block.p) <= self.block.defect_support:
                raise ValueError("p-part does not exceed the defect support")
            if self.value_checked is not None and not self.value_checked.is_zero():
                raise ValueError("defect exclusion contradicted by evaluation")
        else:
            raise ValueError(f"unknown certificate kind {self.kind!r}")

    def to_json(self) -> dict:
        out = {"kind": self.kind,
               "character": str(self.character) if self.character else None,
               "block": self.block.to_json() if self.block else None,
               "value_checked": self.value_checked.to_json() if self.value_checked is not None else None}
        return out


@dataclass
class CheckReport:
    check_id: str
    n: int
    status: str
    witnesses: list = field(default_factory=list)  # (class, certificate or None, note)

    def __post_init__(self):
        if self.status == FAIL and not any(c is None for _, c, _ in self.witnesses):
            raise ValueError("a failing report needs a counterexample")

    @property
    def ok(self) -> bool:
        return self.status in (PASS, KNOWN, OUT_OF_RANGE)

    def counterexamples(self) -> list:
        return [cls for cls, cert, _ in self.witnesses if cert is None]

    def to_json(self) -> dict:
        return {"check_id": self.check_id, "n": self.n, "status": self.status,
                "witnesses": [{"class": str(cls) if cls is not None else None,
                               "group": cls.group if cls is not None else None,
                               "certificate": cert.to_json() if cert else None,
                               "note": note}
                              for cls, cert, note in self.witnesses]}


# --- characters usable in either group ---------------------------------------

def label_for(lam, group: str) -> CharacterLabel:
    """The irreducible of ``group`` lying under the S_n character ``lam``.

    For a symmetric diagram in A_n the ``+`` constituent is returned.
    """
    lam = tuple(lam)
    if group == SYM:
        return CharacterLabel(lam)
    if character_splits(lam):
        return CharacterLabel(lam, "+", ALT)
    return CharacterLabel(max(lam, transpose(lam)), "", ALT)


def _direct(chi: CharacterLabel, cls: ClassLabel) -> VanishCertificate | None:
    v = value(chi, cls)
    return VanishCertificate(DIRECT, chi, None, v, cls) if v.is_zero() else None


def _preferred_order(chars: list[CharacterLabel]) -> list[CharacterLabel]:
    # integer-valued characters first, then the split ones
    return [c for c in chars if not c.split] + [c for c in chars if c.split]


def _check_class(group: str, n: int, cls: ClassLabel) -> None:
    if cls.group != group or cls.n != n:
        raise ValueError(f"class {cls} does not belong to {group}_{n}")


def _sd9_certificate(cls: ClassLabel) -> VanishCertificate | None:
    if cls.group != SYM or is_even_type(cls.cycle_type) or cls.n < 3:
        return None
    return _direct(CharacterLabel(symmetric_partition(cls.n)), cls)


def jk1_certificate(cycle_type, p: int, n: int, group: str = SYM):
    """``(block, character)`` when the p-part of the type escapes every minimal defect group."""
    cycle_type = tuple(cycle_type)
    if sum(cycle_type) != n:
        raise ValueError("cycle type does not match n")
    if element_order(cycle_type) % p:
        raise ValueError(f"{p} does not divide the order of {cycle_type}")
    if p_part_support(cycle_type, p) <= min_defect_support(n, p):
        return None
    block = minimal_block(n, p)
    lam = diagram_with_core(block.core, block.weight, p)
    return block, label_for(lam, group)


def _primes_of(m: int) -> list[int]:
    out, q = [], 2
    while q * q <= m:
        if m % q == 0:
            out.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        out.append(m)
    return out


def _defect_certificate(cls: ClassLabel, p: int, verify_limit: int) -> VanishCertificate | None:
    found = jk1_certificate(cls.cycle_type, p, cls.n, cls.group)
    if found is None:
        return None
    block, chi = found
    checked = value(chi, cls) if cls.n <= verify_limit else None
    return VanishCertificate(DEFECT, chi, block, checked, cls)


def vanishing_certificate(group: str, n: int, cls: ClassLabel, limit: int | None = None,
                          verify_limit: int = EVAL_LIMIT) -> VanishCertificate | None:
    """A certificate that ``cls`` is vanishing, or ``None`` if it provably is not.

    Up to ``limit`` (default: the table bound) the search is exhaustive, so
    ``None`` is a proof of non-vanishing.  Beyond it a handful of candidate
    characters and the defect argument are tried; if they all fail
    :class:`UndecidedError` is raised rather than claiming non-vanishing.
    """
    _check_class(group, n, cls)
    limit = CONFIG.max_table_n if limit is None else limit
    cert = _sd9_certificate(cls)
    if cert:
        return cert
    if n <= limit:
        for chi in _preferred_order(characters_of(group, n)):
            cert = _direct(chi, cls)
            if cert:
                return cert
        return None
    for lam in _candidate_diagrams(n):
        cert = _direct(label_for(lam, group), cls)
        if cert:
            return cert
    for p in _primes_of(element_order(cls.cycle_type)):
        cert = _defect_certificate(cls, p, verify_limit)
        if cert:
            return cert
    raise UndecidedError(f"no certificate found for {cls} in {group}_{n}; status unknown")


def _candidate_diagrams(n: int) -> list[Partition]:
    out = []
    if n >= 2:
        out.append((n - 1, 1))
    if n >= 7:
        out.append((n - 4, 3, 1))
    if n >= 3:
        out.append(near_square(n))
    return out


def nonvanishing_classes(group: str, n: int, limit: int = 13) -> list[ClassLabel]:
    """Classes on which no irreducible character vanishes (exhaustive)."""
    check_bound(n, limit, "non-vanishing search degree")
    table = character_table(group, n, limit=limit)
    out = []
    for j, cls in enumerate(table.classes):
        if all(not row[j].is_zero() for row in table.values):
            out.append(cls)
    return out


# --- Lemma ma1: the p-adic element ---------------------------------------------

def mno_element(n: int, p: int) -> Partition:
    """Cycle type ``1^{a0} p^{a1} (p^2)^{a2} ...`` from the base-``p`` digits of ``n``."""
    if n < 0 or p < 2:
        raise ValueError("need n >= 0 and p >= 2")
    parts = []
    q, m = 1, n
    while m:
        m, a = divmod(m, p)
        parts.extend([q] * a)
        q *= p
    return tuple(sorted(parts, reverse=True))


def mno_check(n: int, p: int) -> CheckReport:
    h = mno_element(n, p)
    cls = ClassLabel(h)
    witnesses = []
    for chi in characters_of(SYM, n):
        if degree(chi.lam) % p:
            continue
        v = value(chi, cls)
        cert = VanishCertificate(DIRECT, chi, None, v, cls) if v.is_zero() else None
        witnesses.append((cls, cert, str(chi)))
    status = PASS if all(c is not None for _, c, _ in witnesses) else FAIL
    return CheckReport("ma1_p%d" % p, n, status, witnesses)


# --- the battery ---------------------------------------------------------------

Witness = tuple  # (ClassLabel, VanishCertificate | None, note)


@dataclass(frozen=True)
class Check:
    check_id: str
    n_min: int
    n_max: int
    groups: tuple
    hypothesis: Callable[[ClassLabel], bool]
    conclusion: Callable[[str, int, list], list]
    known: dict = field(default_factory=dict)  # n -> {group: frozenset of class strings}
    doc: str = ""


def _each(fn: Callable[[ClassLabel], VanishCertificate | None]):
    def conclude(group, n, classes):
        return [(cls, fn(cls), "") for cls in classes]
    return conclude


def _by_character(lam_of_n: Callable[[int], Partition]):
    def fn(cls):
        return _direct(label_for(lam_of_n(cls.n), cls.group), cls)
    return _each(fn)


def _exhaustive(cls: ClassLabel):
    return vanishing_certificate(cls.group, cls.n, cls)


def _common_zero(group: str, n: int, classes: list) -> list:
    """One character vanishing on every class of the set."""
    if not classes:
        return []
    for chi in _preferred_order(characters_of(group, n)):
        if all(value(chi, c).is_zero() for c in classes):
            return [(c, VanishCertificate(DIRECT, chi, None, value(chi, c), c), "common") for c in classes]
    # no common zero: the non-vanishing classes are the counterexamples; if
    # every class vanishes on its own, the whole set is
    alone = {c: vanishing_certificate(group, n, c) for c in classes}
    if all(alone.values()):
        return [(c, None, "no common character") for c in classes]
    return [(c, cert, "no common character") if cert else (c, None, "non-vanishing")
            for c, cert in alone.items()]


def _k9(group, n, classes):
    out = []
    chi = CharacterLabel((n - 1, 1))
    for cls in classes:
        v = value(chi, cls)
        zero = v.is_zero()
        if zero != (fixed_points(cls.cycle_type) == 1):
            out.append((cls, None, f"value {v}"))
        elif zero:
            out.append((cls, VanishCertificate(DIRECT, chi, None, v, cls), ""))
    return out


def _sd9(group, n, classes):
    out = []
    symmetric = [lam for lam in (c.lam for c in characters_of(SYM, n)) if is_symmetric(lam)]
    for cls in classes:
        for lam in symmetric:
            cert = _direct(CharacterLabel(lam), cls)
            out.append((cls, cert, str(list(lam))))
    return out


def _max_prime_power_order(n: int, group: str, p: int) -> int:
    return max(m for m in element_orders(n, group) if m == p ** _vp(m, p))


def _vp(m: int, p: int) -> int:
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


def _prime_power_top(p: int):
    def conclude(group, n, classes):
        e = _max_prime_power_order(n, group, p)
        return _common_zero(group, n, [c for c in classes if element_order(c.cycle_type) == e])
    return conclude


def _tc1(group, n, classes):
    out = []
    for p in range(5, n + 1):
        if _primes_of(p) != [p]:
            continue
        chosen = [c for c in classes if element_order(c.cycle_type) % p == 0]
        out.extend(_common_zero(group, n, chosen))
    return out


def _min_supports_23(n: int) -> int:
    return min_defect_support(n, 2) + min_defect_support(n, 3)


def _is_23_class(cls: ClassLabel) -> bool:
    o = element_order(cls.cycle_type)
    return o > 1 and is_23_number(o)


def _jk1_then_direct(cls: ClassLabel, primes=(2, 3)):
    for p in primes:
        if element_order(cls.cycle_type) % p:
            continue
        cert = _defect_certificate(cls, p, EVAL_LIMIT)
        if cert:
            return cert
    return None


def _23a(group, n, classes):
    return [(c, _jk1_then_direct(c), "") for c in classes]


def _exceeds_sqrt(x: int, coef: int, radicand: int, offset: int = 0) -> bool:
    """Exact test of ``x > coef*sqrt(radicand) + offset``."""
    y = x - offset
    return y > 0 and y * y > coef * coef * radicand


def _23b_hyp(cls: ClassLabel) -> bool:
    if not _is_23_class(cls):
        return False
    n = cls.n
    t = cls.cycle_type
    return _exceeds_sqrt(p_part_support(t, 2), 3, 2 * n - 20) or \
        _exceeds_sqrt(p_part_support(t, 3), 2, n, 4)


def _23b(group, n, classes):
    out = []
    for c in classes:
        t = c.cycle_type
        primes = (2,) if _exceeds_sqrt(p_part_support(t, 2), 3, 2 * n - 20) else ()
        if _exceeds_sqrt(p_part_support(t, 3), 2, n, 4):
            primes += (3,)
        out.append((c, _jk1_then_direct(c, primes), ""))
    return out


def _pp7_hyp(cls: ClassLabel) -> bool:
    o = element_order(cls.cycle_type)
    omega = element_orders(cls.n, ALT)
    return 2 * o not in omega and 3 * o not in omega


def _pp7_18_hyp(cls: ClassLabel) -> bool:
    t = list(cls.cycle_type)
    if 8 not in t:
        return False
    t.remove(8)
    return element_order(t) % 3 == 0


def _nonreal(cls: ClassLabel) -> bool:
    return class_splits(cls.cycle_type) and not is_real_in_An(cls.cycle_type)


def _max_support_2_element(cls: ClassLabel) -> bool:
    o = element_order(cls.cycle_type)
    return o > 1 and o == 2 ** _vp(o, 2) and is_max_support(cls.cycle_type, cls.group)


def _known(**by_n):
    return {int(k[1:]): {g: frozenset(v) for g, v in groups.items()} for k, groups in by_n.items()}


CHECKS: dict[str, Check] = {c.check_id: c for c in [
    Check("nr5", 7, 14, (SYM,),
          lambda c: fixed_points(c.cycle_type) <= 1 and not ({2, 4} & set(c.cycle_type)),
          _by_character(lambda n: (n - 4, 3, 1)),
          doc="[n-4,3,1] vanishes when at most one point is fixed and no cycle has length 2 or 4"),
    Check("n44", 7, 12, (SYM,),
          lambda c: c.cycle_type[0] > 2 and (c.cycle_type[0] - 2) ** 2 > 4 * c.n,
          _by_character(near_square),
          doc="the nearly square diagram vanishes on a cycle longer than 2*sqrt(n)+2"),
    Check("k9", 4, 14, (SYM,), lambda c: True, _k9,
          doc="[n-1,1] vanishes exactly on the classes fixing one point"),
    Check("nr4a", 4, 14, (ALT,), _nonreal, _common_zero,
          doc="one character vanishes on all non-real classes of A_n"),
    Check("sd9", 3, 14, (SYM,), lambda c: not is_even_type(c.cycle_type), _sd9,
          doc="symmetric diagrams vanish on odd classes"),
    Check("ma2", 5, 12, (ALT,), lambda c: True, _prime_power_top(2),
          doc="one character vanishes on all elements of the largest 2-power order"),
    Check("ma3", 5, 12, (ALT,), lambda c: True, _prime_power_top(3),
          known=_known(n7={ALT: {"(3,1,1,1,1)"}}),
          doc="one character vanishes on all elements of the largest 3-power order, n != 7"),
    Check("tc1_S", 5, 12, (SYM, ALT), lambda c: True, _tc1,
          doc="for each prime p > 3, one character vanishes on all p-singular classes"),
    Check("cg6", 5, 13, (SYM, ALT), _max_support_2_element, _common_zero,
          known=_known(n7={ALT: {"(2,2,1,1,1)"}}, n11={ALT: {"(2,2,2,2,1,1,1)"}}),
          doc="one character vanishes on all 2-elements of maximal support, n != 7, 11"),
    Check("23a", 5, 14, (SYM, ALT),
          lambda c: _is_23_class(c) and support(c.cycle_type) > _min_supports_23(c.n),
          _23a, doc="2,3-elements moving more points than D_2 and D_3 together are vanishing"),
    Check("23b", 14, 20, (SYM, ALT), _23b_hyp, _23b,
          doc="2,3-elements with a large 2-part or 3-part are vanishing, n > 13"),
    Check("mt2", 5, 13, (SYM, ALT),
          lambda c: element_order(c.cycle_type) > 1 and is_max_support(c.cycle_type, c.group),
          _each(_exhaustive),
          # the classes named for n = 7 (6A, and 2A from the remark) and n = 11 (2B)
          known=_known(n7={ALT: {"(3,2,2)", "(2,2,1,1,1)"}, SYM: {"(3,2,2)"}},
                       n11={ALT: {"(2,2,2,2,1,1,1)"}}),
          doc="elements of maximal support are vanishing, n != 7, 11"),
    Check("pp7", 5, 13, (ALT,), _pp7_hyp, _each(_exhaustive),
          known=_known(n7={ALT: {"(3,2,2)"}}),
          doc="g is vanishing when neither 2|g| nor 3|g| is an element order, n != 7"),
    Check("pp7_18", 18, 18, (SYM,), _pp7_18_hyp, _by_character(lambda n: (12, 2, 2, 1, 1)),
          doc="[12,2,2,1,1] vanishes on 8-cycles times a 3-singular remainder"),
]}

MA1_RANGE = (1, 12)


def check_ids() -> list[str]:
    return list(CHECKS) + ["ma1"]


def _status(witnesses: list, expected: dict | None, groups: Iterable[str]) -> str:
    bad = {}
    for cls, cert, _ in witnesses:
        if cert is None:
            bad.setdefault(cls.group, set()).add(str(cls))
    if not bad:
        return PASS
    if expected is None:
        return FAIL
    for g in groups:
        if bad.get(g, set()) != set(expected.get(g, set())):
            return FAIL
    return KNOWN


def run_check(check_id: str, n: int) -> CheckReport:
    """Run one lemma of the battery at one ``n``."""
    if check_id == "ma1":
        if not MA1_RANGE[0] <= n <= MA1_RANGE[1]:
            return CheckReport(check_id, n, OUT_OF_RANGE)
        reports = [mno_check(n, p) for p in (2, 3)]
        witnesses = [w for r in reports for w in r.witnesses]
        status = PASS if all(r.status == PASS for r in reports) else FAIL
        return CheckReport(check_id, n, status, witnesses)
    if check_id not in CHECKS:
        raise KeyError(f"unknown check {check_id!r}; known: {', '.join(check_ids())}")
    chk = CHECKS[check_id]
    if not chk.n_min <= n <= chk.n_max:
        return CheckReport(check_id, n, OUT_OF_RANGE)
    witnesses = []
    for group in chk.groups:
        classes = [c for c in classes_of(group, n) if chk.hypothesis(c)]
        witnesses.extend(chk.conclusion(group, n, classes))
    return CheckReport(check_id, n, _status(witnesses, chk.known.get(n), chk.groups), witnesses)


def default_range(check_id: str) -> range:
    if check_id == "ma1":
        return range(MA1_RANGE[0], MA1_RANGE[1] + 1)
    chk = CHECKS[check_id]
    return range(chk.n_min, chk.n_max + 1)
