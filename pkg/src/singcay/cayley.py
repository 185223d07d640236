"""Cayley graphs of S_n and A_n whose connecting set is a union of classes.

Because the connecting set ``H`` is closed under conjugation, the adjacency
operator ``v -> sum_{h in H} h v`` is central in the group algebra and acts
on the isotypic component of an irreducible character ``chi`` by the scalar

    theta_chi = sum_{C in H} |C| chi(C) / chi(1),

with multiplicity ``chi(1)**2``.  The graph is singular exactly when some
``theta_chi`` is 0.  :func:`brute_force_nullity` builds the adjacency matrix
explicitly and is the independent check of that formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable

import numpy as np

from .algebraic import AlgebraicValue
from .characters import (
    ALT,
    SYM,
    CharacterLabel,
    ClassLabel,
    character_degree,
    characters_of,
    class_size,
    classes_of,
    is_even_type,
    value,
)
from .config import CONFIG, check_bound
from .groups import brute_conjugacy_oracle, compose, is_real_in_An


def inverse_class(cls: ClassLabel) -> ClassLabel:
    if not cls.split or is_real_in_An(cls.cycle_type):
        return cls
    return ClassLabel(cls.cycle_type, "-" if cls.split == "+" else "+", cls.group)


def group_order(group: str, n: int) -> int:
    order = factorial(n)
    return order // 2 if group == ALT and n >= 2 else order


@dataclass(frozen=True)
class ConnectingSetSpec:
    group: str
    n: int
    classes: tuple
    total_size: int
    generates: bool

    @property
    def order(self) -> int:
        return group_order(self.group, self.n)

    def labels(self) -> list[str]:
        return [str(c) for c in self.classes]


def _is_identity(cls: ClassLabel) -> bool:
    return all(c == 1 for c in cls.cycle_type)


def _generates_by_rule(group: str, n: int, classes: Iterable[ClassLabel]) -> bool:
    """Normal closure of a union of nontrivial classes, read off the normal subgroups."""
    types = [c.cycle_type for c in classes]
    if group == SYM:
        return any(not is_even_type(t) for t in types)
    if n == 4:
        # the only proper nontrivial normal subgroup of A_4 is the Klein group
        return any(t != (2, 2) for t in types)
    return bool(types) or n <= 2


def generated_order(group: str, n: int, classes: Iterable[ClassLabel]) -> int:
    """Order of the subgroup generated by the classes, by explicit closure."""
    oracle = brute_conjugacy_oracle(n)
    members = oracle.classes(group)
    gens = [g for c in classes for g in members[c]]
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def build_connecting(group: str, n: int, seed_classes) -> ConnectingSetSpec:
    """Close the seed classes under inversion and record whether they generate."""
    seed = list(seed_classes)
    if not seed:
        raise ValueError("connecting set needs at least one class")
    closed = set()
    for cls in seed:
        if cls.group != group or cls.n != n:
            raise ValueError(f"class {cls} does not belong to {group}_{n}")
        if _is_identity(cls):
            raise ValueError("the identity cannot lie in a connecting set")
        closed.add(cls)
        closed.add(inverse_class(cls))
    classes = tuple(c for c in classes_of(group, n) if c in closed)
    generates = _generates_by_rule(group, n, classes)
    if n <= 4:
        brute = generated_order(group, n, classes) == group_order(group, n)
        assert brute == generates, (group, n, classes)
    total = sum(class_size(c) for c in classes)
    return ConnectingSetSpec(group, n, classes, total, generates)


# --- spectrum via characters -------------------------------------------------

@dataclass(frozen=True)
class SpectrumEntry:
    eigenvalue: AlgebraicValue
    multiplicity: int

    def to_json(self) -> dict:
        out = self.eigenvalue.to_json()
        out["mult"] = self.multiplicity
        return out


def eigenvalue_for(chi: CharacterLabel, spec: ConnectingSetSpec, convention: int = 1) -> AlgebraicValue:
    if chi.group != spec.group:
        raise ValueError("character and connecting set belong to different groups")
    total = AlgebraicValue(0)
    for cls in spec.classes:
        total = total + class_size(cls) * value(chi, cls, convention)
    return total / character_degree(chi)


def _merge(pairs) -> list[SpectrumEntry]:
    acc: dict[AlgebraicValue, int] = {}
    for ev, mult in pairs:
        acc[ev] = acc.get(ev, 0) + mult
    return [SpectrumEntry(ev, m) for ev, m in sorted(acc.items(), key=lambda kv: kv[0].sort_key())]


def _eigen_pairs(spec: ConnectingSetSpec, convention: int):
    check_bound(spec.n, CONFIG.max_table_n, "character table degree")
    for chi in characters_of(spec.group, spec.n):
        yield chi, eigenvalue_for(chi, spec, convention), character_degree(chi) ** 2


def spectrum(spec: ConnectingSetSpec, convention: int = 1) -> list[SpectrumEntry]:
    entries = _merge((ev, mult) for _, ev, mult in _eigen_pairs(spec, convention))
    assert sum(e.multiplicity for e in entries) == spec.order
    return entries


def is_singular(spec: ConnectingSetSpec, convention: int = 1) -> tuple[bool, CharacterLabel | None]:
    for chi, ev, _ in _eigen_pairs(spec, convention):
        if ev.is_zero():
            return True, chi
    return False, None


def nullity(spec: ConnectingSetSpec, convention: int = 1) -> int:
    return sum(mult for _, ev, mult in _eigen_pairs(spec, convention) if ev.is_zero())


def verdict(spec: ConnectingSetSpec, convention: int = 1) -> dict:
    singular, chi = is_singular(spec, convention)
    certificate = None
    if chi is not None:
        vanishes = all(value(chi, c, convention).is_zero() for c in spec.classes)
        certificate = {"character": str(chi), "vanishes_on_every_class": vanishes}
    return {"group": spec.group, "n": spec.n, "classes": spec.labels(),
            "generates": spec.generates, "singular": singular, "certificate": certificate,
            "nullity": nullity(spec, convention),
            "spectrum": [e.to_json() for e in spectrum(spec, convention)]}


# --- brute force ----------------------------------------------------------------

def adjacency_matrix(spec: ConnectingSetSpec, limit: int | None = None) -> np.ndarray:
    """0/1 matrix with ``A[u, v] = 1`` iff ``v = h u`` for some ``h`` in ``H``."""
    check_bound(spec.order, CONFIG.max_oracle_group_order if limit is None else limit,
                "brute-force group order")
    oracle = brute_conjugacy_oracle(spec.n)
    elements = oracle.elements(spec.group)
    index = {g: i for i, g in enumerate(elements)}
    members = oracle.classes(spec.group)
    hs = [h for c in spec.classes for h in members[c]]
    a = np.zeros((len(elements), len(elements)), dtype=np.int64)
    for u in elements:
        i = index[u]
        for h in hs:
            a[i, index[compose(h, u)]] = 1
    return a


def bareiss_rank(matrix) -> int:
    """Exact rank by fraction-free elimination over Python integers."""
    m = np.array(matrix, dtype=object)
    if m.ndim != 2:
        raise ValueError("need a 2-d matrix")
    rows, cols = m.shape
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c] != 0)
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        pivot = m[r, c]
        below = m[r + 1:, c + 1:]
        # every entry of the update is a minor of the original, so // is exact
        m[r + 1:, c + 1:] = (below * pivot - np.outer(m[r + 1:, c], m[r, c + 1:])) // prev
        m[r + 1:, c] = 0
        prev = pivot
        r += 1
    return r


def modular_rank(matrix, p: int = 2_147_483_647) -> int:
    """Rank over GF(p); a lower bound for the rational rank, used only as a cross-check."""
    m = np.array(matrix, dtype=np.int64) % p
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        factors = m[r + 1:, c].copy()
        # products stay below 2**62 since both factors are < 2**31
        m[r + 1:] = (m[r + 1:] - (factors[:, None] * m[r]) % p) % p
        r += 1
    return r


def brute_force_nullity(spec: ConnectingSetSpec, limit: int | None = None, modular_check: bool = False) -> int:
    a = adjacency_matrix(spec, limit)
    rank = bareiss_rank(a)
    if modular_check:
        for p in (2_147_483_647, 2_147_483_629):
            assert modular_rank(a, p) <= rank
    return a.shape[0] - rank


# --- vertex-transitive lift ------------------------------------------------------

def transitive_lift_spectrum(base, c: int, n: int) -> list[SpectrumEntry]:
    """Spectrum of the lift with adjacency ``A (x) J_c``: ``c*lambda_i`` and ``n(c-1)`` zeros."""
    base = [v if isinstance(v, AlgebraicValue) else AlgebraicValue(v) for v in base]
    if len(base) != n:
        raise ValueError("need exactly n base eigenvalues")
    if c < 1:
        raise ValueError("c must be positive")
    pairs = [(v * c, 1) for v in base]
    if c > 1:
        pairs.append((AlgebraicValue(0), n * (c - 1)))
    return _merge(pairs)


def lift_nullity(base, c: int) -> int:
    entries = transitive_lift_spectrum(base, c, len(base))
    return sum(e.multiplicity for e in entries if e.eigenvalue.is_zero())
