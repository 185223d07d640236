"""Irreducible characters of S_n and A_n, computed exactly.

S_n values come from the Murnaghan-Nakayama recursion: strip the longest
remaining cycle as a rim hook in every possible way, with sign
``(-1)**leg_length``.  A_n values are derived from them: a non-symmetric
diagram restricts irreducibly, while a symmetric diagram splits into two
conjugate constituents which differ only on the split class whose cycle
type equals the diagram's principal hook lengths.

Split halves are named ``+`` and ``-``.  Which half of a class is ``+`` is
fixed by the representative that fills cycles with consecutive ascending
points, ``(1 2 .. c1)(c1+1 .. c1+c2)...``; only the unordered pair of
halves is canonical, and the ``convention`` argument flips the pairing of
character halves with class halves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, prod
from typing import Sequence

from .algebraic import AlgebraicValue
from .config import CONFIG, check_bound
from .partitions import (
    Partition,
    as_partition,
    hook_multiset,
    is_symmetric,
    partitions_of,
    principal_hook_lengths,
    rims,
    transpose,
)

SYM = "S"
ALT = "A"
SPLITS = ("", "+", "-")


def _check_group(group: str) -> str:
    if group not in (SYM, ALT):
        raise ValueError(f"group must be 'S' or 'A', got {group!r}")
    return group


@dataclass(frozen=True, order=True)
class CharacterLabel:
    lam: Partition
    split: str = ""
    group: str = SYM

    def __post_init__(self):
        object.__setattr__(self, "lam", as_partition(self.lam))
        _check_group(self.group)
        if self.split not in SPLITS:
            raise ValueError(f"bad split marker {self.split!r}")
        if self.split and (self.group != ALT or not character_splits(self.lam)):
            raise ValueError(f"only symmetric diagrams of A_n split: {self}")
        if self.group == ALT and not self.split and character_splits(self.lam):
            raise ValueError(f"symmetric diagram needs a split half in A_n: {self.lam}")

    @property
    def n(self) -> int:
        return sum(self.lam)

    def __str__(self):
        return "[" + ",".join(map(str, self.lam)) + "]" + self.split


@dataclass(frozen=True, order=True)
class ClassLabel:
    cycle_type: Partition
    split: str = ""
    group: str = SYM

    def __post_init__(self):
        object.__setattr__(self, "cycle_type", as_partition(self.cycle_type))
        _check_group(self.group)
        if self.split not in SPLITS:
            raise ValueError(f"bad split marker {self.split!r}")
        if self.group == ALT:
            if not is_even_type(self.cycle_type):
                raise ValueError(f"odd cycle type {self.cycle_type} is not in A_n")
            if bool(self.split) != class_splits(self.cycle_type):
                raise ValueError(f"split marker does not match splitting of {self.cycle_type}")
        elif self.split:
            raise ValueError("S_n classes do not split")

    @property
    def n(self) -> int:
        return sum(self.cycle_type)

    def __str__(self):
        return "(" + ",".join(map(str, self.cycle_type)) + ")" + self.split


def is_even_type(cycle_type: Sequence[int]) -> bool:
    return sum(1 for c in cycle_type if c % 2 == 0) % 2 == 0


def class_splits(cycle_type: Sequence[int]) -> bool:
    """An S_n class splits in A_n iff its cycle lengths are distinct and odd (n >= 2)."""
    return sum(cycle_type) > 1 and all(c % 2 for c in cycle_type) and len(set(cycle_type)) == len(cycle_type)


def character_splits(lam: Sequence[int]) -> bool:
    return sum(lam) > 1 and is_symmetric(lam)


def centralizer_order(cycle_type: Sequence[int]) -> int:
    """Order of the S_n-centraliser: prod over lengths c of c**m_c * m_c!."""
    counts: dict[int, int] = {}
    for c in cycle_type:
        counts[c] = counts.get(c, 0) + 1
    return prod(c ** m * factorial(m) for c, m in counts.items())


# --- Murnaghan-Nakayama ------------------------------------------------------

_MN_CACHE: dict[tuple[Partition, Partition], int] = {}
_MN_CACHE_N = [None]
MN_CACHE_LIMIT = 2_000_000


def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    hit = _MN_CACHE.get(key)
    if hit is not None:
        return hit
    m, rest = mu[0], mu[1:]
    total = 0
    for r in rims(lam, m):
        v = _mn(r.result, rest)
        total += -v if r.leg_length % 2 else v
    if len(_MN_CACHE) >= MN_CACHE_LIMIT:
        _MN_CACHE.clear()
    _MN_CACHE[key] = total
    return total


def mn_value(lam: Sequence[int], cycle_type: Sequence[int]) -> int:
    """Value of the S_n character ``lam`` on the class of ``cycle_type``."""
    lam = tuple(lam)
    mu = tuple(sorted(cycle_type, reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    n = sum(lam)
    if _MN_CACHE_N[0] != n:
        _MN_CACHE.clear()
        _MN_CACHE_N[0] = n
    return _mn(lam, mu)


def mn_value_ordered(lam: Sequence[int], cycles: Sequence[int]) -> int:
    """Murnaghan-Nakayama without memoisation, stripping ``cycles`` in the given order."""
    lam = tuple(lam)
    if sum(lam) != sum(cycles):
        raise ValueError("size mismatch")
    if not cycles:
        return 1
    total = 0
    for r in rims(lam, cycles[0]):
        v = mn_value_ordered(r.result, cycles[1:])
        total += -v if r.leg_length % 2 else v
    return total


def clear_cache() -> None:
    _MN_CACHE.clear()
    _MN_CACHE_N[0] = None


def degree(lam: Sequence[int]) -> int:
    """Hook length formula."""
    n = sum(lam)
    d, r = divmod(factorial(n), prod(hook_multiset(lam)))
    assert r == 0
    return d


# --- A_n ---------------------------------------------------------------------

def _split_sign(chi_split: str, cls_split: str, convention: int) -> int:
    same = 1 if chi_split == cls_split else -1
    return same * convention


def an_value(chi: CharacterLabel, cls: ClassLabel, convention: int = 1) -> AlgebraicValue:
    """Value of an A_n character on an A_n class."""
    if chi.group != ALT or cls.group != ALT:
        raise ValueError("an_value needs A_n labels")
    if chi.n != cls.n:
        raise ValueError(f"size mismatch: {chi} vs {cls}")
    v = mn_value(chi.lam, cls.cycle_type)
    if not chi.split:
        return AlgebraicValue(v)
    hooks = tuple(principal_hook_lengths(chi.lam))
    if cls.cycle_type != hooks:
        return AlgebraicValue(v) / 2
    eps = (-1) ** ((chi.n - len(hooks)) // 2)
    assert v == eps
    root = AlgebraicValue.sqrt(eps * prod(hooks))
    sign = _split_sign(chi.split, cls.split, convention)
    return (AlgebraicValue(eps) + sign * root) / 2


def sym_characters(n: int) -> list[CharacterLabel]:
    return [CharacterLabel(lam) for lam in partitions_of(n)]


def sym_classes(n: int) -> list[ClassLabel]:
    return [ClassLabel(mu) for mu in partitions_of(n)]


def alt_characters(n: int) -> list[CharacterLabel]:
    """One label per irreducible character of A_n.

    A non-symmetric diagram and its transpose restrict to the same
    character; the lexicographically larger one is used as the label.
    """
    out = []
    for lam in partitions_of(n):
        if character_splits(lam):
            out.append(CharacterLabel(lam, "+", ALT))
            out.append(CharacterLabel(lam, "-", ALT))
        elif lam >= transpose(lam):
            out.append(CharacterLabel(lam, "", ALT))
    return out


def alt_classes(n: int) -> list[ClassLabel]:
    out = []
    for mu in partitions_of(n):
        if not is_even_type(mu):
            continue
        if class_splits(mu):
            out.append(ClassLabel(mu, "+", ALT))
            out.append(ClassLabel(mu, "-", ALT))
        else:
            out.append(ClassLabel(mu, "", ALT))
    return out


def characters_of(group: str, n: int) -> list[CharacterLabel]:
    return sym_characters(n) if _check_group(group) == SYM else alt_characters(n)


def classes_of(group: str, n: int) -> list[ClassLabel]:
    return sym_classes(n) if _check_group(group) == SYM else alt_classes(n)


def character_degree(chi: CharacterLabel) -> int:
    d = degree(chi.lam)
    return d // 2 if chi.split else d


def class_size(cls: ClassLabel) -> int:
    size = factorial(cls.n) // centralizer_order(cls.cycle_type)
    return size // 2 if cls.split else size


def value(chi: CharacterLabel, cls: ClassLabel, convention: int = 1) -> AlgebraicValue:
    """Character value for either group, as an exact AlgebraicValue."""
    if chi.group != cls.group:
        raise ValueError("character and class belong to different groups")
    if chi.group == SYM:
        return AlgebraicValue(mn_value(chi.lam, cls.cycle_type))
    return an_value(chi, cls, convention)


@dataclass
class CharacterTable:
    group: str
    n: int
    characters: list[CharacterLabel]
    classes: list[ClassLabel]
    values: list[list[AlgebraicValue]] = field(repr=False)

    @property
    def class_sizes(self) -> list[int]:
        return [class_size(c) for c in self.classes]

    @property
    def degrees(self) -> list[int]:
        return [character_degree(x) for x in self.characters]

    def row(self, chi: CharacterLabel) -> list[AlgebraicValue]:
        return self.values[self.characters.index(chi)]

    def column(self, cls: ClassLabel) -> list[AlgebraicValue]:
        j = self.classes.index(cls)
        return [r[j] for r in self.values]


def character_table(group: str, n: int, convention: int = 1, limit: int | None = None) -> CharacterTable:
    check_bound(n, CONFIG.max_table_n if limit is None else limit, "character table degree")
    chars = characters_of(group, n)
    classes = classes_of(group, n)
    values = [[value(x, c, convention) for c in classes] for x in chars]
    return CharacterTable(group, n, chars, classes, values)


def sn_character_table(n: int, limit: int | None = None) -> tuple[list[Partition], list[Partition], list[list[int]]]:
    """Integer S_n table: (character labels, cycle types, values)."""
    check_bound(n, CONFIG.max_table_n if limit is None else limit, "character table degree")
    labels = list(partitions_of(n))
    values = [[mn_value(lam, mu) for mu in labels] for lam in labels]
    order = factorial(n)
    sizes = [order // centralizer_order(mu) for mu in labels]
    for row in values:
        assert sum(s * v * v for s, v in zip(sizes, row)) == order
    return labels, labels, values
