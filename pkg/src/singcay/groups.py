"""Conjugacy classes of S_n and A_n from cycle types.

Everything here is closed-form except :func:`brute_conjugacy_oracle`, which
materialises the groups as explicit permutations of ``0..n-1`` and is used
to validate the formulas for small ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial, lcm
from typing import Sequence

from .characters import (
    ALT,
    SYM,
    ClassLabel,
    centralizer_order,
    class_splits,
    classes_of,
    is_even_type,
)
from .config import check_bound
from .partitions import Partition, partitions_of


def class_size(cycle_type: Sequence[int], group: str = SYM) -> int:
    """Size of the class (of one half, for a split A_n class)."""
    cycle_type = tuple(cycle_type)
    size = factorial(sum(cycle_type)) // centralizer_order(cycle_type)
    if group == ALT:
        if not is_even_type(cycle_type):
            raise ValueError(f"{cycle_type} is an odd cycle type")
        if class_splits(cycle_type):
            size //= 2
    return size


def element_order(cycle_type: Sequence[int]) -> int:
    return lcm(*cycle_type) if cycle_type else 1


def support(cycle_type: Sequence[int]) -> int:
    return sum(c for c in cycle_type if c > 1)


def fixed_points(cycle_type: Sequence[int]) -> int:
    return sum(1 for c in cycle_type if c == 1)


def p_part_support(cycle_type: Sequence[int], p: int) -> int:
    """Support of the p-part of the element: total length of cycles divisible by p."""
    return sum(c for c in cycle_type if c % p == 0)


def is_real_in_An(cycle_type: Sequence[int]) -> bool:
    if not is_even_type(cycle_type):
        raise ValueError(f"{tuple(cycle_type)} is not an even cycle type")
    if any(c % 2 == 0 for c in cycle_type):
        return True
    if len(set(cycle_type)) < len(cycle_type):
        return True
    return sum(1 for c in cycle_type if c % 4 == 3) % 2 == 0


def cycle_types(n: int, group: str) -> list[Partition]:
    types = list(partitions_of(n))
    if group == ALT:
        types = [t for t in types if is_even_type(t)]
    return types


@dataclass(frozen=True)
class ClassInfo:
    label: ClassLabel
    size: int
    order: int
    support: int
    real_in_group: bool


def class_info(label: ClassLabel) -> ClassInfo:
    ct = label.cycle_type
    real = True if label.group == SYM else is_real_in_An(ct)
    return ClassInfo(label, class_size(ct, label.group), element_order(ct), support(ct), real)


def element_orders(n: int, group: str) -> set[int]:
    return {element_order(t) for t in cycle_types(n, group)}


def is_23_number(m: int) -> bool:
    for q in (2, 3):
        while m % q == 0:
            m //= q
    return m == 1


def omega23(n: int, group: str) -> set[int]:
    return {m for m in element_orders(n, group) if is_23_number(m)}


def max_support_types(n: int, group: str, m: int) -> list[Partition]:
    """Cycle types of order ``m`` whose support is largest among elements of order ``m``."""
    types = [t for t in cycle_types(n, group) if element_order(t) == m]
    if not types:
        raise ValueError(f"no element of order {m} in {group}_{n}")
    best = max(support(t) for t in types)
    return [t for t in types if support(t) == best]


def is_max_support(cycle_type: Sequence[int], group: str) -> bool:
    n = sum(cycle_type)
    return tuple(cycle_type) in max_support_types(n, group, element_order(cycle_type))


def e6_candidates(n: int) -> list[Partition]:
    """Even cycle types g of order 2^a 3^b with neither 2|g| nor 3|g| an element order of A_n."""
    omega = element_orders(n, ALT)
    out = []
    for t in cycle_types(n, ALT):
        o = element_order(t)
        if is_23_number(o) and 2 * o not in omega and 3 * o not in omega:
            assert n < 5 or 2 * support(t) >= n, (n, t)
            out.append(t)
    return out


# --- explicit permutations -------------------------------------------------

def compose(p: tuple, q: tuple) -> tuple:
    """``p * q``: apply ``q`` first, then ``p``."""
    return tuple(p[x] for x in q)


def inverse(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def perm_cycle_type(p: tuple) -> Partition:
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if not seen[i]:
            k = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                k += 1
            lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def is_even_perm(p: tuple) -> bool:
    return is_even_type(perm_cycle_type(p))


def canonical_representative(cycle_type: Sequence[int]) -> tuple:
    """Cycles filled with consecutive ascending points, longest cycle first."""
    n = sum(cycle_type)
    perm = list(range(n))
    start = 0
    for c in cycle_type:
        for k in range(c):
            perm[start + k] = start + (k + 1) % c
        start += c
    return tuple(perm)


def class_label_of(perm: tuple, group: str, plus_half: set | None = None) -> ClassLabel:
    ct = perm_cycle_type(perm)
    if group == ALT and class_splits(ct):
        if plus_half is None:
            raise ValueError("need the + half to name a split class")
        return ClassLabel(ct, "+" if perm in plus_half else "-", ALT)
    return ClassLabel(ct, "", group)


@dataclass
class ConjugacyOracle:
    n: int
    sym: dict[ClassLabel, frozenset]
    alt: dict[ClassLabel, frozenset]

    def classes(self, group: str) -> dict[ClassLabel, frozenset]:
        return self.sym if group == SYM else self.alt

    def elements(self, group: str) -> list[tuple]:
        return sorted(x for cls in self.classes(group).values() for x in cls)

    def label_of(self, perm: tuple, group: str) -> ClassLabel:
        for label, members in self.classes(group).items():
            if perm in members:
                return label
        raise KeyError(perm)

    def is_real(self, label: ClassLabel) -> bool:
        members = self.classes(label.group)[label]
        rep = next(iter(members))
        return inverse(rep) in members


def brute_conjugacy_oracle(n: int, limit: int = 8) -> ConjugacyOracle:
    """Explicit conjugacy classes of S_n and A_n, found by brute force."""
    check_bound(n, limit, "brute-force oracle degree")
    elements = list(permutations(range(n)))
    by_type: dict[Partition, list] = {}
    for g in elements:
        by_type.setdefault(perm_cycle_type(g), []).append(g)
    sym = {ClassLabel(t): frozenset(v) for t, v in by_type.items()}
    evens = [g for g in elements if is_even_perm(g)]
    alt = {}
    for t, members in by_type.items():
        if not is_even_type(t):
            continue
        if not class_splits(t):
            alt[ClassLabel(t, "", ALT)] = frozenset(members)
            continue
        rep = canonical_representative(t)
        plus = frozenset(compose(compose(g, rep), inverse(g)) for g in evens)
        alt[ClassLabel(t, "+", ALT)] = plus
        alt[ClassLabel(t, "-", ALT)] = frozenset(members) - plus
    sym = {c: sym[c] for c in classes_of(SYM, n)}
    alt = {c: alt[c] for c in classes_of(ALT, n)}
    return ConjugacyOracle(n, sym, alt)
