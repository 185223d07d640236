"""Partitions and Young diagrams.

A partition is stored as a tuple of weakly decreasing positive integers.
The same tuple serves as a Young diagram (labelling a character) or as a
cycle type (labelling a conjugacy class); fixed points of a cycle type are
kept as explicit parts equal to 1.

Rim hooks are handled through beta-numbers (first-column hook lengths):
removing an ``m``-rim hook is the same as moving one beta-number ``b`` to a
free position ``b - m``, and the leg length is the number of beta-numbers
jumped over.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Iterator, Sequence

from .config import CONFIG, check_bound

Partition = tuple


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a tuple."""
    lam = tuple(int(x) for x in parts)
    for i, x in enumerate(lam):
        if x < 1:
            raise ValueError(f"partition parts must be positive: {lam}")
        if i and lam[i - 1] < x:
            raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


def transpose(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def is_symmetric(lam: Sequence[int]) -> bool:
    return tuple(lam) == transpose(lam)


def hook_length(lam: Sequence[int], i: int, j: int, conj: Sequence[int] | None = None) -> int:
    if conj is None:
        conj = transpose(lam)
    return (lam[i] - j - 1) + (conj[j] - i - 1) + 1


def hook_multiset(lam: Sequence[int]) -> list[int]:
    """Hook lengths of all boxes, largest first."""
    conj = transpose(lam)
    hooks = [hook_length(lam, i, j, conj) for i in range(len(lam)) for j in range(lam[i])]
    hooks.sort(reverse=True)
    return hooks


def principal_hook_lengths(lam: Sequence[int]) -> list[int]:
    """Hook lengths along the main diagonal, top-left first."""
    conj = transpose(lam)
    out = []
    i = 0
    while i < len(lam) and lam[i] > i:
        out.append(hook_length(lam, i, i, conj))
        i += 1
    return out


def beta_numbers(lam: Sequence[int]) -> list[int]:
    k = len(lam)
    return [lam[i] + k - 1 - i for i in range(k)]


def from_beta_numbers(betas: Iterable[int]) -> Partition:
    b = sorted(betas, reverse=True)
    k = len(b)
    return tuple(x for x in (b[i] - (k - 1 - i) for i in range(k)) if x > 0)


@dataclass(frozen=True)
class RimRemoval:
    result: Partition
    leg_length: int


def rims(lam: Sequence[int], m: int) -> list[RimRemoval]:
    """All ways to strip an ``m``-rim hook from ``lam``.

    One entry per hook of length ``m``, ordered by the row in which the
    hook's hand lies (top row first).
    """
    if m < 1:
        raise ValueError("rim length must be positive")
    betas = beta_numbers(lam)
    occupied = set(betas)
    out = []
    for b in betas:
        target = b - m
        if target < 0 or target in occupied:
            continue
        leg = sum(1 for x in betas if target < x < b)
        new = [x for x in betas if x != b]
        new.append(target)
        out.append(RimRemoval(from_beta_numbers(new), leg))
    return out


def _strip_all(lam: Partition, p: int, last: bool) -> tuple[Partition, int]:
    weight = 0
    while True:
        options = rims(lam, p)
        if not options:
            return lam, weight
        lam = options[-1 if last else 0].result
        weight += 1


def p_core_and_weight(lam: Sequence[int], p: int) -> tuple[Partition, int]:
    """Strip ``p``-rims until none is left; return the core and the count."""
    lam = tuple(lam)
    core, weight = _strip_all(lam, p, last=False)
    if __debug__:
        other = _strip_all(lam, p, last=True)
        assert other == (core, weight), (lam, p, other, core, weight)
    return core, weight


def is_p_core(lam: Sequence[int], p: int) -> bool:
    return not rims(lam, p)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        return
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def triangle(k: int) -> Partition:
    return tuple(range(k, 0, -1))


def symmetric_partition(n: int) -> Partition:
    """Some self-conjugate partition of ``n`` (exists for every n except 2)."""
    if n == 0:
        return ()
    if n % 2:
        k = (n - 1) // 2
        return (k + 1,) + (1,) * k
    if n == 2:
        raise ValueError("no symmetric partition of 2")
    k = n // 2
    return (k, 2) + (1,) * (k - 2)


def near_square(n: int) -> Partition:
    """A nearly square diagram of size ``n`` whose hooks are all below ``2m``.

    ``m`` is the least integer with ``m*m > n``; the diagram has
    ``n // m`` rows of length ``m`` and a last row ``n % m``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    m = isqrt(n) + 1
    lam = (m,) * (n // m) + ((n % m,) if n % m else ())
    assert max(hook_multiset(lam)) <= 2 * m - 1
    return lam


def three_core_family(r: int, s: int, variant: str = "plain") -> Partition:
    """The 3-cores ``C_rs`` (``plain``) and ``C-_rs`` (``minus``)."""
    if r < 0 or s < 0:
        raise ValueError("r and s must be nonnegative")
    tail = tuple(x for k in range(r, 0, -1) for x in (k, k))
    if variant == "plain":
        if r == 0 and s == 0:
            raise ValueError("plain family needs r + s > 0")
        head = tuple(r + 2 * i for i in range(s, 0, -1))
    elif variant == "minus":
        head = tuple(r + 1 + 2 * i for i in range(s, -1, -1))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return head + tail


def three_core_family_size(r: int, s: int, variant: str = "plain") -> int:
    if variant == "plain":
        return r * s + r * (r + 1) + s * (s + 1)
    return (r + 1) * (s + 1) + r * (r + 1) + s * (s + 1)


# --- p-cores through the abacus -------------------------------------------

def _core_from_charges(charges: Sequence[int], p: int) -> Partition:
    base = max(0, -min(charges))
    betas = [i + p * j for i, c in enumerate(charges) for j in range(base + c)]
    return from_beta_numbers(betas)


def _charge_vectors(max_size: int, p: int) -> list[tuple[int, ...]]:
    """Runner-charge vectors of all ``p``-cores of size at most ``max_size``.

    A p-core corresponds to charges ``c_0..c_{p-1}`` summing to zero, with
    size ``(p/2) sum c_i^2 + sum i c_i``.  Writing the size as
    ``sum_i g_i(c_i)`` with ``g_i(t) = (p/2) t^2 + (i - (p-1)/2) t`` gives a
    separable lower bound used to prune the search.
    """
    def g2(i: int, t: int) -> int:  # twice g_i(t), kept integral
        return p * t * t + (2 * i - (p - 1)) * t

    bound2 = 2 * max_size
    span = isqrt(bound2 // p + p * p) + p
    mins = [min(g2(i, t) for t in range(-span, span + 1)) for i in range(p)]
    rest_min = [sum(mins[i:]) for i in range(p + 1)]
    found = []

    def search(i: int, charges: tuple[int, ...], acc: int, total: int) -> None:
        if i == p - 1:
            t = -total
            if acc + g2(i, t) <= bound2:
                found.append(charges + (t,))
            return
        for t in range(-span, span + 1):
            v = acc + g2(i, t)
            if v + rest_min[i + 1] <= bound2:
                search(i + 1, charges + (t,), v, total + t)

    search(0, (), 0, 0)
    return found


def charge_size(charges: Sequence[int], p: int) -> int:
    return (p * sum(c * c for c in charges) + 2 * sum(i * c for i, c in enumerate(charges))) // 2


def p_cores_up_to(max_size: int, p: int) -> list[Partition]:
    """Every ``p``-core of size at most ``max_size`` (unordered)."""
    return [_core_from_charges(c, p) for c in _charge_vectors(max_size, p)]


def enumerate_p_cores(n: int, p: int, limit: int | None = None) -> list[Partition]:
    """All ``p``-cores of size exactly ``n``, descending lexicographic."""
    check_bound(n, CONFIG.max_core_enum_n if limit is None else limit, "core enumeration size")
    return sorted((c for c in p_cores_up_to(n, p) if sum(c) == n), reverse=True)


def p_core_sizes(max_size: int, p: int) -> set[int]:
    """Sizes ``<= max_size`` at which some ``p``-core exists."""
    return {charge_size(c, p) for c in _charge_vectors(max_size, p)}
