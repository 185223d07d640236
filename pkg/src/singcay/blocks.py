"""p-blocks of S_n described by their cores and weights.

A block of S_n is determined by a p-core ``C`` with ``n - |C| = p*b``; its
defect group is a Sylow p-subgroup of ``S_{pb}``.  Defect groups are never
built as groups: a block only records the size ``p*b`` of the support of
its defect group and the defect exponent ``v_p((p*b)!)``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, isqrt

from .characters import ALT, SYM, degree
from .partitions import (
    Partition,
    enumerate_p_cores,
    is_p_core,
    is_symmetric,
    p_core_and_weight,
    p_core_sizes,
    partitions_of,
    transpose,
)

TABLE1_NS = (14, 16, 17, 18, 19, 20, 22, 23, 24, 25, 26, 27, 29, 30, 31, 32, 33)
TABLE2_NS = (7, 11, 13, 15, 18, 19, 23, 27, 28, 29, 31, 35, 38, 39, 43, 45, 47, 48)
TABLE1_HEADER = ("n", "t", "n-t")
TABLE2_HEADER = ("n", "n-|C|", "|C|")


def legendre(m: int, p: int) -> int:
    """Exponent of ``p`` in ``m!``."""
    e = 0
    while m:
        m //= p
        e += m
    return e


def valuation(m: int, p: int) -> int:
    if m == 0:
        raise ValueError("valuation of 0")
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


@dataclass(frozen=True)
class BlockDescriptor:
    p: int
    core: Partition
    weight: int

    @property
    def defect_support(self) -> int:
        return self.p * self.weight

    @property
    def defect(self) -> int:
        return legendre(self.defect_support, self.p)

    @property
    def n(self) -> int:
        return sum(self.core) + self.defect_support

    def to_json(self) -> dict:
        return {"p": self.p, "core": list(self.core), "weight": self.weight,
                "defect_support": self.defect_support, "defect": self.defect}


def block_of(lam, p: int) -> BlockDescriptor:
    core, weight = p_core_and_weight(lam, p)
    return BlockDescriptor(p, core, weight)


@lru_cache(maxsize=None)
def _small_prime_core_sizes(p: int, upto: int) -> frozenset:
    return frozenset(p_core_sizes(upto, p))


@lru_cache(maxsize=None)
def has_p_core(k: int, p: int) -> bool:
    """Whether some partition of ``k`` is a ``p``-core."""
    if k < p:
        return True
    if p <= 3:
        upto = max(512, 1 << (k - 1).bit_length())
        return k in _small_prime_core_sizes(p, upto)
    return any(is_p_core(lam, p) for lam in partitions_of(k))


def defect_supports(n: int, p: int) -> list[int]:
    """Support sizes ``p*b`` of defect groups of p-blocks of S_n."""
    return [p * b for b in range(n // p + 1) if has_p_core(n - p * b, p)]


def min_defect_support(n: int, p: int) -> int:
    return defect_supports(n, p)[0]


def min_defect(n: int, p: int) -> int:
    return legendre(min_defect_support(n, p), p)


def blocks_of_sn(n: int, p: int) -> list[BlockDescriptor]:
    """Every p-block of S_n, one per core."""
    out = []
    for b in range(n // p + 1):
        for core in enumerate_p_cores(n - p * b, p):
            out.append(BlockDescriptor(p, core, b))
    return out


def minimal_block(n: int, p: int) -> BlockDescriptor:
    """A block of smallest defect, preferring a non-symmetric core."""
    support = min_defect_support(n, p)
    cores = _cores_of_size(n - support, p)
    core = next((c for c in cores if not is_symmetric(c)), cores[0])
    return BlockDescriptor(p, core, support // p)


def _cores_of_size(k: int, p: int) -> list[Partition]:
    if p <= 3 or k <= 70:
        return enumerate_p_cores(k, p, limit=max(k, 1))
    found = next(lam for lam in partitions_of(k) if is_p_core(lam, p))
    return [found]


def diagram_with_core(core, b: int, p: int) -> Partition:
    """A diagram with the given ``p``-core and weight ``b``.

    The first row is lengthened by ``b*p``.  When that would give a
    symmetric diagram, the ``b*p`` boxes go to the first column instead,
    so that for ``b > 0`` the result is never symmetric.
    """
    core = tuple(core)
    if not is_p_core(core, p):
        raise ValueError(f"{core} is not a {p}-core")
    if b < 0:
        raise ValueError("weight must be nonnegative")
    if b == 0:
        return core
    if not core:
        lam = (b * p,)
    else:
        lam = (core[0] + b * p,) + core[1:]
    if is_symmetric(lam):
        lam = transpose(diagram_with_core(transpose(core), b, p))
    assert p_core_and_weight(lam, p) == (core, b)
    return lam


# --- defect zero -------------------------------------------------------------

def _is_triangular(x: int) -> bool:
    if x < 0:
        return False
    k = (isqrt(8 * x + 1) - 1) // 2
    return k * (k + 1) // 2 == x


def has_defect0(n: int, p: int, group: str = SYM) -> bool:
    """Whether the group has a ``p``-block of defect zero."""
    if group == SYM:
        return has_p_core(n, p)
    if group != ALT:
        raise ValueError(f"unknown group {group!r}")
    if p == 2:
        # n = k(k-1)/2 or k(k-1)/2 + 2 with k > 0
        return _is_triangular(n) or _is_triangular(n - 2)
    return has_p_core(n, p)


def has_defect0_by_degrees(n: int, p: int, group: str = SYM) -> bool:
    """Brute force: is some irreducible degree divisible by the full p-part of |G|."""
    full = valuation(factorial(n), p) if n >= p else 0
    for lam in partitions_of(n):
        v = valuation(degree(lam), p)
        if group == SYM or is_symmetric(lam):
            # a split pair has degree f/2 against |A_n|_2 = |S_n|_2 / 2
            if v >= full:
                return True
        elif v >= full - (p == 2):
            return True
    return False


def _factor(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    q = 2
    while q * q <= m:
        while m % q == 0:
            out[q] = out.get(q, 0) + 1
            m //= q
        q += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def go1_3_criterion(n: int) -> bool:
    """Predicts that there is NO 3-block of defect zero.

    Write ``3n + 1 = m^2 r`` with ``r`` squarefree; the prediction is true
    iff ``r`` has a prime factor congruent to 2 mod 3.
    """
    squarefree = [q for q, e in _factor(3 * n + 1).items() if e % 2]
    return any(q % 3 == 2 for q in squarefree)


# --- tables ------------------------------------------------------------------

def table1() -> list[tuple[int, int, int]]:
    """Rows ``(n, t, n - t)``: ``t`` the largest triangular number with ``n - t`` even."""
    rows = []
    for n in TABLE1_NS:
        d = min_defect_support(n, 2)
        rows.append((n, n - d, d))
    return rows


def table2() -> list[tuple[int, int, int]]:
    """Rows ``(n, n - |C|, |C|)`` with ``C`` a largest 3-core, ``|C| = n mod 3``.

    The last row is ``n = 51``.
    """
    rows = []
    for n in TABLE2_NS + (51,):
        d = min_defect_support(n, 3)
        rows.append((n, d, n - d))
    return rows


def table_csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()
