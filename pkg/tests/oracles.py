"""Independent reference computations used only by the tests.

None of these share code paths with the library beyond the basic
partition generator, which is itself checked against a counting recurrence.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial


def partition_count(n: int) -> int:
    # p(n) by Euler's pentagonal recurrence
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def boxes(lam):
    return [(i, j) for i, row in enumerate(lam) for j in range(row)]


def hooks_by_boxes(lam):
    """Hook lengths counted box by box from the diagram."""
    cells = set(boxes(lam))
    out = []
    for i, j in cells:
        arm = sum(1 for jj in range(j + 1, lam[i]))
        leg = sum(1 for ii in range(i + 1, len(lam)) if (ii, j) in cells)
        out.append(arm + leg + 1)
    return sorted(out, reverse=True)


def is_core_by_hooks(lam, p):
    return all(h % p for h in hooks_by_boxes(lam))


def core_by_abacus(lam, p):
    """p-core by sliding beads up each runner of a p-abacus."""
    k = len(lam)
    # pad to a multiple of p beads so the result does not depend on the charge shift
    k += (-k) % p
    lam = list(lam) + [0] * (k - len(lam))
    betas = [lam[i] + k - 1 - i for i in range(k)]
    runners = [sorted(b for b in betas if b % p == r) for r in range(p)]
    weight = 0
    new = []
    for r, beads in enumerate(runners):
        for pos, b in enumerate(beads):
            target = r + p * pos
            weight += (b - target) // p
            new.append(target)
    new.sort(reverse=True)
    parts = [b - (k - 1 - i) for i, b in enumerate(new)]
    return tuple(x for x in parts if x > 0), weight


def frobenius_character(lam, mu):
    """chi^lam(mu) as a coefficient of Vandermonde * power sums, with dict polynomials."""
    k = len(lam)
    # polynomial: dict exponent tuple -> coefficient
    poly = {}
    for perm in permutations(range(k)):
        sign = 1
        for a in range(k):
            for b in range(a + 1, k):
                if perm[a] > perm[b]:
                    sign = -sign
        exps = tuple(k - 1 - perm[i] for i in range(k))
        poly[exps] = poly.get(exps, 0) + sign
    target = tuple(lam[i] + k - 1 - i for i in range(k))
    for m in mu:
        nxt = {}
        for e, c in poly.items():
            for v in range(k):
                e2 = list(e)
                e2[v] += m
                # drop monomials that can no longer reach the target exponent
                if e2[v] > target[0]:
                    continue
                e2 = tuple(e2)
                nxt[e2] = nxt.get(e2, 0) + c
        poly = {e: c for e, c in nxt.items() if c}
    return poly.get(target, 0)


def centralizer(mu):
    counts = {}
    for c in mu:
        counts[c] = counts.get(c, 0) + 1
    out = 1
    for c, m in counts.items():
        out *= c ** m * factorial(m)
    return out


def real_eigen_nullity_float(adj):
    """Nullity of a small symmetric matrix from floating eigenvalues (sanity only)."""
    import numpy as np
    w = np.linalg.eigvalsh(np.array(adj, dtype=float))
    return int(sum(abs(x) < 1e-8 for x in w))


def fraction_rank(rows):
    """Rank by Gaussian elimination over Fraction; slow but obviously correct."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def cycle_graph(k):
    return [[1 if (i - j) % k in (1, k - 1) else 0 for j in range(k)] for i in range(k)]


def complete_graph(k):
    return [[0 if i == j else 1 for j in range(k)] for i in range(k)]


def petersen_graph():
    from itertools import combinations
    verts = list(combinations(range(5), 2))
    return [[1 if not set(a) & set(b) else 0 for b in verts] for a in verts]
