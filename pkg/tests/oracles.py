"""Brute-force reference computations, deliberately sharing no code with the package."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations


def _perm_sign(p) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_leibniz(a) -> Fraction:
    n = len(a)
    total = Fraction(0)
    for p in permutations(range(n)):
        term = Fraction(_perm_sign(p))
        for i in range(n):
            term *= a[i][p[i]]
            if term == 0:
                break
        total += term
    return total


def rank_by_minors(rows) -> int:
    """Largest k with a nonzero k x k minor.  Zero rows/columns are dropped first."""
    rows = [list(map(Fraction, r)) for r in rows if any(r)]
    if not rows:
        return 0
    cols = [j for j in range(len(rows[0])) if any(r[j] for r in rows)]
    rows = [[r[j] for j in cols] for r in rows]
    m, n = len(rows), len(cols)
    if max(m, n) > 8:
        raise ValueError("minor search is only meant for small matrices")
    for k in range(min(m, n), 0, -1):
        for ri in combinations(range(m), k):
            for ci in combinations(range(n), k):
                if det_leibniz([[rows[i][j] for j in ci] for i in ri]) != 0:
                    return k
    return 0


def components(vertices, edges) -> int:
    """Undirected component count by union-find."""
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in vertices})


def subnetwork_oracle(reactions):
    """(rank, n - l) for a list of (reactant_vector, product_vector) pairs."""
    vecs = [tuple(b - a for a, b in zip(y, yp)) for y, yp in reactions]
    m = len(vecs[0])
    rows = [[v[i] for v in vecs] for i in range(m)]
    complexes = {c for pair in reactions for c in pair}
    return rank_by_minors(rows), len(complexes) - components(complexes, reactions)


def reactions_of(net, js):
    return [(tuple(net.reactant(j).vector(net.m)), tuple(net.product(j).vector(net.m))) for j in js]
