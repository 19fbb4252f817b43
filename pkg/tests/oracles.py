"""Brute-force reference implementations used to cross-check the package.

Everything here works on plain data (facet lists as iterables of iterables,
graphs as (n, edge list)) and is written for clarity over speed: subset
enumeration, dense Gaussian elimination over Fraction or GF(2), and
permutation search.  Nothing imports package internals, so any disagreement
with the fast paths is meaningful.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations


def downward_closure(facets):
    """All non-empty faces as a set of frozensets."""
    out = set()
    for f in facets:
        f = tuple(f)
        for k in range(1, len(f) + 1):
            out.update(map(frozenset, combinations(f, k)))
    return out


def f_vector(facets):
    faces = downward_closure(facets)
    dim = max(len(f) for f in faces) - 1
    counts = [0] * (dim + 1)
    for f in faces:
        counts[len(f) - 1] += 1
    return (1, *counts)


def all_cliques(n, edges):
    """Every clique of the graph (including singletons) as frozensets."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    cliques = [frozenset((v,)) for v in range(n)]
    frontier = [((v,), v) for v in range(n)]
    while frontier:
        nxt = []
        for clique, last in frontier:
            for w in range(last + 1, n):
                if all(w in adj[u] for u in clique):
                    bigger = clique + (w,)
                    cliques.append(frozenset(bigger))
                    nxt.append((bigger, w))
        frontier = nxt
    return set(cliques)


def is_flag(facets):
    """Whether the complex equals the clique complex of its skeleton."""
    faces = downward_closure(facets)
    verts = sorted({v for f in faces for v in f})
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for f in faces if len(f) == 2
             for u, v in [sorted(f)]]
    cliques = all_cliques(len(verts), edges)
    relabeled = {frozenset(index[v] for v in f) for f in faces}
    return relabeled == cliques


def _rank_fraction(matrix):
    rows = [[Fraction(x) for x in row] for row in matrix]
    rank = 0
    cols = len(rows[0]) if rows else 0
    row = 0
    for col in range(cols):
        piv = next((r for r in range(row, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[row], rows[piv] = rows[piv], rows[row]
        inv = 1 / rows[row][col]
        rows[row] = [x * inv for x in rows[row]]
        for r in range(len(rows)):
            if r != row and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[row])]
        row += 1
        rank += 1
    return rank


def _rank_gf2(matrix):
    rows = [[x & 1 for x in row] for row in matrix]
    rank = 0
    cols = len(rows[0]) if rows else 0
    row = 0
    for col in range(cols):
        piv = next((r for r in range(row, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[row], rows[piv] = rows[piv], rows[row]
        for r in range(len(rows)):
            if r != row and rows[r][col]:
                rows[r] = [(a + b) & 1 for a, b in zip(rows[r], rows[row])]
        row += 1
        rank += 1
    return rank


def betti_numbers(facets, rational=True):
    """Unreduced Betti numbers from dense boundary matrices."""
    faces = downward_closure(facets)
    dim = max(len(f) for f in faces) - 1
    by_dim = [sorted((f for f in faces if len(f) == k + 1),
                     key=lambda f: tuple(sorted(f)))
              for k in range(dim + 1)]
    ranks = [0]
    for k in range(1, dim + 1):
        index = {f: i for i, f in enumerate(by_dim[k - 1])}
        matrix = []
        for f in by_dim[k]:
            fs = sorted(f)
            row = [0] * len(by_dim[k - 1])
            for i in range(len(fs)):
                sub = frozenset(fs[:i] + fs[i + 1:])
                row[index[sub]] = (-1) ** i
            matrix.append(row)
        ranks.append(_rank_fraction(matrix) if rational else _rank_gf2(matrix))
    ranks.append(0)
    return tuple(len(by_dim[k]) - ranks[k] - ranks[k + 1]
                 for k in range(dim + 1))


def graphs_isomorphic(n, edges_a, edges_b):
    """Permutation search; n must stay small."""
    ea = {frozenset(e) for e in edges_a}
    eb = {frozenset(e) for e in edges_b}
    if len(ea) != len(eb):
        return False
    for perm in permutations(range(n)):
        if {frozenset((perm[u], perm[v])) for u, v in ea} == eb:
            return True
    return False
