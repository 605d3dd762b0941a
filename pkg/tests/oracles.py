"""Slow reference implementations written with plain Python sets.

They share no code with the package so they can serve as independent checks.
"""

from itertools import combinations


def subsets(n):
    universe = range(1, n + 1)
    for r in range(n + 1):
        for combo in combinations(universe, r):
            yield frozenset(combo)


def sum_free(s):
    return all(x + y not in s for x in s for y in s)


def maximal_sum_free(s, n):
    if not sum_free(s):
        return False
    return all(not sum_free(s | {v}) for v in range(1, n + 1) if v not in s)


def all_sum_free(n):
    return [s for s in subsets(n) if sum_free(s)]


def all_maximal(n):
    return sorted(tuple(sorted(s)) for s in subsets(n) if maximal_sum_free(s, n))


def schur_count(s):
    return sum(1 for x in s for y in s if x <= y and x + y in s)


def mis_count(vertices, edges, loops=()):
    """Count maximal independent sets by filtering every vertex subset."""
    adj = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    loops = set(loops)
    total = 0
    for r in range(len(vertices) + 1):
        for combo in combinations(vertices, r):
            s = set(combo)
            if s & loops or any(adj[v] & s for v in s):
                continue
            if all(v in s or v in loops or adj[v] & s for v in vertices):
                total += 1
    return total
