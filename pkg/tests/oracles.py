"""Reference implementations used only by the tests.

None of these share code with the library paths they check.
"""

import itertools


def edges_by_hand(order, full_chords):
    """Literal transcription of the construction rules, 1-based, no helpers."""
    m = order // 2
    edges = set()
    for i in range(1, m + 1):
        v = 2 * i - 1
        prev = order if v == 1 else v - 1
        edges.add(frozenset((v, prev)))
        edges.add(frozenset((v, v + 1)))
        y = v + full_chords[i - 1]
        if y > order:
            y = y % order
        edges.add(frozenset((v, y)))
    return edges


def brute_force_girth(order, edges):
    """Shortest simple cycle by exhaustive enumeration of cycles.

    Each cycle is enumerated from its smallest vertex; cycles no shorter than the
    best one seen are cut off, which keeps the enumeration exhaustive for every
    length that could still improve the answer.
    """
    adj = {v: set() for v in range(1, order + 1)}
    for e in edges:
        u, w = tuple(e)
        adj[u].add(w)
        adj[w].add(u)
    best = None

    def dfs(start, v, depth, visited):
        nonlocal best
        for w in adj[v]:
            if w == start and depth >= 3:
                if best is None or depth < best:
                    best = depth
            elif w > start and w not in visited and (best is None or depth + 1 < best):
                visited.add(w)
                dfs(start, w, depth + 1, visited)
                visited.discard(w)

    for s in range(1, order + 1):
        dfs(s, s, 1, {s})
    return best


def all_canonical_hbgs(order):
    """Every perfect matching odd -> even that avoids cycle neighbours, as chord offsets."""
    odds = range(1, order, 2)
    evens = list(range(2, order + 1, 2))
    for perm in itertools.permutations(evens):
        ok = True
        for v, y in zip(odds, perm):
            if y == v + 1 or y == (v - 2) % order + 1:
                ok = False
                break
        if ok:
            yield tuple((y - v) % order for v, y in zip(odds, perm))
