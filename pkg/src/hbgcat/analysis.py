"""Structural measurements: girth, HBG verification, the symmetry/girth bound and
a small isomorphism test."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

from .d3core import LabeledCubicGraph
from .errors import OrderMismatch

MAX_ISO_ORDER = 512


@dataclass(frozen=True)
class GirthReport:
    girth: int
    witness_cycle: tuple[int, ...]


def rotation_period(graph: LabeledCubicGraph) -> int:
    """Smallest ``p`` dividing the order such that ``v -> v + p`` is an automorphism."""
    n = graph.order
    sig = [tuple(sorted((w - v) % n for w in graph.neighbors(v))) for v in range(1, n + 1)]
    for p in range(1, n + 1):
        if n % p == 0 and all(sig[i] == sig[i - p] for i in range(p, n)):
            return p
    return n


def _cycle_value(graph: LabeledCubicGraph, root: int, bound: float) -> float:
    """Shortest closed-walk length detected by a BFS from ``root``, searching only below ``bound``.

    The minimum over all roots is the girth; the value at a root equals the
    girth exactly when the root lies on a shortest cycle.
    """
    adj = graph.adjacency
    dist = {root: 0}
    parent = {root: 0}
    queue = deque([root])
    best = bound
    while queue:
        u = queue.popleft()
        du = dist[u]
        if 2 * du >= best:
            break
        pu = parent[u]
        for w in adj[u - 1]:
            if w == pu:
                continue
            dw = dist.get(w)
            if dw is None:
                dist[w] = du + 1
                parent[w] = u
                queue.append(w)
            elif du + dw + 1 < best:
                best = du + dw + 1
    return best


def _distances(graph: LabeledCubicGraph, root: int, limit: int) -> dict[int, int]:
    dist = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        if dist[u] >= limit:
            continue
        for w in graph.adjacency[u - 1]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _smallest_cycle_through(graph: LabeledCubicGraph, root: int, length: int) -> tuple[int, ...]:
    # Lexicographic DFS: the first closed path found is the smallest sequence.
    dist = _distances(graph, root, length)
    path = [root]
    on_path = {root}

    def extend(v):
        k = len(path)
        for w in graph.adjacency[v - 1]:
            if w == root and k == length and k >= 3:
                return True
            if w in on_path or dist.get(w, length + 1) > length - k:
                continue
            path.append(w)
            on_path.add(w)
            if extend(w):
                return True
            path.pop()
            on_path.discard(w)
        return False

    if not extend(root):
        raise RuntimeError(f"no cycle of length {length} through vertex {root}")
    return tuple(path)


def girth(graph: LabeledCubicGraph) -> GirthReport:
    # Rotations by the period are automorphisms, so roots 1..p cover every cycle.
    p = rotation_period(graph)
    best = float("inf")
    best_root = None
    for r in range(1, p + 1):
        val = _cycle_value(graph, r, best)
        if val < best:
            best, best_root = val, r
    if best_root is None:
        raise ValueError("graph is acyclic")
    g = int(best)
    return GirthReport(g, _smallest_cycle_through(graph, best_root, g))


def girth_at_least(graph: LabeledCubicGraph, g: int) -> bool:
    """Depth-limited check that no cycle shorter than ``g`` exists."""
    if g <= 3:
        return True
    p = rotation_period(graph)
    return all(_cycle_value(graph, r, g) >= g for r in range(1, p + 1))


def verify_hamiltonian_bipartite(graph: LabeledCubicGraph) -> bool:
    n = graph.order
    if n % 2 or n < 4 or not graph.is_cubic():
        return False
    if any(not graph.has_edge(v, v % n + 1) for v in range(1, n + 1)):
        return False
    return all((u + w) % 2 == 1 for u, w in graph.edges)


def check_symmetry_girth_bound(b: int, g: int) -> bool:
    """True iff ``b >= g/4 - 1/2``, i.e. ``4b + 2 >= g``."""
    return 4 * b + 2 >= g


# isomorphism


def _distance_profile(graph: LabeledCubicGraph, v: int) -> tuple[int, ...]:
    counts = Counter(_distances(graph, v, graph.order).values())
    return tuple(counts[d] for d in range(max(counts) + 1))


def _refine(graphs, colors):
    """Joint colour refinement of several graphs; returns None when histograms diverge."""
    while True:
        sigs = [
            [(col[v], tuple(sorted(col[w - 1] for w in g.adjacency[v]))) for v in range(g.order)]
            for g, col in zip(graphs, colors)
        ]
        palette = {s: i for i, s in enumerate(sorted(set().union(*map(set, sigs))))}
        new = [[palette[s] for s in sg] for sg in sigs]
        hists = [Counter(c) for c in new]
        if any(h != hists[0] for h in hists[1:]):
            return None
        if len(hists[0]) == len(Counter(colors[0])):
            return new
        colors = new


def _match(g1, g2, c1, c2):
    refined = _refine((g1, g2), (c1, c2))
    if refined is None:
        return None
    c1, c2 = refined
    sizes = Counter(c1)
    open_cells = [(s, c) for c, s in sizes.items() if s > 1]
    if not open_cells:
        pos = {c: i for i, c in enumerate(c2)}
        mapping = [pos[c] + 1 for c in c1]
        for u, w in g1.edges:
            if not g2.has_edge(mapping[u - 1], mapping[w - 1]):
                return None
        return mapping
    target = min(open_cells)[1]
    v = c1.index(target)
    fresh = max(c1) + 1
    for w in (i for i, c in enumerate(c2) if c == target):
        c1b, c2b = list(c1), list(c2)
        c1b[v] = fresh
        c2b[w] = fresh
        found = _match(g1, g2, c1b, c2b)
        if found is not None:
            return found
    return None


def find_isomorphism(g1: LabeledCubicGraph, g2: LabeledCubicGraph) -> dict[int, int] | None:
    """Adjacency-preserving bijection ``g1 -> g2`` found by individualisation/refinement."""
    if g1.order != g2.order:
        raise OrderMismatch(f"orders differ: {g1.order} vs {g2.order}")
    if g1.order > MAX_ISO_ORDER:
        raise ValueError(f"isomorphism test limited to order <= {MAX_ISO_ORDER}")
    if len(g1.edges) != len(g2.edges):
        return None
    init = []
    for g in (g1, g2):
        init.append([(len(g.neighbors(v)), _distance_profile(g, v)) for v in range(1, g.order + 1)])
    palette = {s: i for i, s in enumerate(sorted(set(init[0]) | set(init[1])))}
    c1 = [palette[s] for s in init[0]]
    c2 = [palette[s] for s in init[1]]
    mapping = _match(g1, g2, c1, c2)
    if mapping is None:
        return None
    return {v: mapping[v - 1] for v in range(1, g1.order + 1)}


def are_isomorphic_small(g1: LabeledCubicGraph, g2: LabeledCubicGraph) -> bool:
    return find_isomorphism(g1, g2) is not None
