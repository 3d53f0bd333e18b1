"""D3 chord index tuples and the cubic Hamiltonian bipartite graphs they define.

Vertices are labelled 1..2m.  The Hamiltonian cycle is 1 -> 2 -> ... -> 2m -> 1 and
every odd vertex ``2i - 1`` carries one chord to ``2i - 1 + l_i`` (mod 2m).  A spec
with symmetry factor ``b`` lists only ``l_1 .. l_b``; the full list of ``m`` chord
indices repeats them with period ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidChordSet, InvalidSpec, NotCanonicalHBG

MIN_ORDER = 8


@dataclass(frozen=True)
class D3Spec:
    order: int
    sym_factor: int
    chords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "chords", tuple(int(c) for c in self.chords))
        order, b = self.order, self.sym_factor
        if not isinstance(order, int) or order < MIN_ORDER or order % 2:
            raise InvalidSpec(f"order must be an even integer >= {MIN_ORDER}, got {order!r}")
        if not isinstance(b, int) or b < 1:
            raise InvalidSpec(f"symmetry factor must be a positive integer, got {b!r}")
        m = order // 2
        if m % b:
            raise InvalidSpec(f"symmetry factor {b} does not divide m={m}")
        if len(self.chords) != b:
            raise InvalidSpec(f"expected {b} chord indices, got {len(self.chords)}")
        for idx, c in enumerate(self.chords):
            if c % 2 == 0:
                raise InvalidSpec(f"chord index l{idx + 1}={c} is even; chord indices must be odd", idx)
            if not 3 <= c <= order - 3:
                raise InvalidSpec(f"chord index l{idx + 1}={c} outside [3, {order - 3}]", idx)

    @property
    def m(self) -> int:
        return self.order // 2

    def __str__(self):
        return f"order={self.order} sf={self.sym_factor} d3={','.join(map(str, self.chords))}"


@dataclass(frozen=True)
class ChordExpansion:
    """Forward chord offsets for all ``m`` odd vertices, in vertex order."""

    full_chords: tuple[int, ...]

    def __len__(self):
        return len(self.full_chords)

    def __iter__(self):
        return iter(self.full_chords)

    def __getitem__(self, i):
        return self.full_chords[i]


@dataclass(frozen=True, eq=True)
class LabeledCubicGraph:
    """Simple graph on vertices ``1..order`` stored as sorted neighbour tuples.

    Construction only enforces simplicity (labels in range, symmetric adjacency,
    no loops or repeated neighbours).  Cubicity, the canonical Hamiltonian cycle
    and the odd/even bipartition are checked by :meth:`is_cubic` and
    :func:`hbgcat.analysis.verify_hamiltonian_bipartite`, so that defective
    graphs can still be represented and diagnosed.
    """

    order: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        adj = tuple(tuple(sorted(nb)) for nb in self.adjacency)
        object.__setattr__(self, "adjacency", adj)
        if len(adj) != self.order:
            raise ValueError(f"adjacency has {len(adj)} rows for order {self.order}")
        for v, nb in enumerate(adj, start=1):
            if len(set(nb)) != len(nb):
                raise ValueError(f"vertex {v} has a repeated neighbour")
            for w in nb:
                if not 1 <= w <= self.order:
                    raise ValueError(f"vertex {v} has out-of-range neighbour {w}")
                if w == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if v not in adj[w - 1]:
                    raise ValueError(f"edge {v}-{w} is not symmetric")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "LabeledCubicGraph":
        nbrs: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if not (1 <= u <= order and 1 <= v <= order):
                raise ValueError(f"edge {u}-{v} out of range for order {order}")
            if v in nbrs[u - 1]:
                raise ValueError(f"parallel edge {u}-{v}")
            nbrs[u - 1].add(v)
            nbrs[v - 1].add(u)
        return cls(order, tuple(tuple(s) for s in nbrs))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v - 1]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u - 1]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, w) for u in range(1, self.order + 1) for w in self.adjacency[u - 1] if u < w)

    def is_cubic(self) -> bool:
        return all(len(nb) == 3 for nb in self.adjacency)

    def relabel(self, mapping) -> "LabeledCubicGraph":
        """Image of the graph under a vertex bijection given as a callable or mapping."""
        f = mapping if callable(mapping) else mapping.__getitem__
        return LabeledCubicGraph.from_edges(self.order, ((f(u), f(v)) for u, v in self.edges))

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(1, self.order + 1))
        g.add_edges_from(self.edges)
        return g


def expand_chords(spec: D3Spec) -> ChordExpansion:
    b = spec.sym_factor
    return ChordExpansion(tuple(spec.chords[i % b] for i in range(spec.m)))


def chord_targets(order: int, full_chords: Sequence[int]) -> list[int]:
    """``y_i`` for each odd vertex ``2i - 1``, reduced into ``1..order``."""
    return [(2 * i + c) % order + 1 for i, c in enumerate(full_chords)]


def build_graph(spec: D3Spec) -> LabeledCubicGraph:
    n = spec.order
    ys = chord_targets(n, expand_chords(spec).full_chords)
    if sorted(ys) != list(range(2, n + 1, 2)):
        seen: dict[int, int] = {}
        for i, y in enumerate(ys):
            if y in seen:
                raise InvalidChordSet(
                    f"{spec}: vertices {2 * seen[y] + 1} and {2 * i + 1} both send a chord to vertex {y}"
                )
            seen[y] = i
        raise InvalidChordSet(f"{spec}: chord targets are not the even vertices")
    adj = [[(v - 2) % n + 1, v % n + 1] for v in range(1, n + 1)]
    for i, y in enumerate(ys):
        adj[2 * i].append(y)
        adj[y - 1].append(2 * i + 1)
    return LabeledCubicGraph(n, tuple(tuple(nb) for nb in adj))


def is_valid_chord_tuple(order: int, chords: Sequence[int]) -> bool:
    """True iff the period-``b`` chord tuple yields a perfect matching.

    Odd vertices of residue class ``k`` (mod b) send chords into a single even
    residue class mod ``2b``, so checking one representative per class is enough.
    """
    b = len(chords)
    period = 2 * b
    hit = {(2 * k + c + 1) % period for k, c in enumerate(chords)}
    return len(hit) == b


def non_cycle_neighbors(graph: LabeledCubicGraph, v: int) -> list[int]:
    n = graph.order
    prev, nxt = (v - 2) % n + 1, v % n + 1
    return [w for w in graph.neighbors(v) if w != prev and w != nxt]


def extract_d3(graph: LabeledCubicGraph) -> ChordExpansion:
    n = graph.order
    if n % 2:
        raise NotCanonicalHBG(f"order {n} is odd")
    offsets = []
    for v in range(1, n + 1):
        extra = non_cycle_neighbors(graph, v)
        if len(extra) != 1 or len(graph.neighbors(v)) != 3:
            raise NotCanonicalHBG(f"vertex {v} does not have exactly one non-cycle neighbour")
        if v % 2:
            offsets.append((extra[0] - v) % n)
    return ChordExpansion(tuple(offsets))


def minimal_symmetry_factor(expansion: ChordExpansion | Sequence[int], m: int) -> int:
    seq = tuple(expansion)
    if len(seq) != m:
        raise ValueError(f"expansion has {len(seq)} entries, expected {m}")
    for b in range(1, m + 1):
        if m % b == 0 and all(seq[i] == seq[i % b] for i in range(m)):
            return b
    return m  # unreachable; b = m always matches


def spec_from_graph(graph: LabeledCubicGraph) -> D3Spec:
    """Most compact D3 spec (minimal symmetry factor) of a canonical HBG."""
    exp = extract_d3(graph)
    m = graph.order // 2
    b = minimal_symmetry_factor(exp, m)
    spec = D3Spec(graph.order, b, exp.full_chords[:b])
    if build_graph(spec) != graph:
        raise NotCanonicalHBG("graph is not a canonical Hamiltonian bipartite graph")
    return spec
