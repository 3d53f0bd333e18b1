"""Exhaustive pruned search of the D3 chord-index space.

For fixed order ``2m``, symmetry factor ``b`` and target girth ``g`` the space is
every tuple ``(l_1, ..., l_b)`` of odd integers in ``[3, 2m - 3]``, so it has
``(m - 2) ** b`` members.  Chord classes are assigned depth first in
lexicographic order.  After each assignment the chord is placed at every period
at once and the prefix is rejected if

* two residue classes send their chords into the same even residue class
  (no perfect matching can result), or
* the new chord closes a cycle shorter than ``g`` with the edges already placed.

Both conditions persist in every completion, so a rejected prefix never hides a
qualifying tuple.  Every tuple is accounted for exactly once: it is either
*explored* (it reached full evaluation) or *pruned* (a proper prefix failed),
and for an exhausted space ``explored + pruned == space_size``.
"""

from __future__ import annotations

import enum
import itertools
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .analysis import check_symmetry_girth_bound, girth
from .d3core import MIN_ORDER, D3Spec, build_graph, is_valid_chord_tuple
from .errors import InvalidProblem

log = logging.getLogger(__name__)

PROGRESS_EVERY = 1_000_000
# Below this many candidates a process pool costs more than it saves.
PARALLEL_MIN_SPACE = 100_000


class Verdict(enum.Enum):
    FOUND = "found"
    NONEXISTENT = "nonexistent"
    INCONCLUSIVE = "inconclusive"


class Mode(enum.Enum):
    FIRST_WITNESS = "first_witness"
    COUNT_ALL = "count_all"


@dataclass(frozen=True)
class SearchProblem:
    order: int
    sym_factor: int
    target_girth: int
    budget: int | None = None
    mode: Mode = Mode.FIRST_WITNESS
    # Leaf predicate girth == g instead of girth >= g; pruning is unchanged.
    exact: bool = False

    def __post_init__(self):
        n, b, g = self.order, self.sym_factor, self.target_girth
        if not isinstance(n, int) or n < MIN_ORDER or n % 2:
            raise InvalidProblem(f"order must be an even integer >= {MIN_ORDER}, got {n!r}")
        if not isinstance(b, int) or b < 1 or (n // 2) % b:
            raise InvalidProblem(f"symmetry factor {b!r} must be positive and divide m={n // 2}")
        if not isinstance(g, int) or g < 6 or g % 2:
            raise InvalidProblem(f"target girth must be even and >= 6, got {g!r}")
        if self.budget is not None and self.budget < 0:
            raise InvalidProblem("budget must be non-negative")
        object.__setattr__(self, "mode", Mode(self.mode))

    @property
    def m(self) -> int:
        return self.order // 2

    @property
    def space_size(self) -> int:
        return (self.m - 2) ** self.sym_factor

    @property
    def a_priori_empty(self) -> bool:
        """The symmetry/girth bound or the Hamiltonian cycle itself rules out girth g."""
        return not check_symmetry_girth_bound(self.sym_factor, self.target_girth) or self.order < self.target_girth


@dataclass(frozen=True)
class SearchOutcome:
    problem: SearchProblem
    verdict: Verdict
    witness: D3Spec | None = None
    witness_girth: int | None = None
    explored: int = 0
    pruned: int = 0
    count: int = 0
    elapsed: float = field(default=0.0, compare=False)

    @property
    def space_size(self) -> int:
        return self.problem.space_size

    def summary(self) -> str:
        if self.verdict is Verdict.FOUND:
            d3 = ",".join(map(str, self.witness.chords))
            line = f"FOUND d3={d3} girth={self.witness_girth} order={self.problem.order} sf={self.problem.sym_factor}"
            if self.problem.mode is Mode.COUNT_ALL:
                line += f" count={self.count}"
            return line + f" space={self.space_size} explored={self.explored} pruned={self.pruned}"
        return f"{self.verdict.name} space={self.space_size} explored={self.explored} pruned={self.pruned}"


def chord_values(order: int) -> range:
    return range(3, order - 2, 2)


def enumerate_candidates(order: int, sf: int) -> Iterator[tuple[D3Spec, bool]]:
    """Every chord tuple in lexicographic order, paired with its matching validity."""
    if order < MIN_ORDER or order % 2 or sf < 1 or (order // 2) % sf:
        raise InvalidProblem(f"bad order/symmetry factor {order}/{sf}")
    for tup in itertools.product(chord_values(order), repeat=sf):
        yield D3Spec(order, sf, tup), is_valid_chord_tuple(order, tup)


@dataclass
class _PartResult:
    first: int
    status: str  # "found", "exhausted", "budget"
    explored: int = 0
    pruned: int = 0
    count: int = 0
    witness: tuple[int, ...] | None = None
    witness_girth: int | None = None


class _Progress:
    """Logs one line each time explored + pruned crosses a multiple of PROGRESS_EVERY."""

    def __init__(self):
        self.start = time.perf_counter()
        self.next_mark = PROGRESS_EVERY
        self.base = (0, 0)

    def update(self, explored, pruned):
        explored += self.base[0]
        pruned += self.base[1]
        if explored + pruned >= self.next_mark:
            while self.next_mark <= explored + pruned:
                self.next_mark += PROGRESS_EVERY
            log.info("explored=%d pruned=%d elapsed=%.1fs", explored, pruned, time.perf_counter() - self.start)


class _Dfs:
    """Depth-first assignment of chord classes for one value of ``l_1``."""

    def __init__(self, problem: SearchProblem, budget, rotation_pruning=False, progress=None):
        self.p = problem
        n, b = problem.order, problem.sym_factor
        self.n, self.b, self.m = n, b, n // 2
        self.g = problem.target_girth
        self.values = list(chord_values(n))
        self.k = len(self.values)
        self.subtree = [self.k ** (b - d - 1) for d in range(b)]
        self.budget = budget
        self.rotation = rotation_pruning
        self.progress = progress
        self.adj = [[(v - 1) % n, (v + 1) % n] for v in range(n)]
        self.used = [False] * (2 * b)
        self.chords = [0] * b
        self.explored = 0
        self.pruned = 0
        self.count = 0
        self.witness = None
        self.witness_girth = None
        self.stop = None

    def _place(self, cls, c):
        adj, n = self.adj, self.n
        for u in range(2 * cls, n, 2 * self.b):
            v = (u + c) % n
            adj[u].append(v)
            adj[v].append(u)

    def _unplace(self, cls, c):
        adj, n = self.adj, self.n
        for u in range(2 * cls, n, 2 * self.b):
            adj[u].pop()
            adj[(u + c) % n].pop()

    def _short_cycle(self, u, v):
        """Is there a u-v path avoiding edge uv with at most g - 2 edges?"""
        adj = self.adj
        lim = self.g - 2
        half = lim // 2
        seen = {u: 0}
        frontier = [u]
        for d in range(1, half + 1):
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in seen and not (x == u and y == v):
                        seen[y] = d
                        nxt.append(y)
            frontier = nxt
        if v in seen:
            return True
        seen_v = {v}
        frontier = [v]
        for d in range(1, lim - half + 1):
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y in seen_v or (x == v and y == u):
                        continue
                    du = seen.get(y)
                    if du is not None and du + d <= lim:
                        return True
                    seen_v.add(y)
                    nxt.append(y)
            frontier = nxt
        return False

    def _accept(self, cls, c) -> bool:
        u = 2 * cls
        return not self._short_cycle(u, (u + c) % self.n)

    def _leaf(self):
        tup = tuple(self.chords)
        if self.rotation and any(tup[i:] + tup[:i] < tup for i in range(1, self.b)):
            return False
        spec = D3Spec(self.n, self.b, tup)
        gval = girth(build_graph(spec)).girth
        if self.p.exact and gval != self.g:
            return False
        self.count += 1
        if self.witness is None:
            self.witness, self.witness_girth = tup, gval
        return self.p.mode is Mode.FIRST_WITNESS

    def _recurse(self, depth) -> bool:
        last = depth == self.b - 1
        period = 2 * self.b
        first = self.chords[0]
        for c in self.values:
            if self.rotation and depth > 0 and c < first:
                self._tally_pruned(depth)
                continue
            cls_t = (2 * depth + c + 1) % period
            if last and self.budget is not None and self.explored >= self.budget:
                self.stop = "budget"
                return True
            if self.used[cls_t]:
                if last:
                    self._tally_explored()
                else:
                    self._tally_pruned(depth)
                continue
            self._place(depth, c)
            ok = self._accept(depth, c)
            if last:
                self.explored += 1
                self.chords[depth] = c
                hit = ok and self._leaf()
                self._unplace(depth, c)
                if self.progress:
                    self.progress.update(self.explored, self.pruned)
                if hit:
                    self.stop = "found"
                    return True
                continue
            if not ok:
                self._unplace(depth, c)
                self._tally_pruned(depth)
                continue
            self.used[cls_t] = True
            self.chords[depth] = c
            done = self._recurse(depth + 1)
            self.used[cls_t] = False
            self._unplace(depth, c)
            if done:
                return True
        return False

    def _tally_pruned(self, depth):
        self.pruned += self.subtree[depth]
        if self.progress:
            self.progress.update(self.explored, self.pruned)

    def _tally_explored(self):
        self.explored += 1
        if self.progress:
            self.progress.update(self.explored, self.pruned)

    def run(self, first: int) -> _PartResult:
        # Level 0 handled here so each partition is a single value of l_1.
        cls_t = (first + 1) % (2 * self.b)
        self.chords[0] = first
        if self.b == 1:
            if self.budget is not None and self.budget < 1:
                return _PartResult(first, "budget")
            self._place(0, first)
            self.explored = 1
            hit = self._accept(0, first) and self._leaf()
            self._unplace(0, first)
        else:
            self._place(0, first)
            if not self._accept(0, first):
                self._unplace(0, first)
                return _PartResult(first, "exhausted", pruned=self.subtree[0])
            self.used[cls_t] = True
            hit = self._recurse(1)
            self.used[cls_t] = False
            self._unplace(0, first)
            if self.stop == "budget":
                return _PartResult(first, "budget", self.explored, self.pruned, self.count)
        status = "found" if hit and self.p.mode is Mode.FIRST_WITNESS else "exhausted"
        return _PartResult(first, status, self.explored, self.pruned, self.count, self.witness, self.witness_girth)


def _run_partition(problem, first, budget, rotation_pruning, progress=None) -> _PartResult:
    return _Dfs(problem, budget, rotation_pruning, progress).run(first)


def _merge(parts_iter, budget, progress=None):
    """Fold partition results in ``l_1`` order, reproducing sequential semantics."""
    explored = pruned = count = 0
    witness = wgirth = None
    for part in parts_iter:
        if part.status == "budget" or (budget is not None and explored + part.explored > budget):
            return Verdict.INCONCLUSIVE, None, None, budget, pruned, count
        explored += part.explored
        pruned += part.pruned
        count += part.count
        if progress:
            progress.update(explored, pruned)
        if witness is None and part.witness is not None:
            witness, wgirth = part.witness, part.witness_girth
        if part.status == "found":
            return Verdict.FOUND, witness, wgirth, explored, pruned, count
    if count:
        return Verdict.FOUND, witness, wgirth, explored, pruned, count
    return Verdict.NONEXISTENT, None, None, explored, pruned, count


def _budget_left(budget, used):
    return None if budget is None else budget - used


def _search_once(problem: SearchProblem, jobs: int, rotation_pruning: bool):
    values = list(chord_values(problem.order))
    budget = problem.budget
    if jobs <= 1 or len(values) == 1 or problem.space_size < PARALLEL_MIN_SPACE:
        progress = _Progress()

        def sequential():
            used = pruned = 0
            for first in values:
                # Passing the remaining budget stops exactly where a single DFS would.
                progress.base = (used, pruned)
                part = _run_partition(problem, first, _budget_left(budget, used), rotation_pruning, progress)
                used += part.explored
                pruned += part.pruned
                # A partition rejected at its first chord never reports on its own.
                progress.base = (used, pruned)
                progress.update(0, 0)
                yield part
        return _merge(sequential(), budget)

    pool = ProcessPoolExecutor(max_workers=jobs)
    try:
        futures = [pool.submit(_run_partition, problem, first, budget, rotation_pruning) for first in values]
        return _merge((f.result() for f in futures), budget, _Progress())
    finally:
        pool.shutdown(wait=True, cancel_futures=True)


def default_jobs() -> int:
    return os.cpu_count() or 1


def search(problem: SearchProblem, jobs: int = 1, rotation_pruning: bool = False) -> SearchOutcome:
    """Run the search.

    ``rotation_pruning`` skips chord tuples that are not the least of their cyclic
    rotations.  Rotating the tuple gives an isomorphic graph, and the least
    qualifying tuple is itself rotation-minimal, so the first witness is
    unchanged.  It is only used to find witnesses faster: if the pruned space
    comes up empty the raw space is searched again before NONEXISTENT is
    reported.
    """
    if jobs < 1:
        raise InvalidProblem("jobs must be >= 1")
    t0 = time.perf_counter()
    if problem.a_priori_empty:
        return SearchOutcome(problem, Verdict.NONEXISTENT, pruned=problem.space_size, elapsed=time.perf_counter() - t0)
    use_rotation = rotation_pruning and problem.mode is Mode.FIRST_WITNESS and problem.budget is None
    verdict, wit, wg, explored, pruned, count = _search_once(problem, jobs, use_rotation)
    if use_rotation and verdict is not Verdict.FOUND:
        verdict, wit, wg, explored, pruned, count = _search_once(problem, jobs, False)
    spec = D3Spec(problem.order, problem.sym_factor, wit) if wit is not None else None
    return SearchOutcome(problem, verdict, spec, wg, explored, pruned, count, time.perf_counter() - t0)


def naive_search(problem: SearchProblem) -> SearchOutcome:
    """Reference search: builds every valid candidate and measures its full girth."""
    explored = count = 0
    witness = wg = None
    for spec, valid in enumerate_candidates(problem.order, problem.sym_factor):
        if problem.budget is not None and explored >= problem.budget:
            return SearchOutcome(problem, Verdict.INCONCLUSIVE, explored=explored)
        explored += 1
        if not valid:
            continue
        gv = girth(build_graph(spec)).girth
        if gv == problem.target_girth or (gv > problem.target_girth and not problem.exact):
            count += 1
            if witness is None:
                witness, wg = spec, gv
            if problem.mode is Mode.FIRST_WITNESS:
                break
    verdict = Verdict.FOUND if witness is not None else Verdict.NONEXISTENT
    return SearchOutcome(problem, verdict, witness, wg, explored, 0, count)


@dataclass(frozen=True)
class MinOrderResult:
    girth: int
    sym_factor: int
    order: int | None
    outcomes: dict[int, SearchOutcome]

    @property
    def certain(self) -> bool:
        """Every order below the reported minimum was proven empty."""
        return all(
            o.verdict is Verdict.NONEXISTENT for n, o in self.outcomes.items() if self.order is None or n < self.order
        )


def admissible_orders(b: int, max_order: int, min_order: int = MIN_ORDER) -> list[int]:
    step = 2 * b
    start = max(step, -(-min_order // step) * step)
    return list(range(start, max_order + 1, step))


def min_order_for(g: int, b: int, max_order: int, budget: int | None = None, jobs: int = 1,
                  exact: bool = False, rotation_pruning: bool = False) -> MinOrderResult:
    if g < 6 or g % 2:
        raise InvalidProblem(f"target girth must be even and >= 6, got {g}")
    if b < 1:
        raise InvalidProblem("symmetry factor must be positive")
    outcomes = {}
    for n in admissible_orders(b, max_order):
        out = search(SearchProblem(n, b, g, budget, exact=exact), jobs=jobs, rotation_pruning=rotation_pruning)
        outcomes[n] = out
        if out.verdict is Verdict.FOUND:
            return MinOrderResult(g, b, n, outcomes)
    return MinOrderResult(g, b, None, outcomes)


def lb_for_subproblem(global_lb: int, b: int) -> int:
    """Least multiple of ``2b`` that is at least ``global_lb``."""
    if global_lb < 1 or b < 1:
        raise ValueError("inputs must be positive")
    step = 2 * b
    return -(-global_lb // step) * step
