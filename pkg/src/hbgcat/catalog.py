"""Persistent catalog of search results and the tables derived from it.

The on-disk form is a UTF-8 TSV file with a header line, one entry per line,
sorted by (g, order, sf)::

    g  order  sf  status  d3  girth_actual  explored  space  version

``d3`` is the comma-joined witness or ``-``; ``girth_actual`` is ``-`` when there
is no witness.  Found entries are keyed by the exact girth of their witness.
"""

from __future__ import annotations

import enum
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from . import __version__
from .analysis import check_symmetry_girth_bound, girth
from .d3core import D3Spec, build_graph
from .errors import CatalogError, ConflictError, HbgError, IncompleteData
from .search import SearchOutcome, SearchProblem, admissible_orders, search

HEADER = ("g", "order", "sf", "status", "d3", "girth_actual", "explored", "space", "version")
ENGINE_TAG = f"hbgcat-{__version__}"
CATALOG_ENV = "HBGCAT_CATALOG"


class Status(enum.Enum):
    FOUND = "found"
    NONEXISTENT = "nonexistent"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CatalogEntry:
    girth: int
    order: int
    sym_factor: int
    status: Status
    witness: tuple[int, ...] | None = None
    girth_actual: int | None = None
    explored: int = 0
    space: int = 0
    version: str = ENGINE_TAG

    def __post_init__(self):
        object.__setattr__(self, "status", Status(self.status))
        if self.witness is not None:
            object.__setattr__(self, "witness", tuple(self.witness))
        if self.status is Status.FOUND:
            if self.witness is None:
                raise CatalogError(f"found entry {self.key} has no witness")
            if self.girth_actual is None:
                object.__setattr__(self, "girth_actual", self.girth)
            if self.girth_actual != self.girth:
                raise CatalogError(f"found entry {self.key} has witness girth {self.girth_actual}")
        elif self.witness is not None:
            raise CatalogError(f"{self.status.value} entry {self.key} must not carry a witness")

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.girth, self.order, self.sym_factor)

    @property
    def spec(self) -> D3Spec | None:
        return None if self.witness is None else D3Spec(self.order, self.sym_factor, self.witness)

    def verify(self) -> None:
        """Rebuild a found witness and check its girth; raise CatalogError on mismatch."""
        if self.status is not Status.FOUND:
            return
        try:
            measured = girth(build_graph(self.spec)).girth
        except HbgError as exc:
            raise CatalogError(f"entry {self.key}: witness does not build: {exc}") from None
        if measured != self.girth_actual:
            raise CatalogError(f"entry {self.key}: recorded girth {self.girth_actual}, measured {measured}")

    def to_row(self) -> str:
        d3 = ",".join(map(str, self.witness)) if self.witness else "-"
        ga = "-" if self.girth_actual is None else str(self.girth_actual)
        fields = (self.girth, self.order, self.sym_factor, self.status.value, d3, ga, self.explored, self.space,
                  self.version)
        return "\t".join(map(str, fields))

    @classmethod
    def from_row(cls, line: str) -> "CatalogEntry":
        parts = line.rstrip("\n").split("\t")
        if len(parts) != len(HEADER):
            raise CatalogError(f"expected {len(HEADER)} fields, got {len(parts)}: {line!r}")
        g, n, b, status, d3, ga, explored, space, version = parts
        try:
            return cls(int(g), int(n), int(b), Status(status),
                       None if d3 == "-" else tuple(int(x) for x in d3.split(",")),
                       None if ga == "-" else int(ga), int(explored), int(space), version)
        except ValueError as exc:
            raise CatalogError(f"malformed catalog row {line!r}: {exc}") from None


def entry_from_outcome(outcome: SearchOutcome) -> CatalogEntry:
    p = outcome.problem
    status = Status(outcome.verdict.value)
    if status is Status.FOUND:
        g = outcome.witness_girth
        return CatalogEntry(g, p.order, p.sym_factor, status, outcome.witness.chords, g, outcome.explored,
                            p.space_size)
    return CatalogEntry(p.target_girth, p.order, p.sym_factor, status, None, None, outcome.explored, p.space_size)


class Catalog:
    """In-memory catalog keyed by (g, order, sf); single writer."""

    def __init__(self, entries: Iterable[CatalogEntry] = ()):
        self._entries: dict[tuple[int, int, int], CatalogEntry] = {}
        for e in entries:
            self.record(e)

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self.entries())

    def __contains__(self, key):
        return key in self._entries

    def get(self, g: int, order: int, sf: int) -> CatalogEntry | None:
        return self._entries.get((g, order, sf))

    def entries(self) -> list[CatalogEntry]:
        return [self._entries[k] for k in sorted(self._entries)]

    def record(self, entry: CatalogEntry) -> "Catalog":
        old = self._entries.get(entry.key)
        if old is None or old.status is Status.INCONCLUSIVE:
            self._entries[entry.key] = entry
        elif entry.status is Status.INCONCLUSIVE:
            pass
        elif old.status is not entry.status:
            raise ConflictError(f"cell {entry.key}: recorded {old.status.value}, new result {entry.status.value}")
        elif entry.status is Status.FOUND and entry.witness < old.witness:
            self._entries[entry.key] = entry
        return self

    def to_tsv(self) -> str:
        return "\t".join(HEADER) + "\n" + "".join(e.to_row() + "\n" for e in self.entries())

    @classmethod
    def from_tsv(cls, text: str, verify: bool = True) -> "Catalog":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or tuple(lines[0].split("\t")) != HEADER:
            raise CatalogError("missing or malformed catalog header")
        cat = cls()
        for ln in lines[1:]:
            e = CatalogEntry.from_row(ln)
            if verify:
                e.verify()
            cat.record(e)
        return cat

    @classmethod
    def load(cls, path, verify: bool = True) -> "Catalog":
        path = Path(path)
        if not path.exists():
            return cls()
        return cls.from_tsv(path.read_text(encoding="utf-8"), verify=verify)

    def save(self, path) -> None:
        path = Path(path)
        fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=path.name, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.to_tsv())
        os.replace(tmp, path)


def record(entry: CatalogEntry, store: Catalog) -> Catalog:
    return store.record(entry)


def default_catalog_path() -> Path:
    return Path(os.environ.get(CATALOG_ENV, "catalog.tsv"))


def fill_cell(store: Catalog, g: int, order: int, sf: int, budget=None, jobs=1) -> CatalogEntry:
    """Search one (g, order, sf) cell unless the catalog already resolves it."""
    old = store.get(g, order, sf)
    if old is not None and old.status is not Status.INCONCLUSIVE:
        return old
    out = search(SearchProblem(order, sf, g, budget, exact=True), jobs=jobs)
    entry = entry_from_outcome(out)
    store.record(entry)
    return store.get(g, order, sf)


def fill_min_order(store: Catalog, g: int, sf: int, max_order: int, budget=None, jobs=1) -> list[CatalogEntry]:
    """Fill cells for one symmetry factor in increasing order until the first found cell."""
    done = []
    for n in admissible_orders(sf, max_order):
        e = fill_cell(store, g, n, sf, budget, jobs)
        done.append(e)
        if e.status is Status.FOUND:
            break
    return done


def fill_orders(store: Catalog, g: int, sf: int, orders: Iterable[int], budget=None, jobs=1) -> list[CatalogEntry]:
    return [fill_cell(store, g, n, sf, budget, jobs) for n in orders]


# tables


@dataclass(frozen=True)
class SummaryCell:
    sym_factor: int
    kind: str  # "found", "nonexistent", "inconclusive"
    order: int | None = None  # minimum found order; for "inconclusive" an upper bound if any

    def label(self, cap: int) -> str:
        if self.kind == "found":
            return str(self.order)
        if self.kind == "nonexistent":
            return f"none<={cap}"
        return "?" if self.order is None else f"?<={self.order}"


def summary_table(store: Catalog, g: int, sf_range: Iterable[int], order_cap: int) -> list[SummaryCell]:
    cells = []
    for b in sf_range:
        if not check_symmetry_girth_bound(b, g):
            cells.append(SummaryCell(b, "nonexistent"))
            continue
        unresolved = False
        found = None
        for n in admissible_orders(b, order_cap):
            e = store.get(g, n, b)
            if e is None:
                raise IncompleteData(f"cell g={g} order={n} sf={b} was never searched")
            if e.status is Status.FOUND:
                found = n
                break
            if e.status is Status.INCONCLUSIVE:
                unresolved = True
        if unresolved:
            cells.append(SummaryCell(b, "inconclusive", found))
        elif found is not None:
            cells.append(SummaryCell(b, "found", found))
        else:
            cells.append(SummaryCell(b, "nonexistent"))
    return cells


def render_table(cells: Sequence[SummaryCell], g: int, cap: int, fmt: str = "text") -> str:
    rows = [(str(c.sym_factor), c.label(cap)) for c in cells]
    if fmt == "tsv":
        return "sf\t(3,%d)\n" % g + "".join(f"{a}\t{b}\n" for a, b in rows)
    head = ("sf", f"(3,{g})")
    w0 = max(len(head[0]), *(len(a) for a, _ in rows)) if rows else len(head[0])
    w1 = max(len(head[1]), *(len(b) for _, b in rows)) if rows else len(head[1])
    lines = [f"{head[0]:>{w0}}  {head[1]:>{w1}}"]
    lines += [f"{a:>{w0}}  {b:>{w1}}" for a, b in rows]
    return "\n".join(lines) + "\n"


class Monotonicity(enum.Enum):
    MONOTONIC = "monotonic"
    NON_MONOTONIC = "non_monotonic"
    UNKNOWN = "unknown"


def classify_verdicts(statuses: Sequence[Status]) -> Monotonicity:
    """Classify a sequence of cell verdicts along the progression 2m, 2m + 2b, ..."""
    first_found = next((i for i, s in enumerate(statuses) if s is Status.FOUND), None)
    if first_found is not None:
        gap = False
        for s in statuses[first_found + 1:]:
            if s is Status.NONEXISTENT:
                gap = True
            elif s is Status.FOUND and gap:
                return Monotonicity.NON_MONOTONIC
    if any(s is Status.INCONCLUSIVE for s in statuses) or first_found is None:
        return Monotonicity.UNKNOWN
    if all(s is Status.FOUND for s in statuses[first_found:]):
        return Monotonicity.MONOTONIC
    return Monotonicity.UNKNOWN


def classify_monotonic(store: Catalog, g: int, b: int, orders: Iterable[int]) -> Monotonicity:
    """Verdict relative to the probed range only; orders must step by 2b."""
    orders = list(orders)
    if any(n % (2 * b) for n in orders) or any(y - x != 2 * b for x, y in zip(orders, orders[1:])):
        raise ValueError(f"orders must be consecutive multiples of {2 * b}")
    statuses = []
    for n in orders:
        e = store.get(g, n, b)
        if e is None:
            raise IncompleteData(f"cell g={g} order={n} sf={b} was never searched")
        statuses.append(e.status)
    return classify_verdicts(statuses)


# families


@dataclass(frozen=True)
class FamilyResult:
    order: int
    girth: int | None
    note: str = ""


@dataclass(frozen=True)
class FamilyProbe:
    chords: tuple[int, ...]
    sym_factor: int
    target_girth: int
    results: tuple[FamilyResult, ...]

    @property
    def passing(self) -> list[int]:
        return [r.order for r in self.results if r.girth == self.target_girth]

    @property
    def all_pass(self) -> bool:
        return len(self.passing) == len(self.results)

    def report(self) -> str:
        lines = []
        for r in self.results:
            if r.girth is None:
                lines.append(f"order={r.order} invalid {r.note}")
            else:
                ok = "PASS" if r.girth == self.target_girth else "FAIL"
                lines.append(f"order={r.order} girth={r.girth} {ok}")
        return "\n".join(lines) + "\n"


def probe_family(chords: Sequence[int], b: int, orders: Iterable[int], g: int) -> FamilyProbe:
    results = []
    for n in orders:
        try:
            gv = girth(build_graph(D3Spec(n, b, tuple(chords)))).girth
        except HbgError as exc:
            results.append(FamilyResult(n, None, str(exc)))
            continue
        results.append(FamilyResult(n, gv))
    return FamilyProbe(tuple(chords), b, g, tuple(results))
