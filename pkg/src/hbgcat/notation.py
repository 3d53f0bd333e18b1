"""Text forms: D3 strings, LCF notation and plain adjacency / edge-list dumps."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .analysis import verify_hamiltonian_bipartite
from .d3core import D3Spec, LabeledCubicGraph, build_graph, spec_from_graph
from .errors import InvalidLcf, InvalidSpec, NotCanonicalHBG, ParseError

FORMATS = ("adjacency", "edge_list", "d3", "lcf")

_SEP = re.compile(r"[\s,]+")


def parse_int_list(text: str) -> list[int]:
    body = text.strip().strip("[]")
    if not body:
        raise ParseError("empty integer list")
    try:
        return [int(tok) for tok in _SEP.split(body.strip()) if tok]
    except ValueError as exc:
        raise ParseError(f"malformed integer list {text!r}: {exc}") from None


def parse_d3(text: str, order: int, sf: int) -> D3Spec:
    return D3Spec(order, sf, tuple(parse_int_list(text)))


@dataclass(frozen=True)
class LcfSpec:
    entries: tuple[int, ...]
    exponent: int = 1

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if not self.entries:
            raise InvalidLcf("LCF needs at least one entry")
        if self.exponent < 1:
            raise InvalidLcf(f"exponent must be positive, got {self.exponent}")

    @property
    def order(self) -> int:
        return len(self.entries) * self.exponent

    def expanded(self) -> tuple[int, ...]:
        return self.entries * self.exponent

    def __str__(self):
        body = ",".join(str(e) for e in self.entries)
        return f"[{body}]^{self.exponent}"


def parse_lcf(text: str) -> LcfSpec:
    """Parse ``[a,b,...]^k`` (or ``[a,b,...]k``); a missing exponent means 1.

    Unicode minus signs and superscript digits are accepted.
    """
    s = text.strip().replace("−", "-")
    s = s.translate(str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789"))
    m = re.fullmatch(r"\[([^\]]*)\]\s*(?:\^?\s*(\d+))?", s)
    if not m:
        raise ParseError(f"malformed LCF string {text!r}")
    return LcfSpec(tuple(parse_int_list(m.group(1))), int(m.group(2) or 1))


def _normalize(offset: int, n: int) -> int:
    r = offset % n
    return r - n if r > n // 2 else r


def _compress(seq: tuple[int, ...]) -> LcfSpec:
    n = len(seq)
    for p in range(1, n + 1):
        if n % p == 0 and all(seq[i] == seq[i - p] for i in range(p, n)):
            return LcfSpec(seq[:p], n // p)
    raise AssertionError("unreachable")


def graph_to_lcf(graph: LabeledCubicGraph) -> LcfSpec:
    if not verify_hamiltonian_bipartite(graph):
        raise NotCanonicalHBG("LCF export needs a canonical Hamiltonian bipartite graph")
    n = graph.order
    seq = []
    for v in range(1, n + 1):
        (w,) = [x for x in graph.neighbors(v) if x not in ((v - 2) % n + 1, v % n + 1)]
        seq.append(_normalize(w - v, n))
    return _compress(tuple(seq))


def to_lcf(spec: D3Spec) -> LcfSpec:
    return graph_to_lcf(build_graph(spec))


def from_lcf(lcf: LcfSpec) -> LabeledCubicGraph:
    n = lcf.order
    if n < 4 or n % 2:
        raise InvalidLcf(f"LCF order {n} must be even and at least 4")
    seq = lcf.expanded()
    partner = [0] * (n + 1)
    for v, e in enumerate(seq, start=1):
        if e % 2 == 0:
            raise InvalidLcf(f"entry {e} at vertex {v} is even; graph would not be bipartite")
        w = (v - 1 + e) % n + 1
        if w == v or w in ((v - 2) % n + 1, v % n + 1):
            raise InvalidLcf(f"entry {e} at vertex {v} hits itself or a cycle neighbour")
        partner[v] = w
    for v in range(1, n + 1):
        if partner[partner[v]] != v:
            raise InvalidLcf(
                f"chords collide: vertex {v} -> {partner[v]} but vertex {partner[v]} -> {partner[partner[v]]}"
            )
    adj = [((v - 2) % n + 1, v % n + 1, partner[v]) for v in range(1, n + 1)]
    return LabeledCubicGraph(n, adj)


def emit_graph(graph: LabeledCubicGraph, fmt: str = "adjacency") -> str:
    if fmt == "adjacency":
        return "".join(f"{v}: {' '.join(map(str, graph.neighbors(v)))}\n" for v in range(1, graph.order + 1))
    if fmt == "edge_list":
        return "".join(f"{u} {w}\n" for u, w in sorted(graph.edges))
    if fmt == "d3":
        if not verify_hamiltonian_bipartite(graph):
            raise NotCanonicalHBG("D3 export needs a canonical Hamiltonian bipartite graph")
        return format_d3(spec_from_graph(graph)) + "\n"
    if fmt == "lcf":
        return str(graph_to_lcf(graph)) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def format_d3(spec: D3Spec) -> str:
    return f"order={spec.order} sf={spec.sym_factor} d3={','.join(map(str, spec.chords))}"


def parse_d3_line(line: str) -> D3Spec:
    """Inverse of :func:`format_d3`."""
    fields = dict(tok.split("=", 1) for tok in line.split() if "=" in tok)
    try:
        return parse_d3(fields["d3"], int(fields["order"]), int(fields["sf"]))
    except KeyError as exc:
        raise ParseError(f"missing field {exc} in {line!r}") from None
    except ValueError as exc:
        if isinstance(exc, InvalidSpec | ParseError):
            raise
        raise ParseError(f"malformed D3 line {line!r}") from None
