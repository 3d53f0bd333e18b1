"""
Comparing with an LCF string
============================

Two labelings of the same graph differ, so the comparison is up to
isomorphism.
"""

from hbgcat import D3Spec, are_isomorphic_small, build_graph, from_lcf, girth, parse_lcf
from hbgcat.analysis import find_isomorphism

lcf = parse_lcf("[-29,-19,-13,13,21,-27,27,33,-13,13,19,-21,-33,29]^5")
theirs = from_lcf(lcf)
print("order", theirs.order, "girth", girth(theirs).girth)

ours = build_graph(D3Spec(70, 7, [9, 13, 29, 21, 13, 43, 33]))
print("isomorphic:", are_isomorphic_small(theirs, ours))

iso = find_isomorphism(theirs, ours)
print("first few images:", [iso[v] for v in range(1, 11)])
