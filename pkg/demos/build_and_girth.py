"""
Building graphs from chord indices
==================================

A cubic Hamiltonian bipartite graph on vertices 1..2m is fixed by one chord
offset per odd vertex. With a symmetry factor b only b offsets are given and
they repeat around the cycle.
"""

from hbgcat import D3Spec, build_graph, emit_graph, extract_d3, girth, to_lcf

# The smallest (3,6) graph: every odd vertex jumps 5 steps ahead.
heawood = build_graph(D3Spec(14, 1, [5]))
print(emit_graph(heawood, "adjacency"), end="")
report = girth(heawood)
print("girth", report.girth, "shortest cycle", report.witness_cycle)

# Seven offsets repeated five times give a 70-vertex graph of girth 10.
cage = D3Spec(70, 7, [9, 13, 29, 21, 13, 43, 33])
g = build_graph(cage)
print("order 70 girth", girth(g).girth)

# Reading the offsets back gives the full 35-entry expansion.
print("expanded:", list(extract_d3(g)))

# The same graph in LCF notation needs twice as many entries per period.
print("lcf:", to_lcf(cage))
