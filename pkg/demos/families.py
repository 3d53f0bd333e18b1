"""
One chord tuple, many orders
============================

A fixed tuple of offsets defines a graph at every order 2m with b dividing m.
Some tuples keep their girth as the order grows.
"""

from hbgcat.catalog import Catalog, classify_monotonic, fill_orders, probe_family

# [5] gives girth 6 from order 14 on; order 12 still has a 4-cycle.
small = probe_family([5], 1, range(10, 31, 2), 6)
print(small.report(), end="")

big = probe_family([5], 1, range(14, 2001, 2), 6)
print(f"[5]: {len(big.passing)}/{len(big.results)} orders in 14..2000 have girth 6")

# Eight offsets that give girth 16 on large orders.
f16 = probe_family([15, 53, 73, 139, 243, 267, 471, 651], 8, [1824, 2352, 2368], 16)
print(f16.report(), end="")

# Existence along 30, 36, 42, ... for b=3 is not monotonic in the order.
store = Catalog()
orders = range(30, 61, 6)
fill_orders(store, 8, 3, orders)
print("b=3:", [store.get(8, n, 3).status.value for n in orders])
print("b=3 is", classify_monotonic(store, 8, 3, orders).value)
