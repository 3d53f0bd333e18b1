"""
Minimum orders by exhaustive search
===================================

For each symmetry factor b we walk the admissible orders 2b, 4b, ... and search
the whole chord space at each one. The first order with a witness of the exact
girth is the minimum; every smaller order has been exhausted.
"""

import sys

from hbgcat.catalog import Catalog, fill_min_order, render_table, summary_table
from hbgcat.search import SearchProblem, search

store = Catalog()

# girth 8, symmetry factors 2..6, orders up to 60
for b in range(2, 7):
    fill_min_order(store, 8, b, 60)
cells = summary_table(store, 8, range(2, 7), 60)
sys.stdout.write(render_table(cells, 8, 60))

# Each cell is backed by a catalog entry: witness, or the size of the exhausted space.
for e in store:
    print(e.to_row())

# The order-36 cell with b=3 is empty although 30 and 42 are not.
out = search(SearchProblem(36, 3, 8))
print(out.summary())
