"""
Exact dicolouring: chromatic numbers, lists, and choosability
=============================================================

"""

# A k-dicolouring splits the vertices into k classes, each inducing an
# acyclic subdigraph.  Unlike proper graph colouring, a class may contain
# adjacent vertices as long as no directed cycle is monochromatic.
from dichroma.digraph import Digraph, complete_digraph, directed_cycle, obstruction
from dichroma.solver import (
    Dicolouring,
    dichromatic_number,
    is_k_dichoosable,
    is_valid,
    k_dicolourable,
    list_dicolourable,
)

# A directed cycle needs two colours: one colour would keep the whole
# cycle intact, and breaking it anywhere kills every monochromatic cycle.
c5 = directed_cycle(5)
print("dichromatic number of the directed C5:", dichromatic_number(c5))

col = k_dicolourable(c5, 2)
print("a 2-dicolouring:", dict(sorted(col.assignment.items())))
print("valid:", is_valid(c5, col, require_total=True))

# Bidirected complete digraphs behave like complete graphs: every digon
# is a directed 2-cycle, so all colour classes must be singletons.
print("dichromatic number of bidirected K4:", dichromatic_number(complete_digraph(4)))

# The bidirected product of an odd cycle with K_p needs n*p/floor(n/2)
# rounded up; for (5, 2) that is 5.
print("dichromatic number of the (5, 2) product:", dichromatic_number(obstruction(5, 2)))

# List dicolouring restricts each vertex to its own palette.  Here the
# oriented triangle with pairwise overlapping 1-lists is already stuck,
# while any system of 2-lists works.
c3 = directed_cycle(3)
stuck = {0: frozenset({0}), 1: frozenset({0}), 2: frozenset({0})}
print("uniform singleton lists on C3:", list_dicolourable(c3, stuck))
free = {0: frozenset({0, 1}), 1: frozenset({0, 1}), 2: frozenset({0, 1})}
print("2-lists on C3:", list_dicolourable(c3, free) is not None)

# k-dichoosability quantifies over every k-list assignment.  A digraph is
# 1-dichoosable exactly when it is acyclic, and the complete digraph on n
# vertices with a perfect matching of digons removed stays (n - p)-
# dichoosable: the removed matching buys one shared colour per pair.
n, p = 4, 2
arcs = [
    (u, v)
    for u in range(n)
    for v in range(n)
    if u != v and not (u // 2 == v // 2 and u < 2 * p and v < 2 * p)
]
d = Digraph(n, arcs)
print(f"K{n} minus a {p}-matching is {n - p}-dichoosable:", is_k_dichoosable(d, n - p))
print(f"but not {n - p - 1}-dichoosable:", not is_k_dichoosable(d, n - p - 1))
