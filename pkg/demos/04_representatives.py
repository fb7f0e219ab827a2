"""
Acyclic systems of representatives and list colouring through them
==================================================================

"""

# Given a partition of the vertices into independent sets, an acyclic
# system of representatives (ASR) picks one vertex per part so that the
# picked set induces no directed cycle.  A degree condition makes this
# always possible: every vertex sends at most k arcs out and receives at
# most |part| - k arcs in.
from dichroma.asr import (
    ASRInstance,
    acyclic_hitting_set,
    find_asr,
    list_dicolour_asr,
    search_good_triplet,
)
from dichroma.digraph import Digraph, directed_cycle
from dichroma.solver import is_valid

# Two parts of two vertices each, k = 1: each vertex has out-degree at
# most 1 and in-degree at most 1, so the condition holds.
d = Digraph(4, [(0, 2), (2, 1)])
parts = [frozenset({0, 1}), frozenset({2, 3})]
inst = ASRInstance(d, parts, 1)
print("degree condition holds:", inst.satisfies_degree_condition)

rep = find_asr(inst)
print("a representative per part:", sorted(rep))
print("induces no cycle:", d.is_acyclic(rep))

# Anchoring forces a chosen vertex into the system; the search then
# avoids its out-neighbourhood entirely.
anchored = find_asr(inst, anchor=1)
print("anchored at 1:", sorted(anchored))

# When the condition holds there is no good triplet: a subset of parts
# with witnesses certifying that some anchor can never be extended.
print("good triplet under the condition:", search_good_triplet(inst))

# The same machinery colours from lists.  On the directed cycle with
# identical 2-lists, each (vertex, colour) pair becomes a part and the
# chosen representatives read off a colouring.
c3 = directed_cycle(3)
lists = {v: frozenset({0, 1}) for v in range(3)}
col = list_dicolour_asr(c3, lists, k=1)
print("list dicolouring of C3:", dict(sorted(col.assignment.items())))
print("valid:", is_valid(c3, col, require_total=True))

# Bicliques work as parts too: arcs inside each part are deleted, the
# parts turn independent, and the ASR comes back acyclic in the original.
digons = Digraph(
    4, [(0, 1), (1, 0), (2, 3), (3, 2), (0, 2), (3, 1)]
)
hit = acyclic_hitting_set(digons, [frozenset({0, 1}), frozenset({2, 3})], k=1)
print("hitting set through the digon parts:", sorted(hit))
print("acyclic in the original:", digons.is_acyclic(hit))
