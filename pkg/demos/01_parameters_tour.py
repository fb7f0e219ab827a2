"""
Degree and biclique parameters of a digraph
===========================================

"""

# A digraph is a vertex count plus a set of ordered arcs.  Digons, pairs
# of opposite arcs, play the role undirected edges play in graphs.
from dichroma.digraph import Digraph, complete_digraph, directed_cycle, obstruction
from dichroma.params import (
    biclique_report,
    degree_profile,
    density_report,
    directed_clique_number,
    epsilon_bound,
    is_b_sparse,
    reed_bound,
)

d = Digraph(5, [(0, 1), (1, 0), (1, 2), (2, 3), (3, 4), (4, 1), (2, 0)])
print("vertices:", d.n, "arcs:", d.arc_count())
print("digon between 0 and 1:", d.has_digon(0, 1))

# The degree profile collects, per vertex, the out-degree, the in-degree,
# their maximum and minimum, and the product d+(v) * d-(v).  The headline
# numbers are the maxima of those columns.
profile = degree_profile(d)
print("out-degrees:", profile.d_out)
print("in-degrees: ", profile.d_in)
print("Delta_max =", profile.delta_max, " Delta_min =", profile.delta_min)

# The geometric-mean degree is tracked through its square, so everything
# stays an integer: delta_tilde_sq is max_v d+(v) * d-(v).
print("Delta_tilde^2 =", profile.delta_tilde_sq)

# m+(v) counts arcs inside the out-neighbourhood of v, m-(v) inside the
# in-neighbourhood.  B_v = Delta(Delta-1) - min(m+, m-) measures how far
# the sparser side is from being a complete digraph; a digraph is B-sparse
# when every B_v is at least B.
report = density_report(d)
print("m+ per vertex:", report.m_plus)
print("m- per vertex:", report.m_minus)
print("B_v per vertex:", report.bv)
print("is 2-sparse:", is_b_sparse(d, 2))

# The biclique number is the largest set of vertices pairwise joined by
# digons; the directed clique number is the largest set where every pair
# is joined by at least one arc.
k4 = complete_digraph(4)
print("biclique number of bidirected K4:", biclique_report(k4).omega_bi)
print("directed clique number of bidirected K4:", directed_clique_number(k4))

# The bound evaluators are exact over the integers.  reed_bound is the
# midpoint form ceil((x + 1 + w) / 2) with x the geometric-mean maximum;
# epsilon_bound interpolates between x + 1 and w with a rational weight.
from fractions import Fraction

for name, dd in [
    ("oriented 3-cycle", directed_cycle(3)),
    ("bidirected K4", k4),
    ("odd product shape (5, 2)", obstruction(5, 2)),
]:
    p = degree_profile(dd)
    w = biclique_report(dd).omega_bi
    print(
        f"{name}: reed_bound = {reed_bound(p, w)},",
        f"epsilon_bound(1/3) = {epsilon_bound(p, w, Fraction(1, 3))}",
    )
