"""
Degree profiles and neighborhood Zagreb indices
===============================================

Build a few small graphs, look at their degree profiles, and compute the
first Zagreb index M1, the neighborhood index NM_a and its 2-distance
variant NM2_a for several exponents.
"""

from nbzagreb import (
    Graph,
    degree_profile,
    first_zagreb,
    general_neighborhood_zagreb,
    parse_edge_list,
    path_graph,
    two_distance_index,
)

# A 4-cycle with a pendant vertex, entered as an edge list.
g = parse_edge_list("""
n 5
0 1
1 2
2 3
3 0
1 4
""")

p = degree_profile(g)
print("degrees:              ", p.deg)
print("neighborhood degrees: ", p.nbr_deg)
print("2-distance degrees:   ", p.dist2_deg)
print("neighborhood histogram:", p.nbr_hist)
print("M1 =", first_zagreb(g))

# NM_a sums nbr_deg(u)**a over the vertices; a = 0 and a = 1 are excluded.
for alpha in (-1, 0.5, 2, 3):
    print(f"NM_{alpha:<4} = {general_neighborhood_zagreb(g, alpha):.6f}")

# The 2-distance variant sums dist2_deg(u)**a instead.
print("NM2_2 =", two_distance_index(g, 2))

# The same quantities for a path, built by a helper.
p5 = path_graph(5)
print("\nP5 neighborhood degrees:", degree_profile(p5).nbr_deg)
print("P5 NM_2 =", general_neighborhood_zagreb(p5, 2))

# Graphs can also be built from explicit edge pairs.
prism = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
                             (0, 3), (1, 4), (2, 5)])
print("\nprism M1 =", first_zagreb(prism))
print("prism NM_2 =", general_neighborhood_zagreb(prism, 2))
