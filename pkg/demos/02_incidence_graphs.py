"""
Incidence graphs and their components
=====================================

Edges join Bruhat covers that share a blow-up count and an accumulated
sign vector; components of the resulting graph count regions of the
compactified isospectral manifold cut out by the divisors.
"""

from flagcoh import (
    all_minus,
    build_graph,
    components,
    enumerate_group,
    export_graph,
    negative_components,
)

# The hexagon: four components in the all-minus polytope of A2.
g = build_graph("A2", "--")
print("A2 (--) edges:")
for (w1, w2) in g.edge_words():
    a = "".join(map(str, w1)) or "e"
    b = "".join(map(str, w2)) or "e"
    print(f"  {a} => {b}")
print("components:", len(components(g)))

# Flipping one sign reroutes the edges through different covers.
g_twisted = build_graph("A2", "-+")
print("\nA2 (-+) edges:", [
    ("".join(map(str, a)) or "e") + " => " + "".join(map(str, b))
    for a, b in g_twisted.edge_words()
])

# Larger examples: the A3 permutohedron splits into 10 regions, B3 into 17.
for name in ("A3", "B3"):
    group = enumerate_group(name)
    graph = build_graph(group, all_minus(group.rank))
    comps = components(graph)
    sizes = sorted((len(c) for c in comps), reverse=True)
    print(f"\n{name}: {len(comps)} components, sizes {sizes}")
    print(f"  all-minus-stable components: {negative_components(graph)}")

# Graphs export to DOT for rendering, or JSON for round-tripping.
print("\nDOT for A2 (--):")
print(export_graph(g, "dot"))
