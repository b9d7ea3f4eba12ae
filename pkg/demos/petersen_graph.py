"""The (-1)-curve graph of a degree-5 surface is the Petersen graph.

Vertices are the 2-subsets of {1..5} (Kneser labels), edges join disjoint
pairs; S5 acts by relabeling and is the full automorphism group.  This demo
prints the graph, the orbit structure of a 5-cycle, the vertices fixed by a
vertex stabilizer, and a DOT rendering with orbit coloring.
"""

from delpezzo import (
    curve_graph,
    generate,
    graph_action,
    has_invariant_independent_set,
    invariant_vertices,
    parse_perm,
    to_dot,
    vertex_stabilizer,
)


def name(vertex):
    return "{" + ",".join(map(str, sorted(vertex))) + "}"


def main():
    graph = curve_graph(5)
    print(f"vertices: {' '.join(name(v) for v in graph.vertices)}")
    print(f"{len(graph.edges())} edges; 3-regular; girth 5 (Petersen graph)")

    sigma = parse_perm("(1 2 3 4 5)", 5)
    act = graph_action(sigma)
    print(f"\n(1 2 3 4 5) acts on vertices as {act.perm.cycle_string()}")

    stab = vertex_stabilizer(frozenset({4, 5}))
    print(f"\nstabilizer of {{4,5}} has order {stab.order} (S3 x Z/2)")
    fixed = invariant_vertices(stab)
    print(f"it fixes exactly: {' '.join(name(v) for v in fixed)}")

    five_cycle = generate([sigma], degree=5)
    ok, witness = has_invariant_independent_set(five_cycle)
    print(f"\ninvariant independent set under <(1 2 3 4 5)>: {ok}")
    pair_group = generate([parse_perm("(1 2)", 5)], degree=5)
    ok, witness = has_invariant_independent_set(pair_group)
    print(f"under <(1 2)>: {ok}, e.g. {' '.join(name(v) for v in witness)}")

    print("\nDOT with the two orbits of <(1 2 3 4 5)> colored:")
    print(to_dot(graph, five_cycle))


if __name__ == "__main__":
    main()
