"""Connectivity-keeping trees: delete a tree copy, keep the property.

Every extraction below is constructive and self-verifying: the routine
re-derives the residual's cotree (or runs the flow oracle for edge
deletions) before returning.  The printed residual reports are recomputed
here once more, from scratch.
"""

from cographs import (
    analyze,
    edge_connectivity_flow,
    keep_connectivity_edge_delete,
    keep_edge_connectivity_edge_delete,
    keep_edge_connectivity_vertex_delete,
    keep_maximal_connectedness,
    keep_super_edge_connectivity,
    keep_vertex_connectivity,
    keep_vertex_connectivity_two,
    materialize,
    named_tree,
    parse_expression,
    vertex_connectivity_flow,
)


def show(title, G, result):
    print(f"== {title} ==")
    first = getattr(result, "first", result)
    second = getattr(result, "second", None)
    print(f"  tree image : {sorted(first.image)}"
          + (f" and {sorted(second.image)}" if second else ""))
    residual = result.residual(G)
    print(f"  residual   : n={residual.n}, kappa={vertex_connectivity_flow(residual)}, "
          f"lambda={edge_connectivity_flow(residual)}, delta={residual.min_degree()}")
    print()


# vertex deletion keeping 2-connectivity
ct = parse_expression("(K2|K2|K2)+K3")
G = materialize(ct)
rep = analyze(ct)
print(f"host: (K2|K2|K2)+K3 with kappa={rep.kappa}, delta={rep.delta}")
show("keep 2-connectivity, delete a path on 3 vertices", G,
     keep_vertex_connectivity(G, named_tree("path:3"), 2))

# two disjoint keeping trees preserve kappa exactly
ct = parse_expression("(K3|K3)+(K1|K1)")
G = materialize(ct)
show("two disjoint single-vertex trees, kappa stays exactly 2", G,
     keep_vertex_connectivity_two(G, named_tree("path:1"), named_tree("path:1")))

# maximal connectedness keeping tree
ct = parse_expression("(K1|K2|K1)+(K1|K1)+K1")
G = materialize(ct)
show("keep maximal connectedness, delete one vertex", G,
     keep_maximal_connectedness(G, named_tree("path:1")))

# edge deletion keeping 2-connectivity
G = materialize(parse_expression("K6"))
show("keep 2-connectivity after deleting a path's edges in K6", G,
     keep_connectivity_edge_delete(G, named_tree("path:3"), 2))

# vertex deletion keeping 3-edge-connectivity
G = materialize(parse_expression("K6"))
show("keep 3-edge-connectivity, delete an edge's endpoints in K6", G,
     keep_edge_connectivity_vertex_delete(G, named_tree("path:2"), 3))

# super edge-connectedness keeping tree
G = materialize(parse_expression("(K2|K2)+(K1|K1)+K1"))
show("keep super edge-connectedness, delete a 2-path", G,
     keep_super_edge_connectivity(G, named_tree("path:2")))

# edge deletion keeping 2-edge-connectivity at the Delta+beta bound
G = materialize(parse_expression("K6"))
show("keep 2-edge-connectivity after removing a P4's edges (weak bound)", G,
     keep_edge_connectivity_edge_delete(G, named_tree("path:4"), 2))
