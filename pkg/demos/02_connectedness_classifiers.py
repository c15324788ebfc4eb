"""Maximal, super, and ideal connectedness, with brute-force evidence.

Three strengthenings of being well-connected:
  maximally connected      kappa == delta
  super edge-connected     every minimum edge cut isolates one vertex
  ideally connected        every pair gets min(deg, deg) disjoint paths

For cographs each has a structural characterization; the oracle module
supplies the definition-level ground truth to compare against.
"""

from cographs import (
    analyze,
    internally_disjoint_paths,
    materialize,
    min_edge_cuts,
    parse_expression,
)

SAMPLES = [
    ("(K1|K1)+(K1|K1)", "the 4-cycle"),
    ("(K2|K2)+K1", "two triangles sharing a hub"),
    ("(K1|K2|K1)+(K1|K1)+K1", "a maximally connected 7-vertex cograph"),
    ("(K1|K1|K1)+(K1|K1|K1)", "K_{3,3}"),
    ("K5", "the complete graph"),
]

for expr, label in SAMPLES:
    ct = parse_expression(expr)
    G = materialize(ct)
    rep = analyze(ct)
    print(f"== {label}: {expr} ==")
    print(f"  kappa={rep.kappa} lambda={rep.lambda_} delta={rep.delta}")
    print(f"  maximally connected     : {rep.maximally_connected}")
    print(f"  super edge-connected    : {rep.super_edge_connected}")
    print(f"  ideally connected       : {rep.ideally_connected}")

    cuts = min_edge_cuts(G)
    loose = [c for c in cuts if c.isolates is None]
    print(f"  minimum cuts: {len(cuts)} of size {cuts[0].size}; "
          f"{len(loose)} do not isolate a vertex")
    if loose:
        side = loose[0].side
        print(f"    e.g. splitting off {side} costs only {loose[0].size} edges")
    if rep.ideally_connected:
        u, v = G.vertices[0], G.vertices[-1]
        print(f"  disjoint paths between {u} and {v}: "
              f"{internally_disjoint_paths(G, u, v)} "
              f"= min(deg) = {min(G.degree(u), G.degree(v))}")
    print()

print("The 4-cycle is the unique maximally connected cograph that is not")
print("super edge-connected; 2-connected cographs other than it always are.")
