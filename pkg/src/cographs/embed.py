"""Constructive extraction of connectivity-keeping trees in cographs.

Each public ``keep_*`` operation realizes one existence theorem: it checks
the theorem's exact minimum-degree bound (never attempting best-effort runs
below it), builds the subtree copy along the proof's case analysis with all
choices smallest-label-first, and re-verifies the claimed property on the
residual through an independent path (cotree recomputation for cograph
residuals, the flow oracle for edge-deleted residuals).  A verification
failure raises :class:`~cographs.errors.PostconditionFailedError`, which
signals an implementation bug, never bad input.
"""

from __future__ import annotations

from collections import deque

from .analysis import (
    _complete_order,
    as_cotree,
    as_graph_and_cotree,
    degrees,
    is_connected_cograph,
    is_k_connected_cograph,
    is_k_edge_connected_cograph,
    is_maximally_connected,
    is_super_edge_connected,
    kappa_cograph,
)
from .cotree import Cotree, cocomponents, components, materialize
from .embedding import (
    DeleteMode,
    DisjointPair,
    Embedding,
    Preserved,
    exact_kappa,
    k_connected,
    k_edge_connected,
    maximally_connected,
    super_edge_connected,
)
from .errors import (
    BoundViolatedError,
    DegreeTooLowError,
    IsKmError,
    MissingCrossEdgeError,
    NotKConnectedError,
    NotKEdgeConnectedError,
    NotMaximallyConnectedError,
    NotSuperError,
    PartTooSmallError,
    PostconditionFailedError,
)
from .graph import (
    Graph,
    TreeShape,
    delete_edges,
    delete_vertices,
    edge_connectivity_flow,
    induced_subgraph,
    vertex_connectivity_flow,
)

__all__ = [
    "greedy_embed",
    "extend_embedding",
    "embed_across",
    "keep_vertex_connectivity",
    "keep_vertex_connectivity_bound",
    "keep_vertex_connectivity_two",
    "keep_maximal_connectedness",
    "keep_connectivity_edge_delete",
    "keep_connectivity_edge_delete_two",
    "keep_edge_connectivity_vertex_delete",
    "keep_super_edge_connectivity",
    "keep_edge_connectivity_edge_delete",
]


def _require(condition: bool, message: str) -> None:
    """Internal invariant; failure means a bug, not bad input."""
    if not condition:
        raise PostconditionFailedError(message)


# -- generic tree placement -----------------------------------------------------

def _placement_order(T: TreeShape, placed: set[int]) -> list[tuple[int, int | None]]:
    """Order for the missing tree vertices; each follows its unique placed
    neighbor (the placed set stays connected, so the parent is unique)."""
    placed = set(placed)
    order: list[tuple[int, int | None]] = []
    if not placed:
        root = min(T.tree.vertices)
        order.append((root, None))
        placed.add(root)
    while len(placed) < T.order:
        candidates = [v for v in T.tree.vertices
                      if v not in placed and any(w in placed
                                                 for w in T.tree.neighbors(v))]
        v = min(candidates)
        parent = min(w for w in T.tree.neighbors(v) if w in placed)
        order.append((v, parent))
        placed.add(v)
    return order


def _embed_mapping(G: Graph, T: TreeShape, allowed,
                   partial: dict[int, int] | None = None) -> dict[int, int]:
    """Deterministic smallest-label-first placement with backtracking.

    Under the degree preconditions of the callers the first choice always
    works and no backtracking happens; the search is kept complete so that
    tight instances (star into K_{1,3}) still embed when possible.
    """
    allowed = set(allowed)
    assignment = dict(partial or {})
    if assignment:
        dom = set(assignment)
        sub = induced_subgraph(T.tree, dom)
        if len(sub.edges) != len(dom) - 1 or not sub.is_connected():
            raise ValueError("partial embedding domain is not a subtree")
        if len(set(assignment.values())) != len(assignment):
            raise ValueError("partial embedding is not injective")
        for u, v in sub.edges:
            if not G.has_edge(assignment[u], assignment[v]):
                raise ValueError("partial embedding does not preserve edges")
        for g in assignment.values():
            if g not in allowed:
                raise ValueError("partial embedding leaves the allowed set")
    order = _placement_order(T, set(assignment))
    used = set(assignment.values())

    def backtrack(i: int) -> bool:
        if i == len(order):
            return True
        t, parent = order[i]
        if parent is None:
            candidates = sorted(allowed - used)
        else:
            candidates = sorted((G.neighbors(assignment[parent]) & allowed)
                                - used)
        for c in candidates:
            assignment[t] = c
            used.add(c)
            if backtrack(i + 1):
                return True
            used.discard(c)
            del assignment[t]
        return False

    if not backtrack(0):
        raise DegreeTooLowError(
            f"no embedding of a {T.order}-vertex tree into the "
            f"{len(allowed)}-vertex allowed set")
    return assignment


def greedy_embed(G: Graph, T: TreeShape, allowed=None) -> Embedding:
    """Embed T inside ``allowed``, processing each vertex after its parent
    and always taking the smallest-label unused neighbor."""
    if allowed is None:
        allowed = G.vertices
    mapping = _embed_mapping(G, T, allowed)
    return Embedding.from_mapping(T, mapping)


def extend_embedding(G: Graph, partial: Embedding | dict[int, int],
                     T: TreeShape, forbidden=()) -> Embedding:
    """Grow a partial embedding of a subtree of T to all of T, avoiding
    ``forbidden``; attachment order is smallest-label-first."""
    if isinstance(partial, Embedding):
        partial = partial.mapping
    allowed = set(G.vertices) - set(forbidden)
    mapping = _embed_mapping(G, T, allowed, partial=partial)
    return Embedding.from_mapping(T, mapping)


def _across_mapping(T: TreeShape, X, Y, G: Graph) -> dict[int, int]:
    v1, v2 = T.bipartition
    X = sorted(X)
    Y = sorted(Y)
    if len(X) < len(v1) or len(Y) < len(v2):
        raise PartTooSmallError(
            f"need sides of sizes >= ({len(v1)}, {len(v2)}), "
            f"got ({len(X)}, {len(Y)})")
    for x in X:
        for y in Y:
            if not G.has_edge(x, y):
                raise MissingCrossEdgeError(f"({x}, {y}) is not an edge")
    mapping = dict(zip(v1, X))
    mapping.update(zip(v2, Y))
    return mapping


def embed_across(T: TreeShape, X, Y, G: Graph) -> Embedding:
    """Place the bipartition classes of T on two fully joined vertex sets."""
    return Embedding.from_mapping(T, _across_mapping(T, X, Y, G))


# -- shared helpers ----------------------------------------------------------------

def _subtree_shape(T: TreeShape, nodes) -> TreeShape:
    return TreeShape.from_graph(induced_subgraph(T.tree, nodes))


def _bfs_prefix(T: TreeShape, size: int) -> list[int]:
    """First ``size`` vertices of a BFS from the fixed root (smallest leaf)."""
    root = T.root()
    seen = [root]
    seen_set = {root}
    queue = deque([root])
    while queue and len(seen) < size:
        v = queue.popleft()
        for w in sorted(T.tree.neighbors(v)):
            if w not in seen_set and len(seen) < size:
                seen.append(w)
                seen_set.add(w)
                queue.append(w)
    return seen


def _tree_leaf_and_support(T: TreeShape) -> tuple[int, int | None]:
    """Smallest-label leaf of T and its unique neighbor (None when m = 1)."""
    leaf = min(v for v in T.tree.vertices if T.tree.degree(v) <= 1)
    if T.order == 1:
        return leaf, None
    return leaf, min(T.tree.neighbors(leaf))


def _split_primary(ct: Cotree) -> tuple[set[int], list[int], list[Cotree]]:
    """(labels of G1, sorted labels of S, all cocomponents, G1 first)."""
    parts = cocomponents(ct)
    g1 = set(parts[0].labels)
    s = sorted(set(ct.labels) - g1)
    return g1, s, parts


def _delta(ct: Cotree) -> int:
    return min(degrees(ct).values())


def _residual_cotree(G: Graph, image) -> Cotree:
    return as_cotree(delete_vertices(G, image))


def _try_embed(fn, *args, **kwargs):
    """Run an internal placement that the theorem proves cannot fail."""
    try:
        return fn(*args, **kwargs)
    except DegreeTooLowError as exc:
        raise PostconditionFailedError(
            f"construction lost a guaranteed embedding: {exc}") from exc


# -- connectivity keeping tree, vertex deletion -----------------------------------

def keep_vertex_connectivity_bound(k: int, m: int, n_prime: int) -> tuple[str, int]:
    """Case tag and minimum-degree bound for the vertex-deletion theorem,
    selected by the primary cocomponent order."""
    if n_prime == 1:
        return "complete", k + m - (1 if k == 1 else 0)
    if n_prime <= k:
        return "small_primary", k + m - 1 + n_prime // 2
    if n_prime < k + m:
        return "medium_primary", (3 * k) // 2 + m - 1
    return "large_primary", k + m - 1


def _keep_vertex_connectivity_mapping(G: Graph, ct: Cotree, T: TreeShape,
                                      k: int) -> dict[int, int]:
    """Case construction shared by the vertex-deletion keeping theorems.

    Preconditions (k-connectivity and the case bound) are the caller's job.
    """
    m = T.order
    g1, s, _ = _split_primary(ct)
    n_prime = len(g1)
    case, _ = keep_vertex_connectivity_bound(k, m, n_prime)

    if case == "complete":
        mapping = _try_embed(_embed_mapping, G, T, G.vertices)
    elif case == "small_primary":
        _require(len(s) >= k + m, "join side too small for the small-primary case")
        mapping = _try_embed(_embed_mapping, G, T, s)
    elif case == "medium_primary":
        p = n_prime - k
        _require(len(s) >= k + m - p, "join side too small for the medium case")
        prefix = _bfs_prefix(T, m - p)
        partial = _try_embed(_embed_mapping, G, _subtree_shape(T, prefix), s)
        spare = [v for v in s if v not in set(partial.values())]
        protected = spare[:k]
        allowed = set(G.vertices) - set(protected)
        mapping = _try_embed(_embed_mapping, G, T, allowed, partial=partial)
    else:
        protected = s[:k]
        allowed = set(G.vertices) - set(protected)
        mapping = _try_embed(_embed_mapping, G, T, allowed)

    image = set(mapping.values())
    if case != "complete":
        _require(len(g1 - image) >= min(k, n_prime),
                 "too few survivors in the primary cocomponent")
        _require(len(set(s) - image) >= k, "too few survivors outside it")
    return mapping


def keep_vertex_connectivity(G: Graph | Cotree, T: TreeShape, k: int) -> Embedding:
    """Subtree copy of T whose vertex deletion leaves G k-connected.

    Requires a k-connected cograph meeting the case bound of
    :func:`keep_vertex_connectivity_bound` for its primary cocomponent order.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    G, ct = as_graph_and_cotree(G)
    if not is_k_connected_cograph(ct, k):
        raise NotKConnectedError(f"input is not {k}-connected")
    n_prime = cocomponents(ct)[0].n
    case, bound = keep_vertex_connectivity_bound(k, T.order, n_prime)
    delta = _delta(ct)
    if delta < bound:
        raise BoundViolatedError(
            f"case {case} needs delta >= {bound}, got {delta}",
            required_delta=bound, case=case)
    mapping = _keep_vertex_connectivity_mapping(G, ct, T, k)
    emb = Embedding.from_mapping(T, mapping, DeleteMode.VERTEX, k_connected(k))
    rct = _residual_cotree(G, emb.image)
    _require(is_k_connected_cograph(rct, k),
             f"residual is not {k}-connected")
    return emb


def keep_vertex_connectivity_two(G: Graph | Cotree, T1: TreeShape,
                                 T2: TreeShape) -> DisjointPair:
    """Two disjoint subtree copies whose joint deletion keeps kappa exact.

    Requires a connected cograph with delta >= ceil(3 kappa / 2) + m - 1.
    """
    if T1.order != T2.order:
        raise ValueError("both trees must have the same order")
    G, ct = as_graph_and_cotree(G)
    m = T1.order
    if not is_connected_cograph(ct):
        raise BoundViolatedError("a connected cograph is required")
    kappa = kappa_cograph(ct)
    bound = (3 * kappa + 1) // 2 + m - 1
    delta = _delta(ct)
    if delta < bound:
        raise BoundViolatedError(
            f"need delta >= ceil(3 kappa / 2) + m - 1 = {bound}, got {delta}",
            required_delta=bound)
    g1, _, parts = _split_primary(ct)
    if len(g1) == 1:
        # Only K1 with m = 1 reaches this point; its single vertex cannot
        # host two disjoint trees.
        raise BoundViolatedError(
            "complete graph cannot host two disjoint keeping trees")
    comps = components(parts[0])
    c1, c2 = comps[0], comps[1]
    map1 = _try_embed(_embed_mapping, G, T1, c1.labels)
    map2 = _try_embed(_embed_mapping, G, T2, c2.labels)
    spare = (kappa + 1) // 2
    _require(c1.n - m >= spare and c2.n - m >= spare,
             "components do not retain ceil(kappa/2) vertices")
    emb1 = Embedding.from_mapping(T1, map1, DeleteMode.VERTEX, exact_kappa(kappa))
    emb2 = Embedding.from_mapping(T2, map2, DeleteMode.VERTEX, exact_kappa(kappa))
    pair = DisjointPair(emb1, emb2)
    rct = _residual_cotree(G, pair.combined_image())
    _require(kappa_cograph(rct) == kappa, "residual kappa changed")
    return pair


# -- maximal connectedness keeping tree ---------------------------------------------

def _primary_with_isolated(ct: Cotree) -> tuple[int, list[Cotree]]:
    """Smallest-label isolated vertex over all maximum-order cocomponents,
    plus the cocomponent list reordered so its host comes first."""
    parts = cocomponents(ct)
    top = parts[0].n
    best: tuple[int, int] | None = None
    for i, part in enumerate(parts):
        if part.n != top:
            break
        node = part.root
        if node.kind == "leaf":
            candidates = [node.label]
        elif node.kind == "union":
            candidates = [c.label for c in node.children if c.kind == "leaf"]
        else:
            candidates = []
        for x in candidates:
            if best is None or x < best[0]:
                best = (x, i)
    _require(best is not None, "no primary cocomponent has an isolated vertex")
    x, idx = best
    ordered = [parts[idx]] + parts[:idx] + parts[idx + 1:]
    return x, ordered


def keep_maximal_connectedness(G: Graph | Cotree, T: TreeShape) -> Embedding:
    """Subtree copy whose deletion leaves the cograph maximally connected.

    Requires a maximally connected cograph other than K_m with
    delta >= m - 1.  The construction shields one isolated vertex of a
    primary cocomponent and re-establishes a primary cocomponent around it.
    """
    G, ct = as_graph_and_cotree(G)
    m = T.order
    if not is_maximally_connected(ct):
        raise NotMaximallyConnectedError("input is not maximally connected")
    if ct.n == m and cocomponents(ct)[0].n == 1:
        raise IsKmError(f"input is the complete graph K_{m}")
    delta = _delta(ct)
    if delta < m - 1:
        raise DegreeTooLowError(f"need delta >= {m - 1}, got {delta}")

    x, parts = _primary_with_isolated(ct)
    g1 = set(parts[0].labels)
    s = sorted(set(ct.labels) - g1)
    kappa = kappa_cograph(ct)
    _require(len(s) == kappa == delta, "maximally connected bookkeeping failed")
    k = delta - (m - 1)

    if m == 1:
        t_root = T.tree.vertices[0]
        if kappa == 0:
            target = min(v for v in ct.labels if v != x)
        else:
            target = s[0]
        mapping = {t_root: target}
    else:
        v1, v2 = T.bipartition
        p = len(g1) - k
        q = len(v1) - len(v2)
        if p >= m - 1 or (p >= 1 and q >= m - p - 1):
            # wide primary: smaller class into G1 - x, larger class into S
            _require(len(s) >= len(v1), "join side smaller than |V1|")
            _require(len(g1) - 1 >= len(v2), "primary cocomponent too small")
            X = s[:len(v1)]
            Y = sorted(g1 - {x})[:len(v2)]
            mapping = _across_mapping(T, X, Y, G)
        elif p <= 0:
            mapping = _try_embed(_embed_mapping, G, T, s)
        else:
            mapping = _keep_maximal_balanced(G, T, x, g1, s, parts, k, p, q)

    emb = Embedding.from_mapping(T, mapping, DeleteMode.VERTEX,
                                 maximally_connected())
    _require(x not in emb.image, "the shielded isolated vertex was deleted")
    rct = _residual_cotree(G, emb.image)
    _require(is_maximally_connected(rct), "residual is not maximally connected")
    return emb


def _keep_maximal_balanced(G: Graph, T: TreeShape, x: int, g1: set[int],
                           s: list[int], parts: list[Cotree], k: int,
                           p: int, q: int) -> dict[int, int]:
    """The balanced-bipartition case (1 <= p <= m-2, q < m-p-1)."""
    m = T.order
    v1, v2 = T.bipartition
    r = (m - p - q - 1 + 1) // 2  # ceil
    _require(m - 1 == p + q + 2 * r - (1 if p % 2 == 0 else 0),
             "order bookkeeping failed")
    _require(len(v1) == q + r + (p + 1) // 2 and len(v2) == r + (p + 1) // 2,
             "bipartition bookkeeping failed")
    others = parts[1:]
    _require(len(others) >= 2, "need at least three cocomponents here")
    second = others[0]

    if second.n >= len(v2):
        # the second cocomponent alone hosts the smaller class
        s2 = sorted(second.labels)[:len(v2)]
        outside = [v for v in s if v not in set(second.labels)]
        _require(len(outside) >= q + r, "not enough room outside the second part")
        s11 = outside[:q + r]
        _require(len(g1) - 1 >= (p + 1) // 2, "primary cocomponent too small")
        s12 = sorted(g1 - {x})[:(p + 1) // 2]
        return _across_mapping(T, s12 + s11, s2, G)

    # group even-indexed cocomponents until they cover the smaller class
    evens = others[0::2]
    prefix_parts: list[Cotree] = []
    covered = 0
    chosen = None
    for part in evens:
        if covered + part.n >= len(v2):
            chosen = part
            break
        prefix_parts.append(part)
        covered += part.n
    _require(chosen is not None,
             "no prefix of alternate cocomponents covers the smaller class")
    s2_set: set[int] = set()
    for part in prefix_parts:
        s2_set |= set(part.labels)
    s2_set |= set(chosen.labels)
    s1 = [v for v in s if v not in s2_set]
    prefix_labels = sorted(set().union(*[set(part.labels)
                                         for part in prefix_parts])
                           if prefix_parts else set())

    if len(s1) >= len(v1):
        return _across_mapping(T, s1[:len(v1)], sorted(s2_set)[:len(v2)], G)

    ell1 = len(v1) - len(s1)
    ell2 = len(v2) - covered
    _require(ell1 > 0 and ell2 > 0, "overlap sizes must be positive")
    _require(ell1 + ell2 == chosen.n - k + 1, "overlap identity failed")
    _require(max(ell1, ell2) <= chosen.n, "overlap exceeds the chosen part")
    if ell2 >= ell1:
        l2 = sorted(chosen.labels)[:ell2]
        _require(len(g1) - 1 >= ell1, "primary cocomponent too small")
        u1 = sorted(g1 - {x})[:ell1]
        return _across_mapping(T, s1 + u1, prefix_labels + l2, G)
    l1 = sorted(chosen.labels)[:ell1]
    _require(len(g1) - 1 >= ell2, "primary cocomponent too small")
    u2 = sorted(g1 - {x})[:ell2]
    return _across_mapping(T, s1 + l1, prefix_labels + u2, G)


# -- connectivity keeping tree, edge deletion -----------------------------------------

def keep_connectivity_edge_delete(G: Graph | Cotree, T: TreeShape,
                                  k: int) -> Embedding:
    """Subtree copy whose edge deletion leaves G k-connected.

    Requires a k-connected cograph with delta >= k + m - 1.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    G, ct = as_graph_and_cotree(G)
    m = T.order
    if not is_k_connected_cograph(ct, k):
        raise NotKConnectedError(f"input is not {k}-connected")
    bound = k + m - 1
    delta = _delta(ct)
    if delta < bound:
        raise BoundViolatedError(f"need delta >= {bound}, got {delta}",
                                 required_delta=bound)
    _, s, _ = _split_primary(ct)
    protected = s[:k]
    allowed = set(G.vertices) - set(protected)
    mapping = _try_embed(_embed_mapping, G, T, allowed)
    emb = Embedding.from_mapping(T, mapping, DeleteMode.EDGE, k_connected(k))
    residual = emb.residual(G)
    ok = residual.n == 1 and k <= 1 or vertex_connectivity_flow(residual) >= k
    _require(ok, f"residual is not {k}-connected after edge deletion")
    return emb


def keep_connectivity_edge_delete_two(G: Graph | Cotree, T1: TreeShape,
                                      T2: TreeShape) -> DisjointPair:
    """Two disjoint subtree copies whose edge deletion keeps kappa exact.

    Requires a connected cograph with delta >= kappa + m - 1.
    """
    if T1.order != T2.order:
        raise ValueError("both trees must have the same order")
    G, ct = as_graph_and_cotree(G)
    m = T1.order
    if not is_connected_cograph(ct):
        raise BoundViolatedError("a connected cograph is required")
    kappa = kappa_cograph(ct)
    bound = kappa + m - 1
    delta = _delta(ct)
    if delta < bound:
        raise BoundViolatedError(f"need delta >= {bound}, got {delta}",
                                 required_delta=bound)
    if m == 1:
        if ct.n < 2:
            raise BoundViolatedError(
                "two disjoint trees need at least two vertices")
        a, b = ct.labels[0], ct.labels[1]
        root1 = T1.tree.vertices[0]
        root2 = T2.tree.vertices[0]
        emb1 = Embedding.from_mapping(T1, {root1: a}, DeleteMode.EDGE,
                                      exact_kappa(kappa))
        emb2 = Embedding.from_mapping(T2, {root2: b}, DeleteMode.EDGE,
                                      exact_kappa(kappa))
        return DisjointPair(emb1, emb2)
    g1, _, parts = _split_primary(ct)
    _require(len(g1) >= 2, "bound forces a disconnected primary cocomponent")
    comps = components(parts[0])
    map1 = _try_embed(_embed_mapping, G, T1, comps[0].labels)
    map2 = _try_embed(_embed_mapping, G, T2, comps[1].labels)
    emb1 = Embedding.from_mapping(T1, map1, DeleteMode.EDGE, exact_kappa(kappa))
    emb2 = Embedding.from_mapping(T2, map2, DeleteMode.EDGE, exact_kappa(kappa))
    pair = DisjointPair(emb1, emb2)
    residual = pair.residual(G)
    _require(vertex_connectivity_flow(residual) == kappa,
             "residual kappa changed after edge deletion")
    return pair


# -- edge connectivity keeping tree, vertex deletion ------------------------------------

def keep_edge_connectivity_vertex_delete(G: Graph | Cotree, T: TreeShape,
                                         k: int) -> Embedding:
    """Subtree copy whose vertex deletion leaves G k-edge-connected.

    Requires a k-edge-connected cograph with delta >= k + m - [k = 1].
    For k = 1 this is the connectivity construction; for larger k the
    residual stays connected and connected cographs are maximally
    edge-connected.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    G, ct = as_graph_and_cotree(G)
    m = T.order
    if not is_k_edge_connected_cograph(ct, k):
        raise NotKEdgeConnectedError(f"input is not {k}-edge-connected")
    bound = k + m - (1 if k == 1 else 0)
    delta = _delta(ct)
    if delta < bound:
        raise BoundViolatedError(f"need delta >= {bound}, got {delta}",
                                 required_delta=bound)
    mapping = _keep_vertex_connectivity_mapping(G, ct, T, 1)
    emb = Embedding.from_mapping(T, mapping, DeleteMode.VERTEX,
                                 k_edge_connected(k))
    residual = emb.residual(G)
    rct = as_cotree(residual)
    _require(is_k_edge_connected_cograph(rct, k),
             f"residual is not {k}-edge-connected (closed form)")
    flow_ok = (residual.n == 1 and k <= 1
               or edge_connectivity_flow(residual) >= k)
    _require(flow_ok, f"residual is not {k}-edge-connected (flow)")
    return emb


# -- super edge-connectedness keeping tree ------------------------------------------------

_SUPER_BRUTE_CAP = 12


def _is_c4_graph(G: Graph) -> bool:
    return (G.n == 4 and len(G.edges) == 4
            and all(G.degree(v) == 2 for v in G.vertices))


def keep_super_edge_connectivity(G: Graph | Cotree, T: TreeShape) -> Embedding:
    """Subtree copy whose vertex deletion keeps G super edge-connected.

    Requires a super edge-connected cograph with delta >= m + 2.
    """
    G, ct = as_graph_and_cotree(G)
    m = T.order
    if not is_super_edge_connected(ct):
        raise NotSuperError("input is not super edge-connected")
    delta = _delta(ct)
    if delta < m + 2:
        raise BoundViolatedError(f"need delta >= {m + 2}, got {delta}",
                                 required_delta=m + 2)
    g1, s, parts = _split_primary(ct)

    if len(g1) == 1:
        mapping = _try_embed(_embed_mapping, G, T, G.vertices)
    elif len(s) >= 2:
        mapping = _keep_vertex_connectivity_mapping(G, ct, T, 2)
        residual = delete_vertices(G, set(mapping.values()))
        if _is_c4_graph(residual):
            # swap one leaf into the primary cocomponent to kill the C4
            image = set(mapping.values())
            _require(not (image & g1),
                     "a C4 residual forces the tree outside the primary part")
            z_t, support = _tree_leaf_and_support(T)
            x = min(g1 - image)
            if support is not None:
                _require(G.has_edge(mapping[support], x),
                         "leaf swap lost edge preservation")
            mapping = dict(mapping)
            mapping[z_t] = x
    else:
        mapping = _super_single_join_vertex(G, ct, T, parts)

    emb = Embedding.from_mapping(T, mapping, DeleteMode.VERTEX,
                                 super_edge_connected())
    residual = emb.residual(G)
    rct = as_cotree(residual)
    _require(is_super_edge_connected(rct), "residual is not super (closed form)")
    if residual.n <= _SUPER_BRUTE_CAP:
        _require(_super_by_cuts(residual), "residual is not super (cut check)")
    return emb


def _super_single_join_vertex(G: Graph, ct: Cotree, T: TreeShape,
                              parts: list[Cotree]) -> dict[int, int]:
    """The G = H + K1 case: embed inside a non-complete component of H so
    that its residual stays connected but not complete."""
    m = T.order
    comps = components(parts[0])
    non_complete = [c for c in comps if _complete_order(c.root) is None]
    _require(bool(non_complete),
             "a super cograph H + K1 must have a non-complete component")
    target = non_complete[0]
    tlabels = set(target.labels)
    prim = cocomponents(target)[0]
    prim_labels = set(prim.labels)
    sp = sorted(tlabels - prim_labels)
    prim_comps = components(prim)
    _require(len(prim_comps) >= 2, "primary part of the component is connected")
    x1 = prim_comps[0].root.min_label
    y1 = prim_comps[1].root.min_label

    if m == 1:
        t_root = T.tree.vertices[0]
        if len(sp) >= 2:
            return {t_root: sp[0]}
        big = next(c for c in prim_comps if c.n >= 2)
        return {t_root: min(big.labels)}

    leaf_t, support_t = _tree_leaf_and_support(T)
    sp_edges = sorted((u, v) for u, v in G.edges if u in sp and v in sp)
    prim_edges = sorted((u, v) for u, v in G.edges
                        if u in prim_labels and v in prim_labels)

    if sp_edges:
        w_img, z_img = sp_edges[0]
        protected = {x1, y1}
        swap_pool = prim_labels
    elif len(sp) >= 2 and prim_edges:
        w_img, z_img = prim_edges[0]
        protected = {sp[0], sp[1]}
        swap_pool = set(sp)
    elif len(sp) >= 2:
        # both sides edgeless: the component is complete bipartite
        v1, v2 = T.bipartition
        _require(len(prim_labels) >= len(v1) + 2 and len(sp) >= len(v2) + 2,
                 "bipartite sides too small")
        return _across_mapping(T, sorted(prim_labels)[:len(v1)],
                               sp[:len(v2)], G)
    else:
        # single hub inside the component: embed within one part of prim
        comp0 = prim_comps[0]
        mapping = _try_embed(_embed_mapping, G, T, comp0.labels)
        _require(len(set(comp0.labels) - set(mapping.values())) >= 1,
                 "no spare vertex left in the host component")
        return mapping

    partial = {support_t: w_img, leaf_t: z_img}
    allowed = tlabels - protected
    mapping = _try_embed(_embed_mapping, G, T, allowed, partial=partial)
    image = set(mapping.values())
    edge_side = set(sp) if sp_edges else prim_labels
    if not (edge_side - image):
        spare = sorted(swap_pool - image - protected)
        _require(bool(spare), "no spare vertex for the leaf swap")
        mapping = dict(mapping)
        mapping[leaf_t] = spare[0]
        _require(G.has_edge(w_img, spare[0]), "leaf swap lost edge preservation")
    return mapping


def _super_by_cuts(G: Graph) -> bool:
    """Brute-force super edge-connectedness (convention for disconnected)."""
    from .oracle import min_edge_cuts  # deferred: oracle also uses embedding types

    if G.n == 1:
        return True
    if not G.is_connected():
        return len(G.isolated_vertices()) == 1
    return all(record.isolates is not None
               for record in min_edge_cuts(G, cap=max(G.n, 16)))


# -- edge connectivity keeping tree, edge deletion ---------------------------------------

def _connected_without(G: Graph, removed: set[int]) -> bool:
    keep = [v for v in G.vertices if v not in removed]
    if not keep:
        return False
    seen = {keep[0]}
    queue = deque([keep[0]])
    while queue:
        v = queue.popleft()
        for w in G.neighbors(v):
            if w not in removed and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(keep)


def _smallest_cross_tree_edge(T: TreeShape) -> tuple[int, int]:
    """Smallest tree edge ordered (larger-class endpoint, smaller-class)."""
    v1 = set(T.bipartition[0])
    u, v = min(T.tree.edges)
    return (u, v) if u in v1 else (v, u)


def _class_image(T: TreeShape, mapping: dict[int, int], side: int) -> set[int]:
    return {mapping[t] for t in T.bipartition[side]}


def _keep_edge_conn_mapping(G: Graph, ct: Cotree, T: TreeShape,
                            k: int) -> dict[int, int]:
    """Recursive construction for the edge-deletion keeping theorem."""
    m = T.order
    if m == 1:
        return {T.tree.vertices[0]: min(G.vertices)}
    g1, s, parts = _split_primary(ct)
    if len(g1) == 1:
        return _try_embed(_embed_mapping, G, T, G.vertices)

    mapping = _try_embed(_embed_mapping, G, T, G.vertices)
    if _connected_without(G, _class_image(T, mapping, 1)):
        return mapping

    # the smaller class swallowed everything outside one cocomponent
    v2_img = _class_image(T, mapping, 1)
    host = None
    for part in parts:
        if set(ct.labels) - set(part.labels) <= v2_img:
            host = part
            break
    _require(host is not None and host.n >= 2,
             "disconnection without a swallowing cocomponent")
    g1 = set(host.labels)
    s = sorted(set(ct.labels) - g1)

    s_edges = sorted((u, v) for u, v in G.edges if u in s and v in s)
    if s_edges:
        a_t, b_t = _smallest_cross_tree_edge(T)
        u, v = s_edges[0]
        partial = {a_t: u, b_t: v}
        mapping = _try_embed(_embed_mapping, G, T, G.vertices, partial=partial)
        _require(_connected_without(G, _class_image(T, mapping, 1)),
                 "re-rooted embedding still disconnects the graph")
        return mapping

    if len(s) >= 2:
        leaf_t, support_t = _tree_leaf_and_support(T)
        w, z = s[0], s[1]
        rest = _subtree_shape(T, [t for t in T.tree.vertices if t != leaf_t])
        partial = _try_embed(_embed_mapping, G, rest,
                             set(G.vertices) - {w}, partial={support_t: z})
        spare = sorted(g1 - set(partial.values()))
        _require(bool(spare), "no room to finish the tree inside the primary part")
        mapping = dict(partial)
        mapping[leaf_t] = spare[0]
        v2_img = _class_image(T, mapping, 1)
        _require(not (g1 <= v2_img), "the smaller class swallowed the primary part")
        _require(_connected_without(G, v2_img),
                 "spare-vertex embedding still disconnects the graph")
        return mapping

    # single join vertex: recurse into one component plus the hub
    w = s[0]
    comp = components(host)[0]
    sub = induced_subgraph(G, set(comp.labels) | {w})
    sub_ct = as_cotree(sub)
    _require(min(degrees(sub_ct).values()) >= _delta(ct),
             "recursion lost the degree bound")
    return _keep_edge_conn_mapping(sub, sub_ct, T, k)


def keep_edge_connectivity_edge_delete(G: Graph | Cotree, T: TreeShape,
                                       k: int) -> Embedding:
    """Subtree copy whose edge deletion leaves G k-edge-connected.

    Requires a k-edge-connected cograph with
    delta >= max(k + Delta(T) + beta(T) - 1, m - 1); this is never larger
    than k + m - 1.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    G, ct = as_graph_and_cotree(G)
    m = T.order
    if not is_k_edge_connected_cograph(ct, k):
        raise NotKEdgeConnectedError(f"input is not {k}-edge-connected")
    bound = max(k + T.max_degree + T.beta - 1, m - 1)
    delta = _delta(ct)
    if delta < bound:
        raise BoundViolatedError(f"need delta >= {bound}, got {delta}",
                                 required_delta=bound)
    mapping = _keep_edge_conn_mapping(G, ct, T, k)
    emb = Embedding.from_mapping(T, mapping, DeleteMode.EDGE,
                                 k_edge_connected(k))
    residual = emb.residual(G)
    ok = (residual.n == 1 and k <= 1
          or edge_connectivity_flow(residual) >= k)
    _require(ok, f"residual is not {k}-edge-connected")
    return emb
