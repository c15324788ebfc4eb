"""Embedding records: an injective, edge-preserving placement of a tree.

An :class:`Embedding` maps every vertex of a :class:`~cographs.graph.TreeShape`
to a distinct graph vertex so that tree edges land on graph edges.  The
``mode`` says what gets deleted (the image vertices, or the image edges) and
``preserved`` names the property the deletion is claimed to keep.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph, TreeShape, delete_edges, delete_vertices

__all__ = [
    "DeleteMode",
    "Preserved",
    "Embedding",
    "DisjointPair",
    "k_connected",
    "k_edge_connected",
    "maximally_connected",
    "super_edge_connected",
    "exact_kappa",
]


class DeleteMode(str, Enum):
    VERTEX = "vertex"
    EDGE = "edge"


@dataclass(frozen=True)
class Preserved:
    """Property tag carried by an embedding (kind plus optional parameter)."""

    kind: str
    k: int | None = None

    def tag(self) -> str:
        return f"{self.kind}({self.k})" if self.k is not None else self.kind


def k_connected(k: int) -> Preserved:
    return Preserved("k_connected", k)


def k_edge_connected(k: int) -> Preserved:
    return Preserved("k_edge_connected", k)


def maximally_connected() -> Preserved:
    return Preserved("maximally_connected")


def super_edge_connected() -> Preserved:
    return Preserved("super_edge_connected")


def exact_kappa(k: int) -> Preserved:
    return Preserved("exact_kappa", k)


@dataclass(frozen=True)
class Embedding:
    """Injective edge-preserving map from a tree shape into a graph."""

    shape: TreeShape
    pairs: tuple[tuple[int, int], ...]
    mode: DeleteMode = DeleteMode.VERTEX
    preserved: Preserved | None = None

    @classmethod
    def from_mapping(cls, shape: TreeShape, mapping: dict[int, int],
                     mode: DeleteMode = DeleteMode.VERTEX,
                     preserved: Preserved | None = None) -> "Embedding":
        pairs = tuple(sorted(mapping.items()))
        return cls(shape=shape, pairs=pairs, mode=mode, preserved=preserved)

    @property
    def mapping(self) -> dict[int, int]:
        return dict(self.pairs)

    @property
    def image(self) -> frozenset[int]:
        return frozenset(g for _, g in self.pairs)

    def graph_edges(self) -> list[tuple[int, int]]:
        """Images of the tree edges, normalized with the smaller label first."""
        mp = self.mapping
        out = []
        for u, v in self.shape.tree.edges:
            a, b = mp[u], mp[v]
            out.append((a, b) if a < b else (b, a))
        return sorted(out)

    def check(self, G: Graph) -> None:
        """Raise ValueError unless this is a valid embedding into G."""
        mp = self.mapping
        if set(mp) != set(self.shape.tree.vertices):
            raise ValueError("embedding does not cover the whole tree")
        if len(set(mp.values())) != len(mp):
            raise ValueError("embedding is not injective")
        for g in mp.values():
            if not G.has_vertex(g):
                raise ValueError(f"image vertex {g} not in graph")
        for u, v in self.shape.tree.edges:
            if not G.has_edge(mp[u], mp[v]):
                raise ValueError(f"tree edge ({u}, {v}) not preserved")

    def residual(self, G: Graph) -> Graph:
        """The graph after deleting the image (vertices or edges per mode)."""
        if self.mode is DeleteMode.VERTEX:
            return delete_vertices(G, self.image)
        return delete_edges(G, self.graph_edges())

    def to_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "preserved": self.preserved.tag() if self.preserved else None,
            "map": [[t, g] for t, g in self.pairs],
        }


@dataclass(frozen=True)
class DisjointPair:
    """Two embeddings with disjoint vertex images."""

    first: Embedding
    second: Embedding

    def __post_init__(self):
        if self.first.image & self.second.image:
            raise ValueError("embeddings are not vertex-disjoint")

    def combined_image(self) -> frozenset[int]:
        return self.first.image | self.second.image

    def residual(self, G: Graph) -> Graph:
        if self.first.mode is DeleteMode.VERTEX:
            return delete_vertices(G, self.combined_image())
        return delete_edges(G, self.first.graph_edges()
                            + self.second.graph_edges())

    def to_dict(self) -> dict:
        return {"first": self.first.to_dict(), "second": self.second.to_dict()}
