# HopfChains/graphs.py
# From HopfChains
# Copyright 2026 HopfChains contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# DESCRIPTION
# Simple graphs and the two graph Hopf algebras. Breaking a graph colors its
# vertices and keeps the induced subgraph on each color class. Unlabeled
# graphs form a polynomial algebra on the connected graphs; labeled graphs
# on {1..n} form a free algebra whose generators are the graphs that cannot
# be cut into a low-label and a high-label half.
from __future__ import annotations
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from pathlib import Path
from typing import Iterable, Sequence
import networkx as nx
from HopfChains.algebra import GeneratorId, LinComb, Monomial, Tensor, Word
from HopfChains.errors import InvalidInputError, UnsupportedSizeError
from HopfChains.hopf import AlgebraKind, HopfInstance

CANONICAL_CAP = 8
ENUMERATION_CAP = 5


@dataclass(frozen=True)
class Graph:
    vertices: int
    edges: frozenset[tuple[int, int]]  # 0-indexed, each pair (u, v) with u < v

    @classmethod
    def from_edges(cls, vertices: int, edges: Iterable[tuple[int, int]]) -> Graph:
        normalized = set()
        for u, v in edges:
            if u == v:
                raise InvalidInputError("Simple graphs have no loops.", (u, v))
            if not (0 <= u < vertices and 0 <= v < vertices):
                raise InvalidInputError("Edge endpoint outside the vertex set.", (u, v))
            normalized.add((min(u, v), max(u, v)))
        return cls(vertices, frozenset(normalized))

    @classmethod
    def complete(cls, vertices: int) -> Graph:
        return cls.from_edges(vertices, combinations(range(vertices), 2))

    @classmethod
    def path(cls, vertices: int) -> Graph:
        return cls.from_edges(vertices, ((i, i + 1) for i in range(vertices - 1)))

    @classmethod
    def empty(cls, vertices: int) -> Graph:
        return cls(vertices, frozenset())

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertices))
        g.add_edges_from(self.edges)
        return g

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    # Induced subgraph on the given vertices, relabeled preserving their order
    def induced(self, subset: Sequence[int]) -> Graph:
        chosen = sorted(subset)
        position = {v: i for i, v in enumerate(chosen)}
        return Graph(len(chosen), frozenset((position[u], position[v]) for u, v in self.edges
                                            if u in position and v in position))

    def components(self) -> list[list[int]]:
        return sorted(sorted(c) for c in nx.connected_components(self.to_networkx()))

    def is_connected(self) -> bool:
        return self.vertices > 0 and len(self.components()) == 1

    def relabeled(self, mapping: Sequence[int]) -> Graph:
        return Graph(self.vertices, frozenset((min(mapping[u], mapping[v]), max(mapping[u], mapping[v]))
                                              for u, v in self.edges))

    # Upper triangle of the adjacency matrix, row by row
    def bits(self) -> tuple[int, ...]:
        return tuple(int((i, j) in self.edges)
                     for i, j in combinations(range(self.vertices), 2))

    def bit_string(self) -> str:
        return "".join(str(b) for b in self.bits())

    def shifted(self, offset: int) -> frozenset[tuple[int, int]]:
        return frozenset((u + offset, v + offset) for u, v in self.edges)

    def cut_indices(self) -> list[int]:
        """Indices i in 1..n-1 such that no edge joins a vertex below i to one at or above i."""
        return [i for i in range(1, self.vertices)
                if not any(u < i <= v for u, v in self.edges)]

    def delete_edge(self, edge: tuple[int, int]) -> Graph:
        return Graph(self.vertices, self.edges - {edge})

    def contract_edge(self, edge: tuple[int, int]) -> Graph:
        u, v = edge
        mapping = [w if w < v else w - 1 for w in range(self.vertices)]
        mapping[v] = mapping[u]
        merged = set()
        for x, y in self.edges:
            if (x, y) == edge:
                continue
            a, b = mapping[x], mapping[y]
            if a != b:
                merged.add((min(a, b), max(a, b)))
        return Graph(self.vertices - 1, frozenset(merged))


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    vertices = 0
    edges: set[tuple[int, int]] = set()
    for g in graphs:
        edges |= g.shifted(vertices)
        vertices += g.vertices
    return Graph(vertices, frozenset(edges))


def graph_canonicalize(g: Graph, cap: int = CANONICAL_CAP) -> Graph:
    """The relabeling of g with the lexicographically least adjacency bit string."""
    if g.vertices > cap:
        raise UnsupportedSizeError("Graph too large to canonicalize by brute force.",
                                   g.vertices, cap)
    return _canonical_form(g)


@lru_cache(maxsize=65536)
def _canonical_form(g: Graph) -> Graph:
    pairs = list(combinations(range(g.vertices), 2))
    best = None
    for order in permutations(range(g.vertices)):
        # order[i] is the old vertex that receives new label i
        candidate = tuple(int(g.adjacent(order[i], order[j])) for i, j in pairs)
        if best is None or candidate < best[0]:
            best = (candidate, order)
    inverse = [0] * g.vertices
    for new, old in enumerate(best[1]):
        inverse[old] = new
    return g.relabeled(inverse)


def all_graphs(vertices: int) -> Iterable[Graph]:
    pairs = list(combinations(range(vertices), 2))
    for mask in product((0, 1), repeat=len(pairs)):
        yield Graph(vertices, frozenset(p for p, bit in zip(pairs, mask) if bit))


def _check_enumerable(vertices: int) -> None:
    if vertices > ENUMERATION_CAP:
        raise UnsupportedSizeError("Enumerating every graph is limited to small vertex counts.",
                                   vertices, ENUMERATION_CAP)


def read_edge_list(path: str | Path) -> Graph:
    """Read "u v" lines with 1-indexed vertices; a lone vertex on a line is isolated."""
    try:
        g = nx.read_adjlist(path, comments="#", nodetype=int)
    except (OSError, TypeError, ValueError) as error:
        raise InvalidInputError(f"Could not read edge list: {error}", str(path)) from error
    if g.number_of_nodes() == 0:
        raise InvalidInputError("Edge list has no vertices.", str(path))
    vertices = max(g.nodes)
    if min(g.nodes) < 1:
        raise InvalidInputError("Vertices are numbered from 1.", str(path))
    return Graph.from_edges(vertices, ((u - 1, v - 1) for u, v in g.edges))


class GraphInstance(HopfInstance):
    """Unlabeled simple graphs; the product is disjoint union."""
    name = "graph"
    kind = AlgebraKind.POLYNOMIAL

    def __init__(self, max_degree: int = 5, cap: int = CANONICAL_CAP) -> None:
        super().__init__(max_degree)
        self.cap = cap

    def generator_for(self, g: Graph) -> GeneratorId:
        if not g.is_connected():
            raise InvalidInputError("Graph generators are connected.", g.bit_string())
        canonical = graph_canonicalize(g, self.cap)
        return GeneratorId(canonical.vertices, canonical.bits(),
                           f"G{canonical.vertices}:{canonical.bit_string()}", canonical)

    def state(self, g: Graph) -> Monomial:
        return Monomial.of(self.generator_for(g.induced(c)) for c in g.components())

    def graph_of(self, b: Monomial) -> Graph:
        return disjoint_union(c.payload for c in b.letters)

    def generators(self, degree: int) -> list[GeneratorId]:
        _check_enumerable(degree)
        return sorted({self.generator_for(g) for g in all_graphs(degree) if g.is_connected()})

    def generator_coproduct(self, c: GeneratorId) -> LinComb[Tensor]:
        g: Graph = c.payload
        vertices = range(g.vertices)
        return LinComb.accumulate(
            ((self.state(g.induced([v for v in vertices if mask >> v & 1])),
              self.state(g.induced([v for v in vertices if not mask >> v & 1]))), 1)
            for mask in range(1 << g.vertices))

    # Color every vertex uniformly and drop bichromatic edges
    def sample_step(self, b: Monomial, a: int, rng) -> Monomial:
        g = self.graph_of(b)
        colors = rng.integers(0, a, size=g.vertices)
        kept = frozenset((u, v) for u, v in g.edges if colors[u] == colors[v])
        return self.state(Graph(g.vertices, kept))

    def describe(self) -> dict[str, object]:
        return super().describe() | {"canonical_cap": self.cap}


class LabeledGraphInstance(HopfInstance):
    """Graphs on {1..n}; the product shifts the labels of the right factor."""
    name = "labeled-graph"
    kind = AlgebraKind.FREE_COCOMMUTATIVE

    def __init__(self, max_degree: int = 5) -> None:
        super().__init__(max_degree)

    def generator_for(self, g: Graph) -> GeneratorId:
        if g.vertices == 0 or g.cut_indices():
            raise InvalidInputError("Labeled graph generators admit no cut.", g.bit_string())
        return GeneratorId(g.vertices, g.bits(), f"L{g.vertices}:{g.bit_string()}", g)

    # Split at every cut index; the pieces are the generator factors
    def state(self, g: Graph) -> Word:
        if g.vertices == 0:
            return Word()
        bounds = [0] + g.cut_indices() + [g.vertices]
        return Word(tuple(self.generator_for(g.induced(range(bounds[i], bounds[i + 1])))
                          for i in range(len(bounds) - 1)))

    def graph_of(self, w: Word) -> Graph:
        return disjoint_union(c.payload for c in w.letters)

    def generators(self, degree: int) -> list[GeneratorId]:
        _check_enumerable(degree)
        return sorted(self.generator_for(g) for g in all_graphs(degree)
                      if not g.cut_indices())

    def generator_coproduct(self, c: GeneratorId) -> LinComb[Tensor]:
        g: Graph = c.payload
        vertices = range(g.vertices)
        return LinComb.accumulate(
            ((self.state(g.induced([v for v in vertices if mask >> v & 1])),
              self.state(g.induced([v for v in vertices if not mask >> v & 1]))), 1)
            for mask in range(1 << g.vertices))

    # Colors are read in order: color 0 becomes the lowest labels
    def sample_step(self, b: Word, a: int, rng) -> Word:
        g = self.graph_of(b)
        colors = rng.integers(0, a, size=g.vertices)
        pieces = [g.induced([v for v in range(g.vertices) if colors[v] == color])
                  for color in range(a)]
        return self.state(disjoint_union(pieces))
