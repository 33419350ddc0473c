# HopfChains/simplicial.py
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
# Simplicial complexes up to isomorphism. Breaking a complex colors its
# vertices and keeps, for each color, the faces whose vertices all share
# that color. The algebra is polynomial on the complexes with a connected
# 1-skeleton, so repeated breaking ends at n isolated points.
from __future__ import annotations
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from pathlib import Path
from typing import Iterable, Iterator, Sequence
from HopfChains.algebra import GeneratorId, LinComb, Monomial, Tensor
from HopfChains.errors import InvalidInputError, UnsupportedSizeError
from HopfChains.graphs import CANONICAL_CAP, ENUMERATION_CAP, Graph
from HopfChains.hopf import AlgebraKind, HopfInstance


def _maximal(faces: Iterable[frozenset[int]]) -> frozenset[frozenset[int]]:
    faces = set(faces)
    return frozenset(f for f in faces if not any(f < other for other in faces))


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: int
    facets: frozenset[frozenset[int]]  # maximal faces, 0-indexed

    @classmethod
    def from_faces(cls, vertices: int, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
        listed = [frozenset(face) for face in faces]
        for face in listed:
            if not face:
                raise InvalidInputError("Faces are nonempty.", face)
            if not all(0 <= v < vertices for v in face):
                raise InvalidInputError("Face vertex outside the vertex set.", sorted(face))
        covered = set().union(*listed) if listed else set()
        listed.extend(frozenset((v,)) for v in range(vertices) if v not in covered)
        return cls(vertices, _maximal(listed))

    @classmethod
    def simplex(cls, vertices: int) -> SimplicialComplex:
        return cls.from_faces(vertices, [range(vertices)])

    @classmethod
    def points(cls, vertices: int) -> SimplicialComplex:
        return cls.from_faces(vertices, [])

    @classmethod
    def from_graph(cls, graph: Graph) -> SimplicialComplex:
        return cls.from_faces(graph.vertices, graph.edges)

    def all_faces(self) -> set[frozenset[int]]:
        faces: set[frozenset[int]] = set()
        for facet in self.facets:
            members = sorted(facet)
            for size in range(1, len(members) + 1):
                faces.update(frozenset(c) for c in combinations(members, size))
        return faces

    def induced(self, subset: Sequence[int]) -> SimplicialComplex:
        chosen = sorted(subset)
        position = {v: i for i, v in enumerate(chosen)}
        faces = [frozenset(position[v] for v in facet if v in position) for facet in self.facets]
        return SimplicialComplex(len(chosen), _maximal(f for f in faces if f))

    def skeleton(self) -> Graph:
        return Graph.from_edges(self.vertices, {pair for facet in self.facets
                                                for pair in combinations(sorted(facet), 2)})

    def components(self) -> list[list[int]]:
        return self.skeleton().components()

    def is_connected(self) -> bool:
        return self.vertices > 0 and len(self.components()) == 1

    def relabeled(self, mapping: Sequence[int]) -> SimplicialComplex:
        return SimplicialComplex(self.vertices,
                                 frozenset(frozenset(mapping[v] for v in f) for f in self.facets))

    def masks(self) -> tuple[int, ...]:
        return tuple(sorted(sum(1 << v for v in facet) for facet in self.facets))


def disjoint_union(complexes: Iterable[SimplicialComplex]) -> SimplicialComplex:
    vertices = 0
    facets: set[frozenset[int]] = set()
    for c in complexes:
        facets |= {frozenset(v + vertices for v in f) for f in c.facets}
        vertices += c.vertices
    return SimplicialComplex(vertices, frozenset(facets))


def complex_canonicalize(c: SimplicialComplex, cap: int = CANONICAL_CAP) -> SimplicialComplex:
    """The relabeling with the least sorted tuple of facet bitmasks."""
    if c.vertices > cap:
        raise UnsupportedSizeError("Complex too large to canonicalize by brute force.",
                                   c.vertices, cap)
    return _canonical_form(c)


@lru_cache(maxsize=65536)
def _canonical_form(c: SimplicialComplex) -> SimplicialComplex:
    return min((c.relabeled(order) for order in permutations(range(c.vertices))),
               key=SimplicialComplex.masks)


def all_complexes(vertices: int) -> Iterator[SimplicialComplex]:
    """Every complex on the labeled vertex set, each vertex present as a face."""
    candidates = [frozenset(c) for size in range(2, vertices + 1)
                  for c in combinations(range(vertices), size)]

    def extend(index: int, chosen: set[frozenset[int]]) -> Iterator[SimplicialComplex]:
        if index == len(candidates):
            singletons = [frozenset((v,)) for v in range(vertices)]
            yield SimplicialComplex(vertices, _maximal(list(chosen) + singletons))
            return
        face = candidates[index]
        yield from extend(index + 1, chosen)
        boundary = [face - {v} for v in face]
        if all(len(b) < 2 or b in chosen for b in boundary):
            chosen.add(face)
            yield from extend(index + 1, chosen)
            chosen.remove(face)

    yield from extend(0, set())


def read_face_list(path: str | Path) -> SimplicialComplex:
    """One maximal face per line as 1-indexed vertex numbers; '#' starts a comment."""
    faces: list[list[int]] = []
    try:
        with open(path, "r") as f:
            for line in f:
                line = line.split("#", 1)[0].strip()
                if line:
                    faces.append([int(token) for token in line.replace(",", " ").split()])
    except (OSError, ValueError) as error:
        raise InvalidInputError(f"Could not read face list: {error}", str(path)) from error
    if not faces:
        raise InvalidInputError("Face list has no faces.", str(path))
    vertices = max(max(face) for face in faces)
    if min(min(face) for face in faces) < 1:
        raise InvalidInputError("Vertices are numbered from 1.", str(path))
    return SimplicialComplex.from_faces(vertices, [[v - 1 for v in face] for face in faces])


class SimplicialInstance(HopfInstance):
    name = "simplicial"
    kind = AlgebraKind.POLYNOMIAL

    def __init__(self, max_degree: int = 5, cap: int = CANONICAL_CAP) -> None:
        super().__init__(max_degree)
        self.cap = cap

    def generator_for(self, c: SimplicialComplex) -> GeneratorId:
        if not c.is_connected():
            raise InvalidInputError("Complex generators have a connected 1-skeleton.", c.masks())
        canonical = complex_canonicalize(c, self.cap)
        masks = canonical.masks()
        return GeneratorId(canonical.vertices, masks,
                           f"C{canonical.vertices}:" + ".".join(str(m) for m in masks), canonical)

    def state(self, c: SimplicialComplex) -> Monomial:
        return Monomial.of(self.generator_for(c.induced(part)) for part in c.components())

    def complex_of(self, b: Monomial) -> SimplicialComplex:
        return disjoint_union(g.payload for g in b.letters)

    def point(self) -> GeneratorId:
        return self.generator_for(SimplicialComplex.points(1))

    def generators(self, degree: int) -> list[GeneratorId]:
        if degree > ENUMERATION_CAP:
            raise UnsupportedSizeError("Enumerating every complex is limited to small vertex counts.",
                                       degree, ENUMERATION_CAP)
        return sorted({self.generator_for(c) for c in all_complexes(degree) if c.is_connected()})

    def generator_coproduct(self, c: GeneratorId) -> LinComb[Tensor]:
        x: SimplicialComplex = c.payload
        vertices = range(x.vertices)
        return LinComb.accumulate(
            ((self.state(x.induced([v for v in vertices if mask >> v & 1])),
              self.state(x.induced([v for v in vertices if not mask >> v & 1]))), 1)
            for mask in range(1 << x.vertices))

    def sample_step(self, b: Monomial, a: int, rng) -> Monomial:
        x = self.complex_of(b)
        colors = rng.integers(0, a, size=x.vertices)
        pieces = [x.induced([v for v in range(x.vertices) if colors[v] == color])
                  for color in range(a)]
        return self.state(disjoint_union(pieces))

    def describe(self) -> dict[str, object]:
        return super().describe() | {"canonical_cap": self.cap}
