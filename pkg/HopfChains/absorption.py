# HopfChains/absorption.py
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
# Absorption probabilities through generalised chromatic quasisymmetric
# functions. The coefficient of M_α counts the ways to break a state into
# pieces of sizes α that each factor into chosen generators; evaluating at
# a copies of 1/a gives the chance of reaching such a state in one step.
# For graphs this is Stanley's chromatic symmetric function, and for
# simplicial complexes absorption reduces to the chromatic polynomial of
# the 1-skeleton.
from __future__ import annotations
import logging
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import combinations, product
from math import comb, prod
from typing import Iterable, Sequence
from sympy import Poly, symbols
from HopfChains.algebra import (BasisElement, Composition, GeneratorId, ONE, ZERO,
                                compositions_of, format_rational)
from HopfChains.chain import TransitionMatrix, markov_instance
from HopfChains.errors import InvalidInputError, UnsupportedSizeError
from HopfChains.graphs import Graph, GraphInstance, graph_canonicalize
from HopfChains.hopf import HopfInstance
from HopfChains.simplicial import SimplicialComplex

log = logging.getLogger(__name__)

SIMPLEX_CAP = 10
x = symbols("x")


@dataclass(frozen=True)
class QuasisymFunction:
    degree: int
    coefficients: dict[Composition, Fraction]  # on M_α, α a composition of degree

    def __getitem__(self, alpha: Sequence[int]) -> Fraction:
        return self.coefficients.get(tuple(alpha), ZERO)

    def evaluate(self, values: Sequence[Fraction | int]) -> Fraction:
        """Sum of c_α M_α at the given finite list of variables."""
        total = ZERO
        for alpha, c in self.coefficients.items():
            monomials = sum((prod((Fraction(values[i]) ** part for i, part in zip(chosen, alpha)),
                                  start=Fraction(1))
                             for chosen in combinations(range(len(values)), len(alpha))), ZERO)
            total += c * monomials
        return total

    def evaluate_uniform(self, a: int) -> Fraction:
        """The value at a copies of 1/a followed by zeros."""
        return sum((c * comb(a, len(alpha)) for alpha, c in self.coefficients.items()),
                   ZERO) / Fraction(a) ** self.degree

    def is_symmetric(self) -> bool:
        return all(self[alpha] == self[tuple(sorted(alpha, reverse=True))]
                   for alpha in compositions_of(self.degree))

    def as_json(self) -> dict[str, str]:
        return {",".join(str(p) for p in alpha): format_rational(c)
                for alpha, c in sorted(self.coefficients.items())}


@dataclass(frozen=True)
class CharacterSpec:
    """ζ equal to 1 on the chosen generators and 0 on the others, multiplicative."""
    generators: frozenset[GeneratorId]

    def __post_init__(self) -> None:
        if not self.generators:
            raise InvalidInputError("The character needs at least one generator.")

    @classmethod
    def of(cls, generators: Iterable[GeneratorId]) -> CharacterSpec:
        return cls(frozenset(generators))

    def __call__(self, b: BasisElement) -> int:
        return int(all(c in self.generators for c in b.letters))

    def labels(self) -> list[str]:
        return sorted(c.label for c in self.generators)


def chromatic_quasisym(instance: HopfInstance, b: BasisElement,
                       spec: CharacterSpec) -> QuasisymFunction:
    """χ_b in the rescaled basis, from the reduced iterated coproducts of b.

    Coassociativity lets the first piece be split off with an ordinary
    coproduct, so χ is built from the compositions of each remaining piece."""
    markov = markov_instance(instance)
    if b.degree == 0:
        return QuasisymFunction(0, {})
    found: dict[BasisElement, dict[Composition, Fraction]] = {}

    def tails(y: BasisElement) -> dict[Composition, Fraction]:
        if y not in found:
            terms: dict[Composition, Fraction] = {(y.degree,): ONE} if spec(y) else {}
            for (piece, rest), eta in markov.coproduct(y).items():
                if piece.degree == 0 or rest.degree == 0 or not spec(piece):
                    continue
                for alpha, c in tails(rest).items():
                    key = (piece.degree,) + alpha
                    terms[key] = terms.get(key, ZERO) + eta * c
            found[y] = terms
        return found[y]

    return QuasisymFunction(b.degree, {alpha: c for alpha, c in tails(b).items() if c})


def absorption_probability(instance: HopfInstance, b: BasisElement, a: int,
                           spec: CharacterSpec) -> Fraction:
    """Chance that one a-step from b lands on a product of the chosen generators."""
    if a < 1:
        raise InvalidInputError("The number of pieces a must be at least 1.", a)
    if b.degree == 0:
        return Fraction(1)
    probability = chromatic_quasisym(instance, b, spec).evaluate_uniform(a)
    log.debug("absorption of %s at a=%d: %s", b.label, a, format_rational(probability))
    return probability


def absorbed_mass(K: TransitionMatrix, b: BasisElement, spec: CharacterSpec) -> Fraction:
    """The same chance read off a transition matrix row."""
    return sum((p for target, p in K.row(b).items() if spec(target)), ZERO)


# Chromatic polynomials

_MEMO_CANONICAL = 6


def _chromatic(g: Graph) -> Poly:
    if g.vertices == 0:
        return Poly(1, x)
    parts = g.components()
    if len(parts) > 1:
        return prod((_chromatic(g.induced(part)) for part in parts), start=Poly(1, x))
    return _connected_chromatic(graph_canonicalize(g) if g.vertices <= _MEMO_CANONICAL else g)


@lru_cache(maxsize=4096)
def _connected_chromatic(g: Graph) -> Poly:
    edges, vertices = len(g.edges), g.vertices
    if edges == vertices - 1:
        return Poly(x * (x - 1) ** edges, x)
    if edges == vertices * (vertices - 1) // 2:
        return Poly(prod((x - i for i in range(vertices)), start=1), x)
    e = min(g.edges)
    return _chromatic(g.delete_edge(e)) - _chromatic(g.contract_edge(e))


def chromatic_polynomial(g: Graph) -> Poly:
    """Proper colorings as a polynomial in the number of colors, by deletion and contraction."""
    if g.vertices > SIMPLEX_CAP:
        raise UnsupportedSizeError("Chromatic polynomials are computed for small graphs only.",
                                   g.vertices, SIMPLEX_CAP)
    return _chromatic(g)


def brute_force_colorings(g: Graph, colors: int) -> int:
    return sum(1 for coloring in product(range(colors), repeat=g.vertices)
               if all(coloring[u] != coloring[v] for u, v in g.edges))


def simplex_absorption(complex_: SimplicialComplex, k: int) -> Fraction:
    """Chance that k binary breaks leave only isolated points: p(2^k) / 2^(nk)."""
    if k < 0:
        raise InvalidInputError("Steps must be nonnegative.", k)
    skeleton = complex_.skeleton()
    if skeleton.vertices > SIMPLEX_CAP:
        raise UnsupportedSizeError("Chromatic polynomials are computed for small graphs only.",
                                   skeleton.vertices, SIMPLEX_CAP)
    colorings = int(chromatic_polynomial(skeleton).eval(2 ** k))
    return Fraction(colorings, 2 ** (skeleton.vertices * k))


def stanley_chromatic(g: Graph) -> QuasisymFunction:
    """χ_G with ζ supported on the single vertex."""
    instance = GraphInstance(max_degree=max(g.vertices, 1))
    point = instance.generator_for(Graph.empty(1))
    return chromatic_quasisym(instance, instance.state(g), CharacterSpec.of([point]))
