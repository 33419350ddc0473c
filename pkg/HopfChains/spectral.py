# HopfChains/spectral.py
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
# Full left and right eigenbases of a Hopf power chain in exact arithmetic.
# Left eigenvectors are products of Eulerian idempotents of the generators
# (polynomial case) or symmetrized Lie brackets of them (free case). Right
# eigenvectors are the dual basis. Eigenvalues are tracked by their integer
# exponent k, the eigenvalue of the chain being a^(k-n) for every a.
from __future__ import annotations
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from math import comb, factorial
from typing import Sequence
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError
from sympy.utilities.iterables import multiset_permutations
from HopfChains.algebra import (BasisElement, IntegerMatrix, LinComb, Word, ONE, ZERO,
                                exact_inverse, multiplicity_factorial)
from HopfChains.chain import (Direction, TransitionMatrix, chain_states, left_eigen_failures,
                              markov_instance, right_eigen_failures)
from HopfChains.errors import InternalInconsistencyError, NotSupportedError
from HopfChains.free import shuffle_product
from HopfChains.hopf import AlgebraKind, Grading, HopfInstance
from HopfChains.lyndon import is_lyndon, lyndon_factorize, sym

log = logging.getLogger(__name__)


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class EigenVector:
    side: Side
    index: BasisElement
    coefficients: LinComb[BasisElement]
    exponent: int

    def value(self, b: BasisElement) -> Fraction:
        return self.coefficients[b]

    def as_dict(self) -> dict[BasisElement, Fraction]:
        return self.coefficients.as_dict()


def _rows(vectors: Sequence[EigenVector], states: Sequence[BasisElement]) -> IntegerMatrix:
    position = {s: i for i, s in enumerate(states)}
    return IntegerMatrix.from_sparse([{position[x]: c for x, c in v.coefficients.items()}
                                      for v in vectors], len(states))


@dataclass(frozen=True)
class EigenSystem:
    instance_name: str
    n: int
    states: tuple[BasisElement, ...]
    left: tuple[EigenVector, ...]
    right: tuple[EigenVector, ...]

    # Entry (i, j) is f_i evaluated on g_j
    def pairing_matrix(self) -> IntegerMatrix:
        return _rows(self.right, self.states) @ _rows(self.left, self.states).transpose()

    def pairing(self) -> list[list[Fraction]]:
        return self.pairing_matrix().to_rows()

    @cached_property
    def certificate(self) -> bool:
        return duality_certificate(self)

    def exponents(self) -> Counter[int]:
        return Counter(g.exponent for g in self.left)


def _checked_support(vector: LinComb[BasisElement], allowed: set[BasisElement],
                     b: BasisElement) -> LinComb[BasisElement]:
    stray = [x for x in vector if x not in allowed]
    if stray:
        raise InternalInconsistencyError("Eigenvector leaves the state set.",
                                         f"{b.label} -> {stray[0].label}")
    return vector


def _substitute_primitives(markov: HopfInstance, skeleton: LinComb[Word],
                           cache: dict) -> LinComb[BasisElement]:
    """Evaluate a polynomial in the letters with each letter c replaced by e(c)."""
    letters = {c for u in skeleton for c in u.letters}
    for c in letters:
        if c not in cache:
            cache[c] = markov.eulerian_idempotent(markov.element((c,)))
    # Primitive letters are fixed by e
    if all(cache[c] == LinComb.single(markov.element((c,))) for c in letters):
        return skeleton.map_keys(lambda u: markov.element(u.letters))
    total: LinComb[BasisElement] = LinComb()
    for u, coefficient in skeleton.items():
        term = LinComb.single(markov.unit(), coefficient)
        for c in u.letters:
            term = markov.multiply(term, cache[c])
        total = total + term
    return total


def _left_vector(markov: HopfInstance, b: BasisElement, cache: dict) -> tuple[LinComb, int]:
    match markov.kind:
        case AlgebraKind.POLYNOMIAL:
            g = LinComb.single(markov.unit())
            for c in b.letters:
                if c not in cache:
                    cache[c] = markov.eulerian_idempotent(markov.element((c,)))
                g = markov.multiply(g, cache[c])
            return g, b.length
        case AlgebraKind.FREE_COCOMMUTATIVE:
            return _substitute_primitives(markov, sym(b), cache), len(lyndon_factorize(b))
        case _:
            raise NotSupportedError("No eigenbasis for this kind of algebra.", markov.kind)


def left_eigenbasis(instance: HopfInstance, n: int,
                    states: Sequence[BasisElement] | None = None) -> list[EigenVector]:
    markov = markov_instance(instance)
    states = list(states) if states is not None else chain_states(markov, n)
    allowed = set(states)
    cache: dict = {}
    vectors = []
    for b in states:
        g, exponent = _left_vector(markov, b, cache)
        vectors.append(EigenVector(Side.LEFT, b, _checked_support(g, allowed, b), exponent))
    log.info("left eigenbasis of %s in degree %d: %d vectors", markov.name, n, len(vectors))
    return vectors


def _lyndon_key(u: Word) -> tuple:
    return u.length, u.letters


def unitriangular_inverse(rows: Sequence[dict[int, Fraction]]) -> list[dict[int, Fraction]] | None:
    """Inverse of an upper unitriangular matrix given by sparse rows; None for any other matrix."""
    if any(row.get(i) != 1 or any(j < i for j in row) for i, row in enumerate(rows)):
        return None
    inverse: list[dict[int, Fraction]] = [{} for _ in rows]
    for i in reversed(range(len(rows))):
        # A X = I gives X_i = e_i - sum over j > i of A_ij X_j
        row: dict[int, Fraction] = {i: ONE}
        for j, entry in rows[i].items():
            if j != i:
                for k, value in inverse[j].items():
                    row[k] = row.get(k, ZERO) - entry * value
        inverse[i] = {k: v for k, v in row.items() if v}
    return inverse


class _LyndonDuals:
    """Right eigenvectors of Lyndon words, one graded component at a time.

    The Eulerian idempotent maps a component onto its primitives, where the
    left vectors g_l of the Lyndon words l form a basis and every other left
    vector is sent to zero. So f_l(x) is the coordinate of g_l in e(x),
    read off the Lyndon word coefficients of e(x)."""

    def __init__(self, markov: HopfInstance) -> None:
        self.markov = markov
        self._duals: dict[Word, LinComb[BasisElement]] = {}
        self._cache: dict = {}

    def __getitem__(self, l: Word) -> LinComb[BasisElement]:
        if l not in self._duals:
            self._solve(l)
        return self._duals[l]

    def _solve(self, l: Word) -> None:
        component = self.markov.component(l)
        lyndons = sorted((u for u in component if is_lyndon(u)), key=_lyndon_key)
        column = {u: j for j, u in enumerate(lyndons)}
        # Row i: the Lyndon word coefficients of g for lyndons[i]
        block = [{column[u]: c for u, c in _left_vector(self.markov, v, self._cache)[0].items()
                  if u in column} for v in lyndons]
        inverse = unitriangular_inverse(block)
        if inverse is None:
            log.debug("Lyndon block of %s is not unitriangular; inverting it densely", l.label)
            dense = [[row.get(j, ZERO) for j in range(len(lyndons))] for row in block]
            try:
                inverse = [{j: v for j, v in enumerate(row) if v} for row in exact_inverse(dense)]
            except (DMNonInvertibleMatrixError, ZeroDivisionError) as error:
                raise InternalInconsistencyError("Lyndon brackets are not independent.",
                                                 l.label) from error
        coordinates = [{column[u]: c for u, c in self.markov.eulerian_idempotent(x).items()
                        if u in column} for x in component]
        duals = (IntegerMatrix.from_sparse(coordinates, len(lyndons))
                 @ IntegerMatrix.from_sparse(inverse, len(lyndons)))
        for j, u in enumerate(lyndons):
            self._duals[u] = LinComb({x: duals.entry(i, j) for i, x in enumerate(component)
                                      if duals.numerators[i, j] != 0})
        log.debug("solved %d Lyndon duals on a component of size %d", len(lyndons), len(component))


def _polynomial_right(markov: HopfInstance, b: BasisElement,
                      states: Sequence[BasisElement]) -> LinComb[BasisElement]:
    distinct = sorted(set(b.letters))
    index = {c: i for i, c in enumerate(distinct)}
    orderings = [tuple(markov.element((distinct[i],)) for i in p)
                 for p in multiset_permutations([index[c] for c in b.letters])]
    scale = Fraction(1, factorial(b.length))
    values = {}
    for x in states:
        if x.length > b.length:
            continue
        total = sum((markov.tensor_coefficient(x, pieces) for pieces in orderings), ZERO)
        if total:
            values[x] = total * scale
    return LinComb(values)


def _free_right(markov: HopfInstance, b: Word, states: Sequence[BasisElement],
                duals: _LyndonDuals) -> LinComb[BasisElement]:
    factors = lyndon_factorize(b)
    scale = Fraction(1, factorial(len(factors)) * multiplicity_factorial(factors))
    factor_duals = [duals[l] for l in factors]
    if markov.primitive_letters:
        # Deshuffling is dual to the shuffle product
        product = factor_duals[0]
        for dual in factor_duals[1:]:
            product = shuffle_product(product, dual)
        return LinComb({x: product[x] * scale for x in states if x in product})
    grading = markov.grading(b)
    targets = tuple(markov.grading(l) for l in factors)
    values = {}
    for x in states:
        if markov.grading(x) != grading:
            continue
        if len(factors) == 1:
            value = factor_duals[0][x]
        else:
            value = ZERO
            for tensor, coefficient in markov.projected_coproduct(x, targets).items():
                term = coefficient
                for piece, dual in zip(tensor, factor_duals):
                    term *= dual[piece]
                    if term == 0:
                        break
                value += term
            value *= scale
        if value:
            values[x] = value
    return LinComb(values)


def right_eigenbasis(instance: HopfInstance, n: int,
                     states: Sequence[BasisElement] | None = None) -> list[EigenVector]:
    markov = markov_instance(instance)
    states = list(states) if states is not None else chain_states(markov, n)
    vectors = []
    match markov.kind:
        case AlgebraKind.POLYNOMIAL:
            for b in states:
                vectors.append(EigenVector(Side.RIGHT, b, _polynomial_right(markov, b, states),
                                           b.length))
        case AlgebraKind.FREE_COCOMMUTATIVE:
            duals = _LyndonDuals(markov)
            for b in states:
                vectors.append(EigenVector(Side.RIGHT, b, _free_right(markov, b, states, duals),
                                           len(lyndon_factorize(b))))
        case _:
            raise NotSupportedError("No eigenbasis for this kind of algebra.", markov.kind)
    log.info("right eigenbasis of %s in degree %d: %d vectors", markov.name, n, len(vectors))
    return vectors


def eigen_system(instance: HopfInstance, n: int,
                 states: Sequence[BasisElement] | None = None) -> EigenSystem:
    markov = markov_instance(instance)
    states = tuple(states) if states is not None else tuple(chain_states(markov, n))
    return EigenSystem(markov.name, n, states,
                       tuple(left_eigenbasis(markov, n, states)),
                       tuple(right_eigenbasis(markov, n, states)))


def duality_certificate(system: EigenSystem) -> bool:
    passed = system.pairing_matrix().is_identity()
    log.info("duality certificate for %s n=%d: %s", system.instance_name, system.n,
             "pass" if passed else "FAIL")
    return passed


@dataclass(frozen=True)
class EigenReport:
    passed: bool
    failures: tuple[tuple[str, str], ...]  # (side, basis label)


def eigen_equation_check(K: TransitionMatrix, system: EigenSystem) -> EigenReport:
    """Check g K = β g and K f = β f exactly, β = a^(k-n)."""
    if K.direction is Direction.DUAL:
        K = K.transpose()
    left = left_eigen_failures(K, [g.as_dict() for g in system.left],
                               [K.eigenvalue(g.exponent) for g in system.left])
    right = right_eigen_failures(K, [f.as_dict() for f in system.right],
                                 [K.eigenvalue(f.exponent) for f in system.right])
    failures = ([(Side.LEFT.value, system.left[i].index.label) for i in left]
                + [(Side.RIGHT.value, system.right[i].index.label) for i in right])
    return EigenReport(not failures, tuple(failures))


def spectral_power(system: EigenSystem, a: int, steps: int) -> list[list[Fraction]]:
    """K^steps rebuilt as the sum over b of β_b^steps f_b g_b."""
    size = len(system.states)
    position = {s: i for i, s in enumerate(system.states)}
    result = [[ZERO] * size for _ in range(size)]
    for f, g in zip(system.right, system.left):
        weight = Fraction(a) ** ((f.exponent - system.n) * steps)
        for x, fx in f.coefficients.items():
            for y, gy in g.coefficients.items():
                result[position[x]][position[y]] += weight * fx * gy
    return result


def _add(h: Grading, g: Grading) -> Grading:
    return tuple(x + y for x, y in zip(h, g))


def _fits(h: Grading, target: Grading) -> bool:
    return all(x <= t for x, t in zip(h, target))


def _series_coefficients(atoms: dict[Grading, int], target: Grading) -> dict[int, int]:
    """Coefficients of x^target y^k in the product over atoms of (1 - y x^g)^(-d_g)."""
    zero = tuple(0 for _ in target)
    series: dict[tuple[Grading, int], int] = {(zero, 0): 1}
    for g, d in atoms.items():
        expanded: dict[tuple[Grading, int], int] = {}
        for (h, k), c in series.items():
            m, current = 0, h
            while _fits(current, target):
                key = (current, k + m)
                expanded[key] = expanded.get(key, 0) + c * comb(d + m - 1, m)
                m += 1
                current = _add(current, g)
        series = expanded
    return {k: c for (h, k), c in series.items() if h == target}


def multiplicities(instance: HopfInstance, n: int) -> dict[int, int]:
    """Eigenvalue multiplicities by exponent, from the generating function."""
    markov = markov_instance(instance)
    counts: Counter[int] = Counter()
    for target in markov.grading_targets(n):
        if markov.kind is AlgebraKind.POLYNOMIAL:
            atoms: dict[Grading, int] = {}
            for degree in range(1, n + 1):
                for c in markov.generators(degree):
                    grading = markov.grading(markov.element((c,)))
                    if _fits(grading, target):
                        atoms[grading] = atoms.get(grading, 0) + 1
        else:
            atoms = markov.lyndon_counts(target)
        counts.update(_series_coefficients(atoms, target))
    return {k: c for k, c in sorted(counts.items()) if c}
