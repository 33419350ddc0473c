# HopfChains/hopf.py
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
# The Hopf algebra contract every instance implements, and the generic maps
# built on top of it: products, iterated and reduced coproducts, the Hopf
# powers and the Eulerian idempotents. An instance only has to say what its
# generators are and how each generator breaks; everything else is derived
# by multiplicativity of the coproduct.
import logging
from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Iterator
from HopfChains.algebra import (BasisElement, GeneratorId, LinComb, Monomial, Tensor, Word,
                                ONE, ZERO, basis_sort_key)
from HopfChains.errors import InvalidInputError, UnsupportedSizeError
from HopfChains.lyndon import is_lyndon

log = logging.getLogger(__name__)

type Grading = tuple[int, ...]


class AlgebraKind(Enum):
    POLYNOMIAL = "polynomial"
    FREE_COCOMMUTATIVE = "free-cocommutative"


class HopfInstance:
    """A graded connected Hopf algebra given by generators and their coproducts.

    Polynomial instances are commutative with a monomial basis; free
    cocommutative instances are free associative with a basis of words.
    Subclasses implement `generators` and `generator_coproduct`; the rest
    of the contract has working defaults."""
    name: str = "hopf"
    kind: AlgebraKind = AlgebraKind.POLYNOMIAL
    # Every generator is a primitive letter of degree one: the coproduct
    # deshuffles words and the Markov rescaling is the identity.
    primitive_letters: bool = False

    # The caches below are write-once memos keyed by basis elements of degree
    # at most max_degree, so they are bounded by the instance and die with it.
    def __init__(self, max_degree: int) -> None:
        if max_degree < 1:
            raise InvalidInputError("The working degree must be positive.", max_degree)
        self.max_degree = max_degree
        self._rescaled: "HopfInstance | None" = None
        self._splits: dict[BasisElement, dict[BasisElement, list[tuple[BasisElement, Fraction]]]] = {}
        self._tensor_coefficients: dict[tuple[BasisElement, Tensor], Fraction] = {}
        self._coproducts: dict[GeneratorId, LinComb[Tensor]] = {}
        self._generator_powers: dict[tuple[GeneratorId, int], dict[Tensor, Fraction]] = {}
        self._hopf_powers: dict[tuple[BasisElement, int], LinComb[BasisElement]] = {}
        self._eulerian: dict[BasisElement, LinComb[BasisElement]] = {}
        self._sum_preserving: dict[tuple[int, int], bool] = {}

    # Instance data, supplied by subclasses

    def generators(self, degree: int) -> list[GeneratorId]:
        raise NotImplementedError

    def generator_coproduct(self, c: GeneratorId) -> LinComb[Tensor]:
        raise NotImplementedError

    # Additive grading used to prune iterated coproducts. The default is the
    # degree alone; instances with a finer grading override it.
    def grading(self, b: BasisElement) -> Grading:
        return (b.degree,)

    # Gradings whose components together make up H_n
    def grading_targets(self, n: int) -> list[Grading]:
        return [(n,)]

    # Lyndon words (free case) counted by grading, up to the target grading
    def lyndon_counts(self, target: Grading) -> dict[Grading, int]:
        counts: dict[Grading, int] = {}
        for degree in range(1, sum(target) + 1):
            for w in self.basis(degree):
                grading = self.grading(w)
                if all(g <= t for g, t in zip(grading, target)) and is_lyndon(w):
                    counts[grading] = counts.get(grading, 0) + 1
        return counts

    def sample_step(self, b: BasisElement, a: int, rng) -> BasisElement | None:
        return None

    def describe(self) -> dict[str, object]:
        return {"instance": self.name, "kind": self.kind.value, "max_degree": self.max_degree}

    # Basis elements

    def element(self, generators: Iterable[GeneratorId]) -> BasisElement:
        if self.kind is AlgebraKind.POLYNOMIAL:
            return Monomial.of(generators)
        return Word(tuple(generators))

    def unit(self) -> BasisElement:
        return self.element(())

    def product(self, b1: BasisElement, b2: BasisElement) -> BasisElement:
        return self.element(b1.letters + b2.letters)

    def factorize(self, b: BasisElement) -> list[GeneratorId]:
        return list(b.letters)

    def check_degree(self, n: int) -> None:
        if n < 0:
            raise InvalidInputError("Degrees are nonnegative.", n)
        if n > self.max_degree:
            raise UnsupportedSizeError("Degree is above the instance's working degree.",
                                       n, self.max_degree)

    def basis(self, n: int) -> list[BasisElement]:
        """The degree-n basis in canonical order."""
        self.check_degree(n)
        pool = sorted((c for d in range(1, n + 1) for c in self.generators(d)), reverse=True)
        if self.kind is AlgebraKind.POLYNOMIAL:
            found = [self.element(chosen) for chosen in _multisets(pool, 0, n, [])]
        else:
            found = [self.element(chosen) for chosen in _sequences(pool, n, [])]
        return sorted(found, key=basis_sort_key)

    def component(self, b: BasisElement) -> list[BasisElement]:
        """Basis elements sharing b's grading."""
        target = self.grading(b)
        return [u for u in self.basis(b.degree) if self.grading(u) == target]

    # Coproducts

    def coproduct(self, b: BasisElement) -> LinComb[Tensor]:
        return self.coproduct_iterated(b, 2)

    def coproduct_iterated(self, b: BasisElement, a: int) -> LinComb[Tensor]:
        if a < 1:
            raise InvalidInputError("Iterated coproducts need a >= 1.", a)
        return LinComb(self._iterated(b, a, None))

    def projected_coproduct(self, b: BasisElement, targets: tuple[Grading, ...]) -> LinComb[Tensor]:
        """Terms of the iterated coproduct whose components carry exactly the given gradings."""
        if not targets:
            raise InvalidInputError("A projected coproduct needs at least one component.")
        return LinComb(self._iterated(b, len(targets), targets))

    def reduced_coproduct_iterated(self, b: BasisElement, a: int) -> LinComb[Tensor]:
        if a < 1:
            raise InvalidInputError("Iterated coproducts need a >= 1.", a)
        if a > b.degree:
            return LinComb()
        terms = self._iterated(b, a, None)
        return LinComb({t: c for t, c in terms.items() if all(x.degree > 0 for x in t)})

    def tensor_coefficient(self, b: BasisElement, pieces: Tensor) -> Fraction:
        """Coefficient of pieces[0] ⊗ ... ⊗ pieces[-1] in the iterated coproduct of b.

        Peels off one tensor factor at a time through Δ, using
        coassociativity, so only ordinary coproducts are ever expanded."""
        if sum(piece.degree for piece in pieces) != b.degree:
            return ZERO
        if len(pieces) <= 1:
            return ONE if not pieces or pieces[0] == b else ZERO
        key = (b, pieces)
        if key not in self._tensor_coefficients:
            total = ZERO
            for rest, coefficient in self._split(b).get(pieces[0], ()):
                total += coefficient * self.tensor_coefficient(rest, pieces[1:])
            self._tensor_coefficients[key] = total
        return self._tensor_coefficients[key]

    # Δ(b) grouped by its left tensor factor
    def _split(self, b: BasisElement) -> dict[BasisElement, list[tuple[BasisElement, Fraction]]]:
        if b not in self._splits:
            grouped: dict[BasisElement, list[tuple[BasisElement, Fraction]]] = {}
            for (x, y), coefficient in self._iterated(b, 2, None).items():
                grouped.setdefault(x, []).append((y, coefficient))
            self._splits[b] = grouped
        return self._splits[b]

    def _generator_coproduct(self, c: GeneratorId) -> LinComb[Tensor]:
        if c not in self._coproducts:
            self._coproducts[c] = self.generator_coproduct(c)
        return self._coproducts[c]

    def _generator_power(self, c: GeneratorId, a: int) -> dict[Tensor, Fraction]:
        key = (c, a)
        if key not in self._generator_powers:
            if a == 1:
                terms = {(self.element((c,)),): ONE}
            else:
                terms: dict[Tensor, Fraction] = {}
                for (x, y), coefficient in self._generator_coproduct(c).items():
                    for tail, tail_coefficient in self._iterated(y, a - 1, None).items():
                        tensor = (x,) + tail
                        terms[tensor] = terms.get(tensor, ZERO) + coefficient * tail_coefficient
            self._generator_powers[key] = terms
        return self._generator_powers[key]

    # Iterated coproducts are computed generator by generator and multiplied
    # componentwise, optionally pruning components that outgrow their target.
    def _iterated(self, b: BasisElement, a: int,
                  targets: tuple[Grading, ...] | None) -> dict[Tensor, Fraction]:
        unit = self.unit()
        terms: dict[Tensor, Fraction] = {tuple(unit for _ in range(a)): ONE}
        for c in b.letters:
            terms = self._multiply_tensors(terms, self._generator_power(c, a), targets)
        if targets is not None:
            terms = {t: v for t, v in terms.items()
                     if all(self.grading(x) == g for x, g in zip(t, targets))}
        return terms

    def _multiply_tensors(self, left: dict[Tensor, Fraction], right: dict[Tensor, Fraction],
                          targets: tuple[Grading, ...] | None) -> dict[Tensor, Fraction]:
        result: dict[Tensor, Fraction] = {}
        for t1, c1 in left.items():
            for t2, c2 in right.items():
                tensor = tuple(self.product(x, y) for x, y in zip(t1, t2))
                if targets is not None and not all(self._fits(x, g)
                                                   for x, g in zip(tensor, targets)):
                    continue
                result[tensor] = result.get(tensor, ZERO) + c1 * c2
        return result

    def _fits(self, x: BasisElement, target: Grading) -> bool:
        if x.degree > sum(target):
            return False
        grading = self.grading(x)
        return len(grading) == len(target) and all(g <= t for g, t in zip(grading, target))

    # Hopf powers and idempotents

    def multiply_all(self, tensor: Tensor) -> BasisElement:
        return self.element(letter for x in tensor for letter in x.letters)

    def hopf_power(self, b: BasisElement, a: int) -> LinComb[BasisElement]:
        if a < 1:
            raise InvalidInputError("Hopf powers need a >= 1.", a)
        key = (b, a)
        if key not in self._hopf_powers:
            if self.kind is AlgebraKind.POLYNOMIAL and b.length > 1:
                # Commutative: the Hopf power is an algebra map
                result = LinComb.single(self.unit())
                for c in b.letters:
                    result = self.multiply(result, self.hopf_power(self.element((c,)), a))
            else:
                result = LinComb.accumulate((self.multiply_all(t), coefficient)
                                            for t, coefficient in self._iterated(b, a, None).items())
            self._hopf_powers[key] = result
        return self._hopf_powers[key]

    def multiply(self, x: LinComb[BasisElement], y: LinComb[BasisElement]) -> LinComb[BasisElement]:
        return x.times(y, self.product)

    def linear(self, x: LinComb[BasisElement],
               function: Callable[[BasisElement], LinComb[BasisElement]]) -> LinComb[BasisElement]:
        total: LinComb[BasisElement] = LinComb()
        for key, coefficient in x.items():
            total = total + function(key).scale(coefficient)
        return total

    def apply_power(self, x: LinComb[BasisElement], a: int) -> LinComb[BasisElement]:
        return self.linear(x, lambda b: self.hopf_power(b, a))

    def eulerian_idempotent(self, b: BasisElement) -> LinComb[BasisElement]:
        """e(b) = sum over a >= 1 of (-1)^(a-1)/a times m Δ̄^[a](b); zero in degree 0."""
        if b not in self._eulerian:
            totals: dict[BasisElement, Fraction] = {}
            for a in range(1, b.degree + 1):
                sign = Fraction((-1) ** (a - 1), a)
                for tensor, coefficient in self.reduced_coproduct_iterated(b, a).items():
                    key = self.multiply_all(tensor)
                    totals[key] = totals.get(key, ZERO) + sign * coefficient
            self._eulerian[b] = LinComb(totals)
        return self._eulerian[b]

    def higher_eulerian(self, b: BasisElement, i: int) -> LinComb[BasisElement]:
        if i < 1 or i > max(b.degree, 1):
            raise InvalidInputError("Higher Eulerian idempotents need 1 <= i <= deg(b).", i)
        total: LinComb[BasisElement] = LinComb()
        for tensor, coefficient in self.reduced_coproduct_iterated(b, i).items():
            term = LinComb.single(self.unit(), coefficient)
            for x in tensor:
                term = self.multiply(term, self.eulerian_idempotent(x))
            total = total + term
        return total.scale(Fraction(1, factorial(i)))

    def sum_preserving(self, n: int, a: int = 2) -> bool:
        """Whether every coefficient sum of a Hopf power in degree n equals a^n."""
        key = (n, a)
        if key not in self._sum_preserving:
            expected = Fraction(a ** n)
            offenders = [b for b in self.basis(n)
                         if self.hopf_power(b, a).coefficient_sum() != expected]
            if offenders:
                log.warning("%s is not sum preserving in degree %d (first offender %s)",
                            self.name, n, offenders[0].label)
            self._sum_preserving[key] = not offenders
        return self._sum_preserving[key]


def _multisets(pool: list[GeneratorId], start: int, remaining: int,
               chosen: list[GeneratorId]) -> Iterator[list[GeneratorId]]:
    if remaining == 0:
        yield list(chosen)
        return
    for i in range(start, len(pool)):
        c = pool[i]
        if c.degree <= remaining:
            chosen.append(c)
            yield from _multisets(pool, i, remaining - c.degree, chosen)
            chosen.pop()


def _sequences(pool: list[GeneratorId], remaining: int,
               chosen: list[GeneratorId]) -> Iterator[list[GeneratorId]]:
    if remaining == 0:
        yield list(chosen)
        return
    for c in pool:
        if c.degree <= remaining:
            chosen.append(c)
            yield from _sequences(pool, remaining - c.degree, chosen)
            chosen.pop()
