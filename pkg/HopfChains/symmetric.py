# HopfChains/symmetric.py
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
# Symmetric functions in the elementary basis. Breaking e_i into two pieces
# gives every split j + (i - j), so the chain built from this algebra is
# rock breaking. The quotient by e_1 is kept as the algebra for which no
# rescaling produces a Markov chain.
from math import comb
from typing import Sequence
from HopfChains.algebra import GeneratorId, LinComb, Monomial, Partition, Tensor, is_partition
from HopfChains.errors import InvalidInputError
from HopfChains.hopf import AlgebraKind, HopfInstance


class SymFnInstance(HopfInstance):
    name = "rock"
    kind = AlgebraKind.POLYNOMIAL

    # With rescaled=True the generators are ê_i = i! e_i and the coproduct
    # carries binomial coefficients.
    def __init__(self, max_degree: int = 10, rescaled: bool = False) -> None:
        super().__init__(max_degree)
        self.rescaled = rescaled

    def generator(self, i: int) -> GeneratorId:
        if i < 1:
            raise InvalidInputError("Elementary generators start at e_1.", i)
        return GeneratorId(i, (i,), str(i))

    def generators(self, degree: int) -> list[GeneratorId]:
        return [self.generator(degree)] if degree >= 1 else []

    def _part(self, j: int):
        return self.element((self.generator(j),)) if j > 0 else self.unit()

    def generator_coproduct(self, c: GeneratorId) -> LinComb[Tensor]:
        i = c.degree
        return LinComb({(self._part(j), self._part(i - j)): comb(i, j) if self.rescaled else 1
                        for j in range(i + 1)})

    def monomial(self, partition: Sequence[int]) -> Monomial:
        parts = tuple(sorted(partition, reverse=True))
        if not is_partition(parts):
            raise InvalidInputError("Not a partition.", partition)
        return Monomial.of(self.generator(p) for p in parts)

    @staticmethod
    def partition_of(b: Monomial) -> Partition:
        return tuple(c.degree for c in b.letters)

    # Native rock-breaking step: each part splits by a symmetric multinomial
    def sample_step(self, b: Monomial, a: int, rng) -> Monomial:
        pieces: list[int] = []
        for part in self.partition_of(b):
            counts = rng.multinomial(part, [1.0 / a] * a)
            pieces.extend(int(count) for count in counts if count > 0)
        return self.monomial(pieces)

    def describe(self) -> dict[str, object]:
        return super().describe() | {"rescaled": self.rescaled}


class QuotientSymFnInstance(HopfInstance):
    """Symmetric functions modulo e_1: generators e_2, e_3, ... with e_1 set to zero."""
    name = "quotient-sym"
    kind = AlgebraKind.POLYNOMIAL

    def __init__(self, max_degree: int = 10) -> None:
        super().__init__(max_degree)

    def generator(self, i: int) -> GeneratorId:
        if i < 2:
            raise InvalidInputError("The quotient has no generator below degree 2.", i)
        return GeneratorId(i, (i,), str(i))

    def generators(self, degree: int) -> list[GeneratorId]:
        return [self.generator(degree)] if degree >= 2 else []

    def generator_coproduct(self, c: GeneratorId) -> LinComb[Tensor]:
        n = c.degree
        whole = self.element((c,))
        terms = {(self.unit(), whole): 1, (whole, self.unit()): 1}
        for j in range(2, n - 1):
            terms[(self.element((self.generator(j),)),
                   self.element((self.generator(n - j),)))] = 1
        return LinComb(terms)

    def monomial(self, partition: Sequence[int]) -> Monomial:
        return Monomial.of(self.generator(p) for p in partition)
