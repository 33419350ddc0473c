# HopfChains/free.py
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
# The free associative algebra on primitive letters x_1 ... x_N. A word is a
# deck of cards read from top to bottom, and the chain built from it is
# inverse riffle shuffling. Fixing the letter content ν (ν_i cards of value
# i) restricts the chain to a single deck composition.
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, factorial, gcd, prod
from typing import Iterable, Sequence
import numpy as np
from sympy import divisors, mobius
from sympy.utilities.iterables import multiset_permutations
from HopfChains.algebra import GeneratorId, LinComb, Tensor, Word, ZERO, basis_sort_key
from HopfChains.algebra import weak_compositions_of
from HopfChains.errors import InvalidInputError
from HopfChains.hopf import AlgebraKind, Grading, HopfInstance

type Order = tuple[int, ...]


@lru_cache(maxsize=256)
def letter(value: int) -> GeneratorId:
    return GeneratorId(1, (value,), str(value))


def word_of(values: Iterable[int]) -> Word:
    return Word(tuple(letter(v) for v in values))


def values_of(w: Word) -> tuple[int, ...]:
    return tuple(c.key[0] for c in w.letters)


# Number of Lyndon words with the given letter counts (Witt's formula)
def lyndon_count(content: Sequence[int]) -> int:
    total = sum(content)
    if total == 0:
        return 0
    common = 0
    for count in content:
        common = gcd(common, count)
    numerator = sum(int(mobius(d)) * factorial(total // d)
                    // prod(factorial(count // d) for count in content)
                    for d in divisors(common))
    return numerator // total


def _descents(order: Order) -> int:
    return sum(1 for x, y in zip(order, order[1:]) if x > y)


@lru_cache(maxsize=16)
def _orders(n: int) -> tuple[tuple[Order, int], ...]:
    """Every order of n positions with its number of descents."""
    return tuple((order, _descents(order)) for order in permutations(range(n)))


# Dealing n cards into a piles and stacking the piles lists the positions pile
# by pile. An order with d descents comes from binom(n + a - 1 - d, n) deals.
@lru_cache(maxsize=64)
def deal_counts(n: int, a: int) -> tuple[tuple[Order, int], ...]:
    return tuple((order, comb(n + a - 1 - d, n)) for order, d in _orders(n) if d <= a - 1)


# Weight of an order with d descents in the Eulerian idempotent: the sum over
# a of (-1)^(a-1)/a times the deals into a nonempty piles that give it
@lru_cache(maxsize=16)
def eulerian_weights(n: int) -> tuple[tuple[Order, Fraction], ...]:
    weights = [sum((Fraction((-1) ** (a - 1), a) * comb(n - 1 - d, a - 1 - d)
                    for a in range(d + 1, n + 1)), ZERO) for d in range(n)]
    return tuple((order, weights[d]) for order, d in _orders(n) if weights[d])


@lru_cache(maxsize=256)
def _interleavings(n: int, k: int) -> tuple[tuple[bool, ...], ...]:
    return tuple(tuple(i in chosen for i in range(n)) for chosen in combinations(range(n), k))


def shuffle_product(x: LinComb[Word], y: LinComb[Word]) -> LinComb[Word]:
    """Sum over every interleaving of a word of x with a word of y; dual to deshuffling."""
    totals: dict[Word, Fraction] = {}
    for u, cu in x.items():
        for v, cv in y.items():
            coefficient = cu * cv
            for mask in _interleavings(u.length + v.length, u.length):
                left, right = iter(u.letters), iter(v.letters)
                w = Word(tuple(next(left) if take else next(right) for take in mask))
                totals[w] = totals.get(w, ZERO) + coefficient
    return LinComb(totals)


class FreeAssocInstance(HopfInstance):
    kind = AlgebraKind.FREE_COCOMMUTATIVE
    primitive_letters = True

    def __init__(self, letters: int = 2, max_degree: int = 8,
                 nu: Sequence[int] | None = None) -> None:
        if nu is not None:
            nu = tuple(int(v) for v in nu)
            if not nu or any(v < 0 for v in nu) or sum(nu) == 0:
                raise InvalidInputError("A deck composition needs nonnegative counts "
                                        "with a positive total.", nu)
            letters = len(nu)
            max_degree = sum(nu)
        if letters < 1:
            raise InvalidInputError("The alphabet needs at least one letter.", letters)
        super().__init__(max_degree)
        self.letters = letters
        self.nu = nu
        self.name = "deck" if nu is not None else "free"

    @classmethod
    def deck(cls, nu: Sequence[int]) -> "FreeAssocInstance":
        return cls(nu=nu)

    @classmethod
    def distinct_deck(cls, n: int) -> "FreeAssocInstance":
        return cls(nu=(1,) * n)

    def generators(self, degree: int) -> list[GeneratorId]:
        if degree != 1:
            return []
        return [letter(i) for i in range(1, self.letters + 1)]

    def generator_coproduct(self, c: GeneratorId) -> LinComb[Tensor]:
        x = self.element((c,))
        return LinComb({(self.unit(), x): 1, (x, self.unit()): 1})

    def word(self, values: Iterable[int]) -> Word:
        values = tuple(values)
        if any(v < 1 or v > self.letters for v in values):
            raise InvalidInputError("Card value outside the alphabet.", values)
        return word_of(values)

    def grading(self, b: Word) -> Grading:
        counts = Counter(values_of(b))
        return tuple(counts[i] for i in range(1, self.letters + 1))

    def arrangements(self, content: Sequence[int]) -> list[Word]:
        cards = [value for value, count in enumerate(content, start=1) for _ in range(count)]
        return sorted((word_of(p) for p in multiset_permutations(cards)), key=basis_sort_key)

    def basis(self, n: int) -> list[Word]:
        self.check_degree(n)
        if self.nu is None:
            return super().basis(n)
        if n == sum(self.nu):
            return self.arrangements(self.nu)
        words = [word_of(p) for p in product(range(1, self.letters + 1), repeat=n)]
        return [w for w in words if all(g <= v for g, v in zip(self.grading(w), self.nu))]

    def component(self, b: Word) -> list[Word]:
        return self.arrangements(self.grading(b))

    # Gradings whose components together make up H_n
    def grading_targets(self, n: int) -> list[Grading]:
        if self.nu is not None and n == sum(self.nu):
            return [self.nu]
        return weak_compositions_of(n, self.letters)

    # Letters are primitive, so Ψ^a(w) sums w read in the order of every deal
    def hopf_power(self, b: Word, a: int) -> LinComb[Word]:
        if a < 1:
            raise InvalidInputError("Hopf powers need a >= 1.", a)
        key = (b, a)
        if key not in self._hopf_powers:
            letters = b.letters
            self._hopf_powers[key] = LinComb.accumulate(
                (Word(tuple(letters[i] for i in order)), count)
                for order, count in deal_counts(b.length, a))
        return self._hopf_powers[key]

    def eulerian_idempotent(self, b: Word) -> LinComb[Word]:
        if b not in self._eulerian:
            letters = b.letters
            self._eulerian[b] = LinComb() if not letters else LinComb.accumulate(
                (Word(tuple(letters[i] for i in order)), weight)
                for order, weight in eulerian_weights(b.length))
        return self._eulerian[b]

    # Each card goes to a component still short of a card of its value
    def projected_coproduct(self, b: Word, targets: tuple[Grading, ...]) -> LinComb[Tensor]:
        if not targets:
            raise InvalidInputError("A projected coproduct needs at least one component.")
        if tuple(sum(column) for column in zip(*targets)) != self.grading(b):
            return LinComb()
        missing = [list(target) for target in targets]
        pieces: list[list[GeneratorId]] = [[] for _ in targets]
        found: Counter[Tensor] = Counter()

        def place(i: int) -> None:
            if i == b.length:
                found[tuple(Word(tuple(piece)) for piece in pieces)] += 1
                return
            c = b.letters[i]
            value = c.key[0] - 1
            for need, piece in zip(missing, pieces):
                if need[value]:
                    need[value] -= 1
                    piece.append(c)
                    place(i + 1)
                    piece.pop()
                    need[value] += 1

        place(0)
        return LinComb(found)

    def lyndon_counts(self, target: Grading) -> dict[Grading, int]:
        counts = {}
        for size in range(1, sum(target) + 1):
            for content in weak_compositions_of(size, self.letters):
                if all(c <= t for c, t in zip(content, target)):
                    count = lyndon_count(content)
                    if count:
                        counts[content] = count
        return counts

    # Inverse a-shuffle: an independent uniform digit per card, then a stable
    # sort by digit
    def sample_step(self, b: Word, a: int, rng) -> Word:
        digits = rng.integers(0, a, size=b.length)
        order = np.argsort(digits, kind="stable")
        return Word(tuple(b.letters[int(i)] for i in order))

    def uniform_weight(self, content: Sequence[int]) -> Fraction:
        return Fraction(prod(factorial(c) for c in content), factorial(sum(content)))

    def describe(self) -> dict[str, object]:
        return super().describe() | {"letters": self.letters,
                                     "nu": list(self.nu) if self.nu else None}
