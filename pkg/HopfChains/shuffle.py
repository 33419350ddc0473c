# HopfChains/shuffle.py
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
# Riffle shuffles. Deck statistics (descents, rising sequences, peaks), the
# Gilbert-Shannon-Reeds law of an a-shuffle and its transition matrix, the
# eigenfunctions of the forward shuffle that have a name, and the product
# rule for eigenfunction values on decks of distinct cards.
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb, factorial, prod
from typing import Mapping, Sequence
from sympy.functions.combinatorial.numbers import stirling
from HopfChains.algebra import ONE, ZERO, Word, weak_compositions_of
from HopfChains.chain import (Direction, Distances, TransitionMatrix, distances, forward_matrix,
                              right_eigen_failures)
from HopfChains.errors import InternalInconsistencyError, InvalidInputError
from HopfChains.free import FreeAssocInstance, lyndon_count, values_of, word_of
from HopfChains.lyndon import lyndon_factorize, standard_bracketing

log = logging.getLogger(__name__)

type Permutation = tuple[int, ...]


# Deck statistics, words read from the top card down

def descents(w: Sequence[int]) -> int:
    return sum(1 for x, y in zip(w, w[1:]) if x > y)


def ascents(w: Sequence[int]) -> int:
    return sum(1 for x, y in zip(w, w[1:]) if x < y)


def ties(w: Sequence[int]) -> int:
    return sum(1 for x, y in zip(w, w[1:]) if x == y)


def inversions(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def peaks(w: Sequence[int]) -> int:
    return sum(1 for x, y, z in zip(w, w[1:], w[2:]) if x < y > z)


def troughs(w: Sequence[int]) -> int:
    return sum(1 for x, y, z in zip(w, w[1:], w[2:]) if x > y < z)


def straights(w: Sequence[int]) -> int:
    return sum(1 for x, y, z in zip(w, w[1:], w[2:]) if x < y < z or x > y > z)


def check_permutation(w: Sequence[int]) -> Permutation:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise InvalidInputError("Not a permutation of 1..n in one-line notation.", w)
    return w


def inverse(w: Sequence[int]) -> Permutation:
    result = [0] * len(w)
    for position, value in enumerate(w, start=1):
        result[value - 1] = position
    return tuple(result)


# (p ∘ q)(i) = p(q(i))
def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    return tuple(p[value - 1] for value in q)


def rising_sequences(w: Sequence[int]) -> int:
    return descents(inverse(w)) + 1


def all_permutations(n: int) -> list[Permutation]:
    return list(permutations(range(1, n + 1)))


# Gilbert-Shannon-Reeds

def gsr_probability(n: int, a: int, w: Sequence[int]) -> Fraction:
    """Chance that an a-shuffle applies the permutation w: binom(n + a - 1 - d(w), n) / a^n."""
    w = check_permutation(w)
    if len(w) != n:
        raise InvalidInputError(f"Permutation is not of size {n}.", w)
    if a < 1:
        raise InvalidInputError("The number of piles a must be at least 1.", a)
    top = n + a - 1 - descents(w)
    return Fraction(comb(top, n) if top >= 0 else 0, a ** n)


def gsr_measure(n: int, a: int) -> dict[Permutation, Fraction]:
    measure = {}
    for w in all_permutations(n):
        p = gsr_probability(n, a, w)
        if p:
            measure[w] = p
    return measure


def convolve(p: Mapping[Permutation, Fraction],
             q: Mapping[Permutation, Fraction]) -> dict[Permutation, Fraction]:
    """(p * q)(σ) = sum over τ of p(τ) q(τ^-1 ∘ σ): first p, then q."""
    result: dict[Permutation, Fraction] = {}
    for tau, x in p.items():
        for rho, y in q.items():
            sigma = compose(tau, rho)
            result[sigma] = result.get(sigma, ZERO) + x * y
    return {sigma: v for sigma, v in result.items() if v != 0}


def gsr_matrix(n: int, a: int) -> TransitionMatrix:
    """Forward a-shuffling of n distinct cards, F(σ, π) = Q_a(π^-1 ∘ σ)."""
    states = tuple(FreeAssocInstance.distinct_deck(n).basis(n))
    measure = gsr_measure(n, a)
    decks = [values_of(s) for s in states]
    rows = []
    for sigma in decks:
        row = {}
        for j, pi in enumerate(decks):
            p = measure.get(compose(inverse(pi), sigma), ZERO)
            if p:
                row[j] = p
        rows.append(row)
    return TransitionMatrix(n, a, states, tuple(rows), Direction.DUAL, "deck")


def gsr_distance_curve(n: int, a: int, steps: int) -> list[Distances]:
    """Distances to uniform after 1..steps a-shuffles, using Q_a^l = Q_(a^l)."""
    uniform = {w: Fraction(1, factorial(n)) for w in all_permutations(n)}
    return [distances(gsr_measure(n, a ** l), uniform) for l in range(1, steps + 1)]


# Eigenfunctions of the forward shuffle

@dataclass(frozen=True)
class NamedEigenfunction:
    name: str
    values: dict[Word, Fraction]
    exponent: int  # eigenvalue a^exponent

    def eigenvalue(self, a: int) -> Fraction:
        return Fraction(a) ** self.exponent


def descent_polynomial(n: int, j: int, d: int) -> Fraction:
    """h_j at a deck with d descents, n! Σ_k s(k, n-j)/k! binom(n-d-1, n-k)."""
    return factorial(n) * sum((Fraction(int(stirling(k, n - j, kind=1, signed=True)), factorial(k))
                               * comb(n - d - 1, n - k) for k in range(n - j, n + 1)), ZERO)


def _candidates(nu: tuple[int, ...], states: Sequence[Word]) -> list[NamedEigenfunction]:
    n = sum(nu)
    decks = {s: values_of(s) for s in states}
    families = []
    distinct = all(count == 1 for count in nu)
    present = sum(1 for count in nu if count > 0)
    if distinct and n >= 2:
        families.append(NamedEigenfunction(
            "descents", {s: Fraction(n - 1 - 2 * descents(w)) for s, w in decks.items()}, -1))
    if distinct and n >= 3:
        third = Fraction(n - 2, 3)
        for name, statistic in (("peaks", peaks), ("troughs", troughs), ("straights", straights)):
            families.append(NamedEigenfunction(
                name, {s: statistic(w) - third for s, w in decks.items()}, -2))
    if distinct:
        for j in range(n):
            values = {d: descent_polynomial(n, j, d) for d in range(n)}
            families.append(NamedEigenfunction(
                f"h{j}", {s: values[descents(w)] for s, w in decks.items()}, -j))
    elif present >= 2:
        families.append(NamedEigenfunction(
            "ascents-descents",
            {s: Fraction(ascents(w) - descents(w)) for s, w in decks.items()}, -1))
    if len(nu) == 2 and nu[0] == 1 and n >= 2:
        families.append(NamedEigenfunction(
            "top-bottom",
            {s: Fraction((w[0] == 1) - (w[-1] == 1)) for s, w in decks.items()}, -1))
    return families


def named_eigenfunctions(nu: Sequence[int], a: int = 2) -> list[NamedEigenfunction]:
    """Each applicable family, checked against the forward shuffle matrix before returning."""
    deck = FreeAssocInstance.deck(nu)
    n = sum(deck.nu)
    F = forward_matrix(deck, n, a)
    families = _candidates(deck.nu, F.states)
    failures = right_eigen_failures(F, [f.values for f in families],
                                    [f.eigenvalue(a) for f in families])
    if failures:
        raise InternalInconsistencyError("Named function fails its eigen-equation.",
                                         families[failures[0]].name)
    log.debug("%d named eigenfunctions verified for nu=%s a=%d", len(families), deck.nu, a)
    return families


def _coefficient_on_window(l: Word, w: Sequence[int]) -> int:
    letters = set(values_of(l))
    size = l.length
    for start in range(len(w) - size + 1):
        window = w[start:start + size]
        if set(window) == letters:
            return int(standard_bracketing(l)[word_of(window)])
    return 0


def pattern_eigenfunction_value(w: Sequence[int], w2: Sequence[int]) -> int:
    """f_w(w2) for decks of distinct cards: the product over the Lyndon factors l of w of
    the bracketing coefficient of the consecutive block of w2 holding the letters of l."""
    w, w2 = tuple(w), tuple(w2)
    if len(set(w)) != len(w) or len(set(w2)) != len(w2):
        raise InvalidInputError("Cards must be distinct.", (w, w2))
    if set(w) != set(w2):
        raise InvalidInputError("Decks hold different cards.", (w, w2))
    return prod(_coefficient_on_window(l, w2) for l in lyndon_factorize(word_of(w)))


def lyndon_multiplicity_bound(nu: Sequence[int], k: int) -> int:
    """Lyndon words of length k + 1 fitting in ν; each gives an eigenvector at a^-k."""
    nu = tuple(nu)
    return sum(lyndon_count(content) for content in weak_compositions_of(k + 1, len(nu))
               if all(c <= v for c, v in zip(content, nu)))


def deck_matrix(nu: Sequence[int], a: int = 2) -> TransitionMatrix:
    deck = FreeAssocInstance.deck(nu)
    return forward_matrix(deck, sum(deck.nu), a)


def uniform_deck(nu: Sequence[int]) -> dict[Word, Fraction]:
    deck = FreeAssocInstance.deck(nu)
    states = deck.arrangements(deck.nu)
    return {s: ONE / len(states) for s in states}
