# HopfChains/qshuffle.py
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
# q-deformed riffle shuffles. A sorted deck is cut with q-binomial weights and
# the two piles are dropped from the bottom with q-weighted chances, so a deck
# with I inversions and at most two rising sequences appears with weight q^I.
# Also the inverse shuffle weighted by a symmetric bilinear form on the card
# values, where the normaliser depends on the current deck.
from __future__ import annotations
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import prod
from pathlib import Path
from typing import Iterable, Sequence
import numpy as np
from HopfChains.algebra import ONE, ZERO, Word, basis_sort_key, parse_rational
from HopfChains.chain import Direction, TransitionMatrix, make_rng
from HopfChains.errors import InvalidInputError, UnsupportedSizeError
from HopfChains.free import FreeAssocInstance, values_of, word_of
from HopfChains.shuffle import Permutation, all_permutations, check_permutation, inversions
from HopfChains.shuffle import rising_sequences

log = logging.getLogger(__name__)

Q_CAP = 10


def check_q(q: Fraction | int | str) -> Fraction:
    q = parse_rational(q) if isinstance(q, str) else Fraction(q)
    if q <= 0:
        raise InvalidInputError("q must be positive.", q)
    return q


def _check_size(n: int) -> None:
    if n > Q_CAP:
        raise UnsupportedSizeError("q-shuffle laws are enumerated for small decks only.", n, Q_CAP)
    if n < 1:
        raise InvalidInputError("A deck needs at least one card.", n)


# [j]_q = 1 + q + ... + q^(j-1)
def q_integer(j: int, q: Fraction) -> Fraction:
    return sum((q ** i for i in range(j)), ZERO)


def q_factorial(j: int, q: Fraction) -> Fraction:
    return prod((q_integer(i, q) for i in range(1, j + 1)), start=ONE)


def q_binomial(n: int, j: int, q: Fraction) -> Fraction:
    if j < 0 or j > n:
        return ZERO
    return q_factorial(n, q) / (q_factorial(j, q) * q_factorial(n - j, q))


def q_shuffle_normalizer(n: int, q: Fraction | int) -> Fraction:
    """z_n, the sum of the q-binomials over every cut."""
    q = check_q(q)
    _check_size(n)
    return sum((q_binomial(n, j, q) for j in range(n + 1)), ZERO)


def q_shuffle_probability(n: int, q: Fraction | int, w: Sequence[int]) -> Fraction:
    """Chance that one q-shuffle of the sorted deck gives the deck w."""
    q = check_q(q)
    w = check_permutation(w)
    if len(w) != n:
        raise InvalidInputError(f"Permutation is not of size {n}.", w)
    z = q_shuffle_normalizer(n, q)
    # Every cut can give back the sorted deck
    if rising_sequences(w) == 1:
        return (n + 1) / z
    if rising_sequences(w) == 2:
        return q ** inversions(w) / z
    return ZERO


def q_shuffle_distribution(n: int, q: Fraction | int) -> dict[Permutation, Fraction]:
    law = {}
    for w in all_permutations(n):
        p = q_shuffle_probability(n, q, w)
        if p:
            law[w] = p
    return law


def _drop_chance(held_left: int, held_right: int, q: Fraction) -> Fraction:
    """Chance that the bottom card of the left pile drops next."""
    return q ** held_right * q_integer(held_left, q) / q_integer(held_left + held_right, q)


def q_path_distribution(n: int, q: Fraction | int) -> dict[Permutation, Fraction]:
    """The sampler's law, summed exactly over every cut and every drop order."""
    q = check_q(q)
    _check_size(n)
    z = q_shuffle_normalizer(n, q)
    law: dict[Permutation, Fraction] = {}

    def drop(cut: int, left: int, right: int, dropped: list[int], chance: Fraction) -> None:
        if left == 0 and right == 0:
            deck = tuple(reversed(dropped))
            law[deck] = law.get(deck, ZERO) + chance
            return
        p = _drop_chance(left, right, q)
        if left:
            drop(cut, left - 1, right, dropped + [left], chance * p)
        if right:
            drop(cut, left, right - 1, dropped + [cut + right], chance * (1 - p))

    for cut in range(n + 1):
        drop(cut, cut, n - cut, [], q_binomial(n, cut, q) / z)
    return law


@lru_cache(maxsize=64)
def _cut_weights(n: int, q: Fraction) -> np.ndarray:
    weights = np.array([float(q_binomial(n, j, q)) for j in range(n + 1)])
    return weights / weights.sum()


@lru_cache(maxsize=64)
def _drop_table(n: int, q: Fraction) -> np.ndarray:
    """_drop_chance as floats, indexed by the cards held in each pile."""
    table = np.zeros((n + 1, n + 1))
    for left in range(n + 1):
        for right in range(n + 1 - left):
            if left or right:
                table[left, right] = float(_drop_chance(left, right, q))
    return table


def q_shuffle_sample(n: int, q: Fraction | int, seed: int | None = None,
                     rng: np.random.Generator | None = None) -> Permutation:
    """One q-shuffle of the sorted deck 1..n, read from the top."""
    q = check_q(q)
    _check_size(n)
    if rng is None:
        if seed is None:
            raise InvalidInputError("Sampling needs a seed.")
        rng = make_rng(seed)
    cut = int(rng.choice(n + 1, p=_cut_weights(n, q)))
    chances = _drop_table(n, q)
    left, right = cut, n - cut
    dropped = []
    while left or right:
        if rng.random() < chances[left, right]:
            dropped.append(left)
            left -= 1
        else:
            dropped.append(cut + right)
            right -= 1
    return tuple(reversed(dropped))


def q_shuffle_samples(n: int, q: Fraction | int, samples: int, seed: int) -> list[Permutation]:
    rng = make_rng(seed)
    return [q_shuffle_sample(n, q, rng=rng) for _ in range(samples)]


# Inverse shuffles weighted by a bilinear form on card values

@dataclass(frozen=True)
class BilinearForm:
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        size = len(self.matrix)
        if size == 0 or any(len(row) != size for row in self.matrix):
            raise InvalidInputError("A bilinear form needs a square matrix.", self.matrix)
        if any(self.matrix[i][j] != self.matrix[j][i] for i in range(size) for j in range(i)):
            raise InvalidInputError("The bilinear form must be symmetric.", self.matrix)

    @classmethod
    def ones(cls, size: int) -> BilinearForm:
        return cls(tuple((1,) * size for _ in range(size)))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> BilinearForm:
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def from_file(cls, path: str | Path) -> BilinearForm:
        """Whitespace separated integer rows; '#' starts a comment."""
        rows = []
        try:
            with open(path, "r") as f:
                for line in f:
                    line = line.split("#", 1)[0].strip()
                    if line:
                        rows.append([int(token) for token in line.split()])
        except (OSError, ValueError) as error:
            raise InvalidInputError(f"Could not read bilinear form: {error}", str(path)) from error
        return cls.from_rows(rows)

    @property
    def size(self) -> int:
        return len(self.matrix)

    # x_i . x_j for card values i, j counted from 1
    def pair(self, i: int, j: int) -> int:
        if not (1 <= i <= self.size and 1 <= j <= self.size):
            raise InvalidInputError("Card value outside the bilinear form.", (i, j))
        return self.matrix[i - 1][j - 1]


def subset_weight(subset: Iterable[int], w: Sequence[int], form: BilinearForm) -> int:
    """wt(S, w): the form summed over pairs where a card outside S sits above one in S.

    Positions in S are counted from 1."""
    chosen = set(subset)
    return sum(form.pair(w[p - 1], w[s - 1]) for s in chosen for p in range(1, s)
               if p not in chosen)


def inv_of_subset(subset: Iterable[int], n: int) -> int:
    chosen = set(subset)
    return sum(1 for s in chosen for p in range(1, s) if p not in chosen)


def _subsets(n: int) -> Iterable[tuple[int, ...]]:
    for size in range(n + 1):
        yield from combinations(range(1, n + 1), size)


def quantized_inverse_shuffle_step(w: Sequence[int], q: Fraction | int,
                                   form: BilinearForm) -> dict[tuple[int, ...], Fraction]:
    """Law of w_S w_{S^c} when S is drawn with chance q^wt(S, w) / θ(w)."""
    q = check_q(q)
    w = tuple(w)
    _check_size(len(w))
    weights: dict[tuple[int, ...], Fraction] = {}
    for subset in _subsets(len(w)):
        chosen = set(subset)
        moved = (tuple(w[s - 1] for s in subset)
                 + tuple(w[p - 1] for p in range(1, len(w) + 1) if p not in chosen))
        weights[moved] = weights.get(moved, ZERO) + q ** subset_weight(subset, w, form)
    theta = sum(weights.values(), ZERO)
    return {moved: weight / theta for moved, weight in weights.items()}


def quantized_normalizer(w: Sequence[int], q: Fraction | int, form: BilinearForm) -> Fraction:
    q = check_q(q)
    return sum((q ** subset_weight(subset, w, form) for subset in _subsets(len(w))), ZERO)


def quantized_inverse_shuffle_matrix(nu: Sequence[int], q: Fraction | int,
                                     form: BilinearForm | None = None) -> TransitionMatrix:
    deck = FreeAssocInstance.deck(nu)
    form = form if form is not None else BilinearForm.ones(deck.letters)
    if form.size < deck.letters:
        raise InvalidInputError("The bilinear form does not cover every card value.", form.size)
    states = tuple(deck.arrangements(deck.nu))
    positions = {values_of(s): i for i, s in enumerate(states)}
    rows = []
    for s in states:
        law = quantized_inverse_shuffle_step(values_of(s), q, form)
        rows.append({positions[moved]: p for moved, p in law.items()})
    log.info("quantized inverse shuffle matrix: nu=%s q=%s states=%d", deck.nu, q, len(states))
    return TransitionMatrix(sum(deck.nu), 2, states, tuple(rows), Direction.POWER_MAP, "deck-q")


def simulate_quantized(w: Sequence[int], q: Fraction | int, form: BilinearForm, steps: int,
                       seed: int) -> list[Word]:
    rng = make_rng(seed)
    current = tuple(w)
    trajectory = [word_of(current)]
    for _ in range(steps):
        law = quantized_inverse_shuffle_step(current, q, form)
        targets = sorted(law, key=lambda moved: basis_sort_key(word_of(moved)))
        weights = np.array([float(law[t]) for t in targets])
        current = targets[int(rng.choice(len(targets), p=weights / weights.sum()))]
        trajectory.append(word_of(current))
    return trajectory
