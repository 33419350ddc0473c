# tests/test_shuffle.py
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
# Tests riffle shuffling: deck statistics, the Gilbert-Shannon-Reeds law and
# its convolution, the forward shuffle matrix, the named eigenfunctions and
# the pattern eigenfunctions of decks of distinct cards.
import unittest
from fractions import Fraction
from math import comb
from HopfChains.algebra import compositions_of, partitions_of
from HopfChains.chain import forward_matrix
from HopfChains.errors import InvalidInputError
from HopfChains.free import FreeAssocInstance, values_of, word_of
from HopfChains.lyndon import lyndon_factorize
from HopfChains.shuffle import (all_permutations, ascents, check_permutation, compose, convolve,
                                deck_matrix, descent_polynomial, descents, gsr_distance_curve,
                                gsr_matrix, gsr_measure, gsr_probability, inverse, inversions,
                                lyndon_multiplicity_bound, named_eigenfunctions,
                                pattern_eigenfunction_value, peaks, rising_sequences, straights,
                                ties, troughs, uniform_deck)
from HopfChains.spectral import multiplicities


class StatisticsTestCase(unittest.TestCase):
    def test_examples(self):
        w = (3, 1, 4, 2, 5)
        self.assertEqual(descents(w), 2)
        self.assertEqual(ascents(w), 2)
        self.assertEqual(inversions(w), 3)
        self.assertEqual(peaks(w), 1)
        self.assertEqual(troughs(w), 2)
        self.assertEqual(straights(w), 0)
        self.assertEqual(ties((1, 1, 2)), 1)

    def test_identities(self):
        for n in range(2, 6):
            for w in all_permutations(n):
                self.assertEqual(descents(w) + ascents(w), n - 1)
                self.assertEqual(peaks(w) + troughs(w) + straights(w), n - 2)
                self.assertEqual(rising_sequences(w), descents(inverse(w)) + 1)
                self.assertEqual(compose(w, inverse(w)), tuple(range(1, n + 1)))
                self.assertEqual(inversions(inverse(w)), inversions(w))
        with self.assertRaises(InvalidInputError):
            check_permutation((1, 1, 2))


class GSRTestCase(unittest.TestCase):
    def test_probabilities(self):
        for n in range(1, 6):
            for a in (1, 2, 3):
                identity = tuple(range(1, n + 1))
                self.assertEqual(gsr_probability(n, a, identity), Fraction(comb(n + a - 1, n), a ** n))
                self.assertEqual(sum(gsr_measure(n, a).values()), 1)
        self.assertEqual(gsr_probability(3, 2, (1, 3, 2)), Fraction(1, 8))
        self.assertEqual(gsr_probability(3, 2, (3, 2, 1)), 0)
        with self.assertRaises(InvalidInputError):
            gsr_probability(3, 2, (1, 2))

    def test_two_shuffles_hit_at_most_two_rising_sequences(self):
        for n in range(1, 6):
            for w, p in gsr_measure(n, 2).items():
                self.assertLessEqual(rising_sequences(inverse(w)), 2)
                self.assertGreater(p, 0)

    def test_convolution(self):
        for n in range(1, 6):
            for a, b in ((2, 2), (2, 3), (3, 2)):
                self.assertEqual(convolve(gsr_measure(n, a), gsr_measure(n, b)),
                                 gsr_measure(n, a * b))

    def test_matrix_is_forward_hopf_chain(self):
        for n in range(1, 6):
            for a in (2, 3):
                F = gsr_matrix(n, a)
                self.assertTrue(F.is_stochastic())
                self.assertEqual(F.rows,
                                 forward_matrix(FreeAssocInstance.distinct_deck(n), n, a).rows)

    def test_distance_curve(self):
        curve = gsr_distance_curve(4, 2, 8)
        tvs = [d.tv for d in curve]
        self.assertTrue(all(x >= y for x, y in zip(tvs, tvs[1:])))
        self.assertTrue(all(d.tv <= d.separation <= d.sup for d in curve[2:]))
        self.assertLess(tvs[-1], Fraction(1, 100))


class NamedEigenfunctionTestCase(unittest.TestCase):
    def test_families(self):
        names = {nu: sorted(f.name for f in named_eigenfunctions(nu)) for nu in
                 ((1, 1), (1, 1, 1), (2, 1), (1, 2), (3,))}
        self.assertEqual(names[(1, 1)], ["descents", "h0", "h1", "top-bottom"])
        self.assertEqual(names[(1, 1, 1)],
                         ["descents", "h0", "h1", "h2", "peaks", "straights", "troughs"])
        self.assertEqual(names[(2, 1)], ["ascents-descents"])
        self.assertEqual(names[(1, 2)], ["ascents-descents", "top-bottom"])
        self.assertEqual(names[(3,)], [])

    def test_every_family_is_verified(self):
        # named_eigenfunctions raises when a family fails its eigen-equation
        for n in range(1, 6):
            for nu in compositions_of(n):
                for a in (2, 3):
                    for f in named_eigenfunctions(nu, a):
                        self.assertEqual(f.eigenvalue(a), Fraction(a) ** f.exponent)

    def test_descent_polynomials(self):
        for n in range(2, 7):
            for d in range(n):
                self.assertEqual(descent_polynomial(n, 0, d), 1)
                self.assertEqual(descent_polynomial(n, 1, d), Fraction(n, 2) * (n - 1 - 2 * d))

    def test_second_descent_polynomial(self):
        f = next(f for f in named_eigenfunctions((1, 1, 1)) if f.name == "h2")
        values = {values_of(s): v for s, v in f.values.items()}
        self.assertEqual([values[w] for w in all_permutations(3)], [2, -1, -1, -1, -1, 2])


class PatternEigenfunctionTestCase(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(pattern_eigenfunction_value((3, 5, 1, 4, 2), (1, 4, 2, 5, 3)), -1)
        self.assertEqual(pattern_eigenfunction_value((3, 5, 1, 4, 2), (3, 5, 2, 4, 1)), 1)
        self.assertEqual(pattern_eigenfunction_value((2, 1), (1, 2)), 1)
        with self.assertRaises(InvalidInputError):
            pattern_eigenfunction_value((1, 2), (1, 3))
        with self.assertRaises(InvalidInputError):
            pattern_eigenfunction_value((1, 1), (1, 1))

    def test_reversal_sign(self):
        for n in range(2, 6):
            for sigma in all_permutations(n)[::5]:
                k = len(lyndon_factorize(word_of(sigma)))
                for w in all_permutations(n):
                    self.assertEqual(pattern_eigenfunction_value(sigma, w[::-1]),
                                     (-1) ** (n - k) * pattern_eigenfunction_value(sigma, w))

    def test_eigen_equation(self):
        for n in range(2, 6):
            F = deck_matrix((1,) * n, 2)
            for sigma in all_permutations(n):
                k = len(lyndon_factorize(word_of(sigma)))
                f = {s: Fraction(pattern_eigenfunction_value(sigma, values_of(s))) for s in F.states}
                image = F.apply_right(f)
                beta = Fraction(2) ** (k - n)
                self.assertTrue(all(image.get(s, 0) == beta * v for s, v in f.items()), sigma)


class DeckSpectrumTestCase(unittest.TestCase):
    def test_every_exponent_occurs(self):
        for n in range(2, 6):
            for nu in partitions_of(n):
                found = multiplicities(FreeAssocInstance.deck(nu), n)
                if len(nu) >= 2:
                    self.assertEqual(set(found), set(range(1, n + 1)), nu)
                else:
                    self.assertEqual(found, {n: 1})

    def test_lyndon_bound(self):
        for n in range(2, 6):
            for nu in compositions_of(n):
                found = multiplicities(FreeAssocInstance.deck(nu), n)
                self.assertEqual(lyndon_multiplicity_bound(nu, 1), comb(len(nu), 2))
                for k in range(1, n):
                    self.assertLessEqual(lyndon_multiplicity_bound(nu, k), found.get(n - k, 0))

    def test_uniform_is_stationary(self):
        for nu, size in (((1, 1, 1), 6), ((2, 1, 1), 12), ((2, 2), 6)):
            pi = uniform_deck(nu)
            self.assertEqual(len(pi), size)
            self.assertEqual(deck_matrix(nu, 3).apply_left(pi), pi)


if __name__ == "__main__":
    unittest.main()
