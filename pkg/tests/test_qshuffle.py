# tests/test_qshuffle.py
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
# Tests q-deformed riffle shuffles: the q-integers, the closed form law and
# the pile-dropping sampler, and inverse shuffles weighted by a bilinear form.
import unittest
from collections import Counter
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from HopfChains.chain import transition_matrix, within_standard_errors
from HopfChains.errors import InvalidInputError, UnsupportedSizeError
from HopfChains.free import FreeAssocInstance, values_of
from HopfChains.qshuffle import (BilinearForm, check_q, inv_of_subset, q_binomial, q_factorial,
                                 q_integer, q_path_distribution, q_shuffle_distribution,
                                 q_shuffle_normalizer, q_shuffle_probability, q_shuffle_sample,
                                 q_shuffle_samples, quantized_inverse_shuffle_matrix,
                                 quantized_inverse_shuffle_step, quantized_normalizer,
                                 simulate_quantized, subset_weight)
from HopfChains.shuffle import all_permutations, gsr_probability, inverse

HALF = Fraction(1, 2)


class QIntegerTestCase(unittest.TestCase):
    def test_values(self):
        q = Fraction(2)
        self.assertEqual(q_integer(3, q), 7)
        self.assertEqual(q_integer(0, q), 0)
        self.assertEqual(q_factorial(3, q), 21)
        self.assertEqual(q_binomial(4, 2, Fraction(1)), 6)
        self.assertEqual(q_binomial(4, 5, q), 0)
        for n in range(6):
            for j in range(n + 1):
                self.assertEqual(q_binomial(n, j, HALF), q_binomial(n, n - j, HALF))

    def test_check_q(self):
        self.assertEqual(check_q("1/2"), HALF)
        self.assertEqual(check_q(3), 3)
        with self.assertRaises(InvalidInputError):
            check_q("0")
        with self.assertRaises(InvalidInputError):
            check_q(Fraction(-1, 3))


class QShuffleLawTestCase(unittest.TestCase):
    def test_three_cards(self):
        q = Fraction(2)
        self.assertEqual(q_shuffle_normalizer(3, q), 16)
        law = {w: q_shuffle_probability(3, q, w) for w in all_permutations(3)}
        self.assertEqual(law, {(1, 2, 3): Fraction(1, 4), (1, 3, 2): Fraction(1, 8),
                               (2, 1, 3): Fraction(1, 8), (2, 3, 1): Fraction(1, 4),
                               (3, 1, 2): Fraction(1, 4), (3, 2, 1): 0})

    def test_law_sums_to_one(self):
        for q in (HALF, Fraction(1), Fraction(3)):
            for n in range(1, 6):
                self.assertEqual(sum(q_shuffle_distribution(n, q).values()), 1)
                identity = tuple(range(1, n + 1))
                self.assertEqual(q_shuffle_probability(n, q, identity),
                                 (n + 1) / q_shuffle_normalizer(n, q))

    def test_normalizer_counts_cuts(self):
        for q in (HALF, Fraction(2)):
            for n in range(1, 7):
                by_subset = sum((q ** inv_of_subset(s, n) for size in range(n + 1)
                                 for s in combinations(range(1, n + 1), size)), Fraction(0))
                self.assertEqual(q_shuffle_normalizer(n, q), by_subset)

    def test_q_one_is_riffle_shuffle(self):
        for n in range(1, 6):
            self.assertEqual(q_shuffle_normalizer(n, 1), 2 ** n)
            for w in all_permutations(n):
                self.assertEqual(q_shuffle_probability(n, 1, w), gsr_probability(n, 2, inverse(w)))

    def test_sampler_law(self):
        for q in (HALF, Fraction(1), Fraction(2), Fraction(3)):
            for n in range(1, 6):
                self.assertEqual(q_path_distribution(n, q), q_shuffle_distribution(n, q))

    def test_monte_carlo(self):
        samples = 100_000
        counts = Counter(q_shuffle_samples(4, HALF, samples, seed=2026))
        self.assertTrue(within_standard_errors(counts, q_shuffle_distribution(4, HALF), samples))
        self.assertEqual(q_shuffle_samples(4, HALF, 50, seed=1), q_shuffle_samples(4, HALF, 50, seed=1))

    def test_limits(self):
        with self.assertRaises(UnsupportedSizeError):
            q_shuffle_normalizer(11, 2)
        with self.assertRaises(InvalidInputError):
            q_shuffle_sample(3, 2)
        with self.assertRaises(UnsupportedSizeError):
            q_shuffle_sample(11, 2, seed=1)
        with self.assertRaises(InvalidInputError):
            q_shuffle_sample(0, 2, seed=1)
        with self.assertRaises(InvalidInputError):
            q_shuffle_probability(3, 2, (1, 2, 2))


class BilinearFormTestCase(unittest.TestCase):
    def setUp(self) -> None:
        self.data = Path(__file__).resolve().parent.parent / "HopfChains" / "data"
        primes = (2, 3, 5, 7, 11)
        self.primes = BilinearForm.from_rows([[p * r for r in primes] for p in primes])

    def test_forms(self):
        form = BilinearForm.from_file(self.data / "form2.txt")
        self.assertEqual(form.size, 2)
        self.assertEqual(form.pair(1, 1), 2)
        self.assertEqual(form.pair(2, 2), 0)
        with self.assertRaises(InvalidInputError):
            BilinearForm.from_rows([[1, 2], [3, 1]])
        with self.assertRaises(InvalidInputError):
            BilinearForm.from_rows([[1, 2]])
        with self.assertRaises(InvalidInputError):
            form.pair(3, 1)
        with self.assertRaises(InvalidInputError):
            BilinearForm.from_file(self.data / "missing.txt")

    def test_subset_weight(self):
        # Cards i j k l m; S = {2, 4} pairs i with j, i with l and k with l
        w = (1, 2, 3, 4, 5)
        self.assertEqual(subset_weight({2, 4}, w, self.primes), 2 * 3 + 2 * 7 + 5 * 7)
        self.assertEqual(inv_of_subset({2, 4}, 5), 3)
        self.assertEqual(subset_weight({2, 4}, w, BilinearForm.ones(5)), 3)
        self.assertEqual(subset_weight((), w, self.primes), 0)

    def test_ones_form_normalizer(self):
        for n in range(1, 6):
            w = tuple(range(1, n + 1))
            for q in (HALF, Fraction(3)):
                self.assertEqual(quantized_normalizer(w, q, BilinearForm.ones(n)),
                                 q_shuffle_normalizer(n, q))

    def test_step_law(self):
        law = quantized_inverse_shuffle_step((1, 2, 1), HALF, BilinearForm.from_file(
            self.data / "form2.txt"))
        self.assertEqual(sum(law.values()), 1)
        self.assertTrue(all(sorted(moved) == [1, 1, 2] for moved in law))

    def test_q_one_is_hopf_chain(self):
        for nu in ((1, 1, 1), (2, 1), (2, 2), (1, 1, 2)):
            n = sum(nu)
            K = quantized_inverse_shuffle_matrix(nu, 1)
            self.assertEqual(K.rows, transition_matrix(FreeAssocInstance.deck(nu), n, 2).rows)

    def test_matrix_is_stochastic(self):
        form = BilinearForm.from_rows([[1, 2, 0], [2, 1, 1], [0, 1, 3]])
        for q in (HALF, Fraction(2)):
            K = quantized_inverse_shuffle_matrix((2, 1, 1), q, form)
            self.assertTrue(K.is_stochastic())
        with self.assertRaises(InvalidInputError):
            quantized_inverse_shuffle_matrix((1, 1, 1), HALF, BilinearForm.ones(2))

    def test_simulation(self):
        form = BilinearForm.from_file(self.data / "form2.txt")
        run = simulate_quantized((1, 1, 2, 2), HALF, form, 6, seed=4)
        self.assertEqual(len(run), 7)
        self.assertEqual(run, simulate_quantized((1, 1, 2, 2), HALF, form, 6, seed=4))
        self.assertTrue(all(sorted(values_of(w)) == [1, 1, 2, 2] for w in run))


if __name__ == "__main__":
    unittest.main()
