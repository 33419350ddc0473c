# tests/test_rock.py
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
# Tests the closed forms for rock breaking: eigenfunctions by counting
# decompositions, the balls-in-boxes law, absorption and tail bounds, and
# the power sum form of the left eigenfunctions.
import unittest
from fractions import Fraction
from HopfChains.algebra import partitions_of
from HopfChains.chain import transition_matrix
from HopfChains.errors import InvalidInputError
from HopfChains.rock import (absorption_bound, absorption_curve, absorption_probability,
                             balls_in_boxes, balls_in_boxes_from, decompositions,
                             power_sum, power_sum_left_vector, refines, rock_f, rock_g,
                             tail_bound, tail_probability)
from HopfChains.spectral import eigen_system
from HopfChains.symmetric import SymFnInstance


class EigenfunctionTestCase(unittest.TestCase):
    def test_worked_examples(self):
        self.assertEqual(rock_f((2, 1, 1, 1), (3, 2)), 4)
        self.assertEqual(rock_g((3, 2), (2, 1, 1, 1)), 5)
        self.assertEqual(rock_g((2, 2), (2, 1, 1)), -2)

    def test_decompositions(self):
        found = sorted(decompositions((2, 1, 1, 1), (3, 2)))
        self.assertEqual(found, [((1, 1, 1), (2,)), ((2, 1), (1, 1))])
        self.assertTrue(refines((1, 1, 1), (2, 1)))
        self.assertFalse(refines((3,), (2, 1)))
        with self.assertRaises(InvalidInputError):
            rock_f((2, 1), (2, 2))
        with self.assertRaises(InvalidInputError):
            rock_g((1, 2), (2, 1))

    def test_matches_generic_eigenbasis(self):
        for n in range(1, 7):
            instance = SymFnInstance(n)
            system = eigen_system(instance, n)
            parts = {s: instance.partition_of(s) for s in system.states}
            for g, f in zip(system.left, system.right):
                for s in system.states:
                    self.assertEqual(g.value(s), rock_g(parts[g.index], parts[s]))
                    self.assertEqual(f.value(s), rock_f(parts[f.index], parts[s]))

    def test_support_follows_refinement(self):
        for n in range(1, 7):
            for mu in partitions_of(n):
                for lam in partitions_of(n):
                    if not refines(mu, lam):
                        self.assertEqual(rock_f(mu, lam), 0)
                        self.assertEqual(rock_g(lam, mu), 0)
                self.assertEqual(rock_f(mu, mu), 1)
                self.assertEqual(rock_g(mu, mu), 1)

    def test_power_sums(self):
        self.assertEqual(power_sum(1), {(1,): 1})
        self.assertEqual(power_sum(2), {(2,): -1, (1, 1): 1})
        self.assertIs(power_sum(5), power_sum(5))
        self.assertEqual(power_sum.cache_info().maxsize, 64)
        for n in range(1, 7):
            instance = SymFnInstance(n)
            system = eigen_system(instance, n)
            for g in system.left:
                expected = {instance.partition_of(s): v for s, v in g.as_dict().items()}
                self.assertEqual(power_sum_left_vector(instance.partition_of(g.index)), expected)


class BallsInBoxesTestCase(unittest.TestCase):
    def test_law_matches_matrix_power(self):
        for n in range(1, 7):
            instance = SymFnInstance(n)
            K = transition_matrix(instance, n, 2)
            for k in range(4):
                row = K.power(k).row(instance.monomial((n,)))
                law = {instance.partition_of(s): p for s, p in row.items()}
                self.assertEqual(law, balls_in_boxes(n, k))
                self.assertEqual(sum(law.values()), 1)

    def test_from_any_start(self):
        instance = SymFnInstance(5)
        K = transition_matrix(instance, 5, 2)
        for mu in ((3, 2), (2, 2, 1), (4, 1)):
            for k in range(3):
                row = K.power(k).row(instance.monomial(mu))
                law = {instance.partition_of(s): p for s, p in row.items()}
                self.assertEqual(law, balls_in_boxes_from(mu, k))

    def test_absorption_matches_matrix_powers(self):
        for n in range(1, 9):
            instance = SymFnInstance(n)
            K = transition_matrix(instance, n, 2)
            start, points = instance.monomial((n,)), instance.monomial((1,) * n)
            P = K.power(0)
            for k in range(13):
                self.assertEqual(P.entry(start, points), absorption_probability(n, k), (n, k))
                P = P.matmul(K)

    def test_absorption(self):
        self.assertEqual(absorption_probability(3, 1), 0)
        self.assertEqual(absorption_probability(3, 2), Fraction(3, 8))
        self.assertEqual(absorption_probability(1, 0), 1)
        for n in range(2, 9):
            previous = Fraction(0)
            for k, exact, bound in absorption_curve(n, 12):
                self.assertEqual(exact, balls_in_boxes(n, k).get((1,) * n, 0))
                self.assertLessEqual(1 - exact, bound)
                self.assertGreaterEqual(exact, previous)
                previous = exact
        self.assertEqual(absorption_bound(4, 3), Fraction(6, 8))

    def test_tail_bound(self):
        for n in range(2, 7):
            for r in range(2, n + 1):
                for k in range(5):
                    self.assertLessEqual(tail_probability(n, r, k), tail_bound(n, r, k))
        self.assertEqual(tail_probability(4, 1, 3), 1)


if __name__ == "__main__":
    unittest.main()
