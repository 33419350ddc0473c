# tests/test_hopf.py
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
# Tests the generic Hopf algebra maps: coproducts, Hopf powers and the
# Eulerian idempotents, on the symmetric functions and free associative
# algebra instances.
import unittest
from fractions import Fraction
from itertools import permutations
from math import comb
from HopfChains.algebra import LinComb, weak_compositions_of
from HopfChains.chain import chain_states
from HopfChains.errors import InvalidInputError, UnsupportedSizeError
from HopfChains.free import FreeAssocInstance, deal_counts, shuffle_product, word_of
from HopfChains.graphs import Graph, GraphInstance
from HopfChains.hopf import AlgebraKind, HopfInstance
from HopfChains.spectral import eigen_system
from HopfChains.symmetric import QuotientSymFnInstance, SymFnInstance


class SymFnHopfTestCase(unittest.TestCase):
    def setUp(self) -> None:
        self.sym = SymFnInstance(6)
        self.m = self.sym.monomial

    def test_basis_order(self):
        labels = [b.label for b in self.sym.basis(4)]
        self.assertEqual(labels, ["1,1,1,1", "2,1,1", "2,2", "3,1", "4"])
        self.assertEqual(self.sym.basis(0), [self.sym.unit()])

    def test_factorize(self):
        b = self.sym.product(self.m((2,)), self.m((3, 2)))
        self.assertEqual(b, self.m((3, 2, 2)))
        self.assertEqual(sorted(c.degree for c in self.sym.factorize(b)), [2, 2, 3])
        self.assertEqual(self.sym.element(self.sym.factorize(b)), b)
        self.assertEqual(self.sym.factorize(self.sym.unit()), [])

    def test_coproduct_of_generator(self):
        coproduct = self.sym.coproduct(self.m((2,)))
        unit = self.sym.unit()
        self.assertEqual(coproduct, {(unit, self.m((2,))): 1, (self.m((1,)), self.m((1,))): 1,
                                     (self.m((2,)), unit): 1})

    def test_coproduct_is_multiplicative(self):
        # Δ(e_1^2) = 1 ⊗ e_1^2 + 2 e_1 ⊗ e_1 + e_1^2 ⊗ 1
        coproduct = self.sym.coproduct(self.m((1, 1)))
        self.assertEqual(coproduct[(self.m((1,)), self.m((1,)))], 2)
        self.assertEqual(coproduct.coefficient_sum(), 4)

    def test_iterated_coproduct(self):
        # e_n breaks into weak compositions of n
        for n in range(1, 6):
            for a in range(1, 4):
                terms = self.sym.coproduct_iterated(self.m((n,)), a)
                self.assertEqual(len(terms), comb(n + a - 1, a - 1))
        reduced = self.sym.reduced_coproduct_iterated(self.m((3,)), 2)
        self.assertEqual(len(reduced), 2)
        self.assertFalse(self.sym.reduced_coproduct_iterated(self.m((3,)), 4))
        with self.assertRaises(InvalidInputError):
            self.sym.coproduct_iterated(self.m((3,)), 0)

    def test_projected_coproduct(self):
        terms = self.sym.projected_coproduct(self.m((2, 1)), ((2,), (1,)))
        self.assertEqual(terms, {(self.m((2,)), self.m((1,))): 1,
                                 (self.m((1, 1)), self.m((1,))): 1})

    def test_hopf_power(self):
        # Ψ^2(e_2) = 2 e_2 + e_1^2 before rescaling
        self.assertEqual(self.sym.hopf_power(self.m((2,)), 2),
                         {self.m((2,)): 2, self.m((1, 1)): 1})
        self.assertEqual(self.sym.hopf_power(self.m((1,)), 3), {self.m((1,)): 3})
        self.assertFalse(self.sym.sum_preserving(3))

    def test_hopf_power_composes(self):
        for b in self.sym.basis(4):
            composed = self.sym.apply_power(self.sym.hopf_power(b, 2), 3)
            self.assertEqual(composed, self.sym.hopf_power(b, 6))

    def test_eulerian_idempotent(self):
        self.assertEqual(self.sym.eulerian_idempotent(self.m((2,))),
                         {self.m((2,)): 1, self.m((1, 1)): Fraction(-1, 2)})
        self.assertEqual(self.sym.eulerian_idempotent(self.m((1,))), {self.m((1,)): 1})
        self.assertFalse(self.sym.eulerian_idempotent(self.sym.unit()))

    def test_eulerian_idempotent_is_primitive_eigenvector(self):
        for n in range(1, 5):
            e = self.sym.eulerian_idempotent(self.m((n,)))
            self.assertEqual(self.sym.apply_power(e, 2), e.scale(2))

    def test_higher_eulerian_sum_to_identity(self):
        for b in self.sym.basis(4):
            total = sum((self.sym.higher_eulerian(b, i) for i in range(1, 5)), LinComb())
            self.assertEqual(total, {b: 1})

    def test_rescaled_coproduct(self):
        rescaled = SymFnInstance(4, rescaled=True)
        m = rescaled.monomial
        self.assertEqual(rescaled.coproduct(m((2,)))[(m((1,)), m((1,)))], 2)
        self.assertEqual(rescaled.eulerian_idempotent(m((2,))), {m((2,)): 1, m((1, 1)): -1})
        self.assertTrue(rescaled.sum_preserving(4))

    def test_degree_cap(self):
        with self.assertRaises(UnsupportedSizeError):
            self.sym.basis(7)
        with self.assertRaises(InvalidInputError):
            SymFnInstance(0)
        with self.assertRaises(InvalidInputError):
            self.m((1, 3, 0))

    def test_quotient_has_primitive_generator(self):
        quotient = QuotientSymFnInstance(4)
        c = quotient.monomial((2,))
        self.assertEqual(quotient.reduced_coproduct_iterated(c, 2), {})
        self.assertEqual(len(quotient.coproduct(quotient.monomial((4,)))), 3)


class FreeHopfTestCase(unittest.TestCase):
    def setUp(self) -> None:
        self.free = FreeAssocInstance(2, 4)

    def test_basis(self):
        self.assertEqual(len(self.free.basis(3)), 8)
        self.assertEqual(self.free.basis(2)[0].label, "11")

    def test_coproduct_deshuffles(self):
        w = word_of((1, 2))
        coproduct = self.free.coproduct(w)
        self.assertEqual(len(coproduct), 4)
        self.assertEqual(coproduct[(word_of((1,)), word_of((2,)))], 1)
        self.assertEqual(coproduct[(word_of((2,)), word_of((1,)))], 1)

    def test_hopf_power_is_inverse_shuffle(self):
        # Each of a^n digit assignments yields one word
        for values in ((1, 2, 2), (2, 1, 2), (1, 1, 2, 2)):
            w = word_of(values)
            for a in (2, 3):
                image = self.free.hopf_power(w, a)
                self.assertEqual(image.coefficient_sum(), a ** len(values))
                self.assertTrue(all(self.free.grading(u) == self.free.grading(w) for u in image))
        self.assertTrue(self.free.sum_preserving(4, 3))

    def test_eulerian_idempotent_of_lyndon_word(self):
        e = self.free.eulerian_idempotent(word_of((1, 2)))
        self.assertEqual(e, {word_of((1, 2)): Fraction(1, 2), word_of((2, 1)): Fraction(-1, 2)})

    def test_grading(self):
        deck = FreeAssocInstance.deck((2, 1))
        self.assertEqual([w.label for w in deck.basis(3)], ["112", "121", "211"])
        self.assertEqual(deck.grading(word_of((2, 1, 1))), (2, 1))
        with self.assertRaises(InvalidInputError):
            deck.word((1, 3))


def _coassociative(instance, b) -> bool:
    left = LinComb.accumulate(((x1, x2, y), c * d)
                              for (x, y), c in instance.coproduct(b).items()
                              for (x1, x2), d in instance.coproduct(x).items())
    right = LinComb.accumulate(((x, y1, y2), c * d)
                               for (x, y), c in instance.coproduct(b).items()
                               for (y1, y2), d in instance.coproduct(y).items())
    return left == right and left == instance.coproduct_iterated(b, 3)


def _symmetrized(instance, primitives) -> LinComb:
    total = LinComb()
    for order in permutations(primitives):
        term = LinComb.single(instance.unit())
        for x in order:
            term = instance.multiply(term, x)
        total = total + term
    return total


class HopfLawsTestCase(unittest.TestCase):
    def setUp(self) -> None:
        self.rock = SymFnInstance(6)
        self.free = FreeAssocInstance(2, 4)
        self.graph = GraphInstance(4)
        self.cases = [(self.rock, range(1, 7)), (self.free, range(1, 5)),
                      (FreeAssocInstance.deck((2, 1, 1)), range(1, 5)),
                      (self.graph, range(1, 5))]

    def test_coassociativity(self):
        for instance, degrees in self.cases:
            for n in degrees:
                for b in instance.basis(n):
                    self.assertTrue(_coassociative(instance, b), (instance.name, b.label))

    def test_hopf_power_never_shortens(self):
        for instance, degrees in self.cases:
            for n in degrees:
                for b in instance.basis(n):
                    for a in (2, 3):
                        for target in instance.hopf_power(b, a):
                            self.assertGreaterEqual(target.length, b.length,
                                                    (instance.name, b.label, target.label))

    def test_iterated_coproduct_coefficients(self):
        for instance, degrees in self.cases:
            n = degrees[-1]
            for b in instance.basis(n):
                for tensor, coefficient in instance.coproduct_iterated(b, 3).items():
                    self.assertEqual(instance.tensor_coefficient(b, tensor), coefficient)
                # Degrees that do not add up give nothing
                self.assertEqual(instance.tensor_coefficient(b, (b, b)), 0)

    def test_symmetrized_primitives_are_eigenvectors(self):
        m = self.rock.monomial
        graph = self.graph
        point = graph.state(Graph.empty(1))
        edge = graph.state(Graph.complete(2))
        families = [
            (self.rock, [m((1,)), m((2,)), m((1,))]),
            (self.rock, [m((2,)), m((2,))]),
            (self.free, [word_of((1, 2)), word_of((1,))]),
            (self.free, [word_of((1,)), word_of((2,)), word_of((2,))]),
            (graph, [edge, point, point]),
        ]
        for instance, generators in families:
            primitives = [instance.eulerian_idempotent(b) for b in generators]
            for x in primitives:
                self.assertEqual(instance.apply_power(x, 2), x.scale(2))
            symmetrized = _symmetrized(instance, primitives)
            self.assertTrue(symmetrized)
            for a in (2, 3):
                self.assertEqual(instance.apply_power(symmetrized, a),
                                 symmetrized.scale(a ** len(primitives)), instance.name)

    def test_left_vectors_stay_in_reach(self):
        cases = [(SymFnInstance(n), n) for n in range(1, 7)]
        cases += [(GraphInstance(n), n) for n in range(1, 5)]
        cases += [(FreeAssocInstance.deck((2, 1, 1)), 4), (FreeAssocInstance.distinct_deck(3), 3)]
        for instance, n in cases:
            system = eigen_system(instance, n)
            for g in system.left:
                reachable = set(chain_states(instance, n, g.index))
                self.assertTrue(set(g.as_dict()) <= reachable, (instance.name, g.index.label))
                if instance.kind is AlgebraKind.POLYNOMIAL:
                    self.assertEqual(g.value(g.index), 1)

    def test_higher_eulerian_on_rescaled_rock(self):
        rescaled = SymFnInstance(4, rescaled=True)
        m = rescaled.monomial
        self.assertEqual(rescaled.higher_eulerian(m((1, 1)), 2), {m((1, 1)): 1})
        self.assertFalse(rescaled.higher_eulerian(m((2, 1)), 1))
        self.assertEqual(rescaled.higher_eulerian(m((2, 1)), 2),
                         {m((2, 1)): 1, m((1, 1, 1)): -1})


class NativeFreeMapsTestCase(unittest.TestCase):
    def test_native_maps_match_generic(self):
        native, generic = FreeAssocInstance(3, 4), FreeAssocInstance(3, 4)
        for n in range(5):
            for w in native.basis(n):
                for a in (1, 2, 3):
                    self.assertEqual(native.hopf_power(w, a),
                                     HopfInstance.hopf_power(generic, w, a))
                self.assertEqual(native.eulerian_idempotent(w),
                                 HopfInstance.eulerian_idempotent(generic, w), w.label)
                grading = native.grading(w)
                for size in range(n + 1):
                    for first in weak_compositions_of(size, 3):
                        if all(f <= g for f, g in zip(first, grading)):
                            rest = tuple(g - f for f, g in zip(first, grading))
                            targets = (first, rest)
                            self.assertEqual(native.projected_coproduct(w, targets),
                                             HopfInstance.projected_coproduct(generic, w, targets),
                                             (w.label, targets))

    def test_projected_coproduct_of_wrong_content(self):
        free = FreeAssocInstance(2, 4)
        self.assertFalse(free.projected_coproduct(word_of((1, 2)), ((1, 0), (1, 0))))
        with self.assertRaises(InvalidInputError):
            free.projected_coproduct(word_of((1, 2)), ())

    def test_shuffle_product(self):
        one, two = LinComb.single(word_of((1,))), LinComb.single(word_of((2,)))
        self.assertEqual(shuffle_product(one, two), {word_of((1, 2)): 1, word_of((2, 1)): 1})
        self.assertEqual(shuffle_product(one, one), {word_of((1, 1)): 2})
        three = LinComb.single(word_of((3,)))
        self.assertEqual(shuffle_product(LinComb.single(word_of((1, 2))), three),
                         {word_of((1, 2, 3)): 1, word_of((1, 3, 2)): 1, word_of((3, 1, 2)): 1})
        self.assertFalse(shuffle_product(LinComb(), one))

    def test_deal_counts(self):
        # Every one of the a^n digit strings is one deal
        for n in range(1, 6):
            for a in (1, 2, 3):
                self.assertEqual(sum(count for _, count in deal_counts(n, a)), a ** n)
        self.assertEqual(dict(deal_counts(2, 2)), {(0, 1): 3, (1, 0): 1})


if __name__ == "__main__":
    unittest.main()
