# tests/test_instances.py
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
# Tests the graph, labeled graph and simplicial complex instances: their
# canonical forms, generators, coproducts and the file readers.
import unittest
from pathlib import Path
from random import Random
import networkx as nx
from HopfChains.errors import InvalidInputError, UnsupportedSizeError
from HopfChains.graphs import (Graph, GraphInstance, LabeledGraphInstance, all_graphs,
                               graph_canonicalize, read_edge_list)
from HopfChains.simplicial import (SimplicialComplex, SimplicialInstance, all_complexes,
                                   complex_canonicalize, read_face_list)


class GraphTestCase(unittest.TestCase):
    def setUp(self) -> None:
        self.data = Path(__file__).resolve().parent.parent / "HopfChains" / "data"

    def test_canonical_form_matches_isomorphism(self):
        graphs = list(all_graphs(4))
        canonical = [graph_canonicalize(g) for g in graphs]
        for g, cg in zip(graphs, canonical):
            self.assertTrue(nx.is_isomorphic(g.to_networkx(), cg.to_networkx()))
        for i in range(0, len(graphs), 3):
            for j in range(len(graphs)):
                same = canonical[i] == canonical[j]
                self.assertEqual(same, nx.is_isomorphic(graphs[i].to_networkx(),
                                                        graphs[j].to_networkx()))

    def test_canonical_form_ignores_labels(self):
        rng = Random(11)
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
        for _ in range(10):
            order = list(range(5))
            rng.shuffle(order)
            self.assertEqual(graph_canonicalize(g.relabeled(order)), graph_canonicalize(g))
        # Canonical forms are memoized
        self.assertIs(graph_canonicalize(g), graph_canonicalize(g))
        with self.assertRaises(UnsupportedSizeError):
            graph_canonicalize(Graph.path(9))

    def test_generator_counts(self):
        # Connected graphs up to isomorphism on 1..4 vertices
        instance = GraphInstance(4)
        self.assertEqual([len(instance.generators(d)) for d in range(1, 5)], [1, 1, 2, 6])
        with self.assertRaises(UnsupportedSizeError):
            GraphInstance(6).generators(6)

    def test_edge_operations(self):
        path = Graph.path(3)
        self.assertEqual(path.contract_edge((0, 1)), Graph.path(2))
        deleted = path.delete_edge((0, 1))
        self.assertEqual(deleted.components(), [[0], [1, 2]])
        self.assertEqual(Graph.complete(4).bit_string(), "111111")
        self.assertEqual(path.induced([0, 2]), Graph.empty(2))
        with self.assertRaises(InvalidInputError):
            Graph.from_edges(2, [(1, 1)])

    def test_state_and_coproduct(self):
        instance = GraphInstance(6)
        g = read_edge_list(self.data / "paw_and_edge.txt")
        self.assertEqual(g.vertices, 6)
        state = instance.state(g)
        self.assertEqual(state.length, 2)
        self.assertEqual(sorted(c.degree for c in state.letters), [2, 4])
        self.assertTrue(nx.is_isomorphic(instance.graph_of(state).to_networkx(), g.to_networkx()))
        edge = instance.state(Graph.path(2))
        point = instance.state(Graph.empty(1))
        self.assertEqual(instance.coproduct(edge)[(point, point)], 2)
        self.assertEqual(instance.coproduct(edge).coefficient_sum(), 4)

    def test_read_edge_list(self):
        g = read_edge_list(self.data / "path4.txt")
        self.assertEqual(g, Graph.path(4))
        with self.assertRaises(InvalidInputError):
            read_edge_list(self.data / "missing.txt")

    def test_labeled_graphs(self):
        instance = LabeledGraphInstance(4)
        self.assertEqual(len(instance.generators(2)), 1)
        self.assertEqual(len(instance.generators(3)), 5)
        self.assertEqual(Graph.empty(3).cut_indices(), [1, 2])
        self.assertEqual(Graph.from_edges(3, [(0, 2)]).cut_indices(), [])
        two_edges = Graph.from_edges(4, [(0, 1), (2, 3)])
        state = instance.state(two_edges)
        self.assertEqual(state.length, 2)
        self.assertEqual(instance.graph_of(state), two_edges)
        with self.assertRaises(InvalidInputError):
            instance.generator_for(Graph.empty(2))


class SimplicialTestCase(unittest.TestCase):
    def setUp(self) -> None:
        self.data = Path(__file__).resolve().parent.parent / "HopfChains" / "data"

    def test_enumeration(self):
        self.assertEqual(sum(1 for _ in all_complexes(3)), 9)
        instance = SimplicialInstance(4)
        self.assertEqual([len(instance.generators(d)) for d in range(1, 4)], [1, 1, 3])

    def test_faces(self):
        points = SimplicialComplex.points(3)
        self.assertEqual(len(points.facets), 3)
        self.assertFalse(points.is_connected())
        simplex = SimplicialComplex.simplex(3)
        self.assertEqual(len(simplex.all_faces()), 7)
        self.assertEqual(simplex.skeleton(), Graph.complete(3))
        with self.assertRaises(InvalidInputError):
            SimplicialComplex.from_faces(2, [(0, 2)])

    def test_read_face_list(self):
        c = read_face_list(self.data / "triangle_tail.txt")
        self.assertEqual(c.vertices, 4)
        self.assertEqual(c.facets, frozenset({frozenset({0, 1, 2}), frozenset({2, 3})}))
        self.assertEqual(len(c.skeleton().edges), 4)
        instance = SimplicialInstance(4)
        self.assertEqual(instance.state(c).length, 1)

    def test_canonical_form(self):
        c = SimplicialComplex.from_faces(4, [(0, 1, 2), (2, 3)])
        flipped = c.relabeled([3, 2, 1, 0])
        self.assertEqual(complex_canonicalize(c), complex_canonicalize(flipped))
        self.assertIs(complex_canonicalize(flipped), complex_canonicalize(flipped))
        hollow = SimplicialComplex.from_faces(3, [(0, 1), (1, 2), (0, 2)])
        self.assertNotEqual(complex_canonicalize(hollow),
                            complex_canonicalize(SimplicialComplex.simplex(3)))

    def test_coproduct(self):
        instance = SimplicialInstance(3)
        filled = instance.state(SimplicialComplex.simplex(3))
        point = instance.state(SimplicialComplex.points(1))
        edge = instance.state(SimplicialComplex.simplex(2))
        coproduct = instance.coproduct(filled)
        self.assertEqual(coproduct[(point, edge)], 3)
        self.assertEqual(coproduct.coefficient_sum(), 8)


if __name__ == "__main__":
    unittest.main()
