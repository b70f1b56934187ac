from __future__ import print_function, division

import unittest

import numpy as np

from ..graph import (GraphError, complete, disjoint_union, empty_graph,
                     is_connected, members, path)
from ..isomorphism import are_isomorphic
from ..irredundance import upper_irredundance
from ..reconfig import build_ir_graph
from ..constructions import *
from ..simulate import random_disconnected_graph
from ..formats import from_networkx
from .oracle import atlas


class TestDisconnectedSource(unittest.TestCase):

    def check(self, H, N=None, component=0):
        """Verify the full contract of one built source."""
        spec = DisconnectedSourceSpec(H, component=component, N=N)
        G, layout = build_disconnected_source(spec)
        N = spec.N
        self.assertEqual(G.n, H.n + 2 * N)
        IR, sets = upper_irredundance(G)
        self.assertEqual(IR, N + 1)
        self.assertEqual(sets, layout.expected_ir_sets())
        self.assertEqual(len(sets), H.n)
        irg = build_ir_graph(G)
        self.assertTrue(are_isomorphic(irg.graph, H))
        return G, layout

    def test_two_vertices(self):
        """Verify that two isolated vertices need six source vertices."""
        G, layout = self.check(empty_graph(2), N=2)
        self.assertEqual(G.n, 6)
        self.assertEqual(layout.x, [2, 3])
        self.assertEqual(layout.y, [4, 5])
        self.assertEqual((layout.h1, layout.h2), ([0], [1]))
        self.assertEqual(G.labels, ('0', '1', 'x1', 'x2', 'y1', 'y2'))

    def test_edge_plus_vertex(self):
        """Verify the construction for K2 + K1 with N = 3."""
        G, layout = self.check(disjoint_union(complete(2), complete(1)), N=3)
        self.assertEqual(G.n, 9)

    def test_recipe(self):
        """Test that the edges follow the construction exactly."""
        H = disjoint_union(path(2), empty_graph(1))
        G, layout = build_disconnected_source(DisconnectedSourceSpec(H, N=3))
        x1, x2, x3 = layout.x
        y1, y2, y3 = layout.y
        expected = set(H.edges())
        expected |= {(x1, x2), (x1, x3), (x2, x3), (y1, y2), (y1, y3),
                     (y2, y3), (x2, y2), (x3, y3)}
        expected |= {(u, a) for a in (x1, x2, x3, y1) for u in (0, 1)}
        expected |= {(2, b) for b in (y1, y2, y3, x1)}
        self.assertEqual(set(G.edges()), expected)

    def test_component_choice(self):
        """Verify that any component may play the role of H1."""
        H = disjoint_union(complete(1), path(3))
        for component in (0, 1):
            G, layout = self.check(H, component=component)
        self.assertEqual(layout.h1, [1, 2, 3])

    def test_all_small_targets(self):
        """Verify every disconnected target with at most five vertices."""
        for g in atlas(5, min_n=2):
            H = from_networkx(g)
            if not is_connected(H):
                self.check(H)

    def test_random_targets(self):
        """Verify random targets with N = n and N = n + 1."""
        gen = np.random.RandomState(seed=31)
        for _ in range(5):
            H = random_disconnected_graph(gen.randint(2, 5), 0.5, gen)
            for extra in (0, 1):
                self.check(H, N=H.n + extra)

    def test_errors(self):
        """Test that connected targets, small N and overflow are rejected."""
        with self.assertRaises(GraphError):
            DisconnectedSourceSpec(path(3))
        with self.assertRaises(GraphError):
            DisconnectedSourceSpec(empty_graph(3), N=2)
        with self.assertRaises(GraphError):
            DisconnectedSourceSpec(empty_graph(3), component=3)
        with self.assertRaises(GraphError):
            DisconnectedSourceSpec(empty_graph(44))
        self.assertEqual(DisconnectedSourceSpec(empty_graph(42)).N, 42)


class TestFixtures(unittest.TestCase):

    def test_names(self):
        """Verify that fixtures are labeled and unknown names fail."""
        G = fixture('fig1-G')
        self.assertEqual(G.labels, tuple('abcdef'))
        self.assertEqual(G.number_of_edges(), 6)
        self.assertEqual(fixture('fig3-G').labels, tuple('abcefg'))
        with self.assertRaises(GraphError):
            fixture('fig2-G')

    def test_deletion(self):
        """Test that deleting d from the seven-vertex fixture gives the six."""
        F = fixture('fig4-F')
        G = F.delete_vertex(F.index('d'))
        self.assertEqual(G, fixture('fig3-G'))
        self.assertEqual(G.labels, fixture('fig3-G').labels)
        self.assertEqual(members(F.adj[F.index('d')]),
                         [F.index(v) for v in 'abcf'])


if __name__ == '__main__':
    unittest.main()
