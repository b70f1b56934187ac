"""Reproducible random graphs for property checks.
"""
from __future__ import print_function, division

import numpy as np

from .graph import Graph, GraphError, disjoint_union


def random_graph(n, p=0.5, gen=None):
    """Simulate an Erdos-Renyi graph G(n, p).

    Parameters
    ----------
    n : int
        Number of vertices.
    p : float
        Independent probability of each edge.
    gen : numpy.random.RandomState or None
        Use the specified random number generator for reproducible results.

    Returns
    -------
    Graph
        The simulated graph.
    """
    if not 0 <= p <= 1:
        raise GraphError('Edge probability {} outside [0, 1]'.format(p))
    if gen is None:
        gen = np.random.RandomState()
    # Draw the whole matrix so results depend only on (n, p, seed).
    draw = gen.uniform(size=(n, n)) < p
    rows, cols = np.nonzero(np.triu(draw, k=1))
    return Graph.from_edges(n, zip(rows.tolist(), cols.tolist()))


def random_relabel(G, gen=None):
    """Copy of G with its vertices randomly permuted.

    Returns
    -------
    tuple
        Tuple (H, permutation) where vertex v of G is vertex permutation[v]
        of H.
    """
    if gen is None:
        gen = np.random.RandomState()
    permutation = gen.permutation(G.n).tolist()
    return G.relabel(permutation), permutation


def random_disconnected_graph(n, p=0.5, gen=None):
    """Simulate a graph on n >= 2 vertices with at least two components.

    The vertices are split at a uniform cut point into two independent random
    graphs that are then placed side by side.
    """
    if n < 2:
        raise GraphError('A disconnected graph needs n >= 2')
    if gen is None:
        gen = np.random.RandomState()
    cut = gen.randint(1, n)
    return disjoint_union(random_graph(cut, p, gen),
                          random_graph(n - cut, p, gen))
