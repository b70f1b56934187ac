"""IR-graphs: maximum irredundant sets reconfigured by sliding one token.

Two IR-sets D and D' are adjacent when D' = (D - {u}) | {v} for an edge uv
of the source graph.
"""
from __future__ import print_function, division

import collections

from desiutil.log import get_logger

from .graph import Graph, distance, members, popcount
from .formats import emit_graph6, to_dot, to_json
from .irredundance import upper_irredundance


#: Default cap on the number of IR-sets, i.e. IR-graph nodes.
DEFAULT_MAX_SETS = 20000


def token_slide_adjacent(G, D, D2):
    """Swap pair (u, v) taking D to D2 by one slide along an edge, or None.

    Parameters
    ----------
    G : Graph
        Source graph.
    D, D2 : int
        Vertex bitsets.

    Returns
    -------
    tuple or None
        (u, v) with D - D2 = {u}, D2 - D = {v} and uv an edge of G.
    """
    G.check_subset(D)
    G.check_subset(D2)
    out, into = D & ~D2, D2 & ~D
    if popcount(out) != 1 or popcount(into) != 1:
        return None
    u, v = out.bit_length() - 1, into.bit_length() - 1
    if G.adj[u] >> v & 1:
        return u, v
    return None


Swap = collections.namedtuple('Swap', ['i', 'j', 'u', 'v'])
Swap.__doc__ = """Labeled IR-graph edge: node i minus u plus v is node j."""


class IRGraph(object):
    """The IR-graph of a source graph.

    Parameters
    ----------
    source : Graph
        The source graph.
    IR : int
        Upper irredundance number of the source.
    nodes : list of int
        All IR-sets of the source in canonical order.
    edges : list of Swap
        Labeled edges, each listed in both directions, ordered by (i, j).

    Attributes
    ----------
    graph : Graph
        Simple graph on the node indices, labeled by the IR-sets.
    """
    def __init__(self, source, IR, nodes, edges):
        self.source = source
        self.IR = IR
        self.nodes = list(nodes)
        self.edges = list(edges)
        self._index = {X: i for i, X in enumerate(self.nodes)}
        self.graph = Graph.from_edges(
            len(self.nodes), [(e.i, e.j) for e in self.edges if e.i < e.j],
            [source.format_set(X) for X in self.nodes])

    def __len__(self):
        return len(self.nodes)

    def __contains__(self, X):
        return X in self._index

    def index_of(self, X):
        """Node index of the IR-set X (a bitset)."""
        try:
            return self._index[X]
        except KeyError:
            raise KeyError('{} is not an IR-set'.format(
                self.source.format_set(X)))

    def distance(self, i, j):
        """Distance between nodes i and j, ``numpy.inf`` if unreachable."""
        return distance(self.graph, i, j)

    def swap_label(self, swap):
        return u'{}→{}'.format(self.source.label(swap.u),
                               self.source.label(swap.v))

    def summary(self):
        lines = ['IR={} nodes={} edges={}'.format(
            self.IR, len(self.nodes), self.graph.number_of_edges())]
        for i, X in enumerate(self.nodes):
            lines.append('{}: {}'.format(i, self.source.format_set(X)))
        for e in self.edges:
            if e.i < e.j:
                lines.append('{} -- {} [{}]'.format(
                    e.i, e.j, self.swap_label(e)))
        return '\n'.join(lines)

    def to_dict(self):
        """JSON-ready form.

        The top-level ``n`` and ``edges`` describe the simple graph view, so
        the output is also a plain edge list.
        """
        result = to_json(self.graph)
        result['source'] = emit_graph6(self.source)
        result['IR'] = self.IR
        result['nodes'] = [members(X) for X in self.nodes]
        result['swaps'] = [[e.i, e.j, e.u, e.v] for e in self.edges]
        return result

    def to_dot(self, name='IR'):
        labels = {(e.i, e.j): self.swap_label(e)
                  for e in self.edges if e.i < e.j}
        return to_dot(self.graph, name=name, edge_labels=labels)


def build_ir_graph(G, max_sets=DEFAULT_MAX_SETS):
    """Build the IR-graph of G.

    Pairs of IR-sets are compared through the popcount of their symmetric
    difference; only pairs differing in exactly two vertices are examined
    further.

    Parameters
    ----------
    G : Graph
        Source graph.
    max_sets : int or None
        Refuse sources with more IR-sets than this.

    Returns
    -------
    IRGraph

    Raises
    ------
    LimitExceededError
        If G has more than ``max_sets`` IR-sets.
    """
    IR, nodes = upper_irredundance(G, max_sets=max_sets)
    edges = []
    # O(m^2) over the IR-sets; this is the hot loop.
    for i, a in enumerate(nodes):
        for j in range(i + 1, len(nodes)):
            b = nodes[j]
            if popcount(a ^ b) != 2:
                continue
            u = (a & ~b).bit_length() - 1
            v = (b & ~a).bit_length() - 1
            if G.adj[u] >> v & 1:
                edges.append(Swap(i, j, u, v))
                edges.append(Swap(j, i, v, u))
    edges.sort(key=lambda e: (e.i, e.j))
    get_logger().debug('IR-graph with %d nodes and %d edges',
                       len(nodes), len(edges) // 2)
    return IRGraph(G, IR, nodes, edges)
