"""Source graphs with prescribed IR-graphs, and the reference fixtures.

:func:`build_disconnected_source` realizes any disconnected target H as an
IR-graph.  Choose a component H1 of H and let H2 be the rest; add cliques X
and Y of size N >= |V(H)|, join X and y1 to all of H1, join Y and x1 to all
of H2, and match x_i with y_i for i >= 2.  The IR-sets are then exactly
{u} | X for u in H1 and {v} | Y for v in H2, IR = N + 1, and the IR-graph is
isomorphic to H.
"""
from __future__ import print_function, division

from desiutil.log import get_logger

from .graph import (Graph, GraphError, MAX_VERTICES, components, members,
                    vertex_set)


class DisconnectedSourceSpec(object):
    """Parameters of :func:`build_disconnected_source`.

    Parameters
    ----------
    H : Graph
        Disconnected target graph.
    component : int
        Index of the component used as H1, components being ordered by their
        smallest vertex.  The default 0 picks the component of vertex 0.
    N : int or None
        Clique size, at least ``H.n``.  Defaults to ``H.n``.
    """
    def __init__(self, H, component=0, N=None):
        parts = components(H)
        if len(parts) < 2:
            raise GraphError('Target graph must be disconnected')
        if not 0 <= component < len(parts):
            raise GraphError('Component index {} outside 0..{}'.format(
                component, len(parts) - 1))
        if N is None:
            N = H.n
        if N < H.n:
            raise GraphError('Need N >= {}, got {}'.format(H.n, N))
        if H.n + 2 * N > MAX_VERTICES:
            raise GraphError('Source would have {} vertices, limit is {}'
                             .format(H.n + 2 * N, MAX_VERTICES))
        self.H = H
        self.component = component
        self.N = N
        self.h1 = parts[component]
        self.h2 = H.full_set & ~self.h1


class SourceLayout(object):
    """Where the parts of a built source graph live.

    Attributes
    ----------
    h1, h2 : list of int
        Source vertices of H1 and H2 (they keep their indices from H).
    x, y : list of int
        Source vertices x1..xN and y1..yN.
    """
    def __init__(self, h1, h2, x, y):
        self.h1 = h1
        self.h2 = h2
        self.x = x
        self.y = y

    def expected_ir_sets(self):
        """The IR-sets {u} | X and {v} | Y, in canonical order."""
        X, Y = vertex_set(self.x), vertex_set(self.y)
        sets = [X | (1 << u) for u in self.h1] + [Y | (1 << v)
                                                  for v in self.h2]
        return sorted(sets, key=members)


def build_disconnected_source(spec):
    """Build the source graph for a disconnected target.

    Vertices are numbered H first (same indices as in H), then x1..xN, then
    y1..yN.

    Parameters
    ----------
    spec : DisconnectedSourceSpec
        Target, component choice and clique size.

    Returns
    -------
    tuple
        Tuple (G, layout) of the source graph and its :class:`SourceLayout`.
    """
    H, N = spec.H, spec.N
    h1, h2 = members(spec.h1), members(spec.h2)
    x = [H.n + i for i in range(N)]
    y = [H.n + N + i for i in range(N)]
    edges = list(H.edges())
    for clique in (x, y):
        edges.extend((a, b) for i, a in enumerate(clique)
                     for b in clique[i + 1:])
    edges.extend((a, u) for a in x + [y[0]] for u in h1)
    edges.extend((b, v) for b in y + [x[0]] for v in h2)
    edges.extend((x[i], y[i]) for i in range(1, N))
    labels = ([str(v) for v in range(H.n)] +
              ['x{}'.format(i + 1) for i in range(N)] +
              ['y{}'.format(i + 1) for i in range(N)])
    G = Graph.from_edges(H.n + 2 * N, edges, labels)
    get_logger().debug('Built source on %d vertices for target with %d '
                       'vertices, N=%d', G.n, H.n, N)
    return G, SourceLayout(h1, h2, x, y)


# Reconstructed from its known private-neighbor values: with these edges
# A={a,b,c} has PN(a)={d}, PN(b)={e}, PN(c)={f} and B={b,c,d} has
# PN(b)={b,e}, PN(c)={c}, PN(d)={d}.
_FIG1_G = ('abcdef', ['ab', 'ac', 'ad', 'be', 'cf', 'df'])

# Smallest source whose IR-graph is the double star S(2,2); equals fig4-F
# with d deleted.
_FIG3_G = ('abcefg', ['ab', 'ac', 'ae', 'bf', 'cg', 'eg', 'fg'])

# Smallest source whose IR-graph is the double spider Sp(1,1;1,2): fig3-G
# plus d joined to a, b, c and f.
_FIG4_F = ('abcdefg', _FIG3_G[1] + ['da', 'db', 'dc', 'df'])

FIXTURES = {
    'fig1-G': _FIG1_G,
    'fig3-G': _FIG3_G,
    'fig4-F': _FIG4_F,
}


def fixture(name):
    """One of the labeled reference graphs ``fig1-G``, ``fig3-G``, ``fig4-F``.
    """
    try:
        labels, edges = FIXTURES[name]
    except KeyError:
        raise GraphError('Unknown fixture {}; choose from {}'.format(
            name, ', '.join(sorted(FIXTURES))))
    return Graph.from_labeled_edges(list(labels),
                                    [tuple(e) for e in edges])
