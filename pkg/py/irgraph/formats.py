"""Reading and writing graphs: graph6, Graphviz DOT and JSON edge lists.
"""
from __future__ import print_function, division

import collections

import graphviz
import networkx as nx

from .graph import Graph, GraphError, MAX_VERTICES


GRAPH6_HEADER = '>>graph6<<'


class Graph6Error(GraphError):
    """Malformed graph6 input."""


def _graph6_size(data):
    """Decode the vertex count.  Returns (n, number of bytes used)."""
    if not data:
        raise Graph6Error('Empty graph6 string')
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error('Truncated 8-byte graph6 length field')
        n = 0
        for byte in data[2:8]:
            n = (n << 6) | (byte - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error('Truncated 4-byte graph6 length field')
    n = 0
    for byte in data[1:4]:
        n = (n << 6) | (byte - 63)
    if n < 63:
        raise Graph6Error(
            'Non-canonical graph6 length field for n={}'.format(n))
    return n, 4


def to_networkx(G):
    """The graph as a :class:`networkx.Graph` on nodes ``0..n-1``."""
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges())
    return g


def from_networkx(g):
    """Convert a networkx graph, numbering nodes in sorted order."""
    mapping = {v: i for i, v in enumerate(sorted(g.nodes()))}
    return Graph.from_edges(len(mapping), [(mapping[u], mapping[v])
                                           for u, v in g.edges()])


def parse_graph6(text):
    """Decode one graph6 string.

    The body is decoded by :func:`networkx.from_graph6_bytes`.  The length
    field, character range, vertex cap and padding bits are checked here.

    Parameters
    ----------
    text : bytes or str
        One encoded graph, optionally preceded by ``>>graph6<<`` and
        followed by whitespace.

    Returns
    -------
    Graph
        The decoded graph.

    Raises
    ------
    Graph6Error
        If the length field or body is malformed, the padding bits are
        nonzero, or the graph has more than :data:`MAX_VERTICES` vertices.
    """
    if isinstance(text, bytes):
        text = text.decode('ascii', errors='replace')
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    try:
        data = bytearray(text.encode('ascii'))
    except UnicodeEncodeError:
        raise Graph6Error('Non-ASCII character in graph6 input')
    for byte in data:
        if not 63 <= byte <= 126:
            raise Graph6Error('Invalid graph6 character {!r}'.format(
                chr(byte)))
    n, offset = _graph6_size(data)
    if n > MAX_VERTICES:
        raise Graph6Error('graph6 input has {} vertices, limit is {}'.format(
            n, MAX_VERTICES))
    try:
        g = nx.from_graph6_bytes(bytes(data))
    except (nx.NetworkXError, ValueError) as err:
        raise Graph6Error('Bad graph6 body for n={}: {}'.format(n, err))
    body = data[offset:]
    padding = 6 * len(body) - n * (n - 1) // 2
    if body and (body[-1] - 63) & ((1 << padding) - 1):
        raise Graph6Error('Nonzero padding bits in graph6 input')
    return from_networkx(g)


def emit_graph6(G, header=False):
    """Encode a graph as a graph6 string (no trailing newline)."""
    text = nx.to_graph6_bytes(to_networkx(G), header=False)
    text = text.strip().decode('ascii')
    return GRAPH6_HEADER + text if header else text


CensusEntry = collections.namedtuple(
    'CensusEntry', ['index', 'text', 'graph', 'error'])
CensusEntry.__doc__ = """One line of a graph6 stream.

Exactly one of ``graph`` and ``error`` is None.  ``index`` counts non-blank
lines from zero.
"""


def read_graph6_lines(lines):
    """Decode a graph6 stream one line at a time.

    Blank lines are skipped.  Undecodable lines are returned with their
    error message instead of being dropped.

    Parameters
    ----------
    lines : iterable of str or bytes
        Lines of a file or standard input.

    Yields
    ------
    CensusEntry
    """
    index = 0
    for line in lines:
        if isinstance(line, bytes):
            line = line.decode('ascii', errors='replace')
        text = line.strip()
        if not text:
            continue
        try:
            yield CensusEntry(index, text, parse_graph6(text), None)
        except GraphError as err:
            yield CensusEntry(index, text, None, str(err))
        index += 1


def to_dot(G, name='G', node_labels=None, edge_labels=None):
    """Graphviz source for an undirected graph.

    Parameters
    ----------
    G : Graph
        Graph to draw.
    name : str
        Graph name in the DOT header.
    node_labels : sequence of str or None
        Node labels, defaulting to the graph's vertex labels.
    edge_labels : dict or None
        Optional map from (u, v) with u < v to an edge label.

    Returns
    -------
    str
        DOT source.
    """
    dot = graphviz.Graph(name=name)
    for v in range(G.n):
        label = node_labels[v] if node_labels is not None else G.label(v)
        dot.node(str(v), label=label)
    for u, v in G.edges():
        label = edge_labels.get((u, v)) if edge_labels else None
        if label is None:
            dot.edge(str(u), str(v))
        else:
            dot.edge(str(u), str(v), label=label)
    return dot.source


def to_json(G):
    """JSON-ready edge list: ``{"n": n, "edges": [[u, v], ...]}``."""
    result = collections.OrderedDict()
    result['n'] = G.n
    result['edges'] = [[u, v] for u, v in G.edges()]
    if G.labels:
        result['labels'] = list(G.labels)
    return result


def graph_from_json(data):
    """Inverse of :func:`to_json`.  Extra keys are ignored."""
    try:
        n = int(data['n'])
        edges = [(int(u), int(v)) for u, v in data['edges']]
    except (KeyError, TypeError, ValueError) as err:
        raise GraphError('Not a JSON edge list: {}'.format(err))
    return Graph.from_edges(n, edges, data.get('labels'))
