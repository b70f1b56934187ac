"""Simple labeled graphs stored as adjacency bitsets.

Vertices are the integers ``0..n-1``.  Row ``v`` of the adjacency is a Python
int whose bit ``u`` is set when ``u`` and ``v`` are adjacent.  Vertex sets use
the same representation: a non-negative int whose bit ``i`` marks vertex
``i``.  Helper functions :func:`vertex_set` and :func:`members` convert
between bitsets and vertex lists.

Standard families are numbered deterministically: centers first, then the
legs (or leaves) in the order given, each leg listed from the center outwards.
"""
from __future__ import print_function, division

import collections
import itertools
import re

import numpy as np

import scipy.sparse
import scipy.sparse.csgraph


#: Largest vertex count accepted anywhere in the package.
MAX_VERTICES = 128


class GraphError(ValueError):
    """Invalid graph, vertex set or family parameters."""


class LimitExceededError(RuntimeError):
    """A computation was refused because it would exceed a configured cap.

    Parameters
    ----------
    what : str
        Short description of the quantity that was capped.
    limit : int
        The configured cap.
    count : int
        Observed count.  For enumerations that stop as soon as the cap is
        passed this is a lower bound on the true count.
    """
    def __init__(self, what, limit, count):
        self.what = what
        self.limit = limit
        self.count = count
        super(LimitExceededError, self).__init__(
            '{} count {} exceeds limit {}'.format(what, count, limit))


def popcount(mask):
    """Number of set bits in ``mask``."""
    return bin(mask).count('1')


def members(mask):
    """Ascending list of the vertices in the bitset ``mask``."""
    result = []
    while mask:
        low = mask & -mask
        result.append(low.bit_length() - 1)
        mask ^= low
    return result


def vertex_set(vertices):
    """Bitset containing each vertex index in ``vertices``."""
    mask = 0
    for v in vertices:
        v = int(v)
        if v < 0:
            raise GraphError('Negative vertex index {}'.format(v))
        mask |= 1 << v
    return mask


class Graph(object):
    """Immutable simple graph on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices, 0 <= n <= :data:`MAX_VERTICES`.
    adj : sequence of int
        Neighbor bitset of each vertex.  Must be symmetric and irreflexive,
        with no bits at positions >= n.
    labels : sequence of str or None
        Optional unique display names for the vertices.
    """
    __slots__ = ('n', 'adj', 'closed', 'labels')

    def __init__(self, n, adj, labels=None):
        n = int(n)
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError('Vertex count {} outside 0..{}'.format(
                n, MAX_VERTICES))
        adj = tuple(int(row) for row in adj)
        if len(adj) != n:
            raise GraphError('Expected {} adjacency rows, got {}'.format(
                n, len(adj)))
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row < 0 or row & ~full:
                raise GraphError('Row {} has neighbors outside 0..{}'.format(
                    v, n - 1))
            if row >> v & 1:
                raise GraphError('Vertex {} is adjacent to itself'.format(v))
            for u in members(row):
                if not adj[u] >> v & 1:
                    raise GraphError(
                        'Adjacency is not symmetric for {}, {}'.format(u, v))
        if labels is not None:
            labels = tuple(str(label) for label in labels)
            if len(labels) != n:
                raise GraphError('Expected {} labels, got {}'.format(
                    n, len(labels)))
            if len(set(labels)) != n:
                raise GraphError('Vertex labels must be unique')
        self.n = n
        self.adj = adj
        self.closed = tuple(row | (1 << v) for v, row in enumerate(adj))
        self.labels = labels

    @classmethod
    def from_edges(cls, n, edges, labels=None):
        """Build a graph from an iterable of vertex pairs.

        Repeated edges are merged.  Loops and out-of-range endpoints raise
        :class:`GraphError`.
        """
        n = int(n)
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError('Vertex count {} outside 0..{}'.format(
                n, MAX_VERTICES))
        rows = [0] * n
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError('Edge ({}, {}) outside 0..{}'.format(
                    u, v, n - 1))
            if u == v:
                raise GraphError('Loop at vertex {}'.format(u))
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, labels)

    @classmethod
    def from_labeled_edges(cls, labels, edges):
        """Build a graph from vertex names and pairs of names."""
        index = {label: i for i, label in enumerate(labels)}
        try:
            pairs = [(index[a], index[b]) for a, b in edges]
        except KeyError as err:
            raise GraphError('Unknown vertex label {}'.format(err))
        return cls.from_edges(len(labels), pairs, labels)

    @property
    def full_set(self):
        """Bitset of all vertices."""
        return (1 << self.n) - 1

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.n == other.n and
                self.adj == other.adj)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return 'Graph(n={}, edges={})'.format(self.n, self.number_of_edges())

    def label(self, v):
        """Display name of vertex ``v``."""
        return self.labels[v] if self.labels else str(v)

    def index(self, label):
        """Vertex index with display name ``label``."""
        if self.labels is None:
            v = int(label)
            if not 0 <= v < self.n:
                raise GraphError('No vertex {}'.format(label))
            return v
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise GraphError('No vertex labeled {}'.format(label))

    def named_set(self, labels):
        """Bitset of the vertices with the given display names."""
        return vertex_set(self.index(label) for label in labels)

    def format_set(self, mask):
        """Format a vertex bitset as ``{a,b,c}`` using display names."""
        return '{' + ','.join(self.label(v) for v in members(mask)) + '}'

    def check_subset(self, mask):
        """Raise :class:`GraphError` unless ``mask`` is a set of vertices."""
        if mask < 0 or mask & ~self.full_set:
            raise GraphError('Vertex set {} is not a subset of 0..{}'.format(
                members(abs(mask)), self.n - 1))

    def neighbors(self, v):
        """Open neighborhood N(v) as a bitset."""
        return self.adj[v]

    def degree(self, v):
        return popcount(self.adj[v])

    def degrees(self):
        """Array of vertex degrees."""
        return np.array([popcount(row) for row in self.adj], dtype=int)

    def number_of_edges(self):
        return sum(popcount(row) for row in self.adj) // 2

    def edges(self):
        """List of edges (u, v) with u < v in ascending order."""
        return [(u, v) for u in range(self.n)
                for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def adjacency_matrix(self):
        """Dense 0/1 adjacency matrix."""
        matrix = np.zeros((self.n, self.n), dtype=np.int8)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1
        return matrix

    def induced_subgraph(self, mask):
        """Subgraph induced by a vertex bitset, renumbered in ascending order.

        Labels are carried over so that the result can be compared with
        other labeled graphs by name.
        """
        self.check_subset(mask)
        keep = members(mask)
        position = {v: i for i, v in enumerate(keep)}
        edges = [(position[u], position[v]) for u, v in self.edges()
                 if u in position and v in position]
        labels = [self.label(v) for v in keep] if self.labels else None
        return Graph.from_edges(len(keep), edges, labels)

    def delete_vertex(self, v):
        """Graph with vertex ``v`` removed, labels preserved."""
        if not 0 <= v < self.n:
            raise GraphError('No vertex {}'.format(v))
        return self.induced_subgraph(self.full_set & ~(1 << v))

    def relabel(self, permutation):
        """Graph with vertex ``v`` renamed to ``permutation[v]``."""
        permutation = [int(p) for p in permutation]
        if sorted(permutation) != list(range(self.n)):
            raise GraphError('Not a permutation of 0..{}'.format(self.n - 1))
        edges = [(permutation[u], permutation[v]) for u, v in self.edges()]
        labels = None
        if self.labels:
            labels = [None] * self.n
            for v, p in enumerate(permutation):
                labels[p] = self.labels[v]
        return Graph.from_edges(self.n, edges, labels)

    def complement(self):
        full = self.full_set
        return Graph(self.n, [full & ~row & ~(1 << v)
                              for v, row in enumerate(self.adj)], self.labels)

    def labeled_edges(self):
        """Set of edges as frozensets of display names."""
        return {frozenset((self.label(u), self.label(v)))
                for u, v in self.edges()}


def open_neighborhood(G, mask):
    """N(D): union of the open neighborhoods of the vertices in ``mask``."""
    result = 0
    for v in members(mask):
        result |= G.adj[v]
    return result


def closed_neighborhood(G, mask):
    """N[D]: union of the closed neighborhoods of the vertices in ``mask``."""
    result = 0
    for v in members(mask):
        result |= G.closed[v]
    return result


def empty_graph(n):
    return Graph(n, [0] * n)


def disjoint_union(G, H):
    """G + H, with the vertices of H shifted by ``G.n``."""
    if G.n + H.n > MAX_VERTICES:
        raise GraphError('Union has {} vertices, limit is {}'.format(
            G.n + H.n, MAX_VERTICES))
    rows = list(G.adj) + [row << G.n for row in H.adj]
    labels = None
    if G.labels and H.labels and not set(G.labels) & set(H.labels):
        labels = G.labels + H.labels
    return Graph(G.n + H.n, rows, labels)


def cartesian_product(G, H):
    """G x H with vertex (i, j) numbered ``i * H.n + j``."""
    n = G.n * H.n
    if n > MAX_VERTICES:
        raise GraphError('Product has {} vertices, limit is {}'.format(
            n, MAX_VERTICES))
    edges = []
    for i in range(G.n):
        for j, k in H.edges():
            edges.append((i * H.n + j, i * H.n + k))
    for i, k in G.edges():
        for j in range(H.n):
            edges.append((i * H.n + j, k * H.n + j))
    return Graph.from_edges(n, edges)


FamilySpec = collections.namedtuple('FamilySpec', ['kind', 'params'])
FamilySpec.__doc__ = """Tagged description of a standard graph family.

``kind`` is one of the keys of :data:`FAMILY_BUILDERS`; ``params`` is a
tuple of ints, a pair of leg tuples for double spiders, or a tuple of
:class:`FamilySpec` for ``union`` and ``product``.
"""


def _require(condition, message):
    if not condition:
        raise GraphError(message)


def complete(n):
    _require(n >= 0, 'Complete graph needs n >= 0')
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def path(n):
    _require(n >= 1, 'Path needs n >= 1')
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    _require(n >= 3, 'Cycle needs n >= 3')
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(k):
    """K_{1,k} with center 0 and leaves 1..k."""
    _require(k >= 1, 'Star needs k >= 1')
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def _legs(first, center, lengths, edges):
    """Append legs of the given lengths hanging from ``center``."""
    nxt = first
    for length in lengths:
        prev = center
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return nxt


def spider(lengths):
    """Sp(l1,...,lk): center 0, then each leg from the center outwards."""
    lengths = tuple(int(l) for l in lengths)
    _require(len(lengths) >= 2, 'Spider needs k >= 2 legs')
    _require(all(l >= 1 for l in lengths), 'Spider legs need length >= 1')
    edges = []
    n = _legs(1, 0, lengths, edges)
    return Graph.from_edges(n, edges)


def double_spider(lengths1, lengths2):
    """Sp(l1,..,lk; m1,..,mn): centers 0 and 1, legs of 0 then legs of 1."""
    lengths1 = tuple(int(l) for l in lengths1)
    lengths2 = tuple(int(m) for m in lengths2)
    _require(len(lengths1) >= 1 and len(lengths2) >= 1,
             'Double spider needs at least one leg on each center')
    _require(all(l >= 1 for l in lengths1 + lengths2),
             'Double spider legs need length >= 1')
    edges = [(0, 1)]
    n = _legs(2, 0, lengths1, edges)
    n = _legs(n, 1, lengths2, edges)
    return Graph.from_edges(n, edges)


def double_star(k, n):
    """S(k,n): centers 0 and 1, then k leaves of 0, then n leaves of 1."""
    _require(k >= 1 and n >= 1, 'Double star needs k, n >= 1')
    return double_spider((1,) * k, (1,) * n)


def hypercube(n):
    """Q_n on the integers 0..2^n-1, adjacent when they differ in one bit."""
    _require(0 <= n and (1 << n) <= MAX_VERTICES,
             'Hypercube dimension {} out of range'.format(n))
    size = 1 << n
    return Graph.from_edges(size, [(v, v ^ (1 << b)) for v in range(size)
                                   for b in range(n) if v < v ^ (1 << b)])


def _fold(operation, specs):
    specs = list(specs)
    _require(len(specs) >= 1, 'Empty operand list')
    result = build_family(specs[0])
    for spec in specs[1:]:
        result = operation(result, build_family(spec))
    return result


FAMILY_BUILDERS = {
    'complete': lambda p: complete(*p),
    'empty': lambda p: empty_graph(*p),
    'path': lambda p: path(*p),
    'cycle': lambda p: cycle(*p),
    'star': lambda p: star(*p),
    'doublestar': lambda p: double_star(*p),
    'spider': lambda p: spider(p),
    'doublespider': lambda p: double_spider(*p),
    'hypercube': lambda p: hypercube(*p),
    'union': lambda p: _fold(disjoint_union, p),
    'product': lambda p: _fold(cartesian_product, p),
}


def build_family(spec):
    """Build the graph described by a :class:`FamilySpec`."""
    try:
        builder = FAMILY_BUILDERS[spec.kind]
    except KeyError:
        raise GraphError('Unknown graph family {}'.format(spec.kind))
    try:
        return builder(spec.params)
    except TypeError:
        raise GraphError('Bad parameters for {}: {}'.format(
            spec.kind, spec.params))


_SIMPLE_FAMILY = re.compile(
    r'^(complete|empty|path|cycle|star|hypercube)(\d+)$')
_LIST_FAMILY = re.compile(r'^(doublestar|spider|doublespider):([\d,;]+)$')


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(','))
    except ValueError:
        raise GraphError('Expected comma-separated integers: {}'.format(text))


def parse_family(text):
    """Parse the family grammar into a :class:`FamilySpec`.

    Terms are ``completeN``, ``emptyN``, ``pathN``, ``cycleN``, ``starK``,
    ``hypercubeN``, ``doublestar:K,N``, ``spider:L1,...,Lk`` and
    ``doublespider:L1,...;M1,...``.  ``*`` forms Cartesian products and
    binds tighter than ``+``, which forms disjoint unions.
    """
    text = text.strip().lower()
    if '+' in text:
        return FamilySpec('union', tuple(
            parse_family(part) for part in text.split('+')))
    if '*' in text:
        return FamilySpec('product', tuple(
            parse_family(part) for part in text.split('*')))
    match = _SIMPLE_FAMILY.match(text)
    if match:
        return FamilySpec(match.group(1), (int(match.group(2)),))
    match = _LIST_FAMILY.match(text)
    if match:
        kind, args = match.groups()
        if kind == 'doublespider':
            parts = args.split(';')
            _require(len(parts) == 2, 'doublespider needs L...;M...')
            return FamilySpec(kind, (_int_list(parts[0]),
                                     _int_list(parts[1])))
        _require(';' not in args, '{} takes one list'.format(kind))
        return FamilySpec(kind, _int_list(args))
    raise GraphError('Unrecognized graph family: {}'.format(text))


def family_graph(text):
    """Shortcut for ``build_family(parse_family(text))``."""
    return build_family(parse_family(text))


def _csgraph(G):
    return scipy.sparse.csr_matrix(G.adjacency_matrix())


def components(G):
    """Vertex bitsets of the connected components, by smallest vertex."""
    if G.n == 0:
        return []
    _, labels = scipy.sparse.csgraph.connected_components(
        _csgraph(G), directed=False)
    found = collections.OrderedDict()
    for v, label in enumerate(labels):
        found[label] = found.get(label, 0) | (1 << v)
    return list(found.values())


def is_connected(G):
    """Connectivity test.  The null graph counts as connected."""
    return len(components(G)) <= 1


def distance_matrix(G):
    """All-pairs BFS distances as floats, ``inf`` between components."""
    if G.n == 0:
        return np.zeros((0, 0))
    return scipy.sparse.csgraph.shortest_path(
        _csgraph(G), directed=False, unweighted=True)


def _finite(d):
    return int(d) if np.isfinite(d) else np.inf


def distance(G, u, v):
    """BFS distance between ``u`` and ``v``, ``numpy.inf`` if unreachable."""
    if not (0 <= u < G.n and 0 <= v < G.n):
        raise GraphError('No vertex pair ({}, {})'.format(u, v))
    d = scipy.sparse.csgraph.shortest_path(
        _csgraph(G), directed=False, unweighted=True, indices=u)
    return _finite(d[v])


def diameter(G):
    """Largest distance, ``numpy.inf`` if disconnected, 0 for n <= 1."""
    if G.n <= 1:
        return 0
    return _finite(distance_matrix(G).max())


def _has_non_edge(G, mask):
    for b in members(mask):
        if mask & ~G.closed[b]:
            return True
    return False


def on_induced_c4(G, v):
    """Does vertex ``v`` lie on an induced 4-cycle?

    Every vertex of a 4-cycle has an opposite vertex, so it suffices to look
    for a non-neighbor ``c`` whose common neighborhood with ``v`` contains a
    non-adjacent pair.
    """
    others = G.full_set & ~G.closed[v]
    for c in members(others):
        if _has_non_edge(G, G.adj[v] & G.adj[c]):
            return True
    return False


def has_induced_c4(G):
    """Do some four vertices induce exactly a 4-cycle?"""
    for a in range(G.n):
        later = G.full_set >> (a + 1) << (a + 1)
        for c in members(later & ~G.closed[a]):
            if _has_non_edge(G, G.adj[a] & G.adj[c]):
                return True
    return False


def has_triangle(G):
    for u, v in G.edges():
        if G.adj[u] & G.adj[v]:
            return True
    return False


def universal_vertices(G):
    """Bitset of the vertices adjacent to all other vertices."""
    full = G.full_set
    return vertex_set(v for v in range(G.n) if G.closed[v] == full)


def is_complete(G):
    return universal_vertices(G) == G.full_set


def max_degree(G):
    return max(G.degree(v) for v in range(G.n)) if G.n else 0


def independence_number(G, mask=None):
    """Size of a largest independent subset of ``mask`` (default: all)."""
    if mask is None:
        mask = G.full_set

    def best(candidates, size, record):
        if size + popcount(candidates) <= record:
            return record
        if not candidates:
            return size
        v = (candidates & -candidates).bit_length() - 1
        rest = candidates & ~(1 << v)
        record = best(rest & ~G.adj[v], size + 1, record)
        return best(rest, size, record)

    return best(mask, 0, 0)


def is_claw_free(G):
    """True unless some vertex has three pairwise non-adjacent neighbors."""
    for v in range(G.n):
        for a, b, c in itertools.combinations(members(G.adj[v]), 3):
            if not (G.adj[a] >> b & 1 or G.adj[a] >> c & 1 or
                    G.adj[b] >> c & 1):
                return False
    return True
