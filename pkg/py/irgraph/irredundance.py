"""Private neighborhoods, irredundance and domination, exact ir and IR.

A set D of vertices is irredundant when every v in D has a private neighbor
PN(v, D) = N[v] - N[D - {v}].  IR(G) is the largest size of an irredundant
set (an IR-set attains it) and ir(G) the smallest size of a maximal
irredundant set.

All vertex sets are bitsets; see :mod:`irgraph.graph`.
"""
from __future__ import print_function, division

import collections
import itertools

from desiutil.log import get_logger

from .graph import (GraphError, LimitExceededError, closed_neighborhood,
                    members, popcount, vertex_set)


#: Default cap on the number of flip-sets returned by one enumeration.
DEFAULT_FLIP_CAP = 4096


def _coverage(G, D):
    """Bitsets of vertices dominated at least once and at least twice."""
    once = twice = 0
    for v in members(D):
        c = G.closed[v]
        twice |= once & c
        once |= c
    return once, twice


def private_neighbors(G, D, v):
    """PN(v, D) = N[v] - N[D - {v}] as a bitset.

    Raises :class:`GraphError` when ``v`` is not in ``D``.
    """
    G.check_subset(D)
    if not D >> v & 1:
        raise GraphError('Vertex {} is not in {}'.format(
            G.label(v), G.format_set(D)))
    return G.closed[v] & ~closed_neighborhood(G, D & ~(1 << v))


def external_private_neighbors(G, D, v):
    """EPN(v, D) = PN(v, D) - {v}."""
    return private_neighbors(G, D, v) & ~(1 << v)


def is_irredundant(G, D):
    """Every member of D has a private neighbor.  The empty set qualifies."""
    G.check_subset(D)
    _, twice = _coverage(G, D)
    return all(G.closed[v] & ~twice for v in members(D))


def is_maximal_irredundant(G, D):
    """D is irredundant and adding any outside vertex breaks that."""
    if not is_irredundant(G, D):
        return False
    return not any(is_irredundant(G, D | (1 << w))
                   for w in members(G.full_set & ~D))


def is_dominating(G, D):
    """N[D] = V.  Only the empty graph is dominated by the empty set."""
    G.check_subset(D)
    return closed_neighborhood(G, D) == G.full_set


def is_minimal_dominating(G, D):
    """D dominates and no D - {v} does."""
    if not is_dominating(G, D):
        return False
    return not any(is_dominating(G, D & ~(1 << v)) for v in members(D))


def _search(G, bound, visit):
    """Depth-first walk over the irredundant sets of G.

    Vertices are added in ascending order, and only irredundant sets are
    extended: a subset of an irredundant set is irredundant, so every
    irredundant set is reached through irredundant prefixes.

    Parameters
    ----------
    G : Graph
        Graph to search.
    bound : callable
        ``bound()`` returns the smallest final size still of interest; a
        branch is cut when its size plus the number of unconsidered
        vertices falls below it.  Called at every step, so the caller may
        tighten it during the walk.
    visit : callable
        ``visit(D, size)`` is called on every irredundant set reached.
    """
    n = G.n
    closed = G.closed

    def walk(start, D, size, once, twice):
        visit(D, size)
        for v in range(start, n):
            if size + (n - v) < bound():
                break
            c = closed[v]
            twice_v = twice | (once & c)
            if not c & ~twice_v:
                continue
            if any(not closed[u] & ~twice_v for u in members(D)):
                continue
            walk(v + 1, D | (1 << v), size + 1, once | c, twice_v)

    walk(0, 0, 0, 0, 0)


def upper_irredundance_number(G):
    """IR(G), by branch and bound over irredundant sets."""
    best = [0]

    def visit(D, size):
        if size > best[0]:
            best[0] = size

    # Only branches that can beat the current record are explored.
    _search(G, lambda: best[0] + 1, visit)
    return best[0]


def upper_irredundance(G, max_sets=None):
    """IR(G) and every IR-set of G.

    The value of IR is found first with branch and bound; a second,
    exhaustive walk then collects all irredundant sets of that size.

    Parameters
    ----------
    G : Graph
        Source graph.
    max_sets : int or None
        Refuse to collect more than this many IR-sets.

    Returns
    -------
    tuple
        Tuple (IR, sets) where ``sets`` lists the IR-sets as bitsets in
        lexicographic order of their ascending vertex lists.

    Raises
    ------
    LimitExceededError
        If there are more than ``max_sets`` IR-sets.
    """
    IR = upper_irredundance_number(G)
    found = []

    def visit(D, size):
        if size == IR:
            found.append(D)
            if max_sets is not None and len(found) > max_sets:
                raise LimitExceededError('IR-set', max_sets, len(found))

    _search(G, lambda: IR, visit)
    found.sort(key=members)
    get_logger().debug('IR=%d with %d IR-sets on %d vertices',
                       IR, len(found), G.n)
    return IR, found


def lower_irredundance(G):
    """ir(G) and the lexicographically first maximal irredundant set of that
    size, found by trying subsets of increasing size.

    Returns
    -------
    tuple
        Tuple (ir, witness) with the witness as a bitset.
    """
    if G.n == 0:
        return 0, 0
    for k in range(1, G.n + 1):
        for combo in itertools.combinations(range(G.n), k):
            D = vertex_set(combo)
            if is_maximal_irredundant(G, D):
                return k, D
    raise AssertionError('No maximal irredundant set found')


SetInfo = collections.namedtuple(
    'SetInfo', ['vertices', 'independent', 'positive_degree', 'epn'])
SetInfo.__doc__ = """Structure of one irredundant set X.

``positive_degree`` counts the vertices with a neighbor inside X, and
``epn`` maps each member to its external private neighbors (a bitset).
"""


def describe_set(G, X):
    """Build the :class:`SetInfo` of an irredundant set X."""
    positive = [v for v in members(X) if G.adj[v] & X]
    epn = collections.OrderedDict(
        (v, external_private_neighbors(G, X, v)) for v in members(X))
    return SetInfo(X, not positive, len(positive), epn)


def epn_bearing(info):
    """Members of the set that have at least one external private neighbor."""
    return [v for v, mask in info.epn.items() if mask]


class IrredundanceReport(object):
    """Irredundance parameters of a graph together with all its IR-sets.

    Parameters
    ----------
    graph : Graph
        The source graph.
    ir : int
        Lower irredundance number.
    ir_witness : int
        A maximal irredundant set of size ``ir``, as a bitset.
    IR : int
        Upper irredundance number.
    ir_sets : list of int
        All IR-sets in canonical order.
    """
    def __init__(self, graph, ir, ir_witness, IR, ir_sets):
        assert ir <= IR, 'ir exceeds IR'
        self.graph = graph
        self.ir = ir
        self.ir_witness = ir_witness
        self.IR = IR
        self.ir_sets = list(ir_sets)
        self.sets_info = [describe_set(graph, X) for X in self.ir_sets]

    def summary(self):
        """One-line text form, e.g. ``ir=1 IR=1 sets=[{0},{1}]``."""
        return 'ir={} IR={} sets=[{}]'.format(
            self.ir, self.IR,
            ','.join(self.graph.format_set(X) for X in self.ir_sets))

    def to_dict(self):
        """JSON-ready form with vertex sets as sorted index arrays."""
        sets = []
        for info in self.sets_info:
            entry = collections.OrderedDict()
            entry['vertices'] = members(info.vertices)
            entry['independent'] = info.independent
            entry['positive_degree'] = info.positive_degree
            entry['epn'] = collections.OrderedDict(
                (str(v), members(mask)) for v, mask in info.epn.items())
            sets.append(entry)
        result = collections.OrderedDict()
        result['n'] = self.graph.n
        result['ir'] = self.ir
        result['ir_witness'] = members(self.ir_witness)
        result['IR'] = self.IR
        result['ir_sets'] = sets
        return result


def irredundance_report(G, max_sets=None):
    """Compute the full :class:`IrredundanceReport` of G."""
    ir, witness = lower_irredundance(G)
    IR, sets = upper_irredundance(G, max_sets=max_sets)
    return IrredundanceReport(G, ir, witness, IR, sets)


FlipChoice = collections.namedtuple('FlipChoice', ['Y', 'selector'])
FlipChoice.__doc__ = """Which vertices of X to flip, and what to flip them to.

``Y`` is a bitset of members of X; ``selector`` maps each y in Y to a vertex
of EPN(y, X).  Every member of X outside Y must be isolated in G[X].
"""

FlipSets = collections.namedtuple('FlipSets', ['sets', 'truncated'])
FlipSets.__doc__ = """Result of :func:`enumerate_flip_sets`.

``sets`` is canonically ordered; ``truncated`` is True when the cap stopped
the enumeration early.
"""


def _check_ir_set(G, X, ir_size):
    if not is_irredundant(G, X):
        raise GraphError('{} is not irredundant'.format(G.format_set(X)))
    if ir_size is None:
        ir_size = upper_irredundance_number(G)
    if popcount(X) != ir_size:
        raise GraphError('{} is not an IR-set: IR={}'.format(
            G.format_set(X), ir_size))


def flip_set(G, X, choice, ir_size=None):
    """The flip-set X' = (X - Y) | Y' of an IR-set.

    Parameters
    ----------
    G : Graph
        Source graph.
    X : int
        An IR-set of G.
    choice : FlipChoice
        The flipped vertices and their replacements.
    ir_size : int or None
        IR(G) if already known; computed otherwise.

    Returns
    -------
    int
        The flip-set, which is again an IR-set.
    """
    G.check_subset(X)
    _check_ir_set(G, X, ir_size)
    Y = choice.Y
    if Y & ~X:
        raise GraphError('Flipped vertices {} are not all in {}'.format(
            G.format_set(Y), G.format_set(X)))
    for x in members(X & ~Y):
        if G.adj[x] & X:
            raise GraphError(
                'Vertex {} has positive degree in G[X] and must be flipped'
                .format(G.label(x)))
    if sorted(choice.selector) != members(Y):
        raise GraphError('Selector must cover exactly the flipped vertices')
    result = X & ~Y
    for y, target in choice.selector.items():
        if not external_private_neighbors(G, X, y) >> target & 1:
            raise GraphError('{} is not an external private neighbor of {}'
                             .format(G.label(target), G.label(y)))
        result |= 1 << target
    assert is_irredundant(G, result), 'flip-set is not irredundant'
    return result


def enumerate_flip_sets(G, X, cap=DEFAULT_FLIP_CAP, ir_size=None):
    """All flip-sets of an IR-set X, up to ``cap`` of them.

    Vertices with positive degree in G[X] are always flipped.  Isolated
    vertices with external private neighbors may be flipped or kept; the
    others are kept.  X itself is included (nothing flipped) whenever G[X]
    is edgeless.

    Returns
    -------
    FlipSets
    """
    G.check_subset(X)
    _check_ir_set(G, X, ir_size)
    options = []
    for x in members(X):
        epn = members(external_private_neighbors(G, X, x))
        if G.adj[x] & X:
            options.append([(x, t) for t in epn])
        else:
            options.append([None] + [(x, t) for t in epn])
    found = set()
    truncated = False
    for picks in itertools.product(*options):
        result = X
        for pick in picks:
            if pick is not None:
                result = (result & ~(1 << pick[0])) | (1 << pick[1])
        if result in found:
            continue
        if len(found) == cap:
            truncated = True
            break
        assert is_irredundant(G, result), 'flip-set is not irredundant'
        found.add(result)
    if truncated:
        get_logger().debug('Flip-set enumeration of %s truncated at %d',
                           G.format_set(X), cap)
    return FlipSets(sorted(found, key=members), truncated)
