"""Exact graph isomorphism by color refinement and backtracking.

Intended for the small graphs met in IR-graph studies.  Inputs larger than
the configured size limit are refused with
:class:`~irgraph.graph.LimitExceededError`; no heuristic answer is ever
returned.
"""
from __future__ import print_function, division

import collections

from .graph import LimitExceededError, members, popcount


#: Default largest vertex count for exact matching.
DEFAULT_ISO_LIMIT = 32


def refine_colors(graphs):
    """Stable color refinement run jointly over several graphs.

    Colors are comparable across the graphs because all signatures share one
    palette.  Initial colors are degrees.

    Parameters
    ----------
    graphs : list of Graph
        Graphs to color together.

    Returns
    -------
    list of list of int
        Color of every vertex of every graph.
    """
    colors = [g.degrees().tolist() for g in graphs]
    nclasses = len(set(c for cs in colors for c in cs))
    while True:
        signatures = [
            [(cs[v], tuple(sorted(cs[u] for u in members(g.adj[v]))))
             for v in range(g.n)] for g, cs in zip(graphs, colors)]
        palette = {sig: i for i, sig in enumerate(
            sorted(set(s for sigs in signatures for s in sigs)))}
        colors = [[palette[s] for s in sigs] for sigs in signatures]
        if len(palette) == nclasses:
            return colors
        nclasses = len(palette)


def _search_order(G, colors, class_size):
    """Vertex order favoring small color classes and mapped neighbors."""
    order = []
    placed = 0
    remaining = set(range(G.n))
    while remaining:
        v = min(remaining, key=lambda u: (
            -popcount(G.adj[u] & placed), class_size[colors[u]],
            -G.degree(u), u))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def find_isomorphism(G, H, limit=DEFAULT_ISO_LIMIT):
    """Find an edge-preserving bijection from G to H.

    Parameters
    ----------
    G, H : Graph
        Graphs to compare.
    limit : int
        Largest vertex count accepted for an exact search.

    Returns
    -------
    list of int or None
        ``mapping[v]`` is the image in H of vertex ``v`` of G, or None when
        the graphs are not isomorphic.

    Raises
    ------
    LimitExceededError
        If the graphs have equal order and size but more than ``limit``
        vertices.
    """
    if G.n != H.n or G.number_of_edges() != H.number_of_edges():
        return None
    if G.n > limit:
        raise LimitExceededError('isomorphism vertex', limit, G.n)
    if sorted(G.degrees().tolist()) != sorted(H.degrees().tolist()):
        return None
    colors_g, colors_h = refine_colors([G, H])
    if collections.Counter(colors_g) != collections.Counter(colors_h):
        return None
    class_size = collections.Counter(colors_g)
    candidates = collections.defaultdict(int)
    for w, color in enumerate(colors_h):
        candidates[color] |= 1 << w
    order = _search_order(G, colors_g, class_size)
    mapping = [None] * G.n

    def consistent(v, w):
        # Mapped neighbors of v must land exactly on mapped neighbors of w.
        image = 0
        mapped = 0
        for u in order:
            if mapping[u] is None:
                break
            mapped |= 1 << mapping[u]
            if G.adj[v] >> u & 1:
                image |= 1 << mapping[u]
        return H.adj[w] & mapped == image

    def extend(depth, used):
        if depth == G.n:
            return True
        v = order[depth]
        for w in members(candidates[colors_g[v]] & ~used):
            if consistent(v, w):
                mapping[v] = w
                if extend(depth + 1, used | (1 << w)):
                    return True
                mapping[v] = None
        return False

    if extend(0, 0):
        return mapping
    return None


def are_isomorphic(G, H, limit=DEFAULT_ISO_LIMIT):
    """True iff G and H are isomorphic.  See :func:`find_isomorphism`."""
    return find_isomorphism(G, H, limit) is not None


def is_isomorphism(G, H, mapping):
    """Verify that ``mapping`` is an isomorphism from G to H."""
    if G.n != H.n or sorted(mapping) != list(range(H.n)):
        return False
    return ({frozenset((mapping[u], mapping[v])) for u, v in G.edges()} ==
            {frozenset(e) for e in H.edges()})
