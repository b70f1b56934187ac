"""Structural checks on computed IR-graphs and census scans.

:func:`check_theorems` runs every structural check on the IR-graph of one
source graph.  :func:`scan_census` streams a graph6 census through the checks
and aggregates the findings, and :func:`probe_target` searches a census for
sources whose IR-graph is isomorphic to a given target.  A census scan only
ever yields bounded evidence: it covers the graphs it was given and nothing
more.
"""
from __future__ import print_function, division

import collections
import multiprocessing
import os
import time

from desiutil.log import get_logger

from .graph import (LimitExceededError, cartesian_product, complete,
                    diameter, distance_matrix, has_induced_c4, has_triangle,
                    is_claw_free, is_complete, is_connected, max_degree,
                    members, on_induced_c4, popcount, universal_vertices)
from .formats import emit_graph6, parse_graph6, read_graph6_lines
from .isomorphism import DEFAULT_ISO_LIMIT, are_isomorphic
from .irredundance import (DEFAULT_FLIP_CAP, describe_set,
                           enumerate_flip_sets, epn_bearing)
from .reconfig import DEFAULT_MAX_SETS, build_ir_graph


PASS = 'pass'
VIOLATION = 'violation'
INAPPLICABLE = 'inapplicable'
VERDICTS = (PASS, VIOLATION, INAPPLICABLE)

#: Wording used whenever a census result is reported.
EVIDENCE = 'bounded evidence up to n={}'

#: Inputs between two progress messages.
PROGRESS_INTERVAL = 1000


class Caps(collections.namedtuple(
        'Caps', ['max_sets', 'iso_limit', 'flip_cap', 'workers'])):
    """Resource caps shared by all harness operations.

    Parameters
    ----------
    max_sets : int
        Largest number of IR-sets (IR-graph nodes) a source may have.
    iso_limit : int
        Largest vertex count for exact isomorphism tests.
    flip_cap : int
        Largest number of flip-sets enumerated per IR-set.
    workers : int
        Number of worker processes used by census scans.
    """
    __slots__ = ()

    ENVIRON = collections.OrderedDict([
        ('max_sets', 'IRGRAPH_MAX_SETS'),
        ('iso_limit', 'IRGRAPH_ISO_LIMIT'),
        ('flip_cap', 'IRGRAPH_FLIP_CAP'),
        ('workers', 'IRGRAPH_WORKERS'),
    ])

    def __new__(cls, max_sets=DEFAULT_MAX_SETS, iso_limit=DEFAULT_ISO_LIMIT,
                flip_cap=DEFAULT_FLIP_CAP, workers=1):
        values = []
        for name, value in zip(cls._fields,
                               (max_sets, iso_limit, flip_cap, workers)):
            value = int(value)
            if value < 1:
                raise ValueError('{} must be positive, got {}'.format(
                    name, value))
            values.append(value)
        return super(Caps, cls).__new__(cls, *values)

    @classmethod
    def from_environ(cls, environ=None):
        """Defaults, overridden by any ``IRGRAPH_*`` environment variables.
        """
        if environ is None:
            environ = os.environ
        kwargs = {}
        for name, variable in cls.ENVIRON.items():
            if variable in environ:
                try:
                    kwargs[name] = int(environ[variable])
                except ValueError:
                    raise ValueError('{} is not an integer: {!r}'.format(
                        variable, environ[variable]))
        return cls(**kwargs)


Finding = collections.namedtuple(
    'Finding', ['index', 'graph', 'check', 'verdict', 'witness', 'reason'])
Finding.__doc__ = """Outcome of one check on one source graph.

``graph`` is the graph6 text of the source and ``index`` its position in the
census (None outside a scan).  Violations carry a ``witness`` dict of vertex
and node indices that can be re-verified independently; inapplicable
findings carry a ``reason``.
"""


def finding_to_dict(finding):
    result = collections.OrderedDict()
    for field in Finding._fields:
        result[field] = getattr(finding, field)
    return result


def _witness(**kwargs):
    return collections.OrderedDict(sorted(kwargs.items()))


class _Context(object):
    """Everything the checks share about one source and its IR-graph."""
    def __init__(self, G, irg, caps):
        self.G = G
        self.irg = irg
        self.caps = caps
        self.H = irg.graph
        self.connected = is_connected(self.H)
        self.dist = distance_matrix(self.H)
        self.diam = diameter(self.H)
        self.infos = [describe_set(G, X) for X in irg.nodes]

    def flips(self, X):
        return enumerate_flip_sets(self.G, X, self.caps.flip_cap,
                                   ir_size=self.irg.IR)


def _check_c4_or_diam3(ctx):
    if not ctx.connected:
        return INAPPLICABLE, None, 'IR-graph is disconnected'
    tested = 0
    for i, info in enumerate(ctx.infos):
        bearing = epn_bearing(info)
        if len(bearing) < 2:
            continue
        tested += 1
        if on_induced_c4(ctx.H, i):
            continue
        flips = ctx.flips(info.vertices)
        if flips.truncated:
            get_logger().warning(
                'C4-OR-DIAM3 downgraded: flip-sets of %s exceed cap %d',
                ctx.G.format_set(info.vertices), ctx.caps.flip_cap)
            return INAPPLICABLE, None, 'flip-set cap {} reached'.format(
                ctx.caps.flip_cap)
        for Y in flips.sets:
            # Only flip-sets replacing every EPN-bearing vertex count.
            if popcount(info.vertices & ~Y) != len(bearing):
                continue
            if Y not in ctx.irg:
                continue
            d = ctx.dist[i, ctx.irg.index_of(Y)]
            if ctx.diam < 3 or d < 3:
                return VIOLATION, _witness(
                    set=members(info.vertices), flip_set=members(Y),
                    distance=int(d), diameter=ctx.diam, node=i), None
    if not tested:
        return INAPPLICABLE, None, 'no IR-set has two EPN-bearing vertices'
    return PASS, None, None


def _check_cor_c4(ctx):
    if not ctx.connected:
        return INAPPLICABLE, None, 'IR-graph is disconnected'
    tested = 0
    for i, info in enumerate(ctx.infos):
        X = info.vertices
        edges = sum(popcount(ctx.G.adj[v] & X) for v in members(X)) // 2
        if not (edges == 1 or
                (info.independent and len(epn_bearing(info)) >= 2)):
            continue
        tested += 1
        if not on_induced_c4(ctx.H, i):
            return VIOLATION, _witness(set=members(X), node=i,
                                       edges_in_set=edges), None
    if not tested:
        return INAPPLICABLE, None, 'no IR-set with one edge or two EPNs'
    return PASS, None, None


def _check_diam_lower(ctx):
    if not ctx.connected:
        return INAPPLICABLE, None, 'IR-graph is disconnected'
    k, node = 0, None
    for i, info in enumerate(ctx.infos):
        if len(epn_bearing(info)) > k:
            k, node = len(epn_bearing(info)), i
    if k < 3:
        return INAPPLICABLE, None, 'no IR-set has three EPN-bearing vertices'
    if ctx.diam < k:
        return VIOLATION, _witness(set=members(ctx.irg.nodes[node]), k=k,
                                   diameter=ctx.diam, node=node), None
    return PASS, None, None


def _check_indep_tri_c4(ctx):
    if not all(info.independent for info in ctx.infos):
        return INAPPLICABLE, None, 'some IR-set is not independent'
    if not ctx.connected or ctx.H.n < 3:
        return INAPPLICABLE, None, 'IR-graph is disconnected or too small'
    if has_triangle(ctx.H) or has_induced_c4(ctx.H):
        return PASS, None, None
    return VIOLATION, _witness(order=ctx.H.n,
                               edges=[list(e) for e in ctx.H.edges()]), None


def _check_diam2_c4(ctx):
    if not ctx.connected or ctx.diam != 2:
        return INAPPLICABLE, None, 'IR-graph diameter is {}'.format(
            ctx.diam if ctx.connected else 'infinite')
    if has_induced_c4(ctx.H):
        return PASS, None, None
    return VIOLATION, _witness(diameter=2,
                               edges=[list(e) for e in ctx.H.edges()]), None


def _check_univ_vertex(ctx):
    universal = universal_vertices(ctx.H)
    if universal and not is_complete(ctx.H):
        return VIOLATION, _witness(universal=members(universal),
                                   order=ctx.H.n), None
    return PASS, None, None


def _check_flip_closed(ctx):
    for i, info in enumerate(ctx.infos):
        flips = ctx.flips(info.vertices)
        if flips.truncated:
            get_logger().warning(
                'FLIP-CLOSED downgraded: flip-sets of %s exceed cap %d',
                ctx.G.format_set(info.vertices), ctx.caps.flip_cap)
            return INAPPLICABLE, None, 'flip-set cap {} reached'.format(
                ctx.caps.flip_cap)
        for Y in flips.sets:
            if Y not in ctx.irg:
                return VIOLATION, _witness(set=members(info.vertices),
                                           flip_set=members(Y), node=i), None
    return PASS, None, None


CHECKS = collections.OrderedDict([
    ('C4-OR-DIAM3', _check_c4_or_diam3),
    ('COR-C4', _check_cor_c4),
    ('DIAM-LOWER', _check_diam_lower),
    ('INDEP-TRI-C4', _check_indep_tri_c4),
    ('DIAM2-C4', _check_diam2_c4),
    ('UNIV-VERTEX', _check_univ_vertex),
    ('FLIP-CLOSED', _check_flip_closed),
])


def _select_checks(checks):
    if checks is None:
        return list(CHECKS)
    checks = list(checks)
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ValueError('Unknown check(s) {}; choose from {}'.format(
            ', '.join(unknown), ', '.join(CHECKS)))
    return checks


def _run_checks(G, irg, checks, caps, index=None):
    text = emit_graph6(G)
    ctx = _Context(G, irg, caps)
    findings = []
    for check in checks:
        verdict, witness, reason = CHECKS[check](ctx)
        findings.append(Finding(index, text, check, verdict, witness, reason))
    return ctx, findings


def check_theorems(G, caps=None, checks=None):
    """Run the structural checks on the IR-graph of G.

    Parameters
    ----------
    G : Graph
        Source graph.
    caps : Caps or None
        Resource caps, defaulting to ``Caps()``.
    checks : list of str or None
        Check ids to run, all of :data:`CHECKS` by default.

    Returns
    -------
    list of Finding
        One finding per requested check, in the order requested.  When the
        IR-graph exceeds ``caps.max_sets`` every finding is inapplicable.
    """
    caps = caps or Caps()
    checks = _select_checks(checks)
    try:
        irg = build_ir_graph(G, max_sets=caps.max_sets)
    except LimitExceededError as err:
        get_logger().warning('Checks skipped for %s: %s', emit_graph6(G), err)
        return [Finding(None, emit_graph6(G), check, INAPPLICABLE, None,
                        str(err)) for check in checks]
    return _run_checks(G, irg, checks, caps)[1]


def _is_complete_product(H, iso_limit):
    """True if H is K_a x K_b for some a, b >= 2; None if too large to tell."""
    m = H.n
    degrees = set(H.degrees().tolist())
    if len(degrees) != 1:
        return False
    degree = degrees.pop()
    for a in range(2, m):
        b, rest = divmod(m, a)
        if rest or b < a or a + b - 2 != degree:
            continue
        if m > iso_limit:
            return None
        if are_isomorphic(H, cartesian_product(complete(a), complete(b)),
                          iso_limit):
            return True
    return False


def _statistics(ctx):
    """Open-question statistics for one IR-graph.  They assert nothing."""
    stats = collections.OrderedDict()
    H = ctx.H
    if (ctx.connected and H.n >= 3 and
            any(info.independent for info in ctx.infos)):
        stats['independent_connected'] = True
        stats['low_degree'] = max_degree(H) < 3
    if ctx.connected and not is_complete(H) and is_claw_free(H):
        product = _is_complete_product(H, ctx.caps.iso_limit)
        if product is None:
            stats['claw_free_unresolved'] = True
        elif not product:
            stats['claw_free_candidate'] = True
    return stats


GraphResult = collections.namedtuple(
    'GraphResult', ['index', 'graph', 'n', 'IR', 'nodes', 'findings',
                    'stats'])


def _scan_task(task):
    index, text, checks, caps = task
    G = parse_graph6(text)
    try:
        irg = build_ir_graph(G, max_sets=caps.max_sets)
    except LimitExceededError as err:
        get_logger().warning('Input %d skipped: %s', index, err)
        findings = [Finding(index, text, check, INAPPLICABLE, None, str(err))
                    for check in checks]
        return GraphResult(index, text, G.n, None, None, findings, {})
    ctx, findings = _run_checks(G, irg, checks, caps, index)
    get_logger().debug('Input %d: n=%d IR=%d nodes=%d', index, G.n, irg.IR,
                       len(irg))
    return GraphResult(index, text, G.n, irg.IR, len(irg), findings,
                       _statistics(ctx))


class CensusReport(object):
    """Aggregate of a census scan.

    Only deterministic content enters :meth:`to_dict`; the elapsed time is
    reported by :meth:`summary` alone.
    """
    def __init__(self, checks):
        self.checks = list(checks)
        self.counts = collections.OrderedDict(
            (check, collections.OrderedDict((v, 0) for v in VERDICTS))
            for check in self.checks)
        self.scanned = 0
        self.n_max = None
        self.findings = []
        self.parse_errors = []
        self.statistics = collections.OrderedDict([
            ('independent_connected', 0), ('low_degree', []),
            ('claw_free_candidate', []), ('claw_free_unresolved', []),
        ])
        self.elapsed = 0.

    def add(self, result):
        self.scanned += 1
        if self.n_max is None or result.n > self.n_max:
            self.n_max = result.n
        for finding in result.findings:
            self.counts[finding.check][finding.verdict] += 1
            self.findings.append(finding)
        if result.stats.get('independent_connected'):
            self.statistics['independent_connected'] += 1
        for key in ('low_degree', 'claw_free_candidate',
                    'claw_free_unresolved'):
            if result.stats.get(key):
                self.statistics[key].append(result.graph)

    def add_parse_error(self, entry):
        self.parse_errors.append(entry)

    @property
    def violations(self):
        return [f for f in self.findings if f.verdict == VIOLATION]

    def findings_jsonl(self):
        """Findings as JSON-ready dicts, one per output line."""
        return [finding_to_dict(f) for f in self.findings]

    def to_dict(self):
        result = collections.OrderedDict()
        result['scanned'] = self.scanned
        result['n_max'] = self.n_max
        result['evidence'] = EVIDENCE.format(self.n_max)
        result['counts'] = self.counts
        result['violations'] = [finding_to_dict(f) for f in self.violations]
        result['parse_errors'] = [
            collections.OrderedDict([('index', e.index), ('text', e.text),
                                     ('error', e.error)])
            for e in self.parse_errors]
        result['statistics'] = self.statistics
        return result

    def summary(self):
        lines = ['scanned {} graphs, {} parse errors, {} violations; {}'
                 .format(self.scanned, len(self.parse_errors),
                         len(self.violations), EVIDENCE.format(self.n_max))]
        for check, counts in self.counts.items():
            lines.append('{:<13s} {}'.format(check, ' '.join(
                '{}={}'.format(v, n) for v, n in counts.items())))
        lines.append('statistics: {} connected IR-graphs with an independent '
                     'IR-set, {} of max degree < 3; {} claw-free candidates '
                     '({} unresolved)'.format(
                         self.statistics['independent_connected'],
                         len(self.statistics['low_degree']),
                         len(self.statistics['claw_free_candidate']),
                         len(self.statistics['claw_free_unresolved'])))
        lines.append('elapsed {:.1f}s'.format(self.elapsed))
        return '\n'.join(lines)


def _map_tasks(function, tasks, workers):
    """Apply ``function`` to the tasks in order, optionally in a pool."""
    if workers <= 1:
        for task in tasks:
            yield function(task)
        return
    pool = multiprocessing.Pool(workers)
    try:
        # imap keeps input order, so merged output is independent of workers.
        for result in pool.imap(function, tasks, chunksize=8):
            yield result
    finally:
        pool.close()
        pool.join()


def _valid_entries(lines, sink):
    log = get_logger()
    for entry in read_graph6_lines(lines):
        if entry.error is None:
            yield entry
        else:
            log.warning('Unreadable census line %d: %s', entry.index,
                        entry.error)
            sink.append(entry)


def scan_census(lines, checks=None, caps=None):
    """Run the checks on every graph of a graph6 census.

    Parameters
    ----------
    lines : iterable of str or bytes
        graph6 census, one graph per line.
    checks : list of str or None
        Check ids, all of :data:`CHECKS` by default.
    caps : Caps or None
        Resource caps; ``caps.workers`` processes share the work.

    Returns
    -------
    CensusReport
        Findings are ordered by input index whatever the worker count.
    """
    caps = caps or Caps()
    checks = _select_checks(checks)
    report = CensusReport(checks)
    log = get_logger()
    start = time.time()
    errors = []
    tasks = ((entry.index, entry.text, checks, caps)
             for entry in _valid_entries(lines, errors))
    for result in _map_tasks(_scan_task, tasks, caps.workers):
        report.add(result)
        if report.scanned % PROGRESS_INTERVAL == 0:
            log.info('Scanned %d graphs, %d violations so far',
                     report.scanned, len(report.violations))
    for entry in sorted(errors, key=lambda e: e.index):
        report.add_parse_error(entry)
    report.elapsed = time.time() - start
    log.info('Scan done: %d graphs, %d parse errors, %d violations in %.1fs',
             report.scanned, len(report.parse_errors),
             len(report.violations), report.elapsed)
    return report


def dump_violations(report, directory, caps=None):
    """Write the IR-graph of every violating source as a DOT file.

    Returns
    -------
    list of str
        Paths written, one per violating input.
    """
    caps = caps or Caps()
    if not os.path.isdir(directory):
        os.makedirs(directory)
    paths = []
    for index in sorted(set(f.index for f in report.violations)):
        finding = next(f for f in report.violations if f.index == index)
        irg = build_ir_graph(parse_graph6(finding.graph),
                             max_sets=caps.max_sets)
        path = os.path.join(directory, 'violation-{:06d}.dot'.format(index))
        with open(path, 'w') as out:
            out.write(irg.to_dot(name='violation{}'.format(index)))
        paths.append(path)
    return paths


class ProbeResult(object):
    """Outcome of :func:`probe_target`.

    Attributes
    ----------
    target : Graph
        The target graph.
    n_max : int or None
        Largest source order scanned.
    scanned : int
        Number of readable census entries.
    matches : list of tuple
        (index, graph6) of every source whose IR-graph is isomorphic to the
        target.
    parse_errors : list of CensusEntry
        Unreadable census entries.
    """
    def __init__(self, target, n_max, scanned, matches, parse_errors):
        self.target = target
        self.n_max = n_max
        self.scanned = scanned
        self.matches = list(matches)
        self.parse_errors = list(parse_errors)

    @property
    def exhausted(self):
        """True when every census entry was examined."""
        return not self.parse_errors

    def summary(self):
        if self.exhausted:
            status = 'exhausted'
        else:
            status = 'not exhausted ({} unreadable)'.format(
                len(self.parse_errors))
        lines = ['{} matches, {}; {} sources scanned, {}'.format(
            len(self.matches), status, self.scanned,
            EVIDENCE.format(self.n_max))]
        lines.extend('match {}: {}'.format(index, text)
                     for index, text in self.matches)
        return '\n'.join(lines)

    def to_dict(self):
        result = collections.OrderedDict()
        result['target'] = emit_graph6(self.target)
        result['scanned'] = self.scanned
        result['n_max'] = self.n_max
        result['exhausted'] = self.exhausted
        result['evidence'] = EVIDENCE.format(self.n_max)
        result['matches'] = [
            collections.OrderedDict([('index', i), ('graph', t)])
            for i, t in self.matches]
        result['parse_errors'] = [e.index for e in self.parse_errors]
        return result


def _probe_task(task):
    index, text, target_text, iso_limit = task
    G = parse_graph6(text)
    target = parse_graph6(target_text)
    try:
        # The IR-graph must have exactly target.n nodes to match.
        irg = build_ir_graph(G, max_sets=target.n)
    except LimitExceededError:
        return index, text, G.n, False
    matched = (len(irg) == target.n and
               are_isomorphic(irg.graph, target, iso_limit))
    return index, text, G.n, matched


def probe_target(target, lines, caps=None):
    """Find census sources whose IR-graph is isomorphic to ``target``.

    Parameters
    ----------
    target : Graph
        Target graph, at most ``caps.iso_limit`` vertices.
    lines : iterable of str or bytes
        graph6 census.
    caps : Caps or None
        Resource caps.

    Returns
    -------
    ProbeResult

    Raises
    ------
    LimitExceededError
        If the target is larger than the isomorphism cap.
    """
    caps = caps or Caps()
    if target.n > caps.iso_limit:
        raise LimitExceededError('isomorphism vertex', caps.iso_limit,
                                 target.n)
    log = get_logger()
    start = time.time()
    target_text = emit_graph6(target)
    errors = []
    tasks = ((entry.index, entry.text, target_text, caps.iso_limit)
             for entry in _valid_entries(lines, errors))
    scanned, n_max, matches = 0, None, []
    for index, text, n, matched in _map_tasks(_probe_task, tasks,
                                              caps.workers):
        scanned += 1
        n_max = n if n_max is None else max(n_max, n)
        if matched:
            log.debug('Input %d matches: %s', index, text)
            matches.append((index, text))
        if scanned % PROGRESS_INTERVAL == 0:
            log.info('Probed %d sources, %d matches so far', scanned,
                     len(matches))
    result = ProbeResult(target, n_max, scanned, matches,
                         sorted(errors, key=lambda e: e.index))
    log.info('Probe done in %.1fs: %s', time.time() - start,
             result.summary().splitlines()[0])
    return result
