"""Command-line interface of the irgraph package.

Graph arguments are read by :func:`parse_graph_argument`, which accepts, in
order of precedence:

* ``@path``: a file holding one graph6 line, or a JSON edge list when the
  name ends in ``.json``;
* a fixture name such as ``fig3-G``;
* a family expression such as ``path4``, ``doublestar:2,2``,
  ``doublespider:1,1;1,2`` or ``complete2*complete3+empty1``;
* a graph6 literal such as ``A_``.

Exit status is 0 on success, 1 when a check finds violations or a probe
result differs from what was expected, and 2 on usage, input or limit errors.
"""
from __future__ import print_function, division

import argparse
import io
import json
import os
import re
import sys

from desiutil.log import get_logger

from ..graph import (GraphError, LimitExceededError, build_family,
                     family_graph, parse_family)
from ..formats import (emit_graph6, graph_from_json, read_graph6_lines,
                       to_dot, to_json)
from ..irredundance import irredundance_report
from ..reconfig import build_ir_graph
from ..constructions import (FIXTURES, DisconnectedSourceSpec,
                             build_disconnected_source, fixture)
from ..harness import (CHECKS, Caps, dump_violations, finding_to_dict,
                       probe_target, scan_census)


EXIT_OK = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


def parse_graph_argument(text):
    """Turn a command-line graph argument into a :class:`Graph`."""
    text = text.strip()
    if text.startswith('@'):
        return _read_graph_file(text[1:])
    if text in FIXTURES:
        return fixture(text)
    try:
        spec = parse_family(text)
    except GraphError:
        spec = None
    if spec is not None:
        return build_family(spec)
    entries = list(read_graph6_lines([text]))
    if len(entries) != 1:
        raise GraphError('Empty graph argument')
    if entries[0].error:
        raise GraphError('Not a fixture, family or graph6 string: {} ({})'
                         .format(text, entries[0].error))
    return entries[0].graph


def _read_graph_file(path):
    if path.endswith('.json'):
        with io.open(path, encoding='utf-8') as handle:
            try:
                return graph_from_json(json.load(handle))
            except ValueError as err:
                raise GraphError('{}: {}'.format(path, err))
    with io.open(path, 'rb') as handle:
        for entry in read_graph6_lines(handle):
            if entry.error:
                raise GraphError('{}: {}'.format(path, entry.error))
            return entry.graph
    raise GraphError('{} holds no graph'.format(path))


def _open_census(path):
    if path == '-':
        return sys.stdin
    return io.open(path, 'rb')


def _dumps(data):
    return json.dumps(data, indent=2, ensure_ascii=False) + '\n'


def _graph_text(G):
    lines = [emit_graph6(G)]
    lines.extend('{} {}'.format(G.label(u), G.label(v)) for u, v in G.edges())
    return '\n'.join(lines) + '\n'


def _render_graph(G, fmt, name='G'):
    if fmt == 'json':
        return _dumps(to_json(G))
    if fmt == 'dot':
        return to_dot(G, name=name)
    return _graph_text(G)


def _write(text, path):
    if path:
        with io.open(path, 'w', encoding='utf-8') as out:
            out.write(text)
    else:
        if sys.version_info[0] < 3:
            text = text.encode('utf-8')
        sys.stdout.write(text)


def _do_compute(args, caps):
    G = parse_graph_argument(args.graph)
    report = irredundance_report(G, max_sets=caps.max_sets)
    if args.format == 'json':
        return _dumps(report.to_dict()), EXIT_OK
    if args.format == 'dot':
        return to_dot(G), EXIT_OK
    return report.summary() + '\n', EXIT_OK


def _do_irgraph(args, caps):
    G = parse_graph_argument(args.graph)
    irg = build_ir_graph(G, max_sets=caps.max_sets)
    if args.format == 'json':
        return _dumps(irg.to_dict()), EXIT_OK
    if args.format == 'dot':
        return irg.to_dot(), EXIT_OK
    return irg.summary() + '\n', EXIT_OK


def _do_construct(args, caps):
    H = parse_graph_argument(args.target)
    spec = DisconnectedSourceSpec(H, component=args.component, N=args.N)
    G, layout = build_disconnected_source(spec)
    if args.format == 'json':
        data = to_json(G)
        for key in ('h1', 'h2', 'x', 'y'):
            data[key] = getattr(layout, key)
        return _dumps(data), EXIT_OK
    return _render_graph(G, args.format, name='thm31'), EXIT_OK


def _do_fixture(args, caps):
    return _render_graph(fixture(args.name), args.format,
                         name=re.sub(r'\W', '_', args.name)), EXIT_OK


def _do_family(args, caps):
    return _render_graph(family_graph(args.spec), args.format), EXIT_OK


def _do_check(args, caps):
    checks = args.checks.split(',') if args.checks else None
    census = _open_census(args.census)
    try:
        report = scan_census(census, checks=checks, caps=caps)
    finally:
        if census is not sys.stdin:
            census.close()
    if args.findings:
        with io.open(args.findings, 'w', encoding='utf-8') as out:
            for finding in report.findings:
                out.write(json.dumps(finding_to_dict(finding)) + '\n')
    if args.dump_dir:
        dump_violations(report, args.dump_dir, caps)
    if report.violations:
        status = EXIT_FAIL
    elif report.parse_errors:
        status = EXIT_ERROR
    else:
        status = EXIT_OK
    if args.format == 'json':
        return _dumps(report.to_dict()), status
    return report.summary() + '\n', status


def _do_probe(args, caps):
    target = parse_graph_argument(args.target)
    census = _open_census(args.census)
    try:
        result = probe_target(target, census, caps)
    finally:
        if census is not sys.stdin:
            census.close()
    if args.expect_matches:
        status = EXIT_OK if result.matches else EXIT_FAIL
    else:
        status = EXIT_FAIL if result.matches else EXIT_OK
    if args.format == 'json':
        return _dumps(result.to_dict()), status
    return result.summary() + '\n', status


def _parser(defaults):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='store_true',
                        help='log at DEBUG level')
    common.add_argument('--format', choices=('text', 'json', 'dot'),
                        default='text', help='output format')
    common.add_argument('-o', '--output', metavar='PATH',
                        help='write output here instead of standard output')
    common.add_argument('--workers', type=int, default=defaults.workers,
                        help='worker processes for census scans')
    common.add_argument('--max-sets', type=int, default=defaults.max_sets,
                        help='largest number of IR-sets per source')
    common.add_argument('--iso-limit', type=int, default=defaults.iso_limit,
                        help='largest vertex count for isomorphism tests')
    common.add_argument('--flip-cap', type=int, default=defaults.flip_cap,
                        help='largest number of flip-sets per IR-set')

    parser = argparse.ArgumentParser(
        prog='irgraph', description='Irredundance and IR-graph tools.',
        epilog='Cap defaults may be set with the environment variables '
        'IRGRAPH_MAX_SETS, IRGRAPH_ISO_LIMIT, IRGRAPH_FLIP_CAP and '
        'IRGRAPH_WORKERS.')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('compute', parents=[common],
                       help='ir, IR and all IR-sets of a graph')
    p.add_argument('graph', help='graph argument')
    p.set_defaults(run=_do_compute)

    p = sub.add_parser('irgraph', parents=[common],
                       help='IR-graph of a graph')
    p.add_argument('graph', help='graph argument')
    p.set_defaults(run=_do_irgraph)

    p = sub.add_parser('construct', parents=[common],
                       help='source graph with a disconnected IR-graph')
    p.add_argument('construction', choices=('thm31',))
    p.add_argument('--target', required=True,
                   help='disconnected target graph')
    p.add_argument('--N', type=int, default=None,
                   help='clique size, at least the target order')
    p.add_argument('--component', type=int, default=0,
                   help='index of the component used as H1')
    p.set_defaults(run=_do_construct)

    p = sub.add_parser('fixture', parents=[common],
                       help='labeled reference graph')
    p.add_argument('name', choices=sorted(FIXTURES))
    p.set_defaults(run=_do_fixture)

    p = sub.add_parser('family', parents=[common],
                       help='graph from a family expression')
    p.add_argument('spec', help='family expression, e.g. doublestar:2,2')
    p.set_defaults(run=_do_family)

    p = sub.add_parser('check', parents=[common],
                       help='run structural checks over a graph6 census')
    p.add_argument('census', help="graph6 file, or '-' for standard input")
    p.add_argument('--checks', metavar='IDS',
                   help='comma-separated subset of ' + ','.join(CHECKS))
    p.add_argument('--findings', metavar='PATH',
                   help='write every finding as JSON lines')
    p.add_argument('--dump-dir', metavar='DIR',
                   help='write DOT files of violating IR-graphs')
    p.set_defaults(run=_do_check)

    p = sub.add_parser('probe', parents=[common],
                       help='search a census for a given IR-graph')
    p.add_argument('census', help="graph6 file, or '-' for standard input")
    p.add_argument('--target', required=True, help='target graph')
    p.add_argument('--expect-matches', action='store_true',
                   help='fail when nothing matches instead')
    p.set_defaults(run=_do_probe)
    return parser


def main(args=None):
    """Entry point for the ``irgraph`` script.

    Parameters
    ----------
    args : list of str or None
        Command-line arguments, ``sys.argv[1:]`` by default.

    Returns
    -------
    int
        Exit status.
    """
    log = get_logger()
    try:
        defaults = Caps.from_environ()
    except ValueError as err:
        log.error(str(err))
        return EXIT_ERROR
    args = _parser(defaults).parse_args(args)
    if args.verbose:
        os.environ['DESI_LOGLEVEL'] = 'DEBUG'
    log = get_logger()
    try:
        caps = Caps(args.max_sets, args.iso_limit, args.flip_cap,
                    args.workers)
        text, status = args.run(args, caps)
        _write(text, args.output)
    except (GraphError, LimitExceededError, ValueError, IOError) as err:
        log.error(str(err))
        return EXIT_ERROR
    return status
