from __future__ import print_function, division

import json
import os
import shutil
import tempfile
import unittest

from ..graph import (LimitExceededError, complete, cycle, disjoint_union,
                     double_star, empty_graph, family_graph, path, star)
from ..formats import emit_graph6, parse_graph6
from ..irredundance import DEFAULT_FLIP_CAP
from ..isomorphism import DEFAULT_ISO_LIMIT, are_isomorphic
from ..reconfig import DEFAULT_MAX_SETS, build_ir_graph
from ..constructions import fixture
from ..harness import *
from .oracle import SLOW, census_lines


def verdicts(findings):
    return dict((f.check, f.verdict) for f in findings)


class TestCaps(unittest.TestCase):

    def test_defaults(self):
        """Verify default caps and environment overrides."""
        caps = Caps()
        self.assertEqual(caps, (DEFAULT_MAX_SETS, DEFAULT_ISO_LIMIT,
                                DEFAULT_FLIP_CAP, 1))
        self.assertEqual(Caps.from_environ({}), caps)
        caps = Caps.from_environ({'IRGRAPH_MAX_SETS': '50',
                                  'IRGRAPH_WORKERS': '3'})
        self.assertEqual((caps.max_sets, caps.workers), (50, 3))
        self.assertEqual(caps.iso_limit, DEFAULT_ISO_LIMIT)

    def test_invalid(self):
        """Verify that non-positive or non-integer caps are rejected."""
        with self.assertRaises(ValueError):
            Caps(max_sets=0)
        with self.assertRaises(ValueError):
            Caps.from_environ({'IRGRAPH_FLIP_CAP': '-1'})
        with self.assertRaises(ValueError):
            Caps.from_environ({'IRGRAPH_ISO_LIMIT': 'many'})


class TestChecks(unittest.TestCase):

    def test_complete(self):
        """Verify the checks on K5, whose IR-graph is complete."""
        found = verdicts(check_theorems(complete(5)))
        self.assertEqual(list(found), list(CHECKS))
        self.assertEqual(found['DIAM2-C4'], INAPPLICABLE)
        self.assertEqual(found['UNIV-VERTEX'], PASS)
        self.assertEqual(found['INDEP-TRI-C4'], PASS)
        self.assertEqual(found['FLIP-CLOSED'], PASS)

    def test_fixtures(self):
        """Test that no check fails on the reference sources."""
        for name in ('fig1-G', 'fig3-G', 'fig4-F'):
            for finding in check_theorems(fixture(name)):
                self.assertNotEqual(finding.verdict, VIOLATION,
                                    '{} {}'.format(name, finding))

    def test_matching(self):
        """Verify that 2K2 has an IR-set on an induced 4-cycle."""
        G = disjoint_union(complete(2), complete(2))
        found = verdicts(check_theorems(G))
        self.assertEqual(found['COR-C4'], PASS)
        self.assertEqual(found['C4-OR-DIAM3'], PASS)
        self.assertEqual(found['DIAM2-C4'], PASS)
        self.assertEqual(found['DIAM-LOWER'], INAPPLICABLE)

    def test_diameter_bound(self):
        """Verify that three EPN-bearing vertices force diameter three."""
        G = family_graph('complete2+complete2+complete2')
        found = verdicts(check_theorems(G))
        self.assertEqual(found['DIAM-LOWER'], PASS)
        self.assertEqual(found['C4-OR-DIAM3'], PASS)

    def test_subset(self):
        """Test that only the requested checks run."""
        findings = check_theorems(path(4), checks=['UNIV-VERTEX'])
        self.assertEqual([f.check for f in findings], ['UNIV-VERTEX'])
        self.assertEqual(findings[0].graph, emit_graph6(path(4)))
        with self.assertRaises(ValueError):
            check_theorems(path(4), checks=['NO-SUCH'])

    def test_capped(self):
        """Verify that sources over the IR-set cap are inapplicable."""
        findings = check_theorems(complete(6), caps=Caps(max_sets=5))
        self.assertTrue(all(f.verdict == INAPPLICABLE for f in findings))
        self.assertIn('exceeds limit 5', findings[0].reason)

    def test_flip_cap(self):
        """Verify that reaching the flip cap downgrades to inapplicable."""
        G = family_graph('complete3+complete3+complete3')
        found = verdicts(check_theorems(G, caps=Caps(flip_cap=2)))
        self.assertEqual(found['FLIP-CLOSED'], INAPPLICABLE)
        self.assertIn(found['C4-OR-DIAM3'], (PASS, INAPPLICABLE))
        self.assertEqual(verdicts(check_theorems(G))['FLIP-CLOSED'], PASS)


class TestCensus(unittest.TestCase):

    def test_connected_six(self):
        """Verify no violations on connected graphs with n <= 6."""
        report = scan_census(census_lines(6, connected=True))
        self.assertEqual(report.scanned, 143)
        self.assertEqual(report.violations, [])
        self.assertEqual(report.parse_errors, [])
        self.assertEqual(report.n_max, 6)
        self.assertEqual(sum(report.counts['UNIV-VERTEX'].values()), 143)

    @unittest.skipUnless(SLOW, 'set IRGRAPH_SLOW_TESTS to run')
    def test_all_seven(self):
        """Verify no violations on any graph with at most seven vertices."""
        lines = census_lines(7, min_n=7, connected=True)
        self.assertEqual(len(lines), 853)
        report = scan_census(census_lines(7), caps=Caps(workers=4))
        self.assertEqual(report.violations, [])
        self.assertEqual(report.scanned, 1252)

    def test_empty(self):
        """Test that an empty census gives an empty report."""
        report = scan_census([])
        self.assertEqual(report.scanned, 0)
        self.assertEqual(report.findings, [])
        self.assertTrue(all(n == 0 for counts in report.counts.values()
                            for n in counts.values()))

    def test_malformed(self):
        """Test that a malformed line is flagged and the rest processed."""
        report = scan_census(['A_', 'not graph6!', 'Bw', ''])
        self.assertEqual(report.scanned, 2)
        self.assertEqual([e.index for e in report.parse_errors], [1])
        data = json.loads(json.dumps(report.to_dict()))
        self.assertEqual(data['parse_errors'][0]['index'], 1)
        self.assertEqual(data['evidence'], 'bounded evidence up to n=3')
        self.assertEqual(sorted(set(f.index for f in report.findings)),
                         [0, 2])
        self.assertIn('1 parse errors', report.summary())

    def test_workers(self):
        """Verify that reports do not depend on the number of workers."""
        lines = census_lines(5)
        serial = scan_census(lines, caps=Caps(workers=1))
        parallel = scan_census(lines, caps=Caps(workers=3))
        self.assertEqual(json.dumps(serial.to_dict()),
                         json.dumps(parallel.to_dict()))
        self.assertEqual(serial.findings_jsonl(), parallel.findings_jsonl())

    @unittest.skipUnless(SLOW, 'set IRGRAPH_SLOW_TESTS to run')
    def test_workers_six(self):
        """Verify that serial and eight-worker scans agree for n <= 6."""
        lines = census_lines(6)
        serial = scan_census(lines, caps=Caps(workers=1))
        parallel = scan_census(lines, caps=Caps(workers=8))
        self.assertEqual(json.dumps(serial.to_dict()),
                         json.dumps(parallel.to_dict()))

    def test_statistics(self):
        """Test that open-question statistics are gathered."""
        report = scan_census(census_lines(5, connected=True))
        stats = report.to_dict()['statistics']
        self.assertGreater(stats['independent_connected'], 0)
        for key in ('low_degree', 'claw_free_candidate'):
            for text in stats[key]:
                self.assertIsNotNone(parse_graph6(text))

    def test_dump(self):
        """Verify that violations are written as DOT files."""
        report = CensusReport(['UNIV-VERTEX'])
        report.findings.append(Finding(4, 'Bw', 'UNIV-VERTEX', VIOLATION,
                                       {'universal': [0]}, None))
        tmp = tempfile.mkdtemp()
        try:
            paths = dump_violations(report, os.path.join(tmp, 'dots'))
            self.assertEqual([os.path.basename(p) for p in paths],
                             ['violation-000004.dot'])
            with open(paths[0]) as dot:
                self.assertTrue(dot.read().startswith('graph violation4'))
        finally:
            shutil.rmtree(tmp)


class TestProbe(unittest.TestCase):

    def test_c4(self):
        """Verify that C4 is found as the IR-graph of 2K2."""
        result = probe_target(cycle(4), census_lines(4))
        self.assertTrue(result.exhausted)
        matches = [parse_graph6(text) for _, text in result.matches]
        matching = disjoint_union(complete(2), complete(2))
        self.assertTrue(any(are_isomorphic(G, matching) for G in matches))
        for G in matches:
            self.assertTrue(are_isomorphic(build_ir_graph(G).graph,
                                           cycle(4)))

    def test_k3(self):
        """Verify that K3 is its own IR-graph."""
        result = probe_target(complete(3), census_lines(3))
        self.assertIn(complete(3),
                      [parse_graph6(text) for _, text in result.matches])

    def test_paths(self):
        """Test that short paths and a star are not small IR-graphs."""
        lines = census_lines(5)
        for target in (path(3), path(4), path(5), cycle(5), star(3)):
            result = probe_target(target, lines)
            self.assertEqual(result.matches, [])
            self.assertTrue(result.exhausted)
            self.assertTrue(result.summary().startswith(
                '0 matches, exhausted'))
            self.assertIn('bounded evidence up to n=5', result.summary())

    @unittest.skipUnless(SLOW, 'set IRGRAPH_SLOW_TESTS to run')
    def test_paths_seven(self):
        """Test that no small path, cycle or star is an IR-graph for n <= 7."""
        lines = census_lines(7)
        targets = [path(3), path(4), path(5), cycle(5), cycle(6), cycle(7)]
        targets += [star(k) for k in range(2, 7)]
        for target in targets:
            result = probe_target(target, lines, Caps(workers=4))
            self.assertEqual(result.matches, [])
            self.assertTrue(result.exhausted)
            self.assertEqual(result.n_max, 7)

    def test_not_exhausted(self):
        """Verify that unreadable entries leave the search unexhausted."""
        result = probe_target(double_star(2, 2), ['A_', 'bad line'])
        self.assertFalse(result.exhausted)
        self.assertEqual(result.scanned, 1)
        data = result.to_dict()
        self.assertEqual(data['parse_errors'], [1])
        self.assertFalse(data['exhausted'])

    def test_target_limit(self):
        """Verify that targets over the isomorphism cap are refused."""
        with self.assertRaises(LimitExceededError):
            probe_target(empty_graph(40), ['A_'])


if __name__ == '__main__':
    unittest.main()
