from __future__ import print_function, division

import io
import json
import os
import re
import shutil
import tempfile
import unittest

from ..graph import GraphError, complete, double_star, path, star
from ..formats import graph_from_json, parse_graph6
from ..isomorphism import are_isomorphic
from ..reconfig import build_ir_graph
from ..constructions import fixture
from ..scripts.cli import main, parse_graph_argument
from .oracle import census_lines


class TestGraphArgument(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_forms(self):
        """Verify that fixtures, families, graph6 and files are accepted."""
        self.assertEqual(parse_graph_argument('A_'), complete(2))
        self.assertEqual(parse_graph_argument('path4'), path(4))
        self.assertEqual(parse_graph_argument('doublestar:2,2'),
                         double_star(2, 2))
        self.assertEqual(parse_graph_argument('fig3-G').labels,
                         fixture('fig3-G').labels)
        name = os.path.join(self.tmp, 'g.g6')
        with open(name, 'w') as out:
            out.write('>>graph6<<Bw\n')
        self.assertEqual(parse_graph_argument('@' + name), complete(3))
        name = os.path.join(self.tmp, 'g.json')
        with open(name, 'w') as out:
            out.write('{"n": 3, "edges": [[0, 1], [1, 2]]}')
        self.assertEqual(parse_graph_argument('@' + name), path(3))

    def test_graph6_family_prefix(self):
        """Test that graph6 starting with a family name stays graph6."""
        for text in ('Star' + '?' * 29, 'Path' + '?' * 20):
            G = parse_graph_argument(text)
            self.assertEqual(G, parse_graph6(text))
        self.assertEqual(parse_graph_argument('Star' + '?' * 29).n, 20)
        self.assertEqual(parse_graph_argument('star3'), star(3))

    def test_errors(self):
        """Verify that unparseable arguments raise GraphError."""
        for bad in ('A', 'path0', 'spider:1', '!!'):
            with self.assertRaises(GraphError):
                parse_graph_argument(bad)
        name = os.path.join(self.tmp, 'empty.g6')
        open(name, 'w').close()
        with self.assertRaises(GraphError):
            parse_graph_argument('@' + name)


class TestMain(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.out = os.path.join(self.tmp, 'out.txt')

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def run_main(self, *args):
        """Run the command line, returning (status, output)."""
        if os.path.exists(self.out):
            os.remove(self.out)
        status = main(list(args) + ['--output', self.out])
        text = None
        if os.path.exists(self.out):
            with io.open(self.out, encoding='utf-8') as handle:
                text = handle.read()
        return status, text

    def census(self, lines):
        name = os.path.join(self.tmp, 'census.g6')
        with open(name, 'w') as out:
            out.write('\n'.join(lines) + '\n')
        return name

    def test_compute(self):
        """Verify the report of a single edge."""
        status, text = self.run_main('compute', 'A_')
        self.assertEqual(status, 0)
        self.assertEqual(text, 'ir=1 IR=1 sets=[{0},{1}]\n')
        status, text = self.run_main('compute', 'path3', '--format', 'json')
        self.assertEqual(json.loads(text)['IR'], 2)

    def test_irgraph_dot(self):
        """Verify that DOT output of the six-vertex fixture has six nodes."""
        status, text = self.run_main('irgraph', 'fig3-G', '--format', 'dot')
        self.assertEqual(status, 0)
        nodes = [line for line in text.splitlines()
                 if re.match(r'^\s*\d+ \[', line)]
        self.assertEqual(len(nodes), 6)
        self.assertEqual(text.count('--'), 5)

    def test_irgraph_json(self):
        """Test that JSON output reads back as the IR-graph."""
        status, text = self.run_main('irgraph', 'fig4-F', '--format', 'json')
        self.assertEqual(status, 0)
        H = graph_from_json(json.loads(text))
        self.assertTrue(are_isomorphic(H, build_ir_graph(fixture('fig4-F'))
                                       .graph))
        status, text = self.run_main('irgraph', 'complete3')
        self.assertTrue(text.startswith('IR=1 nodes=3 edges=3'))

    def test_construct(self):
        """Verify the source construction for a disconnected target."""
        status, text = self.run_main('construct', 'thm31', '--target', 'A?',
                                     '--N', '2', '--format', 'json')
        self.assertEqual(status, 0)
        data = json.loads(text)
        self.assertEqual(data['n'], 6)
        self.assertEqual(data['x'], [2, 3])
        G = graph_from_json(data)
        self.assertEqual(len(build_ir_graph(G)), 2)
        status, text = self.run_main('construct', 'thm31', '--target',
                                     'path3')
        self.assertEqual(status, 2)
        self.assertIsNone(text)

    def test_fixture_family(self):
        """Verify that fixtures and families print as graph6 plus edges."""
        status, text = self.run_main('fixture', 'fig1-G')
        self.assertEqual(status, 0)
        lines = text.splitlines()
        self.assertEqual(parse_graph6(lines[0]).n, 6)
        self.assertIn('a b', lines[1:])
        status, text = self.run_main('family', 'doublespider:1,1;1,2',
                                     '--format', 'json')
        self.assertEqual(json.loads(text)['n'], 7)

    def test_check(self):
        """Verify the check exit status on violations and parse errors."""
        status, text = self.run_main(
            'check', self.census(census_lines(4, connected=True)))
        self.assertEqual(status, 0)
        self.assertIn('0 violations', text)
        findings = os.path.join(self.tmp, 'findings.jsonl')
        status, text = self.run_main(
            'check', self.census(['A_', 'oops!', 'Bw']), '--format', 'json',
            '--checks', 'UNIV-VERTEX,DIAM2-C4', '--findings', findings)
        self.assertEqual(status, 2)
        self.assertEqual(len(json.loads(text)['parse_errors']), 1)
        with open(findings) as handle:
            rows = [json.loads(line) for line in handle]
        self.assertEqual(len(rows), 4)
        self.assertEqual(rows[0]['check'], 'UNIV-VERTEX')
        status, text = self.run_main('check', self.census(['A_']),
                                     '--checks', 'NOPE')
        self.assertEqual(status, 2)

    def test_probe(self):
        """Verify the probe exit status and summary wording."""
        census = self.census(census_lines(5))
        status, text = self.run_main('probe', '--target', 'path4', census)
        self.assertEqual(status, 0)
        self.assertTrue(text.startswith('0 matches, exhausted'))
        self.assertIn('bounded evidence up to n=5', text)
        status, text = self.run_main('probe', '--target', 'cycle4', census)
        self.assertEqual(status, 1)
        status, text = self.run_main('probe', '--target', 'cycle4', census,
                                     '--expect-matches', '--format', 'json')
        self.assertEqual(status, 0)
        self.assertTrue(json.loads(text)['matches'])
        status, text = self.run_main('probe', '--target', 'path4', census,
                                     '--expect-matches')
        self.assertEqual(status, 1)

    def test_errors(self):
        """Test that bad input and bad caps exit with status 2."""
        self.assertEqual(self.run_main('compute', '!!')[0], 2)
        self.assertEqual(self.run_main('compute', 'A_', '--max-sets',
                                       '0')[0], 2)
        self.assertEqual(self.run_main('compute', 'complete5', '--max-sets',
                                       '3')[0], 2)
        self.assertEqual(self.run_main('fixture', 'fig1-G', '--format',
                                       'json')[0], 0)
        with self.assertRaises(SystemExit) as context:
            main(['fixture', 'fig2-G'])
        self.assertEqual(context.exception.code, 2)


if __name__ == '__main__':
    unittest.main()
