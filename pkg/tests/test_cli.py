"""The command line verbs end to end, over documents written to a temporary directory."""

import os.path
import shutil
import unittest
import sys
from io import StringIO
from unittest.mock import patch

from nlrewrite.cli import *
from nlrewrite.cli.documents import parse_documents, serialize, serialize_rule
from nlrewrite.exceptions import CategoryMismatchError, ParseError, RewriteError, make_error
from nlrewrite.graphcat import MULTIGRAPH, multigraph

from fixtures import clone_rule

BASE_DIR = os.path.dirname(__file__)

CLONE = """\
rule clone
  category multigraph
  object I
    vertex x
  end
  object K
    vertex k1
    vertex k2
  end
  object O
    vertex k1
    vertex k2
  end
  morphism input K I
    vmap k1 x
    vmap k2 x
  end
  morphism output K O
    vmap k1 k1
    vmap k2 k2
  end
end
"""

LOOP = """\
# a vertex with a loop
graph host
  category multigraph
  vertex v
  edge l v v
end
"""

UNTYPED = """\
graph plain
  vertex v
end
"""

CLONE_AT_LOOP = """\
diagram clone-at-loop
  category multigraph
  object K
    vertex k1
    vertex k2
  end
  object I
    vertex x
  end
  object X
    vertex v
    edge l v v
  end
  morphism f K I
    vmap k1 x
    vmap k2 x
  end
  morphism b I X
    vmap x v
  end
  morphism m I X
    vmap x v
  end
end
"""

LOOPS = """\
diagram loops
  category multigraph
  object K
    vertex k1
    vertex k2
  end
  object K_bar
    vertex k1
    vertex k2
    edge p1 k1 k1
    edge p2 k2 k2
  end
  object I
    vertex x
  end
  morphism alpha K K_bar
    vmap k1 k1
    vmap k2 k2
  end
  morphism a K I
    vmap k1 x
    vmap k2 x
  end
end
"""

SQUARE = """\
diagram square
  category multigraph
  object A
    vertex a
  end
  object B
    vertex a
    vertex b
  end
  object C
    vertex a
    vertex c
  end
  object D
    vertex a
    vertex b
    vertex c
    {extra}
  end
  morphism top A B
    vmap a a
  end
  morphism left A C
    vmap a a
  end
  morphism right B D
    vmap a a
    vmap b b
  end
  morphism bottom C D
    vmap a a
    vmap c c
  end
end
"""


class TestDocuments(unittest.TestCase):
    def test_parse_rule(self):
        docs = parse_documents(CLONE)
        self.assertEqual([(doc.kind, doc.name) for doc in docs], [('rule', 'clone')])
        rule = docs[0].value
        self.assertEqual(rule.K, clone_rule().K)
        self.assertEqual(rule.input_leg, clone_rule().input_leg)

    def test_serialization_is_canonical(self):
        text = serialize(parse_documents(CLONE)[0])
        self.assertEqual(text, CLONE)
        self.assertEqual(serialize_rule(clone_rule()), CLONE)
        reordered = LOOP.replace('  vertex v\n  edge l v v\n', '  edge l v v\n  vertex v\n')
        self.assertEqual(serialize(parse_documents(reordered)[0]), LOOP.split('\n', 1)[1])

    def test_default_category(self):
        doc = parse_documents(UNTYPED, MULTIGRAPH)[0]
        self.assertEqual(doc.value, multigraph(['v']))
        with self.assertRaises(ParseError) as cm:
            parse_documents(UNTYPED)
        self.assertEqual(cm.exception.line, 1)
        with self.assertRaises(CategoryMismatchError):
            parse_documents(LOOP, 'simplegraph')

    def test_errors(self):
        cases = [
            ('vertex v\n', 'line 1: expected graph, rule or diagram, got "vertex"'),
            ('graph g\n  category multigraph\n  vertex v\n', 'line 1: graph "g" is never closed with "end"'),
            ('graph g\n  category hypergraph\nend\n', 'line 2: unknown category "hypergraph"'),
            ('graph g\n  category multigraph\n  edge e v\nend\n', 'line 3: "edge" takes 3 arguments, got 2'),
            (CLONE.replace('    vmap k2 x\n', ''), 'line 14: morphism "input": vertex map is not total on the domain'),
            (CLONE.replace('    vmap k2 k2\n', '    vmap k2 k2\n    vmap k2 k1\n'), 'line 21: "k2" is mapped twice'),
            (CLONE.replace('morphism output K O', 'morphism output K P'),
             'line 18: object "P" is not declared before morphism "output"'),
            (CLONE.replace('morphism output K O', 'morphism out K O'),
             'line 1: rule "clone" needs exactly the morphisms "input K I" and "output K O"'),
        ]
        for text, message in cases:
            with self.assertRaises(ParseError) as cm:
                parse_documents(text)
            self.assertEqual(cm.exception.message, message)
            self.assertEqual(cm.exception.exit_code, 2)

    def test_error_factory(self):
        error = make_error('ParseError', 'bad token', line=3)
        self.assertIsInstance(error, ParseError)
        self.assertEqual((error.line, error.message), (3, 'line 3: bad token'))
        self.assertEqual(str(error), 'ParseError: line 3: bad token')
        self.assertEqual(make_error('SelectionError', 'no such match').exit_code, 4)
        self.assertIsInstance(make_error('CategoryMismatchError'), CategoryMismatchError)
        self.assertEqual(make_error('CategoryMismatchError').message, 'no info')
        unknown = make_error('LayoutError', 'off the page')
        self.assertIs(type(unknown), RewriteError)
        self.assertEqual(str(unknown), 'LayoutError: off the page')

    def test_diagrams(self):
        diagram = parse_documents(CLONE_AT_LOOP)[0].value
        self.assertEqual(list(diagram.objects), ['K', 'I', 'X'])
        self.assertEqual(diagram.arrows['b'], ('I', 'X'))
        self.assertEqual(diagram.morphism('f').dom, clone_rule().K)
        with self.assertRaises(ParseError):
            diagram.morphism('g')

    def test_dot(self):
        diagram = parse_documents(CLONE_AT_LOOP)[0].value
        source = to_dot(diagram)
        self.assertTrue(source.startswith('digraph "clone-at-loop" {'))
        self.assertIn('subgraph cluster_2', source)
        self.assertIn('"X/v" -> "X/v" [label="l"];', source)
        self.assertIn('style=dashed', source)
        self.assertNotIn('style=dashed', to_dot(diagram, traces=False))

    def test_render_without_graphviz(self):
        with patch('subprocess.run', side_effect=FileNotFoundError):
            with self.assertLogs('CLI', 'WARNING') as cm:
                self.assertFalse(render('digraph {}', 'out.svg'))
        self.assertIn('not installed', cm.output[0])


class TestCommandLine(unittest.TestCase):
    def setUp(self):
        self.dirname = os.path.join(BASE_DIR, 'temp')
        if os.path.exists(self.dirname):
            shutil.rmtree(self.dirname)
        os.makedirs(self.dirname)
        self.clone = self.write('clone.txt', CLONE)
        self.loop = self.write('loop.txt', LOOP)

    def tearDown(self):
        shutil.rmtree(self.dirname)

    def write(self, name, text):
        path = os.path.join(self.dirname, name)
        with open(path, 'w') as fobj:
            fobj.write(text)
        return path

    def run_main(self, *argv):
        with patch('sys.stdout', new_callable=StringIO) as out, patch('sys.stderr', new_callable=StringIO) as err:
            code = main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def test_apply(self):
        code, out, _ = self.run_main('apply', self.clone, self.loop)
        self.assertEqual(code, 0)
        docs = parse_documents(out)
        self.assertEqual([(doc.kind, doc.name) for doc in docs], [('graph', 'result'), ('diagram', 'derivation')])
        result = docs[0].value
        self.assertEqual((len(result.vertices), len(result.edges)), (2, 4))

    def test_matches(self):
        code, out, _ = self.run_main('matches', self.clone, self.loop, '--semantics', 'dpo')
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('# 4 dpo matches of "clone" in "host"\n'))
        self.assertEqual(len(parse_documents(out)), 4)

    def test_selection_out_of_range(self):
        code, _, err = self.run_main('apply', self.clone, self.loop, '--index', '5')
        self.assertEqual(code, 4)
        self.assertIn('match index 5 is out of range, 1 available', err)

    def test_category_mismatch(self):
        code, _, err = self.run_main('apply', self.clone, self.loop, '--category', 'simplegraph')
        self.assertEqual(code, 3)
        self.assertIn('CategoryMismatchError', err)

    def test_parse_error(self):
        broken = self.write('broken.txt', LOOP.replace('end\n', ''))
        code, _, err = self.run_main('apply', self.clone, broken)
        self.assertEqual(code, 2)
        self.assertIn('line 2: graph "host" is never closed', err)

    def test_compose(self):
        code, out, _ = self.run_main('compose', self.clone, self.clone, '--index', '0')
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('# rule match 0\n'))
        names = [doc.name for doc in parse_documents(out)]
        self.assertEqual(names, ['clone.clone.0', 'witness.0'])
        code, _, _ = self.run_main('compose', self.clone, self.clone, '--index', '999')
        self.assertEqual(code, 4)

    def test_synthesize_and_analyze(self):
        code, out, _ = self.run_main('synthesize', self.clone, self.clone, self.loop)
        self.assertEqual(code, 0)
        self.assertEqual(parse_documents(out)[0].name, 'clone.clone')
        code, out, _ = self.run_main('analyze', self.clone, self.clone, self.loop)
        self.assertEqual(code, 0)
        names = [doc.name for doc in parse_documents(out)]
        self.assertEqual(names, ['intermediate', 'result', 'first', 'second'])

    def test_check_compat(self):
        code, out, _ = self.run_main('check-compat', self.clone, self.clone, self.loop, '--jobs', '2')
        self.assertEqual(code, 0)
        self.assertTrue(out.endswith('PASS\n'))

    def test_constructions(self):
        one = self.write('one.txt', 'graph one\n  category multigraph\n  vertex v\nend\n')
        two = self.write('two.txt', 'graph two\n  category multigraph\n  vertex w\nend\n')
        code, out, _ = self.run_main('multisum', one, two)
        self.assertTrue(out.startswith('# 2 multi-sum elements\n'))
        code, out, _ = self.run_main('multisum', one, two, '--via-pushouts')
        self.assertTrue(out.startswith('# 2 multi-sum elements\n'))
        diagram = self.write('clone-at-loop.txt', CLONE_AT_LOOP)
        for extra in ((), ('--oracle',)):
            code, out, _ = self.run_main('mpoc', diagram, *extra)
            self.assertEqual(code, 0)
            self.assertTrue(out.startswith('# 4 pushout complements\n'))
        code, out, _ = self.run_main('fpc', diagram)
        fpc_diagram = parse_documents(out)[0].value
        self.assertEqual(len(fpc_diagram.objects['F'].edges), 4)
        loops = self.write('loops.txt', LOOPS)
        code, out, _ = self.run_main('fpa', loops)
        self.assertTrue(out.startswith('# 2 augmentations\n# augmentation 0 (trivial)\n'))

    def test_oracle(self):
        good = self.write('good.txt', SQUARE.format(extra=''))
        code, out, _ = self.run_main('oracle', 'verify-pushout', good)
        self.assertEqual((code, out), (0, 'verify-pushout: PASS\n'))
        bad = self.write('bad.txt', SQUARE.format(extra='vertex z'))
        code, out, err = self.run_main('oracle', 'verify-pushout', bad)
        self.assertEqual((code, out), (5, 'verify-pushout: FAIL\n'))
        self.assertIn('counterexample: Square(', err)
        code, out, _ = self.run_main('oracle', 'verify-pullback', good)
        self.assertEqual(code, 0)

    def test_random_oracle(self):
        for kind in ('verify-pushout', 'verify-pullback', 'verify-fpc'):
            code, out, _ = self.run_main('oracle', kind, '--seed', '7', '--count', '3', '--jobs', '2')
            self.assertEqual(code, 0)
            self.assertTrue(out.endswith('0 failed\nPASS\n'))

    def test_output_and_render(self):
        target = os.path.join(self.dirname, 'matches.dot')
        with patch.object(sys.modules['nlrewrite.cli.main'], 'render') as render_mock:
            code, out, _ = self.run_main('matches', self.clone, self.loop, '--semantics', 'dpo', '--format', 'dot',
                                         '-o', target, '--render', os.path.join(self.dirname, 'm.svg'))
        self.assertEqual((code, out), (0, ''))
        with open(target) as fobj:
            self.assertEqual(fobj.read().count('digraph'), 4)
        rendered = [call[0][1] for call in render_mock.call_args_list]
        self.assertEqual(rendered, [os.path.join(self.dirname, f'm-{i}.svg') for i in range(4)])


if __name__ == '__main__':
    unittest.main()
