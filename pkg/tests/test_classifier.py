import unittest

from nlrewrite.classifier import *
from nlrewrite.exceptions import MorphismError, PreconditionError
from nlrewrite.graphcat import *
from nlrewrite.limits import is_pullback

from fixtures import clone_rule, looped_clone_rule, looped_vertex, vertex_map


class TestClassifier(unittest.TestCase):
    def test_sizes(self):
        T = classify_object(multigraph(['v'])).T_object
        self.assertEqual((len(T.vertices), len(T.edges)), (2, 4))
        T = classify_object(looped_vertex(MULTIGRAPH)).T_object
        self.assertEqual((len(T.vertices), len(T.edges)), (2, 5))
        T = classify_object(simplegraph(['u', 'v'])).T_object
        self.assertEqual((len(T.vertices), len(T.edges)), (3, 5))

    def test_star_is_fresh(self):
        data = classify_object(multigraph(['*']))
        self.assertEqual(data.star, "*'")
        self.assertEqual(data.classifier_edge('*', "*'"), "e(*,*')")
        self.assertTrue(is_regular_mono(data.eta))

    def test_T_on_morphism(self):
        f = Morphism(multigraph(['u', 'v']), multigraph(['w']), {'u': 'w', 'v': 'w'}, {})
        Tf = T_on_morphism(f)
        self.assertEqual(Tf.vmap['*'], '*')
        self.assertEqual(Tf.emap['e(u,v)'], 'e(w,w)')
        self.assertEqual(Tf.emap['e(u,*)'], 'e(w,*)')

    def test_partial_map(self):
        A = multigraph(['a'])
        X = multigraph(['a', 'b'], [('e', 'a', 'b')])
        B = multigraph(['b0'])
        m = Morphism(A, X, {'a': 'a'}, {})
        f = Morphism(A, B, {'a': 'b0'}, {})
        phi = classify_partial(m, f)
        self.assertEqual(phi.vmap, {'a': 'b0', 'b': '*'})
        self.assertEqual(phi.emap, {'e': 'e(b0,*)'})
        self.assertTrue(is_pullback(Cospan(phi, classify_object(B).eta), Span(m, f)))

    def test_partial_map_needs_regular_mono(self):
        A = simplegraph(['x'])
        m = Morphism.from_vertex_map(A, looped_vertex(SIMPLEGRAPH), {'x': 'v'})
        with self.assertRaises(PreconditionError):
            classify_partial(m, identity(A))
        with self.assertRaises(MorphismError):
            classify_partial(m, identity(looped_vertex(SIMPLEGRAPH)))


class TestFinalPullbackComplements(unittest.TestCase):
    def setUp(self):
        rule = clone_rule(MULTIGRAPH)
        self.f = rule.input_leg
        self.X = looped_vertex(MULTIGRAPH)
        self.m = Morphism(rule.I, self.X, {'x': 'v'}, {})

    def test_clone_on_a_loop(self):
        result = fpc(self.f, self.m)
        F = result.object
        self.assertEqual(sorted(F.vertices), ['v.k1', 'v.k2'])
        self.assertEqual(len(F.edges), 4)
        self.assertIn('l.e(k1,k2)', F.edges)
        self.assertEqual(result.n.vmap, {'k1': 'v.k1', 'k2': 'v.k2'})
        self.assertEqual(set(result.g.emap.values()), {'l'})
        self.assertTrue(result.square.commutes())
        self.assertTrue(verify_fpc(self.f, self.m, result.n, result.g))

    def test_pullback_that_is_not_final(self):
        K = self.f.dom
        g = Morphism(K, self.X, {'k1': 'v', 'k2': 'v'}, {})
        self.assertFalse(verify_fpc(self.f, self.m, identity(K), g))

    def test_mediate(self):
        result = fpc(self.f, self.m)
        n, g = result
        h = result.mediate(n, identity(self.f.dom), g)
        self.assertEqual(h, identity(result.object))

    def test_simple_graphs(self):
        rule = looped_clone_rule()
        X = looped_vertex(SIMPLEGRAPH)
        m = vertex_map(rule.I, X, {'x': 'v'})
        result = fpc(rule.input_leg, m)
        self.assertEqual((len(result.object.vertices), len(result.object.edges)), (2, 4))
        self.assertTrue(verify_fpc(rule.input_leg, m, result.n, result.g))

    def test_needs_regular_mono(self):
        A = simplegraph(['x'])
        m = Morphism.from_vertex_map(A, looped_vertex(SIMPLEGRAPH), {'x': 'v'})
        with self.assertRaises(PreconditionError):
            fpc(identity(A), m)
        with self.assertRaises(MorphismError):
            fpc(self.f, identity(self.X))


if __name__ == '__main__':
    unittest.main()
