import unittest

from nlrewrite.exceptions import InvalidMatchError, MorphismError, PreconditionError
from nlrewrite.graphcat import *
from nlrewrite.rewrite import *

from fixtures import (add_edge_rule, add_vertex_rule, clone_rule, delete_edge_rule, delete_rule, identity_rule,
                      looped_clone_rule, looped_vertex, merge_rule, star, vertex_map)


def shape(X):
    return len(X.vertices), len(X.edges)


class TestRules(unittest.TestCase):
    def test_motifs(self):
        rule = clone_rule()
        self.assertEqual(sorted(rule.K.vertices), ['k1', 'k2'])
        self.assertEqual(sorted(rule.I.vertices), ['x'])
        self.assertEqual(rule.O, rule.K)
        self.assertFalse(rule.is_linear())
        self.assertTrue(add_edge_rule().is_linear())

    def test_legs_share_a_domain(self):
        K = multigraph(['k'])
        with self.assertRaises(MorphismError):
            Rule('broken', identity(K), identity(multigraph(['j'])))

    def test_mirror(self):
        rule = merge_rule()
        mirrored = rule.mirror()
        self.assertEqual(mirrored.I, rule.O)
        self.assertEqual(mirrored.O, rule.I)
        self.assertTrue(rules_isomorphic(mirrored.mirror(), rule))

    def test_isomorphic(self):
        K = multigraph(['a', 'b'])
        I = multigraph(['c'])
        renamed = Rule('copy', identity(K), Morphism(K, I, {'a': 'c', 'b': 'c'}, {}))
        self.assertTrue(rules_isomorphic(clone_rule(), renamed))
        self.assertFalse(rules_isomorphic(clone_rule(), merge_rule()))
        self.assertFalse(rules_isomorphic(clone_rule(), clone_rule(SIMPLEGRAPH)))


class TestSqPO(unittest.TestCase):
    def test_clone_on_a_loop(self):
        X = looped_vertex(MULTIGRAPH)
        found = matches_sqpo(clone_rule(), X)
        self.assertEqual(len(found), 1)
        d = derive_sqpo(X, clone_rule(), found[0])
        self.assertEqual(shape(d.result), (2, 4))
        self.assertEqual(d.tags, ('fpc', 'pushout'))
        self.assertTrue(d.left_square.commutes())
        self.assertTrue(d.right_square.commutes())

    def test_clone_on_simple_graphs(self):
        X = looped_vertex(SIMPLEGRAPH)
        rule = looped_clone_rule()
        d = derive(X, rule, matches(rule, X)[0])
        self.assertEqual(shape(d.result), (2, 4))
        self.assertEqual(matches_sqpo(clone_rule(SIMPLEGRAPH), X), [])

    def test_clone_copies_incident_edges(self):
        X = multigraph(['v', 'w'], [('e', 'v', 'w')])
        rule = clone_rule()
        m = Morphism(rule.I, X, {'x': 'v'}, {})
        d = derive_sqpo(X, rule, SqPOMatch(m))
        self.assertEqual(shape(d.result), (3, 2))

    def test_deletion_drops_dangling_edges(self):
        X = star(MULTIGRAPH)
        rule = delete_rule()
        m = Morphism(rule.I, X, {'x': 'c'}, {})
        d = derive_sqpo(X, rule, SqPOMatch(m))
        self.assertEqual(shape(d.result), (3, 0))
        self.assertEqual(shape(d.complement), (3, 0))

    def test_identity_rule(self):
        X = multigraph(['a', 'b'], [('e', 'a', 'b'), ('f', 'b', 'b')])
        for d in derive_all(X, identity_rule()):
            self.assertEqual(d.result, canonical_form(X))

    def test_merge(self):
        X = multigraph(['a', 'b'], [('e', 'a', 'b')])
        results = derive_all(X, merge_rule())
        self.assertEqual(len(results), 2)
        for d in results:
            self.assertEqual(shape(d.result), (1, 1))

    def test_parallel_edges(self):
        X = multigraph(['a', 'b'], [('e', 'a', 'b'), ('f', 'a', 'b')])
        results = derive_all(X, delete_edge_rule())
        self.assertEqual(len(results), 2)
        self.assertEqual([shape(d.result) for d in results], [(2, 1), (2, 1)])

    def test_empty_match(self):
        X = multigraph([])
        d = derive_all(X, add_vertex_rule())[0]
        self.assertEqual(shape(d.result), (1, 0))

    def test_threads(self):
        X = multigraph(['a', 'b', 'c'], [('e', 'a', 'b')])
        serial = [d.result for d in derive_all(X, clone_rule())]
        threaded = [d.result for d in derive_all(X, clone_rule(), jobs=3)]
        self.assertEqual(serial, threaded)

    def test_invalid_matches(self):
        X = looped_vertex(SIMPLEGRAPH)
        rule = clone_rule(SIMPLEGRAPH)
        m = vertex_map(rule.I, X, {'x': 'v'})
        with self.assertRaises(InvalidMatchError) as cm:
            derive_sqpo(X, rule, SqPOMatch(m))
        self.assertEqual(cm.exception.message, 'matches must be regular monomorphisms')
        other = simplegraph(['v', 'w'])
        with self.assertRaises(InvalidMatchError):
            derive_sqpo(other, rule, SqPOMatch(m))

    def test_unknown_semantics(self):
        with self.assertRaises(PreconditionError):
            matches(clone_rule(), multigraph(['v']), 'spo')
        with self.assertRaises(PreconditionError):
            derive(multigraph(['v']), clone_rule(), None, 'spo')


class TestDPO(unittest.TestCase):
    def test_clone_on_a_loop(self):
        X = looped_vertex(MULTIGRAPH)
        found = matches_dpo(clone_rule(), X)
        self.assertEqual(len(found), 4)
        for match in found:
            d = derive_dpo(X, clone_rule(), match)
            self.assertEqual(shape(d.result), (2, 1))
            self.assertEqual(d.tags, ('poc', 'pushout'))

    def test_dangling_condition(self):
        X = star(MULTIGRAPH)
        self.assertEqual(matches(delete_rule(), X, DPO), [])
        self.assertEqual(len(matches(delete_rule(), multigraph(['a', 'b']), DPO)), 2)

    def test_reverse_match(self):
        X = looped_vertex(MULTIGRAPH)
        rule = clone_rule()
        for match in matches_dpo(rule, X):
            d = derive_dpo(X, rule, match)
            back = derive_dpo(d.result_raw, rule.mirror(), d.reverse_match())
            self.assertEqual(back.result, canonical_form(X))

    def test_foreign_complement(self):
        X = looped_vertex(MULTIGRAPH)
        rule = clone_rule()
        first, second = matches_dpo(rule, X)[:2]
        derive_dpo(X, rule, first)
        with self.assertRaises(InvalidMatchError):
            derive_dpo(multigraph(['v']), rule, DPOMatch(Morphism(rule.I, multigraph(['v']), {'x': 'v'}, {}),
                                                         first.poc))
        self.assertNotEqual(first.poc.key(), second.poc.key())


if __name__ == '__main__':
    unittest.main()
