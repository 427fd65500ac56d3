"""Universal properties and constructions checked on randomly drawn small graphs."""

import unittest

from hypothesis import HealthCheck, given, settings, strategies as st

from nlrewrite.classifier import fpc, verify_fpc
from nlrewrite.graphcat import *
from nlrewrite.limits import epi_rm_factorize, is_pullback, pullback, pushout_rm, verify_pullback, verify_pushout
from nlrewrite.multi import mpoc, mpoc_oracle, multisum, multisum_via_pushouts
from nlrewrite.rewrite import derive_all

from fixtures import identity_rule
from strategies import categories, complement_inputs, cospans, graphs, inclusions, morphisms, rm_spans

small = settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.filter_too_much,
                                                                         HealthCheck.too_slow])


def keys(elements):
    return [element.key() for element in elements]


class TestUniversalProperties(unittest.TestCase):
    @small
    @given(rm_spans())
    def test_pushout_along_regular_mono(self, span):
        result = pushout_rm(span)
        self.assertTrue(is_jointly_epic(result.left, result.right))
        self.assertTrue(verify_pushout(span, result.cospan))

    @small
    @given(cospans())
    def test_pullback(self, legs):
        cospan = Cospan(*legs)
        result = pullback(cospan)
        self.assertTrue(verify_pullback(cospan, result.span))

    @small
    @given(rm_spans())
    def test_pushouts_along_regular_monos_are_stable(self, span):
        result = pushout_rm(span)
        self.assertTrue(is_regular_mono(result.right))
        self.assertTrue(is_pullback(result.cospan, span))

    @small
    @given(st.data())
    def test_regular_monos_are_stable_under_pullback(self, data):
        category = data.draw(categories())
        B = data.draw(graphs(category, 1, 1, prefix='b'))
        m = data.draw(inclusions(B, prefix='d'))
        C = data.draw(graphs(category, 2, 2, prefix='c'))
        g = data.draw(morphisms(C, m.cod))
        result = pullback(Cospan(m, g))
        self.assertTrue(is_regular_mono(result.right))

    @small
    @given(complement_inputs())
    def test_final_pullback_complement(self, inputs):
        f, m = inputs
        result = fpc(f, m)
        self.assertTrue(result.square.commutes())
        self.assertTrue(verify_fpc(f, m, result.n, result.g))

    @small
    @given(st.data())
    def test_image_factorization(self, data):
        category = data.draw(categories())
        A = data.draw(graphs(category, 2, 2, prefix='a'))
        B = data.draw(graphs(category, 2, 2, prefix='b'))
        f = data.draw(morphisms(A, B))
        epi, rm = epi_rm_factorize(f)
        self.assertEqual(compose(rm, epi), f)
        self.assertTrue(is_epi(epi))
        self.assertTrue(is_regular_mono(rm))


class TestConstructionsAgree(unittest.TestCase):
    @small
    @given(complement_inputs())
    def test_mpoc_matches_brute_force(self, inputs):
        f, m = inputs
        self.assertEqual(keys(mpoc(f, m)), keys(mpoc_oracle(f, m)))

    @small
    @given(st.data())
    def test_multisum_matches_pushouts(self, data):
        category = data.draw(categories())
        A = data.draw(graphs(category, 2, 1, prefix='a'))
        B = data.draw(graphs(category, 2, 1, prefix='b'))
        self.assertEqual(keys(multisum(A, B)), keys(multisum_via_pushouts(A, B)))

    @small
    @given(st.data())
    def test_identity_rule_preserves_the_host(self, data):
        category = data.draw(categories())
        X = data.draw(graphs(category, 3, 3))
        for d in derive_all(X, identity_rule(category)):
            self.assertEqual(d.result, canonical_form(X))


if __name__ == '__main__':
    unittest.main()
