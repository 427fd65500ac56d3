"""SqPO rule composition and the synthesis and analysis of two-step SqPO derivations.

The composition diagram of ``r2`` after ``r1`` along a rule match ``(j2, j1), (j1_bar, o1_bar), (n, i1_dbar, e21)``::

    O21_bar <- K2_dbar -> J21_bar <- K1_dbar -> I21_bar
       ^          ^          ^          ^          ^
      O21   <-  K2_bar  ->  J21   <-  K1_bar  ->  I21
       ^          ^        ^   ^        ^          ^
      O2    <-   K2    ->  I2  O1  <-   K1    ->  I1

The composite rule is the span composite of the two upper spans.
"""

import logging

from nlrewrite.classifier import fpc
from nlrewrite.concurrent.composite import CompositeRule, compose_spans, host_transport
from nlrewrite.exceptions import PreconditionError, TheoremCheckError
from nlrewrite.graphcat import Cospan, Span, canonical_form, check_same_category, compose
from nlrewrite.labels import complement_labels, cospan_labels, cover_labels, labels_key, quotient_labels
from nlrewrite.limits import FPC, PULLBACK, PUSHOUT, Square, epi_rm_factorize, pullback, pushout_rm
from nlrewrite.multi import POCElement, fpa_enumerate, fpa_from_epi, mpoc, multisum, multisum_factorize
from nlrewrite.rewrite import SQPO, Rule, SqPOMatch, assemble_derivation

__all__ = [
    'SqPORuleMatch',
    'rule_matches_sqpo',
    'compose_sqpo',
    'synthesize_sqpo',
    'analyze_sqpo',
]

logger = logging.getLogger('Concurrency')

SQPO_ARROWS = {
    'o2': ('K2', 'O2'), 'i2': ('K2', 'I2'), 'o1': ('K1', 'O1'), 'i1': ('K1', 'I1'),
    'o21': ('K21', 'O21_bar'), 'i21': ('K21', 'I21_bar'),
    'j2': ('I2', 'J21'), 'j1': ('O1', 'J21'), 'j1_bar': ('K1', 'K1_bar'), 'o1_bar': ('K1_bar', 'J21'),
    'alpha_bar': ('I1', 'I21'), 'a_bar': ('K1_bar', 'I21'), 'e21': ('I21', 'I21_bar'), 'n': ('K1_bar', 'K1_dbar'),
    'i1_dbar': ('K1_dbar', 'I21_bar'), 'o1_dbar': ('K1_dbar', 'J21_bar'), 'j21': ('J21', 'J21_bar'),
    'j2_bar': ('K2', 'K2_bar'), 'i2_bar': ('K2_bar', 'J21'), 'j2_dbar': ('K2_bar', 'K2_dbar'),
    'i2_dbar': ('K2_dbar', 'J21_bar'), 'o2_bar': ('K2_bar', 'O21'), 'O2_to_O21': ('O2', 'O21'),
    'o2_dbar': ('K2_dbar', 'O21_bar'), 'O21_to_O21_bar': ('O21', 'O21_bar'),
    'p1': ('K21', 'K1_dbar'), 'p2': ('K21', 'K2_dbar'),
}


class SqPORuleMatch(object):
    """A multi-sum element ``(j2, j1)``, a pushout complement ``(j1_bar, o1_bar)`` of ``(o1, j1)`` and an
    augmentation of the pushout of ``(j1_bar, i1)``."""

    def __init__(self, element, poc, fpa):
        self.element = element
        self.poc = poc
        self.fpa = fpa

    def labels(self):
        """Intrinsic labellings of ``J21``, ``K1_bar``, ``I21`` and ``I21_bar``."""
        J = cospan_labels(self.element.left, self.element.right)
        K1_bar = complement_labels(self.poc.a, self.poc.d, None, J)
        I21 = cover_labels(self.fpa.alpha_bar, self.fpa.a_bar, None, K1_bar)
        return {'J21': J, 'K1_bar': K1_bar, 'I21': I21, 'I21_bar': quotient_labels(self.fpa.e, I21)}

    def key(self):
        labels = self.labels()
        return tuple(labels_key(labels[name]) for name in ('J21', 'K1_bar', 'I21_bar'))

    def __repr__(self):
        return f'SqPORuleMatch({self.element!r}, {self.poc!r}, {self.fpa!r})'


def rule_matches_sqpo(r2, r1):
    """All SqPO rule matches of ``r2`` after ``r1``: multi-sum elements of ``(I2, O1)``, then pushout complements of
    ``(o1, j1)``, then augmentations of the pushout of ``(j1_bar, i1)``."""
    check_same_category(r2.I, r1.O)
    found = []
    for element in multisum(r2.I, r1.O):
        for poc in mpoc(r1.output_leg, element.right):
            for fpa in fpa_enumerate(poc.a, r1.input_leg):
                found.append(SqPORuleMatch(element, poc, fpa))
    logger.debug(f'{len(found)} SqPO rule matches of "{r2.name}" after "{r1.name}"')
    return sorted(found, key=SqPORuleMatch.key)


def compose_sqpo(r2, mu, r1):
    """The SqPO composite of ``r2`` after ``r1`` along ``mu``, with its witness diagram."""
    j2, j1 = mu.element.left, mu.element.right
    j1_bar, o1_bar = mu.poc
    n, i1_dbar, e21 = mu.fpa.n, mu.fpa.f, mu.fpa.e
    J21_bar = pushout_rm(Span(n, o1_bar))
    o1_dbar, j21 = J21_bar.left, J21_bar.right
    K2_bar = fpc(r2.input_leg, j2)
    K2_dbar = fpc(K2_bar.g, j21)
    O21 = pushout_rm(Span(K2_bar.n, r2.output_leg))
    O21_bar = pushout_rm(Span(K2_dbar.n, O21.left))
    apex, span = compose_spans(Span(O21_bar.left, K2_dbar.g), Span(o1_dbar, i1_dbar))
    rule = Rule(f'{r2.name}.{r1.name}', span.left, span.right)
    morphisms = {
        'o2': r2.output_leg, 'i2': r2.input_leg, 'o1': r1.output_leg, 'i1': r1.input_leg,
        'o21': rule.output_leg, 'i21': rule.input_leg,
        'j2': j2, 'j1': j1, 'j1_bar': j1_bar, 'o1_bar': o1_bar,
        'alpha_bar': mu.fpa.alpha_bar, 'a_bar': mu.fpa.a_bar, 'e21': e21, 'n': n, 'i1_dbar': i1_dbar,
        'o1_dbar': o1_dbar, 'j21': j21,
        'j2_bar': K2_bar.n, 'i2_bar': K2_bar.g, 'j2_dbar': K2_dbar.n, 'i2_dbar': K2_dbar.g,
        'o2_bar': O21.left, 'O2_to_O21': O21.right, 'o2_dbar': O21_bar.left, 'O21_to_O21_bar': O21_bar.right,
        'p1': apex.left, 'p2': apex.right,
    }
    squares = [
        ('K1_bar complement', Square(r1.output_leg, j1_bar, j1, o1_bar), PUSHOUT),
        ('I21 pushout', Square(r1.input_leg, j1_bar, mu.fpa.alpha_bar, mu.fpa.a_bar), PUSHOUT),
        ('I21_bar augmentation',
         Square(r1.input_leg, compose(n, j1_bar), compose(e21, mu.fpa.alpha_bar), i1_dbar), FPC),
        ('J21_bar pushout', Square(o1_bar, n, j21, o1_dbar), PUSHOUT),
        ('K2_bar complement', Square(r2.input_leg, K2_bar.n, j2, K2_bar.g), FPC),
        ('K2_dbar complement', Square(K2_bar.g, K2_dbar.n, j21, K2_dbar.g), FPC),
        ('O21 pushout', Square(r2.output_leg, K2_bar.n, O21.right, O21.left), PUSHOUT),
        ('O21_bar pushout', Square(O21.left, K2_dbar.n, O21_bar.right, O21_bar.left), PUSHOUT),
        ('K21 pullback', Square(apex.left, apex.right, o1_dbar, K2_dbar.g), PULLBACK),
    ]
    logger.info(f'SqPO composite "{rule.name}": |I21_bar|={len(rule.I)}, |O21_bar|={len(rule.O)}')
    return CompositeRule(rule, SQPO, mu, morphisms, SQPO_ARROWS, squares, mu.labels()['I21_bar'])


def synthesize_sqpo(d1, d2):
    """Read off the rule match, the composite rule and its match from a two-step SqPO derivation.

    Returns:
        tuple: ``(mu, m21, composite)``; deriving the host of ``d1`` along ``composite`` at ``m21`` yields the result
               of ``d2`` up to isomorphism.
    """
    if d1.semantics != SQPO or d2.semantics != SQPO:
        raise PreconditionError(message='SqPO synthesis needs two SqPO derivations')
    r1, r2 = d1.rule, d2.rule
    m2 = compose(host_transport(d1, d2), d2.m)
    element, y = multisum_factorize(r2.I, r1.O, Cospan(m2, d1.comatch))
    K1_bar = pullback(Cospan(y, d1.complement_to_result))
    j1_bar = K1_bar.mediate(compose(element.right, r1.output_leg), d1.k_to_complement)
    poc = POCElement(j1_bar, K1_bar.left)
    I21 = pushout_rm(Span(j1_bar, r1.input_leg))
    factorization = epi_rm_factorize(I21.mediate(compose(d1.complement_to_host, K1_bar.right), d1.m))
    fpa = fpa_from_epi(j1_bar, r1.input_leg, factorization.epi)
    mu = SqPORuleMatch(element, poc, fpa)
    composite = compose_sqpo(r2, mu, r1)
    return mu, SqPOMatch(factorization.rm), composite


def analyze_sqpo(r2, mu, r1, match, X0, composite=None):
    """Split a one-step derivation along the composite into a two-step derivation.

    Both steps are read off the composition diagram. The first complement is the final pullback complement of
    ``i1_dbar`` along the match and ``X1`` its pushout along ``o1_dbar``. The second complement is the final
    pullback complement of ``i2_dbar`` along ``J21_bar -> X1``; pulled back against the first complement over ``X1``
    it must give back the complement of the composite rule, and its pushout along ``o2_dbar`` is ``X2``.

    Returns:
        tuple: ``(m1, m2, d1, d2)``, the matches of ``r1`` into ``X0`` and of ``r2`` into the intermediate graph
               together with the two derivations.

    Raises:
        TheoremCheckError: the two complements do not pull back to the complement of the composite rule.
    """
    composite = composite or compose_sqpo(r2, mu, r1)
    m21 = match.m
    if m21.dom != composite.rule.I or m21.cod != X0:
        raise PreconditionError(message='the match does not embed the composite input motif into the host')
    w = composite.morphisms
    complement = fpc(w['i1_dbar'], m21)
    X1 = pushout_rm(Span(complement.n, w['o1_dbar']))
    into_X1 = compose(X1.right, w['j21'])
    m1 = compose(m21, compose(mu.fpa.e, mu.fpa.alpha_bar))
    n1 = compose(complement.n, compose(mu.fpa.n, mu.poc.a))
    d1 = assemble_derivation(r1, SqPOMatch(m1), SQPO, n1, complement.g, compose(into_X1, mu.element.right),
                             X1.left)

    second = fpc(w['i2_dbar'], X1.right)
    overlap = pullback(Cospan(X1.left, second.g))
    expected = fpc(composite.rule.input_leg, m21).object
    if canonical_form(overlap.object) != canonical_form(expected):
        raise TheoremCheckError(message='the step complements do not pull back to the composite complement',
                                counterexample=[overlap.object, expected])
    X2 = pushout_rm(Span(second.n, w['o2_dbar']))
    m2 = compose(into_X1, mu.element.left)
    n2 = compose(second.n, compose(w['j2_dbar'], w['j2_bar']))
    comatch2 = compose(X2.right, compose(w['O21_to_O21_bar'], w['O2_to_O21']))
    d2 = assemble_derivation(r2, SqPOMatch(m2), SQPO, n2, second.g, comatch2, X2.left)
    logger.debug(f'analysis: |X1|={len(X1.object)}, |X2|={len(X2.object)}')
    return d1.match, d2.match, d1, d2
