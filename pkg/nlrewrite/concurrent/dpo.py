"""DPO rule composition and the synthesis and analysis of two-step DPO derivations.

Synthesis and analysis rely on pushouts along regular monos being van Kampen squares, which holds for multigraphs
but not for simple graphs; both refuse simple-graph input.
"""

import logging

from nlrewrite.concurrent.composite import CompositeRule, compose_spans, host_transport
from nlrewrite.exceptions import NotRmAdhesiveError, PreconditionError
from nlrewrite.graphcat import MULTIGRAPH, Cospan, Span, check_same_category, compose
from nlrewrite.labels import complement_labels, cospan_labels, cover_labels, labels_key, pair_labels
from nlrewrite.limits import PULLBACK, PUSHOUT, Square, pullback, pushout_mediator, pushout_rm
from nlrewrite.multi import POCElement, mpoc, multisum, multisum_factorize
from nlrewrite.rewrite import DPO, DPOMatch, Rule, assemble_derivation, derive_dpo

__all__ = [
    'DPORuleMatch',
    'rule_matches_dpo',
    'compose_dpo',
    'synthesize_dpo',
    'analyze_dpo',
]

logger = logging.getLogger('Concurrency')

DPO_ARROWS = {
    'o2': ('K2', 'O2'), 'i2': ('K2', 'I2'), 'o1': ('K1', 'O1'), 'i1': ('K1', 'I1'),
    'o21': ('K21', 'O21'), 'i21': ('K21', 'I21'),
    'j2': ('I2', 'J21'), 'j1': ('O1', 'J21'), 'j2_bar': ('K2', 'K2_bar'), 'i2_bar': ('K2_bar', 'J21'),
    'j1_bar': ('K1', 'K1_bar'), 'o1_bar': ('K1_bar', 'J21'), 'o2_bar': ('K2_bar', 'O21'), 'O2_to_O21': ('O2', 'O21'),
    'a1_bar': ('K1_bar', 'I21'), 'alpha1_bar': ('I1', 'I21'), 'p1': ('K21', 'K1_bar'), 'p2': ('K21', 'K2_bar'),
}


def _require_multigraph(category):
    if category != MULTIGRAPH:
        raise NotRmAdhesiveError(message=f'DPO synthesis and analysis are not available for {category} objects: '
                                         f'pushouts along regular monos are not van Kampen there')


class DPORuleMatch(object):
    """A multi-sum element ``(j2, j1)`` with pushout complements of ``(i2, j2)`` and of ``(o1, j1)``."""

    def __init__(self, element, poc2, poc1):
        self.element = element
        self.poc2 = poc2
        self.poc1 = poc1

    def labels(self):
        J = cospan_labels(self.element.left, self.element.right)
        return {'J21': J,
                'K2_bar': complement_labels(self.poc2.a, self.poc2.d, None, J),
                'K1_bar': complement_labels(self.poc1.a, self.poc1.d, None, J)}

    def key(self):
        labels = self.labels()
        return tuple(labels_key(labels[name]) for name in ('J21', 'K2_bar', 'K1_bar'))

    def __repr__(self):
        return f'DPORuleMatch({self.element!r}, {self.poc2!r}, {self.poc1!r})'


def rule_matches_dpo(r2, r1):
    check_same_category(r2.I, r1.O)
    found = []
    for element in multisum(r2.I, r1.O):
        for poc2 in mpoc(r2.input_leg, element.left):
            for poc1 in mpoc(r1.output_leg, element.right):
                found.append(DPORuleMatch(element, poc2, poc1))
    logger.debug(f'{len(found)} DPO rule matches of "{r2.name}" after "{r1.name}"')
    return sorted(found, key=DPORuleMatch.key)


def compose_dpo(r2, mu, r1):
    """The DPO composite of ``r2`` after ``r1`` along ``mu``: push out both complements along the outer legs and
    compose the resulting spans over ``J21``."""
    j2, j1 = mu.element.left, mu.element.right
    j2_bar, i2_bar = mu.poc2
    j1_bar, o1_bar = mu.poc1
    O21 = pushout_rm(Span(j2_bar, r2.output_leg))
    I21 = pushout_rm(Span(j1_bar, r1.input_leg))
    apex, span = compose_spans(Span(O21.left, i2_bar), Span(o1_bar, I21.left))
    rule = Rule(f'{r2.name}.{r1.name}', span.left, span.right)
    morphisms = {
        'o2': r2.output_leg, 'i2': r2.input_leg, 'o1': r1.output_leg, 'i1': r1.input_leg,
        'o21': rule.output_leg, 'i21': rule.input_leg,
        'j2': j2, 'j1': j1, 'j2_bar': j2_bar, 'i2_bar': i2_bar, 'j1_bar': j1_bar, 'o1_bar': o1_bar,
        'o2_bar': O21.left, 'O2_to_O21': O21.right, 'a1_bar': I21.left, 'alpha1_bar': I21.right,
        'p1': apex.left, 'p2': apex.right,
    }
    squares = [
        ('K2_bar complement', Square(r2.input_leg, j2_bar, j2, i2_bar), PUSHOUT),
        ('K1_bar complement', Square(r1.output_leg, j1_bar, j1, o1_bar), PUSHOUT),
        ('O21 pushout', Square(r2.output_leg, j2_bar, O21.right, O21.left), PUSHOUT),
        ('I21 pushout', Square(r1.input_leg, j1_bar, I21.right, I21.left), PUSHOUT),
        ('K21 pullback', Square(apex.left, apex.right, o1_bar, i2_bar), PULLBACK),
    ]
    labels = mu.labels()
    input_labels = cover_labels(I21.right, I21.left, None, labels['K1_bar'])
    apex_labels = pair_labels(apex.left, apex.right, labels['K1_bar'], labels['K2_bar'])
    logger.info(f'DPO composite "{rule.name}": |I21|={len(rule.I)}, |O21|={len(rule.O)}')
    return CompositeRule(rule, DPO, mu, morphisms, DPO_ARROWS, squares, input_labels, apex_labels)


def synthesize_dpo(d1, d2):
    """Read off the rule match, the composite rule and its DPO match from a two-step DPO derivation.

    Raises:
        NotRmAdhesiveError: the derivations rewrite simple graphs.
    """
    if d1.semantics != DPO or d2.semantics != DPO:
        raise PreconditionError(message='DPO synthesis needs two DPO derivations')
    _require_multigraph(d1.host.category)
    r1, r2 = d1.rule, d2.rule
    t = host_transport(d1, d2)
    m2 = compose(t, d2.m)
    to_X1 = compose(t, d2.complement_to_host)
    element, y = multisum_factorize(r2.I, r1.O, Cospan(m2, d1.comatch))
    K1_bar = pullback(Cospan(y, d1.complement_to_result))
    j1_bar = K1_bar.mediate(compose(element.right, r1.output_leg), d1.k_to_complement)
    K2_bar = pullback(Cospan(y, to_X1))
    j2_bar = K2_bar.mediate(compose(element.left, r2.input_leg), d2.k_to_complement)
    mu = DPORuleMatch(element, POCElement(j2_bar, K2_bar.left), POCElement(j1_bar, K1_bar.left))
    composite = compose_dpo(r2, mu, r1)
    w = composite.morphisms
    m21 = pushout_mediator(w['a1_bar'], w['alpha1_bar'], compose(d1.complement_to_host, K1_bar.right), d1.m)
    complement = pullback(Cospan(d1.complement_to_result, to_X1))
    a21 = complement.mediate(compose(K1_bar.right, w['p1']), compose(K2_bar.right, w['p2']))
    poc = POCElement(a21, compose(d1.complement_to_host, complement.left))
    return mu, DPOMatch(m21, poc), composite


def analyze_dpo(r2, mu, r1, match, X0, composite=None):
    """Split a one-step DPO derivation along the composite into a two-step DPO derivation.

    Returns:
        tuple: ``(m1, m2, d1, d2)`` as for SqPO; the matches carry their pushout complements.

    Raises:
        NotRmAdhesiveError: ``X0`` is a simple graph.
    """
    _require_multigraph(X0.category)
    composite = composite or compose_dpo(r2, mu, r1)
    a21, d = match.poc
    m21 = match.m
    if m21.dom != composite.rule.I or m21.cod != X0 or a21.dom != composite.rule.K:
        raise PreconditionError(message='the match does not fit the composite rule and the host')
    w = composite.morphisms
    C1 = pushout_rm(Span(a21, w['p1']))
    C2 = pushout_rm(Span(a21, w['p2']))
    X1 = pushout_rm(Span(C1.right, mu.poc1.d))
    g1 = C1.mediate(d, compose(m21, w['a1_bar']))
    g2 = C2.mediate(compose(X1.left, C1.left), compose(X1.right, mu.poc2.d))
    m1 = compose(m21, w['alpha1_bar'])
    n1 = compose(C1.right, mu.poc1.a)
    d1 = assemble_derivation(r1, DPOMatch(m1, POCElement(n1, g1)), DPO, n1, g1,
                             compose(X1.right, mu.element.right), X1.left)
    m2 = compose(X1.right, mu.element.left)
    d2 = derive_dpo(X1.object, r2, DPOMatch(m2, POCElement(compose(C2.right, mu.poc2.a), g2)))
    return d1.match, d2.match, d1, d2
