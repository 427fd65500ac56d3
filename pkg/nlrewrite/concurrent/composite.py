"""Composite rules with their witness diagrams, and span composition."""

import logging

from nlrewrite.classifier import verify_fpc
from nlrewrite.exceptions import MorphismError, PreconditionError, TheoremCheckError
from nlrewrite.graphcat import Cospan, Span, compose, identity, inverse
from nlrewrite.limits import FPC, PULLBACK, PUSHOUT, is_pullback, is_pushout, pullback

__all__ = [
    'CompositeRule',
    'span_compose',
    'compose_spans',
    'host_transport',
]

logger = logging.getLogger('Concurrency')


class CompositeRule(object):
    """A composite rule together with the diagram it was read off.

    Attributes:
        rule (Rule): the composite ``O21 <- K21 -> I21``
        semantics (str): ``sqpo`` or ``dpo``
        match: the rule match the composite was built along
        morphisms (dict): every morphism of the diagram by name, e.g. ``j1_bar`` or ``o1_dbar``
        arrows (dict): the names of the domain and codomain of every morphism
        squares (list): ``(name, Square, tag)`` with tag ``pushout``, ``pullback`` or ``fpc``
        input_labels (tuple): intrinsic labelling of the input motif of ``rule``
        apex_labels (tuple): intrinsic labelling of ``K21``, for DPO composites
    """

    def __init__(self, rule, semantics, match, morphisms, arrows, squares, input_labels, apex_labels=None):
        self.rule = rule
        self.semantics = semantics
        self.match = match
        self.morphisms = morphisms
        self.arrows = arrows
        self.squares = squares
        self.input_labels = input_labels
        self.apex_labels = apex_labels

    @property
    def objects(self):
        """Every object of the diagram by name."""
        found = {}
        for name, (dom, cod) in self.arrows.items():
            f = self.morphisms[name]
            found.setdefault(dom, f.dom)
            found.setdefault(cod, f.cod)
        return found

    def check_witness(self, oracle=False):
        """Check every square of the diagram against its tag; ``oracle`` also runs the FPC oracle.

        Raises:
            TheoremCheckError: a square does not have its claimed property.
        """
        for name, square, tag in self.squares:
            if not square.commutes():
                holds = False
            elif tag == PUSHOUT:
                holds = is_pushout(square.span, square.cospan)
            elif tag == PULLBACK:
                holds = is_pullback(square.cospan, square.span)
            elif tag == FPC:
                holds = is_pullback(square.cospan, square.span)
                if holds and oracle:
                    holds = verify_fpc(square.top, square.right, square.left, square.bottom)
            else:
                raise PreconditionError(message=f'unknown square tag "{tag}"')
            if not holds:
                raise TheoremCheckError(message=f'square {name} of the composition is not a {tag}',
                                        counterexample=square)
        logger.debug(f'{len(self.squares)} witness squares confirmed')
        return True

    def __repr__(self):
        return f'CompositeRule({self.semantics}, {self.rule!r})'


def compose_spans(s2, s1):
    """Compose ``O <- K2 -> J`` after ``J <- K1 -> I``; spans are ``(left=output, right=input)``.

    Returns:
        tuple: the pullback of the two inner legs and the composite span.
    """
    if s1.left.cod != s2.right.cod:
        raise MorphismError(message='the spans do not meet in a common middle object')
    apex = pullback(Cospan(s1.left, s2.right))
    return apex, Span(compose(s2.left, apex.right), compose(s1.right, apex.left))


def span_compose(s2, s1):
    """The span composite: apex the pullback over the middle object, outer legs composed."""
    return compose_spans(s2, s1)[1]


def host_transport(d1, d2):
    """The isomorphism from the host of ``d2`` onto the computed result of ``d1``.

    Raises:
        PreconditionError: ``d2`` does not rewrite the result of ``d1``.
    """
    if d2.host == d1.result_raw:
        return identity(d2.host)
    if d2.host == d1.result:
        return inverse(d1.canonical_iso)
    raise PreconditionError(message='the second derivation does not start where the first one ends')
