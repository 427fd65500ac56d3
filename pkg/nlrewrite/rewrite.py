"""Rules, admissible matches and direct derivations under sesqui-pushout and double-pushout semantics.

A rule ``O <-o- K -i-> I`` reads its input motif ``I`` and writes its output motif ``O``; both legs may be
arbitrary morphisms. A SqPO derivation at a regular mono ``m: I -> X`` takes the final pullback complement of
``(i, m)`` and pushes it out along ``o``. A DPO derivation instead carries a chosen pushout complement of ``(i, m)``
as part of its match.

Examples:
    >>> from nlrewrite.graphcat import multigraph
    >>> r = Rule.identity(multigraph(['v']))
    >>> X = multigraph(['a', 'b'])
    >>> len(matches_sqpo(r, X))
    2
"""

import concurrent.futures
import logging

from nlrewrite.classifier import fpc
from nlrewrite.exceptions import InvalidMatchError, MorphismError, PreconditionError
from nlrewrite.graphcat import (Cospan, Span, canonical_iso, check_same_category, compose, enumerate_morphisms,
                                identity, is_regular_mono)
from nlrewrite.limits import Square, is_pushout, pushout_rm
from nlrewrite.multi import POCElement, mpoc

__all__ = [
    'SQPO',
    'DPO',
    'SEMANTICS',
    'Rule',
    'SqPOMatch',
    'DPOMatch',
    'DerivationDiagram',
    'assemble_derivation',
    'matches_sqpo',
    'derive_sqpo',
    'matches_dpo',
    'derive_dpo',
    'matches',
    'derive',
    'derive_all',
    'rules_isomorphic',
]

SQPO = 'sqpo'
DPO = 'dpo'
SEMANTICS = (SQPO, DPO)

logger = logging.getLogger('Rewriting')


class Rule(object):
    """A rule ``O <-output_leg- K -input_leg-> I``.

    Args:
        name (str): used in listings and documents
        output_leg (Morphism): ``K -> O``
        input_leg (Morphism): ``K -> I``
    """

    def __init__(self, name, output_leg, input_leg):
        check_same_category(output_leg.cod, input_leg.cod)
        if output_leg.dom != input_leg.dom:
            raise MorphismError(message=f'the legs of rule "{name}" do not share their domain')
        self.name = name
        self.output_leg = output_leg
        self.input_leg = input_leg

    @classmethod
    def identity(cls, X, name='id'):
        return cls(name, identity(X), identity(X))

    @property
    def K(self):
        return self.input_leg.dom

    @property
    def I(self):
        return self.input_leg.cod

    @property
    def O(self):
        return self.output_leg.cod

    @property
    def category(self):
        return self.K.category

    @property
    def span(self):
        return Span(self.output_leg, self.input_leg)

    def is_linear(self):
        return is_regular_mono(self.input_leg) and is_regular_mono(self.output_leg)

    def mirror(self):
        """The rule read backwards, ``I <- K -> O``."""
        return Rule(f'{self.name}~', self.input_leg, self.output_leg)

    def __repr__(self):
        return f'Rule({self.name!r}, |O|={len(self.O)}, |K|={len(self.K)}, |I|={len(self.I)})'


class SqPOMatch(object):
    def __init__(self, m):
        self.m = m

    def __repr__(self):
        return f'SqPOMatch({self.m!r})'


class DPOMatch(object):
    """A regular mono ``m: I -> X`` together with a pushout complement ``(a, d)`` of ``(input_leg, m)``."""

    def __init__(self, m, poc):
        self.m = m
        self.poc = poc

    def __repr__(self):
        return f'DPOMatch({self.m!r}, {self.poc!r})'


class DerivationDiagram(object):
    """The two squares of a direct derivation::

        O <--o-- K --i--> I
        |        |        |
     comatch  k_to_c      m
        v        v        v
        X' <---- C -----> X

    The left square (``C``, the complement) is a final pullback complement for SqPO and the chosen pushout for DPO;
    the right square is a pushout. ``result_raw`` is the pushout object as computed, ``result`` its canonical form
    and ``canonical_iso: result_raw -> result`` relates them.
    """

    def __init__(self, rule, match, semantics, host, k_to_complement, complement_to_host, comatch,
                 complement_to_result, canonical_iso, tags):
        self.rule = rule
        self.match = match
        self.semantics = semantics
        self.host = host
        self.k_to_complement = k_to_complement
        self.complement_to_host = complement_to_host
        self.comatch = comatch
        self.complement_to_result = complement_to_result
        self.canonical_iso = canonical_iso
        self.tags = tags

    @property
    def complement(self):
        return self.k_to_complement.cod

    @property
    def result_raw(self):
        return self.comatch.cod

    @property
    def result(self):
        return self.canonical_iso.cod

    @property
    def m(self):
        return self.match.m

    @property
    def left_square(self):
        return Square(self.rule.input_leg, self.k_to_complement, self.match.m, self.complement_to_host)

    @property
    def right_square(self):
        return Square(self.rule.output_leg, self.k_to_complement, self.comatch, self.complement_to_result)

    def reverse_match(self):
        """The DPO match of the mirrored rule along the comatch. Only meaningful when the left square is a
        pushout."""
        return DPOMatch(self.comatch, POCElement(self.k_to_complement, self.complement_to_result))

    def __repr__(self):
        return (f'DerivationDiagram({self.semantics}, {self.rule.name!r}, |X|={len(self.host)}, '
                f'|C|={len(self.complement)}, |X\'|={len(self.result_raw)})')


def assemble_derivation(rule, match, semantics, k_to_complement, complement_to_host, comatch, complement_to_result):
    """Wrap the four morphisms of a derivation into a :class:`DerivationDiagram` with its canonical result."""
    tags = ('fpc' if semantics == SQPO else 'poc', 'pushout')
    return DerivationDiagram(rule, match, semantics, complement_to_host.cod, k_to_complement, complement_to_host,
                             comatch, complement_to_result, canonical_iso(comatch.cod), tags)


def _checked_match(X, rule, m):
    check_same_category(X, rule.I)
    if m.dom != rule.I or m.cod != X:
        raise InvalidMatchError(message=f'the match does not map the input motif of "{rule.name}" into the host')
    if not is_regular_mono(m):
        raise InvalidMatchError(message='matches must be regular monomorphisms')
    return m


# ======================================= SQPO ===================================

def matches_sqpo(rule, X):
    """Every regular mono from the input motif into ``X``, in canonical order."""
    check_same_category(rule.I, X)
    return [SqPOMatch(m) for m in enumerate_morphisms(rule.I, X, 'regular-mono')]


def derive_sqpo(X, rule, match):
    """The SqPO direct derivation of ``X`` along ``rule`` at ``match``.

    Raises:
        InvalidMatchError: ``match`` is not a regular mono from the input motif into ``X``.
    """
    m = _checked_match(X, rule, match.m)
    complement = fpc(rule.input_leg, m)
    result = pushout_rm(Span(complement.n, rule.output_leg))
    diagram = assemble_derivation(rule, match, SQPO, complement.n, complement.g, result.right, result.left)
    logger.info(f'SqPO derivation along "{rule.name}": {len(X)} -> {len(diagram.result)} vertices')
    return diagram


# ======================================= DPO ===================================

def matches_dpo(rule, X):
    """Every pair of a regular mono ``m`` and a pushout complement of ``(input_leg, m)``.

    A mono may contribute several matches or none at all.
    """
    check_same_category(rule.I, X)
    found = []
    for m in enumerate_morphisms(rule.I, X, 'regular-mono'):
        for poc in mpoc(rule.input_leg, m):
            found.append(DPOMatch(m, poc))
    return found


def derive_dpo(X, rule, match):
    """The DPO direct derivation of ``X`` along ``rule`` at ``match``, which carries the left pushout square.

    Raises:
        InvalidMatchError: the pushout complement of ``match`` does not fit the rule and the mono.
    """
    m = _checked_match(X, rule, match.m)
    a, d = match.poc
    if a.dom != rule.K or d.cod != X or not is_regular_mono(a):
        raise InvalidMatchError(message='the pushout complement does not fit the rule and the host')
    if not is_pushout(Span(a, rule.input_leg), Cospan(d, m)):
        raise InvalidMatchError(message='the chosen complement does not push out to the host')
    result = pushout_rm(Span(a, rule.output_leg))
    diagram = assemble_derivation(rule, match, DPO, a, d, result.right, result.left)
    logger.info(f'DPO derivation along "{rule.name}": {len(X)} -> {len(diagram.result)} vertices')
    return diagram


# ======================================= DISPATCH ===================================

def matches(rule, X, semantics=SQPO):
    if semantics == SQPO:
        return matches_sqpo(rule, X)
    if semantics == DPO:
        return matches_dpo(rule, X)
    raise PreconditionError(message=f'unknown semantics "{semantics}"')


def derive(X, rule, match, semantics=SQPO):
    if semantics == SQPO:
        return derive_sqpo(X, rule, match)
    if semantics == DPO:
        return derive_dpo(X, rule, match)
    raise PreconditionError(message=f'unknown semantics "{semantics}"')


def derive_all(X, rule, semantics=SQPO, jobs=1):
    """One derivation per admissible match, in match order; ``jobs > 1`` derives on a thread pool."""
    found = matches(rule, X, semantics)
    if jobs <= 1 or len(found) < 2:
        return [derive(X, rule, match, semantics) for match in found]
    with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda match: derive(X, rule, match, semantics), found))


def rules_isomorphic(r, s):
    """Whether isomorphisms of the three motifs carry ``r`` onto ``s`` commuting with both legs."""
    if r.category != s.category:
        return False
    for k in enumerate_morphisms(r.K, s.K, 'iso'):
        inputs = [i for i in enumerate_morphisms(r.I, s.I, 'iso')
                  if compose(i, r.input_leg) == compose(s.input_leg, k)]
        if not inputs:
            continue
        for o in enumerate_morphisms(r.O, s.O, 'iso'):
            if compose(o, r.output_leg) == compose(s.output_leg, k):
                return True
    return False
