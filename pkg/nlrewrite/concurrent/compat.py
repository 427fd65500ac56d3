"""Exhaustive check of the concurrency correspondence on a concrete host.

Two-step derivations ``X0 => X1 => X2`` and one-step derivations along composites are both enumerated, reduced to
intrinsic keys and matched up through synthesis and analysis. Keys identify derivations up to the isomorphisms of
their intermediate objects that fix the host ``X0``.
"""

import concurrent.futures
import logging

from nlrewrite.concurrent.composite import host_transport
from nlrewrite.concurrent.dpo import analyze_dpo, compose_dpo, rule_matches_dpo, synthesize_dpo
from nlrewrite.concurrent.sqpo import analyze_sqpo, compose_sqpo, rule_matches_sqpo, synthesize_sqpo
from nlrewrite.exceptions import NotRmAdhesiveError, PreconditionError, RewriteError
from nlrewrite.graphcat import MULTIGRAPH, check_same_category, compose
from nlrewrite.labels import complement_labels, cover_labels, image_key, labels_key
from nlrewrite.rewrite import DPO, SQPO, derive, derive_all, matches

__all__ = [
    'CompatibilityReport',
    'two_step_key',
    'one_step_key',
    'rule_matches',
    'compose_along',
    'synthesize',
    'analyze',
    'compatibility_check',
]

logger = logging.getLogger('Concurrency')


def _pick(semantics, sqpo, dpo):
    if semantics == SQPO:
        return sqpo
    if semantics == DPO:
        return dpo
    raise PreconditionError(message=f'unknown semantics "{semantics}"')


def rule_matches(r2, r1, semantics=SQPO):
    return _pick(semantics, rule_matches_sqpo, rule_matches_dpo)(r2, r1)


def compose_along(r2, mu, r1, semantics=SQPO):
    return _pick(semantics, compose_sqpo, compose_dpo)(r2, mu, r1)


def synthesize(d1, d2):
    return _pick(d1.semantics, synthesize_sqpo, synthesize_dpo)(d1, d2)


def analyze(r2, mu, r1, match, X0, semantics=SQPO, composite=None):
    return _pick(semantics, analyze_sqpo, analyze_dpo)(r2, mu, r1, match, X0, composite)


# ======================================= KEYS ===================================

def two_step_key(d1, d2):
    """Key of a two-step derivation: the first match, the labelled first complement, the second match into the
    labelled intermediate graph and the labelled second complement."""
    t = host_transport(d1, d2)
    first = complement_labels(d1.k_to_complement, d1.complement_to_host)
    X1 = cover_labels(d1.comatch, d1.complement_to_result, None, first)
    second = complement_labels(d2.k_to_complement, compose(t, d2.complement_to_host), None, X1)
    return image_key(d1.m), labels_key(first), image_key(compose(t, d2.m), None, X1), labels_key(second)


def one_step_key(composite, match):
    """Key of a derivation along a composite: the rule match, the composite match and, for DPO, its complement."""
    key = (composite.match.key(), image_key(match.m, composite.input_labels))
    if composite.semantics == DPO:
        a, d = match.poc
        key += (labels_key(complement_labels(a, d, composite.apex_labels)),)
    return key


# ======================================= REPORT ===================================

class CompatibilityReport(object):
    """Outcome of :func:`compatibility_check`.

    Attributes:
        two_step (list): keys of the two-step derivations
        one_step (list): keys of the derivations along composites
        pairing (list): ``(i, j)`` when synthesis sends ``two_step[i]`` to ``one_step[j]``
        failures (list): readable descriptions of every violation found
    """

    def __init__(self, semantics, two_step, one_step, pairing, failures):
        self.semantics = semantics
        self.two_step = two_step
        self.one_step = one_step
        self.pairing = pairing
        self.failures = failures

    @property
    def ok(self):
        return not self.failures

    def summary(self):
        lines = [f'semantics: {self.semantics}',
                 f'two-step derivations: {len(self.two_step)}',
                 f'composite derivations: {len(self.one_step)}',
                 f'paired: {len(self.pairing)}']
        lines.extend(f'FAILED: {failure}' for failure in self.failures)
        lines.append('PASS' if self.ok else 'FAIL')
        return '\n'.join(lines)

    def __repr__(self):
        return f'CompatibilityReport({self.semantics}, {len(self.two_step)} <-> {len(self.one_step)}, ok={self.ok})'


def _run(fn, items, jobs):
    if jobs <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def compatibility_check(r2, r1, X0, semantics=SQPO, jobs=1):
    """Check on ``X0`` that synthesis and analysis are mutually inverse bijections between two-step derivations
    along ``r1`` then ``r2`` and derivations along the composites of ``r2`` after ``r1``.

    Every synthesized composite derivation must also reproduce the result of the two-step derivation, and every
    analyzed one the result of the composite derivation, up to isomorphism.

    Raises:
        NotRmAdhesiveError: DPO semantics on simple graphs.
    """
    check_same_category(r1.I, r2.I, X0)
    if semantics == DPO and X0.category != MULTIGRAPH:
        raise NotRmAdhesiveError(message='the DPO correspondence is only checked for multigraphs')
    two_step = []
    for d1 in derive_all(X0, r1, semantics, jobs):
        for d2 in derive_all(d1.result_raw, r2, semantics, jobs):
            two_step.append((two_step_key(d1, d2), d1, d2))
    one_step = []
    for mu in rule_matches(r2, r1, semantics):
        composite = compose_along(r2, mu, r1, semantics)
        for match in matches(composite.rule, X0, semantics):
            one_step.append((one_step_key(composite, match), mu, composite, match))
    logger.info(f'compatibility on {len(X0)} vertices: {len(two_step)} two-step, {len(one_step)} composite '
                f'derivations')

    failures = []
    two_index = {item[0]: i for i, item in enumerate(two_step)}
    one_index = {item[0]: i for i, item in enumerate(one_step)}
    if len(two_index) != len(two_step):
        failures.append('two distinct two-step derivations share a key')
    if len(one_index) != len(one_step):
        failures.append('two distinct composite derivations share a key')
    if len(two_step) != len(one_step):
        failures.append(f'{len(two_step)} two-step against {len(one_step)} composite derivations')

    def forward(item):
        key, d1, d2 = item
        try:
            mu, match, composite = synthesize(d1, d2)
            result = derive(X0, composite.rule, match, semantics).result
            back = analyze(r2, mu, r1, match, X0, semantics, composite)
            return key, one_step_key(composite, match), result == d2.result, two_step_key(back[2], back[3]), None
        except RewriteError as e:
            return key, None, False, None, e

    def backward(item):
        key, mu, composite, match = item
        try:
            _, _, d1, d2 = analyze(r2, mu, r1, match, X0, semantics, composite)
            result = derive(X0, composite.rule, match, semantics).result
            mu_back, match_back, composite_back = synthesize(d1, d2)
            return key, two_step_key(d1, d2), result == d2.result, one_step_key(composite_back, match_back), None
        except RewriteError as e:
            return key, None, False, None, e

    pairing = []
    for key, image, same_result, round_trip, error in _run(forward, two_step, jobs):
        where = f'two-step derivation #{two_index.get(key)}'
        if error is not None:
            failures.append(f'synthesis of {where} raised {error}')
        elif image not in one_index:
            failures.append(f'synthesis of {where} gives a composite derivation outside the enumeration')
        elif not same_result:
            failures.append(f'the composite derivation synthesized from {where} has another result')
        elif round_trip != key:
            failures.append(f'analysis does not undo the synthesis of {where}')
        else:
            pairing.append((two_index[key], one_index[image]))
    images = [j for _, j in pairing]
    if len(set(images)) != len(images):
        failures.append('synthesis sends two two-step derivations to the same composite derivation')

    for key, image, same_result, round_trip, error in _run(backward, one_step, jobs):
        where = f'composite derivation #{one_index.get(key)}'
        if error is not None:
            failures.append(f'analysis of {where} raised {error}')
        elif image not in two_index:
            failures.append(f'analysis of {where} gives a two-step derivation outside the enumeration')
        elif not same_result:
            failures.append(f'the two-step derivation analyzed from {where} has another result')
        elif round_trip != key:
            failures.append(f'synthesis does not undo the analysis of {where}')

    if failures:
        logger.warning(f'compatibility check found {len(failures)} violations')
    return CompatibilityReport(semantics, [item[0] for item in two_step], [item[0] for item in one_step],
                               sorted(pairing), failures)
