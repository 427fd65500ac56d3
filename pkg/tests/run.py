"""Acceptance run over the worked rewriting scenarios.

Every case prints ``PASSED``, ``FAILED`` or ``CRASHED``; the process exits nonzero when any case did not pass.
Run it from the repository root: ``python tests/run.py [-v]``.
"""
from __future__ import print_function

import logging
import sys
import traceback

from nlrewrite import settings
from nlrewrite.concurrent import compatibility_check, rule_matches_sqpo
from nlrewrite.graphcat import MULTIGRAPH, SIMPLEGRAPH, canonical_form, multigraph, simplegraph
from nlrewrite.multi import mpoc, mpoc_oracle, multisum
from nlrewrite.rewrite import DPO, SQPO, derive_all, matches

from fixtures import (NONLINEAR_PAIRS, clone_rule, delete_rule, identity_rule, looped_clone_rule,
                      looped_merge_rule, looped_vertex, star)

FAILING = []


def shape(X):
    return len(X.vertices), len(X.edges)


class Case(object):
    def __init__(self, name, check):
        self.name = name
        self.check = check
        self.label = None
        self.reason = ''

    def run(self):
        try:
            outcome = self.check()
        except AssertionError as e:
            self.label, self.reason = 'FAILED', str(e)
        except Exception:
            self.label, self.reason = 'CRASHED', traceback.format_exc()[-2000:]
        else:
            self.label = 'PASSED' if outcome in (None, True) else 'FAILED'
            if self.label == 'FAILED':
                self.reason = repr(outcome)
        if self.label != 'PASSED':
            FAILING.append(self.name)
        return self.label

    def print_result(self):
        print(self.name, self.label, self.reason)


def clone_on_a_loop():
    results = derive_all(looped_vertex(MULTIGRAPH), clone_rule())
    assert [shape(d.result) for d in results] == [(2, 4)], results


def clone_on_a_simple_loop():
    results = derive_all(looped_vertex(SIMPLEGRAPH), looped_clone_rule())
    assert [shape(d.result) for d in results] == [(2, 4)], results


def clone_under_dpo():
    results = derive_all(looped_vertex(MULTIGRAPH), clone_rule(), DPO)
    assert len(results) == 4, results
    assert all(shape(d.result) == (2, 1) for d in results)


def deletion_on_a_star():
    X = star(MULTIGRAPH)
    centre = [d for d in derive_all(X, delete_rule()) if d.m.vmap['x'] == 'c']
    assert [shape(d.result) for d in centre] == [(3, 0)]
    assert matches(delete_rule(), X, DPO) == []


def identity_rules():
    for X in (multigraph(['a', 'b'], [('e', 'a', 'b'), ('f', 'a', 'b')]), simplegraph(['a'], [('l', 'a', 'a')])):
        for semantics in (SQPO, DPO):
            for d in derive_all(X, identity_rule(X.category), semantics):
                assert d.result == canonical_form(X)


def multisum_counts():
    assert len(multisum(multigraph(['v']), multigraph(['w']))) == 2
    assert len(multisum(simplegraph(['v']), simplegraph(['w']))) == 5


def mpoc_oracle_agreement():
    f = clone_rule().input_leg
    for X in (looped_vertex(MULTIGRAPH), multigraph(['v', 'w'], [('e', 'v', 'w'), ('g', 'w', 'v')])):
        for m in [match.m for match in matches(clone_rule(), X)]:
            assert [e.key() for e in mpoc(f, m)] == [e.key() for e in mpoc_oracle(f, m)], m


def merging_gains_a_loop():
    found = rule_matches_sqpo(looped_merge_rule(), clone_rule())
    assert any(not mu.fpa.is_trivial() for mu in found)


def concurrency():
    hosts = [multigraph(['a']), looped_vertex(MULTIGRAPH)]
    for first, second in NONLINEAR_PAIRS:
        for X0 in hosts:
            report = compatibility_check(second(), first(), X0)
            assert report.ok, report.summary()
        report = compatibility_check(second(), first(), multigraph(['a', 'b']), DPO)
        assert report.ok, report.summary()


CASES = [
    Case('clone-on-a-loop', clone_on_a_loop),
    Case('clone-on-a-simple-loop', clone_on_a_simple_loop),
    Case('clone-under-dpo', clone_under_dpo),
    Case('deletion-on-a-star', deletion_on_a_star),
    Case('identity-rules', identity_rules),
    Case('multisum-counts', multisum_counts),
    Case('mpoc-oracle-agreement', mpoc_oracle_agreement),
    Case('merging-gains-a-loop', merging_gains_a_loop),
    Case('concurrency', concurrency),
]


def run_all(verbose=False):
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING)
    settings.set_debug(verbose)
    for case in CASES:
        case.run()
        case.print_result()
    print(f'{len(CASES) - len(FAILING)} of {len(CASES)} passed')
    return 1 if FAILING else 0


if __name__ == '__main__':
    sys.exit(run_all('-v' in sys.argv[1:]))
