"""The ``nlrewrite`` command line.

Every verb reads flat-file documents, runs one operation of the engine and writes documents (``--format text``) or
Graphviz sources (``--format dot``). Uncaught engine errors become exit codes: 2 for malformed documents, 3 for a
category mismatch, 4 for an index outside the available choices, 5 for a failed theorem or oracle check and 1 for
anything else.
"""

import argparse
import concurrent.futures
import logging
import os
import sys

from nlrewrite import settings
from nlrewrite.classifier import fpc, verify_fpc
from nlrewrite.cli.documents import (Diagram, load_diagram, load_graph, load_rule, serialize_diagram,
                                     serialize_graph, serialize_rule, write_file_contents)
from nlrewrite.cli.dot import render, to_dot
from nlrewrite.concurrent import analyze, compatibility_check, compose_along, rule_matches, synthesize
from nlrewrite.corpus import make_rng, random_graph, random_morphism
from nlrewrite.exceptions import RewriteError, TheoremCheckError, make_error
from nlrewrite.graphcat import CATEGORIES, MULTIGRAPH, Cospan, Span
from nlrewrite.limits import Square, pullback, pushout_rm, verify_pullback, verify_pushout
from nlrewrite.multi import fpa_enumerate, mpoc, mpoc_oracle, multisum, multisum_via_pushouts
from nlrewrite.rewrite import DPO, SEMANTICS, SQPO, Rule, derive, derive_all, matches

__all__ = ['main', 'build_parser']

logger = logging.getLogger('CLI')

VERIFY_PUSHOUT = 'verify-pushout'
VERIFY_PULLBACK = 'verify-pullback'
VERIFY_FPC = 'verify-fpc'

_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


class Report(object):
    """What a verb produces: text chunks, diagrams for DOT output and an optional error raised after writing."""

    def __init__(self):
        self.texts = []
        self.diagrams = []
        self.error = None

    def add(self, text, diagram=None):
        self.texts.append(text)
        if diagram is not None:
            self.diagrams.append(diagram)
        return self


def _select(items, index, what):
    if not 0 <= index < len(items):
        raise make_error('SelectionError', f'{what} index {index} is out of range, {len(items)} available')
    return items[index]


def _match_diagram(name, match, semantics):
    diagram = Diagram(name).add_morphism('match', 'I', 'X', match.m)
    if semantics == DPO:
        a, d = match.poc
        diagram.add_morphism('a', 'K', 'C', a).add_morphism('d', 'C', 'X', d)
    return diagram


def _renamed(rule, name):
    return Rule(name, rule.output_leg, rule.input_leg)


# ======================================= VERBS ===================================

def cmd_matches(args):
    rule = load_rule(args.rule, args.category)
    host_name, X = load_graph(args.host, args.category)
    found = matches(rule, X, args.semantics)
    report = Report().add(f'# {len(found)} {args.semantics} matches of "{rule.name}" in "{host_name}"\n')
    for i, match in enumerate(found):
        diagram = _match_diagram(f'match.{i}', match, args.semantics)
        report.add(serialize_diagram(diagram), diagram)
    return report


def cmd_apply(args):
    rule = load_rule(args.rule, args.category)
    _, X = load_graph(args.host, args.category)
    match = _select(matches(rule, X, args.semantics), args.index, 'match')
    d = derive(X, rule, match, args.semantics)
    diagram = Diagram.from_derivation(d)
    return Report().add(serialize_graph(d.result, 'result')).add(serialize_diagram(diagram), diagram)


def _composites(args, r1, r2):
    found = rule_matches(r2, r1, args.semantics)
    indices = range(len(found)) if args.index is None else [args.index]
    for i in indices:
        yield i, compose_along(r2, _select(found, i, 'rule match'), r1, args.semantics)


def cmd_compose(args):
    r1 = load_rule(args.rule1, args.category)
    r2 = load_rule(args.rule2, args.category)
    report = Report()
    count = 0
    for i, composite in _composites(args, r1, r2):
        composite.check_witness(oracle=settings.DEBUG)
        witness = Diagram.from_composite(composite, f'witness.{i}')
        report.add(f'# rule match {i}\n')
        report.add(serialize_rule(_renamed(composite.rule, f'{composite.rule.name}.{i}')))
        report.add(serialize_diagram(witness), witness)
        count += 1
    logger.info(f'{count} {args.semantics} composites of "{r2.name}" after "{r1.name}"')
    return report


def cmd_synthesize(args):
    r1 = load_rule(args.rule1, args.category)
    r2 = load_rule(args.rule2, args.category)
    _, X = load_graph(args.host, args.category)
    d1 = _select(derive_all(X, r1, args.semantics, args.jobs), args.index1, 'first match')
    d2 = _select(derive_all(d1.result_raw, r2, args.semantics, args.jobs), args.index2, 'second match')
    mu, match, composite = synthesize(d1, d2)
    one_step = derive(X, composite.rule, match, args.semantics)
    if one_step.result != d2.result:
        raise TheoremCheckError(message='the synthesized derivation does not reproduce the two-step result',
                                counterexample=(d1, d2, composite))
    diagram = _match_diagram('composite.match', match, args.semantics)
    return (Report()
            .add(serialize_rule(composite.rule))
            .add(serialize_diagram(diagram), diagram)
            .add(serialize_graph(one_step.result, 'result'), Diagram.from_derivation(one_step)))


def cmd_analyze(args):
    r1 = load_rule(args.rule1, args.category)
    r2 = load_rule(args.rule2, args.category)
    _, X = load_graph(args.host, args.category)
    mu = _select(rule_matches(r2, r1, args.semantics), args.index, 'rule match')
    composite = compose_along(r2, mu, r1, args.semantics)
    match = _select(matches(composite.rule, X, args.semantics), args.match_index, 'composite match')
    _, _, d1, d2 = analyze(r2, mu, r1, match, X, args.semantics, composite)
    if derive(X, composite.rule, match, args.semantics).result != d2.result:
        raise TheoremCheckError(message='the analyzed two-step derivation does not reproduce the one-step result',
                                counterexample=(composite, match))
    first = Diagram.from_derivation(d1, 'first')
    second = Diagram.from_derivation(d2, 'second')
    return (Report()
            .add(serialize_graph(d1.result, 'intermediate'))
            .add(serialize_graph(d2.result, 'result'))
            .add(serialize_diagram(first), first)
            .add(serialize_diagram(second), second))


def cmd_check_compat(args):
    r1 = load_rule(args.rule1, args.category)
    r2 = load_rule(args.rule2, args.category)
    _, X = load_graph(args.host, args.category)
    result = compatibility_check(r2, r1, X, args.semantics, args.jobs)
    report = Report().add(result.summary() + '\n')
    if not result.ok:
        report.error = TheoremCheckError(message=f'{len(result.failures)} violations of the concurrency '
                                                 f'correspondence', counterexample=result.failures[0])
    return report


def cmd_multisum(args):
    _, A = load_graph(args.graph1, args.category)
    _, B = load_graph(args.graph2, args.category)
    elements = (multisum_via_pushouts if args.via_pushouts else multisum)(A, B)
    report = Report().add(f'# {len(elements)} multi-sum elements\n')
    for i, element in enumerate(elements):
        diagram = (Diagram(f'sum.{i}')
                   .add_morphism('left', 'A', 'S', element.left)
                   .add_morphism('right', 'B', 'S', element.right))
        report.add(serialize_diagram(diagram), diagram)
    return report


def cmd_mpoc(args):
    source = load_diagram(args.diagram, args.category)
    f, b = source.morphism('f'), source.morphism('b')
    A, B = source.arrows['f']
    D = source.arrows['b'][1]
    elements = (mpoc_oracle if args.oracle else mpoc)(f, b)
    report = Report().add(f'# {len(elements)} pushout complements\n')
    for i, element in enumerate(elements):
        diagram = (Diagram(f'complement.{i}')
                   .add_morphism('f', A, B, f)
                   .add_morphism('b', B, D, b)
                   .add_morphism('a', A, 'C', element.a)
                   .add_morphism('d', 'C', D, element.d))
        report.add(serialize_diagram(diagram), diagram)
    return report


def cmd_fpa(args):
    source = load_diagram(args.diagram, args.category)
    alpha, a = source.morphism('alpha'), source.morphism('a')
    K, K_bar = source.arrows['alpha']
    I = source.arrows['a'][1]
    elements = fpa_enumerate(alpha, a)
    report = Report().add(f'# {len(elements)} augmentations\n')
    for i, element in enumerate(elements):
        diagram = (Diagram(f'augmentation.{i}')
                   .add_morphism('alpha', K, K_bar, alpha)
                   .add_morphism('a', K, I, a)
                   .add_morphism('alpha_bar', I, 'D', element.alpha_bar)
                   .add_morphism('a_bar', K_bar, 'D', element.a_bar)
                   .add_morphism('e', 'D', 'E', element.e)
                   .add_morphism('n', K_bar, 'F', element.n)
                   .add_morphism('f', 'F', 'E', element.f))
        report.add(f'# augmentation {i}{" (trivial)" if element.is_trivial() else ""}\n')
        report.add(serialize_diagram(diagram), diagram)
    return report


def cmd_fpc(args):
    source = load_diagram(args.diagram, args.category)
    f, m = source.morphism('f'), source.morphism('m')
    A, B = source.arrows['f']
    D = source.arrows['m'][1]
    result = fpc(f, m)
    diagram = (Diagram('fpc')
               .add_morphism('f', A, B, f)
               .add_morphism('m', B, D, m)
               .add_morphism('n', A, 'F', result.n)
               .add_morphism('g', 'F', D, result.g))
    return Report().add(serialize_diagram(diagram), diagram)


def _verify(kind, square):
    if kind == VERIFY_PUSHOUT:
        return verify_pushout(square.span, square.cospan)
    if kind == VERIFY_PULLBACK:
        return verify_pullback(square.cospan, square.span)
    return verify_fpc(square.top, square.right, square.left, square.bottom)


def _random_square(kind, category, rng, size):
    """A constructed square of the given kind on random graphs, or ``None`` when the drawn graphs admit none."""
    A = random_graph(category, rng, size, size, 'a')
    B = random_graph(category, rng, size, size, 'b')
    C = random_graph(category, rng, size, size, 'c')
    if kind == VERIFY_PUSHOUT:
        top, left = random_morphism(A, B, rng, 'regular-mono'), random_morphism(A, C, rng)
        if top is None or left is None:
            return None
        result = pushout_rm(Span(top, left))
        return Square(top, left, result.left, result.right)
    if kind == VERIFY_PULLBACK:
        right, bottom = random_morphism(B, A, rng), random_morphism(C, A, rng)
        if right is None or bottom is None:
            return None
        result = pullback(Cospan(right, bottom))
        return Square(result.left, result.right, right, bottom)
    top, right = random_morphism(A, B, rng), random_morphism(B, C, rng, 'regular-mono')
    if top is None or right is None:
        return None
    result = fpc(top, right)
    return Square(top, result.n, right, result.g)


def cmd_oracle(args):
    if args.diagram is not None:
        source = load_diagram(args.diagram, args.category)
        square = Square(*(source.morphism(name) for name in ('top', 'left', 'right', 'bottom')))
        holds = _verify(args.kind, square)
        report = Report().add(f'{args.kind}: {"PASS" if holds else "FAIL"}\n')
        if not holds:
            report.error = TheoremCheckError(message=f'{args.kind} rejects the square of "{source.name}"',
                                             counterexample=square)
        return report

    rng = make_rng(args.seed)
    category = args.category or MULTIGRAPH
    squares = [_random_square(args.kind, category, rng, args.max_size) for _ in range(args.count)]
    todo = [(i, square) for i, square in enumerate(squares) if square is not None]
    if args.jobs > 1 and len(todo) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=args.jobs) as pool:
            verdicts = list(pool.map(lambda item: _verify(args.kind, item[1]), todo))
    else:
        verdicts = [_verify(args.kind, square) for _, square in todo]
    report = Report()
    failed = []
    for (i, square), holds in zip(todo, verdicts):
        report.add(f'instance {i}: {"PASS" if holds else "FAIL"}\n')
        if not holds:
            failed.append(square)
    report.add(f'{len(todo)} checked, {len(squares) - len(todo)} skipped, {len(failed)} failed\n')
    report.add('PASS\n' if not failed else 'FAIL\n')
    if failed:
        report.error = TheoremCheckError(message=f'{args.kind} rejected {len(failed)} constructed squares',
                                         counterexample=failed[0])
    return report


# ======================================= PARSER ===================================

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--category', choices=CATEGORIES,
                        help='category of documents without a category line; others are rejected')
    common.add_argument('--format', choices=('text', 'dot'), default='text')
    common.add_argument('--render', metavar='PATH', help='render the DOT output with Graphviz into PATH')
    common.add_argument('-o', '--output', metavar='PATH', help='write to PATH instead of stdout')
    common.add_argument('--jobs', type=int, default=1, help='worker threads for batch work')
    common.add_argument('--debug', action='store_true', help='validate constructions with the oracles')
    common.add_argument('-v', '--verbose', action='count', default=0)
    semantics = argparse.ArgumentParser(add_help=False)
    semantics.add_argument('--semantics', choices=SEMANTICS, default=SQPO)
    pair = argparse.ArgumentParser(add_help=False)
    pair.add_argument('rule1', help='the rule applied first')
    pair.add_argument('rule2', help='the rule applied second')

    parser = argparse.ArgumentParser(prog='nlrewrite', description='Sesqui- and double-pushout rewriting of '
                                                                   'graphs with non-linear rules.')
    verbs = parser.add_subparsers(dest='command', metavar='COMMAND')
    verbs.required = True

    p = verbs.add_parser('matches', parents=[common, semantics], help='list the matches of a rule in a host')
    p.add_argument('rule')
    p.add_argument('host')
    p.set_defaults(handler=cmd_matches)

    p = verbs.add_parser('apply', parents=[common, semantics], help='rewrite a host at one match')
    p.add_argument('rule')
    p.add_argument('host')
    p.add_argument('--index', type=int, default=0)
    p.set_defaults(handler=cmd_apply)

    p = verbs.add_parser('compose', parents=[common, semantics, pair], help='composite rules with their witnesses')
    p.add_argument('--index', type=int, default=None, help='only the composite along this rule match')
    p.set_defaults(handler=cmd_compose)

    p = verbs.add_parser('synthesize', parents=[common, semantics, pair],
                         help='turn a two-step derivation into one along a composite')
    p.add_argument('host')
    p.add_argument('--index1', type=int, default=0)
    p.add_argument('--index2', type=int, default=0)
    p.set_defaults(handler=cmd_synthesize)

    p = verbs.add_parser('analyze', parents=[common, semantics, pair],
                         help='split a derivation along a composite into two steps')
    p.add_argument('host')
    p.add_argument('--index', type=int, default=0, help='rule match')
    p.add_argument('--match-index', type=int, default=0, help='match of the composite in the host')
    p.set_defaults(handler=cmd_analyze)

    p = verbs.add_parser('check-compat', parents=[common, semantics, pair],
                         help='check the concurrency correspondence on a host')
    p.add_argument('host')
    p.set_defaults(handler=cmd_check_compat)

    p = verbs.add_parser('multisum', parents=[common], help='the multi-sum of two graphs')
    p.add_argument('graph1')
    p.add_argument('graph2')
    p.add_argument('--via-pushouts', action='store_true')
    p.set_defaults(handler=cmd_multisum)

    p = verbs.add_parser('mpoc', parents=[common], help='pushout complements of morphisms f and b')
    p.add_argument('diagram')
    p.add_argument('--oracle', action='store_true', help='use the brute-force enumeration')
    p.set_defaults(handler=cmd_mpoc)

    p = verbs.add_parser('fpa', parents=[common], help='augmentations of the pushout of alpha and a')
    p.add_argument('diagram')
    p.set_defaults(handler=cmd_fpa)

    p = verbs.add_parser('fpc', parents=[common], help='final pullback complement of morphisms f and m')
    p.add_argument('diagram')
    p.set_defaults(handler=cmd_fpc)

    p = verbs.add_parser('oracle', parents=[common], help='brute-force universal property checks')
    p.add_argument('kind', choices=(VERIFY_PUSHOUT, VERIFY_PULLBACK, VERIFY_FPC))
    p.add_argument('diagram', nargs='?', help='a square top, left, right, bottom; random squares otherwise')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--max-size', type=int, default=2)
    p.add_argument('--count', type=int, default=20)
    p.set_defaults(handler=cmd_oracle)
    return parser


def _emit(args, report):
    if args.format == 'dot' and report.diagrams:
        text = ''.join(to_dot(diagram) for diagram in report.diagrams)
    else:
        text = ''.join(report.texts)
    write_file_contents(args.output or sys.stdout, text)
    if args.render and report.diagrams:
        if len(report.diagrams) == 1:
            render(to_dot(report.diagrams[0]), args.render)
        else:
            root, ext = os.path.splitext(args.render)
            for i, diagram in enumerate(report.diagrams):
                render(to_dot(diagram), f'{root}-{i}{ext}')
    if report.error is not None:
        raise report.error


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=_LEVELS[min(args.verbose, len(_LEVELS) - 1)],
                        format='%(name)s: %(levelname)s: %(message)s')
    if args.debug:
        settings.set_debug(True)
    try:
        _emit(args, args.handler(args))
    except TheoremCheckError as e:
        sys.stderr.write(f'{e}\n')
        if e.counterexample is not None:
            sys.stderr.write(f'counterexample: {e.counterexample!r}\n')
        return e.exit_code
    except RewriteError as e:
        sys.stderr.write(f'{e}\n')
        return e.exit_code
    return 0
