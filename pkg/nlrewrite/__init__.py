# The MIT License
#
# Copyright 2026 The nlrewrite developers
#
# Permission is hereby granted, free of charge, to any person obtaining
# a copy of this software and associated documentation files (the 'Software'),
# to deal in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell copies of
# the Software, and to permit persons to whom the Software is furnished to do so, subject
# to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all copies or
# substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED 'AS IS', WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED, INCLUDING BUT NOT
# LIMITED TO THE WARRANTIES OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
# IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
# WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE
#  OR THE USE OR OTHER DEALINGS IN THE SOFTWARE
""" Sesqui-pushout and double-pushout rewriting of directed multigraphs and simple graphs, with rules whose legs
    need not be monomorphisms, and the composition of such rules.

    EXAMPLE: a rule that clones a vertex, applied to a vertex with a self-loop.

    >>> import nlrewrite
    >>> I = nlrewrite.multigraph(['x'])
    >>> K = nlrewrite.multigraph(['k1', 'k2'])
    >>> clone = nlrewrite.Rule('clone', nlrewrite.identity(K), nlrewrite.Morphism(K, I, {'k1': 'x', 'k2': 'x'}, {}))
    >>> X = nlrewrite.multigraph(['v'], [('l', 'v', 'v')])
    >>> d = nlrewrite.derive_all(X, clone)[0]
    >>> len(d.result.vertices), len(d.result.edges)
    (2, 4)

    Both copies keep a loop and the two are joined by an edge in each direction. Under DPO the same match
    admits several pushout complements instead, one for each way of attaching the loop to the copies.

    Rules compose along rule matches; ``compatibility_check`` confirms on a host that two-step derivations and
    derivations along the composites correspond one to one.

    >>> report = nlrewrite.compatibility_check(clone, clone, nlrewrite.multigraph(['v']))
    >>> report.ok
    True

    The same operations are available from the command line, see ``python -m nlrewrite --help``.
"""

__author__ = 'The nlrewrite developers'
__all__ = [
    'RewriteError', 'ParseError', 'TheoremCheckError', 'make_error',
    'GraphObject', 'Morphism', 'Span', 'Cospan', 'multigraph', 'simplegraph', 'identity', 'compose',
    'are_isomorphic', 'canonical_form',
    'pushout_rm', 'pullback', 'epi_rm_factorize', 'fpc',
    'multisum', 'mpoc', 'fpa_enumerate',
    'Rule', 'SQPO', 'DPO', 'matches', 'derive', 'derive_all',
    'rule_matches', 'compose_along', 'synthesize', 'analyze', 'compatibility_check',
    'set_debug',
]

from .exceptions import RewriteError, ParseError, TheoremCheckError, make_error
from .graphcat import (GraphObject, Morphism, Span, Cospan, multigraph, simplegraph, identity, compose,
                       are_isomorphic, canonical_form)
from .limits import pushout_rm, pullback, epi_rm_factorize
from .classifier import fpc
from .multi import multisum, mpoc, fpa_enumerate
from .rewrite import Rule, SQPO, DPO, matches, derive, derive_all
from .concurrent import rule_matches, compose_along, synthesize, analyze, compatibility_check
from .settings import set_debug
