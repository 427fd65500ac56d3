"""Partial-map classifiers for regular monomorphisms and the final pullback complements they compute.

``T(X)`` adds a vertex ``*`` to ``X`` (primed when ``*`` is taken) together with the edges an undefined part of a
partial map may need. For multigraphs that is one edge ``e(u,v)`` for every ordered pair of vertices of
``X + {*}``; for simple graphs only the edges ``v -> *``, ``* -> v`` and ``* -> *``.

Examples:
    >>> from nlrewrite.graphcat import simplegraph
    >>> T = classify_object(simplegraph(['v'])).T_object
    >>> len(T.vertices), len(T.edges)
    (2, 3)
"""

import functools
import itertools
import logging

from nlrewrite import settings
from nlrewrite.corpus import all_graphs
from nlrewrite.exceptions import MorphismError, PreconditionError
from nlrewrite.graphcat import (Cospan, Morphism, Span, compose, enumerate_morphisms, extensions, fresh_id, identity,
                                inverse, is_regular_mono, make_graph, rename)
from nlrewrite.limits import Square, debug_check, is_pullback, pullback, pullback_mediator, verify_pullback

__all__ = [
    'STAR',
    'ClassifierData',
    'FPCResult',
    'classify_object',
    'T_on_morphism',
    'classify_partial',
    'fpc',
    'verify_fpc',
]

STAR = '*'

logger = logging.getLogger('Classifier')


class ClassifierData(object):
    """The classifier ``T(X)`` with the regular mono ``eta: X -> T(X)``.

    Attributes:
        T_object (GraphObject): ``T(X)``
        eta (Morphism): the inclusion of ``X``
        star (str): the id of the added vertex
        pair_edges (dict): ``(u, v) -> id`` of the added edges
    """

    def __init__(self, T_object, eta, star, pair_edges):
        self.T_object = T_object
        self.eta = eta
        self.star = star
        self.pair_edges = pair_edges

    def classifier_edge(self, u, v):
        return self.pair_edges[(u, v)]


@functools.lru_cache(maxsize=settings.CLASSIFIER_CACHE_SIZE)
def classify_object(X):
    star = fresh_id(STAR, X.vertices)
    vertices = sorted(X.vertices) + [star]
    if X.is_simple:
        pairs = ([(v, star) for v in sorted(X.vertices)] + [(star, v) for v in sorted(X.vertices)]
                 + [(star, star)])
    else:
        pairs = list(itertools.product(vertices, repeat=2))
    taken = set(X.edges)
    pair_edges = {}
    for u, v in pairs:
        name = fresh_id(f'e({u},{v})', taken)
        taken.add(name)
        pair_edges[(u, v)] = name
    T = make_graph(X.category, vertices,
                   [(e, X.src[e], X.tgt[e]) for e in sorted(X.edges)]
                   + [(name, u, v) for (u, v), name in pair_edges.items()])
    eta = Morphism(X, T, {v: v for v in X.vertices}, {e: e for e in X.edges}, check=False)
    return ClassifierData(T, eta, star, pair_edges)


def T_on_morphism(f):
    """``T(f): T(X) -> T(Y)``: ``f`` on ``X``, ``*`` to ``*`` and added edges to the added edge between the images."""
    TX, TY = classify_object(f.dom), classify_object(f.cod)

    def image(v):
        return TY.star if v == TX.star else f.vmap[v]

    vmap = {v: image(v) for v in TX.T_object.vertices}
    emap = dict(f.emap)
    for (u, v), e in TX.pair_edges.items():
        emap[e] = TY.pair_edges[(image(u), image(v))]
    return Morphism(TX.T_object, TY.T_object, vmap, emap, check=False)


def classify_partial(m, f):
    """The classifying morphism ``phi(m, f): X -> T(B)`` of the partial map ``X <-m- A -f-> B``.

    ``(m, f)`` is a pullback of ``(phi, eta_B)``. On the image of ``m`` it is ``eta_B o f o m^-1``; the remaining
    vertices go to ``*`` and the remaining edges to the added edge between the images of their endpoints.

    Raises:
        PreconditionError: ``m`` is not a regular monomorphism.
    """
    if m.dom != f.dom:
        raise MorphismError(message='a partial map needs a common domain')
    if not is_regular_mono(m):
        raise PreconditionError(message='partial maps are classified along regular monomorphisms only')
    TB = classify_object(f.cod)
    X = m.cod
    back_v = {w: v for v, w in m.vmap.items()}
    back_e = {d: e for e, d in m.emap.items()}
    vmap = {x: f.vmap[back_v[x]] if x in back_v else TB.star for x in X.vertices}
    emap = {}
    for e in X.edges:
        if e in back_e:
            emap[e] = f.emap[back_e[e]]
        else:
            emap[e] = TB.pair_edges[(vmap[X.src[e]], vmap[X.tgt[e]])]
    phi = Morphism(X, TB.T_object, vmap, emap, check=False)
    debug_check('partial-map classifier', [X, f.cod],
                lambda: verify_pullback(Cospan(phi, TB.eta), Span(m, f)))
    return phi


# ======================================= FINAL PULLBACK COMPLEMENTS ===================================

class FPCResult(object):
    """The final pullback complement ``A -n-> F -g-> D`` of ``A -f-> B -m-> D``.

    ``n_bar: F -> T(A)`` and ``g`` are the projections of the pullback that built ``F``.
    """

    def __init__(self, obj, n, g, n_bar, f, m):
        self.object = obj
        self.n = n
        self.g = g
        self.n_bar = n_bar
        self.f = f
        self.m = m

    @property
    def square(self):
        return Square(self.f, self.n, self.m, self.g)

    def mediate(self, a, alpha, g_prime):
        """The comparison ``h: X -> F`` of a competitor.

        Args:
            a (Morphism): ``A' -> X``, a regular mono with ``(a, m)`` pulled back from ``g_prime``
            alpha (Morphism): ``A' -> A``
            g_prime (Morphism): ``X -> D``

        Returns:
            Morphism: the unique ``h`` with ``g o h = g_prime`` and ``h o a = n o alpha``.
        """
        return pullback_mediator(self.n_bar, self.g, classify_partial(a, alpha), g_prime)

    def __iter__(self):
        return iter((self.n, self.g))


def _fibre_names(elements, gmap, tmap):
    fibres = {}
    for x in elements:
        fibres.setdefault(gmap[x], []).append(x)
    names, taken = {}, set()
    for c in sorted(fibres):
        fibre = sorted(fibres[c], key=lambda x: tmap[x])
        for x in fibre:
            name = fresh_id(c if len(fibre) == 1 else f'{c}.{tmap[x]}', taken)
            taken.add(name)
            names[x] = name
    return names


def fpc(f, m):
    """The final pullback complement of ``A -f-> B -m-> D`` along a regular mono ``m``.

    ``F`` is the pullback of ``T(f)`` and ``phi(m, id_B)``; ``n: A -> F`` is induced by ``eta_A`` and ``m o f``.
    Elements of ``F`` are named after their image in ``D``, suffixed with their ``T(A)`` component when several
    share the image.

    Raises:
        PreconditionError: ``m`` is not a regular monomorphism.
    """
    if f.cod != m.dom:
        raise MorphismError(message='fpc needs composable morphisms')
    if not is_regular_mono(m):
        raise PreconditionError(message='final pullback complements are taken along regular monomorphisms only')
    A, B = f.dom, f.cod
    m_bar = classify_partial(m, identity(B))
    P = pullback(Cospan(T_on_morphism(f), m_bar))
    n_raw = P.mediate(classify_object(A).eta, compose(m, f))
    F_raw = P.object
    r = rename(F_raw, _fibre_names(sorted(F_raw.vertices), P.right.vmap, P.left.vmap),
               _fibre_names(sorted(F_raw.edges), P.right.emap, P.left.emap))
    r_inv = inverse(r)
    result = FPCResult(r.cod, compose(r, n_raw), compose(P.right, r_inv), compose(P.left, r_inv), f, m)
    logger.debug(f'fpc complement with {len(r.cod.vertices)} vertices, {len(r.cod.edges)} edges')
    debug_check('final pullback complement', [A, B, m.cod, r.cod],
                lambda: verify_fpc(f, m, result.n, result.g))
    return result


def verify_fpc(f, m, n, g, extra=()):
    """Brute-force check that ``(n, g)`` is a final pullback complement of ``(f, m)``.

    The square must be a pullback; then for every ``g': X -> D`` out of a competitor ``X``, with ``A'`` the
    pullback of ``(g', m)``, and every ``alpha: A' -> A`` over ``B``, exactly one ``h: X -> F`` must satisfy
    ``g o h = g'`` and ``h o a = n o alpha``. The competitors are all graphs within the oracle bound, the objects of
    the square and ``extra``.
    """
    square = Square(f, n, m, g)
    if not square.commutes() or not is_pullback(square.cospan, square.span):
        return False
    D, F = m.cod, n.cod
    family = (all_graphs(f.category, settings.ORACLE_MAX_VERTICES, settings.ORACLE_MAX_EDGES)
              + [f.dom, f.cod, D, F] + list(extra))
    for X in family:
        for g_prime in enumerate_morphisms(X, D):
            P = pullback(Cospan(m, g_prime))
            for alpha in enumerate_morphisms(P.object, f.dom):
                if compose(f, alpha) != P.left:
                    continue
                if _count_fpc_mediators(P.right, compose(n, alpha), g, g_prime) != 1:
                    logger.debug(f'fpc competitor {X!r} without a unique comparison')
                    return False
    return True


def _count_fpc_mediators(a, n_alpha, g, g_prime, limit=2):
    vmap, emap = {}, {}
    for s, x in a.vmap.items():
        if vmap.setdefault(x, n_alpha.vmap[s]) != n_alpha.vmap[s]:
            return 0
    for s, x in a.emap.items():
        if emap.setdefault(x, n_alpha.emap[s]) != n_alpha.emap[s]:
            return 0
    count = 0
    for h in extensions(g_prime.dom, g.dom, vmap, emap):
        if compose(g, h) == g_prime:
            count += 1
            if count >= limit:
                break
    return count
