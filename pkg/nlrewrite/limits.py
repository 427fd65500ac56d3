"""Finite limits and colimits of graphs and the brute-force checks of their universal properties.

Constructions name their results deterministically. A pushout keeps the ids of its left foot and takes, for a class
made of right-foot elements only, the least right id primed until it is fresh. A pullback names the pair of ``b``
and ``c`` as ``(b,c)``.
"""

import itertools
import logging

from nlrewrite import settings
from nlrewrite.corpus import set_partitions
from nlrewrite.exceptions import MorphismError, PreconditionError, TheoremCheckError
from nlrewrite.graphcat import (Cospan, Morphism, Span, check_same_category, compose, empty, enumerate_morphisms,
                                extensions, fresh_id, is_iso, is_regular_mono, make_graph,
                                quotient, subgraph)

__all__ = [
    'PushoutResult',
    'PullbackResult',
    'Factorization',
    'Square',
    'COMMUTES',
    'PULLBACK',
    'PUSHOUT',
    'FPC',
    'initial_object',
    'initial_morphism',
    'coproduct',
    'copairing',
    'pullback',
    'pushout_rm',
    'epi_rm_factorize',
    'pushout_mediator',
    'pullback_mediator',
    'is_pushout',
    'is_pullback',
    'verify_pushout',
    'verify_pullback',
    'classify_square',
    'debug_check',
]

COMMUTES = 'commutes'
PULLBACK = 'pullback'
PUSHOUT = 'pushout'
FPC = 'fpc'

logger = logging.getLogger('Limits')


class _UnionFind(object):
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)

    def classes(self):
        groups = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return [sorted(group) for _, group in sorted(groups.items())]


# ======================================= RESULTS ===================================

class PushoutResult(object):
    """The pushout object of a span with its two injections ``left: B -> D`` and ``right: C -> D``."""

    def __init__(self, obj, left, right, span=None):
        self.object = obj
        self.left = left
        self.right = right
        self.span = span

    @property
    def injections(self):
        return self.left, self.right

    @property
    def cospan(self):
        return Cospan(self.left, self.right)

    def mediate(self, x, y):
        """The unique ``h: D -> Z`` with ``h o left = x`` and ``h o right = y``."""
        return pushout_mediator(self.left, self.right, x, y)


class PullbackResult(object):
    """The pullback object of a cospan with its two projections ``left: P -> B`` and ``right: P -> C``."""

    def __init__(self, obj, left, right, cospan=None):
        self.object = obj
        self.left = left
        self.right = right
        self.cospan = cospan

    @property
    def projections(self):
        return self.left, self.right

    @property
    def span(self):
        return Span(self.left, self.right)

    def mediate(self, x, y):
        """The unique ``h: Z -> P`` with ``left o h = x`` and ``right o h = y``."""
        return pullback_mediator(self.left, self.right, x, y)


class Factorization(object):
    """``f = rm o epi`` with ``epi`` an epimorphism and ``rm`` a regular monomorphism."""

    def __init__(self, epi, rm):
        self.epi = epi
        self.rm = rm

    @property
    def midpoint(self):
        return self.epi.cod

    def __iter__(self):
        return iter((self.epi, self.rm))


class Square(object):
    """A square of morphisms::

        A --top--> B
        |          |
       left      right
        v          v
        C -bottom> D
    """

    def __init__(self, top, left, right, bottom):
        check_same_category(top.dom, left.dom, right.dom, bottom.dom)
        if top.dom != left.dom or top.cod != right.dom or left.cod != bottom.dom or right.cod != bottom.cod:
            raise MorphismError(message='the four morphisms do not form a square')
        self.top = top
        self.left = left
        self.right = right
        self.bottom = bottom

    def commutes(self):
        return compose(self.right, self.top) == compose(self.bottom, self.left)

    @property
    def span(self):
        return Span(self.top, self.left)

    @property
    def cospan(self):
        return Cospan(self.right, self.bottom)

    def __repr__(self):
        return f'Square(top={self.top!r}, left={self.left!r}, right={self.right!r}, bottom={self.bottom!r})'


def debug_check(what, objects, check):
    """Run ``check()`` when debug mode is on and every object is small enough for the oracles."""
    if not settings.DEBUG:
        return
    largest = max([len(X.vertices) for X in objects] or [0])
    if largest > settings.DEBUG_CHECK_MAX_VERTICES:
        logger.warning(f'{what}: {largest} vertices exceed the oracle bound, check skipped')
        return
    if not check():
        raise TheoremCheckError(message=f'{what} failed its universal-property check', counterexample=objects)
    logger.debug(f'{what}: universal property confirmed')


# ======================================= COLIMITS ===================================

def initial_object(category):
    return empty(category)


def initial_morphism(X):
    """The unique morphism out of the empty graph."""
    return Morphism(empty(X.category), X, {}, {}, check=False)


def _name_classes(classes, left_ids):
    names = {}
    taken = set(left_ids)
    pending = []
    for cls in classes:
        lefts = sorted(i for side, i in cls if side == 'L')
        if lefts:
            for x in cls:
                names[x] = lefts[0]
        else:
            pending.append(cls)
    for cls in sorted(pending, key=lambda c: min(i for _, i in c)):
        name = fresh_id(min(i for _, i in cls), taken)
        taken.add(name)
        for x in cls:
            names[x] = name
    return names


def _pushout(span):
    b, c = span.left, span.right
    B, C = b.cod, c.cod
    vuf = _UnionFind([('L', v) for v in B.vertices] + [('R', v) for v in C.vertices])
    for a in b.dom.vertices:
        vuf.union(('L', b.vmap[a]), ('R', c.vmap[a]))
    vname = _name_classes(vuf.classes(), B.vertices)
    if B.is_simple:
        # the pushout of the underlying multigraphs with parallel edges collapsed
        groups = {}
        for side, X in (('L', B), ('R', C)):
            for e in X.edges:
                groups.setdefault((vname[(side, X.src[e])], vname[(side, X.tgt[e])]), []).append((side, e))
        ename = _name_classes([sorted(g) for _, g in sorted(groups.items())], B.edges)
    else:
        euf = _UnionFind([('L', e) for e in B.edges] + [('R', e) for e in C.edges])
        for a in b.dom.edges:
            euf.union(('L', b.emap[a]), ('R', c.emap[a]))
        ename = _name_classes(euf.classes(), B.edges)
    edges = {}
    for side, X in (('L', B), ('R', C)):
        for e in X.edges:
            edges[ename[(side, e)]] = (vname[(side, X.src[e])], vname[(side, X.tgt[e])])
    D = make_graph(B.category, sorted(set(vname.values())), [(e, s, t) for e, (s, t) in sorted(edges.items())])
    left = Morphism(B, D, {v: vname[('L', v)] for v in B.vertices}, {e: ename[('L', e)] for e in B.edges},
                    check=False)
    right = Morphism(C, D, {v: vname[('R', v)] for v in C.vertices}, {e: ename[('R', e)] for e in C.edges},
                     check=False)
    return PushoutResult(D, left, right, span)


def coproduct(A, B):
    """The disjoint union ``A + B``; the ids of ``B`` are primed where they clash with those of ``A``."""
    check_same_category(A, B)
    return _pushout(Span(initial_morphism(A), initial_morphism(B)))


def copairing(coproduct_result, a, b):
    """The induced morphism ``[a, b]: A + B -> Z``."""
    return coproduct_result.mediate(a, b)


def pushout_rm(span):
    """The pushout of a span with at least one regular-mono leg.

    Args:
        span (Span): ``B <-b- A -c-> C``

    Returns:
        PushoutResult: ``D`` with ``left: B -> D`` and ``right: C -> D``.

    Raises:
        PreconditionError: neither leg is a regular monomorphism.
    """
    check_same_category(span.left.cod, span.right.cod)
    if not (is_regular_mono(span.left) or is_regular_mono(span.right)):
        raise PreconditionError(message='pushouts are only built along regular monomorphisms')
    result = _pushout(span)
    logger.debug(f'pushout with {len(result.object.vertices)} vertices, {len(result.object.edges)} edges')
    debug_check('pushout', [span.left.cod, span.right.cod, result.object],
                lambda: verify_pushout(span, result.cospan))
    return result


def pushout_mediator(left, right, x, y):
    """The morphism out of a pushout object ``D`` induced by a commuting competitor ``(x, y)``.

    The legs ``left`` and ``right`` must be jointly surjective; conflicting or missing values raise
    :class:`PreconditionError`.
    """
    if x.dom != left.dom or y.dom != right.dom or x.cod != y.cod:
        raise MorphismError(message='competitor legs do not match the pushout injections')
    D = left.cod
    vmap = _glue(((left.vmap, x.vmap), (right.vmap, y.vmap)), D.vertices, 'vertex')
    if D.is_simple:
        return Morphism.from_vertex_map(D, x.cod, vmap)
    emap = _glue(((left.emap, x.emap), (right.emap, y.emap)), D.edges, 'edge')
    return Morphism(D, x.cod, vmap, emap)


def _glue(pairs, targets, sort):
    glued = {}
    for injection, competitor in pairs:
        for s, d in injection.items():
            w = competitor[s]
            if glued.setdefault(d, w) != w:
                raise PreconditionError(message=f'competitor legs disagree on {sort} "{d}"')
    missing = set(targets) - set(glued)
    if missing:
        raise PreconditionError(message=f'{sort} "{min(missing)}" lies outside the image of the legs')
    return glued


# ======================================= LIMITS ===================================

def _pair(b, c):
    return f'({b},{c})'


def pullback(cospan):
    """The pullback of ``B -f-> D <-g- C``: pairs of vertices and of edges with equal images.

    Returns:
        PullbackResult: ``P`` with ``left: P -> B`` and ``right: P -> C``.
    """
    f, g = cospan.left, cospan.right
    B, C = f.dom, g.dom
    over = {}
    for c in C.vertices:
        over.setdefault(g.vmap[c], []).append(c)
    vpairs = [(b, c) for b in sorted(B.vertices) for c in sorted(over.get(f.vmap[b], ()))]
    over = {}
    for e in C.edges:
        over.setdefault(g.emap[e], []).append(e)
    epairs = [(e1, e2) for e1 in sorted(B.edges) for e2 in sorted(over.get(f.emap[e1], ()))]
    P = make_graph(B.category, [_pair(b, c) for b, c in vpairs],
                   [(_pair(e1, e2), _pair(B.src[e1], C.src[e2]), _pair(B.tgt[e1], C.tgt[e2])) for e1, e2 in epairs])
    left = Morphism(P, B, {_pair(b, c): b for b, c in vpairs}, {_pair(e1, e2): e1 for e1, e2 in epairs}, check=False)
    right = Morphism(P, C, {_pair(b, c): c for b, c in vpairs}, {_pair(e1, e2): e2 for e1, e2 in epairs},
                     check=False)
    return PullbackResult(P, left, right, cospan)


def pullback_mediator(p, q, x, y):
    """The morphism into an apex ``P`` with jointly monic legs ``p``, ``q`` induced by a competitor ``(x, y)``."""
    if x.cod != p.cod or y.cod != q.cod or x.dom != y.dom:
        raise MorphismError(message='competitor legs do not match the pullback projections')
    P, Z = p.dom, x.dom
    vmap = _lift(P.vertices, p.vmap, q.vmap, Z.vertices, x.vmap, y.vmap, 'vertex')
    if P.is_simple:
        return Morphism.from_vertex_map(Z, P, vmap)
    emap = _lift(P.edges, p.emap, q.emap, Z.edges, x.emap, y.emap, 'edge')
    return Morphism(Z, P, vmap, emap)


def _lift(apex, pmap, qmap, sources, xmap, ymap, sort):
    index = {}
    for v in apex:
        key = (pmap[v], qmap[v])
        if key in index:
            raise PreconditionError(message=f'the projections are not jointly monic on {sort} "{v}"')
        index[key] = v
    lifted = {}
    for z in sources:
        key = (xmap[z], ymap[z])
        if key not in index:
            raise PreconditionError(message=f'no {sort} of the apex lies over ({key[0]}, {key[1]})')
        lifted[z] = index[key]
    return lifted


def epi_rm_factorize(f):
    """Factor ``f`` through its image: the image subgraph for multigraphs, the induced subgraph on the image
    vertices for simple graphs."""
    X = f.cod
    vertices = set(f.vmap.values())
    if X.is_simple:
        edges = [e for e in X.edges if X.src[e] in vertices and X.tgt[e] in vertices]
    else:
        edges = set(f.emap.values())
    rm = subgraph(X, vertices, edges)
    epi = Morphism(f.dom, rm.dom, f.vmap, f.emap, check=False)
    return Factorization(epi, rm)


# ======================================= CONSTRUCTIVE CHECKS ===================================

def _check_shape(span, cospan):
    if span.left.cod != cospan.left.dom or span.right.cod != cospan.right.dom:
        raise MorphismError(message='the span and the cospan do not form a square')


def _commutes(span, cospan):
    return compose(cospan.left, span.left) == compose(cospan.right, span.right)


def is_pushout(span, cospan):
    """Whether ``cospan`` completes ``span`` to a pushout square, by comparison with the computed pushout."""
    _check_shape(span, cospan)
    if not _commutes(span, cospan):
        return False
    try:
        h = _pushout(span).mediate(cospan.left, cospan.right)
    except PreconditionError:
        return False
    return is_iso(h)


def is_pullback(cospan, span):
    """Whether ``span`` completes ``cospan`` to a pullback square, by comparison with the computed pullback."""
    _check_shape(span, cospan)
    if not _commutes(span, cospan):
        return False
    try:
        h = pullback(cospan).mediate(span.left, span.right)
    except PreconditionError:
        return False
    return is_iso(h)


# ======================================= ORACLES ===================================

def _forced_quotients(span):
    """Every quotient of ``B + C`` that merges ``b(a)`` with ``c(a)``, as pairs of legs into the quotient."""
    b, c = span.left, span.right
    S = coproduct(b.cod, c.cod)
    inl, inr = S.injections
    X = S.object
    vuf = _UnionFind(X.vertices)
    for a in b.dom.vertices:
        vuf.union(inl.vmap[b.vmap[a]], inr.vmap[c.vmap[a]])
    euf = _UnionFind(X.edges)
    for a in b.dom.edges:
        euf.union(inl.emap[b.emap[a]], inr.emap[c.emap[a]])
    edge_classes = euf.classes()
    for partition in set_partitions(vuf.classes()):
        vertex_blocks = [sum(group, []) for group in partition]
        if X.is_simple:
            yield _legs(quotient(X, vertex_blocks), inl, inr)
            continue
        block_of = {v: i for i, block in enumerate(vertex_blocks) for v in block}
        buckets = {}
        for cls in edge_classes:
            e = cls[0]
            buckets.setdefault((block_of[X.src[e]], block_of[X.tgt[e]]), []).append(cls)
        per_bucket = [list(set_partitions(classes)) for _, classes in sorted(buckets.items())]
        for choice in itertools.product(*per_bucket):
            edge_blocks = [sum(group, []) for bucket in choice for group in bucket]
            yield _legs(quotient(X, vertex_blocks, edge_blocks), inl, inr)


def _legs(q, inl, inr):
    return compose(q, inl), compose(q, inr)


def _pushout_competitors(span, extra):
    from nlrewrite.classifier import classify_object

    for x, y in _forced_quotients(span):
        yield x, y
        # mediators into T(Q) are unique only when the candidate is covered by its legs
        eta = classify_object(x.cod).eta
        yield compose(eta, x), compose(eta, y)
    b, c = span.left, span.right
    for Z in extra:
        for x in enumerate_morphisms(b.cod, Z):
            for y in enumerate_morphisms(c.cod, Z):
                if compose(x, b) == compose(y, c):
                    yield x, y


def _count_pushout_mediators(candidate, x, y, limit=2):
    vmap, emap = {}, {}
    for leg, competitor in ((candidate.left, x), (candidate.right, y)):
        for s, d in leg.vmap.items():
            if vmap.setdefault(d, competitor.vmap[s]) != competitor.vmap[s]:
                return 0
        for s, d in leg.emap.items():
            if emap.setdefault(d, competitor.emap[s]) != competitor.emap[s]:
                return 0
    count = 0
    for _ in extensions(candidate.target, x.cod, vmap, emap):
        count += 1
        if count >= limit:
            break
    return count


def verify_pushout(span, candidate, extra=()):
    """Brute-force check that ``candidate`` is a pushout of ``span``.

    Every quotient ``Q`` of ``B + C`` respecting the span is a competitor, both as itself and through ``eta`` into
    its partial-map classifier ``T(Q)``; the objects in ``extra`` contribute every commuting pair of legs. The
    candidate passes when each competitor admits exactly one mediating morphism.

    Raises:
        PreconditionError: the square does not commute.
    """
    _check_shape(span, candidate)
    if not _commutes(span, candidate):
        raise PreconditionError(message='the square does not commute')
    for x, y in _pushout_competitors(span, extra):
        if _count_pushout_mediators(candidate, x, y) != 1:
            logger.debug(f'pushout competitor without a unique mediator: {x.cod!r}')
            return False
    return True


def _representables(category):
    return [empty(category), make_graph(category, ['x'], []), make_graph(category, ['x', 'y'], [('e', 'x', 'y')])]


def verify_pullback(cospan, candidate, extra=()):
    """Brute-force check that ``candidate`` is a pullback of ``cospan``.

    The competitors are the empty graph, a single vertex, a single edge and the objects in ``extra``; for each
    commuting pair of legs out of a competitor exactly one mediating morphism must exist.

    Raises:
        PreconditionError: the square does not commute.
    """
    _check_shape(candidate, cospan)
    if not _commutes(candidate, cospan):
        raise PreconditionError(message='the square does not commute')
    f, g = cospan.left, cospan.right
    p, q = candidate.left, candidate.right
    for Z in _representables(f.category) + list(extra):
        into_p = enumerate_morphisms(Z, p.dom)
        for x in enumerate_morphisms(Z, f.dom):
            for y in enumerate_morphisms(Z, g.dom):
                if compose(f, x) != compose(g, y):
                    continue
                count = sum(1 for h in into_p if compose(p, h) == x and compose(q, h) == y)
                if count != 1:
                    logger.debug(f'pullback competitor {Z!r} has {count} mediators')
                    return False
    return True


def classify_square(square, extra=()):
    """The subset of ``{'commutes', 'pullback', 'pushout', 'fpc'}`` the square satisfies.

    ``pushout`` refers to the span ``(top, left)``, ``pullback`` to the cospan ``(right, bottom)`` and ``fpc`` to
    ``(left, bottom)`` as a final pullback complement of ``(top, right)``. A square that does not commute gets the
    empty set.
    """
    from nlrewrite.classifier import verify_fpc

    if not square.commutes():
        return set()
    tags = {COMMUTES}
    if verify_pullback(square.cospan, square.span, extra):
        tags.add(PULLBACK)
    if verify_pushout(square.span, square.cospan, extra):
        tags.add(PUSHOUT)
    if verify_fpc(square.top, square.right, square.left, square.bottom):
        tags.add(FPC)
    return tags
