"""Multi-sums, multi pushout complements along regular monos and FPC-pushout augmentations.

All three constructions return families of elements, one per isomorphism class. Elements carry a ``key()``: a
sorted tuple of intrinsic labels of the elements of their central object, so that two elements are isomorphic (by
an isomorphism commuting with their legs) exactly when their keys are equal. Families are ordered by key.
"""

import itertools
import logging

from nlrewrite.classifier import fpc
from nlrewrite.corpus import set_partitions
from nlrewrite.exceptions import MorphismError, PreconditionError
from nlrewrite.graphcat import (Cospan, Morphism, Span, check_same_category, compose, enumerate_morphisms, fresh_id,
                                identity, is_epi, is_iso, is_jointly_epic, is_regular_mono, make_graph,
                                morphism_key, quotient, subgraph)
from nlrewrite.labels import complement_labels, cospan_labels, labels_key
from nlrewrite.limits import (copairing, coproduct, epi_rm_factorize, is_pullback, is_pushout, pullback,
                              pushout_rm, verify_pushout)

__all__ = [
    'MultiSumElement',
    'POCElement',
    'FPAElement',
    'multisum',
    'multisum_via_pushouts',
    'multisum_factorize',
    'mpoc',
    'mpoc_oracle',
    'mpoc_factorize',
    'fpa_enumerate',
    'fpa_from_epi',
    'multisum_key',
    'poc_key',
]

logger = logging.getLogger('Multi Constructions')


def _subsets(items, max_size=None):
    items = list(items)
    top = len(items) if max_size is None else min(max_size, len(items))
    for k in range(top + 1):
        for chosen in itertools.combinations(items, k):
            yield list(chosen)


def _nonempty_subsets(items):
    for chosen in _subsets(items):
        if chosen:
            yield chosen


# ======================================= ELEMENTS ===================================

def multisum_key(f, g):
    """Label every element of ``Y`` by its preimages under ``f: A -> Y`` and ``g: B -> Y``."""
    return labels_key(cospan_labels(f, g))


def poc_key(a, d):
    """Label the elements of ``P`` in the image of ``a`` by their preimage, the others by their image under ``d``."""
    return labels_key(complement_labels(a, d))


class MultiSumElement(object):
    """A jointly epic cospan ``A -left-> Y <-right- B`` of regular monos."""

    def __init__(self, cospan):
        self.cospan = cospan

    @property
    def left(self):
        return self.cospan.left

    @property
    def right(self):
        return self.cospan.right

    @property
    def object(self):
        return self.cospan.target

    def key(self):
        return multisum_key(self.left, self.right)

    def __iter__(self):
        return iter(self.cospan)

    def __repr__(self):
        return f'MultiSumElement({self.object!r})'


class POCElement(object):
    """A pushout complement ``A -a-> P -d-> D``: ``a`` a regular mono and ``(d, b)`` the pushout of ``(a, f)``."""

    def __init__(self, a, d):
        if a.cod != d.dom:
            raise MorphismError(message='pushout complement legs are not composable')
        self.a = a
        self.d = d

    @property
    def object(self):
        return self.a.cod

    def key(self):
        return poc_key(self.a, self.d)

    def __iter__(self):
        return iter((self.a, self.d))

    def __repr__(self):
        return f'POCElement({self.object!r})'


class FPAElement(object):
    """An FPC-pushout augmentation of the pushout of ``(alpha, a)``.

    Attributes:
        n (Morphism): ``K_bar -> F``, a regular mono
        f (Morphism): ``F -> E``
        e (Morphism): ``D -> E``, an epimorphism out of the pushout object
        alpha_bar (Morphism): ``I -> D``
        a_bar (Morphism): ``K_bar -> D``
        complement (FPCResult): the final pullback complement of ``(a, e o alpha_bar)`` that holds ``F``
    """

    def __init__(self, n, f, e, alpha_bar, a_bar, complement=None):
        self.n = n
        self.f = f
        self.e = e
        self.alpha_bar = alpha_bar
        self.a_bar = a_bar
        self.complement = complement

    @property
    def object(self):
        return self.n.cod

    def is_trivial(self):
        return is_iso(self.e)

    def key(self):
        return morphism_key(self.e), self.e.cod.key()

    def __repr__(self):
        return f'FPAElement(e: {self.e!r})'


# ======================================= MULTI-SUMS ===================================

def _vertex_matchings(A, B):
    """Partial injections from the vertices of ``A`` to those of ``B``."""
    av, bv = sorted(A.vertices), sorted(B.vertices)
    for k in range(min(len(av), len(bv)) + 1):
        for sources in itertools.combinations(av, k):
            for targets in itertools.permutations(bv, k):
                yield dict(zip(sources, targets))


def _edge_matchings(A, B, matching):
    edges = sorted(A.edges)
    options = {e: [d for d in sorted(B.edges)
                   if matching.get(A.src[e]) == B.src[d] and matching.get(A.tgt[e]) == B.tgt[d]]
               for e in edges}
    chosen = {}

    def extend(i):
        if i == len(edges):
            yield dict(chosen)
            return
        e = edges[i]
        for result in extend(i + 1):
            yield result
        used = set(chosen.values())
        for d in options[e]:
            if d in used:
                continue
            chosen[e] = d
            for result in extend(i + 1):
                yield result
            del chosen[e]

    return extend(0)


def _agrees_on_edges(A, B, matching):
    for a1, b1 in matching.items():
        for a2, b2 in matching.items():
            if bool(A.edges_between(a1, a2)) != bool(B.edges_between(b1, b2)):
                return False
    return True


def _sums_over(A, B, matching):
    partner = {b: a for a, b in matching.items()}
    taken = set(A.vertices)
    gv = {}
    for v in sorted(B.vertices):
        if v in partner:
            gv[v] = partner[v]
        else:
            gv[v] = fresh_id(v, taken)
            taken.add(gv[v])
    vertices = sorted(set(A.vertices) | set(gv.values()))
    base_edges = [(e, A.src[e], A.tgt[e]) for e in sorted(A.edges)]
    if not A.is_simple:
        for edge_matching in _edge_matchings(A, B, matching):
            back = {d: e for e, d in edge_matching.items()}
            taken_e = set(A.edges)
            ge, edges = {}, list(base_edges)
            for d in sorted(B.edges):
                if d in back:
                    ge[d] = back[d]
                else:
                    ge[d] = fresh_id(d, taken_e)
                    taken_e.add(ge[d])
                    edges.append((ge[d], gv[B.src[d]], gv[B.tgt[d]]))
            Y = make_graph(A.category, vertices, edges)
            f = Morphism(A, Y, {v: v for v in A.vertices}, {e: e for e in A.edges}, check=False)
            g = Morphism(B, Y, gv, ge, check=False)
            yield MultiSumElement(Cospan(f, g))
        return
    if not _agrees_on_edges(A, B, matching):
        return
    ends = set((s, t) for _, s, t in base_edges)
    taken_e = set(A.edges)
    edges = list(base_edges)
    for d in sorted(B.edges):
        pair = (gv[B.src[d]], gv[B.tgt[d]])
        if pair not in ends:
            name = fresh_id(d, taken_e)
            taken_e.add(name)
            ends.add(pair)
            edges.append((name, pair[0], pair[1]))
    Y = make_graph(A.category, vertices, edges)
    in_a, in_b = set(A.vertices), set(gv.values())
    free = [(u, v) for u in vertices for v in vertices
            if (u, v) not in ends and not (u in in_a and v in in_a) and not (u in in_b and v in in_b)]
    for extra in _subsets(free):
        q = quotient(Y, [[v] for v in vertices], extra_edges=extra)
        f = Morphism.from_vertex_map(A, q.cod, {v: v for v in A.vertices})
        g = Morphism.from_vertex_map(B, q.cod, gv)
        yield MultiSumElement(Cospan(f, g))


def multisum(A, B):
    """The multi-sum of ``A`` and ``B``: every jointly epic cospan of regular monos, up to cospan isomorphism.

    Each element glues ``A`` and ``B`` along a partial matching of their vertices. Multigraph elements also match
    edges between matched vertices; simple-graph elements may add edges between vertices that are not both in the
    image of one leg.

    Examples:
        >>> from nlrewrite.graphcat import multigraph, simplegraph
        >>> len(multisum(multigraph(['v']), multigraph(['w'])))
        2
        >>> len(multisum(simplegraph(['v']), simplegraph(['w'])))
        5
    """
    check_same_category(A, B)
    elements = {}
    for matching in _vertex_matchings(A, B):
        for element in _sums_over(A, B, matching):
            elements.setdefault(element.key(), element)
    logger.debug(f'multi-sum with {len(elements)} elements')
    return [elements[k] for k in sorted(elements)]


def _regular_subobjects(A):
    for vertices in _subsets(sorted(A.vertices)):
        inside = set(vertices)
        edges = [e for e in sorted(A.edges) if A.src[e] in inside and A.tgt[e] in inside]
        if A.is_simple:
            yield subgraph(A, vertices, edges)
        else:
            for chosen in _subsets(edges):
                yield subgraph(A, vertices, chosen)


def _mono_epi_extensions(result):
    Y = result.object
    if not Y.is_simple:
        yield identity(Y)
        return
    in_a = set(result.left.vmap.values())
    in_b = set(result.right.vmap.values())
    vertices = sorted(Y.vertices)
    free = [(u, v) for u in vertices for v in vertices
            if not Y.edges_between(u, v) and not (u in in_a and v in in_a) and not (u in in_b and v in in_b)]
    for extra in _subsets(free):
        yield quotient(Y, [[v] for v in vertices], extra_edges=extra)


def multisum_via_pushouts(A, B):
    """The multi-sum built from pushouts of regular-mono spans ``A <- X -> B``, each extended by mono-epis."""
    check_same_category(A, B)
    elements = {}
    for inclusion in _regular_subobjects(A):
        for mono in enumerate_morphisms(inclusion.dom, B, 'regular-mono'):
            result = pushout_rm(Span(inclusion, mono))
            for q in _mono_epi_extensions(result):
                element = MultiSumElement(Cospan(compose(q, result.left), compose(q, result.right)))
                elements.setdefault(element.key(), element)
    return [elements[k] for k in sorted(elements)]


def multisum_factorize(A, B, z):
    """Factor a cospan ``A -a-> Z <-b- B`` of regular monos through a multi-sum element.

    Returns:
        tuple: ``(element, y)`` with ``y: Y -> Z`` a regular mono, ``a = y o element.left`` and
               ``b = y o element.right``.
    """
    a, b = z.left, z.right
    if a.dom != A or b.dom != B:
        raise MorphismError(message='the cospan does not start at the given objects')
    if not (is_regular_mono(a) and is_regular_mono(b)):
        raise PreconditionError(message='only cospans of regular monomorphisms factor through the multi-sum')
    S = coproduct(A, B)
    factorization = epi_rm_factorize(copairing(S, a, b))
    element = MultiSumElement(Cospan(compose(factorization.epi, S.left), compose(factorization.epi, S.right)))
    return element, factorization.rm


# ======================================= MULTI POCS ===================================

def _check_poc_input(f, b):
    if f.cod != b.dom:
        raise MorphismError(message='pushout complements need composable morphisms')
    if not is_regular_mono(b):
        raise PreconditionError(message='pushout complements are taken along regular monomorphisms only')


def mpoc(f, b):
    """All pushout complements of ``A -f-> B -b-> D`` up to isomorphism.

    Every complement embeds in the final pullback complement ``A -n-> F -g-> D``: it keeps all vertices of ``F``,
    the edges of ``n(A)`` and a nonempty part of every other edge fibre of ``g``. A candidate is kept when its
    pushout along ``f`` is isomorphic to ``D`` over ``b``.

    Raises:
        PreconditionError: ``b`` is not a regular monomorphism.
    """
    _check_poc_input(f, b)
    complement = fpc(f, b)
    F, n, g = complement.object, complement.n, complement.g
    image_e = set(n.emap.values())
    covered = set(b.emap.values())
    fibres = {}
    for e in sorted(F.edges):
        if e not in image_e and g.emap[e] not in covered:
            fibres.setdefault(g.emap[e], []).append(e)
    choices = [list(_nonempty_subsets(fibre)) for _, fibre in sorted(fibres.items())]
    elements = {}
    candidates = 0
    for choice in itertools.product(*choices):
        candidates += 1
        p = subgraph(F, F.vertices, image_e.union(*choice))
        a = Morphism(f.dom, p.dom, n.vmap, n.emap, check=False)
        if not is_regular_mono(a):
            continue
        d = compose(g, p)
        comparison = pushout_rm(Span(a, f)).mediate(d, b)
        if is_iso(comparison):
            element = POCElement(a, d)
            elements.setdefault(element.key(), element)
    logger.debug(f'multi-POC: {len(elements)} of {candidates} candidates')
    return [elements[k] for k in sorted(elements)]


def mpoc_oracle(f, b):
    """Brute-force pushout complements of ``A -f-> B -b-> D``, independent of :func:`mpoc`.

    A candidate ``P`` holds ``A`` plus a set ``W`` of vertices of ``D`` outside ``b(B)`` and edges lifting edges of
    ``D`` onto chosen endpoints; ``a`` is the inclusion of ``A``. Candidates pass when :func:`verify_pushout`
    accepts them.

    A pushout along a regular mono is a pullback, so ``P`` has no vertex over ``b(B)`` besides ``A`` and no edge over
    an edge of ``b(B)`` besides those of ``A``. In multigraphs an edge of ``D`` outside ``b(B)`` has exactly
    one lift, which bounds the lifts by ``|E_D|``. In simple graphs the pushout collapses parallel edges, so an edge
    of ``D`` may have one lift per pair of endpoints; the lifts are then bounded by the vertex pairs of ``P``.
    """
    _check_poc_input(f, b)
    A, D = f.dom, b.cod
    bf = compose(b, f)
    over = {x: [v for v in sorted(A.vertices) if bf.vmap[v] == x] for x in D.vertices}
    outside = sorted(D.vertices - set(b.vmap.values()))
    covered = set(b.emap.values())
    results = {}
    candidates = 0
    for W in _subsets(outside):
        taken = set(A.vertices)
        wname = {}
        for x in W:
            wname[x] = fresh_id(x, taken)
            taken.add(wname[x])

        def ends(x):
            return over[x] + ([wname[x]] if x in wname else [])

        lifts = [(c, s, t) for c in sorted(D.edges) if c not in covered
                 for s in ends(D.src[c]) for t in ends(D.tgt[c])]
        vmap = {v: bf.vmap[v] for v in A.vertices}
        vmap.update({name: x for x, name in wname.items()})
        edge_choices = _subsets(lifts) if D.is_simple else _subsets(lifts, len(D.edges))
        for chosen in edge_choices:
            candidates += 1
            taken_e = set(A.edges)
            edges = [(e, A.src[e], A.tgt[e]) for e in sorted(A.edges)]
            emap = {e: bf.emap[e] for e in A.edges}
            for c, s, t in chosen:
                name = fresh_id(c, taken_e)
                taken_e.add(name)
                edges.append((name, s, t))
                emap[name] = c
            try:
                P = make_graph(A.category, sorted(vmap), edges)
            except MorphismError:
                continue
            a = Morphism(A, P, {v: v for v in A.vertices}, {e: e for e in A.edges}, check=False)
            if not is_regular_mono(a):
                continue
            d = Morphism(P, D, vmap, emap, check=False) if not P.is_simple else Morphism.from_vertex_map(P, D, vmap)
            if not is_jointly_epic(d, b):
                continue
            if verify_pushout(Span(a, f), Cospan(d, b)):
                element = POCElement(a, d)
                results.setdefault(element.key(), element)
    logger.debug(f'multi-POC oracle: {len(results)} of {candidates} candidates')
    return [results[k] for k in sorted(results)]


def mpoc_factorize(f, b, n, q, m_prime):
    """Recover the pushout complement a competitor pushout factors through.

    The competitor is a pushout of ``(n, f)`` along a regular mono ``n: A -> C'`` with legs ``q: C' -> D'`` and
    ``m_prime o b`` where ``m_prime: D -> D'`` is a regular mono.

    Returns:
        tuple: ``(element, p)``, ``element = (a, d)`` in the multi-POC of ``(f, b)`` and ``p: P -> C'`` a regular
               mono with ``p o a = n`` and ``q o p = m_prime o d``.
    """
    _check_poc_input(f, b)
    if not (is_regular_mono(n) and is_regular_mono(m_prime)):
        raise PreconditionError(message='the competitor legs n and m_prime must be regular monomorphisms')
    if not is_pushout(Span(n, f), Cospan(q, compose(m_prime, b))):
        raise PreconditionError(message='the competitor square is not a pushout')
    P = pullback(Cospan(q, m_prime))
    a = P.mediate(n, compose(b, f))
    return POCElement(a, P.right), P.left


# ======================================= FPC-PUSHOUT AUGMENTATIONS ===================================

def _candidate_epis(D, alpha_bar, a):
    image_v = set(alpha_bar.vmap.values())
    image_e = set(alpha_bar.emap.values())
    kept = set(alpha_bar.vmap[a.vmap[k]] for k in a.dom.vertices)
    fixed = [[v] for v in sorted(image_v)]
    for partition in set_partitions(sorted(D.vertices - image_v)):
        vertex_blocks = fixed + partition
        if D.is_simple:
            base = quotient(D, vertex_blocks)
            Q = base.cod
            deleted = set(base.vmap[v] for v in image_v - kept)
            outside = set(base.vmap.values()) - set(base.vmap[v] for v in image_v)
            # other new edges would never be reflected by n
            free = [(u, v) for u in sorted(Q.vertices) for v in sorted(Q.vertices)
                    if not Q.edges_between(u, v)
                    and ((u in deleted and v in outside) or (u in outside and v in deleted))]
            for extra in _subsets(free):
                yield quotient(D, vertex_blocks, extra_edges=extra)
            continue
        block_of = {v: i for i, block in enumerate(vertex_blocks) for v in block}
        buckets = {}
        for e in sorted(D.edges - image_e):
            buckets.setdefault((block_of[D.src[e]], block_of[D.tgt[e]]), []).append(e)
        per_bucket = [list(set_partitions(edges)) for _, edges in sorted(buckets.items())]
        for choice in itertools.product(*per_bucket):
            edge_blocks = [[e] for e in sorted(image_e)] + [block for bucket in choice for block in bucket]
            yield quotient(D, vertex_blocks, edge_blocks)


def _augmentation(alpha, a, e, alpha_bar, a_bar):
    I = a.cod
    e_alpha = compose(e, alpha_bar)
    if not is_epi(e) or not is_regular_mono(e_alpha):
        return None
    if not is_pullback(Cospan(e, e_alpha), Span(alpha_bar, identity(I))):
        return None
    complement = fpc(a, e_alpha)
    try:
        n = complement.mediate(alpha, identity(a.dom), compose(e, a_bar))
    except PreconditionError:
        return None
    if not is_regular_mono(n):
        return None
    return FPAElement(n, complement.g, e, alpha_bar, a_bar, complement)


def fpa_enumerate(alpha, a):
    """The FPC-pushout augmentations of the pushout of ``K_bar <-alpha- K -a-> I``.

    The pushout ``D`` comes with ``alpha_bar: I -> D`` and ``a_bar: K_bar -> D``. Candidate epis ``e: D -> E`` merge
    vertices outside ``alpha_bar(I)`` (and, for multigraphs, parallel edges outside it); for simple graphs they may
    also add edges. A candidate is kept when ``e o alpha_bar`` is a regular mono pulled back from ``e``, and the
    comparison ``n: K_bar -> F`` into the final pullback complement of ``(a, e o alpha_bar)`` is a regular mono.

    Raises:
        PreconditionError: ``alpha`` is not a regular monomorphism.
    """
    if alpha.dom != a.dom:
        raise MorphismError(message='alpha and a must share their domain')
    if not is_regular_mono(alpha):
        raise PreconditionError(message='augmentations need alpha to be a regular monomorphism')
    result = pushout_rm(Span(alpha, a))
    a_bar, alpha_bar = result.left, result.right
    found = []
    candidates = 0
    for e in _candidate_epis(result.object, alpha_bar, a):
        candidates += 1
        element = _augmentation(alpha, a, e, alpha_bar, a_bar)
        if element is not None:
            found.append(element)
    logger.debug(f'FPA: {len(found)} of {candidates} candidate epis')
    return sorted(found, key=lambda element: (not element.is_trivial(), element.key()))


def fpa_from_epi(alpha, a, e):
    """The augmentation of the pushout of ``(alpha, a)`` determined by the epi ``e`` out of the pushout object.

    Raises:
        PreconditionError: ``e`` does not augment the pushout into a final pullback complement.
    """
    result = pushout_rm(Span(alpha, a))
    if e.dom != result.object:
        raise MorphismError(message='the epi does not start at the pushout object')
    element = _augmentation(alpha, a, e, result.right, result.left)
    if element is None:
        raise PreconditionError(message='the epi is not an FPC-pushout augmentation')
    return element
