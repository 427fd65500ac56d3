"""Reference compositions of linear rules, computed by set operations on the overlap ``J21``.

For rules whose legs are both regular monos the complements are plain differences: the pushout complement of
``(o1, j1)`` deletes ``j1(O1 - o1(K1))`` and exists when no kept edge dangles; the final pullback complement of
``(i2, j2)`` deletes ``j2(I2 - i2(K2))`` together with every dangling edge. The outer motifs glue the created parts
of ``I1`` and ``O2`` onto the complements, and ``K21`` is the intersection of the two complements. Nothing here goes
through the general constructions, so the results serve as an independent check of them.
"""

import logging

from nlrewrite.exceptions import PreconditionError
from nlrewrite.graphcat import Morphism, compose, fresh_id, make_graph, subgraph
from nlrewrite.rewrite import Rule

__all__ = [
    'linear_compose_sqpo',
    'linear_compose_dpo',
]

logger = logging.getLogger('Concurrency')


def _deleted(leg, into):
    """Images under ``into`` of the elements of ``leg.cod`` outside the image of ``leg``."""
    M = leg.cod
    kept_v = set(leg.vmap.values())
    kept_e = set(leg.emap.values())
    return (set(into.vmap[v] for v in M.vertices if v not in kept_v),
            set(into.emap[e] for e in M.edges if e not in kept_e))


def _difference(J, leg, into, drop_dangling):
    """The inclusion of ``J`` minus the deleted part, or ``None`` when kept edges dangle and may not be dropped."""
    del_v, del_e = _deleted(leg, into)
    vertices = set(J.vertices) - del_v
    edges = set(J.edges) - del_e
    dangling = set(e for e in edges if J.src[e] in del_v or J.tgt[e] in del_v)
    if dangling and not drop_dangling:
        return None
    inclusion = subgraph(J, vertices, edges - dangling)
    k = leg.dom
    restricted = Morphism(k, inclusion.dom, {v: into.vmap[leg.vmap[v]] for v in k.vertices},
                          {e: into.emap[leg.emap[e]] for e in k.edges}, check=False)
    return inclusion, restricted


def _glue(base, leg):
    """``B`` with the part of ``M`` outside ``leg(K)`` added, for ``base: K -> B`` and ``leg: K -> M``.

    Returns:
        tuple: the inclusions ``B -> U`` and ``M -> U``.
    """
    B, M = base.cod, leg.cod
    vnames = {leg.vmap[k]: base.vmap[k] for k in leg.dom.vertices}
    enames = {leg.emap[e]: base.emap[e] for e in leg.dom.edges}
    taken_v, taken_e = set(B.vertices), set(B.edges)
    added = []
    for v in sorted(M.vertices):
        if v not in vnames:
            vnames[v] = fresh_id(v, taken_v)
            taken_v.add(vnames[v])
    for e in sorted(M.edges):
        if e not in enames:
            enames[e] = fresh_id(e, taken_e)
            taken_e.add(enames[e])
            added.append((enames[e], vnames[M.src[e]], vnames[M.tgt[e]]))
    U = make_graph(B.category, sorted(taken_v), [(e, B.src[e], B.tgt[e]) for e in sorted(B.edges)] + added)
    return (Morphism(B, U, {v: v for v in B.vertices}, {e: e for e in B.edges}, check=False),
            Morphism(M, U, vnames, enames, check=False))


def _intersection(first, second):
    """The common part of two subgraph inclusions into ``J`` with its inclusions into both."""
    J = first.cod
    vertices = set(first.vmap.values()) & set(second.vmap.values())
    edges = set(first.emap.values()) & set(second.emap.values())
    common = subgraph(J, vertices, edges).dom

    def into(inclusion):
        return Morphism(common, inclusion.dom, {v: v for v in vertices}, {e: e for e in edges}, check=False)

    return into(first), into(second)


def _linear_compose(r2, element, r1, drop_dangling):
    if not (r1.is_linear() and r2.is_linear()):
        raise PreconditionError(message='reference compositions are only defined for linear rules')
    J = element.object
    first = _difference(J, r1.output_leg, element.right, False)
    second = _difference(J, r2.input_leg, element.left, drop_dangling)
    if first is None or second is None:
        return None
    K1_bar, j1_bar = first
    K2_bar, j2_bar = second
    to_I21, _ = _glue(j1_bar, r1.input_leg)
    to_O21, _ = _glue(j2_bar, r2.output_leg)
    p1, p2 = _intersection(K1_bar, K2_bar)
    rule = Rule(f'{r2.name}.{r1.name}', compose(to_O21, p2), compose(to_I21, p1))
    logger.debug(f'linear reference composite "{rule.name}" with |K21|={len(rule.K)}')
    return rule


def linear_compose_sqpo(r2, element, r1):
    """The SqPO composite of linear rules along a multi-sum element, or ``None`` when ``(o1, j1)`` has no pushout
    complement."""
    return _linear_compose(r2, element, r1, True)


def linear_compose_dpo(r2, element, r1):
    """The DPO composite of linear rules along a multi-sum element, or ``None`` when either complement is missing."""
    return _linear_compose(r2, element, r1, False)
