"""Intrinsic labellings of the objects built by the constructions.

The ids a construction picks depend on the ids of its inputs. To compare results up to the isomorphisms that fix
the inputs, the elements of a constructed object are labelled by where they come from: their preimage under a leg,
or their image under another. A labelling is a pair of dicts ``(vertex labels, edge labels)``; edge labels always
include the labels of the endpoints, which makes them injective wherever the vertex labels are.
"""

__all__ = [
    'raw_labels',
    'labels_key',
    'image_key',
    'cospan_labels',
    'complement_labels',
    'cover_labels',
    'quotient_labels',
    'pair_labels',
]


def raw_labels(X):
    return {v: v for v in X.vertices}, {e: e for e in X.edges}


def labels_key(labelling):
    vlabels, elabels = labelling
    return tuple(sorted([('V', label) for label in vlabels.values()] + [('E', label) for label in elabels.values()]))


def image_key(m, source=None, target=None):
    """The graph of ``m`` with both sides replaced by labels."""
    sv, se = source or raw_labels(m.dom)
    tv, te = target or raw_labels(m.cod)
    return tuple(sorted([('V', sv[v], tv[m.vmap[v]]) for v in m.dom.vertices]
                        + [('E', se[e], te[m.emap[e]]) for e in m.dom.edges]))


def _back(f):
    return {w: v for v, w in f.vmap.items()}, {d: e for e, d in f.emap.items()}


def _with_ends(X, vlabel, origin):
    return {e: origin[e] + (vlabel[X.src[e]], vlabel[X.tgt[e]]) for e in X.edges}


def cospan_labels(f, g):
    """Label ``Y`` of a jointly epic cospan ``A -f-> Y <-g- B`` of monos by its preimages, ``''`` for none."""
    Y = f.cod
    fv, fe = _back(f)
    gv, ge = _back(g)
    vlabel = {y: (fv.get(y, ''), gv.get(y, '')) for y in Y.vertices}
    return vlabel, _with_ends(Y, vlabel, {e: (fe.get(e, ''), ge.get(e, '')) for e in Y.edges})


def complement_labels(a, d, source=None, target=None):
    """Label ``P`` of ``A -a-> P -d-> D``: ``('A', .)`` on the image of ``a``, ``('D', .)`` by the image under ``d``
    elsewhere."""
    sv, se = source or raw_labels(a.dom)
    tv, te = target or raw_labels(d.cod)
    av, ae = _back(a)
    P = a.cod
    vlabel = {x: ('A', sv[av[x]]) if x in av else ('D', tv[d.vmap[x]]) for x in P.vertices}
    origin = {e: ('A', se[ae[e]]) if e in ae else ('D', te[d.emap[e]]) for e in P.edges}
    return vlabel, _with_ends(P, vlabel, origin)


def cover_labels(primary, secondary, primary_labels=None, secondary_labels=None):
    """Label the target of a jointly epic pair whose ``primary`` leg is mono: ``('P', .)`` on its image,
    ``('S', .)`` by the least labelled preimage under ``secondary`` elsewhere."""
    pv, pe = primary_labels or raw_labels(primary.dom)
    sv, se = secondary_labels or raw_labels(secondary.dom)
    Y = primary.cod
    back_v, back_e = _back(primary)
    over_v, over_e = {}, {}
    for x, y in secondary.vmap.items():
        over_v.setdefault(y, []).append(sv[x])
    for x, y in secondary.emap.items():
        over_e.setdefault(y, []).append(se[x])
    vlabel = {y: ('P', pv[back_v[y]]) if y in back_v else ('S', min(over_v[y])) for y in Y.vertices}
    origin = {e: ('P', pe[back_e[e]]) if e in back_e else ('S', min(over_e[e])) for e in Y.edges}
    return vlabel, _with_ends(Y, vlabel, origin)


def quotient_labels(e, source=None):
    """Label the target of an epi by the sorted labels of its preimages; new edges get the empty tuple."""
    sv, se = source or raw_labels(e.dom)
    blocks_v, blocks_e = {}, {}
    for x, y in e.vmap.items():
        blocks_v.setdefault(y, []).append(sv[x])
    for x, y in e.emap.items():
        blocks_e.setdefault(y, []).append(se[x])
    E = e.cod
    vlabel = {y: tuple(sorted(blocks_v.get(y, ()))) for y in E.vertices}
    origin = {d: (tuple(sorted(blocks_e.get(d, ()))),) for d in E.edges}
    return vlabel, _with_ends(E, vlabel, origin)


def pair_labels(p, q, left=None, right=None):
    """Label the apex of a jointly monic span by the pair of labels of its projections."""
    lv, le = left or raw_labels(p.cod)
    rv, re = right or raw_labels(q.cod)
    P = p.dom
    vlabel = {x: (lv[p.vmap[x]], rv[q.vmap[x]]) for x in P.vertices}
    return vlabel, {e: (le[p.emap[e]], re[q.emap[e]]) for e in P.edges}
