"""Objects and morphisms of the categories of directed multigraphs and of directed simple graphs.

A graph is a :class:`GraphObject`: a category tag together with a payload, either a :class:`MultiGraph`
(``src``/``tgt`` maps, parallel edges and self-loops allowed) or a :class:`SimpleGraph` (an injective incidence
map ``inc``). Vertex and edge ids are opaque strings. All values are immutable once built.

Examples:
    >>> A = multigraph(['u', 'v'], [('e', 'u', 'v')])
    >>> B = multigraph(['x'], [('l', 'x', 'x')])
    >>> len(enumerate_morphisms(A, B))
    1
"""

import itertools
import logging

from nlrewrite.exceptions import CategoryMismatchError, MorphismError, PreconditionError

__all__ = [
    'MULTIGRAPH',
    'SIMPLEGRAPH',
    'CATEGORIES',
    'MultiGraph',
    'SimpleGraph',
    'GraphObject',
    'Morphism',
    'Span',
    'Cospan',
    'multigraph',
    'simplegraph',
    'make_graph',
    'empty',
    'identity',
    'compose',
    'inverse',
    'rename',
    'subgraph',
    'quotient',
    'is_mono',
    'is_epi',
    'is_iso',
    'is_regular_mono',
    'is_jointly_epic',
    'check_same_category',
    'enumerate_morphisms',
    'extensions',
    'are_isomorphic',
    'canonical_form',
    'canonical_iso',
    'fresh_id',
    'morphism_key',
    'MORPHISM_KINDS',
]

MULTIGRAPH = 'multigraph'
SIMPLEGRAPH = 'simplegraph'
CATEGORIES = (MULTIGRAPH, SIMPLEGRAPH)

MORPHISM_KINDS = ('all', 'mono', 'regular-mono', 'epi', 'iso')

logger = logging.getLogger('Graph Category')


# ======================================= OBJECTS ===================================

class MultiGraph(object):
    """Directed multigraph ``(V, E, src, tgt)``."""
    __slots__ = ('vertices', 'edges', 'src', 'tgt')

    def __init__(self, vertices, edges, src, tgt):
        self.vertices = frozenset(vertices)
        self.edges = frozenset(edges)
        self.src = dict(src)
        self.tgt = dict(tgt)
        if set(self.src) != self.edges or set(self.tgt) != self.edges:
            raise MorphismError('GraphError', 'src and tgt must be total on the edges')
        for e in self.edges:
            if self.src[e] not in self.vertices or self.tgt[e] not in self.vertices:
                raise MorphismError('GraphError', f'edge "{e}" has an endpoint outside the vertex set')


class SimpleGraph(object):
    """Directed simple graph ``(V, E, inc)`` with ``inc: E -> V x V`` injective."""
    __slots__ = ('vertices', 'edges', 'inc')

    def __init__(self, vertices, edges, inc):
        self.vertices = frozenset(vertices)
        self.edges = frozenset(edges)
        self.inc = {e: tuple(ends) for e, ends in inc.items()}
        if set(self.inc) != self.edges:
            raise MorphismError('GraphError', 'inc must be total on the edges')
        seen = {}
        for e in sorted(self.edges):
            s, t = self.inc[e]
            if s not in self.vertices or t not in self.vertices:
                raise MorphismError('GraphError', f'edge "{e}" has an endpoint outside the vertex set')
            if (s, t) in seen:
                raise MorphismError('GraphError', f'edges "{seen[(s, t)]}" and "{e}" share the endpoints '
                                                  f'({s}, {t}) in a simple graph')
            seen[(s, t)] = e

    @property
    def src(self):
        return {e: st[0] for e, st in self.inc.items()}

    @property
    def tgt(self):
        return {e: st[1] for e, st in self.inc.items()}


class GraphObject(object):
    """A finite graph tagged with its ambient category.

    The payload is a :class:`MultiGraph` for the tag ``'multigraph'`` and a :class:`SimpleGraph` for
    ``'simplegraph'``. Two graph objects are equal when they carry the same tag, the same ids and the same
    incidence.
    """

    def __init__(self, category, payload):
        if category == MULTIGRAPH and not isinstance(payload, MultiGraph):
            raise CategoryMismatchError(message='a multigraph object needs a MultiGraph payload')
        if category == SIMPLEGRAPH and not isinstance(payload, SimpleGraph):
            raise CategoryMismatchError(message='a simplegraph object needs a SimpleGraph payload')
        if category not in CATEGORIES:
            raise CategoryMismatchError(message=f'unknown category "{category}"')
        self.category = category
        self.payload = payload
        self.vertices = payload.vertices
        self.edges = payload.edges
        self.src = payload.src
        self.tgt = payload.tgt
        self._between = None
        self._key = None

    @property
    def is_simple(self):
        return self.category == SIMPLEGRAPH

    def ends(self, e):
        return self.src[e], self.tgt[e]

    def edges_between(self, u, v):
        """All edges from ``u`` to ``v``, sorted by id."""
        if self._between is None:
            between = {}
            for e in sorted(self.edges):
                between.setdefault((self.src[e], self.tgt[e]), []).append(e)
            self._between = {k: tuple(es) for k, es in between.items()}
        return self._between.get((u, v), ())

    def multiplicity(self, u, v):
        return len(self.edges_between(u, v))

    def key(self):
        if self._key is None:
            self._key = (self.category, tuple(sorted(self.vertices)),
                         tuple(sorted((e, self.src[e], self.tgt[e]) for e in self.edges)))
        return self._key

    def __eq__(self, other):
        return isinstance(other, GraphObject) and self.key() == other.key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key())

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        edges = ', '.join(f'{e}:{s}->{t}' for e, s, t in self.key()[2])
        return f'GraphObject({self.category}, V=[{", ".join(self.key()[1])}], E=[{edges}])'


def make_graph(category, vertices, edges=()):
    """Build a graph object from vertex ids and ``(id, src, tgt)`` edge triples."""
    vertices = list(vertices)
    edges = list(edges)
    if category == MULTIGRAPH:
        payload = MultiGraph(vertices, [e for e, _, _ in edges],
                             {e: s for e, s, _ in edges}, {e: t for e, _, t in edges})
    elif category == SIMPLEGRAPH:
        payload = SimpleGraph(vertices, [e for e, _, _ in edges], {e: (s, t) for e, s, t in edges})
    else:
        raise CategoryMismatchError(message=f'unknown category "{category}"')
    if len(payload.vertices) != len(vertices) or len(payload.edges) != len(edges):
        raise MorphismError('GraphError', 'vertex and edge ids must be unique')
    return GraphObject(category, payload)


def multigraph(vertices, edges=()):
    return make_graph(MULTIGRAPH, vertices, edges)


def simplegraph(vertices, edges=()):
    return make_graph(SIMPLEGRAPH, vertices, edges)


def empty(category):
    return make_graph(category, [], [])


def fresh_id(name, taken):
    """``name`` itself when unused, otherwise ``name`` primed until it is fresh."""
    while name in taken:
        name += "'"
    return name


def check_same_category(*objects):
    tags = set(x.category for x in objects)
    if len(tags) > 1:
        raise CategoryMismatchError(message=f'arguments mix the categories {", ".join(sorted(tags))}')
    return tags.pop() if tags else None


# ======================================= MORPHISMS ===================================

class Morphism(object):
    """A graph homomorphism ``(fV, fE): dom -> cod``.

    Args:
        dom (GraphObject): the domain
        cod (GraphObject): the codomain
        vmap (dict): vertex map, total on ``dom.vertices``
        emap (dict, optional): edge map, total on ``dom.edges``. For simple graphs it may be omitted, the edge
                               part is then determined by the vertex part.
        check (bool, optional): validate the commutation laws. Constructions that are correct by design pass
                                ``False``.
    """

    def __init__(self, dom, cod, vmap, emap=None, check=True):
        if dom.category != cod.category:
            raise CategoryMismatchError(message=f'morphism between a {dom.category} and a {cod.category}')
        self.dom = dom
        self.cod = cod
        self.vmap = dict(vmap)
        if emap is None:
            if not dom.is_simple:
                raise MorphismError(message='a multigraph morphism needs an explicit edge map')
            emap = {}
            for e in dom.edges:
                s, t = dom.ends(e)
                if s not in self.vmap or t not in self.vmap:
                    raise MorphismError(message=f'vertex map is not total on the endpoints of "{e}"')
                image = cod.edges_between(self.vmap[s], self.vmap[t])
                if not image:
                    raise MorphismError(message=f'no edge {self.vmap[s]}->{self.vmap[t]} to receive "{e}"')
                emap[e] = image[0]
        self.emap = dict(emap)
        self._key = None
        if check:
            self._validate()

    def _validate(self):
        if set(self.vmap) != set(self.dom.vertices):
            raise MorphismError(message='vertex map is not total on the domain')
        if set(self.emap) != set(self.dom.edges):
            raise MorphismError(message='edge map is not total on the domain')
        for v, w in self.vmap.items():
            if w not in self.cod.vertices:
                raise MorphismError(message=f'vertex "{v}" is sent outside the codomain')
        for e, f in self.emap.items():
            if f not in self.cod.edges:
                raise MorphismError(message=f'edge "{e}" is sent outside the codomain')
            if self.vmap[self.dom.src[e]] != self.cod.src[f] or self.vmap[self.dom.tgt[e]] != self.cod.tgt[f]:
                raise MorphismError(message=f'edge "{e}" is not sent to an edge between the images of its endpoints')

    @classmethod
    def from_vertex_map(cls, dom, cod, vmap):
        return cls(dom, cod, vmap, None)

    @property
    def category(self):
        return self.dom.category

    def key(self):
        if self._key is None:
            self._key = morphism_key(self)
        return self._key

    def __eq__(self, other):
        return (isinstance(other, Morphism) and self.dom == other.dom and self.cod == other.cod
                and self.vmap == other.vmap and self.emap == other.emap)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.dom, self.cod, self.key()))

    def __repr__(self):
        vm = ', '.join(f'{v}->{self.vmap[v]}' for v in sorted(self.vmap))
        em = ', '.join(f'{e}->{self.emap[e]}' for e in sorted(self.emap))
        return f'Morphism(V: {{{vm}}}, E: {{{em}}})'


def morphism_key(f):
    """Images of the sorted domain vertices, then of the sorted domain edges."""
    return (tuple(f.vmap[v] for v in sorted(f.dom.vertices)),
            tuple(f.emap[e] for e in sorted(f.dom.edges)))


def identity(X):
    return Morphism(X, X, {v: v for v in X.vertices}, {e: e for e in X.edges}, check=False)


def compose(g, f):
    """The composite ``g o f``: first ``f``, then ``g``."""
    if f.category != g.category:
        raise CategoryMismatchError(message='cannot compose morphisms of different categories')
    if f.cod != g.dom:
        raise MorphismError(message='cannot compose: the codomain of the first morphism is not the domain '
                                    'of the second')
    return Morphism(f.dom, g.cod, {v: g.vmap[w] for v, w in f.vmap.items()},
                    {e: g.emap[d] for e, d in f.emap.items()}, check=False)


def inverse(f):
    if not is_iso(f):
        raise PreconditionError(message='only isomorphisms can be inverted')
    return Morphism(f.cod, f.dom, {w: v for v, w in f.vmap.items()}, {d: e for e, d in f.emap.items()},
                    check=False)


def rename(X, vertex_names=None, edge_names=None):
    """Rename the ids of ``X``; ids missing from the maps keep their name.

    Returns:
        Morphism: the renaming isomorphism ``X -> X'``.
    """
    vertex_names = vertex_names or {}
    edge_names = edge_names or {}
    vmap = {v: vertex_names.get(v, v) for v in X.vertices}
    emap = {e: edge_names.get(e, e) for e in X.edges}
    if len(set(vmap.values())) != len(vmap) or len(set(emap.values())) != len(emap):
        raise MorphismError(message='renaming is not injective')
    Y = make_graph(X.category, vmap.values(), [(emap[e], vmap[X.src[e]], vmap[X.tgt[e]]) for e in X.edges])
    return Morphism(X, Y, vmap, emap, check=False)


def subgraph(X, vertices, edges):
    """The subgraph on the given ids together with its inclusion into ``X``."""
    vertices = set(vertices)
    edges = set(edges)
    for e in edges:
        if X.src[e] not in vertices or X.tgt[e] not in vertices:
            raise MorphismError(message=f'edge "{e}" leaves the chosen vertex set')
    S = make_graph(X.category, vertices, [(e, X.src[e], X.tgt[e]) for e in edges])
    return Morphism(S, X, {v: v for v in vertices}, {e: e for e in edges}, check=False)


def quotient(X, vertex_blocks, edge_blocks=None, extra_edges=()):
    """The quotient map ``X -> Q`` collapsing each block to its least id.

    Args:
        X (GraphObject): the graph to divide
        vertex_blocks (list): a partition of ``X.vertices``
        edge_blocks (list, optional): a partition of ``X.edges`` whose blocks only hold edges with the same endpoint
                                      blocks. Multigraphs default to singletons; simple graphs ignore it and
                                      collapse the edges with equal endpoints instead.
        extra_edges (list, optional): ``(src, tgt)`` pairs of block names receiving a new edge. Simple graphs only.

    Returns:
        Morphism: the quotient map, an epimorphism.
    """
    vname = {}
    for block in vertex_blocks:
        name = min(block)
        for v in block:
            vname[v] = name
    if set(vname) != set(X.vertices):
        raise MorphismError(message='vertex blocks do not partition the vertices')
    ename = {}
    edges = []
    if X.is_simple:
        by_ends = {}
        for e in sorted(X.edges):
            by_ends.setdefault((vname[X.src[e]], vname[X.tgt[e]]), []).append(e)
        for (s, t), group in sorted(by_ends.items()):
            edges.append((group[0], s, t))
            for e in group:
                ename[e] = group[0]
        taken = set(ename)
        for s, t in extra_edges:
            if (s, t) in by_ends:
                raise MorphismError(message=f'extra edge {s}->{t} duplicates an existing edge')
            name = fresh_id(f'e({s},{t})', taken)
            taken.add(name)
            by_ends[(s, t)] = [name]
            edges.append((name, s, t))
    else:
        if extra_edges:
            raise MorphismError(message='quotients of multigraphs never add edges')
        for block in (edge_blocks if edge_blocks is not None else [[e] for e in X.edges]):
            name = min(block)
            ends = set((vname[X.src[e]], vname[X.tgt[e]]) for e in block)
            if len(ends) != 1:
                raise MorphismError(message=f'edge block of "{name}" mixes endpoint blocks')
            s, t = ends.pop()
            edges.append((name, s, t))
            for e in block:
                ename[e] = name
        if set(ename) != set(X.edges):
            raise MorphismError(message='edge blocks do not partition the edges')
    Q = make_graph(X.category, sorted(set(vname.values())), edges)
    return Morphism(X, Q, vname, ename, check=False)


# ======================================= PREDICATES ===================================

def _injective(mapping):
    return len(set(mapping.values())) == len(mapping)


def _surjective(mapping, target):
    return set(mapping.values()) == set(target)


def is_mono(f):
    if f.dom.is_simple:
        return _injective(f.vmap)
    return _injective(f.vmap) and _injective(f.emap)


def is_epi(f):
    if f.dom.is_simple:
        return _surjective(f.vmap, f.cod.vertices)
    return _surjective(f.vmap, f.cod.vertices) and _surjective(f.emap, f.cod.edges)


def is_iso(f):
    return (_injective(f.vmap) and _injective(f.emap) and _surjective(f.vmap, f.cod.vertices)
            and _surjective(f.emap, f.cod.edges))


def _is_edge_reflecting(f):
    image_v = set(f.vmap.values())
    image_e = set(f.emap.values())
    for e in f.cod.edges:
        if f.cod.src[e] in image_v and f.cod.tgt[e] in image_v and e not in image_e:
            return False
    return True


def is_regular_mono(f):
    """Regular monos: every mono of multigraphs, the edge-reflecting monos of simple graphs."""
    if not is_mono(f):
        return False
    if f.dom.is_simple:
        return _is_edge_reflecting(f)
    return True


def is_jointly_epic(f, g):
    if f.cod != g.cod:
        raise MorphismError(message='jointly epic pairs need a common codomain')
    vertices = set(f.vmap.values()) | set(g.vmap.values())
    if vertices != set(f.cod.vertices):
        return False
    if f.cod.is_simple:
        return True
    return set(f.emap.values()) | set(g.emap.values()) == set(f.cod.edges)


# ======================================= HOM-SET SEARCH ===================================

def _vertex_signature(X, v):
    out_deg = sum(1 for e in X.edges if X.src[e] == v)
    in_deg = sum(1 for e in X.edges if X.tgt[e] == v)
    return out_deg, in_deg, X.multiplicity(v, v)


def _vertex_maps(A, B, injective=False, candidates=None):
    """Backtrack over vertex maps ``A -> B`` that leave room for every edge of ``A``."""
    order = sorted(A.vertices)
    position = {v: i for i, v in enumerate(order)}
    closing = {v: [] for v in order}
    for e in sorted(A.edges):
        s, t = A.ends(e)
        closing[order[max(position[s], position[t])]].append((s, t))
    targets = sorted(B.vertices)
    assigned = {}
    used = set()

    def extend(i):
        if i == len(order):
            yield dict(assigned)
            return
        v = order[i]
        for w in (candidates[v] if candidates is not None else targets):
            if injective and w in used:
                continue
            assigned[v] = w
            if all(B.edges_between(assigned[s], assigned[t]) for s, t in closing[v]):
                used.add(w)
                for result in extend(i + 1):
                    yield result
                used.discard(w)
            del assigned[v]

    return extend(0)


def _edge_maps(A, B, vmap, injective=False):
    edges = sorted(A.edges)
    options = [B.edges_between(vmap[A.src[e]], vmap[A.tgt[e]]) for e in edges]
    if A.is_simple:
        yield {e: opts[0] for e, opts in zip(edges, options)}
        return
    for choice in itertools.product(*options):
        if injective and len(set(choice)) != len(choice):
            continue
        yield dict(zip(edges, choice))


def _search(A, B, injective=False, candidates=None):
    for vmap in _vertex_maps(A, B, injective, candidates):
        for emap in _edge_maps(A, B, vmap, injective):
            yield Morphism(A, B, vmap, emap, check=False)


def extensions(A, B, vmap=None, emap=None, injective=False):
    """Morphisms ``A -> B`` agreeing with the given partial vertex and edge maps, in hom-set order."""
    vmap = vmap or {}
    emap = emap or {}
    if any(w not in B.vertices for w in vmap.values()) or any(d not in B.edges for d in emap.values()):
        return
    targets = sorted(B.vertices)
    candidates = {v: [vmap[v]] if v in vmap else targets for v in A.vertices}
    for vm in _vertex_maps(A, B, injective, candidates):
        for em in _edge_maps(A, B, vm, injective):
            if all(em[e] == d for e, d in emap.items()):
                yield Morphism(A, B, vm, em, check=False)


def enumerate_morphisms(A, B, kind='all'):
    """All morphisms ``A -> B`` of the given kind.

    Args:
        A (GraphObject): the domain
        B (GraphObject): the codomain
        kind (str, optional): one of ``'all'``, ``'mono'``, ``'regular-mono'``, ``'epi'``, ``'iso'``

    Returns:
        list: the morphisms, ordered lexicographically by the images of the sorted domain vertices and then of the
              sorted domain edges.
    """
    check_same_category(A, B)
    if kind not in MORPHISM_KINDS:
        raise ValueError(f'unknown morphism kind "{kind}", expected one of {", ".join(MORPHISM_KINDS)}')
    if kind == 'iso':
        if len(A.vertices) != len(B.vertices) or len(A.edges) != len(B.edges):
            return []
        candidates = _iso_candidates(A, B)
        if candidates is None:
            return []
        return sorted((f for f in _search(A, B, True, candidates) if is_iso(f)), key=morphism_key)
    injective = kind in ('mono', 'regular-mono')
    found = _search(A, B, injective)
    if kind == 'regular-mono':
        found = (f for f in found if is_regular_mono(f))
    elif kind == 'epi':
        found = (f for f in found if is_epi(f))
    return sorted(found, key=morphism_key)


def _iso_candidates(A, B):
    by_signature = {}
    for w in sorted(B.vertices):
        by_signature.setdefault(_vertex_signature(B, w), []).append(w)
    candidates = {}
    for v in A.vertices:
        options = by_signature.get(_vertex_signature(A, v))
        if not options:
            return None
        candidates[v] = options
    return candidates


def are_isomorphic(A, B):
    """A witnessing isomorphism ``A -> B`` (the first in hom-set order), or ``None``."""
    check_same_category(A, B)
    if len(A.vertices) != len(B.vertices) or len(A.edges) != len(B.edges):
        return None
    if _certificate(A) != _certificate(B):
        return None
    candidates = _iso_candidates(A, B)
    if candidates is None:
        return None
    for f in _search(A, B, True, candidates):
        if is_iso(f):
            return f
    return None


# ======================================= CANONICAL FORM ===================================

def _refine(X, cells):
    """Split the ordered cells until every vertex of a cell sees every cell the same way."""
    cells = [list(c) for c in cells]
    while True:
        for splitter in list(cells):
            targets = set(splitter)
            refined = []
            for cell in cells:
                if len(cell) == 1:
                    refined.append(cell)
                    continue
                groups = {}
                for v in cell:
                    out_count = sum(X.multiplicity(v, w) for w in targets)
                    in_count = sum(X.multiplicity(w, v) for w in targets)
                    groups.setdefault((out_count, in_count), []).append(v)
                refined.extend(groups[k] for k in sorted(groups))
            if len(refined) != len(cells):
                cells = refined
                break
        else:
            return cells


def _are_twins(X, u, v):
    if X.multiplicity(u, u) != X.multiplicity(v, v) or X.multiplicity(u, v) != X.multiplicity(v, u):
        return False
    for w in X.vertices:
        if w in (u, v):
            continue
        if X.multiplicity(u, w) != X.multiplicity(v, w) or X.multiplicity(w, u) != X.multiplicity(w, v):
            return False
    return True


def _leaves(X, cells):
    cells = _refine(X, cells)
    for i, cell in enumerate(cells):
        if len(cell) > 1:
            break
    else:
        yield [c[0] for c in cells]
        return
    ordered = sorted(cell)
    # swapping twins is an automorphism, one branch covers them all
    branches = ordered[:1] if all(_are_twins(X, ordered[0], v) for v in ordered[1:]) else ordered
    for v in branches:
        rest = [w for w in cell if w != v]
        for leaf in _leaves(X, cells[:i] + [[v], rest] + cells[i + 1:]):
            yield leaf


def _certificate_of(X, order):
    index = {v: i for i, v in enumerate(order)}
    return len(order), tuple(sorted((index[X.src[e]], index[X.tgt[e]]) for e in X.edges))


def _canonical_order(X):
    initial = {}
    for v in X.vertices:
        initial.setdefault(X.multiplicity(v, v), []).append(v)
    cells = [initial[k] for k in sorted(initial)]
    best = None
    for order in _leaves(X, cells):
        cert = _certificate_of(X, order)
        if best is None or cert < best[0]:
            best = (cert, order)
    if best is None:
        return (0, ()), []
    return best


def _certificate(X):
    return X.category, _canonical_order(X)[0]


def canonical_iso(X):
    """The isomorphism from ``X`` onto its canonical form."""
    _, order = _canonical_order(X)
    index = {v: i for i, v in enumerate(order)}
    vmap = {v: f'v{index[v]}' for v in X.vertices}
    ranked = sorted(X.edges, key=lambda e: (index[X.src[e]], index[X.tgt[e]], e))
    emap = {e: f'e{i}' for i, e in enumerate(ranked)}
    Y = make_graph(X.category, [f'v{i}' for i in range(len(order))],
                   [(emap[e], vmap[X.src[e]], vmap[X.tgt[e]]) for e in ranked])
    return Morphism(X, Y, vmap, emap, check=False)


def canonical_form(X):
    """Isomorphic graphs have identical canonical forms, with vertices ``v0..`` and edges ``e0..``."""
    return canonical_iso(X).cod


# ======================================= SPANS ===================================

class Span(object):
    """Two morphisms out of a common apex: ``left.cod <- apex -> right.cod``."""

    def __init__(self, left, right):
        check_same_category(left.dom, right.dom)
        if left.dom != right.dom:
            raise MorphismError(message='span legs must share their domain')
        self.left = left
        self.right = right

    @property
    def apex(self):
        return self.left.dom

    @property
    def category(self):
        return self.left.category

    def __iter__(self):
        return iter((self.left, self.right))

    def __repr__(self):
        return f'Span({self.left!r}, {self.right!r})'


class Cospan(object):
    """Two morphisms into a common target: ``left.dom -> target <- right.dom``."""

    def __init__(self, left, right):
        check_same_category(left.cod, right.cod)
        if left.cod != right.cod:
            raise MorphismError(message='cospan legs must share their codomain')
        self.left = left
        self.right = right

    @property
    def target(self):
        return self.left.cod

    @property
    def category(self):
        return self.left.category

    def __iter__(self):
        return iter((self.left, self.right))

    def __repr__(self):
        return f'Cospan({self.left!r}, {self.right!r})'
