"""Rules and hosts shared by the test modules and the acceptance runner."""

import os

from nlrewrite.corpus import all_graphs
from nlrewrite.graphcat import MULTIGRAPH, SIMPLEGRAPH, Morphism, enumerate_morphisms, identity, make_graph
from nlrewrite.rewrite import Rule

__all__ = [
    'graph',
    'vertex_map',
    'identity_rule',
    'clone_rule',
    'looped_clone_rule',
    'delete_rule',
    'merge_rule',
    'looped_merge_rule',
    'add_edge_rule',
    'delete_edge_rule',
    'add_vertex_rule',
    'looped_vertex',
    'star',
    'LINEAR_PAIRS',
    'NONLINEAR_PAIRS',
    'ALL_PAIRS',
    'FULL_CORPUS',
    'corpus_hosts',
    'complement_cases',
]


def graph(category, vertices, edges=()):
    return make_graph(category, vertices, edges)


def vertex_map(dom, cod, vmap, emap=None):
    if dom.is_simple:
        return Morphism.from_vertex_map(dom, cod, vmap)
    return Morphism(dom, cod, vmap, emap or {})


def identity_rule(category=MULTIGRAPH):
    return Rule.identity(graph(category, ['x']), 'id')


def clone_rule(category=MULTIGRAPH):
    """Copy a vertex without its edges: ``I = x``, ``K = k1 k2``, both copies kept."""
    I = graph(category, ['x'])
    K = graph(category, ['k1', 'k2'])
    return Rule('clone', identity(K), vertex_map(K, I, {'k1': 'x', 'k2': 'x'}))


def looped_clone_rule():
    """Simple-graph cloning of a looped vertex into two looped vertices joined both ways."""
    I = graph(SIMPLEGRAPH, ['x'], [('l', 'x', 'x')])
    K = graph(SIMPLEGRAPH, ['k1', 'k2'], [('a', 'k1', 'k1'), ('b', 'k1', 'k2'), ('c', 'k2', 'k1'), ('d', 'k2', 'k2')])
    return Rule('clone', identity(K), vertex_map(K, I, {'k1': 'x', 'k2': 'x'}))


def delete_rule(category=MULTIGRAPH):
    """Delete a vertex: ``I = x``, ``K = O`` empty."""
    I = graph(category, ['x'])
    K = graph(category, [])
    return Rule('delete', identity(K), vertex_map(K, I, {}))


def merge_rule(category=MULTIGRAPH):
    """Fuse two vertices: ``I = K = x y``, ``O = z``."""
    K = graph(category, ['x', 'y'])
    O = graph(category, ['z'])
    return Rule('merge', vertex_map(K, O, {'x': 'z', 'y': 'z'}), identity(K))


def looped_merge_rule():
    """Fuse two looped vertices of a multigraph, keeping both loops."""
    K = graph(MULTIGRAPH, ['y1', 'y2'], [('p1', 'y1', 'y1'), ('p2', 'y2', 'y2')])
    O = graph(MULTIGRAPH, ['z'], [('p1', 'z', 'z'), ('p2', 'z', 'z')])
    return Rule('fuse', Morphism(K, O, {'y1': 'z', 'y2': 'z'}, {'p1': 'p1', 'p2': 'p2'}), identity(K))


def add_edge_rule(category=MULTIGRAPH):
    K = graph(category, ['x', 'y'])
    O = graph(category, ['x', 'y'], [('e', 'x', 'y')])
    return Rule('add-edge', vertex_map(K, O, {'x': 'x', 'y': 'y'}), identity(K))


def delete_edge_rule(category=MULTIGRAPH):
    I = graph(category, ['x', 'y'], [('e', 'x', 'y')])
    K = graph(category, ['x', 'y'])
    return Rule('delete-edge', identity(K), vertex_map(K, I, {'x': 'x', 'y': 'y'}))


def add_vertex_rule(category=MULTIGRAPH):
    K = graph(category, [])
    O = graph(category, ['w'])
    return Rule('add-vertex', vertex_map(K, O, {}), identity(K))


def looped_vertex(category=MULTIGRAPH):
    return graph(category, ['v'], [('l', 'v', 'v')])


def star(category=MULTIGRAPH, leaves=3):
    """A center ``c`` with an edge to each leaf."""
    names = [f'l{i}' for i in range(1, leaves + 1)]
    return graph(category, ['c'] + names, [(f'e{i}', 'c', name) for i, name in enumerate(names, 1)])


# (first rule, second rule) pairs
LINEAR_PAIRS = [
    (add_edge_rule, delete_edge_rule),
    (delete_edge_rule, add_edge_rule),
    (add_vertex_rule, delete_rule),
    (add_edge_rule, add_edge_rule),
]

NONLINEAR_PAIRS = [
    (clone_rule, merge_rule),
    (merge_rule, clone_rule),
    (clone_rule, delete_rule),
    (delete_rule, clone_rule),
]

ALL_PAIRS = LINEAR_PAIRS + NONLINEAR_PAIRS

# exhaustive corpus runs are opt-in
FULL_CORPUS = os.environ.get('NLREWRITE_FULL_CORPUS', '') not in ('', '0', 'false', 'False')


def corpus_hosts(category=MULTIGRAPH):
    if FULL_CORPUS:
        return all_graphs(category, 4, 2)
    return all_graphs(category, 2, 1)


def complement_cases(category):
    """Every ``A -f-> B -b-> D`` over the graph corpus with ``b`` a regular mono."""
    sizes = ((2, 1), (2, 1), (3, 3)) if FULL_CORPUS else ((2, 1), (1, 1), (3, 2))
    As, Bs, Ds = [all_graphs(category, *size) for size in sizes]
    for D in Ds:
        for B in Bs:
            for b in enumerate_morphisms(B, D, 'regular-mono'):
                for A in As:
                    for f in enumerate_morphisms(A, B):
                        yield f, b
