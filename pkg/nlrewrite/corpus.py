"""Finite graph corpora: exhaustive enumeration of small graphs up to isomorphism and seeded random instances.

The oracles draw their competitor objects from :func:`all_graphs`; the CLI ``oracle`` command and the property tests
draw random squares from :func:`random_graph` and :func:`random_morphism`.
"""

import itertools
import logging
import random

from nlrewrite.graphcat import canonical_form, enumerate_morphisms, make_graph, MULTIGRAPH

__all__ = [
    'set_partitions',
    'all_graphs',
    'random_graph',
    'random_morphism',
    'make_rng',
]

logger = logging.getLogger('Corpus')

_GRAPH_CACHE = {}


def set_partitions(items):
    """Every partition of ``items`` into blocks, as lists of lists. Blocks keep the order of ``items``."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        yield [[first]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]


def all_graphs(category, max_vertices, max_edges):
    """All graphs with at most the given numbers of vertices and edges, one per isomorphism class.

    The graphs are in canonical form and sorted by size, then by their canonical key.
    """
    cache_key = (category, max_vertices, max_edges)
    if cache_key in _GRAPH_CACHE:
        return list(_GRAPH_CACHE[cache_key])
    found = {}
    for n in range(max_vertices + 1):
        vertices = [f'v{i}' for i in range(n)]
        pairs = list(itertools.product(vertices, repeat=2))
        for k in range(max_edges + 1):
            if category == MULTIGRAPH:
                choices = itertools.combinations_with_replacement(pairs, k)
            else:
                choices = itertools.combinations(pairs, k)
            for chosen in choices:
                X = make_graph(category, vertices, [(f'e{i}', s, t) for i, (s, t) in enumerate(chosen)])
                C = canonical_form(X)
                found.setdefault(C.key(), C)
    graphs = sorted(found.values(), key=lambda X: (len(X.vertices), len(X.edges), X.key()))
    logger.debug(f'{len(graphs)} {category} objects with <= {max_vertices} vertices and <= {max_edges} edges')
    _GRAPH_CACHE[cache_key] = tuple(graphs)
    return graphs


def make_rng(seed=None):
    return random.Random(seed)


def random_graph(category, rng, max_vertices=3, max_edges=3, prefix='v'):
    """A random graph with vertices ``<prefix>0..`` and edges ``e0..``."""
    n = rng.randint(0, max_vertices)
    vertices = [f'{prefix}{i}' for i in range(n)]
    if not vertices:
        return make_graph(category, [], [])
    pairs = list(itertools.product(vertices, repeat=2))
    k = rng.randint(0, max_edges)
    if category == MULTIGRAPH:
        chosen = [rng.choice(pairs) for _ in range(k)]
    else:
        chosen = rng.sample(pairs, min(k, len(pairs)))
    return make_graph(category, vertices, [(f'e{i}', s, t) for i, (s, t) in enumerate(chosen)])


def random_morphism(A, B, rng, kind='all'):
    """A uniformly chosen morphism ``A -> B`` of the given kind, or ``None`` when there is none."""
    candidates = enumerate_morphisms(A, B, kind)
    if not candidates:
        return None
    return rng.choice(candidates)
