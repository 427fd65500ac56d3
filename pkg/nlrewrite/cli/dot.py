"""Graphviz export of diagrams: one cluster per object, dashed arrows tracing every morphism on vertices."""

import logging
import os
import subprocess

import six

__all__ = [
    'to_dot',
    'render',
]

logger = logging.getLogger('CLI')

PALETTE = ('#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#ff7f0e', '#8c564b', '#e377c2', '#17becf')


def _quote(text):
    return '"' + six.text_type(text).replace('\\', '\\\\').replace('"', '\\"') + '"'


def _node(obj, v):
    return _quote(f'{obj}/{v}')


def to_dot(diagram, traces=True):
    """The DOT source of a diagram; ``traces=False`` leaves out the morphism arrows."""
    lines = [f'digraph {_quote(diagram.name)} {{', '  compound=true;', '  node [shape=circle, fontsize=10];']
    for i, (name, X) in enumerate(six.iteritems(diagram.objects)):
        lines.append(f'  subgraph cluster_{i} {{')
        lines.append(f'    label={_quote(name)};')
        for v in sorted(X.vertices):
            lines.append(f'    {_node(name, v)} [label={_quote(v)}];')
        for e in sorted(X.edges):
            lines.append(f'    {_node(name, X.src[e])} -> {_node(name, X.tgt[e])} [label={_quote(e)}];')
        lines.append('  }')
    if traces:
        for i, (name, f) in enumerate(six.iteritems(diagram.morphisms)):
            dom, cod = diagram.arrows[name]
            color = PALETTE[i % len(PALETTE)]
            for v in sorted(f.vmap):
                lines.append(f'  {_node(dom, v)} -> {_node(cod, f.vmap[v])} '
                             f'[style=dashed, color={_quote(color)}, fontcolor={_quote(color)}, '
                             f'label={_quote(name)}, constraint=false];')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def render(dot_source, output_path, fmt=None):
    """Render DOT source with the Graphviz ``dot`` binary; the format defaults to the extension of the output.

    Returns:
        bool: whether the file was written. A missing ``dot`` binary or a failed run is logged, not raised.
    """
    fmt = fmt or os.path.splitext(output_path)[1].lstrip('.') or 'svg'
    cmd = ['dot', f'-T{fmt}', '-o', output_path]
    try:
        result = subprocess.run(cmd, input=dot_source, capture_output=True, text=True)
    except FileNotFoundError:
        logger.warning('Graphviz "dot" is not installed, nothing rendered')
        return False
    if result.returncode != 0:
        logger.warning(f'Graphviz rendering failed: {result.stderr.strip()}')
        return False
    logger.info(f'rendered {output_path}')
    return True
