"""Flat-file documents for graphs, rules and diagrams.

A file holds one or more documents. Each document opens with ``graph NAME``, ``rule NAME`` or ``diagram NAME`` and
closes with ``end``; ``#`` starts a comment. Rules and diagrams hold ``object NAME ... end`` and
``morphism NAME DOM COD ... end`` blocks::

    rule clone
      category multigraph
      object I
        vertex x
      end
      object K
        vertex k1
        vertex k2
      end
      object O
        vertex k1
        vertex k2
      end
      morphism input K I
        vmap k1 x
        vmap k2 x
      end
      morphism output K O
        vmap k1 k1
        vmap k2 k2
      end
    end

A rule has exactly the objects ``I``, ``K``, ``O`` and the morphisms ``input: K -> I`` and ``output: K -> O``.
Serialization writes vertices, edges and map entries sorted by id, so parsing then serializing canonicalizes a
document.
"""

import codecs
import logging
import os

import six

from nlrewrite.exceptions import ParseError, RewriteError, make_error
from nlrewrite.graphcat import CATEGORIES, Morphism, make_graph
from nlrewrite.rewrite import Rule

__all__ = [
    'Document',
    'Diagram',
    'parse_documents',
    'serialize_graph',
    'serialize_rule',
    'serialize_diagram',
    'serialize',
    'load_documents',
    'load_graph',
    'load_rule',
    'load_diagram',
    'get_file_contents',
    'write_file_contents',
]

logger = logging.getLogger('CLI')

GRAPH = 'graph'
RULE = 'rule'
DIAGRAM = 'diagram'
KINDS = (GRAPH, RULE, DIAGRAM)

INDENT = '  '


def path_as_local(path):
    if os.path.isabs(path):
        return path
    return os.path.join(os.getcwd(), path)


def get_file_contents(path_or_file):
    if hasattr(path_or_file, 'read'):
        text = path_or_file.read()
    else:
        with codecs.open(path_as_local(path_or_file), 'r', 'utf-8') as f:
            text = f.read()
    return text


def write_file_contents(path_or_file, contents):
    if hasattr(path_or_file, 'write'):
        path_or_file.write(contents)
    else:
        with codecs.open(path_as_local(path_or_file), 'w', 'utf-8') as f:
            f.write(contents)


class Diagram(object):
    """Named objects and named morphisms between them, in insertion order."""

    def __init__(self, name, category=None):
        self.name = name
        self.category = category
        self.objects = {}
        self.morphisms = {}
        self.arrows = {}

    def add_object(self, name, X):
        if self.category is None:
            self.category = X.category
        self.objects[name] = X
        return self

    def add_morphism(self, name, dom, cod, f):
        """Add ``f: dom -> cod``, registering its end objects under ``dom`` and ``cod`` when they are new."""
        self.objects.setdefault(dom, f.dom)
        self.objects.setdefault(cod, f.cod)
        if self.category is None:
            self.category = f.category
        self.morphisms[name] = f
        self.arrows[name] = (dom, cod)
        return self

    def morphism(self, name):
        if name not in self.morphisms:
            raise make_error('ParseError', f'diagram "{self.name}" has no morphism "{name}"')
        return self.morphisms[name]

    @classmethod
    def from_rule(cls, rule):
        return (cls(rule.name, rule.category)
                .add_morphism('input', 'K', 'I', rule.input_leg)
                .add_morphism('output', 'K', 'O', rule.output_leg))

    @classmethod
    def from_arrows(cls, name, morphisms, arrows):
        diagram = cls(name)
        for key, (dom, cod) in six.iteritems(arrows):
            diagram.add_morphism(key, dom, cod, morphisms[key])
        return diagram

    @classmethod
    def from_derivation(cls, d, name='derivation'):
        """The two squares of a derivation, with the canonical result attached to the computed one."""
        return (cls(name, d.rule.category)
                .add_morphism('output', 'K', 'O', d.rule.output_leg)
                .add_morphism('input', 'K', 'I', d.rule.input_leg)
                .add_morphism('match', 'I', 'X', d.m)
                .add_morphism('k_to_complement', 'K', 'C', d.k_to_complement)
                .add_morphism('complement_to_host', 'C', 'X', d.complement_to_host)
                .add_morphism('comatch', 'O', 'Y', d.comatch)
                .add_morphism('complement_to_result', 'C', 'Y', d.complement_to_result)
                .add_morphism('canonical', 'Y', 'result', d.canonical_iso))

    @classmethod
    def from_composite(cls, composite, name='witness'):
        return cls.from_arrows(name, composite.morphisms, composite.arrows)

    def __repr__(self):
        return f'Diagram({self.name!r}, objects={list(self.objects)}, morphisms={list(self.morphisms)})'


class Document(object):
    """A parsed document: ``kind`` is ``graph``, ``rule`` or ``diagram`` and ``value`` the object built from it."""

    def __init__(self, kind, name, value, line):
        self.kind = kind
        self.name = name
        self.value = value
        self.line = line

    def __repr__(self):
        return f'Document({self.kind}, {self.name!r}, line {self.line})'


# ======================================= PARSING ===================================

class _Frame(object):
    def __init__(self, kind, name, line, args=()):
        self.kind = kind
        self.name = name
        self.line = line
        self.args = args
        self.category = None
        self.vertices = []
        self.edges = []
        self.vmap = {}
        self.emap = {}
        self.objects = {}
        self.morphisms = []


class _Parser(object):
    def __init__(self, text, category=None):
        if isinstance(text, six.binary_type):
            text = text.decode('utf-8')
        self.lines = text.splitlines()
        self.default_category = category
        self.stack = []
        self.documents = []

    def parse(self):
        for number, raw in enumerate(self.lines, 1):
            tokens = raw.split('#', 1)[0].split()
            if tokens:
                self.feed(number, tokens[0], tokens[1:])
        if self.stack:
            frame = self.stack[-1]
            raise make_error('ParseError', f'{frame.kind} "{frame.name}" is never closed with "end"', line=frame.line)
        return self.documents

    def expect(self, number, keyword, args, count):
        if len(args) != count:
            raise make_error('ParseError', f'"{keyword}" takes {count} argument{"s" if count != 1 else ""}, '
                             f'got {len(args)}', line=number)

    def feed(self, number, keyword, args):
        frame = self.stack[-1] if self.stack else None
        if frame is None:
            if keyword not in KINDS:
                raise make_error('ParseError', f'expected graph, rule or diagram, got "{keyword}"', line=number)
            self.expect(number, keyword, args, 1)
            self.stack.append(_Frame(keyword, args[0], number))
        elif keyword == 'end':
            self.expect(number, keyword, args, 0)
            self.close(number)
        elif keyword == 'category':
            self.expect(number, keyword, args, 1)
            if frame.kind not in KINDS:
                raise make_error('ParseError', '"category" belongs to the enclosing document', line=number)
            if args[0] not in CATEGORIES:
                raise make_error('ParseError', f'unknown category "{args[0]}"', line=number)
            if self.default_category is not None and args[0] != self.default_category:
                raise make_error('CategoryMismatchError',
                                 f'line {number}: document "{frame.name}" is a {args[0]}, '
                                 f'expected a {self.default_category}')
            frame.category = args[0]
        elif keyword in ('vertex', 'edge') and frame.kind in (GRAPH, 'object'):
            if keyword == 'vertex':
                self.expect(number, keyword, args, 1)
                frame.vertices.append(args[0])
            else:
                self.expect(number, keyword, args, 3)
                frame.edges.append(tuple(args))
        elif keyword in ('vmap', 'emap') and frame.kind == 'morphism':
            self.expect(number, keyword, args, 2)
            mapping = frame.vmap if keyword == 'vmap' else frame.emap
            if args[0] in mapping:
                raise make_error('ParseError', f'"{args[0]}" is mapped twice', line=number)
            mapping[args[0]] = args[1]
        elif keyword == 'object' and frame.kind in (RULE, DIAGRAM):
            self.expect(number, keyword, args, 1)
            if args[0] in frame.objects:
                raise make_error('ParseError', f'object "{args[0]}" is declared twice', line=number)
            self.stack.append(_Frame('object', args[0], number))
        elif keyword == 'morphism' and frame.kind in (RULE, DIAGRAM):
            self.expect(number, keyword, args, 3)
            for name in args[1:]:
                if name not in frame.objects:
                    raise make_error('ParseError', f'object "{name}" is not declared before morphism "{args[0]}"',
                                     line=number)
            self.stack.append(_Frame('morphism', args[0], number, tuple(args[1:])))
        else:
            raise make_error('ParseError', f'unexpected "{keyword}" inside {frame.kind} "{frame.name}"', line=number)

    def category_of(self, frame):
        for enclosing in reversed(self.stack):
            if enclosing.category is not None:
                return enclosing.category
        if self.default_category is not None:
            return self.default_category
        raise make_error('ParseError', f'{frame.kind} "{frame.name}" has no category', line=frame.line)

    def close(self, number):
        frame = self.stack[-1]
        category = self.category_of(frame) if frame.kind in (GRAPH, 'object') else None
        self.stack.pop()
        if frame.kind in (GRAPH, 'object'):
            value = self.build(frame, lambda: make_graph(category, frame.vertices, frame.edges))
            if frame.kind == 'object':
                self.stack[-1].objects[frame.name] = value
                return
        elif frame.kind == 'morphism':
            owner = self.stack[-1]
            dom, cod = (owner.objects[name] for name in frame.args)
            emap = frame.emap if frame.emap or not dom.is_simple else None
            value = self.build(frame, lambda: Morphism(dom, cod, frame.vmap, emap))
            owner.morphisms.append((frame.name, frame.args, value))
            return
        elif frame.kind == RULE:
            value = self.rule(frame)
        else:
            value = Diagram(frame.name, frame.category or self.default_category)
            for name, X in six.iteritems(frame.objects):
                value.add_object(name, X)
            for name, (dom, cod), f in frame.morphisms:
                value.add_morphism(name, dom, cod, f)
        self.documents.append(Document(frame.kind, frame.name, value, frame.line))
        logger.debug(f'parsed {frame.kind} "{frame.name}" (lines {frame.line}-{number})')

    def build(self, frame, constructor):
        try:
            return constructor()
        except ParseError:
            raise
        except RewriteError as e:
            raise make_error('ParseError', f'{frame.kind} "{frame.name}": {e.message}', line=frame.line)

    def rule(self, frame):
        if sorted(frame.objects) != ['I', 'K', 'O']:
            raise make_error('ParseError', f'rule "{frame.name}" needs exactly the objects I, K and O', line=frame.line)
        legs = {name: (args, f) for name, args, f in frame.morphisms}
        if sorted(legs) != ['input', 'output'] or legs['input'][0] != ('K', 'I') or legs['output'][0] != ('K', 'O'):
            raise make_error('ParseError', f'rule "{frame.name}" needs exactly the morphisms "input K I" and '
                             f'"output K O"', line=frame.line)
        return self.build(frame, lambda: Rule(frame.name, legs['output'][1], legs['input'][1]))


def parse_documents(text, category=None):
    """Parse every document in ``text``.

    Args:
        text (str): the file contents
        category (str, optional): the category of documents without a ``category`` line; documents declaring
                                  another category are rejected

    Raises:
        ParseError: malformed input, reported with its line number.
        CategoryMismatchError: a document declares a category other than ``category``.
    """
    return _Parser(text, category).parse()


# ======================================= SERIALIZATION ===================================

def _check_id(name):
    if not name or any(c.isspace() for c in name) or '#' in name:
        raise make_error('ParseError', f'id "{name}" cannot be written to a document')
    return name


def _graph_lines(X, depth):
    pad = INDENT * depth
    lines = [f'{pad}vertex {_check_id(v)}' for v in sorted(X.vertices)]
    lines.extend(f'{pad}edge {_check_id(e)} {X.src[e]} {X.tgt[e]}' for e in sorted(X.edges))
    return lines


def _morphism_lines(name, dom, cod, f, depth):
    pad = INDENT * depth
    lines = [f'{pad}morphism {_check_id(name)} {dom} {cod}']
    lines.extend(f'{pad}{INDENT}vmap {v} {f.vmap[v]}' for v in sorted(f.vmap))
    lines.extend(f'{pad}{INDENT}emap {e} {f.emap[e]}' for e in sorted(f.emap))
    lines.append(f'{pad}end')
    return lines


def _object_lines(name, X):
    return [f'{INDENT}object {_check_id(name)}'] + _graph_lines(X, 2) + [f'{INDENT}end']


def serialize_graph(X, name='graph'):
    lines = [f'graph {_check_id(name)}', f'{INDENT}category {X.category}'] + _graph_lines(X, 1) + ['end']
    return '\n'.join(lines) + '\n'


def serialize_rule(rule):
    lines = [f'rule {_check_id(rule.name)}', f'{INDENT}category {rule.category}']
    for name in ('I', 'K', 'O'):
        lines.extend(_object_lines(name, getattr(rule, name)))
    lines.extend(_morphism_lines('input', 'K', 'I', rule.input_leg, 1))
    lines.extend(_morphism_lines('output', 'K', 'O', rule.output_leg, 1))
    lines.append('end')
    return '\n'.join(lines) + '\n'


def serialize_diagram(diagram):
    lines = [f'diagram {_check_id(diagram.name)}']
    if diagram.category is not None:
        lines.append(f'{INDENT}category {diagram.category}')
    for name, X in six.iteritems(diagram.objects):
        lines.extend(_object_lines(name, X))
    for name, f in six.iteritems(diagram.morphisms):
        dom, cod = diagram.arrows[name]
        lines.extend(_morphism_lines(name, dom, cod, f, 1))
    lines.append('end')
    return '\n'.join(lines) + '\n'


def serialize(document):
    if document.kind == GRAPH:
        return serialize_graph(document.value, document.name)
    if document.kind == RULE:
        return serialize_rule(document.value)
    return serialize_diagram(document.value)


# ======================================= LOADING ===================================

def load_documents(path_or_file, category=None):
    return parse_documents(get_file_contents(path_or_file), category)


def _load_one(path_or_file, kind, category):
    found = [doc for doc in load_documents(path_or_file, category) if doc.kind == kind]
    where = getattr(path_or_file, 'name', path_or_file)
    if not found:
        raise make_error('ParseError', f'{where} holds no {kind} document')
    if len(found) > 1:
        logger.warning(f'{where} holds {len(found)} {kind} documents, using "{found[0].name}"')
    return found[0]


def load_graph(path_or_file, category=None):
    """The first graph document of a file as ``(name, graph)``."""
    doc = _load_one(path_or_file, GRAPH, category)
    return doc.name, doc.value


def load_rule(path_or_file, category=None):
    return _load_one(path_or_file, RULE, category).value


def load_diagram(path_or_file, category=None):
    return _load_one(path_or_file, DIAGRAM, category).value
