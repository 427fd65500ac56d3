"""Command line front end: flat-file documents, Graphviz export and the ``nlrewrite`` verbs."""

from nlrewrite.cli.documents import *
from nlrewrite.cli.dot import *
from nlrewrite.cli.main import main, build_parser
