"""Composition of rules along rule matches, and the synthesis and analysis of two-step derivations.

``sqpo`` and ``dpo`` build composite rules with their witness diagrams, ``linear`` holds independent reference
compositions for linear rules and ``compat`` checks the correspondence between two-step and one-step derivations on
a concrete host.
"""

from nlrewrite.concurrent.composite import *
from nlrewrite.concurrent.sqpo import *
from nlrewrite.concurrent.dpo import *
from nlrewrite.concurrent.linear import *
from nlrewrite.concurrent.compat import *
