"""Run-time switches of the engine.

``DEBUG`` turns on validation of the constructive (co)limits by the brute-force oracles. The oracles are only
consulted for instances with at most ``ORACLE_MAX_VERTICES`` vertices per object; larger instances are logged and
skipped.
"""

import os

DEBUG = os.environ.get('NLREWRITE_DEBUG', '') not in ('', '0', 'false', 'False')

# extra competitor objects handed to the universal-property oracles
ORACLE_MAX_VERTICES = 2
ORACLE_MAX_EDGES = 2

# debug-mode validation is skipped above this size
DEBUG_CHECK_MAX_VERTICES = 4

CLASSIFIER_CACHE_SIZE = 512


def set_debug(flag=True):
    global DEBUG
    DEBUG = bool(flag)
