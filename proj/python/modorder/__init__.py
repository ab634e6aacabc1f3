"""Minus partial order and its relatives on finite modules over finite rings.

Rings and modules are given as builtin names ("Z10", "Z6/Z30", "RR:M2(Z2)"),
inline JSON definitions, or paths to JSON files.
"""

import json

from . import _core
from ._core import ModorderError, relations

__all__ = [
    "ModorderError",
    "hasse",
    "matrix",
    "module_info",
    "order",
    "relations",
    "ring_info",
    "ring_order",
    "verify",
]


def ring_info(spec):
    return json.loads(_core.ring_info(spec))


def module_info(spec):
    return json.loads(_core.module_info(spec))


def order(module, rel, m1, m2):
    """Verdict of rel on (m1, m2) with its witness, as a dict."""
    return json.loads(_core.order(module, rel, m1, m2))


def ring_order(ring, rel, a, b):
    return json.loads(_core.ring_order(ring, rel, a, b))


def matrix(module, rel):
    """rows[i][j] is True when i <= j under rel."""
    return json.loads(_core.matrix(module, rel))


def verify(corpus="paper", law=""):
    return json.loads(_core.verify(corpus, law))


def hasse(module, rel="minus-dual", format="dot"):
    out = _core.hasse(module, rel, format)
    return json.loads(out) if format == "json" else out
