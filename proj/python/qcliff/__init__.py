"""Exact computations for quantum Clifford superalgebras.

Every function returns plain Python data decoded from the same JSON encoding
that ``qcliff --json`` prints. Weights are sequences of integers.
"""

import json as _json

from . import _qcliff
from ._qcliff import NonExactDivision, PreconditionError, UnsupportedSplitting

__all__ = [
    "NonExactDivision",
    "PreconditionError",
    "UnsupportedSplitting",
    "central_char_equal",
    "character",
    "classify",
    "delta",
    "worked_example",
    "legendre",
    "limit",
    "verify_qn",
    "witt",
]


def classify(weight):
    return _json.loads(_qcliff.classify(list(weight)))


def witt(weight, var="t", matrices=False):
    return _json.loads(_qcliff.witt(list(weight), var, matrices))


def legendre(weight, var="t"):
    return _json.loads(_qcliff.legendre(list(weight), var))


def character(weight, quantum=False):
    return _json.loads(_qcliff.character(list(weight), quantum))


def delta(weight):
    return _json.loads(_qcliff.delta(list(weight)))


def central_char_equal(a, b):
    return _qcliff.central_char_equal(list(a), list(b))


def verify_qn(n):
    return _json.loads(_qcliff.verify_qn(n))


def limit(weight, entries=False):
    return _json.loads(_qcliff.limit(list(weight), entries))


def worked_example():
    return _json.loads(_qcliff.worked_example())
