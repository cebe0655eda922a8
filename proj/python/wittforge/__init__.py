"""Python interface to the wittforge C++ library.

Inputs use the same JSON shapes as the command-line tool, passed as plain
Python objects. Rationals are strings such as "3" or "-5/7".
"""

import json as _json

from . import _core
from ._core import BoundExceeded, ConsistencyError, DomainError, ParseError

__all__ = [
    "BoundExceeded",
    "ConsistencyError",
    "DomainError",
    "ParseError",
    "additive",
    "brauer_class",
    "decompose12",
    "exists",
    "f3",
    "hilbert_symbol",
    "hyper_over",
    "invariants",
    "obstruction",
    "selftest",
    "squarefree_part",
]


def _q(x):
    return str(x)


def _form(diag):
    if isinstance(diag, dict):
        return _json.dumps(diag)
    return _json.dumps({"diag": [_q(x) for x in diag]})


def _alg(h):
    if isinstance(h, dict):
        return _json.dumps(h)
    a, b = h
    return _json.dumps({"a": _q(a), "b": _q(b)})


def squarefree_part(r):
    return int(_core.squarefree_part(_q(r)))


def hilbert_symbol(a, b, place):
    return _core.hilbert_symbol(_q(a), _q(b), str(place))


def brauer_class(a, b):
    """Ramified places of (a, b); "real" stands for the infinite place."""
    return _json.loads(_core.brauer_class(_q(a), _q(b)))["ramified"]


def invariants(diag, bound=None):
    return _json.loads(_core.qf_invariants(_form(diag), bound))


def decompose12(diag, bound=None):
    return _json.loads(_core.qf_decompose12(_form(diag), bound))


def hyper_over(diag, d):
    return _json.loads(_core.qf_hyper_over(_form(diag), _q(d)))


def f3(presentation, bound=None):
    return _json.loads(_core.alg_f3(_json.dumps(presentation), bound))


def exists(h1, h2, bound=None):
    return _json.loads(_core.alg_exists(_alg(h1), _alg(h2), bound))


def additive(presentation, bound=None):
    return _json.loads(_core.alg_additive(_json.dumps(presentation), bound))


def obstruction(slots):
    if isinstance(slots, dict):
        slots = slots["slots"]
    return _json.loads(_core.val_obstruction(_json.dumps({"slots": slots})))


def selftest(seed=0, count=20):
    return _json.loads(_core.selftest(seed, count))
