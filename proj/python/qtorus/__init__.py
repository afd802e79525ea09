"""Exact computations with rational quantum tori and toroidal Lie algebras.

Configs and module specs may be given as dicts or JSON strings; structured
results come back as dicts.
"""

import json

from . import _core
from ._core import Cyclotomic, QTorusError

__all__ = [
    "Cyclotomic",
    "QTorusError",
    "Torus",
    "bracket",
    "center_suite",
    "cocycle_suite",
    "decompose_window",
    "fiber_decompose",
    "fiber_reps",
    "highest_central_operator",
    "integrability_index",
    "jacobi_suite",
    "loop_checks",
    "module_axiom_suite",
    "module_dim",
    "vplus_dim",
    "vplus_weights",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def Torus(config):
    """Quantum torus from {"n", "conductor", "exps"}."""
    return _core.Torus(_text(config))


def bracket(config, d, lhs, rhs):
    return json.loads(_core.bracket(_text(config), d, _text(lhs), _text(rhs)))


def cocycle_suite(config, trials=200, seed=1):
    return json.loads(_core.cocycle_suite(_text(config), trials, seed))


def center_suite(config, trials=100, seed=1):
    return json.loads(_core.center_suite(_text(config), trials, seed))


def jacobi_suite(config, d=2, trials=100, seed=1):
    return json.loads(_core.jacobi_suite(_text(config), d, trials, seed))


def fiber_decompose(spec):
    return json.loads(_core.fiber_decompose(_text(spec)))


def fiber_reps(spec):
    return json.loads(_core.fiber_reps(_text(spec)))


def module_dim(spec):
    return _core.module_dim(_text(spec))


def module_axiom_suite(spec, trials=100, seed=1):
    return json.loads(_core.module_axiom_suite(_text(spec), trials, seed))


def vplus_dim(spec):
    return _core.vplus_dim(_text(spec))


def vplus_weights(spec):
    return json.loads(_core.vplus_weights(_text(spec)))


def integrability_index(spec, i, j, a):
    return _core.integrability_index(_text(spec), i, j, list(a))


def loop_checks(spec, truncation=6):
    return json.loads(_core.loop_checks(_text(spec), truncation))


def highest_central_operator(spec, i, max_k=4):
    return json.loads(_core.highest_central_operator(_text(spec), i, max_k))


def decompose_window(spec, bound=3):
    return json.loads(_core.decompose_window(_text(spec), bound))
