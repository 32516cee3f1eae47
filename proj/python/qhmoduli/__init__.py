"""Moduli of point tuples in quaternionic hyperbolic space.

Quaternions are lists [a0, a1, a2, a3]; a tuple is {"points": [...]} or a list of
points, each point a list of quaternions or {"model": ..., "entries": [...]}.
"""

import json

from . import _qhmoduli as _ext
from ._qhmoduli import DomainError, NumericalError, RealizationError, UsageError

__all__ = [
    "DomainError", "NumericalError", "RealizationError", "UsageError",
    "gram", "inertia", "realize", "boundary_coordinate", "positive_coordinate",
    "congruent", "rotation_normalize", "pair_moduli", "triangle_det",
    "triangle_exists", "realize_triangle", "random_tuple", "random_isometry",
    "apply_isometry",
]


def _s(x):
    return x if isinstance(x, str) else json.dumps(x)


def gram(points, model="ball"):
    return json.loads(_ext.gram(_s(points), model))


def inertia(g, eps=1e-9):
    return json.loads(_ext.inertia(_s(g), eps))


def realize(g, n, model="ball", eps=1e-9):
    return json.loads(_ext.realize(_s(g), n, model, eps))


def boundary_coordinate(points, model="ball", eps=1e-9):
    return json.loads(_ext.boundary_coordinate(_s(points), model, eps))


def positive_coordinate(points, model="ball", eps=1e-9):
    return json.loads(_ext.positive_coordinate(_s(points), model, eps))


def congruent(a, b, model="ball", eps=1e-9):
    return _ext.congruent(_s(a), _s(b), model, eps)


def rotation_normalize(values, eps=1e-9):
    return json.loads(_ext.rotation_normalize(_s(values), eps))


def pair_moduli(pair, model="ball"):
    return _ext.pair_moduli(_s(pair), model)


def triangle_det(r1, r2, r3, alpha):
    return _ext.triangle_det(r1, r2, r3, alpha)


def triangle_exists(r1, r2, r3, alpha):
    return _ext.triangle_exists(r1, r2, r3, alpha)


def realize_triangle(r1, r2, r3, alpha, model="ball"):
    return json.loads(_ext.realize_triangle(r1, r2, r3, alpha, model))


def random_tuple(kind, n, m, seed=0, model="ball"):
    return json.loads(_ext.random_tuple(kind, n, m, seed, model))


def random_isometry(n, seed=0, model="ball"):
    return json.loads(_ext.random_isometry(n, seed, model))


def apply_isometry(g, points):
    return json.loads(_ext.apply_isometry(_s(g), _s(points)))
