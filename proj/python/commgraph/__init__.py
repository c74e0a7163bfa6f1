"""Exact centralizer and commuting-distance computations for matrix algebras.

Thin convenience layer over the compiled core: structured results cross the
boundary as JSON strings and come back as plain dicts.
"""

import json as _json

from ._core import (
    Field,
    Matrix,
    centralizer_basis,
    centralizer_dim,
    claim_ids,
    commute,
    is_minimal,
)
from . import _core

__all__ = [
    "Field",
    "Matrix",
    "census",
    "centralizer_basis",
    "centralizer_dim",
    "claim_ids",
    "commute",
    "construct_family",
    "construct_theorem5",
    "distance",
    "is_minimal",
    "m9",
    "structure",
    "verify",
]


def structure(A):
    return _json.loads(_core.structure_json(A))


def distance(A, B, method="auto", budget=None):
    return _json.loads(_core.distance_json(A, B, method, budget))


def construct_family(field, name, alpha, lambda_=None, eigs=None, n=None):
    return _json.loads(_core.family_json(field, name, alpha, lambda_, eigs, n))


def construct_theorem5(field, spec_a, spec_b):
    return _json.loads(_core.theorem5_json(field, spec_a, spec_b))


def m9():
    return _json.loads(_core.m9_json())


def verify(claim, **kwargs):
    return _json.loads(_core.verify_json(claim, **kwargs))


def census(field, n, budget=None, diameter=False):
    return _json.loads(_core.census_json(field, n, budget, diameter))
