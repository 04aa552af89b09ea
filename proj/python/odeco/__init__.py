"""Deciding and computing orthogonal (unitary) tensor decompositions.

Arrays are numpy arrays in row-major order; a complex dtype selects the
complex field, anything else the real field.
"""

import json

from ._core import (
    DegenerateError,
    NotDecomposableError,
    OdecoError,
    __version__,
    decompose,
    estimate_dimension,
    max_terms,
    project_alternating,
    project_symmetric,
    sample,
    variety_dimension,
)
from . import _core

__all__ = [
    "DegenerateError",
    "NotDecomposableError",
    "OdecoError",
    "__version__",
    "decide",
    "decompose",
    "estimate_dimension",
    "max_terms",
    "project_alternating",
    "project_symmetric",
    "sample",
    "variety_dimension",
    "verify",
]


def decide(tensor, scenario, tol=1e-8, seed=0, probes=0):
    """Membership decision as a dict.

    Order 3 gives the residual report; higher orders give the reduction
    trace, whose "final" entry carries the verdict.
    """
    return json.loads(_core.decide_json(tensor, scenario, tol, seed, probes))


def verify(tensor, scenario, terms, tol=1e-8):
    return json.loads(_core.verify_json(tensor, scenario, list(terms), tol))
