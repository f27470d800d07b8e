"""Screening operators for deformed q,t-character rings."""

import json

from ._core import (
    Cartan,
    WindowError,
    epoly,
    eval,
    gauss_binom,
    in_kt,
    screen,
    suite_names,
    t_integer,
)
from . import _core

__all__ = [
    "Cartan",
    "WindowError",
    "epoly",
    "eval",
    "eval_json",
    "gauss_binom",
    "in_kt",
    "kernel",
    "screen",
    "suite_names",
    "t_integer",
    "verify",
]


def eval_json(expr, ring="hat", cartan="A2"):
    return json.loads(_core.eval_json(expr, ring, cartan))


def kernel(expr, i, flavor="hat", cartan="A2"):
    """Membership report: member, dominant_part, remainder, screen_nf, routes_agree."""
    return json.loads(_core.kernel_json(expr, i, flavor, cartan))


def verify(suite, cartan="A2", seed=1, samples=200, window="-6:6"):
    return json.loads(_core.verify_json(suite, cartan, seed, samples, window))
