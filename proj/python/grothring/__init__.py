"""Python bindings for the grothring C++ library.

Monoids, rings and ring elements use the same JSON shapes as the command-line
tool, passed here as plain dicts and lists.
"""

import json

from . import _core
from ._core import AlgebraError

__all__ = [
    "AlgebraError",
    "smith_normal_form",
    "groth_eq",
    "is_cancellative",
    "monoid_check",
    "groth_compute",
    "groth_order",
    "mring_nzd",
    "localize_decompose",
    "localize_units",
    "iso_verify",
    "iso_laurent",
    "run_cli",
]


def _ints(rows):
    return [[int(x) for x in row] for row in rows]


def smith_normal_form(matrix):
    """Returns invariant_factors and unimodular U, V with U A V = D."""
    r = _core.smith_normal_form([[str(int(x)) for x in row] for row in matrix])
    return {
        "invariant_factors": [int(d) for d in r["invariant_factors"]],
        "D": _ints(r["D"]),
        "U": _ints(r["U"]),
        "V": _ints(r["V"]),
    }


def groth_eq(monoid, x, y):
    """Semantic equality of classes x = [a, b] and y = [c, d] in G(monoid)."""
    return _core.groth_eq(json.dumps(monoid), json.dumps(x), json.dumps(y))


def is_cancellative(monoid):
    return _core.is_cancellative(json.dumps(monoid))


def _analyze(command, seed=0, samples=200, depth=8, **inputs):
    inputs = {k: v for k, v in inputs.items() if v is not None}
    return json.loads(_core.analyze(command, json.dumps(inputs), seed, samples, depth))


def monoid_check(monoid):
    return _analyze("monoid check", monoid=monoid)


def groth_compute(monoid):
    return _analyze("groth compute", monoid=monoid)


def groth_order(monoid):
    return _analyze("groth order", monoid=monoid)


def mring_nzd(ring, monoid):
    return _analyze("mring nzd", ring=ring, monoid=monoid)


def localize_decompose(ring, monoid, sgens, fraction, depth=8):
    return _analyze("localize decompose", ring=ring, monoid=monoid, sgens=sgens, fraction=fraction, depth=depth)


def localize_units(ring, sgens):
    return _analyze("localize units", ring=ring, sgens=sgens)


def iso_verify(ring, monoid, sgens=(), samples=200, seed=0):
    return _analyze("iso verify", ring=ring, monoid=monoid, sgens=list(sgens), samples=samples, seed=seed)


def iso_laurent(ring, rank, samples=200, seed=0):
    return _analyze("iso laurent", ring=ring, rank=rank, samples=samples, seed=seed)


def run_cli(args):
    """Runs the command-line tool in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli(list(args))
