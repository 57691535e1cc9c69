"""Attractor points of abelian threefolds, E x K3 products and their mirrors.

Charges, periods and lattices are plain dicts and lists in the same shape as
the command-line input files; exact numbers come back as strings such as
"3/2", quadratic numbers as {"a", "b", "D"} meaning a + b sqrt(-D).
"""

import json

from . import _attractor
from ._attractor import InputError, NoAttractor, suite_names

__all__ = [
    "InputError",
    "NoAttractor",
    "covering_radius",
    "invariants",
    "invert_picard9",
    "minimize",
    "solve_exs_complex",
    "solve_exs_kahler",
    "solve_torus",
    "suite_names",
    "tau_set",
    "verify",
    "wp_elliptic",
    "wp_quintic",
]


def _call(fn, *args, **kwargs):
    return json.loads(fn(*args, **kwargs))


def invariants(charge):
    """R, M and D of a torus charge."""
    return _call(_attractor.invariants, json.dumps(charge))


def solve_torus(charge, mode="complex", branch="symmetric"):
    """Exact attractor of a torus charge. The general branch returns a list."""
    return _call(_attractor.solve_torus, json.dumps(charge), mode, branch)


def invert_picard9(period):
    return _call(_attractor.invert_picard9, json.dumps(period))


def solve_exs_complex(gram, u1, u2):
    return _call(_attractor.solve_exs_complex, json.dumps(gram), list(u1), list(u2))


def solve_exs_kahler(gram, v1, v2):
    return _call(_attractor.solve_exs_kahler, json.dumps(gram), json.dumps(v1), json.dumps(v2))


def minimize(charge, starts=20, seed=0, threads=1):
    """Numerical minimum of the mass over the Siegel space."""
    return _call(_attractor.minimize, json.dumps(charge), starts, seed, threads)


def wp_elliptic(tau):
    return _attractor.wp_elliptic(complex(tau))


def wp_quintic(tau, gw=None):
    return _attractor.wp_quintic(complex(tau), "" if gw is None else str(gw))


def tau_set(gram, height, primitive=False):
    """List of (tau, D) for pairs of height at most `height`."""
    return _attractor.tau_set(json.dumps(gram), height, primitive)


def covering_radius(points, box=(0.0, 1.0, 1.0, 2.0), grid=41):
    return _attractor.covering_radius([complex(p) for p in points], list(box), grid)


def verify(suite, seed=0):
    return _call(_attractor.verify, suite, seed)
