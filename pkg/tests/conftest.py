"""Shared samplers for the property suites."""

from __future__ import annotations

import numpy as np

from cycle4 import Status, make_context, membership
from cycle4.criterion import Regime


def sample_inside_nonreal(rng: np.random.Generator, count: int, *,
                          min_b: float = 0.0, max_sum: float = 1.0,
                          min_form: float = 0.0) -> list[complex]:
    """Rejection-sample points classified InsideNonreal, with optional
    margins for numerically delicate checks."""
    out: list[complex] = []
    while len(out) < count:
        a, b = rng.random(2)
        lam = complex(a, b)
        if b < min_b or a + b > max_sum:
            continue
        verdict = membership(lam)
        if verdict.status is Status.INSIDE_NONREAL and verdict.g_check >= min_form:
            out.append(lam)
    return out


def sample_tight(rng: np.random.Generator, count: int) -> list[complex]:
    """Random upper-half points with the tight regime (a in [0,1), b > 0)."""
    out: list[complex] = []
    while len(out) < count:
        a, b = rng.random(2)
        if b == 0.0:
            continue
        ctx = make_context(complex(a, b))
        if ctx.regime is Regime.TIGHT:
            out.append(complex(a, b))
    return out


def sample_feasible_angles(rng: np.random.Generator, ctx, count: int) -> np.ndarray:
    """(count, 4) feasible angle tuples: box [lower, upper)^4 intersected
    with the sum-2*pi hyperplane.

    Draws from the simplex {u_k >= lower, sum u_k = 2*pi} via Dirichlet
    weights and rejects coordinates at or above the open upper bound (only
    possible in the unbounded regime, where the simplex pokes out of the box).
    """
    lower, upper = ctx.lower_arg, ctx.upper_arg
    budget = 2.0 * np.pi - 4.0 * lower
    assert budget >= 0.0
    rows = []
    need = count
    while need > 0:
        w = rng.dirichlet((1.0, 1.0, 1.0, 1.0), size=2 * need + 16)
        u = lower + w * budget
        keep = u[(u < upper).all(axis=1)]
        rows.append(keep[:need])
        need -= len(keep[:need])
    return np.vstack(rows)
