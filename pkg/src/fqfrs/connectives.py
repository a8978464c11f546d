"""Fuzzy logical connectives: t-norms, implicators, residuation, D-convexity.

Three named t-norms (Lukasiewicz, minimum, product) are provided with
closed-form residual implicators.  User-defined t-norms are accepted, but
a residual implicator is only derived for them when they are attested
left-continuous, in which case the supremum is computed by bisection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

__all__ = [
    "TNorm",
    "Implicator",
    "lukasiewicz_tnorm",
    "minimum_tnorm",
    "product_tnorm",
    "tnorm_by_name",
    "tnorm_apply",
    "residual_implicator",
    "check_d_convex",
    "check_tnorm_axioms",
    "check_implicator_axioms",
]

_TOL = 1e-12


def _as_unit(values, what: str) -> np.ndarray:
    """Coerce to float array and reject anything outside [0, 1]."""
    arr = np.asarray(values, dtype=float)
    if arr.size and (not np.all(np.isfinite(arr)) or arr.min() < 0.0 or arr.max() > 1.0):
        raise ValueError(f"{what} must lie in [0, 1]")
    return arr


def _clamp(arr):
    """Clamp to [0, 1] to absorb 1-ulp arithmetic drift."""
    return np.clip(arr, 0.0, 1.0)


@dataclass(frozen=True)
class TNorm:
    """Commutative, associative, monotone conjunction on [0,1] with neutral 1.

    ``fn`` must accept numpy arrays and broadcast.  ``left_continuous`` is an
    attestation for user-supplied t-norms; the named instances set it
    correctly.  ``d_convex`` caches convexity in each argument (None means
    unknown, decided numerically on demand).
    """

    name: str
    fn: Callable[[np.ndarray, np.ndarray], np.ndarray] = field(repr=False)
    left_continuous: bool = False
    d_convex: bool | None = None

    def __call__(self, x, y):
        x = _as_unit(x, f"{self.name} t-norm argument")
        y = _as_unit(y, f"{self.name} t-norm argument")
        return _clamp(self.fn(x, y))

    def is_d_convex(self, grid_step: float = 0.05) -> bool:
        if self.d_convex is not None:
            return self.d_convex
        return check_d_convex(self, grid_step)


@dataclass(frozen=True)
class Implicator:
    """Binary operator on [0,1], non-increasing in the first argument and
    non-decreasing in the second, with the boundary values of material
    implication."""

    name: str
    fn: Callable[[np.ndarray, np.ndarray], np.ndarray] = field(repr=False)

    def __call__(self, x, y):
        x = _as_unit(x, f"{self.name} implicator argument")
        y = _as_unit(y, f"{self.name} implicator argument")
        return _clamp(self.fn(x, y))


def lukasiewicz_tnorm() -> TNorm:
    """T(x, y) = max(0, x + y - 1)."""
    return TNorm("lukasiewicz", lambda x, y: np.maximum(0.0, x + y - 1.0),
                 left_continuous=True, d_convex=True)


def minimum_tnorm() -> TNorm:
    """T(x, y) = min(x, y).  Not D-convex."""
    return TNorm("minimum", np.minimum, left_continuous=True, d_convex=False)


def product_tnorm() -> TNorm:
    """T(x, y) = x * y."""
    return TNorm("product", lambda x, y: x * y, left_continuous=True, d_convex=True)


_NAMED_TNORMS = {
    "lukasiewicz": lukasiewicz_tnorm,
    "minimum": minimum_tnorm,
    "product": product_tnorm,
}


def tnorm_by_name(name: str) -> TNorm:
    try:
        return _NAMED_TNORMS[name]()
    except KeyError:
        raise ValueError(
            f"unknown t-norm {name!r}; choose one of {sorted(_NAMED_TNORMS)}"
        ) from None


def tnorm_apply(t: TNorm, x, y):
    """Apply ``t`` with domain validation and clamping (same as ``t(x, y)``)."""
    return t(x, y)


def _luk_impl(x, y):
    return np.minimum(1.0, 1.0 - x + y)


def _godel_impl(x, y):
    x, y = np.broadcast_arrays(x, y)
    return np.where(x <= y, 1.0, y)


def _goguen_impl(x, y):
    x, y = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float))
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(x > 0.0, y / np.where(x > 0.0, x, 1.0), 1.0)
    return np.minimum(1.0, ratio)


_CLOSED_FORM_RESIDUALS = {
    "lukasiewicz": _luk_impl,
    "minimum": _godel_impl,
    "product": _goguen_impl,
}


def _bisection_residual(t: TNorm, iterations: int = 60):
    """sup{lambda : T(x, lambda) <= y} by vectorized bisection.

    Valid for left-continuous t-norms, where the supremum is attained.
    """

    def fn(x, y):
        x, y = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float))
        lo = np.zeros_like(x)
        hi = np.ones_like(x)
        for _ in range(iterations):
            mid = 0.5 * (lo + hi)
            ok = t.fn(x, mid) <= y
            lo = np.where(ok, mid, lo)
            hi = np.where(ok, hi, mid)
        return lo

    return fn


def residual_implicator(t: TNorm) -> Implicator:
    """Residual implicator of a left-continuous t-norm.

    Closed forms are used for the named t-norms (Lukasiewicz, Goedel,
    Goguen); otherwise the defining supremum is bisected numerically.
    """
    if not t.left_continuous:
        raise ValueError(
            f"residual implicator requires a left-continuous t-norm, "
            f"got {t.name!r} without that attestation"
        )
    closed = _CLOSED_FORM_RESIDUALS.get(t.name)
    if closed is not None:
        return Implicator(f"residual({t.name})", closed)
    return Implicator(f"residual({t.name})", _bisection_residual(t))


def _grid(step: float) -> np.ndarray:
    pts = np.arange(0.0, 1.0 + step / 2.0, step)
    pts[-1] = 1.0
    return pts


def check_d_convex(t: TNorm, grid_step: float = 0.05) -> bool:
    """Numerically test convexity of ``t`` in each argument separately.

    Checks H(w*x1 + (1-w)*x2, y) <= w*H(x1, y) + (1-w)*H(x2, y) (and the
    mirrored inequality in the second argument) for all grid triples and
    w in {1/4, 1/2, 3/4}, up to 1e-12.
    """
    if not 0.0 < grid_step <= 0.1:
        raise ValueError("grid_step must be in (0, 0.1]")
    g = _grid(grid_step)
    x1 = g[:, None, None]
    x2 = g[None, :, None]
    y = g[None, None, :]
    for w in (0.25, 0.5, 0.75):
        xm = w * x1 + (1.0 - w) * x2
        lhs = t.fn(xm, y)
        rhs = w * t.fn(x1, y) + (1.0 - w) * t.fn(x2, y)
        if np.any(lhs > rhs + _TOL):
            return False
        lhs = t.fn(y, xm)
        rhs = w * t.fn(y, x1) + (1.0 - w) * t.fn(y, x2)
        if np.any(lhs > rhs + _TOL):
            return False
    return True


def check_tnorm_axioms(t: TNorm, grid_step: float = 0.05, tol: float = _TOL) -> bool:
    """Grid test of commutativity, associativity, monotonicity and neutral 1."""
    g = _grid(grid_step)
    a = g[:, None]
    b = g[None, :]
    ab = t.fn(a, b)
    if np.any(np.abs(ab - t.fn(b, a)) > tol):
        return False
    if np.any(np.abs(t.fn(np.ones_like(g), g) - g) > tol):
        return False
    if np.any(ab > np.minimum(a, b) + tol):
        return False
    # monotonicity along the grid in both arguments
    if np.any(np.diff(ab, axis=0) < -tol) or np.any(np.diff(ab, axis=1) < -tol):
        return False
    c = g[None, None, :]
    left = t.fn(t.fn(a[:, :, None], b[:, :, None]), c)
    right = t.fn(a[:, :, None], t.fn(b[:, :, None], c))
    return not np.any(np.abs(left - right) > tol)


def check_implicator_axioms(imp: Implicator, grid_step: float = 0.05,
                            tol: float = _TOL) -> bool:
    """Grid test of hybrid monotonicity and the four boundary values."""
    for pair, expected in (((0, 0), 1), ((0, 1), 1), ((1, 1), 1), ((1, 0), 0)):
        if abs(float(imp.fn(np.float64(pair[0]), np.float64(pair[1]))) - expected) > tol:
            return False
    g = _grid(grid_step)
    table = imp.fn(g[:, None], g[None, :])
    if np.any(np.diff(table, axis=0) > tol):  # non-increasing in 1st argument
        return False
    return not np.any(np.diff(table, axis=1) < -tol)  # non-decreasing in 2nd
