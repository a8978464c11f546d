"""Granules, granular decomposition, representability and consistency audits.

A granule is the fuzzy set T(lambda, R(., x)) anchored at a center x.  A
fuzzy set is granularly representable when it equals the union of all
granules it contains, which happens exactly when no element forces a higher
membership on a similar element (the consistency property) and exactly when
the set is a fixpoint of both classical approximations.  Decomposition uses
the residuation-optimal level per center, so it is exact in O(n^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .approximations import lower_classic
from .connectives import Implicator, TNorm
from .fuzzy_sets import FuzzyRelation, FuzzySet, same_universe

__all__ = [
    "Granule",
    "ConsistencyReport",
    "granule",
    "max_granule_level",
    "granular_decomposition",
    "is_granularly_representable",
    "consistency_report",
]


@dataclass(frozen=True)
class Granule:
    """A level-scaled foreset: membership(y) = T(level, R(y, center))."""

    center: int
    level: float
    membership: FuzzySet


@dataclass(frozen=True)
class ConsistencyReport:
    """Per-element gaps between a set and its classical lower approximation,
    with the aggregate inconsistency metrics."""

    per_element_gap: np.ndarray
    inconsistent_elements: tuple[int, ...]
    error: float
    percentage: float
    tolerance: float

    @property
    def consistent(self) -> bool:
        return not self.inconsistent_elements


def granule(R: FuzzyRelation, x: int, level: float, t: TNorm) -> Granule:
    """The granule of level ``level`` centered at ``x``."""
    n = R.universe.size
    if not 0 <= x < n:
        raise IndexError(f"center index {x} out of range for universe of size {n}")
    if not 0.0 <= level <= 1.0:
        raise ValueError("granule level must lie in [0, 1]")
    membership = t(np.full(n, level), R.degrees[:, x])
    return Granule(x, level, FuzzySet(R.universe, membership))


def max_granule_level(R: FuzzyRelation, A: FuzzySet, x: int, I: Implicator) -> float:
    """Largest level at which the granule centered at ``x`` stays inside A.

    By residuation this is min over y of I(R(y, x), A(y)), provided ``I`` is
    the residual implicator of the granule's t-norm.
    """
    same_universe(R, A)
    n = R.universe.size
    if not 0 <= x < n:
        raise IndexError(f"center index {x} out of range for universe of size {n}")
    return float(I(R.degrees[:, x], A.degrees).min())


def granular_decomposition(R: FuzzyRelation, A: FuzzySet, t: TNorm, I: Implicator) -> FuzzySet:
    """Union of the maximal granules contained in A.

    Always a subset of A; equals A exactly when A is granularly
    representable.
    """
    universe = same_universe(R, A)
    levels = I(R.degrees, A.degrees[:, None]).min(axis=0)  # per center x
    built = t(R.degrees, levels[None, :]).max(axis=1)
    return FuzzySet(universe, built)


def is_granularly_representable(R: FuzzyRelation, A: FuzzySet, t: TNorm,
                                tol: float = 1e-9) -> bool:
    """Consistency check: T(R(x,y), A(y)) <= A(x) + tol for all pairs."""
    same_universe(R, A)
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    table = t(R.degrees, A.degrees[None, :])
    return bool(np.all(table <= A.degrees[:, None] + tol))


def consistency_report(R: FuzzyRelation, A: FuzzySet, I: Implicator,
                       tol: float = 1e-9) -> ConsistencyReport:
    """Gap vector A - lower_classic(A) with the aggregate metrics.

    For a reflexive relation the gaps are non-negative; an element with a
    gap above ``tol`` is inconsistent.  ``error`` is the mean absolute gap
    and ``percentage`` the fraction of inconsistent elements.
    """
    universe = same_universe(R, A)
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    gaps = A.degrees - lower_classic(R, A, I).degrees
    inconsistent = tuple(int(i) for i in np.nonzero(gaps > tol)[0])
    n = universe.size
    error = math.fsum(np.abs(gaps)) / n
    return ConsistencyReport(gaps, inconsistent, error, len(inconsistent) / n, tol)
