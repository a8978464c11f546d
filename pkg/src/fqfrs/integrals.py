"""Choquet and Sugeno integrals of finite functions w.r.t. monotone measures.

Both integrals sort the integrand ascending (stable in the original index)
and walk the nested chain of upper sets.  Equal integrand values are
collapsed into groups so the measure is only queried on the canonical level
sets {f >= c}; this makes the result exactly invariant under any reordering
of tied entries.  The Choquet sum is accumulated with compensated summation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fuzzy_sets import FuzzySet, Universe
from .measures import MonotoneMeasure, WeightVector, owa_weights_to_measure

__all__ = ["SortedEvaluation", "sorted_evaluation", "choquet", "sugeno", "owa"]


@dataclass(frozen=True)
class SortedEvaluation:
    """Ascending integrand permutation and the measures of its suffix sets.

    ``chain_values[i]`` is the measure of {permutation[i:], ...}, so the
    sequence starts at 1 (the whole universe) and is non-increasing.
    """

    permutation: np.ndarray
    chain_values: np.ndarray


def _integrand_values(f, measure: MonotoneMeasure, upper: float | None) -> np.ndarray:
    if isinstance(f, FuzzySet):
        if f.universe != measure.universe:
            raise ValueError("integrand and measure are defined over different universes")
        return f.degrees
    values = np.asarray(f, dtype=float)
    if values.ndim != 1 or values.shape[0] != measure.universe.size:
        raise ValueError("integrand must be a vector over the measure's universe")
    if not np.all(np.isfinite(values)) or values.min(initial=0.0) < 0.0:
        raise ValueError("integrand values must be finite and non-negative")
    if upper is not None and values.size and values.max() > upper:
        raise ValueError(f"integrand values must not exceed {upper}")
    return values


def sorted_evaluation(f, measure: MonotoneMeasure) -> SortedEvaluation:
    """Stable ascending sort of the integrand plus the measure chain."""
    values = _integrand_values(f, measure, None)
    perm = np.argsort(values, kind="stable")
    return SortedEvaluation(perm, measure.chain_values(perm))


def _group_starts(sorted_values: np.ndarray) -> np.ndarray:
    """Indices where a new distinct value begins in an ascending vector."""
    if sorted_values.shape[0] == 0:
        return np.zeros(0, dtype=int)
    return np.concatenate([[0], np.nonzero(np.diff(sorted_values))[0] + 1])


def _choquet_values(values: np.ndarray, measure: MonotoneMeasure) -> float:
    perm = np.argsort(values, kind="stable")
    ordered = values[perm]
    chain = measure.chain_values(perm)
    starts = _group_starts(ordered)
    bounds = np.append(starts, ordered.shape[0])
    terms = []
    for g, start in enumerate(starts):
        mu_here = chain[start]
        nxt = bounds[g + 1]
        mu_next = chain[nxt] if nxt < ordered.shape[0] else 0.0
        terms.append(ordered[start] * (mu_here - mu_next))
    return math.fsum(terms)


def _sugeno_values(values: np.ndarray, measure: MonotoneMeasure) -> float:
    perm = np.argsort(values, kind="stable")
    ordered = values[perm]
    chain = measure.chain_values(perm)
    starts = _group_starts(ordered)
    return max(min(chain[s], ordered[s]) for s in starts)


def choquet(f, measure: MonotoneMeasure) -> float:
    """Telescoping sum of integrand values against capacity differences on
    the nested upper sets.  Accepts a FuzzySet or any non-negative vector."""
    return _choquet_values(_integrand_values(f, measure, None), measure)


def sugeno(f, measure: MonotoneMeasure) -> float:
    """max over the chain of min(measure of upper set, integrand value).

    The integrand must take values in [0, 1] so that it is comparable with
    the measure scale.
    """
    return _sugeno_values(_integrand_values(f, measure, 1.0), measure)


def owa(f, w: WeightVector, universe: Universe | None = None) -> float:
    """Ordered weighted average: the Choquet integral w.r.t. the symmetric
    measure accumulated from ``w`` (first weight on the largest value)."""
    if not isinstance(w, WeightVector):
        w = WeightVector(np.asarray(w, dtype=float))
    if isinstance(f, FuzzySet):
        universe = f.universe
    measure = owa_weights_to_measure(w, universe)
    return choquet(f, measure)
