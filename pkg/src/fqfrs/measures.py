"""RIM quantifiers and the monotone measures that drive every model.

A monotone measure exposes two evaluation paths: ``value`` on an arbitrary
crisp subset, and ``chain_values`` on the nested suffix sets of a sorted
permutation, which is the only access pattern the integrals need.  The
quantifier-derived families (symmetric, OWA-weight, YWI) depend on subset
cardinality alone and precompute their values per size, so a chain query
costs O(1) per set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .fuzzy_sets import FuzzySet, Universe

__all__ = [
    "RIMQuantifier",
    "identity_quantifier",
    "universal_quantifier",
    "zadeh_s",
    "WeightVector",
    "MonotoneMeasure",
    "symmetric_measure",
    "owa_weights_to_measure",
    "wowa_measure",
    "ywi_measure",
    "table_measure",
    "random_measure",
    "check_monotone",
]

_TOL = 1e-12


@dataclass(frozen=True)
class RIMQuantifier:
    """Non-decreasing map [0,1] -> [0,1] with Lambda(0)=0 and Lambda(1)=1.

    Inputs and outputs are clamped to [0,1]; the defining properties are
    verified on a grid at construction time.
    """

    name: str
    fn: Callable[[np.ndarray], np.ndarray] = field(repr=False)

    def __post_init__(self):
        p = np.linspace(0.0, 1.0, 201)
        v = self(p)
        if abs(v[0]) > _TOL or abs(v[-1] - 1.0) > _TOL:
            raise ValueError(f"quantifier {self.name!r} must map 0 to 0 and 1 to 1")
        if np.any(np.diff(v) < -_TOL):
            raise ValueError(f"quantifier {self.name!r} must be non-decreasing")

    def __call__(self, p):
        p = np.clip(np.asarray(p, dtype=float), 0.0, 1.0)
        return np.clip(self.fn(p), 0.0, 1.0)


def identity_quantifier() -> RIMQuantifier:
    return RIMQuantifier("identity", lambda p: p)


def universal_quantifier() -> RIMQuantifier:
    """Crisp 'for all': 1 at proportion 1, else 0."""
    return RIMQuantifier("universal", lambda p: np.where(p >= 1.0, 1.0, 0.0))


def zadeh_s(alpha: float, beta: float) -> RIMQuantifier:
    """Smooth step quantifier: 0 up to ``alpha``, 1 from ``beta`` on, glued
    by two quadratic arcs meeting at height 1/2.

    The degenerate call ``zadeh_s(1, 1)`` denotes the crisp universal
    quantifier, the limit of the family as both knees reach 1.
    """
    if alpha == beta == 1.0:
        return universal_quantifier()
    if not (0.0 <= alpha < beta <= 1.0):
        raise ValueError("zadeh_s requires 0 <= alpha < beta <= 1")
    mid = 0.5 * (alpha + beta)
    denom = (beta - alpha) ** 2

    def fn(p):
        return np.where(
            p <= alpha,
            0.0,
            np.where(
                p <= mid,
                2.0 * (p - alpha) ** 2 / denom,
                np.where(p <= beta, 1.0 - 2.0 * (p - beta) ** 2 / denom, 1.0),
            ),
        )

    return RIMQuantifier(f"zadeh_s({alpha:g},{beta:g})", fn)


@dataclass(frozen=True)
class WeightVector:
    """Non-negative weights summing to 1, first weight on the largest value."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.array(self.weights, dtype=float)
        if w.ndim != 1 or w.size == 0:
            raise ValueError("weights must be a non-empty vector")
        if np.any(w < 0.0) or not np.all(np.isfinite(w)):
            raise ValueError("weights must be finite and non-negative")
        if abs(w.sum() - 1.0) > _TOL:
            raise ValueError("weights must sum to 1")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    def __len__(self):
        return self.weights.shape[0]

    @classmethod
    def from_quantifier(cls, quantifier: RIMQuantifier, n: int) -> "WeightVector":
        """w_k = Lambda(k/n) - Lambda((k-1)/n): the OWA weights whose
        cumulative measure reproduces the quantifier on proportions."""
        levels = quantifier(np.arange(n + 1) / n)
        return cls(np.maximum(np.diff(levels), 0.0))

    @classmethod
    def uniform(cls, n: int) -> "WeightVector":
        return cls(np.full(n, 1.0 / n))


def _as_mask(subset, n: int) -> np.ndarray:
    arr = np.asarray(subset)
    if arr.dtype == bool:
        if arr.shape != (n,):
            raise ValueError("boolean subset mask has wrong length")
        return arr
    mask = np.zeros(n, dtype=bool)
    idx = arr.astype(int).reshape(-1)
    if idx.size and (idx.min() < 0 or idx.max() >= n):
        raise IndexError("subset index out of range")
    mask[idx] = True
    return mask


@dataclass(frozen=True)
class MonotoneMeasure:
    """Normalized monotone set function on crisp subsets of a finite universe.

    ``value_fn`` maps a boolean mask to the measure of that subset.
    ``chain_fn``, when present, maps an ascending-sort permutation to the
    vector of measures of its suffix sets and must agree with ``value_fn``.
    """

    universe: Universe
    name: str
    value_fn: Callable[[np.ndarray], float] = field(repr=False)
    chain_fn: Callable[[np.ndarray], np.ndarray] | None = field(default=None, repr=False)

    def value(self, subset) -> float:
        return float(self.value_fn(_as_mask(subset, self.universe.size)))

    def chain_values(self, perm: np.ndarray) -> np.ndarray:
        """Measures of the nested sets {perm[i:]} for i = 0..n-1."""
        if self.chain_fn is not None:
            return np.asarray(self.chain_fn(perm), dtype=float)
        n = self.universe.size
        out = np.empty(n)
        mask = np.zeros(n, dtype=bool)
        mask[perm] = True
        for i in range(n):
            out[i] = self.value_fn(mask)
            mask[perm[i]] = False
        return out


def _by_size_measure(universe: Universe, name: str, by_size: np.ndarray) -> MonotoneMeasure:
    """Symmetric measure given its value on each cardinality 0..n."""
    by_size = np.clip(np.asarray(by_size, dtype=float), 0.0, 1.0)
    by_size.setflags(write=False)

    def value(mask):
        return by_size[int(mask.sum())]

    def chain(perm):
        n = perm.shape[0]
        return by_size[n - np.arange(n)]

    return MonotoneMeasure(universe, name, value, chain)


def symmetric_measure(quantifier: RIMQuantifier, universe: Universe) -> MonotoneMeasure:
    """mu(E) = Lambda(|E| / |X|)."""
    n = universe.size
    return _by_size_measure(universe, f"symmetric[{quantifier.name}]",
                            quantifier(np.arange(n + 1) / n))


def owa_weights_to_measure(w: WeightVector, universe: Universe | None = None) -> MonotoneMeasure:
    """Symmetric measure whose successive differences reproduce ``w``:
    mu(E) = sum of the first |E| weights."""
    if not isinstance(w, WeightVector):
        w = WeightVector(np.asarray(w, dtype=float))
    universe = universe or Universe(len(w))
    if universe.size != len(w):
        raise ValueError("weight count does not match universe size")
    by_size = np.concatenate([[0.0], np.minimum(np.cumsum(w.weights), 1.0)])
    by_size[-1] = 1.0
    return _by_size_measure(universe, "owa", by_size)


def ywi_measure(quantifier: RIMQuantifier, A: FuzzySet) -> MonotoneMeasure:
    """mu(E) = Lambda((sum of the |E| smallest degrees of A) / |A|).

    Depends on E through its cardinality only; the pessimistic counterpart
    of the weighted measure below.
    """
    csum = np.cumsum(np.sort(A.degrees))
    total = csum[-1]
    if total <= 0.0:
        raise ValueError("measure is degenerate: the weighting set has cardinality 0")
    by_size = quantifier(np.concatenate([[0.0], csum / total]))
    return _by_size_measure(A.universe, f"ywi[{quantifier.name}]", by_size)


def wowa_measure(quantifier: RIMQuantifier, A: FuzzySet) -> MonotoneMeasure:
    """mu(E) = Lambda(|A intersect E| / |A|) with the sum-based intersection
    cardinality; monotone because A is non-negative."""
    degrees = A.degrees
    total = float(np.sum(degrees))
    if total <= 0.0:
        raise ValueError("measure is degenerate: the weighting set has cardinality 0")
    q = quantifier

    def value(mask):
        return float(q(np.sum(degrees[mask]) / total))

    def chain(perm):
        suffix = np.cumsum(degrees[perm][::-1])[::-1]
        return q(suffix / suffix[0])

    return MonotoneMeasure(A.universe, f"wowa[{quantifier.name}]", value, chain)


def table_measure(universe: Universe, table) -> MonotoneMeasure:
    """General measure backed by a dense table indexed by subset bitmask."""
    n = universe.size
    table = np.asarray(table, dtype=float)
    if table.shape != (1 << n,):
        raise ValueError("table must have one entry per subset (2^n)")
    bits = 1 << np.arange(n)

    def value(mask):
        return table[int(bits[mask].sum())]

    return MonotoneMeasure(universe, "table", value)


def random_measure(universe: Universe, rng: np.random.Generator) -> MonotoneMeasure:
    """Random monotone measure: i.i.d. subset scores pushed through the
    monotone (max-over-subsets) closure, normalized to the unit range."""
    n = universe.size
    if n > 16:
        raise ValueError("random table measures are limited to universes of size <= 16")
    size = 1 << n
    v = rng.uniform(0.0, 1.0, size)
    v[0] = 0.0
    masks = np.arange(size)
    for b in range(n):
        has = (masks >> b) & 1 == 1
        v[has] = np.maximum(v[has], v[masks[has] ^ (1 << b)])
    v /= v[-1]
    v[0] = 0.0
    return table_measure(universe, np.clip(v, 0.0, 1.0))


def check_monotone(measure: MonotoneMeasure, tol: float = _TOL,
                   rng: np.random.Generator | None = None, chains: int = 200) -> bool:
    """Verify the monotone-measure axioms.

    Exhaustive over all subset pairs differing in one element for universes
    of size <= 12; larger universes are sampled along random growth chains.
    """
    n = measure.universe.size
    if measure.value(np.zeros(n, dtype=bool)) > tol:
        return False
    if abs(measure.value(np.ones(n, dtype=bool)) - 1.0) > tol:
        return False
    if n <= 12:
        for m in range(1 << n):
            mask = (m >> np.arange(n)) & 1 == 1
            base = measure.value_fn(mask)
            if not 0.0 <= base <= 1.0 + tol:
                return False
            for b in range(n):
                if not mask[b]:
                    grown = mask.copy()
                    grown[b] = True
                    if measure.value_fn(grown) < base - tol:
                        return False
        return True
    rng = rng or np.random.default_rng(0)
    for _ in range(chains):
        order = rng.permutation(n)
        mask = np.zeros(n, dtype=bool)
        previous = 0.0
        for idx in order:
            mask[idx] = True
            current = measure.value_fn(mask)
            if current < previous - tol:
                return False
            previous = current
    return True
