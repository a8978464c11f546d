"""Finite-universe fuzzy sets and fuzzy relations.

Degrees are stored as dense float64 arrays.  All constructors validate that
degrees lie in [0, 1]; instances are immutable after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .connectives import TNorm

__all__ = [
    "Universe",
    "FuzzySet",
    "FuzzyRelation",
    "RelationReport",
    "foreset",
    "fuzzy_cardinality",
    "validate_t_equivalence",
    "build_relation",
    "min_transitive_closure",
]


@dataclass(frozen=True)
class Universe:
    """An indexed finite universe, optionally with element labels."""

    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("universe must contain at least one element")
        if self.labels is not None:
            labels = tuple(self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != self.size:
                raise ValueError("label count does not match universe size")
            if len(set(labels)) != len(labels):
                raise ValueError("universe labels must be unique")

    def label(self, index: int) -> str:
        return self.labels[index] if self.labels else str(index)


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _validated_degrees(values, shape_hint: str) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{shape_hint} degrees must be finite")
    if arr.size and (arr.min() < 0.0 or arr.max() > 1.0):
        raise ValueError(f"{shape_hint} degrees must lie in [0, 1]")
    return _freeze(arr)


@dataclass(frozen=True)
class FuzzySet:
    """Membership degrees in [0, 1] over an indexed finite universe."""

    universe: Universe
    degrees: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = _validated_degrees(self.degrees, "fuzzy set")
        if arr.ndim != 1 or arr.shape[0] != self.universe.size:
            raise ValueError("fuzzy set degrees must be a vector over the universe")
        object.__setattr__(self, "degrees", arr)

    @classmethod
    def of(cls, values, universe: Universe | None = None) -> "FuzzySet":
        arr = np.asarray(values, dtype=float)
        return cls(universe or Universe(arr.shape[0]), arr)

    @classmethod
    def empty(cls, universe: Universe) -> "FuzzySet":
        return cls(universe, np.zeros(universe.size))

    @classmethod
    def whole(cls, universe: Universe) -> "FuzzySet":
        return cls(universe, np.ones(universe.size))

    def __len__(self):
        return self.universe.size


@dataclass(frozen=True)
class FuzzyRelation:
    """Square array of relation degrees in [0, 1] over one universe."""

    universe: Universe
    degrees: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = _validated_degrees(self.degrees, "fuzzy relation")
        n = self.universe.size
        if arr.shape != (n, n):
            raise ValueError("fuzzy relation degrees must be an n-by-n array")
        object.__setattr__(self, "degrees", arr)

    @classmethod
    def of(cls, values, universe: Universe | None = None) -> "FuzzyRelation":
        arr = np.asarray(values, dtype=float)
        return cls(universe or Universe(arr.shape[0]), arr)

    @classmethod
    def identity(cls, universe: Universe) -> "FuzzyRelation":
        return cls(universe, np.eye(universe.size))

    def is_reflexive(self) -> bool:
        return bool(np.all(np.diag(self.degrees) == 1.0))


@dataclass(frozen=True)
class RelationReport:
    reflexive: bool
    symmetric: bool
    t_transitive: bool

    def is_t_equivalence(self) -> bool:
        return self.reflexive and self.symmetric and self.t_transitive


def same_universe(*objs) -> Universe:
    """Return the shared universe or raise on mismatch."""
    first = objs[0].universe
    for other in objs[1:]:
        if other.universe != first:
            raise ValueError("operands are defined over different universes")
    return first


def foreset(R: FuzzyRelation, y: int) -> FuzzySet:
    """The fuzzy set of elements related to ``y``: degrees R(., y)."""
    n = R.universe.size
    if not 0 <= y < n:
        raise IndexError(f"element index {y} out of range for universe of size {n}")
    return FuzzySet(R.universe, R.degrees[:, y].copy())


def fuzzy_cardinality(A: FuzzySet) -> float:
    """Sum of membership degrees."""
    return math.fsum(A.degrees)


def validate_t_equivalence(R: FuzzyRelation, t: TNorm, tol: float = 1e-9) -> RelationReport:
    """Check reflexivity, symmetry and T-transitivity up to ``tol``.

    T-transitivity holds when T(R(x,y), R(y,z)) <= R(x,z) + tol for all
    triples.
    """
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    M = R.degrees
    reflexive = bool(np.all(np.abs(np.diag(M) - 1.0) <= tol))
    symmetric = bool(np.all(np.abs(M - M.T) <= tol))
    transitive = True
    for y in range(R.universe.size):
        composed = t.fn(M[:, y][:, None], M[y, :][None, :])
        if np.any(composed > M + tol):
            transitive = False
            break
    return RelationReport(reflexive, symmetric, transitive)


def build_relation(data, sigmas=None) -> FuzzyRelation:
    """Mean of per-attribute similarities max(0, 1 - |a(y)-a(x)| / sigma_a).

    ``data`` is an n-by-m attribute matrix; ``sigmas`` are per-attribute
    scales (sample standard deviations of the columns when omitted).  A zero
    scale marks a constant attribute, which contributes similarity 1 for
    every pair.  The result is reflexive, symmetric and Lukasiewicz-transitive.
    """
    X = np.asarray(data, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    if X.ndim != 2 or X.shape[1] < 1:
        raise ValueError("attribute data must be an n-by-m matrix with m >= 1")
    if not np.all(np.isfinite(X)):
        raise ValueError("attribute data contains non-finite values")
    n, m = X.shape
    if sigmas is None:
        sigmas = X.std(axis=0, ddof=1) if n > 1 else np.zeros(m)
    sig = np.asarray(sigmas, dtype=float)
    if sig.shape != (m,):
        raise ValueError("one scale per attribute is required")
    if np.any(sig < 0) or not np.all(np.isfinite(sig)):
        raise ValueError("attribute scales must be finite and non-negative")

    acc = np.zeros((n, n))
    for a in range(m):
        col = X[:, a]
        if sig[a] == 0.0:
            acc += 1.0
        else:
            acc += np.maximum(0.0, 1.0 - np.abs(col[None, :] - col[:, None]) / sig[a])
    degrees = acc / m
    np.fill_diagonal(degrees, 1.0)
    return FuzzyRelation(Universe(n), np.clip(degrees, 0.0, 1.0))


def min_transitive_closure(degrees) -> FuzzyRelation:
    """Max-min transitive closure of a symmetric degree matrix.

    The closure is reflexive, symmetric and min-transitive, which makes it
    T-transitive for every t-norm (T <= min).  Useful for constructing
    relations that satisfy the equivalence hypothesis of any connective
    choice at once.
    """
    M = np.array(degrees, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("closure requires a square degree matrix")
    if not np.all(np.isfinite(M)) or M.min() < 0.0 or M.max() > 1.0:
        raise ValueError("degrees must lie in [0, 1]")
    M = np.maximum(M, M.T)
    np.fill_diagonal(M, 1.0)
    n = M.shape[0]
    for z in range(n):
        M = np.maximum(M, np.minimum(M[:, z : z + 1], M[z : z + 1, :]))
    return FuzzyRelation(Universe(n), M)
