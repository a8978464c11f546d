"""Lower and upper approximation operators.

``lower_classic``/``upper_classic`` are the implicator/conjunctor min-max
operators evaluated along rows.  ``lower_approx``/``upper_approx`` evaluate a
quantifier model per element: the implication (resp. conjunction) values of
the element's foreset are aggregated by a Choquet or Sugeno integral whose
measure depends on the model kind.  Upper approximations of the
quantifier-weighted kinds use the unary form, i.e. the symmetric measure
obtained by fixing the weighting argument to the whole universe.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .connectives import Implicator, TNorm, lukasiewicz_tnorm, residual_implicator
from .fuzzy_sets import FuzzyRelation, FuzzySet, same_universe
from .integrals import _choquet_values, _sugeno_values
from .measures import (
    MonotoneMeasure,
    RIMQuantifier,
    WeightVector,
    owa_weights_to_measure,
    symmetric_measure,
    wowa_measure,
    ywi_measure,
)

__all__ = [
    "MODEL_KINDS",
    "GranularityWarning",
    "ApproximationModel",
    "ApproximationResult",
    "lower_classic",
    "upper_classic",
    "lower_approx",
    "upper_approx",
    "approximate",
]

MODEL_KINDS = ("classic", "choquet", "sugeno", "owa", "ywic", "ywis", "wowac", "wowas")

_QUANTIFIER_KINDS = ("ywic", "ywis", "wowac", "wowas")


class GranularityWarning(UserWarning):
    """Emitted when a model configuration voids the granularity guarantee."""


@dataclass(frozen=True)
class ApproximationModel:
    """A tagged approximation operator: kind plus its parameters.

    The implicator defaults to the residual of the t-norm, which is the
    pairing under which the granularity guarantees hold.
    """

    kind: str
    tnorm: TNorm
    implicator: Implicator
    measure: MonotoneMeasure | None = None
    weights: WeightVector | None = None
    quantifier: RIMQuantifier | None = None

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise ValueError(f"unknown model kind {self.kind!r}")
        if self.kind in ("choquet", "sugeno"):
            if self.measure is None:
                raise ValueError(f"{self.kind} model requires a monotone measure")
        elif self.measure is not None:
            raise ValueError(f"{self.kind} model does not take a measure")
        if self.kind == "owa":
            if (self.weights is None) == (self.quantifier is None):
                raise ValueError("owa model requires either weights or a quantifier")
        elif self.weights is not None:
            raise ValueError(f"{self.kind} model does not take weights")
        if self.kind in _QUANTIFIER_KINDS and self.quantifier is None:
            raise ValueError(f"{self.kind} model requires a RIM quantifier")
        if self.kind not in _QUANTIFIER_KINDS + ("owa",) and self.quantifier is not None:
            raise ValueError(f"{self.kind} model does not take a quantifier")

    @staticmethod
    def _connectives(tnorm, implicator):
        tnorm = tnorm or lukasiewicz_tnorm()
        return tnorm, implicator or residual_implicator(tnorm)

    @classmethod
    def classic(cls, tnorm: TNorm | None = None, implicator: Implicator | None = None):
        return cls("classic", *cls._connectives(tnorm, implicator))

    @classmethod
    def choquet_model(cls, measure: MonotoneMeasure, tnorm: TNorm | None = None,
                      implicator: Implicator | None = None):
        return cls("choquet", *cls._connectives(tnorm, implicator), measure=measure)

    @classmethod
    def sugeno_model(cls, measure: MonotoneMeasure, tnorm: TNorm | None = None,
                     implicator: Implicator | None = None):
        return cls("sugeno", *cls._connectives(tnorm, implicator), measure=measure)

    @classmethod
    def owa_model(cls, weights: WeightVector | None = None,
                  quantifier: RIMQuantifier | None = None,
                  tnorm: TNorm | None = None, implicator: Implicator | None = None):
        return cls("owa", *cls._connectives(tnorm, implicator),
                   weights=weights, quantifier=quantifier)

    @classmethod
    def ywic(cls, quantifier: RIMQuantifier, tnorm: TNorm | None = None,
             implicator: Implicator | None = None):
        return cls("ywic", *cls._connectives(tnorm, implicator), quantifier=quantifier)

    @classmethod
    def ywis(cls, quantifier: RIMQuantifier, tnorm: TNorm | None = None,
             implicator: Implicator | None = None):
        return cls("ywis", *cls._connectives(tnorm, implicator), quantifier=quantifier)

    @classmethod
    def wowac(cls, quantifier: RIMQuantifier, tnorm: TNorm | None = None,
              implicator: Implicator | None = None):
        return cls("wowac", *cls._connectives(tnorm, implicator), quantifier=quantifier)

    @classmethod
    def wowas(cls, quantifier: RIMQuantifier, tnorm: TNorm | None = None,
              implicator: Implicator | None = None):
        return cls("wowas", *cls._connectives(tnorm, implicator), quantifier=quantifier)

    @classmethod
    def of_kind(cls, kind: str, quantifier: RIMQuantifier | None = None,
                universe=None, tnorm: TNorm | None = None,
                implicator: Implicator | None = None):
        """Build a quantifier-driven model by kind name.

        The choquet/sugeno kinds take the symmetric measure generated by
        the quantifier on ``universe``; general measures go through the
        explicit constructors instead.
        """
        tnorm, implicator = cls._connectives(tnorm, implicator)
        if kind == "classic":
            return cls("classic", tnorm, implicator)
        if kind not in MODEL_KINDS:
            raise ValueError(f"unknown model kind {kind!r}")
        if quantifier is None:
            raise ValueError(f"{kind} model requires a RIM quantifier")
        if kind in ("choquet", "sugeno"):
            if universe is None:
                raise ValueError(f"{kind} model built from a quantifier requires a universe")
            return cls(kind, tnorm, implicator,
                       measure=symmetric_measure(quantifier, universe))
        return cls(kind, tnorm, implicator, quantifier=quantifier)


@dataclass(frozen=True)
class ApproximationResult:
    lower: FuzzySet
    upper: FuzzySet | None = None


def lower_classic(R: FuzzyRelation, A: FuzzySet, I: Implicator) -> FuzzySet:
    """(apr A)(x) = min over y of I(R(x,y), A(y))."""
    universe = same_universe(R, A)
    table = I(R.degrees, A.degrees[None, :])
    return FuzzySet(universe, table.min(axis=1))


def upper_classic(R: FuzzyRelation, A: FuzzySet, C: TNorm) -> FuzzySet:
    """(apr A)(x) = max over y of C(R(x,y), A(y))."""
    universe = same_universe(R, A)
    table = C(R.degrees, A.degrees[None, :])
    return FuzzySet(universe, table.max(axis=1))


def _require_reflexive(R: FuzzyRelation):
    if not R.is_reflexive():
        raise ValueError("quantifier models require a reflexive relation "
                         "(unit diagonal)")


def _check_model_measure(model: ApproximationModel, universe) -> MonotoneMeasure:
    measure = model.measure
    if measure.universe != universe:
        raise ValueError("model measure is defined over a different universe")
    return measure


def _warn_unless_convex(model: ApproximationModel):
    if model.kind in ("choquet", "owa") and not model.tnorm.is_d_convex():
        warnings.warn(
            f"t-norm {model.tnorm.name!r} is not D-convex: the {model.kind} "
            f"approximation is not guaranteed to be granularly representable",
            GranularityWarning,
            stacklevel=3,
        )


def _owa_measure(model: ApproximationModel, universe) -> MonotoneMeasure:
    if model.weights is not None:
        return owa_weights_to_measure(model.weights, universe)
    return symmetric_measure(model.quantifier, universe)


def lower_approx(model: ApproximationModel, R: FuzzyRelation, A: FuzzySet) -> FuzzySet:
    """Per element y: aggregate I(R(x,y), A(x)) over x with the model's
    quantifier; the classic kind takes the plain minimum."""
    universe = same_universe(R, A)
    _require_reflexive(R)
    _warn_unless_convex(model)
    table = model.implicator(R.degrees, A.degrees[:, None])  # [x, y]
    return FuzzySet(universe, _aggregate_lower(model, R, table))


def upper_approx(model: ApproximationModel, R: FuzzyRelation, A: FuzzySet) -> FuzzySet:
    """Per element y: aggregate T(R(x,y), A(x)) over x with the model's
    unary quantifier; the classic kind takes the plain maximum."""
    universe = same_universe(R, A)
    _require_reflexive(R)
    _warn_unless_convex(model)
    table = model.tnorm(R.degrees, A.degrees[:, None])  # [x, y]
    n = universe.size
    kind = model.kind
    if kind == "classic":
        return FuzzySet(universe, table.max(axis=0))
    if kind in ("choquet", "sugeno"):
        measure = _check_model_measure(model, universe)
        agg = _choquet_values if kind == "choquet" else _sugeno_values
        return FuzzySet(universe, _per_column(table, n, lambda f, y: agg(f, measure)))
    if kind == "owa":
        measure = _owa_measure(model, universe)
        return FuzzySet(universe, _per_column(table, n, lambda f, y: _choquet_values(f, measure)))
    # quantifier-weighted kinds: unary form, weighting argument fixed to X
    measure = symmetric_measure(model.quantifier, universe)
    agg = _choquet_values if kind in ("ywic", "wowac") else _sugeno_values
    return FuzzySet(universe, _per_column(table, n, lambda f, y: agg(f, measure)))


def _per_column(table: np.ndarray, n: int, fn) -> np.ndarray:
    out = np.empty(n)
    for y in range(n):
        out[y] = fn(table[:, y], y)
    return np.clip(out, 0.0, 1.0)


def _aggregate_lower(model: ApproximationModel, R: FuzzyRelation, table: np.ndarray) -> np.ndarray:
    universe = R.universe
    n = universe.size
    kind = model.kind
    if kind == "classic":
        return table.min(axis=0)
    if kind in ("choquet", "sugeno"):
        measure = _check_model_measure(model, universe)
        agg = _choquet_values if kind == "choquet" else _sugeno_values
        return _per_column(table, n, lambda f, y: agg(f, measure))
    if kind == "owa":
        measure = _owa_measure(model, universe)
        return _per_column(table, n, lambda f, y: _choquet_values(f, measure))

    quantifier = model.quantifier
    row_measure = ywi_measure if kind in ("ywic", "ywis") else wowa_measure
    agg = _choquet_values if kind in ("ywic", "wowac") else _sugeno_values

    def cell(f, y):
        measure = row_measure(quantifier, FuzzySet(universe, R.degrees[:, y].copy()))
        return agg(f, measure)

    return _per_column(table, n, cell)


def approximate(model: ApproximationModel, R: FuzzyRelation, A: FuzzySet,
                with_upper: bool = True) -> ApproximationResult:
    lower = lower_approx(model, R, A)
    upper = upper_approx(model, R, A) if with_upper else None
    return ApproximationResult(lower, upper)
