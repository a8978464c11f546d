"""Built-in counterexamples to granular representability.

Each fixture is a small single-attribute instance on which one of the
quantifier-weighted models (YWIC, YWIS, WOWAC, WOWAS, all with the identity
quantifier and the Lukasiewicz connectives) produces a lower approximation
that is not a fixpoint of the classical lower approximation.  The reference
vectors pin the model's lower approximation, its classical re-approximation
and their difference; ``reproduce`` recomputes all three and compares.

The YWIC and WOWAC references are exact decimals; the YWIS and WOWAS
references are rounded, so those fixtures carry a looser tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .approximations import ApproximationModel, lower_approx, lower_classic
from .connectives import lukasiewicz_tnorm, residual_implicator
from .fuzzy_sets import FuzzyRelation, FuzzySet, build_relation
from .measures import identity_quantifier

__all__ = ["Counterexample", "CounterexampleResult", "COUNTEREXAMPLES", "reproduce"]


@dataclass(frozen=True)
class Counterexample:
    name: str
    model_kind: str
    attribute: tuple[float, ...]
    concept: tuple[float, ...]
    reference_lower: tuple[float, ...]
    reference_reapprox: tuple[float, ...]
    reference_difference: tuple[float, ...]
    tolerance: float

    def relation(self) -> FuzzyRelation:
        return build_relation(np.asarray(self.attribute)[:, None], sigmas=[1.0])

    def concept_set(self, universe) -> FuzzySet:
        return FuzzySet(universe, np.asarray(self.concept))


@dataclass(frozen=True)
class CounterexampleResult:
    fixture: Counterexample
    lower: np.ndarray
    reapprox: np.ndarray
    difference: np.ndarray
    max_deviation: float
    passed: bool


COUNTEREXAMPLES: tuple[Counterexample, ...] = (
    Counterexample(
        name="ywic",
        model_kind="ywic",
        attribute=(1.0, 0.5, 1.0, 0.0, 0.0),
        concept=(1.0, 1.0, 1.0, 0.0, 0.0),
        reference_lower=(1.0, 0.75, 1.0, 0.2, 0.2),
        reference_reapprox=(1.0, 0.7, 1.0, 0.2, 0.2),
        reference_difference=(0.0, 0.05, 0.0, 0.0, 0.0),
        tolerance=1e-9,
    ),
    Counterexample(
        name="ywis",
        model_kind="ywis",
        attribute=(0.0, 0.0, 0.2, 0.91, 1.0),
        concept=(1.0, 1.0, 1.0, 0.0, 0.0),
        reference_lower=(0.91, 0.91, 0.71, 0.19747, 0.0948),
        reference_reapprox=(0.91, 0.91, 0.71, 0.18479, 0.0948),
        reference_difference=(0.0, 0.0, 0.0, 0.01267, 0.0),
        tolerance=1e-4,
    ),
    Counterexample(
        name="wowac",
        model_kind="wowac",
        attribute=(0.0, 0.5, 0.0),
        concept=(0.0, 1.0, 0.0),
        reference_lower=(0.2, 0.75, 0.2),
        reference_reapprox=(0.2, 0.7, 0.2),
        reference_difference=(0.0, 0.05, 0.0),
        tolerance=1e-9,
    ),
    Counterexample(
        name="wowas",
        model_kind="wowas",
        attribute=(0.8, 0.0, 0.0, 0.0, 1.0),
        concept=(1.0, 1.0, 0.5, 0.5, 0.0),
        reference_lower=(2 / 3, 0.5, 0.5, 0.5, 4 / 9),
        reference_reapprox=(29 / 45, 0.5, 0.5, 0.5, 4 / 9),
        reference_difference=(1 / 45, 0.0, 0.0, 0.0, 0.0),
        tolerance=1e-4,
    ),
)


def reproduce() -> list[CounterexampleResult]:
    """Recompute every fixture and compare against its reference vectors."""
    tnorm = lukasiewicz_tnorm()
    implicator = residual_implicator(tnorm)
    quantifier = identity_quantifier()
    results = []
    for fixture in COUNTEREXAMPLES:
        R = fixture.relation()
        A = fixture.concept_set(R.universe)
        model = ApproximationModel.of_kind(fixture.model_kind, quantifier,
                                           R.universe, tnorm, implicator)
        lower = lower_approx(model, R, A)
        reapprox = lower_classic(R, lower, implicator)
        difference = lower.degrees - reapprox.degrees
        deviation = max(
            np.max(np.abs(lower.degrees - np.asarray(fixture.reference_lower))),
            np.max(np.abs(reapprox.degrees - np.asarray(fixture.reference_reapprox))),
            np.max(np.abs(difference - np.asarray(fixture.reference_difference))),
        )
        results.append(CounterexampleResult(
            fixture=fixture,
            lower=lower.degrees,
            reapprox=reapprox.degrees,
            difference=difference,
            max_deviation=float(deviation),
            passed=bool(deviation <= fixture.tolerance),
        ))
    return results
