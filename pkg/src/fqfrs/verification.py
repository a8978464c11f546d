"""Self-verification: counterexample reproduction plus property smoke checks.

The smoke checks exercise the load-bearing identities on randomized
instances: residuation, integral agreement with a reference evaluation, and
the approximation fixpoints that granular representability rests on.  They
are sized to finish in well under a second; the exhaustive suites live in
the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .approximations import (
    ApproximationModel,
    lower_approx,
    lower_classic,
    upper_approx,
    upper_classic,
)
from .connectives import (
    lukasiewicz_tnorm,
    minimum_tnorm,
    product_tnorm,
    residual_implicator,
)
from .counterexamples import CounterexampleResult, reproduce
from .fuzzy_sets import FuzzySet, Universe, build_relation, min_transitive_closure
from .integrals import choquet, sugeno
from .measures import random_measure

__all__ = ["VerificationCheck", "run_smoke_checks", "run_verification"]

_ALL_TNORMS = (lukasiewicz_tnorm, minimum_tnorm, product_tnorm)


@dataclass(frozen=True)
class VerificationCheck:
    name: str
    passed: bool
    detail: str


def _reference_choquet(values: np.ndarray, measure) -> float:
    """Definition-level evaluation: per-position suffix sets, plain chain."""
    n = values.shape[0]
    perm = np.argsort(values, kind="stable")
    terms = []
    for i in range(n):
        mask = np.zeros(n, dtype=bool)
        mask[perm[i:]] = True
        mu_here = measure.value(mask)
        if i + 1 < n:
            nxt = np.zeros(n, dtype=bool)
            nxt[perm[i + 1:]] = True
            mu_next = measure.value(nxt)
        else:
            mu_next = 0.0
        terms.append(values[perm[i]] * (mu_here - mu_next))
    return math.fsum(terms)


def _reference_sugeno(values: np.ndarray, measure) -> float:
    n = values.shape[0]
    perm = np.argsort(values, kind="stable")
    best = 0.0
    for i in range(n):
        mask = np.zeros(n, dtype=bool)
        mask[perm[i:]] = True
        best = max(best, min(measure.value(mask), values[perm[i]]))
    return best


def _random_equivalence(rng, n, for_tnorm: str):
    """A T-equivalence for the requested t-norm.

    Attribute-built relations are Lukasiewicz-transitive; the minimum and
    product t-norms need the stronger min-transitive closure.
    """
    if for_tnorm == "lukasiewicz":
        return build_relation(rng.uniform(0.0, 1.0, (n, rng.integers(1, 4))))
    return min_transitive_closure(rng.uniform(0.0, 1.0, (n, n)))


def _check_residuation(tol: float = 1e-12) -> VerificationCheck:
    g = np.linspace(0.0, 1.0, 51)
    x = g[:, None, None]
    y = g[None, :, None]
    z = g[None, None, :]
    worst = 0.0
    for factory in _ALL_TNORMS:
        t = factory()
        imp = residual_implicator(t)
        lhs = imp.fn(t.fn(x, y), z)
        rhs = imp.fn(x, imp.fn(y, z))
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return VerificationCheck("residuation exchange", worst <= tol,
                             f"max deviation {worst:.2e}")


def _check_integral_reference(rng, cases: int = 100) -> VerificationCheck:
    worst = 0.0
    for _ in range(cases):
        n = int(rng.integers(2, 7))
        measure = random_measure(Universe(n), rng)
        f = FuzzySet.of(rng.uniform(0.0, 1.0, n))
        worst = max(worst,
                    abs(choquet(f, measure) - _reference_choquet(f.degrees, measure)),
                    abs(sugeno(f, measure) - _reference_sugeno(f.degrees, measure)))
    return VerificationCheck("integral reference agreement", worst == 0.0,
                             f"max deviation {worst:.2e}")


def _check_choquet_fixpoint(rng, instances: int = 20, tol: float = 1e-9) -> VerificationCheck:
    tnorm = lukasiewicz_tnorm()
    implicator = residual_implicator(tnorm)
    worst = 0.0
    for _ in range(instances):
        n = int(rng.integers(3, 8))
        R = _random_equivalence(rng, n, "lukasiewicz")
        A = FuzzySet.of(rng.uniform(0.0, 1.0, n))
        model = ApproximationModel.choquet_model(random_measure(R.universe, rng),
                                                 tnorm, implicator)
        lower = lower_approx(model, R, A)
        upper = upper_approx(model, R, A)
        worst = max(
            worst,
            float(np.max(np.abs(lower_classic(R, lower, implicator).degrees - lower.degrees))),
            float(np.max(np.abs(upper_classic(R, upper, tnorm).degrees - upper.degrees))),
        )
    return VerificationCheck("choquet approximation fixpoint", worst <= tol,
                             f"max deviation {worst:.2e}")


def _check_sugeno_fixpoint(rng, instances: int = 10, tol: float = 1e-9) -> VerificationCheck:
    worst = 0.0
    for factory in _ALL_TNORMS:
        tnorm = factory()
        implicator = residual_implicator(tnorm)
        for _ in range(instances):
            n = int(rng.integers(3, 8))
            R = _random_equivalence(rng, n, tnorm.name)
            A = FuzzySet.of(rng.uniform(0.0, 1.0, n))
            model = ApproximationModel.sugeno_model(random_measure(R.universe, rng),
                                                    tnorm, implicator)
            lower = lower_approx(model, R, A)
            upper = upper_approx(model, R, A)
            worst = max(
                worst,
                float(np.max(np.abs(lower_classic(R, lower, implicator).degrees - lower.degrees))),
                float(np.max(np.abs(upper_classic(R, upper, tnorm).degrees - upper.degrees))),
            )
    return VerificationCheck("sugeno approximation fixpoint", worst <= tol,
                             f"max deviation {worst:.2e}")


def run_smoke_checks(seed: int = 20240917) -> list[VerificationCheck]:
    rng = np.random.default_rng(seed)
    return [
        _check_residuation(),
        _check_integral_reference(rng),
        _check_choquet_fixpoint(rng),
        _check_sugeno_fixpoint(rng),
    ]


def run_verification() -> tuple[list[CounterexampleResult], list[VerificationCheck]]:
    """Counterexample reproduction plus the smoke suite."""
    return reproduce(), run_smoke_checks()
