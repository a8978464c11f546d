"""Shared test utilities: independent reference implementations and
random-instance generators.

The reference integrals are written directly from their definitions (explicit
suffix sets, measure queried per set) so they share no code path with the
library implementations they check.
"""

import math

import numpy as np

from fqfrs import FuzzySet, build_relation, min_transitive_closure


def brute_choquet(values, measure):
    """Definition-level Choquet: sort ascending, telescope the chain."""
    values = np.asarray(values, dtype=float)
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


def brute_sugeno(values, measure):
    """Definition-level Sugeno: max over the chain of min(measure, value)."""
    values = np.asarray(values, dtype=float)
    n = values.shape[0]
    perm = np.argsort(values, kind="stable")
    best = 0.0
    for i in range(n):
        mask = np.zeros(n, dtype=bool)
        mask[perm[i:]] = True
        best = max(best, min(measure.value(mask), values[perm[i]]))
    return best


def brute_owa(values, weights):
    """Sorted dot product: first weight against the largest value."""
    ordered = sorted(values, reverse=True)
    return math.fsum(w * v for w, v in zip(weights, ordered))


def random_tl_equivalence(rng, n, max_features=4):
    """Lukasiewicz-equivalence from random attribute columns."""
    m = int(rng.integers(1, max_features))
    return build_relation(rng.uniform(0.0, 1.0, (n, m)))


def random_min_equivalence(rng, n):
    """Min-transitive equivalence, valid for every t-norm at once."""
    return min_transitive_closure(rng.uniform(0.0, 1.0, (n, n)))


def random_fuzzy_set(rng, universe):
    return FuzzySet(universe, rng.uniform(0.0, 1.0, universe.size))


def consistency_by_double_loop(R, A, t, tol):
    """Per-element consistency checked with explicit loops: element y is
    consistent when T(R(x,y), A(y)) <= A(x) + tol for every x."""
    n = R.universe.size
    out = []
    for y in range(n):
        ok = True
        for x in range(n):
            lhs = float(t(R.degrees[x, y], A.degrees[y]))
            if lhs > A.degrees[x] + tol:
                ok = False
                break
        out.append(ok)
    return out


def all_masks(n):
    """All subsets of range(n) as boolean masks, ordered by bitmask value."""
    for m in range(1 << n):
        yield (m >> np.arange(n)) & 1 == 1
