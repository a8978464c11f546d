"""Built-in counterexample fixtures and their reproduction."""

import numpy as np
import pytest

from fqfrs import COUNTEREXAMPLES, lukasiewicz_tnorm, reproduce, validate_t_equivalence

REFERENCE_RELATIONS = {
    "ywic": [
        [1.0, 0.5, 1.0, 0.0, 0.0],
        [0.5, 1.0, 0.5, 0.5, 0.5],
        [1.0, 0.5, 1.0, 0.0, 0.0],
        [0.0, 0.5, 0.0, 1.0, 1.0],
        [0.0, 0.5, 0.0, 1.0, 1.0],
    ],
    "ywis": [
        [1.0, 1.0, 0.8, 0.09, 0.0],
        [1.0, 1.0, 0.8, 0.09, 0.0],
        [0.8, 0.8, 1.0, 0.29, 0.2],
        [0.09, 0.09, 0.29, 1.0, 0.91],
        [0.0, 0.0, 0.2, 0.91, 1.0],
    ],
    "wowac": [
        [1.0, 0.5, 1.0],
        [0.5, 1.0, 0.5],
        [1.0, 0.5, 1.0],
    ],
    "wowas": [
        [1.0, 0.2, 0.2, 0.2, 0.8],
        [0.2, 1.0, 1.0, 1.0, 0.0],
        [0.2, 1.0, 1.0, 1.0, 0.0],
        [0.2, 1.0, 1.0, 1.0, 0.0],
        [0.8, 0.0, 0.0, 0.0, 1.0],
    ],
}


def test_fixture_names_and_kinds():
    names = [f.name for f in COUNTEREXAMPLES]
    assert names == ["ywic", "ywis", "wowac", "wowas"]
    for fixture in COUNTEREXAMPLES:
        assert fixture.model_kind == fixture.name


@pytest.mark.parametrize("fixture", COUNTEREXAMPLES, ids=lambda f: f.name)
def test_fixture_relations_match_references(fixture):
    R = fixture.relation()
    assert np.allclose(R.degrees, REFERENCE_RELATIONS[fixture.name], atol=1e-12)
    assert validate_t_equivalence(R, lukasiewicz_tnorm(), 1e-12).is_t_equivalence()


def test_reproduction_passes():
    for result in reproduce():
        assert result.passed, (result.fixture.name, result.max_deviation)
        assert result.max_deviation <= result.fixture.tolerance


def test_every_fixture_shows_an_inconsistency():
    for result in reproduce():
        assert np.max(result.difference) > 1e-3
        # inconsistencies concentrate in a single element on these instances
        assert int(np.sum(result.difference > 1e-9)) == 1
