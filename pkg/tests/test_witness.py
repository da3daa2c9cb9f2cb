# -*- coding: utf-8 -*-
import numpy as np
import pytest

from lk_spaces.core.lknorm import SpaceSpec, lk_norm
from lk_spaces.core.rearrange import DecreasingStep
from lk_spaces.core.svcalc import SlowlyVaryingFunction
from lk_spaces.validator import DomainError, LKValidationError
from lk_spaces.verify.witness import WitnessKind, WitnessRecipe, build_witness, discretize


def test_discretize_is_nonincreasing():
    witness = discretize(lambda t: -0.5 * np.log(t), 1e-4, 1e4, 8)
    assert all(a >= b for a, b in zip(witness.values, witness.values[1:]))
    assert witness.breakpoints[-1] == pytest.approx(1e4)
    assert witness.values[0] == pytest.approx(100.0)


def test_discretize_takes_running_maximum():
    # профиль растёт на [1, 10): мажоранта остаётся постоянной
    witness = discretize(lambda t: np.log(t), 1.0, 10.0, 4)
    assert witness.n_pieces == 1


def test_discretize_head_value():
    witness = discretize(lambda t: -np.log(t), 1.0, 100.0, 4, head_value=1.0)
    assert witness(0.5) == pytest.approx(1.0)
    assert witness(50.0) < 1.0


def test_discretize_rejects_overflow():
    with pytest.raises(DomainError):
        discretize(lambda t: np.full_like(t, 800.0), 1.0, 10.0, 4)


def test_characteristic_recipe():
    recipe = WitnessRecipe(WitnessKind.CHARACTERISTIC_SWEEP, SpaceSpec(2, 1), mass=3.0)
    assert build_witness(recipe) == DecreasingStep.characteristic(3.0)


def test_characteristic_recipe_beyond_measure():
    recipe = WitnessRecipe(WitnessKind.CHARACTERISTIC_SWEEP, SpaceSpec(2, 1, mu_r=1.0), mass=3.0)
    with pytest.raises(DomainError):
        build_witness(recipe)


def test_proper_gap_witness_separates_q():
    """t^{−1/2}ℓ^{−1}: норма в L^{2,1} растёт с окном, в L^{2,2} остаётся ограниченной."""
    source, target = SpaceSpec(2, 1), SpaceSpec(2, 2)
    norms = []
    for decades in (2, 4):
        recipe = WitnessRecipe(
            WitnessKind.PROPER_EMBEDDING_GAP, source, target,
            t_min=10.0 ** -decades, t_max=10.0 ** decades, points_per_decade=16,
        )
        fstar = build_witness(recipe)
        norms.append((lk_norm(source, fstar).value, lk_norm(target, fstar).value))
    (src_small, dst_small), (src_large, dst_large) = norms
    assert src_large / dst_large > src_small / dst_small


def test_tail_witness_needs_infinite_measure():
    recipe = WitnessRecipe(WitnessKind.CASE_P1_GREATER_P2, SpaceSpec(3, 1, mu_r=1.0), SpaceSpec(2, 1, mu_r=1.0))
    with pytest.raises(DomainError):
        build_witness(recipe)


def test_tail_witness_starts_with_unit_head():
    recipe = WitnessRecipe(WitnessKind.CASE_P1_GREATER_P2, SpaceSpec(3, 1), SpaceSpec(2, 1), t_max=1e4,
                           points_per_decade=8)
    witness = build_witness(recipe)
    assert witness.values[0] == pytest.approx(1.0)
    assert witness.support == pytest.approx(1e4)


def test_extremal_witness_window_is_clipped_by_measure():
    b = SlowlyVaryingFunction.from_triples(1.0, (0, 1, 0), (0, 0, 0))
    recipe = WitnessRecipe(WitnessKind.ASSOCIATE_EXTREMAL, SpaceSpec(2, 2, b, mu_r=10.0), t_min=1e-3)
    assert build_witness(recipe).support == pytest.approx(10.0)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"t_min": 1.0, "t_max": 1.0},
        {"t_min": -1.0},
        {"points_per_decade": 0},
        {"mass": 0.0},
    ],
)
def test_invalid_recipes(kwargs):
    with pytest.raises(LKValidationError):
        WitnessRecipe(WitnessKind.CHARACTERISTIC_SWEEP, SpaceSpec(2, 1), **kwargs)


def test_recipe_to_dict():
    data = WitnessRecipe("ProperEmbeddingGap", SpaceSpec(2, 1), SpaceSpec(2, 2)).to_dict()
    assert data["kind"] == "ProperEmbeddingGap"
    assert data["target"] == str(SpaceSpec(2, 2))
    assert data["t_max"] == 1e8
