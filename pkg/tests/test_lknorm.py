# -*- coding: utf-8 -*-
import math

import pytest

from lk_spaces.core.lknorm import (
    INF,
    SpaceSpec,
    endpoint_norms,
    fundamental_function,
    is_quasiconcave,
    lk_norm,
    lk_norm_star,
    measure_quasi_constant,
    star_as_plain,
)
from lk_spaces.core.rearrange import DecreasingStep, scale_values
from lk_spaces.core.svcalc import EndpointSignature, SlowlyVaryingFunction
from lk_spaces.validator import ContractViolation, DomainError, LKValidationError


def test_lebesgue_two_pieces(two_piece_fstar):
    assert lk_norm(SpaceSpec(2, 2), two_piece_fstar).value == pytest.approx(math.sqrt(6.0), rel=1e-9)


def test_power_weight_on_characteristic():
    # ∫₀¹ t^{−1/2} dt
    assert lk_norm(SpaceSpec(2, 1), DecreasingStep.characteristic(1.0)).value == pytest.approx(2.0, rel=1e-8)
    assert lk_norm(SpaceSpec(2, 1), DecreasingStep.characteristic(4.0)).value == pytest.approx(4.0, rel=1e-8)


def test_weak_and_bounded_cases():
    chi = DecreasingStep.characteristic(9.0)
    assert lk_norm(SpaceSpec(INF, INF), chi).value == pytest.approx(1.0, rel=1e-6)
    assert lk_norm(SpaceSpec(2, INF), chi).value == pytest.approx(3.0, rel=1e-4)


def test_trivial_space_norm_diverges():
    evaluation = lk_norm(SpaceSpec(INF, 1), DecreasingStep.characteristic(1.0))
    assert evaluation.diverged
    assert math.isinf(evaluation.value)


def test_norm_of_zero_function():
    assert lk_norm(SpaceSpec(2, 2), DecreasingStep.empty()).value == 0.0


def test_norm_is_homogeneous(two_piece_fstar):
    spec = SpaceSpec(3, 1.5, SlowlyVaryingFunction.from_triples(1.0, (0, 1, 0), (0, -1, 0)))
    base = lk_norm(spec, two_piece_fstar).value
    assert lk_norm(spec, scale_values(two_piece_fstar, 7.0)).value == pytest.approx(7.0 * base, rel=1e-8)


def test_norm_respects_finite_measure(two_piece_fstar):
    # при μ(R) = 1 остаётся только кусок со значением 2
    assert lk_norm(SpaceSpec(2, 2, mu_r=1.0), two_piece_fstar).value == pytest.approx(2.0, rel=1e-9)


def test_star_norm_diverges_for_constant_b():
    evaluation = lk_norm_star(SpaceSpec(1, 1, star=True), DecreasingStep.characteristic(1.0))
    assert evaluation.diverged


def test_star_norm_with_log_decay(log_decay_at_infinity):
    chi = DecreasingStep.characteristic(1.0)
    star = SpaceSpec(1, 1, log_decay_at_infinity, star=True)
    assert lk_norm(star, chi).value == pytest.approx(2.0, rel=1e-5)
    assert lk_norm(star.as_star(False), chi).value == pytest.approx(1.0, rel=1e-8)


def test_fundamental_function():
    assert fundamental_function(SpaceSpec(2, 2), 4.0) == pytest.approx(2.0, rel=1e-9)
    assert fundamental_function(SpaceSpec(2, INF), 9.0) == pytest.approx(3.0, rel=1e-4)


def test_fundamental_function_beyond_measure():
    with pytest.raises(DomainError):
        fundamental_function(SpaceSpec(2, 2, mu_r=1.0), 2.0)


def test_endpoint_norms_identity_weight():
    chi = DecreasingStep.characteristic(2.0)
    norms = endpoint_norms(lambda t: t, chi)
    assert norms.lorentz == pytest.approx(2.0)
    assert norms.marcinkiewicz == pytest.approx(2.0, rel=1e-6)


def test_endpoint_norms_truncated_weight():
    assert endpoint_norms(lambda t: min(t, 1.0), DecreasingStep.characteristic(2.0)).lorentz == pytest.approx(1.0)


def test_endpoint_norms_marcinkiewicz():
    norms = endpoint_norms(math.sqrt, DecreasingStep.characteristic(4.0))
    assert norms.marcinkiewicz == pytest.approx(2.0, rel=1e-6)


def test_endpoint_norms_rejects_decreasing_weight():
    with pytest.raises(ContractViolation):
        endpoint_norms(lambda t: 1.0 / t, DecreasingStep.characteristic(1.0))


def test_star_as_plain(log_decay_at_infinity):
    plain = star_as_plain(SpaceSpec(1, 1, log_decay_at_infinity, star=True))
    assert plain is not None
    assert not plain.star
    assert plain.b.sig0 == EndpointSignature(0, 1, 0)
    assert plain.b.sig_inf == EndpointSignature(0, -1, 0)
    assert star_as_plain(SpaceSpec(1, 1, star=True)) is None
    assert star_as_plain(SpaceSpec(2, 2, star=True)) is None


def test_quasi_constant_of_banach_space(two_piece_fstar):
    chi = DecreasingStep.characteristic(1.0)
    total = DecreasingStep((0.0, 1.0, 3.0), (3.0, 1.0))
    k = measure_quasi_constant(SpaceSpec(2, 2), [(two_piece_fstar, chi, total)])
    assert 0 < k <= 1.0 + 1e-9


def test_fundamental_function_is_quasiconcave():
    assert is_quasiconcave(SpaceSpec(2, 2))


@pytest.mark.parametrize("p, q", [(0, 1), (1, -2), (float("nan"), 1)])
def test_invalid_exponents(p, q):
    with pytest.raises(LKValidationError):
        SpaceSpec(p, q)


def test_spec_dict_and_str():
    spec = SpaceSpec(2, INF, mu_r=1.0, star=True)
    assert str(spec) == "LK(p=2,q=inf,b=sv(1; 0,0,0 | 0,0,0),mu=1,star)"
    data = spec.to_dict()
    assert data["q"] == "inf"
    assert SpaceSpec.from_dict(data) == spec
