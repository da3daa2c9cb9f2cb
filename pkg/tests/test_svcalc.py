# -*- coding: utf-8 -*-
import math

import numpy as np
import pytest

from lk_spaces.core.svcalc import (
    Boundedness,
    Endpoint,
    EndpointSignature,
    GrowthOrder,
    SlowlyVaryingFunction,
    SupKind,
    TransformKind,
    TransformOutcome,
    endpoint_boundedness,
    endpoint_integrability,
    power_limit,
    quad_oracle,
    sup_transform,
    sv_eval,
    sv_property_check,
    tilde_hat_transform,
)
from lk_spaces.validator import DomainError, LKValidationError


def sv(sig0, sig_inf=(0, 0, 0), scale=1.0):
    return SlowlyVaryingFunction.from_triples(scale, sig0, sig_inf)


# ───────────────────────
# ЗНАЧЕНИЯ
# ───────────────────────

@pytest.mark.parametrize(
    "b, t, expected",
    [
        (sv((0, 0, 0)), 17.0, 1.0),
        (sv((0, 1, 0)), math.exp(-1), 2.0),
        (sv((1, 0, 0)), math.exp(-4), math.exp(2)),
        (sv((0, 0, 0), (0, -2, 0)), math.e, 0.25),
        (sv((0, 5, 3), (0, -7, 2), scale=3.0), 1.0, 3.0),
    ],
)
def test_sv_eval_closed_forms(b, t, expected):
    assert sv_eval(b, t) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("t", [0.0, -1.0])
def test_sv_eval_rejects_nonpositive(t):
    with pytest.raises(DomainError):
        sv_eval(sv((0, 1, 0)), t)


def test_sv_eval_vectorised_matches_scalar():
    b = sv((0, -1, 2), (-1, 0, 0), scale=2.0)
    ts = np.geomspace(1e-6, 1e6, 13)
    values = sv_eval(b, ts)
    assert values == pytest.approx([sv_eval(b, float(t)) for t in ts])


def test_log_at_avoids_overflow():
    b = sv((3, 0, 0))
    assert np.isfinite(b.log_at(1e-300))
    assert float(b.log_at(math.exp(-4))) == pytest.approx(6.0)


def test_algebra_on_signatures():
    b1 = sv((0, 1, 0), (0, -1, 0), scale=2.0)
    b2 = sv((0, -2, 1), (1, 0, 0), scale=3.0)
    product = b1 * b2
    assert product.scale == pytest.approx(6.0)
    assert product.sig0 == EndpointSignature(0, -1, 1)
    assert (b1 ** 2).sig_inf == EndpointSignature(0, -2, 0)
    assert b1.reciprocal().scale == pytest.approx(0.5)
    assert b1.recip_arg().sig0 == b1.sig_inf
    t = 0.01
    assert sv_eval(b1 / b2, t) == pytest.approx(sv_eval(b1, t) / sv_eval(b2, t))


def test_lex_order_of_signatures():
    assert EndpointSignature(0, 0, -1).lex_sign() < 0
    assert EndpointSignature(-1, 5, 5).lex_sign() < 0
    assert EndpointSignature(0, 1, -9).lex_sign() > 0
    assert EndpointSignature(0, 0, 0).lex_sign() == 0


def test_growth_order_integrable_threshold():
    assert GrowthOrder(0, -1, -1, -2).integrable()
    assert not GrowthOrder(0, -1, -1, -1).integrable()
    assert GrowthOrder.of(EndpointSignature(0, -2, 0)).integrable()


def test_str_and_dict_shape():
    b = sv((0, -2, 0), (0, 1, 0))
    assert str(b) == "sv(1; 0,-2,0 | 0,1,0)"
    assert b.to_dict() == {"scale": 1.0, "sig0": [0.0, -2.0, 0.0], "sigInf": [0.0, 1.0, 0.0]}
    assert SlowlyVaryingFunction.from_dict(b.to_dict()) == b


def test_nonpositive_scale_rejected():
    with pytest.raises(LKValidationError):
        SlowlyVaryingFunction(scale=0.0)


# ───────────────────────
# АСИМПТОТИКА
# ───────────────────────

@pytest.mark.parametrize(
    "sig0, expected",
    [
        ((0, 2, 0), Boundedness.TENDS_TO_INFINITY),
        ((0, 0, -1), Boundedness.TENDS_TO_ZERO),
        ((0, 0, 0), Boundedness.BOUNDED_ABOVE),
    ],
)
def test_endpoint_boundedness(sig0, expected):
    assert endpoint_boundedness(sv(sig0), Endpoint.ZERO) is expected


@pytest.mark.parametrize(
    "sig0, q, a, endpoint, expected",
    [
        ((0, 0, 0), 1.0, 0.0, Endpoint.ZERO, False),
        ((0, -2, 0), 1.0, 0.0, Endpoint.ZERO, True),
        ((0, -2, 0), 2.0, 0.0, Endpoint.ZERO, True),
        ((0, -1, 0), 1.0, 0.0, Endpoint.ZERO, False),
        ((0, -1, -2), 1.0, 0.0, Endpoint.ZERO, True),
        ((0, -1, -1), 1.0, 0.0, Endpoint.ZERO, False),
        ((-1, 9, 9), 1.0, 0.0, Endpoint.ZERO, True),
        ((5, 0, 0), 1.0, 0.5, Endpoint.ZERO, True),
        ((0, 0, 0), 1.0, 0.5, Endpoint.INFINITY, False),
        ((0, 0, 0), 1.0, -0.5, Endpoint.INFINITY, True),
    ],
)
def test_endpoint_integrability(sig0, q, a, endpoint, expected):
    b = sv(sig0, sig0)
    assert endpoint_integrability(b, q, a, endpoint) is expected


def test_power_limit(constant_b):
    assert power_limit(constant_b, 0.5, Endpoint.ZERO) == 0.0
    assert math.isinf(power_limit(constant_b, -0.5, Endpoint.ZERO))
    assert math.isinf(power_limit(constant_b, 0.5, Endpoint.INFINITY))
    assert power_limit(sv((0, 0, 0), scale=4.0), 0.0, Endpoint.ZERO) == 4.0
    assert power_limit(sv((0, -1, 0)), 0.0, Endpoint.ZERO) == 0.0


# ───────────────────────
# ПРЕОБРАЗОВАНИЯ
# ───────────────────────

def test_tilde_of_log_decay_at_zero():
    result = tilde_hat_transform(sv((0, -2, 0)), TransformKind.TILDE)
    assert isinstance(result, SlowlyVaryingFunction)
    assert result.sig0 == EndpointSignature(0, -1, 0)
    assert result.sig_inf == EndpointSignature(0, 1, 0)
    assert result.scale == pytest.approx(1.0)


def test_hat_of_log_decay_at_infinity(log_decay_at_infinity):
    result = tilde_hat_transform(log_decay_at_infinity, TransformKind.HAT)
    assert isinstance(result, SlowlyVaryingFunction)
    assert result.sig_inf == EndpointSignature(0, -1, 0)
    assert result.sig0 == EndpointSignature(0, 1, 0)


@pytest.mark.parametrize("kind", [TransformKind.TILDE, TransformKind.HAT])
def test_transform_of_constant_diverges(constant_b, kind):
    assert tilde_hat_transform(constant_b, kind) is TransformOutcome.DIVERGES


def test_tilde_scale_for_exponential_decay():
    result = tilde_hat_transform(sv((-2, 0, 0)), TransformKind.TILDE)
    assert result.sig0 == EndpointSignature(-2, 0.5, 0)
    assert result.scale == pytest.approx(1.0)


def test_tilde_matches_oracle_near_zero():
    b = sv((0, -2, 0), (0, -2, 0))
    tilde = tilde_hat_transform(b, TransformKind.TILDE)
    t = 1e-8
    exact = quad_oracle(0.0, b, 1.0, (0.0, t)).value
    assert sv_eval(tilde, t) / exact == pytest.approx(1.0, rel=0.1)


def test_sup_transforms(constant_b):
    assert sup_transform(constant_b, SupKind.TILDE_SUP) == constant_b
    assert sup_transform(sv((0, 1, 0)), SupKind.TILDE_SUP) is TransformOutcome.NOT_FINITE
    envelope = sup_transform(sv((0, -1, 0), (0, -1, 0)), SupKind.TILDE_SUP)
    assert envelope.sig0 == EndpointSignature(0, -1, 0)
    assert envelope.sig_inf == EndpointSignature(0, 0, 0)
    assert envelope.scale == pytest.approx(1.0)


# ───────────────────────
# СВОЙСТВО SV И ОРАКУЛ
# ───────────────────────

def test_sv_property_of_constant(constant_b):
    report = sv_property_check(constant_b, 0.5)
    assert report.passed
    assert report.k == pytest.approx(1.0)


def test_sv_property_accepts_callable():
    report = sv_property_check(lambda t: 2.0 + np.sin(np.log(t)), 0.5)
    assert report.passed
    assert 1.0 <= report.k < 10.0


@pytest.mark.parametrize("eps", [0.0, -0.5])
def test_sv_property_nonpositive_eps_is_skipped(eps):
    report = sv_property_check(lambda t: 2.0 + np.sin(np.log(t)), eps)
    assert not report.passed
    assert report.skipped
    assert "пропущена" in report.reason
    assert math.isnan(report.k)


def test_sv_property_measured_failure_is_not_skipped():
    report = sv_property_check(lambda t: np.where(t < 1.0, 0.0, 1.0), 0.5)
    assert not report.passed
    assert not report.skipped


@pytest.mark.parametrize(
    "a, b, interval, expected",
    [
        (1.0, sv((0, 0, 0)), (0.0, 1.0), 1.0),
        (0.5, sv((0, 0, 0)), (0.0, 1.0), 2.0),
        (0.0, sv((0, -2, 0)), (0.0, 1.0), 1.0),
        (0.0, sv((0, 0, 0), (0, -2, 0)), (1.0, math.inf), 1.0),
    ],
)
def test_quad_oracle_values(a, b, interval, expected):
    result = quad_oracle(a, b, 1.0, interval)
    assert not result.diverged
    assert result.value == pytest.approx(expected, rel=1e-6)


def test_quad_oracle_signals_divergence(constant_b):
    result = quad_oracle(0.0, constant_b, 1.0, (0.0, 1.0))
    assert result.diverged
    assert math.isinf(result.value)


def test_quad_oracle_rejects_bad_interval(constant_b):
    with pytest.raises(DomainError):
        quad_oracle(1.0, constant_b, 1.0, (2.0, 1.0))
