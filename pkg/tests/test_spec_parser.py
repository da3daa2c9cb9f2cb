# -*- coding: utf-8 -*-
import math

import pytest

from lk_spaces.core.lknorm import SpaceSpec
from lk_spaces.core.svcalc import EndpointSignature, SlowlyVaryingFunction
from lk_spaces.grammar.spec_parser import parse_spec, parse_sv, tokenize
from lk_spaces.validator import LKValidationError, SpecParseError


def test_parse_minimal_spec():
    assert parse_spec("LK(p=2,q=1)") == SpaceSpec(2, 1)


def test_parse_full_spec():
    spec = parse_spec("LK(p=inf, q=1, b=sv(2; 0,-2,0 | 0,0,1), mu=1.5, star)")
    assert math.isinf(spec.p)
    assert spec.q == 1.0
    assert spec.b.scale == 2.0
    assert spec.b.sig0 == EndpointSignature(0, -2, 0)
    assert spec.b.sig_inf == EndpointSignature(0, 0, 1)
    assert spec.mu_r == 1.5
    assert spec.star


def test_unicode_minus_and_key_order():
    assert parse_spec("LK(q=2, p=3, b=sv(1;0,−1,0|0,0,0))") == parse_spec("LK(p=3,q=2,b=sv(1;0,-1,0|0,0,0))")


@pytest.mark.parametrize("text", ["LK(p=2,q=1)", "LK(p=inf,q=inf,mu=1,star)", "LK(p=0.5,q=3,b=sv(2;-1,0.5,0|0,-2,1))"])
def test_str_reparses(text):
    spec = parse_spec(text)
    assert parse_spec(str(spec)) == spec


def test_parse_sv():
    assert parse_sv("sv(1; 0,0,0 | 0,-2,0)") == SlowlyVaryingFunction.from_triples(1.0, (0, 0, 0), (0, -2, 0))


def test_tokenize_positions():
    tokens = tokenize("LK(p=2)")
    assert [t.text for t in tokens] == ["LK", "(", "p", "=", "2", ")", ""]
    assert tokens[4].position == 5
    assert tokens[-1].kind == "end"


@pytest.mark.parametrize(
    "text, position",
    [
        ("LK(p=2,q=1", 10),
        ("LK(p=2)", 7),
        ("LK(p=2,q=1,p=3)", 11),
        ("LK(p=2,q=1,r=3)", 11),
        ("XK(p=2,q=1)", 0),
        ("LK(p=2,q=1) tail", 12),
        ("LK(p=2,q=1,b=sv(0;0,0,0|0,0,0))", 13),
        ("LK(p=2,q=#)", 9),
    ],
)
def test_parse_errors_carry_position(text, position):
    with pytest.raises(SpecParseError) as info:
        parse_spec(text)
    assert info.value.position == position


def test_invalid_exponent_is_validation_error():
    with pytest.raises(LKValidationError) as info:
        parse_spec("LK(p=0,q=1)")
    assert not isinstance(info.value, SpecParseError)


def test_bad_signature_arity():
    with pytest.raises(SpecParseError):
        parse_sv("sv(1; 0,0 | 0,0,0)")
