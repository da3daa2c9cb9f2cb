# -*- coding: utf-8 -*-
"""Общие фикстуры тестов lk-spaces."""

import pytest

from lk_spaces.config import ENV_TOLERANCE, LKConfig
from lk_spaces.core.rearrange import DecreasingStep, StepFunction, rearrange
from lk_spaces.core.svcalc import SlowlyVaryingFunction
from lk_spaces.decision.classify import clear_caches


@pytest.fixture(autouse=True)
def _isolated(monkeypatch):
    """Без переменной допуска окружения и с чистыми кэшами вердиктов."""
    monkeypatch.delenv(ENV_TOLERANCE, raising=False)
    clear_caches()
    yield
    clear_caches()


@pytest.fixture
def config():
    return LKConfig()


@pytest.fixture
def constant_b():
    return SlowlyVaryingFunction.constant()


@pytest.fixture
def log_decay_at_zero():
    """sv(1; 0,−2,0 | 0,0,0): ℓ^{−2} на (0, 1]."""
    return SlowlyVaryingFunction.from_triples(1.0, (0, -2, 0), (0, 0, 0))


@pytest.fixture
def log_decay_at_infinity():
    """sv(1; 0,0,0 | 0,−2,0): ℓ^{−2} на [1, ∞)."""
    return SlowlyVaryingFunction.from_triples(1.0, (0, 0, 0), (0, -2, 0))


@pytest.fixture
def two_piece_fstar() -> DecreasingStep:
    """2 на [0,1), 1 на [1,3)."""
    return rearrange(StepFunction.of([(2, 1), (1, 2)]))
