# -*- coding: utf-8 -*-
"""
LK-SPACES — ВЫЧИСЛИМЫЕ ПРОСТРАНСТВА ЛОРЕНЦА–КАРАМАТА

Пакет вычисляет функционалы ‖·‖_{p,q,b} и ‖·‖_{(p,q,b)} на ступенчатых
функциях и решает вопросы о пространствах L^{p,q,b}: нетривиальность,
(квази)нормируемость, вложения, ассоциированные пространства, равенство
L и L-звезда. Каждый вердикт проверяется численным стендом.

Слои:
- core: медленно меняющиеся функции, перестановки, нормы;
- decision: классификация и вердикты;
- grammar: текстовая форма LK(...) / sv(...);
- verify: свидетели и наборы проверок;
- storage: носители CSV, отчёты JSON/YAML и их печати;
- api: фасад LorentzKaramataToolkit.
"""

# === ЯДРО ===
from .core.svcalc import EndpointSignature, SlowlyVaryingFunction, quad_oracle, sv_eval
from .core.rearrange import DecreasingStep, JointStepFunction, StepFunction, rearrange
from .core.lknorm import SpaceSpec, fundamental_function, lk_norm, lk_norm_star

# === РЕШЕНИЯ ===
from .decision.classify import associate_space, classify_space, decide_embedding
from .decision.verdicts import AssociateResult, ClassificationReport, EmbeddingVerdict

# === ГРАММАТИКА ===
from .grammar.spec_parser import parse_spec, parse_sv

# === ПРОВЕРКИ ===
from .verify.suites import SUITE_NAMES, run_suite

# === API, КОНФИГУРАЦИЯ, ВАЛИДАЦИЯ ===
from .api.toolkit import LorentzKaramataToolkit
from .config import DEFAULT_CONFIG, LKConfig
from .validator import (
    ContractViolation,
    DomainError,
    LKValidationError,
    SpaceSpecValidator,
    SpecParseError,
    UnsupportedInput,
)

__all__ = [
    # Основной интерфейс
    "LorentzKaramataToolkit",

    # Ядро
    "EndpointSignature",
    "SlowlyVaryingFunction",
    "sv_eval",
    "quad_oracle",
    "StepFunction",
    "JointStepFunction",
    "DecreasingStep",
    "rearrange",
    "SpaceSpec",
    "lk_norm",
    "lk_norm_star",
    "fundamental_function",

    # Решения
    "classify_space",
    "decide_embedding",
    "associate_space",
    "ClassificationReport",
    "EmbeddingVerdict",
    "AssociateResult",

    # Грамматика и проверки
    "parse_spec",
    "parse_sv",
    "run_suite",
    "SUITE_NAMES",

    # Конфигурация и валидация
    "LKConfig",
    "DEFAULT_CONFIG",
    "SpaceSpecValidator",
    "LKValidationError",
    "DomainError",
    "SpecParseError",
    "ContractViolation",
    "UnsupportedInput",
]

# === МЕТАДАННЫЕ ===
__lk_version__ = "1.0.0"
__case_ids__ = ("LQ", "PP4", "LP5", "TLKBFS", "CEQNa", "PEbbH", "PELK", "TELK", "PAS", "TAS", "T2AS", "T3AS")
__deterministic_reports__ = True
