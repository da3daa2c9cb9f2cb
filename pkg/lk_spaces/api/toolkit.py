# -*- coding: utf-8 -*-
"""
ЕДИНЫЙ ИНТЕРФЕЙС LK-SPACES

Фасад над слоями пакета для CLI и внешних скриптов:
- grammar: разбор LK(...) и sv(...);
- core: нормы, преобразования медленно меняющихся функций;
- decision: классификация, вложения, ассоциированные пространства;
- verify: именованные наборы проверок;
- storage: чтение носителей, рендер отчётов и печати.

Все методы принимают либо готовые значения, либо их текстовую форму.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Union

from lk_spaces.config import LKConfig
from lk_spaces.core.lknorm import NormEvaluation, SpaceSpec, lk_norm
from lk_spaces.core.rearrange import rearrange
from lk_spaces.core.svcalc import (
    SlowlyVaryingFunction,
    SupKind,
    SVPropertyReport,
    TransformKind,
    sup_transform,
    sv_eval,
    sv_property_check,
    tilde_hat_transform,
)
from lk_spaces.decision.classify import associate_space, classify_space, decide_embedding
from lk_spaces.decision.verdicts import AssociateResult, ClassificationReport, EmbeddingVerdict
from lk_spaces.grammar.spec_parser import parse_spec, parse_sv
from lk_spaces.storage.formats import read_step_function, render_report
from lk_spaces.storage.seal import ReportSeal
from lk_spaces.validator import SpaceSpecValidator
from lk_spaces.verify.suites import SuiteReport, run_suite

logger = logging.getLogger(__name__)

SpecLike = Union[SpaceSpec, str]
SVLike = Union[SlowlyVaryingFunction, str]


@dataclass(frozen=True)
class NormReport:
    spec: SpaceSpec
    source: str
    evaluation: NormEvaluation

    def to_dict(self) -> Dict[str, Any]:
        return {"spec": self.spec.to_dict(), "input": self.source, "norm": self.evaluation.to_dict()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "NormReport":
        return cls(SpaceSpec.from_dict(data["spec"]), str(data["input"]), NormEvaluation.from_dict(data["norm"]))


@dataclass(frozen=True)
class SVReport:
    """Результат sv eval|tilde|hat|sup: число, функция или символьный исход."""
    operation: str
    b: SlowlyVaryingFunction
    value: Optional[float] = None
    result: Optional[SlowlyVaryingFunction] = None
    outcome: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "operation": self.operation,
            "b": self.b.to_dict(),
            "value": self.value,
            "result": self.result.to_dict() if self.result is not None else None,
            "outcome": self.outcome,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SVReport":
        result = data.get("result")
        return cls(
            operation=str(data["operation"]),
            b=SlowlyVaryingFunction.from_dict(data["b"]),
            value=data.get("value"),
            result=SlowlyVaryingFunction.from_dict(result) if result is not None else None,
            outcome=data.get("outcome"),
        )

    def __str__(self) -> str:
        if self.value is not None:
            return f"{self.operation}({self.b}) = {self.value!r}"
        if self.result is not None:
            return f"{self.operation}({self.b}) = {self.result}"
        return f"{self.operation}({self.b}): {self.outcome}"


class LorentzKaramataToolkit:
    """Точка входа: конфигурация фиксируется при создании."""

    def __init__(self, config: Optional[LKConfig] = None):
        self.config = config if config is not None else LKConfig.load()
        logger.debug("Toolkit: %s", self.config.to_dict())

    # ───────────────────────
    # РАЗБОР
    # ───────────────────────

    @staticmethod
    def spec(value: SpecLike, mu: Optional[float] = None) -> SpaceSpec:
        spec = parse_spec(value) if isinstance(value, str) else value
        return spec if mu is None else spec.with_measure(mu)

    @staticmethod
    def sv(value: SVLike) -> SlowlyVaryingFunction:
        return parse_sv(value) if isinstance(value, str) else value

    # ───────────────────────
    # РЕШЕНИЯ
    # ───────────────────────

    def classify(self, spec: SpecLike, mu: Optional[float] = None) -> ClassificationReport:
        return classify_space(self.spec(spec, mu))

    def embed(self, src: SpecLike, dst: SpecLike, mu: Optional[float] = None) -> EmbeddingVerdict:
        source = self.spec(src, mu)
        return decide_embedding(source, self.spec(dst, source.mu_r), source.mu_r)

    def associate(self, spec: SpecLike, mu: Optional[float] = None) -> AssociateResult:
        return associate_space(self.spec(spec, mu))

    # ───────────────────────
    # НОРМЫ
    # ───────────────────────

    def norm(self, spec: SpecLike, carrier: Union[str, Path], mu: Optional[float] = None) -> NormReport:
        """Норма (звёздная, если star) носителя из CSV-файла value,mass."""
        space = self.spec(spec, mu)
        fstar = rearrange(read_step_function(carrier))
        return NormReport(space, str(carrier), lk_norm(space, fstar, self.config))

    # ───────────────────────
    # МЕДЛЕННО МЕНЯЮЩИЕСЯ ФУНКЦИИ
    # ───────────────────────

    def sv_eval(self, b: SVLike, t: float) -> SVReport:
        t = SpaceSpecValidator.validate_positive_argument(t)
        func = self.sv(b)
        return SVReport("eval", func, value=float(sv_eval(func, t)))

    def sv_transform(self, b: SVLike, kind: Union[TransformKind, str]) -> SVReport:
        func, kind = self.sv(b), TransformKind(kind)
        result = tilde_hat_transform(func, kind)
        if isinstance(result, SlowlyVaryingFunction):
            return SVReport(kind.value, func, result=result)
        return SVReport(kind.value, func, outcome=result.value)

    def sv_sup(self, b: SVLike, kind: Union[SupKind, str] = SupKind.TILDE_SUP) -> SVReport:
        func, kind = self.sv(b), SupKind(kind)
        result = sup_transform(func, kind)
        if isinstance(result, SlowlyVaryingFunction):
            return SVReport(kind.value, func, result=result)
        return SVReport(kind.value, func, outcome=result.value)

    def sv_check(self, b: SVLike, eps: float) -> SVPropertyReport:
        return sv_property_check(self.sv(b), eps)

    # ───────────────────────
    # ПРОВЕРКИ И ОТЧЁТЫ
    # ───────────────────────

    def verify(self, suite: str, samples: Optional[int] = None) -> SuiteReport:
        return run_suite(suite, self.config, samples)

    def render(self, report: Any, fmt: str = "json", seal: bool = False, kind: str = "report") -> str:
        """JSON/YAML отчёта; seal=True оборачивает его в {"report", "seal"}."""
        if not seal:
            return render_report(report, fmt)
        content = report.to_dict() if hasattr(report, "to_dict") else report
        sealed = ReportSeal.sealed(kind, content, self.config.digest_algorithm)
        return render_report(sealed, fmt)


__all__ = ["LorentzKaramataToolkit", "NormReport", "SVReport"]
