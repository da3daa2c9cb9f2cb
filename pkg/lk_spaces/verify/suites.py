# -*- coding: utf-8 -*-
"""
ИМЕНОВАННЫЕ НАБОРЫ ПРОВЕРОК

Каждый набор собирает отчёты стенда (harness) по фиксированному
каталогу входов и сводит их в SuiteReport. Набор несогласован, если
несогласован хотя бы один отчёт; CLI превращает это в код выхода 3.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from lk_spaces.config import DEFAULT_CONFIG, LKConfig
from lk_spaces.core.lknorm import SpaceSpec
from lk_spaces.decision.verdicts import AssociateOutcome
from lk_spaces.grammar.spec_parser import parse_spec
from lk_spaces.validator import LKValidationError
from lk_spaces.verify.harness import (
    check_embedding_catalog,
    check_embedding_numeric,
    check_hardy_littlewood,
    check_holder_and_duality,
    check_lebesgue_coincidence,
    check_quasi_norm,
    check_rearrangement_oracle,
    check_star_gap,
    check_star_plain_identity,
    check_sv_suite,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuiteReport:
    name: str
    consistent: bool
    details: Tuple[Dict[str, Any], ...] = field(default_factory=tuple)

    def to_dict(self) -> Dict[str, Any]:
        return {"suite": self.name, "consistent": self.consistent, "details": [dict(d) for d in self.details]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SuiteReport":
        return cls(str(data["suite"]), bool(data["consistent"]), tuple(dict(d) for d in data.get("details", [])))


# ───────────────────────
# КАТАЛОГИ
# ───────────────────────

_L2 = "sv(1;0,-2,0|0,-2,0)"
_L3 = "sv(1;0,-3,0|0,-3,0)"

# (src, dst, μ(R), ожидаемый исход, ожидаемый случай)
EMBEDDING_CATALOG: Tuple[Tuple[str, str, float, str, str], ...] = (
    ("LK(p=3,q=1)", "LK(p=2,q=1)", 1.0, "Holds", "TELK-1"),
    ("LK(p=3,q=1)", "LK(p=2,q=1)", math.inf, "Fails", "TELK-1"),
    ("LK(p=2,q=1)", "LK(p=3,q=1)", 1.0, "Fails", "TELK-4"),
    ("LK(p=2,q=1)", "LK(p=3,q=1)", math.inf, "Fails", "TELK-4"),
    ("LK(p=2,q=1)", "LK(p=2,q=2)", math.inf, "Holds", "PELK"),
    ("LK(p=2,q=2)", "LK(p=2,q=2)", math.inf, "Holds", "TELK-2a"),
    ("LK(p=2,q=2)", "LK(p=2,q=2,b=sv(1;0,2,0|0,0,0))", 1.0, "Fails", "TELK-2a"),
    ("LK(p=2,q=2,b=sv(1;0,0,0|0,-1,0))", "LK(p=2,q=2)", math.inf, "Fails", "TELK-2a"),
    ("LK(p=2,q=2,b=sv(1;0,0,0|0,-1,0))", "LK(p=2,q=2)", 1.0, "Holds", "TELK-2a"),
    ("LK(p=2,q=1)", "LK(p=2,q=2,b=sv(1;0,1,0|0,0,0))", 1.0, "Fails", "TELK-2a"),
    ("LK(p=2,q=1,b=sv(1;0,1,0|0,1,0))", "LK(p=2,q=2,b=sv(1;0,1,0|0,1,0))", math.inf, "Holds", "PELK"),
    ("LK(p=2,q=2)", "LK(p=2,q=1,b=sv(1;0,-1,0|0,-1,0))", math.inf, "Holds", "TELK-3a"),
    ("LK(p=2,q=inf)", "LK(p=2,q=1)", 1.0, "Fails", "TELK-3a"),
    ("LK(p=2,q=2)", "LK(p=2,q=1,b=sv(1;0,-1,0|0,0,0))", 1.0, "Holds", "TELK-3a"),
    (f"LK(p=inf,q=1,b={_L2})", f"LK(p=inf,q=1,b={_L3})", math.inf, "Holds", "TELK-2b"),
    (f"LK(p=inf,q=1,b={_L3})", f"LK(p=inf,q=1,b={_L2})", math.inf, "Fails", "TELK-2b"),
    ("LK(p=inf,q=1,b=sv(1;0,-2,0|0,0,0))", "LK(p=inf,q=inf,b=sv(1;0,-1,0|0,0,0))", math.inf, "Holds", "TELK-2c"),
    ("LK(p=inf,q=1,b=sv(1;0,-2,0|0,0,0))", "LK(p=inf,q=inf)", math.inf, "Fails", "TELK-2c"),
    ("LK(p=inf,q=inf)", "LK(p=inf,q=inf,b=sv(1;0,-1,0|0,0,0))", math.inf, "Holds", "TELK-2d"),
    ("LK(p=inf,q=inf,b=sv(1;0,-1,0|0,0,0))", "LK(p=inf,q=inf)", math.inf, "Fails", "TELK-2d"),
    (f"LK(p=inf,q=2,b={_L2})", f"LK(p=inf,q=1,b={_L3})", math.inf, "Holds", "TELK-3b"),
    (f"LK(p=inf,q=4,b={_L2})", f"LK(p=inf,q=1,b={_L2})", math.inf, "Fails", "TELK-3b"),
    ("LK(p=inf,q=inf)", f"LK(p=inf,q=1,b={_L2})", math.inf, "Holds", "TELK-3c"),
    ("LK(p=inf,q=inf)", "LK(p=inf,q=1,b=sv(1;0,-2,0|0,0,0))", math.inf, "Fails", "TELK-3c"),
    ("LK(p=inf,q=inf)", "LK(p=inf,q=1,b=sv(1;0,-2,0|0,0,0))", 1.0, "Holds", "TELK-3c"),
    (f"LK(p=inf,q=1,b={_L2})", "LK(p=2,q=1)", 1.0, "Holds", "TELK-1"),
    ("LK(p=2,q=1)", f"LK(p=inf,q=1,b={_L2})", 1.0, "Fails", "TELK-4"),
    ("LK(p=1,q=1)", "LK(p=1,q=2)", math.inf, "Holds", "PELK"),
    ("LK(p=0.5,q=1)", "LK(p=0.5,q=0.5)", math.inf, "Fails", "TELK-3a"),
    ("LK(p=0.5,q=0.5)", "LK(p=0.5,q=1)", math.inf, "Holds", "PELK"),
    ("LK(p=2,q=2,b=sv(1;0,1,0|0,0,0))", "LK(p=2,q=2)", 1.0, "Holds", "TELK-2a"),
    ("LK(p=3,q=2,b=sv(2;0,0,0|0,0,0))", "LK(p=3,q=2)", math.inf, "Holds", "TELK-2a"),
    ("LK(p=2,q=2,star)", "LK(p=2,q=2)", math.inf, "Holds", "TELK-2a"),
    ("LK(p=1,q=1,b=sv(1;0,0,0|0,-2,0),star)", "LK(p=1,q=1,b=sv(1;0,0,0|0,-2,0))", math.inf, "Holds", "TELK-2a"),
    ("LK(p=1,q=1,b=sv(1;0,0,0|0,-2,0))", "LK(p=1,q=1,b=sv(1;0,0,0|0,-2,0),star)", math.inf, "Fails", "TELK-2a"),
    ("LK(p=inf,q=1)", "LK(p=2,q=1)", math.inf, "Fails", "TrivialSource"),
)

# Пространства, покрытые TAS/T2AS/T3AS, и один вход PAS (Zero). Последние три с
# непостоянным b: TAS-i, T2AS-2 и TAS-ii (последнее даёт NotCharacterized и пропускается).
DUALITY_SPECS: Tuple[str, ...] = (
    "LK(p=2,q=2)",
    "LK(p=3,q=2)",
    "LK(p=1.5,q=3)",
    "LK(p=2,q=1)",
    "LK(p=1,q=1)",
    "LK(p=1,q=0.5)",
    "LK(p=3,q=0.5)",
    "LK(p=2,q=inf)",
    "LK(p=inf,q=inf)",
    "LK(p=4,q=inf)",
    "LK(p=0.5,q=1)",
    "LK(p=2,q=2,b=sv(1;0,0,0|0,0.5,0))",
    "LK(p=inf,q=1,b=sv(1;0,-2,0|0,0,0))",
    "LK(p=inf,q=2,b=sv(1;0,-1,0|0,1,0))",
)

STAR_GAP_SPEC = "LK(p=1,q=1,b=sv(1;0,0,0|0,-2,0))"
STAR_GAP_CONTROLS: Tuple[str, ...] = ("LK(p=1.5,q=1)", "LK(p=2,q=1)", "LK(p=5,q=1)")

QUASI_NORM_SPECS: Tuple[str, ...] = (
    "LK(p=2,q=2)",
    "LK(p=0.5,q=1)",
    "LK(p=1,q=1)",
    "LK(p=3,q=0.5)",
    f"LK(p=inf,q=1,b={_L2})",
)


def catalog_triples(mu_override: Optional[float] = None) -> List[Tuple[SpaceSpec, SpaceSpec, float, str, str]]:
    """Разобранный каталог; mu_override подменяет меру каждой тройки."""
    triples = []
    for src, dst, mu, outcome, case in EMBEDDING_CATALOG:
        mu = mu if mu_override is None else mu_override
        triples.append((parse_spec(src).with_measure(mu), parse_spec(dst).with_measure(mu), mu, outcome, case))
    return triples


# ───────────────────────
# НАБОРЫ
# ───────────────────────

def _rearrange_suite(config: LKConfig, samples: int) -> SuiteReport:
    report = check_rearrangement_oracle(10 * samples, config.seed)
    return SuiteReport("rearrange", report.consistent, (report.to_dict(),))


def _hl_suite(config: LKConfig, samples: int) -> SuiteReport:
    report = check_hardy_littlewood(10 * samples, config.seed)
    return SuiteReport("hl", report.consistent, (report.to_dict(),))


def _lebesgue_suite(config: LKConfig, samples: int) -> SuiteReport:
    report = check_lebesgue_coincidence(n=samples, seed=config.seed, config=config)
    return SuiteReport("lebesgue", report.consistent, (report.to_dict(),))


def _duality_reports(config: LKConfig, samples: int):
    return [check_holder_and_duality(parse_spec(text), min(samples, 20), config) for text in DUALITY_SPECS]


def _holder_suite(config: LKConfig, samples: int) -> SuiteReport:
    details, consistent = [], True
    for report in _duality_reports(config, samples):
        details.append(report.to_dict())
        consistent = consistent and (report.skipped or report.holder_stable)
    return SuiteReport("holder", consistent, tuple(details))


def _duality_suite(config: LKConfig, samples: int) -> SuiteReport:
    details, consistent = [], True
    for report in _duality_reports(config, samples):
        entry = report.to_dict()
        if report.skipped:
            # пропуск допустим только для нулевого ассоциированного (PAS)
            ok = report.associate.outcome is AssociateOutcome.ZERO
        else:
            ok = report.band_stable
        entry["accepted"] = ok
        details.append(entry)
        consistent = consistent and ok
    return SuiteReport("duality", consistent, tuple(details))


def _embed_suite(config: LKConfig, samples: int) -> SuiteReport:
    triples = catalog_triples()
    catalog = check_embedding_catalog((src, dst, mu) for src, dst, mu, _, _ in triples)
    details: List[Dict[str, Any]] = [{"catalog": catalog.to_dict()}]
    consistent = catalog.consistent
    for src, dst, mu, outcome, case in triples:
        report = check_embedding_numeric(src, dst, mu, min(samples, 8), config)
        expected = report.verdict.outcome.value == outcome and report.verdict.case == case
        entry = report.to_dict()
        entry["expected"] = {"outcome": outcome, "case": case, "matched": expected}
        details.append(entry)
        consistent = consistent and expected and report.verdict_consistent
    return SuiteReport("embed", consistent, tuple(details))


def _stargap_suite(config: LKConfig, samples: int) -> SuiteReport:
    spec = parse_spec(STAR_GAP_SPEC)
    gap = check_star_gap(spec, config)
    at_smallest = dict(gap.ratios).get(10.0 ** -config.sweep_decades, math.nan)
    prediction = 1.0 + config.sweep_decades * math.log(10.0)
    within = abs(at_smallest - prediction) <= 0.3 * prediction
    identity = check_star_plain_identity(spec, min(samples, 10), config)
    details: List[Dict[str, Any]] = [
        dict(gap.to_dict(), prediction=prediction, within_tolerance=within),
        identity.to_dict(),
    ]
    consistent = gap.growth_confirmed and within and identity.stable
    for text in STAR_GAP_CONTROLS:
        control = check_star_gap(parse_spec(text), config)
        details.append(control.to_dict())
        consistent = consistent and control.plateau and not control.growth_confirmed
    return SuiteReport("stargap", consistent, tuple(details))


def _quasinorm_suite(config: LKConfig, samples: int) -> SuiteReport:
    reports = check_quasi_norm([parse_spec(t) for t in QUASI_NORM_SPECS], samples, config.seed, config)
    return SuiteReport("quasinorm", all(r.consistent for r in reports), tuple(r.to_dict() for r in reports))


def _sv_suite(config: LKConfig, samples: int) -> SuiteReport:
    report = check_sv_suite(config.seed, n=max(1, samples // 5))
    return SuiteReport("sv", report.consistent, (report.to_dict(),))


_SUITES: Dict[str, Callable[[LKConfig, int], SuiteReport]] = {
    "rearrange": _rearrange_suite,
    "hl": _hl_suite,
    "lebesgue": _lebesgue_suite,
    "holder": _holder_suite,
    "duality": _duality_suite,
    "embed": _embed_suite,
    "stargap": _stargap_suite,
    "quasinorm": _quasinorm_suite,
    "sv": _sv_suite,
}

SUITE_NAMES: Tuple[str, ...] = tuple(_SUITES)


def run_suite(name: str, config: LKConfig = DEFAULT_CONFIG, samples: Optional[int] = None) -> SuiteReport:
    """Запускает набор по имени; неизвестное имя — LKValidationError."""
    try:
        runner = _SUITES[name]
    except KeyError:
        raise LKValidationError(f"Неизвестный набор {name!r}; доступны: {', '.join(SUITE_NAMES)}")
    report = runner(config, samples or config.samples)
    log = logger.info if report.consistent else logger.warning
    log("Набор %s: согласован=%s", name, report.consistent)
    return report


__all__ = [
    "SuiteReport",
    "SUITE_NAMES",
    "EMBEDDING_CATALOG",
    "DUALITY_SPECS",
    "STAR_GAP_SPEC",
    "STAR_GAP_CONTROLS",
    "QUASI_NORM_SPECS",
    "catalog_triples",
    "run_suite",
]
