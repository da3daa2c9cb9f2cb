# -*- coding: utf-8 -*-
"""
РЕШАЮЩИЙ ДВИЖОК

Каждая теорема о пространствах Лоренца–Караматы записана как тотальная
функция от SpaceSpec: нетривиальность и квазибанаховость, свойство P5,
банахова нормируемость, совпадение с L^{(p,q,b)}, вложения и
ассоциированные пространства. Все условия сводятся к лексикографическим
сравнениям сигнатур и порядков роста из svcalc; численных интегралов
здесь нет.

Вердикты кэшируются через functools.lru_cache по неизменяемым спецификациям.
"""

import logging
import math
from dataclasses import replace
from functools import lru_cache
from typing import List, Optional, Tuple, Union

from lk_spaces.core.lknorm import INF, SpaceSpec, star_as_plain
from lk_spaces.core.svcalc import (
    Endpoint,
    GrowthOrder,
    SlowlyVaryingFunction,
    SupKind,
    TransformKind,
    TransformOutcome,
    endpoint_integrability,
    integral_order,
    sup_transform,
    tilde_hat_transform,
)
from lk_spaces.decision.verdicts import (
    AssociateOutcome,
    AssociateResult,
    ClassificationReport,
    EmbeddingVerdict,
    FundamentalSignature,
    Outcome,
    P5Status,
    make_conditions,
)
from lk_spaces.validator import SpaceSpecValidator, UnsupportedInput

logger = logging.getLogger(__name__)

ConditionList = List[Tuple[str, bool]]

# Идентификаторы рецептов свидетелей (см. lk_spaces.verify.witness.WitnessKind)
CHARACTERISTIC_SWEEP = "CharacteristicSweep"
PROPER_EMBEDDING_GAP = "ProperEmbeddingGap"
CASE_P1_LESS_P2 = "CaseP1LessP2"
CASE_P1_GREATER_P2 = "CaseP1GreaterP2InfMeasure"

TRIVIAL_SOURCE = "TrivialSource"
TRIVIAL_TARGET = "TrivialTarget"
# Fails(StarNotReduced): звёздное пространство с p = 1, не сводимое ни CEQNa, ни PEbbH
STAR_NOT_REDUCED = "StarNotReduced"


# ───────────────────────
# ПРЕДИКАТЫ НА СИГНАТУРАХ
# ───────────────────────

def conjugate(q: float) -> Optional[float]:
    """q′ = q/(q−1) при q ∈ (1, ∞), 1 при q = ∞, ∞ при q = 1; None при q < 1."""
    q = SpaceSpecValidator.validate_exponent("q", q)
    if math.isinf(q):
        return 1.0
    if q == 1:
        return INF
    if q < 1:
        return None
    return q / (q - 1.0)


def bounded_near(b: SlowlyVaryingFunction, endpoint: Endpoint) -> bool:
    return b.signature(endpoint).lex_sign() <= 0


def bounded_below_near(b: SlowlyVaryingFunction, endpoint: Endpoint) -> bool:
    return b.signature(endpoint).lex_sign() >= 0


def equivalent_to_nonincreasing(b: SlowlyVaryingFunction) -> bool:
    """b ≈ невозрастающая функция ⇔ sig0 ≥lex 0 и sigInf ≤lex 0."""
    return bounded_below_near(b, Endpoint.ZERO) and bounded_near(b, Endpoint.INFINITY)


def _weighted_norm_finite(b: SlowlyVaryingFunction, q: float, endpoint: Endpoint) -> bool:
    """‖t^{−1/q} b(t) χ‖_q < ∞ у конца; при q = ∞ это ограниченность b."""
    if math.isinf(q):
        return bounded_near(b, endpoint)
    return endpoint_integrability(b, q, 0.0, endpoint)


def guard_holds(spec: SpaceSpec) -> bool:
    """Условие нетривиальности при p = ∞: ‖t^{−1/q} b χ_{(0,1)}‖_q < ∞."""
    return not math.isinf(spec.p) or _weighted_norm_finite(spec.b, spec.q, Endpoint.ZERO)


def _sides(mu_r: float) -> Tuple[Endpoint, ...]:
    """Концы (0, μ(R)), на которых условие может нарушиться."""
    return (Endpoint.ZERO,) if math.isfinite(mu_r) else (Endpoint.ZERO, Endpoint.INFINITY)


def _tilde_order(b: SlowlyVaryingFunction, q: float, endpoint: Endpoint) -> GrowthOrder:
    """Порядок ∫_0^t s⁻¹ b(s)^q ds; сходимость в нуле обеспечена охранным условием."""
    order = integral_order(b ** q, TransformKind.TILDE, endpoint)
    if isinstance(order, TransformOutcome):
        raise UnsupportedInput(f"∫_0 s⁻¹ b^q расходится для b = {b}, q = {q}")
    return order


def _tilde_sup(b: SlowlyVaryingFunction) -> SlowlyVaryingFunction:
    replacement = sup_transform(b, SupKind.TILDE_SUP)
    if isinstance(replacement, TransformOutcome):
        raise UnsupportedInput(f"sup_(0,t) b бесконечен для b = {b}")
    return replacement


# ───────────────────────
# КЛАССИФИКАЦИЯ
# ───────────────────────

def _p5_rule(spec: SpaceSpec) -> Tuple[P5Status, str]:
    p, q, b = spec.p, spec.q, spec.b
    if p > 1:
        return P5Status.YES, ("LP5-i-a" if 1 <= q < p else "CP5")
    if p < 1:
        return P5Status.NO, "PAS"
    tends_to_zero = not bounded_below_near(b, Endpoint.ZERO)
    if tends_to_zero and q >= 1:
        return P5Status.NO, "CP5b-2"
    if not tends_to_zero and q <= 1:
        return P5Status.YES, ("LP5-i-b" if q == 1 else "CP5b-1")
    return P5Status.UNKNOWN, "P5-open"


def _banach_case(spec: SpaceSpec) -> Optional[str]:
    if spec.q < 1:
        return None
    if 1 < spec.p < INF:
        return "TLKBFS-i"
    if math.isinf(spec.p) and guard_holds(spec):
        return "TLKBFS-ii"
    if spec.p == 1 and spec.q == 1 and equivalent_to_nonincreasing(spec.b):
        return "TLKBFS-iii"
    return None


def _star_case(spec: SpaceSpec) -> Optional[str]:
    if 1 < spec.p < INF:
        return "PP4-i"
    if spec.p == 1 and _weighted_norm_finite(spec.b, spec.q, Endpoint.INFINITY):
        return "PP4-ii"
    if math.isinf(spec.p) and guard_holds(spec):
        return "PP4-iii"
    return None


def _fundamental_signature(spec: SpaceSpec) -> Optional[FundamentalSignature]:
    """φ ≈ t^{1/p} b при p < ∞; при p = ∞ это tilde(b^q)^{1/q} либо sup_(0,t) b."""
    if not guard_holds(spec):
        return None
    b = spec.b
    if not math.isinf(spec.p):
        return FundamentalSignature(
            spec.inv_p, GrowthOrder.of(b.sig0), GrowthOrder.of(b.sig_inf)
        )
    if math.isinf(spec.q):
        envelope = _tilde_sup(b)
        return FundamentalSignature(0.0, GrowthOrder.of(envelope.sig0), GrowthOrder.of(envelope.sig_inf))
    return FundamentalSignature(
        0.0,
        _tilde_order(b, spec.q, Endpoint.ZERO).scaled(1.0 / spec.q),
        _tilde_order(b, spec.q, Endpoint.INFINITY).scaled(1.0 / spec.q),
    )


@lru_cache(maxsize=1024)
def _classify(spec: SpaceSpec) -> ClassificationReport:
    nontrivial = guard_holds(spec)
    citations = ["LQ"]

    p5, p5_rule = _p5_rule(spec)
    citations.append(p5_rule)

    banach_case = _banach_case(spec)
    citations.append(banach_case or "TLKBFS")

    star_case = _star_case(spec)
    citations.append(star_case or "PP4")
    star_banach = star_case is not None and spec.q >= 1
    if star_banach:
        citations.append("LN")

    citations.append("CEQNa")
    plain = star_as_plain(spec.as_star())
    if plain is not None:
        citations.append("PEbbH")

    return ClassificationReport(
        nontrivial=nontrivial,
        quasi_banach=nontrivial,
        banach_equivalent=banach_case is not None,
        p5=p5,
        p5_rule=p5_rule,
        star_nontrivial=star_case is not None,
        star_banach=star_banach,
        equals_star=spec.p > 1,
        star_plain_equivalent=plain,
        fundamental_signature=_fundamental_signature(spec),
        citations=tuple(citations),
    )


def classify_space(spec: SpaceSpec) -> ClassificationReport:
    """Сводный отчёт о пространстве; тотальна на корректных спецификациях."""
    report = _classify(spec)
    logger.debug("classify %s → nontrivial=%s, p5=%s", spec, report.nontrivial, report.p5.value)
    return report


# ───────────────────────
# ВЛОЖЕНИЯ
# ───────────────────────

def _plain_form(spec: SpaceSpec) -> Tuple[Optional[SpaceSpec], Optional[str]]:
    """
    Приводит звёздное пространство к обычному (CEQNa при p > 1, PEbbH при p = q = 1).
    Возвращает (None, "PP4"), если звёздное пространство тривиально, и
    (spec, STAR_NOT_REDUCED), если переписать его в обычное нельзя.
    """
    if not spec.star:
        return spec, None
    if _star_case(spec) is None:
        return None, "PP4"
    if spec.p > 1:
        return spec.as_star(False), "CEQNa"
    plain = star_as_plain(spec)
    if plain is not None:
        return plain, "PEbbH"
    return spec, STAR_NOT_REDUCED


def _fails(case: str, conditions: ConditionList, citations: List[str], witness: Optional[str]) -> EmbeddingVerdict:
    return EmbeddingVerdict(Outcome.FAILS, case, make_conditions(conditions), tuple(citations), witness)


def _verdict(case: str, conditions: ConditionList, citations: List[str], witness: str) -> EmbeddingVerdict:
    outcome = Outcome.HOLDS if all(value for _, value in conditions) else Outcome.FAILS
    return EmbeddingVerdict(
        outcome, case, make_conditions(conditions), tuple(citations),
        CHARACTERISTIC_SWEEP if outcome is Outcome.HOLDS else witness,
    )


def _ratio_bounded(b2: SlowlyVaryingFunction, b1: SlowlyVaryingFunction, mu_r: float) -> ConditionList:
    quotient = b2 / b1
    return [(f"ratio_bounded_at_{e.value}", bounded_near(quotient, e)) for e in _sides(mu_r)]


def _same_p_lower_q(src: SpaceSpec, dst: SpaceSpec, mu_r: float, citations: List[str]) -> EmbeddingVerdict:
    """p₁ = p₂, q₁ ≤ q₂."""
    b1, b2, q1, q2 = src.b, dst.b, src.q, dst.q
    if q1 < q2:
        pelk = _ratio_bounded(b2, b1, mu_r)
        if all(value for _, value in pelk):
            return _verdict("PELK", [("q1_lt_q2", True)] + pelk, citations + ["PELK"], CHARACTERISTIC_SWEEP)

    if not math.isinf(src.p):
        return _verdict("TELK-2a", _ratio_bounded(b2, b1, mu_r), citations + ["TELK-2a"], CHARACTERISTIC_SWEEP)

    if math.isinf(q1) and math.isinf(q2):
        conditions = _ratio_bounded(_tilde_sup(b2), _tilde_sup(b1), mu_r)
        return _verdict("TELK-2d", conditions, citations + ["TELK-2d", "PbND"], CHARACTERISTIC_SWEEP)

    conditions = []
    for e in _sides(mu_r):
        denominator = _tilde_order(b1, q1, e).scaled(1.0 / q1)
        if math.isinf(q2):
            numerator = GrowthOrder.of(b2.signature(e))
            name = "b2_over_tilde_bounded"
        else:
            numerator = _tilde_order(b2, q2, e).scaled(1.0 / q2)
            name = "tilde_ratio_bounded"
        conditions.append((f"{name}_at_{e.value}", (numerator - denominator).lex_sign() <= 0))
    case = "TELK-2c" if math.isinf(q2) else "TELK-2b"
    return _verdict(case, conditions, citations + [case], CHARACTERISTIC_SWEEP)


def _same_p_higher_q(src: SpaceSpec, dst: SpaceSpec, mu_r: float, citations: List[str]) -> EmbeddingVerdict:
    """p₁ = p₂, q₁ > q₂, 1/r = 1/q₂ − 1/q₁."""
    b1, b2, q1, q2 = src.b, dst.b, src.q, dst.q
    r = 1.0 / (1.0 / q2 - (0.0 if math.isinf(q1) else 1.0 / q1))

    if math.isinf(src.p) and not math.isinf(q1):
        conditions = []
        for e in _sides(mu_r):
            ratio = (_tilde_order(b2, q2, e) - _tilde_order(b1, q1, e)).scaled(r / q1)
            order = ratio + GrowthOrder.of(b2.signature(e).scaled(q2))
            conditions.append((f"tilde_integral_finite_at_{e.value}", order.integrable()))
        return _verdict("TELK-3b", conditions, citations + ["TELK-3b"], PROPER_EMBEDDING_GAP)

    if math.isinf(src.p):
        case, extra = "TELK-3c", ["PbND"]
        b1 = _tilde_sup(b1)
    else:
        case, extra = "TELK-3a", []
    quotient = b2 / b1
    conditions = [
        (f"integral_finite_at_{e.value}", endpoint_integrability(quotient, r, 0.0, e)) for e in _sides(mu_r)
    ]
    return _verdict(case, conditions, citations + [case] + extra, PROPER_EMBEDDING_GAP)


@lru_cache(maxsize=4096)
def _decide(src: SpaceSpec, dst: SpaceSpec, mu_r: float) -> EmbeddingVerdict:
    citations: List[str] = []
    plain_src, src_note = _plain_form(src)
    plain_dst, dst_note = _plain_form(dst)
    for note in (src_note, dst_note):
        if note is not None and note != STAR_NOT_REDUCED and note not in citations:
            citations.append(note)

    if plain_src is None or not guard_holds(plain_src):
        return _fails(TRIVIAL_SOURCE, [("source_nontrivial", False)], citations + ["LQ"], None)
    if plain_dst is None or not guard_holds(plain_dst):
        return _fails(TRIVIAL_TARGET, [("target_nontrivial", False)], citations + ["LQ"], None)
    if STAR_NOT_REDUCED in (src_note, dst_note):
        conditions = [
            ("source_star_reducible", src_note != STAR_NOT_REDUCED),
            ("target_star_reducible", dst_note != STAR_NOT_REDUCED),
        ]
        return _fails(STAR_NOT_REDUCED, conditions, citations + ["CEQNa", "PEbbH"], None)

    p1, p2 = plain_src.p, plain_dst.p
    if p1 > p2:
        return _verdict("TELK-1", [("mu_finite", math.isfinite(mu_r))], citations + ["TELK-1"], CASE_P1_GREATER_P2)
    if p1 < p2:
        return _fails("TELK-4", [("p1_ge_p2", False)], citations + ["TELK-4"], CASE_P1_LESS_P2)
    if plain_src.q <= plain_dst.q:
        return _same_p_lower_q(plain_src, plain_dst, mu_r, citations)
    return _same_p_higher_q(plain_src, plain_dst, mu_r, citations)


def decide_embedding(src: SpaceSpec, dst: SpaceSpec, mu_r: Optional[float] = None) -> EmbeddingVerdict:
    """
    Вердикт о вложении L^{p₁,q₁,b₁} ↪ L^{p₂,q₂,b₂} над мерой μ(R).
    По умолчанию μ(R) берётся из src. Звёздные пространства приводятся
    к обычным, когда это позволяют CEQNa или PEbbH; иначе вердикт
    Fails(StarNotReduced) без свидетеля.
    """
    mu =SpaceSpecValidator.validate_measure(src.mu_r if mu_r is None else mu_r)
    hits = _decide.cache_info().hits
    verdict = _decide(src.with_measure(mu), dst.with_measure(mu), mu)
    if _decide.cache_info().hits > hits:
        logger.debug("Кэш вердиктов: %s ↪ %s", src, dst)
    logger.info("%s ↪ %s (μ(R)=%s): %s", src, dst, mu, verdict)
    return verdict


# ───────────────────────
# АССОЦИИРОВАННЫЕ ПРОСТРАНСТВА
# ───────────────────────

def _space(spec: SpaceSpec, p: float, q: float, b: SlowlyVaryingFunction, star: bool, case: str,
           citations: List[str]) -> AssociateResult:
    associate = SpaceSpec(p=p, q=q, b=b, mu_r=spec.mu_r, star=star)
    return AssociateResult(AssociateOutcome.SPACE, case, associate, None, tuple(citations))


def _not_characterized(case: str, reason: str, citations: List[str]) -> AssociateResult:
    return AssociateResult(AssociateOutcome.NOT_CHARACTERIZED, case, None, reason, tuple(citations))


def _tas_ii_sup_finite(b: SlowlyVaryingFunction, q: float) -> bool:
    """sup_t (∫_0^t s⁻¹b^q)^{1/q}·(∫_t^∞ s⁻¹b^{−q′})^{1/q′} < ∞ на обоих концах."""
    q_prime = q / (q - 1.0)
    dual = b ** (-q_prime)
    for e in (Endpoint.ZERO, Endpoint.INFINITY):
        tilde = integral_order(b ** q, TransformKind.TILDE, e)
        hat = integral_order(dual, TransformKind.HAT, e)
        if isinstance(tilde, TransformOutcome) or isinstance(hat, TransformOutcome):
            return False
        if (tilde.scaled(1.0 / q) + hat.scaled(1.0 / q_prime)).lex_sign() > 0:
            return False
    return True


@lru_cache(maxsize=1024)
def _associate(spec: SpaceSpec) -> AssociateResult:
    p, q, b = spec.p, spec.q, spec.b
    if p < 1:
        return AssociateResult(AssociateOutcome.ZERO, "PAS", citations=("PAS",))

    p_prime = conjugate(p)
    assert p_prime is not None
    inverse = b.reciprocal()

    if 1 < q < INF:
        q_prime = conjugate(q)
        assert q_prime is not None
        if not math.isinf(p):
            return _space(spec, p_prime, q_prime, inverse, True, "TAS-i", ["TAS-i"])
        if not guard_holds(spec):
            return _not_characterized("TAS-ii", "trivial space (LQ guard fails)", ["TAS-ii", "LQ"])
        divergent_tail = not endpoint_integrability(b, q, 0.0, Endpoint.INFINITY)
        if divergent_tail and _tas_ii_sup_finite(b, q):
            return _space(spec, 1.0, q_prime, inverse, True, "TAS-ii", ["TAS-ii"])
        return _not_characterized("TAS-ii", "TAS-ii tail or sup condition fails", ["TAS-ii"])

    if q <= 1:
        if 1 < p < INF or (p == 1 and equivalent_to_nonincreasing(b)):
            return _space(spec, p_prime, INF, inverse, True, "T2AS-1", ["T2AS-1"])
        if p == 1:
            return _not_characterized(
                "T2AS-1", "b is not equivalent to a non-increasing function", ["T2AS-1"]
            )
        if q == 1 and _weighted_norm_finite(b, 1.0, Endpoint.ZERO):
            tilde = tilde_hat_transform(b, TransformKind.TILDE)
            if isinstance(tilde, SlowlyVaryingFunction):
                return _space(spec, 1.0, INF, tilde.reciprocal(), True, "T2AS-2", ["T2AS-2"])
            return _not_characterized("T2AS-2", f"tilde(b) is {tilde.value}", ["T2AS-2"])
        return _not_characterized("T2AS", "p = ∞ with q < 1 or divergent ∫_0^1 t⁻¹b", ["T2AS"])

    # q = ∞
    if not math.isinf(p):
        return _space(spec, p_prime, 1.0, inverse, False, "T3AS", ["T3AS"])
    envelope = sup_transform(b, SupKind.TILDE_SUP)
    if isinstance(envelope, TransformOutcome):
        return _not_characterized("T3AS", "sup_(0,t) b is not finite", ["T3AS", "PbND"])
    return _space(spec, 1.0, 1.0, envelope.reciprocal(), False, "T3AS", ["T3AS", "PbND"])


def associate_space(spec: SpaceSpec) -> AssociateResult:
    """
    (L^{p,q,b})′ по лестнице PAS → TAS → T2AS → T3AS. Звёздное пространство
    сначала переписывается в обычное (CEQNa, PEbbH); если это невозможно или
    оно тривиально, UnsupportedInput.
    """
    note = None
    if spec.star:
        plain, note = _plain_form(spec)
        if plain is None or note == STAR_NOT_REDUCED:
            raise UnsupportedInput(f"Ассоциированные пространства звёздных пространств не охарактеризованы: {spec}")
        spec = plain
    result = _associate(spec)
    if note is not None:
        result = replace(result, citations=(note,) + result.citations)
    logger.info("(%s)′ = %s", spec, result)
    return result


def clear_caches():
    """Сбрасывает кэши вердиктов."""
    _classify.cache_clear()
    _decide.cache_clear()
    _associate.cache_clear()


__all__ = [
    "conjugate",
    "bounded_near",
    "bounded_below_near",
    "equivalent_to_nonincreasing",
    "guard_holds",
    "classify_space",
    "decide_embedding",
    "associate_space",
    "clear_caches",
]
