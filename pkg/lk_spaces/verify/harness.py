# -*- coding: utf-8 -*-
"""
ЧИСЛЕННЫЙ СТЕНД ПРОВЕРКИ ВЕРДИКТОВ

Каждый символьный вердикт classify проверяется вычисленными нормами:
- Holds: отношение ‖f‖_dst/‖f‖_src на характеристических функциях и
  случайных ступенчатых f*, растянутых на масштабы 10^k, выходит на плато;
- Fails: рецепт свидетеля из вердикта разгоняет отношение до
  fail_ratio_target либо монотонно растёт не менее чем в growth_threshold раз.

Кроме того стенд проверяет неравенства Харди–Литтлвуда и Гёльдера,
двойственность фундаментальных функций, разрыв L^{(1,q,b)} ≠ L^{1,q,b},
константу квазинормы и асимптотику медленно меняющихся функций.

Отчёты не выбрасывают исключений при несогласии: сигналом служит
поле consistent/verdict_consistent.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from lk_spaces.config import DEFAULT_CONFIG, LKConfig
from lk_spaces.core.lknorm import (
    SpaceSpec,
    fundamental_function,
    lk_norm,
    lk_norm_star,
    measure_quasi_constant,
    star_as_plain,
)
from lk_spaces.core.rearrange import (
    DecreasingStep,
    JointStepFunction,
    dilate,
    distribution,
    distribution_of,
    pair_integrals,
    random_decreasing_step,
    random_joint_step_function,
    random_step_function,
    rearrange,
    scale_values,
)
from lk_spaces.core.svcalc import (
    Endpoint,
    EndpointSignature,
    SlowlyVaryingFunction,
    TransformKind,
    TransformOutcome,
    ZERO_SIGNATURE,
    endpoint_integrability,
    quad_oracle,
    tilde_hat_transform,
)
from lk_spaces.decision.classify import (
    STAR_NOT_REDUCED,
    TRIVIAL_SOURCE,
    TRIVIAL_TARGET,
    associate_space,
    classify_space,
    decide_embedding,
)
from lk_spaces.decision.verdicts import AssociateOutcome, AssociateResult, EmbeddingVerdict
from lk_spaces.validator import DomainError
from lk_spaces.verify.witness import WitnessKind, WitnessRecipe, build_witness

logger = logging.getLogger(__name__)

Series = Tuple[Tuple[float, float], ...]

# Показатели 10^k внешнего свипа свидетелей Fails (до sweep_cap_exponent).
_SWEEP_SCHEDULE = (1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64, 96, 128, 192, 256)

# Вердикты без численной проверки.
_UNCHECKED_CASES = (TRIVIAL_SOURCE, TRIVIAL_TARGET, STAR_NOT_REDUCED)

HL_SLACK = 1e-9


# ───────────────────────
# ВСПОМОГАТЕЛЬНОЕ
# ───────────────────────

def _num(x: float) -> Any:
    """Число для JSON: бесконечности как строки."""
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x


def _series_to_list(series: Series) -> List[List[Any]]:
    return [[_num(s), _num(r)] for s, r in series]


def _series_from_list(items: Iterable[Sequence[Any]]) -> Series:
    return tuple((float(s), float(r)) for s, r in items)


def _ratio(src: SpaceSpec, dst: SpaceSpec, fstar: DecreasingStep, config: LKConfig) -> float:
    """‖f‖_dst / ‖f‖_src; NaN, если знаменатель вырожден."""
    denominator = lk_norm(src, fstar, config).value
    numerator = lk_norm(dst, fstar, config).value
    if not denominator > 0 or math.isinf(denominator) or math.isnan(numerator):
        return math.nan
    return numerator / denominator


def _outward(series: Series) -> Tuple[List[float], List[float]]:
    """Значения от масштаба, ближайшего к 1, наружу к 0 и к ∞."""
    if not series:
        return [], []
    scales = np.array([s for s, _ in series])
    values = [r for _, r in series]
    center = int(np.argmin(np.abs(np.log10(scales))))
    return values[center::-1], values[center:]


def _plateaued(values: Sequence[float], growth: float) -> bool:
    """Бегущий максимум вырос за последнюю декаду не более чем на growth."""
    if len(values) < 2:
        return True
    running = np.maximum.accumulate(np.asarray(values, dtype=float))
    return bool(running[-1] <= running[-2] * (1.0 + growth))


def _decays(values: Sequence[float], threshold: float) -> bool:
    """Строгое убывание наружу с общим падением не менее threshold раз."""
    if len(values) < 2:
        return False
    arr = np.asarray(values, dtype=float)
    return bool(np.all(np.diff(arr) < 0) and arr[0] >= threshold * arr[-1])


def _rescaled(h: JointStepFunction, total_mass: float) -> JointStepFunction:
    factor = total_mass / math.fsum(m for _, _, m in h.pieces)
    return JointStepFunction(tuple((f, g, m * factor) for f, g, m in h.pieces))


# ───────────────────────
# ВЛОЖЕНИЯ
# ───────────────────────

@dataclass(frozen=True)
class EmbeddingCheckReport:
    """Итог численной проверки одного вердикта о вложении."""

    # === Вход ===
    source: SpaceSpec
    target: SpaceSpec
    mu_r: float
    verdict: EmbeddingVerdict

    # === Измерения ===
    max_ratio: float
    ratios: Series
    trend: str
    growth_mode: Optional[str]
    verdict_consistent: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "mu": _num(self.mu_r),
            "verdict": self.verdict.to_dict(),
            "max_ratio": _num(self.max_ratio),
            "ratios": _series_to_list(self.ratios),
            "trend": self.trend,
            "growth_mode": self.growth_mode,
            "verdict_consistent": self.verdict_consistent,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "EmbeddingCheckReport":
        return cls(
            source=SpaceSpec.from_dict(data["source"]),
            target=SpaceSpec.from_dict(data["target"]),
            mu_r=float(data["mu"]),
            verdict=EmbeddingVerdict.from_dict(data["verdict"]),
            max_ratio=float(data["max_ratio"]),
            ratios=_series_from_list(data["ratios"]),
            trend=str(data["trend"]),
            growth_mode=data.get("growth_mode"),
            verdict_consistent=bool(data["verdict_consistent"]),
        )


def _holds_sweep(src: SpaceSpec, dst: SpaceSpec, n_samples: int, config: LKConfig) -> Series:
    """Огибающая отношений по χ_(0,m) и растянутым случайным f* на масштабах m = 10^k."""
    rng = np.random.default_rng(config.seed)
    samples = [random_decreasing_step(rng) for _ in range(n_samples)]
    masses = [10.0 ** k for k in range(-config.sweep_decades, config.sweep_decades + 1)]
    masses = [m for m in masses if m <= src.mu_r] or [src.mu_r]

    series = []
    for m in masses:
        carriers = [DecreasingStep.characteristic(m)] + [dilate(f, m / f.support) for f in samples]
        ratios = [r for r in (_ratio(src, dst, f, config) for f in carriers) if not math.isnan(r)]
        if ratios:
            series.append((m, max(ratios)))
    return tuple(series)


def _failing_endpoint(verdict: EmbeddingVerdict) -> Endpoint:
    for condition in verdict.conditions:
        if condition.value:
            continue
        if condition.name.endswith("_at_infinity") or condition.name == "mu_finite":
            return Endpoint.INFINITY
        if condition.name.endswith("_at_zero"):
            return Endpoint.ZERO
    return Endpoint.ZERO


def _sweep_exponents(cap: int) -> List[int]:
    return [k for k in _SWEEP_SCHEDULE if k < cap] + [cap]


def _fail_witness(
    kind: WitnessKind, src: SpaceSpec, dst: SpaceSpec, endpoint: Endpoint, k: int, config: LKConfig
) -> Tuple[float, DecreasingStep]:
    """(масштаб, свидетель) на k-м шаге свипа к концу endpoint."""
    top = min(1.0, src.mu_r)
    density = max(2, config.points_per_decade // 16)
    if kind in (WitnessKind.CHARACTERISTIC_SWEEP, WitnessKind.CASE_P1_LESS_P2):
        mass = top * 10.0 ** -k if endpoint is Endpoint.ZERO else 10.0 ** k
        return mass, build_witness(WitnessRecipe(kind, src, mass=mass))
    if kind is WitnessKind.CASE_P1_GREATER_P2:
        horizon = 10.0 ** k
        return horizon, build_witness(WitnessRecipe(kind, src, t_max=horizon, points_per_decade=density))
    if endpoint is Endpoint.ZERO:
        lo, hi, scale = top * 10.0 ** -k, top, top * 10.0 ** -k
    else:
        lo, hi, scale = 1.0, 10.0 ** k, 10.0 ** k
    recipe = WitnessRecipe(kind, src, dst, t_min=lo, t_max=hi, points_per_decade=density)
    return scale, build_witness(recipe)


def _fails_sweep(src: SpaceSpec, dst: SpaceSpec, verdict: EmbeddingVerdict, config: LKConfig) -> Series:
    kind = WitnessKind(verdict.witness_recipe)
    endpoint = _failing_endpoint(verdict)
    series: List[Tuple[float, float]] = []
    for k in _sweep_exponents(config.sweep_cap_exponent):
        try:
            scale, witness = _fail_witness(kind, src, dst, endpoint, k, config)
        except DomainError as e:
            logger.warning("Свип свидетеля %s остановлен на 10^%d: %s", kind.value, k, e)
            break
        ratio = _ratio(src, dst, witness, config)
        if math.isnan(ratio):
            logger.warning("Свип свидетеля %s: вырожденные нормы на 10^%d", kind.value, k)
            break
        series.append((scale, ratio))
        if ratio >= config.fail_ratio_target:
            break
    else:
        logger.warning("Свип свидетеля %s достиг предела 10^%d", kind.value, config.sweep_cap_exponent)
    return tuple(series)


def _fails_accepted(series: Series, config: LKConfig) -> Tuple[bool, Optional[str]]:
    values = [r for _, r in series]
    if values and max(values) >= config.fail_ratio_target:
        return True, "ratio"
    increasing = all(b > a for a, b in zip(values, values[1:]))
    if len(values) >= 2 and increasing and values[-1] >= config.growth_threshold * values[0]:
        return True, "trend"
    return False, None


def check_embedding_numeric(
    src: SpaceSpec,
    dst: SpaceSpec,
    mu_r: Optional[float] = None,
    n_samples: Optional[int] = None,
    config: LKConfig = DEFAULT_CONFIG,
) -> EmbeddingCheckReport:
    """
    Сверяет вердикт decide_embedding с вычисленными нормами.
    Тривиальные вердикты (TrivialSource/TrivialTarget) и StarNotReduced не проверяются.
    """
    mu = float(src.mu_r if mu_r is None else mu_r)
    verdict = decide_embedding(src, dst, mu)
    src, dst = src.with_measure(mu), dst.with_measure(mu)

    if verdict.case in _UNCHECKED_CASES:
        return EmbeddingCheckReport(src, dst, mu, verdict, 0.0, (), "skipped", None, True)

    if verdict.holds:
        series = _holds_sweep(src, dst, n_samples or config.samples, config)
        toward_zero, toward_inf = _outward(series)
        consistent = bool(series) and (
            _plateaued(toward_zero, config.plateau_growth) and _plateaued(toward_inf, config.plateau_growth)
        )
        mode, trend = None, ("plateau" if consistent else "growing")
    else:
        series = _fails_sweep(src, dst, verdict, config)
        consistent, mode = _fails_accepted(series, config)
        values = [r for _, r in series]
        trend = "growing" if len(values) >= 2 and values[-1] > values[0] else "flat"

    max_ratio = max((r for _, r in series), default=0.0)
    log = logger.info if consistent else logger.warning
    log("Проверка %s ↪ %s: %s, max_ratio=%.4g, согласовано=%s", src, dst, verdict, max_ratio, consistent)
    return EmbeddingCheckReport(src, dst, mu, verdict, max_ratio, series, trend, mode, consistent)


@dataclass(frozen=True)
class CatalogReport:
    """Внутренняя согласованность вердиктов на каталоге троек (src, dst, μ(R))."""
    n_triples: int
    n_holds: int
    reflexive_violations: Tuple[str, ...] = ()
    transitive_violations: Tuple[str, ...] = ()

    @property
    def consistent(self) -> bool:
        return not self.reflexive_violations and not self.transitive_violations

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n_triples": self.n_triples,
            "n_holds": self.n_holds,
            "reflexive_violations": list(self.reflexive_violations),
            "transitive_violations": list(self.transitive_violations),
            "consistent": self.consistent,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CatalogReport":
        return cls(
            int(data["n_triples"]),
            int(data["n_holds"]),
            tuple(data.get("reflexive_violations", [])),
            tuple(data.get("transitive_violations", [])),
        )


def check_embedding_catalog(triples: Iterable[Tuple[SpaceSpec, SpaceSpec, float]]) -> CatalogReport:
    """
    Строит по каждой мере μ(R) граф вердиктов Holds (networkx.DiGraph) и
    проверяет рефлексивность на нетривиальных вершинах и транзитивность
    по транзитивному замыканию графа.
    """
    graphs: Dict[float, nx.DiGraph] = {}
    n_triples = n_holds = 0
    for src, dst, mu in triples:
        n_triples += 1
        graph = graphs.setdefault(float(mu), nx.DiGraph())
        graph.add_nodes_from((src, dst))
        verdict = decide_embedding(src, dst, mu)
        if verdict.holds:
            n_holds += 1
            graph.add_edge(src, dst, case=verdict.case)

    reflexive, transitive = [], []
    for mu, graph in graphs.items():
        for spec in graph.nodes:
            verdict = decide_embedding(spec, spec, mu)
            if verdict.case in _UNCHECKED_CASES:
                continue
            if not verdict.holds:
                reflexive.append(f"{spec} (μ(R)={mu}): {verdict}")
        closure = nx.transitive_closure(graph, reflexive=False)
        for u, w in closure.edges:
            if u == w or graph.has_edge(u, w):
                continue
            verdict = decide_embedding(u, w, mu)
            if not verdict.holds and verdict.case not in _UNCHECKED_CASES:
                transitive.append(f"{u} ↪ {w} (μ(R)={mu}): {verdict}")

    report = CatalogReport(n_triples, n_holds, tuple(reflexive), tuple(transitive))
    logger.info("Каталог вложений: %d троек, %d Holds, согласован=%s", n_triples, n_holds, report.consistent)
    return report


# ───────────────────────
# РАЗРЫВ L^{(p,q,b)} / L^{p,q,b}
# ───────────────────────

@dataclass(frozen=True)
class StarGapReport:
    spec: SpaceSpec
    ratios: Series
    max_ratio: float
    growth_confirmed: bool
    plateau: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "spec": self.spec.to_dict(),
            "ratios": _series_to_list(self.ratios),
            "max_ratio": _num(self.max_ratio),
            "growth_confirmed": self.growth_confirmed,
            "plateau": self.plateau,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "StarGapReport":
        return cls(
            SpaceSpec.from_dict(data["spec"]),
            _series_from_list(data["ratios"]),
            float(data["max_ratio"]),
            bool(data["growth_confirmed"]),
            bool(data["plateau"]),
        )


def check_star_gap(spec: SpaceSpec, config: LKConfig = DEFAULT_CONFIG) -> StarGapReport:
    """
    Отношение ‖χ_(0,m)‖_{(p,q,b)} / ‖χ_(0,m)‖_{p,q,b} по свипу m = 10^k.
    При p = 1 ожидается рост (growth_confirmed), при p > 1 — плато.
    """
    if spec.p < 1:
        raise DomainError(f"Свип разрыва требует p ≥ 1, получено p = {spec.p}")
    plain, star = spec.as_star(False), spec.as_star(True)
    if not classify_space(plain).star_nontrivial:
        raise DomainError(f"Звёздное пространство тривиально: {star}")

    series = []
    for k in range(-config.sweep_decades, config.sweep_decades + 1):
        m = 10.0 ** k
        if m > spec.mu_r:
            break
        chi = DecreasingStep.characteristic(m)
        series.append((m, lk_norm_star(star, chi, config).value / lk_norm(plain, chi, config).value))

    values = [r for _, r in series]
    toward_zero, toward_inf = _outward(tuple(series))
    plateau = _plateaued(toward_zero, config.plateau_growth) and _plateaued(toward_inf, config.plateau_growth)
    max_ratio = max(values)
    report = StarGapReport(plain, tuple(series), max_ratio, max_ratio >= config.growth_threshold, plateau)
    logger.info("Разрыв %s: max_ratio=%.4g, рост=%s, плато=%s", plain, max_ratio, report.growth_confirmed, plateau)
    return report


@dataclass(frozen=True)
class StarPlainReport:
    spec: SpaceSpec
    plain: SpaceSpec
    band: Tuple[float, float]
    stable: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "spec": self.spec.to_dict(),
            "plain": self.plain.to_dict(),
            "band": [_num(self.band[0]), _num(self.band[1])],
            "stable": self.stable,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "StarPlainReport":
        lo, hi = data["band"]
        return cls(SpaceSpec.from_dict(data["spec"]), SpaceSpec.from_dict(data["plain"]),
                   (float(lo), float(hi)), bool(data["stable"]))


def check_star_plain_identity(
    spec: SpaceSpec, n_samples: Optional[int] = None, config: LKConfig = DEFAULT_CONFIG
) -> StarPlainReport:
    """Полоса ‖f‖_{(1,1,b)} / ‖f‖_{1,1,hat(b)} на случайных f* и масштабах 10^k."""
    star = spec.as_star(True)
    plain = star_as_plain(star)
    if plain is None:
        raise DomainError(f"Тождество L^(1,1,b) = L^(1,1,hat b) неприменимо к {star}")

    rng = np.random.default_rng(config.seed)
    samples = [random_decreasing_step(rng) for _ in range(n_samples or config.samples)]
    ratios = []
    for k in range(-config.sweep_decades, config.sweep_decades + 1, 2):
        m = 10.0 ** k
        if m > spec.mu_r:
            break
        for f in [DecreasingStep.characteristic(m)] + [dilate(g, m / g.support) for g in samples]:
            ratios.append(lk_norm_star(star, f, config).value / lk_norm(plain, f, config).value)
    band = (min(ratios), max(ratios))
    return StarPlainReport(star, plain, band, band[1] <= config.growth_threshold * band[0])


# ───────────────────────
# ГЁЛЬДЕР И ДВОЙСТВЕННОСТЬ
# ───────────────────────

@dataclass(frozen=True)
class DualityReport:
    """Неравенство Гёльдера для X и X′ и полоса φ_X(t)·φ_X′(t)/t."""

    # === Ассоциированное пространство ===
    spec: SpaceSpec
    associate: AssociateResult
    skipped: bool = False

    # === Гёльдер ===
    holder_min_ratios: Series = ()
    holder_stable: bool = True
    comonotone_ratio: Optional[float] = None

    # === Фундаментальные функции ===
    band: Optional[Tuple[float, float]] = None
    k: Optional[float] = None
    k_halves: Optional[Tuple[float, float]] = None
    band_stable: bool = True

    @property
    def consistent(self) -> bool:
        return self.skipped or (self.holder_stable and self.band_stable)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "spec": self.spec.to_dict(),
            "associate": self.associate.to_dict(),
            "skipped": self.skipped,
            "holder_min_ratios": _series_to_list(self.holder_min_ratios),
            "holder_stable": self.holder_stable,
            "comonotone_ratio": self.comonotone_ratio,
            "band": list(self.band) if self.band is not None else None,
            "k": self.k,
            "k_halves": list(self.k_halves) if self.k_halves is not None else None,
            "band_stable": self.band_stable,
            "consistent": self.consistent,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DualityReport":
        band, halves = data.get("band"), data.get("k_halves")
        return cls(
            spec=SpaceSpec.from_dict(data["spec"]),
            associate=AssociateResult.from_dict(data["associate"]),
            skipped=bool(data["skipped"]),
            holder_min_ratios=_series_from_list(data.get("holder_min_ratios", [])),
            holder_stable=bool(data["holder_stable"]),
            comonotone_ratio=data.get("comonotone_ratio"),
            band=(float(band[0]), float(band[1])) if band is not None else None,
            k=data.get("k"),
            k_halves=(float(halves[0]), float(halves[1])) if halves is not None else None,
            band_stable=bool(data["band_stable"]),
        )


def _holder_ratio(spec: SpaceSpec, dual: SpaceSpec, h: JointStepFunction, config: LKConfig) -> float:
    """‖g‖_X·‖f‖_X′ / ∫|fg| для h = (f, g)."""
    lhs = math.fsum(fv * gv * m for fv, gv, m in h.pieces)
    f, g = h.split()
    rhs = lk_norm(spec, rearrange(g), config).value * lk_norm(dual, rearrange(f), config).value
    return rhs / lhs


def _band_constant(products: Sequence[float]) -> float:
    return max(max(products), 1.0 / min(products))


def check_holder_and_duality(
    spec: SpaceSpec, n_samples: Optional[int] = None, config: LKConfig = DEFAULT_CONFIG
) -> DualityReport:
    """
    Для X′ = associate_space(spec): минимум rhs/lhs неравенства Гёльдера по
    случайным парам не убывает по свипу масштабов; φ_X·φ_X′/t лежит в полосе
    [1/K, K], K устойчиво между половинами свипа t ∈ [1e-6, 1e6] (≤ 10%).
    """
    associate = associate_space(spec)
    if associate.outcome is not AssociateOutcome.SPACE or associate.space is None:
        logger.info("Двойственность %s пропущена: %s", spec, associate)
        return DualityReport(spec, associate, skipped=True)
    dual = associate.space

    rng = np.random.default_rng(config.seed)
    samples = [random_joint_step_function(rng) for _ in range(n_samples or config.samples)]
    holder = []
    for k in range(-config.sweep_decades, config.sweep_decades + 1, 2):
        total = 10.0 ** k
        if total > spec.mu_r:
            break
        holder.append((total, min(_holder_ratio(spec, dual, _rescaled(h, total), config) for h in samples)))
    minima = [r for _, r in holder]
    toward_zero, toward_inf = _outward(tuple(holder))
    holder_stable = (
        bool(minima)
        and all(math.isfinite(r) and r > 0 for r in minima)
        and not _decays(toward_zero, config.growth_threshold)
        and not _decays(toward_inf, config.growth_threshold)
    )

    first = _rescaled(samples[0], min(1.0, spec.mu_r))
    comonotone = JointStepFunction(tuple((fv, fv, m) for fv, _, m in first.pieces))
    comonotone_ratio = _holder_ratio(spec, dual, comonotone, config)

    ts = [float(t) for t in np.geomspace(1e-6, 1e6, 25) if t <= spec.mu_r]
    products = [fundamental_function(spec, t, config) * fundamental_function(dual, t, config) / t for t in ts]
    half = len(products) // 2
    k_halves = (_band_constant(products[: half + 1]), _band_constant(products[half:]))
    band_stable = abs(k_halves[0] - k_halves[1]) <= 0.1 * max(k_halves)

    report = DualityReport(
        spec=spec,
        associate=associate,
        holder_min_ratios=tuple(holder),
        holder_stable=holder_stable,
        comonotone_ratio=comonotone_ratio,
        band=(min(products), max(products)),
        k=_band_constant(products),
        k_halves=k_halves,
        band_stable=band_stable,
    )
    logger.info("Двойственность %s ↔ %s: K=%.4g, согласовано=%s", spec, dual, report.k, report.consistent)
    return report


# ───────────────────────
# ПЕРЕСТАНОВКИ И ХАРДИ–ЛИТТЛВУД
# ───────────────────────

@dataclass(frozen=True)
class CountReport:
    """Счётчик нарушений на n случайных носителях."""
    name: str
    n: int
    violations: int
    max_excess: float = 0.0

    @property
    def consistent(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "n": self.n, "violations": self.violations,
                "max_excess": self.max_excess, "consistent": self.consistent}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CountReport":
        return cls(str(data["name"]), int(data["n"]), int(data["violations"]), float(data["max_excess"]))


def _naive_rearrangement(pieces: Sequence[Tuple[float, float]]) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
    """Сортировка с последующим слиянием соседних равных значений."""
    ordered = sorted(((v, m) for v, m in pieces if v > 0), key=lambda item: -item[0])
    values: List[float] = []
    masses: List[float] = []
    for v, m in ordered:
        if values and values[-1] == v:
            masses[-1] += m
        else:
            values.append(v)
            masses.append(m)
    breakpoints = [0.0]
    for m in masses:
        breakpoints.append(breakpoints[-1] + m)
    return tuple(breakpoints), tuple(values)


def check_rearrangement_oracle(n: int = 1000, seed: int = DEFAULT_CONFIG.seed) -> CountReport:
    """rearrange против наивного оракула и равноизмеримость на 10 уровнях."""
    rng = np.random.default_rng(seed)
    violations, worst = 0, 0.0
    for _ in range(n):
        f = random_step_function(rng)
        fstar = rearrange(f)
        breakpoints, values = _naive_rearrangement(f.pieces)
        if fstar.values != values or not np.allclose(fstar.breakpoints, breakpoints, rtol=1e-12, atol=0.0):
            violations += 1
            continue
        top = max(v for v, _ in f.pieces)
        for s in rng.uniform(0.0, top, size=10):
            expected, actual = distribution(f, float(s)), distribution_of(fstar, float(s))
            excess = abs(expected - actual) / max(1.0, expected)
            worst = max(worst, excess)
            if excess > 1e-12:
                violations += 1
                break
    logger.info("Оракул перестановок: %d из %d нарушений", violations, n)
    return CountReport("rearrange", n, violations, worst)


def check_hardy_littlewood(n: int = 1000, seed: int = DEFAULT_CONFIG.seed) -> CountReport:
    """∫|fg| ≤ ∫f*g* и равенство на сонаправленных парах (g = f)."""
    rng = np.random.default_rng(seed)
    violations, worst = 0, 0.0
    for _ in range(n):
        h = random_joint_step_function(rng)
        lhs, rhs = pair_integrals(h)
        excess = (lhs - rhs) / max(1.0, rhs)
        worst = max(worst, excess)
        if excess > HL_SLACK:
            violations += 1
        aligned = JointStepFunction(tuple((fv, fv, m) for fv, _, m in h.pieces))
        lhs, rhs = pair_integrals(aligned)
        gap = abs(lhs - rhs) / max(1.0, rhs)
        worst = max(worst, gap)
        if gap > HL_SLACK:
            violations += 1
    logger.info("Харди–Литтлвуд: %d нарушений на %d парах", violations, n)
    return CountReport("hl", n, violations, worst)


# ───────────────────────
# КВАЗИНОРМА
# ───────────────────────

_VALUE_SCALES = (1.0, 10.0, 100.0)


@dataclass(frozen=True)
class QuasiNormReport:
    spec: SpaceSpec
    k_values: Tuple[float, ...]
    variation: float

    @property
    def consistent(self) -> bool:
        finite = all(math.isfinite(k) and k > 0 for k in self.k_values)
        return finite and self.variation <= 0.05

    def to_dict(self) -> Dict[str, Any]:
        return {"spec": self.spec.to_dict(), "k_values": list(self.k_values),
                "variation": self.variation, "consistent": self.consistent}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "QuasiNormReport":
        return cls(SpaceSpec.from_dict(data["spec"]), tuple(float(k) for k in data["k_values"]),
                   float(data["variation"]))


def check_quasi_norm(
    specs: Sequence[SpaceSpec], n: int = 100, seed: int = DEFAULT_CONFIG.seed, config: LKConfig = DEFAULT_CONFIG
) -> List[QuasiNormReport]:
    """K в ‖f+g‖ ≤ K(‖f‖+‖g‖) на n парах, под свипом множителей значений ×10."""
    reports = []
    for spec in specs:
        rng = np.random.default_rng(seed)
        triples = []
        for _ in range(n):
            h = random_joint_step_function(rng)
            f, g = h.split()
            triples.append((rearrange(f), rearrange(g), rearrange(h.joint_sum())))
        k_values = tuple(
            measure_quasi_constant(
                spec, [tuple(scale_values(x, s) for x in triple) for triple in triples], config
            )
            for s in _VALUE_SCALES
        )
        variation = (max(k_values) - min(k_values)) / min(k_values) if min(k_values) > 0 else math.inf
        reports.append(QuasiNormReport(spec, k_values, variation))
        logger.debug("Квазинорма %s: K=%s", spec, k_values)
    return reports


# ───────────────────────
# СОВПАДЕНИЕ С ЛЕБЕГОМ
# ───────────────────────

def check_lebesgue_coincidence(
    exponents: Sequence[float] = (0.5, 1.0, 2.0, 7.0),
    n: int = 100,
    seed: int = DEFAULT_CONFIG.seed,
    config: LKConfig = DEFAULT_CONFIG,
) -> CountReport:
    """L^{p,p,1} = L^p: lk_norm против (Σ vᵖ m)^{1/p} с относительным допуском 1e-9."""
    rng = np.random.default_rng(seed)
    violations, worst = 0, 0.0
    for _ in range(n):
        f = random_step_function(rng)
        fstar = rearrange(f)
        for p in exponents:
            direct = math.fsum(v ** p * m for v, m in f.pieces) ** (1.0 / p)
            computed = lk_norm(SpaceSpec(p, p), fstar, config).value
            excess = abs(computed - direct) / direct
            worst = max(worst, excess)
            if excess > 1e-9:
                violations += 1
    logger.info("Совпадение с L^p: %d нарушений на %d носителях", violations, n)
    return CountReport("lebesgue", n, violations, worst)


# ───────────────────────
# МЕДЛЕННО МЕНЯЮЩИЕСЯ ФУНКЦИИ
# ───────────────────────

# Сигнатуры вдали от граничных строк правил интегрируемости.
_SAFE_SIGNATURES = (
    (0.0, -3.0, 0.0), (0.0, -2.0, 0.0), (0.0, 0.0, 0.0), (0.0, 1.0, 0.0),
    (0.0, -1.0, -3.0), (0.0, -1.0, 0.0), (-1.0, 0.0, 0.0), (1.0, -2.0, 0.0),
)
_MODERATE_SIGNATURES = (
    (0.0, -2.0, 0.0), (0.0, -1.0, 1.0), (0.0, 0.0, 0.0), (0.0, 1.0, -1.0), (0.0, 2.0, 0.0),
)

# Строки правил tilde/hat с асимптотикой, точной до O(1/|log t|).
_CONVERGENT_ROWS = (
    (-3.0, -0.5, 0.0), (-2.0, -0.5, 0.0), (0.0, -2.0, 0.0),
    (0.0, -3.0, 0.0), (0.0, -1.0, -2.0), (0.0, -1.0, -3.0),
)
_DIVERGENT_ROWS = ((0.0, -0.5, 0.0), (0.0, -1.0, 0.0), (1.0, 0.0, 0.0), (0.0, 0.0, 0.0))
_ORACLE_POINTS = (14.0, 23.0)

# LEFF: показатели α, окно [10⁻⁸, 10⁸], сетки 2 и 4 точки на декаду.
LEFF_EXPONENTS = (0.25, 1.0, 3.0)
LEFF_WINDOW = (1e-8, 1e8)
LEFF_POINTS_PER_DECADE = 2
LEFF_REFINEMENT_TOL = 0.1

# LTb1: строки, при которых ∫_0 s⁻¹b сходится, и сетка к нулю.
# Рост tilde(b)/b не быстрее ℓ·ℓℓ, поэтому сетка доходит до |log t| ≈ 147.
_LTB_ZERO_ROWS = ((0.0, -2.0, 0.0), (0.0, -3.0, 0.0), (0.0, -1.0, -2.0))
LTB_ZERO_GRID = (1e-4, 1e-8, 1e-16, 1e-32, 1e-64)
LTB_MIN_GROWTH = 5.0


@dataclass(frozen=True)
class SVSuiteReport:
    algebra_max_error: float
    # === LEFF ===
    leff_band_zero: Tuple[float, float]
    leff_band_infinity: Tuple[float, float]
    leff_k: float
    leff_k_coarse: float
    # === LTb1 ===
    ltb_growth: float
    ltb_monotone: bool
    # === Оракул ===
    integrability_agreement: Tuple[int, int]
    transform_rows: Tuple[Dict[str, Any], ...]

    @property
    def leff_stable(self) -> bool:
        """K не меняется при удвоении плотности сетки (в пределах LEFF_REFINEMENT_TOL)."""
        return math.isfinite(self.leff_k) and abs(self.leff_k - self.leff_k_coarse) <= LEFF_REFINEMENT_TOL * self.leff_k

    @property
    def consistent(self) -> bool:
        agree, total = self.integrability_agreement
        return (
            self.algebra_max_error <= 1e-9
            and self.leff_stable
            and self.ltb_monotone
            and self.ltb_growth >= LTB_MIN_GROWTH
            and agree == total
            and all(row["ok"] for row in self.transform_rows)
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "algebra_max_error": self.algebra_max_error,
            "leff_band_zero": list(self.leff_band_zero),
            "leff_band_infinity": list(self.leff_band_infinity),
            "leff_k": _num(self.leff_k),
            "leff_k_coarse": _num(self.leff_k_coarse),
            "ltb_growth": _num(self.ltb_growth),
            "ltb_monotone": self.ltb_monotone,
            "integrability_agreement": list(self.integrability_agreement),
            "transform_rows": [dict(row) for row in self.transform_rows],
            "consistent": self.consistent,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SVSuiteReport":
        agree, total = data["integrability_agreement"]
        zero_lo, zero_hi = data["leff_band_zero"]
        inf_lo, inf_hi = data["leff_band_infinity"]
        return cls(
            algebra_max_error=float(data["algebra_max_error"]),
            leff_band_zero=(float(zero_lo), float(zero_hi)),
            leff_band_infinity=(float(inf_lo), float(inf_hi)),
            leff_k=float(data["leff_k"]),
            leff_k_coarse=float(data["leff_k_coarse"]),
            ltb_growth=float(data["ltb_growth"]),
            ltb_monotone=bool(data["ltb_monotone"]),
            integrability_agreement=(int(agree), int(total)),
            transform_rows=tuple(dict(row) for row in data["transform_rows"]),
        )


def _random_sv(rng: np.random.Generator, pool: Sequence[Tuple[float, float, float]]) -> SlowlyVaryingFunction:
    first, second = rng.integers(0, len(pool), size=2)
    return SlowlyVaryingFunction(
        float(np.exp(rng.uniform(-1.0, 1.0))),
        EndpointSignature.from_sequence(pool[int(first)]),
        EndpointSignature.from_sequence(pool[int(second)]),
    )


def _relative(a: float, b: float) -> float:
    return abs(a - b) / max(abs(b), 1e-300)


def _algebra_error(rng: np.random.Generator, n: int) -> float:
    worst = 0.0
    ts = np.exp(rng.uniform(math.log(1e-6), math.log(1e6), size=20))
    for _ in range(n):
        b1, b2 = _random_sv(rng, _SAFE_SIGNATURES), _random_sv(rng, _SAFE_SIGNATURES)
        for t in ts:
            t = float(t)
            worst = max(
                worst,
                _relative(float((b1 * b2)(t)), float(b1(t)) * float(b2(t))),
                _relative(float((b1 ** 1.5)(t)), float(b1(t)) ** 1.5),
                _relative(float(b1.recip_arg()(t)), float(b1(1.0 / t))),
                _relative(float(b1.reciprocal()(t)) * float(b1(t)), 1.0),
            )
    return worst


def _band(values: Sequence[float]) -> Tuple[float, float]:
    return (min(values), max(values)) if values else (1.0, 1.0)


def _leff_k(ratios: Sequence[float]) -> float:
    return max(max(ratios), 1.0 / min(ratios))


def _leff_band(
    rng: np.random.Generator, n: int
) -> Tuple[Tuple[float, float], Tuple[float, float], float, float]:
    """
    Отношение ∫_0^t s^{α−1}b / (t^α b(t)) на лог-сетке окна LEFF_WINDOW
    для α ∈ LEFF_EXPONENTS. Возвращает полосы у нуля (t ≤ 1) и у
    бесконечности (t > 1), K на полной сетке и K на прореженной вдвое.
    """
    lo, hi = LEFF_WINDOW
    decades = int(round(math.log10(hi / lo)))
    fine = np.geomspace(lo, hi, 2 * LEFF_POINTS_PER_DECADE * decades + 1)
    near_zero: List[float] = []
    near_inf: List[float] = []
    coarse: List[float] = []
    for _ in range(n):
        b = _random_sv(rng, _MODERATE_SIGNATURES)
        for a in LEFF_EXPONENTS:
            for i, t in enumerate(fine):
                t = float(t)
                ratio = quad_oracle(a, b, 1.0, (0.0, t)).value / (t ** a * float(b(t)))
                (near_zero if t <= 1.0 else near_inf).append(ratio)
                if i % 2 == 0:
                    coarse.append(ratio)
    return _band(near_zero), _band(near_inf), _leff_k(near_zero + near_inf), _leff_k(coarse)


def _strictly_increasing(ratios: Sequence[float]) -> bool:
    return all(later > earlier for earlier, later in zip(ratios, ratios[1:]))


def _ltb_growth(rng: np.random.Generator, n: int) -> Tuple[float, bool]:
    """
    tilde(b)/b к нулю на LTB_ZERO_GRID при сходящемся ∫_0 s⁻¹b: наименьший
    суммарный рост и монотонность. Дополнительно tilde(b)/b к ∞ и hat(b)/b к 0.
    """
    growth = math.inf
    monotone = True
    for _ in range(n):
        far = _random_sv(rng, _MODERATE_SIGNATURES)
        row = _LTB_ZERO_ROWS[int(rng.integers(0, len(_LTB_ZERO_ROWS)))]
        zero_case = SlowlyVaryingFunction(1.0, EndpointSignature.from_sequence(row), far.sig_inf)
        toward_zero = [quad_oracle(0.0, zero_case, 1.0, (0.0, t)).value / float(zero_case(t))
                       for t in LTB_ZERO_GRID]
        growth = min(growth, toward_zero[-1] / toward_zero[0])

        tilde_case = SlowlyVaryingFunction(1.0, EndpointSignature(0.0, -2.0, 0.0), far.sig_inf)
        hat_case = SlowlyVaryingFunction(1.0, far.sig0, EndpointSignature(0.0, -2.0, 0.0))
        toward_inf = [quad_oracle(0.0, tilde_case, 1.0, (0.0, t)).value / float(tilde_case(t))
                      for t in (1e4, 1e8, 1e16)]
        hat_ratios = [quad_oracle(0.0, hat_case, 1.0, (t, math.inf)).value / float(hat_case(t))
                      for t in (1e-4, 1e-8, 1e-16)]
        monotone = monotone and all(_strictly_increasing(r) for r in (toward_zero, toward_inf, hat_ratios))
    return growth, monotone


def _integrability_agreement(rng: np.random.Generator, n: int) -> Tuple[int, int]:
    agree = 0
    for _ in range(n):
        b = _random_sv(rng, _SAFE_SIGNATURES)
        for endpoint, interval in ((Endpoint.ZERO, (0.0, 1.0)), (Endpoint.INFINITY, (1.0, math.inf))):
            rule = endpoint_integrability(b, 1.0, 0.0, endpoint)
            oracle = quad_oracle(0.0, b, 1.0, interval)
            agree += int(rule == (not oracle.diverged))
    return agree, 2 * n


def _transform_case(kind: TransformKind, sig: Tuple[float, float, float]) -> SlowlyVaryingFunction:
    signature = EndpointSignature.from_sequence(sig)
    if kind is TransformKind.TILDE:
        return SlowlyVaryingFunction(1.0, signature, ZERO_SIGNATURE)
    return SlowlyVaryingFunction(1.0, ZERO_SIGNATURE, signature)


def transform_oracle_rows() -> List[Dict[str, Any]]:
    """Предсказанные tilde/hat против квадратурного оракула при |log t| ∈ {14, 23}."""
    rows = []
    for kind in (TransformKind.TILDE, TransformKind.HAT):
        for sig in _CONVERGENT_ROWS:
            b = _transform_case(kind, sig)
            predicted = tilde_hat_transform(b, kind)
            errors = []
            for u in _ORACLE_POINTS:
                t = math.exp(-u) if kind is TransformKind.TILDE else math.exp(u)
                interval = (0.0, t) if kind is TransformKind.TILDE else (t, math.inf)
                exact = quad_oracle(0.0, b, 1.0, interval, rel_tol=1e-10).value
                errors.append(_relative(float(predicted(t)), exact))
            ok = errors[0] <= 0.1 and (errors[1] < errors[0] or errors[1] <= 1e-6)
            rows.append({"kind": kind.value, "sig": list(sig), "errors": errors, "ok": ok})
        for sig in _DIVERGENT_ROWS:
            b = _transform_case(kind, sig)
            rule = tilde_hat_transform(b, kind) is TransformOutcome.DIVERGES
            interval = (0.0, 1.0) if kind is TransformKind.TILDE else (1.0, math.inf)
            oracle = quad_oracle(0.0, b, 1.0, interval).diverged
            rows.append({"kind": kind.value, "sig": list(sig), "diverges": rule, "ok": rule and oracle})
    return rows


def check_sv_suite(seed: int = DEFAULT_CONFIG.seed, n: int = 20) -> SVSuiteReport:
    """Алгебра сигнатур, полоса LEFF, рост tilde/hat над b, интегрируемость, строки преобразований."""
    rng = np.random.default_rng(seed)
    algebra = _algebra_error(rng, n)
    band_zero, band_inf, k, k_coarse = _leff_band(rng, max(1, n // 4))
    growth, monotone = _ltb_growth(rng, max(1, n // 4))
    report = SVSuiteReport(
        algebra_max_error=algebra,
        leff_band_zero=band_zero,
        leff_band_infinity=band_inf,
        leff_k=k,
        leff_k_coarse=k_coarse,
        ltb_growth=growth,
        ltb_monotone=monotone,
        integrability_agreement=_integrability_agreement(rng, n),
        transform_rows=tuple(transform_oracle_rows()),
    )
    logger.info("Набор sv: K(LEFF)=%.3g, рост LTb1=×%.3g, согласовано=%s", k, growth, report.consistent)
    return report


__all__ = [
    "EmbeddingCheckReport",
    "CatalogReport",
    "StarGapReport",
    "StarPlainReport",
    "DualityReport",
    "CountReport",
    "QuasiNormReport",
    "SVSuiteReport",
    "check_embedding_numeric",
    "check_embedding_catalog",
    "check_star_gap",
    "check_star_plain_identity",
    "check_holder_and_duality",
    "check_rearrangement_oracle",
    "check_hardy_littlewood",
    "check_quasi_norm",
    "check_lebesgue_coincidence",
    "check_sv_suite",
    "transform_oracle_rows",
]
