# -*- coding: utf-8 -*-
"""
ФУНКЦИОНАЛЫ ЛОРЕНЦА–КАРАМАТЫ

    ‖f‖_{p,q,b}   = ‖ t^{1/p − 1/q} b(t) f*(t)  ‖_q,
    ‖f‖_{(p,q,b)} = ‖ t^{1/p − 1/q} b(t) f**(t) ‖_q

на точных носителях DecreasingStep. Здесь же фундаментальная функция
и нормы концевых пространств (Лоренца ∫ f* dφ и Марцинкевича sup φ·f**).

Интегралы по кускам берутся в замкнутой форме, когда b постоянна,
иначе через квадратурный оракул svcalc. Супремумы при q = ∞
ищутся по логарифмической сетке с уточнением методом Брента.
"""

import logging
import math
from dataclasses import dataclass, replace
from typing import Any, Callable, Dict, Iterable, Optional, Sequence, Tuple

import numpy as np
from scipy import integrate, optimize

from lk_spaces.config import DEFAULT_CONFIG, LKConfig
from lk_spaces.core.rearrange import DecreasingStep, truncate
from lk_spaces.core.svcalc import (
    Endpoint,
    SlowlyVaryingFunction,
    TransformKind,
    endpoint_integrability,
    power_limit,
    quad_oracle,
    tilde_hat_transform,
)
from lk_spaces.validator import ContractViolation, LKValidationError, SpaceSpecValidator

logger = logging.getLogger(__name__)

INF = math.inf


def _format_exponent(x: float) -> str:
    if math.isinf(x):
        return "inf"
    return str(int(x)) if float(x).is_integer() else repr(float(x))


@dataclass(frozen=True)
class SpaceSpec:
    """Пространство L^{p,q,b} (star=False) или L^{(p,q,b)} (star=True) над мерой μ(R)."""
    p: float
    q: float
    b: SlowlyVaryingFunction = SlowlyVaryingFunction()
    mu_r: float = INF
    star: bool = False

    def __post_init__(self):
        p, q, mu_r = SpaceSpecValidator.validate_space(self.p, self.q, self.mu_r)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "mu_r", mu_r)
        if not isinstance(self.b, SlowlyVaryingFunction):
            raise LKValidationError(f"b должна быть SlowlyVaryingFunction, получено {type(self.b).__name__}")

    @property
    def inv_p(self) -> float:
        return 0.0 if math.isinf(self.p) else 1.0 / self.p

    def with_measure(self, mu_r: float) -> "SpaceSpec":
        return replace(self, mu_r=mu_r)

    def as_star(self, star: bool = True) -> "SpaceSpec":
        return replace(self, star=star)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": _format_exponent(self.p) if math.isinf(self.p) else self.p,
            "q": _format_exponent(self.q) if math.isinf(self.q) else self.q,
            "b": self.b.to_dict(),
            "mu": _format_exponent(self.mu_r) if math.isinf(self.mu_r) else self.mu_r,
            "star": self.star,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SpaceSpec":
        b = SlowlyVaryingFunction.from_dict(data["b"]) if "b" in data else SlowlyVaryingFunction()
        return cls(
            p=float(data["p"]), q=float(data["q"]), b=b,
            mu_r=float(data.get("mu", INF)), star=bool(data.get("star", False)),
        )

    def __str__(self) -> str:
        parts = [f"p={_format_exponent(self.p)}", f"q={_format_exponent(self.q)}", f"b={self.b}"]
        if not math.isinf(self.mu_r):
            parts.append(f"mu={_format_exponent(self.mu_r)}")
        if self.star:
            parts.append("star")
        return "LK(" + ",".join(parts) + ")"


@dataclass(frozen=True)
class NormEvaluation:
    """Значение функционала: +∞ при обнаруженной расходимости (diverged=True)."""
    value: float
    diverged: bool = False
    residual: float = 0.0

    def __float__(self) -> float:
        return self.value

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": "inf" if math.isinf(self.value) else self.value,
            "diverged": self.diverged,
            "residual": self.residual,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "NormEvaluation":
        return cls(float(data["value"]), bool(data.get("diverged", False)), float(data.get("residual", 0.0)))


# ───────────────────────
# ИНТЕГРАЛЫ И СУПРЕМУМЫ ПО КУСКАМ
# ───────────────────────

def _closed_form_power(a: float, lo: float, hi: float) -> float:
    """∫_lo^hi t^{a−1} dt с бесконечностями."""
    if a == 0:
        if lo == 0 or math.isinf(hi):
            return INF
        return math.log(hi / lo)
    if a > 0:
        return INF if math.isinf(hi) else (hi ** a - lo ** a) / a
    if lo == 0:
        return INF
    return (lo ** a - (0.0 if math.isinf(hi) else hi ** a)) / (-a)


def piece_integral(
    b: SlowlyVaryingFunction, a: float, q: float, lo: float, hi: float, config: LKConfig = DEFAULT_CONFIG
) -> Tuple[float, bool]:
    """∫_lo^hi t^{a−1} b(t)^q dt и флаг расходимости."""
    if b.is_constant:
        value = b.scale ** q * _closed_form_power(a, lo, hi)
        return value, math.isinf(value)
    improper = lo == 0 or math.isinf(hi)
    rel_tol = config.tail_rel_tol if improper else config.piece_rel_tol
    result = quad_oracle(a, b, q, (lo, hi), rel_tol=rel_tol)
    if result.diverged:
        logger.debug("Расходящийся интеграл куска [%s, %s]: a=%s, q=%s, b=%s", lo, hi, a, q, b)
    elif not result.converged:
        logger.warning("Оракул не достиг допуска на [%s, %s]: ошибка %.3g", lo, hi, result.abs_error)
    return result.value, result.diverged


def _log_b_scalar(b: SlowlyVaryingFunction, x: float) -> float:
    """log b(e^x)."""
    endpoint = Endpoint.ZERO if x <= 0 else Endpoint.INFINITY
    return math.log(b.scale) + b.signature(endpoint).log_profile_scalar(abs(x))


def _log_quad(log_integrand: Callable[[float], float], x1: float, x2: float, rel_tol: float) -> float:
    """∫ exp(log_integrand(x)) dx по [x1, x2] с разрезом в x = 0."""
    def integrand(x: float) -> float:
        value = log_integrand(x)
        return math.inf if value > 709.0 else math.exp(value)

    points = [0.0] if x1 < 0 < x2 else None
    value, _ = integrate.quad(integrand, x1, x2, epsabs=0.0, epsrel=rel_tol, limit=200, points=points)
    return value


def _sup_on_interval(
    log_weight: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    limit_lo: Optional[float],
    limit_hi: Optional[float],
    points_per_decade: int,
) -> Tuple[float, float]:
    """
    sup веса на [lo, hi] (lo может быть 0, hi может быть ∞).
    Пределы на несобственных концах передаются явно; внутренний
    максимум уточняется ограниченным методом Брента в координате log t.
    Возвращает (sup, невязка уточнения).
    """
    candidates = [v for v in (limit_lo, limit_hi) if v is not None]
    if any(math.isinf(v) for v in candidates):
        return INF, 0.0
    log_lo = math.log(lo) if lo > 0 else math.log(hi) - 690.0 if math.isfinite(hi) else -690.0
    log_hi = math.log(hi) if math.isfinite(hi) else max(log_lo, 0.0) + 690.0
    log_lo, log_hi = max(log_lo, -700.0), min(log_hi, 700.0)
    n = max(int((log_hi - log_lo) / math.log(10.0) * points_per_decade), 2) + 1
    xs = np.linspace(log_lo, log_hi, n)
    if log_lo < 0 < log_hi:
        xs = np.sort(np.append(xs, 0.0))
    with np.errstate(over="ignore", invalid="ignore"):
        logs = np.asarray(log_weight(xs), dtype=float)
    logs = np.where(np.isnan(logs), -np.inf, logs)
    best = int(np.argmax(logs))
    grid_log = float(logs[best])
    refined_log = grid_log
    if 0 < best < len(xs) - 1 and math.isfinite(grid_log):
        result = optimize.minimize_scalar(
            lambda x: -float(log_weight(np.array([x]))[0]),
            bounds=(float(xs[best - 1]), float(xs[best + 1])),
            method="bounded",
            options={"xatol": 1e-12},
        )
        refined_log = max(grid_log, -float(result.fun))
    if refined_log > 709.0:
        return INF, 0.0
    sup = math.exp(refined_log) if math.isfinite(refined_log) else 0.0
    residual = abs(1.0 - math.exp(grid_log - refined_log)) if math.isfinite(refined_log) else 0.0
    return max([sup] + candidates), residual


def _log_power_weight(
    b: SlowlyVaryingFunction, e: float, extra: Optional[Callable[[np.ndarray], np.ndarray]] = None
) -> Callable[[np.ndarray], np.ndarray]:
    """log(t^e·b(t)) (+ log добавочного множителя) как функция x = log t."""
    log_c = math.log(b.scale)

    def log_weight(xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=float)
        u = np.abs(xs)
        out = e * xs + log_c + np.where(xs <= 0, b.sig0.log_profile(u), b.sig_inf.log_profile(u))
        if extra is not None:
            out = out + extra(xs)
        return out

    return log_weight


def _log_maximal_piece(v: float, shift: float) -> Callable[[np.ndarray], np.ndarray]:
    """log f**(t) = log(v + shift/t) на куске перестановки."""
    def log_factor(xs: np.ndarray) -> np.ndarray:
        return np.log(v + shift * np.exp(-np.asarray(xs, dtype=float)))

    return log_factor


# ───────────────────────
# ФУНКЦИОНАЛЫ
# ───────────────────────

def _prepare(spec: SpaceSpec, fstar: DecreasingStep) -> DecreasingStep:
    return truncate(fstar, spec.mu_r)


def lk_norm(spec: SpaceSpec, fstar: DecreasingStep, config: LKConfig = DEFAULT_CONFIG) -> NormEvaluation:
    """‖f‖_{p,q,b} по кускам f*; при star=True делегирует в lk_norm_star."""
    if spec.star:
        return lk_norm_star(spec, fstar, config)
    f = _prepare(spec, fstar)
    if f.n_pieces == 0:
        return NormEvaluation(0.0)

    if math.isinf(spec.q):
        best, residual = 0.0, 0.0
        for left, right, v in f.intervals():
            limit_lo = power_limit(spec.b, spec.inv_p, Endpoint.ZERO) if left == 0 else None
            sup, res = _sup_on_interval(
                _log_power_weight(spec.b, spec.inv_p), left, right, limit_lo, None, config.points_per_decade
            )
            best, residual = max(best, v * sup), max(residual, res)
        return NormEvaluation(best, math.isinf(best), residual)

    a = spec.q * spec.inv_p
    terms = []
    for left, right, v in f.intervals():
        value, diverged = piece_integral(spec.b, a, spec.q, left, right, config)
        if diverged:
            return NormEvaluation(INF, True)
        terms.append(v ** spec.q * value)
    return NormEvaluation(math.fsum(terms) ** (1.0 / spec.q))


def lk_norm_star(spec: SpaceSpec, fstar: DecreasingStep, config: LKConfig = DEFAULT_CONFIG) -> NormEvaluation:
    """
    ‖f‖_{(p,q,b)}: на куске i  f**(t) = vᵢ + Dᵢ/t,  Dᵢ = Aᵢ − vᵢaᵢ ≥ 0;
    за носителем f**(t) = A/t, хвост интегрируется до ∞.
    """
    f = _prepare(spec, fstar)
    if f.n_pieces == 0:
        return NormEvaluation(0.0)
    areas = f.areas()
    total_area = areas[-1]
    support = f.support
    b, p_inv, q = spec.b, spec.inv_p, spec.q

    if math.isinf(q):
        best, residual = 0.0, 0.0
        for i, (left, right, v) in enumerate(f.intervals()):
            shift = areas[i] - v * left
            limit_lo = power_limit(b, p_inv, Endpoint.ZERO) * v if left == 0 else None
            sup, res = _sup_on_interval(
                _log_power_weight(b, p_inv, _log_maximal_piece(v, shift)),
                left, right, limit_lo, None, config.points_per_decade,
            )
            best, residual = max(best, sup), max(residual, res)
        tail_limit = power_limit(b, p_inv - 1.0, Endpoint.INFINITY) * total_area
        sup, res = _sup_on_interval(
            _log_power_weight(b, p_inv - 1.0, _log_maximal_piece(0.0, total_area)),
            support, INF, None, tail_limit, config.points_per_decade,
        )
        best = max(best, sup)
        return NormEvaluation(best, math.isinf(best), max(residual, res))

    a = q * p_inv
    terms = []
    for i, (left, right, v) in enumerate(f.intervals()):
        shift = areas[i] - v * left
        if shift <= 0:
            value, diverged = piece_integral(b, a, q, left, right, config)
            if diverged:
                return NormEvaluation(INF, True)
            terms.append(v ** q * value)
            continue

        def log_integrand(x: float, v=v, shift=shift) -> float:
            return a * x + q * _log_b_scalar(b, x) + q * math.log(v + shift * math.exp(-x))

        terms.append(_log_quad(log_integrand, math.log(left), math.log(right), config.piece_rel_tol))

    tail, diverged = piece_integral(b, a - q, q, support, INF, config)
    if diverged:
        return NormEvaluation(INF, True)
    terms.append(total_area ** q * tail)
    return NormEvaluation(math.fsum(terms) ** (1.0 / q))


def fundamental_function(spec: SpaceSpec, t: float, config: LKConfig = DEFAULT_CONFIG) -> float:
    """φ(t) = ‖χ_E‖ при μ(E) = t; t > μ(R) является ошибкой области."""
    t = SpaceSpecValidator.validate_positive_argument(t, upper=spec.mu_r)
    return lk_norm(spec, DecreasingStep.characteristic(t), config).value


@dataclass(frozen=True)
class EndpointNorms:
    lorentz: float
    marcinkiewicz: float
    residual: float

    def to_dict(self) -> Dict[str, Any]:
        return {"lorentz": self.lorentz, "marcinkiewicz": self.marcinkiewicz, "residual": self.residual}


def _check_monotone(ts: Sequence[float], phis: Sequence[float]):
    for (t1, f1), (t2, f2) in zip(zip(ts, phis), zip(ts[1:], phis[1:])):
        if f2 < f1 - 1e-12 * max(1.0, abs(f1)):
            raise ContractViolation(f"φ не является неубывающей: φ({t1}) = {f1} > φ({t2}) = {f2}")


def endpoint_norms(
    phi: Callable[[float], float],
    fstar: DecreasingStep,
    mu_r: float = INF,
    points_per_decade: int = 16,
) -> EndpointNorms:
    """
    Нормы концевых пространств для φ:
    Лоренц  Σ vᵢ(φ(aᵢ₊₁) − φ(aᵢ)) с φ(0) = 0,
    Марцинкевич  sup_{t<μ(R)} φ(t) f**(t) по сетке с уточнением.
    """
    f = truncate(fstar, mu_r)
    if f.n_pieces == 0:
        return EndpointNorms(0.0, 0.0, 0.0)

    first, support = f.breakpoints[1], f.support
    upper = min(mu_r, support * 1e6)
    decades = math.log10(upper / (first * 1e-3))
    grid = np.geomspace(first * 1e-3, upper, max(int(decades * points_per_decade), 2) + 1)
    ts = np.unique(np.concatenate([grid, [a for a in f.breakpoints[1:] if a <= upper]]))
    phis = [float(phi(float(t))) for t in ts]
    _check_monotone(list(ts), phis)

    phi_at = dict(zip(ts.tolist(), phis))
    lorentz_terms = []
    previous = 0.0
    for left, right, v in f.intervals():
        current = phi_at.get(right)
        if current is None:
            current = float(phi(right))
        lorentz_terms.append(v * (current - previous))
        previous = current
    lorentz = math.fsum(lorentz_terms)

    areas = f.areas()

    def maximal_at(t: float) -> float:
        index = int(np.searchsorted(f.breakpoints, t, side="right")) - 1
        if index >= f.n_pieces:
            return areas[-1] / t
        left, v = f.breakpoints[index], f.values[index]
        return (areas[index] + v * (t - left)) / t

    def weighted(t: float) -> float:
        return float(phi(t)) * maximal_at(t)

    values = [p * maximal_at(float(t)) for t, p in zip(ts, phis)]
    best = int(np.argmax(values))
    grid_sup = values[best]
    refined = grid_sup
    if 0 < best < len(ts) - 1:
        result = optimize.minimize_scalar(
            lambda x: -weighted(math.exp(x)),
            bounds=(math.log(ts[best - 1]), math.log(ts[best + 1])),
            method="bounded",
            options={"xatol": 1e-12},
        )
        refined = max(grid_sup, -float(result.fun))
    residual = abs(refined - grid_sup) / refined if refined > 0 else 0.0
    return EndpointNorms(lorentz, refined, residual)


# ───────────────────────
# ДОПОЛНИТЕЛЬНЫЕ ОПЕРАЦИИ
# ───────────────────────

def star_as_plain(spec: SpaceSpec) -> Optional[SpaceSpec]:
    """
    L^{(1,1,b)} = L^{1,1,hat(b)}, когда ∫_1^∞ t⁻¹b < ∞ (тождество Фубини
    ‖f‖_{(1,1,b)} = ∫ f*·hat(b)). Иначе None.
    """
    if not (spec.star and spec.p == 1 and spec.q == 1):
        return None
    if not endpoint_integrability(spec.b, 1.0, 0.0, Endpoint.INFINITY):
        return None
    hat = tilde_hat_transform(spec.b, TransformKind.HAT)
    if not isinstance(hat, SlowlyVaryingFunction):
        return None
    return replace(spec, b=hat, star=False)


def measure_quasi_constant(
    spec: SpaceSpec,
    pairs: Iterable[Tuple[DecreasingStep, DecreasingStep, DecreasingStep]],
    config: LKConfig = DEFAULT_CONFIG,
) -> float:
    """K = max ‖f+g‖ / (‖f‖ + ‖g‖) по тройкам (f*, g*, (f+g)*)."""
    k = 0.0
    for fstar, gstar, sumstar in pairs:
        denominator = lk_norm(spec, fstar, config).value + lk_norm(spec, gstar, config).value
        if denominator == 0 or math.isinf(denominator):
            continue
        k = max(k, lk_norm(spec, sumstar, config).value / denominator)
    return k


def is_quasiconcave(
    spec: SpaceSpec, grid: Optional[Sequence[float]] = None, slack: float = 1e-9,
    config: LKConfig = DEFAULT_CONFIG,
) -> bool:
    """φ не убывает и t/φ(t) не убывает на сетке (с относительным зазором slack)."""
    ts = np.geomspace(1e-6, 1e6, 49) if grid is None else np.asarray(grid, dtype=float)
    ts = ts[ts <= spec.mu_r]
    phis = np.array([fundamental_function(spec, float(t), config) for t in ts])
    ratios = ts / phis
    rising = np.all(np.diff(phis) >= -slack * phis[:-1])
    ratio_rising = np.all(np.diff(ratios) >= -slack * ratios[:-1])
    return bool(rising and ratio_rising)
