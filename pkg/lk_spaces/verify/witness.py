# -*- coding: utf-8 -*-
"""
СВИДЕТЕЛИ

Рецепты функций, на которых доказательства проверяют вложения и
неравенства, и их дискретизация в DecreasingStep.

Дискретизация: логарифмическая сетка t_min = g₀ < g₁ < … < g_n = t_max,
на ячейке [g_k, g_{k+1}) берётся значение в левом конце, затем бегущий
максимум справа налево делает профиль невозрастающим. Ячейка [0, g₁)
получает значение в g₀. Формулы вычисляются в логарифмах; значение
выше e^700 является ошибкой области, а не переполнением.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, Optional

import numpy as np

from lk_spaces.core.lknorm import SpaceSpec
from lk_spaces.core.rearrange import DecreasingStep
from lk_spaces.core.svcalc import (
    SlowlyVaryingFunction,
    SupKind,
    TransformKind,
    TransformOutcome,
    sup_transform,
    tilde_hat_transform,
)
from lk_spaces.validator import DomainError, LKValidationError, SpaceSpecValidator, UnsupportedInput

logger = logging.getLogger(__name__)

_MAX_LOG_VALUE = 700.0


class WitnessKind(str, Enum):
    PROPER_EMBEDDING_GAP = "ProperEmbeddingGap"
    CASE_P1_LESS_P2 = "CaseP1LessP2"
    CASE_P1_GREATER_P2 = "CaseP1GreaterP2InfMeasure"
    CHARACTERISTIC_SWEEP = "CharacteristicSweep"
    STAR_GAP_SWEEP = "StarGapSweep"
    ASSOCIATE_EXTREMAL = "AssociateExtremal"


_CHARACTERISTIC_KINDS = (
    WitnessKind.CHARACTERISTIC_SWEEP,
    WitnessKind.STAR_GAP_SWEEP,
    WitnessKind.CASE_P1_LESS_P2,
)


@dataclass(frozen=True)
class WitnessRecipe:
    """
    Рецепт свидетеля. Для характеристических рецептов значим только mass
    (χ_{(0, mass)}); для остальных — окно [t_min, t_max] и плотность сетки.
    """
    kind: WitnessKind
    source: SpaceSpec
    target: Optional[SpaceSpec] = None
    t_min: float = 1e-8
    t_max: float = 1e8
    points_per_decade: int = 64
    mass: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "kind", WitnessKind(self.kind))
        t_min = SpaceSpecValidator.validate_positive_argument(self.t_min)
        t_max = SpaceSpecValidator.validate_positive_argument(self.t_max)
        if not t_min < t_max:
            raise LKValidationError(f"Окно свидетеля пусто: [{t_min}, {t_max}]")
        if self.points_per_decade < 1:
            raise LKValidationError(f"points_per_decade должно быть ≥ 1, получено {self.points_per_decade}")
        SpaceSpecValidator.validate_positive_argument(self.mass)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "source": str(self.source),
            "target": str(self.target) if self.target is not None else None,
            "t_min": self.t_min,
            "t_max": self.t_max,
            "points_per_decade": self.points_per_decade,
            "mass": self.mass,
        }


# ───────────────────────
# ПРОФИЛИ (в логарифмах)
# ───────────────────────

def _log_ell(t: np.ndarray) -> np.ndarray:
    """log ℓ(t), ℓ(t) = 1 + |log t|."""
    return np.log1p(np.abs(np.log(t)))


def _finite_transform(result, what: str) -> SlowlyVaryingFunction:
    if isinstance(result, TransformOutcome):
        raise UnsupportedInput(f"{what}: {result.value}")
    return result


def _q_gap_profile(source: SpaceSpec, target: SpaceSpec) -> Callable[[np.ndarray], np.ndarray]:
    """
    Свидетель q₁ > q₂ с 1/r = 1/q₂ − 1/q₁:
    p < ∞ или q₁ = ∞:  t^{−1/p} b₁⁻¹ (b₂/b₁)^{r/q₁} (b₁ заменяется на sup_(0,t) b₁ при p = q₁ = ∞);
    p = ∞, q₁ < ∞:     (T₂/T₁)^{r/(q₁q₂)},  Tᵢ(t) = ∫_0^t s⁻¹ bᵢ^{qᵢ}.
    На обоих концах обе нормы сводятся к ∫ t⁻¹ (…)^r, расходящемуся на окне.
    """
    q1, q2 = source.q, target.q
    inv_q1 = 0.0 if math.isinf(q1) else 1.0 / q1
    r = 1.0 / (1.0 / q2 - inv_q1)
    b1, b2 = source.b, target.b

    if math.isinf(source.p) and not math.isinf(q1):
        t1 = _finite_transform(tilde_hat_transform(b1 ** q1, TransformKind.TILDE), "tilde(b₁^q₁)")
        t2 = _finite_transform(tilde_hat_transform(b2 ** q2, TransformKind.TILDE), "tilde(b₂^q₂)")
        power = r / (q1 * q2)
        return lambda t: power * (t2.log_at(t) - t1.log_at(t))

    if math.isinf(source.p):
        b1 = _finite_transform(sup_transform(b1, SupKind.TILDE_SUP), "sup_(0,t) b₁")
    inv_p = source.inv_p
    return lambda t: -inv_p * np.log(t) - b1.log_at(t) + r * inv_q1 * (b2.log_at(t) - b1.log_at(t))


def _pelk_profile(source: SpaceSpec) -> Callable[[np.ndarray], np.ndarray]:
    """t^{−1/p} ℓ(t)^{−1/q} b⁻¹(t): лежит в L^{p,r,b} при r > q, но не в L^{p,q,b}."""
    inv_q = 0.0 if math.isinf(source.q) else 1.0 / source.q
    return lambda t: -source.inv_p * np.log(t) - inv_q * _log_ell(t) - source.b.log_at(t)


def _tail_profile(source: SpaceSpec) -> Callable[[np.ndarray], np.ndarray]:
    """t^{−1/p₁} ℓ(t)^{−2/q₁} b₁⁻¹(t) на [1, ∞)."""
    inv_q = 0.0 if math.isinf(source.q) else 1.0 / source.q
    return lambda t: -source.inv_p * np.log(t) - 2.0 * inv_q * _log_ell(t) - source.b.log_at(t)


def _extremal_profile(source: SpaceSpec) -> Callable[[np.ndarray], np.ndarray]:
    """t^{−1/p} b⁻¹(t): уравновешивает φ_X и t/φ_X."""
    return lambda t: -source.inv_p * np.log(t) - source.b.log_at(t)


# ───────────────────────
# ДИСКРЕТИЗАЦИЯ
# ───────────────────────

def discretize(
    log_profile: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    points_per_decade: int,
    head_value: Optional[float] = None,
) -> DecreasingStep:
    """
    Невозрастающая ступенчатая мажоранта exp(log_profile) на [lo, hi).
    head_value задаёт значение на [0, lo); иначе первая ячейка
    продолжается до нуля.
    """
    n = max(int(math.ceil(math.log10(hi / lo) * points_per_decade)), 1)
    grid = np.geomspace(lo, hi, n + 1)
    with np.errstate(over="ignore", invalid="ignore"):
        logs = np.asarray(log_profile(grid[:-1]), dtype=float)
    if np.any(np.isnan(logs)):
        raise DomainError(f"Профиль свидетеля не определён на [{lo}, {hi}]")
    logs = np.maximum.accumulate(logs[::-1])[::-1]
    if logs[0] > _MAX_LOG_VALUE:
        raise DomainError(f"Значения свидетеля превышают e^{_MAX_LOG_VALUE:.0f} на [{lo}, {hi}]")
    values = np.exp(logs).tolist()
    breakpoints = [0.0] + grid[1:].tolist()
    if head_value is not None:
        breakpoints = [0.0, lo] + grid[1:].tolist()
        values = [max(head_value, values[0])] + values
    return DecreasingStep(tuple(breakpoints), tuple(values))


def _window(recipe: WitnessRecipe) -> float:
    hi = min(recipe.t_max, recipe.source.mu_r)
    if recipe.t_min >= hi:
        raise DomainError(f"Окно [{recipe.t_min}, {recipe.t_max}] не пересекает (0, μ(R) = {recipe.source.mu_r})")
    return hi


def build_witness(recipe: WitnessRecipe) -> DecreasingStep:
    """DecreasingStep рецепта с носителем в (0, min(μ(R), t_max))."""
    kind = recipe.kind
    if kind in _CHARACTERISTIC_KINDS:
        SpaceSpecValidator.validate_positive_argument(recipe.mass, upper=recipe.source.mu_r)
        return DecreasingStep.characteristic(recipe.mass)

    if kind is WitnessKind.CASE_P1_GREATER_P2:
        if math.isfinite(recipe.source.mu_r):
            raise DomainError("Свидетель p₁ > p₂ требует μ(R) = ∞")
        if recipe.t_max <= 1.0:
            raise DomainError(f"Горизонт свидетеля p₁ > p₂ должен быть > 1, получено {recipe.t_max}")
        return discretize(_tail_profile(recipe.source), 1.0, recipe.t_max, recipe.points_per_decade, head_value=1.0)

    hi = _window(recipe)
    if kind is WitnessKind.ASSOCIATE_EXTREMAL:
        profile = _extremal_profile(recipe.source)
    elif recipe.target is not None and recipe.target.q < recipe.source.q:
        profile = _q_gap_profile(recipe.source, recipe.target)
    else:
        profile = _pelk_profile(recipe.source)
    witness = discretize(profile, recipe.t_min, hi, recipe.points_per_decade)
    logger.debug("Свидетель %s: %d кусков на [%g, %g]", kind.value, witness.n_pieces, recipe.t_min, hi)
    return witness
