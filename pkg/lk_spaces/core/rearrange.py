# -*- coding: utf-8 -*-
"""
ПЕРЕСТАНОВКИ ПРОСТЫХ ФУНКЦИЙ

Точные функции распределения, невозрастающие перестановки f*,
максимальные функции f** и парные интегралы для неравенства
Харди–Литтлвуда.

Простая функция хранится как неупорядоченный набор (значение, масса)
на безатомном σ-конечном пространстве. Перестановка хранит точки
излома 0 = a₀ < a₁ < … < a_n и значения v₁ > v₂ > … > v_n > 0.
"""

import math
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Sequence, Tuple

import numpy as np

from lk_spaces.validator import DomainError, LKValidationError, SpaceSpecValidator


@dataclass(frozen=True)
class StepFunction:
    """Простая функция: пары (значение, масса); хвост (0, ∞) допустим."""
    pieces: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "pieces", SpaceSpecValidator.validate_step_pieces(self.pieces))

    @classmethod
    def of(cls, pieces: Iterable[Sequence[float]]) -> "StepFunction":
        return cls(tuple(tuple(p) for p in pieces))

    def support_mass(self) -> float:
        return math.fsum(m for v, m in self.pieces if v > 0)

    def to_dict(self) -> Dict[str, Any]:
        return {"pieces": [list(p) for p in self.pieces]}


@dataclass(frozen=True)
class JointStepFunction:
    """Тройки (f, g, масса) на общем разбиении."""
    pieces: Tuple[Tuple[float, float, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "pieces", SpaceSpecValidator.validate_joint_pieces(self.pieces))

    @classmethod
    def of(cls, pieces: Iterable[Sequence[float]]) -> "JointStepFunction":
        return cls(tuple(tuple(p) for p in pieces))

    def split(self) -> Tuple[StepFunction, StepFunction]:
        f = StepFunction(tuple((fv, m) for fv, _, m in self.pieces))
        g = StepFunction(tuple((gv, m) for _, gv, m in self.pieces))
        return f, g

    def joint_sum(self) -> StepFunction:
        """Поточечная сумма f + g на том же разбиении."""
        return StepFunction(tuple((fv + gv, m) for fv, gv, m in self.pieces))


@dataclass(frozen=True)
class DecreasingStep:
    """
    Невозрастающая перестановка f* в каноническом виде:
    равные соседние значения слиты, нулевые куски отброшены,
    правая непрерывность в точках излома.
    """
    breakpoints: Tuple[float, ...]
    values: Tuple[float, ...]

    def __post_init__(self):
        bps = tuple(float(a) for a in self.breakpoints)
        vals = tuple(float(v) for v in self.values)
        if len(bps) != len(vals) + 1 or (bps and bps[0] != 0.0):
            raise LKValidationError("Ожидаются точки излома 0 = a₀ < … < a_n и n значений")
        for left, right in zip(bps, bps[1:]):
            if not right > left:
                raise LKValidationError(f"Точки излома должны строго возрастать: {bps}")
        if bps and not math.isfinite(bps[-1]):
            raise LKValidationError("Носитель перестановки должен быть конечным")
        for left, right in zip(vals, vals[1:]):
            if right > left:
                raise LKValidationError(f"Значения перестановки должны не возрастать: {vals}")
        if any((not math.isfinite(v)) or v < 0 for v in vals):
            raise LKValidationError(f"Значения перестановки должны быть конечны и неотрицательны: {vals}")
        bps, vals = _canonical(bps, vals)
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "values", vals)

    @classmethod
    def empty(cls) -> "DecreasingStep":
        return cls((0.0,), ())

    @classmethod
    def characteristic(cls, m: float) -> "DecreasingStep":
        """χ_{(0,m)}."""
        m = SpaceSpecValidator.validate_positive_argument(m)
        return cls((0.0, m), (1.0,))

    @property
    def support(self) -> float:
        return self.breakpoints[-1] if self.values else 0.0

    @property
    def n_pieces(self) -> int:
        return len(self.values)

    def intervals(self) -> List[Tuple[float, float, float]]:
        """[(aᵢ, aᵢ₊₁, vᵢ₊₁)]."""
        return list(zip(self.breakpoints[:-1], self.breakpoints[1:], self.values))

    def areas(self) -> List[float]:
        """Накопленные площади Aᵢ = ∫₀^{aᵢ} f* (A₀ = 0)."""
        out = [0.0]
        for left, right, v in self.intervals():
            out.append(out[-1] + v * (right - left))
        return out

    def __call__(self, t: float) -> float:
        return evaluate(self, t)

    def to_dict(self) -> Dict[str, Any]:
        return {"breakpoints": list(self.breakpoints), "values": list(self.values)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DecreasingStep":
        return cls(tuple(data["breakpoints"]), tuple(data["values"]))


def _canonical(bps: Tuple[float, ...], vals: Tuple[float, ...]) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
    new_bps: List[float] = [0.0] if bps else []
    new_vals: List[float] = []
    for (left, right), v in zip(zip(bps, bps[1:]), vals):
        if v == 0.0:
            break
        if new_vals and new_vals[-1] == v:
            new_bps[-1] = right
        else:
            new_vals.append(v)
            new_bps.append(right)
    if not new_bps:
        new_bps = [0.0]
    return tuple(new_bps), tuple(new_vals)


# ───────────────────────
# ОПЕРАЦИИ
# ───────────────────────

def distribution(f: StepFunction, s: float) -> float:
    """μ_f(s) = сумма масс кусков со значением > s."""
    if s < 0:
        raise DomainError(f"Уровень s должен быть ≥ 0, получено {s}")
    return math.fsum(m for v, m in f.pieces if v > s)


def distribution_of(fstar: DecreasingStep, s: float) -> float:
    """Функция распределения перестановки: мера {t: f*(t) > s}."""
    if s < 0:
        raise DomainError(f"Уровень s должен быть ≥ 0, получено {s}")
    measure = 0.0
    for left, right, v in fstar.intervals():
        if v > s:
            measure = right
    return measure


def rearrange(f: StepFunction) -> DecreasingStep:
    """
    Сортировка по убыванию значения, слияние равных значений (массы
    суммируются до накопления), затем накопление точек излома.
    """
    merged: Dict[float, float] = {}
    for value, mass in f.pieces:
        if value > 0:
            merged[value] = merged.get(value, 0.0) + mass
    breakpoints = [0.0]
    values = []
    for value in sorted(merged, reverse=True):
        breakpoints.append(breakpoints[-1] + merged[value])
        values.append(value)
    return DecreasingStep(tuple(breakpoints), tuple(values))


def evaluate(fstar: DecreasingStep, t: float) -> float:
    """f*(t) с правой непрерывностью; 0 за пределами носителя."""
    if t < 0:
        raise DomainError(f"f* определена на [0, ∞), получено t = {t}")
    index = int(np.searchsorted(fstar.breakpoints, t, side="right")) - 1
    if index >= fstar.n_pieces:
        return 0.0
    return fstar.values[index]


def integral(fstar: DecreasingStep) -> float:
    return fstar.areas()[-1]


def maximal(fstar: DecreasingStep, t: float) -> float:
    """f**(t) = (1/t)∫₀^t f*: полные куски плюс частичный."""
    t = SpaceSpecValidator.validate_positive_argument(t)
    area = 0.0
    for left, right, v in fstar.intervals():
        if t <= left:
            break
        area += v * (min(t, right) - left)
    return area / t


def truncate(fstar: DecreasingStep, horizon: float) -> DecreasingStep:
    """f*·χ_{(0, horizon)}."""
    if horizon >= fstar.support:
        return fstar
    bps, vals = [0.0], []
    for left, right, v in fstar.intervals():
        if left >= horizon:
            break
        bps.append(min(right, horizon))
        vals.append(v)
    return DecreasingStep(tuple(bps), tuple(vals))


def scale_values(fstar: DecreasingStep, k: float) -> DecreasingStep:
    if k < 0:
        raise LKValidationError(f"Множитель должен быть ≥ 0, получено {k}")
    return DecreasingStep(fstar.breakpoints, tuple(k * v for v in fstar.values))


def dilate(fstar: DecreasingStep, k: float) -> DecreasingStep:
    """Растяжение по мере: t ↦ f*(t/k)."""
    k = SpaceSpecValidator.validate_positive_argument(k)
    return DecreasingStep(tuple(k * a for a in fstar.breakpoints), fstar.values)


def pair_integrals(h: JointStepFunction) -> Tuple[float, float]:
    """(∫|fg| dμ, ∫₀^∞ f*g* dλ) — точные суммы по кускам."""
    lhs = math.fsum(fv * gv * m for fv, gv, m in h.pieces)
    f, g = h.split()
    return lhs, product_integral(rearrange(f), rearrange(g))


def product_integral(first: DecreasingStep, second: DecreasingStep) -> float:
    """∫₀^∞ f*·g* по объединённому разбиению."""
    grid = sorted(set(first.breakpoints) | set(second.breakpoints))
    terms = []
    for left, right in zip(grid, grid[1:]):
        product = evaluate(first, left) * evaluate(second, left)
        if product:
            terms.append(product * (right - left))
    return math.fsum(terms)


# ───────────────────────
# СЛУЧАЙНЫЕ НОСИТЕЛИ
# ───────────────────────

def _log_uniform(rng: np.random.Generator, size: int, low: float, high: float) -> np.ndarray:
    return np.exp(rng.uniform(math.log(low), math.log(high), size=size))


def random_step_function(
    rng: np.random.Generator, max_pieces: int = 20, low: float = 1e-3, high: float = 1e3
) -> StepFunction:
    n = int(rng.integers(1, max_pieces + 1))
    values = _log_uniform(rng, n, low, high)
    masses = _log_uniform(rng, n, low, high)
    return StepFunction(tuple(zip(values.tolist(), masses.tolist())))


def random_joint_step_function(
    rng: np.random.Generator, max_pieces: int = 20, low: float = 1e-3, high: float = 1e3
) -> JointStepFunction:
    n = int(rng.integers(1, max_pieces + 1))
    fvalues = _log_uniform(rng, n, low, high)
    gvalues = _log_uniform(rng, n, low, high)
    masses = _log_uniform(rng, n, low, high)
    return JointStepFunction(tuple(zip(fvalues.tolist(), gvalues.tolist(), masses.tolist())))


def random_decreasing_step(
    rng: np.random.Generator, max_pieces: int = 20, low: float = 1e-3, high: float = 1e3
) -> DecreasingStep:
    return rearrange(random_step_function(rng, max_pieces, low, high))
