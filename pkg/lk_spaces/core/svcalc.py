# -*- coding: utf-8 -*-
"""
СЧИСЛЕНИЕ МЕДЛЕННО МЕНЯЮЩИХСЯ ФУНКЦИЙ

Канонический представитель медленно меняющейся функции:

    b(t) = c · exp(γ·√L) · ℓ(t)^α · ℓℓ(t)^β,
    L = |log t|,  ℓ = 1 + L,  ℓℓ = 1 + log(1 + L),

с независимыми тройками (γ, α, β) на (0, 1] и на [1, ∞); b(1) = c.

Модуль обеспечивает:
- вычисление b и его логарифма (в том числе в координате u = |log t|);
- алгебру сигнатур: произведения, степени, b(1/t);
- асимптотические тесты на концах: ограниченность и интегрируемость;
- преобразования tilde/hat (∫ s⁻¹b) и sup-огибающие;
- независимый квадратурный оракул для ∫ t^{a−1} b^q.

Сигнатуры сравниваются лексикографически: это и есть порядок роста
множителя exp(γ√L)·ℓ^α·ℓℓ^β при приближении к концу.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import integrate

from lk_spaces.validator import DomainError, LKValidationError, SpaceSpecValidator

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]


class Endpoint(str, Enum):
    ZERO = "zero"
    INFINITY = "infinity"

    @property
    def opposite(self) -> "Endpoint":
        return Endpoint.INFINITY if self is Endpoint.ZERO else Endpoint.ZERO


class Boundedness(str, Enum):
    BOUNDED_ABOVE = "BoundedAbove"
    TENDS_TO_INFINITY = "TendsToInfinity"
    TENDS_TO_ZERO = "TendsToZero"


class TransformKind(str, Enum):
    TILDE = "tilde"
    HAT = "hat"


class SupKind(str, Enum):
    TILDE_SUP = "tilde_sup"
    HAT_SUP = "hat_sup"


class TransformOutcome(str, Enum):
    """Значения-исходы преобразований, не являющиеся функциями семейства."""
    DIVERGES = "Diverges"
    NOT_FINITE = "NotFinite"
    OUT_OF_FAMILY = "OutOfFamily"


def _lex_sign(components: Sequence[float]) -> int:
    for c in components:
        if c > 0:
            return 1
        if c < 0:
            return -1
    return 0


# ───────────────────────
# СИГНАТУРЫ
# ───────────────────────

@dataclass(frozen=True, order=True)
class EndpointSignature:
    """Тройка (γ, α, β); порядок полей задаёт лексикографическое сравнение."""
    gamma: float = 0.0
    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        SpaceSpecValidator.validate_signature((self.gamma, self.alpha, self.beta))

    def __add__(self, other: "EndpointSignature") -> "EndpointSignature":
        return EndpointSignature(self.gamma + other.gamma, self.alpha + other.alpha, self.beta + other.beta)

    def __sub__(self, other: "EndpointSignature") -> "EndpointSignature":
        return self + other.scaled(-1.0)

    def __neg__(self) -> "EndpointSignature":
        return self.scaled(-1.0)

    def scaled(self, r: float) -> "EndpointSignature":
        return EndpointSignature(r * self.gamma, r * self.alpha, r * self.beta)

    def lex_sign(self) -> int:
        return _lex_sign(self.as_tuple())

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.gamma, self.alpha, self.beta)

    def log_profile(self, u: ArrayLike) -> ArrayLike:
        """log(exp(γ√u)·(1+u)^α·(1+log(1+u))^β) для u = |log t| ≥ 0."""
        u = np.asarray(u, dtype=float)
        out = np.zeros_like(u)
        if self.gamma:
            out = out + self.gamma * np.sqrt(u)
        if self.alpha:
            out = out + self.alpha * np.log1p(u)
        if self.beta:
            out = out + self.beta * np.log1p(np.log1p(u))
        return out

    def log_profile_scalar(self, u: float) -> float:
        out = 0.0
        if self.gamma:
            out += self.gamma * math.sqrt(u)
        if self.alpha:
            out += self.alpha * math.log1p(u)
        if self.beta:
            out += self.beta * math.log1p(math.log1p(u))
        return out

    def to_list(self):
        return [self.gamma, self.alpha, self.beta]

    @classmethod
    def from_sequence(cls, values: Sequence[float]) -> "EndpointSignature":
        return cls(*SpaceSpecValidator.validate_signature(values))

    def __str__(self) -> str:
        return ",".join(_format_number(c) for c in self.as_tuple())


ZERO_SIGNATURE = EndpointSignature()


@dataclass(frozen=True, order=True)
class GrowthOrder:
    """
    Порядок роста (γ, α, β, δ): сигнатура, расширенная степенью δ
    тройного логарифма ℓℓℓ = 1 + log(1 + log(1 + L)).
    Возникает только у интегралов граничной строки (0, −1, −1).
    """
    gamma: float = 0.0
    alpha: float = 0.0
    beta: float = 0.0
    delta: float = 0.0

    @classmethod
    def of(cls, sig: EndpointSignature) -> "GrowthOrder":
        return cls(sig.gamma, sig.alpha, sig.beta, 0.0)

    def __add__(self, other: "GrowthOrder") -> "GrowthOrder":
        return GrowthOrder(
            self.gamma + other.gamma, self.alpha + other.alpha,
            self.beta + other.beta, self.delta + other.delta,
        )

    def __sub__(self, other: "GrowthOrder") -> "GrowthOrder":
        return self + other.scaled(-1.0)

    def scaled(self, r: float) -> "GrowthOrder":
        return GrowthOrder(r * self.gamma, r * self.alpha, r * self.beta, r * self.delta)

    def lex_sign(self) -> int:
        return _lex_sign((self.gamma, self.alpha, self.beta, self.delta))

    def in_family(self) -> bool:
        return self.delta == 0

    def signature(self) -> EndpointSignature:
        if not self.in_family():
            raise LKValidationError(f"Порядок {self} вне канонического семейства (δ ≠ 0)")
        return EndpointSignature(self.gamma, self.alpha, self.beta)

    def to_list(self) -> List[float]:
        return [self.gamma, self.alpha, self.beta, self.delta]

    @classmethod
    def from_sequence(cls, values: Sequence[float]) -> "GrowthOrder":
        components = [float(v) for v in values]
        if len(components) == 3:
            components.append(0.0)
        if len(components) != 4:
            raise LKValidationError(f"Порядок роста должен содержать 3 или 4 компоненты, получено {len(components)}")
        return cls(*components)

    def integrable(self) -> bool:
        """∫^{∞} du по множителю этого порядка конечен ⇔ порядок <lex (0, −1, −1, −1)."""
        return (self.gamma, self.alpha, self.beta, self.delta) < (0.0, -1.0, -1.0, -1.0)


ZERO_ORDER = GrowthOrder()


# ───────────────────────
# МЕДЛЕННО МЕНЯЮЩАЯСЯ ФУНКЦИЯ
# ───────────────────────

@dataclass(frozen=True)
class SlowlyVaryingFunction:
    """Канонический представитель b с сигнатурами на (0,1] и [1,∞)."""
    scale: float = 1.0
    sig0: EndpointSignature = ZERO_SIGNATURE
    sig_inf: EndpointSignature = ZERO_SIGNATURE

    def __post_init__(self):
        object.__setattr__(self, "scale", SpaceSpecValidator.validate_scale(self.scale))

    @classmethod
    def constant(cls, c: float = 1.0) -> "SlowlyVaryingFunction":
        return cls(scale=c)

    @classmethod
    def from_triples(
        cls, scale: float, sig0: Sequence[float], sig_inf: Sequence[float]
    ) -> "SlowlyVaryingFunction":
        return cls(scale, EndpointSignature.from_sequence(sig0), EndpointSignature.from_sequence(sig_inf))

    def signature(self, endpoint: Endpoint) -> EndpointSignature:
        return self.sig0 if endpoint is Endpoint.ZERO else self.sig_inf

    @property
    def is_constant(self) -> bool:
        return self.sig0 == ZERO_SIGNATURE and self.sig_inf == ZERO_SIGNATURE

    def __call__(self, t: ArrayLike) -> ArrayLike:
        return sv_eval(self, t)

    def side_value(self, endpoint: Endpoint, u: ArrayLike) -> ArrayLike:
        """b в координате u = |log t| ≥ 0 на стороне endpoint."""
        return self.scale * np.exp(self.signature(endpoint).log_profile(u))

    def log_at(self, t: ArrayLike) -> np.ndarray:
        """log b(t) без переполнения (t > 0)."""
        t = np.asarray(t, dtype=float)
        u = np.abs(np.log(t))
        return math.log(self.scale) + np.where(t <= 1.0, self.sig0.log_profile(u), self.sig_inf.log_profile(u))

    # === Алгебра (SV1/SV2) ===

    def __mul__(self, other: Union["SlowlyVaryingFunction", float]) -> "SlowlyVaryingFunction":
        if isinstance(other, SlowlyVaryingFunction):
            return SlowlyVaryingFunction(
                self.scale * other.scale, self.sig0 + other.sig0, self.sig_inf + other.sig_inf
            )
        return SlowlyVaryingFunction(self.scale * float(other), self.sig0, self.sig_inf)

    __rmul__ = __mul__

    def __truediv__(self, other: "SlowlyVaryingFunction") -> "SlowlyVaryingFunction":
        return self * other.reciprocal()

    def __pow__(self, r: float) -> "SlowlyVaryingFunction":
        r = float(r)
        return SlowlyVaryingFunction(self.scale ** r, self.sig0.scaled(r), self.sig_inf.scaled(r))

    def reciprocal(self) -> "SlowlyVaryingFunction":
        return self ** -1.0

    def recip_arg(self) -> "SlowlyVaryingFunction":
        """t ↦ b(1/t): сигнатуры меняются местами."""
        return SlowlyVaryingFunction(self.scale, self.sig_inf, self.sig0)

    # === Сериализация ===

    def to_dict(self) -> Dict[str, Any]:
        return {"scale": self.scale, "sig0": self.sig0.to_list(), "sigInf": self.sig_inf.to_list()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SlowlyVaryingFunction":
        try:
            return cls.from_triples(data.get("scale", 1.0), data["sig0"], data["sigInf"])
        except KeyError as exc:
            raise LKValidationError(f"В описании b отсутствует поле {exc}")

    def __str__(self) -> str:
        return f"sv({_format_number(self.scale)}; {self.sig0} | {self.sig_inf})"


def _format_number(x: float) -> str:
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if float(x).is_integer():
        return str(int(x))
    return repr(float(x))


def sv_eval(b: SlowlyVaryingFunction, t: ArrayLike) -> ArrayLike:
    """
    Значение b(t). Ошибка области при t ≤ 0.
    Ветвь выбирается по стороне от t = 1; в точке 1 результат ровно c.
    """
    t_arr = np.asarray(t, dtype=float)
    if np.any(~(t_arr > 0)):
        raise DomainError(f"b(t) определена только при t > 0, получено {t!r}")
    L = np.abs(np.log(t_arr))
    ell = 1.0 + L
    ellell = 1.0 + np.log1p(L)

    def side(sig: EndpointSignature) -> np.ndarray:
        value = np.full_like(L, b.scale)
        if sig.gamma:
            value = value * np.exp(sig.gamma * np.sqrt(L))
        if sig.alpha:
            value = value * np.power(ell, sig.alpha)
        if sig.beta:
            value = value * np.power(ellell, sig.beta)
        return value

    with np.errstate(over="ignore"):
        out = np.where(t_arr <= 1.0, side(b.sig0), side(b.sig_inf))
    if np.ndim(t) == 0:
        return float(out)
    return out


# ───────────────────────
# АСИМПТОТИКА НА КОНЦАХ
# ───────────────────────

def endpoint_boundedness(b: SlowlyVaryingFunction, endpoint: Endpoint) -> Boundedness:
    sign = b.signature(endpoint).lex_sign()
    if sign > 0:
        return Boundedness.TENDS_TO_INFINITY
    if sign < 0:
        return Boundedness.TENDS_TO_ZERO
    return Boundedness.BOUNDED_ABOVE


def endpoint_integrability(b: SlowlyVaryingFunction, q: float, a: float, endpoint: Endpoint) -> bool:
    """∫ t^{a−1} b(t)^q dt < ∞ вблизи конца (для a ≠ 0 решает степень)."""
    if q <= 0:
        raise LKValidationError(f"Показатель q должен быть > 0, получено {q}")
    if a > 0:
        return endpoint is Endpoint.ZERO
    if a < 0:
        return endpoint is Endpoint.INFINITY
    return GrowthOrder.of(b.signature(endpoint).scaled(q)).integrable()


def order_integrable(order: GrowthOrder, a: float, endpoint: Endpoint) -> bool:
    """Тот же критерий для порядка роста с δ-компонентой."""
    if a > 0:
        return endpoint is Endpoint.ZERO
    if a < 0:
        return endpoint is Endpoint.INFINITY
    return order.integrable()


def power_limit(b: SlowlyVaryingFunction, e: float, endpoint: Endpoint) -> float:
    """
    lim t^e·b(t) на конце: 0, +∞ или конечный положительный предел.
    При e ≠ 0 степень доминирует.
    """
    if e != 0:
        grows = (e < 0) if endpoint is Endpoint.ZERO else (e > 0)
        return math.inf if grows else 0.0
    boundedness = endpoint_boundedness(b, endpoint)
    if boundedness is Boundedness.TENDS_TO_INFINITY:
        return math.inf
    if boundedness is Boundedness.TENDS_TO_ZERO:
        return 0.0
    return b.scale


def _tail_order(sig: EndpointSignature) -> Tuple[GrowthOrder, float]:
    """Асимптотика ∫_L^∞ B(u) du (сходящийся случай) и её множитель."""
    g, a, bt = sig.as_tuple()
    if g < 0:
        return GrowthOrder(g, a + 0.5, bt), -2.0 / g
    if a < -1:
        return GrowthOrder(0.0, a + 1.0, bt), 1.0 / (-a - 1.0)
    return GrowthOrder(0.0, 0.0, bt + 1.0), 1.0 / (-bt - 1.0)


def _growth_order(sig: EndpointSignature) -> Tuple[GrowthOrder, float]:
    """Асимптотика ∫_0^L B(u) du при L → ∞; конечный предел даёт нулевой порядок."""
    g, a, bt = sig.as_tuple()
    if GrowthOrder.of(sig).integrable():
        return ZERO_ORDER, 1.0
    if g > 0:
        return GrowthOrder(g, a + 0.5, bt), 2.0 / g
    if a > -1:
        return GrowthOrder(0.0, a + 1.0, bt), 1.0 / (a + 1.0)
    if bt > -1:
        return GrowthOrder(0.0, 0.0, bt + 1.0), 1.0 / (bt + 1.0)
    return GrowthOrder(0.0, 0.0, 0.0, 1.0), 1.0


def _governing_endpoint(kind: TransformKind) -> Endpoint:
    return Endpoint.ZERO if kind is TransformKind.TILDE else Endpoint.INFINITY


def integral_order(
    b: SlowlyVaryingFunction, kind: TransformKind, endpoint: Endpoint
) -> Union[GrowthOrder, TransformOutcome]:
    """Порядок роста tilde(b) или hat(b) на заданном конце."""
    governing = _governing_endpoint(kind)
    if not endpoint_integrability(b, 1.0, 0.0, governing):
        return TransformOutcome.DIVERGES
    if endpoint is governing:
        return _tail_order(b.signature(endpoint))[0]
    return _growth_order(b.signature(endpoint))[0]


def tilde_hat_transform(
    b: SlowlyVaryingFunction, kind: TransformKind
) -> Union[SlowlyVaryingFunction, TransformOutcome]:
    """
    tilde(b)(t) = ∫_0^t s⁻¹b(s) ds, hat(b)(t) = ∫_t^∞ s⁻¹b(s) ds
    с точностью до эквивалентности. Масштаб выбирается так, чтобы
    отношение к точному интегралу стремилось к 1 на управляющем конце.
    """
    governing = _governing_endpoint(kind)
    if not endpoint_integrability(b, 1.0, 0.0, governing):
        return TransformOutcome.DIVERGES
    tail, factor = _tail_order(b.signature(governing))
    growth, _ = _growth_order(b.signature(governing.opposite))
    if not growth.in_family():
        logger.debug("%s(%s): рост ℓℓℓ на %s, вне семейства", kind.value, b, governing.opposite.value)
        return TransformOutcome.OUT_OF_FAMILY
    sigs = {governing: tail.signature(), governing.opposite: growth.signature()}
    return SlowlyVaryingFunction(b.scale * factor, sigs[Endpoint.ZERO], sigs[Endpoint.INFINITY])


# Сетка по u = |log t| для численного поиска sup на одной стороне.
_SUP_GRID = np.concatenate(([0.0], np.geomspace(1e-6, 1e12, 4001)))


def sup_transform(
    b: SlowlyVaryingFunction, kind: SupKind
) -> Union[SlowlyVaryingFunction, TransformOutcome]:
    """
    TildeSup: sup_{s<t} b(s); HatSup: sup_{s>t} b(s).
    Масштаб равен численному sup b по стороне, прилегающей к управляющему концу.
    """
    blowup = Endpoint.ZERO if kind is SupKind.TILDE_SUP else Endpoint.INFINITY
    if b.signature(blowup).lex_sign() > 0:
        return TransformOutcome.NOT_FINITE
    other = blowup.opposite
    with np.errstate(over="ignore", under="ignore"):
        scale = float(np.max(b.side_value(blowup, _SUP_GRID)))
    sigs = {blowup: b.signature(blowup), other: max(b.signature(other), ZERO_SIGNATURE)}
    return SlowlyVaryingFunction(scale, sigs[Endpoint.ZERO], sigs[Endpoint.INFINITY])


# ───────────────────────
# ПРОВЕРКА СВОЙСТВА МЕДЛЕННОГО ИЗМЕНЕНИЯ
# ───────────────────────

@dataclass(frozen=True)
class SVPropertyReport:
    passed: bool
    eps: float
    k_nondecreasing: float
    k_nonincreasing: float
    sharp_ratio: float
    reason: str = ""
    skipped: bool = False

    @property
    def k(self) -> float:
        return max(self.k_nondecreasing, self.k_nonincreasing)

    @property
    def sharp(self) -> bool:
        return self.sharp_ratio >= 0.95

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "eps": self.eps,
            "k": self.k,
            "k_nondecreasing": self.k_nondecreasing,
            "k_nonincreasing": self.k_nonincreasing,
            "sharp_ratio": self.sharp_ratio,
            "reason": self.reason,
            "skipped": self.skipped,
        }


def default_sv_grid(points_per_decade: int = 64) -> np.ndarray:
    return np.logspace(-10.0, 10.0, 20 * points_per_decade + 1)


def sv_property_check(
    b: Union[SlowlyVaryingFunction, Callable[[np.ndarray], np.ndarray]],
    eps: float,
    grid: Optional[np.ndarray] = None,
) -> SVPropertyReport:
    """
    Измеряет константу K эквивалентности t^ε·b монотонно неубывающей
    функции (бегущий максимум) и t^{−ε}·b невозрастающей (бегущий минимум).
    Допускает произвольный вызываемый объект в роли b. При ε ≤ 0 измерение
    не выполняется: отчёт помечен skipped, константы равны NaN.
    """
    if not eps > 0:
        return SVPropertyReport(
            False, float(eps), math.nan, math.nan, math.nan,
            reason=f"проверка пропущена: ε = {eps} не положителен", skipped=True,
        )
    grid = default_sv_grid() if grid is None else np.asarray(grid, dtype=float)
    values = np.asarray(b(grid), dtype=float)

    up = grid ** eps * values
    envelope_up = np.maximum.accumulate(up)
    k_up = float(np.max(envelope_up / up))

    down = grid ** (-eps) * values
    envelope_down = np.minimum.accumulate(down)
    k_down = float(np.max(down / envelope_down))

    decade = np.searchsorted(grid, grid[-1] / 10.0)
    sharp_ratio = float(min(
        np.min(up[decade:] / envelope_up[decade:]),
        np.min(envelope_down[decade:] / down[decade:]),
    ))

    passed = bool(np.isfinite(k_up) and np.isfinite(k_down))
    reason = "" if passed else "константа эквивалентности не конечна на сетке"
    return SVPropertyReport(passed, float(eps), k_up, k_down, sharp_ratio, reason)


# ───────────────────────
# КВАДРАТУРНЫЙ ОРАКУЛ
# ───────────────────────

@dataclass(frozen=True)
class OracleResult:
    """Значение интеграла или сигнал DivergenceSuspected (diverged=True, value=inf)."""
    value: float
    abs_error: float
    diverged: bool
    converged: bool
    trend: Tuple[float, ...] = field(default=())

    def __float__(self) -> float:
        return self.value


# Уровни отсечения в координате w = log(1+u): w₀ + 2^k, не дальше w = 700.
_MAX_LEVELS = 10
_W_CAP = 700.0
_DIVERGENT_RATIO = 0.9


def _side_integrand(b: SlowlyVaryingFunction, endpoint: Endpoint, a: float, q: float):
    direction = -1.0 if endpoint is Endpoint.ZERO else 1.0
    log_c = math.log(b.scale)
    sig = b.signature(endpoint)

    def integrand(w: float) -> float:
        u = math.expm1(w)
        log_value = direction * a * u + q * (log_c + sig.log_profile_scalar(u)) + w
        if log_value > 709.0:
            return math.inf
        return math.exp(log_value)

    return integrand


def _segment(integrand, w1: float, w2: float, rel_tol: float) -> Tuple[float, float]:
    value, error = integrate.quad(integrand, w1, w2, epsabs=0.0, epsrel=rel_tol, limit=200)
    return value, error


def _side_integral(
    b: SlowlyVaryingFunction, endpoint: Endpoint, a: float, q: float,
    u1: float, u2: float, rel_tol: float,
) -> OracleResult:
    integrand = _side_integrand(b, endpoint, a, q)
    w1 = math.log1p(u1)
    improper = math.isinf(u2)
    w2 = _W_CAP if improper else math.log1p(u2)

    total, error, increments = 0.0, 0.0, []
    level, start = 0, w1
    while start < w2 and level <= _MAX_LEVELS:
        stop = w1 + 2.0 ** level
        if improper and stop > _W_CAP:
            # только полные удвоения: усечённый отрезок исказил бы тренд
            break
        stop = min(stop, w2)
        if level == _MAX_LEVELS and not improper:
            stop = w2
        piece, piece_error = _segment(integrand, start, stop, rel_tol)
        if not math.isfinite(piece):
            return OracleResult(math.inf, math.inf, True, False, tuple(increments))
        total += piece
        error += piece_error
        increments.append(piece)
        start, level = stop, level + 1
        if improper and len(increments) >= 3 and abs(piece) <= rel_tol * abs(total):
            return OracleResult(total, error + abs(piece), False, True, tuple(increments))

    if not improper:
        return OracleResult(total, error, False, error <= rel_tol * abs(total) or total == 0.0, tuple(increments))

    ratios = [
        increments[i] / increments[i - 1]
        for i in range(len(increments) - 3, len(increments))
        if increments[i - 1] > 0
    ]
    if len(ratios) == 3 and min(ratios) >= _DIVERGENT_RATIO:
        logger.debug("Оракул: тренд отсечений не сходится (отношения %s)", ratios)
        return OracleResult(math.inf, math.inf, True, False, tuple(increments))
    r = ratios[-1] if ratios else 0.0
    tail = increments[-1] * r / (1.0 - r) if 0.0 < r < 1.0 else 0.0
    value = total + tail
    estimate = error + abs(tail)
    return OracleResult(value, estimate, False, estimate <= rel_tol * abs(value), tuple(increments))


def quad_oracle(
    a: float,
    b: SlowlyVaryingFunction,
    q: float,
    interval: Tuple[float, float],
    rel_tol: float = 1e-8,
) -> OracleResult:
    """
    ∫ t^{a−1} b(t)^q dt по интервалу ⊂ (0, ∞) после замены u = |log t|
    (с каждой стороны от t = 1) и w = log(1+u). Несобственные концы
    обрабатываются расписанием отсечений с анализом тренда приращений.
    """
    rel_tol = SpaceSpecValidator.validate_tolerance(rel_tol)
    lo, hi = float(interval[0]), float(interval[1])
    if lo < 0 or not hi > lo:
        raise DomainError(f"Интервал должен лежать в (0, ∞) и быть непустым: {interval}")
    if q <= 0:
        raise LKValidationError(f"Показатель q должен быть > 0, получено {q}")

    parts = []
    if lo < 1.0:
        top = min(hi, 1.0)
        u2 = math.inf if lo == 0 else -math.log(lo)
        parts.append(_side_integral(b, Endpoint.ZERO, a, q, -math.log(top), u2, rel_tol))
    if hi > 1.0:
        bottom = max(lo, 1.0)
        u2 = math.inf if math.isinf(hi) else math.log(hi)
        parts.append(_side_integral(b, Endpoint.INFINITY, a, q, math.log(bottom), u2, rel_tol))

    if any(part.diverged for part in parts):
        trend = tuple(x for part in parts for x in part.trend)
        return OracleResult(math.inf, math.inf, True, False, trend)
    return OracleResult(
        value=sum(part.value for part in parts),
        abs_error=sum(part.abs_error for part in parts),
        diverged=False,
        converged=all(part.converged for part in parts),
        trend=tuple(x for part in parts for x in part.trend),
    )
