# -*- coding: utf-8 -*-
"""
ВАЛИДАТОР ВХОДНЫХ ДАННЫХ LK-SPACES
Проверяет параметры пространств, ступенчатые функции и допуски
до того, как они попадут в численное ядро.

Валидатор:
- Отклоняет показатели p, q вне (0, ∞];
- Проверяет, что массы положительны, а значения конечны и неотрицательны;
- Допускает бесконечную массу только у хвостового маркера (значение 0);
- Ограничивает относительные допуски интервалом (1e-12, 1e-2).

Иерархия исключений общая для всего пакета: любое нарушение входного
контракта является подклассом LKValidationError, и CLI превращает его
в код выхода 2.
"""

import math
from typing import Iterable, Optional, Sequence, Tuple


class LKValidationError(ValueError):
    """Исключение, выбрасываемое при нарушении входного контракта."""
    pass


class DomainError(LKValidationError):
    """Аргумент вне области определения операции (t ≤ 0, t > μ(R), ...)."""
    pass


class SpecParseError(LKValidationError):
    """Ошибка разбора текстовой грамматики; хранит позицию."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (позиция {position})")
        self.position = position


class ContractViolation(LKValidationError):
    """Данные вызывающей стороны нарушают документированный контракт."""
    pass


class UnsupportedInput(LKValidationError):
    """Корректный вход вне охарактеризованной области."""
    pass


class SpaceSpecValidator:
    """Статический валидатор параметров и носителей."""

    MIN_REL_TOL = 1e-12
    MAX_REL_TOL = 1e-2

    @staticmethod
    def validate_exponent(name: str, value: float) -> float:
        """Показатель p или q: вещественное число из (0, ∞]."""
        try:
            value = float(value)
        except (TypeError, ValueError):
            raise LKValidationError(f"Показатель {name} не является числом: {value!r}")
        if math.isnan(value) or value <= 0:
            raise LKValidationError(f"Показатель {name} должен лежать в (0, ∞], получено {value}")
        return value

    @staticmethod
    def validate_measure(mu_r: float) -> float:
        """Полная мера пространства μ(R) из (0, ∞]."""
        try:
            mu_r = float(mu_r)
        except (TypeError, ValueError):
            raise LKValidationError(f"Мера μ(R) не является числом: {mu_r!r}")
        if math.isnan(mu_r) or mu_r <= 0:
            raise LKValidationError(f"Мера μ(R) должна лежать в (0, ∞], получено {mu_r}")
        return mu_r

    @staticmethod
    def validate_space(p: float, q: float, mu_r: float) -> Tuple[float, float, float]:
        """Тройка (p, q, μ(R)) спецификации пространства."""
        return (
            SpaceSpecValidator.validate_exponent("p", p),
            SpaceSpecValidator.validate_exponent("q", q),
            SpaceSpecValidator.validate_measure(mu_r),
        )

    @staticmethod
    def validate_scale(scale: float) -> float:
        scale = float(scale)
        if not math.isfinite(scale) or scale <= 0:
            raise LKValidationError(f"Масштаб c медленно меняющейся функции должен быть > 0, получено {scale}")
        return scale

    @staticmethod
    def validate_signature(components: Sequence[float]) -> Tuple[float, float, float]:
        if len(components) != 3:
            raise LKValidationError(f"Сигнатура конца должна содержать 3 компоненты, получено {len(components)}")
        out = tuple(float(c) for c in components)
        for c in out:
            if not math.isfinite(c):
                raise LKValidationError(f"Компоненты сигнатуры должны быть конечны: {out}")
        return out  # type: ignore[return-value]

    @staticmethod
    def validate_step_pieces(pieces: Iterable[Tuple[float, float]]) -> Tuple[Tuple[float, float], ...]:
        """
        Валидирует пары (значение, масса) простой функции.
        Бесконечная масса разрешена только для хвостового маркера (0, ∞).
        """
        checked = []
        for index, piece in enumerate(pieces):
            if len(piece) != 2:
                raise LKValidationError(f"Кусок #{index} должен быть парой (value, mass): {piece!r}")
            value, mass = float(piece[0]), float(piece[1])
            SpaceSpecValidator._validate_value(index, value)
            SpaceSpecValidator._validate_mass(index, mass, value)
            checked.append((value, mass))
        return tuple(checked)

    @staticmethod
    def validate_joint_pieces(
        pieces: Iterable[Tuple[float, float, float]]
    ) -> Tuple[Tuple[float, float, float], ...]:
        """Тройки (f, g, масса) на общем разбиении; массы конечны и положительны."""
        checked = []
        for index, piece in enumerate(pieces):
            if len(piece) != 3:
                raise LKValidationError(f"Кусок #{index} должен быть тройкой (fvalue, gvalue, mass): {piece!r}")
            fvalue, gvalue, mass = (float(x) for x in piece)
            SpaceSpecValidator._validate_value(index, fvalue)
            SpaceSpecValidator._validate_value(index, gvalue)
            if not math.isfinite(mass) or mass <= 0:
                raise LKValidationError(f"Масса куска #{index} должна быть конечной и положительной: {mass}")
            checked.append((fvalue, gvalue, mass))
        return tuple(checked)

    @staticmethod
    def validate_tolerance(rel_tol: float, name: str = "rel_tol") -> float:
        rel_tol = float(rel_tol)
        if not (SpaceSpecValidator.MIN_REL_TOL < rel_tol < SpaceSpecValidator.MAX_REL_TOL):
            raise LKValidationError(
                f"Допуск {name} должен лежать в "
                f"({SpaceSpecValidator.MIN_REL_TOL}, {SpaceSpecValidator.MAX_REL_TOL}), получено {rel_tol}"
            )
        return rel_tol

    @staticmethod
    def validate_positive_argument(t: float, upper: Optional[float] = None) -> float:
        """Аргумент t > 0 (и t ≤ upper, если верхняя граница задана)."""
        t = float(t)
        if math.isnan(t) or t <= 0:
            raise DomainError(f"Аргумент должен быть положительным, получено t = {t}")
        if upper is not None and t > upper:
            raise DomainError(f"Аргумент t = {t} превышает μ(R) = {upper}")
        return t

    @staticmethod
    def _validate_value(index: int, value: float):
        if not math.isfinite(value) or value < 0:
            raise LKValidationError(f"Значение куска #{index} должно быть конечным и неотрицательным: {value}")

    @staticmethod
    def _validate_mass(index: int, mass: float, value: float):
        if math.isnan(mass) or mass <= 0:
            raise LKValidationError(f"Масса куска #{index} должна быть положительной: {mass}")
        if math.isinf(mass) and value != 0:
            raise LKValidationError(
                f"Кусок #{index}: бесконечная масса допустима только для хвостового маркера со значением 0"
            )

    # ───────────────────────
    # МЕТАДАННЫЕ
    # ───────────────────────

    __validator_role__ = "Страж входных контрактов"
    __enforces__ = ["p, q ∈ (0, ∞]", "μ(R) ∈ (0, ∞]", "массы > 0", "допуски ∈ (1e-12, 1e-2)"]
