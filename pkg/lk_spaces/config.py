# -*- coding: utf-8 -*-
"""
КОНФИГУРАЦИЯ LK-SPACES

Численные допуски, параметры свипов и генератора случайных носителей.
Источники (по возрастанию приоритета):
- значения по умолчанию;
- YAML-файл (явный путь или ./lk.yaml);
- переменная окружения LK_DEFAULT_TOL;
- явные аргументы (флаг CLI --tol).
"""

import logging
import os
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

from lk_spaces.validator import LKValidationError, SpaceSpecValidator

logger = logging.getLogger(__name__)

ENV_TOLERANCE = "LK_DEFAULT_TOL"
DEFAULT_CONFIG_FILE = "lk.yaml"


@dataclass(frozen=True)
class LKConfig:
    """Неизменяемый набор настроек, передаваемый в численные операции."""

    piece_rel_tol: float = 1e-8
    tail_rel_tol: float = 1e-6
    points_per_decade: int = 64
    sweep_decades: int = 8
    fail_ratio_target: float = 100.0
    plateau_growth: float = 0.05
    growth_threshold: float = 10.0
    sweep_cap_exponent: int = 300
    seed: int = 20240101
    samples: int = 100
    digest_algorithm: str = "sha3-256"

    def __post_init__(self):
        SpaceSpecValidator.validate_tolerance(self.piece_rel_tol, "piece_rel_tol")
        SpaceSpecValidator.validate_tolerance(self.tail_rel_tol, "tail_rel_tol")
        if self.points_per_decade < 4:
            raise LKValidationError(f"points_per_decade должно быть ≥ 4, получено {self.points_per_decade}")
        if self.sweep_decades < 1 or self.sweep_cap_exponent < self.sweep_decades:
            raise LKValidationError(
                f"Некорректный свип: sweep_decades={self.sweep_decades}, "
                f"sweep_cap_exponent={self.sweep_cap_exponent}"
            )
        if self.samples < 1:
            raise LKValidationError(f"samples должно быть ≥ 1, получено {self.samples}")

    def with_tolerance(self, rel_tol: float) -> "LKConfig":
        """Копия с заменой допусков: хвосты получают max(100·tol, 1e-6)."""
        rel_tol = SpaceSpecValidator.validate_tolerance(rel_tol)
        return replace(self, piece_rel_tol=rel_tol, tail_rel_tol=min(max(100.0 * rel_tol, 1e-6), 1e-3))

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "LKConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise LKValidationError(f"Неизвестные ключи конфигурации: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def load(cls, path: Optional[Union[str, Path]] = None) -> "LKConfig":
        """Загружает конфигурацию из YAML и применяет LK_DEFAULT_TOL."""
        config_file = Path(path) if path is not None else Path(DEFAULT_CONFIG_FILE)
        data: Dict[str, Any] = {}
        if config_file.exists():
            with open(config_file, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
            if not isinstance(data, dict):
                raise LKValidationError(f"Файл конфигурации {config_file} должен содержать отображение")
            logger.debug("Конфигурация загружена из %s", config_file)
        elif path is not None:
            raise LKValidationError(f"Файл конфигурации не найден: {config_file}")

        config = cls.from_dict(data)
        env_tol = os.environ.get(ENV_TOLERANCE)
        if env_tol:
            try:
                tol = float(env_tol)
            except ValueError:
                raise LKValidationError(f"{ENV_TOLERANCE} не является числом: {env_tol!r}")
            config = config.with_tolerance(tol)
            logger.debug("Допуск переопределён из %s: %s", ENV_TOLERANCE, env_tol)
        return config


DEFAULT_CONFIG = LKConfig()
