# -*- coding: utf-8 -*-
"""
ФОРМАТЫ ФАЙЛОВ

Носители (CSV):
  value,mass            — StepFunction; масса inf допустима у хвоста со значением 0
  fvalue,gvalue,mass    — JointStepFunction
Строки, начинающиеся с '#', и пустые строки пропускаются; строка
заголовка распознаётся по нечисловому первому полю.

Отчёты: канонический JSON (sort_keys, фиксированные разделители,
бесконечности как строки "inf") или YAML. Любой отчёт с to_dict/from_dict
проходит круг parse_report(render_report(r), type(r)) == r.
"""

import csv
import io
import json
import math
from pathlib import Path
from typing import Any, Dict, List, Sequence, Type, TypeVar, Union

import yaml

from lk_spaces.core.rearrange import JointStepFunction, StepFunction
from lk_spaces.validator import LKValidationError

T = TypeVar("T")

FORMATS = ("text", "json", "yaml")


# ───────────────────────
# CSV-НОСИТЕЛИ
# ───────────────────────

def _parse_float(text: str, line: int) -> float:
    try:
        return float(text.strip())
    except ValueError:
        raise LKValidationError(f"Строка {line}: не число {text!r}")


def _rows(text: str, width: int) -> List[List[float]]:
    rows = []
    for line, fields in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not fields or not "".join(fields).strip() or fields[0].lstrip().startswith("#"):
            continue
        if not rows and fields[0].strip() and not _looks_numeric(fields[0]):
            continue  # заголовок
        if len(fields) != width:
            raise LKValidationError(f"Строка {line}: ожидалось {width} полей, получено {len(fields)}")
        rows.append([_parse_float(x, line) for x in fields])
    if not rows:
        raise LKValidationError("Файл носителя не содержит ни одного куска")
    return rows


def _looks_numeric(text: str) -> bool:
    try:
        float(text)
        return True
    except ValueError:
        return False


def read_step_function(source: Union[str, Path]) -> StepFunction:
    """Путь к файлу или Path с парами value,mass."""
    return StepFunction.of(_rows(Path(source).read_text(encoding="utf-8"), 2))


def read_joint_step_function(source: Union[str, Path]) -> JointStepFunction:
    return JointStepFunction.of(_rows(Path(source).read_text(encoding="utf-8"), 3))


def parse_step_function(text: str) -> StepFunction:
    return StepFunction.of(_rows(text, 2))


def write_step_function(f: StepFunction, path: Union[str, Path]):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["value", "mass"])
    for value, mass in f.pieces:
        writer.writerow([repr(value), "inf" if math.isinf(mass) else repr(mass)])
    Path(path).write_text(buffer.getvalue(), encoding="utf-8")


# ───────────────────────
# ОТЧЁТЫ
# ───────────────────────

def _encode(value: Any) -> Any:
    """Бесконечности и NaN — строками; кортежи — списками."""
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        if math.isnan(value):
            return "nan"
        return value
    if isinstance(value, dict):
        return {str(k): _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def canonical_json(data: Dict[str, Any]) -> str:
    return json.dumps(_encode(data), sort_keys=True, ensure_ascii=False, separators=(",", ":"), allow_nan=False)


def render_report(report: Any, fmt: str = "json") -> str:
    """Отчёт с to_dict() → JSON (канонический, с отступами) или YAML."""
    data = _encode(report.to_dict() if hasattr(report, "to_dict") else report)
    if fmt == "json":
        return json.dumps(data, sort_keys=True, ensure_ascii=False, indent=2, allow_nan=False)
    if fmt == "yaml":
        return yaml.safe_dump(data, sort_keys=True, allow_unicode=True)
    raise LKValidationError(f"Неизвестный формат отчёта {fmt!r}; допустимы json и yaml")


def load_report_data(text: str, fmt: str = "json") -> Dict[str, Any]:
    if fmt == "json":
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise LKValidationError(f"Некорректный JSON отчёта: {e}")
    if fmt == "yaml":
        try:
            return yaml.safe_load(text)
        except yaml.YAMLError as e:
            raise LKValidationError(f"Некорректный YAML отчёта: {e}")
    raise LKValidationError(f"Неизвестный формат отчёта {fmt!r}; допустимы json и yaml")


def parse_report(text: str, report_type: Type[T], fmt: str = "json") -> T:
    """Обратная операция к render_report для типа с from_dict."""
    return report_type.from_dict(load_report_data(text, fmt))  # type: ignore[attr-defined]


def render_many(reports: Sequence[Any], fmt: str = "json") -> str:
    return render_report({"reports": [r.to_dict() for r in reports]}, fmt)


__all__ = [
    "FORMATS",
    "read_step_function",
    "read_joint_step_function",
    "parse_step_function",
    "write_step_function",
    "canonical_json",
    "render_report",
    "load_report_data",
    "parse_report",
    "render_many",
]
