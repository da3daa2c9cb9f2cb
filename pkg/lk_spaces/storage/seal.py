# -*- coding: utf-8 -*-
"""
ПЕЧАТИ ОТЧЁТОВ

Печать — дайджест канонического JSON отчёта. Метки времени в печать не
входят: одинаковые входы и seed дают байт-в-байт одинаковые
запечатанные отчёты, а любой внешний агент может пересчитать дайджест.

Алгоритмы: sha3-256 (по умолчанию, hashlib) и blake3 (extra crypto).
"""

import hashlib
import logging
from typing import Any, Dict

from lk_spaces.storage.formats import canonical_json
from lk_spaces.validator import LKValidationError

logger = logging.getLogger(__name__)

ALGORITHMS = ("sha3-256", "blake3")


def _digest(payload: str, algorithm: str) -> str:
    data = payload.encode("utf-8")
    if algorithm == "sha3-256":
        return hashlib.sha3_256(data).hexdigest()
    if algorithm == "blake3":
        try:
            import blake3
        except ImportError:
            raise LKValidationError("Алгоритм blake3 требует пакета 'blake3' (pip install lk-spaces[crypto])")
        return blake3.blake3(data).hexdigest()
    raise LKValidationError(f"Неподдерживаемый алгоритм печати: {algorithm!r}")


class ReportSeal:
    """Создание и проверка печатей отчётов."""

    DEFAULT_ALGORITHM = "sha3-256"

    @staticmethod
    def seal(report_id: str, content: Dict[str, Any], algorithm: str = DEFAULT_ALGORITHM) -> Dict[str, Any]:
        """{report_id, digest, algorithm} над каноническим JSON содержимого."""
        digest = _digest(canonical_json(content), algorithm)
        logger.debug("Печать %s: %s:%s", report_id, algorithm, digest[:16])
        return {"report_id": report_id, "digest": digest, "algorithm": algorithm}

    @staticmethod
    def verify_seal(seal: Dict[str, Any], content: Dict[str, Any]) -> bool:
        """Пересчитывает дайджест; неизвестный алгоритм означает False."""
        algorithm = seal.get("algorithm", ReportSeal.DEFAULT_ALGORITHM)
        if algorithm not in ALGORITHMS:
            return False
        return _digest(canonical_json(content), algorithm) == seal.get("digest")

    @staticmethod
    def report_id(kind: str, content: Dict[str, Any]) -> str:
        """Детерминированный идентификатор: вид отчёта и 16 знаков sha3 входа."""
        short = hashlib.sha3_256(canonical_json(content).encode("utf-8")).hexdigest()[:16]
        return f"{kind}_{short}"

    @staticmethod
    def sealed(kind: str, content: Dict[str, Any], algorithm: str = DEFAULT_ALGORITHM) -> Dict[str, Any]:
        """Отчёт вместе с печатью: {"report": content, "seal": {...}}."""
        return {"report": content, "seal": ReportSeal.seal(ReportSeal.report_id(kind, content), content, algorithm)}

    # ───────────────────────
    # МЕТАДАННЫЕ
    # ───────────────────────

    __seal_purpose__ = "Воспроизводимость и проверяемость отчётов"
    __tamper_evident__ = True
