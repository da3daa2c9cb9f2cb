# -*- coding: utf-8 -*-
"""
ВЕРДИКТЫ РЕШАЮЩЕГО ДВИЖКА

Неизменяемые записи результатов classify: отчёт о классификации
пространства, вердикт о вложении и результат описания ассоциированного
пространства. Каждая запись несёт идентификаторы случаев теорем
(«TELK-2a», «TLKBFS-iii», «TAS-i», …) и переживает JSON без потерь:
from_dict(to_dict(x)) == x.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from lk_spaces.core.lknorm import SpaceSpec
from lk_spaces.core.svcalc import GrowthOrder


class Outcome(str, Enum):
    HOLDS = "Holds"
    FAILS = "Fails"


class P5Status(str, Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


class AssociateOutcome(str, Enum):
    SPACE = "Space"
    ZERO = "Zero"
    NOT_CHARACTERIZED = "NotCharacterized"


@dataclass(frozen=True)
class Condition:
    """Одно вычисленное условие теоремы: имя и его истинность."""
    name: str
    value: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "value": self.value}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Condition":
        return cls(str(data["name"]), bool(data["value"]))


def make_conditions(items: Sequence[Tuple[str, bool]]) -> Tuple[Condition, ...]:
    return tuple(Condition(name, bool(value)) for name, value in items)


@dataclass(frozen=True)
class EmbeddingVerdict:
    """
    Holds(case) или Fails(reason). Для Holds поле case — идентификатор
    случая теоремы, условия которого все истинны; для Fails — причина
    (случай с ложным условием либо TrivialSource / TrivialTarget).
    """

    # === Ядро ===
    outcome: Outcome
    case: str
    conditions: Tuple[Condition, ...] = ()
    citations: Tuple[str, ...] = ()

    # === Численная проверка ===
    witness_recipe: Optional[str] = None

    @property
    def holds(self) -> bool:
        return self.outcome is Outcome.HOLDS

    def condition(self, name: str) -> Optional[bool]:
        for item in self.conditions:
            if item.name == name:
                return item.value
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "outcome": self.outcome.value,
            "case": self.case,
            "conditions": [c.to_dict() for c in self.conditions],
            "citations": list(self.citations),
            "witness_recipe": self.witness_recipe,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "EmbeddingVerdict":
        return cls(
            outcome=Outcome(data["outcome"]),
            case=str(data["case"]),
            conditions=tuple(Condition.from_dict(c) for c in data.get("conditions", [])),
            citations=tuple(data.get("citations", [])),
            witness_recipe=data.get("witness_recipe"),
        )

    def __str__(self) -> str:
        return f"{self.outcome.value}({self.case})"


@dataclass(frozen=True)
class FundamentalSignature:
    """φ(t) ≈ t^{exponent}·(порядок роста) на каждом конце; None у тривиального пространства."""
    exponent: float
    order0: GrowthOrder
    order_inf: GrowthOrder

    def to_dict(self) -> Dict[str, Any]:
        return {"exponent": self.exponent, "order0": self.order0.to_list(), "orderInf": self.order_inf.to_list()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "FundamentalSignature":
        return cls(
            float(data["exponent"]),
            GrowthOrder.from_sequence(data["order0"]),
            GrowthOrder.from_sequence(data["orderInf"]),
        )


@dataclass(frozen=True)
class ClassificationReport:
    """Сводка свойств пространства L^{p,q,b} и его звёздного аналога."""

    # === Функционал ‖·‖_{p,q,b} ===
    nontrivial: bool
    quasi_banach: bool
    banach_equivalent: bool
    p5: P5Status
    p5_rule: str

    # === Функционал ‖·‖_{(p,q,b)} ===
    star_nontrivial: bool
    star_banach: bool
    equals_star: bool
    star_plain_equivalent: Optional[SpaceSpec]

    fundamental_signature: Optional[FundamentalSignature]
    citations: Tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "nontrivial": self.nontrivial,
            "quasi_banach": self.quasi_banach,
            "banach_equivalent": self.banach_equivalent,
            "p5": self.p5.value,
            "p5_rule": self.p5_rule,
            "star_nontrivial": self.star_nontrivial,
            "star_banach": self.star_banach,
            "equals_star": self.equals_star,
            "star_plain_equivalent": (
                self.star_plain_equivalent.to_dict() if self.star_plain_equivalent is not None else None
            ),
            "fundamental_signature": (
                self.fundamental_signature.to_dict() if self.fundamental_signature is not None else None
            ),
            "citations": list(self.citations),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ClassificationReport":
        plain = data.get("star_plain_equivalent")
        signature = data.get("fundamental_signature")
        return cls(
            nontrivial=bool(data["nontrivial"]),
            quasi_banach=bool(data["quasi_banach"]),
            banach_equivalent=bool(data["banach_equivalent"]),
            p5=P5Status(data["p5"]),
            p5_rule=str(data["p5_rule"]),
            star_nontrivial=bool(data["star_nontrivial"]),
            star_banach=bool(data["star_banach"]),
            equals_star=bool(data["equals_star"]),
            star_plain_equivalent=SpaceSpec.from_dict(plain) if plain is not None else None,
            fundamental_signature=FundamentalSignature.from_dict(signature) if signature is not None else None,
            citations=tuple(data.get("citations", [])),
        )


@dataclass(frozen=True)
class AssociateResult:
    """Space(X′), Zero или NotCharacterized(reason)."""
    outcome: AssociateOutcome
    case: str
    space: Optional[SpaceSpec] = None
    reason: Optional[str] = None
    citations: Tuple[str, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "outcome": self.outcome.value,
            "case": self.case,
            "space": self.space.to_dict() if self.space is not None else None,
            "reason": self.reason,
            "citations": list(self.citations),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "AssociateResult":
        space = data.get("space")
        return cls(
            outcome=AssociateOutcome(data["outcome"]),
            case=str(data["case"]),
            space=SpaceSpec.from_dict(space) if space is not None else None,
            reason=data.get("reason"),
            citations=tuple(data.get("citations", [])),
        )

    def __str__(self) -> str:
        if self.outcome is AssociateOutcome.SPACE:
            return f"Space({self.space})"
        if self.outcome is AssociateOutcome.ZERO:
            return "Zero"
        return f"NotCharacterized({self.reason})"


__all__: List[str] = [
    "Outcome",
    "P5Status",
    "AssociateOutcome",
    "Condition",
    "EmbeddingVerdict",
    "FundamentalSignature",
    "ClassificationReport",
    "AssociateResult",
]
