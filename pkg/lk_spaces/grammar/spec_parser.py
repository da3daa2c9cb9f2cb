# -*- coding: utf-8 -*-
"""
ГРАММАТИКА СПЕЦИФИКАЦИЙ ПРОСТРАНСТВ

Текстовая форма пространства и медленно меняющейся функции:
  LK(p=2, q=1)
  LK(p=inf, q=2, b=sv(1; 0,-2,0 | 0,0,0), mu=1, star)
  sv(1; 0,1,0 | 0,0,0)

Ключи LK(...) — p, q (обязательны), b, mu (необязательны) и флаг star;
порядок произвольный, повторы запрещены. По умолчанию b ≡ 1, mu = inf.
Ошибки разбора несут позицию символа в исходной строке.
"""

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from lk_spaces.core.lknorm import INF, SpaceSpec
from lk_spaces.core.svcalc import SlowlyVaryingFunction
from lk_spaces.validator import SpecParseError

_TOKEN_RE = re.compile(
    r"\s*(?:"
    r"(?P<number>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<punct>[(),;=|])"
    r")"
)


@dataclass(frozen=True)
class Token:
    kind: str  # 'number', 'name', 'punct', 'end'
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """Разбивает строку на токены; U+2212 читается как ASCII-минус."""
    text = text.replace("−", "-")
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            skipped = len(text[pos:]) - len(text[pos:].lstrip())
            raise SpecParseError(f"Неожиданный символ {text[pos + skipped]!r}", pos + skipped)
        kind = match.lastgroup or "punct"
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Cursor:
    """Рекурсивный спуск по списку токенов."""

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        if token.kind != "end":
            self.index += 1
        return token

    def expect(self, text: str) -> Token:
        token = self.current
        if token.text != text:
            shown = token.text or "конец строки"
            raise SpecParseError(f"Ожидалось {text!r}, получено {shown!r}", token.position)
        return self.advance()

    def accept(self, text: str) -> bool:
        if self.current.text == text:
            self.advance()
            return True
        return False

    def number(self) -> float:
        """Число либо inf/infinity."""
        token = self.advance()
        if token.kind == "number":
            return float(token.text)
        if token.kind == "name" and token.text.lower() in ("inf", "infinity"):
            return INF
        raise SpecParseError(f"Ожидалось число, получено {token.text or 'конец строки'!r}", token.position)

    def finish(self):
        if self.current.kind != "end":
            raise SpecParseError(f"Лишний текст после выражения: {self.current.text!r}", self.current.position)


def _signature(cursor: _Cursor) -> Tuple[float, float, float]:
    gamma = cursor.number()
    cursor.expect(",")
    alpha = cursor.number()
    cursor.expect(",")
    beta = cursor.number()
    return gamma, alpha, beta


def _sv(cursor: _Cursor) -> SlowlyVaryingFunction:
    start = cursor.current.position
    keyword = cursor.advance()
    if keyword.text != "sv":
        raise SpecParseError(f"Ожидалось 'sv', получено {keyword.text or 'конец строки'!r}", keyword.position)
    cursor.expect("(")
    scale = cursor.number()
    cursor.expect(";")
    sig0 = _signature(cursor)
    cursor.expect("|")
    sig_inf = _signature(cursor)
    cursor.expect(")")
    try:
        return SlowlyVaryingFunction.from_triples(scale, sig0, sig_inf)
    except SpecParseError:
        raise
    except ValueError as e:
        raise SpecParseError(f"Некорректная функция sv: {e}", start)


def parse_sv(text: str) -> SlowlyVaryingFunction:
    """`sv(c; γ,α,β | γ,α,β)` → SlowlyVaryingFunction."""
    cursor = _Cursor(text)
    b = _sv(cursor)
    cursor.finish()
    return b


_REQUIRED = ("p", "q")


def parse_spec(text: str) -> SpaceSpec:
    """
    `LK(p=…, q=…, [b=sv(…)], [mu=…], [star])` → SpaceSpec.
    Синтаксис проверяется здесь (SpecParseError), значения p, q, mu —
    валидатором SpaceSpec (LKValidationError).
    """
    cursor = _Cursor(text)
    head = cursor.advance()
    if head.text != "LK":
        raise SpecParseError(f"Спецификация должна начинаться с 'LK(', получено {head.text!r}", head.position)
    cursor.expect("(")

    values: Dict[str, object] = {}
    star = False
    while True:
        key = cursor.advance()
        if key.kind != "name":
            raise SpecParseError(f"Ожидался ключ, получено {key.text or 'конец строки'!r}", key.position)
        name = key.text.lower()
        if name in values or (name == "star" and star):
            raise SpecParseError(f"Ключ {name!r} повторяется", key.position)
        if name == "star":
            star = True
        elif name == "b":
            cursor.expect("=")
            values[name] = _sv(cursor)
        elif name in ("p", "q", "mu"):
            cursor.expect("=")
            values[name] = cursor.number()
        else:
            raise SpecParseError(f"Неизвестный ключ {key.text!r}", key.position)
        if cursor.accept(")"):
            break
        cursor.expect(",")
    cursor.finish()

    for name in _REQUIRED:
        if name not in values:
            raise SpecParseError(f"Отсутствует обязательный ключ {name!r}", len(text))

    b: Optional[SlowlyVaryingFunction] = values.get("b")  # type: ignore[assignment]
    return SpaceSpec(
        p=values["p"],  # type: ignore[arg-type]
        q=values["q"],  # type: ignore[arg-type]
        b=b if b is not None else SlowlyVaryingFunction(),
        mu_r=values.get("mu", INF),  # type: ignore[arg-type]
        star=star,
    )


__all__ = ["Token", "tokenize", "parse_spec", "parse_sv"]
