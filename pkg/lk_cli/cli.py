# -*- coding: utf-8 -*-
"""
LK CLI — командная строка пространств Лоренца–Карамата.

  lk classify "LK(p=2,q=1)"
  lk embed "LK(p=2,q=1)" "LK(p=2,q=2)" --mu 1
  lk associate "LK(p=0.5,q=1)"
  lk norm "LK(p=2,q=2)" --input f.csv
  lk sv eval "sv(1; 0,1,0 | 0,0,0)" 0.36787944
  lk sv tilde|hat|sup|check "sv(...)"
  lk verify embed stargap --samples 20 --json-report out.json

Коды выхода: 0 — вердикт получен; 2 — некорректный вход;
3 — набор verify несогласован.
"""

import functools
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import Any, Callable, List, Optional

import click

from lk_spaces.api.toolkit import LorentzKaramataToolkit
from lk_spaces.config import LKConfig
from lk_spaces.decision.verdicts import AssociateOutcome
from lk_spaces.validator import LKValidationError
from lk_spaces.verify.suites import SUITE_NAMES

EXIT_INVALID = 2
EXIT_INCONSISTENT = 3

logger = logging.getLogger("lk_cli")


class _State:
    def __init__(self, config_path: Optional[str], verbose: int):
        self.config_path = config_path
        self.verbose = verbose

    def toolkit(self, tol: Optional[float] = None, seed: Optional[int] = None,
                samples: Optional[int] = None) -> LorentzKaramataToolkit:
        config = LKConfig.load(self.config_path)
        if tol is not None:
            config = config.with_tolerance(tol)
        overrides = {k: v for k, v in (("seed", seed), ("samples", samples)) if v is not None}
        if overrides:
            config = replace(config, **overrides)
        return LorentzKaramataToolkit(config)


def _guarded(command: Callable) -> Callable:
    """LKValidationError → ❌ в stderr и код выхода 2."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except LKValidationError as e:
            click.echo(f"❌ {e}", err=True)
            sys.exit(EXIT_INVALID)

    return wrapper


def _output_options(command: Callable) -> Callable:
    command = click.option("--seal", is_flag=True, help="Приложить печать отчёта")(command)
    command = click.option(
        "--format", "fmt", type=click.Choice(["text", "json", "yaml"]), default="text", show_default=True
    )(command)
    command = click.option("--json", "as_json", is_flag=True, help="То же, что --format json")(command)
    command = click.option("--tol", type=float, default=None, help="Относительный допуск квадратур")(command)
    return command


def _emit(toolkit: LorentzKaramataToolkit, report: Any, text: str, fmt: str, as_json: bool, seal: bool,
          kind: str):
    fmt = "json" if as_json else fmt
    if fmt == "text" and not seal:
        click.echo(text)
    else:
        click.echo(toolkit.render(report, "json" if fmt == "text" else fmt, seal=seal, kind=kind))


@click.group()
@click.option("-v", "--verbose", count=True, help="-v: INFO, -vv: DEBUG")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None, help="YAML-конфигурация")
@click.pass_context
def cli(ctx: click.Context, verbose: int, config_path: Optional[str]):
    """Пространства Лоренца–Карамата: нормы, классификация, вложения, проверки."""
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    ctx.obj = _State(config_path, verbose)


@cli.command()
@click.argument("spec")
@click.option("--mu", type=float, default=None, help="Мера μ(R) (по умолчанию из спецификации)")
@_output_options
@click.pass_obj
@_guarded
def classify(state: _State, spec: str, mu: Optional[float], tol, fmt, as_json, seal):
    """Свойства пространства L^{p,q,b} и L^{(p,q,b)}."""
    toolkit = state.toolkit(tol)
    report = toolkit.classify(spec, mu)
    lines = [f"{'✅' if report.nontrivial else '❌'} {toolkit.spec(spec, mu)}"]
    for key, value in report.to_dict().items():
        if key != "citations":
            lines.append(f"  {key}: {value}")
    lines.append(f"  citations: {', '.join(report.citations)}")
    _emit(toolkit, report, "\n".join(lines), fmt, as_json, seal, "classify")


@cli.command()
@click.argument("src")
@click.argument("dst")
@click.option("--mu", type=float, default=None, help="Мера μ(R) (по умолчанию из SRC)")
@_output_options
@click.pass_obj
@_guarded
def embed(state: _State, src: str, dst: str, mu: Optional[float], tol, fmt, as_json, seal):
    """Вердикт о вложении SRC ↪ DST."""
    toolkit = state.toolkit(tol)
    verdict = toolkit.embed(src, dst, mu)
    lines = [f"{'✅' if verdict.holds else '❌'} {verdict}"]
    lines += [f"  {c.name}: {c.value}" for c in verdict.conditions]
    lines.append(f"  citations: {', '.join(verdict.citations)}")
    if verdict.witness_recipe:
        lines.append(f"  witness: {verdict.witness_recipe}")
    _emit(toolkit, verdict, "\n".join(lines), fmt, as_json, seal, "embed")


@cli.command()
@click.argument("spec")
@click.option("--mu", type=float, default=None)
@_output_options
@click.pass_obj
@_guarded
def associate(state: _State, spec: str, mu: Optional[float], tol, fmt, as_json, seal):
    """Ассоциированное пространство."""
    toolkit = state.toolkit(tol)
    result = toolkit.associate(spec, mu)
    mark = "❌" if result.outcome is AssociateOutcome.NOT_CHARACTERIZED else "✅"
    text = f"{mark} {result} [{result.case}]"
    _emit(toolkit, result, text, fmt, as_json, seal, "associate")


@cli.command()
@click.argument("spec")
@click.option("--input", "input_path", required=True, type=click.Path(exists=True, dir_okay=False),
              help="CSV value,mass")
@click.option("--mu", type=float, default=None)
@_output_options
@click.pass_obj
@_guarded
def norm(state: _State, spec: str, input_path: str, mu: Optional[float], tol, fmt, as_json, seal):
    """Норма носителя из CSV в пространстве SPEC."""
    toolkit = state.toolkit(tol)
    report = toolkit.norm(spec, Path(input_path), mu)
    value = report.evaluation
    text = f"✅ {report.spec}: {value.value!r}" + (" (расходится)" if value.diverged else "")
    _emit(toolkit, report, text, fmt, as_json, seal, "norm")


@cli.group()
def sv():
    """Медленно меняющиеся функции: eval, tilde, hat, sup, check."""


@sv.command("eval")
@click.argument("b")
@click.argument("t", type=float)
@_output_options
@click.pass_obj
@_guarded
def sv_eval_command(state: _State, b: str, t: float, tol, fmt, as_json, seal):
    toolkit = state.toolkit(tol)
    report = toolkit.sv_eval(b, t)
    _emit(toolkit, report, f"✅ {report}", fmt, as_json, seal, "sv")


def _transform_command(kind: str):
    @click.argument("b")
    @_output_options
    @click.pass_obj
    @_guarded
    def command(state: _State, b: str, tol, fmt, as_json, seal):
        toolkit = state.toolkit(tol)
        report = toolkit.sv_transform(b, kind)
        mark = "✅" if report.result is not None else "❌"
        _emit(toolkit, report, f"{mark} {report}", fmt, as_json, seal, "sv")

    command.__doc__ = f"Преобразование {kind}(b)."
    return command


sv.command("tilde")(_transform_command("tilde"))
sv.command("hat")(_transform_command("hat"))


@sv.command("sup")
@click.argument("b")
@click.option("--kind", type=click.Choice(["tilde_sup", "hat_sup"]), default="tilde_sup", show_default=True)
@_output_options
@click.pass_obj
@_guarded
def sv_sup_command(state: _State, b: str, kind: str, tol, fmt, as_json, seal):
    """Монотонная огибающая sup_(0,t) b или sup_(t,∞) b."""
    toolkit = state.toolkit(tol)
    report = toolkit.sv_sup(b, kind)
    mark = "✅" if report.result is not None else "❌"
    _emit(toolkit, report, f"{mark} {report}", fmt, as_json, seal, "sv")


@sv.command("check")
@click.argument("b")
@click.option("--eps", type=float, default=0.1, show_default=True)
@_output_options
@click.pass_obj
@_guarded
def sv_check_command(state: _State, b: str, eps: float, tol, fmt, as_json, seal):
    """Численная проверка медленного изменения с показателем eps."""
    toolkit = state.toolkit(tol)
    report = toolkit.sv_check(b, eps)
    mark = "✅" if report.passed else "❌"
    if report.skipped:
        text = f"{mark} eps={report.eps}: {report.reason}"
    else:
        text = f"{mark} eps={report.eps}: K={report.k:.6g}" + (f" ({report.reason})" if report.reason else "")
    _emit(toolkit, report, text, fmt, as_json, seal, "sv_check")


@cli.command()
@click.argument("suites", nargs=-1, type=click.Choice(list(SUITE_NAMES) + ["all"]))
@click.option("--seed", type=int, default=None)
@click.option("--samples", type=int, default=None)
@click.option("--json-report", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Записать JSON-отчёт в файл")
@_output_options
@click.pass_obj
@_guarded
def verify(state: _State, suites, seed, samples, json_report, tol, fmt, as_json, seal):
    """Численные наборы проверок; код выхода 3 при несогласии."""
    toolkit = state.toolkit(tol, seed, samples)
    names: List[str] = list(SUITE_NAMES) if not suites or "all" in suites else list(dict.fromkeys(suites))
    reports = []
    for name in names:
        report = toolkit.verify(name)
        reports.append(report)
        if not as_json and fmt == "text":
            click.echo(f"{'✅' if report.consistent else '❌'} {name}")

    payload = {"reports": [r.to_dict() for r in reports]}
    if json_report:
        Path(json_report).write_text(toolkit.render(payload, "json"), encoding="utf-8")
    fmt = "json" if as_json else fmt
    if fmt != "text" or seal:
        click.echo(toolkit.render(payload, "json" if fmt == "text" else fmt, seal=seal, kind="verify"))
    if not all(r.consistent for r in reports):
        sys.exit(EXIT_INCONSISTENT)


def main():
    cli(prog_name="lk")


if __name__ == "__main__":
    main()
