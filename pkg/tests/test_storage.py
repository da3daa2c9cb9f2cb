# -*- coding: utf-8 -*-
import json
import math

import pytest
import yaml

from lk_spaces.core.lknorm import INF, NormEvaluation, SpaceSpec
from lk_spaces.core.rearrange import StepFunction
from lk_spaces.decision.classify import associate_space, classify_space, decide_embedding
from lk_spaces.decision.verdicts import AssociateResult, ClassificationReport, EmbeddingVerdict
from lk_spaces.storage.formats import (
    canonical_json,
    parse_report,
    parse_step_function,
    read_joint_step_function,
    read_step_function,
    render_many,
    render_report,
    write_step_function,
)
from lk_spaces.storage.seal import ReportSeal
from lk_spaces.validator import LKValidationError


# ───────────────────────
# НОСИТЕЛИ
# ───────────────────────

def test_parse_step_function_skips_comments_and_header():
    text = "# носитель\nvalue,mass\n\n2,1\n1, 2\n0,inf\n"
    assert parse_step_function(text) == StepFunction.of([(2, 1), (1, 2), (0, INF)])


def test_parse_step_function_rejects_bad_row():
    with pytest.raises(LKValidationError):
        parse_step_function("2,1\n1\n")
    with pytest.raises(LKValidationError):
        parse_step_function("2,abc\n")


def test_write_then_read_step_function(tmp_path):
    f = StepFunction.of([(0.1, 3.0), (2.5, 1e-3), (0.0, INF)])
    path = tmp_path / "f.csv"
    write_step_function(f, path)
    assert read_step_function(path) == f


def test_read_joint_step_function(tmp_path):
    path = tmp_path / "h.csv"
    path.write_text("f,g,mass\n1,2,1\n2,1,1\n", encoding="utf-8")
    h = read_joint_step_function(path)
    assert h.pieces == ((1.0, 2.0, 1.0), (2.0, 1.0, 1.0))


# ───────────────────────
# ОТЧЁТЫ
# ───────────────────────

def test_canonical_json_is_stable():
    first = canonical_json({"b": 1, "a": [INF, 0.5]})
    assert first == '{"a":["inf",0.5],"b":1}'
    assert canonical_json({"a": [INF, 0.5], "b": 1}) == first


def test_render_rejects_unknown_format():
    with pytest.raises(LKValidationError):
        render_report({"a": 1}, "xml")


@pytest.mark.parametrize("fmt", ["json", "yaml"])
def test_reports_parse_back(fmt):
    verdict = decide_embedding(SpaceSpec(2, 1), SpaceSpec(2, 2))
    assert parse_report(render_report(verdict, fmt), EmbeddingVerdict, fmt) == verdict

    associate = associate_space(SpaceSpec(2, 3))
    assert parse_report(render_report(associate, fmt), AssociateResult, fmt) == associate

    report = classify_space(SpaceSpec(2, 2))
    assert parse_report(render_report(report, fmt), ClassificationReport, fmt) == report


def test_diverged_norm_renders_infinity():
    text = render_report(NormEvaluation(INF, True))
    assert json.loads(text)["value"] == "inf"
    assert math.isinf(parse_report(text, NormEvaluation).value)


def test_render_many_yaml():
    reports = [NormEvaluation(1.0), NormEvaluation(2.0)]
    data = yaml.safe_load(render_many(reports, "yaml"))
    assert [r["value"] for r in data["reports"]] == [1.0, 2.0]


def test_parse_report_rejects_garbage():
    with pytest.raises(LKValidationError):
        parse_report("{not json", NormEvaluation)


# ───────────────────────
# ПЕЧАТИ
# ───────────────────────

def test_seal_roundtrip():
    content = decide_embedding(SpaceSpec(3, 1), SpaceSpec(2, 1), 1.0).to_dict()
    sealed = ReportSeal.sealed("embed", content)
    assert sealed["seal"]["report_id"].startswith("embed_")
    assert ReportSeal.verify_seal(sealed["seal"], sealed["report"])
    reloaded = json.loads(render_report(sealed))
    assert ReportSeal.verify_seal(reloaded["seal"], reloaded["report"])


def test_seal_detects_tampering():
    content = {"value": 1.0}
    seal = ReportSeal.seal("norm_x", content)
    assert not ReportSeal.verify_seal(seal, {"value": 1.5})
    assert not ReportSeal.verify_seal(dict(seal, algorithm="md5"), content)


def test_report_id_is_deterministic():
    content = {"a": 1}
    assert ReportSeal.report_id("verify", content) == ReportSeal.report_id("verify", dict(content))
    assert len(ReportSeal.report_id("verify", content)) == len("verify_") + 16


def test_unknown_seal_algorithm():
    with pytest.raises(LKValidationError):
        ReportSeal.seal("x", {}, algorithm="md5")
