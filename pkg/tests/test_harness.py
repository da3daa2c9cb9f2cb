# -*- coding: utf-8 -*-
import math

import pytest

from lk_spaces.config import DEFAULT_CONFIG
from lk_spaces.core.lknorm import INF, SpaceSpec
from lk_spaces.core.svcalc import quad_oracle
from lk_spaces.decision.classify import associate_space
from lk_spaces.decision.verdicts import AssociateOutcome
from lk_spaces.grammar.spec_parser import parse_spec
from lk_spaces.storage.formats import parse_report, render_report
from lk_spaces.validator import DomainError, LKValidationError
from lk_spaces.verify.harness import (
    LTB_MIN_GROWTH,
    LTB_ZERO_GRID,
    CountReport,
    EmbeddingCheckReport,
    SVSuiteReport,
    check_embedding_catalog,
    check_embedding_numeric,
    check_hardy_littlewood,
    check_holder_and_duality,
    check_lebesgue_coincidence,
    check_quasi_norm,
    check_rearrangement_oracle,
    check_star_gap,
    check_star_plain_identity,
    check_sv_suite,
)
from lk_spaces.verify.suites import (
    DUALITY_SPECS,
    EMBEDDING_CATALOG,
    STAR_GAP_SPEC,
    SuiteReport,
    catalog_triples,
    run_suite,
)


def test_rearrangement_oracle_agrees():
    report = check_rearrangement_oracle(n=50, seed=1)
    assert report.consistent
    assert report.n == 50


def test_hardy_littlewood_holds():
    report = check_hardy_littlewood(n=50, seed=2)
    assert report.consistent
    assert report.max_excess <= 1e-12


def test_lebesgue_coincidence():
    assert check_lebesgue_coincidence(n=10, seed=3).consistent


def test_count_report_roundtrip():
    report = CountReport("hl", 10, 1, 0.25)
    assert not report.consistent
    assert parse_report(render_report(report), CountReport) == report


def test_catalog_is_reflexive_and_transitive():
    report = check_embedding_catalog((src, dst, mu) for src, dst, mu, _, _ in catalog_triples())
    assert report.consistent
    assert report.n_triples == len(EMBEDDING_CATALOG)
    assert 0 < report.n_holds < report.n_triples


def test_catalog_measure_override():
    assert all(mu == 1.0 for _, _, mu, _, _ in catalog_triples(mu_override=1.0))


def test_trivial_verdict_is_skipped():
    report = check_embedding_numeric(SpaceSpec(INF, 1), SpaceSpec(2, 1))
    assert report.trend == "skipped"
    assert report.verdict_consistent


def test_unreduced_star_verdict_is_skipped():
    src = parse_spec("LK(p=1,q=2,b=sv(1;0,0,0|0,-2,0),star)")
    report = check_embedding_numeric(src, SpaceSpec(1, 2))
    assert report.trend == "skipped"
    assert report.verdict_consistent


def test_identity_embedding_plateaus():
    report = check_embedding_numeric(SpaceSpec(2, 2), SpaceSpec(2, 2), n_samples=2)
    assert report.verdict.holds
    assert report.verdict_consistent
    assert report.max_ratio == pytest.approx(1.0)
    assert parse_report(render_report(report), EmbeddingCheckReport).verdict == report.verdict


def test_duality_skipped_for_zero_associate():
    report = check_holder_and_duality(SpaceSpec(0.5, 1), n_samples=2)
    assert report.skipped
    assert report.associate.outcome is AssociateOutcome.ZERO
    assert report.consistent


def test_duality_specs_cover_nonconstant_b():
    cases = {associate_space(s).case for s in map(parse_spec, DUALITY_SPECS) if not s.b.is_constant}
    assert {"TAS-i", "T2AS-2", "TAS-ii"} <= cases


def test_duality_tas_ii_with_log_weight_is_skipped():
    report = check_holder_and_duality(parse_spec("LK(p=inf,q=2,b=sv(1;0,-1,0|0,1,0))"), n_samples=2)
    assert report.skipped
    assert report.associate.outcome is AssociateOutcome.NOT_CHARACTERIZED
    assert report.associate.case == "TAS-ii"
    assert report.consistent


def test_quasi_norm_of_normed_space():
    [report] = check_quasi_norm([SpaceSpec(2, 2)], n=10)
    assert report.consistent
    assert max(report.k_values) <= 1.0 + 1e-9


def test_star_gap_requires_p_at_least_one():
    with pytest.raises(DomainError):
        check_star_gap(SpaceSpec(0.5, 1))


def test_star_gap_requires_nontrivial_star_space():
    with pytest.raises(DomainError):
        check_star_gap(SpaceSpec(1, 1))


def test_star_plain_identity_needs_p_q_one():
    with pytest.raises(DomainError):
        check_star_plain_identity(SpaceSpec(2, 2), n_samples=1)


def test_run_suite_unknown_name():
    with pytest.raises(LKValidationError):
        run_suite("nonsense", DEFAULT_CONFIG)


def test_run_small_suite():
    report = run_suite("rearrange", DEFAULT_CONFIG, samples=3)
    assert isinstance(report, SuiteReport)
    assert report.consistent
    assert SuiteReport.from_dict(report.to_dict()) == report


# ───────────────────────
# ПОЛНЫЕ СВИПЫ
# ───────────────────────

@pytest.mark.slow
def test_star_gap_grows_logarithmically():
    report = check_star_gap(parse_spec(STAR_GAP_SPEC))
    assert report.growth_confirmed
    smallest = dict(report.ratios)[10.0 ** -DEFAULT_CONFIG.sweep_decades]
    assert smallest == pytest.approx(2.0 + DEFAULT_CONFIG.sweep_decades * math.log(10.0), rel=1e-3)


@pytest.mark.slow
@pytest.mark.parametrize("p", [1.5, 2.0, 5.0])
def test_star_gap_controls_plateau(p):
    report = check_star_gap(SpaceSpec(p, 1))
    assert report.plateau
    assert not report.growth_confirmed


@pytest.mark.slow
def test_star_plain_identity_band():
    report = check_star_plain_identity(parse_spec(STAR_GAP_SPEC), n_samples=5)
    assert report.stable


@pytest.mark.slow
@pytest.mark.parametrize("text", ["LK(p=2,q=2)", "LK(p=3,q=2)", "LK(p=2,q=inf)"])
def test_holder_and_duality(text):
    report = check_holder_and_duality(parse_spec(text), n_samples=5)
    assert report.consistent


@pytest.mark.slow
def test_duality_t2as_2_log_weight_band_is_exact():
    # φ_X = tilde(b) и φ_X′ = t / tilde(b): произведение / t тождественно 1
    report = check_holder_and_duality(parse_spec("LK(p=inf,q=1,b=sv(1;0,-2,0|0,0,0))"), n_samples=5)
    assert report.associate.case == "T2AS-2"
    assert report.consistent
    assert report.band == pytest.approx((1.0, 1.0), rel=1e-2)


@pytest.mark.slow
def test_duality_tas_i_with_weight_at_infinity():
    report = check_holder_and_duality(parse_spec("LK(p=2,q=2,b=sv(1;0,0,0|0,0.5,0))"), n_samples=5)
    assert report.associate.case == "TAS-i"
    assert not report.associate.space.b.is_constant
    assert report.consistent


@pytest.mark.slow
def test_sv_suite():
    assert check_sv_suite(n=10).consistent


@pytest.mark.slow
@pytest.mark.parametrize("name", ["rearrange", "hl", "lebesgue", "quasinorm", "stargap"])
def test_named_suites(name):
    assert run_suite(name, DEFAULT_CONFIG, samples=10).consistent


# ───────────────────────
# МЕДЛЕННО МЕНЯЮЩИЕСЯ ФУНКЦИИ
# ───────────────────────

def _sv_report(**overrides):
    fields = dict(
        algebra_max_error=0.0,
        leff_band_zero=(0.2, 5.0),
        leff_band_infinity=(0.3, 4.0),
        leff_k=5.0,
        leff_k_coarse=4.9,
        ltb_growth=14.5,
        ltb_monotone=True,
        integrability_agreement=(10, 10),
        transform_rows=({"ok": True},),
    )
    fields.update(overrides)
    return SVSuiteReport(**fields)


def test_sv_report_consistency_rules():
    assert _sv_report().consistent
    assert not _sv_report(ltb_growth=3.7).consistent
    assert not _sv_report(ltb_monotone=False).consistent
    assert not _sv_report(leff_k_coarse=3.0).consistent
    assert not _sv_report(leff_k=math.inf).consistent


def test_sv_report_roundtrip():
    report = _sv_report(leff_k=math.inf)
    assert SVSuiteReport.from_dict(report.to_dict()) == report


def test_tilde_over_b_grows_toward_zero(log_decay_at_zero):
    ratios = [
        quad_oracle(0.0, log_decay_at_zero, 1.0, (0.0, t)).value / float(log_decay_at_zero(t))
        for t in LTB_ZERO_GRID
    ]
    assert all(later > earlier for earlier, later in zip(ratios, ratios[1:]))
    assert ratios[-1] / ratios[0] >= LTB_MIN_GROWTH
    assert ratios[0] == pytest.approx(1.0 + 4.0 * math.log(10.0), rel=1e-5)


@pytest.mark.slow
def test_sv_suite_reports_leff_and_ltb():
    report = check_sv_suite(n=4)
    assert report.leff_stable
    assert report.leff_band_zero[0] <= report.leff_band_zero[1]
    assert report.leff_k >= max(report.leff_band_zero[1], report.leff_band_infinity[1])
    assert report.ltb_monotone
    assert report.ltb_growth >= LTB_MIN_GROWTH
