from dataclasses import replace
from fractions import Fraction as F

import pytest

from rectgeom.formulas import TRANSCRIPTIONS
from rectgeom.geometry import Point, is_on_line, lines_equal, make_line
from rectgeom.theorems import (
    ClaimId,
    RectConfig,
    TwoRectConfig,
    build_t2_alternate,
    check_claim,
    formula_catalog,
    recheck,
    reproduce_formulas,
    sample_config,
    sampled_results,
    symbolic_config,
    verify_sampled,
    verify_symbolic,
)

SPOT = RectConfig(F(1), F(2), F(3), F(5))


def test_t1e_spot_values():
    r = check_claim("T1E", SPOT)
    assert r.holds
    assert r.witness["Q"] == Point(28, -42)
    assert r.witness["R"] == Point(F(80, 27), F(49, 27))
    assert r.witness["I"] == Point(2, F(7, 2))


def test_t1e_degenerate_denominator():
    r = check_claim("T1E", RectConfig(F(1), F(2), F(3), F(9, 2)))
    assert r.holds is None
    assert r.degeneracy == "Q undefined"


def test_improper_rectangle_is_tagged():
    r = check_claim("T1E", RectConfig(F(1), F(2), F(1), F(5)))
    assert r.holds is None and r.degeneracy.startswith("config invalid")


def test_t1b_and_t6_at_spot():
    assert check_claim("T1B", SPOT).holds
    w = check_claim("T6", SPOT).witness
    assert is_on_line(w["X"], w["IP"])


def test_t4_second_intersection_is_exact():
    w = check_claim("T4", SPOT).witness
    assert isinstance(w["T"].x, F)
    assert w["circle_ac"].at(w["T"]) == 0 and w["circle_bd"].at(w["T"]) == 0


@pytest.mark.parametrize("claim", [c for c in ClaimId])
def test_every_claim_holds_at_a_sample(claim):
    kind = "two_rect" if claim is ClaimId.T2 else "rect"
    r = check_claim(claim, sample_config(kind, 7, 1))
    if r.degeneracy is None:
        assert r.holds and recheck(r)


def test_t9_diagonal_points_are_consistent():
    for r in sampled_results("T9ii", 20, 3):
        w = r.witness
        for name in ("Q", "R"):
            assert is_on_line(w[name], w[f"{name}_diag1"])
            assert is_on_line(w[name], w[f"{name}_diag2"])


def test_t1e_line_matches_closed_form_for_samples():
    for r in sampled_results("T1E", 50, 11):
        a, b, c, d = r.config
        expected = make_line(b + d, a + c, -(a + c) * (b + d))
        assert lines_equal(r.witness["QR"], expected)


def test_t1b_origin_on_mn_for_samples():
    for r in sampled_results("T1B", 50, 11):
        assert r.witness["MN"].at(Point(0, 0)) == 0


def test_sample_config_is_deterministic():
    assert sample_config("rect", 7, 0) == sample_config("rect", 7, 0)
    assert sample_config("rect", 7, 0) != sample_config("rect", 7, 1)


def test_two_rect_shares_center():
    cfg = sample_config("two_rect", 7, 3)
    assert isinstance(cfg, TwoRectConfig)
    assert cfg.first.I == cfg.second.I == cfg.I


def test_symbolic_examples():
    for claim in ("T1E", "T1B", "T3"):
        rep = verify_symbolic(claim)
        assert rep.status == "proven", rep.reason
        assert rep.denominator_assumptions


def test_symbolic_t1b_constant_term_vanishes():
    w = check_claim("T1B", symbolic_config()).witness
    mn = w["MN"]
    assert mn.w.is_zero()


def test_symbolic_budget_gives_inconclusive():
    rep = verify_symbolic("T1B", budget=50)
    assert rep.status == "inconclusive"
    assert "budget" in rep.reason


def test_formula_catalog_matches():
    assert all(c.match for c in formula_catalog())
    assert reproduce_formulas().status == "proven"


def test_corrupted_transcription_is_caught():
    bad = list(TRANSCRIPTIONS)
    bad[16] = replace(bad[16], parts=("a^2*c - a*b*d + a*c^2 - b*c*d", "3*a*c + b*d", *bad[16].parts[2:]))
    rep = reproduce_formulas(bad)
    assert rep.status == "refuted"
    assert rep.reason == "mismatch at formula 17"


@pytest.mark.parametrize("claim", ["T4", "T9i"])
def test_sampled_examples(claim):
    rep = verify_sampled(claim, 100, 7)
    assert rep.status == "verified" and not rep.failures


def test_sampled_rejects_zero_samples():
    with pytest.raises(ValueError):
        verify_sampled("T1E", 0, 7)


def test_sampled_report_independent_of_jobs():
    one = verify_sampled("T5", 24, 5, jobs=1).to_dict(timing=False)
    three = verify_sampled("T5", 24, 5, jobs=3).to_dict(timing=False)
    assert one == three


def test_alternate_pairing_is_exploratory():
    # runs without error; its collinearity is not asserted as a claim
    w = build_t2_alternate(sample_config("two_rect", 7, 0))
    assert {"Q", "R"} <= w.keys()


def test_proof_implies_samples():
    # every symbolically proven claim must also hold on many exact samples
    for claim in ClaimId:
        rep = verify_sampled(claim, 1000, 2024, jobs=4)
        assert rep.status == "verified", (claim, rep.reason)
