import json
from fractions import Fraction

import pytest

from subcount.exact import Decision
from subcount.report import Verdict, bundle, dumps, format_decimal, worst
from subcount.verify import (
    ALPHA_PUBLISHED,
    PUBLISHED_TABLE,
    ProbeCase,
    alpha_configurations,
    alpha_objective,
    alpha_optimum,
    check_lemma0,
    check_row,
    conjecture_probe,
    exception_comparison,
    exception_threshold,
    exceptional_values,
    lemma0_grid,
    scan_threshold,
    sweep_prop34,
)


@pytest.mark.parametrize("p,c,rt", [(2, 1, 2), (3, 2, 9), (2, 6, 64), (23, 1, 184), (3, 7, 2187)])
def test_lemma0_examples(p, c, rt):
    rep = check_lemma0(p, c, rt)
    assert rep.verdict is Verdict.VERIFIED


def test_lemma0_rhs_at_two():
    # 7.3722 * 2^(1/4) is about 8.767
    rep = check_lemma0(2, 1, 2)
    rhs = rep.witnesses[0]["rhs"]
    assert abs(float(rhs.mid) - 8.7670) < 1e-3


def test_lemma0_grid():
    assert lemma0_grid([2, 3, 5, 7], 8).verdict is Verdict.VERIFIED


def test_lemma0_rejects_bad_rt():
    with pytest.raises(ValueError):
        check_lemma0(3, 2, 10)


@pytest.mark.parametrize("p,c,expected", [(23, 1, 184), (7, 2, 294), (5, 3, 250), (19, 1, 71896),
                                          (5, 2, 407850), (3, 4, 9396)])
def test_threshold_examples(p, c, expected):
    row = exception_threshold(p, c)
    assert row.kind == "threshold" and row.max_rt == expected


def test_threshold_boundary_certified():
    # the threshold is exceptional and the next admissible multiple is not
    for p, c in [(23, 1), (7, 2), (5, 3), (3, 4), (19, 1)]:
        t = exception_threshold(p, c).max_rt
        assert exception_comparison(p, c, t).decision is Decision.FAILS
        nxt = t + p**c
        if (nxt // p**c) % p == 0:
            nxt += p**c
        assert exception_comparison(p, c, nxt).decision is Decision.HOLDS


def test_p_base_not_rt_base():
    # 207 = 9 * 23 is the first admissible multiple past 184
    assert exception_comparison(23, 1, 184).decision is Decision.FAILS
    assert exception_comparison(23, 1, 207).decision is Decision.HOLDS


def test_three_four_boundary_values():
    assert exception_comparison(3, 4, 9396).decision is Decision.FAILS
    assert exception_comparison(3, 4, 9477).decision is Decision.FAILS  # 9477 = 117 * 81, not admissible
    assert exception_comparison(3, 4, 9558).decision is Decision.HOLDS


@pytest.mark.parametrize("p,c", [(23, 1), (7, 2), (5, 3), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8), (29, 1)])
def test_threshold_matches_linear_scan(p, c):
    row = exception_threshold(p, c)
    limit = max(row.max_rt or 0, p**c) * 3
    assert scan_threshold(p, c, limit) == row.max_rt


def test_three_five_value():
    assert exception_threshold(3, 5).max_rt == 2673
    assert 34375 % 3**5 != 0


def test_c_at_least_six_set():
    values = set()
    for c in range(6, 17):
        values |= set(exceptional_values(3, c).values)
    assert values == {729, 1458, 2187, 2916}


def test_any_rows():
    assert exception_threshold(2, 4).kind == "any"
    assert exception_threshold(17, 1).max_rt == 58508339712691
    assert exception_threshold(3, 3).max_rt == 46580562


def test_table_rows():
    verdicts = {row.label: check_row(row).verdict for row in PUBLISHED_TABLE}
    assert verdicts.pop("c=5 p=3") is Verdict.MISMATCH
    assert set(verdicts.values()) == {Verdict.VERIFIED}


def test_mismatch_witness_content():
    row = next(r for r in PUBLISHED_TABLE if r.label == "c=5 p=3")
    w = check_row(row).witnesses[0]
    assert w["computed"] == 2673 and w["published"] == 34375
    assert w["published_divisible_by_p^c"] is False
    assert w["published_bound_covers_all_exceptions"] is True


def test_low_cap_is_undecided():
    row = next(r for r in PUBLISHED_TABLE if r.label == "c=1 p=17")
    assert check_row(row, max_level=1).verdict is Verdict.UNDECIDED


@pytest.mark.parametrize("p,c,rt_max,cases", [(23, 1, 184, 8), (23, 1, 23, 1), (7, 2, 294, 6), (5, 3, 250, 2)])
def test_sweep_small(p, c, rt_max, cases):
    rep = sweep_prop34(p, c, rt_max)
    assert rep.verdict is Verdict.VERIFIED
    assert rep.witnesses[0]["cases"] == cases


def test_sweep_partition_independent():
    a = sweep_prop34(19, 1, 19 * 300, workers=1, chunks=1)
    b = sweep_prop34(19, 1, 19 * 300, workers=1, chunks=7)
    c = sweep_prop34(19, 1, 19 * 300, workers=2)
    assert a.to_json() == b.to_json() == c.to_json()


def test_alpha():
    search = alpha_optimum()
    assert search.best.exponents == ((3, 1), (5, 1), (7, 1), (11, 1), (13, 1))
    obj = search.report.witnesses[0]["objective"]
    assert Fraction("1.8917") <= obj.lo and obj.hi < ALPHA_PUBLISHED
    assert search.report.verdict is Verdict.VERIFIED
    assert len(alpha_configurations()) == 127
    assert all(cfg.objective.hi <= search.best.objective.hi for cfg in search.configs)


def test_alpha_inverted_threshold():
    assert alpha_optimum(Fraction(18, 10)).report.verdict is Verdict.COUNTEREXAMPLE


def test_alpha_objective_rejects_empty():
    with pytest.raises(ValueError):
        alpha_objective(())


def test_conjecture_probe():
    rep = conjecture_probe([ProbeCase("a", 4, 8), ProbeCase("b", 1, 1), ProbeCase("c", 5, 4)])
    summary = rep.witnesses[0]
    assert summary["cases"] == 2 and summary["skipped_index_1"] == 1
    assert rep.verdict is Verdict.VERIFIED


def test_report_json_round_trip():
    rep = check_lemma0(23, 1, 184)
    text = dumps(bundle([rep], "lemma0"))
    assert dumps(json.loads(text)) == text


def test_mismatch_needs_witness():
    from subcount.report import VerificationReport
    with pytest.raises(ValueError):
        VerificationReport("x", {}, Verdict.MISMATCH, [])


def test_worst_ordering():
    assert worst([Verdict.VERIFIED, Verdict.UNDECIDED]) is Verdict.UNDECIDED
    assert worst([Verdict.UNDECIDED, Verdict.MISMATCH]) is Verdict.MISMATCH
    assert worst([]) is Verdict.VERIFIED


@pytest.mark.parametrize("x,up,expected", [(Fraction(1, 3), False, "0.3333333333"),
                                           (Fraction(1, 3), True, "0.3333333334"),
                                           (Fraction(73722, 10000), False, "7.3722"),
                                           (Fraction(-5, 2), False, "-2.5")])
def test_format_decimal(x, up, expected):
    assert format_decimal(x, upward=up) == expected
