"""Census checks at the small fields (q=4,5 run in the acceptance suite)."""

import pytest

from biforms.census import (
    CensusReport,
    check_delta1_condition,
    check_line_condition,
    expected_delta_counts,
    expected_line_counts,
    run_census,
)
from biforms.fields import field


@pytest.mark.parametrize("q,total", [(2, 511), (3, 9841)])
def test_census_small(q, total):
    rep = run_census(q)
    assert rep.total == total
    assert rep.ok, rep.mismatches


def test_census_q2_headline_counts():
    rep = run_census(2)
    assert rep.m_values["m11"] == 6
    assert rep.type_counts["(1,1)(1,1)"] == 15
    assert rep.sub_counts == {"rational_pair": 18, "conjugate_pair": 0,
                              "single_point": 9}


def test_census_q3_line_and_delta():
    rep = run_census(3)
    assert rep.line_counts["total"] == 3**7 * 2 // 2 == 2187
    assert rep.delta_counts["s11"] == 27
    assert rep.delta_counts["s4"] == 6
    assert rep.delta_counts["s5"] == 3
    assert rep.delta_counts["total"] == 3**5


def test_line_condition_examples():
    F3 = field(3)
    assert check_line_condition(F3, (1, 0, 0, 0, 0, 0, 1, 0, 0))      # X0^2+X1^2 via col 0
    assert not check_line_condition(F3, (0, 0, 0, 1, 0, 0, 0, 0, 0))  # X0X1 Y0^2


def test_delta_condition_example():
    F2 = field(2)
    # X1^2 (Y0^2 + Y0 Y1 + Y1^2): case 3 family
    form = (0, 0, 0, 0, 0, 0, 1, 1, 1)
    d1, d2 = check_delta1_condition(F2, form)
    assert d1 and not d2


def test_report_tsv_roundtrip():
    rep = run_census(2)
    text = rep.to_tsv()
    assert "type\t(1,1)(1,1)\t15\t15" in text
    assert "# mismatches\t0" in text


def test_unsupported_census_field():
    with pytest.raises(ValueError):
        run_census(9)


def test_expected_tables_positive():
    for p in (2, 3, 5):
        assert all(v >= 0 for v in expected_line_counts(p).values())
        assert all(v >= 0 for v in expected_delta_counts(p).values())
