import csv
import io
import json
from fractions import Fraction

import pytest

from eccentree.enumeration import canonical_code
from eccentree.errors import InfeasibleParams, UnknownTheorem, UnsupportedFormat
from eccentree.families import closed_form, fig7_candidates, p_t_ab, spider, t_n_beta
from eccentree.harness import (
    FUZZ_KINDS,
    Objective,
    TheoremReport,
    Verdict,
    all_pass,
    extremal_search,
    feasible_params,
    fuzz_transforms,
    report_emit,
    verify_range,
    verify_theorem,
)
from eccentree.parameters import diameter, matching, pendants
from eccentree.tree import star


def test_extremal_examples():
    r = extremal_search(7, pendants(3), "max")
    assert r.value == Fraction(17, 4)
    assert r.witnesses == {canonical_code(spider([2, 2, 2]))}
    r = extremal_search(7, matching(3), Objective.MAX)
    assert r.value == Fraction(9, 2)
    assert r.witnesses == {canonical_code(t_n_beta(7, 3))}
    r = extremal_search(9, diameter(4), "max", exclude="cnd")
    assert r.value == closed_form("T47", [9, 4])
    assert r.witnesses == {canonical_code(t) for t in fig7_candidates(9, 4)}


def test_star_is_the_overall_maximizer():
    for n in range(4, 13):
        r = extremal_search(n, None, "max")
        assert r.witnesses == {canonical_code(star(n))}


def test_empty_class_is_not_an_error():
    r = extremal_search(6, pendants(6), "max")
    assert r.class_size == 0 and r.value is None and not r.witnesses


def test_workers_do_not_change_results():
    one = extremal_search(11, diameter(5), "min", exclude="tndpq", workers=1)
    three = extremal_search(11, diameter(5), "min", exclude="tndpq", workers=3)
    assert (one.value, one.witnesses, one.class_size) == (three.value, three.witnesses, three.class_size)


def test_bad_exclusions():
    with pytest.raises(InfeasibleParams):
        extremal_search(8, matching(2), "max", exclude="cnd")
    with pytest.raises(InfeasibleParams):
        extremal_search(8, diameter(4), "max", exclude="nope")


def test_verify_examples():
    r = verify_theorem("T42", 10, [3])
    assert r.verdict is Verdict.PASS and r.found_value == 7
    r = verify_theorem("T46", 9, [4, 5])
    assert r.verdict is Verdict.PASS and r.found_value == Fraction(41, 6)
    assert r.witnesses == (canonical_code(p_t_ab(2, 3, 4)),)
    r = verify_theorem("T42", 5, [2])
    assert r.verdict is Verdict.PASS and r.found_value == Fraction(7, 2)


def test_verify_errors():
    with pytest.raises(UnknownTheorem):
        verify_theorem("T99", 8)
    with pytest.raises(InfeasibleParams):
        verify_theorem("T42", 8, [5])
    with pytest.raises(InfeasibleParams):
        verify_theorem("T46", 9, [3, 3])


def test_lemmas_small():
    assert verify_theorem("T43", 9).verdict is Verdict.PASS
    assert all_pass(verify_range("T44", 8, 9))


def test_default_grids():
    assert feasible_params("T41", 8) == [(3,), (4,), (5,), (6,)]
    assert feasible_params("T46", 9) == [(3, 6), (4, 5)]
    assert feasible_params("T47", 9) == [(4,), (5,), (6,)]
    reports = verify_range("T46", 8, 9)
    assert [r.params for r in reports] == [(3, 5), (4, 4), (3, 6), (4, 5)]


def test_fuzz_summary_shape_and_determinism():
    a = fuzz_transforms("theta", 300, 42)
    b = fuzz_transforms("theta", 300, 42)
    assert a.as_dict() == b.as_dict()
    assert list(a.as_dict()) == ["applied", "precondition_held", "strict_increase", "equal", "decrease"]
    assert a.decrease == 0 and a.ok


def test_fuzz_without_sites():
    s = fuzz_transforms("rho", 1, 7, n_min=2, n_max=2)
    assert s.applied == 0


@pytest.mark.parametrize("kind", FUZZ_KINDS)
def test_fuzz_kinds_small(kind):
    s = fuzz_transforms(kind, 500, 3, require_held=True)
    assert s.precondition_held == 500
    assert s.ok, s.violations[:3]
    if kind == "regraft":
        assert s.strict_increase == 0
    elif kind == "shift":
        assert s.decrease == 0 and s.flag_mismatch == 0
    else:
        assert s.strict_increase == 500


def test_fuzz_theorem_reports():
    r = verify_theorem("T35", 12, trials=300)
    assert r.verdict is Verdict.PASS and "decrease=0" in r.detail


def _pass_report():
    return TheoremReport("T42", (3,), Verdict.PASS, Fraction(7), Fraction(7), True, 31,
                         (b"\xe6",), (b"\xe6",))


def test_report_csv_empty():
    assert report_emit([], "csv").decode().splitlines() == [
        "theorem,params,verdict,claimed_value,claimed_decimal,found_value,found_decimal,"
        "family_match,class_size,witnesses,claimed,detail,evidence"
    ]


def test_report_json():
    (obj,) = json.loads(report_emit([_pass_report()], "json"))
    assert obj["verdict"] == "PASS"
    assert obj["found_value"] == "7" and obj["witnesses"] == ["e6"]
    r = TheoremReport("T48", (4,), Verdict.FAIL, Fraction(65, 12), Fraction(65, 12), False)
    (obj,) = json.loads(report_emit([r], "JSON"))
    assert obj["claimed_decimal"] == "5.41666666667"


def test_report_text_flags_failures():
    bad = TheoremReport("T48", (4,), Verdict.FAIL, Fraction(65, 12), Fraction(65, 12), False,
                        evidence=("3 0 1 1 2",))
    lines = report_emit([_pass_report(), bad], "text").decode().splitlines()
    assert lines[1].startswith("  T42") and lines[2].startswith("! T48")
    assert "edges: 3 0 1 1 2" in lines[-1]
    # columns line up
    assert lines[0].index("verdict") == lines[1].index("PASS") == lines[2].index("FAIL")


def test_report_csv_roundtrip():
    rows = list(csv.DictReader(io.StringIO(report_emit([_pass_report()], "csv").decode())))
    assert rows[0]["claimed_value"] == "7" and rows[0]["family_match"] == "yes"


def test_report_bad_format():
    with pytest.raises(UnsupportedFormat):
        report_emit([], "xml")
