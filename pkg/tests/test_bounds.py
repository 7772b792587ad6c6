from fractions import Fraction

import pytest

from cycleweights.bounds import (
    K5_LOWER,
    K5_UPPER,
    _classify_k4,
    _classify_k5,
    check_k4_bounds,
    check_k5_bounds,
    duality_check,
    fuzz,
)
from cycleweights.checks import (
    DEGENERATE,
    HOLDS,
    HOLDS_WITH_EQUALITY,
    VIOLATED,
)
from cycleweights.cycles import canonicalize, cycle_weight, total_weight
from cycleweights.errors import DegenerateError, UsageError
from cycleweights.geometry import (
    Configuration,
    FLOAT,
    RATIONAL,
    random_config,
    regular_polygon,
)

UNIT_SQUARE = Configuration(((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)))
PENTAGON = regular_polygon(5, 1.0)


def test_unit_square_report():
    rep = check_k4_bounds(UNIT_SQUARE)
    assert rep.checks == 3 and rep.violations == 0 and rep.degenerate == 0
    assert rep.equalities == 1
    by_cycle = {str(r.cycle): r for r in rep.rows}
    perim = by_cycle["0,1,2,3"]
    assert perim.verdict == HOLDS_WITH_EQUALITY
    assert abs(perim.ratio - 0.5) <= 1e-12
    assert by_cycle["0,2,1,3"].verdict == HOLDS
    assert abs(by_cycle["0,2,1,3"].ratio - 0.75) <= 1e-12
    assert rep.min_ratio == 0.5 and rep.max_ratio == 0.75


def test_unit_square_rational_exact():
    square = Configuration(((0, 0), (1, 0), (1, 1), (0, 1)), RATIONAL)
    rep = check_k4_bounds(square)
    assert rep.equalities == 1 and rep.violations == 0
    assert rep.min_ratio == Fraction(1, 2)
    assert rep.max_ratio == Fraction(3, 4)


def test_k4_degenerate_upper_end():
    # two coincident pairs: one cycle consists of the zero edges plus
    # the two positive ones twice -> ratio 1, flagged degenerate
    config = Configuration(((0, 0), (0, 0), (1, 0), (1, 0)), RATIONAL)
    rep = check_k4_bounds(config)
    assert rep.checks == 3
    assert rep.degenerate == 1
    assert rep.equalities == 2
    assert rep.violations == 0
    degenerate_rows = [r for r in rep.rows if r.verdict == DEGENERATE]
    assert degenerate_rows[0].ratio == 1


def test_all_coincident_every_row_degenerate():
    config = Configuration(((2.0, 1.0),) * 4)
    rep = check_k4_bounds(config)
    assert rep.degenerate == 3 and rep.checks == 3
    assert rep.min_ratio is None and rep.max_ratio is None
    assert all(r.ratio is None for r in rep.rows)


def test_classifier_k4_float_bands():
    assert _classify_k4(0.3, 1.0, 1e-9, FLOAT)[1] == VIOLATED
    assert _classify_k4(0.7, 1.0, 1e-9, FLOAT)[1] == HOLDS
    assert _classify_k4(0.5 + 1e-13, 1.0, 1e-9, FLOAT)[1] == HOLDS_WITH_EQUALITY
    assert _classify_k4(1.0 - 1e-12, 1.0, 1e-9, FLOAT)[1] == DEGENERATE
    assert _classify_k4(0.4, 0.0, 1e-9, FLOAT) == (None, DEGENERATE)


def test_classifier_k4_rational_exact():
    assert _classify_k4(Fraction(2, 5), Fraction(1), 1e-9, RATIONAL)[1] == VIOLATED
    assert _classify_k4(Fraction(1, 2), Fraction(1), 1e-9, RATIONAL)[1] == HOLDS_WITH_EQUALITY
    assert _classify_k4(Fraction(3, 5), Fraction(1), 1e-9, RATIONAL)[1] == HOLDS
    assert _classify_k4(Fraction(1), Fraction(1), 1e-9, RATIONAL)[1] == DEGENERATE


def test_classifier_k5_float_bands():
    assert _classify_k5(0.2, 1.0, 1e-9, FLOAT)[1] == VIOLATED
    assert _classify_k5(0.8, 1.0, 1e-9, FLOAT)[1] == VIOLATED
    assert _classify_k5(0.5, 1.0, 1e-9, FLOAT)[1] == HOLDS
    assert _classify_k5(K5_LOWER, 1.0, 1e-9, FLOAT)[1] == HOLDS_WITH_EQUALITY
    assert _classify_k5(K5_UPPER, 1.0, 1e-9, FLOAT)[1] == HOLDS_WITH_EQUALITY
    assert _classify_k5(0.4, 0.0, 1e-9, FLOAT) == (None, DEGENERATE)


def test_classifier_k5_rational_squaring():
    assert _classify_k5(Fraction(1, 5), Fraction(1), 1e-9, RATIONAL)[1] == VIOLATED
    assert _classify_k5(Fraction(4, 5), Fraction(1), 1e-9, RATIONAL)[1] == VIOLATED
    assert _classify_k5(Fraction(3, 10), Fraction(1), 1e-9, RATIONAL)[1] == HOLDS
    assert _classify_k5(Fraction(1, 2), Fraction(1), 1e-9, RATIONAL)[1] == HOLDS


def test_pentagon_attains_both_bounds():
    rep = check_k5_bounds(PENTAGON)
    assert rep.checks == 12 and rep.violations == 0
    assert rep.equalities == 2
    assert abs(rep.min_ratio - K5_LOWER) <= 1e-12
    assert abs(rep.max_ratio - K5_UPPER) <= 1e-12
    by_cycle = {str(r.cycle): r for r in rep.rows}
    assert by_cycle["0,1,2,3,4"].verdict == HOLDS_WITH_EQUALITY
    assert by_cycle["0,2,4,1,3"].verdict == HOLDS_WITH_EQUALITY


def test_k5_min_max_are_complements():
    for seed in (1, 2, 3):
        rep = check_k5_bounds(random_config(seed, 5, 2))
        assert abs(rep.min_ratio + rep.max_ratio - 1.0) <= 1e-12


def test_k5_rational_exact_holds():
    for seed in (1, 2, 3):
        rep = check_k5_bounds(random_config(seed, 5, 3, RATIONAL))
        assert rep.violations == 0 and rep.degenerate == 0


def test_report_weights_match_cycle_module_bitwise():
    config = random_config(12, 5, 2)
    rep = check_k5_bounds(config)
    for r in rep.rows:
        assert r.w_cycle == cycle_weight(config, r.cycle)
        assert r.w_total == total_weight(config)


def test_check_size_validation():
    with pytest.raises(UsageError):
        check_k4_bounds(PENTAGON)
    with pytest.raises(UsageError):
        check_k5_bounds(UNIT_SQUARE)
    with pytest.raises(UsageError):
        check_k4_bounds(UNIT_SQUARE, tolerance=0.0)


def test_duality_pentagon():
    rep = duality_check(PENTAGON)
    assert rep.verdict == HOLDS
    assert len(rep.rows) == 12
    by_cycle = {str(r.cycle): r for r in rep.rows}
    side = by_cycle["0,1,2,3,4"]
    assert side.lower_attained and not side.upper_attained
    assert str(side.complement) == "0,2,4,1,3"
    star = by_cycle["0,2,4,1,3"]
    assert star.upper_attained and not star.lower_attained
    for r in rep.rows:
        assert abs(r.residual) <= 1e-12


def test_duality_rational_exact():
    rep = duality_check(random_config(44, 5, 2, RATIONAL))
    assert rep.verdict == HOLDS
    assert all(r.residual == 0 for r in rep.rows)
    # rational ratios can never attain the irrational bounds
    assert all(not r.lower_attained and not r.upper_attained for r in rep.rows)


def test_duality_validation():
    with pytest.raises(UsageError):
        duality_check(UNIT_SQUARE)
    with pytest.raises(DegenerateError):
        duality_check(Configuration(((1.0, 1.0),) * 5))


def test_fuzz_deterministic():
    a = fuzz(7, 100, 5)
    b = fuzz(7, 100, 5)
    assert a == b
    assert a.trials == 100 and a.checks == 1200


def test_fuzz_clean_on_random_configs():
    rep4 = fuzz(11, 300, 4)
    assert rep4.violations == 0 and rep4.degenerate == 0
    assert rep4.rows == ()
    assert 0.5 <= rep4.min_ratio <= rep4.max_ratio < 1.0
    rep5 = fuzz(13, 300, 5, dim=3)
    assert rep5.violations == 0 and rep5.degenerate == 0
    assert K5_LOWER <= rep5.min_ratio <= rep5.max_ratio <= K5_UPPER


def test_fuzz_rational_exact():
    rep = fuzz(17, 30, 5, mode=RATIONAL)
    assert rep.violations == 0 and rep.degenerate == 0


def test_fuzz_validation():
    with pytest.raises(UsageError):
        fuzz(1, 0, 4)
    with pytest.raises(UsageError):
        fuzz(1, 10, 6)
    with pytest.raises(UsageError):
        fuzz(1, 10, 4, mode="decimal")
    with pytest.raises(UsageError):
        fuzz(1, 10, 4, tolerance=-1.0)
