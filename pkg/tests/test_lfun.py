import math

import pytest

from hurmod import lfun
from hurmod.errors import CapacityError
from oracles import class_number_by_forms, curve_11a3_ap


def test_eta_expansion_first_coefficients():
    table = lfun.eta_newform_11(20)
    assert table[1] == 1
    assert table[2] == -2
    assert table[3] == -1
    assert table[4] == 2
    assert table[5] == 1
    assert table[11] == 1
    assert table.prec == 20


def test_eta_matches_point_counts():
    # a_p from brute-force point counting on y^2 + y = x^3 - x^2.
    table = lfun.eta_newform_11(50)
    for p in (2, 3, 5, 7, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        assert table[p] == curve_11a3_ap(p), p


def test_eta_multiplicative_and_hecke():
    table = lfun.eta_newform_11(600)
    for m, n in ((2, 3), (3, 4), (5, 7), (4, 9), (2, 25), (11, 13), (3, 121)):
        assert table[m * n] == table[m] * table[n], (m, n)
    for p in (2, 3, 5, 7, 13):
        assert table[p * p] == table[p] ** 2 - p, p
    assert all(
        abs(table[n]) <= sum(1 for d in range(1, n + 1) if n % d == 0) * math.isqrt(n) + 1
        for n in range(1, 600)
    )


def test_truncation_bound():
    assert lfun.truncation_bound(-3) == math.ceil(36 * math.sqrt(11))
    assert lfun.truncation_bound(-300) >= 11939


def test_l_value_positive_cases():
    for d in (-3, -4):
        table = lfun.eta_newform_11(2 * lfun.truncation_bound(d) + 1)
        value = lfun.l_value_twist(table, d)
        assert value > 1e-3, (d, value)


def test_l_value_consistency_under_doubling():
    d = -20
    table = lfun.eta_newform_11(4 * lfun.truncation_bound(d) + 1)
    t = lfun.truncation_bound(d)
    short_table = lfun.NewformTable(level=11, prec=2 * t, a=table.a[: 2 * t + 1])
    v_guarded = lfun.l_value_twist(short_table, d, guard=True)
    v_plain = lfun.l_value_twist(short_table, d, guard=False)
    assert abs(v_guarded - v_plain) < 1e-9


def test_l_value_domain_and_capacity():
    table = lfun.eta_newform_11(100)
    with pytest.raises(CapacityError):
        lfun.l_value_twist(table, -3)
    with pytest.raises(ValueError):
        lfun.l_value_twist(table, -7)  # 11 splits
    with pytest.raises(ValueError):
        lfun.l_value_twist(table, -12)  # not fundamental


def test_class_number():
    assert lfun.class_number(-3) == 1
    assert lfun.class_number(-4) == 1
    assert lfun.class_number(-23) == 3
    assert lfun.class_number(-47) == 5
    assert class_number_by_forms(-47) == 5
    for d in range(-3, -200, -1):
        if d % 4 in (0, 1):
            try:
                h = lfun.class_number(d)
            except ValueError:
                continue
            assert h == class_number_by_forms(d), d


def test_predict_examples():
    pred = lfun.predict(11, -3, 5)
    assert pred.verdict is lfun.Verdict.FINITE_PREDICTED
    assert pred.curve == (-13392 * 9, -1080432 * -27)
    assert pred.curve == (-120528, 29171664)
    assert pred.quotient_exhibited

    pred47 = lfun.predict(11, -47, 5)
    assert pred47.verdict is lfun.Verdict.NO_PREDICTION
    assert pred47.hD == 5

    with pytest.raises(ValueError):
        lfun.predict(11, -7, 5)
    with pytest.raises(ValueError):
        lfun.predict(11, -3, 3)  # 3 does not divide nCoh(11) = 5
    with pytest.raises(ValueError):
        lfun.predict(11, -12, 5)  # not fundamental


def test_predict_other_levels_have_no_curve():
    pred = lfun.predict(19, -7, 3)  # nCoh(19) = 3; (-7|19) = -1
    assert pred.curve is None
    assert not pred.quotient_exhibited
    assert pred.verdict is lfun.Verdict.FINITE_PREDICTED


def test_fundamental_inert_range():
    ds = lfun.fundamental_inert_range(11, -50, -1)
    assert -47 in ds and -3 in ds
    assert -7 not in ds  # split
    assert -12 not in ds  # not fundamental
    assert ds == sorted(ds, reverse=True)
