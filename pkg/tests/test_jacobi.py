from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurmod import jacobi
from hurmod.arith import primes_up_to
from hurmod.errors import CapacityError


def test_disc_keys():
    assert jacobi.disc_keys(4) == [0, -3, -4]
    assert jacobi.disc_keys(8) == [0, -3, -4, -7, -8]


def test_build_sh_level_one():
    series = jacobi.build_SH(1, 4)
    assert dict(series.coeffs) == {0: Fraction(-1, 12), -3: Fraction(1, 3), -4: Fraction(1, 2)}


def test_build_sh_level_eleven():
    series = jacobi.build_SH(11, 8)
    assert series[-7] == 2
    assert series[-4] == 0
    assert series[0] == -1


def test_build_scoh():
    series = jacobi.build_SCoh(11, 4)
    assert series[-3] == Fraction(1, 3)
    assert series[-4] == Fraction(1, 2)
    assert series[0] == Fraction(5, 12)
    for n in (3, 7, 19):
        assert jacobi.build_SCoh(n, 4)[0] == Fraction(n - 1, 24)


def test_build_sr():
    series = jacobi.build_SR(1, 4)
    assert dict(series.coeffs) == {0: Fraction(-1), -3: Fraction(4), -4: Fraction(6)}
    assert jacobi.build_SR(3, 4)[-3] == Fraction(-1, 2)
    with pytest.raises(ValueError):
        jacobi.build_SR(6, 4)


def test_sr_constant_term_is_minus_one():
    for n in [1] + primes_up_to(100):
        assert jacobi.build_SR(n, 4)[0] == -1, n


def test_series_validation():
    with pytest.raises(ValueError):
        jacobi.DiscSeries(1, "Hurwitz", 4, {0: Fraction(1)})
    with pytest.raises(ValueError):
        jacobi.DiscSeries(1, "Nonsense", 4, {d: Fraction(0) for d in jacobi.disc_keys(4)})
    with pytest.raises(ValueError):
        jacobi.DiscSeries(1, "Cuspidal", 4, {d: Fraction(1) for d in jacobi.disc_keys(4)})


def test_series_combine_and_lemma():
    sh = jacobi.build_SH(1, 300)
    scoh = jacobi.build_SCoh(11, 300)
    shn = jacobi.build_SH(11, 300)
    diff = jacobi.series_combine(
        [(1, sh), (-1, scoh), (Fraction(-1, 2), shn)]
    )
    assert all(diff[d] == 0 for d in jacobi.disc_keys(300))


def test_series_combine_truncates():
    a = jacobi.build_SH(1, 100)
    b = jacobi.build_SH(1, 40)
    combined = jacobi.series_combine([(1, a), (1, b)])
    assert combined.dmax == 40


@given(st.integers(-5, 5), st.integers(-5, 5))
@settings(max_examples=30)
def test_series_combine_linearity(x, y):
    a = jacobi.build_SH(1, 60)
    b = jacobi.build_SCoh(3, 60)
    combined = jacobi.series_combine([(x, a), (y, b)])
    for d in jacobi.disc_keys(60):
        assert combined[d] == x * a[d] + y * b[d]


def test_series_congruent():
    sr1 = jacobi.build_SR(1, 200)
    sr3 = jacobi.build_SR(3, 200)
    two_sr1 = jacobi.series_combine([(2, sr1)])
    two_sr3 = jacobi.series_combine([(2, sr3)])
    assert jacobi.series_congruent(two_sr1, two_sr1, 7).holds
    cert = jacobi.series_congruent(two_sr1, two_sr3, 3)
    assert cert.holds
    # At D = -3 the difference is 8 - (-1) = 9.
    assert two_sr1[-3] - two_sr3[-3] == 9
    bad = jacobi.series_congruent(sr1, jacobi.build_SR(3, 200), 5)
    assert not bad.holds and bad.witness is not None


def test_pack_qy():
    series = jacobi.build_SH(1, 40)
    packed = jacobi.pack_qy(series, 10)
    assert packed.terms[(1, 0)] == Fraction(1, 2)
    assert packed.terms[(1, 1)] == Fraction(1, 3)
    assert packed.terms[(0, 0)] == Fraction(-1, 12)
    for (n, s), value in packed.terms.items():
        assert packed.terms[(n, -s)] == value
    with pytest.raises(CapacityError):
        jacobi.pack_qy(series, 11)


def test_pack_plus_space():
    table = jacobi.pack_plus_space(jacobi.build_SH(1, 8))
    assert table[0] == Fraction(-1, 12)
    assert table[3] == Fraction(1, 3)
    assert table[4] == Fraction(1, 2)
    assert set(table) == {0, 3, 4, 7, 8}
    assert all(n % 4 in (0, 3) for n in table)
    zero = jacobi.zero_series(1, 8)
    assert all(v == 0 for v in jacobi.pack_plus_space(zero).values())


def test_theta_expansion():
    theta = jacobi.theta_expansion(1, 0, 25)
    assert theta.terms[(0, 0)] == 1
    assert all(s % 2 == 0 and exp == s * s for (exp, s) in theta.terms)
    null = jacobi.thetanull(1, 1, 30)
    assert null == {1: 2, 9: 2, 25: 2, 49: 2, 81: 2}
    null0 = jacobi.thetanull(1, 0, 9)
    assert null0 == {0: 1, 4: 2, 16: 2, 36: 2}


def test_build_t_d():
    pairs = jacobi.build_t_d(1, 9)
    assert len(pairs) == 2
    (null0, theta0), (null1, theta1) = pairs
    assert (theta0.m, theta0.r) == (1, 0)
    assert (theta1.m, theta1.r) == (1, 1)
    assert null0 == jacobi.thetanull(1, 0, 9)
    assert null1 == jacobi.thetanull(1, 1, 9)
    with pytest.raises(ValueError):
        jacobi.build_t_d(0, 4)


def test_json_round_trip():
    series = jacobi.build_SCoh(11, 20)
    data = series.to_json_dict()
    assert data["coeffs"][0][0] == 0
    assert jacobi.DiscSeries.from_json_dict(data) == series
