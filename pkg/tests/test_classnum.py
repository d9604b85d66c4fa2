from fractions import Fraction

import pytest

from hurmod import classnum
from hurmod.arith import kronecker, primes_up_to
from hurmod.errors import CapacityError
from oracles import hurwitz_by_forms, reduced_forms


def test_hurwitz_values():
    assert classnum.hurwitz(-3) == Fraction(1, 3)
    assert classnum.hurwitz(-4) == Fraction(1, 2)
    assert classnum.hurwitz(0) == Fraction(-1, 12)
    assert classnum.hurwitz(5) == 0
    assert classnum.hurwitz(-5) == 0  # not a discriminant
    # Three classes of discriminant -23, all weight one (oracle: reduced_forms).
    assert len(reduced_forms(-23)) == 3
    assert classnum.hurwitz(-23) == 3


def test_hurwitz_matches_form_oracle():
    for d in range(-1, -400, -1):
        if d % 4 in (0, 1):
            assert classnum.hurwitz(d) == hurwitz_by_forms(d), d


def test_hurwitz_primitive_values():
    assert classnum.hurwitz_primitive(-3) == Fraction(1, 3)
    # Classes of -12: (1,0,3) weight 1 and (2,2,2) weight 1/3; only the
    # first is primitive.
    assert reduced_forms(-12) == [(1, 0, 3), (2, 2, 2)]
    assert classnum.hurwitz_primitive(-12) == 1
    # Classes of -16: (1,0,4) weight 1 primitive, (2,0,2) imprimitive, so
    # the primitive count is 1.  (Cross-check: H = sum of H0 over square
    # divisors gives H0(-16) = 3/2 - 1/2 = 1.)
    assert reduced_forms(-16, primitive_only=True) == [(1, 0, 4)]
    assert classnum.hurwitz_primitive(-16) == 1
    assert classnum.hurwitz(-16) - classnum.hurwitz_primitive(-4) == classnum.hurwitz_primitive(-16)
    assert classnum.hurwitz_primitive(-7) == 1
    assert classnum.hurwitz_primitive(-6) == 0  # not a discriminant


def test_primitive_decomposition_identity():
    # H(d) = sum of primitive counts over square divisors.
    for d in range(-1, -300, -1):
        if d % 4 not in (0, 1):
            continue
        total = Fraction(0)
        ell = 1
        while ell * ell <= -d:
            if d % (ell * ell) == 0 and (d // (ell * ell)) % 4 in (0, 1):
                total += classnum.hurwitz_primitive(d // (ell * ell))
            ell += 1
        assert total == classnum.hurwitz(d), d


def test_hurwitz_generalized_values():
    assert classnum.hurwitz_generalized(11, -4) == 0
    assert classnum.hurwitz_generalized(11, -7) == 2
    assert classnum.hurwitz_generalized(11, 0) == -1
    assert classnum.hurwitz_generalized(1, -4) == Fraction(1, 2)
    assert classnum.hurwitz_generalized(11, 3) == 0
    with pytest.raises(ValueError):
        classnum.hurwitz_generalized(12, -4)


def test_cohen_values():
    assert classnum.cohen_coeff(11, -4) == Fraction(1, 2)
    assert classnum.cohen_coeff(11, -7) == 0
    assert classnum.cohen_coeff(11, 0) == Fraction(5, 12)
    assert classnum.cohen_coeff(2, 0) == Fraction(1, 24)


def test_level_one_lemma():
    # H = Cohen + half generalized, exact, for several levels and ranges.
    for n in (2, 3, 11, 31):
        for d in range(0, -500, -1):
            if d % 4 in (0, 1):
                assert classnum.hurwitz(d) == classnum.cohen_coeff(n, d) + Fraction(
                    classnum.hurwitz_generalized(n, d), 2
                ) * 1, (n, d)


def test_fundamental_collapse():
    from hurmod.arith import is_fundamental

    for n in (3, 7, 11, 13):
        for d in range(-3, -300, -1):
            if d % 4 in (0, 1) and is_fundamental(d):
                chi = kronecker(d, n)
                assert classnum.hurwitz_generalized(n, d) == (1 + chi) * classnum.hurwitz(d)
                assert classnum.cohen_coeff(n, d) == Fraction(1 - chi, 2) * classnum.hurwitz(d)


def test_six_h_integral_and_positive():
    for d in range(-1, -800, -1):
        if d % 4 in (0, 1):
            h = classnum.hurwitz(d)
            assert (6 * h).denominator == 1
            assert h > 0


def test_orbit_oracle_level_one():
    t4 = classnum.orbit_oracle(1, -4)
    assert len(t4.orbits) == 1
    assert t4.orbits[0][1] == 4
    assert t4.weighted_count == Fraction(1, 2)
    t3 = classnum.orbit_oracle(1, -3)
    assert len(t3.orbits) == 1
    assert t3.orbits[0][1] == 6
    assert t3.weighted_count == Fraction(1, 3)


def test_orbit_oracle_level_eleven():
    table = classnum.orbit_oracle(11, -7)
    assert len(table.orbits) == 2
    assert all(order == 2 for _, order in table.orbits)
    assert table.weighted_count == 2 == classnum.hurwitz_generalized(11, -7)
    assert all(form.a % 11 == 0 and form.disc == -7 for form, _ in table.orbits)


def test_orbit_oracle_agrees_with_formula():
    for n in (2, 3, 5, 7, 11, 13):
        for d in range(-1, -80, -1):
            if d % 4 in (0, 1):
                assert (
                    classnum.orbit_oracle(n, d).weighted_count
                    == classnum.hurwitz_generalized(n, d)
                ), (n, d)


def test_orbit_oracle_bounds():
    with pytest.raises(CapacityError):
        classnum.orbit_oracle(11, -2400)
    with pytest.raises(CapacityError):
        classnum.orbit_oracle(53, -4)
    with pytest.raises(ValueError):
        classnum.orbit_oracle(11, -5)


def test_count_identity_examples():
    cert = classnum.verify_count_identity(11, -7)
    assert cert.holds and cert.primitive_orbits == 2
    assert cert.roots_level == 2 and cert.roots_quotient == 0 and cert.primitive_base == 1
    cert = classnum.verify_count_identity(11, -4)
    assert cert.holds and cert.primitive_orbits == 0
    cert = classnum.verify_count_identity(3, -3)
    assert cert.holds and cert.roots_level == 1 and cert.roots_quotient == 0


def test_count_identity_with_level_square():
    # The boundary cases where the level square divides the discriminant.
    for n, d in ((2, -12), (2, -16), (3, -27), (5, -75)):
        assert classnum.verify_count_identity(n, d).holds, (n, d)


def test_memo_seeding_rejects_garbage():
    accepted = classnum.seed_hurwitz_memo(
        {-3: Fraction(1, 3), -8: Fraction(1, 5), 4: Fraction(1), -9: Fraction(-2)}
    )
    assert accepted == 1
    assert classnum.hurwitz(-3) == Fraction(1, 3)
