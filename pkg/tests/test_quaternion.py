from fractions import Fraction

import pytest

from hurmod import quaternion as quat
from hurmod.arith import level_constants
from hurmod.classnum import cohen_coeff
from hurmod.errors import CapacityError
from hurmod.jacobi import disc_keys


def test_hilbert_symbol_basics():
    assert quat.hilbert_symbol(-1, -1, 2) == -1
    assert quat.hilbert_symbol(-1, -1, "inf") == -1
    assert quat.hilbert_symbol(-1, -1, 3) == 1
    assert quat.hilbert_symbol(-1, -11, 11) == -1
    assert quat.hilbert_symbol(-1, -11, 2) == 1
    assert quat.hilbert_symbol(2, 3, 5) == 1


def test_ramified_algebra_examples():
    assert (quat.ramified_algebra(11).a, quat.ramified_algebra(11).b) == (-1, -11)
    assert (quat.ramified_algebra(2).a, quat.ramified_algebra(2).b) == (-1, -1)
    assert (quat.ramified_algebra(17).a, quat.ramified_algebra(17).b) == (-3, -17)
    for n in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        alg = quat.ramified_algebra(n)
        assert quat.ramified_places(alg.a, alg.b) == {n, "inf"}, n


def test_quaternion_multiplication():
    alg = quat.QuaternionAlgebra(-1, -11)
    one, i, j, k = alg.gens()
    assert alg.mul(i, j) == k
    assert alg.mul(j, i) == tuple(-f for f in k)
    assert alg.mul(i, i) == tuple(-f for f in one)
    assert alg.nrd(k) == 11
    assert alg.trd(alg.mul(i, alg.conj(i))) == 2


def test_maximal_order():
    alg = quat.ramified_algebra(11)
    order = quat.maximal_order(alg, 11)
    assert order.reduced_discriminant == 11
    assert order.lattice.contains(alg.one())
    assert order.lattice.is_closed_under_multiplication()
    hurwitz_order = quat.maximal_order(quat.ramified_algebra(2), 2)
    assert hurwitz_order.reduced_discriminant == 2
    assert hurwitz_order.w == 12  # 24 units
    order3 = quat.maximal_order(quat.ramified_algebra(3), 3)
    assert order3.w == 6


def test_ideal_classes_small():
    cs11 = quat.ideal_classes(11)
    assert cs11.w_multiset == (2, 3)
    assert cs11.mass == Fraction(5, 6)
    cs2 = quat.ideal_classes(2)
    assert cs2.w_multiset == (12,)
    assert cs2.mass == Fraction(1, 12)
    cs3 = quat.ideal_classes(3)
    assert cs3.w_multiset == (6,)


def test_ideal_classes_mass_and_product():
    for n in (11, 13, 17, 19, 23, 29, 31, 37):
        class_set = quat.ideal_classes(n)
        assert class_set.mass == Fraction(n - 1, 12), n
        product = 1
        for _, w in class_set.classes:
            product *= w
        assert product == level_constants(n).dCoh, n


def test_ideal_classes_23():
    # The class count and mass are certified; the w multiset is whatever
    # the mass forces (1/1 + 1/2 + 1/3 = 11/6 here).
    cs = quat.ideal_classes(23)
    assert cs.mass == Fraction(11, 6)
    assert len(cs.classes) == 3


def test_capacity_bound():
    with pytest.raises(CapacityError):
        quat.ideal_classes(53)


def test_theta_trace_zero():
    cs2 = quat.ideal_classes(2)
    theta = quat.theta_trace_zero(cs2.classes[0][0], 24)
    assert theta[0] == 1
    assert all(c == 0 for m, c in enumerate(theta.coeffs) if m % 4 in (1, 2))
    assert theta[3] > 0 and theta[3] % 2 == 0
    assert all(c % 2 == 0 for m, c in enumerate(theta.coeffs) if m > 0)


def test_theta_distinct_across_classes():
    cs = quat.ideal_classes(11)
    t1 = quat.theta_trace_zero(cs.classes[0][0], 44)
    t2 = quat.theta_trace_zero(cs.classes[1][0], 44)
    assert t1.coeffs != t2.coeffs


def test_weighted_theta_matches_cohen():
    # The unit-weighted theta combination IS the scaled Cohen-Eisenstein
    # table: constant nCoh/2 and dCoh * H^Coh_N(-m) at q**m.
    for n in (11, 19):
        constants = level_constants(n)
        combined = quat.weighted_theta(n, 80)
        assert combined[0] == Fraction(constants.nCoh, 2)
        for m in range(1, 81):
            assert combined[m] == constants.dCoh * cohen_coeff(n, -m), (n, m)


def test_build_phi_trivial_levels():
    for n in (2, 3, 5, 7, 13):
        phi = quat.build_phiN(n, 60)
        assert all(phi[d] == 0 for d in disc_keys(60)), n


def test_build_phi_eleven():
    phi = quat.build_phiN(11, 200)
    assert phi[0] == 0
    assert all(phi[d].denominator == 1 for d in disc_keys(200))
    assert any(phi[d] != 0 for d in disc_keys(200))
    # Congruence with the scaled Cohen table mod nCoh = 5.
    for d in disc_keys(200):
        if d < 0:
            assert (6 * cohen_coeff(11, d) - phi[d]) % 5 == 0, d


def test_lemma_congruence():
    assert quat.verify_lemma_congruence(11, 300).holds
    assert quat.verify_lemma_congruence(17, 300).holds
    assert quat.verify_lemma_congruence(2, 100).holds  # trivially, mod 1
