"""Exact identities of the density computation."""

from fractions import Fraction

import pytest

from biforms import densities as D


@pytest.mark.parametrize("p", (2, 3, 5, 7, 11, 13, 97))
def test_rho_assembled_equals_closed(p):
    assert D.rho_assembled(p) == D.rho_closed(p)


def test_rho2_value():
    # independent exact evaluation of the printed expression
    assert 1 - D.rho_closed(2) == Fraction(39372, 1042440)


def test_rho_in_unit_interval():
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
              53, 59, 61, 67, 71, 73, 79, 83, 89, 97):
        assert 0 < D.rho_closed(p) < 1


def test_asymptotic_half_over_p_squared():
    p = 997
    ratio = float((1 - D.rho_closed(p)) * 2 * p * p)
    assert abs(ratio - 1) < 0.01


@pytest.mark.parametrize("p", (2, 3, 5, 7))
def test_intermediate_identities(p):
    T = D.build_case_table(p)
    sigma, tau, tau_star = D.bq_constants(p)
    assert T.xi["xi3"] == D.xi3_closed(p)
    assert T.xi_prime["xi3"] == D.xi3_prime_closed(p)
    assert T.xi["xi5"] == D.xi5_closed(p)
    assert T.xi_prime["xi4"] == p * tau - (p - 1) * tau_star
    assert T.xi_prime["xi13"] == p * T.xi["xi13"]
    assert T.xi["xi51"] == Fraction(3, 4)
    assert T.xi["xi5"] == ((1 - Fraction(1, p)) * T.xi["xi51"]
                           + Fraction(1, p) * T.xi["xi52"])
    assert tau - (1 - Fraction(1, p)) * tau_star == Fraction(1, p) * T.xi_prime["xi4"]
    assert T.xi["xi2"] == 0 and T.xi["xi12"] == 0
    assert T.aux["alpha"] == Fraction(1, p + 1)


@pytest.mark.parametrize("p", (2, 3, 5, 7, 11))
def test_case_table_sane(p):
    T = D.build_case_table(p)
    assert T.n["n0"] == (Fraction(p**9 - 1, p - 1)
                         - sum(T.n[f"n{i}"] for i in range(1, 6)))
    assert T.n["n1"] == T.n["n11"] + T.n["n12"] + T.n["n13"]
    for k, v in {**T.xi, **T.xi_prime, **T.aux}.items():
        assert 0 <= v <= 1, (k, v)
    for k, v in {**T.n, **T.r, **T.s}.items():
        assert v >= 0, (k, v)


def test_case1i_value_at_3():
    assert D.build_case_table(3).xi["xi11"] == Fraction(7, 16)


def test_bq_constants_in_unit_interval():
    for p in (2, 3, 5, 7, 11, 13, 97):
        for v in D.bq_constants(p):
            assert 0 < v < 1


def test_prime_product_small():
    (lo, hi), tail = D.prime_product(2)
    r2 = float(D.rho_closed(2))
    assert lo <= r2 <= hi
    assert 0 < tail < 1


def test_prime_product_monotone():
    a = D.prime_product_interval(50)
    b = D.prime_product_interval(500)
    assert b[1] <= a[1] + 1e-12  # partial products decrease


def test_prime_product_interval_valid():
    lo, hi = D.prime_product_interval(1000)
    assert 0 < lo < hi < 1


def test_solve_linear():
    sol = D.solve_linear([[2, 1], [1, -1]], [5, 1])
    assert sol == [Fraction(2), Fraction(1)]
