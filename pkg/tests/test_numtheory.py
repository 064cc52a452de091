"""Exact arithmetic: multiplicative functions, polynomials, and the
Moebius product over 1 - x^d reduced to cyclotomic form."""

import math
import time
from fractions import Fraction

import pytest

from oracles import cyclotomic_by_mobius
from qprod.numtheory import (
    ArithValue,
    IntPolynomial,
    RationalPolyFraction,
    cyclotomic,
    divisors,
    factorize,
    jacobi_symbol,
    mobius,
    one_minus_x_power,
    poly_gcd,
    psi_by_definition,
    psi_reduced,
    radical,
    totient,
    von_mangoldt,
)


def test_factorize():
    assert factorize(1) == ()
    assert factorize(2) == ((2, 1),)
    assert factorize(360) == ((2, 3), (3, 2), (5, 1))
    assert factorize(2**20) == ((2, 20),)
    assert factorize(97) == ((97, 1),)
    assert factorize(91) == ((7, 1), (13, 1))
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(-6)


def test_divisors():
    assert divisors(1) == (1,)
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert divisors(36) == (1, 2, 3, 4, 6, 9, 12, 18, 36)
    for n in range(1, 200):
        ds = divisors(n)
        assert all(n % d == 0 for d in ds)
        assert len(ds) == sum(1 for d in range(1, n + 1) if n % d == 0)


def test_mobius_totient_radical():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    assert mobius(30) == -1
    assert mobius(2 * 3 * 5 * 7) == 1
    assert totient(1) == 1
    assert totient(12) == 4
    assert totient(97) == 96
    assert totient(360) == 96
    assert radical(1) == 1
    assert radical(12) == 6
    assert radical(360) == 30
    assert radical(2**10) == 2


def test_mobius_sum_identities():
    # sum_{d|n} mu(d) vanishes beyond n = 1; sum mu(d)/d = phi(n)/n exactly
    for n in range(2, 1001):
        assert sum(mobius(d) for d in divisors(n)) == 0
        s = sum(Fraction(mobius(d), d) for d in divisors(n))
        assert s == Fraction(totient(n), n)
    assert sum(mobius(d) for d in divisors(1)) == 1


def test_totient_is_multiplicative():
    for m in range(1, 40):
        for n in range(1, 40):
            if math.gcd(m, n) == 1:
                assert totient(m * n) == totient(m) * totient(n)


def test_von_mangoldt():
    v = von_mangoldt(8)
    assert v.kind == "prime-power-log" and v.prime == 2 and v.exponent == 3
    assert von_mangoldt(7) == ArithValue.prime_power_log(7, 1)
    assert von_mangoldt(1).is_zero
    assert von_mangoldt(12).is_zero
    assert von_mangoldt(6).is_zero


def test_jacobi_symbol():
    assert jacobi_symbol(1, 1) == 1
    assert jacobi_symbol(2, 3) == -1
    assert jacobi_symbol(2, 7) == 1
    assert jacobi_symbol(5, 9) == 1
    assert jacobi_symbol(3, 9) == 0
    assert jacobi_symbol(-1, 5) == 1
    assert jacobi_symbol(-1, 3) == -1
    # squares are residues
    for m in (3, 5, 7, 11, 13):
        for a in range(1, m):
            assert jacobi_symbol(a * a, m) == 1
    with pytest.raises(ValueError):
        jacobi_symbol(2, 4)
    with pytest.raises(ValueError):
        jacobi_symbol(2, -3)


# ---------------------------------------------------------------------------
# IntPolynomial


def test_polynomial_basics():
    p = IntPolynomial((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert IntPolynomial(()).is_zero
    assert IntPolynomial.zero().degree == -1
    assert IntPolynomial.one().coeffs == (1,)
    assert IntPolynomial.x_power_minus_one(3).coeffs == (-1, 0, 0, 1)
    assert one_minus_x_power(3).coeffs == (1, 0, 0, -1)
    with pytest.raises(ValueError):
        IntPolynomial((1, Fraction(1, 2)))


def test_polynomial_arithmetic():
    x3m1 = IntPolynomial.x_power_minus_one(3)
    xm1 = IntPolynomial.x_power_minus_one(1)
    assert x3m1.exact_div(xm1).coeffs == (1, 1, 1)
    assert (xm1 * IntPolynomial((1, 1, 1))) == x3m1
    assert (x3m1 - x3m1).is_zero
    assert (x3m1 + (-x3m1)).is_zero
    with pytest.raises(ValueError):
        x3m1.exact_div(IntPolynomial((1, 1)))
    with pytest.raises(ZeroDivisionError):
        x3m1.exact_div(IntPolynomial.zero())


def test_polynomial_evaluate_and_substitute():
    p = IntPolynomial((1, -1, 2))  # 1 - x + 2x^2
    assert p.evaluate(3) == 1 - 3 + 18
    assert p.evaluate(Fraction(1, 2)) == Fraction(1, 1)
    assert p.substitute_power(2).coeffs == (1, 0, -1, 0, 2)
    assert p.substitute_power(1) == p
    # Horner against direct powers on a few random-ish points
    for x in (-3, -1, 0, 2, 5):
        direct = sum(c * x**i for i, c in enumerate(p.coeffs))
        assert p.evaluate(x) == direct


def test_polynomial_str_and_json():
    assert str(IntPolynomial((1, -1, 1))) == "1 - x + x^2"
    assert str(IntPolynomial((-1, 1))) == "-1 + x"
    assert str(IntPolynomial((0, 0, 3))) == "3*x^2"
    assert str(IntPolynomial.zero()) == "0"
    p = IntPolynomial((2, 0, -5, 1))
    assert IntPolynomial.from_json(p.to_json()) == p


def test_polynomial_content():
    assert IntPolynomial((6, -9, 12)).content() == 3
    assert IntPolynomial((5,)).content() == 5
    assert IntPolynomial.zero().content() == 0


def test_poly_gcd():
    phi6 = cyclotomic(6)
    f = phi6 * IntPolynomial((1, 1))
    g = phi6 * IntPolynomial((-1, 1))
    assert poly_gcd(f, g) == phi6
    # coprime inputs give a constant gcd with the content
    assert poly_gcd(IntPolynomial((1, 1)), IntPolynomial((-1, 1))) == IntPolynomial.one()
    assert poly_gcd(IntPolynomial((2, 2)), IntPolynomial((-4, 4))) == IntPolynomial((2,))
    # gcd divides both inputs exactly
    for n in (4, 9, 15, 30):
        a = cyclotomic(n) * IntPolynomial.x_power_minus_one(2)
        b = cyclotomic(n) * IntPolynomial((3, 0, 1))
        gg = poly_gcd(a, b)
        a.exact_div(gg)
        b.exact_div(gg)
        assert gg.leading > 0
    assert poly_gcd(IntPolynomial.zero(), phi6) == phi6


# ---------------------------------------------------------------------------
# Cyclotomic polynomials


def test_cyclotomic_small():
    assert cyclotomic(1).coeffs == (-1, 1)
    assert cyclotomic(2).coeffs == (1, 1)
    assert cyclotomic(3).coeffs == (1, 1, 1)
    assert cyclotomic(4).coeffs == (1, 0, 1)
    assert cyclotomic(6).coeffs == (1, -1, 1)
    assert cyclotomic(12).coeffs == (1, 0, -1, 0, 1)
    assert cyclotomic(7).coeffs == (1,) * 7


def test_cyclotomic_degree_and_constant_term():
    for n in range(1, 121):
        phi = cyclotomic(n)
        assert phi.degree == totient(n)
        assert phi.leading == 1
        if n >= 2:
            assert phi.evaluate(0) == 1


def test_cyclotomic_product_identity():
    # x^n - 1 = prod_{d | n} Phi_d
    for n in range(1, 101):
        prod = IntPolynomial.one()
        for d in divisors(n):
            prod = prod * cyclotomic(d)
        assert prod == IntPolynomial.x_power_minus_one(n)


def test_cyclotomic_against_mobius_route():
    for n in range(1, 61):
        assert cyclotomic(n) == cyclotomic_by_mobius(n)


def test_cyclotomic_105_has_coefficient_two():
    # first index with a coefficient outside {-1, 0, 1}
    assert cyclotomic(105).coeffs[7] == -2
    assert all(abs(c) <= 1 for n in range(1, 105) for c in cyclotomic(n).coeffs)


# ---------------------------------------------------------------------------
# RationalPolyFraction and the Psi reduction


def test_rational_fraction_normalization():
    one = IntPolynomial.one()
    x2m1 = IntPolynomial.x_power_minus_one(2)
    xm1 = IntPolynomial.x_power_minus_one(1)
    f = RationalPolyFraction(xm1, x2m1)  # (x-1)/(x^2-1) = 1/(x+1)
    assert f.numerator == one
    assert f.denominator == IntPolynomial((1, 1))
    # denominator leading coefficient is kept positive
    g = RationalPolyFraction(one, -x2m1)
    assert g.denominator.leading > 0
    assert RationalPolyFraction(IntPolynomial.zero(), x2m1).numerator.is_zero
    assert RationalPolyFraction(IntPolynomial.zero(), x2m1).denominator == one


def test_rational_fraction_algebra():
    one = IntPolynomial.one()
    a = RationalPolyFraction(IntPolynomial((1, 1)), one)
    b = RationalPolyFraction(one, IntPolynomial((1, 1)))
    assert (a * b) == RationalPolyFraction(one, one)
    assert (a / a) == RationalPolyFraction(one, one)
    assert a.is_polynomial and not b.is_polynomial
    assert b.evaluate(Fraction(1)) == Fraction(1, 2)
    rt = RationalPolyFraction.from_json(b.to_json())
    assert rt == b
    assert str(b) == "(1) / (1 + x)"


def test_psi_by_definition_small():
    one = IntPolynomial.one()
    assert psi_by_definition(1) == RationalPolyFraction(IntPolynomial((1, -1)), one)
    assert psi_by_definition(2) == RationalPolyFraction(one, IntPolynomial((1, 1)))
    # squarefree n with mu = +1 stays polynomial
    assert psi_by_definition(6) == RationalPolyFraction(cyclotomic(6), one)
    assert psi_by_definition(12) == RationalPolyFraction(cyclotomic(6), one)
    assert psi_by_definition(9) == RationalPolyFraction(one, cyclotomic(3))


def test_psi_reduced_matches_definition():
    for n in range(2, 101):
        poly, exponent = psi_reduced(n)
        assert poly == cyclotomic(radical(n))
        assert exponent == mobius(radical(n))
        direct = psi_by_definition(n)
        if exponent == 1:
            assert direct == RationalPolyFraction(poly, IntPolynomial.one())
        else:
            assert direct == RationalPolyFraction(IntPolynomial.one(), poly)


def test_psi_n1_sign_case():
    # Psi_1 = 1 - x = -(x - 1) = -Phi_1: the only n where the identity
    # Psi_n = Phi_rad^mu picks up a sign
    poly, exponent = psi_reduced(1)
    assert poly.coeffs == (1, -1)
    assert exponent == 1
    assert poly == -cyclotomic(1)
    assert psi_by_definition(1) == RationalPolyFraction(-cyclotomic(1), IntPolynomial.one())


def test_psi_mobius_inversion():
    # inverting the defining Moebius convolution recovers 1 - x^n:
    # prod_{d | n} Psi_d(x)^mu(n/d) = (1 - x^n)^mu(n), exact for n <= 100.
    # Note the cofactor exponent mu(n/d); pairing mu with d instead gives
    # the companion product checked in the next test.
    one = IntPolynomial.one()
    unit = RationalPolyFraction(one, one)
    for n in range(1, 101):
        acc = unit
        for d in divisors(n):
            mu = mobius(n // d)
            if mu == 1:
                acc = acc * psi_by_definition(d)
            elif mu == -1:
                acc = acc / psi_by_definition(d)
        mu_n = mobius(n)
        if mu_n == 1:
            expected = RationalPolyFraction(one_minus_x_power(n), one)
        elif mu_n == -1:
            expected = RationalPolyFraction(one, one_minus_x_power(n))
        else:
            expected = unit
        assert acc == expected, n


def test_psi_divisor_weighted_product():
    # the same convolution with mu paired to the divisor itself telescopes
    # to the radical: prod_{d | n} Psi_d(x)^mu(d) = 1 - x^rad(n)
    one = IntPolynomial.one()
    for n in range(1, 101):
        acc = RationalPolyFraction(one, one)
        for d in divisors(n):
            mu = mobius(d)
            if mu == 1:
                acc = acc * psi_by_definition(d)
            elif mu == -1:
                acc = acc / psi_by_definition(d)
        assert acc == RationalPolyFraction(one_minus_x_power(radical(n)), one), n


def test_psi_reduction_lemma_spot_cases():
    # scaling n by p^k collapses: same reduced form when p | n, and the
    # quotient Psi_n(x)/Psi_n(x^p) when p does not divide n
    for p, n in ((2, 6), (3, 6), (5, 10), (2, 9), (3, 25)):
        if n % p == 0:
            for k in (1, 2, 3):
                assert psi_by_definition(p**k * n) == psi_by_definition(n)
        else:
            base = psi_by_definition(n)
            quotient = RationalPolyFraction(
                base.numerator * base.denominator.substitute_power(p),
                base.denominator * base.numerator.substitute_power(p),
            )
            for k in (1, 2, 3):
                assert psi_by_definition(p**k * n) == quotient


def test_psi_full_reduction_sweep_is_fast():
    t0 = time.perf_counter()
    for n in range(2, 301):
        poly, exponent = psi_reduced(n)
        assert psi_by_definition(n) == (
            RationalPolyFraction(poly, IntPolynomial.one())
            if exponent == 1
            else RationalPolyFraction(IntPolynomial.one(), poly)
        )
    assert time.perf_counter() - t0 < 60
