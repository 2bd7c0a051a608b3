"""Exact cyclotomic arithmetic and the table-prime search."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charcorr.cyclotomic import (
    Cyc,
    cyclotomic_polynomial,
    dixon_prime,
    euler_phi,
    is_prime,
    primitive_root,
    render_cyc,
    root_of_unity,
    sqrt_minus3,
)

CONDUCTORS = (3, 4, 8, 12, 24)


def zeta(n, k=1):
    return root_of_unity(n, k)


def cyc_from_coeffs(n, coeffs):
    """Z-linear combination of zeta_n powers."""
    acc = Cyc.rational(0)
    for k, c in enumerate(coeffs):
        if c:
            acc = acc + c * zeta(n, k)
    return acc


small_ints = st.integers(min_value=-6, max_value=6)


def triples(n):
    return st.tuples(*( [st.lists(small_ints, min_size=n, max_size=n)] * 3 ))


# -- pinned examples ----------------------------------------------------------------


def test_zeta3_relation():
    assert zeta(3) + zeta(3, 2) == -1


def test_pinned_sqrt_minus3():
    s = sqrt_minus3()
    assert s == 1 + 2 * zeta(3)
    assert s * s == -3


def test_galois_and_conj_on_zeta8():
    assert zeta(8).galois(3) == zeta(8, 3)
    assert zeta(8).conj() == zeta(8, 7)


def test_galois_requires_coprime():
    with pytest.raises(ValueError):
        zeta(8).galois(2)


def test_dixon_prime_examples():
    assert dixon_prime(12, 24) == 13
    assert dixon_prime(1, 1) == 3
    assert dixon_prime(21, 21) == 43


def test_dixon_prime_contract():
    for e, n in ((12, 24), (36, 648), (7, 7), (4, 8), (21, 21)):
        q = dixon_prime(e, n)
        assert is_prime(q)
        assert q % e == 1
        assert q * q > 4 * n


def test_primitive_root_smallest():
    assert primitive_root(13) == 2
    assert primitive_root(7) == 3
    assert primitive_root(43) == 3
    g = primitive_root(73)
    assert all(any(pow(h, (73 - 1) // f, 73) == 1 for f in (2, 3)) for h in range(2, g))


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert euler_phi(36) == 12


def test_conductor_two_mod_four_is_folded():
    # zeta_6 = -zeta_3^2 = 1 + zeta_3 in the power basis
    z6 = zeta(6)
    assert z6.n == 3
    assert z6 == 1 + zeta(3)
    assert zeta(2) == -1
    assert zeta(1) == 1


def test_rational_collapse_and_predicates():
    v = zeta(4) * zeta(4)
    assert v.is_rational and v.as_fraction() == -1
    assert (zeta(5) - zeta(5)).is_zero()
    with pytest.raises(ValueError):
        zeta(5).as_fraction()


# -- rendering (part of the golden surface) --------------------------------------------


def test_render_examples():
    assert render_cyc(1 + 2 * zeta(3)) == "1+2*z3"
    assert render_cyc(Cyc.rational(Fraction(-1, 3))) == "-1/3"
    assert render_cyc(zeta(8, 3)) == "z8^3"
    assert render_cyc(-zeta(3)) == "-z3"
    assert render_cyc(Cyc.rational(0)) == "0"
    assert render_cyc(zeta(6)) == "1+z3"
    assert render_cyc(Fraction(1, 2) * zeta(8)) == "1/2*z8"


def test_render_uses_minimal_conductor():
    # an element of Q(zeta_12) that actually lies in Q(zeta_4)
    v = zeta(12, 3)
    assert render_cyc(v) == "z4"
    w = zeta(12) * zeta(12, 11)
    assert render_cyc(w) == "1"


def test_sort_key_puts_one_first():
    vals = [zeta(3), Cyc.rational(1), Cyc.rational(-1), zeta(4)]
    vals.sort(key=lambda v: v.sort_key())
    assert vals[0] == 1


# -- field axioms (property tests) -------------------------------------------------------


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(CONDUCTORS), st.data())
def test_ring_axioms(n, data):
    phi = euler_phi(n)
    a, b, c = (cyc_from_coeffs(n, data.draw(st.lists(small_ints, min_size=phi, max_size=phi)))
               for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    assert a * 1 == a


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(CONDUCTORS), st.data())
def test_conj_is_ring_homomorphism(n, data):
    phi = euler_phi(n)
    a, b = (cyc_from_coeffs(n, data.draw(st.lists(small_ints, min_size=phi, max_size=phi)))
            for _ in range(2))
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert a.conj().conj() == a


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(CONDUCTORS), st.integers(min_value=1, max_value=23))
def test_galois_permutes_roots_and_fixes_rationals(n, k):
    from math import gcd

    if gcd(k, n) != 1:
        k = 1
    for i in range(n):
        assert zeta(n, i).galois(k) == zeta(n, i * k)
    assert Cyc.rational(Fraction(7, 3)).galois(k) == Fraction(7, 3)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(CONDUCTORS), st.data())
def test_roundtrip_canonical_form(n, data):
    phi = euler_phi(n)
    coeffs = data.draw(st.lists(small_ints, min_size=phi, max_size=phi))
    v = cyc_from_coeffs(n, coeffs)
    # the power-basis coefficients ARE the canonical form below phi(n)
    assert v == Cyc(n, [Fraction(c) for c in coeffs])


def test_cross_conductor_equality_and_hash():
    a = zeta(3)
    b = zeta(12, 4)  # same value at conductor 12
    assert a == b
    assert hash(a) == hash(b)
    assert len({a, b}) == 1


def test_to_complex_approximation():
    v = 1 + 2 * zeta(3)
    approx = v.to_complex()
    assert abs(approx - complex(0, 3 ** 0.5)) < 1e-12
