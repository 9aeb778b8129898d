"""Field-axiom and serialization tests for exact cyclotomic scalars."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from brpickit.cyclo import CycloScalar, cyclotomic_poly, euler_phi, divisors

CONDUCTORS = [1, 2, 3, 4, 6, 8, 12]


def test_euler_phi_small():
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(7) == [1, 7]
    assert divisors(1) == [1]


def test_cyclotomic_polys_match_known_values():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    # the first conductor whose cyclotomic polynomial has a coefficient not in {-1,0,1}
    assert any(abs(c) > 1 for c in cyclotomic_poly(105))


def test_product_of_cyclotomics_is_x_n_minus_1():
    for n in CONDUCTORS + [9, 10, 15]:
        prod = [Fraction(1)]
        for d in divisors(n):
            phi_d = cyclotomic_poly(d)
            new = [Fraction(0)] * (len(prod) + len(phi_d) - 1)
            for i, a in enumerate(prod):
                for j, b in enumerate(phi_d):
                    new[i + j] += a * b
            prod = new
        expected = [Fraction(0)] * (n + 1)
        expected[0], expected[n] = Fraction(-1), Fraction(1)
        assert prod == expected


def _rand_scalar(draw, N):
    phi = euler_phi(N)
    nums = draw(st.lists(st.integers(-9, 9), min_size=phi, max_size=phi))
    dens = draw(st.lists(st.integers(1, 9), min_size=phi, max_size=phi))
    return CycloScalar(N, [Fraction(a, b) for a, b in zip(nums, dens)])


@st.composite
def scalars(draw):
    N = draw(st.sampled_from(CONDUCTORS))
    return _rand_scalar(draw, N)


@st.composite
def scalar_triples_same_field(draw):
    N = draw(st.sampled_from(CONDUCTORS))
    return tuple(_rand_scalar(draw, N) for _ in range(3))


@given(scalar_triples_same_field())
@settings(max_examples=60)
def test_ring_axioms(triple):
    a, b, c = triple
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    one = CycloScalar.one(a.N)
    zero = CycloScalar.zero(a.N)
    assert a * one == a
    assert a + zero == a
    assert a + (-a) == zero


@given(scalars())
@settings(max_examples=60)
def test_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inv()
    else:
        assert a * a.inv() == CycloScalar.one(a.N)


def test_root_of_unity_has_exact_order():
    for N in CONDUCTORS:
        z = CycloScalar.root_of_unity(N)
        one = CycloScalar.one(N)
        p = z
        for k in range(1, N):
            assert p != one, f"zeta_{N} had order {k} < {N}"
            p = p * z
        assert p == one


def test_roots_of_unity_multiply_by_exponent():
    z = CycloScalar.root_of_unity(12)
    for a in range(12):
        for b in range(12):
            assert CycloScalar.root_of_unity(12, a) * CycloScalar.root_of_unity(12, b) \
                == CycloScalar.root_of_unity(12, (a + b) % 12)


def test_cross_conductor_identities():
    # zeta_2 = -1, zeta_4^2 = -1, zeta_6 = -zeta_3^2
    assert CycloScalar.root_of_unity(2) == CycloScalar.from_rational(-1)
    assert CycloScalar.root_of_unity(4) ** 2 == CycloScalar.from_rational(-1)
    z3 = CycloScalar.root_of_unity(3)
    z6 = CycloScalar.root_of_unity(6)
    assert z6 == -(z3 ** 2)
    assert z6 ** 3 == CycloScalar.from_rational(-1)
    # mixing conductors 4 and 6 lands in conductor 12
    z4 = CycloScalar.root_of_unity(4)
    s = z4 * z6
    assert s.N == 12
    assert s == CycloScalar.root_of_unity(12, 5)


@given(scalars())
@settings(max_examples=60)
def test_lift_preserves_value_and_arithmetic(a):
    M = a.N * 3
    b = a.lift(M)
    assert b.N == M
    assert a == b
    assert (a + a).lift(M) == b + b
    assert (a * a).lift(M) == b * b


def test_lift_is_injective_on_distinct_values():
    a = CycloScalar.root_of_unity(4)
    b = CycloScalar.root_of_unity(4, 3)
    assert a != b
    assert a.lift(12) != b.lift(12)


@given(scalars())
@settings(max_examples=60)
def test_string_round_trip(a):
    assert CycloScalar.from_string(a.to_string()) == a
    assert CycloScalar.from_string(a.to_string()).N == a.N


@given(scalars())
@settings(max_examples=60)
def test_json_round_trip(a):
    b = CycloScalar.from_json(a.to_json())
    assert b == a and b.N == a.N


def test_string_format_examples():
    z = CycloScalar.root_of_unity(4)
    assert z.to_string() == "1*z@4"
    assert CycloScalar.zero(3).to_string() == "0@3"
    half = CycloScalar.from_rational(Fraction(1, 2), 4)
    assert (half + z).to_string() == "1/2 + 1*z@4"
    assert CycloScalar.from_string("-1/2 + -2*z^3@8") == CycloScalar(
        8, [Fraction(-1, 2), 0, 0, -2])


def test_int_interop():
    z = CycloScalar.root_of_unity(8)
    assert 1 + z == z + 1
    assert 2 * z == z + z
    assert (1 - z) + (z - 1) == CycloScalar.zero(8)
    assert 1 / CycloScalar.from_rational(Fraction(3, 5)) == CycloScalar.from_rational(Fraction(5, 3))


def test_pow_negative_exponent():
    z = CycloScalar.root_of_unity(8, 3)
    assert z ** -1 == CycloScalar.root_of_unity(8, 5)
    assert z ** -2 == CycloScalar.root_of_unity(8, 2)
