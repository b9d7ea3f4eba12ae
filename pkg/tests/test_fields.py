"""Finite-field arithmetic: canonical moduli, axioms, Frobenius, degrees."""

import random

import pytest

from delpezzo.fields import (
    FieldSpec,
    FFElem,
    element_degree,
    element_of_degree,
    elements_of_degree,
    field_elements,
    frobenius,
    frobenius_orbit,
    from_index,
    from_int,
    gen,
    in_base_field,
    make_field,
    minimal_polynomial,
    one,
    parse_field_literal,
    subfield_elements,
    zero,
    _is_irreducible,
)


class TestCanonicalModuli:
    # Frozen values, each recomputed by hand: scan monic degree-m polynomials
    # by ascending integer index sum(c_i p^i) and keep the first irreducible.
    def test_f2(self):
        assert make_field(2, 1, 1).modulus == (0, 1)  # x

    def test_f4(self):
        assert make_field(2, 1, 2).modulus == (1, 1, 1)  # x^2+x+1

    def test_f8(self):
        assert make_field(2, 1, 3).modulus == (1, 1, 0, 1)  # x^3+x+1

    def test_f16(self):
        assert make_field(2, 1, 4).modulus == (1, 1, 0, 0, 1)  # x^4+x+1

    def test_f9(self):
        assert make_field(3, 1, 2).modulus == (1, 0, 1)  # x^2+1

    def test_f25(self):
        # x^2+2 has root? 1->3=1+2, 2->4+2=1, 3->11=1, 4->18=3: none; x^2+1
        # has no root mod 5 either?  2^2+1=5=0 -> root!  So x^2+2 is first.
        assert make_field(5, 1, 2).modulus == (2, 0, 1)

    def test_same_modulus_for_either_base_marking(self):
        assert make_field(2, 2, 2).modulus == make_field(2, 1, 4).modulus

    def test_modulus_is_irreducible_for_a_sample(self):
        for p, e, n in [(2, 1, 5), (3, 1, 3), (2, 2, 3), (3, 2, 2), (7, 1, 2)]:
            spec = make_field(p, e, n)
            assert _is_irreducible(spec.modulus, p)
            assert spec.q == p**e and spec.n == n and spec.size == p ** (e * n)

    def test_validation(self):
        with pytest.raises(ValueError):
            FieldSpec(4, 1, (0, 1), 1)  # 4 not prime
        with pytest.raises(ValueError):
            FieldSpec(2, 2, (1, 1, 1), 3)  # 3 does not divide 2
        with pytest.raises(ValueError):
            FieldSpec(2, 2, (1, 0, 1), 1)  # x^2+1 = (x+1)^2 reducible
        with pytest.raises(ValueError):
            FieldSpec(2, 2, (1, 1), 1)  # wrong degree


class TestLiterals:
    def test_round_trip(self):
        spec = make_field(2, 3, 2)
        assert spec.literal() == "2^6:base=3"
        assert parse_field_literal("2^6:base=3") == spec

    def test_plain_prime(self):
        assert parse_field_literal("5") == make_field(5, 1, 1)

    def test_prime_power_is_its_own_base(self):
        spec = parse_field_literal("2^2")
        assert spec.base_degree == 2 and spec.n == 1 and spec.q == 4

    def test_garbage(self):
        with pytest.raises(ValueError):
            parse_field_literal("2^4:deg=2")
        with pytest.raises(ValueError):
            parse_field_literal("abc")


class TestFieldAxioms:
    SPECS = [(2, 1, 2), (3, 1, 2), (2, 1, 3), (5, 1, 2), (2, 2, 2), (3, 2, 1)]

    def test_axioms_on_random_triples(self):
        rng = random.Random(414213)
        for p, e, n in self.SPECS:
            spec = make_field(p, e, n)
            for _ in range(40):
                a, b, c = (from_index(spec, rng.randrange(spec.size)) for _ in range(3))
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c
                assert a + b == b + a and a * b == b * a
                assert a + zero(spec) == a and a * one(spec) == a
                assert a - a == zero(spec)
                if a != zero(spec):
                    assert a * a.inverse() == one(spec)
                    assert (a / a) == one(spec)

    def test_zero_inverse_fails(self):
        with pytest.raises(ZeroDivisionError):
            zero(make_field(2, 1, 2)).inverse()

    def test_pow_and_mul_agree(self):
        spec = make_field(3, 1, 2)
        w = gen(spec)
        assert w**0 == one(spec)
        assert w**5 == w * w * w * w * w
        assert w**-1 == w.inverse()

    def test_multiplicative_order_divides_size_minus_one(self):
        spec = make_field(2, 1, 4)
        for x in field_elements(spec):
            if x != zero(spec):
                assert x ** (spec.size - 1) == one(spec)


class TestFrobenius:
    def test_is_additive_and_multiplicative(self):
        rng = random.Random(562373)
        for p, e, n in [(2, 1, 3), (3, 1, 2), (2, 2, 2), (3, 2, 2)]:
            spec = make_field(p, e, n)
            for _ in range(30):
                a = from_index(spec, rng.randrange(spec.size))
                b = from_index(spec, rng.randrange(spec.size))
                assert frobenius(a + b) == frobenius(a) + frobenius(b)
                assert frobenius(a * b) == frobenius(a) * frobenius(b)
                assert frobenius(a) == a**spec.q

    def test_fixed_set_is_exactly_the_base_field(self):
        for p, e, n in [(2, 1, 3), (2, 2, 2), (3, 1, 2), (3, 2, 1), (2, 1, 4)]:
            spec = make_field(p, e, n)
            fixed = [x for x in field_elements(spec) if frobenius(x) == x]
            assert len(fixed) == spec.q
            assert fixed == list(subfield_elements(spec))
            assert all(in_base_field(x) for x in fixed)

    def test_relative_frobenius_power_cycles(self):
        spec = make_field(2, 2, 3)  # F_64 over F_4
        x = gen(spec)
        y = x
        for _ in range(spec.n):
            y = frobenius(y)
        assert y == x
        assert frobenius(x, spec.n) == x
        assert frobenius(x, 2) == frobenius(frobenius(x))

    def test_base_field_marking_changes_frobenius(self):
        over_f2 = make_field(2, 1, 4)
        over_f4 = make_field(2, 2, 2)
        x2, x4 = gen(over_f2), gen(over_f4)
        assert frobenius(x2) == x2**2
        assert frobenius(x4) == x4**4


class TestElementDegrees:
    def test_degree_one_is_one(self):
        for p, e, n in [(2, 1, 1), (2, 1, 3), (3, 1, 2), (2, 2, 2)]:
            spec = make_field(p, e, n)
            assert element_of_degree(spec, 1) == one(spec)

    def test_f8_degree_three_is_x(self):
        spec = make_field(2, 1, 3)
        assert element_of_degree(spec, 3) == gen(spec)

    def test_f4_degree_two_is_x(self):
        spec = make_field(2, 1, 2)
        assert element_of_degree(spec, 2) == gen(spec)

    def test_f9_degree_two_is_x(self):
        spec = make_field(3, 1, 2)
        assert element_of_degree(spec, 2) == gen(spec)

    def test_l_must_divide_relative_degree(self):
        spec = make_field(2, 1, 4)
        with pytest.raises(ValueError):
            element_of_degree(spec, 3)

    def test_degree_counts_match_moebius_counts(self):
        # F_{2^6}/F_2: counts of elements of exact degree l are the familiar
        # irreducible-root counts: 2, 2, 6, 12, 0?.. recompute: |F_2|=2,
        # deg2: |F_4|-|F_2|=2, deg3: |F_8|-|F_2|=6, deg6: 64-8-4+2=54.
        spec = make_field(2, 1, 6)
        counts = {}
        for x in field_elements(spec):
            counts[element_degree(x)] = counts.get(element_degree(x), 0) + 1
        assert counts == {1: 2, 2: 2, 3: 6, 6: 54}

    def test_enumeration_is_exact_and_ascending(self):
        spec = make_field(2, 2, 2)  # F_16 over F_4
        listed = list(elements_of_degree(spec, 2))
        brute = [
            x for x in field_elements(spec)
            if x != zero(spec) and element_degree(x) == 2
        ]
        # the l == n path scans ascending; brute scan is ascending by design
        assert listed == brute
        assert len(listed) == 16 - 4

    def test_enumeration_subfield_path(self):
        spec = make_field(2, 1, 6)  # l=2 < n: kernel-subspace path
        listed = list(elements_of_degree(spec, 2))
        brute = [
            x for x in field_elements(spec)
            if x != zero(spec) and element_degree(x) == 2
        ]
        assert listed == brute and len(listed) == 2

    def test_orbit_size_equals_degree(self):
        spec = make_field(3, 1, 2)
        for x in field_elements(spec):
            assert len(frobenius_orbit(x)) == element_degree(x)


class TestMinimalPolynomial:
    def test_omega_in_f4(self):
        spec = make_field(2, 1, 2)
        w = gen(spec)
        mu = minimal_polynomial(w)
        assert [c.coeffs for c in mu] == [(1,), (1,), (1,)]  # t^2+t+1

    def test_base_element(self):
        spec = make_field(3, 1, 2)
        two = from_int(spec, 2)
        mu = minimal_polynomial(two)
        assert [c.coeffs for c in mu] == [(1,), (1,)]  # t - 2 = t + 1

    def test_roots_are_exactly_the_frobenius_orbit(self):
        spec = make_field(2, 1, 4)
        for t in [2, 5, 9]:
            x = from_index(spec, t)
            mu = minimal_polynomial(x)
            roots = [
                y for y in field_elements(spec)
                if sum((c * y**i for i, c in enumerate(mu)), zero(spec)) == zero(spec)
            ]
            assert set(roots) == set(frobenius_orbit(x))
            assert len(mu) - 1 == element_degree(x)
            assert mu[-1] == one(spec)

    def test_evaluates_to_zero(self):
        rng = random.Random(73205)
        spec = make_field(3, 1, 3)
        for _ in range(15):
            x = from_index(spec, rng.randrange(spec.size))
            mu = minimal_polynomial(x)
            value = sum((c * x**i for i, c in enumerate(mu)), zero(spec))
            assert value == zero(spec)
