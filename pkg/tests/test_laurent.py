"""Exact Laurent arithmetic: ring axioms, division, pointedness, serialization."""

import random

import pytest

from rank2greedy.laurent import (
    LaurentPoly2,
    NotDivisibleError,
    EmptyPolynomialError,
    ONE,
    X1,
    X2,
)


def poly(d):
    return LaurentPoly2(d)


def random_poly(rng, max_terms=5, span=4, coeff=9):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = (rng.randint(-span, span), rng.randint(-span, span))
        terms[e] = rng.randint(-coeff, coeff)
    return LaurentPoly2(terms)


class TestAddition:
    def test_cancellation(self):
        assert (ONE + X1) + (-X1) == ONE

    def test_identity(self):
        f = poly({(2, -1): 3, (-1, 0): 7})
        assert f + LaurentPoly2.zero() == f

    def test_like_term_merge(self):
        m = LaurentPoly2.monomial(-1, -1)
        assert m + m == LaurentPoly2.monomial(-1, -1, 2)


class TestMultiplication:
    def test_distributivity_example(self):
        assert (ONE + X1) * (ONE + X2) == poly({(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1})

    def test_exponent_shift(self):
        assert (LaurentPoly2.monomial(-1, 0) + X2) * X1 == ONE + X1 * X2

    def test_identity(self):
        f = poly({(2, 3): -4, (0, -2): 1})
        assert f * ONE == f

    def test_power(self):
        assert (ONE + X1) ** 3 == poly({(0, 0): 1, (1, 0): 3, (2, 0): 3, (3, 0): 1})
        assert (ONE + X1) ** 0 == ONE


class TestExactDivision:
    def test_monomial_factor(self):
        b = 3
        f = LaurentPoly2.monomial(b, 1) + X2
        assert f.exact_div(X2) == X1 ** b + ONE

    def test_monomial_divisor_is_a_unit(self):
        # dividing by x1 always succeeds in the Laurent ring
        c = 2
        q = (X2 ** c + ONE).exact_div(X1)
        assert q == poly({(-1, 2): 1, (-1, 0): 1})
        assert q * X1 == X2 ** c + ONE

    def test_unit_normalization_mixed(self):
        b, c = 3, 2
        f = (X2 ** c + ONE) ** b + X1 ** b
        q = f.exact_div(X2)
        assert q * X2 == f

    def test_not_divisible_non_unit(self):
        with pytest.raises(NotDivisibleError):
            (X2 ** 2 + ONE).exact_div(X1 + ONE)

    def test_not_divisible_expanded(self):
        b, c = 3, 2
        f = (X2 ** c + ONE) ** b + X1 ** b
        with pytest.raises(NotDivisibleError):
            f.exact_div(X2 ** c + ONE)

    def test_zero_dividend(self):
        assert LaurentPoly2.zero().exact_div(X1 + ONE) == LaurentPoly2.zero()

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            ONE.exact_div(LaurentPoly2.zero())

    def test_round_trip_randomized(self):
        rng = random.Random(20130322)
        done = 0
        while done < 300:
            f = random_poly(rng)
            g = random_poly(rng)
            if g.is_zero:
                continue
            done += 1
            assert (f * g).exact_div(g) == f

    def test_random_non_multiples_rejected(self):
        rng = random.Random(7)
        rejected = 0
        for _ in range(300):
            f = random_poly(rng)
            g = random_poly(rng, max_terms=3)
            if g.is_zero or f.is_zero:
                continue
            try:
                q = f.exact_div(g)
            except NotDivisibleError:
                rejected += 1
            else:
                assert q * g == f
        assert rejected > 0


class TestRingAxioms:
    def test_axioms_randomized(self):
        rng = random.Random(42)
        for _ in range(200):
            f, g, h = (random_poly(rng) for _ in range(3))
            assert f + g == g + f
            assert (f + g) + h == f + (g + h)
            assert f * g == g * f
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h


class TestMinCoefficient:
    def test_mixed_signs(self):
        assert poly({(0, 0): 1, (1, 0): 2, (0, 1): -1}).min_coefficient() == -1

    def test_positive(self):
        c = 2
        f = LaurentPoly2.monomial(-1, 0) * (ONE + X2 ** c)
        assert f.min_coefficient() == 1

    def test_zero_polynomial(self):
        with pytest.raises(EmptyPolynomialError):
            LaurentPoly2.zero().min_coefficient()


def pointed_at_oracle(f, b, c, bound=12):
    """Brute-force scan over candidate base points."""
    hits = []
    for a1 in range(-bound, bound + 1):
        for a2 in range(-bound, bound + 1):
            if f.coefficient(-a1, -a2) != 1:
                continue
            if all((e1 + a1) >= 0 and (e1 + a1) % b == 0
                   and (e2 + a2) >= 0 and (e2 + a2) % c == 0
                   for (e1, e2), _ in f.terms()):
                hits.append((a1, a2))
    assert len(hits) <= 1
    return hits[0] if hits else None


class TestPointedness:
    def test_example_scan(self):
        b, c = 3, 2
        f = LaurentPoly2.monomial(-1, -1) * (ONE + X1 ** b + X2 ** c)
        assert f.pointed_at(b, c) == (1, 1)
        assert pointed_at_oracle(f, b, c) == (1, 1)

    def test_constant_one(self):
        assert ONE.pointed_at(3, 2) == (0, 0)
        assert ONE.pointed_at(5, 1) == (0, 0)

    def test_wrong_corner_coefficient(self):
        b, c = 3, 2
        f = poly({(0, 0): 2, (b, 0): 1})
        assert f.pointed_at(b, c) is None
        assert pointed_at_oracle(f, b, c) is None

    def test_oracle_agreement_randomized(self):
        rng = random.Random(11)
        for b, c in [(3, 2), (5, 1), (2, 3)]:
            for _ in range(150):
                f = random_poly(rng, max_terms=4, span=3, coeff=2)
                if f.is_zero:
                    continue
                assert f.pointed_at(b, c) == pointed_at_oracle(f, b, c)


class TestSerialization:
    def test_round_trip(self):
        rng = random.Random(99)
        for _ in range(100):
            f = random_poly(rng)
            assert LaurentPoly2.from_json_dict(f.to_json_dict()) == f

    def test_big_coefficients_survive(self):
        f = poly({(-3, 5): 10 ** 30, (0, 0): -(2 ** 80)})
        data = f.to_json_dict()
        assert data["terms"][0]["coeff"] == str(10 ** 30)
        assert LaurentPoly2.from_json_dict(data) == f

    def test_canonical_order(self):
        f = poly({(1, 0): 1, (-1, 2): 2, (-1, -1): 3})
        exps = [(t["e1"], t["e2"]) for t in f.to_json_dict()["terms"]]
        assert exps == sorted(exps)
