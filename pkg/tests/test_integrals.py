"""Oracle values, the closed form, the recurrence and their cross-checks.

Frozen expected values were computed by hand from antiderivatives, e.g.
integral_0^1 (x-1/2)^2 dx = 1/12 and integral_0^1 (x-1/2)^4 dx = 2*(1/2)^5/5
= 1/80, or from the two-factor value (-1)^(k-1) k! l! / (k+l)! B_{k+l}.
"""

import itertools
import math
from fractions import Fraction

import pytest

from bernint import (
    IntegralSpec,
    ScaledValue,
    bernoulli_polynomial,
    c_term,
    closed_form_integral,
    closed_form_integral_poly,
    oracle_integral,
    oracle_integral_poly,
    recurrence_integral,
    recurrence_residual_indices,
)
from bernint.bernoulli import Polynomial

F = Fraction

UPPERS = (F(1), F(1, 2), F(2), F(-1, 3))

# hand-derived ground truth for integral_0^1 of the product
KNOWN_AT_ONE = {
    (1, 1): F(1, 12),
    (2, 2): F(1, 180),
    (1, 1, 2): F(1, 180),
    (2, 2, 2): F(1, 3780),
    (1, 1, 1, 1): F(1, 80),
    (1, 1, 1, 3): F(-1, 1120),
    (1, 1, 1, 5): F(1, 2520),
    (1, 1, 2, 2): F(11, 15120),
    (1, 1, 2, 4): F(-1, 5400),
}


class TestOracle:
    def test_known_values(self):
        for ks, want in KNOWN_AT_ONE.items():
            assert oracle_integral(ks) == want, ks

    def test_product_of_constants(self):
        x0 = F(-3, 7)
        assert oracle_integral((0, 0, 0), x0) == x0

    def test_matches_direct_polynomial_expansion(self):
        # definition spelled out longhand: poly product then termwise integral
        for ks in [(1, 1), (2, 3), (1, 2, 3), (0, 4, 1, 2)]:
            product = Polynomial([1])
            for k in ks:
                product = product * bernoulli_polynomial(k)
            for upper in UPPERS:
                assert oracle_integral(ks, upper) == product.integrate(0, upper)

    def test_poly_form(self):
        assert oracle_integral_poly((1, 1)) == Polynomial([0, F(1, 4), F(-1, 2), F(1, 3)])
        assert oracle_integral_poly((0,)) == Polynomial([0, 1])
        # (B_3(x) - B_3)/3 with B_3 = 0
        assert oracle_integral_poly((2,)) == Polynomial([0, F(1, 6), F(-1, 2), F(1, 3)])

    def test_poly_evaluates_to_integral(self):
        for ks in [(1,), (2, 2), (1, 2, 3)]:
            anti = oracle_integral_poly(ks)
            assert anti(0) == 0
            for upper in UPPERS:
                assert anti(upper) == oracle_integral(ks, upper)

    def test_rejects_bad_indices(self):
        with pytest.raises(ValueError):
            oracle_integral(())
        with pytest.raises(ValueError):
            oracle_integral((1, -2))


class TestCTerm:
    def test_known_zeros(self):
        assert c_term((1, 1), 1) == 0
        assert c_term((0,), F(9, 5)) == 0
        assert c_term((2,), 1) == 0

    def test_generic_value(self):
        # C_{1,2}(x) = B_1(x)B_2(x) - B_1 B_2 at x = 2: (3/2)(13/6) + 1/12
        assert c_term((1, 2), 2) == F(3, 2) * F(13, 6) + F(1, 12)

    def test_scaled(self):
        ks = (2, 3, 1)
        scale = math.factorial(2) * math.factorial(3)
        assert c_term(ks, 2, scaled=True) * scale == c_term(ks, 2)

    def test_rejects_negative_index(self):
        with pytest.raises(ValueError):
            c_term((1, -1), 1)


class TestClosedForm:
    def test_known_values(self):
        for ks, want in KNOWN_AT_ONE.items():
            assert closed_form_integral(ks) == want, ks

    def test_all_zero_tuple(self):
        x0 = F(4, 9)
        for r in range(1, 6):
            assert closed_form_integral((0,) * r, x0) == x0

    def test_single_factor_reduces_to_antiderivative(self):
        for k in range(8):
            for upper in UPPERS:
                b_next = bernoulli_polynomial(k + 1)
                want = (b_next(upper) - b_next(0)) / (k + 1)
                assert closed_form_integral((k,), upper) == want

    def test_matches_oracle_sweep(self):
        for r in (2, 3, 4):
            for ks in itertools.product(range(4), repeat=r):
                anti = oracle_integral_poly(ks)
                for upper in UPPERS:
                    assert closed_form_integral(ks, upper) == anti(upper), (ks, upper)

    def test_scaled_flag(self):
        ks = (2, 3, 1)
        scale = math.factorial(2) * math.factorial(3)
        for upper in UPPERS:
            scaled = closed_form_integral(ks, upper, scaled=True)
            assert scaled * scale == closed_form_integral(ks, upper)

    def test_poly_form(self):
        assert closed_form_integral_poly((1, 1)) == Polynomial(
            [0, F(1, 4), F(-1, 2), F(1, 3)]
        )
        assert closed_form_integral_poly((0,)) == Polynomial([0, 1])
        got = closed_form_integral_poly((1, 2, 3))
        assert got.degree == 7
        assert got == oracle_integral_poly((1, 2, 3))

    def test_poly_form_sweep(self):
        for r in (1, 2, 3):
            for ks in itertools.product(range(3), repeat=r):
                assert closed_form_integral_poly(ks) == oracle_integral_poly(ks), ks


class TestRecurrence:
    def test_single_step_equals_closed_form(self):
        assert recurrence_integral((1, 1), 1, mu=1) == F(1, 12)

    def test_residual_vanishes_at_max_depth(self):
        assert recurrence_residual_indices((1, 1), 2) == []
        assert recurrence_residual_indices((2, 3, 1), 6) == []
        assert recurrence_residual_indices((2, 3, 1), 5) != []

    def test_depth_independence(self):
        ks = (2, 3, 1)
        want = closed_form_integral(ks, 1, scaled=True)
        for mu in range(1, 7):
            assert recurrence_integral(ks, 1, mu) == want, mu

    def test_depth_independence_off_unit_interval(self):
        ks = (1, 2, 2)
        upper = F(-1, 3)
        want = closed_form_integral(ks, upper, scaled=True)
        for mu in range(1, sum(ks[:-1]) + 2):
            assert recurrence_integral(ks, upper, mu) == want

    def test_single_factor_any_depth(self):
        for mu in (1, 2, 5):
            assert recurrence_integral((3,), F(1, 2), mu) == closed_form_integral(
                (3,), F(1, 2), scaled=True
            )

    def test_rejects_bad_depth(self):
        with pytest.raises(ValueError):
            recurrence_integral((1, 1), 1, mu=0)
        with pytest.raises(ValueError):
            recurrence_residual_indices((1, 1), 0)


class TestRecordTypes:
    def test_spec_validation(self):
        spec = IntegralSpec((1, 2), F(1, 2))
        assert spec.r == 2 and spec.upper == F(1, 2)
        assert IntegralSpec([1, 2]).ks == (1, 2)  # sequences normalize to tuples
        with pytest.raises(ValueError):
            IntegralSpec(())
        with pytest.raises(ValueError):
            IntegralSpec((1, -1))

    def test_scaled_value_roundtrip(self):
        ks = (2, 3, 1)
        scale = math.factorial(2) * math.factorial(3) * math.factorial(1)
        unscaled = closed_form_integral(ks)
        tagged = ScaledValue(closed_form_integral(ks, scaled=True), scaled=True)
        assert tagged.unscaled(ks) == unscaled
        assert tagged.value * scale == unscaled
        assert ScaledValue(unscaled, scaled=False).unscaled(ks) == unscaled


class TestEmptyInterval:
    def test_integral_from_zero_to_zero_vanishes(self):
        for ks in [(0,), (3,), (1, 2), (2, 2, 2)]:
            assert closed_form_integral(ks, 0) == 0
            assert oracle_integral(ks, 0) == 0
            assert recurrence_integral(ks, 0, mu=1) == 0


class TestConcurrency:
    def test_parallel_evaluation_with_cold_tables(self):
        import threading

        upper = F(7, 11)  # not used elsewhere, so the value tables grow here
        work = [
            ks
            for r in (1, 2, 3)
            for ks in itertools.product(range(4), repeat=r)
        ]
        results: dict = {}
        errors = []

        def worker(chunk):
            try:
                for ks in chunk:
                    results[ks] = closed_form_integral(ks, upper)
            except Exception as exc:  # pragma: no cover - failure path
                errors.append(exc)

        chunks = [work[i::6] for i in range(6)]
        threads = [threading.Thread(target=worker, args=(c,)) for c in chunks]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert not errors
        for ks in work:
            assert results[ks] == oracle_integral_poly(ks)(upper), ks


class TestParity:
    def test_odd_sum_vanishes_at_one(self):
        for r in range(1, 5):
            for ks in itertools.product(range(4), repeat=r):
                if sum(ks) % 2 == 1:
                    assert oracle_integral(ks) == 0, ks
                    assert closed_form_integral(ks) == 0, ks

    def test_odd_sum_does_not_vanish_elsewhere(self):
        assert oracle_integral((1,), F(1, 3)) != 0


class TestPermutationSymmetry:
    def test_closed_form_invariant(self):
        for base in [(1, 2), (0, 3, 1), (2, 2, 1, 0), (1, 2, 3)]:
            for upper in (F(1), F(2, 3)):
                want = closed_form_integral(base, upper)
                for perm in set(itertools.permutations(base)):
                    assert closed_form_integral(perm, upper) == want, (perm, upper)
