import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from degdet.exactnum import (
    NEG_INF,
    ExactMatrix,
    Poly,
    det_cofactor,
    det_fraction_free,
    format_rational,
    parse_rational,
    poly_derivative,
    poly_divide_linear,
    poly_shift_scale,
    rat,
)

small_rationals = st.fractions(min_value=-9, max_value=9, max_denominator=4)
nonzero_rationals = small_rationals.filter(lambda q: q != 0)


def square_matrices(max_size):
    return st.integers(min_value=1, max_value=max_size).flatmap(
        lambda n: st.lists(
            st.lists(small_rationals, min_size=n, max_size=n), min_size=n, max_size=n
        ).map(ExactMatrix.from_rows)
    )


class TestRationals:
    @given(small_rationals)
    def test_format_parse_round_trip(self, q):
        assert parse_rational(format_rational(q)) == q

    @pytest.mark.parametrize("text,expected", [("3/4", Fraction(3, 4)), ("-6/4", Fraction(-3, 2)), ("7", 7), ("+2/6", Fraction(1, 3))])
    def test_parse_accepts_p_over_q(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["1.5", "", "a/b", "1/0", "1/", "/2", "1e3", "1 / 2"])
    def test_parse_rejects_non_rational(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    def test_rat_rejects_floats(self):
        with pytest.raises(TypeError):
            rat(0.1)

    @given(small_rationals, small_rationals)
    def test_arithmetic_stays_canonical(self, a, b):
        for value in (a + b, a - b, a * b):
            assert value.denominator > 0
            assert math.gcd(abs(value.numerator), value.denominator) == 1
        assert a - a == Fraction(0, 1)

    @given(small_rationals, small_rationals, small_rationals)
    def test_field_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


class TestDegreeSentinel:
    def test_below_every_integer(self):
        assert NEG_INF < 0
        assert NEG_INF < -(10**9)
        assert not NEG_INF > 0
        assert NEG_INF <= 5

    def test_equal_only_to_itself(self):
        assert NEG_INF == NEG_INF
        assert NEG_INF != 0
        assert NEG_INF != -1

    def test_repr(self):
        assert repr(NEG_INF) == "-inf"


class TestPoly:
    def test_trailing_zeros_stripped(self):
        assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
        assert Poly([0, 0]).is_zero

    def test_zero_degree_is_sentinel(self):
        assert Poly.zero().degree is NEG_INF
        assert not isinstance(Poly.zero().degree, int)
        assert Poly([7]).degree == 0

    def test_derivative_power_rule(self):
        p = Poly([0, 2, -3, 1])  # t^3 - 3t^2 + 2t
        assert poly_derivative(p, 1) == Poly([2, -6, 3])

    def test_derivative_order_zero_is_identity(self):
        p = Poly([5, 0, 7])
        assert poly_derivative(p, 0) == p

    def test_derivative_kills_constants(self):
        assert poly_derivative(Poly([5]), 1).is_zero
        assert poly_derivative(Poly([1, 1]), 3).is_zero

    @given(st.lists(small_rationals, min_size=1, max_size=7), st.integers(min_value=0, max_value=6))
    def test_derivative_degree_drop(self, coeffs, n):
        p = Poly(coeffs)
        if p.is_zero:
            assert p.derivative(n).is_zero
        elif n <= p.degree:
            assert p.derivative(n).degree == p.degree - n
        else:
            assert p.derivative(n).is_zero

    def test_shift_scale_examples(self):
        assert poly_shift_scale(Poly([0, 0, 1]), 0, 2) == Poly([0, 0, 4])
        assert poly_shift_scale(Poly([0, 1]), 1, 1) == Poly([1, 1])

    @given(st.lists(small_rationals, max_size=6))
    def test_shift_scale_identity_substitution(self, coeffs):
        p = Poly(coeffs)
        assert poly_shift_scale(p, 0, 1) == p

    def test_shift_scale_rejects_zero_step(self):
        with pytest.raises(ValueError):
            poly_shift_scale(Poly([1, 1]), 2, 0)

    @given(st.lists(small_rationals, max_size=5), small_rationals, nonzero_rationals)
    def test_shift_scale_inverts(self, coeffs, xi, h):
        p = Poly(coeffs)
        assert poly_shift_scale(poly_shift_scale(p, xi, h), -xi / h, 1 / h) == p

    @given(st.lists(small_rationals, max_size=5), small_rationals, nonzero_rationals)
    def test_shift_scale_agrees_with_evaluation(self, coeffs, xi, h):
        p = Poly(coeffs)
        shifted = poly_shift_scale(p, xi, h)
        for t in (-2, 0, 1, Fraction(1, 3)):
            assert shifted(t) == p(xi + rat(t) * h)

    def test_divide_linear_examples(self):
        assert poly_divide_linear(Poly([0, 2, -3, 1]), 1) == Poly([0, -2, 1])
        assert poly_divide_linear(Poly([-5, 1]), 5) == Poly([1])
        assert poly_divide_linear(Poly([0, 0, 1]), 0) == Poly([0, 1])

    @given(st.lists(small_rationals, min_size=1, max_size=5), small_rationals)
    def test_divide_linear_remultiplies(self, coeffs, root):
        product = Poly(coeffs) * Poly.linear_root(root)
        assert poly_divide_linear(product, root) * Poly.linear_root(root) == product

    def test_divide_linear_rejects_non_root(self):
        with pytest.raises(ValueError):
            poly_divide_linear(Poly([1, 1]), 5)

    def test_string_rendering(self):
        assert str(Poly([2, -6, 3])) == "3*t^2 - 6*t + 2"
        assert str(Poly.zero()) == "0"


class TestExactMatrix:
    def test_entry_count_enforced(self):
        with pytest.raises(ValueError):
            ExactMatrix(2, 2, [1, 2, 3])
        with pytest.raises(ValueError):
            ExactMatrix.from_rows([[1, 2], [3]])

    def test_dimensions_positive(self):
        with pytest.raises(ValueError):
            ExactMatrix(0, 1, [])

    def test_det_2x2_example(self):
        m = ExactMatrix.from_rows([[2, 3], [5, 6]])
        assert det_fraction_free(m) == -3
        assert det_cofactor(m) == -3

    @pytest.mark.parametrize("n", range(1, 6))
    def test_det_identity(self, n):
        assert det_fraction_free(ExactMatrix.identity(n)) == 1

    def test_det_repeated_row_vanishes(self):
        m = ExactMatrix.from_rows([[1, 2, 3], [4, 5, 6], [1, 2, 3]])
        assert det_fraction_free(m) == 0

    def test_det_rejects_non_square(self):
        m = ExactMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        with pytest.raises(ValueError):
            det_fraction_free(m)
        with pytest.raises(ValueError):
            det_cofactor(m)

    @given(square_matrices(4))
    def test_bareiss_matches_cofactor(self, m):
        assert det_fraction_free(m) == det_cofactor(m)

    def test_bareiss_matches_cofactor_at_size_five(self):
        # pivoting gets exercised by the zero diagonal
        m = ExactMatrix.from_rows(
            [
                [0, 2, Fraction(1, 2), -1, 3],
                [1, 0, 4, Fraction(-2, 3), 0],
                [2, 2, 0, 1, -5],
                [Fraction(3, 4), -1, 1, 0, 2],
                [0, 1, -3, 2, 0],
            ]
        )
        assert det_fraction_free(m) == det_cofactor(m)

    def test_bareiss_matches_cofactor_on_seeded_sweep(self):
        from degdet.rng import SplitMix64

        rng = SplitMix64(17)
        for n in range(1, 6):
            for _ in range(10):
                m = ExactMatrix(n, n, [rng.rational() for _ in range(n * n)])
                assert det_fraction_free(m) == det_cofactor(m)

    def test_singular_via_elimination(self):
        m = ExactMatrix.from_rows([[1, 2], [2, 4]])
        assert det_fraction_free(m) == 0
