from fractions import Fraction

import pytest

from degdet.combinat import binomial
from degdet.degreematrix import (
    DegreeMatrixSpec,
    alternating_weighted_sum,
    build_A,
    build_A_sub,
    det_A_closed_form,
    det_A_sub_closed_form,
    sigma_ell,
    sub_column_offsets,
)
from degdet.exactnum import det_cofactor, det_fraction_free
from degdet.rng import SplitMix64
from degdet.vandermonde import vandermonde_product


def forward_difference(values, order):
    out = list(values)
    for _ in range(order):
        out = [b - a for a, b in zip(out, out[1:])]
    return out[0]


class TestBuildA:
    def test_power_block_and_value_row(self):
        m = build_A(DegreeMatrixSpec(2, 0, [1, 1, 1]))
        assert m.to_rows() == [[1, 2, 3], [4, 5, 6], [1, 1, 1]]

    def test_exponent_zero_collapses_power_block(self):
        m = build_A(DegreeMatrixSpec(1, 0, [Fraction(2, 3), -5]))
        assert m.to_rows() == [[1, 1], [Fraction(2, 3), -5]]

    def test_weighted_last_row(self):
        m = build_A(DegreeMatrixSpec(2, 1, [1, 1, 1]))
        assert list(m.row(2)) == [0, 1, 2]

    def test_zero_to_the_zero_is_one(self):
        m = build_A(DegreeMatrixSpec(2, 0, [7, 0, 0]))
        assert m.entry(2, 0) == 7

    def test_value_vector_length_enforced(self):
        with pytest.raises(ValueError):
            DegreeMatrixSpec(2, 0, [1, 1])

    def test_ell_zero_rejected(self):
        with pytest.raises(ValueError):
            DegreeMatrixSpec(0, 0, [1])


class TestBuildASub:
    @pytest.mark.parametrize(
        "ell,kappa,rows",
        [
            (2, 1, [[2, 3], [5, 6]]),
            (2, 2, [[1, 3], [4, 6]]),
            (1, 1, [[1]]),
        ],
    )
    def test_examples(self, ell, kappa, rows):
        assert build_A_sub(ell, kappa).to_rows() == rows

    def test_kappa_range_enforced(self):
        with pytest.raises(ValueError):
            build_A_sub(2, 0)
        with pytest.raises(ValueError):
            build_A_sub(2, 4)

    def test_matches_column_deletion(self):
        # removing the last row and the kappa-th column of the full matrix
        for ell in range(1, 5):
            full = build_A(DegreeMatrixSpec(ell, 0, [0] * (ell + 1)))
            for kappa in range(1, ell + 2):
                expected = [
                    [full.entry(i, j) for j in range(ell + 1) if j != kappa - 1]
                    for i in range(ell)
                ]
                assert build_A_sub(ell, kappa).to_rows() == expected


class TestSigmaEll:
    @pytest.mark.parametrize("ell,expected", [(1, -1), (2, -3), (3, 512)])
    def test_frozen_values(self, ell, expected):
        assert sigma_ell(ell) == expected

    def test_cross_validated_against_brute_determinant(self):
        # at kappa = 1 the binomial weight is 1, so the minor determinant
        # recovers sigma_ell up to the parity sign
        for ell in range(1, 6):
            assert sigma_ell(ell) == (-1) ** ell * det_cofactor(build_A_sub(ell, 1))

    def test_rejects_ell_zero(self):
        with pytest.raises(ValueError):
            sigma_ell(0)


class TestSubDeterminant:
    @pytest.mark.parametrize("ell,kappa,expected", [(2, 1, -3), (2, 2, -6), (1, 1, 1)])
    def test_examples(self, ell, kappa, expected):
        assert det_A_sub_closed_form(ell, kappa) == expected
        assert det_fraction_free(build_A_sub(ell, kappa)) == expected

    def test_closed_form_matches_elimination_exhaustively(self):
        for ell in range(1, 7):
            for kappa in range(1, ell + 2):
                assert det_fraction_free(build_A_sub(ell, kappa)) == det_A_sub_closed_form(ell, kappa)

    def test_closed_form_matches_cofactor_oracle(self):
        for ell in range(1, 6):
            for kappa in range(1, ell + 2):
                assert det_cofactor(build_A_sub(ell, kappa)) == det_A_sub_closed_form(ell, kappa)

    def test_single_term_vandermonde_factorization(self):
        # the minor equals the parity sign times the binomial-weight product
        # times the two classical Vandermonde products of its defining data
        for ell in range(1, 6):
            alpha = [(i - 1) * (ell + 1) for i in range(1, ell + 1)]
            weight = 1
            for j in range(ell):
                weight *= binomial(ell - 1, j)
            sign = (-1) ** (ell * (ell - 1) // 2)
            for kappa in range(1, ell + 2):
                offsets = sub_column_offsets(ell, kappa)
                expected = sign * weight * vandermonde_product(alpha) * vandermonde_product(offsets)
                assert det_fraction_free(build_A_sub(ell, kappa)) == expected


class TestAlternatingWeightedSum:
    def test_linear_data_killed_by_third_difference(self):
        assert alternating_weighted_sum(3, 0, [0, 1, 2, 3]) == 0

    def test_cubic_moment(self):
        assert alternating_weighted_sum(3, 2, [0, 1, 2, 3]) == -6

    def test_only_j_zero_term_survives(self):
        assert alternating_weighted_sum(2, 0, [1, 0, 0]) == 1

    def test_forward_difference_oracle(self):
        rng = SplitMix64(2024)
        for ell in range(1, 9):
            for _ in range(10):
                a = [rng.rational() for _ in range(ell + 1)]
                assert alternating_weighted_sum(ell, 0, a) == (-1) ** ell * forward_difference(a, ell)

    def test_length_enforced(self):
        with pytest.raises(ValueError):
            alternating_weighted_sum(2, 0, [1, 2])


class TestFullDeterminant:
    @pytest.mark.parametrize(
        "ell,s,a,expected",
        [
            (2, 0, [1, 1, 1], 0),
            (2, 2, [1, 1, 1], -6),
            (2, 0, [0, 1, 4], -6),
        ],
    )
    def test_examples(self, ell, s, a, expected):
        spec = DegreeMatrixSpec(ell, s, a)
        assert det_A_closed_form(spec) == expected
        assert det_fraction_free(build_A(spec)) == expected

    def test_closed_form_matches_elimination_on_random_vectors(self):
        rng = SplitMix64(7)
        for ell in range(1, 5):
            for s in range(ell + 1):
                for _ in range(10):
                    spec = DegreeMatrixSpec(ell, s, [rng.rational() for _ in range(ell + 1)])
                    assert det_fraction_free(build_A(spec)) == det_A_closed_form(spec)

    def test_last_row_cofactor_expansion(self):
        # expanding along the value row writes the determinant as a signed
        # combination of the s-independent minors
        rng = SplitMix64(11)
        for ell in range(1, 6):
            for s in (0, 1, ell):
                a = [rng.rational() for _ in range(ell + 1)]
                spec = DegreeMatrixSpec(ell, s, a)
                total = Fraction(0)
                for j in range(1, ell + 2):
                    entry = (j - 1) ** s * a[j - 1]
                    term = entry * det_fraction_free(build_A_sub(ell, j))
                    total += term if (ell + 1 + j) % 2 == 0 else -term
                assert det_fraction_free(build_A(spec)) == total

    def test_linear_in_the_value_vector(self):
        rng = SplitMix64(13)
        for ell in range(1, 5):
            a = [rng.rational() for _ in range(ell + 1)]
            doubled = DegreeMatrixSpec(ell, 1, [2 * x for x in a])
            assert det_A_closed_form(doubled) == 2 * det_A_closed_form(DegreeMatrixSpec(ell, 1, a))
        assert det_A_closed_form(DegreeMatrixSpec(3, 0, [0, 0, 0, 0])) == 0

    def test_s_above_ell_is_legal(self):
        spec = DegreeMatrixSpec(2, 5, [1, Fraction(1, 2), -3])
        assert det_fraction_free(build_A(spec)) == det_A_closed_form(spec)
