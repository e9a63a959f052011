"""The two eigenvalue engines, separately and against each other."""

import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spectra_rho.eigen import (
    ComplexResidueWarning,
    ExactPolynomial,
    ExactnessError,
    NumericConvergenceError,
    SymmetryError,
    exact_char_poly,
    gershgorin_intervals,
    group_values,
    in_gershgorin_union,
    principal_minor_sum,
    real_roots,
    roots_spectrum,
    spectra_match,
    spectrum_from_values,
    square_free_decomposition,
    sym_eigen,
)
from spectra_rho.families import complete, cycle, petersen
from spectra_rho.spectral import matrix_of


def poly_from_roots(*roots):
    """Oracle: expand prod (x - r) by integer convolution."""
    coeffs = [1]
    for r in roots:
        coeffs = [0] + coeffs
        coeffs = [coeffs[i] - r * (coeffs[i + 1] if i + 1 < len(coeffs) else 0)
                  for i in range(len(coeffs))]
    return coeffs


def random_symmetric(rng, d, lo=-3, hi=3):
    M = rng.integers(lo, hi + 1, size=(d, d))
    return np.triu(M) + np.triu(M, 1).T


class TestJacobi:
    def test_complete_graph_spectrum(self):
        spec = sym_eigen(matrix_of(complete(4)))
        assert spec.entries == ((3.0, 1), (-1.0, 3))

    def test_turan_signless_spectrum(self):
        from spectra_rho.families import turan

        spec = sym_eigen(matrix_of(turan(6, 3), "signless_laplacian"))
        assert [m for _, m in spec.entries] == [1, 3, 2]
        assert all(
            abs(v - e) < 1e-9 for (v, _), e in zip(spec.entries, [8.0, 4.0, 2.0])
        )

    def test_petersen_against_exact_engine(self):
        A = matrix_of(petersen())
        numeric = sym_eigen(A)
        exact = roots_spectrum(exact_char_poly(A))
        ok, worst = spectra_match(numeric, exact, 1e-8)
        assert ok, worst
        assert [m for _, m in numeric.entries] == [1, 5, 4]

    def test_rejects_non_symmetric(self):
        with pytest.raises(SymmetryError):
            sym_eigen([[0, 1], [0, 0]])

    def test_rejects_empty(self):
        with pytest.raises(SymmetryError):
            sym_eigen(np.zeros((0, 0)))

    def test_dimension_one_and_zero_matrix(self):
        assert sym_eigen([[7]]).entries == ((7.0, 1),)
        assert sym_eigen(np.zeros((3, 3))).entries == ((0.0, 3),)

    def test_sweep_cap_raises(self):
        with pytest.raises(NumericConvergenceError):
            sym_eigen(matrix_of(petersen()), sweep_cap=1)

    def test_eigenvectors_orthonormal_and_accurate(self):
        rng = np.random.default_rng(5)
        for d in (2, 5, 9):
            M = random_symmetric(rng, d).astype(float)
            spec, raw, V = sym_eigen(M, want_vectors=True)
            assert np.max(np.abs(V.T @ V - np.eye(d))) < 1e-10
            fro = np.linalg.norm(M)
            for k in range(d):
                residual = np.linalg.norm(M @ V[:, k] - raw[k] * V[:, k])
                assert residual <= 1e-8 * max(fro, 1.0)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 8), st.integers(0, 10 ** 9))
    def test_trace_and_frobenius_identities(self, d, seed):
        rng = np.random.default_rng(seed)
        M = random_symmetric(rng, d)
        spec = sym_eigen(M)
        values = spec.expanded()
        fro = np.linalg.norm(M.astype(float))
        assert abs(sum(values) - np.trace(M)) <= 1e-9 * d * max(fro, 1.0)
        assert abs(sum(v * v for v in values) - fro ** 2) <= 1e-8 * max(fro, 1.0) ** 2


class TestExactCharPoly:
    def test_k2(self):
        p = exact_char_poly(matrix_of(complete(2)))
        assert p.coeffs == (-1, 0, 1)

    def test_quotient_cubic(self):
        # oracle: expand (x-9)(x-4)(x-2)
        expected = poly_from_roots(9, 4, 2)
        p = exact_char_poly([[3, 3, 0], [1, 7, 2], [0, 3, 5]])
        assert list(p.coeffs) == expected == [-72, 62, -15, 1]

    def test_c4(self):
        p = exact_char_poly(matrix_of(cycle(4)))
        assert p.coeffs == (0, 0, -4, 0, 1)
        assert str(p) == "x^4-4x^2"

    def test_monic_and_degree(self):
        p = exact_char_poly(matrix_of(petersen()))
        assert p.degree == 10 and p.coeffs[-1] == 1

    def test_principal_minor_identity(self):
        rng = np.random.default_rng(17)
        for d in (3, 4, 6):
            M = random_symmetric(rng, d, -4, 4)
            p = exact_char_poly(M)
            for r in (1, 2, 3):
                assert (-1) ** r * p.coeffs[d - r] == principal_minor_sum(M, r)

    def test_non_integer_rejected(self):
        with pytest.raises(ExactnessError):
            exact_char_poly([[0.5, 0], [0, 1]])

    def test_integral_floats_accepted(self):
        assert exact_char_poly([[2.0, 0.0], [0.0, 3.0]]).coeffs == (6, -5, 1)


class TestRealRoots:
    def test_quadratic(self):
        roots = real_roots(ExactPolynomial((-1, 0, 1)))
        assert [(round(r, 9), m) for r, m in roots] == [(1.0, 1), (-1.0, 1)]

    def test_cubic_oracle(self):
        p = ExactPolynomial(tuple(poly_from_roots(9, 4, 2)))
        roots = real_roots(p)
        assert [m for _, m in roots] == [1, 1, 1]
        assert all(abs(r - e) < 1e-9 for (r, _), e in zip(roots, [9, 4, 2]))

    def test_multiplicities(self):
        # (x-2)^2 * x
        p = ExactPolynomial((0, 4, -4, 1))
        roots = real_roots(p)
        assert [(round(r, 9), m) for r, m in roots] == [(2.0, 2), (0.0, 1)]

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            real_roots(ExactPolynomial((1,)))

    def test_complex_residue_warns(self):
        with pytest.warns(ComplexResidueWarning):
            roots = real_roots(ExactPolynomial((1, 0, 1)))
        assert roots == []

    def test_irrational_pair(self):
        # x^2 - 2
        roots = real_roots(ExactPolynomial((-2, 0, 1)))
        assert abs(roots[0][0] - 2 ** 0.5) < 1e-9
        assert abs(roots[1][0] + 2 ** 0.5) < 1e-9

    def test_square_free_decomposition(self):
        # (x^2 - 2)^2: one factor of multiplicity 2
        p = ExactPolynomial((4, 0, -4, 0, 1))
        parts = square_free_decomposition(p)
        assert [(sorted(f), m) for f, m in parts] == [([-2, 0, 1], 2)]
        roots = real_roots(p)
        assert [m for _, m in roots] == [2, 2]

    def test_large_coefficients(self):
        # roots far apart force a wide initial bound
        p = ExactPolynomial(tuple(poly_from_roots(1000, -1000, 3)))
        roots = real_roots(p)
        assert [round(r) for r, _ in roots] == [1000, 3, -1000]


class TestGershgorin:
    def test_quotient_rows(self):
        intervals = gershgorin_intervals([[3, 3, 0], [1, 7, 2], [0, 3, 5]])
        assert intervals == [(0.0, 6.0), (4.0, 10.0), (2.0, 8.0)]
        for root, _ in real_roots(exact_char_poly([[3, 3, 0], [1, 7, 2], [0, 3, 5]])):
            assert in_gershgorin_union(root, intervals)

    def test_identity(self):
        assert gershgorin_intervals(np.eye(3)) == [(1.0, 1.0)] * 3

    def test_dimension_one(self):
        assert gershgorin_intervals([[4]]) == [(4.0, 4.0)]


class TestOracleAgreement:
    def test_engines_agree_on_random_integer_matrices(self):
        rng = np.random.default_rng(41)
        for _ in range(40):
            d = int(rng.integers(1, 13))
            M = random_symmetric(rng, d)
            numeric = sym_eigen(M)
            with warnings.catch_warnings():
                warnings.simplefilter("error", ComplexResidueWarning)
                exact = roots_spectrum(exact_char_poly(M))
            ok, worst = spectra_match(numeric, exact, 1e-8)
            assert ok, (M.tolist(), worst)

    def test_engines_agree_on_graph_matrices(self):
        for G in (cycle(7), petersen(), complete(5)):
            for kind in ("adjacency", "laplacian", "signless_laplacian"):
                M = matrix_of(G, kind)
                ok, worst = spectra_match(
                    sym_eigen(M), roots_spectrum(exact_char_poly(M)), 1e-8
                )
                assert ok, (G.name, kind, worst)


class TestGrouping:
    def test_groups_with_multiplicity(self):
        grouped = group_values([2.0, 1.0 + 1e-12, 1.0, 1.0 - 1e-12, -1.0], 1e-9)
        assert [(round(v, 6), m) for v, m in grouped] == [(2.0, 1), (1.0, 3), (-1.0, 1)]

    def test_spectrum_str(self):
        spec = spectrum_from_values([8.0, 4.0, 4.0, 4.0, 2.0, 2.0], 1e-8)
        assert str(spec) == "8 4^3 2^2"

    def test_spectrum_helpers(self):
        spec = spectrum_from_values([3.0, 1.0, 1.0, -2.0], 1e-8)
        assert spec.dimension == 4
        assert spec.multiplicity_near(1.0) == 2
        shifted = spec.shifted(-1.0)
        assert shifted.max_value == 2.0
        dropped = spec.without_one(1.0)
        assert dropped.multiplicity_near(1.0) == 1
        neg = spec.negated()
        assert neg.expanded() == [2.0, -1.0, -1.0, -3.0]
