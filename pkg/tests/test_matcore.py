"""Unit tests for the matrix core and word machinery."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uecsm import (
    DimensionMismatch,
    Word,
    adjoint,
    cmatrix,
    determinant,
    evaluate_word,
    frobenius_norm,
    identity,
    mul,
    reverse_word,
    trace,
    transpose,
    word_trace,
)
from uecsm.gallery import WAT_COUNTEREXAMPLE
from uecsm.spectra import eigensystem

from _util import random_complex_matrix, rng


def naive_product(a, b):
    n = a.shape[0]
    out = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                out[i, j] += a[i, k] * b[k, j]
    return out


class TestConstruction:
    def test_cmatrix_validates_square(self):
        with pytest.raises(DimensionMismatch):
            cmatrix([[1, 2, 3], [4, 5, 6]])

    def test_cmatrix_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            cmatrix([[np.inf, 0], [0, 1]])

    def test_cmatrix_is_read_only(self):
        m = cmatrix([[1, 2], [3, 4]])
        with pytest.raises(ValueError):
            m[0, 0] = 5


class TestArithmetic:
    def test_identity_product(self):
        m = random_complex_matrix(rng(1), 3)
        assert np.allclose(mul(identity(3), m), m)

    def test_diagonal_product(self):
        assert np.allclose(
            mul(np.diag([1.0, 2.0]).astype(complex), np.diag([3.0, 4.0]).astype(complex)),
            np.diag([3.0, 8.0]),
        )

    def test_product_matches_triple_loop(self):
        gen = rng(2)
        a = random_complex_matrix(gen, 4)
        b = random_complex_matrix(gen, 4)
        assert np.allclose(mul(a, b), naive_product(a, b), atol=1e-12)

    def test_mul_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            mul(identity(3), identity(4))

    def test_trace_identity(self):
        assert trace(identity(4)) == 4

    def test_adjoint_involution_exact(self):
        m = random_complex_matrix(rng(3), 4)
        assert np.array_equal(adjoint(adjoint(m)), m)

    def test_trace_of_transpose_exact(self):
        m = random_complex_matrix(rng(4), 4)
        assert trace(transpose(m)) == trace(m)

    def test_frobenius_norm_identity(self):
        m = random_complex_matrix(rng(5), 4)
        value = trace(mul(adjoint(m), m))
        assert abs(value.imag) < 1e-12
        assert frobenius_norm(m) ** 2 == pytest.approx(value.real, rel=1e-12)

    def test_trace_commutativity(self):
        gen = rng(6)
        for _ in range(20):
            a = random_complex_matrix(gen, 4, scale=3.0)
            b = random_complex_matrix(gen, 4, scale=3.0)
            bound = 1e-12 * frobenius_norm(a) * frobenius_norm(b)
            assert abs(trace(mul(a, b)) - trace(mul(b, a))) <= bound


class TestDeterminant:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_matches_lapack(self, n):
        m = random_complex_matrix(rng(10 + n), n)
        assert determinant(m) == pytest.approx(complex(np.linalg.det(m)), rel=1e-10)

    def test_det_vs_eigenvalue_product(self):
        # independent route: determinant against the spectral product
        s = eigensystem(WAT_COUNTEREXAMPLE)
        product = np.prod(np.array(s.eigenvalues))
        det = determinant(WAT_COUNTEREXAMPLE)
        assert abs(det - product) <= 1e-8 * abs(det)

    def test_singularity(self):
        m = cmatrix([[1, 2], [2, 4]])
        assert abs(determinant(m)) < 1e-12


class TestWords:
    def test_parse_runs(self):
        w = Word.from_string("x2y2xy")
        assert w.runs == (("x", 2), ("y", 2), ("x", 1), ("y", 1))
        assert w.degree == 6
        assert str(w) == "x2y2xy"

    def test_parse_merges_repeats(self):
        assert Word.from_string("xxy").runs == (("x", 2), ("y", 1))

    def test_reverse(self):
        w = Word.from_string("xy2")
        assert str(reverse_word(w)) == "y2x"
        assert reverse_word(reverse_word(w)) == w

    def test_degree_validation(self):
        with pytest.raises(ValueError):
            Word(())

    def test_single_letter_evaluates_to_matrix(self):
        t = random_complex_matrix(rng(20), 3)
        assert np.array_equal(evaluate_word(Word.from_string("x"), t, adjoint(t)), t)

    def test_word12_matches_chained_product(self):
        t = random_complex_matrix(rng(21), 4)
        ta = adjoint(t)
        explicit = mul(mul(mul(mul(t, t), mul(ta, ta)), t), ta)
        assert np.allclose(evaluate_word(Word.from_string("x2y2xy"), t, ta), explicit, atol=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            evaluate_word(Word.from_string("xy"), identity(3), identity(4))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from("xy"), min_size=1, max_size=8), st.integers(0, 2**31 - 1))
def test_trace_reversal_transpose_identity(letters, seed):
    # tr w(X, Y) equals tr of the reversed word on the transposes
    w = Word.from_string("".join(letters))
    gen = rng(seed)
    x = random_complex_matrix(gen, 3)
    y = random_complex_matrix(gen, 3)
    lhs = word_trace(w, x, y)
    rhs = word_trace(reverse_word(w), x.T, y.T)
    scale = max(1.0, frobenius_norm(x), frobenius_norm(y)) ** w.degree
    assert abs(lhs - rhs) <= 1e-10 * scale


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from("xy"), min_size=1, max_size=6), st.integers(0, 2**31 - 1))
def test_word_norm_submultiplicative(letters, seed):
    w = Word.from_string("".join(letters))
    gen = rng(seed)
    x = random_complex_matrix(gen, 3, scale=0.4)
    y = random_complex_matrix(gen, 3, scale=0.4)
    r = max(np.linalg.norm(x, 2), np.linalg.norm(y, 2))
    value = np.linalg.norm(evaluate_word(w, x, y), 2)
    assert value <= r**w.degree * (1 + 1e-12)
