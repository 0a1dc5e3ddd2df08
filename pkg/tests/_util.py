"""Shared helpers for the test suite."""

import numpy as np


def rng(seed: int = 0) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_complex_matrix(gen: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    return scale * (gen.standard_normal((n, n)) + 1j * gen.standard_normal((n, n)))


def random_integer_matrix(gen: np.random.Generator, n: int, lo: int = -5, hi: int = 5) -> np.ndarray:
    return gen.integers(lo, hi + 1, size=(n, n)).astype(complex)


def random_unitary(gen: np.random.Generator, n: int) -> np.ndarray:
    """Haar-ish unitary from the QR of a random complex matrix."""
    z = random_complex_matrix(gen, n)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_symmetric_matrix(gen: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    z = random_complex_matrix(gen, n, scale)
    return z + z.T


def random_skew_hermitian(gen: np.random.Generator, n: int) -> np.ndarray:
    z = random_complex_matrix(gen, n)
    return (z - z.conj().T) / 2
