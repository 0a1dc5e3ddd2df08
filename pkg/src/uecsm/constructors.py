"""Builders for indefinite special unitary matrices and angle-test examples.

``SU(k, n-k)`` here means determinant-one matrices preserving the
Hermitian form <v,w> = sum_{j<=k} v_j conj(w_j) - sum_{j>k} v_j conj(w_j),
equivalently Q* A Q = A with A = I_k (+) -I_{n-k}.  Conjugating a
distinct diagonal by such a Q yields matrices that pass the linear
strong angle test by construction; whenever some cyclic triple product
of the columns of Q is non-real, the result fails the strong angle test
and is therefore not UECSM while still passing the weak test.  That
rejection loop is the counterexample generator at the bottom.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .angletests import lsat, sat, wat
from .errors import (
    DimensionMismatch,
    ExhaustedRetries,
    IsotropicVector,
    RepeatedDiagonal,
    SignatureMismatch,
    SingularMatrix,
)
from .matcore import CMatrix, EPS
from .spectra import eigensystem
from .tracetests import DEFAULT_TOL, Verdict

log = logging.getLogger(__name__)

_SELF_PRODUCT_FLOOR = 1e-10


@dataclass(frozen=True)
class Signature:
    """Signature (k, n-k) of the indefinite form on C^n."""

    k: int
    n: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")

    @property
    def minus(self) -> int:
        return self.n - self.k

    def matrix(self) -> CMatrix:
        return np.diag([1.0] * self.k + [-1.0] * self.minus).astype(complex)


def indefinite_inner(v: np.ndarray, w: np.ndarray, sig: Signature) -> complex:
    """The signed sesquilinear form, linear in the first argument."""
    v = np.asarray(v, dtype=complex)
    w = np.asarray(w, dtype=complex)
    if v.shape != (sig.n,) or w.shape != (sig.n,):
        raise DimensionMismatch(f"vectors must have length {sig.n}")
    signs = np.array([1.0] * sig.k + [-1.0] * sig.minus)
    return complex(np.sum(signs * v * w.conj()))


def indefinite_gram_schmidt(vectors: Sequence[np.ndarray], sig: Signature) -> CMatrix:
    """Orthogonalize n vectors under the signed form and assemble Q in SU(k, n-k).

    Processes vectors in input order, normalizing each by the square
    root of |self-product|; a self-product smaller than 1e-10 in
    magnitude aborts with :class:`IsotropicVector` (retry with fresh
    input).  Columns are then reordered so the +1 self-products come
    first; a sign pattern with the wrong counts raises
    :class:`SignatureMismatch`.  Finally the last column is rotated by
    a unimodular phase so det Q = 1.
    """
    if len(vectors) != sig.n:
        raise DimensionMismatch(f"need {sig.n} vectors, got {len(vectors)}")
    basis: list[np.ndarray] = []
    signs: list[float] = []
    for raw in vectors:
        v = np.asarray(raw, dtype=complex).copy()
        if v.shape != (sig.n,):
            raise DimensionMismatch(f"vectors must have length {sig.n}")
        for u, sign in zip(basis, signs):
            v = v - sign * indefinite_inner(v, u, sig) * u
        self_product = indefinite_inner(v, v, sig).real
        if abs(self_product) < _SELF_PRODUCT_FLOOR:
            raise IsotropicVector(
                f"self-product {self_product:.3e} below {_SELF_PRODUCT_FLOOR:.0e}"
            )
        v = v / np.sqrt(abs(self_product))
        basis.append(v)
        signs.append(1.0 if self_product > 0 else -1.0)

    plus = [v for v, s in zip(basis, signs) if s > 0]
    minus = [v for v, s in zip(basis, signs) if s < 0]
    if len(plus) != sig.k:
        raise SignatureMismatch(
            f"got {len(plus)} positive and {len(minus)} negative directions, "
            f"wanted ({sig.k}, {sig.minus})"
        )
    q = np.column_stack(plus + minus)
    det = complex(np.linalg.det(q))
    if abs(det) < 1e-12:
        raise SingularMatrix("orthogonalized columns are numerically dependent")
    q[:, -1] *= det.conjugate() / abs(det) ** 2
    q.flags.writeable = False
    return q


def su_membership(q: CMatrix, sig: Signature, tol: float = DEFAULT_TOL) -> Verdict:
    """Check Q* A Q = A and det Q = 1."""
    if q.shape != (sig.n, sig.n):
        raise DimensionMismatch(f"expected shape ({sig.n}, {sig.n}), got {q.shape}")
    a = sig.matrix()
    form_residual = float(np.linalg.norm(q.conj().T @ a @ q - a))
    det_residual = abs(complex(np.linalg.det(q)) - 1.0)
    residuals = (("form_preservation", form_residual), ("determinant", det_residual))
    return Verdict("su_membership", max(form_residual, det_residual) <= tol, residuals, tol)


def conjugated_diagonal(q: CMatrix, d: Sequence[complex]) -> CMatrix:
    """T = Q diag(d) Q^{-1} for pairwise distinct diagonal entries."""
    n = q.shape[0]
    entries = [complex(v) for v in d]
    if q.ndim != 2 or q.shape[0] != q.shape[1] or len(entries) != n:
        raise DimensionMismatch("q must be square and d must match its size")
    for i in range(n):
        for j in range(i + 1, n):
            if entries[i] == entries[j]:
                raise RepeatedDiagonal(f"diagonal entries {i} and {j} coincide")
    try:
        qinv = np.linalg.inv(q)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrix("q is not invertible") from exc
    if np.linalg.cond(q) > 1e12:
        raise SingularMatrix("q is numerically singular")
    t = q @ np.diag(entries) @ qinv
    t.flags.writeable = False
    return t


@dataclass(frozen=True)
class TripleProduct:
    """One cyclic triple product of columns with its reality flag (1-based indices)."""

    indices: tuple[int, int, int]
    value: complex
    is_real: bool


def sat_obstruction(q: CMatrix, tol: float = DEFAULT_TOL) -> tuple[TripleProduct, ...]:
    """Cyclic triple products <q_i,q_j><q_j,q_k><q_k,q_i> for i < j < k.

    Computed on the raw columns: reality is invariant under positive
    column scaling, so this matches the statement for the normalized
    eigenvectors.  The conjugated-diagonal construction satisfies the
    strong angle test iff every one of these is real.
    """
    n = q.shape[0]
    cols = [q[:, i] for i in range(n)]
    norms = [float(np.linalg.norm(c)) for c in cols]
    if any(v == 0.0 for v in norms):
        raise SingularMatrix("q has a zero column")
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                value = complex(
                    np.vdot(cols[j], cols[i])
                    * np.vdot(cols[k], cols[j])
                    * np.vdot(cols[i], cols[k])
                )
                # imaginary parts at rounding level (relative to the column
                # norms) are zero, hence real
                floor = 64 * EPS * (norms[i] * norms[j] * norms[k]) ** 2
                is_real = abs(value.imag) <= max(tol * abs(value), floor)
                out.append(TripleProduct((i + 1, j + 1, k + 1), value, is_real))
    return tuple(out)


def _gaussian_integer_vectors(rng: np.random.Generator, n: int) -> list[np.ndarray]:
    re = rng.integers(-2, 3, size=(n, n))
    im = rng.integers(-2, 3, size=(n, n))
    return [re[i] + 1j * im[i] for i in range(n)]


def random_su(sig: Signature, seed: int, max_attempts: int = 200) -> CMatrix:
    """Draw small Gaussian-integer vectors until orthogonalization succeeds."""
    rng = np.random.default_rng(seed)
    for attempt in range(max_attempts):
        try:
            return indefinite_gram_schmidt(_gaussian_integer_vectors(rng, sig.n), sig)
        except (IsotropicVector, SignatureMismatch, SingularMatrix):
            continue
    raise ExhaustedRetries(f"no SU({sig.k},{sig.minus}) matrix after {max_attempts} draws")


def generate_wat_not_sat(
    seed: int,
    sig: Signature,
    d: Sequence[complex] = (-1.0, 0.0, 1.0, 2.0),
    max_attempts: int = 1000,
) -> CMatrix:
    """Deterministically construct a matrix passing WAT and LSAT but failing SAT.

    Requires min(k, n-k) >= 2: with a one-dimensional cone every
    conjugated diagonal is UECSM, so no counterexample exists there
    (and none exists for n <= 3 at all).  Each attempt draws a fresh
    Q, rejects it if all column triple products are real, then verifies
    the advertised angle behavior on the assembled matrix before
    returning it.
    """
    if min(sig.k, sig.minus) < 2:
        raise ValueError(
            f"signature ({sig.k},{sig.minus}) cannot produce a counterexample; "
            "need both cones at least 2-dimensional"
        )
    entries = [complex(v) for v in d]
    if len(entries) != sig.n:
        raise DimensionMismatch(f"diagonal must have length {sig.n}")
    rejected_real = 0
    for attempt in range(max_attempts):
        try:
            q = random_su(sig, seed=seed * 1_000_003 + attempt, max_attempts=1)
        except ExhaustedRetries:
            continue
        triples = sat_obstruction(q)
        if all(tp.is_real for tp in triples):
            rejected_real += 1
            continue
        t = conjugated_diagonal(q, entries)
        s = eigensystem(t)
        wat_report = wat(s)
        lsat_report = lsat(s)
        sat_report = sat(s)
        solid_fail = sat_report.verdict.max_residual > 10 * sat_report.verdict.tol
        if wat_report.verdict.passed and lsat_report.verdict.passed and solid_fail:
            log.debug(
                "generate_wat_not_sat: seed=%d attempts=%d all-real rejections=%d",
                seed,
                attempt + 1,
                rejected_real,
            )
            return t
    raise ExhaustedRetries(
        f"no WAT-not-SAT example in {max_attempts} attempts "
        f"({rejected_real} all-real rejections)"
    )
