"""Trace-polynomial criteria for unitary equivalence and UECSM.

Three layers, all exact algebraic identities evaluated in floating
point:

* the seven-word signature that determines 3x3 matrices up to unitary
  equivalence, and its single-trace UECSM reduction;
* Djokovic's twenty words, which do the same for 4x4 matrices;
* the seven derived commutator traces ``psi_1 .. psi_7`` whose joint
  vanishing characterizes UECSM at n = 4.

Tolerance convention (a numerical convention, not part of the algebra):
every trace value is compared against ``tol * max(eps, |T|_F ** deg)``
where ``deg`` is the letter count of the underlying word, which makes
the default tolerance meaningful across scales and the verdicts
invariant under T -> cT.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, UnsupportedDimension
from .matcore import CMatrix, EPS, Word, adjoint, frobenius_norm, word_trace

DEFAULT_TOL = 1e-8

#: Words fixing the 3x3 unitary-equivalence class: x, x^2, x^3, x*x, ...
#: (letters: x is the matrix, y its adjoint).
PHI3_WORDS: tuple[Word, ...] = tuple(
    Word.from_string(s) for s in ("x", "x2", "x3", "yx", "yx2", "y2x2", "yx2y2x")
)

#: Djokovic's generating set for 4x4 unitary equivalence, in canonical order.
DJOKOVIC_WORDS: tuple[Word, ...] = tuple(
    Word.from_string(s)
    for s in (
        "x",
        "x2",
        "xy",
        "x3",
        "x2y",
        "x4",
        "x3y",
        "x2y2",
        "xyxy",
        "x3y2",
        "x2yx2y",
        "x2y2xy",
        "y2x2yx",
        "x3y2xy",
        "x3y2x2y",
        "x3y3xy",
        "y3x3yx",
        "x3yx2yxy",
        "x2y2xyx2y",
        "x3y3x2y2",
    )
)

#: Letter counts of the words behind psi_1 .. psi_7.
PSI_DEGREES: tuple[int, ...] = (6, 7, 8, 8, 9, 9, 10)


@dataclass(frozen=True)
class TraceSignature:
    """A tuple of word-trace values tagged with each word's degree."""

    kind: str  # "phi3" | "djokovic20" | "psi7"
    values: tuple[complex, ...]
    degrees: tuple[int, ...]


@dataclass(frozen=True)
class Verdict:
    """Pass/fail outcome of one criterion with its named residuals."""

    criterion: str
    passed: bool
    residuals: tuple[tuple[str, float], ...]
    tol: float

    @property
    def max_residual(self) -> float:
        return max((r for _, r in self.residuals), default=0.0)


def _require_dim(t: CMatrix, n: int, who: str) -> None:
    if t.shape != (n, n):
        raise DimensionMismatch(f"{who} requires a {n}x{n} matrix, got shape {t.shape}")


def _norm_scale(norm: float, degree: int) -> float:
    return max(EPS, norm**degree)


def phi3(t: CMatrix) -> TraceSignature:
    """Seven-word trace signature of a 3x3 matrix (a complete unitary invariant)."""
    _require_dim(t, 3, "phi3")
    ta = adjoint(t)
    values = tuple(word_trace(w, t, ta) for w in PHI3_WORDS)
    return TraceSignature("phi3", values, tuple(w.degree for w in PHI3_WORDS))


def trace_test_3(t: CMatrix, tol: float = DEFAULT_TOL) -> Verdict:
    """UECSM test for 3x3: tr[T*T (T*T - TT*) TT*] must vanish."""
    _require_dim(t, 3, "trace_test_3")
    h1 = adjoint(t) @ t
    h2 = t @ adjoint(t)
    value = complex(np.trace(h1 @ (h1 - h2) @ h2))
    residual = abs(value) / _norm_scale(frobenius_norm(t), 6)
    return Verdict("trace_test_3", residual <= tol, (("commutator_trace", residual),), tol)


def djokovic_signature(t: CMatrix) -> TraceSignature:
    """The twenty word traces tr w_i(T, T*) for a 4x4 matrix."""
    _require_dim(t, 4, "djokovic_signature")
    ta = adjoint(t)
    values = tuple(word_trace(w, t, ta) for w in DJOKOVIC_WORDS)
    return TraceSignature("djokovic20", values, tuple(w.degree for w in DJOKOVIC_WORDS))


def unitary_equivalence_4(a: CMatrix, b: CMatrix, tol: float = DEFAULT_TOL) -> Verdict:
    """Are two 4x4 matrices unitarily equivalent?  Twenty-word comparison."""
    _require_dim(a, 4, "unitary_equivalence_4")
    _require_dim(b, 4, "unitary_equivalence_4")
    sig_a = djokovic_signature(a)
    sig_b = djokovic_signature(b)
    m = max(frobenius_norm(a), frobenius_norm(b))
    residuals = []
    for i, (va, vb, deg) in enumerate(zip(sig_a.values, sig_b.values, sig_a.degrees), start=1):
        residuals.append((f"w{i:02d}", abs(va - vb) / _norm_scale(m, deg)))
    worst = max(r for _, r in residuals)
    return Verdict("unitary_equivalence_4", worst <= tol, tuple(residuals), tol)


def psi7(t: CMatrix) -> TraceSignature:
    """The seven commutator traces whose vanishing characterizes UECSM at n = 4.

    Each value is computed from its grouped product form (difference
    taken before the outer products) so the analytically cancelling
    terms never meet in floating point.
    """
    _require_dim(t, 4, "psi7")
    x = np.asarray(t, dtype=complex)
    y = adjoint(t)
    x2 = x @ x
    y2 = y @ y
    y3 = y2 @ y
    xy = x @ y
    m = x2 @ y
    w = y @ x2
    values = (
        np.trace(x @ (x @ y2 - y2 @ x) @ xy),
        np.trace(x @ (x2 @ y2 - y2 @ x2) @ xy),
        np.trace(x2 @ (x @ y2 - y2 @ x) @ x2 @ y),
        np.trace(x @ (x2 @ y3 - y3 @ x2) @ xy),
        np.trace(x @ (m @ m - w @ w) @ xy),
        np.trace(x2 @ y @ (y @ x - x @ y) @ y @ x2 @ y),
        np.trace(x2 @ (x @ y3 - y3 @ x) @ x2 @ y2),
    )
    return TraceSignature("psi7", tuple(complex(v) for v in values), PSI_DEGREES)


def _psi_verdict(t: CMatrix, tol: float) -> Verdict:
    sig = psi7(t)
    norm = frobenius_norm(t)
    residuals = tuple(
        (f"psi{i}", abs(v) / _norm_scale(norm, deg))
        for i, (v, deg) in enumerate(zip(sig.values, sig.degrees), start=1)
    )
    worst = max(r for _, r in residuals)
    return Verdict("uecsm_psi7", worst <= tol, residuals, tol)


def uecsm_verdict(t: CMatrix, tol: float = DEFAULT_TOL) -> Verdict:
    """Decide UECSM by the dimension-appropriate trace criterion.

    n = 1 and n = 2 matrices are always UECSM, so they pass
    unconditionally; n = 3 dispatches to :func:`trace_test_3`; n = 4 to
    the seven-trace test.  Larger sizes raise
    :class:`UnsupportedDimension` since no complete word criterion is
    implemented there.
    """
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {t.shape}")
    n = t.shape[0]
    if n >= 5:
        raise UnsupportedDimension(f"no complete trace criterion for n = {n}")
    if n <= 2:
        return Verdict("uecsm_small_n", True, (("small_n", 0.0),), tol)
    if n == 3:
        v = trace_test_3(t, tol)
        return Verdict("uecsm_trace3", v.passed, v.residuals, tol)
    return _psi_verdict(t, tol)


def transpose_equivalence(t: CMatrix, tol: float = DEFAULT_TOL) -> Verdict:
    """Test T ~ T^t with the word criterion of the matching dimension.

    Equivalent to the UECSM property for these sizes, so the verdict
    must agree with :func:`uecsm_verdict` up to tolerance effects.
    """
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {t.shape}")
    n = t.shape[0]
    if n >= 5:
        raise UnsupportedDimension(f"no word criterion for n = {n}")
    if n <= 2:
        return Verdict("transpose_equivalence", True, (("small_n", 0.0),), tol)
    if n == 3:
        sig_t = phi3(t)
        sig_tt = phi3(t.T)
        norm = frobenius_norm(t)
        residuals = tuple(
            (f"phi{i}", abs(a - b) / _norm_scale(norm, deg))
            for i, (a, b, deg) in enumerate(
                zip(sig_t.values, sig_tt.values, sig_t.degrees), start=1
            )
        )
        worst = max(r for _, r in residuals)
        return Verdict("transpose_equivalence", worst <= tol, residuals, tol)
    inner = unitary_equivalence_4(t, t.T, tol)
    return Verdict("transpose_equivalence", inner.passed, inner.residuals, tol)
