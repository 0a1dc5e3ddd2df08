"""Dense complex matrix arithmetic and two-letter word evaluation.

Matrices are plain ``numpy.ndarray`` values with dtype ``complex128``;
:func:`cmatrix` is the validating constructor and returns a read-only
array, so every value in this package can be shared freely across
threads.  Words over the alphabet ``{x, y}`` are stored as run-length
sequences, e.g. ``x^2 y^2 x y`` is ``Word.from_string("x2y2xy")``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch

CMatrix = np.ndarray

EPS = float(np.finfo(float).eps)


def cmatrix(data) -> CMatrix:
    """Validate ``data`` as a square finite complex matrix.

    Returns a read-only ``complex128`` copy; raises
    :class:`DimensionMismatch` on non-square input and ``ValueError``
    on NaN/Inf entries.
    """
    arr = np.array(data, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise DimensionMismatch(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValueError("matrix entries must be finite")
    arr.flags.writeable = False
    return arr


def identity(n: int) -> CMatrix:
    return np.eye(n, dtype=complex)


def _require_square(a: CMatrix) -> int:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    return a.shape[0]


def mul(a: CMatrix, b: CMatrix) -> CMatrix:
    """Matrix product of two equal-size square matrices."""
    _require_square(a)
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot multiply shapes {a.shape} and {b.shape}")
    return a @ b


def adjoint(a: CMatrix) -> CMatrix:
    """Conjugate transpose."""
    _require_square(a)
    return a.conj().T


def transpose(a: CMatrix) -> CMatrix:
    _require_square(a)
    return a.T


def trace(a: CMatrix) -> complex:
    _require_square(a)
    return complex(np.trace(a))


def frobenius_norm(a: CMatrix) -> float:
    _require_square(a)
    return float(np.linalg.norm(a))


def _det3(a: CMatrix) -> complex:
    return (
        a[0, 0] * (a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1])
        - a[0, 1] * (a[1, 0] * a[2, 2] - a[1, 2] * a[2, 0])
        + a[0, 2] * (a[1, 0] * a[2, 1] - a[1, 1] * a[2, 0])
    )


def determinant(a: CMatrix) -> complex:
    """Determinant: cofactor expansion for n <= 4, pivoted LU above.

    The cofactor path keeps small integer inputs exact up to rounding of
    the individual products, which the 3x3 determinant criterion relies
    on; larger sizes fall back to LAPACK.
    """
    n = _require_square(a)
    if n == 1:
        return complex(a[0, 0])
    if n == 2:
        return complex(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])
    if n == 3:
        return complex(_det3(a))
    if n == 4:
        total = 0.0 + 0.0j
        rows = [1, 2, 3]
        for j in range(4):
            cols = [c for c in range(4) if c != j]
            minor = a[np.ix_(rows, cols)]
            total += (-1) ** j * a[0, j] * _det3(minor)
        return complex(total)
    return complex(np.linalg.det(a))


@dataclass(frozen=True)
class Word:
    """A word in two noncommuting letters, stored as (symbol, exponent) runs."""

    runs: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if not self.runs:
            raise ValueError("a word must have degree >= 1")
        for sym, exp in self.runs:
            if sym not in ("x", "y"):
                raise ValueError(f"unknown symbol {sym!r}")
            if exp < 1:
                raise ValueError("run exponents must be >= 1")

    @classmethod
    def from_string(cls, text: str) -> "Word":
        """Parse compact notation such as ``"x2y2xy"`` (digits are exponents)."""
        runs: list[tuple[str, int]] = []
        i = 0
        while i < len(text):
            sym = text[i]
            i += 1
            exp = 0
            while i < len(text) and text[i].isdigit():
                exp = 10 * exp + int(text[i])
                i += 1
            exp = exp or 1
            if runs and runs[-1][0] == sym:
                runs[-1] = (sym, runs[-1][1] + exp)
            else:
                runs.append((sym, exp))
        return cls(tuple(runs))

    @property
    def degree(self) -> int:
        return sum(exp for _, exp in self.runs)

    def __str__(self) -> str:
        return "".join(f"{s}{e}" if e > 1 else s for s, e in self.runs)


def reverse_word(w: Word) -> Word:
    """The reversal, e.g. reverse of x y^2 is y^2 x."""
    return Word(tuple(reversed(w.runs)))


def evaluate_word(w: Word, x: CMatrix, y: CMatrix) -> CMatrix:
    """Left-to-right product substituting ``x`` and ``y`` for the letters."""
    n = _require_square(x)
    if x.shape != y.shape:
        raise DimensionMismatch(f"letter matrices differ in shape: {x.shape} vs {y.shape}")
    powers: dict[tuple[str, int], CMatrix] = {}

    def power(sym: str, exp: int) -> CMatrix:
        key = (sym, exp)
        if key not in powers:
            base = x if sym == "x" else y
            powers[key] = np.linalg.matrix_power(base, exp)
        return powers[key]

    out = np.eye(n, dtype=complex)
    for sym, exp in w.runs:
        out = out @ power(sym, exp)
    return out


def word_trace(w: Word, x: CMatrix, y: CMatrix) -> complex:
    return complex(np.trace(evaluate_word(w, x, y)))
