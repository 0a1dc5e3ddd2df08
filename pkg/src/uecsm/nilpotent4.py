"""Closed-form UECSM classification of 4x4 strictly upper-triangular matrices.

The six free entries sit at positions

    . a b c
    . . d e
    . . . f
    . . . .

and the UECSM question reduces to six polynomial conditions on them.
Two of the seven general trace values have short closed forms in the
entries; the remaining cases split on which of a, d, f vanish.

A caution on the last condition: matching moduli |a| = |f| and
|b| = |e| alone are necessary once a, d, f are all nonzero, but they
are *not* sufficient -- the products must also agree, ae = bf.  (With
the moduli matched, ae = bf is a pure phase condition; when it holds a
diagonal re-phasing brings the matrix to the palindromic pattern
(a, b, c, d, b, a), which the anti-diagonal permutation carries to its
transpose.)  An all-integer witness for the gap is
(a,...,f) = (1, 1, 0, 1, 1, -1): moduli match, yet three of the twenty
word traces differ from their reversals by exactly 2.  ``classify``
therefore tests the phase-corrected condition, keeping it equivalent
to the seven-trace verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .matcore import CMatrix, EPS


@dataclass(frozen=True)
class NilpotentParams:
    """The six strictly-upper-triangular entries."""

    a: complex
    b: complex
    c: complex
    d: complex
    e: complex
    f: complex

    @classmethod
    def from_iterable(cls, values: Iterable[complex]) -> "NilpotentParams":
        vals = [complex(v) for v in values]
        if len(vals) != 6:
            raise ValueError(f"expected 6 parameters, got {len(vals)}")
        return cls(*vals)

    def as_tuple(self) -> tuple[complex, ...]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)


def build_matrix(p: NilpotentParams) -> CMatrix:
    """Place the six parameters into the strictly upper triangle."""
    t = np.zeros((4, 4), dtype=complex)
    t[0, 1], t[0, 2], t[0, 3] = p.a, p.b, p.c
    t[1, 2], t[1, 3] = p.d, p.e
    t[2, 3] = p.f
    t.flags.writeable = False
    return t


@dataclass(frozen=True)
class ClosedForms:
    """Closed-form values of the trace polynomials on this family.

    ``psi4`` and ``psi7`` are valid for all parameters; the ``_d0`` pair
    gives psi_1 and psi_6 on the d = 0 slice and the ``_a0`` pair on the
    a = 0 slice.  All six are polynomials, so they evaluate everywhere;
    they only *equal* the corresponding trace values on their slices.
    """

    psi4: complex
    psi7: complex
    psi1_d0: complex
    psi6_d0: complex
    psi1_a0: complex
    psi6_a0: complex


def psi_closed_forms(p: NilpotentParams) -> ClosedForms:
    a, b, c, d, e, f = p.as_tuple()
    aa, bb, cc, dd, ee, ff = (abs(v) ** 2 for v in p.as_tuple())
    psi4 = aa * dd * ff * (aa + bb - ee - ff)
    psi7 = aa * dd**2 * ff * (aa - ff)

    s = a * e + b * f
    psi1_d0 = abs(s) ** 2 * (aa + bb - ee - ff)
    psi6_d0 = c.conjugate() * s * psi1_d0

    g = b * c.conjugate() + d * e.conjugate()
    psi1_a0 = ff * ((bb + dd) * (bb + dd - cc - ee - ff) + abs(g) ** 2)
    psi6_a0 = f * g * psi1_a0
    return ClosedForms(
        psi4=complex(psi4),
        psi7=complex(psi7),
        psi1_d0=complex(psi1_d0),
        psi6_d0=complex(psi6_d0),
        psi1_a0=complex(psi1_a0),
        psi6_a0=complex(psi6_a0),
    )


@dataclass(frozen=True)
class Classification:
    """Which of the six conditions hold, with per-condition residuals."""

    satisfied: tuple[int, ...]
    uecsm: bool
    residuals: tuple[tuple[int, float], ...]

    def residual(self, condition: int) -> float:
        return dict(self.residuals)[condition]


def _rel(value: float, scale: float, tol_floor: float = EPS) -> float:
    return value / (scale + tol_floor)


def classify(p: NilpotentParams, tol: float = 1e-8) -> Classification:
    """Evaluate the six UECSM conditions for this family.

    All equalities are tested relative to the summed magnitudes of
    their terms, and the a/d/f zero gates use an absolute threshold of
    ``tol * (1 + max entry magnitude)``, so the verdict is invariant
    under scaling of the parameters.  Every satisfied condition is
    reported, not just the first; they overlap (the zero matrix
    satisfies several).  Condition 6 includes the phase constraint
    ae = bf (see the module docstring).
    """
    a, b, c, d, e, f = p.as_tuple()
    aa, bb, cc, dd, ee, ff = (abs(v) ** 2 for v in p.as_tuple())
    big = max(abs(v) for v in p.as_tuple())

    def gate(v: complex) -> float:
        return abs(v) / (1.0 + big)

    # 1: d = 0 and ae + bf = 0
    r1 = max(gate(d), _rel(abs(a * e + b * f), abs(a * e) + abs(b * f)))
    # 2: d = 0 and |a|^2 + |b|^2 = |e|^2 + |f|^2
    r2 = max(gate(d), _rel(abs(aa + bb - ee - ff), aa + bb + ee + ff))
    # 3: a = 0 and f = 0
    r3 = max(gate(a), gate(f))
    # 4: a = 0 and the column quadratic vanishes
    ga = b * c.conjugate() + d * e.conjugate()
    qa = (bb + dd) * (bb + dd - cc - ee - ff) + abs(ga) ** 2
    qa_scale = (bb + dd) * (bb + dd + cc + ee + ff) + abs(ga) ** 2
    r4 = max(gate(a), _rel(abs(qa), qa_scale))
    # 5: f = 0 and the mirrored quadratic vanishes
    gf = c * e.conjugate() + b * d.conjugate()
    qf = (dd + ee) * (dd + ee - aa - bb - cc) + abs(gf) ** 2
    qf_scale = (dd + ee) * (dd + ee + aa + bb + cc) + abs(gf) ** 2
    r5 = max(gate(f), _rel(abs(qf), qf_scale))
    # 6: |a| = |f|, |b| = |e|, and ae = bf
    r6 = max(
        _rel(abs(abs(a) - abs(f)), abs(a) + abs(f)),
        _rel(abs(abs(b) - abs(e)), abs(b) + abs(e)),
        _rel(abs(a * e - b * f), abs(a * e) + abs(b * f)),
    )

    residuals = ((1, r1), (2, r2), (3, r3), (4, r4), (5, r5), (6, r6))
    satisfied = tuple(idx for idx, r in residuals if r <= tol)
    return Classification(satisfied=satisfied, uecsm=bool(satisfied), residuals=residuals)


def symmetrizing_witness(p: NilpotentParams, tol: float = 1e-8) -> CMatrix:
    """Explicit unitary U with U T U* complex symmetric, for condition 6.

    Requires a, f nonzero with |a| = |f|, |b| = |e| and ae = bf.  The
    witness composes the diagonal re-phasing diag(1, a/f, 1, 1), which
    produces the palindromic pattern, with a fixed unitary V satisfying
    V^t V = J (the anti-diagonal permutation): J conjugates the
    palindromic matrix to its transpose, and folding J through V turns
    that into literal symmetry of U T U*.
    """
    a, b, e, f = p.a, p.b, p.e, p.f
    big = max(abs(v) for v in p.as_tuple())
    floor = tol * (1.0 + big)
    if abs(a) <= floor or abs(f) <= floor:
        raise ValueError("witness construction needs a and f nonzero")
    if abs(abs(a) - abs(f)) > tol * (abs(a) + abs(f)):
        raise ValueError("witness construction needs |a| = |f|")
    if abs(abs(b) - abs(e)) > tol * (abs(b) + abs(e) + EPS):
        raise ValueError("witness construction needs |b| = |e|")
    if abs(a * e - b * f) > tol * (abs(a * e) + abs(b * f) + EPS):
        raise ValueError("witness construction needs ae = bf (phases must match)")

    mu = a / f
    mu /= abs(mu)
    rephase = np.diag([1.0, mu, 1.0, 1.0]).astype(complex)

    # V = diag(1, 1, i, i) Z^t with Z the eigenbasis of the anti-diagonal
    # permutation; then V^t V equals that permutation.
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    v = inv_sqrt2 * np.array(
        [
            [1, 0, 0, 1],
            [0, 1, 1, 0],
            [1j, 0, 0, -1j],
            [0, 1j, -1j, 0],
        ],
        dtype=complex,
    )
    u = v @ rephase
    u.flags.writeable = False
    return u
