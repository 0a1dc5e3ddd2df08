"""Reference matrices exercising each criterion, plus fixture-file helpers.

Every matrix here has a known UECSM status, checked in the test suite
and reproduced by the batch CLI fixtures:

* the nilpotent quartet: four strictly upper-triangular integer
  matrices differing in a single entry, of which exactly one (e = 6,
  where 2^2 + 9^2 = 85 = 6^2 + 7^2) is UECSM;
* two scalar-plus-weighted-shift matrices separated only by the
  seven-trace test (shift weights (2,2) pass, weights (1,2) fail);
* a conjugated diagonal built from a sample SU(2,2) matrix: passes the
  weak and linear strong angle tests, fails the strong one;
* an integer matrix with the same angle behavior, historically the
  first known weak-test false positive.
"""

from __future__ import annotations

import numpy as np

from .matcore import CMatrix, cmatrix
from .nilpotent4 import NilpotentParams, build_matrix


def _nilpotent(e: float) -> CMatrix:
    return build_matrix(NilpotentParams(2, 9, 1, 0, e, 7))


NILPOTENT_QUARTET: tuple[CMatrix, ...] = tuple(_nilpotent(e) for e in (4, 5, 6, 7))

SCALAR_PLUS_SHIFT_22: CMatrix = cmatrix(
    [
        [1, 0, 0, 0],
        [0, 0, 2, 0],
        [0, 0, 0, 2],
        [0, 0, 0, 0],
    ]
)

SCALAR_PLUS_SHIFT_12: CMatrix = cmatrix(
    [
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 2],
        [0, 0, 0, 0],
    ]
)

_S6 = np.sqrt(6.0)
_R23 = np.sqrt(2.0 / 3.0)

#: A sample element of SU(2,2), produced by indefinite Gram-Schmidt from
#: small Gaussian-integer seeds.
SU22_SAMPLE_Q: CMatrix = cmatrix(
    [
        [1 + 0.5j, 0, -(1 - 1j) / (2 * _S6), 1j / _S6],
        [-0.5j, 2j, (7 + 5j) / (2 * _S6), -1j / _S6],
        [-(1 - 1j) / 2, 1 - 1j, -(1 + 4j) / _S6, -_R23],
        [0, -1j, -_R23 * (1 + 1j), _R23],
    ]
)

#: SU22_SAMPLE_Q . diag(-1, 0, 1, 2) . SU22_SAMPLE_Q^{-1}, written exactly.
SU22_LSAT_EXAMPLE: CMatrix = cmatrix(
    np.array(
        [
            [-10, 4 - 6j, -3 - 11j, 2j],
            [4 + 6j, -22, -15 + 17j, -12 - 2j],
            [3 - 11j, 15 + 17j, 28, 2 + 6j],
            [2j, 12 - 2j, 2 - 6j, 16],
        ],
        dtype=complex,
    )
    / 6.0
)

#: Integer matrix passing the weak angle test yet not UECSM.
WAT_COUNTEREXAMPLE: CMatrix = cmatrix(
    [
        [5, 0, -1, 3],
        [2, 4, 1, 2],
        [2, -2, 6, -2],
        [0, -2, 1, 4],
    ]
)

#: label -> (matrix, expected UECSM status)
GALLERY: dict[str, tuple[CMatrix, bool]] = {
    "nilpotent-e4": (NILPOTENT_QUARTET[0], False),
    "nilpotent-e5": (NILPOTENT_QUARTET[1], False),
    "nilpotent-e6": (NILPOTENT_QUARTET[2], True),
    "nilpotent-e7": (NILPOTENT_QUARTET[3], False),
    "scalar-plus-shift-22": (SCALAR_PLUS_SHIFT_22, True),
    "scalar-plus-shift-12": (SCALAR_PLUS_SHIFT_12, False),
    "su22-lsat-example": (SU22_LSAT_EXAMPLE, False),
    "wat-counterexample": (WAT_COUNTEREXAMPLE, False),
}
