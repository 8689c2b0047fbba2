"""Shared sampling utilities for the test suite."""

import numpy as np

from nanospin_qcorr import cs_from_matrix
from nanospin_qcorr.states import ID2, PAULI_X, PAULI_Y, PAULI_Z

BELL_PHI_PLUS = np.zeros((4, 4), dtype=complex)
BELL_PHI_PLUS[0, 0] = BELL_PHI_PLUS[0, 3] = 0.5
BELL_PHI_PLUS[3, 0] = BELL_PHI_PLUS[3, 3] = 0.5


def random_density4(rng, rank: int = 4) -> np.ndarray:
    """Wishart-distributed 4x4 density matrix of the given rank."""
    g = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    rho = g @ g.conj().T
    return rho / rho.trace()


def centrosymmetrize(rho: np.ndarray) -> np.ndarray:
    """Average a matrix with its double reversal; preserves PSD and trace."""
    return 0.5 * (rho + rho[::-1, ::-1])


def random_cs(rng, rank: int = 4):
    """Random valid centrosymmetric density matrix (as CSDensityMatrix)."""
    return cs_from_matrix(centrosymmetrize(random_density4(rng, rank)))


def random_qubit_density(rng) -> np.ndarray:
    g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    rho = g @ g.conj().T
    return rho / rho.trace()


def random_su2(rng) -> np.ndarray:
    """Haar-ish random single-qubit unitary from a unit quaternion."""
    w, x, y, z = rng.normal(size=4)
    norm = np.sqrt(w * w + x * x + y * y + z * z)
    w, x, y, z = w / norm, x / norm, y / norm, z / norm
    return w * ID2 + 1j * (x * PAULI_X + y * PAULI_Y + z * PAULI_Z)
