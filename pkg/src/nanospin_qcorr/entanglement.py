"""Two-qubit entanglement measures.

Concurrence of a state rho is computed from the spin-flipped companion

    rho~ = (sigma_y x sigma_y) rho* (sigma_y x sigma_y)

as C = max(0, 2 lambda_max - sum lambda), where the lambda are the square
roots of the eigenvalues of rho rho~ in descending order.  Entanglement of
formation follows from C through the usual binary-entropy formula.

Two routes are provided: a generic numeric one for arbitrary states, and a
closed form for the centrosymmetric family that needs no eigensolver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cs_matrix import CSDensityMatrix
from .states import (
    InvalidStateError,
    PAULI_Y,
    binary_entropy,
    check_density_matrix,
)

__all__ = [
    "ConcurrenceResult",
    "BLOCK_ROTATION",
    "spin_flip",
    "concurrence_numeric",
    "concurrence_cs",
    "cs_block_diagonalize",
    "entanglement_of_formation",
]

_YY = np.kron(PAULI_Y, PAULI_Y)

# Negative radicands in the closed form beyond this magnitude indicate an
# invalid (non-PSD) parameter set rather than floating-point noise.
_RADICAND_CLAMP = 1e-12
_RADICAND_ERROR = 1e-9


@dataclass(frozen=True)
class ConcurrenceResult:
    """Spin-flip spectrum with the derived entanglement measures.

    ``lambdas`` are the four spin-flip singular values in descending
    order; ``concurrence`` is max(0, 2 max - sum); ``eof`` is the
    entanglement of formation in bits.
    """

    lambdas: tuple
    concurrence: float
    eof: float

    def as_dict(self) -> dict:
        return {
            "lambdas": list(self.lambdas),
            "concurrence": self.concurrence,
            "eof": self.eof,
        }


def entanglement_of_formation(concurrence: float) -> float:
    """Entanglement of formation in bits for a given concurrence."""
    c = min(max(concurrence, 0.0), 1.0)
    return binary_entropy(0.5 * (1.0 + math.sqrt(1.0 - c * c)))


def _result_from_lambdas(lambdas) -> ConcurrenceResult:
    lam = np.sort(np.asarray(lambdas, dtype=float))[::-1]
    c = max(0.0, 2.0 * lam[0] - lam.sum())
    return ConcurrenceResult(
        lambdas=tuple(float(v) for v in lam),
        concurrence=float(c),
        eof=entanglement_of_formation(c),
    )


def spin_flip(rho) -> np.ndarray:
    """Spin-flipped companion (sigma_y x sigma_y) rho* (sigma_y x sigma_y)."""
    rho = np.asarray(rho, dtype=complex)
    return _YY @ rho.conj() @ _YY


def concurrence_numeric(rho, validate: bool = True) -> ConcurrenceResult:
    """Concurrence of an arbitrary two-qubit state.

    The eigenvalues of rho rho~ equal those of the Hermitian PSD matrix
    A rho~ A with A = sqrt(rho), so a symmetric eigensolver can be used
    throughout; this is markedly more stable near degeneracies than
    feeding the non-normal product to a general eigensolver.
    """
    rho = np.asarray(rho, dtype=complex)
    if validate:
        rho = check_density_matrix(rho)
    evals, vecs = np.linalg.eigh(rho)
    root = vecs @ np.diag(np.sqrt(np.clip(evals, 0.0, None))) @ vecs.conj().T
    prod = root @ spin_flip(rho) @ root
    mu = np.linalg.eigvalsh(prod)
    mu = np.clip(mu, 0.0, None)
    return _result_from_lambdas(np.sqrt(mu))


def _safe_sqrt(radicand: float, label: str) -> float:
    if radicand < -_RADICAND_ERROR:
        raise InvalidStateError(
            f"inconsistent parameters: {label} radicand = {radicand:.3e} < 0"
        )
    return math.sqrt(max(radicand, 0.0))


def concurrence_cs(m: CSDensityMatrix) -> ConcurrenceResult:
    """Closed-form concurrence for the centrosymmetric family.

    The spin flip preserves centrosymmetry, so the four singular values
    combine pairwise sums/differences of four square roots.  Two of the
    radicands are differences of squares; they are nonnegative for every
    valid state, and small negative values from rounding are clamped.
    """
    p1, p2, p3, p4, p5, p6, p7 = m.params
    a = math.sqrt((2.0 * p1 + p6 - 0.5 - p7) ** 2 + 4.0 * (p3 + p5) ** 2)
    b = _safe_sqrt(
        (0.5 + p6 + p7) ** 2 - 4.0 * (p2 + p4) ** 2, "first-branch"
    )
    c = math.sqrt((2.0 * p1 - p6 - 0.5 + p7) ** 2 + 4.0 * (p3 - p5) ** 2)
    d = _safe_sqrt(
        (0.5 - p6 - p7) ** 2 - 4.0 * (p2 - p4) ** 2, "second-branch"
    )
    lambdas = (
        0.5 * (a + b),
        0.5 * abs(a - b),
        0.5 * (c + d),
        0.5 * abs(c - d),
    )
    return _result_from_lambdas(lambdas)


# Orthogonal, symmetric, involutory rotation that block-diagonalizes every
# centrosymmetric 4x4 matrix into two 2x2 blocks.
BLOCK_ROTATION = np.array(
    [
        [1.0, 0.0, 0.0, 1.0],
        [0.0, 1.0, 1.0, 0.0],
        [0.0, 1.0, -1.0, 0.0],
        [1.0, 0.0, 0.0, -1.0],
    ]
) / math.sqrt(2.0)


def cs_block_diagonalize(m: CSDensityMatrix):
    """Rotate a centrosymmetric matrix into its two 2x2 blocks.

    Returns (block1, block2) with block1 carrying the (L1, L2) eigenvalue
    branch and block2 the (L3, L4) branch.  For real parameter matrices
    both blocks are real.
    """
    rot = BLOCK_ROTATION
    full = rot @ m.to_matrix() @ rot
    block1 = full[:2, :2]
    block2 = full[2:, 2:]
    off = max(np.max(np.abs(full[:2, 2:])), np.max(np.abs(full[2:, :2])))
    if off > 1e-12:
        raise InvalidStateError(f"block off-diagonal residual {off:.3e}")
    return block1, block2
