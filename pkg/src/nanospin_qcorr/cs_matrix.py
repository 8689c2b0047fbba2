"""Centrosymmetric two-qubit density matrices.

A 4x4 Hermitian matrix M is centrosymmetric when M[i, j] = M[5-i, 5-j]
(1-based indices), i.e. it is invariant under simultaneous reversal of rows
and columns.  For a unit-trace density matrix with equal middle diagonal
entries this leaves seven real parameters p1..p7:

    [ p1       p2+i p3   p4+i p5   p6      ]
    [ p2-i p3  1/2-p1    p7        p4-i p5 ]
    [ p4-i p5  p7        1/2-p1    p2-i p3 ]
    [ p6       p4+i p5   p2+i p3   p1      ]

The spectrum splits into two branches with closed-form eigenvalues; no
dense eigensolver is needed for states of this family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import EPS_PSD, InvalidStateError, check_density_matrix

__all__ = [
    "CSDensityMatrix",
    "ValidationReport",
    "BlochDecomposition",
    "cs_from_params",
    "cs_from_vector",
    "cs_from_matrix",
    "is_centrosymmetric",
    "cs_eigenvalues",
    "cs_eigenvalues_sorted",
    "validate_density",
    "bloch_decompose",
    "cs_to_json",
    "cs_from_json",
]


@dataclass(frozen=True)
class CSDensityMatrix:
    """Seven-parameter centrosymmetric two-qubit density matrix."""

    p1: float
    p2: float
    p3: float
    p4: float
    p5: float
    p6: float
    p7: float

    @property
    def params(self) -> np.ndarray:
        """Parameters as a length-7 float array (p1..p7)."""
        return np.array(
            [self.p1, self.p2, self.p3, self.p4, self.p5, self.p6, self.p7]
        )

    def to_matrix(self) -> np.ndarray:
        """Dense 4x4 complex matrix."""
        p1, p2, p3, p4, p5, p6, p7 = self.params
        a = p2 + 1j * p3
        b = p4 + 1j * p5
        d = 0.5 - p1
        return np.array(
            [
                [p1, a, b, p6],
                [a.conjugate(), d, p7, b.conjugate()],
                [b.conjugate(), p7, d, a.conjugate()],
                [p6, b, a, p1],
            ],
            dtype=complex,
        )


def cs_from_params(
    p1: float, p2: float, p3: float, p4: float, p5: float, p6: float, p7: float
) -> CSDensityMatrix:
    """Build a CSDensityMatrix from its seven real parameters."""
    return CSDensityMatrix(
        float(p1), float(p2), float(p3), float(p4), float(p5), float(p6), float(p7)
    )


def cs_from_vector(params) -> CSDensityMatrix:
    """Build a CSDensityMatrix from a length-7 sequence (p1..p7)."""
    p = np.asarray(params, dtype=float)
    if p.shape != (7,):
        raise ValueError(f"expected 7 parameters, got shape {p.shape}")
    return cs_from_params(*p)


def is_centrosymmetric(rho, tol: float = 1e-12) -> bool:
    """True when M[i, j] = M[5-i, 5-j] entrywise within tol."""
    rho = np.asarray(rho, dtype=complex)
    return bool(np.max(np.abs(rho - rho[::-1, ::-1])) <= tol)


def cs_from_matrix(rho, tol: float = 1e-10) -> CSDensityMatrix:
    """Extract parameters from a dense matrix of the centrosymmetric family.

    The matrix must be Hermitian with unit trace, centrosymmetric, and have
    equal middle diagonal entries; deviations beyond ``tol`` raise
    InvalidStateError.  Positivity is not required here.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise InvalidStateError(f"expected a 4x4 matrix, got shape {rho.shape}")
    herm = np.max(np.abs(rho - rho.conj().T))
    if herm > tol:
        raise InvalidStateError(f"not Hermitian: max deviation {herm:.3e}")
    if abs(rho.trace() - 1.0) > tol:
        raise InvalidStateError(f"trace is {rho.trace():.17g}, expected 1")
    if not is_centrosymmetric(rho, tol):
        dev = np.max(np.abs(rho - rho[::-1, ::-1]))
        raise InvalidStateError(f"not centrosymmetric: max deviation {dev:.3e}")
    if abs(rho[1, 1] - rho[2, 2]) > tol:
        raise InvalidStateError("middle diagonal entries differ")
    m = cs_from_params(
        rho[0, 0].real,
        rho[0, 1].real,
        rho[0, 1].imag,
        rho[0, 2].real,
        rho[0, 2].imag,
        rho[0, 3].real,
        rho[1, 2].real,
    )
    resid = np.max(np.abs(m.to_matrix() - rho))
    if resid > tol:
        raise InvalidStateError(f"not of the 7-parameter form: residual {resid:.3e}")
    return m


def cs_eigenvalues(m: CSDensityMatrix) -> tuple:
    """Closed-form eigenvalues (L1, L2, L3, L4) of a centrosymmetric matrix.

    The first pair shares the branch with mean (p6 + p7 + 1/2)/2, the second
    the branch with mean (1/2 - p6 - p7)/2; within each pair the '+' root
    comes first.  The four values always sum to 1.
    """
    p1, p2, p3, p4, p5, p6, p7 = m.params
    s1 = 0.5 * (p6 + p7 + 0.5)
    r1 = math.sqrt(
        0.25 * (2.0 * p1 + p6 - p7 - 0.5) ** 2 + (p2 + p4) ** 2 + (p3 + p5) ** 2
    )
    s2 = 0.5 * (0.5 - p6 - p7)
    r2 = math.sqrt(
        0.25 * (2.0 * p1 - p6 + p7 - 0.5) ** 2 + (p2 - p4) ** 2 + (p3 - p5) ** 2
    )
    return (s1 + r1, s1 - r1, s2 + r2, s2 - r2)


def cs_eigenvalues_sorted(m: CSDensityMatrix) -> np.ndarray:
    """Eigenvalues in ascending order, for multiset comparisons."""
    return np.sort(np.array(cs_eigenvalues(m)))


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a positivity check on a centrosymmetric matrix."""

    ok: bool
    eigenvalues: tuple
    violations: tuple

    def __bool__(self) -> bool:
        return self.ok


def validate_density(m: CSDensityMatrix, eps_psd: float = EPS_PSD) -> ValidationReport:
    """Check that the closed-form spectrum is nonnegative.

    Hermiticity and unit trace hold structurally for any real parameter
    vector, so eigenvalue nonnegativity is the only nontrivial condition.
    The report names each violating eigenvalue.
    """
    evals = cs_eigenvalues(m)
    violations = []
    for k, lam in enumerate(evals, start=1):
        if lam < -eps_psd:
            violations.append(f"eigenvalue L{k} = {lam:.6e} < -{eps_psd:g}")
    return ValidationReport(
        ok=not violations, eigenvalues=evals, violations=tuple(violations)
    )


@dataclass(frozen=True)
class BlochDecomposition:
    """Bloch data of a centrosymmetric state.

    ``x`` and ``y`` are the local vectors of the first and second qubit;
    ``T`` is the 3x3 correlation matrix.  For this family both local
    vectors point along the x-axis and T couples only the (y, z) sector
    off-diagonally.
    """

    x: np.ndarray
    y: np.ndarray
    T: np.ndarray


def bloch_decompose(m: CSDensityMatrix) -> BlochDecomposition:
    """Closed-form Bloch data of a centrosymmetric state."""
    p1, p2, p3, p4, p5, p6, p7 = m.params
    x = np.array([4.0 * p4, 0.0, 0.0])
    y = np.array([4.0 * p2, 0.0, 0.0])
    T = np.array(
        [
            [2.0 * (p6 + p7), 0.0, 0.0],
            [0.0, 2.0 * (p7 - p6), -4.0 * p5],
            [0.0, -4.0 * p3, 4.0 * p1 - 1.0],
        ]
    )
    return BlochDecomposition(x=x, y=y, T=T)


def cs_to_json(m: CSDensityMatrix) -> dict:
    """JSON-friendly form {"p": [p1, ..., p7]}."""
    return {"p": [float(v) for v in m.params]}


def cs_from_json(data: dict) -> CSDensityMatrix:
    """Inverse of cs_to_json."""
    return cs_from_vector(data["p"])
