"""Generic two-qubit density-matrix utilities.

Conventions used throughout the package:

* qubit ordering is (first, second); ``np.kron(a, b)`` puts ``a`` on the
  first qubit,
* Bloch data of a two-qubit state ``rho`` is the triple ``(x, y, T)`` with
  ``x_i = Tr[rho (sigma_i x 1)]``, ``y_i = Tr[rho (1 x sigma_i)]`` and
  ``T_ij = Tr[rho (sigma_i x sigma_j)]``,
* entropies are in bits (base-2 logarithms).
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "ID2",
    "EPS_HERM",
    "EPS_TRACE",
    "EPS_PSD",
    "InvalidStateError",
    "check_density_matrix",
    "reduced_first",
    "reduced_second",
    "swap_qubits",
    "bloch_data",
    "bloch_to_matrix",
    "expansion_coefficients",
    "binary_entropy",
    "von_neumann_entropy",
    "density_to_json",
    "density_from_json",
]

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
ID2 = np.eye(2, dtype=complex)

_PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)

# Default tolerances for state validation.  Positivity gets a looser budget
# than Hermiticity/trace because reduced matrices assembled from floating
# point correlators routinely carry O(1e-12) negative tails.
EPS_HERM = 1e-12
EPS_TRACE = 1e-12
EPS_PSD = 1e-10

# Eigenvalues below this are treated as exact zeros inside entropies.
_ENTROPY_CLAMP = 1e-14


class InvalidStateError(ValueError):
    """Raised when a matrix fails a density-matrix validity check."""


def check_density_matrix(
    rho,
    eps_herm: float = EPS_HERM,
    eps_trace: float = EPS_TRACE,
    eps_psd: float = EPS_PSD,
) -> np.ndarray:
    """Validate a 4x4 density matrix and return it as complex128.

    Checks shape, Hermiticity, unit trace and positive semidefiniteness
    (eigenvalues >= -eps_psd).  Raises InvalidStateError with a diagnostic
    message on the first violated condition.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise InvalidStateError(f"expected a 4x4 matrix, got shape {rho.shape}")
    herm = np.max(np.abs(rho - rho.conj().T))
    if herm > eps_herm:
        raise InvalidStateError(f"not Hermitian: max |rho - rho^dag| = {herm:.3e}")
    tr = rho.trace()
    if abs(tr - 1.0) > eps_trace:
        raise InvalidStateError(f"trace is {tr:.17g}, expected 1")
    evals = np.linalg.eigvalsh(rho)
    if evals[0] < -eps_psd:
        raise InvalidStateError(f"negative eigenvalue {evals[0]:.3e}")
    return rho


def reduced_first(rho) -> np.ndarray:
    """Reduced state of the first qubit (second traced out)."""
    r = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    return np.trace(r, axis1=1, axis2=3)


def reduced_second(rho) -> np.ndarray:
    """Reduced state of the second qubit (first traced out)."""
    r = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    return np.trace(r, axis1=0, axis2=2)


_SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)


def swap_qubits(rho) -> np.ndarray:
    """Exchange the two qubits: SWAP . rho . SWAP."""
    rho = np.asarray(rho, dtype=complex)
    return _SWAP @ rho @ _SWAP


# Rows are vec(op^T) for the 15 operators (sigma_i x 1), (1 x sigma_i),
# (sigma_i x sigma_j), so that Tr[rho op] = row . vec(rho).
_BLOCH_OPS = np.array(
    [np.kron(s, ID2).T.ravel() for s in _PAULIS]
    + [np.kron(ID2, s).T.ravel() for s in _PAULIS]
    + [np.kron(si, sj).T.ravel() for si in _PAULIS for sj in _PAULIS]
)


def bloch_data(rho):
    """Full Bloch decomposition ``(x, y, T)`` of a two-qubit state.

    Returns
    -------
    x : (3,) ndarray
        Local Bloch vector of the first qubit.
    y : (3,) ndarray
        Local Bloch vector of the second qubit.
    T : (3, 3) ndarray
        Correlation matrix ``T_ij = Tr[rho (sigma_i x sigma_j)]``.
    """
    rho = np.asarray(rho, dtype=complex)
    coeffs = (_BLOCH_OPS @ rho.ravel()).real
    return coeffs[:3].copy(), coeffs[3:6].copy(), coeffs[6:].reshape(3, 3).copy()


def bloch_to_matrix(x, y, T) -> np.ndarray:
    """Reassemble a two-qubit matrix from its Bloch data."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    T = np.asarray(T, dtype=float)
    rho = np.eye(4, dtype=complex)
    for i, si in enumerate(_PAULIS):
        rho += x[i] * np.kron(si, ID2)
        rho += y[i] * np.kron(ID2, si)
        for j, sj in enumerate(_PAULIS):
            rho += T[i, j] * np.kron(si, sj)
    return rho / 4.0


def expansion_coefficients(rho) -> np.ndarray:
    """Coefficients of the spin-operator expansion of a two-spin state.

    Expands ``rho = sum_{ab} alpha[a, b] O_a x O_b`` in the basis
    ``(1, I^x, I^y, I^z)`` with spin operators ``I^k = sigma_k / 2``.
    Index 0 is the identity.  ``alpha[0, 0]`` is 1/4 for any unit-trace
    state; a vanishing ``alpha[a, b]`` certifies that the corresponding
    operator product is absent from the state.
    """
    rho = np.asarray(rho, dtype=complex)
    ops = [ID2, PAULI_X / 2.0, PAULI_Y / 2.0, PAULI_Z / 2.0]
    # Dual-basis weights: Tr[1 . 1] = 2, Tr[I^k I^k] = 1/2 per factor.
    wt = [0.5, 2.0, 2.0, 2.0]
    alpha = np.empty((4, 4))
    for a, oa in enumerate(ops):
        for b, ob in enumerate(ops):
            tr = np.einsum("ij,ji->", rho, np.kron(oa, ob))
            alpha[a, b] = (wt[a] * wt[b] * tr).real
    return alpha


def binary_entropy(x: float) -> float:
    """Shannon entropy -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0."""
    h = 0.0
    for t in (x, 1.0 - x):
        if t > _ENTROPY_CLAMP:
            h -= t * math.log2(t)
    return h


def von_neumann_entropy(rho) -> float:
    """Entropy in bits of a Hermitian PSD matrix of any dimension."""
    evals = np.linalg.eigvalsh(np.asarray(rho, dtype=complex))
    s = 0.0
    for lam in evals:
        if lam > _ENTROPY_CLAMP:
            s -= lam * math.log2(lam)
    return s


def density_to_json(rho) -> list:
    """Row-major list of [re, im] pairs for a 4x4 complex matrix."""
    rho = np.asarray(rho, dtype=complex)
    return [[float(z.real), float(z.imag)] for z in rho.reshape(-1)]


def density_from_json(data) -> np.ndarray:
    """Inverse of density_to_json."""
    flat = np.asarray(data, dtype=float)
    if flat.shape != (16, 2):
        raise ValueError(f"expected 16 [re, im] pairs, got shape {flat.shape}")
    return (flat[:, 0] + 1j * flat[:, 1]).reshape(4, 4)
