"""Brute-force reference engine for the full n-spin problem.

Everything here works with dense 2^n x 2^n matrices in the z product
basis (bit 0 = up, bit 1 = down) and makes no use of the closed forms
implemented elsewhere in the package: collective spin operators are
assembled from explicit Kronecker products, the initial state is the
exact transverse thermal product, and the dipolar evolution is applied
through the diagonal phases of the squared collective z component.  The
analytic correlators and reduced matrices are validated against this
engine.

Dense matrices grow as 4^n; sizes beyond n_max (default 10) raise
ResourceLimitError rather than attempting the allocation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .nanopore import CorrelationSet
from .states import ID2, PAULI_X, PAULI_Y, PAULI_Z, bloch_data

__all__ = [
    "N_MAX_DEFAULT",
    "ResourceLimitError",
    "DenseState",
    "CollectiveOperators",
    "site_operator",
    "build_operators",
    "magnetizations",
    "thermal_initial",
    "evolve",
    "partial_trace_pair",
    "measure_correlations",
    "dipolar_hamiltonian",
]

N_MAX_DEFAULT = 10


class ResourceLimitError(ValueError):
    """Raised when a dense computation would exceed the size budget."""


def _check_size(n: int, n_max: int):
    if math.isinf(n):
        raise ResourceLimitError("the dense engine needs a finite spin count")
    n = int(n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > n_max:
        raise ResourceLimitError(
            f"n = {n} exceeds the dense-matrix budget n_max = {n_max}"
        )
    return n


@dataclass(frozen=True)
class DenseState:
    """Dense n-spin density matrix."""

    n: int
    matrix: np.ndarray

    def __post_init__(self):
        dim = 2**self.n
        if self.matrix.shape != (dim, dim):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not match n = {self.n}"
            )

    def validate(self, eps_herm=1e-12, eps_trace=1e-12, eps_psd=1e-10) -> None:
        """Assert Hermiticity, unit trace and positivity; raises on failure."""
        m = self.matrix
        herm = np.max(np.abs(m - m.conj().T))
        if herm > eps_herm:
            raise ValueError(f"not Hermitian: {herm:.3e}")
        tr = m.trace()
        if abs(tr - 1.0) > eps_trace:
            raise ValueError(f"trace {tr:.17g} != 1")
        lo = np.linalg.eigvalsh(m)[0]
        if lo < -eps_psd:
            raise ValueError(f"negative eigenvalue {lo:.3e}")


@dataclass(frozen=True)
class CollectiveOperators:
    """Collective spin components and total spin squared for n spins."""

    n: int
    ix: np.ndarray
    iy: np.ndarray
    iz: np.ndarray
    i2: np.ndarray


def site_operator(op2, site: int, n: int) -> np.ndarray:
    """Embed a single-spin operator at the given site of an n-spin chain."""
    if not 0 <= site < n:
        raise ValueError(f"site {site} out of range for n = {n}")
    out = np.array([[1.0 + 0.0j]])
    for k in range(n):
        out = np.kron(out, op2 if k == site else ID2)
    return out


def build_operators(n: int, n_max: int = N_MAX_DEFAULT) -> CollectiveOperators:
    """Collective I_x, I_y, I_z and I^2 as dense matrices."""
    n = _check_size(n, n_max)
    dim = 2**n
    ix = np.zeros((dim, dim), dtype=complex)
    iy = np.zeros((dim, dim), dtype=complex)
    iz = np.zeros((dim, dim), dtype=complex)
    for site in range(n):
        ix += site_operator(PAULI_X / 2.0, site, n)
        iy += site_operator(PAULI_Y / 2.0, site, n)
        iz += site_operator(PAULI_Z / 2.0, site, n)
    i2 = ix @ ix + iy @ iy + iz @ iz
    return CollectiveOperators(n=n, ix=ix, iy=iy, iz=iz, i2=i2)


def magnetizations(n: int) -> np.ndarray:
    """Diagonal of I_z in the product basis: m = n/2 - popcount(s)."""
    return np.array([n / 2.0 - s.bit_count() for s in range(2**n)])


def thermal_initial(n: int, beta: float, n_max: int = N_MAX_DEFAULT) -> DenseState:
    """Transverse thermal product state.

    Exactly equal to exp(beta I_x) / Tr[...] because the single-site
    factors commute: each site carries (1 + tanh(beta/2) sigma_x) / 2.
    """
    n = _check_size(n, n_max)
    factor = 0.5 * (ID2 + math.tanh(beta / 2.0) * PAULI_X)
    rho = np.array([[1.0 + 0.0j]])
    for _ in range(n):
        rho = np.kron(rho, factor)
    return DenseState(n=n, matrix=rho)


def evolve(state: DenseState, tau: float) -> DenseState:
    """Apply the dipolar evolution for a dimensionless time tau.

    The propagator is diagonal in the product basis with phases
    exp(-i tau m^2) on each magnetization sector; the total-spin part of
    the full dipolar Hamiltonian commutes with the transverse thermal
    state and drops out of the dynamics.
    """
    m = magnetizations(state.n)
    phases = np.exp(-1j * tau * m * m)
    rho = state.matrix * np.outer(phases, phases.conj())
    return DenseState(n=state.n, matrix=rho)


def partial_trace_pair(state: DenseState) -> np.ndarray:
    """Reduced 4x4 density matrix of the first two spins."""
    if state.n < 2:
        raise ValueError("need at least two spins to form a pair")
    rest = 2 ** (state.n - 2)
    r = state.matrix.reshape(4, rest, 4, rest)
    return np.trace(r, axis1=1, axis2=3)


def measure_correlations(state: DenseState) -> CorrelationSet:
    """The five pair correlators read off the reduced pair state.

    Conventions: p = <I_1^x>, q = <I_1^x I_2^x>, r = <I_1^y I_2^y>,
    u = <I_1^y I_2^z>, v = <I_1^z I_2^z>, with spin operators
    I^k = sigma_k / 2.  p and u have a permutation-symmetric partner
    (<I_2^x> and <I_1^z I_2^y>); both orderings are evaluated and must
    agree to 1e-12, which guards the pair-exchange symmetry of the
    model.
    """
    x, y, T = bloch_data(partial_trace_pair(state))
    p_first, p_second = 0.5 * x[0], 0.5 * y[0]
    u_first, u_second = 0.25 * T[1, 2], 0.25 * T[2, 1]
    if abs(p_first - p_second) > 1e-12 or abs(u_first - u_second) > 1e-12:
        raise ValueError(
            "pair-exchange symmetry violated: "
            f"|dp| = {abs(p_first - p_second):.3e}, "
            f"|du| = {abs(u_first - u_second):.3e}"
        )
    return CorrelationSet(
        p=p_first,
        q=0.25 * T[0, 0],
        r=0.25 * T[1, 1],
        u=u_first,
        v=0.25 * T[2, 2],
    )


def dipolar_hamiltonian(ops: CollectiveOperators, coupling: float = 1.0) -> np.ndarray:
    """Full collective dipolar Hamiltonian (coupling/2) (3 I_z^2 - I^2).

    With this normalization the dimensionless time is
    tau = (3 coupling / 2) t.  Provided for cross-checks of the
    diagonal-phase evolution.
    """
    return 0.5 * coupling * (3.0 * ops.iz @ ops.iz - ops.i2)
