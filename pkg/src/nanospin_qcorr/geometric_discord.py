"""Geometric (Hilbert-Schmidt) discord of two-qubit states.

In Bloch form, with x the local vector of the first qubit and T the
correlation matrix, the geometric discord for measurements on the first
qubit is

    Q_g = (||x||^2 + ||T||^2 - k_max) / 2,

where k_max is the largest eigenvalue of K = x x^T + T T^T.  The factor
1/2 fixes the normalization used throughout this package; no rescaling
by the maximal value is applied.

For the centrosymmetric family K is block-diagonal (an isolated xx entry
plus a symmetric 2x2 block in the yz sector), so the spectrum has a
closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cs_matrix import CSDensityMatrix
from .states import bloch_data, check_density_matrix

__all__ = [
    "KMatrixSpectrum",
    "k_spectrum_cs",
    "geometric_discord_cs",
    "geometric_discord_generic",
    "geometric_discord_high_t_asymptotic",
]

# Relative cancellation level in the 2x2 eigenvalue discriminant beyond
# which the difference is recomputed with compensated summation.
_CANCEL_GUARD = 1e-8


@dataclass(frozen=True)
class KMatrixSpectrum:
    """Eigenvalues of K = x x^T + T T^T for a centrosymmetric state.

    k1 is the isolated eigenvalue from the x sector; k2 >= k3 are the
    eigenvalues of the yz block.  All are nonnegative for valid states.
    """

    k1: float
    k2: float
    k3: float

    @property
    def max(self) -> float:
        return max(self.k1, self.k2, self.k3)

    @property
    def total(self) -> float:
        return self.k1 + self.k2 + self.k3


def k_spectrum_cs(m: CSDensityMatrix) -> KMatrixSpectrum:
    """Closed-form spectrum of K for a centrosymmetric state."""
    p1, p2, p3, p4, p5, p6, p7 = m.params
    k1 = 16.0 * p4 * p4 + 4.0 * (p6 + p7) ** 2
    # yz block of K: [[a, c], [c, b]].
    a = 4.0 * (p7 - p6) ** 2 + 16.0 * p5 * p5
    b = 16.0 * p3 * p3 + (4.0 * p1 - 1.0) ** 2
    c = -8.0 * p3 * (p7 - p6) - 4.0 * p5 * (4.0 * p1 - 1.0)
    diff = a - b
    if abs(diff) < _CANCEL_GUARD * (abs(a) + abs(b)):
        diff = math.fsum(
            [
                4.0 * (p7 - p6) ** 2,
                16.0 * p5 * p5,
                -16.0 * p3 * p3,
                -((4.0 * p1 - 1.0) ** 2),
            ]
        )
    half_sum = 0.5 * (a + b)
    half_gap = 0.5 * math.sqrt(diff * diff + 4.0 * c * c)
    return KMatrixSpectrum(k1=k1, k2=half_sum + half_gap, k3=half_sum - half_gap)


def geometric_discord_cs(m: CSDensityMatrix) -> float:
    """Closed-form geometric discord of a centrosymmetric state."""
    ks = k_spectrum_cs(m)
    return 0.5 * (ks.total - ks.max)


def geometric_discord_generic(rho, side: str = "first", validate: bool = True) -> float:
    """Geometric discord of an arbitrary state from its Bloch data.

    ``side`` selects the measured qubit: "first" (default, the convention
    of the closed form above) uses K = x x^T + T T^T, "second" uses
    K = y y^T + T^T T.
    """
    rho = np.asarray(rho, dtype=complex)
    if validate:
        rho = check_density_matrix(rho)
    x, y, T = bloch_data(rho)
    s = side.strip().lower()
    if s in ("first", "a", "1"):
        v, M = x, T
    elif s in ("second", "b", "2"):
        v, M = y, T.T
    else:
        raise ValueError(f"side must name a qubit, got {side!r}")
    K = np.outer(v, v) + M @ M.T
    k_max = float(np.linalg.eigvalsh(K)[-1])
    return 0.5 * (float(v @ v) + float(np.sum(M * M)) - k_max)


def geometric_discord_high_t_asymptotic(beta: float) -> float:
    """High-temperature asymptote of the large-reservoir geometric discord."""
    return beta**4 / 128.0
