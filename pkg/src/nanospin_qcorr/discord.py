"""Quantum discord of two-qubit states.

Discord is the gap between total and classical correlations,

    Q = I(rho) - C(rho),
    I = S(rho_A) + S(rho_B) - S(rho),
    C = max_basis [ S(rho_A) - sum_s p_s S(rho_A | outcome s) ],

where the maximum runs over projective measurements on one qubit (the
second by convention here).  The general solver works in Bloch form: a
coarse grid over the measurement sphere followed by coordinate-wise
golden-section refinement.  A closed form is available for the
symmetric-correlator states that arise in the large-reservoir limit of
the nanopore model, together with its low- and high-temperature
asymptotes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import conditional_entropy_grid, conditional_entropy_point
from .states import (
    ID2,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    binary_entropy,
    bloch_data,
    check_density_matrix,
    von_neumann_entropy,
)

__all__ = [
    "MeasurementBasis",
    "DiscordResult",
    "discord_bell_diagonal",
    "discord_low_t_asymptotic",
    "discord_high_t_asymptotic",
    "discord_numeric",
    "measurement_conditional_entropy",
]

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0

DEFAULT_GRID = (64, 128)
DEFAULT_REFINE_TOL = 1e-8


@dataclass(frozen=True)
class MeasurementBasis:
    """Projective measurement direction on the Bloch sphere.

    theta is the polar angle in [0, pi], phi the azimuth in [0, 2 pi).
    """

    theta: float
    phi: float

    @property
    def axis(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array(
            [st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)]
        )

    def projectors(self):
        """The pair of rank-1 projectors (1 +- n.sigma)/2."""
        n = self.axis
        ns = n[0] * PAULI_X + n[1] * PAULI_Y + n[2] * PAULI_Z
        return 0.5 * (ID2 + ns), 0.5 * (ID2 - ns)


@dataclass(frozen=True)
class DiscordResult:
    """Correlation split of a state for the optimal measurement."""

    mutual_information: float
    classical_correlation: float
    discord: float
    basis: MeasurementBasis

    def as_dict(self) -> dict:
        return {
            "mutual_information": self.mutual_information,
            "classical_correlation": self.classical_correlation,
            "discord": self.discord,
            "theta": self.basis.theta,
            "phi": self.basis.phi,
        }


def _xlog2x(t: float) -> float:
    return t * math.log2(t) if t > 1e-14 else 0.0


def discord_bell_diagonal(q: float) -> float:
    """Closed-form discord of the symmetric-correlator state.

    Valid for the Bell-diagonal family with transverse correlators equal
    to 4q and vanishing longitudinal one; the physical domain is
    |8 q| <= 1.
    """
    if abs(8.0 * q) > 1.0 + 1e-12:
        raise ValueError(f"q = {q} outside the physical domain |8q| <= 1")
    e = 8.0 * q
    m = 4.0 * q
    return (
        0.25 * (_xlog2x(1.0 + e) + _xlog2x(1.0 - e))
        - 0.5 * (_xlog2x(1.0 + m) + _xlog2x(1.0 - m))
    )


def discord_low_t_asymptotic(beta: float) -> float:
    """Low-temperature asymptote of the large-reservoir discord.

    Approaches the saturation value (3/4) log2(4/3) from below with an
    exponentially small correction.
    """
    return 0.75 * math.log2(4.0 / 3.0) - beta * math.exp(-beta) / math.sqrt(2.0)


def discord_high_t_asymptotic(beta: float) -> float:
    """High-temperature asymptote of the large-reservoir discord."""
    return beta**4 / (128.0 * math.log(2.0))


def _resolve_bloch(rho, measured: str, validate: bool):
    rho = np.asarray(rho, dtype=complex)
    if validate:
        rho = check_density_matrix(rho)
    x, y, T = bloch_data(rho)
    side = measured.strip().lower()
    if side in ("second", "b", "2"):
        pass
    elif side in ("first", "a", "1"):
        # Measuring the first qubit of rho is the same problem with the
        # qubit roles exchanged: swap local vectors, transpose T.
        x, y = y, x
        T = T.T.copy()
    else:
        raise ValueError(f"measured must name a qubit, got {measured!r}")
    return rho, x, y, T


def measurement_conditional_entropy(
    rho, theta: float, phi: float, measured: str = "second", validate: bool = True
) -> float:
    """Conditional entropy of the unmeasured qubit for a fixed direction."""
    _, x, y, T = _resolve_bloch(rho, measured, validate)
    return conditional_entropy_point(x, y, T, theta, phi)


def _golden_min(f, a: float, b: float, tol: float = 1e-11):
    """Golden-section minimum of f on [a, b]; returns (x, f(x))."""
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc = f(c)
    fd = f(d)
    while (b - a) > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    xm = 0.5 * (a + b)
    return xm, f(xm)


def discord_numeric(
    rho,
    grid=DEFAULT_GRID,
    refine_tol: float = DEFAULT_REFINE_TOL,
    measured: str = "second",
    validate: bool = True,
) -> DiscordResult:
    """Discord of an arbitrary two-qubit state by measurement search.

    Parameters
    ----------
    rho : array_like
        4x4 density matrix.
    grid : (int, int)
        Number of polar x azimuthal samples of the initial sweep.  The
        polar grid includes both poles; the azimuthal one is periodic.
    refine_tol : float
        Refinement stops once a full coordinate cycle improves the
        measurement objective by less than this.
    measured : str
        Which qubit is measured, "second" (default) or "first".
    validate : bool
        Validate rho before use.

    Deterministic: ties on the initial grid resolve to the first point
    in (theta, phi) lexicographic order, and the refinement is exact
    golden-section with fixed brackets.
    """
    rho, x, y, T = _resolve_bloch(rho, measured, validate)
    s_a = binary_entropy(0.5 * (1.0 + float(np.linalg.norm(x))))
    s_b = binary_entropy(0.5 * (1.0 + float(np.linalg.norm(y))))
    s_ab = von_neumann_entropy(rho)
    mutual = s_a + s_b - s_ab

    n_th, n_ph = grid
    thetas = np.linspace(0.0, math.pi, n_th)
    phis = np.linspace(0.0, 2.0 * math.pi, n_ph, endpoint=False)
    values = conditional_entropy_grid(x, y, T, thetas, phis)
    flat = int(np.argmin(values))
    i, j = divmod(flat, n_ph)
    theta = float(thetas[i])
    phi = float(phis[j])
    best = float(values[i, j])

    dth = float(thetas[1] - thetas[0])
    dph = float(phis[1] - phis[0])
    for _ in range(8):
        prev = best
        t_lo = max(0.0, theta - dth)
        t_hi = min(math.pi, theta + dth)
        t_new, f_t = _golden_min(
            lambda t: conditional_entropy_point(x, y, T, t, phi), t_lo, t_hi
        )
        if f_t < best:
            theta, best = t_new, f_t
        p_new, f_p = _golden_min(
            lambda p: conditional_entropy_point(x, y, T, theta, p),
            phi - dph,
            phi + dph,
        )
        if f_p < best:
            phi, best = p_new, f_p
        if prev - best < refine_tol:
            break

    classical = s_a - best
    return DiscordResult(
        mutual_information=mutual,
        classical_correlation=classical,
        discord=mutual - classical,
        basis=MeasurementBasis(theta=theta, phi=phi % (2.0 * math.pi)),
    )
