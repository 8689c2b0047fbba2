"""Spin-pair correlations in a nanopore filled with a spin-1/2 gas.

A tagged pair of spins interacts with the remaining n - 2 reservoir spins
through a collective dipolar coupling; starting from a transverse thermal
product state, the reduced pair state at dimensionless time tau is
centrosymmetric and fully described by five real correlators

    p : single-spin transverse polarization (equal for both spins),
    q : symmetric transverse pair correlator,
    r : antisymmetric transverse pair correlator,
    u : mixed transverse-longitudinal correlator,
    v : longitudinal pair correlator (identically zero here),

with closed forms involving tanh(beta / 2) and powers of cos(tau).  beta
is the dimensionless inverse temperature h_bar omega_0 / (k_B T), and tau
grows linearly with physical time.

n = inf selects the large-reservoir limit, where only q = r survive and
the pair state becomes Bell-diagonal and time-independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cs_matrix import CSDensityMatrix, cs_from_params
from .entanglement import ConcurrenceResult, concurrence_cs

__all__ = [
    "H_PLANCK",
    "K_BOLTZMANN",
    "HBAR",
    "OMEGA0_DEFAULT",
    "NanoporeParams",
    "CorrelationSet",
    "beta_from_temperature",
    "temperature_from_beta",
    "tau_special",
    "cos_power",
    "correlations",
    "special_time_correlations",
    "cs_from_correlations",
    "reduced_density",
    "concurrence_nanopore",
    "concurrence_nanopore_full",
]

# Exact SI values (2019 redefinition).
H_PLANCK = 6.62607015e-34
K_BOLTZMANN = 1.380649e-23
HBAR = H_PLANCK / (2.0 * math.pi)

# Default spin resonance frequency, rad/s.
OMEGA0_DEFAULT = 2.0 * math.pi * 500.0e6

# Magnitudes below this after exponentiation are flushed to zero.
_POWER_FLOOR = 1e-300


def beta_from_temperature(temperature: float, omega0: float = OMEGA0_DEFAULT) -> float:
    """Dimensionless inverse temperature h_bar omega0 / (k_B T)."""
    if temperature < 0.0:
        raise ValueError(f"temperature must be >= 0, got {temperature}")
    if temperature == 0.0:
        return math.inf
    if math.isinf(temperature):
        return 0.0
    return HBAR * omega0 / (K_BOLTZMANN * temperature)


def temperature_from_beta(beta: float, omega0: float = OMEGA0_DEFAULT) -> float:
    """Temperature in kelvin for a dimensionless inverse temperature."""
    if beta < 0.0:
        raise ValueError(f"beta must be >= 0, got {beta}")
    if beta == 0.0:
        return math.inf
    if math.isinf(beta):
        return 0.0
    return HBAR * omega0 / (K_BOLTZMANN * beta)


def tau_special(l: int = 0) -> float:
    """The l-th flickering time tau_l = (1 + 2 l) pi / 2."""
    if l < 0:
        raise ValueError(f"l must be >= 0, got {l}")
    return (1 + 2 * l) * math.pi / 2.0


@dataclass(frozen=True)
class NanoporeParams:
    """Model parameters: pore occupancy n, inverse temperature, time.

    n is an integer >= 2 or math.inf for the large-reservoir limit;
    beta >= 0 (math.inf selects zero temperature); tau is the
    dimensionless interaction time; omega0 the resonance frequency used
    for temperature conversions.
    """

    n: float
    beta: float
    tau: float
    omega0: float = OMEGA0_DEFAULT

    def __post_init__(self):
        n = self.n
        if not math.isinf(n):
            if float(n) != int(n):
                raise ValueError(f"n must be an integer or inf, got {n}")
            if int(n) < 2:
                raise ValueError(f"n must be >= 2, got {n}")
            object.__setattr__(self, "n", int(n))
        if not self.beta >= 0.0:
            raise ValueError(f"beta must be >= 0, got {self.beta}")
        if self.omega0 <= 0.0:
            raise ValueError(f"omega0 must be > 0, got {self.omega0}")

    @property
    def temperature(self) -> float:
        """Temperature in kelvin corresponding to beta at omega0."""
        return temperature_from_beta(self.beta, self.omega0)

    @classmethod
    def from_temperature(
        cls, n, temperature: float, tau: float, omega0: float = OMEGA0_DEFAULT
    ) -> "NanoporeParams":
        return cls(
            n=n, beta=beta_from_temperature(temperature, omega0), tau=tau, omega0=omega0
        )


@dataclass(frozen=True)
class CorrelationSet:
    """The five pair correlators of the nanopore model."""

    p: float
    q: float
    r: float
    u: float
    v: float = 0.0

    def as_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "r": self.r, "u": self.u, "v": self.v}


def cos_power(c: float, k) -> float:
    """Sign-tracked c**k through log space, stable for very large k.

    k = 0 returns 1 for any c (empty product); c = 0 with k > 0 returns
    exactly 0; magnitudes underflowing 1e-300 are flushed to zero.
    """
    if k == 0:
        return 1.0
    if c == 0.0:
        return 0.0
    mag = math.exp(k * math.log(abs(c)))
    if mag < _POWER_FLOOR:
        return 0.0
    if c < 0.0 and int(k) % 2 == 1:
        return -mag
    return mag


def correlations(params: NanoporeParams) -> CorrelationSet:
    """Pair correlators at time tau for the given pore parameters."""
    th = math.tanh(params.beta / 2.0)
    if math.isinf(params.n):
        qr = th * th / 8.0
        return CorrelationSet(p=0.0, q=qr, r=qr, u=0.0, v=0.0)
    n = int(params.n)
    tau = params.tau
    c = math.cos(tau)
    p = 0.5 * th * cos_power(c, n - 1)
    q_plus_r = 0.25 * th * th
    q_minus_r = 0.25 * th * th * cos_power(math.cos(2.0 * tau), n - 2)
    u = 0.25 * th * cos_power(c, n - 2) * math.sin(tau)
    return CorrelationSet(
        p=p,
        q=0.5 * (q_plus_r + q_minus_r),
        r=0.5 * (q_plus_r - q_minus_r),
        u=u,
        v=0.0,
    )


def special_time_correlations(n: int, beta: float, l: int = 0) -> CorrelationSet:
    """Correlators at the flickering time tau_l = (1 + 2 l) pi / 2.

    Evaluated in exact arithmetic rather than through cos(tau_l): the
    transverse polarization vanishes identically, u survives only for
    n = 2, and the pair correlators alternate with the parity of n
    (even n keeps q, odd n keeps r).
    """
    if math.isinf(n):
        raise ValueError("flickering times require a finite pore occupancy")
    n = int(n)
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if l < 0:
        raise ValueError(f"l must be >= 0, got {l}")
    th = math.tanh(beta / 2.0)
    q_plus_r = 0.25 * th * th
    # cos(2 tau_l) = -1, so q - r = (q + r) (-1)^(n - 2) = (q + r) (-1)^n.
    q_minus_r = q_plus_r if n % 2 == 0 else -q_plus_r
    # sin(tau_l) = (-1)^l; cos(tau_l)^(n-2) is 1 for n = 2, else 0.
    u = 0.25 * th * (1.0 if l % 2 == 0 else -1.0) if n == 2 else 0.0
    return CorrelationSet(
        p=0.0,
        q=0.5 * (q_plus_r + q_minus_r),
        r=0.5 * (q_plus_r - q_minus_r),
        u=u,
        v=0.0,
    )


def cs_from_correlations(corr: CorrelationSet) -> CSDensityMatrix:
    """Reduced pair density matrix for a set of correlators.

    The map is p1 = 1/4, p2 = p4 = p/2, p3 = p5 = -u, p6 = q - r,
    p7 = q + r; v enters only through its being zero for this model.
    """
    return cs_from_params(
        0.25,
        corr.p / 2.0,
        -corr.u,
        corr.p / 2.0,
        -corr.u,
        corr.q - corr.r,
        corr.q + corr.r,
    )


def reduced_density(params: NanoporeParams) -> CSDensityMatrix:
    """Reduced density matrix of the tagged pair at time tau."""
    return cs_from_correlations(correlations(params))


def concurrence_nanopore(params: NanoporeParams) -> float:
    """Pair concurrence, max(0, 2 (sqrt(r^2 + 4 u^2) + q) - 1/2)."""
    corr = correlations(params)
    w = math.sqrt(corr.r * corr.r + 4.0 * corr.u * corr.u)
    return max(0.0, 2.0 * (w + corr.q) - 0.5)


def concurrence_nanopore_full(params: NanoporeParams) -> ConcurrenceResult:
    """Full spin-flip spectrum route for the same state (cross-check)."""
    return concurrence_cs(reduced_density(params))
