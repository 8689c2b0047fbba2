"""Cross-validation of the closed forms against the dense engine.

Runs the analytic model and the brute-force reference side by side over a
grid of (n, beta, tau) and tracks the worst absolute discrepancy per
quantity.  This is the machinery behind the ``verify`` CLI subcommand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .entanglement import concurrence_cs, concurrence_numeric
from .exact_oracle import (
    N_MAX_DEFAULT,
    evolve,
    measure_correlations,
    partial_trace_pair,
    thermal_initial,
)
from .discord import discord_numeric
from .geometric_discord import geometric_discord_cs, geometric_discord_generic
from .nanopore import NanoporeParams, correlations, cs_from_correlations
from .states import expansion_coefficients

__all__ = [
    "DEFAULT_TOLERANCES",
    "VerificationReport",
    "run_verification",
    "format_report",
]

DEFAULT_TOLERANCES = {
    "correlations": 1e-10,
    "reduced_matrix": 1e-10,
    "concurrence": 1e-10,
    "geometric_discord": 1e-10,
    "discord": 1e-6,
    "structural_zeros": 1e-12,
}

# Operator-expansion indices that must vanish for this model: mixed
# identity-z, xy/yx and zx/xz products (index 0 = identity, 1..3 = x, y, z).
_ZERO_ALPHA_INDICES = ((0, 3), (3, 0), (1, 2), (2, 1), (3, 1), (1, 3))


@dataclass(frozen=True)
class VerificationReport:
    """Worst-case |analytic - reference| per quantity over a grid."""

    max_discrepancies: dict
    tolerances: dict
    states_checked: int

    @property
    def failures(self) -> tuple:
        return tuple(
            name
            for name, val in self.max_discrepancies.items()
            if val > self.tolerances[name]
        )

    @property
    def ok(self) -> bool:
        return not self.failures


def run_verification(
    n_values=(3, 4, 5, 6, 7, 8, 9),
    betas=(0.5, 1.0, 3.0, 10.0),
    n_tau: int = 32,
    include_discord: bool = True,
    corruption: float = 0.0,
    n_max: int = N_MAX_DEFAULT,
) -> VerificationReport:
    """Compare closed forms against the dense engine on a parameter grid.

    ``corruption`` is a test hook: it is added to the analytic correlator
    q before any derived quantity is computed, so a nonzero value must
    make the comparison fail.

    Tau values cover one full period, ``n_tau`` points in [0, 2 pi).
    """
    taus = np.linspace(0.0, 2.0 * math.pi, n_tau, endpoint=False)
    worst = {name: 0.0 for name in DEFAULT_TOLERANCES}
    if not include_discord:
        worst.pop("discord")
    states = 0
    for n in n_values:
        for beta in betas:
            rho0 = thermal_initial(n, beta, n_max=n_max)
            for tau in taus:
                state = evolve(rho0, float(tau))
                rho_ref = partial_trace_pair(state)
                corr_ref = measure_correlations(state)

                params = NanoporeParams(n=n, beta=beta, tau=float(tau))
                corr = correlations(params)
                if corruption:
                    corr = replace(corr, q=corr.q + corruption)
                m = cs_from_correlations(corr)
                rho = m.to_matrix()

                diff_corr = max(
                    abs(corr.p - corr_ref.p),
                    abs(corr.q - corr_ref.q),
                    abs(corr.r - corr_ref.r),
                    abs(corr.u - corr_ref.u),
                    abs(corr.v - corr_ref.v),
                )
                worst["correlations"] = max(worst["correlations"], diff_corr)

                diff_rho = float(np.max(np.abs(rho - rho_ref)))
                worst["reduced_matrix"] = max(worst["reduced_matrix"], diff_rho)

                c_model = max(
                    0.0,
                    2.0 * (math.sqrt(corr.r**2 + 4.0 * corr.u**2) + corr.q) - 0.5,
                )
                c_closed = concurrence_cs(m).concurrence
                c_ref = concurrence_numeric(rho_ref).concurrence
                diff_c = max(abs(c_model - c_closed), abs(c_closed - c_ref))
                worst["concurrence"] = max(worst["concurrence"], diff_c)

                g_closed = geometric_discord_cs(m)
                g_ref = geometric_discord_generic(rho_ref)
                worst["geometric_discord"] = max(
                    worst["geometric_discord"], abs(g_closed - g_ref)
                )

                if include_discord:
                    q_closed = discord_numeric(rho, validate=False).discord
                    q_ref = discord_numeric(rho_ref, validate=False).discord
                    worst["discord"] = max(worst["discord"], abs(q_closed - q_ref))

                alpha = expansion_coefficients(rho_ref)
                zero_terms = [abs(alpha[i, j]) for i, j in _ZERO_ALPHA_INDICES]
                zero_terms.append(abs(corr_ref.v))
                worst["structural_zeros"] = max(
                    worst["structural_zeros"], max(zero_terms)
                )
                states += 1
    tols = {name: DEFAULT_TOLERANCES[name] for name in worst}
    return VerificationReport(
        max_discrepancies=worst, tolerances=tols, states_checked=states
    )


def format_report(report: VerificationReport) -> str:
    """Human-readable per-quantity summary, one line each."""
    lines = [f"checked {report.states_checked} states"]
    for name, val in report.max_discrepancies.items():
        tol = report.tolerances[name]
        verdict = "ok" if val <= tol else "FAIL"
        lines.append(f"{name}: max |diff| = {val:.3e} (tolerance {tol:.0e}) {verdict}")
    return "\n".join(lines)
