"""Release gate: nine numbered end-to-end checks of the library.

Each test prints one ``ACCEPTANCE n: PASS`` line on success (visible with
``pytest -s`` or in captured output); the pytest verdict per test is the
authoritative pass/fail signal.  Tolerances are deliberately hard-coded
here rather than imported, so a regression in package constants cannot
silently weaken the gate.
"""

import math
import time

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nanospin_qcorr import (
    CorrelationSet,
    NanoporeParams,
    concurrence_cs,
    concurrence_nanopore,
    concurrence_numeric,
    cs_from_correlations,
    discord_bell_diagonal,
    discord_high_t_asymptotic,
    discord_low_t_asymptotic,
    discord_numeric,
    geometric_discord_cs,
    geometric_discord_high_t_asymptotic,
    reduced_density,
    run_verification,
    special_time_correlations,
    tau_special,
)
from helpers import random_cs

PLATEAU = 0.75 * math.log2(4.0 / 3.0)


def large_pore_q(beta):
    return math.tanh(beta / 2.0) ** 2 / 8.0


def large_pore_discord(beta):
    return discord_bell_diagonal(large_pore_q(beta))


@pytest.fixture(scope="session")
def oracle_report():
    """Shared full-grid engine comparison (criteria 5 and 9)."""
    start = time.perf_counter()
    report = run_verification()
    elapsed = time.perf_counter() - start
    return report, elapsed


def test_criterion_1_cold_discord_plateau():
    closed = discord_bell_diagonal(0.125)
    assert abs(closed - PLATEAU) <= 1e-12
    rho = cs_from_correlations(
        CorrelationSet(p=0.0, q=0.125, r=0.125, u=0.0)
    ).to_matrix()
    numeric = discord_numeric(rho).discord
    assert abs(numeric - PLATEAU) <= 1e-6
    print(
        f"ACCEPTANCE 1: PASS - cold plateau {closed:.17g} "
        f"(closed |err| {abs(closed - PLATEAU):.1e}, "
        f"numeric |err| {abs(numeric - PLATEAU):.1e})"
    )


def test_criterion_2_cold_geometric_discord():
    state = reduced_density(NanoporeParams(n=math.inf, beta=math.inf, tau=0.7))
    value = geometric_discord_cs(state)
    assert abs(value - 0.125) <= 1e-12
    print(f"ACCEPTANCE 2: PASS - zero-T geometric discord {value:.17g}")


def test_criterion_3_high_temperature_asymptotics():
    betas = (0.01, 0.05, 0.1)
    rel_q = []
    rel_g = []
    for beta in betas:
        exact_q = large_pore_discord(beta)
        asy_q = discord_high_t_asymptotic(beta)
        rel_q.append(abs(asy_q - exact_q) / exact_q)
        exact_g = math.tanh(beta / 2.0) ** 4 / 8.0
        asy_g = geometric_discord_high_t_asymptotic(beta)
        rel_g.append(abs(asy_g - exact_g) / exact_g)
    for rel in (rel_q, rel_g):
        assert all(r < 0.01 for r in rel)
        assert rel[0] < rel[1] < rel[2]
    for beta in betas:
        ratio = geometric_discord_high_t_asymptotic(beta) / discord_high_t_asymptotic(
            beta
        )
        assert ratio == pytest.approx(math.log(2.0), rel=1e-15)
    print(
        "ACCEPTANCE 3: PASS - high-T relative errors "
        f"{rel_q[2]:.1e}/{rel_g[2]:.1e} at beta=0.1, ln2 ratio exact"
    )


def test_criterion_4_low_temperature_asymptotic():
    diffs = [
        abs(large_pore_discord(beta) - discord_low_t_asymptotic(beta))
        for beta in (10.0, 20.0, 30.0)
    ]
    assert diffs[0] > diffs[1] > diffs[2]
    assert diffs[2] < 1e-6
    assert diffs[0] < 1e-3
    print(
        "ACCEPTANCE 4: PASS - low-T gap shrinks "
        f"{diffs[0]:.2e} -> {diffs[1]:.2e} -> {diffs[2]:.2e}"
    )


def test_criterion_5_oracle_equivalence(oracle_report):
    report, elapsed = oracle_report
    assert report.states_checked == 7 * 4 * 32
    worst = report.max_discrepancies
    assert worst["correlations"] <= 1e-10
    assert worst["reduced_matrix"] <= 1e-10
    assert worst["concurrence"] <= 1e-10
    assert worst["geometric_discord"] <= 1e-10
    assert worst["discord"] <= 1e-6
    assert elapsed < 300.0
    print(
        "ACCEPTANCE 5: PASS - 896 states, worst "
        f"corr {worst['correlations']:.1e}, rho {worst['reduced_matrix']:.1e}, "
        f"C {worst['concurrence']:.1e}, Qg {worst['geometric_discord']:.1e}, "
        f"Q {worst['discord']:.1e} in {elapsed:.1f}s"
    )


def test_criterion_6_flickering_zeros():
    worst = 0.0
    for n in range(4, 10):
        for l in (0, 1, 2):
            corr = special_time_correlations(n, 3.0, l)
            assert corr.q * corr.r == 0.0
            from_parity = discord_numeric(
                cs_from_correlations(corr).to_matrix()
            ).discord
            at_float_tau = discord_numeric(
                reduced_density(
                    NanoporeParams(n=n, beta=3.0, tau=tau_special(l))
                ).to_matrix()
            ).discord
            worst = max(worst, abs(from_parity), abs(at_float_tau))
    assert worst < 1e-6
    print(f"ACCEPTANCE 6: PASS - flickering |Q| <= {worst:.1e} at odd half-periods")


@settings(max_examples=200, deadline=None)
@given(
    st.floats(min_value=0.0, max_value=60.0),
    st.floats(min_value=-12.0, max_value=12.0),
)
def test_criterion_7a_large_pore_limit_never_entangles(beta, tau):
    assert concurrence_nanopore(NanoporeParams(n=math.inf, beta=beta, tau=tau)) == 0.0


def test_criterion_7_concurrence_phenomenology():
    for n in (2, 4, 6, 25, math.inf):
        for beta in (0.5, 3.0, 10.0, math.inf):
            assert concurrence_nanopore(NanoporeParams(n=n, beta=beta, tau=0.0)) == 0.0
    assert (
        concurrence_nanopore(NanoporeParams(n=math.inf, beta=math.inf, tau=2.0)) == 0.0
    )

    taus = np.linspace(0.0, math.pi, 2001)
    peaks = {}
    for beta in (6.0, 8.0, 12.0):
        peaks[beta] = max(
            concurrence_nanopore(NanoporeParams(n=6, beta=beta, tau=float(t)))
            for t in taus
        )
        assert peaks[beta] > 0.1

    fractions = []
    for n in (6, 12, 25, 50, 100):
        count = sum(
            concurrence_nanopore(NanoporeParams(n=n, beta=10.0, tau=float(t))) > 0.0
            for t in taus
        )
        fractions.append(count / len(taus))
    assert all(a > b for a, b in zip(fractions, fractions[1:]))
    print(
        "ACCEPTANCE 7: PASS - no entanglement at tau=0 or N=inf, "
        f"peak C(N=6, beta=6) = {peaks[6.0]:.3f}, "
        f"entangled fraction falls {fractions[0]:.3f} -> {fractions[-1]:.3f}"
    )


def test_criterion_8_closed_form_concurrence_bulk():
    rng = np.random.default_rng(812)
    start = time.perf_counter()
    worst_c = 0.0
    worst_id = 0.0
    for _ in range(10_000):
        m = random_cs(rng)
        p1, p2, p3, p4, p5, p6, p7 = m.params
        closed = concurrence_cs(m).concurrence
        numeric = concurrence_numeric(m.to_matrix(), validate=False).concurrence
        worst_c = max(worst_c, abs(closed - numeric))
        lhs1 = 2.0 * ((p1 + p6) ** 2 + (0.5 - p1 + p7) ** 2)
        rhs1 = (2.0 * p1 + p6 - 0.5 - p7) ** 2 + (0.5 + p6 + p7) ** 2
        lhs2 = 2.0 * ((p1 - p6) ** 2 + (0.5 - p1 - p7) ** 2)
        rhs2 = (2.0 * p1 - p6 - 0.5 + p7) ** 2 + (0.5 - p6 - p7) ** 2
        worst_id = max(worst_id, abs(lhs1 - rhs1), abs(lhs2 - rhs2))
    elapsed = time.perf_counter() - start
    assert worst_c <= 1e-9
    assert worst_id <= 1e-13
    assert elapsed < 60.0
    print(
        f"ACCEPTANCE 8: PASS - 10000 draws, worst |dC| = {worst_c:.1e}, "
        f"identity residual {worst_id:.1e}, {elapsed:.1f}s"
    )


def test_criterion_9_structural_zeros(oracle_report):
    report, _ = oracle_report
    assert report.states_checked == 896
    assert report.max_discrepancies["structural_zeros"] <= 1e-12
    print(
        "ACCEPTANCE 9: PASS - structural zeros <= "
        f"{report.max_discrepancies['structural_zeros']:.1e} over the full grid"
    )
