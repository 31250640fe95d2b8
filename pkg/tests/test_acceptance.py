"""Acceptance suite: one test per quantitative exit criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line (visible with
``pytest -s``) and then asserts.  The assertions implement the criteria
verbatim at their stated tolerances; four of them are known to fail against
this implementation, each traced in the failure message to a measured
property of the mathematics rather than to a code defect.  The analysis
lives in the repository notes; the tests are intentionally not weakened.
"""

import math
import time

import numpy as np

from catsim import (
    Bipartition,
    CatStateKind,
    WCatParams,
    approx_log_negativity,
    critical_visibility,
    dominant_eigenvalues,
    hermitian_spectrum,
    large_n_threshold,
    log_negativity,
    lose_particles,
    loss_only_entanglement,
    negativity,
    noisy_wcat,
    partial_trace,
    partial_transpose,
    psi1_g_state,
    psi2,
    psi3_concat_ghz,
    ghz_cat,
    to_density,
    vanishing_noise_threshold,
    w_cat,
)
from catsim.experiments import validate_report


def _report(num: int, ok: bool, detail: str) -> None:
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}")


def test_criterion_1_loss_only_law():
    t0 = time.time()
    worst = 0.0
    for N in range(3, 11):
        for m in range(0, N):
            rho = lose_particles(to_density(w_cat(N)), m)
            E = log_negativity(rho, Bipartition.micro_macro(rho.n_qubits))
            worst = max(worst, abs(E - math.log2(2 - m / N)))
    elapsed = time.time() - t0
    ok = worst <= 1e-10 and elapsed < 60.0
    _report(1, ok, f"loss law N=3..10: worst defect {worst:.2e} (tol 1e-10), {elapsed:.1f}s (< 60s)")
    assert worst <= 1e-10
    assert elapsed < 60.0


def test_criterion_2_wcat_vs_ghz_thresholds():
    t0 = time.time()
    p_w = vanishing_noise_threshold(CatStateKind.W_CAT, 10, 0, "oracle")
    p_g = vanishing_noise_threshold(CatStateKind.GHZ_CAT, 10, 0, "oracle")
    elapsed = time.time() - t0
    ok_w = abs(p_w - 0.44) <= 0.01
    ok_g = abs(p_g - 0.28) <= 0.01
    ok = ok_w and ok_g and elapsed < 600.0
    _report(2, ok, f"bisected thresholds at N=10: wcat {p_w:.4f} (0.44 +/- 0.01), "
                   f"ghz {p_g:.4f} (0.28 +/- 0.01), {elapsed:.0f}s (< 600s)")
    assert elapsed < 600.0
    assert ok_w, f"W-cat threshold {p_w:.4f} outside 0.44 +/- 0.01"
    assert ok_g, (
        f"GHZ-cat threshold measures {p_g:.5f}, outside the stated 0.28 +/- 0.01. "
        f"The exact separability condition for the depolarized 11-qubit state, "
        f"(1-p)^11 = (p/2)(1-p/2)^10 + (1-p/2)(p/2)^10, has its root at 0.26930; "
        f"the stated 0.28 window matches a 10-qubit total (N=9), whose root is 0.28315."
    )


def test_criterion_3_analytic_eigenvalue_fidelity():
    worst_match = 0.0
    min_failures = []
    points = 0
    for N in range(4, 9):
        for m in range(0, N - 1):
            for i in range(0, 11):
                p = 0.05 * i
                points += 1
                ev = hermitian_spectrum(partial_transpose(noisy_wcat(N, m, p), (0,))).eigenvalues
                pair = dominant_eigenvalues(WCatParams(N=N, m=m, p=p))
                worst_match = max(
                    worst_match,
                    float(np.min(np.abs(ev - pair.lambda1))),
                    float(np.min(np.abs(ev - pair.lambda2))),
                )
                if abs(ev[0] - pair.lambda1) > 1e-9:
                    min_failures.append((N, m, round(p, 2), float(pair.lambda1), float(ev[0])))
    ok_match = worst_match <= 1e-9
    ok_min = not min_failures
    _report(3, ok_match and ok_min,
            f"eigenvalue fidelity on {points} grid points: worst match {worst_match:.2e} "
            f"(tol 1e-9); minimum identification fails at {len(min_failures)} points")
    assert ok_match, f"worst eigenvalue match {worst_match:.2e} exceeds 1e-9"
    assert ok_min, (
        f"lambda1 is not the smallest PT eigenvalue at {len(min_failures)} of {points} "
        f"grid points, e.g. {min_failures[:3]}. Every failing point lies past the "
        f"separability threshold (the spectrum there is entirely non-negative and its "
        f"smallest eigenvalue belongs to a symmetry block outside the two closed-form "
        f"roots); on every point where any PT eigenvalue is negative, lambda1 matches "
        f"the minimum to better than 1e-9."
    )


def test_criterion_4_truncation_bound():
    rho = noisy_wcat(8, 1, 0.1)
    exact = log_negativity(rho, Bipartition.micro_macro(rho.n_qubits))
    approx = approx_log_negativity(WCatParams(N=8, m=1, p=0.1))
    gap = abs(exact - approx)
    ok = gap < 1e-2
    _report(4, ok, f"two-eigenvalue truncation at (8, 1, 0.1): gap {gap:.3e} ebits (< 1e-2)")
    assert ok


def test_criterion_5_large_n_claims():
    t0 = time.time()
    E0 = approx_log_negativity(WCatParams(N=1000, m=100, p=0.0))
    p_star = large_n_threshold(1000, 100)
    elapsed = time.time() - t0
    ok_e = abs(E0 - math.log2(1.9)) <= 1e-12
    ok_thr = 0.02 <= p_star <= 0.04
    ok = ok_e and ok_thr and elapsed < 10.0
    _report(5, ok, f"N=1000 m=100: E(p=0) defect {abs(E0 - math.log2(1.9)):.1e} (tol 1e-12), "
                   f"threshold {p_star:.4f} (window [0.02, 0.04]), {elapsed:.2f}s (< 10s)")
    assert ok_e
    assert elapsed < 10.0
    assert ok_thr, (
        f"threshold measures {p_star:.4f}, outside the stated [0.02, 0.04]. The dominant "
        f"eigenvalue decays like (1 - p/2)^900 without a sign change in this window, so "
        f"the bisected value is set by the 1e-9 negativity floor: |lambda| = 1e-9 at "
        f"p = 0.0504, 1e-6 at p = 0.0289. Any floor between 1e-5 and 1e-6 would land "
        f"in the stated window; the fixed 1e-9 floor cannot."
    )


def test_criterion_6_competitor_cat_loss_thresholds():
    failures = []
    for N in (4, 5, 6):
        rho = to_density(psi1_g_state(N))
        for m, expect_ent in ((2, True), (3, False)):
            red = lose_particles(rho, m)
            nu = negativity(red, Bipartition.micro_macro(red.n_qubits))
            if (nu > 1e-9) != expect_ent:
                failures.append(("psi1", N, m, nu))
        rho = to_density(psi2(N))
        for m, expect_ent in ((1, True), (2, False)):
            red = lose_particles(rho, m)
            nu = negativity(red, Bipartition.micro_macro(red.n_qubits))
            if (nu > 1e-9) != expect_ent:
                failures.append(("psi2", N, m, nu))
        red = lose_particles(to_density(ghz_cat(N)), 1)
        nu = negativity(red, Bipartition.micro_macro(red.n_qubits))
        if nu > 1e-9:
            failures.append(("ghzcat", N, 1, nu))
    # concatenated blocks, l = 2: tracing a full logical block leaves PPT
    rho = to_density(psi3_concat_ghz(2, 3))
    red = partial_trace(rho, {4, 5})
    nu = negativity(red, Bipartition.split((0, 1), red.n_qubits))
    if nu > 1e-9:
        failures.append(("psi3", 2, "full_block", nu))
    ok = not failures
    _report(6, ok, f"competitor-cat loss verdicts (PPT proxy for separability): "
                   f"{'all as expected' if ok else failures}")
    assert ok, failures


def test_criterion_7_critical_visibility():
    values = [critical_visibility(N) for N in range(1, 31)]
    strictly_decreasing = all(b < a for a, b in zip(values, values[1:]))
    ok_v2 = abs(values[1] - 0.707107) <= 1e-6
    ok_tail = values[20] < 1e-3
    ok = strictly_decreasing and ok_v2 and ok_tail
    _report(7, ok, f"critical visibility: v(2) = {values[1]:.6f}, v(21) = {values[20]:.2e}, "
                   f"strictly decreasing over N=1..30: {strictly_decreasing}")
    assert ok_v2
    assert ok_tail
    assert strictly_decreasing, (
        f"not strictly decreasing: v(1) == v(2) == {values[0]!r} exactly, since "
        f"2^(N-1)/N = 1 at both N = 1 and N = 2 and the formula value is 1/sqrt(2) "
        f"at both points (equality holds in exact arithmetic, not just in floats); "
        f"strict decrease holds from N = 2 on."
    )


def test_criterion_8_validation_battery():
    report = validate_report(full=True)
    detail = "; ".join(f"{c.name}: {'ok' if c.ok else 'FAIL'}" for c in report.checks)
    _report(8, report.ok, f"validate battery ({len(report.checks)} checks): {detail}")
    assert report.ok, "\n".join(report.lines())
