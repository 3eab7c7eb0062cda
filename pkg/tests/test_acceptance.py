"""Acceptance suite: one test per headline guarantee, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the printed lines.
"""

from __future__ import annotations

import math

from motzkinlab import groundstate, hamiltonian, schmidt, sweep

from conftest import brute_force_log_m


def _report(label: str, ok: bool) -> None:
    print(f"[PRIMARY] {label}: {'PASS' if ok else 'FAIL'}")
    assert ok, label


def test_frustration_freeness_and_uniqueness():
    """Exact ground state is annihilated and is the unique zero mode."""
    ok = True
    cases = [(two_n, 1) for two_n in (2, 4, 6, 8)]
    cases += [(two_n, 2) for two_n in (2, 4, 6)]
    for two_n, s in cases:
        for t in (0.5, 1.0, 2.0):
            spec = hamiltonian.uniform_spec(two_n, s, t)
            ens = groundstate.build_ground_state(spec)
            res = hamiltonian.residual(spec, ens.as_vector())
            report = hamiltonian.diagonalize_low(spec, k=2, zero_tol=1e-9)
            ok &= res < 1e-10
            ok &= report.null_dim == 1
            ok &= report.lowest_eigenvalues[1] > 1e-9
    _report("frustration-freeness & ground-state uniqueness", ok)


def test_tuned_angle_frustration_freeness():
    """Random tuned angle sets stay frustration-free; detuning opens a gap."""
    ok = True
    for seed in range(20):
        spec = hamiltonian.generate_tuned_angles(6, seed=seed)
        ens = groundstate.build_ground_state(spec)
        ok &= hamiltonian.residual(spec, ens.as_vector()) < 1e-10

    base = hamiltonian.generate_tuned_angles(6, seed=0).deformation
    theta = list(base.theta)
    theta[1] = 0.5 * (theta[1] + math.pi / 4)  # break the tuning relation
    detuned = hamiltonian.ChainSpec(
        6, 1, hamiltonian.Angles(base.phi, base.psi, tuple(theta)),
        enforce_tuning=False,
    )
    report = hamiltonian.diagonalize_low(detuned, k=2)
    ok &= report.lowest_eigenvalues[0] > 1e-6
    _report("tuned-angle frustration-freeness & detuned gap", ok)


def test_recurrence_matches_brute_force():
    """log M[n, m] from the recurrence equals direct weighted half-walk sums."""
    ok = True
    for s in (1, 2, 3):
        for t in (0.3, 0.7, 1.0, 1.5, 2.5):
            for n in range(1, 11):
                prof = schmidt.profile(n, s, t)
                for m in range(n + 1):
                    expect = brute_force_log_m(n, m, s, t)
                    ok &= math.isclose(
                        prof.log_m[m], expect, rel_tol=1e-10, abs_tol=1e-10
                    )
    _report("recurrence vs brute-force half-walk oracle", ok)


def test_schmidt_spectrum_matches_svd():
    """Recurrence-derived Schmidt numbers equal the SVD of the explicit state.

    Ground-state amplitudes carry t^area, so the squared Schmidt weights of
    the chain at deformation t follow the half-walk table evaluated at t^2.
    """
    ok = True
    cases = [(two_n, 1) for two_n in (2, 4, 6, 8)]
    cases += [(two_n, 2) for two_n in (2, 4, 6)]
    for two_n, s in cases:
        for t in (0.5, 1.0, 2.0):
            ens = groundstate.build_ground_state(hamiltonian.uniform_spec(two_n, s, t))
            levels = {lv.m: lv for lv in groundstate.schmidt_by_svd(ens)}
            prof = schmidt.profile(two_n // 2, s, t * t)
            for m in range(two_n // 2 + 1):
                if m in levels:
                    ok &= levels[m].multiplicity == s**m
                    ok &= abs(levels[m].p - prof.p[m]) < 1e-8
                else:
                    ok &= prof.p[m] < 1e-8
    _report("Schmidt spectrum: recurrence vs ground-state SVD", ok)


def test_volume_law():
    """At s=2, t=2 the half-chain entropy grows linearly, slope ~ log 2."""
    points = list(schmidt.entropy_curve(300, 2, 2.0))
    ok = all(pt.entropy > pt.n * math.log(2) for pt in points if pt.n >= 5)
    rows = [(pt.n, pt.entropy) for pt in points if 100 <= pt.n <= 300]
    fit = sweep.fit_scaling(rows, "linear")
    ok &= abs(fit.coefficient - math.log(2)) / math.log(2) < 0.05
    _report("volume-law phase: S_n > n log 2 and slope within 5%", ok)


def test_bounded_entropy():
    """For t < 1 the entropy saturates below the closed-form constant C(s,t)."""
    ok = True
    for t in (0.5, 0.9):
        c = schmidt.entropy_bound(2, t)
        by_n = {pt.n: pt.entropy for pt in schmidt.entropy_curve(2000, 2, t)}
        ok &= all(ent <= c for ent in by_n.values())
        ok &= by_n[2000] - by_n[1000] < 1e-6
    _report("bounded phase: S_n <= C(s,t) and saturation", ok)


def test_peak_location_bound():
    """For t > 1 the row maximum of M[n, m] sits within 2 N0 of m = n."""
    ok = True
    for t in (1.5, 2.0):
        n0 = schmidt.peak_offset_bound(2, t)
        prof = schmidt.profile(1, 2, t)
        while prof.n < 500:
            prof = schmidt.recurrence_step(prof)
            if prof.n >= 10:
                mstar = prof.mstar(mode="M")
                ok &= prof.n - 2.0 * n0 <= mstar <= prof.n
    _report("peak location: argmax M in [n - 2 N0, n]", ok)


def test_tilde_table_invariants():
    """Rescaled-table facts: growing norm and the 9 s t^(2m-1) tail bound."""
    ok = True
    for s in (1, 2):
        for t in (0.5, 0.9):
            prev = None
            for n in range(1, 201):
                til = schmidt.tilde_profile(n, s, t)
                if prev is not None:
                    ok &= til.log_sum_sq > prev
                prev = til.log_sum_sq
                for m, p in enumerate(til.p_tilde):
                    ok &= p < 9.0 * s * t ** (2 * m - 1)
    _report("tilde-table invariants: monotone norm and tail bound", ok)


def test_model_selection_at_critical_point():
    """At t=1 the entropy scales as sqrt(n) for s>1 and log(n) for s=1."""
    def best_model(s):
        rows = [
            (pt.n, pt.entropy)
            for pt in schmidt.entropy_curve(2000, s, 1.0)
            if pt.n >= 100
        ]
        fits = {m: sweep.fit_scaling(rows, m) for m in sweep.FIT_MODELS}
        return min(fits, key=lambda m: fits[m].residual)

    ok = best_model(2) == "sqrt" and best_model(1) == "log"
    _report("critical-point scaling: sqrt wins at s=2, log wins at s=1", ok)
