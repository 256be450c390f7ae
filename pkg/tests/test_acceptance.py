"""Acceptance suite: one test per criterion, each logging a PASS/FAIL line.

The lines are collected in ``conftest.ACCEPTANCE_LINES`` and printed in the
terminal summary, so a plain ``pytest`` run ends with the scoreboard. Every
test records its line before asserting, which keeps the report complete
even when criteria fail.
"""

import json
import math
import time

import numpy as np
from scipy import integrate

from kgyukawa.cli import norm_table
from kgyukawa.model import PhysicalConfig, QuantumNumbers
from kgyukawa.oracle import BracketError, shoot_branch
from kgyukawa.specfun import hyp2f1_at, hyp2f1_terminating, log_gamma, pochhammer
from kgyukawa.spectrum import (
    NoBoundStateError,
    NotFoundError,
    critical_parameter,
    energy_closed_form,
    energy_exact,
    radicand,
    radicand_scale,
    schrodinger_energy,
)
from kgyukawa.wavefunction import (
    StateClass,
    build_state,
    classify_state,
    density_profile,
    node_count,
    overlap,
    phi,
)

BASE = PhysicalConfig(alpha=0.01, eta=0.1)

# reference normalisation constants of the s states at alpha=0.01, eta=0.1;
# None marks the entries listed as purely imaginary
REFERENCE_NORMS = {
    ("plus", 0.0): [2.02568, 4.78012, 15.1767, 42.3247, 112.618, 271.253, 704.911,
                    1721.39, 4501.8, 11130.9, 21574.6],
    ("plus", 0.1): [2.14417, 23.2147, 125.661, 425.014, 1028.11, 1822.97, 2345.5,
                    2050.48, 136.028, None, None],
    ("minus", 0.0): [1.25551, 0.89947, 2.76688, 11.1521, 34.4452, 105.462, 288.54,
                     821.447, 2196.82, 6001.23, 13918.7],
    ("minus", 0.1): [2.15323, 23.5816, 129.296, 444.511, 1097.33, 1991.1, 2639.1,
                     4327.26, None, None, None],
}


def record(log, number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}"
    log.append(line)
    print(line)
    return ok


def _measure_report(measure):
    table = norm_table(BASE, 10, measure=measure)
    columns = {name: i for i, name in enumerate(table.header)}
    worst, matched, compared, pattern_errors = 0.0, 0, 0, []
    entries = []
    for (branch, m1), reference in REFERENCE_NORMS.items():
        col = columns[f"N_{branch}_m1_{m1:g}"]
        for n, ref in enumerate(reference):
            got = table.rows[n][col]
            ours_real = isinstance(got, float)
            if (ref is None) == ours_real:
                pattern_errors.append(f"{branch}/m1={m1:g}/n={n}")
            if ref is not None and ours_real:
                rel = abs(got - ref) / ref
                compared += 1
                matched += rel <= 1e-2
                worst = max(worst, rel)
            entries.append({"branch": branch, "m1": m1, "n": n, "reference": ref,
                            "computed": got if ours_real else str(got)})
    real_refs = sum(v is not None for ref in REFERENCE_NORMS.values() for v in ref)
    return {
        "measure": measure,
        "real_reference_entries": real_refs,
        "compared": compared,
        "within_1pct": matched,
        "worst_rel_err": worst,
        "pattern_mismatches": pattern_errors,
        "entries": entries,
    }


def test_criterion_1_norm_table(acceptance_log):
    start = time.perf_counter()
    reports = {m: _measure_report(m) for m in ("dr", "dz", "ds")}
    elapsed = time.perf_counter() - start
    matches = [m for m, rep in reports.items()
               if rep["within_1pct"] == rep["real_reference_entries"] and not rep["pattern_mismatches"]]
    ok = bool(matches) and elapsed < 30
    summary = ", ".join(f"{m}: {r['within_1pct']}/{r['real_reference_entries']} within 1%, "
                        f"{len(r['pattern_mismatches'])} pattern mismatches"
                        for m, r in reports.items())
    record(acceptance_log, 1, ok, f"({summary}; {elapsed:.2f} s)")
    if not matches:
        print("discrepancy report:")
        print(json.dumps(reports, indent=1))
    assert ok, "no candidate measure reproduces the reference table; see discrepancy report"


def test_criterion_2_oracle_equivalence(acceptance_log):
    start = time.perf_counter()
    worst, compared, disagreements = 0.0, 0, []
    for m1 in (0.0, 0.1):
        for n in (0, 1, 2):
            for l in (0, 1):
                cfg, qn = BASE.with_(m1=m1), QuantumNumbers(n, l)
                for branch in ("plus", "minus"):
                    try:
                        exact = energy_exact(qn, cfg, branch).value
                    except NoBoundStateError:
                        exact = None
                    try:
                        shot = shoot_branch(qn, cfg, branch).energy
                    except BracketError:
                        shot = None
                    if exact is None or shot is None:
                        if exact is not shot:
                            disagreements.append((m1, n, l, branch, exact, shot))
                        continue
                    compared += 1
                    worst = max(worst, abs(shot - exact) / abs(exact))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-4 and not disagreements and elapsed < 60
    record(acceptance_log, 2, ok,
           f"(max rel diff {worst:.1e} over {compared} bound levels, "
           f"{len(disagreements)} existence disagreements in 24 branch cases; {elapsed:.1f} s)")
    assert ok, disagreements


def test_criterion_3_closed_form_window(acceptance_log):
    start = time.perf_counter()
    worst, compared, unbound = 0.0, 0, 0
    for eta in (0.05, 0.15, 0.25):
        for alpha in (0.01, 0.1, 0.3):
            for m1 in (0.0, 0.1):
                cfg = PhysicalConfig(alpha=alpha, eta=eta, m1=m1)
                for qn in (QuantumNumbers(1, 0), QuantumNumbers(1, 1)):
                    pair = energy_closed_form(qn, cfg)
                    for branch in ("plus", "minus"):
                        level = pair[branch]
                        if not level.is_real:
                            continue
                        try:
                            exact = energy_exact(qn, cfg, branch)
                        except NoBoundStateError:
                            unbound += 1
                            continue
                        if not exact.is_real:
                            continue
                        compared += 1
                        worst = max(worst, abs(level.value - exact.value) / abs(exact.value))
    elapsed = time.perf_counter() - start
    ok = compared > 0 and worst <= 1e-2 and elapsed < 60
    record(acceptance_log, 3, ok,
           f"(max rel err {worst:.1e} over {compared} real levels; {unbound} real closed-form "
           f"levels have no exact bound state; {elapsed:.2f} s)")
    assert ok


LIMIT_STATES = [QuantumNumbers(1, 0), QuantumNumbers(1, 1), QuantumNumbers(2, 0), QuantumNumbers(2, 2)]


def test_criterion_4_limit_behaviour(acceptance_log):
    start = time.perf_counter()
    dev_free, max_pdm = 0.0, 0.0
    for qn in LIMIT_STATES:
        free = energy_closed_form(qn, PhysicalConfig(alpha=1e-4, eta=0.01))
        pdm = energy_closed_form(qn, PhysicalConfig(alpha=1e-4, eta=0.01, m1=0.1))
        for level in (free.e_plus, free.e_minus):
            dev_free = max(dev_free, abs(abs(level.value) - 1.0) if level.is_real else math.inf)
        for level in (pdm.e_plus, pdm.e_minus):
            max_pdm = max(max_pdm, abs(level.value) if level.is_real else math.inf)
    elapsed = time.perf_counter() - start
    ok = dev_free <= 1e-3 and max_pdm <= 0.05 and elapsed < 1
    record(acceptance_log, 4, ok,
           f"(m1=0: max ||E|-1| = {dev_free:.1e} <= 1e-3; m1=0.1: max |E| = {max_pdm:.4f} vs 0.05; "
           f"{elapsed:.3f} s)")
    assert ok


def test_criterion_5_gap_closure(acceptance_log):
    start = time.perf_counter()
    rng = np.random.default_rng(20240611)
    worst_rad, worst_gap, cases = 0.0, 0.0, 0
    while cases < 20:
        qn = QuantumNumbers(int(rng.integers(0, 4)), int(rng.integers(0, 3)))
        if cases % 2 == 0:
            vary = "eta"
            alpha = float(rng.uniform(0.005, 0.05))
            cfg = PhysicalConfig(alpha=alpha, m1=0.1)
            # stay below the coupling where the centrifugal root turns imaginary
            eta_max = math.sqrt(1 + 4 * qn.l * (qn.l + 1) + (0.1 / alpha) ** 2) / 2
            bounds = (1e-3, 0.999 * eta_max)
        else:
            vary = "alpha"
            cfg = PhysicalConfig(eta=float(rng.uniform(0.01, 0.45)), m1=0.1)
            bounds = (1e-4, 1.0)
        try:
            p = critical_parameter(qn, cfg, vary, bounds)
        except NotFoundError:
            continue
        at = cfg.with_(**{vary: p})
        pair = energy_closed_form(qn, at)
        worst_rad = max(worst_rad, abs(radicand(qn, at)) / radicand_scale(qn, at))
        gap = abs(pair.e_plus.value - pair.e_minus.value) if pair.e_plus.is_real else math.inf
        worst_gap = max(worst_gap, gap)
        cases += 1
    elapsed = time.perf_counter() - start
    ok = worst_rad <= 1e-6 and worst_gap <= 1e-9 and elapsed < 5
    record(acceptance_log, 5, ok,
           f"(20 cases: max |radicand|/scale {worst_rad:.1e}, max |E+ - E-| {worst_gap:.1e}; "
           f"{elapsed:.3f} s)")
    assert ok


def _density_mismatch(cfg, n, r):
    try:
        plus = build_state(QuantumNumbers(n, 0), cfg, "plus", "closed_form")
        minus = build_state(QuantumNumbers(n, 0), cfg, "minus", "closed_form")
    except NoBoundStateError:
        return math.inf
    if StateClass.IMAGINARY_NORM in (classify_state(plus), classify_state(minus)):
        return math.inf
    rp = density_profile(plus, r)[:, 1]
    rm = density_profile(minus, r)[:, 1]
    return float(np.max(np.abs(rp - rm)) / rp.max())


def test_criterion_6_pdm_density_coincidence(acceptance_log):
    start = time.perf_counter()
    r = np.geomspace(1e-3, 5e3, 20_001)
    pdm = [_density_mismatch(BASE.with_(m1=0.1), n, r) for n in range(7)]
    free = [_density_mismatch(BASE, n, r) for n in range(7)]
    elapsed = time.perf_counter() - start
    pdm_ok = all(x <= 1e-2 for x in pdm)
    free_ok = any(x > 1e-2 for x in free)
    ok = pdm_ok and free_ok and elapsed < 30
    fmt = lambda xs: "[" + ", ".join("nonnorm" if math.isinf(x) else f"{x:.3f}" for x in xs) + "]"
    record(acceptance_log, 6, ok,
           f"(m1=0.1 max diff/peak {fmt(pdm)} vs 1e-2; m1=0 {fmt(free)} "
           f"{'violates' if free_ok else 'does not violate'} the bound; {elapsed:.2f} s)")
    assert ok


def test_criterion_7_schrodinger(acceptance_log):
    start = time.perf_counter()
    coulomb_err = 0.0
    for n in range(6):
        for alpha in (1e-3, 0.01, 0.1, 0.5, 1.0):
            got = schrodinger_energy(QuantumNumbers(n, 0), PhysicalConfig(alpha=alpha, eta=0.0))
            want = -alpha**2 * (n + 1) ** 2 / 8
            coulomb_err = max(coulomb_err, abs(got - want))
    limit_err = 0.0
    for qn in [QuantumNumbers(0, 0)] + LIMIT_STATES:
        cfg = PhysicalConfig(alpha=1e-6, eta=0.1)
        want = -cfg.m0 * cfg.eta**2 / (2 * cfg.hbar**2 * (qn.n + qn.l + 1) ** 2)
        limit_err = max(limit_err, abs(schrodinger_energy(qn, cfg) / want - 1))
    real = all(
        math.isfinite(schrodinger_energy(qn, PhysicalConfig(alpha=a, eta=e)))
        for qn in LIMIT_STATES
        for a in np.geomspace(1e-4, 1.0, 60)
        for e in np.linspace(0.0, 1.0, 41)
    )
    elapsed = time.perf_counter() - start
    ok = coulomb_err <= 1e-12 and limit_err <= 1e-4 and real and elapsed < 1
    record(acceptance_log, 7, ok,
           f"(eta=0 abs err {coulomb_err:.1e}; alpha=1e-6 limit max rel err {limit_err:.1e} vs 1e-4; "
           f"real everywhere: {real}; {elapsed:.3f} s)")
    assert ok


def _unit_norm_error(sol):
    alpha = sol.cfg.alpha
    edges = [0.0, 1 / alpha, 10 / alpha, 100 / alpha, 1e4 / alpha]
    total = sum(integrate.quad(lambda r: phi(r, sol) ** 2, a, b, limit=500, epsabs=0,
                               epsrel=1e-12)[0] for a, b in zip(edges[:-1], edges[1:]))
    return abs(total - 1.0)


def test_criterion_8_property_suites(acceptance_log):
    start = time.perf_counter()
    rng = np.random.default_rng(8)
    spec_err = 0.0
    for _ in range(300):
        a = float(rng.uniform(-6, 6))
        k = int(rng.integers(0, 12))
        lhs, rhs = pochhammer(a, k + 1), pochhammer(a, k) * (a + k)
        spec_err = max(spec_err, abs(lhs - rhs) / max(1.0, abs(rhs)))
        x = float(rng.uniform(0.1, 40))
        spec_err = max(spec_err, abs(log_gamma(x + 1) - log_gamma(x) - math.log(x)) / max(1.0, log_gamma(x + 1)))
        b, c, z = float(rng.uniform(-3, 3)), float(rng.uniform(0.5, 6)), float(rng.uniform(-1, 0.9))
        a2 = float(rng.uniform(-3, 3))
        if c - a2 - b + 1 > 0.1:
            f1, f2 = hyp2f1_at(a2, b, c, z).value, hyp2f1_at(b, a2, c, z).value
            spec_err = max(spec_err, abs(f1 - f2) / max(1.0, abs(f1)))
        n = int(rng.integers(0, 10))
        poly, series = hyp2f1_terminating(n, b, c, z), hyp2f1_at(-n, b, c, z).value
        spec_err = max(spec_err, abs(poly - series) / max(1.0, abs(poly)))
    specfun_ok = spec_err <= 1e-10

    node_bad, norm_err, states = [], 0.0, 0
    for m1 in (0.0, 0.1):
        for branch in ("plus", "minus"):
            for n in range(9):
                for form in ("published", "regular"):
                    sol = build_state(QuantumNumbers(n, 0), BASE.with_(m1=m1), branch,
                                      "closed_form", form=form)
                    if classify_state(sol) is not StateClass.NORMALIZABLE:
                        continue
                    states += 1
                    if node_count(sol) != n:
                        node_bad.append((m1, branch, n, form))
                    if form == "published":
                        norm_err = max(norm_err, _unit_norm_error(sol))

    exact = [build_state(QuantumNumbers(n, 0), BASE, form="regular") for n in range(3)]
    pairs = [(a, b) for i, a in enumerate(exact) for b in exact[i + 1:]]
    plain = max(abs(overlap(a, b)) for a, b in pairs)
    charge = max(abs(overlap(a, b, "charge")) for a, b in pairs)
    elapsed = time.perf_counter() - start
    ok = specfun_ok and not node_bad and plain <= 1e-4 and norm_err <= 1e-6 and elapsed < 120
    record(acceptance_log, 8, ok,
           f"(specfun max err {spec_err:.1e}; nodes = n for {states - len(node_bad)}/{states} states; "
           f"plain overlap {plain:.1e} vs 1e-4, charge-weighted overlap {charge:.1e}; "
           f"norm err {norm_err:.1e}; {elapsed:.1f} s)")
    assert ok
