"""Acceptance gate: ten criteria, one test (and one pass/fail line) each.

Each test prints ``PASS criterion N`` / ``FAIL criterion N`` with a short
summary before asserting, so the log carries exactly one verdict line per
criterion regardless of pytest verbosity.
"""

import itertools
import math
import time

import numpy as np
import pytest

from conftest import SCAN_SECONDS
from known_values import NEUMANN_ROWS, PLEIJEL_LIST
from robinsq.courant import (
    courant_scan,
    global_bound_threshold,
    leydold_bound,
    pleijel_check,
    sturm_zero_range,
    transition_table_02,
    transition_table_03,
    uniform_chain_infeasible,
)
from robinsq.critical import critical_theta_02, critical_theta_03
from robinsq.nodal import ThetaFamily, count_nodal_domains, theta_symmetry_check
from robinsq.robin1d import eval_u, eval_u_derivative, solve_alpha
from robinsq.spectrum import build_spectrum, find_crossing, lambda_pair


def report(num: int, ok: bool, detail: str):
    line = f"{'PASS' if ok else 'FAIL'} criterion {num}: {detail}"
    print(line)
    assert ok, line


def test_criterion_01_spectrum_table():
    t0 = time.perf_counter()
    table = build_spectrum(0.0, 146.0)
    elapsed = time.perf_counter() - t0
    got = {}
    for lvl in table.levels:
        for i, j in lvl.pairs:
            got[(i, j)] = (round(lvl.value), lvl.label_lo, lvl.label_hi)
    rows_ok = all(
        got.get((i, j)) == (lam, lo, hi) for i, j, lam, lo, hi in NEUMANN_ROWS
    ) and len(got) == len(NEUMANN_ROWS)
    ok = rows_ok and elapsed < 1.0
    report(1, ok, f"{len(NEUMANN_ROWS)} labelled rows reproduced in {elapsed:.3f}s")


def test_criterion_02_thresholds():
    thr = global_bound_threshold(neumann=True)
    uniform_beyond_520 = all(uniform_chain_infeasible(k) for k in range(520, 3000))
    j = 2.404825557695773
    rhs_208 = 4.0 / (j * j) * 207 + 8.0 / math.sqrt(math.pi) * math.sqrt(207)
    n208_holds = 208 < rhs_208
    ok = thr == 209 and uniform_beyond_520 and n208_holds
    report(
        2,
        ok,
        f"threshold={thr}, uniform chain eliminates k>=520, "
        f"rhs(208)={rhs_208:.4f}>208",
    )


def test_criterion_03_pleijel_list(neumann_table_208):
    t0 = time.perf_counter()
    computed = {
        n for n in range(1, 209) if pleijel_check(neumann_table_208, n).eliminated
    }
    elapsed = time.perf_counter() - t0
    missing = sorted(PLEIJEL_LIST - computed)
    extras = sorted(computed - PLEIJEL_LIST)
    ok = not missing and not extras and elapsed < 1.0
    report(
        3,
        ok,
        f"pinned list covered (missing={missing}), extras={extras}, "
        f"{elapsed:.3f}s; every extra label satisfies the same inequality "
        f"but is absent from the quoted list",
    )


def test_criterion_04_leydold_anchors(neumann_table_208):
    a = leydold_bound(neumann_table_208, 76, "ARot")
    b = leydold_bound(neumann_table_208, 46, "SRot")
    c = leydold_bound(neumann_table_208, 46, "AMir")
    ok = (
        (a.evidence["m"], b.evidence["m"], c.evidence["m"]) == (37, 22, 9)
        and (a.evidence["bound"], b.evidence["bound"], c.evidence["bound"])
        == (74, 44, 36)
        and a.eliminated
        and b.eliminated
        and c.eliminated
    )
    report(4, ok, "m=(37,22,9), bounds=(74,44,36), all eliminating")


def test_criterion_05_headline_counts():
    t0 = time.perf_counter()
    failures = []
    headline = [
        (0, 2, math.pi / 4, 0.0, 5),
        (3, 3, 0.3, 0.0, 16),
        (7, 9, math.atan2(7, 9), 0.0, 32),
        (0, 3, math.pi / 4, 0.0, 8),
    ]
    for p, q, theta, h, mu in headline:
        res = count_nodal_domains(ThetaFamily.create(p, q, theta, h), level=9)
        if not (res.certified and res.mu == mu):
            failures.append((p, q, theta, res.mu, res.certified))
    for p in range(10):
        for q in range(10):
            if p == q == 0:
                continue
            res = count_nodal_domains(ThetaFamily.create(p, q, 0.0, 0.0), level=9)
            if not (res.certified and res.mu == (p + 1) * (q + 1)):
                failures.append((p, q, 0.0, res.mu, res.certified))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60.0
    report(5, ok, f"4 headline + 99 product counts certified in {elapsed:.1f}s; "
                  f"failures={failures}")


def test_criterion_06_family_02_transitions():
    rows = transition_table_02(0.01)
    counts_ok = [r[2] for r in rows] == [3, 2, 3, 4, 3]
    t1 = critical_theta_02(0.01)[0]
    asym_ok = abs((t1 - math.pi / 4) - (-math.pi * 0.01 / 8)) < 5e-4
    verdicts = {}
    for h in (0.005, 0.01, 0.05):
        scan = courant_scan(h, n_max=5)
        verdicts[h] = scan.verdicts[4].status
    scan_ok = all(v == "not_courant_sharp" for v in verdicts.values())
    ok = counts_ok and asym_ok and scan_ok
    report(
        6,
        ok,
        f"counts (3,2,3,4,3), theta1-pi/4 ~ -pi*h/8, n=5 verdicts={verdicts}",
    )


def test_criterion_07_family_03_table():
    y_c, _ = critical_theta_03(0.01)
    yc_ok = abs(y_c - 0.5236) <= 5e-4
    rows = transition_table_03(0.01)
    table_ok = [r[2:] for r in rows] == [(6, 0, 4), (4, 0, 4), (2, 0, 2), (2, 2, 4)]
    ok = yc_ok and table_ok
    report(7, ok, f"y_c={y_c:.6f}, rows={[r[2:] for r in rows]}")


def test_criterion_08_family_79(scan_h001):
    theta = math.atan2(7, 9)
    lo, hi = sturm_zero_range(
        7, 9, 0.01, [0.2, theta, math.pi / 4, 1.2, 2.2, 3.0]
    )
    sturm_ok = 7 <= lo and hi <= 9
    mus = {}
    for h in (0.01, 0.1):
        res = count_nodal_domains(ThetaFamily.create(7, 9, theta, h), level=9)
        mus[h] = (res.mu, res.certified)
    mu_ok = all(cert and mu <= 36 for mu, cert in mus.values())
    v116_001 = scan_h001.verdicts[115].status == "not_courant_sharp"
    v116_01 = courant_scan(0.1, n_max=116).verdicts[115].status == "not_courant_sharp"
    ok = sturm_ok and mu_ok and v116_001 and v116_01
    report(
        8,
        ok,
        f"sturm=({lo},{hi}), mu={mus}, n=116 not Courant-sharp at h=0.01 and 0.1",
    )


def test_criterion_09_scan_parity(scan_h0, scan_h001):
    cs0 = scan_h0.courant_sharp_labels()
    cs1 = scan_h001.courant_sharp_labels()
    # labels allowed to stay undecided: members of multiplicity-4 clusters
    # (two distinct unordered pairs), where only cluster-level rules apply
    table = build_spectrum(0.0, 150.0)
    allowed_undecided = {
        n
        for lvl in table.levels
        if len(lvl.unordered_pairs) > 1
        for n in lvl.labels
    }
    undecided_ok = set(scan_h0.undecided_labels()) <= allowed_undecided
    ok = (
        cs0 == (1, 2, 4, 5, 9)
        and set(cs1) <= {1, 2, 4, 9}
        and 5 not in cs1
        and undecided_ok
        and not scan_h0.contradictions
        and not scan_h001.contradictions
        and not scan_h001.undecided_labels()
        and SCAN_SECONDS[0.0] < 600.0
        and SCAN_SECONDS[0.01] < 600.0
    )
    report(
        9,
        ok,
        f"h=0: {cs0} ({SCAN_SECONDS[0.0]:.0f}s), h=0.01: {cs1} "
        f"({SCAN_SECONDS[0.01]:.0f}s), undecided(h=0)={scan_h0.undecided_labels()}",
    )


def test_criterion_10_property_suites():
    failures = []

    # Robin boundary residuals
    for n in range(13):
        for h in (0.0, 0.005, 0.01, 0.1, 0.5, 1.0, 2.0):
            b = solve_alpha(n, h)
            r = abs(
                float(eval_u_derivative(b, math.pi / 2))
                + h * float(eval_u(b, math.pi / 2))
            ) / max(1.0, b.alpha)
            if r > 1e-9:
                failures.append(("residual", n, h, r))

    # theta-symmetry and parity on 200 sampled families
    pairs = [(p, q) for p in range(10) for q in range(p + 1, 10)]
    sampled = 0
    k = 0
    while sampled < 200:
        p, q = pairs[k % len(pairs)]
        theta = ((k * 29) % 83 + 1) / 85.0 * (math.pi / 2.0)
        h = (0.0, 0.01)[k % 2]
        rep = theta_symmetry_check(p, q, h, [theta], level=8)
        for fail in rep.failures:
            if fail[0] != "uncertified":
                failures.append(("symmetry", p, q, theta, fail))
        sampled += 2 if (p + q) % 2 == 0 else 3  # families actually counted
        k += 1

    # outer-domain bound: re-asserted on certified counts (the counter
    # raises on violation; spot-check the reported fields as well)
    for p, q, theta in ((0, 5, 0.7), (2, 7, 1.1), (7, 9, math.atan2(7, 9))):
        res = count_nodal_domains(ThetaFamily.create(p, q, theta, 0.01), level=9)
        if res.certified and res.mu_out > 4.0 * math.sqrt(res.lambda_value) + 1e-9:
            failures.append(("outer", p, q, theta, res.mu_out))

    # eigenvalue monotonicity in h
    hs = np.linspace(0.0, 2.0, 21)
    for i, j in ((0, 0), (0, 3), (2, 2), (1, 5), (4, 6)):
        lams = [lambda_pair(i, j, float(h)) for h in hs]
        if not all(a < b for a, b in zip(lams, lams[1:])):
            failures.append(("monotone", i, j))

    # crossing uniqueness over all pair combinations with lambda(0) <= 50
    pairs50 = [
        (i, j)
        for i in range(8)
        for j in range(i, 8)
        if i * i + j * j <= 50
    ]
    for a, b in itertools.combinations(pairs50, 2):
        find_crossing(a, b, 2.0)  # raises ContradictionError on double crossing

    ok = not failures
    report(
        10,
        ok,
        f"residuals<=1e-9, 200-family symmetry, outer bound, monotonicity, "
        f"{len(list(itertools.combinations(pairs50, 2)))} crossing pairs; "
        f"failures={failures[:5]}",
    )
