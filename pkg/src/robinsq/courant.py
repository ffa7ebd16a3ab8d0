"""Courant-sharp verdicts: elimination rules stacked over numeric counts.

A label ``n`` (1-based position in the Robin spectrum of the square at
parameter ``h``) is *Courant-sharp* when some eigenfunction of ``lambda_n``
has exactly ``n`` nodal domains.  This module stacks the cheap analytic
elimination rules - global growth bounds, the Faber-Krahn/Pleijel bound,
Courant bounds inside symmetry subspaces, the even-index folding bound, the
``(p, p)`` product rule and the rotation-antisymmetry parity rule - and
falls back to certified numeric nodal counts over an angle grid for the few
labels that survive.
"""

from __future__ import annotations

import functools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .critical import (
    boundary_nodal_points,
    critical_theta_02,
    critical_theta_03,
    critical_thetas,
    interior_critical_points,
)
from .errors import ContradictionError
from .nodal import (
    SIDES,
    ThetaFamily,
    boundary_zeros,
    canonical_theta,
    count_nodal_domains,
)
from .rootfind import bessel_j0_first_zero
from .spectrum import SpectrumTable, build_spectrum

__all__ = [
    "CourantVerdict",
    "ScanResult",
    "RuleResult",
    "bessel_j",
    "global_bound_threshold",
    "uniform_chain_infeasible",
    "pleijel_check",
    "leydold_bound",
    "folding_bound",
    "pp_rule",
    "parity_rule",
    "family_mu_bound",
    "courant_scan",
    "transition_table_02",
    "transition_table_03",
    "sturm_zero_range",
    "table_for_labels",
]

KNOWN_COURANT_SHARP = (1, 2, 4)
SUBSPACES = ("ARot", "SRot", "AMir")


@functools.lru_cache(maxsize=1)
def bessel_j() -> float:
    """First positive zero of J0, computed once."""
    return bessel_j0_first_zero()


@dataclass(frozen=True)
class RuleResult:
    rule: str
    applicable: bool
    eliminated: bool = False
    evidence: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CourantVerdict:
    n: int
    h: float
    status: str  # courant_sharp | not_courant_sharp | undecided
    decided_by: str
    evidence: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ScanResult:
    h: float
    n_max: int
    verdicts: tuple
    contradictions: tuple

    def courant_sharp_labels(self) -> tuple:
        return tuple(v.n for v in self.verdicts if v.status == "courant_sharp")

    def undecided_labels(self) -> tuple:
        return tuple(v.n for v in self.verdicts if v.status == "undecided")


# ----------------------------------------------------------------- thresholds


def _neumann_inequality(n: int) -> bool:
    """The necessary Courant-sharp inequality of the Neumann/small-h path."""
    j = bessel_j()
    return n < 4.0 / (j * j) * (n - 1) + 8.0 / math.sqrt(math.pi) * math.sqrt(n - 1)


def uniform_chain_infeasible(n: int) -> bool:
    """h-uniform elimination: no ``lambda`` satisfies both chain inequalities.

    A Courant-sharp ``lambda_{n,h}`` must satisfy the counting lower bound
    ``n > pi/4 lambda - 2 sqrt(lambda) + 2`` (capping ``lambda`` above) and
    the Faber-Krahn bound ``n <= pi/j**2 lambda + 4 sqrt(lambda)`` (forcing
    ``lambda`` up).  When the two windows are disjoint the label is
    eliminated for every ``h >= 0`` at once.
    """
    j = bessel_j()
    s_hi = (2.0 + math.sqrt(4.0 + math.pi * (n - 2))) * 2.0 / math.pi
    lam_hi = s_hi * s_hi
    a = math.pi / (j * j)
    s_lo = (-4.0 + math.sqrt(16.0 + 4.0 * a * n)) / (2.0 * a)
    lam_lo = s_lo * s_lo
    return lam_lo > lam_hi


def global_bound_threshold(neumann: bool = True) -> int:
    """Smallest label beyond which the respective global argument eliminates.

    The Neumann/small-h inequality fails from 209 on; the h-uniform chain
    closes somewhat earlier than the headline value quoted alongside it, and
    the exact first all-beyond-infeasible label is returned (the difference
    is monotone increasing past the threshold, which is re-verified over a
    wide window).
    """
    if neumann:
        pred = lambda n: not _neumann_inequality(n)
    else:
        pred = uniform_chain_infeasible
    last_ok = 1
    for n in range(2, 5000):
        if not pred(n):
            last_ok = n
    threshold = last_ok + 1
    for n in range(threshold, threshold + 2000):
        if not pred(n):
            raise ContradictionError("global threshold is not terminal", n=n)
    return threshold


# ----------------------------------------------------------------- bound rules


def pleijel_check(table: SpectrumTable, n: int) -> RuleResult:
    """Faber-Krahn/Pleijel elimination with the boundary correction term."""
    j = bessel_j()
    lvl = table.level_for_label(n)
    jn = max(max(i, k) for i, k in lvl.pairs)
    bound = math.pi / (j * j) * lvl.value + max(4 * jn, 1)
    return RuleResult(
        rule="pleijel",
        applicable=True,
        eliminated=bound < n,
        evidence={"lambda": lvl.value, "j_n": jn, "bound": bound},
    )


def _in_subspace(pair, subspace: str) -> bool:
    i, j = pair
    if subspace == "ARot":
        return (i + j) % 2 == 1
    if subspace == "SRot":
        return (i + j) % 2 == 0
    if subspace == "AMir":
        return i % 2 == 1 and j % 2 == 1
    raise ValueError(f"unknown subspace {subspace!r}")


def _subspace_count_below(table: SpectrumTable, value: float, subspace: str) -> int:
    """Ordered pairs of the subspace's parity class with eigenvalue < value."""
    count = 0
    for lvl in table.levels:
        if lvl.value >= value - 1e-9:
            break
        count += sum(1 for p in lvl.pairs if _in_subspace(p, subspace))
    return count


def leydold_bound(table: SpectrumTable, n: int, subspace: str) -> RuleResult:
    """Courant bound within a symmetry subspace: ``mu <= 2m`` (rotation
    subspaces) or ``mu <= 4m`` (mirror-antisymmetric subspace), where ``m``
    is the rank of ``lambda_n`` in the subspace spectrum."""
    lvl = table.level_for_label(n)
    if not all(_in_subspace(p, subspace) for p in lvl.pairs):
        return RuleResult(rule=f"leydold-{subspace}", applicable=False)
    below = _subspace_count_below(table, lvl.value, subspace)
    m = below + (n - lvl.label_lo + 1)
    coef = 4 if subspace == "AMir" else 2
    bound = coef * m
    return RuleResult(
        rule=f"leydold-{subspace}",
        applicable=True,
        eliminated=bound < n,
        evidence={"m": m, "bound": bound},
    )


def parity_rule(table: SpectrumTable, n: int) -> RuleResult:
    """Rotation-antisymmetric levels have even counts: odd ``n`` eliminated."""
    lvl = table.level_for_label(n)
    if not all(_in_subspace(p, "ARot") for p in lvl.pairs):
        return RuleResult(rule="parity", applicable=False)
    return RuleResult(
        rule="parity", applicable=True, eliminated=n % 2 == 1, evidence={"n_parity": n % 2}
    )


def folding_bound(p: int, q: int, known_mu_half: int) -> int:
    """Upper bound on the counts of an even-index family by unfolding.

    Each member of the ``(p, q)`` family (``p, q`` even) is, on a quarter of
    the square, a reflected copy of a member of the half-index family
    ``(p/2, q/2)``; unfolding bounds its count by
    ``4 * known_mu_half - (4 * min(p/2, q/2) + 3)``.
    """
    if p % 2 or q % 2:
        raise ValueError("folding bound requires both indices even")
    k = min(p // 2, q // 2)
    return 4 * known_mu_half - (4 * k + 3)


def family_mu_bound(table: SpectrumTable, p: int, q: int, verdicts=None) -> int:
    """Best available upper bound on counts within the family of ``(p, q)``.

    Combines the Courant bound through the level's lowest label (sharpened
    by one when that label is already eliminated), and the subspace bounds
    applicable to the whole level.
    """
    lvl = table.level_for_pair((p, q))
    bound = lvl.label_lo
    if verdicts:
        v = verdicts.get(lvl.label_lo)
        if v is not None and v.status == "not_courant_sharp":
            bound -= 1
    for subspace in SUBSPACES:
        if all(_in_subspace(pp, subspace) for pp in lvl.pairs):
            below = _subspace_count_below(table, lvl.value, subspace)
            m_max = below + lvl.multiplicity
            coef = 4 if subspace == "AMir" else 2
            bound = min(bound, coef * m_max)
    return bound


def pp_rule(table: SpectrumTable, n: int) -> RuleResult:
    """Simple product levels ``(p, p)`` have exactly ``(p+1)**2`` domains."""
    lvl = table.level_for_label(n)
    if lvl.multiplicity != 1:
        return RuleResult(rule="pp-rule", applicable=False)
    p, q = lvl.pairs[0]
    if p != q:
        return RuleResult(rule="pp-rule", applicable=False)
    mu = (p + 1) ** 2
    return RuleResult(
        rule="pp-rule",
        applicable=True,
        eliminated=mu < n,
        evidence={"p": p, "mu": mu},
    )


# ----------------------------------------------------------------- numerics


def _sweep_count(args):
    p, q, theta, h, level = args
    fam = ThetaFamily.create(p, q, theta, h)
    r = count_nodal_domains(fam, level=level)
    return theta, r.mu, r.certified


def _theta_grid(p: int, q: int, h: float, theta_samples: int) -> tuple:
    cands = [k * math.pi / theta_samples for k in range(theta_samples)]
    cands.extend(critical_thetas(p, q, h))
    # Deduplicate by a rounded key but keep exact values: special angles
    # such as pi/4 sit on degenerate configurations that rounding would
    # perturb into unresolvable near-degenerate ones.
    vals: dict = {}
    for t in cands:
        tc = canonical_theta(t)
        vals.setdefault(round(tc, 12), tc)
    return tuple(sorted(vals.values()))


def _sweep_family(p, q, h, theta_samples, level, executor=None):
    grid = _theta_grid(p, q, h, theta_samples)
    tasks = [(p, q, t, h, level) for t in grid]
    if executor is not None:
        results = list(executor.map(_sweep_count, tasks, chunksize=4))
    else:
        results = [_sweep_count(t) for t in tasks]
    return results


def table_for_labels(h: float, n_max: int) -> SpectrumTable:
    """A spectrum table guaranteed to label at least ``n_max`` eigenvalues."""
    lam = 4.0 / math.pi * n_max * 1.4 + 20.0
    table = build_spectrum(h, lam)
    while table.num_labels < n_max:
        lam *= 1.3
        table = build_spectrum(h, lam)
    return table


def courant_scan(
    h: float,
    n_max: int = 208,
    theta_samples: int = 97,
    level: int = 9,
    jobs: int = 1,
) -> ScanResult:
    """Full per-label verdict scan at one Robin parameter.

    Rules are applied cheapest-first per label; surviving labels whose level
    has multiplicity at most 2 get a certified numeric count over the angle
    grid (uniform samples plus every transition angle of the pair).  Labels
    of higher multiplicity that no bound rule settles stay ``undecided``,
    as do labels whose numerics fail to certify.
    """
    if not 0.0 <= h <= 0.1:
        raise ValueError("the scan is tuned for the small-parameter regime h in [0, 0.1]")
    if n_max > 208:
        raise ValueError("labels beyond 208 are settled by the global bound")
    table = table_for_labels(h, n_max)
    thr = global_bound_threshold(neumann=True)
    verdicts: dict[int, CourantVerdict] = {}
    contradictions: list[dict] = []
    sweep_cache: dict = {}
    executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None

    def numeric_sweep(p, q):
        key = (p, q)
        if key not in sweep_cache:
            sweep_cache[key] = _sweep_family(p, q, h, theta_samples, level, executor)
        return sweep_cache[key]

    try:
        for n in range(1, n_max + 1):
            lvl = table.level_for_label(n)
            if n in KNOWN_COURANT_SHARP:
                verdicts[n] = CourantVerdict(
                    n=n, h=h, status="courant_sharp", decided_by="known-case", evidence={}
                )
                continue
            if n >= thr:
                verdicts[n] = CourantVerdict(
                    n=n,
                    h=h,
                    status="not_courant_sharp",
                    decided_by="global-bound",
                    evidence={"threshold": thr},
                )
                continue
            rr = pleijel_check(table, n)
            if rr.eliminated:
                verdicts[n] = CourantVerdict(
                    n=n, h=h, status="not_courant_sharp", decided_by=rr.rule, evidence=rr.evidence
                )
                continue
            decided = False
            for subspace in SUBSPACES:
                rr = leydold_bound(table, n, subspace)
                if rr.applicable and rr.eliminated:
                    verdicts[n] = CourantVerdict(
                        n=n,
                        h=h,
                        status="not_courant_sharp",
                        decided_by=rr.rule,
                        evidence=rr.evidence,
                    )
                    decided = True
                    break
            if decided:
                continue
            ups = lvl.unordered_pairs
            if len(ups) == 1 and ups[0][0] != ups[0][1]:
                p, q = ups[0]
                if p % 2 == 0 and q % 2 == 0:
                    half_bound = family_mu_bound(table, p // 2, q // 2, verdicts)
                    fb = folding_bound(p, q, half_bound)
                    if fb < n:
                        verdicts[n] = CourantVerdict(
                            n=n,
                            h=h,
                            status="not_courant_sharp",
                            decided_by="folding",
                            evidence={"half_bound": half_bound, "bound": fb},
                        )
                        continue
            rr = pp_rule(table, n)
            if rr.applicable:
                if rr.eliminated:
                    verdicts[n] = CourantVerdict(
                        n=n,
                        h=h,
                        status="not_courant_sharp",
                        decided_by="pp-rule",
                        evidence=rr.evidence,
                    )
                    continue
                if rr.evidence["mu"] == n:
                    p = rr.evidence["p"]
                    res = count_nodal_domains(ThetaFamily.create(p, p, 0.0, h), level=level)
                    if res.certified and res.mu == n:
                        verdicts[n] = CourantVerdict(
                            n=n,
                            h=h,
                            status="courant_sharp",
                            decided_by="pp-rule",
                            evidence={"p": p, "mu": res.mu},
                        )
                        continue
                    if res.certified and res.mu != n:
                        contradictions.append(
                            {"n": n, "kind": "pp-count", "expected": n, "got": res.mu}
                        )
            rr = parity_rule(table, n)
            if rr.applicable and rr.eliminated:
                verdicts[n] = CourantVerdict(
                    n=n, h=h, status="not_courant_sharp", decided_by="parity", evidence={}
                )
                continue
            if lvl.multiplicity <= 2 and len(ups) == 1 and ups[0][0] != ups[0][1]:
                p, q = ups[0]
                results = numeric_sweep(p, q)
                certified = [(t, mu) for t, mu, ok in results if ok]
                all_ok = len(certified) == len(results)
                if (p + q) % 2 == 1:
                    for t, mu in certified:
                        if mu % 2 == 1:
                            contradictions.append(
                                {"n": n, "kind": "parity-count", "theta": t, "mu": mu}
                            )
                best = max(certified, key=lambda r: r[1], default=None)
                if best is not None and best[1] > lvl.label_lo:
                    contradictions.append(
                        {
                            "n": n,
                            "kind": "count-exceeds-courant",
                            "theta": best[0],
                            "mu": best[1],
                            "label_lo": lvl.label_lo,
                        }
                    )
                    verdicts[n] = CourantVerdict(
                        n=n, h=h, status="undecided", decided_by="numeric-count", evidence={}
                    )
                    continue
                evidence = {
                    "max_mu": best[1] if best else None,
                    "theta_at_max": best[0] if best else None,
                    "grid_size": len(results),
                    "all_certified": all_ok,
                }
                if best is not None and best[1] == n:
                    verdicts[n] = CourantVerdict(
                        n=n, h=h, status="courant_sharp", decided_by="numeric-count", evidence=evidence
                    )
                elif all_ok and best is not None and best[1] < n:
                    verdicts[n] = CourantVerdict(
                        n=n,
                        h=h,
                        status="not_courant_sharp",
                        decided_by="numeric-count",
                        evidence=evidence,
                    )
                else:
                    verdicts[n] = CourantVerdict(
                        n=n, h=h, status="undecided", decided_by="numeric-count", evidence=evidence
                    )
                continue
            verdicts[n] = CourantVerdict(
                n=n, h=h, status="undecided", decided_by="none", evidence={}
            )
    finally:
        if executor is not None:
            executor.shutdown()
    return ScanResult(
        h=h,
        n_max=n_max,
        verdicts=tuple(verdicts[n] for n in range(1, n_max + 1)),
        contradictions=tuple(contradictions),
    )


# ------------------------------------------------------------- case studies


def _certified_mu(p, q, theta, h, level=9) -> int:
    res = count_nodal_domains(ThetaFamily.create(p, q, theta, h), level=level)
    if not res.certified:
        raise ContradictionError(
            "transition-table count failed to certify", p=p, q=q, theta=theta, h=h
        )
    return res.mu


def transition_table_02(h: float, level: int = 9):
    """Count table of the ``(0, 2)`` family across its transition angles.

    For ``0 < h <= 0.05`` returns five rows ``(theta_lo, theta_hi, mu)``
    with the counts ``(3, 2, 3, 4, 3)``; at ``h = 0`` the first two
    transition angles coincide at ``pi/4`` where the count spikes to 5.
    Disagreement between the recomputed counts and the table raises
    :class:`ContradictionError`.
    """
    if not 0.0 <= h <= 0.05:
        raise ValueError("transition table tabulated for 0 <= h <= 0.05")
    t1, t2, t3 = critical_theta_02(h)
    if h == 0.0:
        rows = [
            (0.0, t1, 3, [t1 / 2.0]),
            (t1, t1, 5, [t1]),
            (t1, t3, 3, [(t1 + t3) / 2.0]),
            (t3, t3, 4, [t3]),
            (t3, math.pi, 3, [(t3 + math.pi) / 2.0]),
        ]
    else:
        rows = [
            (0.0, t1, 3, [t1 / 2.0, t1]),
            (t1, t2, 2, [(t1 + t2) / 2.0]),
            (t2, t3, 3, [t2, (t2 + t3) / 2.0]),
            (t3, t3, 4, [t3]),
            (t3, math.pi, 3, [(t3 + math.pi) / 2.0]),
        ]
    out = []
    for lo, hi, expected, reps in rows:
        for rep in reps:
            mu = _certified_mu(0, 2, rep, h, level)
            if mu != expected:
                raise ContradictionError(
                    "count disagrees with the transition table",
                    pair=(0, 2),
                    theta=rep,
                    expected=expected,
                    got=mu,
                )
        out.append((lo, hi, expected))
    return out


def transition_table_03(h: float, level: int = 9):
    """Count/critical-point table of the ``(0, 3)`` family for small ``h``.

    Rows cover ``[0, theta(h))``, ``{theta(h)}``, ``(theta(h), pi/4)`` and
    ``{pi/4}`` and report ``(boundary_points, interior_points, mu)`` as
    ``(6,0,4), (4,0,4), (2,0,2), (2,2,4)``.  Boundary points are the points
    of the nodal set on the boundary (transversal crossings, tangential
    contacts and corners); interior points are nodal self-intersections.
    """
    if not 0.0 < h <= 0.05:
        raise ValueError("transition table tabulated for 0 < h <= 0.05")
    y_c, th = critical_theta_03(h)
    rows = [
        (0.0, th, (6, 0, 4), [0.0, th / 2.0]),
        (th, th, (4, 0, 4), [th]),
        (th, math.pi / 4.0, (2, 0, 2), [(th + math.pi / 4.0) / 2.0]),
        (math.pi / 4.0, math.pi / 4.0, (2, 2, 4), [math.pi / 4.0]),
    ]
    out = []
    for lo, hi, expected, reps in rows:
        for rep in reps:
            fam = ThetaFamily.create(0, 3, rep, h)
            bd = boundary_nodal_points(fam)
            inner = len(interior_critical_points(fam))
            mu = _certified_mu(0, 3, rep, h, level)
            got = (bd, inner, mu)
            if got != expected:
                raise ContradictionError(
                    "counts disagree with the transition table",
                    pair=(0, 3),
                    theta=rep,
                    expected=expected,
                    got=got,
                )
        out.append((lo, hi) + expected)
    return out


def sturm_zero_range(p: int, q: int, h: float, thetas) -> tuple:
    """Range of transversal boundary-zero counts of the family on one side.

    The side restriction is a two-term combination of 1D eigenfunctions with
    ``p`` and ``q`` sign changes; its zero count must stay within
    ``[min(p, q), max(p, q)]`` for every angle.
    """
    counts = []
    for theta in thetas:
        fam = ThetaFamily.create(p, q, theta, h)
        counts.append(len(boundary_zeros(fam, "left").zeros))
    return (min(counts), max(counts))
