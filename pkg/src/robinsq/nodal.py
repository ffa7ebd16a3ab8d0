"""Nodal-domain counting for two-parameter eigenfunction families.

A family member is

    ``Phi(x, y) = cos(theta) u_p(x) u_q(y) + sin(theta) u_p(y) u_q(x)``

on the square ``(-pi/2, pi/2)**2``, where ``u_p, u_q`` are the 1D Robin
eigenfunctions of :mod:`robinsq.robin1d` at the same parameter ``h``.  The
counting pipeline is:

1. sample ``Phi`` on a uniform ``(2**L + 1)**2`` grid, mask samples with
   ``|Phi| <= 1e-12 * max|Phi|`` as nodal,
2. label 4-connected constant-sign components (compiled kernel when
   available),
3. resolve saddle-shaped cells - both diagonal corners of one sign, the
   other diagonal opposite or masked, and the diagonal corners currently in
   different components - by re-sampling the single cell on a 17x17 local
   grid and merging the global components the local picture connects,
4. certify by re-counting at level ``L + 1`` and requiring agreement.

Masked samples are never members of a component, so exactly-sampled nodal
lines (diagonals at symmetric angles, the products at ``theta = 0``) split
the grid correctly: any 4-connected path across a masked diagonal must step
on it.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ContradictionError
from .labeling import label_components
from .robin1d import AlphaBranch, eval_u, eval_u_derivative, solve_alpha_cached
from .rootfind import local_abs_min

__all__ = [
    "ThetaFamily",
    "SideZeros",
    "NodalCountResult",
    "SIDES",
    "count_nodal_domains",
    "classify_inner_outer",
    "boundary_zeros",
    "corner_zeros",
    "interior_nodal_crossings",
    "theta_symmetry_check",
    "result_to_json",
    "canonical_theta",
]

EPS_MASK = 1e-12
TANGENCY_TOL = 1e-7
_HALF = math.pi / 2.0
SIDES = ("left", "right", "bottom", "top")
_SIDE_COORD = {"left": -math.pi / 2, "right": math.pi / 2, "bottom": -math.pi / 2, "top": math.pi / 2}


@dataclass(frozen=True)
class ThetaFamily:
    """One member ``Phi_{theta}`` of the family attached to the pair (p, q)."""

    p: int
    q: int
    theta: float
    h: float
    branch_p: AlphaBranch
    branch_q: AlphaBranch

    @classmethod
    def create(cls, p: int, q: int, theta: float, h: float) -> "ThetaFamily":
        return cls(
            p=p,
            q=q,
            theta=float(theta),
            h=float(h),
            branch_p=solve_alpha_cached(p, float(h)),
            branch_q=solve_alpha_cached(q, float(h)),
        )

    @property
    def lambda_value(self) -> float:
        ap, aq = self.branch_p.alpha, self.branch_q.alpha
        return (ap * ap + aq * aq) / (math.pi * math.pi)

    def eval(self, x, y):
        ct, st = math.cos(self.theta), math.sin(self.theta)
        return ct * eval_u(self.branch_p, x) * eval_u(self.branch_q, y) + st * eval_u(
            self.branch_p, y
        ) * eval_u(self.branch_q, x)

    def eval_dx(self, x, y):
        ct, st = math.cos(self.theta), math.sin(self.theta)
        return ct * eval_u_derivative(self.branch_p, x) * eval_u(
            self.branch_q, y
        ) + st * eval_u(self.branch_p, y) * eval_u_derivative(self.branch_q, x)

    def eval_dy(self, x, y):
        ct, st = math.cos(self.theta), math.sin(self.theta)
        return ct * eval_u(self.branch_p, x) * eval_u_derivative(
            self.branch_q, y
        ) + st * eval_u_derivative(self.branch_p, y) * eval_u(self.branch_q, x)

    def eval_grid(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """``Z[iy, ix] = Phi(xs[ix], ys[iy])`` via outer products."""
        ct, st = math.cos(self.theta), math.sin(self.theta)
        upx = eval_u(self.branch_p, xs)
        uqx = eval_u(self.branch_q, xs)
        upy = eval_u(self.branch_p, ys)
        uqy = eval_u(self.branch_q, ys)
        return ct * np.outer(uqy, upx) + st * np.outer(upy, uqx)

    def side_restriction(self, side: str):
        """Callable ``psi(t)`` for ``Phi`` restricted to a boundary side."""
        c = _SIDE_COORD[side]
        ct, st = math.cos(self.theta), math.sin(self.theta)
        if side in ("left", "right"):
            a = ct * float(eval_u(self.branch_p, c))
            b = st * float(eval_u(self.branch_q, c))
            bp, bq = self.branch_q, self.branch_p

            def psi(t):
                return a * eval_u(bp, t) + b * eval_u(bq, t)

        else:
            a = ct * float(eval_u(self.branch_q, c))
            b = st * float(eval_u(self.branch_p, c))
            bp, bq = self.branch_p, self.branch_q

            def psi(t):
                return a * eval_u(bp, t) + b * eval_u(bq, t)

        return psi


def canonical_theta(theta: float) -> float:
    """Representative of the orbit of ``theta`` under the count symmetries.

    ``Phi_{theta + pi} = -Phi_theta`` and the coordinate swap identifies
    ``theta`` with ``pi/2 - theta`` for every pair, so counts only have to be
    computed once per orbit ``{theta, (pi/2 - theta) mod pi}``.
    """
    t = theta % math.pi
    partner = (math.pi / 2.0 - t) % math.pi
    return min(t, partner)


def _signed_grid(Z: np.ndarray) -> tuple[np.ndarray, float]:
    scale = float(np.abs(Z).max())
    if scale == 0.0:
        raise ContradictionError("family member vanishes identically on the grid")
    signs = np.zeros(Z.shape, dtype=np.int8)
    signs[Z > EPS_MASK * scale] = 1
    signs[Z < -EPS_MASK * scale] = -1
    return signs, scale


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


def _resolve_saddles(
    family: ThetaFamily,
    xs: np.ndarray,
    signs: np.ndarray,
    labels: np.ndarray,
    count: int,
    scale: float,
    refine: int = 4,
) -> np.ndarray:
    """Merge components that a saddle-shaped cell actually connects.

    Returns the relabelled grid (compact ids after all merges).
    """
    uf = _UnionFind(count)
    a = signs[:-1, :-1]
    b = signs[:-1, 1:]
    c = signs[1:, :-1]
    d = signs[1:, 1:]
    la = labels[:-1, :-1]
    lb = labels[:-1, 1:]
    lc = labels[1:, :-1]
    ld = labels[1:, 1:]
    cand1 = (a == d) & (a != 0) & (la != ld)
    cand2 = (b == c) & (b != 0) & (lb != lc)
    cells = np.argwhere(cand1 | cand2)
    if cells.size:
        m = (1 << refine) + 1
        for i, j in cells:
            pairs = []
            if cand1[i, j] and uf.find(int(la[i, j])) != uf.find(int(ld[i, j])):
                pairs.append(((0, 0), (m - 1, m - 1), int(la[i, j]), int(ld[i, j])))
            if cand2[i, j] and uf.find(int(lb[i, j])) != uf.find(int(lc[i, j])):
                pairs.append(((0, m - 1), (m - 1, 0), int(lb[i, j]), int(lc[i, j])))
            if not pairs:
                continue
            xloc = np.linspace(xs[j], xs[j + 1], m)
            yloc = np.linspace(xs[i], xs[i + 1], m)
            Zl = family.eval_grid(xloc, yloc)
            sl = np.zeros(Zl.shape, dtype=np.int8)
            sl[Zl > EPS_MASK * scale] = 1
            sl[Zl < -EPS_MASK * scale] = -1
            ll, _ = label_components(sl)
            for (c1, c2), (c3, c4), g1, g2 in pairs:
                if ll[c1, c2] >= 0 and ll[c1, c2] == ll[c3, c4]:
                    uf.union(g1, g2)
    lut = np.empty(count + 1, dtype=np.int32)
    roots = np.fromiter((uf.find(k) for k in range(count)), dtype=np.int32, count=count)
    remap = np.full(count, -1, dtype=np.int32)
    nxt = 0
    for r in roots:
        if remap[r] < 0:
            remap[r] = nxt
            nxt += 1
    lut[:count] = remap[roots]
    lut[count] = -1
    return lut[np.where(labels >= 0, labels, count)]


def _tangency_positions(side_zeros) -> tuple:
    """(side, t) pairs for every tangential boundary contact."""
    out = []
    for sz in side_zeros:
        for t in sz.tangencies:
            out.append((sz.side, t))
    return tuple(out)


def _apply_tangency_masks(signs: np.ndarray, xs: np.ndarray, tangencies) -> None:
    """Mask boundary samples within one spacing of a tangential contact.

    Where the nodal set touches a side without crossing it, the restriction
    of ``Phi`` to the side has a double zero: nearby boundary samples are
    small but of constant sign and would bridge the two nodal domains that
    meet only at the contact point.  Masking the adjacent samples restores
    the true topology; a domain genuinely connected elsewhere is unaffected.
    """
    n = xs.shape[0]
    spacing = xs[1] - xs[0]
    for side, t0 in tangencies:
        k = (t0 - xs[0]) / spacing
        lo = max(0, int(math.floor(k)) - 0)
        hi = min(n - 1, int(math.ceil(k)) + 0)
        idx = [i for i in range(lo - 1, hi + 2) if 0 <= i < n and abs(xs[i] - t0) <= spacing]
        for i in idx:
            if side == "left":
                signs[i, 0] = 0
            elif side == "right":
                signs[i, n - 1] = 0
            elif side == "bottom":
                signs[0, i] = 0
            else:
                signs[n - 1, i] = 0


def _apply_crossing_masks(signs: np.ndarray, xs: np.ndarray, crossings) -> None:
    """Mask samples near an interior self-intersection of the nodal curve.

    At an X-point whose branches run diagonally to the grid, the two
    same-sign wedges open along grid axes and the sample row nearest the
    crossing bridges them into one component.  Masking the samples within
    1.5 spacings of the crossing (Chebyshev distance) removes the bridge:
    any 4-connected path would need a same-sign sample with
    ``|x - xc| <= spacing`` and ``|y - yc| > 1.5 spacing``, which lies in
    the opposite-sign wedges.  Domains connected away from the crossing are
    unaffected.
    """
    spacing = xs[1] - xs[0]
    radius = 1.5 * spacing
    for xc, yc in crossings:
        sel_x = np.abs(xs - xc) <= radius
        sel_y = np.abs(xs - yc) <= radius
        signs[np.ix_(sel_y, sel_x)] = 0


def _count_once(family: ThetaFamily, level: int, tangencies=(), crossings=()):
    """One labelled count at grid level ``level``; returns (mu, labels)."""
    n = (1 << level) + 1
    xs = np.linspace(-math.pi / 2.0, math.pi / 2.0, n)
    Z = family.eval_grid(xs, xs)
    signs, scale = _signed_grid(Z)
    if tangencies:
        _apply_tangency_masks(signs, xs, tangencies)
    if crossings:
        _apply_crossing_masks(signs, xs, crossings)
    labels, count = label_components(signs)
    labels = _resolve_saddles(family, xs, signs, labels, count, scale)
    mu = int(labels.max()) + 1 if labels.size else 0
    return mu, labels


def _outer_roots(labels: np.ndarray) -> set:
    """Components touching the boundary in more than isolated samples.

    A component is outer when it occupies two 4-adjacent samples of a
    boundary edge; single touching samples are treated as isolated contact.
    """
    out = set()
    for edge in (labels[0, :], labels[-1, :], labels[:, 0], labels[:, -1]):
        same = (edge[:-1] == edge[1:]) & (edge[:-1] >= 0)
        out.update(int(v) for v in edge[:-1][same])
    return out


@dataclass(frozen=True)
class SideZeros:
    side: str
    zeros: tuple
    tangencies: tuple

    @property
    def count(self) -> int:
        return len(self.zeros)


def boundary_zeros(family: ThetaFamily, side: str, samples: int = 4096) -> SideZeros:
    """Zeros and tangencies of ``Phi`` restricted to one open side.

    Sign changes are refined by bisection.  A dip of ``|psi|`` below
    ``1e-7 * max|psi|`` without a sign change is reported as a tangency
    (the nodal set touches the side without crossing); masked interior runs
    between samples of equal sign are treated the same way.  Corner samples
    are excluded - corner membership is handled by :func:`corner_zeros`.
    """
    if side not in SIDES:
        raise ValueError(f"unknown side {side!r}")
    psi = family.side_restriction(side)
    ts = np.linspace(-math.pi / 2.0, math.pi / 2.0, samples + 1)
    vals = np.asarray(psi(ts), dtype=float)
    scale = float(np.abs(vals).max())
    if scale == 0.0:
        raise ContradictionError("side restriction vanishes identically", side=side)
    s = np.zeros(vals.shape, dtype=np.int8)
    s[vals > EPS_MASK * scale] = 1
    s[vals < -EPS_MASK * scale] = -1

    interior = slice(1, samples)  # open side: drop corner samples
    idx = np.flatnonzero(s[interior]) + 1
    zeros = []
    tangencies = []
    for k in range(len(idx) - 1):
        i1, i2 = int(idx[k]), int(idx[k + 1])
        if s[i1] != s[i2]:
            lo, hi = ts[i1], ts[i2]
            flo = vals[i1]
            for _ in range(60):
                mid = 0.5 * (lo + hi)
                fm = float(psi(mid))
                if flo * fm <= 0.0:
                    hi = mid
                else:
                    lo, flo = mid, fm
            zeros.append(0.5 * (lo + hi))
        elif i2 > i1 + 1:
            # masked run with equal signs on both flanks: tangential contact
            t0, _ = local_abs_min(psi, ts[i1], ts[i2])
            tangencies.append(t0)
    # smooth tangencies that never dip under the mask threshold
    av = np.abs(vals)
    dip = np.flatnonzero(
        (av[1:-1] <= av[:-2]) & (av[1:-1] <= av[2:]) & (av[1:-1] < 1e-4 * scale)
    ) + 1
    spacing = ts[1] - ts[0]
    for i in dip:
        i = int(i)
        if i <= 1 or i >= samples - 1 or s[i] == 0:
            continue
        t0, m0 = local_abs_min(psi, ts[i - 1], ts[i + 1])
        if m0 < TANGENCY_TOL * scale and not any(abs(t0 - z) < 2 * spacing for z in zeros):
            if not any(abs(t0 - t) < 2 * spacing for t in tangencies):
                tangencies.append(t0)
    return SideZeros(side=side, zeros=tuple(zeros), tangencies=tuple(sorted(tangencies)))


def corner_zeros(family: ThetaFamily) -> tuple:
    """Corners of the square lying in the nodal set, as coordinate tuples."""
    half = math.pi / 2.0
    ct, st = math.cos(family.theta), math.sin(family.theta)
    out = []
    for cx in (-half, half):
        for cy in (-half, half):
            t1 = ct * float(eval_u(family.branch_p, cx)) * float(eval_u(family.branch_q, cy))
            t2 = st * float(eval_u(family.branch_p, cy)) * float(eval_u(family.branch_q, cx))
            scale = max(abs(t1), abs(t2), 1e-30)
            if abs(t1 + t2) <= 1e-9 * scale:
                out.append((cx, cy))
    return tuple(out)


@functools.lru_cache(maxsize=4096)
def interior_nodal_crossings(
    family: ThetaFamily, seed_level: int = 7, *, max_iter: int = 60
):
    """Interior points where ``Phi`` and its gradient vanish simultaneously.

    These are the self-intersections (X-points) of the nodal curve.
    Candidates are the
    local minima of the scaled residual ``(Phi/s0)**2 + |grad Phi|**2/s1**2``
    on a ``(2**seed_level + 1)**2`` grid; each is polished by Gauss-Newton
    with the analytic Jacobian and accepted when ``|Phi| <= 1e-9 * s0`` and
    ``|grad Phi| <= 1e-8 * s1`` strictly inside the square.
    """
    n = (1 << seed_level) + 1
    xs = np.linspace(-_HALF, _HALF, n)
    X, Y = np.meshgrid(xs, xs)
    Z = family.eval_grid(xs, xs)
    Gx = family.eval_dx(X, Y)
    Gy = family.eval_dy(X, Y)
    s0 = float(np.abs(Z).max())
    s1 = max(float(np.abs(Gx).max()), float(np.abs(Gy).max()))
    if s0 == 0.0 or s1 == 0.0:
        # constant (or identically vanishing) member: no nodal curve
        return ()
    R = (Z / s0) ** 2 + (Gx / s1) ** 2 + (Gy / s1) ** 2
    interior = R[1:-1, 1:-1]
    is_min = np.ones(interior.shape, dtype=bool)
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di == 0 and dj == 0:
                continue
            is_min &= interior <= R[1 + di : n - 1 + di, 1 + dj : n - 1 + dj]
    cp = family.branch_p.alpha / math.pi
    cq = family.branch_q.alpha / math.pi
    # At one grid diagonal from a crossing the scaled residual is of order
    # (spacing * frequency)**2, so the seed cut must scale with both.
    spacing = float(xs[1] - xs[0])
    seed_cut = min(0.5, max(1e-2, 2.0 * (spacing * max(cp, cq, 1.0)) ** 2))
    seeds = np.argwhere(is_min & (interior < seed_cut))
    ct, st = math.cos(family.theta), math.sin(family.theta)

    def residual_and_jacobian(x: float, y: float):
        upx, uqx = float(eval_u(family.branch_p, x)), float(eval_u(family.branch_q, x))
        upy, uqy = float(eval_u(family.branch_p, y)), float(eval_u(family.branch_q, y))
        dpx = float(eval_u_derivative(family.branch_p, x))
        dqx = float(eval_u_derivative(family.branch_q, x))
        dpy = float(eval_u_derivative(family.branch_p, y))
        dqy = float(eval_u_derivative(family.branch_q, y))
        phi = ct * upx * uqy + st * upy * uqx
        fx = ct * dpx * uqy + st * upy * dqx
        fy = ct * upx * dqy + st * dpy * uqx
        fxx = -(ct * cp * cp * upx * uqy + st * cq * cq * upy * uqx)
        fyy = -(ct * cq * cq * upx * uqy + st * cp * cp * upy * uqx)
        fxy = ct * dpx * dqy + st * dpy * dqx
        r = np.array([phi / s0, fx / s1, fy / s1])
        J = np.array(
            [[fx / s0, fy / s0], [fxx / s1, fxy / s1], [fxy / s1, fyy / s1]]
        )
        return r, J, phi, fx, fy

    found = []
    for i, j in seeds:
        x, y = float(xs[j + 1]), float(xs[i + 1])
        ok = False
        for _ in range(max_iter):
            r, J, phi, fx, fy = residual_and_jacobian(x, y)
            if abs(phi) <= 1e-9 * s0 and math.hypot(fx, fy) <= 1e-8 * s1:
                ok = True
                break
            JtJ = J.T @ J
            try:
                step = np.linalg.solve(JtJ + 1e-14 * np.eye(2), -J.T @ r)
            except np.linalg.LinAlgError:
                break
            ns = float(np.hypot(step[0], step[1]))
            if ns > 0.2:
                step *= 0.2 / ns
            x += float(step[0])
            y += float(step[1])
            if not (-_HALF - 0.1 < x < _HALF + 0.1 and -_HALF - 0.1 < y < _HALF + 0.1):
                break
        if not ok:
            continue
        if not (-_HALF + 1e-6 < x < _HALF - 1e-6 and -_HALF + 1e-6 < y < _HALF - 1e-6):
            continue
        if any((x - a) ** 2 + (y - b) ** 2 < 1e-12 for a, b in found):
            continue
        found.append((x, y))
    return tuple(sorted(found))


@dataclass(frozen=True)
class NodalCountResult:
    p: int
    q: int
    theta: float
    h: float
    mu: int
    mu_inn: int
    mu_out: int
    boundary_zeros: tuple  # per side, SIDES order
    tangencies: tuple  # per side, SIDES order
    level: int
    certified: bool
    mu_coarse: int = field(default=0, compare=False)
    lambda_value: float = field(default=0.0, compare=False)


def count_nodal_domains(
    family: ThetaFamily, level: int = 9, *, max_level: int | None = None
) -> NodalCountResult:
    """Certified nodal-domain count of one family member.

    The count is performed at grid levels ``level`` and ``level + 1``;
    agreement certifies the result.  On disagreement the base level is
    escalated while ``level + 1 < max_level`` (default: no escalation) and
    the finest pair is reported with ``certified=False`` if the budget runs
    out.  The reported ``mu`` always comes from the finer grid.
    """
    if max_level is None:
        max_level = level + 1
    probe = np.linspace(-math.pi / 2.0, math.pi / 2.0, 65)
    amplitude = float(np.abs(family.eval_grid(probe, probe)).max())
    coeff = abs(math.cos(family.theta)) + abs(math.sin(family.theta))
    if amplitude <= 1e-12 * coeff:
        # cos/sin cancellation to rounding level: the member is the zero
        # function up to floating-point noise and has no nodal picture.
        raise ContradictionError(
            "family member vanishes to rounding",
            p=family.p,
            q=family.q,
            theta=family.theta,
            h=family.h,
            amplitude=amplitude,
        )
    sides = [boundary_zeros(family, s) for s in SIDES]
    tangencies = _tangency_positions(sides)
    crossings = interior_nodal_crossings(family)
    base = level
    while True:
        mu_a, _ = _count_once(family, base, tangencies, crossings)
        mu_b, labels = _count_once(family, base + 1, tangencies, crossings)
        if mu_a == mu_b or base + 1 >= max_level:
            break
        base += 1
    outer = _outer_roots(labels)
    mu_out = len(outer)
    mu_inn = mu_b - mu_out
    lam = family.lambda_value
    if mu_out > max(4.0 * math.sqrt(lam), 1.0) + 1e-9:
        raise ContradictionError(
            "outer domain count exceeds the boundary bound",
            p=family.p,
            q=family.q,
            theta=family.theta,
            h=family.h,
            mu_out=mu_out,
            bound=4.0 * math.sqrt(lam),
        )
    return NodalCountResult(
        p=family.p,
        q=family.q,
        theta=family.theta,
        h=family.h,
        mu=mu_b,
        mu_inn=mu_inn,
        mu_out=mu_out,
        boundary_zeros=tuple(len(sz.zeros) for sz in sides),
        tangencies=tuple(len(sz.tangencies) for sz in sides),
        level=base,
        certified=(mu_a == mu_b),
        mu_coarse=mu_a,
        lambda_value=lam,
    )


def classify_inner_outer(family: ThetaFamily, level: int = 9) -> tuple[int, int]:
    """Recompute ``(mu_inn, mu_out)`` at one grid level (uncertified)."""
    tangencies = _tangency_positions([boundary_zeros(family, s) for s in SIDES])
    _, labels = _count_once(family, level, tangencies, interior_nodal_crossings(family))
    mu = int(labels.max()) + 1
    mu_out = len(_outer_roots(labels))
    return mu - mu_out, mu_out


@dataclass(frozen=True)
class SymmetryReport:
    passed: bool
    records: tuple
    failures: tuple


def theta_symmetry_check(
    p: int, q: int, h: float, thetas, level: int = 8
) -> SymmetryReport:
    """Verify the count symmetries on a sample of angles.

    For every pair: ``mu(theta) == mu((pi/2 - theta) mod pi)``.  When
    ``p + q`` is odd additionally ``mu(theta) == mu((pi - theta) mod pi)``
    and every count is even.  Only certified counts participate; failures
    are collected rather than raised so callers can report them together.
    """
    records = []
    failures = []
    cache: dict[float, NodalCountResult] = {}

    def mu_at(theta: float) -> NodalCountResult:
        key = round(theta % math.pi, 12)
        if key not in cache:
            cache[key] = count_nodal_domains(
                ThetaFamily.create(p, q, key, h), level=level
            )
        return cache[key]

    for theta in thetas:
        r0 = mu_at(theta)
        r1 = mu_at((math.pi / 2.0 - theta) % math.pi)
        if not (r0.certified and r1.certified):
            failures.append(("uncertified", theta))
            continue
        records.append((theta, r0.mu, r1.mu))
        if r0.mu != r1.mu:
            failures.append(("swap", theta, r0.mu, r1.mu))
        if (p + q) % 2 == 1:
            r2 = mu_at((math.pi - theta) % math.pi)
            if r2.certified and r2.mu != r0.mu:
                failures.append(("reflection", theta, r0.mu, r2.mu))
            if r0.mu % 2 == 1:
                failures.append(("parity", theta, r0.mu))
    return SymmetryReport(passed=not failures, records=tuple(records), failures=tuple(failures))


def result_to_json(res: NodalCountResult) -> dict:
    """JSON-ready dict with a stable key order."""
    return {
        "p": res.p,
        "q": res.q,
        "theta": float(f"{res.theta:.15g}"),
        "h": float(f"{res.h:.15g}"),
        "mu": res.mu,
        "mu_inn": res.mu_inn,
        "mu_out": res.mu_out,
        "boundary_zeros": list(res.boundary_zeros),
        "tangencies": list(res.tangencies),
        "level": res.level,
        "certified": res.certified,
    }
