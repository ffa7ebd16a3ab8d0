"""Critical values of the mixing angle and critical points of the nodal set.

For a pair ``(p, q)`` the restriction of ``Phi_theta`` to a boundary side is
a two-term combination ``A * u_q(t) * cos(theta) + B * u_p(t) * sin(theta)``
with nonzero constants ``A, B``.  A point of the side can be simultaneously
a zero and a tangential critical point of the restriction for some angle iff
the Wronskian-type function

    ``W(t) = u_p'(t) u_q(t) - u_p(t) u_q'(t)``

vanishes there; the angle is then ``theta = atan2(-A u_q(t), B u_p(t))``
modulo ``pi``.  These are the angles at which boundary zeros collide and
annihilate (or are created) as ``theta`` sweeps, i.e. the transition angles
of the nodal-count tables.

Interior critical points of ``Phi`` on its nodal set (self-intersections of
the nodal curve) are found by Gauss-Newton on ``(Phi, Phi_x, Phi_y)`` from
grid-seeded candidates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .nodal import (
    SIDES,
    ThetaFamily,
    boundary_zeros,
    corner_zeros,
    interior_nodal_crossings,
)
from .robin1d import eval_u, eval_u_derivative, solve_alpha_cached
from .rootfind import bisect_newton, sign_change_brackets

__all__ = [
    "BoundaryCriticalPoint",
    "boundary_critical_points",
    "critical_thetas",
    "critical_theta_02",
    "critical_theta_03",
    "special_theta_79",
    "interior_critical_points",
    "boundary_nodal_points",
]

_HALF = math.pi / 2.0


@dataclass(frozen=True)
class BoundaryCriticalPoint:
    """A (side, position, angle) triple where two boundary zeros collide."""

    side: str
    position: float
    theta: float | None
    h: float
    kind: str  # "pair-collision" or "undecided"
    residual_phi: float
    residual_tangent: float


def _wronskian_roots(bp, bq, subdiv: int) -> list:
    def w(t: float) -> float:
        return float(
            eval_u_derivative(bp, t) * eval_u(bq, t)
            - eval_u(bp, t) * eval_u_derivative(bq, t)
        )

    def dw(t: float) -> float:
        # W' = u_p'' u_q - u_p u_q'' = (cq**2 - cp**2) u_p u_q
        cp, cq = bp.alpha / math.pi, bq.alpha / math.pi
        return float((cq * cq - cp * cp) * eval_u(bp, t) * eval_u(bq, t))

    roots = []
    for lo, hi in sign_change_brackets(w, -_HALF, _HALF, subdiv):
        if lo == hi:
            roots.append(lo)
        else:
            roots.append(bisect_newton(w, dw, lo, hi))
    return roots


def boundary_critical_points(p: int, q: int, h: float, side: str = "left"):
    """Transition points of the boundary zeros of the family of ``(p, q)``.

    Requires ``p != q``.  Roots of the Wronskian equation on the open side
    are located by dense bracketing (simple sign changes only) and polished;
    each yields the critical angle and is verified by substituting back:
    both the restriction and its tangential derivative must vanish to
    ``1e-8`` relative.  If the root is a common zero of ``u_p`` and ``u_q``
    the angle is not determined by this point (every angle has a boundary
    zero there) and the point is flagged ``undecided``.
    """
    if p == q:
        raise ValueError("boundary critical angles need a two-dimensional family (p != q)")
    if side not in SIDES:
        raise ValueError(f"unknown side {side!r}")
    bp = solve_alpha_cached(p, h)
    bq = solve_alpha_cached(q, h)
    c = -_HALF if side in ("left", "bottom") else _HALF
    if side in ("left", "right"):
        A = float(eval_u(bp, c))  # multiplies cos(theta) * u_q(t)
        B = float(eval_u(bq, c))  # multiplies sin(theta) * u_p(t)
    else:
        # Horizontal sides: Phi(t, c) = cos(theta) u_p(t) u_q(c)
        #                             + sin(theta) u_p(c) u_q(t).
        A = float(eval_u(bq, c))  # multiplies cos(theta) * u_p(t)
        B = float(eval_u(bp, c))  # multiplies sin(theta) * u_q(t)
    out = []
    subdiv = 64 * max(p + q, 1)
    for t in _wronskian_roots(bp, bq, subdiv):
        upt = float(eval_u(bp, t))
        uqt = float(eval_u(bq, t))
        if max(abs(upt), abs(uqt)) < 1e-9:
            out.append(
                BoundaryCriticalPoint(
                    side=side,
                    position=t,
                    theta=None,
                    h=h,
                    kind="undecided",
                    residual_phi=0.0,
                    residual_tangent=0.0,
                )
            )
            continue
        if side in ("left", "right"):
            theta = math.atan2(-A * uqt, B * upt) % math.pi
        else:
            theta = math.atan2(-A * upt, B * uqt) % math.pi
        fam = ThetaFamily(p=p, q=q, theta=theta, h=h, branch_p=bp, branch_q=bq)
        if side in ("left", "right"):
            x0, y0 = c, t
            rphi = abs(float(fam.eval(x0, y0)))
            rtan = abs(float(fam.eval_dy(x0, y0)))
        else:
            x0, y0 = t, c
            rphi = abs(float(fam.eval(x0, y0)))
            rtan = abs(float(fam.eval_dx(x0, y0)))
        scale = max(abs(A), abs(B), 1.0)
        out.append(
            BoundaryCriticalPoint(
                side=side,
                position=t,
                theta=theta,
                h=h,
                kind="pair-collision",
                residual_phi=rphi / scale,
                residual_tangent=rtan / scale,
            )
        )
    return tuple(out)


def critical_thetas(p: int, q: int, h: float) -> tuple:
    """All transition angles of the pair, gathered from the four sides plus
    the corner-membership angles; sorted, deduplicated, in ``[0, pi)``."""
    cands = []
    for side in SIDES:
        for cp in boundary_critical_points(p, q, h, side):
            if cp.theta is not None:
                cands.append(cp.theta % math.pi)
    # Angles at which a corner of the square joins the nodal set.
    for theta in (math.pi / 4.0, 3.0 * math.pi / 4.0):
        fam = ThetaFamily.create(p, q, theta, h)
        if corner_zeros(fam):
            cands.append(theta)
    if p % 2 == 1 and q % 2 == 1:
        cands.append(math.atan2(q, p) % math.pi)
        cands.append(math.atan2(-q, p) % math.pi)
    # Snap to the degenerate special angles: a root found numerically a few
    # ulps off an exact symmetry angle (e.g. pi/4 for odd p+q) must be
    # replaced by the exact value, where the diagonal masking applies; the
    # nearby perturbed angle has unresolvable near-degenerate topology.
    specials = [k * math.pi / 4.0 for k in (1, 2, 3)]
    if p % 2 == 1 and q % 2 == 1:
        specials.append(math.atan2(q, p) % math.pi)
        specials.append(math.atan2(-q, p) % math.pi)
    snapped = []
    for t in cands:
        for s in specials:
            if abs(t - s) < 1e-9:
                t = s
                break
        snapped.append(t)
    vals: dict = {}
    for t in snapped:
        vals.setdefault(round(t, 12), t)
    return tuple(sorted(vals.values()))


def critical_theta_02(h: float) -> tuple:
    """The three transition angles of the pair ``(0, 2)``:

    ``theta_1 = arctan(-cos(alpha_0 / 2) / cos(alpha_2 / 2))``, its mirror
    ``pi/2 - theta_1``, and the corner angle ``3*pi/4``.  At ``h = 0`` the
    first two coincide at ``pi/4``.
    """
    if not 0.0 <= h <= 0.2:
        raise ValueError("the (0, 2) transition angles are tabulated for 0 <= h <= 0.2")
    a0 = solve_alpha_cached(0, h).alpha
    a2 = solve_alpha_cached(2, h).alpha
    theta1 = math.atan(-math.cos(a0 / 2.0) / math.cos(a2 / 2.0))
    return (theta1, math.pi / 2.0 - theta1, 3.0 * math.pi / 4.0)


def critical_theta_03(h: float) -> tuple:
    """Tangential transition of the pair ``(0, 3)``: ``(y_c, theta_star)``.

    ``y_c`` solves ``alpha_0 tan(alpha_0 y / pi) = -alpha_3 cot(alpha_3 y / pi)``
    (the Wronskian equation of the pair written in pole form) on the branch
    through ``pi/6``; ``theta_star`` is the angle whose member vanishes
    tangentially at ``(pi/2, y_c)``.
    """
    if h <= 0.0:
        raise ValueError("the (0, 3) tangential transition exists for h > 0")
    b0 = solve_alpha_cached(0, h)
    b3 = solve_alpha_cached(3, h)
    a0, a3 = b0.alpha, b3.alpha

    def w(y: float) -> float:
        return float(
            eval_u_derivative(b0, y) * eval_u(b3, y)
            - eval_u(b0, y) * eval_u_derivative(b3, y)
        )

    def dw(y: float) -> float:
        c0, c3 = a0 / math.pi, a3 / math.pi
        return float((c3 * c3 - c0 * c0) * eval_u(b0, y) * eval_u(b3, y))

    # The branch through pi/6 lies strictly inside (0, pi**2 / alpha_3).
    hi = math.pi * math.pi / a3 * (1.0 - 1e-9)
    y_c = bisect_newton(w, dw, 1e-6, hi)
    num = -math.cos(a0 / 2.0) * math.sin(a3 * y_c / math.pi)
    den = math.sin(a3 / 2.0) * math.cos(a0 * y_c / math.pi)
    theta = math.atan2(num, den) % math.pi
    return (y_c, theta)


def special_theta_79() -> float:
    """The angle ``arctan(7/9)`` singled out by the pair ``(7, 9)``."""
    return math.atan2(7.0, 9.0)


def interior_critical_points(
    family: ThetaFamily, seed_level: int = 7, *, max_iter: int = 60
):
    """Interior points where ``Phi`` and its gradient vanish simultaneously.

    These are the self-intersections of the nodal curve; see
    :func:`robinsq.nodal.interior_nodal_crossings` for the algorithm.
    """
    return interior_nodal_crossings(family, seed_level, max_iter=max_iter)


def boundary_nodal_points(family: ThetaFamily) -> int:
    """Number of points of the nodal set on the boundary of the square.

    Transversal side zeros and tangential side contacts each count once;
    corners lying in the nodal set count once.
    """
    total = 0
    for side in SIDES:
        sz = boundary_zeros(family, side)
        total += len(sz.zeros) + len(sz.tangencies)
    total += len(corner_zeros(family))
    return total
