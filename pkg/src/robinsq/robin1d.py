"""One-dimensional Robin eigenvalue branches on the interval (-pi/2, pi/2).

The interval has length ``pi``.  An eigenfunction with eigenvalue
``(alpha/pi)**2`` and Robin parameter ``h`` (boundary condition
``u' . nu + h u = 0``) is, after symmetrisation,

* ``u(x) = cos(alpha * x / pi)`` on the even branches (``n`` even), or
* ``u(x) = sin(alpha * x / pi)`` on the odd branches (``n`` odd),

where ``alpha = alpha_n(h)`` is the unique root in ``[n*pi, (n+1)*pi)`` of the
transcendental secular equation.  Both parity cases reduce, after the
substitution ``alpha = n*pi + 2*t`` with ``t in [0, pi/2)``, to the single
pole-free equation

    ``(n*pi + 2*t) * sin(t) - h*pi * cos(t) = 0``,

whose left-hand side is strictly increasing in ``t`` and strictly decreasing
in ``h``.  That is what :func:`solve_alpha` solves.

For ``h < 0`` the spectrum additionally has a negative ground state
``-beta**2 / pi**2``-type branch; see :func:`solve_beta`.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import SolverFailure
from .rootfind import bisect_newton

__all__ = [
    "AlphaBranch",
    "BetaGroundState",
    "solve_alpha",
    "solve_alpha_cached",
    "solve_beta",
    "eval_u",
    "eval_u_derivative",
    "branch_residual",
]


@dataclass(frozen=True)
class AlphaBranch:
    """Root ``alpha_n(h)`` of the 1D secular equation plus its metadata."""

    n: int
    h: float
    alpha: float
    parity: str  # "even" or "odd"
    residual: float

    @property
    def eigenvalue(self) -> float:
        """1D eigenvalue ``(alpha / pi)**2``."""
        return (self.alpha / math.pi) ** 2


@dataclass(frozen=True)
class BetaGroundState:
    """Negative ground-state branch for ``h < 0``."""

    h: float
    beta: float
    energy: float
    residual: float


def _secular(t: float, n: int, h: float) -> float:
    return (n * math.pi + 2.0 * t) * math.sin(t) - h * math.pi * math.cos(t)


def _secular_deriv(t: float, n: int, h: float) -> float:
    return (
        2.0 * math.sin(t)
        + (n * math.pi + 2.0 * t) * math.cos(t)
        + h * math.pi * math.sin(t)
    )


def solve_alpha(n: int, h: float) -> AlphaBranch:
    """Solve for ``alpha_n(h)`` with ``n >= 0`` and ``h >= 0``.

    ``h = 0`` is returned exactly as ``alpha = n*pi`` (the Neumann case);
    otherwise the pole-free secular equation is solved by bisection to
    ``1e-8`` followed by Newton polish.
    """
    if n < 0:
        raise ValueError(f"branch index must be >= 0, got {n}")
    if h < 0.0:
        raise ValueError(f"Robin parameter must be >= 0 on alpha branches, got {h}")
    parity = "even" if n % 2 == 0 else "odd"
    if h == 0.0:
        return AlphaBranch(n=n, h=h, alpha=n * math.pi, parity=parity, residual=0.0)
    t = bisect_newton(
        lambda t: _secular(t, n, h),
        lambda t: _secular_deriv(t, n, h),
        0.0,
        math.pi / 2.0 * (1.0 - 1e-16),
    )
    alpha = n * math.pi + 2.0 * t
    res = abs(_secular(t, n, h))
    if res > 1e-10 * max(1.0, alpha):
        raise SolverFailure("secular residual too large", n=n, h=h, alpha=alpha, residual=res)
    return AlphaBranch(n=n, h=h, alpha=alpha, parity=parity, residual=res)


@functools.lru_cache(maxsize=65536)
def solve_alpha_cached(n: int, h: float) -> AlphaBranch:
    """Memoised :func:`solve_alpha`; safe because results are frozen."""
    return solve_alpha(n, h)


def solve_beta(h: float) -> BetaGroundState:
    """Solve ``beta * tanh(beta / 2) = -h * pi`` for ``h < 0``.

    The associated 1D ground state has energy ``-beta**2`` (in the ``alpha**2``
    normalisation); it only exists for strictly negative Robin parameter.
    """
    if h >= 0.0:
        raise ValueError(f"beta branch requires h < 0, got {h}")
    target = -h * math.pi

    def g(b: float) -> float:
        return b * math.tanh(0.5 * b) - target

    def dg(b: float) -> float:
        th = math.tanh(0.5 * b)
        return th + 0.5 * b * (1.0 - th * th)

    hi = 1.0
    while g(hi) < 0.0:
        hi *= 2.0
        if hi > 1e8:
            raise SolverFailure("could not bracket beta", h=h)
    beta = bisect_newton(g, dg, 0.0, hi)
    res = abs(g(beta))
    return BetaGroundState(h=h, beta=beta, energy=-beta * beta, residual=res)


def eval_u(branch: AlphaBranch, x):
    """Evaluate the 1D eigenfunction of ``branch`` at ``x`` (scalar or array)."""
    arg = np.multiply(x, branch.alpha / math.pi)
    if branch.parity == "even":
        return np.cos(arg)
    return np.sin(arg)


def eval_u_derivative(branch: AlphaBranch, x):
    """Evaluate ``u'`` of ``branch`` at ``x`` (scalar or array)."""
    c = branch.alpha / math.pi
    arg = np.multiply(x, c)
    if branch.parity == "even":
        return -c * np.sin(arg)
    return c * np.cos(arg)


def branch_residual(branch: AlphaBranch) -> float:
    """Defect of the original (pole-form) secular equation at the stored root.

    Recomputed from scratch rather than read off the dataclass, so tests can
    use it as an independent check of the stored ``alpha``.
    """
    t = 0.5 * (branch.alpha - branch.n * math.pi)
    return abs(_secular(t, branch.n, branch.h))
