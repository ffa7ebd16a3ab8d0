"""Deterministic scalar root finding: bisection plus Newton polish.

All solvers in the package funnel through :func:`bisect_newton` so that
convergence behaviour is uniform: a sign-change bracket is first narrowed by
plain bisection (robust, monotone) and the result is then polished by a few
Newton steps that are constrained to remain inside the bracket.  Nothing here
uses randomness.
"""

from __future__ import annotations

import math

from .errors import SolverFailure

__all__ = [
    "bisect_newton",
    "sign_change_brackets",
    "bessel_j0_first_zero",
]


def bisect_newton(
    f,
    df,
    lo: float,
    hi: float,
    *,
    bisect_tol: float = 1e-8,
    newton_tol: float = 1e-13,
    max_iter: int = 200,
) -> float:
    """Find the root of ``f`` in ``[lo, hi]``.

    ``f(lo)`` and ``f(hi)`` must have opposite (or zero) signs.  Bisection
    narrows the bracket to width ``bisect_tol``; Newton iteration from the
    midpoint then converges to step size below ``newton_tol``.  If a Newton
    step would leave the bracket it is replaced by a bisection step.

    Raises
    ------
    SolverFailure
        If the initial bracket has no sign change or Newton fails to settle.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise SolverFailure(
            "no sign change on bracket", lo=lo, hi=hi, flo=flo, fhi=fhi
        )

    a, b, fa = lo, hi, flo
    while b - a > bisect_tol:
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0.0:
            a = b = m
            break
        if fa * fm < 0.0:
            b = m
        else:
            a, fa = m, fm

    x = 0.5 * (a + b)
    for _ in range(max_iter):
        fx = f(x)
        if fx == 0.0:
            return x
        # Keep the bracket valid so a wild Newton step can be rejected.
        if fx * flo < 0.0:
            b = x
        else:
            a = x
        d = df(x)
        if d != 0.0:
            step = fx / d
            xn = x - step
        else:
            xn, step = 0.5 * (a + b), b - a
        if not (a <= xn <= b):
            xn = 0.5 * (a + b)
            step = xn - x
        if abs(step) < newton_tol * max(1.0, abs(x)):
            return xn
        x = xn
    raise SolverFailure(
        "Newton polish did not converge", lo=lo, hi=hi, x=x, max_iter=max_iter
    )


def sign_change_brackets(f, lo: float, hi: float, n: int):
    """Return sub-bracket list ``[(a, b), ...]`` where ``f`` changes sign.

    The interval is split into ``n`` equal pieces and consecutive samples of
    opposite sign are reported.  A sample that is exactly zero is attached to
    the preceding sub-interval.
    """
    xs = [lo + (hi - lo) * k / n for k in range(n + 1)]
    vals = [f(x) for x in xs]
    out = []
    for k in range(n):
        va, vb = vals[k], vals[k + 1]
        if va == 0.0:
            out.append((xs[k], xs[k]))
        elif va * vb < 0.0:
            out.append((xs[k], xs[k + 1]))
    if vals[-1] == 0.0:
        out.append((xs[-1], xs[-1]))
    return out


def _j0(x: float) -> float:
    """Bessel function of the first kind, order zero, by power series.

    Adequate for ``|x| <= 5``, which is all this package needs.
    """
    term = 1.0
    total = 1.0
    q = 0.25 * x * x
    for k in range(1, 40):
        term *= -q / (k * k)
        total += term
        if abs(term) < 1e-18:
            break
    return total


def _j1(x: float) -> float:
    """Bessel function of the first kind, order one, by power series."""
    term = 0.5 * x
    total = term
    q = 0.25 * x * x
    for k in range(1, 40):
        term *= -q / (k * (k + 1))
        total += term
        if abs(term) < 1e-18:
            break
    return total


def bessel_j0_first_zero() -> float:
    """First positive zero of the Bessel function J0.

    Computed from scratch (series + bisection/Newton on ``[2, 3]``) rather
    than hard-coded, so that the constant is independently reproducible.
    """
    return bisect_newton(_j0, lambda x: -_j1(x), 2.0, 3.0)


def local_abs_min(f, lo: float, hi: float, *, tol: float = 1e-12) -> tuple[float, float]:
    """Golden-section minimum of ``abs(f)`` on ``[lo, hi]``.

    Returns ``(x, |f(x)|)``.  Used to resolve boundary tangencies, where the
    restriction of an eigenfunction dips to zero without changing sign.
    """
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = abs(f(c)), abs(f(d))
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = abs(f(c))
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = abs(f(d))
    x = 0.5 * (a + b)
    return x, abs(f(x))
