"""Robin spectrum of the square: enumeration, labels, clusters, crossings.

Eigenvalues of the square of side ``pi`` with Robin parameter ``h >= 0`` are

    ``lambda_{i,j}(h) = (alpha_i(h)**2 + alpha_j(h)**2) / pi**2``

over ordered index pairs ``(i, j)``.  :func:`build_spectrum` enumerates every
pair below a cutoff, sorts, merges near-degenerate values into levels and
assigns 1-based labels ``n``.  The remaining functions answer the standard
questions about the labelled list: counting function, Weyl sandwich, the
largest index in a level, eigenvalue-curve crossings in ``h``, and how a
multiple Neumann eigenvalue splits for ``h > 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import CompletenessError, ContradictionError
from .robin1d import solve_alpha_cached

__all__ = [
    "EigenLevel",
    "SpectrumTable",
    "build_spectrum",
    "lambda_pair",
    "counting_function",
    "weyl_sandwich_check",
    "jn_value",
    "find_crossing",
    "multiplicity_decay_check",
    "to_csv",
]

CLUSTER_TOL = 1e-9


def lambda_pair(i: int, j: int, h: float) -> float:
    """Eigenvalue of the ordered index pair ``(i, j)`` at Robin parameter ``h``."""
    ai = solve_alpha_cached(i, h).alpha
    aj = solve_alpha_cached(j, h).alpha
    return (ai * ai + aj * aj) / (math.pi * math.pi)


@dataclass(frozen=True)
class EigenLevel:
    """A cluster of numerically coincident eigenvalues with its label range."""

    value: float
    pairs: tuple  # ordered (i, j) pairs, lexicographically sorted
    label_lo: int
    label_hi: int
    h: float

    @property
    def multiplicity(self) -> int:
        return len(self.pairs)

    @property
    def labels(self) -> range:
        return range(self.label_lo, self.label_hi + 1)

    @property
    def unordered_pairs(self) -> tuple:
        """Distinct unordered pairs ``(min, max)`` of the level."""
        return tuple(sorted({(min(i, j), max(i, j)) for i, j in self.pairs}))


@dataclass(frozen=True)
class SpectrumTable:
    h: float
    lambda_max: float
    levels: tuple = field(default_factory=tuple)

    @property
    def num_labels(self) -> int:
        return self.levels[-1].label_hi if self.levels else 0

    def level_for_label(self, n: int) -> EigenLevel:
        if n < 1 or n > self.num_labels:
            raise ValueError(f"label {n} outside table range 1..{self.num_labels}")
        lo, hi = 0, len(self.levels) - 1
        while lo <= hi:
            mid = (lo + hi) // 2
            lvl = self.levels[mid]
            if n < lvl.label_lo:
                hi = mid - 1
            elif n > lvl.label_hi:
                lo = mid + 1
            else:
                return lvl
        raise AssertionError("label ranges are contiguous; unreachable")

    def level_for_pair(self, pair) -> EigenLevel:
        i, j = pair
        for lvl in self.levels:
            if (i, j) in lvl.pairs:
                return lvl
        raise ValueError(f"pair {pair} not present below lambda_max={self.lambda_max}")


def build_spectrum(h: float, lambda_max: float, cluster_tol: float = CLUSTER_TOL) -> SpectrumTable:
    """Enumerate all labelled eigenvalues with ``lambda <= lambda_max``.

    Completeness: ``alpha_i >= i*pi`` for ``h >= 0``, so indices above
    ``floor(sqrt(lambda_max)) + 1`` cannot contribute; this is re-checked
    explicitly and a :class:`CompletenessError` is raised if violated.
    """
    if h < 0.0:
        raise ValueError("build_spectrum requires h >= 0")
    if lambda_max < 0.0:
        raise ValueError("lambda_max must be nonnegative")
    cap = int(math.isqrt(int(lambda_max))) + 1
    branches = [solve_alpha_cached(i, h) for i in range(cap + 1)]
    lam1d = [(b.alpha / math.pi) ** 2 for b in branches]
    if lam1d[cap] + lam1d[0] <= lambda_max:
        raise CompletenessError(
            f"index cap {cap} insufficient for lambda_max={lambda_max}"
        )
    entries = []
    for i in range(cap + 1):
        if lam1d[i] > lambda_max:
            break
        for j in range(cap + 1):
            lam = lam1d[i] + lam1d[j]
            if lam <= lambda_max:
                entries.append((lam, (i, j)))
    entries.sort()

    levels = []
    k = 0
    label = 1
    while k < len(entries):
        m = k + 1
        while m < len(entries) and entries[m][0] - entries[m - 1][0] < cluster_tol:
            m += 1
        pairs = tuple(sorted(p for _, p in entries[k:m]))
        value = entries[k][0]
        levels.append(
            EigenLevel(
                value=value,
                pairs=pairs,
                label_lo=label,
                label_hi=label + (m - k) - 1,
                h=h,
            )
        )
        label += m - k
        k = m
    return SpectrumTable(h=h, lambda_max=lambda_max, levels=tuple(levels))


def counting_function(table: SpectrumTable, lam: float) -> int:
    """Strict counting function ``N(lam) = #{n : lambda_n < lam}``."""
    if lam > table.lambda_max:
        raise ValueError(
            f"counting function queried at {lam} beyond table cutoff {table.lambda_max}"
        )
    n = 0
    for lvl in table.levels:
        if lvl.value < lam:
            n = lvl.label_hi
        else:
            break
    return n


@dataclass(frozen=True)
class WeylCheck:
    lam: float
    n: int
    lower: float
    upper: float
    passed: bool


def weyl_sandwich_check(table: SpectrumTable, lam: float) -> WeylCheck:
    """Two-sided Weyl estimate at ``h = 0``:

    ``pi/4 * lam < N(lam) <= pi/4 * lam + 2*floor(sqrt(lam)) + 1``.
    """
    if table.h != 0.0:
        raise ValueError("Weyl sandwich check is stated for the Neumann table (h = 0)")
    n = counting_function(table, lam)
    lower = math.pi / 4.0 * lam
    upper = lower + 2.0 * math.floor(math.sqrt(lam)) + 1.0
    return WeylCheck(lam=lam, n=n, lower=lower, upper=upper, passed=lower < n <= upper)


def jn_value(table: SpectrumTable, n: int) -> int:
    """Largest 1D index appearing in the level that carries label ``n``."""
    lvl = table.level_for_label(n)
    return max(max(i, j) for i, j in lvl.pairs)


def find_crossing(
    pair_a,
    pair_b,
    h_max: float,
    *,
    samples: int = 257,
    tol: float = 1e-12,
):
    """First ``h`` in ``[0, h_max]`` where two eigenvalue curves cross.

    Pairs are normalised to unordered form.  The difference curve is sampled
    on a uniform grid; exactly one sign change is tolerated (the curves are
    analytic and distinct), and more than one raises
    :class:`ContradictionError`.  Returns the crossing parameter or ``None``.
    For nested pairs ``p < p' <= q' < q`` the difference
    ``lambda_{p',q'} - lambda_{p,q}`` is verified positive after the crossing.
    """
    a = tuple(sorted(pair_a))
    b = tuple(sorted(pair_b))
    if a == b:
        raise ValueError("crossing of a pair with itself is undefined")

    def diff(h: float) -> float:
        return lambda_pair(*b, h) - lambda_pair(*a, h)

    hs = [h_max * k / (samples - 1) for k in range(samples)]
    vals = [diff(h) for h in hs]
    scale = max(1.0, max(abs(v) for v in vals))
    crossings = []
    if abs(vals[0]) <= tol * scale:
        crossings.append(0.0)
    for k in range(samples - 1):
        if vals[k] * vals[k + 1] < 0.0:
            lo, hi = hs[k], hs[k + 1]
            flo = vals[k]
            for _ in range(80):
                mid = 0.5 * (lo + hi)
                fm = diff(mid)
                if flo * fm <= 0.0:
                    hi = mid
                else:
                    lo, flo = mid, fm
            crossings.append(0.5 * (lo + hi))
    if len(crossings) > 1:
        raise ContradictionError(
            "multiple crossings of two eigenvalue curves",
            pair_a=a,
            pair_b=b,
            crossings=crossings,
        )
    if not crossings:
        return None
    h_star = crossings[0]
    # Nested pairs: after the crossing the inner pair must lie above.
    inner, outer = None, None
    if a[0] < b[0] and b[1] < a[1]:
        inner, outer = b, a
    elif b[0] < a[0] and a[1] < b[1]:
        inner, outer = a, b
    if inner is not None:
        for h in hs:
            if h > h_star + 1e-6:
                d = lambda_pair(*inner, h) - lambda_pair(*outer, h)
                if d <= 0.0:
                    raise ContradictionError(
                        "nested pair ordering violated after crossing",
                        inner=inner,
                        outer=outer,
                        h=h,
                        diff=d,
                    )
    return h_star


@dataclass(frozen=True)
class DecayReport:
    level: EigenLevel
    h_probe: float
    groups: tuple  # ((value, (unordered pairs...)), ...) sorted by value
    fully_split: bool


def multiplicity_decay_check(
    level: EigenLevel, h_probe: float, cluster_tol: float = 1e-9
) -> DecayReport:
    """How a Neumann level splits at a probe parameter ``h_probe > 0``.

    Each distinct unordered pair of the level is re-evaluated at ``h_probe``;
    values are clustered with ``cluster_tol``.  Two distinct unordered pairs
    remaining together would contradict simplicity of the perturbed branches
    and raises :class:`ContradictionError`.  Monotonicity in ``h`` is also
    re-checked: every perturbed value must exceed the unperturbed one.
    """
    if h_probe <= level.h:
        raise ValueError("probe parameter must exceed the level's parameter")
    vals = []
    for p in level.unordered_pairs:
        lam = lambda_pair(p[0], p[1], h_probe)
        if lam <= level.value:
            raise ContradictionError(
                "eigenvalue failed to increase with h",
                pair=p,
                value_before=level.value,
                value_after=lam,
            )
        vals.append((lam, p))
    vals.sort()
    groups = []
    k = 0
    while k < len(vals):
        m = k + 1
        while m < len(vals) and vals[m][0] - vals[m - 1][0] < cluster_tol:
            m += 1
        groups.append((vals[k][0], tuple(p for _, p in vals[k:m])))
        k = m
    for _, ps in groups:
        if len(ps) > 1:
            raise ContradictionError(
                "distinct unordered pairs did not split at probe parameter",
                pairs=ps,
                h_probe=h_probe,
            )
    return DecayReport(
        level=level,
        h_probe=h_probe,
        groups=tuple(groups),
        fully_split=all(len(ps) == 1 for _, ps in groups),
    )


def to_csv(table: SpectrumTable) -> str:
    """CSV rendering, one row per ordered pair, stable (value, pair) order."""
    lines = ["i,j,alpha_i,alpha_j,lambda,label_lo,label_hi"]
    for lvl in table.levels:
        for i, j in lvl.pairs:
            ai = solve_alpha_cached(i, table.h).alpha
            aj = solve_alpha_cached(j, table.h).alpha
            lam = (ai * ai + aj * aj) / (math.pi * math.pi)
            lines.append(
                f"{i},{j},{ai:.15g},{aj:.15g},{lam:.15g},{lvl.label_lo},{lvl.label_hi}"
            )
    return "\n".join(lines) + "\n"
