"""Pure-Python 4-connected labeling fallback.

Run-based variant of the classic two-pass union-find algorithm: each maximal
horizontal run of constant nonzero sign gets a provisional label, runs in
adjacent rows are merged when they overlap in columns and agree in sign, and
a final vectorised remap compacts labels.  Much slower than the compiled
kernel but dependency-free; selected automatically when the extension module
is unavailable (see :mod:`robinsq.labeling`).
"""

from __future__ import annotations

import bisect

import numpy as np

__all__ = ["label4"]


def _find(parent: list, x: int) -> int:
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def _row_runs(row: np.ndarray):
    """Maximal runs of constant nonzero value: list of (start, stop, sign)."""
    n = row.shape[0]
    if n == 0:
        return []
    cuts = np.flatnonzero(np.diff(row)) + 1
    starts = np.concatenate(([0], cuts))
    stops = np.concatenate((cuts, [n]))
    return [
        (int(a), int(b), int(row[a]))
        for a, b in zip(starts, stops)
        if row[a] != 0
    ]


def label4(signs: np.ndarray):
    """4-connected components of a {-1, 0, +1} int8 grid.

    Returns ``(labels, count)``; labels are compact ``0..count-1`` with ``-1``
    on zero samples.  Semantics match ``robinsq._labelext.label4`` exactly.
    """
    ny, nx = signs.shape
    provisional = np.full((ny, nx), -1, dtype=np.int32)
    parent: list[int] = []
    prev: list[tuple[int, int, int, int]] = []  # (start, stop, sign, run id)

    for i in range(ny):
        runs = _row_runs(signs[i])
        cur = []
        stops = [r[1] for r in prev]
        for a, b, s in runs:
            rid = len(parent)
            parent.append(rid)
            provisional[i, a:b] = rid
            # Previous-row run [pa, pb) overlaps [a, b) iff pb > a and pa < b.
            k = bisect.bisect_right(stops, a)
            while k < len(prev) and prev[k][0] < b:
                _, _, ps, prid = prev[k]
                if ps == s:
                    ra, rb = _find(parent, rid), _find(parent, prid)
                    if ra != rb:
                        if ra < rb:
                            parent[rb] = ra
                        else:
                            parent[ra] = rb
                k += 1
            cur.append((a, b, s, rid))
        prev = cur

    nprov = len(parent)
    roots = np.fromiter(
        (_find(parent, r) for r in range(nprov)), dtype=np.int32, count=nprov
    )
    compact = np.full(nprov, -1, dtype=np.int32)
    order = np.empty(0, dtype=np.int32)
    count = 0
    # Assign compact ids in raster order of first appearance, matching the
    # compiled kernel.
    flat = provisional.ravel()
    nz = flat[flat >= 0]
    if nz.size:
        seen_roots = roots[nz]
        _, first_idx = np.unique(seen_roots, return_index=True)
        order = seen_roots[np.sort(first_idx)]
        compact[order] = np.arange(order.size, dtype=np.int32)
        count = int(order.size)
    lut = np.concatenate((compact[roots] if nprov else compact, np.array([-1], np.int32)))
    labels = lut[np.where(provisional >= 0, provisional, nprov)]
    return labels.astype(np.int32, copy=False), count
