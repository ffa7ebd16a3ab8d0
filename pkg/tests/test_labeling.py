"""Connected-component labeling: compiled and pure backends must agree."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from robinsq import _labelpure
from robinsq.labeling import BACKEND, available_backends, label_components

try:
    from robinsq import _labelext
except ImportError:  # pragma: no cover - compiled kernel optional
    _labelext = None

BACKENDS = [("pure", _labelpure.label4)]
if _labelext is not None:
    BACKENDS.append(("cython", _labelext.label4))


def reference_flood_fill(signs: np.ndarray):
    """Slow, obviously-correct 4-connected flood fill."""
    ny, nx = signs.shape
    labels = np.full((ny, nx), -1, dtype=np.int32)
    count = 0
    for sy in range(ny):
        for sx in range(nx):
            if signs[sy, sx] == 0 or labels[sy, sx] >= 0:
                continue
            stack = [(sy, sx)]
            labels[sy, sx] = count
            while stack:
                y, x = stack.pop()
                for dy, dx in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                    b, a = y + dy, x + dx
                    if 0 <= b < ny and 0 <= a < nx:
                        if labels[b, a] < 0 and signs[b, a] == signs[y, x]:
                            labels[b, a] = count
                            stack.append((b, a))
            count += 1
    return labels, count


GRIDS = [
    np.zeros((1, 1), dtype=np.int8),
    np.ones((1, 1), dtype=np.int8),
    np.array([[1, -1], [-1, 1]], dtype=np.int8),
    np.array([[1, 0, 1], [0, 1, 0], [1, 0, 1]], dtype=np.int8),
    np.indices((8, 8)).sum(axis=0).astype(np.int8) % 2 * 2 - 1,  # checkerboard
    np.array([[1, 1, 1], [1, 0, 1], [1, 1, 1]], dtype=np.int8),  # masked hole
    np.array([[1, 0, -1], [1, 0, -1], [1, 0, -1]], dtype=np.int8),
]


@pytest.mark.parametrize("grid", GRIDS, ids=range(len(GRIDS)))
@pytest.mark.parametrize("name,fn", BACKENDS)
def test_known_grids_match_reference(grid, name, fn):
    labels, count = fn(np.ascontiguousarray(grid))
    ref_labels, ref_count = reference_flood_fill(grid)
    assert count == ref_count
    # compact ids in raster order match the flood-fill order exactly
    assert np.array_equal(np.asarray(labels), ref_labels)


def test_backend_registered():
    assert BACKEND in available_backends()
    assert "pure" in available_backends()


def test_diagonal_mask_splits():
    n = 33
    grid = np.ones((n, n), dtype=np.int8)
    idx = np.arange(n)
    grid[idx, idx] = 0
    labels, count = label_components(grid)
    assert count == 2
    assert labels[0, -1] != labels[-1, 0]


def test_masked_everything():
    labels, count = label_components(np.zeros((5, 7), dtype=np.int8))
    assert count == 0
    assert (np.asarray(labels) == -1).all()


@settings(max_examples=150, deadline=None)
@given(
    arrays(
        dtype=np.int8,
        shape=st.tuples(st.integers(1, 24), st.integers(1, 24)),
        elements=st.sampled_from([-1, 0, 1]),
    )
)
def test_backends_agree_on_random_grids(grid):
    ref_labels, ref_count = reference_flood_fill(grid)
    for name, fn in BACKENDS:
        labels, count = fn(np.ascontiguousarray(grid))
        assert count == ref_count, name
        assert np.array_equal(np.asarray(labels), ref_labels), name


@settings(max_examples=50, deadline=None)
@given(
    arrays(
        dtype=np.int8,
        shape=st.tuples(st.integers(2, 16), st.integers(2, 16)),
        elements=st.sampled_from([-1, 0, 1]),
    )
)
def test_label_invariants(grid):
    labels, count = label_components(grid)
    labels = np.asarray(labels)
    assert (labels[grid == 0] == -1).all()
    if count:
        used = np.unique(labels[labels >= 0])
        assert used.tolist() == list(range(count))
