"""Labelled 2D spectrum: enumeration oracle, counting, crossings, splits."""

import math

import pytest

from known_values import NEUMANN_ROWS
from robinsq.errors import ContradictionError
from robinsq.spectrum import (
    build_spectrum,
    counting_function,
    find_crossing,
    jn_value,
    lambda_pair,
    multiplicity_decay_check,
    to_csv,
    weyl_sandwich_check,
)


def brute_force_neumann_rows(lam_max: int):
    """Independent oracle: rank integer pair sums of squares directly."""
    entries = sorted(
        (i * i + j * j, (i, j))
        for i in range(int(math.isqrt(lam_max)) + 1)
        for j in range(int(math.isqrt(lam_max)) + 1)
        if i * i + j * j <= lam_max
    )
    rows = []
    label = 1
    k = 0
    while k < len(entries):
        m = k
        while m < len(entries) and entries[m][0] == entries[k][0]:
            m += 1
        for _, (i, j) in entries[k:m]:
            rows.append((i, j, entries[k][0], label, label + (m - k) - 1))
        label += m - k
        k = m
    return rows


def test_neumann_labels_match_oracle(neumann_table):
    oracle = brute_force_neumann_rows(146)
    got = []
    for lvl in neumann_table.levels:
        for i, j in lvl.pairs:
            got.append((i, j, round(lvl.value), lvl.label_lo, lvl.label_hi))
    assert sorted(got) == sorted(oracle)


def test_neumann_labels_match_pinned_rows(neumann_table):
    got = {}
    for lvl in neumann_table.levels:
        for i, j in lvl.pairs:
            got[(i, j)] = (round(lvl.value), lvl.label_lo, lvl.label_hi)
    for i, j, lam, lo, hi in NEUMANN_ROWS:
        assert got[(i, j)] == (lam, lo, hi)


def test_lambda_pair_values():
    assert lambda_pair(3, 4, 0.0) == pytest.approx(25.0, abs=1e-12)
    assert lambda_pair(0, 0, 0.0) == 0.0
    assert lambda_pair(1, 2, 0.01) > lambda_pair(1, 2, 0.0)


def test_counting_function_strict(neumann_table):
    assert counting_function(neumann_table, 1.0) == 1
    assert counting_function(neumann_table, 1.0 + 1e-9) == 3
    assert counting_function(neumann_table, 25.0) == 22
    with pytest.raises(ValueError):
        counting_function(neumann_table, 1e9)


@pytest.mark.parametrize("lam", (3.0, 10.0, 25.5, 50.0, 100.0, 146.0))
def test_weyl_sandwich(neumann_table, lam):
    chk = weyl_sandwich_check(neumann_table, lam)
    assert chk.passed, (lam, chk)


def test_jn_value(neumann_table):
    assert jn_value(neumann_table, 86) == 7
    assert jn_value(neumann_table, 95) == 9
    assert jn_value(neumann_table, 1) == 0


def test_level_lookup(neumann_table):
    lvl = neumann_table.level_for_label(25)
    assert lvl.label_lo == 23 and lvl.label_hi == 26
    assert lvl.unordered_pairs == ((0, 5), (3, 4))
    assert neumann_table.level_for_pair((3, 4)) is lvl
    with pytest.raises(ValueError):
        neumann_table.level_for_label(0)


def test_lambda_max_zero_single_row():
    table = build_spectrum(0.0, 0.0)
    assert len(table.levels) == 1
    assert table.levels[0].pairs == ((0, 0),)


def test_find_crossing_degenerate_pair():
    # (0,5) and (3,4) coincide already at h = 0 and split for h > 0.
    assert find_crossing((0, 5), (3, 4), 2.0) == 0.0


def test_find_crossing_none_on_window():
    assert find_crossing((0, 1), (0, 2), 2.0) is None
    with pytest.raises(ValueError):
        find_crossing((1, 2), (2, 1), 1.0)


def test_multiplicity_decay(neumann_table):
    lvl = neumann_table.level_for_label(23)  # the 25-cluster
    rep = multiplicity_decay_check(lvl, 0.01)
    assert rep.fully_split
    values = [v for v, _ in rep.groups]
    assert values == sorted(values)
    # the inner pair (3,4) of the nested pair splits upward past (0,5)
    assert rep.groups[0][1] == ((0, 5),)
    assert rep.groups[1][1] == ((3, 4),)


def test_monotonicity_contradiction_detection(neumann_table):
    lvl = neumann_table.level_for_label(23)
    with pytest.raises(ValueError):
        multiplicity_decay_check(lvl, 0.0)


def test_to_csv_deterministic(neumann_table):
    a = to_csv(neumann_table)
    b = to_csv(build_spectrum(0.0, 146.0))
    assert a == b
    assert a.splitlines()[0] == "i,j,alpha_i,alpha_j,lambda,label_lo,label_hi"


def test_cluster_count(neumann_table):
    assert neumann_table.num_labels == 129
