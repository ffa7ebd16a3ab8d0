"""Shared fixtures: expensive session-scoped tables and scans."""

from __future__ import annotations

import time

import pytest

from robinsq.courant import courant_scan, table_for_labels
from robinsq.spectrum import build_spectrum

SCAN_SECONDS: dict[float, float] = {}


@pytest.fixture(scope="session")
def neumann_table():
    return build_spectrum(0.0, 146.0)


@pytest.fixture(scope="session")
def neumann_table_208():
    return table_for_labels(0.0, 208)


def _timed_scan(h: float):
    t0 = time.perf_counter()
    result = courant_scan(h, n_max=208)
    SCAN_SECONDS[h] = time.perf_counter() - t0
    return result


@pytest.fixture(scope="session")
def scan_h0():
    return _timed_scan(0.0)


@pytest.fixture(scope="session")
def scan_h001():
    return _timed_scan(0.01)
