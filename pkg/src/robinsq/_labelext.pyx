# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled 4-connected component labeling over a signed grid.

Input is an int8 grid of {-1, 0, +1} sample signs; zero samples are masked.
Two nonzero samples belong to the same component when they are 4-adjacent
and carry the same sign.  Returns ``(labels, count)`` with compact labels
``0 .. count-1`` and ``-1`` on masked samples.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef inline cnp.int32_t _find(cnp.int32_t* parent, cnp.int32_t x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def label4(cnp.int8_t[:, ::1] signs):
    cdef Py_ssize_t ny = signs.shape[0]
    cdef Py_ssize_t nx = signs.shape[1]
    labels_arr = np.full((ny, nx), -1, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] labels = labels_arr
    parent_arr = np.empty(ny * nx, dtype=np.int32)
    cdef cnp.int32_t[::1] parent = parent_arr
    cdef cnp.int32_t* par = &parent[0]

    cdef cnp.int32_t nextlab = 0, lu, ll, ru, rl
    cdef Py_ssize_t i, j
    cdef cnp.int8_t s

    for i in range(ny):
        for j in range(nx):
            s = signs[i, j]
            if s == 0:
                continue
            lu = labels[i - 1, j] if i > 0 and signs[i - 1, j] == s else -1
            ll = labels[i, j - 1] if j > 0 and signs[i, j - 1] == s else -1
            if lu < 0 and ll < 0:
                par[nextlab] = nextlab
                labels[i, j] = nextlab
                nextlab += 1
            elif lu < 0:
                labels[i, j] = ll
            elif ll < 0:
                labels[i, j] = lu
            else:
                ru = _find(par, lu)
                rl = _find(par, ll)
                labels[i, j] = ru if ru < rl else rl
                if ru != rl:
                    if ru < rl:
                        par[rl] = ru
                    else:
                        par[ru] = rl

    compact_arr = np.full(max(nextlab, 1), -1, dtype=np.int32)
    cdef cnp.int32_t[::1] compact = compact_arr
    cdef cnp.int32_t count = 0, r
    for i in range(ny):
        for j in range(nx):
            if labels[i, j] < 0:
                continue
            r = _find(par, labels[i, j])
            if compact[r] < 0:
                compact[r] = count
                count += 1
            labels[i, j] = compact[r]
    return labels_arr, int(count)
