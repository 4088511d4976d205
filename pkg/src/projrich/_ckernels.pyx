# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_pykernels`` (same signatures)."""

from array import array

from cpython.bytearray cimport PyByteArray_AS_STRING


def im_length(tuple chi, const unsigned char[:] inv_mask, const long[:] pos_flat, int rank):
    cdef Py_ssize_t k, j, base
    cdef long total = 0, p
    cdef long c[32]
    cdef Py_ssize_t npos = inv_mask.shape[0]
    if rank > 32:
        raise ValueError("rank above 32 is not supported by the compiled kernel")
    for j in range(rank):
        c[j] = chi[j]
    for k in range(npos):
        base = k * rank
        p = inv_mask[k]
        for j in range(rank):
            p += c[j] * pos_flat[base + j]
        total += p if p >= 0 else -p
    return total


def _flatten(right, parent):
    ngen = len(right[0])
    flat = array("l", [v for row in right for v in row])
    pj = array("l", [p[0] for p in parent])
    pg = array("l", [p[1] for p in parent])
    return ngen, flat, pj, pg


def mul_table(right, parent):
    cdef Py_ssize_t n = len(right), a, b
    ngen_py, flat, pj_arr, pg_arr = _flatten(right, parent)
    cdef Py_ssize_t ngen = ngen_py
    cdef const long[:] rt = flat
    cdef const long[:] pj = pj_arr
    cdef const long[:] pg = pg_arr
    cdef long[:] rowv
    table = []
    for a in range(n):
        row = array("l", [0]) * n
        rowv = row
        rowv[0] = a
        for b in range(1, n):
            rowv[b] = rt[rowv[pj[b]] * ngen + pg[b]]
        table.append(row.tolist())
    return table


def bruhat_cones(right, parent):
    cdef Py_ssize_t n = len(right), x, z
    ngen_py, flat, pj_arr, pg_arr = _flatten(right, parent)
    cdef Py_ssize_t ngen = ngen_py
    cdef const long[:] rt = flat
    cdef const long[:] pj = pj_arr
    cdef const long[:] pg = pg_arr
    cdef char* src
    cdef char* dst
    cdef long g
    cones = [bytearray(n) for _ in range(n)]
    dst = PyByteArray_AS_STRING(cones[0])
    dst[0] = 1
    for x in range(1, n):
        src = PyByteArray_AS_STRING(cones[pj[x]])
        dst = PyByteArray_AS_STRING(cones[x])
        g = pg[x]
        for z in range(n):
            if src[z]:
                dst[z] = 1
                dst[rt[z * ngen + g]] = 1
    return cones
