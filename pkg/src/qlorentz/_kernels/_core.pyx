# cython: language_level=3
"""Compiled kernels for the hot per-node loops: Wigner spin-1/2 matrices for
every grid momentum, and the two-particle rotate/contract pair.  Mirrors the
contracts of the pure-numpy fallback in _py.py."""

import numpy as np

cimport cython
cimport numpy as cnp
from libc.math cimport sqrt, fabs

cnp.import_array()

ctypedef double complex dcomplex


cdef inline void _mat4_mul(double a[4][4], double b[4][4], double out[4][4]) noexcept nogil:
    cdef int i, j, k
    cdef double acc
    for i in range(4):
        for j in range(4):
            acc = 0.0
            for k in range(4):
                acc += a[i][k] * b[k][j]
            out[i][j] = acc


cdef inline void _standard_boost(double e, double px, double py, double pz,
                                 double mass, double out[4][4]) noexcept nogil:
    cdef double denom = mass * (mass + e)
    out[0][0] = e / mass
    out[0][1] = px / mass; out[0][2] = py / mass; out[0][3] = pz / mass
    out[1][0] = px / mass; out[2][0] = py / mass; out[3][0] = pz / mass
    out[1][1] = 1.0 + px * px / denom
    out[1][2] = px * py / denom
    out[1][3] = px * pz / denom
    out[2][1] = out[1][2]
    out[2][2] = 1.0 + py * py / denom
    out[2][3] = py * pz / denom
    out[3][1] = out[1][3]
    out[3][2] = out[2][3]
    out[3][3] = 1.0 + pz * pz / denom


cdef inline void _quaternion(double w[4][4], double q[4]) noexcept nogil:
    # Shepperd branch selection on the spatial 3x3 block (rows/cols 1..3)
    cdef double tr = w[1][1] + w[2][2] + w[3][3]
    cdef double dmax = w[1][1]
    if w[2][2] > dmax: dmax = w[2][2]
    if w[3][3] > dmax: dmax = w[3][3]
    cdef double s, n
    if tr > dmax:
        s = sqrt(1.0 + tr if 1.0 + tr > 0.0 else 0.0) * 2.0
        q[0] = 0.25 * s
        q[1] = (w[3][2] - w[2][3]) / s
        q[2] = (w[1][3] - w[3][1]) / s
        q[3] = (w[2][1] - w[1][2]) / s
    elif w[1][1] >= w[2][2] and w[1][1] >= w[3][3]:
        s = sqrt(max(1.0 + w[1][1] - w[2][2] - w[3][3], 0.0)) * 2.0
        q[0] = (w[3][2] - w[2][3]) / s
        q[1] = 0.25 * s
        q[2] = (w[1][2] + w[2][1]) / s
        q[3] = (w[1][3] + w[3][1]) / s
    elif w[2][2] >= w[3][3]:
        s = sqrt(max(1.0 - w[1][1] + w[2][2] - w[3][3], 0.0)) * 2.0
        q[0] = (w[1][3] - w[3][1]) / s
        q[1] = (w[1][2] + w[2][1]) / s
        q[2] = 0.25 * s
        q[3] = (w[2][3] + w[3][2]) / s
    else:
        s = sqrt(max(1.0 - w[1][1] - w[2][2] + w[3][3], 0.0)) * 2.0
        q[0] = (w[2][1] - w[1][2]) / s
        q[1] = (w[1][3] + w[3][1]) / s
        q[2] = (w[2][3] + w[3][2]) / s
        q[3] = 0.25 * s
    if q[0] < 0.0:
        q[0] = -q[0]; q[1] = -q[1]; q[2] = -q[2]; q[3] = -q[3]
    n = sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3])
    q[0] /= n; q[1] /= n; q[2] /= n; q[3] /= n


@cython.boundscheck(False)
@cython.wraparound(False)
def wigner_d_batch(object lam_obj, double mass, object momenta_obj):
    """Boosted spatial momenta and spin-1/2 Wigner matrices per node."""
    cdef cnp.ndarray[double, ndim=2] lam_arr = np.ascontiguousarray(lam_obj, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=2] momenta = np.ascontiguousarray(momenta_obj, dtype=np.float64)
    cdef Py_ssize_t n = momenta.shape[0]
    cdef cnp.ndarray[double, ndim=2] q_out = np.empty((n, 3), dtype=np.float64)
    cdef cnp.ndarray[dcomplex, ndim=3] d_out = np.empty((n, 2, 2), dtype=np.complex128)

    cdef double lam[4][4]
    cdef double lp[4][4], linv[4][4], tmp[4][4], w[4][4]
    cdef double q4[4]
    cdef double quat[4]
    cdef double e, px, py, pz
    cdef Py_ssize_t i, r, c

    for r in range(4):
        for c in range(4):
            lam[r][c] = lam_arr[r, c]

    with nogil:
        for i in range(n):
            px = momenta[i, 0]; py = momenta[i, 1]; pz = momenta[i, 2]
            e = sqrt(mass * mass + px * px + py * py + pz * pz)
            for r in range(4):
                q4[r] = lam[r][0] * e + lam[r][1] * px + lam[r][2] * py + lam[r][3] * pz
            q_out[i, 0] = q4[1]; q_out[i, 1] = q4[2]; q_out[i, 2] = q4[3]

            _standard_boost(e, px, py, pz, mass, lp)
            _standard_boost(q4[0], -q4[1], -q4[2], -q4[3], mass, linv)
            _mat4_mul(lam, lp, tmp)
            _mat4_mul(linv, tmp, w)
            _quaternion(w, quat)

            d_out[i, 0, 0] = quat[0] - 1j * quat[3]
            d_out[i, 0, 1] = -1j * quat[1] - quat[2]
            d_out[i, 1, 0] = -1j * quat[1] + quat[2]
            d_out[i, 1, 1] = quat[0] + 1j * quat[3]

    return q_out, d_out


@cython.boundscheck(False)
@cython.wraparound(False)
def pair_apply(object d1_obj, object d2_obj, object g_obj, int chunk=0):
    """out[x,y,i,j] = sum_st d1[i,x,s] d2[j,y,t] g[s,t,i,j]."""
    cdef cnp.ndarray[dcomplex, ndim=3] d1 = np.ascontiguousarray(d1_obj, dtype=np.complex128)
    cdef cnp.ndarray[dcomplex, ndim=3] d2 = np.ascontiguousarray(d2_obj, dtype=np.complex128)
    cdef cnp.ndarray[dcomplex, ndim=4] g = np.ascontiguousarray(g_obj, dtype=np.complex128)
    cdef Py_ssize_t n1 = g.shape[2], n2 = g.shape[3]
    cdef cnp.ndarray[dcomplex, ndim=4] out = np.empty_like(g)
    cdef Py_ssize_t i, j
    cdef dcomplex g00, g01, g10, g11
    cdef dcomplex a00, a01, a10, a11, b00, b01, b10, b11
    cdef dcomplex t00, t01, t10, t11

    with nogil:
        for i in range(n1):
            a00 = d1[i, 0, 0]; a01 = d1[i, 0, 1]
            a10 = d1[i, 1, 0]; a11 = d1[i, 1, 1]
            for j in range(n2):
                b00 = d2[j, 0, 0]; b01 = d2[j, 0, 1]
                b10 = d2[j, 1, 0]; b11 = d2[j, 1, 1]
                g00 = g[0, 0, i, j]; g01 = g[0, 1, i, j]
                g10 = g[1, 0, i, j]; g11 = g[1, 1, i, j]
                # t[x,t] = sum_s d1[i,x,s] g[s,t]
                t00 = a00 * g00 + a01 * g10
                t01 = a00 * g01 + a01 * g11
                t10 = a10 * g00 + a11 * g10
                t11 = a10 * g01 + a11 * g11
                # out[x,y] = sum_t t[x,t] d2[j,y,t]
                out[0, 0, i, j] = t00 * b00 + t01 * b01
                out[0, 1, i, j] = t00 * b10 + t01 * b11
                out[1, 0, i, j] = t10 * b00 + t11 * b01
                out[1, 1, i, j] = t10 * b10 + t11 * b11
    return out


@cython.boundscheck(False)
@cython.wraparound(False)
def pair_spin_density(object w1_obj, object w2_obj, object g_obj, int chunk=0):
    """rho[(s,t),(s',t')] = sum_ij w1_i w2_j g[s,t,i,j] conj(g[s',t',i,j])."""
    cdef cnp.ndarray[double, ndim=1] w1 = np.ascontiguousarray(w1_obj, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=1] w2 = np.ascontiguousarray(w2_obj, dtype=np.float64)
    cdef cnp.ndarray[dcomplex, ndim=4] g = np.ascontiguousarray(g_obj, dtype=np.complex128)
    cdef Py_ssize_t n1 = g.shape[2], n2 = g.shape[3]
    cdef dcomplex acc[4][4]
    cdef dcomplex v[4]
    cdef double wij
    cdef Py_ssize_t i, j, a, b

    for a in range(4):
        for b in range(4):
            acc[a][b] = 0.0

    with nogil:
        for i in range(n1):
            for j in range(n2):
                wij = w1[i] * w2[j]
                v[0] = g[0, 0, i, j]; v[1] = g[0, 1, i, j]
                v[2] = g[1, 0, i, j]; v[3] = g[1, 1, i, j]
                for a in range(4):
                    for b in range(4):
                        acc[a][b] += wij * v[a] * v[b].conjugate()

    out = np.empty((4, 4), dtype=np.complex128)
    for a in range(4):
        for b in range(4):
            out[a, b] = acc[a][b]
    return out
