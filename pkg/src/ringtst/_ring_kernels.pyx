# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Metropolis kernel for ring-polymer sampling.

Consumes pre-drawn random variates so that the pure-Python twin
(_ring_kernels_py) produces bit-identical chains from the same stream.
"""
from libc.math cimport cosh


cdef inline double _pot(int code, double pa, double pb, double x) nogil:
    cdef double u, s
    if code == 0:
        return 0.0
    if code == 1:
        return pa * x * x
    if code == 2:
        s = cosh(x / pb)
        return pa / (s * s)
    u = (x / pb) * (x / pb) - 1.0
    return pa * u * u


def run_sweeps(
    double[::1] q,
    double eps,
    double spring,
    int pot_code,
    double pa,
    double pb,
    double step_bead,
    double step_trans,
    double[:, ::1] bead_prop,
    double[:, ::1] bead_logu,
    double[::1] trans_prop,
    double[::1] trans_logu,
):
    """Run len(bead_prop) sweeps in place; returns (bead_acc, trans_acc)."""
    cdef Py_ssize_t n_sweeps = bead_prop.shape[0]
    cdef Py_ssize_t P = q.shape[0]
    cdef Py_ssize_t s, k
    cdef long bead_acc = 0, trans_acc = 0
    cdef double x_old, x_new, ql, qr, dlog, shift, dv

    for s in range(n_sweeps):
        for k in range(P):
            x_old = q[k]
            x_new = x_old + step_bead * bead_prop[s, k]
            ql = q[(k + P - 1) % P]
            qr = q[(k + 1) % P]
            dlog = -eps * (_pot(pot_code, pa, pb, x_new) - _pot(pot_code, pa, pb, x_old))
            dlog -= spring * (
                (x_new - ql) * (x_new - ql)
                + (x_new - qr) * (x_new - qr)
                - (x_old - ql) * (x_old - ql)
                - (x_old - qr) * (x_old - qr)
            )
            if bead_logu[s, k] < dlog:
                q[k] = x_new
                bead_acc += 1
        shift = step_trans * trans_prop[s]
        dv = 0.0
        if pot_code != 0:
            for k in range(P):
                dv += _pot(pot_code, pa, pb, q[k] + shift) - _pot(pot_code, pa, pb, q[k])
        dlog = -eps * dv
        if trans_logu[s] < dlog:
            for k in range(P):
                q[k] = q[k] + shift
            trans_acc += 1
    return bead_acc, trans_acc
