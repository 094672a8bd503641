# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_kernels_py``.

Same sweep order, same accumulation order, same tie breaking; only the
inner loops move to C.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"


def cd_lasso(double[:, ::1] x, double[::1] t, double lam,
             int max_sweeps, double tol, beta0=None):
    """Coordinate-descent lasso on a pre-standardized design.

    Minimizes (1/2n)||t - x b||^2 + lam * ||b||_1. Returns
    (beta, sweeps, converged).
    """
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t q = x.shape[1]
    beta_arr = np.zeros(q) if beta0 is None else np.asarray(beta0, dtype=float).copy()
    cdef double[::1] beta = beta_arr
    cdef double[::1] col_ss = np.empty(q)
    cdef double[::1] r = np.empty(n)
    cdef Py_ssize_t i, j, sweeps
    cdef double acc, rho, old, new, delta, max_delta
    cdef bint converged = False

    for j in range(q):
        acc = 0.0
        for i in range(n):
            acc += x[i, j] * x[i, j]
        col_ss[j] = acc / n
    for i in range(n):
        acc = 0.0
        for j in range(q):
            acc += x[i, j] * beta[j]
        r[i] = t[i] - acc

    sweeps = 0
    while sweeps < max_sweeps:
        sweeps += 1
        max_delta = 0.0
        for j in range(q):
            if col_ss[j] <= 0.0:
                continue
            old = beta[j]
            acc = 0.0
            for i in range(n):
                acc += x[i, j] * r[i]
            rho = acc / n + col_ss[j] * old
            if rho > lam:
                new = (rho - lam) / col_ss[j]
            elif rho < -lam:
                new = (rho + lam) / col_ss[j]
            else:
                new = 0.0
            if new != old:
                for i in range(n):
                    r[i] += x[i, j] * (old - new)
                beta[j] = new
                delta = new - old
                if delta < 0.0:
                    delta = -delta
                if delta > max_delta:
                    max_delta = delta
        if max_delta < tol:
            converged = True
            break
    return beta_arr, int(sweeps), bool(converged)


def stump_scan(double[::1] xs, double[::1] rs):
    """Best squared-error split of one sorted feature column.

    Returns (gain, threshold, left_count); gain <= 0 means no split.
    """
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t i, best_i = -1
    cdef double cum = 0.0, total = 0.0, base, left, gain, best_gain
    if n < 2:
        return 0.0, 0.0, 0
    for i in range(n):
        total += rs[i]
    base = total * total / n
    best_gain = -np.inf
    for i in range(n - 1):
        cum += rs[i]
        if xs[i] == xs[i + 1]:
            continue
        left = cum
        gain = left * left / (i + 1) + (total - left) * (total - left) / (n - i - 1) - base
        if gain > best_gain:
            best_gain = gain
            best_i = i
    if best_i < 0 or best_gain <= 0.0:
        return 0.0, 0.0, 0
    return float(best_gain), float(xs[best_i]), int(best_i + 1)
