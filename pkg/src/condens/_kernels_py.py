"""Pure-numpy implementations of the hot kernels.

Selected at import when the compiled extension is unavailable (or when
CONDENS_PURE_PY is set). Keep the arithmetic order aligned with
``_kernels.pyx`` so both backends agree to rounding error: sweeps visit
coordinates in index order, and split scans accumulate left to right with
first-wins tie breaking.
"""

import numpy as np

BACKEND = "python"


def cd_lasso(x, t, lam, max_sweeps, tol, beta0=None):
    """Coordinate-descent lasso on a pre-standardized design.

    Minimizes (1/2n)||t - x b||^2 + lam * ||b||_1. Returns
    (beta, sweeps, converged).
    """
    n, q = x.shape
    beta = np.zeros(q) if beta0 is None else beta0.astype(float).copy()
    col_ss = np.einsum("ij,ij->j", x, x) / n
    r = t - x @ beta
    sweeps = 0
    converged = False
    for sweeps in range(1, max_sweeps + 1):
        max_delta = 0.0
        for j in range(q):
            if col_ss[j] <= 0.0:
                continue
            old = beta[j]
            rho = (x[:, j] @ r) / n + col_ss[j] * old
            new = _soft(rho, lam) / col_ss[j]
            if new != old:
                r += x[:, j] * (old - new)
                beta[j] = new
                delta = abs(new - old)
                if delta > max_delta:
                    max_delta = delta
        if max_delta < tol:
            converged = True
            break
    return beta, sweeps, converged


def _soft(value, threshold):
    if value > threshold:
        return value - threshold
    if value < -threshold:
        return value + threshold
    return 0.0


def stump_scan(xs, rs):
    """Best squared-error split of one sorted feature column.

    Parameters are the feature values sorted ascending and the residuals in
    the same order. A split puts x <= threshold on the left. Returns
    (gain, threshold, left_count); gain <= 0 means no admissible split.
    """
    n = xs.shape[0]
    if n < 2:
        return 0.0, 0.0, 0
    cum = np.cumsum(rs)
    total = cum[-1]
    base = total * total / n
    idx = np.arange(1, n)
    valid = xs[:-1] != xs[1:]
    if not np.any(valid):
        return 0.0, 0.0, 0
    left = cum[:-1]
    gains = left * left / idx + (total - left) ** 2 / (n - idx) - base
    gains = np.where(valid, gains, -np.inf)
    best = int(np.argmax(gains))
    gain = float(gains[best])
    if gain <= 0.0:
        return 0.0, 0.0, 0
    return gain, float(xs[best]), best + 1
