"""Orthonormal rank-polynomial bases.

Two basis systems live here:

* ``LPBasis`` — data-adaptive orthonormal polynomials of the mid-distribution
  (tie-aware rank) transform of a sample. Degree-1 is the standardized
  mid-rank; higher degrees come from weighted Gram-Schmidt on its powers.
* ``LegendreBasis`` — shifted orthonormal Legendre polynomials on [0, 1],
  the continuous limit of the rank basis, with exact antiderivatives.

Both are immutable after construction and safe to share across threads.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import math
import warnings

import numpy as np

from .errors import (
    ConstantColumnWarning,
    DataError,
    DegreeOutOfRange,
    DegreeTooHigh,
    DomainError,
    EmptySample,
)

__all__ = [
    "LegendreBasis",
    "LPBasis",
    "build_lp_basis",
    "eval_lp_basis",
    "eval_legendre",
    "legendre_antiderivative",
    "mid_distribution",
    "lp_feature_matrix",
    "FeatureMap",
]


# ---------------------------------------------------------------------------
# Shifted orthonormal Legendre polynomials on [0, 1]
# ---------------------------------------------------------------------------

class LegendreBasis:
    """Shifted orthonormal Legendre polynomials on the unit interval.

    Monomial coefficients are carried as exact rationals times the
    normalizer sqrt(2j+1), so orthonormality can be verified by exact
    polynomial integration. Degree j has the convention
    Leg_1(u) = sqrt(12)(u - 1/2), Leg_2(u) = sqrt(5)(6u^2 - 6u + 1), ...
    """

    def __init__(self, max_degree: int):
        if max_degree < 1:
            raise DomainError("max_degree must be >= 1")
        self.max_degree = max_degree
        # rational[j][k] = coefficient of u^k in P_j(2u - 1), P_j classical Legendre
        rational = [[Fraction(1)], [Fraction(-1), Fraction(2)]]
        for j in range(2, max_degree + 1):
            prev, prev2 = rational[j - 1], rational[j - 2]
            # (2u-1) * prev
            tp = [Fraction(0)] * (len(prev) + 1)
            for k, c in enumerate(prev):
                tp[k] -= c
                tp[k + 1] += 2 * c
            cur = [Fraction(0)] * (j + 1)
            for k, c in enumerate(tp):
                cur[k] += Fraction(2 * j - 1, j) * c
            for k, c in enumerate(prev2):
                cur[k] -= Fraction(j - 1, j) * c
            rational.append(cur)
        self._rational = rational
        self._norm = [math.sqrt(2 * j + 1) for j in range(max_degree + 1)]
        self._coef = [
            np.array([float(c) for c in row], dtype=float) * self._norm[j]
            for j, row in enumerate(rational)
        ]
        # antiderivative of Leg_j, vanishing at 0 (and at 1 for j >= 1)
        self._anti = [
            np.concatenate(([0.0], row / np.arange(1, row.size + 1)))
            for row in self._coef
        ]

    def rational_coefficients(self, j):
        """Exact monomial coefficients of Leg_j / sqrt(2j+1)."""
        return list(self._rational[j])

    def _check(self, j, u):
        if not 1 <= j <= self.max_degree:
            raise DegreeOutOfRange(f"degree {j} outside [1, {self.max_degree}]")
        u = np.asarray(u, dtype=float)
        if np.any(u < 0.0) or np.any(u > 1.0):
            raise DomainError("u must lie in [0, 1]")
        return u

    def eval(self, j, u):
        """Evaluate Leg_j at u in [0, 1]."""
        u = self._check(j, u)
        out = _horner(self._coef[j], u)
        return float(out) if out.ndim == 0 else out

    def antiderivative(self, j, u):
        """Evaluate A_j(u) = integral of Leg_j from 0 to u."""
        u = self._check(j, u)
        out = _horner(self._anti[j], u)
        return float(out) if out.ndim == 0 else out

    def matrix(self, u, m=None):
        """Stack [Leg_1(u), ..., Leg_m(u)] column-wise."""
        m = self.max_degree if m is None else m
        u = np.atleast_1d(np.asarray(u, dtype=float))
        return np.column_stack([self.eval(j, u) for j in range(1, m + 1)])


def _horner(coef, u):
    out = np.zeros_like(np.asarray(u, dtype=float))
    for c in coef[::-1]:
        out = out * u + c
    return out


_LEGENDRE_CACHE: dict = {}


def _legendre(max_degree: int) -> LegendreBasis:
    need = max(max_degree, 12)
    if not _LEGENDRE_CACHE or _LEGENDRE_CACHE["m"] < need:
        _LEGENDRE_CACHE["m"] = need
        _LEGENDRE_CACHE["basis"] = LegendreBasis(need)
    return _LEGENDRE_CACHE["basis"]


def eval_legendre(j, u):
    """Shifted orthonormal Legendre polynomial Leg_j at u in [0, 1]."""
    return _legendre(j).eval(j, u)


def legendre_antiderivative(j, u):
    """Exact antiderivative of Leg_j, zero at both 0 and 1 for j >= 1."""
    return _legendre(j).antiderivative(j, u)


# ---------------------------------------------------------------------------
# Empirical LP basis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LPBasis:
    """Orthonormal rank-polynomial system built from one sample.

    Attributes
    ----------
    values : sorted distinct sample values, shape (D,)
    pmf : empirical probability of each distinct value
    middist : mid-distribution value F(z) - p(z)/2 of each distinct value
    degree : effective degree m (may be lower than requested if powers
        of the first basis function degenerate)
    table : basis values at the distinct points, shape (D, degree)
    coeffs : rows map powers [1, T1, T1^2, ...] to each basis function
    n : size of the source sample
    """

    values: np.ndarray
    pmf: np.ndarray
    middist: np.ndarray
    degree: int
    table: np.ndarray
    coeffs: np.ndarray
    n: int

    def eval(self, z, j=None):
        """Evaluate basis function(s) at arbitrary points.

        Lookup is a right-continuous step function of z: points between
        training values take the value at the largest training point below,
        and points outside the training range clamp to the boundary rows.
        """
        z = np.asarray(z, dtype=float)
        idx = np.searchsorted(self.values, z, side="right") - 1
        idx = np.clip(idx, 0, len(self.values) - 1)
        if j is None:
            return self.table[idx, :]
        if not 1 <= j <= self.degree:
            raise DegreeOutOfRange(f"degree {j} outside [1, {self.degree}]")
        out = self.table[idx, j - 1]
        return float(out) if out.ndim == 0 else out

    def matrix(self, z):
        return self.eval(np.atleast_1d(z))


def mid_distribution(z):
    """Element-wise mid-distribution values F(z_i) - p(z_i)/2 of a sample."""
    z = np.asarray(z, dtype=float).ravel()
    values, inverse, counts = np.unique(z, return_inverse=True, return_counts=True)
    pmf = counts / z.size
    mid = np.cumsum(pmf) - pmf / 2.0
    return mid[inverse]


def build_lp_basis(sample, m: int) -> LPBasis:
    """Construct the empirical LP orthonormal basis of a sample.

    The first basis function is the standardized mid-distribution transform

        T_1(z) = sqrt(12) (Fmid(z) - 1/2) / sqrt(1 - sum_z p(z)^3),

    and degrees 2..m are weighted Gram-Schmidt orthonormalizations of
    T_1^2, ..., T_1^m under the empirical measure. Requires m < number of
    distinct values; near-degenerate powers are dropped, reducing the
    effective degree.
    """
    z = np.asarray(sample, dtype=float).ravel()
    if z.size == 0:
        raise EmptySample("cannot build a basis from an empty sample")
    if not np.all(np.isfinite(z)):
        raise DataError("sample contains non-finite values")
    if m < 1:
        raise DomainError("basis degree must be >= 1")
    values, counts = np.unique(z, return_counts=True)
    d = values.size
    if m >= d:
        raise DegreeTooHigh(
            f"degree {m} requires more than {m} distinct values, sample has {d}"
        )
    n = z.size
    pmf = counts / n
    mid = np.cumsum(pmf) - pmf / 2.0
    scale = math.sqrt(1.0 - float(np.sum(pmf**3)))
    t1 = math.sqrt(12.0) * (mid - 0.5) / scale

    # Weighted modified Gram-Schmidt (two passes) on powers of T1, tracking
    # the expansion of each basis function in the power basis [1, T1, ...].
    powers = np.column_stack([t1**k for k in range(m + 1)])  # includes constant
    basis_vecs = [np.ones(d)]
    basis_coef = [_unit_vec(m + 1, 0)]
    drop_tol = 1e-10 * n
    kept = []
    for k in range(1, m + 1):
        v = powers[:, k].copy()
        c = _unit_vec(m + 1, k)
        for _ in range(2):
            for b, bc in zip(basis_vecs, basis_coef):
                proj = float(np.sum(pmf * v * b))
                v -= proj * b
                c = c - proj * bc
        norm = math.sqrt(float(np.sum(pmf * v * v)))
        if norm < drop_tol:
            continue
        basis_vecs.append(v / norm)
        basis_coef.append(c / norm)
        kept.append(k)
    degree = len(kept)
    table = np.column_stack(basis_vecs[1:]) if degree else np.empty((d, 0))
    coeffs = np.vstack(basis_coef[1:]) if degree else np.empty((0, m + 1))
    return LPBasis(
        values=values,
        pmf=pmf,
        middist=mid,
        degree=degree,
        table=table,
        coeffs=coeffs,
        n=n,
    )


def _unit_vec(size, k):
    e = np.zeros(size)
    e[k] = 1.0
    return e


def eval_lp_basis(basis: LPBasis, z, j: int):
    """Evaluate T_j at points z (step-function extension off the sample)."""
    return basis.eval(z, j)


# ---------------------------------------------------------------------------
# Stacked feature matrix
# ---------------------------------------------------------------------------

@dataclass
class FeatureMap:
    """Per-column LP bases for transforming raw covariates.

    ``labels`` lists the retained (column name, degree) pairs in matrix
    order; ``skipped`` records constant columns that were dropped.
    """

    bases: list
    names: list
    labels: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    @property
    def n_columns(self):
        return len(self.labels)

    def transform(self, x):
        """Map raw rows (n, p) onto the stacked basis matrix (n, q)."""
        x = np.atleast_2d(np.asarray(x, dtype=float))
        if x.shape[1] != len(self.names):
            raise _dim_error(x.shape[1], len(self.names))
        cols = []
        for col, basis in enumerate(self.bases):
            if basis is None:
                continue
            cols.append(basis.matrix(x[:, col]))
        return np.hstack(cols) if cols else np.empty((x.shape[0], 0))


def _dim_error(got, want):
    from .errors import DimensionMismatch

    return DimensionMismatch(f"expected {want} feature column(s), got {got}")


def lp_feature_matrix(x, m_x: int, names=None):
    """Stacked LP feature matrix [T_{X_1} | T_{X_2} | ... ].

    Each covariate contributes min(m_x, distinct - 1) columns of its own
    empirical LP basis. Constant columns are skipped with a warning and
    recorded on the returned map.

    Returns
    -------
    (matrix, feature_map) : the (n, q) design and the reusable transform.
    """
    x = np.atleast_2d(np.asarray(x, dtype=float))
    if x.ndim != 2:
        raise DataError("feature array must be 2-dimensional")
    n, p = x.shape
    if names is None:
        names = [f"x{i + 1}" for i in range(p)]
    fmap = FeatureMap(bases=[], names=list(names))
    for col in range(p):
        distinct = np.unique(x[:, col]).size
        if distinct < 2:
            warnings.warn(
                f"column {names[col]!r} is constant; skipped",
                ConstantColumnWarning,
                stacklevel=2,
            )
            fmap.bases.append(None)
            fmap.skipped.append(names[col])
            continue
        degree = min(m_x, distinct - 1)
        basis = build_lp_basis(x[:, col], degree)
        fmap.bases.append(basis)
        fmap.labels.extend((names[col], j) for j in range(1, basis.degree + 1))
    return fmap.transform(x), fmap
