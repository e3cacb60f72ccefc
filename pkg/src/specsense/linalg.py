"""Streaming sample-covariance accumulation and small symmetric eigenproblems.

Matrices here are plain float64 ndarrays.  Eigenvalue routines wrap LAPACK
(numpy.linalg) with the validation and sign conventions the detectors rely
on; the numba engine carries its own bisection eigensolver, cross-checked
against these in the tests.
"""

from __future__ import annotations

import numpy as np


def ensure_symmetric(m: np.ndarray, name: str = "matrix") -> np.ndarray:
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} has non-finite entries")
    if not np.array_equal(m, m.T):
        if not np.allclose(m, m.T, rtol=0.0, atol=1e-12 * max(1.0, float(np.abs(m).max()))):
            raise ValueError(f"{name} is not symmetric")
        m = 0.5 * (m + m.T)
    return m


class CovarianceAccumulator:
    """Running sum of outer products x x^T; sample covariance = sum / count.

    Zero-mean form: no mean subtraction.  Single-writer; pass demean=True to
    recenter each incoming vector against the running mean instead.
    """

    def __init__(self, L: int, demean: bool = False):
        if L < 1:
            raise ValueError(f"L must be positive, got {L}")
        self.L = int(L)
        self.k = 0
        self.sum_outer = np.zeros((L, L))
        self.demean = demean
        self._mean = np.zeros(L) if demean else None

    def accumulate(self, x: np.ndarray) -> "CovarianceAccumulator":
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (self.L,):
            raise ValueError(f"expected vector of length {self.L}, got shape {x.shape}")
        if self.demean:
            self._mean = (self._mean * self.k + x) / (self.k + 1)
            x = x - self._mean
        self.sum_outer += np.outer(x, x)
        self.k += 1
        return self

    def sample_covariance(self) -> np.ndarray:
        if self.k == 0:
            raise ValueError("empty accumulator: no vectors appended yet")
        return self.sum_outer / self.k


def accumulate(acc: CovarianceAccumulator, x: np.ndarray) -> CovarianceAccumulator:
    return acc.accumulate(x)


def sample_covariance(acc: CovarianceAccumulator) -> np.ndarray:
    return acc.sample_covariance()


def segment_covariance(data: np.ndarray) -> np.ndarray:
    """Sample covariance (zero-mean form) of an L x N segment matrix."""
    data = np.asarray(data, dtype=np.float64)
    n = data.shape[1]
    if n < 1:
        raise ValueError("segment must have at least one column")
    return (data @ data.T) / n


def eigenvalues(m: np.ndarray) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending."""
    return np.linalg.eigvalsh(ensure_symmetric(m))


def eigen_extremes(m: np.ndarray) -> tuple[float, float]:
    """(lambda_max, lambda_min) of a symmetric matrix."""
    w = eigenvalues(m)
    return float(w[-1]), float(w[0])


def leading_eigenvector(m: np.ndarray) -> np.ndarray:
    """Unit eigenvector of the largest eigenvalue, largest-magnitude entry positive."""
    m = ensure_symmetric(m)
    _, vecs = np.linalg.eigh(m)
    v = vecs[:, -1]
    pivot = np.argmax(np.abs(v))
    if v[pivot] < 0:
        v = -v
    return v
