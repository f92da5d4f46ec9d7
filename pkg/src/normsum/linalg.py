"""Dense real linear algebra for small matrices.

Everything downstream (bound checks, extremal constructions, searches) runs
on the four operations here: symmetric eigendecomposition, SVD, Ky Fan
norms, and Kronecker products. Matrices are dense float64 and small by
design (dimension cap 4096), so LAPACK via numpy is used throughout and
every factorization is certified by an explicit residual.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    KOutOfRangeError,
    NoConvergenceError,
    NonSquareError,
    NonSymmetricError,
    SizeOverflowError,
)

# Largest row/column count any operation will produce or accept.
DIMENSION_CAP = 4096

# Entrywise tolerance for treating a matrix as symmetric.
SYMMETRY_TOL = 1e-12

# A factorization is accepted when its residual is below
# CERT_FACTOR * (1 + frobenius(input)).
CERT_FACTOR = 1e-12


class DenseMatrix:
    """Immutable real matrix, row-major float64.

    Construct from anything 2-d array-like, or via :meth:`from_flat` /
    :meth:`from_json`. Entries must be finite; NaN and infinities are
    rejected at construction so no operation needs to re-check.
    """

    __slots__ = ("_data",)

    def __init__(self, data) -> None:
        arr = np.array(data, dtype=np.float64, order="C", copy=True)
        if arr.ndim != 2:
            raise ValueError(f"matrix must be 2-d, got ndim={arr.ndim}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"matrix dimensions must be positive, got {arr.shape}")
        if arr.shape[0] > DIMENSION_CAP or arr.shape[1] > DIMENSION_CAP:
            raise SizeOverflowError(
                f"matrix of shape {arr.shape} exceeds the dimension cap {DIMENSION_CAP}"
            )
        if not np.isfinite(arr).all():
            raise ValueError("matrix entries must be finite")
        arr.setflags(write=False)
        self._data = arr

    @classmethod
    def from_flat(cls, rows: int, cols: int, entries: Sequence[float]) -> "DenseMatrix":
        """Build from a flat row-major entry list of length rows*cols."""
        entries = list(entries)
        if rows < 1 or cols < 1:
            raise ValueError("rows and cols must be positive")
        if len(entries) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
            )
        return cls(np.asarray(entries, dtype=np.float64).reshape(rows, cols))

    @classmethod
    def from_json(cls, obj: dict) -> "DenseMatrix":
        """Read the {"rows": m, "cols": n, "entries": [...]} wire form."""
        try:
            return cls.from_flat(int(obj["rows"]), int(obj["cols"]), obj["entries"])
        except KeyError as exc:
            raise ValueError(f"matrix JSON missing field {exc}") from exc

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [float(x) for x in self._data.ravel()],
        }

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._data.shape

    @property
    def array(self) -> np.ndarray:
        """Read-only float64 view of the entries."""
        return self._data

    @property
    def entries(self) -> list[float]:
        """Flat row-major copy of the entries."""
        return [float(x) for x in self._data.ravel()]

    @property
    def entry_min(self) -> float:
        return float(self._data.min())

    @property
    def entry_max(self) -> float:
        return float(self._data.max())

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._data
        return self._data.astype(dtype)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._data, other._data))

    def __repr__(self) -> str:
        return f"DenseMatrix({self.rows}x{self.cols})"


def as_matrix(m) -> DenseMatrix:
    """Coerce a DenseMatrix, ndarray, or nested sequence into a DenseMatrix."""
    if isinstance(m, DenseMatrix):
        return m
    return DenseMatrix(m)


@dataclass(frozen=True)
class EigenSpectrum:
    """Eigenvalues of a symmetric matrix, descending, with a residual certificate.

    ``offdiag_residual`` is the Frobenius norm of A@Q - Q@diag(values) for the
    orthogonal Q of the factorization, i.e. the off-diagonal mass left after
    rotating A into the eigenbasis.
    """

    values: tuple[float, ...]
    offdiag_residual: float


@dataclass(frozen=True)
class SingularSpectrum:
    """Singular values, descending, with the reconstruction residual
    frobenius(A - U diag(values) V^T)."""

    values: tuple[float, ...]
    residual: float


def _frobenius(arr: np.ndarray) -> float:
    return float(np.sqrt((arr * arr).sum()))


def sym_eigen(m) -> EigenSpectrum:
    """Eigenvalues of a symmetric matrix, sorted descending.

    The input must be square and symmetric within SYMMETRY_TOL entrywise.
    The returned residual is checked against the convergence certificate
    threshold; a breach raises NoConvergenceError.
    """
    mat = as_matrix(m)
    if mat.rows != mat.cols:
        raise NonSquareError(f"sym_eigen needs a square matrix, got {mat.rows}x{mat.cols}")
    a = mat.array
    asym = float(np.abs(a - a.T).max())
    if asym > SYMMETRY_TOL:
        raise NonSymmetricError(
            f"matrix asymmetry {asym:.3e} exceeds tolerance {SYMMETRY_TOL:.0e}"
        )
    sym = (a + a.T) / 2.0
    try:
        w, q = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"symmetric eigendecomposition failed: {exc}") from exc
    residual = _frobenius(sym @ q - q * w)
    threshold = CERT_FACTOR * (1.0 + _frobenius(sym))
    if residual > threshold:
        raise NoConvergenceError(
            f"eigen residual {residual:.3e} above certificate threshold {threshold:.3e}"
        )
    # LAPACK returns ascending; flip for descending.
    return EigenSpectrum(values=tuple(float(x) for x in w[::-1]), offdiag_residual=residual)


def svd(m) -> SingularSpectrum:
    """Singular values of any finite real matrix, sorted descending."""
    mat = as_matrix(m)
    a = mat.array
    try:
        u, s, vt = np.linalg.svd(a, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"SVD failed: {exc}") from exc
    residual = _frobenius(a - (u * s) @ vt)
    threshold = CERT_FACTOR * (1.0 + _frobenius(a))
    if residual > threshold:
        raise NoConvergenceError(
            f"SVD residual {residual:.3e} above certificate threshold {threshold:.3e}"
        )
    return SingularSpectrum(values=tuple(float(x) for x in s), residual=residual)


def ky_fan_norm(m, k: int) -> float:
    """Sum of the k largest singular values.

    k = 1 is the operator norm, k = min(rows, cols) the trace norm.
    """
    mat = as_matrix(m)
    kmax = min(mat.rows, mat.cols)
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool):
        raise KOutOfRangeError(f"k must be an integer, got {k!r}")
    if k < 1 or k > kmax:
        raise KOutOfRangeError(f"k={k} outside [1, {kmax}] for a {mat.rows}x{mat.cols} matrix")
    return float(sum(svd(mat).values[:k]))


def trace_norm(m) -> float:
    """Sum of all singular values (graph energy when m is an adjacency matrix)."""
    return float(sum(svd(m).values))


def operator_norm(m) -> float:
    """Largest singular value."""
    return float(svd(m).values[0])


def kronecker(a, b) -> DenseMatrix:
    """Kronecker product A (x) B with the usual block layout [a_ij * B]."""
    ma, mb = as_matrix(a), as_matrix(b)
    rows = ma.rows * mb.rows
    cols = ma.cols * mb.cols
    if rows > DIMENSION_CAP or cols > DIMENSION_CAP:
        raise SizeOverflowError(
            f"Kronecker result {rows}x{cols} exceeds the dimension cap {DIMENSION_CAP}"
        )
    return DenseMatrix(np.kron(ma.array, mb.array))
