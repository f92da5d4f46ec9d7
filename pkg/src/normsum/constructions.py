"""Builders for the matrices that sit on the equality edge of the norm bounds:
Hadamard matrices, the Kronecker family whose top k singular values exhaust
the Ky Fan bound, and the half-ones blocks that exhaust the operator-norm
bound.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadOrientationError,
    OddProductError,
    SizeOverflowError,
    UnsupportedOrderError,
)
from .graphs import _field_square_codes, _find_irreducible, _prime_power_split
from .linalg import DIMENSION_CAP, DenseMatrix, kronecker


@dataclass(frozen=True)
class HadamardMatrix:
    """A +-1 matrix H with H H^T = order * I, checked exactly at construction."""

    order: int
    entries: DenseMatrix

    def __post_init__(self):
        if self.entries.shape != (self.order, self.order):
            raise ValueError(
                f"entries shape {self.entries.shape} does not match order {self.order}"
            )
        h = self.entries.array
        if not np.all(np.abs(h) == 1.0):
            raise ValueError("Hadamard entries must be exactly +-1")
        hi = h.astype(np.int64)
        gram = hi @ hi.T
        if not np.array_equal(gram, self.order * np.eye(self.order, dtype=np.int64)):
            raise ValueError(f"H H^T != {self.order} I, construction rejected")


def _sylvester(order: int) -> np.ndarray:
    h = np.array([[1]], dtype=np.int64)
    while h.shape[0] < order:
        h = np.block([[h, h], [h, -h]])
    return h


def _character_table(q: int) -> np.ndarray:
    """chi[code(u - v)] for all ordered pairs of GF(q): +1 on nonzero squares,
    -1 on nonsquares, 0 on the diagonal. Entry (u, v) is chi(u - v)."""
    p, e = _prime_power_split(q)
    chi = np.full(q, -1, dtype=np.int64)
    chi[0] = 0
    if e == 1:
        chi[[(x * x) % q for x in range(1, q)]] = 1
        verts = np.arange(q, dtype=np.int64)
        codes = (verts[:, None] - verts[None, :]) % q
        return chi[codes]
    f = _find_irreducible(p, e)
    chi[sorted(_field_square_codes(p, e, f))] = 1
    weights = np.array([p ** (e - 1 - t) for t in range(e)], dtype=np.int64)
    verts = np.arange(q, dtype=np.int64)
    digits = (verts[:, None] // weights[None, :]) % p
    diff = (digits[:, None, :] - digits[None, :, :]) % p
    return chi[diff @ weights]


def _paley_hadamard(order: int) -> np.ndarray:
    """Order q+1 for a prime power q = 3 (mod 4): all-ones border around the
    quadratic-character table minus the identity."""
    q = order - 1
    h = np.ones((order, order), dtype=np.int64)
    h[1:, 1:] = _character_table(q) - np.eye(q, dtype=np.int64)
    return h


def hadamard(order: int) -> HadamardMatrix:
    """A Hadamard matrix of the given order, verified exactly.

    Supported orders: 1, 2, any power of 2 (doubling), and q + 1 for a prime
    power q = 3 (mod 4) (character construction). Everything reachable that
    way up to 32 is covered: 1, 2, 4, 8, 12, 16, 20, 24, 28, 32.
    """
    if not isinstance(order, (int, np.integer)) or isinstance(order, bool) or order < 1:
        raise UnsupportedOrderError(f"order must be a positive integer, got {order!r}")
    order = int(order)
    if order > DIMENSION_CAP:
        raise SizeOverflowError(f"order {order} exceeds the dimension cap {DIMENSION_CAP}")
    if order & (order - 1) == 0:
        h = _sylvester(order)
    else:
        split = _prime_power_split(order - 1)
        if split is not None and (order - 1) % 4 == 3:
            h = _paley_hadamard(order)
        else:
            raise UnsupportedOrderError(
                f"no supported construction for order {order}: not a power of 2 "
                f"and {order - 1} is not a prime power = 3 (mod 4)"
            )
    return HadamardMatrix(order=order, entries=DenseMatrix(h.astype(np.float64)))


def kyfan_extremal_matrix(k: int, p: int, q: int) -> DenseMatrix:
    """The (0,1)-matrix of size 2p(k-1) x 2q(k-1) whose Ky Fan k-norm, joined
    with that of its complement, meets sqrt(mn)(1 + sqrt(k-1)).

    Built as half of (H' (x) J_{p,q}) + J, where H' doubles a Hadamard matrix
    of order k-1 into [[H, -H], [-H, H]]. Its nonzero singular values are
    sigma_1 = sqrt(mn)/2 and sigma_2 = ... = sigma_k = sqrt(mn)/(2 sqrt(k-1)).
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if p < 1 or q < 1:
        raise ValueError(f"block multiplicities must be positive, got p={p}, q={q}")
    m = 2 * p * (k - 1)
    n = 2 * q * (k - 1)
    if m > DIMENSION_CAP or n > DIMENSION_CAP:
        raise SizeOverflowError(
            f"result {m}x{n} exceeds the dimension cap {DIMENSION_CAP}"
        )
    h = hadamard(k - 1).entries
    hprime = kronecker(DenseMatrix([[1.0, -1.0], [-1.0, 1.0]]), h)
    block = kronecker(hprime, DenseMatrix(np.ones((p, q))))
    return DenseMatrix((block.array + np.ones((m, n))) / 2.0)


def opnorm_extremal_matrix(m: int, n: int, orientation: str) -> DenseMatrix:
    """The m x n (0,1)-matrix with mn/2 ones packed into the first n/2 columns
    (orientation "columns") or the first m/2 rows (orientation "rows").

    These are the matrices for which the largest singular values of A and of
    its complement J - A sum to sqrt(2mn); that needs mn even.
    """
    if m < 1 or n < 1:
        raise ValueError(f"dimensions must be positive, got {m}x{n}")
    if m > DIMENSION_CAP or n > DIMENSION_CAP:
        raise SizeOverflowError(f"result {m}x{n} exceeds the dimension cap {DIMENSION_CAP}")
    if (m * n) % 2 != 0:
        raise OddProductError(f"mn = {m * n} is odd; no half-ones split exists")
    if orientation not in ("rows", "columns"):
        raise BadOrientationError(f"orientation must be 'rows' or 'columns', got {orientation!r}")
    a = np.zeros((m, n), dtype=np.float64)
    if orientation == "columns":
        if n % 2 != 0:
            raise BadOrientationError(f"orientation 'columns' needs even column count, got n={n}")
        a[:, : n // 2] = 1.0
    else:
        if m % 2 != 0:
            raise BadOrientationError(f"orientation 'rows' needs even row count, got m={m}")
        a[: m // 2, :] = 1.0
    return DenseMatrix(a)
