"""Closed-form norm bounds and their verdicts.

Six bound families are evaluated here. Four compare a norm sum against a
closed form of the dimensions (main, shifted, kyfan, opnorm); two are
single-object energy bounds kept for comparison (koolen_moulton,
gutman_zhou). Each check returns a BoundVerdict with the raw slack so
callers can distinguish "holds with room" from "sits on the equality edge".

Domain validation is strict: entries out of range, nonzero diagonals, or
asymmetry raise DomainViolationError. Nothing is clamped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainViolationError, KOutOfRangeError, MissingParamError
from .graphs import Graph, adjacency_matrix
from .linalg import (
    SYMMETRY_TOL,
    DenseMatrix,
    as_matrix,
    ky_fan_norm,
    operator_norm,
    svd,
    sym_eigen,
    trace_norm,
)

BOUND_KINDS = ("koolen_moulton", "main", "gutman_zhou", "shifted", "kyfan", "opnorm")

# slack >= -HOLD_TOL counts as holding; |slack| <= EQUALITY_TOL as equality.
HOLD_TOL = 1e-7
EQUALITY_TOL = 1e-6

# entries are treated as integral when within this of an integer
INTEGRALITY_TOL = 1e-12


@dataclass(frozen=True)
class BoundVerdict:
    """Outcome of one bound comparison.

    slack = rhs - lhs as computed; holds means slack >= -tol, equality means
    holds with |slack| <= eq_tol. Equality therefore implies holds.
    """

    kind: str
    lhs: float
    rhs: float
    slack: float
    holds: bool
    equality: bool
    tol: float
    eq_tol: float

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "holds": self.holds,
            "equality": self.equality,
            "tol": self.tol,
            "eq_tol": self.eq_tol,
        }


@dataclass(frozen=True)
class EqualityReport:
    """Structural flags behind equality in the shifted trace-norm bound.

    A square nonnegative zero-diagonal matrix sits on the equality edge iff
    it is (0,1), all of its row and column sums are (n-1)/2, and the shifted
    matrix A + I/2 has all singular values past the first equal to sqrt(n)/2.
    The conference flag is the symmetric specialization: eigenvalues matching
    ((n-1)/2, ((sqrt n - 1)/2)^r, (-(sqrt n + 1)/2)^r) with r = (n-1)/2.
    """

    is_zero_one: bool
    row_sums_ok: bool
    col_sums_ok: bool
    flat_tail_ok: bool
    conference_spectrum_ok: bool
    overall: bool

    def to_json(self) -> dict:
        return {
            "is_zero_one": self.is_zero_one,
            "row_sums_ok": self.row_sums_ok,
            "col_sums_ok": self.col_sums_ok,
            "flat_tail_ok": self.flat_tail_ok,
            "conference_spectrum_ok": self.conference_spectrum_ok,
            "overall": self.overall,
        }


@dataclass(frozen=True)
class WeylReport:
    """Per-index margins of the complement eigenvalue inequality.

    margins[i] = mu_{k}(A) + mu_{n-k+2}(J-I-A) + 1 for k = i + 2; the
    inequality asks each to be <= 0. ok means every margin <= tol.
    """

    ok: bool
    margins: tuple[float, ...]
    tol: float

    def to_json(self) -> dict:
        return {"ok": self.ok, "margins": list(self.margins), "tol": self.tol}


def bound_value(kind: str, n: int, m: int | None = None, k: int | None = None) -> float:
    """Closed-form right-hand side of the named bound.

    Square kinds take the order n. Rectangular kinds (kyfan, opnorm) take
    row count m and column count n; kyfan additionally needs the norm
    index k with 2 <= k <= min(m, n).
    """
    if kind not in BOUND_KINDS:
        raise ValueError(f"unknown bound kind {kind!r}; expected one of {BOUND_KINDS}")
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    if kind == "koolen_moulton":
        return (1.0 + math.sqrt(n)) * n / 2.0
    if kind == "main":
        return (n - 1) * (1.0 + math.sqrt(n))
    if kind == "gutman_zhou":
        return math.sqrt(2.0) * n + (n - 1) * math.sqrt(n - 1)
    if kind == "shifted":
        return n + (n - 1) * math.sqrt(n)
    # rectangular kinds need m
    if m is None:
        raise MissingParamError(f"bound kind {kind!r} needs the row count m")
    if not isinstance(m, (int, np.integer)) or isinstance(m, bool) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")
    m = int(m)
    if kind == "opnorm":
        return math.sqrt(2.0 * m * n)
    # kyfan
    if k is None:
        raise MissingParamError("bound kind 'kyfan' needs the norm index k")
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool):
        raise KOutOfRangeError(f"k must be an integer, got {k!r}")
    if k < 2 or k > min(m, n):
        raise KOutOfRangeError(f"k={k} outside [2, {min(m, n)}] for a {m}x{n} matrix")
    return math.sqrt(m * n) * (1.0 + math.sqrt(k - 1))


def _entries_in_unit_range(a: np.ndarray) -> None:
    lo, hi = float(a.min()), float(a.max())
    if lo < 0.0 or hi > 1.0:
        raise DomainViolationError(f"entries must lie in [0, 1], found range [{lo}, {hi}]")


def _require_square(a: np.ndarray) -> None:
    if a.shape[0] != a.shape[1]:
        raise DomainViolationError(f"matrix must be square, got {a.shape[0]}x{a.shape[1]}")


def _require_zero_diagonal(a: np.ndarray) -> None:
    if np.any(np.diag(a) != 0.0):
        raise DomainViolationError("matrix must have a zero diagonal")


def _require_symmetric(a: np.ndarray) -> None:
    asym = float(np.abs(a - a.T).max())
    if asym > SYMMETRY_TOL:
        raise DomainViolationError(
            f"matrix asymmetry {asym:.3e} exceeds tolerance {SYMMETRY_TOL:.0e}"
        )


def _as_input_matrix(obj) -> DenseMatrix:
    if isinstance(obj, Graph):
        return adjacency_matrix(obj)
    return as_matrix(obj)


def check_bound(
    kind: str,
    obj,
    k: int | None = None,
    tol: float = HOLD_TOL,
    eq_tol: float = EQUALITY_TOL,
) -> BoundVerdict:
    """Evaluate one bound on a graph or matrix and return the verdict.

    Graphs enter through their adjacency matrix. The complement partner
    depends on the kind: J - I - A for the square symmetric kinds, the
    shifted pair for 'shifted', and J - A for the rectangular kinds.
    """
    if kind not in BOUND_KINDS:
        raise ValueError(f"unknown bound kind {kind!r}; expected one of {BOUND_KINDS}")
    mat = _as_input_matrix(obj)
    a = mat.array
    rows, cols = mat.shape
    _entries_in_unit_range(a)

    if kind in ("koolen_moulton", "main", "gutman_zhou"):
        _require_square(a)
        _require_symmetric(a)
        _require_zero_diagonal(a)
        n = cols
        comp = np.ones((n, n)) - np.eye(n) - a
        if kind == "koolen_moulton":
            lhs = trace_norm(a)
        else:
            lhs = trace_norm(a) + trace_norm(comp)
        rhs = bound_value(kind, n)
    elif kind == "shifted":
        _require_square(a)
        _require_zero_diagonal(a)
        n = cols
        shift = a + np.eye(n) / 2.0
        lhs = trace_norm(shift) + trace_norm(np.ones((n, n)) - shift)
        rhs = bound_value(kind, n)
    elif kind == "opnorm":
        lhs = operator_norm(a) + operator_norm(np.ones((rows, cols)) - a)
        rhs = bound_value(kind, cols, m=rows)
    else:  # kyfan
        rhs = bound_value(kind, cols, m=rows, k=k)
        lhs = ky_fan_norm(a, k) + ky_fan_norm(np.ones((rows, cols)) - a, k)

    slack = rhs - lhs
    holds = slack >= -tol
    equality = holds and abs(slack) <= eq_tol
    return BoundVerdict(
        kind=kind,
        lhs=float(lhs),
        rhs=float(rhs),
        slack=float(slack),
        holds=bool(holds),
        equality=bool(equality),
        tol=float(tol),
        eq_tol=float(eq_tol),
    )


def conference_eigenvalues(n: int) -> list[float]:
    """The descending eigenvalue list forced on a conference graph of order n."""
    if n % 4 != 1 or n < 5:
        raise ValueError(f"conference spectra need n = 1 (mod 4) and n >= 5, got {n}")
    r = (n - 1) // 2
    s = math.sqrt(n)
    return [(n - 1) / 2.0] + [(s - 1) / 2.0] * r + [-(s + 1) / 2.0] * r


def equality_analysis(obj, tol: float = EQUALITY_TOL) -> EqualityReport:
    """Test a square nonnegative zero-diagonal matrix against the structural
    equality conditions of the shifted bound, flag by flag."""
    mat = _as_input_matrix(obj)
    a = mat.array
    _require_square(a)
    _entries_in_unit_range(a)
    _require_zero_diagonal(a)
    n = mat.rows

    rounded = np.round(a)
    integral = bool(np.abs(a - rounded).max() <= INTEGRALITY_TOL)
    is_zero_one = integral  # entries already confined to [0, 1]

    half = (n - 1) / 2.0
    if integral:
        ri = rounded.astype(np.int64)
        target2 = n - 1  # compare doubled sums to avoid fractions
        row_sums_ok = bool(n % 2 == 1 and (2 * ri.sum(axis=1) == target2).all())
        col_sums_ok = bool(n % 2 == 1 and (2 * ri.sum(axis=0) == target2).all())
    else:
        row_sums_ok = bool((a.sum(axis=1) == half).all())
        col_sums_ok = bool((a.sum(axis=0) == half).all())

    shift_sigma = svd(a + np.eye(n) / 2.0).values
    target = math.sqrt(n) / 2.0
    flat_tail_ok = all(abs(s - target) <= tol for s in shift_sigma[1:])

    conference_spectrum_ok = False
    if n % 4 == 1 and n >= 5 and float(np.abs(a - a.T).max()) <= SYMMETRY_TOL:
        eig = sym_eigen(a).values
        expected = conference_eigenvalues(n)
        conference_spectrum_ok = all(
            abs(e - x) <= tol for e, x in zip(eig, expected)
        )

    overall = (
        is_zero_one and row_sums_ok and col_sums_ok and flat_tail_ok and conference_spectrum_ok
    )
    return EqualityReport(
        is_zero_one=is_zero_one,
        row_sums_ok=row_sums_ok,
        col_sums_ok=col_sums_ok,
        flat_tail_ok=flat_tail_ok,
        conference_spectrum_ok=conference_spectrum_ok,
        overall=overall,
    )


def weyl_complement_check(obj, tol: float = HOLD_TOL) -> WeylReport:
    """Check mu_k(A) + mu_{n-k+2}(J-I-A) <= -1 for every k = 2..n.

    Margins are reported as lhs + 1, so a satisfied index is <= 0 and an
    index sitting exactly on the inequality reads 0.
    """
    mat = _as_input_matrix(obj)
    a = mat.array
    _require_square(a)
    _entries_in_unit_range(a)
    _require_symmetric(a)
    _require_zero_diagonal(a)
    n = mat.rows
    mu = sym_eigen(a).values
    mubar = sym_eigen(np.ones((n, n)) - np.eye(n) - a).values
    # mu is 0-based descending: mu_k is mu[k-1], mu_{n-k+2} is mubar[n-k+1]
    margins = tuple(mu[kk - 1] + mubar[n - kk + 1] + 1.0 for kk in range(2, n + 1))
    ok = all(mg <= tol for mg in margins)
    return WeylReport(ok=ok, margins=margins, tol=float(tol))
