"""Empirical maximization of complement norm sums over graphs.

Three strategies: exhaustive labeled enumeration for n <= 8, seeded
edge-flip annealing for n <= 64, and randomized property sweeps that hammer
the bound checkers with seeded graphs and matrices. Everything is
deterministic given its inputs, including under thread fan-out: work is
split into fixed blocks and merged in block order.
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bounds import HOLD_TOL, check_bound, weyl_complement_check
from .errors import BadConfigError, KOutOfRangeError, OrderTooLargeError
from .graphs import Graph, graph6_encode, pair_table
from .linalg import DenseMatrix
from .rng import MASK64, SplitMix64, derive_seed

EXHAUSTIVE_MAX_N = 8
LOCAL_MAX_N = 64
WITNESS_CAP = 1000
# a graph counts as a witness when its value is within this of the maximum
WITNESS_TOL = 1e-9

OBJECTIVES = ("trace_sum", "kyfan_sum")

_BLOCK_BITS = 16  # exhaustive enumeration block size 2^16


@dataclass(frozen=True)
class SearchConfig:
    """Annealing knobs. Restart r runs on seed + r, so a single seed pins the
    whole ensemble."""

    restarts: int = 10
    max_steps: int = 20000
    temperature_initial: float = 1.0
    cooling: float = 0.995
    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.restarts, int) or self.restarts < 1:
            raise BadConfigError(f"restarts must be a positive integer, got {self.restarts!r}")
        if not isinstance(self.max_steps, int) or self.max_steps < 1:
            raise BadConfigError(f"max_steps must be a positive integer, got {self.max_steps!r}")
        if not self.temperature_initial >= 0.0:
            raise BadConfigError(
                f"temperature_initial must be nonnegative, got {self.temperature_initial!r}"
            )
        if not 0.0 < self.cooling < 1.0:
            raise BadConfigError(f"cooling must be in (0, 1), got {self.cooling!r}")
        if not isinstance(self.seed, int) or not 0 <= self.seed <= MASK64:
            raise BadConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a maximization run.

    witnesses lists every graph found within WITNESS_TOL of best_value, in
    ascending bitset order, capped at WITNESS_CAP (truncated set if the cap
    cut anything off). seed is None for exhaustive runs.
    """

    objective: str
    k: int | None
    n: int
    best_value: float
    witnesses: tuple[Graph, ...]
    truncated: bool
    evaluations: int
    seed: int | None
    method: str

    def to_json(self) -> dict:
        return {
            "objective": self.objective,
            "k": self.k,
            "n": self.n,
            "best_value": self.best_value,
            "witnesses": [graph6_encode(g) for g in self.witnesses],
            "truncated": self.truncated,
            "evaluations": self.evaluations,
            "seed": self.seed,
            "method": self.method,
        }


def _check_objective(n: int, objective: str, k: int | None) -> int | None:
    if objective not in OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}; expected one of {OBJECTIVES}")
    if objective == "trace_sum":
        return None
    if k is None:
        raise KOutOfRangeError("objective 'kyfan_sum' needs k")
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool) or not 1 <= k <= n:
        raise KOutOfRangeError(f"k={k!r} outside [1, {n}]")
    return int(k)


def _adjacency_stack(flag_rows: np.ndarray, n: int) -> np.ndarray:
    """(B, m) edge flags -> (B, n, n) symmetric 0/1 float matrices."""
    batch = flag_rows.shape[0]
    a = np.zeros((batch, n, n), dtype=np.float64)
    if n > 1:
        is_, js = pair_table(n)
        vals = flag_rows.astype(np.float64)
        a[:, is_, js] = vals
        a[:, js, is_] = vals
    return a


def _pair_objective(a: np.ndarray, objective: str, k: int | None) -> np.ndarray:
    """Objective values for a (B, n, n) adjacency stack: norm of each graph
    plus norm of its complement."""
    batch, n = a.shape[0], a.shape[1]
    comp = np.ones((n, n)) - np.eye(n) - a
    w = np.linalg.eigvalsh(np.concatenate([a, comp]))
    aw = np.abs(w)
    if objective == "trace_sum":
        vals = aw.sum(axis=1)
    else:
        aw.sort(axis=1)
        vals = aw[:, n - k :].sum(axis=1)
    return vals[:batch] + vals[batch:]


def _graphs_from_indices(indices: np.ndarray, n: int) -> np.ndarray:
    m = n * (n - 1) // 2
    if m == 0:
        return np.zeros((indices.shape[0], 0), dtype=np.int64)
    shifts = np.arange(m, dtype=np.int64)
    return (indices[:, None] >> shifts[None, :]) & 1


def _exhaustive_block(start: int, stop: int, n: int, objective: str, k: int | None):
    idx = np.arange(start, stop, dtype=np.int64)
    vals = _pair_objective(_adjacency_stack(_graphs_from_indices(idx, n), n), objective, k)
    local_max = float(vals.max())
    sel = np.flatnonzero(vals >= local_max - WITNESS_TOL)
    clipped = sel.size > WITNESS_CAP + 1
    sel = sel[: WITNESS_CAP + 1]
    return local_max, idx[sel], vals[sel], clipped


def exhaustive_max(
    n: int, objective: str = "trace_sum", k: int | None = None, threads: int = 1
) -> SearchResult:
    """Exact maximum of the objective over all 2^(n(n-1)/2) labeled graphs.

    Hard-capped at n = 8 (2^28 graphs, several minutes); n = 8 warns about
    the runtime up front. Blocks of 2^16 graphs are evaluated with batched
    eigenvalue calls and merged in index order, so the result does not
    depend on the thread count.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if n > EXHAUSTIVE_MAX_N:
        raise OrderTooLargeError(
            f"exhaustive enumeration is capped at n = {EXHAUSTIVE_MAX_N}, got n = {n}"
        )
    if n == EXHAUSTIVE_MAX_N:
        warnings.warn(
            "exhaustive_max(8) enumerates 2^28 graphs; expect minutes of runtime",
            stacklevel=2,
        )
    k = _check_objective(n, objective, k)
    if threads < 1:
        raise ValueError(f"threads must be positive, got {threads}")
    total = 1 << (n * (n - 1) // 2)
    block = 1 << _BLOCK_BITS
    starts = range(0, total, block)

    def run(s):
        return _exhaustive_block(s, min(s + block, total), n, objective, k)

    if threads == 1 or len(starts) == 1:
        results = [run(s) for s in starts]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, starts))

    best = max(r[0] for r in results)
    idx_all: list[int] = []
    clipped_any = False
    for local_max, idx, vals, clipped in results:
        if local_max < best - WITNESS_TOL:
            continue
        keep = vals >= best - WITNESS_TOL
        idx_all.extend(int(i) for i in idx[keep])
        clipped_any = clipped_any or clipped
    truncated = clipped_any or len(idx_all) > WITNESS_CAP
    witnesses = tuple(Graph(n=n, bits=i) for i in idx_all[:WITNESS_CAP])
    return SearchResult(
        objective=objective,
        k=k,
        n=n,
        best_value=best,
        witnesses=witnesses,
        truncated=truncated,
        evaluations=total,
        seed=None,
        method="exhaustive",
    )


def _anneal_once(n: int, objective: str, k: int | None, cfg: SearchConfig, restart: int):
    """One annealing run. Each step scores every single-edge flip in one
    batched call; the best uphill flip is taken (ties to the smallest flip
    index), otherwise a random flip is accepted with probability
    exp(delta / T). Returns (best_value, best_bits, evaluations)."""
    m = n * (n - 1) // 2
    rng = SplitMix64((cfg.seed + restart) & MASK64)
    flags = np.zeros(m, dtype=np.int64)
    if m:
        start_bits = rng.next_bits(m)
        for t in range(m):
            flags[t] = (start_bits >> t) & 1
    cur_val = float(_pair_objective(_adjacency_stack(flags[None, :], n), objective, k)[0])
    evaluations = 1
    best_val, best_flags = cur_val, flags.copy()
    if m == 0:
        return best_val, 0, evaluations

    temp = cfg.temperature_initial
    eye = np.eye(m, dtype=np.int64)
    for _ in range(cfg.max_steps):
        neighbors = flags[None, :] ^ eye  # all single-edge flips
        vals = _pair_objective(_adjacency_stack(neighbors, n), objective, k)
        evaluations += m
        flip = int(np.argmax(vals))
        delta = vals[flip] - cur_val
        if delta <= 0.0:
            # no uphill move; try one random flip at the current temperature
            flip = rng.next_below(m)
            delta = vals[flip] - cur_val
            accept = (
                delta == 0.0 if temp <= 0.0 else math.exp(delta / temp) > rng.next_double()
            )
            if not accept:
                flip = -1
        if flip >= 0:
            flags[flip] ^= 1
            cur_val = float(vals[flip])
            if cur_val > best_val:
                best_val, best_flags = cur_val, flags.copy()
        elif temp < 1e-12 and vals.max() < cur_val - 1e-12:
            break  # frozen at a strict local maximum; nothing can change
        temp *= cfg.cooling

    bits = 0
    for t in range(m):
        if best_flags[t]:
            bits |= 1 << t
    return best_val, bits, evaluations


def local_search_max(
    n: int,
    objective: str = "trace_sum",
    k: int | None = None,
    cfg: SearchConfig | None = None,
    threads: int = 1,
) -> SearchResult:
    """Seeded annealing over edge flips; a certified lower bound on the
    maximum (best_value always comes from a concrete evaluated graph)."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if n > LOCAL_MAX_N:
        raise OrderTooLargeError(f"local search is capped at n = {LOCAL_MAX_N}, got n = {n}")
    k = _check_objective(n, objective, k)
    if cfg is None:
        cfg = SearchConfig()
    if threads < 1:
        raise ValueError(f"threads must be positive, got {threads}")

    def run(r):
        return _anneal_once(n, objective, k, cfg, r)

    if threads == 1 or cfg.restarts == 1:
        outcomes = [run(r) for r in range(cfg.restarts)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(run, range(cfg.restarts)))

    best = max(o[0] for o in outcomes)
    bits_set = sorted({o[1] for o in outcomes if o[0] >= best - WITNESS_TOL})
    truncated = len(bits_set) > WITNESS_CAP
    witnesses = tuple(Graph(n=n, bits=b) for b in bits_set[:WITNESS_CAP])
    return SearchResult(
        objective=objective,
        k=k,
        n=n,
        best_value=best,
        witnesses=witnesses,
        truncated=truncated,
        evaluations=sum(o[2] for o in outcomes),
        seed=cfg.seed,
        method="local",
    )


# ---------------------------------------------------------------------------
# Property sweeps


@dataclass(frozen=True)
class KindSweep:
    """Tally for one sweep kind: how many trials passed, the worst slack seen
    (for the complement eigenvalue kind, minus the largest margin), and the
    input that produced it."""

    kind: str
    trials: int
    passes: int
    violations: int
    worst_slack: float
    worst_witness: dict | None

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "trials": self.trials,
            "passes": self.passes,
            "violations": self.violations,
            "worst_slack": self.worst_slack,
            "worst_witness": self.worst_witness,
        }


@dataclass(frozen=True)
class SweepReport:
    seed: int
    n_range: tuple[int, int]
    results: tuple[KindSweep, ...] = field(default_factory=tuple)

    @property
    def total_violations(self) -> int:
        return sum(r.violations for r in self.results)

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "n_range": list(self.n_range),
            "total_violations": self.total_violations,
            "results": [r.to_json() for r in self.results],
        }


SWEEP_KINDS = ("main", "main_matrix", "shifted", "kyfan", "opnorm", "weyl")

# sweep kinds drawing from the same generator tag see identical samples,
# so e.g. main_matrix and shifted exercise the same random matrices
_KIND_TAGS = {
    "main": "graph",
    "weyl": "graph",
    "main_matrix": "sym_matrix",
    "shifted": "sym_matrix",
    "kyfan": "rect_matrix",
    "opnorm": "rect_matrix",
}


def _random_graph(rng: SplitMix64, n: int) -> Graph:
    return Graph(n=n, bits=rng.next_bits(n * (n - 1) // 2))


def _random_symmetric(rng: SplitMix64, n: int) -> DenseMatrix:
    a = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            a[i, j] = a[j, i] = rng.next_double()
    return DenseMatrix(a)


def _random_rect(rng: SplitMix64, m: int, n: int) -> DenseMatrix:
    return DenseMatrix(
        np.array([[rng.next_double() for _ in range(n)] for _ in range(m)])
    )


def property_sweep(
    trials: int,
    seed: int,
    n_range: tuple[int, int],
    kinds: list[str],
    tol: float = HOLD_TOL,
) -> SweepReport:
    """Run `trials` seeded random inputs through each requested checker.

    Graph kinds draw graphs with edge probability 1/2; matrix kinds draw
    uniform [0, 1) entries shaped as the checker demands. Any violation is
    reported with the offending input serialized in full. The kyfan kind
    checks k = 2 and, when the shape allows, k = 3 on every sample.
    """
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    if not isinstance(seed, int) or not 0 <= seed <= MASK64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed!r}")
    lo, hi = int(n_range[0]), int(n_range[1])
    if not 2 <= lo <= hi:
        raise ValueError(f"n_range must satisfy 2 <= lo <= hi, got ({lo}, {hi})")
    tallies = []
    for kind in kinds:
        if kind not in SWEEP_KINDS:
            raise ValueError(f"unknown sweep kind {kind!r}; expected one of {SWEEP_KINDS}")
        rng = SplitMix64(derive_seed(seed, _KIND_TAGS[kind]))
        passes = violations = 0
        worst_slack = math.inf
        worst_witness = None

        for _ in range(trials):
            size = lo + rng.next_below(hi - lo + 1)
            if kind in ("main", "weyl"):
                g = _random_graph(rng, size)
                if kind == "main":
                    verdict = check_bound("main", g, tol=tol)
                    ok, slack = verdict.holds, verdict.slack
                else:
                    report = weyl_complement_check(g, tol=tol)
                    ok = report.ok
                    slack = -max(report.margins) if report.margins else math.inf
                witness = {"graph6": graph6_encode(g)}
            elif kind in ("main_matrix", "shifted"):
                mat = _random_symmetric(rng, size)
                bound = "main" if kind == "main_matrix" else "shifted"
                verdict = check_bound(bound, mat, tol=tol)
                ok, slack = verdict.holds, verdict.slack
                witness = {"matrix": mat.to_json()}
            else:
                cols = lo + rng.next_below(hi - lo + 1)
                mat = _random_rect(rng, size, cols)
                if kind == "opnorm":
                    verdict = check_bound("opnorm", mat, tol=tol)
                    ok, slack = verdict.holds, verdict.slack
                else:
                    ks = [2] + ([3] if min(size, cols) >= 3 else [])
                    sub = [check_bound("kyfan", mat, k=kk, tol=tol) for kk in ks]
                    ok = all(v.holds for v in sub)
                    slack = min(v.slack for v in sub)
                witness = {"matrix": mat.to_json()}

            if ok:
                passes += 1
            else:
                violations += 1
            if slack < worst_slack:
                worst_slack = slack
                worst_witness = witness

        tallies.append(
            KindSweep(
                kind=kind,
                trials=trials,
                passes=passes,
                violations=violations,
                worst_slack=worst_slack,
                worst_witness=worst_witness,
            )
        )
    return SweepReport(seed=seed, n_range=(lo, hi), results=tuple(tallies))
