"""Simple undirected graphs as pair bitsets, plus Paley graphs over prime-power
fields and exact strong-regularity tests.

A graph on n vertices stores its edges in a single integer bitset over the
n(n-1)/2 unordered pairs, pair (i, j) with i < j living at bit j(j-1)/2 + i.
That index order is column-major on the upper triangle, which is also the bit
order of the graph6 format, so serialization is a straight repack.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NotOneModFourError, NotPrimePowerError, TooLargeError
from .linalg import DenseMatrix

PALEY_MAX_Q = 10000


def pair_index(i: int, j: int) -> int:
    """Bit position of the unordered pair {i, j}, i < j required."""
    if not 0 <= i < j:
        raise ValueError(f"need 0 <= i < j, got ({i}, {j})")
    return j * (j - 1) // 2 + i


@lru_cache(maxsize=None)
def pair_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Arrays (I, J) with (I[k], J[k]) the endpoints of the pair at bit k."""
    if n < 2:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    js = np.repeat(np.arange(1, n, dtype=np.int64), np.arange(1, n, dtype=np.int64))
    is_ = np.concatenate([np.arange(j, dtype=np.int64) for j in range(1, n)])
    is_.setflags(write=False)
    js.setflags(write=False)
    return is_, js


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertex count plus edge bitset."""

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"graph order must be positive, got {self.n}")
        m = self.n * (self.n - 1) // 2
        if not 0 <= self.bits < (1 << m):
            raise ValueError(f"edge bitset out of range for order {self.n}")

    @property
    def pair_count(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def edge_count(self) -> int:
        return self.bits.bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        if i > j:
            i, j = j, i
        if not 0 <= i < j < self.n:
            raise ValueError(f"vertex pair ({i}, {j}) out of range for order {self.n}")
        return bool((self.bits >> pair_index(i, j)) & 1)

    def edge_flags(self) -> np.ndarray:
        """Boolean array over the pair bits, index k = pair k."""
        m = self.pair_count
        if m == 0:
            return np.zeros(0, dtype=bool)
        raw = np.frombuffer(self.bits.to_bytes((m + 7) // 8, "little"), dtype=np.uint8)
        return np.unpackbits(raw, bitorder="little")[:m].astype(bool)

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as (i, j) with i < j, in bit order."""
        flags = self.edge_flags()
        is_, js = pair_table(self.n)
        return [(int(a), int(b)) for a, b in zip(is_[flags], js[flags])]

    def degrees(self) -> list[int]:
        flags = self.edge_flags()
        is_, js = pair_table(self.n)
        deg = np.zeros(self.n, dtype=np.int64)
        np.add.at(deg, is_[flags], 1)
        np.add.at(deg, js[flags], 1)
        return [int(d) for d in deg]

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[i, j] for i, j in self.edges()]}

    @classmethod
    def from_json(cls, obj: dict) -> "Graph":
        try:
            n = int(obj["n"])
            edges = obj["edges"]
        except KeyError as exc:
            raise ValueError(f"graph JSON missing field {exc}") from exc
        return graph_from_edges(n, [(int(e[0]), int(e[1])) for e in edges])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def graph_from_edges(n: int, edges) -> Graph:
    """Build a graph from 0-based vertex pairs; order within a pair is ignored."""
    bits = 0
    for i, j in edges:
        if i == j:
            raise ValueError(f"self-loop ({i}, {j}) not allowed")
        if i > j:
            i, j = j, i
        if not 0 <= i < j < n:
            raise ValueError(f"edge ({i}, {j}) out of range for order {n}")
        bits |= 1 << pair_index(i, j)
    return Graph(n=n, bits=bits)


def empty_graph(n: int) -> Graph:
    return Graph(n=n, bits=0)


def complete_graph(n: int) -> Graph:
    return Graph(n=n, bits=(1 << (n * (n - 1) // 2)) - 1)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    mask = (1 << g.pair_count) - 1
    return Graph(n=g.n, bits=g.bits ^ mask)


def adjacency_matrix(g: Graph) -> DenseMatrix:
    """Symmetric (0,1)-matrix with zero diagonal; entry (i, j) = 1 iff edge."""
    a = np.zeros((g.n, g.n), dtype=np.float64)
    flags = g.edge_flags()
    is_, js = pair_table(g.n)
    a[is_[flags], js[flags]] = 1.0
    a[js[flags], is_[flags]] = 1.0
    return DenseMatrix(a)


# ---------------------------------------------------------------------------
# graph6 serialization


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n <= 62:
        prefix = [n + 63]
    elif n <= 258047:
        prefix = [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    elif n <= 68719476735:
        prefix = [126, 126] + [((n >> (6 * s)) & 63) + 63 for s in range(5, -1, -1)]
    else:
        raise ValueError(f"order {n} too large for graph6")
    flags = g.edge_flags()
    body = []
    for start in range(0, len(flags), 6):
        chunk = flags[start : start + 6]
        val = 0
        for t, bit in enumerate(chunk):
            if bit:
                val |= 1 << (5 - t)
        body.append(val + 63)
    return "".join(chr(c) for c in prefix + body)


def graph6_decode(s: str) -> Graph:
    data = [ord(c) - 63 for c in s.strip()]
    if any(v < 0 or v > 63 for v in data):
        raise ValueError("graph6 string contains characters outside the 63..126 range")
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] != 63:
        if len(data) < 4:
            raise ValueError("truncated graph6 size prefix")
        n, pos = (data[1] << 12) | (data[2] << 6) | data[3], 4
    else:
        if len(data) < 8:
            raise ValueError("truncated graph6 size prefix")
        n = 0
        for v in data[2:8]:
            n = (n << 6) | v
        pos = 8
    if n < 1:
        raise ValueError(f"graph6 order {n} must be positive")
    m = n * (n - 1) // 2
    need = (m + 5) // 6
    if len(data) - pos != need:
        raise ValueError(f"graph6 body has {len(data) - pos} groups, expected {need}")
    bits = 0
    k = 0
    for v in data[pos:]:
        for t in range(6):
            if k >= m:
                if (v >> (5 - t)) & 1:
                    raise ValueError("nonzero padding bits in graph6 body")
                continue
            if (v >> (5 - t)) & 1:
                bits |= 1 << k
            k += 1
    return Graph(n=n, bits=bits)


# ---------------------------------------------------------------------------
# Strong regularity


@dataclass(frozen=True)
class SRGParams:
    """Strongly-regular parameter tuple (n, k, lam, mu)."""

    n: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        # row-sum identity every strongly regular graph satisfies
        if self.k * (self.k - self.lam - 1) != (self.n - self.k - 1) * self.mu:
            raise ValueError(
                f"infeasible parameters ({self.n}, {self.k}, {self.lam}, {self.mu})"
            )


def srg_params(g: Graph) -> SRGParams | None:
    """Exact integer strong-regularity test.

    Returns the parameter tuple iff the graph is regular of degree k and
    A^2 = k I + lam A + mu (J - I - A) holds over the integers. Complete and
    empty graphs are excluded (mu resp. lam undefined).
    """
    n = g.n
    if n < 3:
        return None
    a = adjacency_matrix(g).array.astype(np.int64)
    deg = a.sum(axis=1)
    k = int(deg[0])
    if not (deg == k).all():
        return None
    if k == 0 or k == n - 1:
        return None
    a2 = a @ a
    adj_off = a == 1
    non_off = (a == 0) & ~np.eye(n, dtype=bool)
    lam_vals = a2[adj_off]
    mu_vals = a2[non_off]
    lam = int(lam_vals[0])
    mu = int(mu_vals[0]) if mu_vals.size else 0
    if not (lam_vals == lam).all() or not (mu_vals == mu).all():
        return None
    if not (np.diag(a2) == k).all():
        return None
    return SRGParams(n=n, k=k, lam=lam, mu=mu)


def is_conference(g: Graph) -> bool:
    """True iff g is strongly regular with the self-paired parameter family
    (n, (n-1)/2, (n-5)/4, (n-1)/4), which forces n = 1 (mod 4)."""
    n = g.n
    if n % 4 != 1 or n < 5:
        return False
    params = srg_params(g)
    if params is None:
        return False
    return params == SRGParams(n, (n - 1) // 2, (n - 5) // 4, (n - 1) // 4)


# ---------------------------------------------------------------------------
# Finite fields and Paley graphs
#
# GF(p^e) elements are coefficient vectors (c0, ..., c_{e-1}) of polynomials
# c0 + c1 x + ... modulo a monic irreducible. Vertex v of a Paley graph is the
# element whose coefficients are the base-p digits of v, constant term most
# significant: the elements in lexicographic coefficient order, constants
# first. Differences never touch the modulus (subtraction is digitwise), so
# adjacency reduces to a table lookup on difference codes.


def _min_prime_factor(q: int) -> int:
    if q % 2 == 0:
        return 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return f
        f += 2
    return q


def _prime_power_split(q: int) -> tuple[int, int] | None:
    """(p, e) with q = p^e and p prime, or None."""
    if q < 2:
        return None
    p = _min_prime_factor(q)
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    return (p, e) if q == 1 else None


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    """Product of polynomials a, b (low-to-high coeffs) modulo monic f, over F_p."""
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    e = len(f) - 1
    for i in range(len(res) - 1, e - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for t in range(e):
                res[i - e + t] = (res[i - e + t] - c * f[t]) % p
    return _poly_trim(res[:e])


def _poly_powmod_x(exp: int, f: list[int], p: int) -> list[int]:
    """x^exp modulo f over F_p."""
    result = [1]
    base = [0, 1]
    while exp:
        if exp & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        exp >>= 1
    return result


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    r = _poly_trim(list(a))
    inv = pow(b[-1], p - 2, p)
    while len(r) >= len(b):
        c = (r[-1] * inv) % p
        shift = len(r) - len(b)
        for t in range(len(b)):
            r[shift + t] = (r[shift + t] - c * b[t]) % p
        _poly_trim(r)
    return r


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _is_irreducible(f: list[int], p: int) -> bool:
    """Rabin test for a monic polynomial f (low-to-high, leading coeff 1)."""
    e = len(f) - 1
    xq = _poly_powmod_x(p**e, f, p)
    # x^(p^e) must equal x mod f
    if _poly_trim(list(xq)) != [0, 1]:
        return False
    d = e
    primes = set()
    t = 2
    while t * t <= d:
        if d % t == 0:
            primes.add(t)
            while d % t == 0:
                d //= t
        t += 1
    if d > 1:
        primes.add(d)
    for r in primes:
        xr = _poly_powmod_x(p ** (e // r), f, p)
        diff = list(xr) + [0] * max(0, 2 - len(xr))
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(f, _poly_trim(diff), p)
        if len(_poly_trim(g)) != 1:
            return False
    return True


def _find_irreducible(p: int, e: int) -> list[int]:
    """First monic irreducible of degree e over F_p, coefficients scanned in
    lexicographic order with the constant term first."""
    for tail in itertools.product(range(p), repeat=e):
        f = list(tail) + [1]
        if _is_irreducible(f, p):
            return f
    raise AssertionError(f"no irreducible of degree {e} over F_{p}")


def _field_square_codes(p: int, e: int, f: list[int]) -> set[int]:
    """Codes of the nonzero squares of GF(p^e), code = sum of c_t * p^(e-1-t)."""
    weights = [p ** (e - 1 - t) for t in range(e)]
    squares = set()
    for v in range(1, p**e):
        coeffs = [(v // weights[t]) % p for t in range(e)]
        sq = _poly_mulmod(coeffs, coeffs, f, p)
        sq = sq + [0] * (e - len(sq))
        squares.add(sum(sq[t] * weights[t] for t in range(e)))
    return squares


def paley_graph(q: int) -> Graph:
    """Paley graph on the q elements of GF(q): u ~ v iff u - v is a nonzero square.

    Needs q = p^e with q = 1 (mod 4) so that -1 is a square and the relation
    is symmetric. Vertices are field elements in lexicographic coefficient
    order, constants first.
    """
    if q > PALEY_MAX_Q:
        raise TooLargeError(f"q = {q} exceeds the supported maximum {PALEY_MAX_Q}")
    split = _prime_power_split(q)
    if split is None:
        raise NotPrimePowerError(f"q = {q} is not a prime power")
    if q % 4 != 1:
        raise NotOneModFourError(f"q = {q} is not 1 (mod 4)")
    p, e = split
    if e == 1:
        sq_flags = np.zeros(q, dtype=bool)
        sq_flags[[(x * x) % q for x in range(1, q)]] = True
    else:
        f = _find_irreducible(p, e)
        codes = _field_square_codes(p, e, f)
        sq_flags = np.zeros(q, dtype=bool)
        sq_flags[sorted(codes)] = True

    weights = np.array([p ** (e - 1 - t) for t in range(e)], dtype=np.int64)
    verts = np.arange(q, dtype=np.int64)
    digits = (verts[:, None] // weights[None, :]) % p  # (q, e)

    m = q * (q - 1) // 2
    flags = np.zeros(m, dtype=bool)
    # pair bits for column j occupy the contiguous slice [j(j-1)/2, j(j+1)/2)
    block = max(1, (1 << 22) // max(q * e, 1))
    for j0 in range(1, q, block):
        j1 = min(q, j0 + block)
        diff = (digits[j0:j1, None, :] - digits[None, :, :]) % p  # (B, q, e)
        codes = diff @ weights  # (B, q)
        adj = sq_flags[codes]
        for j in range(j0, j1):
            start = j * (j - 1) // 2
            flags[start : start + j] = adj[j - j0, :j]
    packed = np.packbits(flags, bitorder="little")
    bits = int.from_bytes(packed.tobytes(), "little")
    return Graph(n=q, bits=bits)
