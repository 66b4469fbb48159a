"""Interval representations X(i,j) of the linear quiver 1 <- 2 <- ... <- n.

``X(i,j)`` has a copy of the field at vertices ``i+1..j`` and identity maps
between them.  Hom is computed two ways: ``hom_dim_solver`` solves the
commutativity equations over the rationals, ``hom_dim`` uses the interval
rule ``a <= c < b <= d``.  The test suite checks the two agree.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import sympy


class _Zero:
    """The zero representation, returned by ``tau`` on projectives."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    __str__ = __repr__

    def __bool__(self):
        return False


ZERO = _Zero()


@dataclass(frozen=True, order=True)
class IntervalRep:
    n: int
    i: int
    j: int

    def __post_init__(self):
        if not 0 <= self.i < self.j <= self.n:
            raise ValueError(f"need 0 <= i < j <= n, got X({self.i},{self.j}) in A_{self.n}")

    def __str__(self):
        return f"X({self.i},{self.j})"

    def to_json(self):
        return {"i": self.i, "j": self.j}

    @classmethod
    def from_json(cls, n, data):
        return cls(n, int(data["i"]), int(data["j"]))


def all_intervals(n):
    return [IntervalRep(n, i, j) for i in range(n) for j in range(i + 1, n + 1)]


def dim_vector(V):
    return tuple(1 if V.i < v <= V.j else 0 for v in range(1, V.n + 1))


def rep_from_dim(v):
    """Inverse of ``dim_vector``; rejects vectors that are not contiguous 0/1 supports."""
    v = tuple(v)
    if any(x not in (0, 1) for x in v):
        raise ValueError(f"not a 0/1 vector: {v}")
    support = [p for p, x in enumerate(v, start=1) if x]
    if not support:
        raise ValueError("zero vector has no interval representation")
    lo, hi = support[0], support[-1]
    if hi - lo + 1 != len(support):
        raise ValueError(f"support of {v} is not contiguous")
    return IntervalRep(len(v), lo - 1, hi)


def tau(V):
    """Auslander-Reiten translate: X(i-1,j-1), or ZERO when X(i,j) is projective (i = 0)."""
    if V is ZERO or V.i == 0:
        return ZERO
    return IntervalRep(V.n, V.i - 1, V.j - 1)


def _check_same_n(V, W):
    if V is not ZERO and W is not ZERO and V.n != W.n:
        raise ValueError(f"representations live over different quivers (A_{V.n}, A_{W.n})")


def hom_dim(V, W):
    _check_same_n(V, W)
    if V is ZERO or W is ZERO:
        return 0
    return 1 if V.i <= W.i < V.j <= W.j else 0


def _interval_maps(V):
    """Dimensions per vertex and the matrix of each arrow (v+1 -> v), for v = 1..n-1."""
    dims = dim_vector(V)
    maps = []
    for v in range(1, V.n):
        src, dst = dims[v], dims[v - 1]
        maps.append(sympy.eye(1) if src and dst else sympy.zeros(dst, src))
    return dims, maps


@lru_cache(maxsize=None)
def hom_dim_solver(V, W):
    """dim Hom(V, W) from the linear equations theta_t * phi = rho * theta_s, solved exactly."""
    _check_same_n(V, W)
    if V is ZERO or W is ZERO:
        return 0
    n = V.n
    dv, phi = _interval_maps(V)
    dw, rho = _interval_maps(W)
    # unknown theta_v is a dw[v] x dv[v] block, flattened row-major
    offsets = list(itertools.accumulate((dw[v] * dv[v] for v in range(n)), initial=0))
    n_unknowns = offsets[-1]
    if n_unknowns == 0:
        return 0
    equations = []
    for a in range(n - 1):
        s, t = a + 1, a  # 0-based vertices of the arrow s -> t
        for r in range(dw[t]):
            for c in range(dv[s]):
                row = [0] * n_unknowns
                # (theta_t * phi)[r, c] = sum_m theta_t[r, m] phi[m, c]
                for m in range(dv[t]):
                    row[offsets[t] + r * dv[t] + m] += phi[a][m, c]
                # (rho * theta_s)[r, c] = sum_m rho[r, m] theta_s[m, c]
                for m in range(dw[s]):
                    row[offsets[s] + m * dv[s] + c] -= rho[a][r, m]
                equations.append(row)
    if not equations:
        return n_unknowns
    return n_unknowns - sympy.Matrix(equations).rank()


def ext1_dim(V, W):
    """dim Ext^1(V, W) = dim Hom(W, tau V) (hereditary AR formula)."""
    _check_same_n(V, W)
    return hom_dim(W, tau(V))


def euler_form(v, w):
    """<v, w> = sum v_i w_i - sum over arrows s -> t of v_s w_t."""
    if len(v) != len(w):
        raise ValueError("dimension vectors of different length")
    diag = sum(a * b for a, b in zip(v, w))
    arrows = sum(v[s] * w[s - 1] for s in range(1, len(v)))
    return diag - arrows


def is_exceptional_pair(V, W):
    _check_same_n(V, W)
    return hom_dim(W, V) == 0 and ext1_dim(W, V) == 0


def is_exceptional_sequence(seq):
    seq = list(seq)
    if len({V.n for V in seq}) > 1:
        return False
    for a, b in itertools.combinations(range(len(seq)), 2):
        if not is_exceptional_pair(seq[a], seq[b]):
            return False
    return True


def enumerate_exceptional_sequences(n, k=None):
    """Brute force: ordered k-tuples of distinct intervals filtered by the pairwise test."""
    k = n if k is None else k
    reps = all_intervals(n)
    out = []
    for tup in itertools.permutations(reps, k):
        if is_exceptional_sequence(tup):
            out.append(tup)
    return out


def format_sequence(seq):
    return "(" + ", ".join(str(V) for V in seq) + ")"
