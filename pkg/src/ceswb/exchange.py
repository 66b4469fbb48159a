"""Exchange matrices of the linear A_n quiver, mutation and c-matrices.

Vertices are 0-based throughout the library: mutable vertex ``k`` of an
``n x 2n`` framed matrix is row ``k``, and its frozen partner is column
``n + k``.  The arrow convention is ``b[i][j] = #(i -> j) - #(j -> i)``.
"""
from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from ._bounds import check_bound


@dataclass(frozen=True)
class ExchangeMatrix:
    """An ``n_mutable x n_total`` integer matrix with skew-symmetric mutable block."""

    n_mutable: int
    n_total: int
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if self.n_mutable < 1 or self.n_total < self.n_mutable:
            raise ValueError(f"bad shape {self.n_mutable}x{self.n_total}")
        if len(rows) != self.n_mutable or any(len(r) != self.n_total for r in rows):
            raise ValueError(f"entries do not have shape {self.n_mutable}x{self.n_total}")
        n = self.n_mutable
        for i in range(n):
            for j in range(i, n):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError(f"mutable block is not skew-symmetric at ({i}, {j})")

    @classmethod
    def _trusted(cls, n_mutable, n_total, entries):
        """Skip validation; for results of mutation, which preserves the invariants."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "n_mutable", n_mutable)
        object.__setattr__(obj, "n_total", n_total)
        object.__setattr__(obj, "entries", entries)
        return obj

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def is_framed_shape(self):
        return self.n_total == 2 * self.n_mutable

    def mutable_block(self):
        n = self.n_mutable
        return tuple(row[:n] for row in self.entries)

    def to_json(self):
        return {
            "n_mutable": self.n_mutable,
            "n_total": self.n_total,
            "entries": [list(row) for row in self.entries],
        }

    @classmethod
    def from_json(cls, data):
        return cls(int(data["n_mutable"]), int(data["n_total"]), data["entries"])

    def __str__(self):
        n = self.n_mutable
        width = max(len(str(x)) for row in self.entries for x in row)
        lines = []
        for row in self.entries:
            left = " ".join(str(x).rjust(width) for x in row[:n])
            right = " ".join(str(x).rjust(width) for x in row[n:])
            lines.append(f"[ {left} | {right} ]" if right else f"[ {left} ]")
        return "\n".join(lines)


@dataclass(frozen=True)
class CMatrix:
    """Rows are the c-vectors; row ``i`` belongs to mutable vertex ``i``."""

    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in self.rows))
        if any(len(r) != len(self.rows) for r in self.rows):
            raise ValueError("c-matrix must be square")

    @property
    def n(self):
        return len(self.rows)

    def row_sign(self, i):
        """+1 for a nonnegative row, -1 for a nonpositive row; ValueError otherwise."""
        row = self.rows[i]
        if not any(row):
            raise ValueError(f"row {i} is zero")
        if all(x >= 0 for x in row):
            return 1
        if all(x <= 0 for x in row):
            return -1
        raise ValueError(f"row {i} is not sign-coherent: {row}")

    def is_sign_coherent(self):
        try:
            for i in range(self.n):
                self.row_sign(i)
        except ValueError:
            return False
        return True

    def has_interval_rows(self):
        """Every |row| is a 0/1 vector with contiguous nonempty support."""
        for row in self.rows:
            absrow = [abs(x) for x in row]
            if any(x > 1 for x in absrow):
                return False
            support = [i for i, x in enumerate(absrow) if x]
            if not support or support[-1] - support[0] + 1 != len(support):
                return False
        return True

    def canonical(self):
        return canonical_cmatrix(self)

    def to_json(self):
        return [list(r) for r in self.rows]

    @classmethod
    def from_json(cls, data):
        if isinstance(data, dict):
            data = data["rows"]
        return cls(data)

    def __str__(self):
        width = max(len(str(x)) for row in self.rows for x in row)
        return "\n".join("[ " + " ".join(str(x).rjust(width) for x in row) + " ]" for row in self.rows)


@dataclass(frozen=True)
class Seed:
    matrix: ExchangeMatrix
    history: tuple = field(default=())

    def mutate(self, k):
        return Seed(mutate(self.matrix, k), self.history + (k,))


def linear_quiver_matrix(n):
    """Exchange matrix of 1 <- 2 <- ... <- n (vertex i+1 maps to vertex i)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
        rows[i - 1][i] = -1
    return ExchangeMatrix(n, n, rows)


def framed_matrix(n):
    """Linear quiver plus one frozen vertex per mutable vertex, with arrows i -> n+i."""
    left = linear_quiver_matrix(n).entries
    rows = [list(left[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    return ExchangeMatrix(n, 2 * n, rows)


def mutate(B, k):
    """Matrix mutation of ``B`` at mutable index ``k``; ``B`` is not modified."""
    if not 0 <= k < B.n_mutable:
        raise IndexError(f"mutation index {k} out of range for {B.n_mutable} mutable vertices")
    b = B.entries
    col_k = [b[i][k] for i in range(B.n_mutable)]
    row_k = b[k]
    out = []
    for i, row in enumerate(b):
        if i == k:
            out.append(tuple(-x for x in row))
            continue
        bik = col_k[i]
        if bik == 0:
            new = list(row)
        else:
            abik = abs(bik)
            new = [row[j] + (abik * row_k[j] + bik * abs(row_k[j])) // 2 for j in range(B.n_total)]
        new[k] = -row[k]
        out.append(tuple(new))
    return ExchangeMatrix._trusted(B.n_mutable, B.n_total, tuple(out))


def mutate_sequence(B, seq):
    for k in seq:
        B = mutate(B, k)
    return B


def c_matrix_of(B):
    if not B.is_framed_shape:
        raise ValueError(f"expected framed shape n x 2n, got {B.n_mutable}x{B.n_total}")
    n = B.n_mutable
    return CMatrix(tuple(row[n:] for row in B.entries))


def canonical_cmatrix(C):
    return CMatrix(tuple(sorted(C.rows)))


def frozen_canonical_form(B):
    """Representative of ``B`` under simultaneous permutation of mutable rows and columns.

    The key compares the frozen block first.  c-vectors of a reachable seed
    are linearly independent, hence distinct, so sorting rows by their frozen
    part attains the minimum over all permutations.
    """
    n = B.n_mutable
    frozen = [row[n:] for row in B.entries]
    if len(set(frozen)) < n:
        return frozen_canonical_form_bruteforce(B)
    order = sorted(range(n), key=lambda i: frozen[i])
    return _permute(B, order)


def frozen_canonical_form_bruteforce(B):
    """Minimum over all ``n!`` simultaneous permutations (reference version)."""
    n = B.n_mutable
    if n > 8:
        raise ValueError("brute-force canonical form is limited to n <= 8")
    best = None
    for order in itertools.permutations(range(n)):
        cand = _permute(B, order)
        key = _canon_key(cand)
        if best is None or key < best[0]:
            best = (key, cand)
    return best[1]


def _canon_key(B):
    n = B.n_mutable
    return (tuple(row[n:] for row in B.entries), tuple(row[:n] for row in B.entries))


def _permute(B, order):
    n = B.n_mutable
    rows = []
    for i in order:
        row = B.entries[i]
        rows.append(tuple(row[j] for j in order) + row[n:])
    return ExchangeMatrix(n, B.n_total, tuple(rows))


def exchange_graph(n, bound=None):
    """Breadth-first closure of ``framed_matrix(n)``, one seed per frozen-isomorphism class.

    Seeds are returned in discovery order, mutating vertices in increasing index.
    """
    check_bound(n, bound)
    start = Seed(framed_matrix(n))
    seen = {frozen_canonical_form(start.matrix)}
    order = [start]
    queue = deque([start])
    while queue:
        seed = queue.popleft()
        for k in range(n):
            nxt = seed.mutate(k)
            key = frozen_canonical_form(nxt.matrix)
            if key not in seen:
                seen.add(key)
                order.append(nxt)
                queue.append(nxt)
    return order


def enumerate_cmatrices(n, bound=None):
    """The set of canonical (row-sorted) c-matrices reachable from the framed quiver."""
    return {canonical_cmatrix(c_matrix_of(s.matrix)) for s in exchange_graph(n, bound)}


def green_vertices(B):
    """Mutable vertices with no incoming arrow from a frozen vertex."""
    C = c_matrix_of(B)
    return {i for i, row in enumerate(C.rows) if all(x >= 0 for x in row)}


def red_vertices(B):
    return set(range(B.n_mutable)) - green_vertices(B)


def is_reddening(seq, n):
    """True if mutating ``framed_matrix(n)`` along ``seq`` (0-based) leaves every vertex red."""
    B = mutate_sequence(framed_matrix(n), seq)
    return not green_vertices(B)


def random_reachable_seed(n, steps, rng=None):
    rng = rng if rng is not None else random.Random()
    seed = Seed(framed_matrix(n))
    last = None
    for _ in range(steps):
        choices = [k for k in range(n) if k != last] or [0]
        last = rng.choice(choices)
        seed = seed.mutate(last)
    return seed


def _mutable_digraph(B):
    n = B.n_mutable
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    for i in range(n):
        for j in range(n):
            if B[i, j] > 0:
                g.add_edge(i, j, weight=B[i, j])
    return g


def check_mutation_class_shape(B):
    """Structural test for quivers mutation-equivalent to the linear A_n quiver.

    Checks, on the mutable part: at most one arrow between two vertices;
    every cycle of the underlying graph is an oriented 3-cycle; at most four
    neighbours per vertex; a vertex with four neighbours sits in two
    3-cycles; a vertex with three neighbours sits in exactly one 3-cycle.
    """
    n = B.n_mutable
    if any(abs(B[i, j]) > 1 for i in range(n) for j in range(n)):
        return False
    g = _mutable_digraph(B)
    und = g.to_undirected()
    triangles = []
    for block in nx.biconnected_components(und):
        if len(block) == 2:
            continue
        if len(block) != 3 or und.subgraph(block).number_of_edges() != 3:
            return False
        a, b, c = sorted(block)
        oriented = (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, a)) or (
            g.has_edge(b, a) and g.has_edge(c, b) and g.has_edge(a, c)
        )
        if not oriented:
            return False
        triangles.append(frozenset(block))
    for v in und.nodes:
        deg = und.degree(v)
        in_tri = sum(1 for t in triangles if v in t)
        if deg > 4:
            return False
        if deg == 4 and in_tri != 2:
            return False
        if deg == 3 and in_tri != 1:
            return False
    return True
