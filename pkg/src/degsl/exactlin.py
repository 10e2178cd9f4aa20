"""Exact sparse linear algebra over the rationals.

Sparse vectors are plain dicts ``key -> Fraction`` (ints are accepted as
coefficients) with no stored zeros.  Keys of one universe must be mutually
comparable; pivots are always the smallest key of a row.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from .errors import InvalidInput

SparseVector = dict


def clean(v: dict) -> dict:
    return {k: c for k, c in v.items() if c}


def add_scaled(target: dict, v: dict, c) -> None:
    """target += c * v, in place, dropping cancelled entries."""
    for k, x in v.items():
        y = target.get(k, 0) + c * x
        if y:
            target[k] = y
        else:
            target.pop(k, None)


def scale(v: dict, c) -> dict:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


class SpanBasis:
    """Incrementally maintained reduced row echelon basis.

    Every row has pivot entry 1 at its smallest key, and no other row has a
    nonzero entry in that column.  Not thread-safe; own one per task.
    """

    def __init__(self):
        self.rows: dict[Hashable, dict] = {}  # pivot key -> row

    def __len__(self) -> int:
        return len(self.rows)

    def pivots(self) -> list:
        return sorted(self.rows)

    def echelon(self) -> list[dict]:
        return [self.rows[p] for p in sorted(self.rows)]

    def residual(self, v: dict) -> dict:
        """v minus its projection onto the span (does not modify the basis)."""
        r = dict(v)
        for k in [k for k in v if k in self.rows]:
            c = r.get(k)
            if c:
                add_scaled(r, self.rows[k], -c)
        return r

    def __contains__(self, v: dict) -> bool:
        return not self.residual(v)

    def reduce_into(self, v: dict) -> tuple[dict, bool]:
        """Reduce v against the basis; extend the basis if a residual remains."""
        r = self.residual(v)
        if not r:
            return r, False
        p = min(r)
        inv = Fraction(1) / r[p]
        row = {k: c * inv for k, c in r.items()}
        for q, other in self.rows.items():
            c = other.get(p)
            if c:
                add_scaled(other, row, -c)
        self.rows[p] = row
        return r, True

    def extend(self, vectors: Iterable[dict]) -> int:
        """Reduce every vector in; return how many enlarged the span."""
        return sum(self.reduce_into(v)[1] for v in vectors)


def rank(vectors: Iterable[dict]) -> int:
    basis = SpanBasis()
    basis.extend(vectors)
    return len(basis)


def reduce_into(basis: SpanBasis, v: dict) -> tuple[dict, bool]:
    return basis.reduce_into(v)


def _as_matrix(m) -> list[list]:
    rows = [list(r) for r in m]
    for r in rows:
        if len(r) != len(rows):
            raise InvalidInput("determinant requires a square matrix")
    return rows


def determinant(m: Sequence[Sequence]) -> Fraction:
    """Exact determinant by Bareiss fraction-free elimination.

    Rational entries are first cleared to a common denominator so the
    elimination itself runs on integers.
    """
    a = _as_matrix(m)
    size = len(a)
    if size == 0:
        return Fraction(1)
    fr = [[Fraction(x) for x in row] for row in a]
    den = math.lcm(*(x.denominator for row in fr for x in row))
    ints = [[int(x * den) for x in row] for row in fr]
    sign = 1
    prev = 1
    for k in range(size - 1):
        if ints[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if ints[r][k]), None)
            if swap is None:
                return Fraction(0)
            ints[k], ints[swap] = ints[swap], ints[k]
            sign = -sign
        pivot = ints[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                ints[i][j] = (ints[i][j] * pivot - ints[i][k] * ints[k][j]) // prev
            ints[i][k] = 0
        prev = pivot
    return Fraction(sign * ints[-1][-1], den**size)


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given as a sequence of distinct comparables."""
    sign = 1
    seen = list(perm)
    for a in range(len(seen)):
        for b in range(a + 1, len(seen)):
            if seen[a] > seen[b]:
                sign = -sign
    return sign


def sylvester_terms(M, N, k: int) -> tuple[Fraction, Fraction]:
    """Return (det M * det N, sum over r_1<...<r_k of det M' * det N').

    M' has columns r_1..r_k of M replaced by the first k columns of N;
    N' has its first k columns replaced by columns r_1..r_k of M.
    """
    M = _as_matrix(M)
    N = _as_matrix(N)
    s = len(M)
    if len(N) != s:
        raise InvalidInput("Sylvester identity needs two matrices of equal size")
    if not 1 <= k <= s:
        raise InvalidInput(f"k must satisfy 1 <= k <= {s}, got {k}")
    lhs = determinant(M) * determinant(N)
    total = Fraction(0)
    for cols in itertools.combinations(range(s), k):
        Mp = [row[:] for row in M]
        Np = [row[:] for row in N]
        for t, c in enumerate(cols):
            for r in range(s):
                Mp[r][c] = N[r][t]
                Np[r][t] = M[r][c]
        total += determinant(Mp) * determinant(Np)
    return lhs, total


def sylvester_check(M, N, k: int) -> bool:
    lhs, rhs = sylvester_terms(M, N, k)
    return lhs - rhs == 0
