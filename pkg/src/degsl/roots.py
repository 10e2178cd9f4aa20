"""Positive roots of sl_n, Dyck paths and the lattice sets S_m.

Roots are labelled by pairs ``(i, j)`` with ``1 <= i <= j <= n - 1``.
Exponent vectors are plain tuples indexed by ``positive_roots(n)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import InvalidInput


class RootIndex(NamedTuple):
    i: int
    j: int


ExponentVector = tuple  # tuple[int, ...] ordered like positive_roots(n)


def check_root(n: int, i: int, j: int) -> None:
    if not (1 <= i <= j <= n - 1):
        raise InvalidInput(f"({i},{j}) is not a positive root of sl_{n}")


@lru_cache(maxsize=None)
def positive_roots(n: int) -> tuple[RootIndex, ...]:
    """All (i, j) with 1 <= i <= j <= n-1, lexicographically."""
    if n < 2:
        raise InvalidInput(f"n must be >= 2, got {n}")
    return tuple(RootIndex(i, j) for i in range(1, n) for j in range(i, n))


@lru_cache(maxsize=None)
def root_position(n: int) -> dict[RootIndex, int]:
    return {r: k for k, r in enumerate(positive_roots(n))}


@dataclass(frozen=True)
class MultDegree:
    """A collection m = (m_{i,j}) of non-negative multiplicities.

    ``entries`` holds only the nonzero values, sorted by root.
    """

    n: int
    entries: tuple[tuple[RootIndex, int], ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise InvalidInput(f"n must be >= 2, got {self.n}")
        clean = {}
        for (i, j), m in self.entries:
            check_root(self.n, i, j)
            if m < 0:
                raise InvalidInput(f"negative multiplicity {m} at ({i},{j})")
            if (i, j) in clean:
                raise InvalidInput(f"duplicate entry for ({i},{j})")
            clean[RootIndex(i, j)] = int(m)
        object.__setattr__(
            self, "entries", tuple(sorted((r, m) for r, m in clean.items() if m))
        )

    @classmethod
    def from_dict(cls, n: int, mult: Mapping | None = None) -> "MultDegree":
        return cls(n, tuple((RootIndex(*k), v) for k, v in (mult or {}).items()))

    @classmethod
    def ones(cls, n: int) -> "MultDegree":
        return cls(n, tuple((r, 1) for r in positive_roots(n)))

    @classmethod
    def zero(cls, n: int) -> "MultDegree":
        return cls(n)

    def __getitem__(self, root) -> int:
        root = RootIndex(*root)
        for r, m in self.entries:
            if r == root:
                return m
        return 0

    def as_dict(self) -> dict[RootIndex, int]:
        return dict(self.entries)

    def vector(self) -> tuple[int, ...]:
        d = self.as_dict()
        return tuple(d.get(r, 0) for r in positive_roots(self.n))

    @property
    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def is_regular(self) -> bool:
        return len(self.entries) == len(positive_roots(self.n))

    def is_diagonal(self) -> bool:
        return all(r.i == r.j for r, _ in self.entries)

    def factors(self) -> tuple[RootIndex, ...]:
        """Tensor factor list: each root repeated m_{i,j} times, lex order."""
        return tuple(r for r, m in self.entries for _ in range(m))

    def __add__(self, other: "MultDegree") -> "MultDegree":
        if self.n != other.n:
            raise InvalidInput("cannot add multidegrees for different n")
        d = self.as_dict()
        for r, m in other.entries:
            d[r] = d.get(r, 0) + m
        return MultDegree.from_dict(self.n, d)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "mult": [{"i": r.i, "j": r.j, "m": m} for r, m in self.entries],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MultDegree":
        try:
            n = int(data["n"])
            items = [((int(e["i"]), int(e["j"])), int(e["m"])) for e in data.get("mult", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed MultDegree JSON: {exc}") from exc
        return cls(n, tuple((RootIndex(*k), m) for k, m in items))

    def __str__(self) -> str:
        return ";".join(f"{r.i},{r.j}:{m}" for r, m in self.entries) or "0"


def all_multidegrees(n: int, max_mult: int) -> Iterator[MultDegree]:
    """Every m with entries in 0..max_mult, in lexicographic vector order."""
    roots = positive_roots(n)
    for vec in itertools.product(range(max_mult + 1), repeat=len(roots)):
        yield MultDegree(n, tuple(zip(roots, vec)))


@lru_cache(maxsize=None)
def dyck_paths(n: int, i: int, j: int) -> tuple[tuple[RootIndex, ...], ...]:
    """All monotone root chains from (i, i) to (j, j) staying in p <= q."""
    check_root(n, i, j)
    out = []

    def walk(p, q, path):
        if (p, q) == (j, j):
            out.append(tuple(path))
            return
        if q < j:
            walk(p, q + 1, path + [RootIndex(p, q + 1)])
        if p < q and p < j:
            walk(p + 1, q, path + [RootIndex(p + 1, q)])

    walk(i, i, [RootIndex(i, i)])
    return tuple(out)


def path_bound(m: MultDegree, i: int, j: int) -> int:
    """D_{i,j}(m): the sum of m_{k,l} over i <= k <= l <= j."""
    check_root(m.n, i, j)
    return sum(v for r, v in m.entries if i <= r.i and r.j <= j)


@lru_cache(maxsize=None)
def _path_index_sets(n: int) -> tuple[tuple[int, int, tuple[int, ...]], ...]:
    pos = root_position(n)
    out = []
    for a, b in positive_roots(n):
        for path in dyck_paths(n, a, b):
            out.append((a, b, tuple(pos[r] for r in path)))
    return tuple(out)


def in_polytope(m: MultDegree, s: Iterable[int]) -> bool:
    s = tuple(s)
    bounds = {r: path_bound(m, *r) for r in positive_roots(m.n)}
    return all(
        sum(s[k] for k in idx) <= bounds[(a, b)] for a, b, idx in _path_index_sets(m.n)
    )


def enumerate_polytope(m: MultDegree) -> list[ExponentVector]:
    """Lattice points of S_m, graded by total degree then lexicographic.

    Box scan over 0 <= s_{i,j} <= D_{i,j}(m) with every Dyck-path
    constraint checked.  Coordinates follow ``positive_roots(m.n)``.
    """
    n = m.n
    roots = positive_roots(n)
    bounds = {r: path_bound(m, *r) for r in roots}
    constraints = [(bounds[(a, b)], idx) for a, b, idx in _path_index_sets(n)]
    # check each constraint as soon as its last coordinate is assigned
    last = {}
    for bound, idx in constraints:
        last.setdefault(max(idx), []).append((bound, idx))
    result = []
    s = [0] * len(roots)

    def rec(k):
        if k == len(roots):
            result.append(tuple(s))
            return
        for v in range(bounds[roots[k]] + 1):
            s[k] = v
            if all(sum(s[t] for t in idx) <= bound for bound, idx in last.get(k, ())):
                rec(k + 1)
        s[k] = 0

    rec(0)
    result.sort(key=lambda v: (sum(v), v))
    return result


def graded_counts(points: Iterable[ExponentVector]) -> list[int]:
    counts: list[int] = []
    for p in points:
        d = sum(p)
        while len(counts) <= d:
            counts.append(0)
        counts[d] += 1
    return counts


def weyl_dimension(n: int, coeffs: Mapping[int, int]) -> int:
    """dim V_lambda for lambda = sum coeffs[k] * omega_k (Weyl dimension formula)."""
    # partition: lambda_t = sum_{k >= t} coeffs[k]
    lam = [sum(coeffs.get(k, 0) for k in range(t, n)) for t in range(1, n + 1)]
    num = Fraction(1)
    for a in range(n):
        for b in range(a + 1, n):
            num *= Fraction(lam[a] - lam[b] + b - a, b - a)
    assert num.denominator == 1
    return int(num)
