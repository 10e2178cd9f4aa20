"""Points of R_n and of the degenerate flag variety F_n^a over the rationals.

Subspaces of W = Q^n are stored by a canonical reduced echelon basis, so
equality and containment are exact.  Coordinates are 1-based in the API.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InvalidInput
from .exactlin import SpanBasis, determinant
from .fundmod import WedgeKey, allowed_indices, fundamental_basis
from .roots import check_root, positive_roots


@dataclass(frozen=True)
class Subspace:
    n: int
    rows: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def span(cls, n: int, vectors: Iterable[Sequence]) -> "Subspace":
        basis = SpanBasis()
        for v in vectors:
            if len(v) != n:
                raise InvalidInput(f"vector {v} has length {len(v)}, expected {n}")
            basis.reduce_into({k: Fraction(x) for k, x in enumerate(v) if x})
        rows = tuple(
            tuple(row.get(k, Fraction(0)) for k in range(n)) for row in basis.echelon()
        )
        return cls(n, rows)

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        return cls.span(n, [[1 if t == k else 0 for t in range(1, n + 1)] for k in indices])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __le__(self, other: "Subspace") -> bool:
        """Containment self ⊆ other."""
        basis = SpanBasis()
        for row in other.rows:
            basis.reduce_into({k: x for k, x in enumerate(row) if x})
        return all(not basis.residual({k: x for k, x in enumerate(r) if x}) for r in self.rows)

    def project(self, k: int) -> "Subspace":
        """Image under pr_k, which kills the k-th basis vector."""
        return Subspace.span(
            self.n, [tuple(0 if t == k - 1 else x for t, x in enumerate(r)) for r in self.rows]
        )

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]


def W(n: int, i: int, j: int) -> Subspace:
    return Subspace.coordinate(n, allowed_indices(n, i, j))


RnPoint = dict  # (i, j) -> Subspace


def orbit_rows(c: Mapping, n: int, i: int, j: int) -> list[list[Fraction]]:
    """Rows w_r + sum_{b >= j} c_{r,b} w_{b+1} for r = 1..i."""
    rows = []
    for r in range(1, i + 1):
        row = [Fraction(0)] * n
        row[r - 1] = Fraction(1)
        for b in range(j, n):
            row[b] = Fraction(c.get((r, b), 0))
        rows.append(row)
    return rows


def orbit_point(c: Mapping, n: int) -> RnPoint:
    """The point exp(sum c_{a,b} f_{a,b}) applied to the base point of R_n."""
    return {
        (i, j): Subspace.span(n, orbit_rows(c, n, i, j)) for i, j in positive_roots(n)
    }


def base_point(n: int) -> RnPoint:
    return orbit_point({}, n)


def is_rn_member(p: RnPoint, n: int) -> tuple[bool, list[str]]:
    """Check all defining conditions of R_n; list every violation found."""
    violations = []
    for i, j in positive_roots(n):
        V = p[(i, j)]
        if V.dim != i:
            violations.append(f"dim V[{i},{j}] = {V.dim} != {i}")
        if not V <= W(n, i, j):
            violations.append(f"V[{i},{j}] not inside W[{i},{j}]")
    for i, j in positive_roots(n):
        if i < j and not p[(i, j)] <= p[(i + 1, j)]:
            violations.append(f"V[{i},{j}] not inside V[{i + 1},{j}]")
    for i, j in positive_roots(n):
        if j < n - 1 and not p[(i, j)].project(j + 1) <= p[(i, j + 1)]:
            violations.append(f"pr_{j + 1} V[{i},{j}] not inside V[{i},{j + 1}]")
    return not violations, violations


def project_to_flag(p: RnPoint, n: int) -> list[Subspace]:
    ok, violations = is_rn_member(p, n)
    if not ok:
        raise InvalidInput("not a point of R_n: " + "; ".join(violations))
    return [p[(i, i)] for i in range(1, n)]


def is_fna_member(flag: Sequence[Subspace], n: int) -> bool:
    if len(flag) != n - 1:
        return False
    if any(V.dim != i for i, V in enumerate(flag, start=1)):
        return False
    return all(flag[i - 1].project(i + 1) <= flag[i] for i in range(1, n - 1))


def pluecker_of_subspace(V: Subspace, i: int, j: int) -> dict[WedgeKey, Fraction]:
    """Maximal minors of the echelon basis, columns indexed by admissible L."""
    check_root(V.n, i, j)
    if V.dim != i:
        raise InvalidInput(f"subspace has dimension {V.dim}, expected {i}")
    if not V <= W(V.n, i, j):
        raise InvalidInput(f"subspace not inside W[{i},{j}]")
    return {
        key: determinant([[row[l - 1] for l in key.L] for row in V.rows])
        for key in fundamental_basis(V.n, i, j)
    }


def pluecker_coordinates(p: RnPoint, n: int) -> dict[WedgeKey, Fraction]:
    out = {}
    for i, j in positive_roots(n):
        out.update(pluecker_of_subspace(p[(i, j)], i, j))
    return out


def random_parameters(n: int, rng: random.Random, spread: int = 5) -> dict:
    return {
        (a, b): Fraction(rng.randint(-spread, spread), rng.randint(1, spread))
        for a, b in positive_roots(n)
    }


def parameters_to_json(c: Mapping, n: int) -> dict:
    return {
        "n": n,
        "c": [{"i": a, "j": b, "value": str(Fraction(c.get((a, b), 0)))} for a, b in positive_roots(n)],
    }


def parameters_from_json(data: Mapping) -> tuple[int, dict]:
    try:
        n = int(data["n"])
        c = {(int(e["i"]), int(e["j"])): Fraction(str(e["value"])) for e in data.get("c", [])}
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"malformed parameter file: {exc}") from exc
    for a, b in c:
        check_root(n, a, b)
    return n, c


def rn_point_to_json(p: RnPoint) -> list[dict]:
    return [{"i": i, "j": j, "rows": V.to_json()} for (i, j), V in sorted(p.items())]
