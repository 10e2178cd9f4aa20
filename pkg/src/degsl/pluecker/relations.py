"""Generalized Plücker relations R_{L,P}^{(i1,j1),(i2,j2);k}."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from ..errors import InvalidInput
from ..fundmod import allowed_indices
from ..poly import Poly, mono_from_vars
from ..roots import check_root, positive_roots
from .psi import verify_vanishing
from .variables import XVar, canonicalize


@dataclass(frozen=True, order=True)
class RelationData:
    i1: int
    j1: int
    i2: int
    j2: int
    k: int
    L: tuple[int, ...]
    P: tuple[int, ...]

    def validate(self, n: int) -> None:
        """Raise InvalidInput naming the first violated constraint."""
        try:
            check_root(n, self.i1, self.j1)
            check_root(n, self.i2, self.j2)
        except InvalidInput as exc:
            raise InvalidInput(f"relation data: {exc}") from None
        if self.i1 < self.i2:
            raise InvalidInput(f"relation data: need i1 >= i2, got {self.i1} < {self.i2}")
        if not 1 <= self.k <= self.i2:
            raise InvalidInput(f"relation data: need 1 <= k <= i2={self.i2}, got k={self.k}")
        if len(self.L) != self.i1 or len(set(self.L)) != self.i1:
            raise InvalidInput(f"relation data: L={self.L} must have {self.i1} distinct entries")
        if len(self.P) != self.i2 or len(set(self.P)) != self.i2:
            raise InvalidInput(f"relation data: P={self.P} must have {self.i2} distinct entries")
        allowed1 = set(allowed_indices(n, self.i1, self.j1))
        if self.j1 <= self.j2:
            allowed1 &= set(allowed_indices(n, self.i1, self.j2))
        if not set(self.L) <= allowed1:
            raise InvalidInput(
                f"relation data: L={self.L} not inside {sorted(allowed1)} "
                f"for factor ({self.i1},{self.j1})"
                + (f" with j1 <= j2={self.j2}" if self.j1 <= self.j2 else "")
            )
        allowed2 = set(allowed_indices(n, self.i2, self.j2))
        if not set(self.P) <= allowed2:
            raise InvalidInput(
                f"relation data: P={self.P} not inside {sorted(allowed2)} "
                f"for factor ({self.i2},{self.j2})"
            )
        swap = set(allowed_indices(n, self.i2, self.j1))
        if not set(self.P[: self.k]) <= swap:
            raise InvalidInput(
                f"relation data: leading entries {self.P[:self.k]} of P not inside "
                f"{{1..{self.i2}}} U {{{self.j1 + 1}..{n}}} (initial term would be absent)"
            )

    def to_json(self) -> dict:
        return {
            "i1": self.i1, "j1": self.j1, "i2": self.i2, "j2": self.j2,
            "k": self.k, "L": list(self.L), "P": list(self.P),
        }

    @classmethod
    def from_json(cls, d) -> "RelationData":
        try:
            return cls(int(d["i1"]), int(d["j1"]), int(d["i2"]), int(d["j2"]), int(d["k"]),
                       tuple(int(t) for t in d["L"]), tuple(int(t) for t in d["P"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed relation data: {exc}") from exc

    def __str__(self) -> str:
        L = ",".join(map(str, self.L))
        P = ",".join(map(str, self.P))
        return f"R[({self.i1},{self.j1}),({self.i2},{self.j2});{self.k}]({L};{P})"


def _product(n: int, i1, j1, seq1, i2, j2, seq2) -> tuple[tuple, int] | None:
    a = canonicalize(n, i1, j1, seq1)
    b = canonicalize(n, i2, j2, seq2)
    if a is None or b is None:
        return None
    return mono_from_vars([a[0], b[0]]), a[1] * b[1]


def generate_relation(d: RelationData, n: int) -> Poly:
    """X_L X_P minus the sum of exchanged terms X_{L'} X_{P'}."""
    d.validate(n)
    terms: dict = {}

    def add(hit, c):
        if hit is None:
            return
        mono, sign = hit
        y = terms.get(mono, 0) + c * sign
        if y:
            terms[mono] = y
        else:
            terms.pop(mono, None)

    add(_product(n, d.i1, d.j1, d.L, d.i2, d.j2, d.P), 1)
    swappable = set(allowed_indices(n, d.i2, d.j1))
    positions = [r for r in range(d.i1) if d.L[r] in swappable]
    for rs in itertools.combinations(positions, d.k):
        Lp = list(d.L)
        for t, r in enumerate(rs):
            Lp[r] = d.P[t]
        Pp = [d.L[r] for r in rs] + list(d.P[d.k:])
        add(_product(n, d.i1, d.j1, Lp, d.i2, d.j2, Pp), -1)
    return Poly(terms)


def relation_data_for_pair(n: int, r1, r2) -> Iterator[RelationData]:
    """All canonical data for an ordered pair of factors, in emission order.

    L is sorted and listed by decreasing PBW degree; P is a sorted block of
    k exchanged entries followed by the sorted remaining entries.
    """
    (i1, j1), (i2, j2) = r1, r2
    if i1 < i2:
        return
    allowed1 = set(allowed_indices(n, i1, j1))
    if j1 <= j2:
        allowed1 &= set(allowed_indices(n, i1, j2))
    Ls = sorted(
        itertools.combinations(sorted(allowed1), i1),
        key=lambda L: (-sum(1 for l in L if l > j1), L),
    )
    allowed2 = allowed_indices(n, i2, j2)
    swap = set(allowed_indices(n, i2, j1))
    for L in Ls:
        for k in range(1, i2 + 1):
            for head in itertools.combinations(allowed2, k):
                if not set(head) <= swap:
                    continue
                rest_pool = [p for p in allowed2 if p not in head]
                for rest in itertools.combinations(rest_pool, i2 - k):
                    yield RelationData(i1, j1, i2, j2, k, L, head + rest)


@dataclass
class Relation:
    data: RelationData
    poly: Poly

    @property
    def zero(self) -> bool:
        return self.poly.is_zero()

    def to_json(self) -> dict:
        from .variables import xpoly_to_json

        return {"data": self.data.to_json(), "terms": xpoly_to_json(self.poly), "zero": self.zero}


def _sign_normal(p: Poly) -> Poly:
    lead = min(p.terms)
    return p if p.terms[lead] > 0 else -p


def enumerate_relations(
    n: int,
    pair_filter: Callable[[tuple, tuple], bool] | None = None,
    unique: bool = False,
    nonzero: bool = False,
    gate: bool = True,
    rejected: list | None = None,
) -> Iterator[Relation]:
    """Stream every relation for sl_n in deterministic order.

    ``unique`` keeps only the first relation for each polynomial up to sign;
    ``nonzero`` drops identically zero outputs.  With ``gate`` on, any
    relation whose Psi-image is nonzero is withheld and appended to
    ``rejected`` instead of being emitted.
    """
    roots = positive_roots(n)
    seen: set = set()
    for r1 in roots:
        for r2 in roots:
            if r1.i < r2.i:
                continue
            if pair_filter is not None and not pair_filter(tuple(r1), tuple(r2)):
                continue
            for d in relation_data_for_pair(n, r1, r2):
                p = generate_relation(d, n)
                if p.is_zero():
                    if not nonzero and not unique:
                        yield Relation(d, p)
                    continue
                if unique:
                    key = frozenset(_sign_normal(p).terms.items())
                    if key in seen:
                        continue
                    seen.add(key)
                if gate and not verify_vanishing(p):
                    if rejected is not None:
                        rejected.append(Relation(d, p))
                    continue
                yield Relation(d, p)


def involves(p: Poly, factor: tuple[int, int]) -> bool:
    return any((v.i, v.j) == tuple(factor) for mono in p.terms for v, _ in mono)
