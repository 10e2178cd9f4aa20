"""Highest weight modules M_m inside tensor products of fundamental modules.

A tensor basis key is a tuple of index tuples, one per factor of
``m.factors()``; the factor of each slot is implicit.  M_m is built by
breadth-first closure from v_m under all lowering operators, one exact
echelon basis per PBW degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ResourceCapExceeded
from .exactlin import SpanBasis, rank
from .fundmod import acts_on_factor, f_on_indices, fundamental_dim, highest_key
from .roots import (
    MultDegree,
    RootIndex,
    check_root,
    enumerate_polytope,
    graded_counts,
    positive_roots,
)

DEFAULT_CAP = 200_000

TensorKey = tuple  # tuple[tuple[int, ...], ...]


def ambient_dim(m: MultDegree) -> int:
    return math.prod(fundamental_dim(m.n, r.i, r.j) for r in m.factors())


def highest_vector(m: MultDegree) -> dict:
    """v_m = tensor product of the highest weight vectors."""
    return {tuple(highest_key(r.i, r.j).L for r in m.factors()): 1}


def tensor_key_slots(m: MultDegree, key: TensorKey) -> list:
    """Expand an internal key into its WedgeKey slots."""
    from .fundmod import WedgeKey

    return [WedgeKey(r.i, r.j, L) for r, L in zip(m.factors(), key)]


def f_action_tensor(a: int, b: int, v: dict, factors: tuple[RootIndex, ...]) -> dict:
    """Leibniz extension of f_{a,b} over all tensor slots."""
    live = [t for t, r in enumerate(factors) if acts_on_factor(a, b, r.i, r.j)]
    out: dict = {}
    if not live:
        return out
    for key, c in v.items():
        for t in live:
            hit = f_on_indices(a, b, key[t])
            if hit is None:
                continue
            sign, L = hit
            k = key[:t] + (L,) + key[t + 1:]
            y = out.get(k, 0) + sign * c
            if y:
                out[k] = y
            else:
                out.pop(k, None)
    return out


@dataclass
class GradedSpan:
    """Graded pieces M_m(s); ``spanning[s]`` are the vectors that grew level s."""

    m: MultDegree
    levels: list = field(default_factory=list)  # list[SpanBasis]
    spanning: list = field(default_factory=list)  # list[list[dict]]

    @property
    def graded_dims(self) -> list[int]:
        return [len(b) for b in self.levels]

    @property
    def dim(self) -> int:
        return sum(self.graded_dims)

    def contains(self, v: dict) -> bool:
        """Membership test for a vector homogeneous or not."""
        return all(not res for res in self._residuals(v))

    def _residuals(self, v: dict):
        by_level: dict = {}
        for k, c in v.items():
            by_level.setdefault(self._degree(k), {})[k] = c
        for s, part in by_level.items():
            if s >= len(self.levels):
                yield part
            else:
                yield self.levels[s].residual(part)

    def _degree(self, key: TensorKey) -> int:
        return sum(
            sum(1 for l in L if l > r.j) for r, L in zip(self.m.factors(), key)
        )


def build_module(m: MultDegree, cap: int = DEFAULT_CAP) -> GradedSpan:
    """Compute M_m = S(n^-) v_m level by level until a level is empty."""
    amb = ambient_dim(m)
    if amb > cap:
        raise ResourceCapExceeded(
            f"ambient tensor dimension {amb} exceeds cap {cap} for m={m}"
        )
    factors = m.factors()
    roots = positive_roots(m.n)
    gs = GradedSpan(m)
    v0 = highest_vector(m)
    base = SpanBasis()
    base.reduce_into(v0)
    gs.levels.append(base)
    gs.spanning.append([v0])
    while True:
        nxt = SpanBasis()
        grew = []
        for v in gs.spanning[-1]:
            for a, b in roots:
                w = f_action_tensor(a, b, v, factors)
                if w and nxt.reduce_into(w)[1]:
                    grew.append(w)
        if not grew:
            break
        gs.levels.append(nxt)
        gs.spanning.append(grew)
    return gs


def hilbert(m: MultDegree, cap: int = DEFAULT_CAP) -> list[int]:
    return build_module(m, cap).graded_dims


def apply_f_monomial(s, m: MultDegree) -> dict:
    """f^s v_m, applying each f_{i,j} s_{i,j} times in root order.

    ``s`` is an exponent tuple ordered like ``positive_roots(m.n)`` or a
    mapping from roots to exponents.
    """
    roots = positive_roots(m.n)
    if isinstance(s, dict):
        s = tuple(s.get(r, 0) for r in roots)
    factors = m.factors()
    v = highest_vector(m)
    for (a, b), e in zip(roots, s):
        for _ in range(e):
            v = f_action_tensor(a, b, v, factors)
            if not v:
                return v
    return v


def apply_f(a: int, b: int, v: dict, m: MultDegree) -> dict:
    check_root(m.n, a, b)
    return f_action_tensor(a, b, v, m.factors())


def ffl_check(m: MultDegree, cap: int = DEFAULT_CAP) -> dict:
    """Compare |S_m|, dim M_m and the rank of {f^s v_m : s in S_m}."""
    points = enumerate_polytope(m)
    module = build_module(m, cap)
    r = rank(apply_f_monomial(s, m) for s in points)
    return {
        "n": m.n,
        "mult": m.to_json()["mult"],
        "graded_dims": module.graded_dims,
        "dim": module.dim,
        "polytope_size": len(points),
        "polytope_graded": graded_counts(points),
        "rank": r,
        "independent": r == len(points),
        "agree": r == len(points) == module.dim,
    }
