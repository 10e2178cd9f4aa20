"""Fundamental modules M_{alpha_{i,j}} realized as Lambda^i W_{i,j}.

The basis of factor (i, j) is indexed by strictly increasing i-tuples
``L`` drawn from {1..i} U {j+1..n}.  The same labels name the dual
Plücker coordinates, so :class:`WedgeKey` doubles as the Plücker variable.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import NamedTuple, Sequence

from .errors import InvalidInput
from .roots import check_root


class WedgeKey(NamedTuple):
    i: int
    j: int
    L: tuple[int, ...]

    def __str__(self) -> str:
        return f"X[{self.i},{self.j}]({','.join(map(str, self.L))})"

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "L": list(self.L)}

    @classmethod
    def from_json(cls, data) -> "WedgeKey":
        try:
            return cls(int(data["i"]), int(data["j"]), tuple(int(x) for x in data["L"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed variable {data!r}: {exc}") from exc


def sort_with_sign(seq: Sequence[int]) -> tuple[tuple[int, ...], int, bool]:
    """Sort a tuple and report the sign of the sorting permutation.

    Returns ``(sorted, sign, zero)``; ``zero`` is True when an entry repeats,
    in which case the wedge vanishes and ``sign`` is 0.
    """
    items = list(seq)
    if len(set(items)) != len(items):
        return tuple(sorted(items)), 0, True
    sign = 1
    # insertion sort, counting transpositions
    for a in range(1, len(items)):
        b = a
        while b > 0 and items[b - 1] > items[b]:
            items[b - 1], items[b] = items[b], items[b - 1]
            sign = -sign
            b -= 1
    return tuple(items), sign, False


def allowed_indices(n: int, i: int, j: int) -> tuple[int, ...]:
    """{1..i} U {j+1..n}: the coordinate basis of W_{i,j}."""
    return tuple(range(1, i + 1)) + tuple(range(j + 1, n + 1))


@lru_cache(maxsize=None)
def fundamental_basis(n: int, i: int, j: int) -> tuple[WedgeKey, ...]:
    check_root(n, i, j)
    return tuple(
        WedgeKey(i, j, L) for L in itertools.combinations(allowed_indices(n, i, j), i)
    )


def fundamental_dim(n: int, i: int, j: int) -> int:
    return len(fundamental_basis(n, i, j))


def pbw_degree(key: WedgeKey) -> int:
    return sum(1 for l in key.L if l > key.j)


def highest_key(i: int, j: int) -> WedgeKey:
    return WedgeKey(i, j, tuple(range(1, i + 1)))


def acts_on_factor(a: int, b: int, i: int, j: int) -> bool:
    """Whether f_{a,b} can act nontrivially on the factor (i, j)."""
    return a <= i <= j <= b


def f_on_indices(a: int, b: int, L: tuple[int, ...]) -> tuple[int, tuple[int, ...]] | None:
    """f_{a,b} on a single wedge w_L: replace a by b+1, re-sort with sign."""
    if a not in L or (b + 1) in L:
        return None
    new = tuple(b + 1 if l == a else l for l in L)
    srt, sign, zero = sort_with_sign(new)
    return (sign, srt) if not zero else None


def f_action_fund(a: int, b: int, v: dict, n: int | None = None) -> dict:
    """Apply f_{a,b} to a vector over WedgeKeys of a single factor.

    ``n`` only serves to validate the root (a, b).
    """
    if n is not None:
        check_root(n, a, b)
    out: dict = {}
    for key, c in v.items():
        if not acts_on_factor(a, b, key.i, key.j):
            continue
        hit = f_on_indices(a, b, key.L)
        if hit is None:
            continue
        sign, L = hit
        k = WedgeKey(key.i, key.j, L)
        y = out.get(k, 0) + sign * c
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def weight_of(key: WedgeKey, n: int) -> tuple[int, ...]:
    """Indicator vector of L in positions 1..n (epsilon-weight)."""
    return tuple(1 if t in key.L else 0 for t in range(1, n + 1))
