"""Plücker variables X_L^{(i,j)} and the T/Z parametrization variables."""

from __future__ import annotations

import re
from typing import NamedTuple, Sequence

from ..fundmod import WedgeKey, allowed_indices, highest_key, pbw_degree, sort_with_sign
from ..poly import Poly

XVar = WedgeKey


class TZVar(NamedTuple):
    kind: str  # "T" or "Z"
    i: int
    j: int

    def __str__(self) -> str:
        return f"{self.kind}[{self.i},{self.j}]"


def T(i: int, j: int) -> TZVar:
    return TZVar("T", i, j)


def Z(i: int, j: int) -> TZVar:
    return TZVar("Z", i, j)


def canonicalize(n: int, i: int, j: int, seq: Sequence[int]) -> tuple[XVar, int] | None:
    """Sorted variable and permutation sign, or None for a vanishing symbol.

    A symbol vanishes when it repeats an index or uses an index outside
    {1..i} U {j+1..n}.
    """
    allowed = set(allowed_indices(n, i, j))
    if len(seq) != i or any(l not in allowed for l in seq):
        return None
    srt, sign, zero = sort_with_sign(seq)
    if zero:
        return None
    return XVar(i, j, srt), sign


def x(i: int, j: int, *L: int) -> Poly:
    """Convenience: the polynomial X_L^{(i,j)} (L given in any order, sign applied)."""
    srt, sign, zero = sort_with_sign(L)
    if zero:
        return Poly()
    return Poly({((XVar(i, j, srt), 1),): sign})


def base_var(i: int, j: int) -> XVar:
    """X_{1,...,i}^{(i,j)}, the PBW-degree zero variable."""
    return highest_key(i, j)


def family(key: XVar) -> tuple[int, int] | None:
    """(r, m) for a PBW-degree one variable X_{1..r-1,r+1..i,m}^{(i,j)}."""
    if pbw_degree(key) != 1:
        return None
    low = set(key.L[:-1])
    (r,) = [t for t in range(1, key.i + 1) if t not in low]
    return r, key.L[-1]


def xpoly_multidegree(p: Poly) -> dict[tuple[int, int], int] | None:
    """Common degree profile of all monomials, or None if not multi-homogeneous."""
    profile = None
    for mono in p.terms:
        prof: dict = {}
        for v, e in mono:
            prof[(v.i, v.j)] = prof.get((v.i, v.j), 0) + e
        if profile is None:
            profile = prof
        elif prof != profile:
            return None
    return profile if profile is not None else {}


def xpoly_str(p: Poly) -> str:
    return p.to_str(str)


def xpoly_to_json(p: Poly) -> list[dict]:
    out = []
    for mono, c in p.sorted_terms():
        vars_ = []
        for v, e in mono:
            vars_.extend([v.to_json()] * e)
        out.append({"coeff": str(c), "vars": vars_})
    return out


def xpoly_from_json(terms, n: int | None = None) -> Poly:
    """Parse a term list; variable index tuples are canonicalized with sign."""
    from fractions import Fraction

    from ..errors import InvalidInput

    p = Poly()
    try:
        for t in terms:
            coeff = Fraction(str(t["coeff"]))
            factor = Poly.const(coeff)
            for vj in t["vars"]:
                key = XVar.from_json(vj)
                if n is not None:
                    hit = canonicalize(n, key.i, key.j, key.L)
                    if hit is None:
                        factor = Poly()
                        break
                    key, sign = hit
                    factor = factor.scale(sign) * Poly.var(key)
                else:
                    factor = factor * x(key.i, key.j, *key.L)
            p = p + factor
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"malformed polynomial terms: {exc}") from exc
    return p


_VAR_RE = re.compile(r"X\[(\d+),(\d+)\]\(([\d,\s]*)\)(?:\^(\d+))?")
_TERM_RE = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?")


def parse_xpoly(text: str, n: int) -> Poly:
    """Parse the text form, e.g. ``X[1,1](3)*X[1,2](1) - 2/3*X[1,1](1)^2``."""
    from fractions import Fraction

    from ..errors import InvalidInput

    p = Poly()
    pos = 0
    text = text.strip()
    if text in ("", "0"):
        return p
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        sign = -1 if m.group(1) == "-" else 1
        if pos > 0 and m.group(1) is None:
            raise InvalidInput(f"expected '+' or '-' at position {pos} in {text!r}")
        coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        pos = m.end()
        term = Poly.const(sign * coeff)
        nfactors = 0
        while True:
            v = _VAR_RE.match(text, pos)
            if not v:
                break
            i, j = int(v.group(1)), int(v.group(2))
            L = tuple(int(t) for t in v.group(3).split(",") if t.strip())
            hit = canonicalize(n, i, j, L)
            if not (1 <= i <= j <= n - 1):
                raise InvalidInput(f"bad factor ({i},{j}) at position {pos} in {text!r}")
            factor = Poly() if hit is None else Poly({((hit[0], 1),): hit[1]})
            term = term * (factor ** int(v.group(4) or 1))
            nfactors += 1
            pos = v.end()
            rest = text[pos:].lstrip()
            if rest.startswith("*"):
                pos = len(text) - len(rest) + 1
                while pos < len(text) and text[pos] == " ":
                    pos += 1
            else:
                break
        if nfactors == 0 and not m.group(2):
            raise InvalidInput(f"cannot parse term at position {pos} in {text!r}")
        p = p + term
        while pos < len(text) and text[pos] == " ":
            pos += 1
    return p
