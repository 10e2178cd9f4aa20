"""Sparse commutative polynomials with exact rational coefficients.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable;
variables are any mutually comparable hashables.  The same class backs the
Plücker ring, the T/Z parametrization ring and the f-ring.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping

Monomial = tuple  # tuple[tuple[var, int], ...]

ONE: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_from_vars(variables: Iterable[Hashable]) -> Monomial:
    counts: dict = {}
    for v in variables:
        counts[v] = counts.get(v, 0) + 1
    return tuple(sorted(counts.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_remove(m: Monomial, var, times: int = 1) -> Monomial:
    out = []
    for v, e in m:
        if v == var:
            if e < times:
                raise ValueError("monomial does not contain variable often enough")
            if e > times:
                out.append((v, e - times))
        else:
            out.append((v, e))
    return tuple(out)


class Poly:
    """Polynomial as a dict monomial -> coefficient (no stored zeros)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        self.terms: dict = {}
        if terms:
            for m, c in terms.items():
                if c:
                    self.terms[m] = self.terms.get(m, 0) + c
                    if not self.terms[m]:
                        del self.terms[m]

    @classmethod
    def var(cls, v) -> "Poly":
        return cls({((v, 1),): 1})

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({ONE: c}) if c else cls()

    @classmethod
    def monomial(cls, variables: Iterable[Hashable], coeff=1) -> "Poly":
        return cls({mono_from_vars(variables): coeff})

    def copy(self) -> "Poly":
        p = Poly()
        p.terms = dict(self.terms)
        return p

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _add_into(self, other: "Poly", c=1) -> None:
        t = self.terms
        for m, x in other.terms.items():
            y = t.get(m, 0) + c * x
            if y:
                t[m] = y
            else:
                t.pop(m, None)

    def __add__(self, other: "Poly") -> "Poly":
        p = self.copy()
        p._add_into(other)
        return p

    def __sub__(self, other: "Poly") -> "Poly":
        p = self.copy()
        p._add_into(other, -1)
        return p

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def scale(self, c) -> "Poly":
        p = Poly()
        if c:
            p.terms = {m: c * x for m, x in self.terms.items()}
        return p

    def mul_monomial(self, mono: Monomial, c=1) -> "Poly":
        p = Poly()
        if c:
            p.terms = {mono_mul(m, mono): c * x for m, x in self.terms.items()}
        return p

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                y = out.get(m, 0) + c1 * c2
                if y:
                    out[m] = y
                else:
                    out.pop(m, None)
        p = Poly()
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        result = Poly.const(1)
        for _ in range(e):
            result = result * self
        return result

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def total_degrees(self) -> set[int]:
        return {mono_degree(m) for m in self.terms}

    def sorted_terms(self) -> list:
        return sorted(self.terms.items())

    def substitute(self, images: Callable[[Hashable], "Poly"], cache: dict | None = None) -> "Poly":
        """Algebra homomorphism determined by the images of variables."""
        cache = {} if cache is None else cache

        def image(v):
            if v not in cache:
                cache[v] = images(v)
            return cache[v]

        out = Poly()
        for m, c in self.terms.items():
            term = Poly.const(c)
            for v, e in m:
                term = term * (image(v) ** e)
                if not term:
                    break
            out._add_into(term)
        return out

    def evaluate(self, values: Callable[[Hashable], Fraction] | Mapping) -> Fraction:
        get = values.__getitem__ if isinstance(values, Mapping) else values
        total = Fraction(0)
        for m, c in self.terms.items():
            term = Fraction(c)
            for v, e in m:
                term *= Fraction(get(v)) ** e
            total += term
        return total

    def derivation(self, var_image: Callable[[Hashable], "Poly"]) -> "Poly":
        """Apply the derivation with the given values on variables (Leibniz rule)."""
        out = Poly()
        for m, c in self.terms.items():
            for idx, (v, e) in enumerate(m):
                dv = var_image(v)
                if not dv:
                    continue
                rest = m[:idx] + ((v, e - 1),) + m[idx + 1:] if e > 1 else m[:idx] + m[idx + 1:]
                out._add_into(dv.mul_monomial(rest, c * e))
        return out

    def to_str(self, fmt_var: Callable[[Hashable], str] = str) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            c = Fraction(c)
            body = "*".join(
                fmt_var(v) if e == 1 else f"{fmt_var(v)}^{e}" for v, e in m
            )
            mag = abs(c)
            if not body:
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", piece))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, piece in parts[1:]:
            s += f" {sign} {piece}"
        return s

    def __repr__(self) -> str:
        return f"Poly({self.to_str()})"
