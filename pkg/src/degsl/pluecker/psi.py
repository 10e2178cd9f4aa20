"""The parametrization map Psi from the Plücker ring to the T/Z ring.

Psi(X_L^{(i,j)}) = T_{i,j} * (-1)^{sum_{p<=d}(l_p - p)} * det(Z_{r_a, l_{d+b} - 1})
where d counts entries of L that are <= i and r_1 < ... < r_{i-d} are the
missing indices of {1..i}.  Its kernel is the vanishing ideal of R_n.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from ..exactlin import permutation_sign
from ..poly import Poly
from .variables import T, XVar, Z


def _split(key: XVar) -> tuple[list[int], list[int], int]:
    low = [l for l in key.L if l <= key.i]
    high = [l for l in key.L if l > key.j]
    missing = [r for r in range(1, key.i + 1) if r not in low]
    sign_exp = sum(l - p for p, l in enumerate(low, start=1))
    return missing, high, sign_exp


@lru_cache(maxsize=None)
def psi_variable(key: XVar) -> Poly:
    """Image of a single Plücker variable (symbolic determinant in Z)."""
    missing, high, sign_exp = _split(key)
    size = len(missing)
    det = Poly()
    for perm in itertools.permutations(range(size)):
        vars_ = [Z(missing[a], high[perm[a]] - 1) for a in range(size)]
        det = det + Poly.monomial(vars_, permutation_sign(perm))
    sign = -1 if sign_exp % 2 else 1
    return det.mul_monomial(((T(key.i, key.j), 1),), sign)


def psi(p: Poly) -> Poly:
    """Algebra homomorphism Psi applied to an X-polynomial."""
    return p.substitute(psi_variable)


def verify_vanishing(p: Poly) -> bool:
    return psi(p).is_zero()


def evaluate_orbit(c: Mapping, key: XVar) -> Fraction:
    """Plücker coordinate X_L^{(i,j)} of exp(sum c_{a,b} f_{a,b}) [v_1].

    ``c`` maps root pairs (a, b) to rationals; missing roots count as zero.
    """
    img = psi_variable(key)
    total = Fraction(0)
    for mono, coeff in img.terms.items():
        term = Fraction(coeff)
        for v, e in mono:
            if v.kind == "Z":
                term *= Fraction(c.get((v.i, v.j), 0)) ** e
        total += term
    return total


def evaluate_at_orbit(p: Poly, c: Mapping) -> Fraction:
    """Evaluate an X-polynomial at the orbit point with parameters c."""
    return p.evaluate(lambda key: evaluate_orbit(c, key))


def tzpoly_str(p: Poly) -> str:
    return p.to_str(str)


def tzpoly_to_json(p: Poly) -> list[dict]:
    out = []
    for mono, c in p.sorted_terms():
        out.append(
            {
                "coeff": str(c),
                "T": [{"i": v.i, "j": v.j, "e": e} for v, e in mono if v.kind == "T"],
                "Z": [{"i": v.i, "j": v.j, "e": e} for v, e in mono if v.kind == "Z"],
            }
        )
    return out
