"""The adjoint b-action on C[f_{i,j}] and the ideals I_m.

Polynomials in the f's are dicts ``exponent tuple -> coefficient`` with
exponents ordered like ``positive_roots(n)``.  With f_{a,b} = E_{b+1,a}
and e_{c,d} = E_{c,d+1}, the bracket projected modulo b gives

    e_{c,d} o f_{a,b} = [d == b][c > a] f_{a,c-1} - [a == c][b > d] f_{d+1,b}.
"""

from __future__ import annotations

import math

from .errors import ResourceCapExceeded, TheoremCheckFailed
from .exactlin import SpanBasis
from .roots import (
    MultDegree,
    check_root,
    enumerate_polytope,
    path_bound,
    positive_roots,
    root_position,
)
from .tensormod import DEFAULT_CAP, build_module

FPoly = dict


def e_on_generator(c: int, d: int, a: int, b: int) -> list[tuple[int, tuple[int, int]]]:
    """e_{c,d} o f_{a,b} as a list of (coefficient, root) pairs."""
    out = []
    if d == b and c > a:
        out.append((1, (a, c - 1)))
    if a == c and b > d:
        out.append((-1, (d + 1, b)))
    return out


def f_monomial(n: int, exps: dict) -> tuple[int, ...]:
    pos = root_position(n)
    s = [0] * len(pos)
    for r, e in exps.items():
        s[pos[tuple(r)]] += e
    return tuple(s)


def e_adjoint(c: int, d: int, p: FPoly, n: int) -> FPoly:
    """Degree-preserving derivation e_{c,d} o (-) on an f-polynomial."""
    check_root(n, c, d)
    roots = positive_roots(n)
    pos = root_position(n)
    images = [
        [(coef, pos[r]) for coef, r in e_on_generator(c, d, a, b)] for a, b in roots
    ]
    out: dict = {}
    for s, coeff in p.items():
        for idx, e in enumerate(s):
            if not e or not images[idx]:
                continue
            for sign, tgt in images[idx]:
                t = list(s)
                t[idx] -= 1
                t[tgt] += 1
                t = tuple(t)
                y = out.get(t, 0) + sign * e * coeff
                if y:
                    out[t] = y
                else:
                    out.pop(t, None)
    return out


def b_closure(generators, n: int) -> list[FPoly]:
    """Basis of the smallest e-stable subspace containing the generators.

    Cartan elements only rescale weight-homogeneous pieces, so the
    lowering-free closure under all e_{c,d} is enough.
    """
    roots = positive_roots(n)
    basis = SpanBasis()
    queue = []
    for g in generators:
        if g and basis.reduce_into(g)[1]:
            queue.append(g)
    out = list(queue)
    while queue:
        v = queue.pop()
        for c, d in roots:
            w = e_adjoint(c, d, v, n)
            if w and basis.reduce_into(w)[1]:
                queue.append(w)
                out.append(w)
    return out


def ideal_generators(m: MultDegree) -> list[FPoly]:
    """f_{i,j}^{D_{i,j}(m)+1} for every positive root."""
    n = m.n
    pos = root_position(n)
    gens = []
    for r in positive_roots(n):
        s = [0] * len(pos)
        s[pos[r]] = path_bound(m, *r) + 1
        gens.append({tuple(s): 1})
    return gens


def _degree(s) -> int:
    return sum(s)


def ideal_hilbert(m: MultDegree, dmax: int | None = None, cap: int = DEFAULT_CAP) -> list[int]:
    """h(d) = dim S^d(n^-) - dim I_m(d) for d = 0..dmax.

    I_m(d) is grown degree by degree: the variables times a basis of
    I_m(d-1), plus the closure elements living in degree d.  Once I_m(d)
    fills S^d every later piece is full too; one further degree is still
    computed as a consistency check and the rest is padded with zeros.
    """
    n = m.n
    nroots = len(positive_roots(n))
    if dmax is None:
        dmax = default_dmax(m)
    closure = b_closure(ideal_generators(m), n)
    by_degree: dict = {}
    for g in closure:
        by_degree.setdefault(_degree(next(iter(g))), []).append(g)
    out: list[int] = []
    prev: list[dict] = []
    for d in range(dmax + 1):
        if len(out) >= 2 and out[-1] == 0 and out[-2] == 0:
            out.extend([0] * (dmax + 1 - len(out)))
            break
        total = math.comb(d + nroots - 1, nroots - 1)
        if total > cap:
            raise ResourceCapExceeded(f"S^{d} has dimension {total} > cap {cap}")
        basis = SpanBasis()
        for v in prev:
            for idx in range(nroots):
                w = {s[:idx] + (s[idx] + 1,) + s[idx + 1:]: c for s, c in v.items()}
                basis.reduce_into(w)
        for g in by_degree.get(d, ()):
            basis.reduce_into(g)
        out.append(total - len(basis))
        if len(out) >= 2 and out[-2] == 0 and out[-1] != 0:
            raise TheoremCheckFailed(f"ideal piece shrank from degree {d - 1} to {d}")
        prev = basis.echelon()
    return out


def default_dmax(m: MultDegree) -> int:
    return m.total * (m.n - 1) + 2


def presentation_report(m: MultDegree, dmax: int | None = None, cap: int = DEFAULT_CAP) -> dict:
    """Compare the quotient Hilbert function with the graded dims of M_m.

    The inequality h(d) >= dim M_m(d) is a theorem and raises on failure;
    equality is conjectural and only reported.
    """
    module = build_module(m, cap).graded_dims
    if dmax is None:
        dmax = max(default_dmax(m), len(module) + 1)
    polytope = len(enumerate_polytope(m))
    h = ideal_hilbert(m, dmax, cap)
    while h[-1] != 0:
        # every nonzero degree adds at least 1, so this terminates
        if sum(h) > polytope:
            raise TheoremCheckFailed("quotient larger than |S_m| despite the spanning lemma")
        dmax += 2
        h = ideal_hilbert(m, dmax, cap)
    mod = module + [0] * (len(h) - len(module))
    bad = [d for d in range(len(h)) if h[d] < mod[d]]
    if bad:
        raise TheoremCheckFailed(f"surjection inequality fails in degrees {bad} for m={m}")
    first_zero = next(d for d, v in enumerate(h) if v == 0)
    if any(h[first_zero:]):
        raise TheoremCheckFailed(f"ideal Hilbert function revives after degree {first_zero}")
    h = h[:first_zero]
    if sum(h) > polytope:
        raise TheoremCheckFailed("quotient larger than |S_m| despite the spanning lemma")
    return {
        "n": m.n,
        "mult": m.to_json()["mult"],
        "ideal_hilbert": h,
        "module_hilbert": module,
        "agree": h == module,
        "polytope_size": polytope,
    }

