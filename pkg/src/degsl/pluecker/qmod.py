"""The graded pieces Q_m of the coordinate ring and their lowering action."""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from ..errors import ResourceCapExceeded
from ..exactlin import SpanBasis
from ..fundmod import fundamental_basis, fundamental_dim, pbw_degree
from ..poly import Poly
from ..roots import MultDegree, check_root, positive_roots
from .psi import psi, psi_variable
from .variables import XVar, base_var, canonicalize

DEFAULT_MONOMIAL_CAP = 200_000


def monomial_count(m: MultDegree) -> int:
    return math.prod(
        math.comb(fundamental_dim(m.n, r.i, r.j) + mult - 1, mult) for r, mult in m.entries
    )


def _group_images(n: int, i: int, j: int, mult: int) -> list[Poly]:
    """Psi-images (T factor stripped) of all degree-mult monomials in factor (i, j)."""
    basis = fundamental_basis(n, i, j)
    images = [_strip_t(psi_variable(v)) for v in basis]
    out = []
    for combo in itertools.combinations_with_replacement(range(len(basis)), mult):
        p = Poly.const(1)
        for idx in combo:
            p = p * images[idx]
        out.append(p)
    return out


def _strip_t(p: Poly) -> Poly:
    return Poly({tuple((v, e) for v, e in mono if v.kind != "T"): c for mono, c in p.terms.items()})


def qm_dimension(m: MultDegree, cap: int = DEFAULT_MONOMIAL_CAP) -> int:
    """dim Q_m as the exact rank of Psi over all multidegree-m monomials.

    Every monomial of multidegree m carries the same T-part, so only the
    Z-part is compared.
    """
    count = monomial_count(m)
    if count > cap:
        raise ResourceCapExceeded(f"{count} monomials of multidegree {m} exceed cap {cap}")
    groups = [_group_images(m.n, r.i, r.j, mult) for r, mult in m.entries]
    basis = SpanBasis()
    # fold groups left to right, sharing partial products
    partial = [Poly.const(1)]
    for g in groups[:-1]:
        partial = [a * b for a in partial for b in g]
    last = groups[-1] if groups else [Poly.const(1)]
    for a in partial:
        for b in last:
            prod = a * b
            if prod:
                basis.reduce_into(prod.terms)
    return len(basis)


def f_on_variable(a: int, b: int, key: XVar, n: int) -> Poly:
    """Dual lowering action on a single Plücker variable.

    f_{a,b} X_L = -X_{L with b+1 replaced by a} when a <= i <= j <= b and
    b+1 is in L; zero otherwise.
    """
    if not (a <= key.i <= key.j <= b) or (b + 1) not in key.L:
        return Poly()
    seq = tuple(a if l == b + 1 else l for l in key.L)
    hit = canonicalize(n, key.i, key.j, seq)
    if hit is None:
        return Poly()
    v, sign = hit
    return Poly({((v, 1),): -sign})


def f_action_Q(a: int, b: int, p: Poly, n: int) -> Poly:
    check_root(n, a, b)
    return p.derivation(lambda v: f_on_variable(a, b, v, n))


def cocyclic_vector(m: MultDegree) -> Poly:
    return Poly.monomial([base_var(r.i, r.j) for r in m.factors()])


def _is_multiple_of_vstar(image: Poly, target_mono) -> object:
    if len(image.terms) == 1 and target_mono in image.terms:
        return image.terms[target_mono]
    return None


def cocyclicity_probe(m: MultDegree, p: Poly, max_degree: int | None = None) -> dict:
    """Search f-monomials taking p to a nonzero multiple of v_m^* modulo ker Psi.

    Breadth-first by total f-degree (non-decreasing root order, since the
    action is abelian).  Branches whose Psi-image vanishes are pruned: the
    kernel is stable under the action.  Returns a report with ``found``.
    """
    n = m.n
    roots = positive_roots(n)
    target = next(iter(psi(cocyclic_vector(m)).terms))
    if max_degree is None:
        max_degree = max(
            (sum(pbw_degree(v) * e for v, e in mono) for mono in p.terms), default=0
        )
    start = psi(p)
    if start.is_zero():
        return {"found": False, "reason": "p lies in the kernel of Psi", "witness": None}
    frontier = [((0,) * len(roots), 0, p)]
    for degree in range(max_degree + 1):
        nxt = []
        for s, first, q in frontier:
            img = psi(q)
            if img.is_zero():
                continue
            c = _is_multiple_of_vstar(img, target)
            if c is not None:
                return {
                    "found": True,
                    "witness": {f"{a},{b}": e for (a, b), e in zip(roots, s) if e},
                    "exponents": list(s),
                    "degree": degree,
                    "coefficient": str(c),
                }
            for idx in range(first, len(roots)):
                a, b = roots[idx]
                q2 = f_action_Q(a, b, q, n)
                if q2:
                    s2 = s[:idx] + (s[idx] + 1,) + s[idx + 1:]
                    nxt.append((s2, idx, q2))
        frontier = nxt
    return {"found": False, "reason": "search exhausted", "witness": None}
