"""Rewriting a Plücker polynomial onto PBW-degree <= 1 variables.

Each step multiplies the current polynomial by a degree-zero variable
X_{1..i}^{(i,j)} and replaces one occurrence of a target variable using a
generated relation.  The returned certificate lists ``(multiplier, data)``
pairs with  prod X^N * F - G = sum multiplier * R(data).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import InvalidInput, TheoremCheckFailed
from ..fundmod import pbw_degree
from ..poly import Poly, mono_mul, mono_remove
from ..roots import MultDegree, RootIndex
from .psi import psi
from .relations import RelationData, generate_relation
from .variables import XVar, base_var, family, xpoly_multidegree


@dataclass
class StraightenResult:
    N: MultDegree
    G: Poly
    certificate: list = field(default_factory=list)  # [(Poly, RelationData)]
    steps: int = 0


def _rewrite(G: Poly, target: XVar, b: XVar, data: RelationData, n: int,
             cert: list | None) -> Poly:
    """Return b*G with every monomial's single target occurrence rewritten."""
    rel = generate_relation(data, n)
    lead = tuple(sorted([(target, 1), (b, 1)])) if target != b else ((b, 2),)
    c0 = rel.terms.get(lead)
    if not c0:
        raise TheoremCheckFailed(f"relation {data} lacks the term {target}*{b}")
    rest = Poly({m: c for m, c in rel.terms.items() if m != lead})
    out = Poly()
    multiplier = Poly()
    bmono = ((b, 1),)
    for mono, c in G.terms.items():
        if any(v == target for v, _ in mono):
            nu = mono_remove(mono, target)
            multiplier.terms[nu] = multiplier.terms.get(nu, 0) + c / c0
            out._add_into(rest.mul_monomial(nu, -c / c0))
        else:
            out._add_into(Poly({mono_mul(mono, bmono): c}))
    if cert is not None:
        for idx, (mult, d) in enumerate(cert):
            cert[idx] = (mult.mul_monomial(bmono), d)
        cert.append((Poly(multiplier.terms), data))
    return out


def _high_degree_target(G: Poly):
    best = None
    for mono in G.terms:
        for v, _ in mono:
            if pbw_degree(v) >= 2 and (best is None or (pbw_degree(v), v) > (pbw_degree(best), best)):
                best = v
    return best


def _duplicate_family(G: Poly):
    """Find a degree-one variable whose (r, m) family also occurs for a smaller pair."""
    owners: dict = {}
    for mono in G.terms:
        for v, _ in mono:
            fam = family(v)
            if fam is not None:
                owners.setdefault(fam, set()).add(v)
    for fam in sorted(owners):
        vs = owners[fam]
        if len(vs) > 1:
            keep = min(vs)  # smallest (i, j) pair stays
            drop = max(vs)
            return fam, keep, drop
    return None


def straighten(F: Poly, n: int, certificate: bool = False,
               max_steps: int = 100_000) -> StraightenResult:
    """Find N and G with prod X_{1..i}^{N_{i,j}} F - G in J_n, G of PBW degree <= 1.

    G additionally uses at most one factor pair per degree-one family (r, m).
    """
    if xpoly_multidegree(F) is None:
        raise InvalidInput("straighten requires a multi-homogeneous polynomial")
    N: dict = {}
    cert: list | None = [] if certificate else None
    G = F.copy()
    steps = 0
    while True:
        if steps >= max_steps:
            raise TheoremCheckFailed("straightening did not terminate within max_steps")
        target = _high_degree_target(G)
        if target is not None:
            i, j = target.i, target.j
            r = next(t for t in range(1, i + 1) if t not in target.L)
            P = (r,) + tuple(t for t in range(1, i + 1) if t != r)
            data = RelationData(i, j, i, j, 1, target.L, P)
            b = base_var(i, j)
        else:
            dup = _duplicate_family(G)
            if dup is None:
                break
            (r, m), keep, drop = dup
            P = (r,) + tuple(t for t in range(1, keep.i + 1) if t != r)
            data = RelationData(drop.i, drop.j, keep.i, keep.j, 1, drop.L, P)
            target = drop
            b = base_var(keep.i, keep.j)
        G = _rewrite(G, target, b, data, n, cert)
        N[(b.i, b.j)] = N.get((b.i, b.j), 0) + 1
        steps += 1
    return StraightenResult(MultDegree.from_dict(n, N), G, cert or [], steps)


def base_power(N: MultDegree) -> Poly:
    return Poly.monomial([base_var(r.i, r.j) for r in N.factors()])


def check_straighten(F: Poly, result: StraightenResult, n: int) -> dict:
    """Verify the straightening postconditions; returns a dict of booleans."""
    lhs = base_power(result.N) * F
    vars_ = result.G.variables()
    fams: dict = {}
    for v in vars_:
        fam = family(v)
        if fam is not None:
            fams.setdefault(fam, set()).add((v.i, v.j))
    out = {
        "pbw_le_1": all(pbw_degree(v) <= 1 for v in vars_),
        "family_unique": all(len(s) == 1 for s in fams.values()),
        "psi_equal": psi(lhs) == psi(result.G),
    }
    if result.certificate:
        combo = Poly()
        for mult, d in result.certificate:
            combo = combo + mult * generate_relation(d, n)
        out["certificate"] = (lhs - result.G) == combo
    return out


__all__ = ["straighten", "check_straighten", "StraightenResult", "RootIndex"]
