from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from degsl.poly import Poly

names = ["a", "b", "c"]
syms = sympy.symbols(names)

term = st.tuples(st.integers(-3, 3), st.lists(st.sampled_from(names), max_size=3))
polys = st.lists(term, max_size=4)


def build(terms):
    p = Poly()
    for c, vs in terms:
        p = p + Poly.monomial(vs, c)
    return p


def to_sympy(p):
    env = dict(zip(names, syms))
    return sum((sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[env[v] ** e for v, e in m])
                for m, c in p.terms.items()), sympy.Integer(0))


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_ring_ops_match_sympy(a, b):
    p, q = build(a), build(b)
    for ours, ref in ((p + q, to_sympy(p) + to_sympy(q)), (p * q, to_sympy(p) * to_sympy(q)),
                      (p - q, to_sympy(p) - to_sympy(q)), (p ** 2, to_sympy(p) ** 2)):
        assert sympy.expand(to_sympy(ours) - ref) == 0


@settings(max_examples=40, deadline=None)
@given(polys)
def test_derivation_matches_sympy_diff(a):
    p = build(a)
    d = p.derivation(lambda v: Poly.const(1) if v == "a" else Poly())
    assert sympy.expand(to_sympy(d) - sympy.diff(to_sympy(p), syms[0])) == 0


def test_substitute_and_evaluate():
    p = Poly.monomial(["a", "a", "b"], 2) - Poly.var("c")
    q = p.substitute(lambda v: Poly.var("b") + Poly.const(1) if v == "a" else Poly.var(v))
    vals = {"a": Fraction(3), "b": Fraction(2), "c": Fraction(1, 2)}
    assert q.evaluate(vals) == p.evaluate({**vals, "a": vals["b"] + 1})
    assert p.evaluate(vals) == Fraction(71, 2)


def test_zero_handling():
    p = Poly.var("a") - Poly.var("a")
    assert p.is_zero() and p == 0 and not p.terms
