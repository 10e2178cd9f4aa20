import random

import pytest
from hypothesis import given, settings, strategies as st

from degsl.errors import TheoremCheckFailed
from degsl.exactlin import SpanBasis
from degsl.ideal import b_closure, presentation_report, e_adjoint, ideal_generators, ideal_hilbert
from degsl.roots import MultDegree, all_multidegrees, positive_roots, root_position
from degsl.tensormod import hilbert


def unit(n, r, c):
    M = [[0] * n for _ in range(n)]
    M[r - 1][c - 1] = 1
    return M


def bracket(A, B):
    n = len(A)
    mul = lambda X, Y: [[sum(X[r][k] * Y[k][c] for k in range(n)) for c in range(n)] for r in range(n)]
    P, Q = mul(A, B), mul(B, A)
    return [[P[r][c] - Q[r][c] for c in range(n)] for r in range(n)]


def bracket_table(n):
    """e_{c,d} acting on f_{a,b}: matrix commutator, projected to the lower triangle."""
    table = {}
    for c, d in positive_roots(n):
        for a, b in positive_roots(n):
            C = bracket(unit(n, c, d + 1), unit(n, b + 1, a))
            table[(c, d), (a, b)] = {(col, row - 1): C[row - 1][col - 1]
                                     for row in range(1, n + 1) for col in range(1, row)
                                     if C[row - 1][col - 1]}
    return table


def oracle_adjoint(c, d, p, n, table):
    pos = root_position(n)
    roots = positive_roots(n)
    out = {}
    for s, coeff in p.items():
        for idx, e in enumerate(s):
            for tgt, val in table[(c, d), roots[idx]].items():
                if not e:
                    continue
                t = list(s)
                t[idx] -= 1
                t[pos[tgt]] += 1
                t = tuple(t)
                out[t] = out.get(t, 0) + val * e * coeff
    return {k: v for k, v in out.items() if v}


@pytest.mark.parametrize("n", [3, 4, 5])
def test_e_adjoint_matches_matrix_brackets(n):
    table = bracket_table(n)
    rng = random.Random(n)
    k = len(positive_roots(n))
    for _ in range(20):
        p = {tuple(rng.randint(0, 2) for _ in range(k)): rng.randint(-3, 3) for _ in range(3)}
        p = {s: c for s, c in p.items() if c}
        for c, d in positive_roots(n):
            assert e_adjoint(c, d, p, n) == oracle_adjoint(c, d, p, n, table)


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=3, max_size=3))
def test_closure_is_e_stable(vec):
    m = MultDegree(3, tuple((r, e) for r, e in zip(positive_roots(3), vec) if e))
    closure = b_closure(ideal_generators(m), 3)
    basis = SpanBasis()
    basis.extend(closure)
    for v in closure:
        for c, d in positive_roots(3):
            w = e_adjoint(c, d, v, 3)
            assert not w or w in basis


@pytest.mark.parametrize("m", [MultDegree.from_dict(3, {(1, 1): 1}), MultDegree.from_dict(3, {(1, 1): 1, (2, 2): 1}),
                               MultDegree.from_dict(3, {(1, 1): 2}), MultDegree.from_dict(4, {(2, 2): 1})], ids=str)
def test_diagonal_ideal_presentation(m):
    assert ideal_hilbert(m)[: len(hilbert(m))] == hilbert(m)
    assert presentation_report(m)["agree"]


@pytest.mark.parametrize("m", list(all_multidegrees(3, 1)), ids=str)
def test_surjection_inequality_n3(m):
    h = ideal_hilbert(m)
    mh = hilbert(m)
    assert all(h[d] >= mh[d] for d in range(len(mh)))
    assert presentation_report(m)["agree"]


def test_report_n4_ones():
    rep = presentation_report(MultDegree.ones(4))
    assert rep["ideal_hilbert"] == rep["module_hilbert"] == [1, 6, 18, 38, 58, 70, 74, 25]


def test_report_raises_on_broken_surjection(monkeypatch):
    import degsl.ideal as ideal

    m = MultDegree.from_dict(3, {(1, 1): 1})
    monkeypatch.setattr(ideal, "ideal_hilbert", lambda m, dmax=None, cap=0: [1, 0, 0])
    with pytest.raises(TheoremCheckFailed, match="surjection"):
        ideal.presentation_report(m)
    monkeypatch.setattr(ideal, "ideal_hilbert", lambda m, dmax=None, cap=0: [1] * ((dmax or 1) + 1))
    with pytest.raises(TheoremCheckFailed, match="larger"):
        ideal.presentation_report(m)
