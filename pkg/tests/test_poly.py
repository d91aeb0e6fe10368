import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from tgrs.errors import BudgetExceededError, TgrsError
from tgrs.field import make_field
from tgrs.matrix import MatGF
from tgrs.poly import (
    Poly,
    e_sequence,
    lambda_sequence,
    poly_derivative,
    poly_divide_exact,
    poly_eval,
    poly_from_roots,
    root_multiplicities,
    roots_in_field,
)

F13 = make_field(13)


def P(coeffs, f=F13):
    return Poly(f, coeffs)


def test_from_roots_examples():
    assert poly_from_roots(F13, [1, 2, 3]).descending() == [1, 7, 11, 7]
    assert poly_from_roots(F13, []) == P([1])
    assert poly_from_roots(F13, [0]) == P([0, 1])
    with pytest.raises(TgrsError):
        poly_from_roots(F13, [1, 1])


def test_zero_polynomial_degree_is_none():
    assert P([0, 0]).degree is None
    assert P([0, 0]).coeffs == ()
    assert P([3, 0, 1, 0]).degree == 2


def test_divide_exact_examples():
    top = P([0, 12] + [0] * 11 + [1])  # x^13 - x
    assert poly_divide_exact(top, P([8, 0, 0, 1])).coeffs == (0, 8, 0, 0, 12, 0, 0, 5, 0, 0, 1)
    assert poly_divide_exact(top, P([0, 10, 0, 0, 0, 1])).coeffs == (9, 0, 0, 0, 3, 0, 0, 0, 1)
    with pytest.raises(TgrsError):
        poly_divide_exact(P([1, 0, 1]), P([1, 1]))
    with pytest.raises(ZeroDivisionError):
        poly_divide_exact(P([1]), P([]))


def test_derivative_and_eval():
    d = poly_derivative(P([9, 0, 0, 0, 3, 0, 0, 0, 1]))
    assert d.coeffs == (0, 0, 0, 12, 0, 0, 0, 8)
    assert d(1) == 7
    assert poly_derivative(P([5])).is_zero()
    assert poly_derivative(Poly.monomial(F13, 13)).is_zero()
    assert poly_eval(P([2, 7, 1]), 0) == 2


def test_roots_examples():
    assert [int(r) for r in roots_in_field(P([8, 0, 0, 1]))] == [7, 8, 11]
    assert [int(r) for r in roots_in_field(P([10, 0, 0, 0, 1]))] == [2, 3, 10, 11]
    assert [int(r) for r in roots_in_field(P([1, 0, 1]))] == [5, 8]
    assert root_multiplicities(P([1, 2, 1])) == [(12, 2)]


def test_root_scan_budget():
    with pytest.raises(BudgetExceededError):
        roots_in_field(Poly(make_field(1000003), [1, 1]))


def test_from_roots_then_roots_is_identity_exhaustive_small():
    f = make_field(7)
    for size in range(0, 4):
        for rs in itertools.combinations(range(7), size):
            assert [int(r) for r in roots_in_field(poly_from_roots(f, rs))] == list(rs)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 12), max_size=7), st.lists(st.integers(0, 12), min_size=1, max_size=5))
def test_divmod_properties(a, b):
    pa, pb = P(a), P(b)
    if pb.is_zero():
        return
    assert poly_divide_exact(pa * pb, pb) == pa
    quo, rem = pa.divmod(pb)
    assert quo * pb + rem == pa
    assert rem.degree is None or rem.degree < pb.degree


def test_e_sequence_examples():
    assert e_sequence(F13, [1, 7, 11, 7]).e == (1, 6, 12, 12)
    c1, c2 = 4, 9
    assert e_sequence(F13, [1, c1, c2]).e == (1, F13.neg(c1), F13.sub(F13.mul(c1, c1), c2))
    assert e_sequence(F13, [1, 0, 0, 0]).e == (1, 0, 0, 0)
    with pytest.raises(TgrsError):
        e_sequence(F13, [2, 1])


def test_e_sequence_inverts_toeplitz():
    rng = random.Random(3)
    for q in (5, 7, 13):
        f = make_field(q)
        for _ in range(20):
            c = [1] + [rng.randrange(q) for _ in range(rng.randint(0, 6))]
            seq = e_sequence(f, c)
            prod = MatGF(f, seq.toeplitz()) @ MatGF(f, seq.inverse_matrix())
            assert prod == MatGF.identity(f, len(c))


def test_lambda_sequence_examples():
    s1, s2 = 3, 5
    lam = lambda_sequence(F13, [1, s1, s2, 0]).values
    assert lam[:3] == (1, F13.neg(s1), F13.sub(F13.mul(s1, s1), s2))
    assert lambda_sequence(F13, [1, 0, 0]).values == (1, 0, 0)
    assert all(x == 0 for x in lambda_sequence(F13, [1, 4, 2, 9]).residual()[1:])
    with pytest.raises(TgrsError):
        lambda_sequence(F13, [0, 1])


def vandermonde_top_coefficient(f, alpha, t):
    # solve sum_j f_j a_i^j = a_i^(n-1+t) and return f_{n-1}
    n = len(alpha)
    rows = [[f.pow(a, j) for j in range(n)] for a in alpha]
    sol = MatGF(f, rows).solve([f.pow(a, n - 1 + t) for a in alpha])
    assert sol.unique
    return sol.particular[n - 1]


def test_lambda_gives_vandermonde_top_coefficient():
    rng = random.Random(5)
    for q in (7, 11, 13):
        f = make_field(q)
        for _ in range(8):
            alpha = rng.sample(range(q), rng.randint(1, min(q, 8)))
            sigma = poly_from_roots(f, alpha).descending()
            lam = lambda_sequence(f, sigma).values
            for t in range(len(alpha) + 1):
                assert vandermonde_top_coefficient(f, alpha, t) == lam[t]
