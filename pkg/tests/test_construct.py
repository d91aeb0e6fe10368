import itertools

import pytest

from helpers import Q11_ALPHA
from tgrs.classify import gram_is_zero, is_self_dual
from tgrs.code import generator_matrix
from tgrs.construct import construct_self_dual, eta_chain, search_mds, splitting_degree
from tgrs.errors import HypothesisError, TgrsError
from tgrs.field import make_field
from tgrs.oracle import min_distance_bruteforce
from tgrs.poly import poly_derivative

F13 = make_field(13)


def test_eta_chain_examples():
    assert eta_chain(F13, 3, 5, [2]) == (2, 3, 6)
    assert eta_chain(F13, 3, 5, [2, 3]) == (2, 3, 6)
    assert eta_chain(F13, 4, 3, [1, 3]) == (1, 3, 2, 7)
    with pytest.raises(TgrsError):
        eta_chain(F13, 3, 5, [F13.inv(5)])
    with pytest.raises(TgrsError):
        eta_chain(F13, 3, 5, [2, 4])  # middle must be 2/a
    with pytest.raises(TgrsError):
        eta_chain(F13, 4, 3, [1])
    with pytest.raises(TgrsError):
        eta_chain(make_field(2, 3), 2, 1, [1])


def test_eta_chain_pairs_sum_to_a():
    a = 7
    for free in itertools.product(range(1, 13), repeat=2):
        if F13.inv(a) in free:
            continue
        eta = eta_chain(F13, 5, a, free)
        for i in range(5):
            assert F13.add(F13.inv(eta[i]), F13.inv(eta[4 - i])) == a


def test_splitting_degree():
    assert splitting_degree(F13, 3, 5) == 1
    assert splitting_degree(F13, 4, 3) == 1
    assert splitting_degree(F13, 5, 2) == 4  # 5 divides 13^4 - 1 first
    assert splitting_degree(make_field(7), 2, 3) == 2  # 3 is a non-square mod 7


def test_odd_ell_recipe():
    r = construct_self_dual(13, 3, 5, [2])
    assert r.m_poly.coeffs == (0, 8, 0, 0, 12, 0, 0, 5, 0, 0, 1)
    assert sorted(r.spec.alpha) == [0, 1, 2, 3, 4, 5, 6, 9, 10, 12]
    assert (r.n, r.k, r.s) == (10, 5, 1)
    assert gram_is_zero(r.spec) and is_self_dual(r.spec).holds
    assert r.flags  # 3 ell > k here


def test_even_ell_recipe_with_given_modulus():
    r = construct_self_dual(13, 4, 3, [1, 3], target_modulus=(2, 7, 1))
    big = r.spec.ctx
    assert r.m_poly.coeffs == (9, 0, 0, 0, 3, 0, 0, 0, 1)
    assert sorted(r.spec.alpha) == [1, 4, 5, 6, 7, 8, 9, 12]
    assert [big.mul(v, v) for v in r.spec.v] == [2, 2, 10, 3, 10, 3, 11, 11]
    dm = poly_derivative(r.m_poly)
    for a, v in zip(r.spec.alpha, r.spec.v):
        assert big.mul(big.mul(v, v), dm.eval_int(a)) == 1
    assert min_distance_bruteforce(generator_matrix(r.spec)) == 5


def test_larger_split_instance_meets_distance_bound():
    # x^2 - 3 splits only over GF(49)
    r = construct_self_dual(7, 2, 3, [1])
    assert r.s == 2 and r.n == 49 - 2 - 1
    assert gram_is_zero(r.spec)
    assert r.to_dict()["provenance"]["s"] == 2


@pytest.mark.parametrize(
    "args",
    [(13, 13, 5, []), (9, 3, 1, [1]), (3, 1, 1, []), (13, 3, 0, [2])],
)
def test_construction_hypotheses(args):
    with pytest.raises(HypothesisError):
        construct_self_dual(*args)


def test_search_grs_sanity_and_empty_domain():
    f = make_field(11)
    res = search_mds(f, Q11_ALPHA, 4, 2, eta_domain=[(0, 0)])
    assert (res.count, res.scanned) == (1, 1)
    assert search_mds(f, Q11_ALPHA, 4, 2, eta_domain=[]).count == 0


def test_search_lists_in_canonical_order_and_workers_agree():
    f = make_field(11)
    one = search_mds(f, Q11_ALPHA, 6, 2, collect=True)
    two = search_mds(f, Q11_ALPHA, 6, 2, collect=True, workers=2)
    assert one.count == two.count == len(one.tuples) == 14
    assert one.tuples == two.tuples == sorted(one.tuples)
    assert one.scanned == 121 and one.distance == 3


def test_search_general_path_for_one_twist():
    f = make_field(11)
    res = search_mds(f, Q11_ALPHA, 4, 1, collect=True)
    assert (0,) in res.tuples
    assert res.count <= 11


def test_search_rejects_bad_regime():
    with pytest.raises(HypothesisError):
        search_mds(make_field(11), Q11_ALPHA, 2, 1)
    with pytest.raises(TgrsError):
        search_mds(make_field(11), Q11_ALPHA, 4, 2, eta_domain=[(1,)])
