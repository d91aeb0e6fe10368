import random

import pytest

from helpers import random_spec
from tgrs.code import generator_matrix, parity_check_matrix, validate_spec
from tgrs.errors import BudgetExceededError
from tgrs.field import make_field
from tgrs.matrix import MatGF
from tgrs.oracle import dual_bruteforce, min_distance_bruteforce, minors_mds_check, singleton_defects


def test_reed_solomon_distance():
    f = make_field(7)
    spec = validate_spec(f, 3, 1, range(7), [0])
    g = generator_matrix(spec)
    assert min_distance_bruteforce(g) == 5
    assert minors_mds_check(g)


def test_repetition_and_rank_deficient():
    f = make_field(5)
    assert min_distance_bruteforce(MatGF(f, [[1, 1, 1, 1]])) == 4
    assert min_distance_bruteforce(MatGF(f, [[1, 2, 3], [2, 4, 1]])) == 0


def test_extension_field_distance_matches_minors():
    f = make_field(3, 2)
    spec = validate_spec(f, 3, 1, range(8), [5])
    g = generator_matrix(spec)
    assert (min_distance_bruteforce(g) == 6) == minors_mds_check(g)


def test_budget(monkeypatch):
    g = generator_matrix(validate_spec(make_field(13), 5, 1, range(12), [1]))
    with pytest.raises(BudgetExceededError):
        min_distance_bruteforce(g, budget=100)
    monkeypatch.setenv("TGRS_ENUM_BUDGET", "10")
    with pytest.raises(BudgetExceededError):
        min_distance_bruteforce(g)


def test_dual_matches_parity_check():
    rng = random.Random(21)
    for _ in range(20):
        spec = random_spec(rng, max_n=9)
        assert dual_bruteforce(generator_matrix(spec)).row_space_equals(parity_check_matrix(spec))


def test_singleton_defects_fields():
    spec = validate_spec(make_field(7), 3, 1, range(7), [0])
    pair = singleton_defects(spec)
    assert (pair.s_c, pair.s_dual, pair.d_c, pair.d_dual) == (0, 0, 5, 4)
