import pytest

from chipfire import formulas
from chipfire.engine import simulate, simulate_layers
from chipfire.formulas import (
    D_diff,
    D_explicit,
    D_recursive,
    D_via_a_seq,
    a_seq,
    b_seq,
    d0,
    d0_by_replacement,
    d0_formula,
    d0_recursive,
    divisibility_check,
    fire_profile,
    fires_difference,
    root_fires,
    root_fires_rec,
    special_root_fires,
    special_total_fires,
    special_vertex_fires,
    total_fires,
    total_fires_rec,
    vertex_fires,
    vertex_fires_via_root,
)
from chipfire.numerics import height_index, repunit


def test_vertex_fires_examples():
    assert vertex_fires(9, 3, 0) == 2
    for N, k in [(9, 3), (100, 2), (40, 3), (77, 4)]:
        n = height_index(N, k)
        assert vertex_fires(N, k, n - 1) == 0
    # oracle: simulate(15, 2) gives f = (11, 4, 1, 0)
    assert simulate(15, 2).fires_by_layer == (11, 4, 1, 0)
    assert vertex_fires(15, 2, 1) == 4


def test_vertex_fires_rejects_bad_layer():
    with pytest.raises(ValueError):
        vertex_fires(9, 3, 2)
    with pytest.raises(ValueError):
        vertex_fires(9, 3, -1)


def test_fires_difference_examples():
    for N, k in [(20, 2), (50, 3), (90, 4)]:
        n = height_index(N, k)
        cfg_last = vertex_fires(N, k, n - 2) - vertex_fires(N, k, n - 1)
        assert fires_difference(N, k, n - 2) == cfg_last
    assert fires_difference(9, 3, 0) == 2  # f0 - f1 = 2 - 0
    assert fires_difference(15, 2, 0) == 7  # 11 - 4 per the oracle


def test_fires_difference_matches_vertex_fires():
    for k in (2, 3, 4):
        for N in range(1, 400):
            n = height_index(N, k)
            for i in range(n - 1):
                assert fires_difference(N, k, i) == (
                    vertex_fires(N, k, i) - vertex_fires(N, k, i + 1))


def test_telescoping_differences():
    for k in (2, 3, 5):
        for N in (19, 86, 121, 900):
            n = height_index(N, k)
            for i in range(n):
                total = sum(fires_difference(N, k, t) for t in range(i, n - 1))
                assert vertex_fires(N, k, i) == total


def test_vertex_fires_via_root():
    assert vertex_fires_via_root(15, 2, 1) == root_fires(7, 2) == 4
    assert vertex_fires_via_root(9, 3, 1) == 0
    for k in (2, 3, 4, 6):
        for N in range(1, 300):
            n = height_index(N, k)
            for i in range(n):
                assert vertex_fires_via_root(N, k, i) == vertex_fires(N, k, i)


def test_root_fires_examples():
    assert root_fires(9, 3) == 2
    assert root_fires(16, 2) == 11
    for k in (2, 3, 7):
        for N in range(1, k + 1):
            assert root_fires(N, k) == 0


def test_root_fires_recursion():
    assert root_fires_rec(0, 2) == 0
    assert root_fires_rec(0, 9) == 0
    assert root_fires_rec(9, 3) == 2
    assert root_fires_rec(20, 2) == 14


def test_total_fires_examples():
    assert total_fires(16, 2) == 23
    assert total_fires(15, 3) == 8
    for k in (2, 4, 10):
        for N in range(1, k + 1):
            assert total_fires(N, k) == 0


def test_total_fires_recursion():
    assert total_fires_rec(0, 5) == 0
    assert total_fires_rec(24, 4) == 10
    assert total_fires_rec(12, 2) == 11


def test_closed_forms_equal_recursions():
    for k in range(2, 8):
        for N in range(1, 1500):
            assert root_fires(N, k) == root_fires_rec(N, k)
            assert total_fires(N, k) == total_fires_rec(N, k)


def test_formulas_match_engine():
    for k in (2, 3, 4):
        for N in range(1, 300):
            sim = simulate_layers(N, k)
            assert sim.root_fires == root_fires(N, k)
            assert sim.total_fires == total_fires(N, k)
            for i, f in enumerate(sim.fires_by_layer):
                assert f == vertex_fires(N, k, i)


def test_block_constancy():
    # every quantity is constant on N in {ak+1, ..., (a+1)k}
    for k in (2, 3, 5):
        for a in range(0, 60):
            base = fire_profile(a * k + 1, k)
            for N in range(a * k + 2, (a + 1) * k + 1):
                p = fire_profile(N, k)
                assert p.f == base.f and p.total == base.total, (N, k)


def test_fire_profile_shape():
    p = fire_profile(9, 3)
    assert p.f == (2, 0)
    assert p.total == 2
    assert p.f[-1] == 0
    assert all(x >= y for x, y in zip(p.f, p.f[1:]))
    assert p.total == sum(f * p.k**i for i, f in enumerate(p.f))


def test_special_vertex_fires():
    for n in range(1, 10):
        for i in range(n):
            assert special_vertex_fires(n, 2, i) == 2 ** (n - i) - (n - i) - 1
    for k in (3, 4, 5):
        assert special_vertex_fires(4, k, 3) == 0
    assert special_vertex_fires(4, 3, 0) == 18
    # oracle: repunit(4, 3) = 40 chips on the ternary tree
    assert simulate(repunit(4, 3), 3).fires_by_layer[0] == 18
    for k in (2, 3, 4):
        for n in range(1, 8):
            N = repunit(n, k)
            for i in range(n):
                assert special_vertex_fires(n, k, i) == vertex_fires(N, k, i)


def test_special_root_fires():
    assert special_root_fires(3, 2) == 4
    assert [special_root_fires(n, 2) for n in range(1, 6)] == [0, 1, 4, 11, 26]
    for k in (2, 5, 9):
        assert special_root_fires(1, k) == 0
    assert special_root_fires(4, 3) == 18
    for k in (2, 3, 4, 6):
        for n in range(1, 9):
            assert special_root_fires(n, k) == root_fires(repunit(n, k), k)


def test_special_total_fires():
    for n in range(1, 12):
        assert special_total_fires(n, 2) == (n - 3) * 2**n + n + 3
    assert special_total_fires(3, 4) == 10
    assert special_total_fires(3, 5) == 12
    for k in (2, 3, 4, 6):
        for n in range(1, 9):
            assert special_total_fires(n, k) == total_fires(repunit(n, k), k)


def test_a_seq():
    for k in (2, 3, 8):
        assert a_seq(1, k) == 1
    assert a_seq(3, 4) == 27
    assert a_seq(7, 10) == 1234567
    assert a_seq(19, 10) == 1234567901234567899


def test_b_seq():
    for k in (2, 4, 7):
        assert b_seq(1, k) == 1
    assert b_seq(2, 2) == 5
    assert b_seq(2, 3) == 7


def test_b_partial_sums_give_special_totals():
    for k in range(2, 11):
        running = 0
        for n in range(1, 31):
            running += b_seq(n, k)
            assert running == special_total_fires(n + 1, k)


def test_d0_examples():
    for k in (2, 3, 6):
        assert d0(1, k) == 1
    assert d0(7, 2) == 3
    assert d0(13, 3) == 3
    assert d0(10, 3) == 2


def test_d0_is_g0_difference():
    for k in (2, 3, 4):
        for m in range(1, 500):
            assert d0(m, k) == root_fires((m + 1) * k, k) - root_fires(m * k, k)


def test_d0_routes_agree():
    for k in (2, 3, 4, 5):
        for m in range(1, 2000):
            assert d0_formula(m, k) == d0_recursive(m, k)


def test_d0_replacement_construction():
    assert d0_by_replacement(18, 2) == [1, 1, 2, 1, 2, 1, 3, 1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1]
    for k in (2, 3, 4, 5):
        seq = d0_by_replacement(600, k)
        assert seq == [d0(m, k) for m in range(1, 601)]


def test_D_examples():
    assert D_diff(7, 2) == 11
    assert D_diff(4, 3) == 5
    assert D_diff(7, 6) == 8


def test_D_is_G_difference():
    for k in (2, 3, 4):
        for m in range(1, 400):
            assert D_diff(m, k) == total_fires((m + 1) * k, k) - total_fires(m * k, k)


def test_D_routes_agree():
    for k in (2, 3, 4, 5, 6):
        for m in range(1, 2000):
            assert D_recursive(m, k) == D_via_a_seq(m, k) == D_explicit(m, k)


def test_divisibility():
    assert divisibility_check(1, 4)
    assert special_total_fires(3, 4) == 10
    for k in (2, 5, 10):
        assert divisibility_check(0, k)
    assert divisibility_check(2, 2)
    assert special_total_fires(5, 2) == 72
    for k in range(2, 11):
        for j in range(0, 11):
            assert divisibility_check(j, k)


def test_input_validation():
    with pytest.raises(ValueError):
        d0(0, 3)
    with pytest.raises(ValueError):
        D_diff(0, 3)
    with pytest.raises(ValueError):
        a_seq(0, 3)
    with pytest.raises(ValueError):
        b_seq(0, 3)
    with pytest.raises(ValueError):
        special_root_fires(0, 3)
    with pytest.raises(ValueError):
        divisibility_check(-1, 3)
    with pytest.raises(ValueError):
        formulas.root_fires_rec(-1, 2)
