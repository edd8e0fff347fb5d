import pytest

from apdecomp.construct import (ConstructionResult, TwoSquares,
                                special_triple, sqrt_minus_one,
                                sum_two_squares, symmetric_decomposition,
                                theorem2_decomposition, theorem3_decomposition)
from apdecomp.decomp import (Decomposition, canonical_key,
                             classify_decomposition, find_decompositions,
                             is_special_triple)
from apdecomp.fpset import ResidueSet, productset, strip_zero


def rs(p, elems):
    return ResidueSet.from_elements(p, elems)


def check(result: ConstructionResult) -> None:
    assert result.verified
    assert productset(result.a, result.b).mask == strip_zero(result.interval).mask
    # must also be reachable through the generic classifier
    classify_decomposition(result.interval, Decomposition(result.a, result.b))


# ---------------------------------------------------------------------------
# two squares and sqrt(-1)

def test_sum_two_squares_examples():
    assert sum_two_squares(5) == TwoSquares(5, 1, 2)
    assert sum_two_squares(13) == TwoSquares(13, 2, 3)
    assert sum_two_squares(17) == TwoSquares(17, 1, 4)
    assert sum_two_squares(101) == TwoSquares(101, 1, 10)


def test_sum_two_squares_rejects():
    for p in (7, 11, 9, 4, 2):
        with pytest.raises(ValueError):
            sum_two_squares(p)
    with pytest.raises(ValueError):
        TwoSquares(13, 3, 2)
    with pytest.raises(ValueError):
        TwoSquares(13, 1, 3)


def test_sqrt_minus_one():
    assert sqrt_minus_one(5) == 3
    assert sqrt_minus_one(13) == 5
    assert sqrt_minus_one(17) == 13
    for p in (5, 13, 17, 29, 37, 41, 101):
        h = sqrt_minus_one(p)
        assert h * h % p == p - 1


# ---------------------------------------------------------------------------
# interval decomposition with B = {1, h}

def test_theorem2_example():
    res = theorem2_decomposition(13, 6)
    check(res)
    assert res.interval.elements() == (1, 2, 3, 4, 5, 6)
    assert res.a.elements() == (1, 3, 6)
    assert res.b.elements() == (1, 5)


def test_theorem2_full_group():
    res = theorem2_decomposition(13, 12)
    check(res)
    assert res.a.elements() == tuple(range(1, 13))


def test_theorem2_rejects():
    with pytest.raises(ValueError):
        theorem2_decomposition(5, 3)          # excluded prime
    with pytest.raises(ValueError):
        theorem2_decomposition(11, 6)         # p = 3 mod 4
    with pytest.raises(ValueError):
        theorem2_decomposition(13, 5)         # L below (p-1)/2
    with pytest.raises(ValueError):
        theorem2_decomposition(13, 13)        # L above p-1


def test_theorem2_factor_size_bound():
    for p in (13, 17, 29, 37):
        for L in range((p - 1) // 2, p):
            res = theorem2_decomposition(p, L)
            check(res)
            assert len(res.a) >= -(-L // 2)
            assert len(res.b) == 2


def test_theorem2_class_found_by_search():
    res = theorem2_decomposition(13, 6)
    classes = find_decompositions(res.interval)
    key = canonical_key(res.interval, Decomposition(res.a, res.b))
    assert key in {c.key() for c in classes}


# ---------------------------------------------------------------------------
# two-sided interval decomposition with B = {1, 2}

def test_theorem3_example():
    res = theorem3_decomposition(11, 4, 4)
    check(res)
    assert set(res.a.elements()) == {1, 2, 4, 7, 9, 10}
    assert res.b.elements() == (1, 2)


def test_theorem3_smallest_prime():
    res = theorem3_decomposition(3, 1, 1)
    check(res)
    assert res.a.elements() == (1, 2)
    assert res.b.elements() == (1, 2)


def test_theorem3_rejects():
    with pytest.raises(ValueError):
        theorem3_decomposition(11, 3, 4)      # 5*3 < 2*10
    with pytest.raises(ValueError):
        theorem3_decomposition(11, 4, -1)
    with pytest.raises(ValueError):
        theorem3_decomposition(9, 4, 4)


def test_theorem3_asymmetric_and_bound():
    for p, k1, k2 in [(11, 4, 5), (13, 5, 7), (17, 7, 8), (19, 8, 9)]:
        res = theorem3_decomposition(p, k1, k2)
        check(res)
        assert len(res.interval) == k1 + k2 + 1


# ---------------------------------------------------------------------------
# the length-3 special triple

def test_special_triple_examples():
    res = special_triple(7)
    check(res)
    assert set(res.interval.elements()) == {4, 5, 6}
    assert set(res.a.elements()) == {2, 6}
    assert set(res.b.elements()) == {2, 3}

    res = special_triple(5)
    check(res)
    assert set(res.interval.elements()) == {1, 2, 3}
    assert set(res.a.elements()) == {2, 4}
    assert set(res.b.elements()) == {3, 4}

    res = special_triple(7, sign=-1)
    check(res)
    assert set(res.interval.elements()) == {1, 2, 3}
    assert set(res.a.elements()) == {1, 5}


def test_special_triple_is_recognized():
    for p in (5, 7, 11, 13, 31):
        for sign in (1, -1):
            res = special_triple(p, sign)
            check(res)
            assert is_special_triple(res.interval)
            key = canonical_key(res.interval, Decomposition(res.a, res.b))
            assert key in {c.key() for c in find_decompositions(res.interval)}


def test_special_triple_rejects():
    with pytest.raises(ValueError):
        special_triple(3)
    with pytest.raises(ValueError):
        special_triple(4)
    with pytest.raises(ValueError):
        special_triple(7, sign=2)


# ---------------------------------------------------------------------------
# symmetric sets

def test_symmetric_decomposition_examples():
    res = symmetric_decomposition(rs(11, [-2, -1, 0, 1, 2]))
    check(res)
    assert set(res.a.elements()) == {1, 10}
    assert set(res.b.elements()) == {1, 2, 9, 10}

    res = symmetric_decomposition(rs(7, [-1, 1]))
    check(res)
    assert set(res.a.elements()) == {1, 6}


def test_symmetric_decomposition_rejects():
    with pytest.raises(ValueError):
        symmetric_decomposition(rs(7, [1, 2, 3]))
    with pytest.raises(ValueError):
        symmetric_decomposition(rs(7, [0, 1]))
    with pytest.raises(ValueError):
        symmetric_decomposition(rs(7, []))


def test_symmetric_decomposition_tag():
    res = symmetric_decomposition(rs(11, [-3, -1, 1, 3]))
    tag = classify_decomposition(res.interval, Decomposition(res.a, res.b))
    assert tag == "SymmetricFactor"
