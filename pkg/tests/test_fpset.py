import random

import pytest

from apdecomp.fpset import (ApCover, IntervalSpec, ModulusMismatchError,
                            ResidueSet, ap_cover_mod_p, dilate, is_interval,
                            is_prime, is_symmetric, kfold_sum, make_interval,
                            negate, productset, strip_zero, sumset)
from oracles import brute_ap_cover_min_length


def rs(p, elems):
    return ResidueSet.from_elements(p, elems)


def test_construction_validates_modulus():
    with pytest.raises(ValueError):
        ResidueSet(2, 0b10)
    with pytest.raises(ValueError):
        ResidueSet(9, 0b10)
    with pytest.raises(ValueError):
        ResidueSet(7, 1 << 7)  # bit out of range
    assert ResidueSet(7, 0).cardinality() == 0


def test_from_elements_reduces_mod_p():
    s = rs(7, [-1, 8, 15])
    assert s.elements() == (1, 6)
    assert 6 in s and 0 not in s
    assert len(s) == 2
    assert sorted(s) == [1, 6]


def test_interval_spec_bounds():
    assert IntervalSpec(7, 3, 3).p == 7
    IntervalSpec(7, 0, 0)   # empty interval is representable
    IntervalSpec(7, 0, 7)   # full field
    with pytest.raises(ValueError):
        IntervalSpec(7, 7, 3)
    with pytest.raises(ValueError):
        IntervalSpec(7, 0, 8)


def test_make_interval_examples():
    assert make_interval(IntervalSpec(7, 3, 3)).elements() == (4, 5, 6)
    assert make_interval(IntervalSpec(7, 5, 3)).elements() == (0, 1, 6)
    assert make_interval(IntervalSpec(13, 0, 6)).elements() == (1, 2, 3, 4, 5, 6)
    for p, n, length in [(11, 9, 5), (13, 12, 13), (5, 2, 0)]:
        got = make_interval(IntervalSpec(p, n, length))
        assert set(got.elements()) == {(n + j) % p for j in range(1, length + 1)}
        assert len(got) == length


def test_sumset_examples():
    y = rs(11, [3, 7, 10])
    assert sumset(rs(11, [0]), y).mask == y.mask
    assert sumset(rs(5, [1, 2]), rs(5, [1, 2])).elements() == (2, 3, 4)
    assert sumset(rs(7, [1, 2]), rs(7, [3, 5])).elements() == (0, 4, 5, 6)
    with pytest.raises(ModulusMismatchError):
        sumset(rs(5, [1]), rs(7, [1]))


def test_productset_examples():
    y = rs(11, [3, 7, 10])
    assert productset(rs(11, [1]), y).mask == y.mask
    assert productset(rs(7, [-1, 2]), rs(7, [2, 3])).elements() == (4, 5, 6)
    assert productset(rs(13, [1, 5]), rs(13, [1, 3, 6])).elements() == (1, 2, 3, 4, 5, 6)
    assert productset(rs(7, [0, 1]), rs(7, [3])).elements() == (0, 3)


def test_kfold_sum_examples():
    x = rs(11, [1, 2])
    assert kfold_sum(1, x).mask == x.mask
    assert kfold_sum(2, rs(11, [0, 1])).elements() == (0, 1, 2)
    assert kfold_sum(3, x).elements() == (3, 4, 5, 6)
    with pytest.raises(ValueError):
        kfold_sum(0, x)


def test_kfold_matches_iterative_definition():
    rng = random.Random(101)
    for _ in range(40):
        p = rng.choice([5, 7, 11, 13])
        x = rs(p, rng.sample(range(p), rng.randint(1, p - 1)))
        acc = x
        for k in range(2, 7):
            acc = sumset(acc, x)
            assert kfold_sum(k, x).mask == acc.mask


def test_interval_kfold_size():
    # k-fold sum of an N-term interval has k(N-1)+1 elements while it fits
    for p, n, length, k in [(31, 4, 5, 3), (61, 0, 7, 5), (13, 11, 4, 2)]:
        if k * (length - 1) + 1 <= p:
            got = kfold_sum(k, make_interval(IntervalSpec(p, n, length)))
            assert len(got) == k * (length - 1) + 1


def test_dilate_negate_strip():
    x = rs(13, [1, 3, 6])
    assert dilate(1, x).mask == x.mask
    assert dilate(12, x).mask == negate(x).mask
    assert dilate(5, x).elements() == (2, 4, 5)
    with pytest.raises(ValueError):
        dilate(0, x)
    with pytest.raises(ValueError):
        dilate(13, x)
    assert negate(rs(7, [1, 2])).elements() == (5, 6)
    assert negate(negate(x)).mask == x.mask
    assert strip_zero(rs(7, [0, 1, 2])).elements() == (1, 2)
    s = strip_zero(rs(7, [0, 1, 2]))
    assert strip_zero(s).mask == s.mask


def test_is_symmetric_ignores_zero():
    assert is_symmetric(rs(11, [7, 8, 9, 10, 0, 1, 2, 3, 4]))
    assert is_symmetric(rs(11, [1, 10]))
    assert not is_symmetric(rs(11, [1, 2]))
    assert is_symmetric(rs(11, [0, 1, 10]))


def test_dilation_bilinearity():
    rng = random.Random(7)
    for _ in range(40):
        p = rng.choice([7, 11, 13])
        a = rs(p, rng.sample(range(1, p), rng.randint(1, p - 2)))
        b = rs(p, rng.sample(range(1, p), rng.randint(1, p - 2)))
        lam = rng.randint(1, p - 1)
        left = productset(dilate(lam, a), dilate(pow(lam, -1, p), b))
        assert left.mask == productset(a, b).mask


def test_cauchy_davenport_on_random_sets():
    rng = random.Random(11)
    for _ in range(300):
        p = rng.choice([5, 7, 11, 13, 17])
        x = rs(p, rng.sample(range(p), rng.randint(1, p)))
        y = rs(p, rng.sample(range(p), rng.randint(1, p)))
        assert len(sumset(x, y)) >= min(p, len(x) + len(y) - 1)


def test_ap_cover_examples():
    c = ap_cover_mod_p(rs(11, [1, 4, 7]), 5)
    assert (c.start, c.difference, c.length) == (1, 3, 3)
    c = ap_cover_mod_p(rs(11, [1, 2, 5]), 5)
    assert c.length == 4
    assert {1, 2, 5} <= set(c.terms(11))
    c = ap_cover_mod_p(rs(13, [3]), 1)
    assert (c.start, c.difference, c.length) == (3, 1, 1)
    assert ap_cover_mod_p(rs(11, [1, 2, 5]), 3) is None
    with pytest.raises(ValueError):
        ap_cover_mod_p(rs(11, []), 4)


def test_ap_cover_matches_brute_force():
    # exhaustive at p=7 for all nonempty sets, sampled at 11/13/31
    p = 7
    for mask in range(1, 1 << p):
        x = ResidueSet(p, mask)
        c = ap_cover_mod_p(x, p)
        expected = brute_ap_cover_min_length(p, x.elements(), p)
        assert c is not None and c.length == expected
        assert set(x.elements()) <= set(c.terms(p))
    rng = random.Random(23)
    for _ in range(60):
        p = rng.choice([11, 13, 31])
        x = rs(p, rng.sample(range(p), rng.randint(1, 4)))
        c = ap_cover_mod_p(x, p)
        assert c.length == brute_ap_cover_min_length(p, x.elements(), p)
        assert set(x.elements()) <= set(c.terms(p))


def test_ap_cover_respects_max_length():
    rng = random.Random(29)
    for _ in range(40):
        p = rng.choice([11, 13])
        x = rs(p, rng.sample(range(p), rng.randint(2, 6)))
        full = ap_cover_mod_p(x, p)
        assert ap_cover_mod_p(x, full.length) is not None
        if full.length > 1:
            assert ap_cover_mod_p(x, full.length - 1) is None


def test_is_interval():
    assert is_interval(rs(7, [4, 5, 6])) == IntervalSpec(7, 3, 3)
    assert is_interval(rs(7, [6, 0, 1])) == IntervalSpec(7, 5, 3)
    assert is_interval(rs(7, [1, 3])) is None
    assert is_interval(rs(7, [])) == IntervalSpec(7, 0, 0)
    assert is_interval(rs(7, range(7))) == IntervalSpec(7, 0, 7)
    rng = random.Random(31)
    for _ in range(60):
        p = rng.choice([7, 11, 13])
        n, length = rng.randrange(p), rng.randint(1, p)
        spec = is_interval(make_interval(IntervalSpec(p, n, length)))
        assert spec is not None and spec.N == length
        back = make_interval(spec)
        assert back.mask == make_interval(IntervalSpec(p, n, length)).mask


def test_ap_cover_terms_and_validation():
    cover = ApCover(1, 3, 3)
    assert cover.terms(11) == (1, 4, 7)
    assert cover.covers(rs(11, [4, 7]))
    assert not cover.covers(rs(11, [2]))
    with pytest.raises(ValueError):
        ApCover(0, 0, 3)
    with pytest.raises(ValueError):
        ApCover(0, 1, 0)


def test_is_prime_small():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
