import random
from fractions import Fraction

import pytest

from apdecomp.rational import (MAX_NORMALIZED_MAGNITUDE, MagnitudeError,
                               NotAProgressionError, classify_rational,
                               is_rational_ap, normalize_coprime,
                               rational_decompositions, rational_set,
                               special_triple_scale)
from oracles import brute_rational_pairs, equiv_q, group_rational_pairs

F = Fraction


def test_rational_set_sorts_and_dedups():
    assert rational_set([2, F(1, 2), 2, -1]) == (F(-1), F(1, 2), F(2))
    assert rational_set(["1/3", 0.5]) == (F(1, 3), F(1, 2))


def test_is_rational_ap():
    assert is_rational_ap(rational_set([-2, 1, 4])) == (F(-2), F(3))
    assert is_rational_ap(rational_set([F(1, 2), 1, F(3, 2)])) == (F(1, 2), F(1, 2))
    assert is_rational_ap(rational_set([1, 2, 4])) is None
    assert is_rational_ap(rational_set([7])) == (F(7), F(0))
    assert is_rational_ap(rational_set([3, 5])) == (F(3), F(2))
    with pytest.raises(ValueError):
        is_rational_ap(())


def test_normalize_coprime():
    assert normalize_coprime(rational_set([F(2, 3), F(4, 3)])) == ((1, 2), F(3, 2))
    assert normalize_coprime(rational_set([-2, 4])) == ((-1, 2), F(1, 2))
    assert normalize_coprime(rational_set([5])) == ((1,), F(1, 5))
    # already coprime integers: identity
    assert normalize_coprime(rational_set([-2, 1, 4])) == ((-2, 1, 4), F(1))
    with pytest.raises(ValueError):
        normalize_coprime(rational_set([0, 1]))
    with pytest.raises(ValueError):
        normalize_coprime(())


def test_special_triple_scale():
    assert special_triple_scale([-2, 1, 4]) == 1
    assert special_triple_scale([4, -2, -8]) == -2
    assert special_triple_scale([-2, 0, 1, 4]) == 1
    assert special_triple_scale([F(-1), F(1, 2), F(2)]) == F(1, 2)
    assert special_triple_scale([1, 2, 3]) is None
    assert special_triple_scale([1, 2]) is None


# ---------------------------------------------------------------------------
# pinned decomposition censuses (expected values from the brute-force oracle)

def test_doubling_triple_has_single_class():
    classes = rational_decompositions([-2, 1, 4])
    assert len(classes) == 1
    cls = classes[0]
    assert cls.tag == "DoublingPair"
    assert cls.a == (F(-1), F(2))
    assert set(cls.b) == {F(-1), F(2)}


def test_symmetric_progression_classes():
    classes = rational_decompositions([-3, -1, 1, 3])
    assert len(classes) == 5
    assert all(c.tag == "SymmetricFactor" for c in classes)
    assert any(equiv_q(c.a, c.b, (-1, 1), (1, 3)) for c in classes)


def test_even_symmetric_progression():
    classes = rational_decompositions([-4, -2, 0, 2, 4])
    assert len(classes) == 5
    assert all(c.tag == "SymmetricFactor" for c in classes)


def test_positive_progressions_do_not_decompose():
    assert rational_decompositions([2, 4, 6]) == []
    assert rational_decompositions([3, 6, 9, 12]) == []
    assert rational_decompositions([1, 2, 3, 4, 5]) == []


def test_non_ap_rejected():
    with pytest.raises(NotAProgressionError):
        rational_decompositions([1, 2, 4])
    with pytest.raises(NotAProgressionError):
        rational_decompositions([0, 1, 3])


def test_magnitude_limit():
    with pytest.raises(MagnitudeError):
        rational_decompositions([-2, 1, 4], max_magnitude=3)
    # the default bound is far above small inputs
    assert MAX_NORMALIZED_MAGNITUDE >= 10 ** 6
    rational_decompositions([-2, 1, 4], max_magnitude=4)


def test_degenerate_targets():
    assert rational_decompositions([5]) == []
    assert rational_decompositions([0]) == []
    assert rational_decompositions([0, 3]) == []


# ---------------------------------------------------------------------------
# classification of concrete pairs

def test_classify_rational_examples():
    assert classify_rational([-3, -1, 1, 3], [-1, 1], [1, 3]) == "SymmetricFactor"
    assert classify_rational([-2, 1, 4], [-1, 2], [-1, 2]) == "DoublingPair"
    assert classify_rational([1, 2, 3, 6], [1, 2], [1, 3]) == "Other"


def test_classify_rational_accepts_decomposition_object():
    cls = rational_decompositions([-2, 1, 4])[0]
    assert classify_rational([-2, 1, 4], cls) == "DoublingPair"


def test_classify_rational_rejects():
    with pytest.raises(ValueError):
        classify_rational([-2, 1, 4], [1, 2], [-1, 2])     # wrong product
    with pytest.raises(ValueError):
        classify_rational([-2, 1, 4], [1], [-2, 1, 4])     # singleton factor
    with pytest.raises(ValueError):
        classify_rational([-2, 1, 4], [0, 1], [-2, 4])     # zero in factor


# ---------------------------------------------------------------------------
# invariances and oracle agreement

def test_dilation_gives_same_census():
    base = rational_decompositions([-2, 1, 4])
    for q in (F(3), F(-1, 2), F(7, 5)):
        scaled = rational_decompositions([q * x for x in (-2, 1, 4)])
        assert len(scaled) == len(base)
        assert sorted(c.tag for c in scaled) == sorted(c.tag for c in base)


def test_search_matches_brute_force_on_small_aps():
    rng = random.Random(11)
    cases = set()
    while len(cases) < 10:
        a0 = rng.randint(-5, 5)
        d = rng.randint(-3, 3)
        if d == 0:
            continue
        cases.add((a0, d))
    for a0, d in sorted(cases):
        values = [a0, a0 + d, a0 + 2 * d]
        engine = rational_decompositions(values)
        pairs, factor = brute_rational_pairs(values)
        oracle = group_rational_pairs(pairs)
        assert len(engine) == len(oracle), (a0, d)
        assert sorted(c.tag for c in engine) == sorted(o["tag"] for o in oracle)
        for c in engine:
            # oracle pairs live in the scaled space: a * (factor*b) = factor*T
            scaled_b = tuple(factor * y for y in c.b)
            hits = [o for o in oracle
                    if equiv_q(c.a, scaled_b, o["member"][0], o["member"][1])]
            assert len(hits) == 1, (a0, d, c)


def test_representatives_multiply_back():
    for values in ([-3, -1, 1, 3], [-2, 1, 4], [-4, -2, 0, 2, 4]):
        target = {x for x in rational_set(values) if x != 0}
        for cls in rational_decompositions(values):
            assert {x * y for x in cls.a for y in cls.b} == target
            # first factor is the canonical coprime-integer form
            ints, factor = normalize_coprime(cls.a)
            assert tuple(F(v) for v in ints) == cls.a
