import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zerocycle.groups import (
    GroupSpec,
    ResidueSet,
    classify_near_ap,
    is_near_ap,
    near_ap_witness,
    omega,
    proper_divisors,
    shift_set,
)


class TestOmega:
    @pytest.mark.parametrize("k,expected", [(1, 0), (7, 1), (12, 3), (2, 1), (8, 3),
                                            (36, 4), (97, 1), (100, 4)])
    def test_values(self, k, expected):
        assert omega(k) == expected

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            omega(0)
        with pytest.raises(ValueError):
            omega(-5)

    def test_additive_over_products(self):
        for m in range(2, 101):
            for n in range(2, 101):
                assert omega(m * n) == omega(m) + omega(n)


class TestGroupSpec:
    def test_validation(self):
        with pytest.raises(ValueError):
            GroupSpec(())
        with pytest.raises(ValueError):
            GroupSpec((1,))

    def test_cyclic_arithmetic(self):
        g = GroupSpec.cyclic(6)
        assert g.order == 6 and g.modulus() == 6
        assert g.add((4,), (5,)) == (3,)
        assert g.neg((2,)) == (4,)
        assert g.sub((1,), (4,)) == (3,)
        assert g.times((2,), 4) == (2,)

    def test_multi_factor(self):
        g = GroupSpec((2, 3))
        assert g.order == 6
        assert g.add((1, 2), (1, 2)) == (0, 1)
        assert g.zero() == (0, 0)
        assert list(g.elements())[0] == (0, 0)
        with pytest.raises(ValueError):
            g.modulus()

    @given(st.lists(st.integers(2, 7), min_size=1, max_size=3), st.data())
    @settings(max_examples=60, derandomize=True)
    def test_index_roundtrip(self, factors, data):
        g = GroupSpec(tuple(factors))
        i = data.draw(st.integers(0, g.order - 1))
        assert g.index_of(g.element_at(i)) == i


class TestResidueSet:
    def test_validation(self):
        with pytest.raises(ValueError):
            ResidueSet(5, frozenset({5}))
        s = ResidueSet.of(5, [7, 9])
        assert s.sorted() == [2, 4]

    def test_translate(self):
        s = ResidueSet(6, frozenset({0, 5}))
        assert s.translate(2).sorted() == [1, 2]


def brute_shift_set(k, members):
    out = set()
    for x in range(k):
        for dropped in members:
            rest = members - {dropped}
            if all((m + x) % k in members for m in rest):
                out.add(x)
                break
    return out


class TestShiftSet:
    @pytest.mark.parametrize("k,members,expected", [
        (8, {0, 2, 4}, [0, 2, 4, 6]),
        (5, {1, 2, 3}, [0, 1, 4]),
        (6, {0, 3}, [0, 3]),
    ])
    def test_frozen_examples(self, k, members, expected):
        assert shift_set(ResidueSet(k, frozenset(members))).sorted() == expected

    def test_zero_always_member(self):
        for k in range(1, 9):
            for mask in range(1, 1 << k):
                members = frozenset(i for i in range(k) if mask >> i & 1)
                assert 0 in shift_set(ResidueSet(k, members)).members

    @given(st.integers(2, 10), st.data())
    @settings(max_examples=80, derandomize=True)
    def test_translation_invariant(self, k, data):
        members = data.draw(st.frozensets(st.integers(0, k - 1), min_size=1))
        t = data.draw(st.integers(0, k - 1))
        a = ResidueSet(k, members)
        assert shift_set(a.translate(t)).members == shift_set(a).members

    def test_matches_independent_brute_force(self):
        for k in range(2, 9):
            for mask in range(1, 1 << k):
                members = frozenset(i for i in range(k) if mask >> i & 1)
                assert shift_set(ResidueSet(k, members)).members == \
                    brute_shift_set(k, members)


class TestNearAP:
    def test_too_small(self):
        assert not is_near_ap(ResidueSet(5, frozenset({0})))

    def test_too_large(self):
        assert not is_near_ap(ResidueSet(6, frozenset({0, 1, 2, 3, 4})))

    def test_example_with_witness(self):
        a = ResidueSet(8, frozenset({0, 2, 4}))
        wit = near_ap_witness(a)
        assert wit is not None
        assert len(wit.b_set) == 2 and wit.a != 0
        assert all((m + wit.a) % 8 in a.members for m in wit.b_set)
        # the textbook witness (B = {0, 4}, a = 4) is also valid
        assert all((m + 4) % 8 in a.members for m in {0, 4})


class TestClassify:
    def test_not_near_ap(self):
        assert classify_near_ap(ResidueSet(5, frozenset({0}))).kind == "not_near_ap"

    @pytest.mark.parametrize("k,members,kind,value", [
        (8, {0, 2, 4}, "divisor", 2),
        (5, {1, 2, 3}, "unit", 1),
        (6, {0, 3}, "divisor", 3),
    ])
    def test_examples(self, k, members, kind, value):
        cls = classify_near_ap(ResidueSet(k, frozenset(members)))
        assert cls.kind == kind
        assert (cls.d if kind == "divisor" else cls.a) == value

    def test_divisor_takes_largest(self):
        # shift set of {0, 4} in Z_8 is {0, 4}: both 2 and 4 qualify
        cls = classify_near_ap(ResidueSet(8, frozenset({0, 4})))
        assert cls.kind == "divisor" and cls.d == 4

    def test_exhaustive_dichotomy(self):
        # every near-AP subset of Z_k lands in a case consistent with its shift set
        for k in range(2, 11):
            for mask in range(1, 1 << k):
                members = frozenset(i for i in range(k) if mask >> i & 1)
                a = ResidueSet(k, members)
                cls = classify_near_ap(a)
                if not is_near_ap(a):
                    assert cls.kind == "not_near_ap"
                    continue
                shifts = shift_set(a).members
                if cls.kind == "divisor":
                    assert cls.d in proper_divisors(k)
                    assert all(x % cls.d == 0 for x in shifts)
                else:
                    assert cls.kind == "unit"
                    assert math.gcd(cls.a, k) == 1
                    assert cls.a == min(cls.a, k - cls.a)
                    assert shifts <= {0, cls.a, (k - cls.a) % k}
