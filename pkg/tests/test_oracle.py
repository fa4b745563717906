import itertools
import math

import pytest

from widthone.errors import DomainError, ResourceError
from widthone.eulerian import binomial
from widthone.oracle import (
    all_nonnegative_tensors,
    count_members,
    enumerate_width_one,
    is_member,
    row_tuple_to_tensor,
    sigma_oracle,
    sigma_oracle_by_filter,
    tensor_to_row_tuple,
    weak_compositions,
    weakly_increasing_rows,
)
from widthone.poset import DenseTensor


def test_weakly_increasing_rows():
    assert list(weakly_increasing_rows(2, 2)) == [(1, 1), (1, 2), (2, 2)]
    assert list(weakly_increasing_rows(5, 0)) == [()]
    rows = list(weakly_increasing_rows(3, 2))
    assert len(rows) == 6 == binomial(4, 2)
    assert rows == sorted(rows)


def test_row_tuple_to_tensor():
    t = row_tuple_to_tensor(((1, 1), (1, 2)), (2, 2))
    assert t.entries == [1, 1, 0, 0]
    assert row_tuple_to_tensor(((1, 1), (1, 1)), (2, 2)).entries == [2, 0, 0, 0]
    assert row_tuple_to_tensor(((), ()), (2, 2)) == DenseTensor.zeros((2, 2))


@pytest.mark.parametrize("rows", [((2, 1), (1, 1)), ((1, 3), (1, 1)), ((1,), (1, 1)), ((1, 1),)])
def test_row_tuple_rejects_inconsistent(rows):
    with pytest.raises(DomainError):
        row_tuple_to_tensor(rows, (2, 2))


def test_enumeration_counts():
    assert len(list(enumerate_width_one((2, 2), 2))) == 9
    assert len(list(enumerate_width_one((3, 3, 3), 3))) == 1000
    assert list(enumerate_width_one((3, 2), 0)) == [DenseTensor.zeros((3, 2))]
    assert count_members((2, 2), 2) == 9
    assert count_members((3, 3, 3), 3) == 1000
    assert count_members((4, 1, 7), 0) == 1


def test_enumeration_guard(monkeypatch):
    with pytest.raises(ResourceError):
        list(enumerate_width_one((3, 3), 3, max_count=50))
    monkeypatch.setenv("WIDTHONE_MAX_ENUM", "8")
    with pytest.raises(ResourceError):
        sigma_oracle((2, 2), 2)


@pytest.mark.parametrize("n, s", [((2, 2), 2), ((3, 2), 3), ((2, 2, 2), 2), ((4,), 3)])
def test_enumeration_is_bijective(n, s):
    seen = set()
    for t in enumerate_width_one(n, s):
        assert is_member(t, s)
        assert t not in seen
        seen.add(t)
        assert row_tuple_to_tensor(tensor_to_row_tuple(t), n) == t
    assert len(seen) == count_members(n, s)


def test_enumeration_matches_membership_filter():
    for n in [(2, 2), (3, 3), (2, 2, 2), (1, 4), (9,)]:
        for s in range(4):
            members = {t for t in all_nonnegative_tensors(n, s) if is_member(t, s)}
            assert members == set(enumerate_width_one(n, s))


def test_is_member():
    for x in [(1, 1), (2, 1), (2, 2)]:
        assert is_member(DenseTensor.elementary((2, 2), x), 1)
    assert not is_member(DenseTensor((2, 2), [0, 1, 1, 0]), 2)
    assert not is_member(DenseTensor((2, 2), [1, 0, 0, 1]), 1)
    assert is_member(DenseTensor((2, 2), [1, 0, 0, 1]), 2)


def test_sigma_oracle_examples():
    assert sigma_oracle((2, 2), 2).entries == [5, 4, 4, 5]
    assert set(sigma_oracle((2, 2, 2), 1).entries) == {1}
    assert sigma_oracle((4,), 3).entries == [15] * 4


def test_filter_oracle_limited_to_tiny_cases():
    with pytest.raises(ResourceError):
        sigma_oracle_by_filter((2, 5), 1)
    with pytest.raises(ResourceError):
        sigma_oracle_by_filter((2, 2), 4)


def test_weak_compositions():
    comps = list(weak_compositions(2, 3))
    assert sorted(comps) == sorted(c for c in itertools.product(range(3), repeat=3) if sum(c) == 2)
    assert list(weak_compositions(0, 4)) == [(0, 0, 0, 0)]
    assert list(weak_compositions(-1, 2)) == []
    assert len(list(weak_compositions(5, 4))) == math.comb(8, 3)
