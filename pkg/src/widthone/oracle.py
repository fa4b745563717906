"""Ground truth by enumeration.

A width-one tensor with entry sum s is the same thing as a d-tuple of
weakly increasing rows of length s (row i taking values in [n_i]): list the
support points in increasing order, repeated by multiplicity, as columns.
Enumerating row tuples therefore visits every such tensor exactly once.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator, Sequence

from .eulerian import binomial
from .errors import DomainError, ResourceError, limits
from .poset import DenseTensor, Shape, check_shape, is_chain, linear_offset, num_points, tensor_accumulate

RowTuple = tuple[tuple[int, ...], ...]


def weakly_increasing_rows(bound: int, length: int) -> Iterator[tuple[int, ...]]:
    """Weakly increasing sequences of ``length`` values from [bound], lexicographic."""
    if bound < 1 or length < 0:
        raise DomainError(f"need bound >= 1 and length >= 0, got {bound}, {length}")
    return itertools.combinations_with_replacement(range(1, bound + 1), length)


def count_members(n: Iterable[int], s: int) -> int:
    n = check_shape(n)
    if s < 0:
        raise DomainError(f"s must be nonnegative, got {s}")
    return math.prod(binomial(s + ni - 1, s) for ni in n)


def row_tuple_to_tensor(rt: Sequence[Sequence[int]], n: Iterable[int]) -> DenseTensor:
    n = check_shape(n)
    if len(rt) != len(n):
        raise DomainError(f"expected {len(n)} rows, got {len(rt)}")
    lengths = {len(row) for row in rt}
    if len(lengths) != 1:
        raise DomainError(f"rows have unequal lengths {sorted(lengths)}")
    for i, (row, ni) in enumerate(zip(rt, n), 1):
        if any(not 1 <= v <= ni for v in row):
            raise DomainError(f"row {i} has a value outside [1, {ni}]")
        if any(a > b for a, b in zip(row, row[1:])):
            raise DomainError(f"row {i} is not weakly increasing")
    t = DenseTensor.zeros(n)
    for column in zip(*rt):
        t.entries[linear_offset(n, column)] += 1
    return t


def tensor_to_row_tuple(t: DenseTensor) -> RowTuple:
    """Inverse of ``row_tuple_to_tensor`` on width-one tensors."""
    columns = []
    for x in sorted(t.support(), key=sum):
        columns.extend([x] * t[x])
    if not columns:
        return tuple(() for _ in t.shape)
    if not is_chain(columns):
        raise DomainError("tensor support is not a chain")
    return tuple(zip(*columns))


def _check_enum(n: Shape, s: int, max_count: int | None) -> None:
    guard = limits().max_enum if max_count is None else max_count
    count = count_members(n, s)
    if count > guard:
        raise ResourceError(f"{count} width-one tensors for n={n}, s={s}; guard is {guard}")


def row_tuples(n: Iterable[int], s: int, max_count: int | None = None) -> Iterator[RowTuple]:
    n = check_shape(n)
    _check_enum(n, s, max_count)
    rows = [list(weakly_increasing_rows(ni, s)) for ni in n]
    return itertools.product(*rows)


def enumerate_width_one(n: Iterable[int], s: int, max_count: int | None = None) -> Iterator[DenseTensor]:
    n = check_shape(n)
    for rt in row_tuples(n, s, max_count):
        yield row_tuple_to_tensor(rt, n)


def is_member(t: DenseTensor, s: int) -> bool:
    if any(v < 0 for v in t.entries):
        return False
    if t.total() != s:
        return False
    return is_chain(t.support())


def sigma_oracle(n: Iterable[int], s: int, max_count: int | None = None) -> DenseTensor:
    n = check_shape(n)
    acc = DenseTensor.zeros(n)
    for t in enumerate_width_one(n, s, max_count):
        tensor_accumulate(acc, t)
    return acc


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Tuples of ``parts`` nonnegative integers summing to ``total``."""
    if total < 0 or parts < 1:
        return
    # stars and bars: choose bar positions among total + parts - 1 slots
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        comp = []
        for b in bars:
            comp.append(b - prev - 1)
            prev = b
        comp.append(total + parts - 1 - prev - 1)
        yield tuple(comp)


def all_nonnegative_tensors(n: Iterable[int], s: int) -> Iterator[DenseTensor]:
    n = check_shape(n)
    for comp in weak_compositions(s, num_points(n)):
        yield DenseTensor(n, comp)


def sigma_oracle_by_filter(n: Iterable[int], s: int) -> DenseTensor:
    """Slow reference: filter every tensor with entry sum s by ``is_member``.

    Independent of the row-tuple bijection; only for tiny cases.
    """
    n = check_shape(n)
    if num_points(n) > 9 or s > 3:
        raise ResourceError(f"filter oracle limited to at most 9 points and s <= 3, got n={n}, s={s}")
    acc = DenseTensor.zeros(n)
    for t in all_nonnegative_tensors(n, s):
        if is_member(t, s):
            tensor_accumulate(acc, t)
    return acc
