"""The grid poset [n1] x ... x [nd] under the product order, and dense tensors on it.

Coordinates are 1-based everywhere in the public API.  Tensors store their
components in a flat row-major list (last coordinate fastest) of Python ints.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ResourceError, limits

Shape = tuple[int, ...]
Point = tuple[int, ...]


def check_shape(dims: Iterable[int]) -> Shape:
    shape = tuple(dims)
    if not shape:
        raise DomainError("shape must have at least one dimension")
    for i, n in enumerate(shape, 1):
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise DomainError(f"dimension {i} must be a positive integer, got {n!r}")
    return shape


def check_point(shape: Shape, x: Iterable[int]) -> Point:
    point = tuple(x)
    if len(point) != len(shape):
        raise DomainError(f"index {point} has {len(point)} coordinates, shape has {len(shape)}")
    for i, (xi, ni) in enumerate(zip(point, shape), 1):
        if not isinstance(xi, int) or not 1 <= xi <= ni:
            raise DomainError(f"coordinate {i} of {point} is {xi!r}, must lie in [1, {ni}]")
    return point


def num_points(shape: Shape) -> int:
    return math.prod(shape)


def points(shape: Shape) -> Iterator[Point]:
    """All of the poset in row-major order."""
    return itertools.product(*(range(1, n + 1) for n in shape))


def linear_offset(shape: Shape, x: Sequence[int]) -> int:
    x = check_point(shape, x)
    offset = 0
    for xi, ni in zip(x, shape):
        offset = offset * ni + (xi - 1)
    return offset


def multi_index(shape: Shape, offset: int) -> Point:
    if not 0 <= offset < num_points(shape):
        raise DomainError(f"offset {offset} out of range for shape {shape}")
    coords = []
    for ni in reversed(shape):
        offset, r = divmod(offset, ni)
        coords.append(r + 1)
    return tuple(reversed(coords))


def product_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        raise DomainError(f"cannot compare {tuple(a)} and {tuple(b)}: lengths differ")
    return all(ai <= bi for ai, bi in zip(a, b))


def is_chain(pts: Iterable[Sequence[int]]) -> bool:
    """True iff the points are pairwise comparable in the product order."""
    # distinct points of a chain have distinct coordinate sums, so sorting by
    # sum and checking neighbours is enough
    ordered = sorted(set(map(tuple, pts)), key=lambda p: (sum(p), p))
    for a, b in zip(ordered, ordered[1:]):
        if not product_leq(a, b):
            return False
    return True


class DenseTensor:
    """Nonnegative integer tensor of a fixed shape, indexed by 1-based points."""

    __slots__ = ("shape", "entries")

    def __init__(self, shape: Iterable[int], entries: Iterable[int] | None = None):
        self.shape = check_shape(shape)
        size = num_points(self.shape)
        if entries is None:
            guard = limits().max_entries
            if size > guard:
                raise ResourceError(
                    f"tensor of shape {self.shape} has {size} entries, limit is {guard}"
                )
            self.entries = [0] * size
        else:
            self.entries = list(entries)
            if len(self.entries) != size:
                raise DomainError(
                    f"shape {self.shape} needs {size} entries, got {len(self.entries)}"
                )
            if any(v < 0 for v in self.entries):
                raise DomainError("tensor entries must be nonnegative")

    @classmethod
    def zeros(cls, shape: Iterable[int]) -> "DenseTensor":
        return cls(shape)

    @classmethod
    def elementary(cls, shape: Iterable[int], x: Sequence[int]) -> "DenseTensor":
        t = cls(shape)
        t[x] = 1
        return t

    def __getitem__(self, x: Sequence[int]) -> int:
        return self.entries[linear_offset(self.shape, x)]

    def __setitem__(self, x: Sequence[int], value: int) -> None:
        if value < 0:
            raise DomainError("tensor entries must be nonnegative")
        self.entries[linear_offset(self.shape, x)] = value

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DenseTensor):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self.entries)))

    def __repr__(self) -> str:
        return f"DenseTensor(shape={self.shape}, entries={self.entries})"

    def copy(self) -> "DenseTensor":
        return DenseTensor(self.shape, self.entries)

    def items(self) -> Iterator[tuple[Point, int]]:
        return zip(points(self.shape), self.entries)

    def support(self) -> list[Point]:
        return [x for x, v in self.items() if v != 0]

    def total(self) -> int:
        return sum(self.entries)


def tensor_accumulate(acc: DenseTensor, t: DenseTensor) -> DenseTensor:
    """Add ``t`` into ``acc`` in place and return ``acc``."""
    if acc.shape != t.shape:
        raise DomainError(f"shape mismatch: {acc.shape} vs {t.shape}")
    e = acc.entries
    for i, v in enumerate(t.entries):
        if v:
            e[i] += v
    return acc
