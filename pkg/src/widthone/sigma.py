"""Closed formulas for the componentwise sum of all width-one tensors.

Two independent routes are provided:

* ``sigma_tableaux``: count, for each column position j, the d-tuples of
  weakly increasing rows whose j-th column equals x.  Cost grows with s.
* ``sigma_hpoly``: weight the coefficients of A_{x-1}(t) A_{n-x}(t) (facets
  through x, graded by restriction size) by a binomial.  Cost grows with the
  degree of those polynomials, i.e. with d and the n_i.

The two share nothing beyond ``binomial``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from . import eulerian
from .eulerian import binomial
from .errors import DomainError
from .poset import DenseTensor, Point, Shape, check_point, check_shape, points
from .polynomial import IntPolynomial


def _check_s(s: int) -> int:
    if not isinstance(s, int) or isinstance(s, bool) or s < 0:
        raise DomainError(f"entry sum s must be a nonnegative integer, got {s!r}")
    return s


def sigma_entry_tableaux(n: Iterable[int], s: int, x: Sequence[int]) -> int:
    n = check_shape(n)
    x = check_point(n, x)
    s = _check_s(s)
    total = 0
    for j in range(1, s + 1):
        term = 1
        for xi, ni in zip(x, n):
            # left part: j-1 entries from [xi]; right part: s-j entries from [xi, ni]
            term *= binomial(xi + j - 2, j - 1) * binomial(ni - xi + s - j, s - j)
        total += term
    return total


def sigma_tableaux(n: Iterable[int], s: int) -> DenseTensor:
    n = check_shape(n)
    s = _check_s(s)
    out = DenseTensor.zeros(n)
    if s == 0:
        return out
    out.entries = [sigma_entry_tableaux(n, s, x) for x in points(n)]
    return out


def omega(n: Iterable[int], x: Sequence[int]) -> int:
    """Degree of A_{x-1}(t) A_{n-x}(t)."""
    n = check_shape(n)
    x = check_point(n, x)
    d = len(n)
    return sum(n) - max(x) - max(ni - xi for ni, xi in zip(n, x)) - d + 1


@lru_cache(maxsize=None)
def _eulerian_sorted(parts: tuple[int, ...]) -> IntPolynomial:
    return eulerian.eulerian_poly_closed(parts)


def eulerian_cached(p: Iterable[int]) -> IntPolynomial:
    """A_p(t), memoised on the sorted parts (A_p is symmetric in its parts)."""
    return _eulerian_sorted(tuple(sorted(p)))


def facet_polynomial(n: Shape, x: Point) -> IntPolynomial:
    below = eulerian_cached(xi - 1 for xi in x)
    above = eulerian_cached(ni - xi for ni, xi in zip(n, x))
    return below * above


def sigma_entry_hpoly(n: Iterable[int], s: int, x: Sequence[int]) -> int:
    n = check_shape(n)
    x = check_point(n, x)
    s = _check_s(s)
    if s == 0:
        return 0
    base = sum(n) - len(n)
    coeffs = facet_polynomial(n, x)
    top = min(omega(n, x), s - 1)
    return sum(binomial(base + s - k, s - k - 1) * coeffs[k] for k in range(top + 1))


def sigma_hpoly(n: Iterable[int], s: int) -> DenseTensor:
    n = check_shape(n)
    s = _check_s(s)
    out = DenseTensor.zeros(n)
    if s == 0:
        return out
    out.entries = [sigma_entry_hpoly(n, s, x) for x in points(n)]
    return out


def clear_cache() -> None:
    _eulerian_sorted.cache_clear()
