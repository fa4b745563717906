"""The order complex of the grid poset [x1] x ... x [xd] and its shelling.

Facets are maximal chains 1 -> x.  Labelling each cover a -> a + e_i by i
turns a facet into a word with x_i - 1 copies of i; the lexicographic order
on those words is a shelling, and the restriction of a facet is the set of
chain points sitting at a descent of its word.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator, Sequence

from .eulerian import binomial, eulerian_poly_closed, multinomial, multiset_permutations
from .errors import DomainError, ResourceError
from .oracle import count_members, row_tuples, weak_compositions
from .poset import Point, Shape, check_point, check_shape, num_points, points, product_leq
from .polynomial import IntPolynomial, convolve, inverse_one_minus_t_power, one_minus_t_power

LabelSequence = tuple[int, ...]
FacetChain = tuple[Point, ...]

# f-vector DP is quadratic in the number of points
MAX_FVECTOR_POINTS = 5000


def _lower(x: Sequence[int]) -> tuple[int, ...]:
    return tuple(xi - 1 for xi in x)


def facets(x: Iterable[int], max_len: int | None = None) -> Iterator[LabelSequence]:
    x = check_shape(x)
    return multiset_permutations(_lower(x), max_len)


def facet_count(x: Iterable[int]) -> int:
    return multinomial(_lower(check_shape(x)))


def _check_word(w: Sequence[int], x: Shape) -> None:
    counts = [0] * len(x)
    for letter in w:
        if not isinstance(letter, int) or not 1 <= letter <= len(x):
            raise DomainError(f"label {letter!r} outside [1, {len(x)}]")
        counts[letter - 1] += 1
    if tuple(counts) != _lower(x):
        raise DomainError(f"label word {tuple(w)} does not match x = {x}")


def labels_to_chain(w: Sequence[int], x: Iterable[int]) -> FacetChain:
    x = check_shape(x)
    _check_word(w, x)
    a = [1] * len(x)
    chain = [tuple(a)]
    for letter in w:
        a[letter - 1] += 1
        chain.append(tuple(a))
    return tuple(chain)


def chain_to_labels(chain: Sequence[Sequence[int]]) -> LabelSequence:
    if not chain:
        raise DomainError("empty chain")
    d = len(chain[0])
    if tuple(chain[0]) != (1,) * d:
        raise DomainError(f"chain must start at {(1,) * d}, starts at {tuple(chain[0])}")
    labels = []
    for a, b in zip(chain, chain[1:]):
        diff = [bi - ai for ai, bi in zip(a, b)]
        if len(b) != d or sorted(diff) != [0] * (d - 1) + [1]:
            raise DomainError(f"{tuple(a)} -> {tuple(b)} is not a cover relation")
        labels.append(diff.index(1) + 1)
    return tuple(labels)


def restriction_set(w: Sequence[int], x: Iterable[int]) -> frozenset[Point]:
    chain = labels_to_chain(w, x)
    return frozenset(chain[j + 1] for j in range(len(w) - 1) if w[j] > w[j + 1])


def h_poly_shelling(x: Iterable[int], max_len: int | None = None) -> IntPolynomial:
    x = check_shape(x)
    counts = [0] * (sum(x) - len(x) + 1)
    for w in facets(x, max_len):
        counts[len(restriction_set(w, x))] += 1
    return IntPolynomial(counts)


def f_vector(x: Iterable[int], max_points: int = MAX_FVECTOR_POINTS) -> tuple[int, ...]:
    """(f_-1, f_0, ..., f_{a-1}): number of chains of the poset by cardinality."""
    x = check_shape(x)
    if num_points(x) > max_points:
        raise ResourceError(f"f-vector of {x} needs {num_points(x)} points, limit {max_points}")
    size = sum(x) - len(x) + 1
    pts = sorted(points(x), key=sum)
    # ending[p][k] = chains with k+1 points whose top element is p
    ending: dict[Point, list[int]] = {}
    for p in pts:
        row = [1] + [0] * (size - 1)
        for q, qrow in ending.items():
            if q != p and product_leq(q, p):
                for k in range(size - 1):
                    row[k + 1] += qrow[k]
        ending[p] = row
    f = [1] + [0] * size
    for row in ending.values():
        for k, c in enumerate(row):
            f[k + 1] += c
    return tuple(f)


def h_from_f(f: Sequence[int]) -> IntPolynomial:
    a = len(f) - 1
    total = [0] * (a + 1)
    for i, fi in enumerate(f):
        for j, c in enumerate(one_minus_t_power(a - i)):
            total[i + j] += fi * c
    return IntPolynomial(total)


def verify_lemma_hpoly(x: Iterable[int]) -> bool:
    x = check_shape(x)
    shelled = h_poly_shelling(x)
    return shelled == eulerian_poly_closed(_lower(x)) == h_from_f(f_vector(x))


def restrictions_by_inclusion(x: Iterable[int]) -> list[tuple[LabelSequence, frozenset[Point]]]:
    """Restrictions from the definition: walk facets in shelling order and
    find the unique minimal face of each facet not in the earlier facets.

    Exponential; for validating ``restriction_set`` on small complexes.
    """
    x = check_shape(x)
    seen: list[frozenset[Point]] = []
    out = []
    for w in facets(x):
        facet = frozenset(labels_to_chain(w, x))
        overlaps = [facet & g for g in seen]
        minimal: list[frozenset[Point]] = []
        for r in range(len(facet) + 1):
            for face in map(frozenset, itertools.combinations(sorted(facet), r)):
                if any(face <= o for o in overlaps):
                    continue
                if not any(m <= face for m in minimal):
                    minimal.append(face)
        if len(minimal) != 1:
            raise AssertionError(f"facet {w} has {len(minimal)} minimal new faces")
        out.append((w, minimal[0]))
        seen.append(facet)
    return out


def facet_coefficient_counts(n: Iterable[int], x: Sequence[int], k: int) -> tuple[int, int, int]:
    """(polynomial coefficient, direct facet count, concatenated facet count).

    The direct count walks all facets of the complex on n; the concatenated
    count glues facets below x to (translated) facets above x.
    """
    n = check_shape(n)
    x = check_point(n, x)
    coeff = (eulerian_poly_closed(_lower(x)) * eulerian_poly_closed(tuple(a - b for a, b in zip(n, x))))[k]

    through_x = set()
    direct = 0
    for w in facets(n):
        chain = labels_to_chain(w, n)
        if x in chain:
            through_x.add(w)
            if len(restriction_set(w, n) - {x}) == k:
                direct += 1

    upper = tuple(a - b + 1 for a, b in zip(n, x))
    glued = set()
    concat = 0
    for lo in facets(x):
        r_lo = len(restriction_set(lo, x))
        for hi in facets(upper):
            w = lo + hi
            glued.add(w)
            r = len(restriction_set(w, n) - {x})
            if r != r_lo + len(restriction_set(hi, upper)):
                raise AssertionError(f"restriction of {w} does not split at {x}")
            if r == k:
                concat += 1
    if glued != through_x:
        raise AssertionError(f"facets through {x} do not factor as below/above pairs")
    return coeff, direct, concat


def verify_facet_coeff(n: Iterable[int], x: Sequence[int], k: int) -> bool:
    coeff, direct, concat = facet_coefficient_counts(n, x, k)
    return coeff == direct == concat


def exponent_count_sides(n: Iterable[int], s: int, k: int, max_count: int = 10**6) -> tuple[int, int]:
    """(binomial side, enumerated side) of the exponent-count identity."""
    n = check_shape(n)
    d = len(n)
    deg = s - k - 1
    if deg < 0:
        return 0, 0
    nvars = sum(n) - d + 1
    lhs = binomial(sum(n) - d + s - k, deg)
    if binomial(deg + nvars - 1, deg) > max_count:
        raise ResourceError(f"too many compositions of {deg} into {nvars} parts")
    # slot 0 stands for the variable z_x: exponent c_0 from K[F], plus one
    rhs = sum(c[0] + 1 for c in weak_compositions(deg, nvars))
    return lhs, rhs


def verify_exponent_count(n: Iterable[int], s: int, k: int) -> bool:
    lhs, rhs = exponent_count_sides(n, s, k)
    return lhs == rhs


def hilbert_series(n: Iterable[int], length: int) -> list[int]:
    """Leading coefficients of A_{n-1}(t) / (1 - t)^(|n|-d+1)."""
    n = check_shape(n)
    a = eulerian_poly_closed(_lower(n))
    return convolve(a.coeffs, inverse_one_minus_t_power(sum(n) - len(n) + 1, length), length)


def hilbert_series_check(n: Iterable[int], L: int, enumerate_limit: int = 5000) -> bool:
    n = check_shape(n)
    series = hilbert_series(n, L + 1)
    for l, c in enumerate(series):
        if c != math.prod(binomial(ni + l - 1, l) for ni in n):
            return False
        members = count_members(n, l)
        if c != members:
            return False
        # degree-l monomials on chains are the width-one tensors with sum l
        if members <= enumerate_limit and sum(1 for _ in row_tuples(n, l)) != c:
            return False
    return True
