"""Multiset Eulerian polynomials.

A_p(t) is the descent generating polynomial over all words containing
letter i exactly p[i-1] times.  Zero multiplicities are allowed and simply
drop the letter; the all-zero multiplicity gives the empty word and A = 1.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ResourceError, limits
from .polynomial import IntPolynomial, convolve, inverse_one_minus_t_power

Multiplicity = tuple[int, ...]
Word = tuple[int, ...]


def binomial(m: int, k: int) -> int:
    """C(m, k), taken as 0 outside 0 <= k <= m."""
    if m < 0:
        raise DomainError(f"binomial top argument must be nonnegative, got {m}")
    if k < 0 or k > m:
        return 0
    return math.comb(m, k)


def check_multiplicity(p: Iterable[int]) -> Multiplicity:
    parts = tuple(p)
    if not parts:
        raise DomainError("multiplicity needs at least one part")
    for i, c in enumerate(parts, 1):
        if not isinstance(c, int) or c < 0:
            raise DomainError(f"part {i} must be a nonnegative integer, got {c!r}")
    return parts


def multinomial(p: Sequence[int]) -> int:
    """|p|! / prod(p_i!), the number of words with multiplicities p."""
    out, n = 1, 0
    for c in p:
        n += c
        out *= math.comb(n, c)
    return out


def multiset_permutations(p: Iterable[int], max_len: int | None = None) -> Iterator[Word]:
    """Every word with multiplicities ``p``, in lexicographic order."""
    p = check_multiplicity(p)
    guard = limits().max_word if max_len is None else max_len
    if sum(p) > guard:
        raise ResourceError(f"word length {sum(p)} exceeds enumeration guard {guard}")
    return _lex_words([letter for letter, c in enumerate(p, 1) for _ in range(c)])


def _lex_words(w: list[int]) -> Iterator[Word]:
    n = len(w)
    while True:
        yield tuple(w)
        i = n - 2
        while i >= 0 and w[i] >= w[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while w[j] <= w[i]:
            j -= 1
        w[i], w[j] = w[j], w[i]
        w[i + 1:] = reversed(w[i + 1:])


def descent_count(w: Sequence[int]) -> int:
    return sum(1 for a, b in zip(w, w[1:]) if a > b)


def eulerian_poly_brute(p: Iterable[int], max_len: int | None = None) -> IntPolynomial:
    p = check_multiplicity(p)
    counts = [0] * (sum(p) + 1)
    for w in multiset_permutations(p, max_len):
        counts[descent_count(w)] += 1
    return IntPolynomial(counts)


def eulerian_degree(p: Iterable[int]) -> int:
    p = check_multiplicity(p)
    return sum(p) - max(p)


def simon_newcomb(p: Sequence[int], k: int) -> int:
    """Number of words with multiplicities ``p`` having exactly ``k`` descents."""
    size = sum(p)
    total = 0
    for l in range(k + 1):
        term = binomial(size + 1, l)
        for c in p:
            term *= binomial(c + k - l, k - l)
        total += -term if l % 2 else term
    return total


def eulerian_poly_closed(p: Iterable[int]) -> IntPolynomial:
    p = check_multiplicity(p)
    deg = eulerian_degree(p)
    if __debug__:
        assert simon_newcomb(p, deg + 1) == 0, f"nonzero coefficient above degree for {p}"
    return IntPolynomial(simon_newcomb(p, k) for k in range(deg + 1))


def macmahon_series(a: IntPolynomial, size: int, length: int) -> list[int]:
    """Leading ``length`` coefficients of a(t) / (1 - t)^(size+1)."""
    return convolve(a.coeffs, inverse_one_minus_t_power(size + 1, length), length)


def macmahon_check(p: Iterable[int], L: int) -> bool:
    p = check_multiplicity(p)
    # prefer the enumerated polynomial; the closed form is itself read off
    # this generating function
    if sum(p) <= limits().max_word:
        a = eulerian_poly_brute(p)
    else:
        a = eulerian_poly_closed(p)
    lhs = macmahon_series(a, sum(p), L + 1)
    rhs = [math.prod(binomial(c + l, l) for c in p) for l in range(L + 1)]
    return lhs == rhs
