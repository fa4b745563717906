"""Property grid behind ``widthone verify``.

Each check walks a finite grid and stops at the first counterexample.
"""

from __future__ import annotations

import contextlib
import itertools
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from . import eulerian, sigma
from .eulerian import binomial
from .oracle import sigma_oracle
from .poset import points
from .shelling import (
    exponent_count_sides,
    facet_coefficient_counts,
    facet_count,
    f_vector,
    h_from_f,
    h_poly_shelling,
    hilbert_series_check,
)


@dataclass(frozen=True)
class Scope:
    max_d: int = 3
    max_n: int = 3
    max_s: int = 4
    L: int = 10
    # word-length bounds for the Eulerian checks
    max_word: int = 8
    max_macmahon_word: int = 6
    # |x| - d bound for the shelling checks
    max_facet_word: int = 10


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    cases: int = 0
    counterexample: dict[str, Any] | None = None

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "passed": self.passed, "cases": self.cases}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def shapes(max_d: int, max_n: int, min_d: int = 1) -> Iterator[tuple[int, ...]]:
    for d in range(min_d, max_d + 1):
        yield from itertools.product(range(1, max_n + 1), repeat=d)


def compositions(total: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into positive parts."""
    if total == 0:
        yield (0,)
        return
    for cuts in itertools.product((False, True), repeat=total - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def _strs(values) -> list[str]:
    return [str(v) for v in values]


def _run(name: str, cases: Iterator[tuple[bool, Callable[[], dict[str, Any]]]]) -> CheckResult:
    result = CheckResult(name)
    for ok, explain in cases:
        result.cases += 1
        if not ok:
            result.passed = False
            result.counterexample = explain()
            break
    return result


def check_three_way(scope: Scope) -> CheckResult:
    def cases():
        for n in shapes(scope.max_d, scope.max_n):
            for s in range(scope.max_s + 1):
                a = sigma.sigma_tableaux(n, s)
                b = sigma.sigma_hpoly(n, s)
                c = sigma_oracle(n, s)
                yield a == b == c, lambda: {
                    "n": list(n), "s": s,
                    "tableaux": _strs(a.entries), "hpoly": _strs(b.entries), "oracle": _strs(c.entries),
                }
    return _run("three_way_agreement", cases())


def check_unit_sum(scope: Scope) -> CheckResult:
    def cases():
        for n in shapes(scope.max_d, scope.max_n):
            t = sigma.sigma_tableaux(n, 1)
            yield all(v == 1 for v in t.entries), lambda: {"n": list(n), "entries": _strs(t.entries)}
    return _run("unit_entry_sum", cases())


def check_one_dimensional(scope: Scope) -> CheckResult:
    def cases():
        for n1 in range(1, scope.max_n + 1):
            for s in range(1, scope.max_s + 1):
                t = sigma.sigma_tableaux((n1,), s)
                want = binomial(n1 + s - 1, s - 1)
                yield all(v == want for v in t.entries), lambda: {
                    "n": [n1], "s": s, "expected": str(want), "entries": _strs(t.entries)}
    return _run("one_dimensional_closed_form", cases())


def check_mass(scope: Scope) -> CheckResult:
    def cases():
        for n in shapes(scope.max_d, scope.max_n):
            for s in range(scope.max_s + 1):
                total = sigma.sigma_tableaux(n, s).total()
                want = s * math.prod(binomial(s + ni - 1, s) for ni in n)
                yield total == want, lambda: {"n": list(n), "s": s, "total": str(total), "expected": str(want)}
    return _run("total_mass", cases())


def check_reversal(scope: Scope) -> CheckResult:
    def cases():
        for n in shapes(scope.max_d, scope.max_n):
            for s in range(scope.max_s + 1):
                t = sigma.sigma_hpoly(n, s)
                for x in points(n):
                    y = tuple(ni + 1 - xi for ni, xi in zip(n, x))
                    yield t[x] == t[y], lambda: {"n": list(n), "s": s, "x": list(x), "mirror": list(y),
                                                 "values": [str(t[x]), str(t[y])]}
    return _run("reversal_symmetry", cases())


def check_axis_permutation(scope: Scope) -> CheckResult:
    def cases():
        for n in shapes(scope.max_d, scope.max_n, min_d=2):
            for s in range(1, scope.max_s + 1):
                t = sigma.sigma_tableaux(n, s)
                for perm in itertools.permutations(range(len(n))):
                    m = tuple(n[i] for i in perm)
                    u = sigma.sigma_tableaux(m, s)
                    ok = all(u[tuple(x[i] for i in perm)] == v for x, v in t.items())
                    yield ok, lambda: {"n": list(n), "permuted": list(m), "s": s}
    return _run("axis_permutation", cases())


def check_lemma_hpoly(scope: Scope) -> CheckResult:
    def cases():
        for x in shapes(scope.max_d, scope.max_n):
            d = len(x)
            if sum(x) - d > scope.max_facet_word:
                continue
            shelled = h_poly_shelling(x, max_len=scope.max_facet_word)
            closed = eulerian.eulerian_poly_closed(tuple(xi - 1 for xi in x))
            from_f = h_from_f(f_vector(x))
            ok = (shelled == closed == from_f
                  and sum(shelled) == facet_count(x)
                  and shelled.degree == sum(x) - max(x) - d + 1)
            yield ok, lambda: {"x": list(x), "shelling": _strs(shelled), "closed": _strs(closed),
                               "from_f": _strs(from_f), "facets": str(facet_count(x))}
    return _run("h_polynomial_is_eulerian", cases())


def check_eulerian(scope: Scope) -> CheckResult:
    def cases():
        for m in range(scope.max_word + 1):
            for p in compositions(m):
                brute = eulerian.eulerian_poly_brute(p, max_len=scope.max_word)
                closed = eulerian.eulerian_poly_closed(p)
                ok = (brute == closed and sum(closed) == eulerian.multinomial(p)
                      and closed.degree == eulerian.eulerian_degree(p))
                yield ok, lambda: {"p": list(p), "brute": _strs(brute), "closed": _strs(closed)}
    return _run("eulerian_brute_vs_closed", cases())


def check_macmahon(scope: Scope) -> CheckResult:
    def cases():
        for m in range(scope.max_macmahon_word + 1):
            for p in compositions(m):
                yield eulerian.macmahon_check(p, scope.L), lambda: {"p": list(p), "L": scope.L}
    return _run("macmahon_series", cases())


def check_exponent_count(scope: Scope) -> CheckResult:
    def cases():
        for n in shapes(scope.max_d, scope.max_n):
            top = max(sigma.omega(n, x) for x in points(n))
            for s in range(scope.max_s + 1):
                for k in range(top + 1):
                    lhs, rhs = exponent_count_sides(n, s, k)
                    yield lhs == rhs, lambda: {"n": list(n), "s": s, "k": k,
                                               "binomial": str(lhs), "enumerated": str(rhs)}
    return _run("exponent_count", cases())


def check_facet_coeff(scope: Scope) -> CheckResult:
    def cases():
        for n in shapes(scope.max_d, scope.max_n):
            if sum(n) - len(n) > scope.max_facet_word:
                continue
            for x in points(n):
                for k in range(sigma.omega(n, x) + 2):
                    coeff, direct, concat = facet_coefficient_counts(n, x, k)
                    yield coeff == direct == concat, lambda: {
                        "n": list(n), "x": list(x), "k": k,
                        "coefficient": str(coeff), "direct": str(direct), "concatenated": str(concat)}
    return _run("facet_coefficient", cases())


def check_hilbert(scope: Scope) -> CheckResult:
    def cases():
        for n in shapes(scope.max_d, scope.max_n):
            yield hilbert_series_check(n, scope.L), lambda: {"n": list(n), "L": scope.L}
    return _run("hilbert_series", cases())


CHECKS: dict[str, Callable[[Scope], CheckResult]] = {
    "three_way_agreement": check_three_way,
    "unit_entry_sum": check_unit_sum,
    "one_dimensional_closed_form": check_one_dimensional,
    "total_mass": check_mass,
    "reversal_symmetry": check_reversal,
    "axis_permutation": check_axis_permutation,
    "h_polynomial_is_eulerian": check_lemma_hpoly,
    "eulerian_brute_vs_closed": check_eulerian,
    "macmahon_series": check_macmahon,
    "exponent_count": check_exponent_count,
    "facet_coefficient": check_facet_coeff,
    "hilbert_series": check_hilbert,
}


def run_checks(scope: Scope, only: list[str] | None = None) -> list[CheckResult]:
    names = only or list(CHECKS)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise KeyError(f"unknown checks: {', '.join(unknown)}")
    return [CHECKS[name](scope) for name in names]


@contextlib.contextmanager
def corrupted_binomial(offset: int = 1):
    """Test hook: make the tableaux formula's binomial wrong for C(m, 1), m >= 2."""
    original = sigma.binomial

    def bad(m: int, k: int) -> int:
        value = original(m, k)
        return value + offset if k == 1 and m >= 2 else value

    sigma.binomial = bad
    sigma.clear_cache()
    try:
        yield
    finally:
        sigma.binomial = original
        sigma.clear_cache()
