"""Exit criteria. Every check is exact integer equality; each test prints one
PASS/FAIL line."""

import csv
import io
import itertools
import math
import time
from pathlib import Path

import pytest

from widthone import bench, cli
from widthone.eulerian import (
    binomial,
    eulerian_degree,
    eulerian_poly_brute,
    eulerian_poly_closed,
    macmahon_check,
    multinomial,
    simon_newcomb,
)
from widthone.oracle import sigma_oracle
from widthone.poset import points
from widthone.shelling import (
    exponent_count_sides,
    facet_coefficient_counts,
    f_vector,
    h_from_f,
    h_poly_shelling,
    hilbert_series_check,
)
from widthone.sigma import omega, sigma_hpoly, sigma_tableaux
from widthone.verify import compositions, shapes

GOLDEN = Path(__file__).parent / "golden" / "sum_n2-2_s2_all.json"

GRID_SHAPES = list(shapes(3, 3))
GRID_S = range(0, 5)


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n[criterion {number:>2}] {'PASS' if ok else 'FAIL'} {title}" + (f" :: {detail}" if detail else ""))
        assert ok, f"criterion {number} failed: {detail}"
    return emit


def test_01_three_way_agreement(report):
    start = time.perf_counter()
    bad = []
    cases = 0
    for n in GRID_SHAPES:
        for s in GRID_S:
            cases += 1
            a, b, c = sigma_tableaux(n, s), sigma_hpoly(n, s), sigma_oracle(n, s)
            if not a == b == c:
                bad.append((n, s))
    elapsed = time.perf_counter() - start
    report(1, "tableaux = hpoly = oracle, d<=3, n_i<=3, s<=4",
           not bad and elapsed < 60, f"{cases} cases, {elapsed:.2f}s, mismatches={bad[:3]}")


def test_02_extended_two_way_agreement(report):
    start = time.perf_counter()
    bad = []
    cases = 0
    grid = [(n, s) for n in itertools.product(range(1, 4), repeat=4) for s in range(4)]
    grid += [(n, s) for n in itertools.product(range(1, 7), repeat=2) for s in range(7)]
    for n, s in grid:
        cases += 1
        if sigma_tableaux(n, s) != sigma_hpoly(n, s):
            bad.append((n, s))
    elapsed = time.perf_counter() - start
    report(2, "tableaux = hpoly, d=4 n_i<=3 s<=3 and d=2 n_i<=6 s<=6",
           not bad and elapsed < 120, f"{cases} cases, {elapsed:.2f}s, mismatches={bad[:3]}")


def test_03_trivial_closed_forms(report):
    tested = GRID_SHAPES + list(itertools.product(range(1, 4), repeat=4)) \
        + list(itertools.product(range(1, 7), repeat=2))
    ones_ok = all(set(sigma_tableaux(n, 1).entries) == {1} and set(sigma_hpoly(n, 1).entries) == {1}
                  for n in tested)
    line_bad = []
    for n1 in range(1, 7):
        for s in range(0, 7):
            want = binomial(n1 + s - 1, s - 1) if s >= 1 else 0
            for t in (sigma_tableaux((n1,), s), sigma_hpoly((n1,), s)):
                if t.entries != [want] * n1:
                    line_bad.append((n1, s))
    report(3, "s=1 all-ones; d=1 entries C(n1+s-1, s-1)", ones_ok and not line_bad,
           f"{len(tested)} shapes at s=1, 42 one-dimensional cases, failures={line_bad[:3]}")


def test_04_mass_identity(report):
    bad = []
    for n in GRID_SHAPES:
        for s in GRID_S:
            want = s * math.prod(binomial(s + ni - 1, s) for ni in n)
            if sigma_tableaux(n, s).total() != want or sigma_hpoly(n, s).total() != want:
                bad.append((n, s))
    report(4, "total mass s * prod C(s+n_i-1, s)", not bad, f"failures={bad[:3]}")


def test_05_symmetries(report):
    reversal_bad, axis_bad = [], []
    for n in GRID_SHAPES:
        for s in GRID_S:
            t = sigma_tableaux(n, s)
            for x, v in t.items():
                if v != t[tuple(ni + 1 - xi for ni, xi in zip(n, x))]:
                    reversal_bad.append((n, s, x))
            for perm in itertools.permutations(range(len(n))):
                m = tuple(n[i] for i in perm)
                u = sigma_tableaux(m, s) if m != n else t
                if any(u[tuple(x[i] for i in perm)] != v for x, v in t.items()):
                    axis_bad.append((n, s, perm))
    report(5, "reversal x -> n+1-x and axis-permutation equivariance", not reversal_bad and not axis_bad,
           f"reversal failures={reversal_bad[:3]}, axis failures={axis_bad[:3]}")


def test_06_h_polynomial_is_multiset_eulerian(report):
    bad = []
    cases = 0
    for d in range(1, 5):
        for x in itertools.product(range(1, 5), repeat=d):
            if sum(x) - d > 10:
                continue
            cases += 1
            lower = tuple(xi - 1 for xi in x)
            shelled = h_poly_shelling(x)
            facets_expected = math.factorial(sum(x) - d) // math.prod(math.factorial(v) for v in lower)
            ok = (shelled == eulerian_poly_closed(lower) == h_from_f(f_vector(x))
                  and sum(shelled) == facets_expected
                  and shelled.degree == sum(x) - max(x) - d + 1)
            if not ok:
                bad.append(x)
    report(6, "shelling h = A_{x-1} = h from f; facet counts; degree |x|-max(x)-d+1", not bad,
           f"{cases} points x, failures={bad[:3]}")


def test_07_eulerian_suite(report):
    bad = []
    for m in range(9):
        for p in compositions(m):
            closed = eulerian_poly_closed(p)
            if eulerian_poly_brute(p) != closed or sum(closed) != multinomial(p) \
                    or closed.degree != eulerian_degree(p):
                bad.append(p)
    mac_bad = [p for m in range(7) for p in compositions(m) if not macmahon_check(p, 10)]
    hand = simon_newcomb((2, 1), 1) == 2 == eulerian_poly_closed((2, 1))[1]
    report(7, "brute = closed (|p|<=8), multinomial sums, MacMahon L=10 (|p|<=6), [t^1]A_(2,1)=2",
           not bad and not mac_bad and hand, f"failures={bad[:3]}, macmahon failures={mac_bad[:3]}")


def test_08_exponent_and_facet_lemmas(report):
    exp_bad, facet_bad = [], []
    exp_cases = facet_cases = 0
    for n in GRID_SHAPES:
        ks = sorted({k for x in points(n) for k in range(omega(n, x) + 1)})
        for s in GRID_S:
            for k in ks:
                exp_cases += 1
                lhs, rhs = exponent_count_sides(n, s, k)
                if lhs != rhs:
                    exp_bad.append((n, s, k))
        for x in points(n):
            for k in range(omega(n, x) + 1):
                facet_cases += 1
                coeff, direct, concat = facet_coefficient_counts(n, x, k)
                if not coeff == direct == concat:
                    facet_bad.append((n, x, k))
    report(8, "exponent-count and facet-coefficient lemmas", not exp_bad and not facet_bad,
           f"{exp_cases} exponent cases, {facet_cases} facet cases, failures={exp_bad[:3]} {facet_bad[:3]}")


def test_09_hilbert_series(report):
    bad = [n for n in GRID_SHAPES if not hilbert_series_check(n, 8)]
    report(9, "Hilbert series coefficients = prod C(n_i+l-1, l) = member counts, L=8", not bad,
           f"{len(GRID_SHAPES)} shapes, failures={bad[:3]}")


def test_10_golden_file(report, capsys):
    code = cli.main(["sum", "--n", "2,2", "--s", "2", "--method", "all"])
    out = capsys.readouterr().out
    ok = code == 0 and out.encode() == GOLDEN.read_bytes()
    report(10, "`sum --n 2,2 --s 2 --method all` byte-identical to golden JSON", ok,
           "entries [5,4,4,5], agreement=true")


def test_11_benchmark_harness(report, capsys):
    code = cli.main(["bench", "--repeat", "3", "--warmup", "1"])
    out = capsys.readouterr().out
    rows = list(csv.DictReader(io.StringIO(out)))
    cells = {}
    for r in rows:
        cells.setdefault((r["n"], r["s"]), {})[r["method"]] = r
    digests_ok = all(len({r["result_digest"] for r in c.values()}) == 1 for c in cells.values())
    complete = len(cells) == len(bench.DEFAULT_GRID) and all(set(c) >= {"tableaux", "hpoly"}
                                                            for c in cells.values())
    trend = "; ".join(f"{n} s={s}: tableaux/hpoly={int(c['tableaux']['median_ns']) / int(c['hpoly']['median_ns']):.2f}"
                      for (n, s), c in cells.items())
    report(11, "bench on both grids, digests agree, CSV emitted", code == 0 and digests_ok and complete, trend)
