"""Exit criteria for the package, one test per criterion.

Every check is exact; each test appends a PASS/FAIL line that is printed in
the terminal summary (and to stdout with ``-s``).
"""

import itertools
import time

import pytest

from doublepart import (
    AugmentedMatrix,
    Row,
    Target,
    alt_zero_term,
    bar_term,
    classic_reduction,
    classic_term,
    coeff_table_appendixA,
    coeff_table_direct,
    count,
    evaluate,
    spf,
    spf_bruteforce,
    vpf_bruteforce,
)

from doublepart.coeffs import _direct_cached

from conftest import ACCEPTANCE_LINES
from corpora import APPENDIX_B, SPECIAL_CASES, appendix_a_corpus, classic_corpus, special_corpus
from test_coeffs import REFERENCE_TABLE

CLASSIC_CORPUS = classic_corpus(100)
APPENDIX_A_CORPUS = appendix_a_corpus(50)
GRID_40 = [(r, rho) for r in range(41) for rho in range(41)]


def record(n: int, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'}  criterion {n:>2}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_c01_appendix_b_table():
    # time a cold build, not a cache hit left by earlier tests
    _direct_cached.cache_clear()
    t0 = time.perf_counter()
    table = coeff_table_direct(APPENDIX_B, 0)
    elapsed = time.perf_counter() - t0
    rows_ok = all(table.row(jy) == row for jy, row in REFERENCE_TABLE.items())
    sums = [sum(table.row(jy)) for jy in range(4)]
    ok = rows_ok and sums == [16] * 4 and table.mass == 64 == 4**3 and elapsed < 1.0
    record(1, ok, f"64 entries match={rows_ok}, row sums={sums}, total={table.mass}, {elapsed * 1e3:.2f} ms (cold)")


def test_c02_appendix_a_agreement():
    t0 = time.perf_counter()
    cases = [(APPENDIX_B, 0), *APPENDIX_A_CORPUS]
    bad = [(D, i) for D, i in cases if coeff_table_appendixA(D, i) != coeff_table_direct(D, i)]
    elapsed = time.perf_counter() - t0
    assert len(APPENDIX_A_CORPUS) == 50
    assert all(D.m <= 4 and max(max(c) for c in D) <= 5 for D, _ in APPENDIX_A_CORPUS)
    record(2, not bad and elapsed < 60,
           f"{len(cases)} tables, {len(bad)} disagreements, {elapsed:.1f}s")


def test_c03_classic_golden_terms():
    expected = {
        1: (+1, (2, -1, -5), [1, 4, 5]),
        2: (-1, (3, -1, -4), [1, 4, 8]),
        3: (-1, (1, -3, -25), [5, 8, 12]),
    }
    ok = True
    for r, rho in [(0, 0), (10, 10), (30, 7), (3, 29)]:
        aug = AugmentedMatrix.of((r, rho), APPENDIX_B)
        for i, (weight, (a, b, c), gens) in expected.items():
            w, arg, g = classic_term(aug, i, override_rho_condition=True).normalized()
            ok &= (w, arg, sorted(g)) == (weight, a * r + b * rho + c, gens)
    record(3, ok, "(2s1-s2-5,{1,5,4}) +1; (3s1-s2-4,{1,8,4}) -1; (s1-3s2-25,{5,8,12}) -1")


def test_c04_appendix_b_end_to_end():
    t0 = time.perf_counter()
    bad = []
    for r in range(31):
        for rho in range(31):
            aug = AugmentedMatrix.of((r, rho), APPENDIX_B)
            if count(aug) != vpf_bruteforce(aug):
                bad.append((r, rho))
    elapsed = time.perf_counter() - t0
    record(4, not bad and elapsed < 60, f"961 targets, {len(bad)} mismatches, {elapsed:.1f}s")


def test_c05_classic_corpus():
    checked, bad = 0, []
    for D in CLASSIC_CORPUS:
        top = max(c.beta for c in D)
        for r, rho in GRID_40:
            if top >= rho + 2:
                continue
            aug = AugmentedMatrix.of((r, rho), D)
            checked += 1
            if evaluate(classic_reduction(aug)) != vpf_bruteforce(aug):
                bad.append((D, r, rho))
    record(5, not bad and checked > 0,
           f"{len(CLASSIC_CORPUS)} matrices, {checked} targets, {len(bad)} mismatches")


def test_c06_special_cases():
    summary, bad = [], []
    for case in SPECIAL_CASES:
        fixtures = special_corpus(case)
        assert len(fixtures) >= 20
        for D in fixtures:
            for r in range(21):
                for rho in range(21):
                    aug = AugmentedMatrix.of((r, rho), D)
                    if count(aug) != vpf_bruteforce(aug):
                        bad.append((case, D, r, rho))
        summary.append(f"{case}={len(fixtures)}")
    record(6, not bad, f"{', '.join(summary)} fixtures on 21x21 grids, {len(bad)} mismatches")


def test_c07_row_symmetry():
    checked, bad = 0, []
    for D in CLASSIC_CORPUS:
        top_b = max(c.b for c in D)
        top_beta = max(c.beta for c in D)
        for r, rho in GRID_40:
            # both eliminations admissible without any override
            if top_beta >= rho + 2 or top_b >= r + 2:
                continue
            aug = AugmentedMatrix.of((r, rho), D)
            checked += 1
            if evaluate(classic_reduction(aug, Row.FIRST)) != evaluate(classic_reduction(aug, Row.SECOND)):
                bad.append((D, r, rho))
    record(7, not bad and checked > 0, f"{checked} targets, {len(bad)} asymmetries")


def test_c08_alt_zero_identity():
    table = coeff_table_direct(APPENDIX_B, 0)
    bad = []
    for r in range(31):
        for rho in range(31):
            aug = AugmentedMatrix.of((r, rho), APPENDIX_B)
            if alt_zero_term(aug) != bar_term(aug, 0, table):
                bad.append((r, rho))
    record(8, not bad, f"961 targets, {len(bad)} mismatches")


def _all_tables():
    yield coeff_table_direct(APPENDIX_B, 0)
    yield coeff_table_appendixA(APPENDIX_B, 0)
    for D, i in APPENDIX_A_CORPUS:
        yield coeff_table_direct(D, i)
        yield coeff_table_appendixA(D, i)
    matrices = list(CLASSIC_CORPUS)
    for case in SPECIAL_CASES:
        matrices += special_corpus(case)
    for D in matrices:
        for i, c in enumerate(D):
            if c.beta >= 1:
                yield coeff_table_direct(D, i)


def test_c09_coefficient_mass():
    # CoeffTable also refuses construction on a mass mismatch, so every table
    # built anywhere in the suite is checked
    n, bad = 0, 0
    for table in _all_tables():
        n += 1
        bad += table.mass != table.modulus ** len(table.b_prime)
    record(9, bad == 0, f"{n} tables, {bad} with sum(a) != beta**(m-1)")


def test_c10_spf_engine():
    t0 = time.perf_counter()
    truth = {}
    for k in range(5):
        for d in itertools.combinations_with_replacement(range(1, 10), k):
            for s in range(51):
                truth[s, d] = spf_bruteforce(s, d)
    lists = [d for k in range(5) for d in itertools.product(range(1, 10), repeat=k)]
    mism = sum(spf(s, d) != truth[s, tuple(sorted(d))] for d in lists for s in range(51))
    scale_bad = sum(
        spf(g * s, [g * x for x in d]) != truth[s, d]
        for (s, d) in truth
        for g in range(1, 6)
    )
    elapsed = time.perf_counter() - t0
    record(10, mism == 0 and scale_bad == 0,
           f"{len(lists)} generator lists x 51 arguments: {mism} mismatches; "
           f"scaling g<=5: {scale_bad} failures; {elapsed:.1f}s")
