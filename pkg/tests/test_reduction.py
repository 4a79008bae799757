import pytest
from hypothesis import given, settings, strategies as st

from doublepart import (
    AugmentedMatrix,
    GeneratorMatrix,
    Row,
    alt_zero_term,
    bar_term,
    classic_reduction,
    classic_term,
    coeff_table_direct,
    evaluate,
    vpf_bruteforce,
)
from doublepart.core import CollinearColumns
from doublepart.reduction import (
    BetaTooLarge,
    BetaZero,
    EmptyEliminationSet,
    Method,
    NotCoprime,
    PreconditionFailed,
    Reduction,
    TableMismatch,
    affine_term,
    bar_terms,
)

from corpora import APPENDIX_B, classic_corpus

THREE = GeneratorMatrix(((1, 2), (1, 3), (3, 1)))


def _aug(target, D):
    return AugmentedMatrix.of(target, D)


@pytest.mark.parametrize(
    "i, sign, coefs, shift, gens",
    [
        (1, +1, (2, -1), -5, {1, 5, 4}),
        (2, -1, (3, -1), -4, {1, 8, 4}),
        (3, -1, (1, -3), -25, {5, 8, 12}),
    ],
)
def test_appendix_b_classic_terms(i, sign, coefs, shift, gens):
    for r, rho in [(10, 10), (30, 4), (7, 29)]:
        term = classic_term(_aug((r, rho), APPENDIX_B), i, override_rho_condition=True)
        weight, arg, g = term.normalized()
        assert weight == sign
        assert arg == coefs[0] * r + coefs[1] * rho + shift
        assert sorted(g) == sorted(gens)
    t = affine_term(APPENDIX_B, i)
    assert (t.sign, t.coef_r, t.coef_rho, t.shift, set(t.generators)) == (sign, *coefs, shift, gens)


def test_affine_rendering():
    assert str(affine_term(APPENDIX_B, 1)) == "+W(2*r-rho-5, {4,1,5})"
    assert str(affine_term(APPENDIX_B, 3)) == "-W(r-3*rho-25, {12,5,8})"
    D = GeneratorMatrix(((1, 1), (2, 1)))
    assert [str(affine_term(D, i)) for i in range(2)] == ["+W(r-rho, {1})", "-W(r-2*rho-1, {1})"]


def test_unit_column_term_is_first_row_partition():
    D = GeneratorMatrix(((2, 3), (0, 1), (5, 1)))
    term = classic_term(_aug((17, 40), D), 1)
    assert term.normalized() == (1, 17, (2, 5))


def test_classic_term_errors():
    with pytest.raises(BetaZero):
        classic_term(_aug((5, 5), [(1, 0), (1, 1)]), 0)
    with pytest.raises(NotCoprime):
        classic_term(_aug((5, 5), [(2, 4), (1, 1)]), 0)
    with pytest.raises(BetaTooLarge):
        classic_term(_aug((5, 1), [(1, 3), (1, 1)]), 0)
    with pytest.raises(CollinearColumns):
        classic_term(_aug((5, 5), [(1, 2), (2, 4)]), 0)


def test_classic_reduction_three_columns():
    red = classic_reduction(_aug((20, 20), THREE))
    assert [t.source_column for t in red.terms] == [0, 1, 2]
    assert all(t.method is Method.CLASSIC and t.scale == 1 for t in red.terms)
    assert evaluate(red) == vpf_bruteforce(_aug((20, 20), THREE))


def test_first_row_negates():
    aug = _aug((20, 20), THREE)
    second = classic_reduction(aug, Row.SECOND)
    first = classic_reduction(aug, Row.FIRST)
    for a, b in zip(second.terms, first.terms):
        assert b.query == a.query.negated()


def test_classic_reduction_needs_two_columns():
    with pytest.raises(EmptyEliminationSet):
        classic_reduction(_aug((3, 3), [(1, 1)]))


def test_classic_reduction_skips_zero_entries():
    D = GeneratorMatrix(((1, 2), (1, 0), (0, 1)))
    assert [t.source_column for t in classic_reduction(_aug((9, 9), D)).terms] == [0, 2]
    assert [t.source_column for t in classic_reduction(_aug((9, 9), D), Row.FIRST).terms] == [0, 1]


def test_row_symmetry_on_grid():
    for D in classic_corpus(8, seed=3):
        for r in range(25):
            for rho in range(25):
                aug = _aug((r, rho), D)
                a = evaluate(classic_reduction(aug, Row.SECOND, override_rho_condition=True))
                b = evaluate(classic_reduction(aug, Row.FIRST, override_rho_condition=True))
                assert a == b == vpf_bruteforce(aug)


def test_bar_term_zero_column_form():
    table = coeff_table_direct(APPENDIX_B, 0)
    aug = _aug((13, 6), APPENDIX_B)
    terms = bar_terms(aug, 0, table)
    assert all(t.method is Method.ZERO_COLUMN and t.scale == 4 for t in terms)
    assert all(t.query.generators == (1, 1, 3) for t in terms)
    # only j_x = r (mod 4) survives, with weights from row j_y = rho mod 4
    assert [(13 - t.query.argument, t.weight) for t in terms] == [
        (jx, a) for jx, a in table.row_items(2) if (13 - jx) % 4 == 0
    ]


def test_bar_equals_classic_for_admissible_columns():
    for D in classic_corpus(15, seed=9):
        tables = [coeff_table_direct(D, i) for i in range(D.m)]
        for r in range(0, 30, 3):
            for rho in range(0, 30, 2):
                aug = _aug((r, rho), D)
                for i, c in enumerate(D):
                    if c.beta < rho + 2:
                        assert bar_term(aug, i, tables[i]) == classic_term(aug, i).value()


def test_bar_gcd_column_whole_sum():
    D = GeneratorMatrix(((2, 4), (1, 1)))
    t0 = coeff_table_direct(D, 0)
    for r in range(20):
        for rho in range(20):
            aug = _aug((r, rho), D)
            total = bar_term(aug, 0, t0) + classic_term(aug, 1, override_rho_condition=True).value()
            assert total == vpf_bruteforce(aug)


def test_bar_term_table_mismatch():
    with pytest.raises(TableMismatch):
        bar_term(_aug((3, 3), APPENDIX_B), 1, coeff_table_direct(APPENDIX_B, 0))
    with pytest.raises(TableMismatch):
        bar_term(_aug((3, 3), THREE), 0, coeff_table_direct(APPENDIX_B, 1))


def test_alt_zero_term_appendix_b_sample():
    table = coeff_table_direct(APPENDIX_B, 0)
    for r, rho in [(0, 0), (5, 9), (12, 8), (30, 30)]:
        aug = _aug((r, rho), APPENDIX_B)
        assert alt_zero_term(aug) == bar_term(aug, 0, table)


def test_alt_zero_term_two_columns():
    D = GeneratorMatrix(((0, 2), (1, 1)))
    for r in range(15):
        for rho in range(15):
            aug = _aug((r, rho), D)
            expected = vpf_bruteforce(aug) - classic_term(aug, 1, override_rho_condition=True).value()
            assert alt_zero_term(aug) == expected


def test_alt_zero_term_preconditions():
    with pytest.raises(PreconditionFailed):
        alt_zero_term(_aug((1, 1), THREE))
    with pytest.raises(PreconditionFailed):
        alt_zero_term(_aug((1, 1), [(0, 1), (1, 2)]))
    with pytest.raises(PreconditionFailed):
        alt_zero_term(_aug((1, 1), [(0, 2), (2, 4), (1, 1)]))


def test_origin_always_counts_once():
    for D in [APPENDIX_B, THREE, GeneratorMatrix(((0, 2), (1, 1)))]:
        aug = _aug((0, 0), D)
        assert vpf_bruteforce(aug) == 1


def test_evaluate_empty():
    assert evaluate(Reduction()) == 0
    assert evaluate(Reduction(), [3, -1]) == 2


def test_appendix_b_assembly():
    table = coeff_table_direct(APPENDIX_B, 0)
    for r in range(0, 31, 5):
        for rho in range(0, 31, 3):
            aug = _aug((r, rho), APPENDIX_B)
            classic = Reduction(tuple(classic_term(aug, i, True) for i in (1, 2, 3)), Row.SECOND, 4)
            assert evaluate(classic, [bar_term(aug, 0, table)]) == vpf_bruteforce(aug)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 20), st.integers(0, 20), st.integers(1, 6))
def test_beta_zero_column_term_set(r, rho, b):
    # dropping the beta = 0 column from the term set leaves the sum intact;
    # the column still shows up in the other terms' generators
    D = GeneratorMatrix(((b, 0), (1, 2), (2, 1)))
    aug = _aug((r, rho), D)
    terms = [classic_term(aug, i, override_rho_condition=True) for i in (1, 2)]
    assert all(len(t.query.generators) == 2 for t in terms)
    assert sum(t.value() for t in terms) == vpf_bruteforce(aug)
