from math import comb

import pytest

from altperms.enumeration import GenerationFilter, count, table1_oracle
from altperms.formulas import (
    STATISTICS,
    TABLE1,
    OutOfValidityRange,
    SequenceSpec,
    a_n,
    boundary_count,
    catalan,
    closed_form_even_123,
    closed_form_even_321,
    closed_form_odd,
    convolution_even_321,
    convolution_odd_321,
    decomposition_sum,
    table1_formula,
)
from altperms.perm_core import AlternationClass, PATTERN_123, PATTERN_321

UD = AlternationClass.UP_DOWN
DU = AlternationClass.DOWN_UP


def test_catalan_values():
    assert [catalan(i) for i in range(9)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430]
    with pytest.raises(ValueError):
        catalan(-1)


def test_catalan_matches_binomial_quotient():
    # Segner recurrence vs the independent binomial form, both exact
    for ell in range(101):
        expected, remainder = divmod(comb(2 * ell, ell), ell + 1)
        assert remainder == 0
        assert catalan(ell) == expected


def test_table1_transcription():
    assert len(TABLE1) == 12
    cells = {(row.cls, row.parity, row.statistic): (row.formula, row.valid_from) for row in TABLE1}
    assert cells[(UD, "even", "total")] == ("C(l+1)", 2)
    assert cells[(UD, "even", "ends_in_largest")] == ("C(l)", 2)
    assert cells[(UD, "even", "begins_with_smallest")] == ("C(l)", 2)
    assert cells[(UD, "odd", "total")] == ("C(l+1)", 1)
    assert cells[(UD, "odd", "ends_in_largest")] == ("0", 1)
    assert cells[(UD, "odd", "begins_with_smallest")] == ("C(l)", 1)
    assert cells[(DU, "even", "total")] == ("C(l)", 0)
    assert cells[(DU, "even", "ends_in_largest")] == ("0", 0)
    assert cells[(DU, "even", "begins_with_smallest")] == ("0", 0)
    assert cells[(DU, "odd", "total")] == ("C(l+1)", 1)
    assert cells[(DU, "odd", "ends_in_largest")] == ("C(l)", 1)
    assert cells[(DU, "odd", "begins_with_smallest")] == ("0", 1)


def test_table1_formula_examples():
    assert table1_formula(UD, 4, "total") == 5
    assert table1_formula(UD, 5, "ends_in_largest") == 0
    assert table1_formula(DU, 0, "total") == 1
    with pytest.raises(OutOfValidityRange):
        table1_formula(UD, 2, "total")
    with pytest.raises(OutOfValidityRange):
        table1_formula(UD, 1, "ends_in_largest")
    with pytest.raises(OutOfValidityRange):
        table1_formula(DU, 1, "begins_with_smallest")
    with pytest.raises(ValueError):
        table1_formula(UD, 4, "bogus")
    with pytest.raises(ValueError):
        table1_formula(UD, -2, "total")


def test_table1_formula_matches_oracle_where_valid():
    for n in range(0, 10):
        for cls in (UD, DU):
            for statistic in STATISTICS:
                try:
                    expected = table1_formula(cls, n, statistic)
                except OutOfValidityRange:
                    continue
                assert expected == table1_oracle(cls, n, statistic), (cls, n, statistic)


def test_boundary_count_examples():
    assert boundary_count(UD, 3, "u_candidate") == 2
    assert boundary_count(UD, 2, "u_candidate") == 0
    assert boundary_count(DU, 2, "v_candidate") == 1


def test_boundary_count_validation():
    with pytest.raises(ValueError):
        boundary_count(UD, 0, "u_candidate")
    with pytest.raises(ValueError):
        boundary_count(UD, 3, "w_candidate")


def test_boundary_count_matches_oracle_for_all_small_n():
    # including the lengths where the tabulated formulas are out of range
    for n in range(1, 10):
        for cls in (UD, DU):
            assert boundary_count(cls, n, "u_candidate") == count(
                GenerationFilter(cls, n, avoid=PATTERN_321, ends_in_largest=False)
            )
            assert boundary_count(cls, n, "v_candidate") == count(
                GenerationFilter(cls, n, avoid=PATTERN_321, begins_with_smallest=False)
            )


def test_closed_form_values():
    assert [closed_form_even_321(m) for m in range(2, 7)] == [0, 12, 66, 286, 1144]
    assert [closed_form_even_123(m) for m in range(2, 7)] == [2, 10, 40, 150, 550]
    assert [closed_form_odd(m) for m in range(1, 7)] == [0, 5, 26, 108, 418, 1573]


def test_closed_form_domains():
    for bad_call in (
        lambda: closed_form_even_321(1),
        lambda: closed_form_even_123(1),
        lambda: closed_form_odd(0),
    ):
        with pytest.raises(ValueError):
            bad_call()


def test_closed_forms_always_divide_exactly():
    for m in range(2, 80):
        closed_form_even_321(m)
        closed_form_even_123(m)
        closed_form_odd(m)


def test_convolution_examples():
    assert convolution_even_321(2) == 0  # both sums empty
    assert convolution_even_321(3) == 12
    assert convolution_even_321(4) == 66
    assert convolution_odd_321(1) == 0
    assert convolution_odd_321(2) == 5
    assert convolution_odd_321(3) == 26
    with pytest.raises(ValueError):
        convolution_even_321(1)
    with pytest.raises(ValueError):
        convolution_odd_321(0)


def test_convolutions_equal_closed_forms():
    for m in range(2, 60):
        assert convolution_even_321(m) == closed_form_even_321(m)
    for m in range(1, 60):
        assert convolution_odd_321(m) == closed_form_odd(m)


def test_decomposition_sum_examples():
    assert decomposition_sum(6, UD) == 12
    assert decomposition_sum(6, DU) == 10
    assert decomposition_sum(5, UD) == 5
    with pytest.raises(ValueError):
        decomposition_sum(2, UD)


def test_decomposition_sum_matches_oracle():
    for n in range(3, 10):
        for cls in (UD, DU):
            assert decomposition_sum(n, cls) == count(
                GenerationFilter(cls, n, exact_occurrences=(PATTERN_321, 1))
            ), (n, cls)


def test_decomposition_sum_down_up_counts_even_123():
    for n in (4, 6, 8, 10):
        assert decomposition_sum(n, DU) == count(
            GenerationFilter(UD, n, exact_occurrences=(PATTERN_123, 1))
        ), n


def test_sequence_spec_validation():
    with pytest.raises(ValueError):
        SequenceSpec((2, 1, 3), UD)
    with pytest.raises(ValueError):
        SequenceSpec((2, 1), UD)


def test_a_n_examples():
    assert a_n(SequenceSpec(PATTERN_321, UD), 8) == 66
    assert a_n(SequenceSpec(PATTERN_123, UD), 9) == 108
    assert a_n(SequenceSpec(PATTERN_123, UD), 4) == 2
    assert a_n(SequenceSpec(PATTERN_321, DU), 12) == 550
    assert a_n(SequenceSpec(PATTERN_123, DU), 12) == 1144
    with pytest.raises(ValueError):
        a_n(SequenceSpec(PATTERN_321, UD), 0)


def test_a_n_small_lengths_are_zero():
    for n in (1, 2, 3, 4):
        assert a_n(SequenceSpec(PATTERN_321, UD), n) == 0
    for n in (1, 2, 3):
        assert a_n(SequenceSpec(PATTERN_123, UD), n) == 0


def test_a_n_matches_oracle_all_four_families():
    for n in range(1, 10):
        for pattern in (PATTERN_321, PATTERN_123):
            for cls in (UD, DU):
                expected = count(GenerationFilter(cls, n, exact_occurrences=(pattern, 1)))
                assert a_n(SequenceSpec(pattern, cls), n) == expected, (pattern, cls, n)
