from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from helpers import (
    brute_set,
    brute_srit,
    composition_from_descents,
    descents_by_row_rule,
    hook_length,
)
from extschur.compositions import Composition, compositions_of, is_partition
from extschur.tableaux import (
    Tableau,
    descent_composition,
    enumerate_set,
    enumerate_srit,
    is_standard_extended,
    reading_word,
    row_sum_vector,
    super_standard,
    swap_entries,
)

@st.composite
def small_compositions(draw, max_weight=6):
    n = draw(st.integers(min_value=0, max_value=max_weight))
    return draw(st.sampled_from(compositions_of(n)))

# the three standard extended tableaux of shape (2,1,3), rows bottom-up
SET_213 = (
    Tableau(((1, 2), (3,), (4, 5, 6))),
    Tableau(((1, 3), (2,), (4, 5, 6))),
    Tableau(((1, 4), (2,), (3, 5, 6))),
)


def test_tableau_validation():
    with pytest.raises(ValueError):
        Tableau(((2, 1),))  # row not increasing
    with pytest.raises(ValueError):
        Tableau(((1, 2), (2,)))  # not a bijection
    with pytest.raises(ValueError):
        Tableau(((1, 3),))  # skips 2
    with pytest.raises(ValueError):
        Tableau(((1,), ()))  # empty row


def test_tableau_basics():
    t = SET_213[0]
    assert t.shape == (2, 1, 3)
    assert t.size == 6
    assert t.positions[3] == (2, 1)
    assert t.entry(3, 2) == 5
    assert str(t) == "4 5 6\n3\n1 2"
    assert t.to_json() == {"shape": [2, 1, 3], "rows": [[1, 2], [3], [4, 5, 6]]}
    assert reading_word(t) == (1, 2, 3, 4, 5, 6)


def test_empty_tableau():
    t = Tableau(())
    assert t.shape == ()
    assert t.size == 0
    assert is_standard_extended(t)
    assert row_sum_vector(t) == ()


def test_enumerate_srit_shape_1_1():
    tableaux = enumerate_srit(Composition((1, 1)))
    assert [t.rows for t in tableaux] == [((1,), (2,)), ((2,), (1,))]


def test_enumerate_srit_shape_2_2_count():
    assert len(enumerate_srit(Composition((2, 2)))) == 6
    assert 6 == factorial(4) // (factorial(2) * factorial(2))


def test_enumerate_srit_single_row():
    assert [t.rows for t in enumerate_srit(Composition((2,)))] == [((1, 2),)]


def test_enumerate_srit_matches_brute_force():
    for n in range(0, 6):
        for alpha in compositions_of(n):
            got = [t.rows for t in enumerate_srit(alpha)]
            assert set(got) == brute_srit(tuple(alpha))
            assert len(got) == len(set(got))


def test_srit_count_formula():
    for n in range(0, 8):
        for alpha in compositions_of(n):
            expected = factorial(n) // prod(factorial(part) for part in alpha)
            assert len(enumerate_srit(alpha)) == expected


def test_srit_order_is_lex_on_reading_words():
    for alpha in [Composition((2, 2)), Composition((1, 2, 1)), Composition((3, 1))]:
        words = [reading_word(t) for t in enumerate_srit(alpha)]
        assert words == sorted(words)


def test_enumerate_set_shape_2_1_3():
    assert tuple(enumerate_set(Composition((2, 1, 3)))) == SET_213


def test_enumerate_set_trivial_shapes():
    assert [t.rows for t in enumerate_set(Composition((1, 1, 1)))] == [((1,), (2,), (3,))]
    assert [t.rows for t in enumerate_set(Composition((1, 2)))] == [((1,), (2, 3))]


def test_enumerate_set_matches_brute_force():
    for n in range(0, 6):
        for alpha in compositions_of(n):
            got = {t.rows for t in enumerate_set(alpha)}
            assert got == brute_set(tuple(alpha))


def test_set_subset_of_srit_and_membership():
    for n in range(0, 8):
        for alpha in compositions_of(n):
            srit = enumerate_srit(alpha)
            extended = set(enumerate_set(alpha))
            assert extended <= set(srit)
            for t in srit:
                assert (t in extended) == is_standard_extended(t)


def test_is_standard_extended_examples():
    assert is_standard_extended(SET_213[0])
    assert not is_standard_extended(Tableau(((2,), (1,))))
    assert is_standard_extended(Tableau(((1, 2, 3, 4),)))


def test_column_condition_skips_short_rows():
    # column 2 exists in rows 1 and 3 only; 6 above 4 breaks it
    assert not is_standard_extended(Tableau(((1, 6), (2,), (3, 4, 5))))
    assert is_standard_extended(Tableau(((1, 4), (2,), (3, 5, 6))))


def test_descent_composition_shape_2_1_3():
    assert descent_composition(SET_213[0]) == (2, 1, 3)
    assert descent_composition(SET_213[1]) == (1, 2, 3)
    assert descent_composition(SET_213[2]) == (1, 1, 2, 2)


def test_descent_composition_weight():
    for n in range(0, 6):
        for alpha in compositions_of(n):
            for t in enumerate_set(alpha):
                assert descent_composition(t).weight == n


def test_super_standard():
    assert super_standard(Composition((2, 1, 3))) == SET_213[0]
    assert super_standard(Composition((4,))).rows == ((1, 2, 3, 4),)
    assert super_standard(Composition((1, 1, 1))).rows == ((1,), (2,), (3,))
    assert super_standard(Composition()).rows == ()


def test_super_standard_is_extended_with_descents_alpha():
    for n in range(0, 9):
        for alpha in compositions_of(n):
            t = super_standard(alpha)
            assert is_standard_extended(t)
            assert descent_composition(t) == alpha


def test_row_sum_vector_examples():
    assert row_sum_vector(SET_213[0]) == (3, 6, 21)
    assert row_sum_vector(SET_213[2]) == (5, 7, 21)
    assert row_sum_vector(Tableau(((1, 2, 3, 4, 5),))) == (15,)


def test_row_sum_vector_is_weakly_increasing_to_total():
    for alpha in compositions_of(5):
        for t in enumerate_srit(alpha):
            sums = row_sum_vector(t)
            assert all(a <= b for a, b in zip(sums, sums[1:]))
            if sums:
                assert sums[-1] == 5 * 6 // 2


def test_set_of_partition_is_standard_young_tableaux():
    for n in range(1, 7):
        for alpha in compositions_of(n):
            if not is_partition(alpha):
                continue
            got = {t.rows for t in enumerate_set(alpha)}
            assert got == brute_set(tuple(alpha))
            assert len(got) == hook_length(tuple(alpha))


def test_descent_rules_agree_on_partitions():
    # column rule (weakly right) vs row rule (strictly above) coincide on
    # standard Young tableaux
    for n in range(1, 7):
        for alpha in compositions_of(n):
            if not is_partition(alpha):
                continue
            for t in enumerate_set(alpha):
                by_rows = composition_from_descents(descents_by_row_rule(t.rows), n)
                assert descent_composition(t) == by_rows


def test_swap_entries():
    t = swap_entries(SET_213[0], 2)
    assert t == SET_213[1]
    assert swap_entries(t, 2) == SET_213[0]


@given(small_compositions())
def test_enumeration_is_deterministic(alpha):
    first = [t.rows for t in enumerate_set(alpha)]
    second = [t.rows for t in enumerate_set(alpha)]
    assert first == second
