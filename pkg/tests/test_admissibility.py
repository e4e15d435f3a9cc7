import numpy as np
import pytest

from src.admissibility import (
    admissibility_csv,
    is_admissible,
    minimal_period,
    quoted_pairs_report,
    search_admissible,
    shift_matrix,
    transfer_matrix,
    verify_power_of_three_argument,
)
from src.automaton import propagate_row, push_operator_string
from src.errors import SingularMatrixError


@pytest.mark.parametrize("n, m", [(3, 3), (9, 9), (27, 27), (5, 40), (7, 182), (11, 121)])
def test_quoted_tori_are_admissible(n, m):
    assert is_admissible(n, m)


@pytest.mark.parametrize("n, m", [(3, 2), (3, 4), (9, 3)])
def test_inadmissible_tori(n, m):
    assert not is_admissible(n, m)


def test_transfer_matrix_shape():
    t = transfer_matrix(3)
    assert t.matrix.array.tolist() == [[2, 2, 0], [0, 2, 2], [2, 0, 2]]
    assert list(t.apply([1, 0, 0])) == [2, 0, 2]
    assert shift_matrix(3).array.tolist() == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    with pytest.raises(ValueError):
        transfer_matrix(1)


@pytest.mark.parametrize("n", [3, 9, 27])
def test_power_of_three_periods(n):
    assert minimal_period(n) == n


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_even_n_is_singular(n):
    assert transfer_matrix(n).singular
    with pytest.raises(SingularMatrixError):
        minimal_period(n)


@pytest.mark.parametrize("k", range(1, 7))
def test_binomial_argument(k):
    result = verify_power_of_three_argument(k)
    assert result["binomials_divisible"]
    assert result["offending_r"] == []
    assert result["collapsed_power_is_identity"]
    assert result["method"] == ("exact" if k <= 3 else "lucas")
    if k <= 3:
        assert result["lucas_agrees_with_exact"]
    if k <= 5:
        assert result["transfer_power_is_identity"]
    else:
        assert result["transfer_power_is_identity"] is None


def test_binomial_argument_rejects_k0():
    with pytest.raises(ValueError):
        verify_power_of_three_argument(0)


def test_search_table():
    entries = {e.n: e for e in search_admissible(12, 1000, n_min=3, workers=2)}
    assert sorted(entries) == list(range(3, 13))
    assert entries[3].minimal_m == 3
    assert entries[9].minimal_m == 9
    assert entries[4].singular and entries[4].minimal_m is None
    assert 40 % entries[5].minimal_m == 0
    assert 182 % entries[7].minimal_m == 0
    assert 121 % entries[11].minimal_m == 0
    assert entries[3].admissible_examples == [3, 6, 9]


def test_search_bounds():
    with pytest.raises(ValueError):
        search_admissible(1, 10)


def test_search_not_found_below_cap():
    (entry,) = search_admissible(9, 5, n_min=9)
    assert entry.minimal_m is None and not entry.singular


def test_csv():
    text = admissibility_csv(search_admissible(4, 10, n_min=3))
    lines = text.splitlines()
    assert lines[0] == "n,minimal_m,admissible_examples"
    assert lines[1] == "3,3,3 6 9"
    assert lines[2] == "4,singular,"


def test_quoted_pairs_report():
    for row in quoted_pairs_report():
        assert row["admissible"]
        assert row["quoted_is_multiple"]


@pytest.mark.parametrize("n", range(2, 65))
def test_transfer_matrix_is_one_automaton_step(n):
    rng = np.random.default_rng(n)
    t = transfer_matrix(n)
    for row in rng.integers(0, 3, size=(1000, n)):
        assert np.array_equal(t.apply(row), propagate_row(row))


@pytest.mark.parametrize("n", [3, 9])
def test_operator_push_is_the_transfer_matrix(n):
    rng = np.random.default_rng(n)
    t = transfer_matrix(n)
    for exponents in rng.integers(0, 3, size=(50, n)):
        assert np.array_equal(push_operator_string(exponents), t.apply(exponents))
        current = exponents
        for _ in range(n):
            current = push_operator_string(current)
        assert np.array_equal(current, exponents)


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_period_is_minimal_and_multiples_admissible(n):
    period = minimal_period(n)
    assert is_admissible(n, period)
    assert not any(is_admissible(n, m) for m in range(1, period))
    assert all(is_admissible(n, j * period) for j in (2, 3, 5))
