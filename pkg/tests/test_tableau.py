import pytest

from qyt.partition import Partition, partitions
from qyt.tableau import (
    Tableau,
    enumerate_qyt_at_most,
    enumerate_qyt_exact,
    enumerate_ssyt,
    enumerate_syt,
    kostka,
    qyt_count_exact,
)

import oracles


def shapes_upto(n):
    for size in range(1, n + 1):
        yield from partitions(size)


def test_parse_and_str_round_trip():
    t = Tableau.parse("1,1/2,2/3")
    assert t.rows == ((1, 1), (2, 2), (3,))
    assert str(t) == "1,1/2,2/3"
    assert t.shape == Partition((2, 2, 1))


def test_constructor_validates():
    with pytest.raises(ValueError):
        Tableau(((1,), (1, 2)))  # profile not a partition
    with pytest.raises(ValueError):
        Tableau(((0, 1),))


def test_ssyt_enumeration_small_cases():
    six = {str(t) for t in enumerate_ssyt(Partition((2, 2)), 3)}
    assert six == {"1,1/2,2", "1,1/2,3", "1,2/2,3", "1,1/3,3", "1,2/3,3", "2,2/3,3"}
    assert enumerate_ssyt(Partition((1, 1)), 1) == []
    two = {str(t) for t in enumerate_ssyt(Partition((3, 2)), 2)}
    assert two == {"1,1,1/2,2", "1,1,2/2,2"}


def test_ssyt_enumeration_matches_oracle():
    for lam in shapes_upto(5):
        for m in range(1, 6):
            got = {t.rows for t in enumerate_ssyt(lam, m)}
            want = set(oracles.ssyt_brute(lam.parts, m))
            assert got == want


def test_syt_enumeration_examples():
    five = {str(t) for t in enumerate_syt(Partition((3, 2)))}
    assert five == {
        "1,2,3/4,5",
        "1,2,4/3,5",
        "1,2,5/3,4",
        "1,3,4/2,5",
        "1,3,5/2,4",
    }
    assert len(enumerate_syt(Partition((6,)))) == 1
    assert len(enumerate_syt(Partition((2, 2, 1)))) == 5


def test_syt_counts_match_hook_length_formula():
    for lam in shapes_upto(8):
        assert len(enumerate_syt(lam)) == lam.hook_length_count()


def test_qyt_enumeration_figure_counts():
    exact3 = {str(t) for t in enumerate_qyt_exact(Partition((2, 2, 1)), 3)}
    assert exact3 == {"1,1/2,2/3", "1,1/2,3/3", "1,2/2,3/3"}
    exact4 = {str(t) for t in enumerate_qyt_exact(Partition((2, 2, 1)), 4)}
    assert exact4 == {"1,2/2,3/4", "1,3/2,4/3"}
    assert [str(t) for t in enumerate_qyt_exact(Partition((5,)), 1)] == ["1,1,1,1,1"]


def test_qyt_enumeration_matches_direct_backtracking():
    for lam in shapes_upto(6):
        for m in range(1, lam.size + 1):
            got = {t.rows for t in enumerate_qyt_exact(lam, m)}
            want = set(oracles.qyt_exact_brute(lam.parts, m))
            assert got == want


def test_qyt_predicate_on_example_fillings():
    good = Tableau(((1, 2, 2, 4), (2, 3), (4,)))
    bad = Tableau(((1, 2, 2, 5), (3, 3), (4,)))
    assert good.is_quasi_yamanouchi()
    assert not bad.is_quasi_yamanouchi()


def test_destandardization_bijection():
    for lam in shapes_upto(7):
        syt = enumerate_syt(lam)
        images = [t.destandardize() for t in syt]
        assert len(set(images)) == len(syt)  # injectivity
        for t, q in zip(syt, images):
            assert q.is_quasi_yamanouchi()
            assert q.max_entry == len(t.runs())
            assert q.standardize() == t  # inverse
        # surjectivity onto quasi-Yamanouchi fillings of any max entry
        n = lam.size
        all_qyt = {
            rows for m in range(1, n + 1) for rows in oracles.qyt_exact_brute(lam.parts, m)
        }
        assert {q.rows for q in images} == all_qyt


def test_refinement_by_descents():
    for lam in shapes_upto(7):
        n = lam.size
        for k in range(1, n + 1):
            by_descents = sum(1 for t in enumerate_syt(lam) if t.des() == k - 1)
            assert qyt_count_exact(lam, k) == by_descents
        assert sum(qyt_count_exact(lam, k) for k in range(n + 1)) == lam.hook_length_count()


def test_destandardize_examples():
    row = enumerate_syt(Partition((4,)))[0]
    assert row.destandardize().rows == ((1, 1, 1, 1),)
    t = Tableau(((1, 2), (3, 4), (5,)))
    assert t.destandardize() == Tableau(((1, 1), (2, 2), (3,)))


def test_standardize_example():
    q = Tableau(((1, 2), (2, 3), (4,)))
    s = q.standardize()
    assert s == Tableau(((1, 3), (2, 4), (5,)))
    assert s.destandardize() == q


def test_descent_set_and_runs_example():
    t = Tableau(((1, 2, 3, 6, 8), (4, 5, 7, 11), (9, 10, 12)))
    assert t.descent_set() == {3, 6, 8, 11}
    assert t.maj() == 28
    assert t.charge() == 20
    assert t.runs() == [[1, 2, 3], [4, 5, 6], [7, 8], [9, 10, 11], [12]]
    row = Tableau(((1, 2, 3, 4),))
    assert row.descent_set() == set()
    assert row.charge() == 0
    col = Tableau(((1,), (2,), (3,)))
    assert col.descent_set() == {1, 2}


def test_stats_agree_through_standardization():
    # a quasi-Yamanouchi filling carries the statistics of its standardization
    for lam in shapes_upto(6):
        for t in enumerate_syt(lam):
            q = t.destandardize()
            assert q.descent_set() == t.descent_set()
            assert q.maj() == t.maj()
            assert q.des() == t.des()
            assert q.charge() == t.charge()


def test_charge_is_comajor():
    for lam in shapes_upto(6):
        n = lam.size
        for t in enumerate_syt(lam):
            assert t.charge() == sum(n - i for i in t.descent_set())


def test_kostka_examples():
    for lam in shapes_upto(5):
        assert kostka(lam, lam) == 1
    assert kostka(Partition((2, 1)), (1, 1, 1)) == 2
    assert kostka(Partition((3, 2)), (2, 2, 1)) == 2
    assert kostka(Partition((2, 2)), (3, 1)) == 0


def test_kostka_matches_oracle():
    for nu in shapes_upto(5):
        for lam in partitions(nu.size):
            assert kostka(nu, lam) == oracles.kostka_brute(nu.parts, lam.parts)


def test_qyt_at_most_is_cumulative():
    for lam in shapes_upto(6):
        n = lam.size
        for m in range(1, n + 1):
            assert len(enumerate_qyt_at_most(lam, m)) == sum(
                qyt_count_exact(lam, j) for j in range(m + 1)
            )
