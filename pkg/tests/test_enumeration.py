import pytest

from stoimenow.ascent import enumerate_sequences, count_sequences
from stoimenow.bijection import decode
from stoimenow.core import is_stoimenow, parse_matching
from stoimenow.enumeration import enumerate_matchings, enumerate_all_matchings, enumerate_matchings_naive, count_matchings, \
    sample_matching, verify_bijection, CensusReport


def texts(matchings):
    return [str(m) for m in matchings]


def test_smallest_families():
    assert texts(enumerate_matchings(1)) == ["2 1"]
    assert texts(enumerate_matchings(2)) == ["2 1 4 3", "3 4 1 2"]
    assert texts(enumerate_matchings(3)) == ["2 1 4 3 6 5", "2 1 5 6 3 4", "3 4 1 2 6 5", "3 5 1 6 2 4", "4 5 6 1 2 3"]


def test_counts_are_fishburn_numbers(stoimenow_matchings):
    assert [len(stoimenow_matchings[n]) for n in range(1, 8)] == [1, 2, 5, 15, 53, 217, 1014]
    assert count_matchings(4) == 15


def test_all_matchings_are_counted():
    assert [len(enumerate_all_matchings(n)) for n in range(1, 6)] == [1, 3, 15, 105, 945]


def test_pruning_matches_filtering():
    for n in range(1, 6):
        assert enumerate_matchings(n) == enumerate_matchings_naive(n)


def test_enumeration_is_sorted_and_distinct(stoimenow_matchings):
    for matchings in stoimenow_matchings.values():
        lines = texts(matchings)
        assert lines == sorted(set(lines))
        assert all(is_stoimenow(m) for m in matchings)


def test_worker_count_does_not_change_output():
    assert enumerate_matchings(5, jobs=2) == enumerate_matchings(5)


def test_decoding_reaches_every_matching(stoimenow_matchings):
    for n in range(1, 7):
        assert {decode(x) for x in enumerate_sequences(n)} == set(stoimenow_matchings[n])


@pytest.mark.parametrize('n, large', [(0, False), (8, False), (9, True)])
def test_enumeration_size_limits(n, large):
    with pytest.raises(ValueError):
        enumerate_matchings(n, large=large)


@pytest.mark.parametrize('n', range(1, 8))
def test_verify_bijection(n):
    report = verify_bijection(n)
    assert report.bijective
    assert report.failures == []
    assert report.matching_count == report.sequence_count == count_sequences(n)


def test_census_report_text():
    assert str(verify_bijection(3)) == "n=3 matchings=5 sequences=5 bijective=true"
    report = CensusReport(2, 2, 2, [(parse_matching("2 1 4 3"), "decode(0,1) = 3 4 1 2")])
    assert not report.bijective
    assert str(report) == "n=2 matchings=2 sequences=2 bijective=false\nfailure 2 1 4 3: decode(0,1) = 3 4 1 2"


def test_sample_matching():
    m = sample_matching(10, seed=5)
    assert m.n == 10
    assert is_stoimenow(m)
    assert sample_matching(10, seed=5) == m


@pytest.mark.slow
def test_census_for_eight_arcs():
    with pytest.warns(UserWarning):
        report = verify_bijection(8, jobs=2, large=True)
    assert report.matching_count == 5335
    assert report.bijective
