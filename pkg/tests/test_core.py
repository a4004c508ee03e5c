import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from stoimenow.core import Arc, Matching, MatchingError, NotStoimenowError, ViolationReport, TYPE1, TYPE2, parse_matching, format_matching, \
    find_violations, find_violations_brute_force, is_stoimenow, labels, maxarc, redarc, stat_m, stat_M, level_set_size
from stoimenow.enumeration import enumerate_all_matchings

INNER_REDUCTION = "3 4 1 2 7 9 5 10 6 8"
TRAILING_REDUCTION = "4 5 7 1 2 8 3 6 10 9"
SEVEN_ARCS = "5 7 8 10 1 12 2 3 13 4 14 6 9 11"


def arcs_of(text):
    return [(arc.opener, arc.closer) for arc in parse_matching(text).arcs]


@pytest.mark.parametrize('text, arcs', [
    ("2 1", [(1, 2)]),
    (INNER_REDUCTION, [(1, 3), (2, 4), (5, 7), (6, 9), (8, 10)]),
    ("1-3,2-4,5-6", [(1, 3), (2, 4), (5, 6)]),
    ("5-6, 2-4, 1-3", [(1, 3), (2, 4), (5, 6)]),
    ("3-1,2-4", [(1, 3), (2, 4)]),
])
def test_parse_matching(text, arcs):
    assert arcs_of(text) == arcs


def test_both_text_forms_agree():
    assert parse_matching("1-3,2-4,5-6") == parse_matching("3 4 1 2 6 5")


@pytest.mark.parametrize('text', ["2 3 1 4", "1 2", "2 1 3", "1-3,1-4", "1-3,2-x", "2 a", "", "1-3", "2 1 5 3", "1-1,2-3"])
def test_parse_matching_rejects(text):
    with pytest.raises(MatchingError):
        parse_matching(text)


def test_parse_error_position():
    with pytest.raises(MatchingError) as exc_info:
        parse_matching("2 a")
    assert exc_info.value.position == 2
    with pytest.raises(MatchingError) as exc_info:
        parse_matching("3 4 1 4")
    assert exc_info.value.position == 4


def test_text_round_trip(stoimenow_matchings):
    matchings = [m for n in range(1, 5) for m in enumerate_all_matchings(n)] + stoimenow_matchings[6]
    for m in matchings:
        assert parse_matching(str(m)) == m
        assert parse_matching(m.arc_text()) == m
        assert parse_matching(format_matching(m, 'arcs')) == m


def test_arc_text_is_sorted():
    assert parse_matching("1-3,5-6,2-4").arc_text() == "1-3,2-4,5-6"
    assert str(parse_matching("5-6,1-3,2-4")) == "3 4 1 2 6 5"


def test_arc_rejects_reversed_endpoints():
    with pytest.raises(MatchingError):
        Arc(3, 2)


def test_find_violations_nesting():
    m = Matching.from_arcs([(1, 4), (2, 3)])
    assert find_violations(m) == [ViolationReport(TYPE2, Arc(1, 4), Arc(2, 3)), ViolationReport(TYPE1, Arc(1, 4), Arc(2, 3))]
    assert [str(v) for v in find_violations(m)] == ["Type2: outer 1-4 inner 2-3", "Type1: outer 1-4 inner 2-3"]


@pytest.mark.parametrize('arcs', [
    [(1, 3), (2, 4)],
    [(1, 5), (2, 7), (3, 8), (4, 10), (6, 12), (9, 13), (11, 14)],
])
def test_find_violations_none(arcs):
    assert find_violations(Matching.from_arcs(arcs)) == []


def test_seven_arc_matching():
    assert arcs_of(SEVEN_ARCS) == [(1, 5), (2, 7), (3, 8), (4, 10), (6, 12), (9, 13), (11, 14)]


@pytest.mark.parametrize('text, expected', [
    ("2 1 4 3", True),
    ("4 3 2 1", False),
    ("3 4 1 2 6 5 8 7", True),
    (SEVEN_ARCS, True),
])
def test_is_stoimenow(text, expected):
    assert is_stoimenow(parse_matching(text)) == expected


def test_only_type_1():
    # (2,6) contains (4,5) and their closers are adjacent
    m = Matching.from_arcs([(1, 3), (2, 6), (4, 5)])
    assert [v.kind for v in find_violations(m)] == [TYPE1]


def test_only_type_2():
    m = Matching.from_arcs([(1, 5), (2, 3), (4, 6)])
    assert [v.kind for v in find_violations(m)] == [TYPE2]


@pytest.mark.parametrize('text, expected', [
    ("3 4 1 2 6 5", {(1, 3): 0, (2, 4): 0, (5, 6): 1}),
    (TRAILING_REDUCTION, {(1, 4): 0, (2, 5): 0, (3, 7): 0, (6, 8): 1, (9, 10): 2}),
    ("2 1", {(1, 2): 0}),
])
def test_labels(text, expected):
    labeled = labels(parse_matching(text))
    assert {(arc.opener, arc.closer): label for arc, label in labeled.label_of.items()} == expected


@pytest.mark.parametrize('text, max_arc, red_arc, small_m, big_m', [
    (INNER_REDUCTION, (8, 10), (6, 9), 1, 2),
    (TRAILING_REDUCTION, (9, 10), (9, 10), 2, 2),
    ("3 4 1 2 6 5", (5, 6), (5, 6), 1, 1),
    (SEVEN_ARCS, (11, 14), (6, 12), 1, 3),
    ("2 1", (1, 2), (1, 2), 0, 0),
])
def test_special_arcs_and_statistics(text, max_arc, red_arc, small_m, big_m):
    m = parse_matching(text)
    assert maxarc(m) == Arc(*max_arc)
    assert redarc(m) == Arc(*red_arc)
    assert stat_m(m) == small_m
    assert stat_M(m) == big_m


def test_redarc_rejects_opener():
    with pytest.raises(NotStoimenowError):
        redarc(parse_matching("4 3 2 1"))


@pytest.mark.parametrize('text, i, size', [
    (INNER_REDUCTION, 1, 2),
    (TRAILING_REDUCTION, 2, 1),
    ("2 1", 5, 0),
])
def test_level_set_size(text, i, size):
    assert level_set_size(parse_matching(text), i) == size


def test_level_set_size_rejects_negative_label():
    with pytest.raises(ValueError):
        level_set_size(parse_matching("2 1"), -1)


def test_label_structure(stoimenow_matchings):
    for n, matchings in stoimenow_matchings.items():
        for m in matchings:
            labeled = labels(m)
            opener_labels = [labeled[arc] for arc in m.arcs]
            assert opener_labels == sorted(opener_labels)
            assert set(opener_labels) == set(range(labeled.max_label + 1))
            for label in range(labeled.max_label + 1):
                run = labeled.opener_run(label)
                assert run == list(range(run[0], run[0] + len(run)))


def test_reduction_arc_is_well_defined(stoimenow_matchings):
    for n, matchings in stoimenow_matchings.items():
        for m in matchings:
            position = 1 + m.partner(m.size)
            assert m.is_closer(position)
            assert 0 <= stat_m(m) <= stat_M(m)
            assert stat_M(m) == labels(m).max_label


def test_violation_finders_agree_exhaustively():
    for n in range(1, 6):
        for m in enumerate_all_matchings(n):
            assert find_violations(m) == find_violations_brute_force(m)


def random_matchings(n: int):
    points = list(range(1, 2 * n + 1))
    return st.permutations(points).map(lambda perm: Matching.from_arcs(list(zip(perm[::2], perm[1::2]))))


@settings(max_examples=1000, deadline=None)
@given(m=random_matchings(10))
def test_violation_finders_agree_on_random_matchings(m):
    violations = find_violations(m)
    assert violations == find_violations_brute_force(m)
    assert is_stoimenow(m) == (violations == [])
    for v in violations:
        assert v.outer.contains(v.inner)
        if v.kind == TYPE2:
            assert v.inner.opener == v.outer.opener + 1
        else:
            assert v.outer.closer == v.inner.closer + 1


@pytest.mark.parametrize('pairing, position', [((2.9, 1), 1), ((2, 1.0), 2), ((True, 1), 1), (("2", "1"), 1)])
def test_matching_rejects_non_integer_partners(pairing, position):
    with pytest.raises(MatchingError) as exc_info:
        Matching(pairing)
    assert exc_info.value.position == position
