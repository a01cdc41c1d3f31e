"""
Test Bounds - clique cover, Levenshtein intersection sizes and redundancy bounds
"""
import io
import math
from fractions import Fraction

import pytest

from src.bounds.bounds import (
    BOUND_COLUMNS,
    BoundReport,
    asymptotic_trends,
    bound_reports,
    hamming_bound_redundancy,
    levenshtein_N,
    prescribed_t,
    read_recon_upper,
    redundancy_lower_bound_d3,
    reports_frame,
)
from src.bounds.clique_cover import (
    build_clique_cover,
    clique_cover_count,
    clique_cover_size,
    g_sequence,
)
from src.core.exceptions import (
    BudgetExceeded,
    IndexOutOfRange,
    PreconditionViolated,
    PrescribedTNonpositive,
)
from src.sequences.seqcore import Word, read_distance


# g-sequences and the clique cover

def test_g_sequences_t1():
    assert [g_sequence(i, 1).to_text() for i in range(3)] == ["10", "00", "01"]
    with pytest.raises(IndexOutOfRange):
        g_sequence(3, 1)
    with pytest.raises(PreconditionViolated):
        g_sequence(0, 0)


def test_g_sequences_are_pairwise_confusable():
    for t in (1, 2, 3):
        g = [g_sequence(i, t) for i in range(2 * t + 1)]
        for i in range(len(g)):
            for j in range(i + 1, len(g)):
                assert read_distance(g[i], g[j], 2) == 2


def test_clique_cover_worked_example():
    cover = build_clique_cover(4, 2, 1)
    assert cover.count == 6
    assert cover.singletons == 1
    singleton = next(c for c in cover.cliques if len(c) == 1)
    assert singleton == (Word(2, (1, 1, 1, 1)),)
    assert clique_cover_size(4, 2, 1) == 6
    assert clique_cover_count(4, 2, 1) == 6


def test_clique_cover_n2():
    cover = build_clique_cover(2, 2, 1)
    assert cover.count == 2
    assert sorted(len(c) for c in cover.cliques) == [1, 3]
    assert clique_cover_size(2, 2, 1) == 2


def test_clique_cover_size_is_exact_rational():
    value = clique_cover_size(5, 3, 1)
    assert isinstance(value, Fraction)
    assert value == clique_cover_count(5, 3, 1)


@pytest.mark.parametrize("q,t,n", [(2, 1, n) for n in range(1, 11)] + [(2, 2, n) for n in range(1, 11)]
                         + [(3, 1, n) for n in range(1, 7)])
def test_clique_cover_properties(q, t, n):
    cover = build_clique_cover(n, q, t)
    covered = [x for clique in cover.cliques for x in clique]
    assert len(set(covered)) == q ** n
    for clique in cover.cliques:
        for i in range(len(clique)):
            for j in range(i + 1, len(clique)):
                assert read_distance(clique[i], clique[j], 2) == 2
    assert cover.count == clique_cover_count(n, q, t) == clique_cover_size(n, q, t)


@pytest.mark.slow
@pytest.mark.parametrize("t,n", [(1, 12), (2, 11), (2, 12)])
def test_clique_cover_properties_at_acceptance_scale(t, n):
    cover = build_clique_cover(n, 2, t)
    assert cover.count == clique_cover_size(n, 2, t)


def test_clique_cover_budget():
    with pytest.raises(BudgetExceeded):
        build_clique_cover(10, 2, 1, budget=100)


# Levenshtein intersection sizes

def test_levenshtein_examples():
    assert levenshtein_N(5, 2, 1, 2) == 2
    assert levenshtein_N(5, 2, 2, 2) == 10
    assert levenshtein_N(5, 3, 1, 2) == 2
    for n in (3, 6):
        for q in (2, 4):
            assert levenshtein_N(n, q, 1, 1) == q
    with pytest.raises(PreconditionViolated):
        levenshtein_N(5, 2, 1, 3)


def test_read_recon_upper():
    assert read_recon_upper(4, 2, 2, 1, 2) == levenshtein_N(5, 3, 1, 2) == 2


# Redundancy bounds

def test_hamming_bound_redundancy():
    assert hamming_bound_redundancy(7, 2) == pytest.approx(3.0)
    assert hamming_bound_redundancy(1, 2) == pytest.approx(1.0)


def test_prescribed_t():
    with pytest.raises(PrescribedTNonpositive):
        prescribed_t(8, 2)
    with pytest.raises(PrescribedTNonpositive):
        prescribed_t(9, 2)
    with pytest.raises(PrescribedTNonpositive):
        prescribed_t(2, 2)
    assert prescribed_t(10, 2) == 1
    assert prescribed_t(2 ** 20, 2) >= 1


def test_redundancy_lower_bound_d3():
    t = prescribed_t(16, 2)
    expected = 16 - math.log2(clique_cover_size(16, 2, t).numerator / clique_cover_size(16, 2, t).denominator)
    assert redundancy_lower_bound_d3(16, 2) == pytest.approx(expected)


def test_asymptotic_trends_rows():
    names = [r.name for r in asymptotic_trends(64, 2)]
    assert "trend:l2_d4_upper" in names
    assert "trend:d3_lower_gap" in names
    assert "trend:l2_d4_upper" not in [r.name for r in asymptotic_trends(64, 3)]
    assert asymptotic_trends(1, 2) == []


def test_bound_report_formatting():
    assert BoundReport("x", 4, 2, Fraction(16, 3), "").formatted_value() == "16/3"
    assert BoundReport("x", 4, 2, Fraction(6, 1), "").formatted_value() == "6"
    assert BoundReport("x", 4, 2, 1.5, "").formatted_value() == "1.500000"


def test_bound_reports_and_frame():
    reports = bound_reports(8, 2, t=1, d=2)
    names = [r.name for r in reports]
    assert names[0] == "hamming_redundancy"
    assert names.count("clique_cover_size") == 4
    assert "levenshtein_N" in names
    assert "redundancy_lower_bound_d3" not in names
    frame = reports_frame(reports)
    assert list(frame.columns) == BOUND_COLUMNS
    assert str(frame["t"].dtype) == "Int64"
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator="\n")
    assert buffer.getvalue().splitlines()[0] == ",".join(BOUND_COLUMNS)


def test_bound_reports_skip_invalid_reconstruction_radius():
    names = [r.name for r in bound_reports(8, 2, t=1, d=3)]
    assert "levenshtein_N" not in names
