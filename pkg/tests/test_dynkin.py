"""ADE recognition, positive roots and the CM-finiteness count."""

import pytest

from src.dynkin import (
    DynkinType,
    NotDynkin,
    classify_underlying_graph,
    cm_classification,
    expected_root_count,
    highest_root,
    positive_roots,
    root_count,
    tits_matrix,
)
from src.qalg import Arrow, Quiver, linear_quiver, load_quiver
from src.repcat import sn_report
from src.utils.errors import Disconnected, ValidationError

from .conftest import QUIVER_DIR, algebra


def quiver_from_edges(count: int, edges) -> Quiver:
    vertices = tuple(str(k) for k in range(1, count + 1))
    arrows = tuple(Arrow(f"q{k}", str(s), str(t)) for k, (s, t) in enumerate(edges, start=1))
    return Quiver(vertices, arrows)


@pytest.mark.parametrize(
    "name, expected",
    [("a3.quiver", "A3"), ("d4.quiver", "D4"), ("e6.quiver", "E6")],
)
def test_quiver_files(name, expected):
    assert str(classify_underlying_graph(load_quiver(QUIVER_DIR / name))) == expected


def test_kronecker_is_not_dynkin():
    kind = classify_underlying_graph(load_quiver(QUIVER_DIR / "kronecker.quiver"))
    assert kind == NotDynkin("multiple edge")
    assert str(kind) == "not Dynkin (multiple edge)"


def test_orientation_is_ignored():
    assert classify_underlying_graph(quiver_from_edges(3, [(2, 1), (2, 3)])) == DynkinType("A", 3)


@pytest.mark.parametrize(
    "count, edges, expected",
    [
        (5, [(1, 2), (2, 3), (3, 4), (5, 3)], "D5"),
        (7, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (7, 3)], "E7"),
        (8, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (8, 3)], "E8"),
        (1, [], "A1"),
    ],
)
def test_larger_diagrams(count, edges, expected):
    assert str(classify_underlying_graph(quiver_from_edges(count, edges))) == expected


@pytest.mark.parametrize(
    "count, edges, reason",
    [
        (1, [(1, 1)], "loop"),
        (3, [(1, 2), (2, 3), (1, 3)], "cycle"),
        (5, [(1, 2), (1, 3), (1, 4), (1, 5)], "vertex of degree at least 4"),
        (6, [(1, 2), (2, 3), (3, 4), (4, 5), (6, 2), (6, 4)], "cycle"),
        (7, [(1, 2), (2, 3), (3, 4), (4, 5), (6, 3), (7, 6)], "tree with legs (2, 2, 2)"),
        (6, [(1, 2), (2, 3), (3, 4), (5, 2), (6, 3)], "more than one branch vertex"),
    ],
)
def test_not_dynkin(count, edges, reason):
    assert classify_underlying_graph(quiver_from_edges(count, edges)) == NotDynkin(reason)


def test_disconnected_quiver():
    with pytest.raises(Disconnected):
        classify_underlying_graph(Quiver(("1", "2"), ()))


@pytest.mark.parametrize(
    "text, count", [("A1", 1), ("A3", 6), ("A5", 15), ("D4", 12), ("D5", 20), ("E6", 36), ("E7", 63), ("E8", 120)]
)
def test_root_counts(text, count):
    t = DynkinType.parse(text)
    assert root_count(t) == count
    assert expected_root_count(t) == count


def test_roots_are_sorted_by_height():
    roots = positive_roots(DynkinType("A", 3))
    assert roots[:3] == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert [sum(r) for r in roots] == sorted(sum(r) for r in roots)
    assert highest_root(DynkinType("A", 3)) == (1, 1, 1)


def test_highest_roots():
    assert highest_root(DynkinType("D", 4)) == (1, 2, 1, 1)
    assert max(highest_root(DynkinType("E", 8))) == 6


def test_roots_have_tits_form_one():
    t = DynkinType("E", 6)
    cartan = tits_matrix(t)
    for root in positive_roots(t):
        assert sum(root[i] * cartan[i, j] * root[j] for i in range(6) for j in range(6)) == 2


@pytest.mark.parametrize("text", ["B3", "A0", "D3", "E9", "A", "x4"])
def test_invalid_types(text):
    with pytest.raises(ValidationError):
        DynkinType.parse(text)


def test_cm_classification_a3(kx2, a3_quiver):
    report = cm_classification(kx2, a3_quiver)
    assert report.render() == "CM-finite: yes; count = 6"
    assert report.type == "A3"
    assert report.roots is None


def test_cm_classification_with_roots(triangles):
    report = cm_classification(triangles, load_quiver(QUIVER_DIR / "d4.quiver"), include_roots=True)
    assert report.m == 6
    assert report.gp_count == 72
    assert len(report.roots) == 12


def test_cm_classification_not_dynkin(kx2, hereditary):
    kronecker = load_quiver(QUIVER_DIR / "kronecker.quiver")
    report = cm_classification(kx2, kronecker)
    assert not report.cm_finite
    assert report.render() == "CM-finite: no; count = infinite"
    # no non-projective Gorenstein projectives at all
    assert cm_classification(hereditary, kronecker).render() == "CM-finite: yes; count = 0"


def test_cm_classification_rejects_cycles(kx2):
    with pytest.raises(ValidationError):
        cm_classification(kx2, quiver_from_edges(2, [(1, 2), (2, 1)]))


@pytest.mark.parametrize("key", ["kx2", "nakayama", "triangles", "hereditary", "non_gor"])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_count_matches_monomorphism_category(key, n):
    alg = algebra(key)
    report = cm_classification(alg, linear_quiver(n))
    assert report.gp_count == report.m * n * (n + 1) // 2
    assert report.gp_count == sn_report(alg, n).non_projective
