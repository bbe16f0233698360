"""Monomorphism categories S_n(Gprj-Λ) and their almost split sequences."""

import pytest

from src.gp import GpIndec
from src.repcat import (
    Interval,
    ProjInterval,
    all_almost_split_sn,
    almost_split_sn,
    check_almost_split_sequence,
    gp_interval_count,
    sequence_report,
    sn_indecomposables,
    sn_report,
    sn_representation,
    sn_shape,
)
from src.utils.errors import NotCovered, ValidationError

from .conftest import algebra

x = GpIndec.arrow_ideal("x")
e1 = GpIndec.projective("1")


@pytest.mark.parametrize(
    "key, n, count",
    [("kx2", 1, 2), ("kx2", 2, 5), ("kx2", 3, 9), ("nakayama", 2, 15), ("triangles", 2, 26), ("hereditary", 3, 6)],
)
def test_indecomposable_counts(key, n, count):
    alg = algebra(key)
    assert len(sn_indecomposables(alg, n)) == count
    assert gp_interval_count(alg, n) == count


def test_indecomposable_order(kx2):
    names = [str(o) for o in sn_indecomposables(kx2, 2)]
    assert names == ["[0,0,e_1Λ]", "[1,1,e_1Λ]", "[1,1,xΛ]", "[1,2,xΛ]", "[2,2,xΛ]"]


def test_n_must_be_positive(kx2):
    with pytest.raises(ValidationError):
        sn_indecomposables(kx2, 0)


def test_shapes(kx2):
    shapes = {str(o): sn_shape(kx2, 2, o) for o in sn_indecomposables(kx2, 2)}
    assert shapes == {
        "[0,0,e_1Λ]": "(e_1Λ = e_1Λ)",
        "[1,1,e_1Λ]": "(0 → e_1Λ)",
        "[1,1,xΛ]": "(xΛ ↪ e_1Λ)",
        "[1,2,xΛ]": "(xΛ = xΛ)",
        "[2,2,xΛ]": "(0 → xΛ)",
    }


def test_interval_content_uses_syzygy_and_cover(nakayama):
    a1 = GpIndec.arrow_ideal("a1")
    content = Interval(2, 3, a1).content(nakayama, 4)
    assert content == [(), (GpIndec.arrow_ideal("a3"),), (GpIndec.arrow_ideal("a3"),), (GpIndec.projective("1"),)]


@pytest.mark.parametrize(
    "factory",
    [
        lambda: Interval(0, 1, x),
        lambda: Interval(2, 1, x),
        lambda: Interval(1, 1, e1),
        lambda: ProjInterval(1, 1, x),
        lambda: ProjInterval(2, 1, e1),
    ],
)
def test_invalid_intervals(factory):
    with pytest.raises(ValidationError):
        factory()


def test_projective_interval_normal_form():
    assert ProjInterval(0, 2, e1).normalized() == ProjInterval(2, 2, e1)


def test_sn_report(kx2):
    report = sn_report(kx2, 2)
    assert report.total == 5
    assert report.non_projective == 3
    assert report.objects[2].shape == "(xΛ ↪ e_1Λ)"


def test_sn_representation(kx2):
    rep = sn_representation(kx2, 2, Interval(1, 1, x))
    assert str(rep.vertices["1"]) == "xΛ"
    assert str(rep.vertices["2"]) == "e_1Λ"
    assert rep.arrows["a1"].render() == [["γ"]]
    with pytest.raises(ValidationError):
        sn_representation(kx2, 1, Interval(1, 2, x))
    with pytest.raises(ValidationError):
        sn_representation(kx2, 2, ProjInterval.normal(2, e1))


def test_boundary_family(kx2):
    seq = almost_split_sn(kx2, 2, Interval(2, 2, x))
    assert seq.family == "boundary"
    assert seq.left == Interval(1, 2, x)
    assert seq.middles == (Interval(1, 1, x),)

    seq = almost_split_sn(kx2, 1, Interval(1, 1, x))
    assert str(seq) == "0 -> [1,1,xΛ] -> [0,0,e_1Λ] -> [1,1,xΛ] -> 0"


def test_top_family(nakayama):
    a1, a3 = GpIndec.arrow_ideal("a1"), GpIndec.arrow_ideal("a3")
    seq = almost_split_sn(nakayama, 3, Interval(1, 3, a1))
    assert seq.family == "top"
    assert seq.left == Interval(1, 1, a3)
    assert seq.middles[1] == Interval(2, 3, a1)
    assert seq.middles[0].is_projective


def test_diagonal_family(kx2):
    seq = almost_split_sn(kx2, 3, Interval(2, 2, x))
    assert seq.family == "diagonal"
    assert seq.left == Interval(3, 3, x)
    assert seq.middles == (ProjInterval.normal(2, e1), Interval(2, 3, x))


@pytest.mark.parametrize(
    "end", [Interval(1, 2, x), Interval(2, 3, x), ProjInterval.normal(0, e1)]
)
def test_uncovered_right_ends(kx2, end):
    with pytest.raises(NotCovered):
        almost_split_sn(kx2, 3, end)


def test_all_sequences_kx2(kx2):
    assert [s.family for s in all_almost_split_sn(kx2, 2)] == ["diagonal", "top", "boundary"]
    # at n = 3 the middle intervals [1,2] and [2,3] are not covered
    assert len(all_almost_split_sn(kx2, 3)) == 4


@pytest.mark.parametrize("key", ["kx2", "nakayama"])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sequences_are_exact(key, n):
    alg = algebra(key)
    for seq in all_almost_split_sn(alg, n):
        check = check_almost_split_sequence(alg, seq)
        assert check.passed, check.model_dump()
        assert len(check.vertices) == n


def test_sequences_are_exact_triangles(triangles):
    for seq in all_almost_split_sn(triangles, 2):
        assert check_almost_split_sequence(triangles, seq, 7).passed


def test_sequence_report(kx2):
    seq = almost_split_sn(kx2, 1, Interval(1, 1, x))
    report = sequence_report(kx2, seq)
    assert report.family == "boundary"
    assert report.middles == ["[0,0,e_1Λ]"]
    assert report.f == [[["γ"]]]
    assert report.g == [[["ζ"]]]
    assert report.check is None

    check = check_almost_split_sequence(kx2, seq)
    assert sequence_report(kx2, seq, check).check.exact
