"""Stable AR components of S_n(Gprj-Λ), divisibility and quiver export."""

import json

import pytest

from src.gp import GpIndec, relation_quiver, stable_classes
from src.repcat import (
    Interval,
    all_almost_split_sn,
    component_report,
    divisibility_report,
    expected_seed_period,
    export_quiver,
    knit_stable_component,
    stable_components,
    tau_period,
)
from src.utils.errors import UnsupportedFormat, ValidationError

from .conftest import algebra

x = GpIndec.arrow_ideal("x")


def component(key: str, n: int, index: int = 0):
    alg = algebra(key)
    return knit_stable_component(alg, n, stable_classes(alg)[index])


@pytest.mark.parametrize(
    "key, n, size", [("kx2", 1, 1), ("kx2", 2, 3), ("kx2", 3, 6), ("kx2", 4, 10), ("nakayama", 2, 9)]
)
def test_component_sizes(key, n, size):
    assert component(key, n).size == size


def test_kx2_n2_component(kx2):
    comp = component("kx2", 2)
    assert comp.exact
    assert comp.seed == Interval(2, 2, x)
    assert [str(v) for v in comp.vertices] == ["[2,2,xΛ]", "[1,1,xΛ]", "[1,2,xΛ]"]
    assert comp.tau_of(Interval(2, 2, x)) == Interval(1, 2, x)
    assert comp.tau_of(Interval(1, 1, x)) == Interval(2, 2, x)
    assert comp.mesh_middle(Interval(1, 1, x)) == [Interval(1, 2, x)]


def test_components_of_triangles(triangles):
    comps = stable_components(triangles, 2)
    assert [c.size for c in comps] == [9, 9]
    assert [c.stable_class.arrows() for c in comps] == [["beta", "mu", "alpha"], ["gamma", "delta", "lambda"]]


def test_components_at_n3_are_not_exact():
    assert not component("kx2", 3).exact


def test_component_rejects_bad_n(kx2):
    with pytest.raises(ValidationError):
        knit_stable_component(kx2, 0, stable_classes(kx2)[0])


@pytest.mark.parametrize("key, n", [("kx2", 2), ("kx2", 3), ("kx2", 4), ("nakayama", 2), ("nakayama", 3)])
def test_seed_period(key, n):
    comp = component(key, n)
    assert tau_period(comp, comp.seed) == expected_seed_period(n, comp.stable_class.period)


def test_expected_seed_period():
    assert expected_seed_period(2, 1) == 3
    assert expected_seed_period(3, 1) == 4
    assert expected_seed_period(2, 2) == 3
    assert expected_seed_period(2, 3) == 9


def test_tau_period_rejects_foreign_vertex():
    with pytest.raises(ValidationError):
        tau_period(component("kx2", 2), Interval(1, 3, x))


def test_tau_is_a_permutation():
    comp = component("nakayama", 3)
    images = [y for _, y in comp.tau]
    assert sorted(map(str, images)) == sorted(map(str, comp.vertices))


@pytest.mark.parametrize("key", ["kx2", "nakayama", "triangles"])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_mesh_shape(key, n):
    comp = component(key, n)
    for x in comp.vertices:
        middle = comp.mesh_middle(x)
        assert len(middle) <= 2
        out_of_tau = [t for s, t in comp.arrows if s == comp.tau_of(x)]
        assert sorted(map(str, out_of_tau)) == sorted(map(str, middle))


def test_meshes_match_almost_split_sequences(kx2):
    comp = component("kx2", 2)
    for seq in all_almost_split_sn(kx2, 2):
        assert comp.tau_of(seq.right) == seq.left
        stable_middles = [m for m in seq.middles if not m.is_projective]
        assert sorted(map(str, comp.mesh_middle(seq.right))) == sorted(map(str, stable_middles))


@pytest.mark.parametrize(
    "key, n, divisor",
    [("kx2", 2, 3), ("kx2", 3, 2), ("kx2", 4, 5), ("nakayama", 2, 3), ("triangles", 2, 3)],
)
def test_divisibility(key, n, divisor):
    report = divisibility_report(n, component(key, n))
    assert report.divisor == divisor
    assert report.passed


def test_component_report():
    report = component_report(component("kx2", 3))
    assert report.size == 6
    assert report.seed == "[3,3,xΛ]"
    assert report.seed_tau_period == 4
    assert report.divisibility.divisor == 2
    assert report.tau["[3,3,xΛ]"] == "[1,3,xΛ]"


def test_export_dot():
    text = export_quiver(component("kx2", 2), "dot")
    lines = text.splitlines()
    assert lines[0] == "digraph G {"
    assert lines[-1] == "}"
    assert '  "[2,2,xΛ]" [label="[2,2,xΛ]"];' in lines
    assert '  "[1,1,xΛ]" -> "[2,2,xΛ]";' in lines
    assert '  "[2,2,xΛ]" -> "[1,2,xΛ]" [style=dashed, label="τ"];' in lines
    assert export_quiver(component("kx2", 2), "dot") == text


def test_export_json():
    doc = json.loads(export_quiver(component("kx2", 2), "json"))
    assert doc["schema_version"] == "gsemi.quiver/v1"
    assert doc["kind"] == "stable-component"
    assert len(doc["nodes"]) == 3
    assert sum(e["kind"] == "tau" for e in doc["edges"]) == 3
    assert sum(e["kind"] == "arrow" for e in doc["edges"]) == 3


def test_export_without_components(hereditary):
    comps = stable_components(hereditary, 2)
    assert comps == []
    assert export_quiver(comps, "dot") == "digraph G {\n}\n"
    doc = json.loads(export_quiver(comps, "json"))
    assert doc["kind"] == "stable-component"
    assert doc["nodes"] == [] and doc["edges"] == []


def test_export_relation_quiver(nakayama):
    doc = json.loads(export_quiver(relation_quiver(nakayama), "json"))
    assert doc["kind"] == "relation-quiver"
    assert [n["id"] for n in doc["nodes"]] == ["a1", "a2", "a3"]
    assert {e["kind"] for e in doc["edges"]} == {"relation"}


def test_export_sequences(kx2):
    doc = json.loads(export_quiver(all_almost_split_sn(kx2, 2), "json"))
    assert doc["kind"] == "almost-split-sequences"
    assert sum(e["kind"] == "tau" for e in doc["edges"]) == 3


def test_unsupported_format():
    with pytest.raises(UnsupportedFormat):
        export_quiver(component("kx2", 2), "svg")
    with pytest.raises(UnsupportedFormat):
        export_quiver([1, 2, 3], "dot")
