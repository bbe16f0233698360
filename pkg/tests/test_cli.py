"""The gsemi command line: outputs, exit codes and configuration layers."""

import json

import pytest

from src.cli import run
from src.cli.config import ENV_VARIABLES, load_config
from src.utils.errors import ValidationError

from .conftest import ALGEBRA_DIR, ALGEBRA_FILES, QUIVER_DIR, REP_DIR


def alg_path(key: str) -> str:
    return str(ALGEBRA_DIR / ALGEBRA_FILES[key])


@pytest.fixture(autouse=True)
def _isolated(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    for variable in ENV_VARIABLES:
        monkeypatch.delenv(variable, raising=False)


def gsemi(capsys, *argv):
    code = run([*argv, "--no-log-files"])
    out, err = capsys.readouterr()
    return code, out, err


def test_sn_count(capsys):
    assert gsemi(capsys, "sn", alg_path("kx2"), "--n", "2", "count") == (0, "5\n", "")


def test_sn_list(capsys):
    code, out, _ = gsemi(capsys, "sn", alg_path("kx2"), "--n", "2")
    assert code == 0
    assert out.splitlines()[0] == "S_2(Gprj-Λ) over kx2: 5 indecomposables (3 non-projective)"
    assert "(xΛ ↪ e_1Λ)" in out


def test_analyze_text_and_json(capsys):
    code, out, _ = gsemi(capsys, "analyze", alg_path("triangles"))
    assert code == 0
    assert "m = 6" in out
    code, out, _ = gsemi(capsys, "analyze", alg_path("triangles"), "--format", "json")
    doc = json.loads(out)
    assert doc["m"] == 6
    assert doc["singularity"] == [3, 3]
    assert doc["schema_version"] == "gsemi.report/v1"


def test_analyze_dot_is_relation_quiver(capsys):
    code, out, _ = gsemi(capsys, "analyze", alg_path("kx2"), "--format", "dot")
    assert code == 0
    assert out.startswith("digraph G {")
    assert '"x" -> "x"' in out


def test_sing(capsys):
    assert gsemi(capsys, "sing", alg_path("kx2")) == (0, "{1}\nD^b(mod k)/[1]\n", "")
    code, out, _ = gsemi(capsys, "sing", alg_path("triangles"), "--t2")
    assert out.splitlines() == ["{9,9}", "prj kZ_9/I² × prj kZ_9/I²"]


def test_ars_with_check(capsys):
    code, out, _ = gsemi(capsys, "ars", alg_path("kx2"), "--n", "2", "--check")
    assert code == 0
    assert "0 -> [1,2,xΛ] -> [1,1,xΛ] -> [2,2,xΛ] -> 0  (boundary)" in out
    assert out.count("exact: yes, commutes: yes, additive: yes") == 3


def test_ars_at_object(capsys):
    code, out, _ = gsemi(capsys, "ars", alg_path("kx2"), "--n", "3", "--at", "[2,2,x]", "--format", "json")
    assert code == 0
    sequence = json.loads(out)["sequences"][0]
    assert sequence["family"] == "diagonal"
    assert sequence["left"] == "[3,3,xΛ]"


def test_ars_uncovered_end(capsys):
    code, out, err = gsemi(capsys, "ars", alg_path("kx2"), "--n", "3", "--at", "[1,2,x]")
    assert code == 1
    assert out == ""
    assert "error:" in err


def test_component_writes_dot(capsys, tmp_path):
    target = tmp_path / "component.dot"
    code, out, _ = gsemi(capsys, "component", alg_path("kx2"), "--n", "3", "--dot", str(target))
    assert code == 0
    assert "6 vertices (knitted)" in out
    assert "divisibility: 2 | 6: yes" in out
    assert target.read_text(encoding="utf-8").startswith("digraph G {")


def test_component_json_for_one_class(capsys):
    code, out, _ = gsemi(
        capsys, "component", alg_path("triangles"), "--n", "2", "--class", "lambda", "--format", "json"
    )
    doc = json.loads(out)
    assert [c["size"] for c in doc["components"]] == [9]
    assert doc["components"][0]["stable_class"] == ["gamma", "delta", "lambda"]


def test_dynkin(capsys):
    assert gsemi(capsys, "dynkin", alg_path("kx2"), "--quiver", "A3") == (
        0, "CM-finite: yes; count = 6\n", ""
    )
    code, out, _ = gsemi(capsys, "dynkin", alg_path("nakayama"), "--quiver", str(QUIVER_DIR / "d4.quiver"))
    assert out == "CM-finite: yes; count = 36\n"
    code, out, _ = gsemi(capsys, "dynkin", alg_path("kx2"), "--quiver", str(QUIVER_DIR / "kronecker.quiver"))
    assert out == "CM-finite: no; count = infinite\n"


def test_dynkin_roots(capsys):
    code, out, _ = gsemi(capsys, "dynkin", alg_path("kx2"), "--quiver", "A2", "--roots")
    assert out.splitlines() == ["CM-finite: yes; count = 3", "A2: 3 positive roots", "  1 0", "  0 1", "  1 1"]


def test_lift(capsys):
    code, out, _ = gsemi(capsys, "lift", alg_path("kx2"), "--rep", str(REP_DIR / "kx2_a2.json"), "--check")
    assert code == 0
    assert "  2: e_1Λ ⊕ xΛ" in out
    assert "Ψ(lift(R)) ≅ R: yes" in out
    assert "Gorenstein projective representation: yes" in out


def test_lift_json(capsys):
    code, out, _ = gsemi(
        capsys, "lift", alg_path("nakayama"), "--rep", str(REP_DIR / "nakayama_a3.json"), "--format", "json"
    )
    doc = json.loads(out)
    assert doc["stable_roundtrip"] is True
    assert doc["lifted"]["vertices"]["3"] == ["e_2Λ", "e_2Λ", "e_3Λ", "a1Λ", "a1Λ"]


def test_verify_suite(capsys):
    code, out, _ = gsemi(capsys, "verify", alg_path("kx2"))
    assert code == 0
    assert out.splitlines()[0] == "Oracle suite over F_101 (Ext bound 4): yes"


def test_verify_rep(capsys):
    code, out, _ = gsemi(capsys, "verify", alg_path("kx2"), "--rep", str(REP_DIR / "kx2_a2.json"))
    assert code == 0
    assert "  vertex 2: injective yes, cokernel certified-by-decomposition (e_1Λ)" in out


def test_verify_random_is_deterministic(capsys):
    first = gsemi(capsys, "verify", alg_path("kx2"), "--random", "3", "--seed", "4")
    second = gsemi(capsys, "verify", alg_path("kx2"), "--random", "3", "--seed", "4")
    assert first == second
    assert first[0] == 0
    assert first[1] == "Density: 3/3 trials passed\n"


def test_verify_non_gorenstein_algebra(capsys):
    code, out, _ = gsemi(capsys, "verify", alg_path("non_gor"))
    assert code == 0
    assert "no non-projective Gorenstein projectives" in out


@pytest.mark.parametrize("name", ["analysis", "sn", "component", "stable-rep", "density"])
def test_schema(capsys, name):
    code, out, _ = gsemi(capsys, "schema", name)
    assert code == 0
    assert "properties" in json.loads(out)


@pytest.mark.parametrize(
    "argv",
    [
        ["schema", "nonsense"],
        ["sn", "missing.alg", "--n", "2"],
        ["sn", "--n", "0"],
        ["sing", alg_path("kx2"), "--format", "dot"],
        ["sn", alg_path("kx2"), "--n", "2", "--prime", "4"],
        ["analyze", alg_path("kx2"), "--config", "absent.json"],
        ["dynkin", alg_path("kx2"), "--quiver", str(QUIVER_DIR / "a3.quiver"), "--format", "dot"],
    ],
)
def test_user_errors_exit_one(capsys, argv):
    assert run([*argv, "--no-log-files"]) == 1
    assert capsys.readouterr().out == ""


def test_undecodable_algebra_exits_one(capsys, tmp_path):
    path = tmp_path / "latin1.alg"
    path.write_bytes(b"vertices: 1\nname: \xff\n")
    code, out, err = gsemi(capsys, "analyze", str(path))
    assert code == 1
    assert out == ""
    assert "not valid UTF-8" in err


def test_help_exits_zero(capsys):
    assert run(["--help"]) == 0
    assert "analyze" in capsys.readouterr().out


def test_prime_precedence(capsys, monkeypatch, tmp_path):
    config = tmp_path / "settings.json"
    config.write_text(json.dumps({"prime": 13}), encoding="utf-8")
    path = alg_path("kx2")

    _, out, _ = gsemi(capsys, "verify", path, "--config", str(config))
    assert "F_13" in out
    monkeypatch.setenv("GSEMI_PRIME", "7")
    _, out, _ = gsemi(capsys, "verify", path, "--config", str(config))
    assert "F_7" in out
    _, out, _ = gsemi(capsys, "verify", path, "--config", str(config), "--prime", "11")
    assert "F_11" in out


def test_invalid_environment(capsys, monkeypatch):
    monkeypatch.setenv("GSEMI_SEED", "-3")
    code, _, err = gsemi(capsys, "sn", alg_path("kx2"), "--n", "1")
    assert code == 1
    assert "Invalid configuration" in err


def test_algebra_field_line_sets_prime(capsys, tmp_path):
    path = tmp_path / "kx2_f3.alg"
    path.write_text("field: 3\nvertices: 1\narrows: x: 1 -> 1\nrelations: x*x\n", encoding="utf-8")
    _, out, _ = gsemi(capsys, "verify", str(path))
    assert "F_3" in out


def test_load_config_defaults():
    config = load_config(use_env=False)
    assert config.prime is None
    assert config.seed == 0
    assert config.output_format == "text"
    assert load_config(overrides={"log_level": "debug"}, use_env=False).log_level == "DEBUG"
    with pytest.raises(ValidationError):
        load_config(overrides={"prime": 9}, use_env=False)


def test_dump_matrices(capsys, tmp_path):
    target = tmp_path / "dumps"
    code, _, _ = gsemi(capsys, "analyze", alg_path("kx2"), "--dump-matrices", str(target))
    assert code == 0
    assert sorted(p.name for p in target.iterdir()) == ["e_1__x.csv", "x__x.csv"]
    assert (target / "e_1__x.csv").read_text(encoding="utf-8").splitlines() == ["0,0", "1,0"]


def test_log_files(capsys, tmp_path):
    code = run(["sn", alg_path("kx2"), "--n", "1", "--log-dir", str(tmp_path / "logs"), "--log-level", "info"])
    capsys.readouterr()
    assert code == 0
    assert "gsemi sn" in (tmp_path / "logs" / "gsemi.log").read_text(encoding="utf-8")
