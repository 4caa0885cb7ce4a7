import json

from click.testing import CliRunner

from quasisection_euler.cli import cli
from quasisection_euler.config import settings


def run(*args):
    return CliRunner().invoke(cli, list(args))


def test_verify_weights_small():
    result = run("verify-weights", "--max-nk", "3", "--max-r", "2")
    assert result.exit_code == 0, result.output
    assert "type_I(2,0)" in result.output
    row = next(line for line in result.output.splitlines() if line.startswith("type_I(2,0)"))
    assert row.split()[1:4] == ["I(2,0)", "1/6", "1/6"]
    whitney = next(line for line in result.output.splitlines() if line.startswith("whitney(2)"))
    assert "Inessential(line-symmetric)" in whitney
    assert whitney.split()[2] == "0"


def test_verify_weights_over_cap_is_input_error():
    result = run("verify-weights", "--max-nk", "2", "--max-r", "0", "--cap", "10")
    assert result.exit_code == 2
    assert "error: type_I(1,0)" in result.output


def test_cli_ignores_environment_settings(monkeypatch):
    monkeypatch.setattr(settings, "ENUMERATION_CAP", 1)
    monkeypatch.setattr(settings, "UNIQUENESS_CUTOFF", 4)
    assert run("verify-weights", "--max-nk", "1", "--max-r", "0").exit_code == 0
    result = run("uniqueness")
    assert "cutoff 6;" in result.output
    assert result.exit_code == 0, result.output


def test_euler_arrangement(data_dir):
    result = run("euler", str(data_dir / "demo_arrangement.json"))
    assert result.exit_code == 0, result.output
    lines = result.output.strip().splitlines()
    assert lines[-1] == "0"
    assert any("I(1,0)" in line and line.endswith("4/15") for line in lines)


def test_euler_summary(data_dir):
    result = run("euler", str(data_dir / "four_pancakes.json"))
    assert result.exit_code == 0
    assert result.output.strip() == "2"


def test_euler_declared_mismatch_fails(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"name": "x", "euler": 1, "vertices": [{"type": "I", "n": 2, "k": 0, "count": 12}]}))
    result = run("euler", str(path))
    assert result.exit_code == 1


def test_euler_malformed_rational_is_input_error(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(
        json.dumps(
            {
                "pancakes": [{"center": ["0", "0"], "radius": "1/0", "height": "1/4", "thickness": "1/16"}],
                "sections": [{"height": "1/2"}],
            }
        )
    )
    result = run("euler", str(path))
    assert result.exit_code == 2
    assert "pancakes.0.radius" in result.output


def test_euler_degenerate_is_input_error(tmp_path):
    path = tmp_path / "tangent.json"
    path.write_text(
        json.dumps(
            {
                "pancakes": [
                    {"center": ["0", "0"], "radius": "1", "height": "1/4", "thickness": "1/16"},
                    {"center": ["2", "0"], "radius": "1", "height": "3/4", "thickness": "1/16"},
                ],
                "sections": [{"height": "1/2"}],
            }
        )
    )
    result = run("euler", str(path))
    assert result.exit_code == 2
    assert "tangent" in result.output


def test_missing_file_is_input_error(tmp_path):
    assert run("euler", str(tmp_path / "nope.json")).exit_code == 2


def test_sample(data_dir):
    result = run("sample", str(data_dir / "demo_arrangement.json"), "--samples", "40", "--seed", "3")
    assert result.exit_code == 0, result.output
    assert "40/40 index sums are zero" in result.output


def test_uniqueness_default():
    result = run("uniqueness")
    assert result.exit_code == 0, result.output
    assert "kernel dimension: 0" in result.output
    assert "unique" in result.output


def test_uniqueness_without_anchor_warns():
    result = run("uniqueness", "--anchors", "none")
    assert result.exit_code == 0
    assert "WARNING" in result.output


def test_uniqueness_base_only_is_underdetermined():
    result = run("uniqueness", "--families", "BASE0")
    assert result.exit_code == 1
    assert "underdetermined" in result.output


def test_uniqueness_unknown_family():
    assert run("uniqueness", "--families", "NOPE").exit_code == 2


def test_render_generator(tmp_path):
    out = tmp_path / "portrait.svg"
    result = run("render", "--generator", "I:2,0", "--out", str(out))
    assert result.exit_code == 0
    first = out.read_text()
    run("render", "--generator", "I:2,0", "--out", str(out))
    assert out.read_text() == first
    assert first.startswith("<svg")


def test_render_arrangement(data_dir):
    result = run("render", str(data_dir / "demo_arrangement.json"))
    assert result.exit_code == 0
    assert "I(0,1) -4/15" in result.output


def test_render_bad_generator():
    assert run("render", "--generator", "IV:1").exit_code == 2


def test_gallery_commands():
    listed = run("gallery", "list")
    assert listed.exit_code == 0
    assert "four_pancakes" in listed.output.split()
    checked = run("gallery", "check")
    assert checked.exit_code == 0, checked.output
    assert "four_pancakes(): 2 declared 2  ok" in checked.output
