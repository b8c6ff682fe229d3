import json

import pytest

from convdecomp.cli import run
from convdecomp.fileio import dump
from convdecomp.reduce import ReductionTrace
from convdecomp.samples import S3_NAMES, blocked_quad, square_fan, unit_square
from convdecomp.svg import SvgOptions, render_svg


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, make in (("S1", unit_square), ("S2", square_fan), ("S3", blocked_quad)):
        paths[name] = tmp_path / f"{name}.txt"
        dump(make(), paths[name])
    return paths


def test_gen_validate_round_trip(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert run(["gen", "--n", "12", "--seed", "3", "--delete-prob", "0.5", "-o", str(out)]) == 0
    for cmd in ("validate", "edges", "arcs", "certify"):
        assert run([cmd, str(out)]) == 0, cmd


def test_validate_exit_codes(tmp_path, files, capsys):
    assert run(["validate", str(files["S3"])]) == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("4 3\n0 0\n4 0\n0 4\n1 1\n0 1\n1 2\n2 0\n")
    assert run(["validate", str(bad)]) == 1
    assert "uncovered_point" in capsys.readouterr().out


def test_invalid_input_error_line(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 3\n0 0\n1 1\n2 2\n0 1\n1 2\n0 2\n")
    assert run(["edges", str(bad)]) == 1
    line = capsys.readouterr().err.strip()
    assert line.startswith("error: ")
    assert json.loads(line[len("error: "):])["kind"] == "GeneralPositionError"


def test_edges_on_square(files, capsys):
    assert run(["edges", str(files["S1"])]) == 0
    row = capsys.readouterr().out.splitlines()[1]
    assert row.split()[:3] == ["0-2", "yes", "none"]


def test_certify_s3_prints_exact_witness(files, capsys):
    assert run(["certify", str(files["S3"])]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["certificate"] in ("ContractibleArc", "DeletableEdge")
    assert doc["blocked_arcs"]["5->6"] == {"y": 1, "x": 4, "u_t": ["0", "1/3"], "t": "1/15"}


def test_arcs_listing(files, capsys):
    assert run(["arcs", str(files["S3"])]) == 0
    out = capsys.readouterr().out
    for line in ("5 -> 6", "5 -> 4", "5 -> 0", "4 -> 5"):
        assert line in out.splitlines()
    report = json.loads(out[out.index("{"):])
    assert report["accounting"]["N"] == len(report["N"])


def test_reduce_and_replay(tmp_path, files, capsys):
    trace = tmp_path / "t.json"
    assert run(["reduce", str(files["S2"]), "-o", str(trace)]) == 0
    t = ReductionTrace.from_json(trace.read_text())
    assert len(t.steps) == 2 and t.final.interior_edges == []
    assert run(["replay", str(trace)]) == 0
    doc = json.loads(trace.read_text())
    doc["steps"].reverse()
    trace.write_text(json.dumps(doc))
    assert run(["replay", str(trace)]) == 1


def test_enumerate(tmp_path, capsys):
    pts = tmp_path / "p.txt"
    pts.write_text("4 0\n0 0\n1 0\n1 1\n0 1\n")
    assert run(["enumerate", str(pts)]) == 0
    captured = capsys.readouterr()
    assert captured.out.count("# decomposition") == 3
    big = tmp_path / "big.txt"
    assert run(["gen", "--n", "9", "-o", str(big)]) == 0
    assert run(["enumerate", str(big)]) == 1


def test_check_command(capsys):
    assert run(["check", "--count", "3", "--max-n", "10"]) == 0
    assert "FAIL" not in capsys.readouterr().out


def test_viz(files, tmp_path):
    out = tmp_path / "s3.svg"
    assert run(["viz", str(files["S3"]), "--arcs", "--witness", "-o", str(out)]) == 0
    svg = out.read_text()
    assert svg.count('class="arc"') == 9
    assert "5 -&gt; 6" in svg and "4 -&gt; 5" in svg
    assert 'class="witness"' in svg and 'class="u_t"' in svg


def test_render_square():
    svg = render_svg(unit_square())
    assert svg.count('class="point"') == 4
    assert svg.count('class="edge"') == 5
    assert svg.startswith("<?xml")


def test_render_is_deterministic():
    opts = SvgOptions(arcs=True, witnesses=True, labels=S3_NAMES)
    assert render_svg(blocked_quad(), opts) == render_svg(blocked_quad(), opts)
    assert ">B2<" in render_svg(blocked_quad(), opts)
