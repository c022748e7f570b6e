"""End-to-end command-line runs in subprocesses, one per exit code path."""
import json
import subprocess
import sys

import pytest

import topodots as td
from topodots.io import fmt


def run(*args, **kw):
    return subprocess.run(
        [sys.executable, "-m", "topodots", *map(str, args)],
        capture_output=True,
        text=True,
        **kw,
    )


@pytest.fixture(scope="module")
def circle_csv(tmp_path_factory):
    path = tmp_path_factory.mktemp("data") / "circle.csv"
    r = run("generate", "circle", "-n", 40, "--radius", 5, "--noise", 0.1,
            "--seed", 7, "--out", path)
    assert r.returncode == 0, r.stderr
    return path


def test_generate_writes_points(circle_csv):
    lines = circle_csv.read_text().splitlines()
    assert lines[0] == "x,y"
    assert len(lines) == 41


def test_generate_stdout_matches_library():
    r = run("generate", "grid", "--rows", 2, "--cols", 3, "--spacing", 1.5)
    from topodots.io import points_csv

    assert r.returncode == 0
    assert r.stdout == points_csv(td.generate("grid", rows=2, cols=3, spacing=1.5))


def test_betti_round_trip(circle_csv):
    r = run("betti", circle_csv)
    assert r.returncode == 0
    cloud = td.read_points_csv(circle_csv)
    prof = td.auto_profile(cloud)
    rows = r.stdout.splitlines()
    assert rows[0] == "radius,pieces,holes"
    assert len(rows) == 1 + len(prof.entries)
    for line, (radius, sig) in zip(rows[1:], prof.entries):
        assert line == f"{fmt(radius)},{sig.pieces},{sig.holes}"


def test_betti_explicit_radii(circle_csv):
    r = run("betti", circle_csv, "--radii", "0.1,1.0,6.0", "--format", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert [row["radius"] for row in doc["rows"]] == [0.1, 1.0, 6.0]
    assert doc["rows"][-1]["pieces"] == 1


def test_betti_rips_mode(circle_csv):
    r = run("betti", circle_csv, "--radii", "1.0", "--mode", "rips")
    assert r.returncode == 0


def test_barcode_csv_and_zero_length(circle_csv):
    lean = run("barcode", circle_csv)
    full = run("barcode", circle_csv, "--include-zero-length")
    assert lean.returncode == full.returncode == 0
    assert lean.stdout.splitlines()[0] == "dimension,birth,death"
    assert len(full.stdout.splitlines()) >= len(lean.stdout.splitlines())
    assert any(line.endswith(",inf") for line in lean.stdout.splitlines())


def test_barcode_json_parses(circle_csv):
    r = run("barcode", circle_csv, "--format", "json")
    doc = json.loads(r.stdout)
    assert doc["mode"] == "cech"
    assert doc["point_count"] == 40


def test_classify_groups(tmp_path):
    paths = []
    for name, shape, extra in (
        ("ring", "circle", ["-n", "30", "--radius", "6"]),
        ("ring2", "circle", ["-n", "36", "--radius", "7"]),
        ("blob", "grid", ["--rows", "2", "--cols", "2", "--spacing", "1"]),
    ):
        p = tmp_path / f"{name}.csv"
        assert run("generate", shape, *extra, "--out", p).returncode == 0
        paths.append(p)
    r = run("classify", *paths, "--radius", 1.5)
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    sigs = {tuple(m.rsplit("/", 1)[-1] for m in g["members"]): (
        g["signature"]["pieces"], g["signature"]["holes"]) for g in doc["groups"]}
    assert sigs == {("blob.csv",): (1, 0), ("ring.csv", "ring2.csv"): (1, 1)}


def test_classify_partial_failure(tmp_path, circle_csv):
    bad = tmp_path / "bad.csv"
    bad.write_text("1,2\nnope,4\n")
    out = tmp_path / "groups.json"
    r = run("classify", circle_csv, bad, "--radius", 1.0, "--out", out)
    assert r.returncode == 3
    assert "bad.csv" in r.stderr and "line 2" in r.stderr
    doc = json.loads(out.read_text())  # good file still classified
    assert [g["members"] for g in doc["groups"]] == [[str(circle_csv)]]


def test_plot_svg_views(circle_csv):
    bars = run("plot", circle_csv, "--view", "barcode")
    diag = run("plot", circle_csv, "--view", "diagram")
    assert bars.returncode == diag.returncode == 0
    assert bars.stdout.startswith("<?xml")
    assert "<svg" in diag.stdout


def test_plot_discs_pbm(circle_csv):
    r = run("plot", circle_csv, "--view", "discs", "--radius", 1.0)
    assert r.returncode == 0
    assert r.stdout.startswith("P1\n")
    counts = set(r.stdout.splitlines()[2:][0]) | set(r.stdout.splitlines()[-1])
    assert counts <= {"0", "1"}


def test_exit_2_missing_input(tmp_path):
    r = run("betti", tmp_path / "absent.csv")
    assert r.returncode == 2
    assert "error:" in r.stderr


def test_exit_2_unwritable_output(circle_csv, tmp_path):
    r = run("betti", circle_csv, "--out", tmp_path / "no" / "dir" / "x.csv")
    assert r.returncode == 2


def test_exit_3_parse_failure(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("1,2\n3\n")
    r = run("betti", bad)
    assert r.returncode == 3
    assert "line 2" in r.stderr


def test_exit_4_usage_errors(circle_csv):
    assert run("betti", circle_csv, "--radii", "2,3", "--rmax", "1").returncode == 4
    assert run("betti", circle_csv, "--mode", "bogus").returncode == 4
    assert run("betti", circle_csv, "--radii", "1,oops").returncode == 4
    assert run("classify", circle_csv, "--radius", "-1").returncode == 4
    assert run("plot", circle_csv, "--view", "barcode", "--radius", "1").returncode == 4
    assert run("plot", circle_csv, "--view", "discs").returncode == 4
    assert run("plot", circle_csv, "--view", "discs", "--radius", "1",
               "--resolution", "0.5").returncode == 4
    assert run("generate", "grid", "--rows", 1, "--cols", 2).returncode == 4
    assert run("nonsense").returncode == 4
    assert run().returncode == 4


def test_figures_written(circle_csv, tmp_path):
    fig = tmp_path / "prof.png"
    r = run("betti", circle_csv, "--out", tmp_path / "t.csv", "--figure", fig)
    assert r.returncode == 0
    assert fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    fig2 = tmp_path / "bars.png"
    r = run("barcode", circle_csv, "--out", tmp_path / "b.csv", "--figure", fig2)
    assert r.returncode == 0
    assert fig2.exists()


def test_rmax_widens_barcode(circle_csv):
    narrow = run("barcode", circle_csv, "--rmax", "2")
    wide = run("barcode", circle_csv, "--rmax", "8")
    assert narrow.returncode == wide.returncode == 0
    assert narrow.stdout != wide.stdout
    assert json.loads(run("barcode", circle_csv, "--rmax", "8",
                          "--format", "json").stdout)["r_max"] == 8.0
