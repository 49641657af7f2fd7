import csv
import io
import json

import pytest

from koebe.cli import main
from koebe.families import k4
from koebe.report import csv_text, fmt


@pytest.fixture
def files(tmp_path):
    (tmp_path / "k4.json").write_text(json.dumps(k4().to_document()))
    (tmp_path / "c4.json").write_text(json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [0, 3]],
                                                   "rotation": [[1, 3], [2, 0], [3, 1], [0, 2]]}))
    (tmp_path / "p3.json").write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 2]]}))
    (tmp_path / "ord.json").write_text("[0, 1, 2]")
    return tmp_path


def test_pack(files):
    out = files / "m.json"
    assert main(["pack", str(files / "k4.json"), "--out", str(out)]) == 0
    assert len(json.loads(out.read_text())["discs"]) == 4
    assert main(["pack", str(files / "c4.json")]) == 1
    assert main(["pack", str(files / "missing.json")]) == 1


def test_pack_tolerance_flag(files, capsys):
    def residual(tol):
        main(["pack", str(files / "k4.json"), "--tol", str(tol), "--out", str(files / "m.json")])
        line = capsys.readouterr().out
        return float(line.split("angle_residual=")[1].split()[0])

    assert residual(1e-12) <= 1e-12


def test_pack_non_convergence(tmp_path):
    from koebe.families import random_triangulation

    p = tmp_path / "t.json"
    p.write_text(json.dumps(random_triangulation(300, 0).to_document()))
    assert main(["pack", str(p), "--max-iter", "2"]) == 2


def test_metrics(files, capsys):
    assert main(["metrics", str(files / "p3.json"), "--ordering", str(files / "ord.json"),
                 "--d", "2", "--kind", "wcol"]) == 0
    out = capsys.readouterr()
    rows = list(csv.DictReader(io.StringIO(out.out)))
    assert max(int(r["wcol"]) for r in rows) == 3
    assert "wcol_2 = 3" in out.err
    (files / "bad.json").write_text("[0, 1]")
    assert main(["metrics", str(files / "p3.json"), "--ordering", str(files / "bad.json"),
                 "--d", "2", "--kind", "wcol"]) == 1


def test_metrics_koebe_grid(tmp_path, capsys):
    g, m = tmp_path / "g.json", tmp_path / "m.json"
    assert main(["gen", "grid-coin", "--d", "14", "--out", str(g), "--model-out", str(m)]) == 0
    assert main(["metrics", str(g), "--koebe", str(m), "--d", "14", "--kind", "scol"]) == 0
    assert int(capsys.readouterr().err.split("=")[1]) >= 4


def test_metrics_budget(tmp_path):
    g, m = tmp_path / "g.json", tmp_path / "m.json"
    main(["gen", "triangulation", "--n", "200", "--out", str(g)])
    main(["pack", str(g), "--out", str(m)])
    assert main(["metrics", str(g), "--koebe", str(m), "--d", "8", "--kind", "adm",
                 "--exact", "--budget", "10"]) == 3


def test_verify(tmp_path, capsys):
    assert main(["verify", "no-such-suite"]) == 1
    assert main(["verify", "packing-solver", "--out", str(tmp_path)]) == 0
    man = json.loads((tmp_path / "packing-solver.manifest.json").read_text())
    assert man["passed"] and man["seed"] == 0 and len(man["assertions"]) == 3
    names = [a["name"] for a in man["assertions"]]
    assert len(names) == len(set(names))
    assert main(["verify", "packing-solver", "--param", "bogus=1"]) == 1


def test_verify_adm_trend_table(capsys):
    rc = main(["verify", "adm-trend", "--param", "sizes=[40, 60]", "--param", "seeds=10",
               "--param", "ds=[4, 8]"])
    out = capsys.readouterr().out
    assert rc == 0 and "# adm_trend" in out and "fit_c" in out


def test_verify_is_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for d in (a, b):
        main(["verify", "mu-calculus", "--seed", "3", "--out", str(d)])
    ma = json.loads((a / "mu-calculus.manifest.json").read_text())
    mb = json.loads((b / "mu-calculus.manifest.json").read_text())
    for m in (ma, mb):
        m.pop("wall_clock")
    assert ma == mb


def test_failing_suite_exits_4(capsys):
    # An impossible vertex count turns one assertion false.
    assert main(["verify", "multigrid-wcol", "--param", "n=531"]) == 4


def test_render_order_measure_witness(tmp_path, capsys):
    g, m = tmp_path / "g.json", tmp_path / "m.json"
    main(["gen", "grid-coin", "--d", "14", "--out", str(g), "--model-out", str(m)])
    assert main(["render", str(m), "--out", str(tmp_path / "g.svg")]) == 0
    assert (tmp_path / "g.svg").read_text().count("<circle") == 37
    assert main(["order", str(m), "--out", str(tmp_path / "o.json")]) == 0
    assert sorted(json.loads((tmp_path / "o.json").read_text())) == list(range(37))
    assert main(["measure", "ring", "--a", "1", "--b", "3"]) == 0
    assert "6.9027" in capsys.readouterr().out
    assert main(["measure", "ring", "--a", "3", "--b", "1"]) == 1
    assert main(["witness", "adm-lower", "--k", "2", "--out", str(tmp_path / "w.json")]) == 0
    assert len(json.loads((tmp_path / "w.json").read_text())["paths"]) >= 3
    assert main(["buckets", str(m), str(g), "--d", "14"]) == 0


def test_float_format():
    assert fmt(0.1) == "0.10000000000000001"
    assert fmt(3) == "3"
    assert csv_text(["a"], [(1 / 3,)]) == "a\n0.33333333333333331\n"
