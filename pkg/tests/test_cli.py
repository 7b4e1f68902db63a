import csv
import io
import json

import pytest

from buchigames.cli import main
from buchigames.report import CSV_COLUMNS, RunReport, run_solver
from buchigames.improved import solve_improved
from buchigames.generators import gen_gadget_chain

from conftest import H1_TEXT


@pytest.fixture
def h1_file(tmp_path):
    p = tmp_path / "h1.txt"
    p.write_bytes(H1_TEXT)
    return str(p)


def test_gen_h1(capsys):
    assert main(["gen", "--family", "gadget_chain", "--n", "1"]) == 0
    assert capsys.readouterr().out.encode() == H1_TEXT


def test_solve_h1(h1_file, capsys):
    assert main(["solve", "--input", h1_file]) == 0
    assert capsys.readouterr().out == "0 1 2 3\n\n"


def test_solve_all_buchi(tmp_path, capsys):
    p = tmp_path / "b.txt"
    p.write_text("buchi 2\n0 1 1 1\n1 2 1 0\n")
    assert main(["solve", "--input", str(p), "--algorithm", "improved"]) == 0
    assert capsys.readouterr().out == "\n0 1\n"


def test_solve_metrics_and_strategies(h1_file, tmp_path, capsys):
    out = tmp_path / "m.json"
    strat = tmp_path / "s.txt"
    rc = main(["solve", "--input", h1_file, "--metrics", "json", "--metrics-out", str(out),
               "--emit-strategies", str(strat), "--verify-strategies"])
    assert rc == 0
    rep = RunReport.from_json(out.read_text())
    assert rep.w2_size == 4 and rep.edge_examinations == sum(rep.per_phase.values())
    assert main(["verify", "--input", h1_file, "--strategies", str(strat)]) == 0


def test_improved_report_fields(tmp_path, capsys):
    g = tmp_path / "c.txt"
    main(["gen", "--family", "gadget_chain", "--n", "64", "--out", str(g)])
    assert main(["solve", "--input", str(g), "--algorithm", "improved", "--metrics", "json"]) == 0
    rep = json.loads(capsys.readouterr().err)
    assert rep["fallback_count"] >= 1 and rep["threshold_branch_count"] <= 7


def test_parse_error_exit(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("buchi 2\n0 1 0 5\n1 1 0 0\n")
    assert main(["solve", "--input", str(p)]) == 2


def test_bad_flags():
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--algorithm", "nope"])
    assert exc.value.code == 64
    assert main(["bench", "--family", "gadget_chain", "--sizes", ""]) == 64


def test_verify_oracle(h1_file, capsys):
    assert main(["verify", "--input", h1_file, "--oracle", "--cross"]) == 0


def test_verify_cap(tmp_path):
    p = tmp_path / "r.txt"
    main(["gen", "--family", "random_bounded", "--n", "40", "--d", "4", "--seed", "3",
          "--out", str(p)])
    assert main(["verify", "--input", str(p), "--oracle"]) == 65


def test_verify_rejects_bad_strategy(h1_file, tmp_path, capsys):
    s = tmp_path / "s.txt"
    s.write_text("strategy 2\n1 2\n3 2\n")
    assert main(["verify", "--input", h1_file, "--strategies", str(s)]) == 1
    assert "rejected" in capsys.readouterr().out


def test_bench_rows_and_determinism(tmp_path, capsys):
    outs = []
    for i in range(2):
        path = tmp_path / f"b{i}.csv"
        assert main(["bench", "--family", "gadget_chain", "--sizes", "64,128,256",
                     "--algorithms", "classical,alternative", "--out", str(path)]) == 0
        rows = list(csv.DictReader(io.StringIO(path.read_text())))
        outs.append([{k: v for k, v in r.items() if k != "wall_time"} for r in rows])
    assert outs[0] == outs[1] and len(outs[0]) == 6
    assert list(outs[0][0]) == [c for c in CSV_COLUMNS if c != "wall_time"]
    work = {(r["algorithm"], int(r["size"])): int(r["edge_examinations"]) for r in outs[0]}
    assert 3.3 < work["classical", 256] / work["classical", 128] < 4.7
    assert 1.7 < work["alternative", 256] / work["alternative", 128] < 2.3
    assert "max envelope_c" in capsys.readouterr().err


def test_report_round_trip():
    _, rep = run_solver(solve_improved, gen_gadget_chain(8))
    assert RunReport.from_json(rep.to_json()) == rep


def test_report_rejects_inconsistent():
    with pytest.raises(ValueError):
        RunReport("x", 2, 2, 1, 1, 5, {"a": 4}, 0, 0.0)
    with pytest.raises(ValueError):
        RunReport.from_json('{"bogus": 1}')
