import csv
import io
import json
import xml.etree.ElementTree as ET

import pytest

from socs.cli import main
from socs.core import is_socs_solution


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_json_round_trip(capsys):
    code, out, _ = run(capsys, "solve", "--max-n", "32", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == "1" and doc["command"] == "solve"
    sols = doc["payload"]["solutions"]
    assert doc["payload"]["count"] == len(sols) == 16
    for row in sols:
        assert isinstance(row["a"], str)
        assert is_socs_solution(int(row["a"]), int(row["b"]), int(row["c"]))


def test_solve_csv(capsys):
    code, out, _ = run(capsys, "solve", "--max-n", "70", "--non-parameterized")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["a", "b", "c", "N", "ell", "m", "k"]
    assert all(r["k"] == "" for r in rows)
    assert (rows[0]["a"], rows[0]["b"], rows[0]["c"]) == ("17", "34", "42")
    for r in rows:
        assert is_socs_solution(int(r["a"]), int(r["b"]), int(r["c"]))
        assert int(r["N"]) == int(r["c"]) - int(r["a"])


def test_solve_single_length(capsys):
    code, out, _ = run(capsys, "solve", "--n", "5")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [(r["a"], r["b"], r["c"], r["k"]) for r in rows] == [("9", "12", "14", "2")]


def test_solve_tiny_bound_is_empty(capsys):
    code, out, _ = run(capsys, "solve", "--max-n", "2", "--format", "json")
    assert code == 0 and json.loads(out)["payload"]["count"] == 0


def test_solve_to_file(tmp_path, capsys):
    dest = tmp_path / "s.csv"
    assert main(["solve", "--max-n", "10", "-o", str(dest)]) == 0
    assert capsys.readouterr().out == ""
    assert dest.read_text().startswith("a,b,c,N,ell,m,k\n")


@pytest.mark.parametrize("argv", [
    [],
    ["solve"],
    ["solve", "--max-n", "0"],
    ["solve", "--max-n", "5", "--n", "5"],
    ["generate", "2", "4", "5", "--count", "0"],
    ["polygon", "9", "12", "14", "--mode", "turns"],
    ["polygon", "9", "12", "14", "--mode", "turns", "--bits", "01"],
    ["census", "--format", "xml"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


@pytest.mark.parametrize("cmd", ["generate", "polygon"])
@pytest.mark.parametrize("triple", [("2", "4", "6"), ("4", "4", "5"), ("0", "1", "1")])
def test_invalid_triple_exit_3(cmd, triple, capsys):
    with pytest.raises(SystemExit) as exc:
        main([cmd, *triple])
    assert exc.value.code == 3
    assert "error:" in capsys.readouterr().err


def test_generate_json(capsys):
    code, out, _ = run(capsys, "generate", "2", "4", "5", "--count", "2")
    assert code == 0
    payload = json.loads(out)["payload"]
    assert [(r["a"], r["b"], r["c"]) for r in payload["orbit"]] == [
        ("473", "855", "1046"), ("89962", "162540", "198829")]
    assert all(r["valid"] and r["parity"] == "odd" for r in payload["orbit"])


def test_generate_long_period(capsys):
    code, out, _ = run(capsys, "generate", "66", "159", "198", "--count", "1")
    ctx = json.loads(out)["payload"]["context"]
    assert code == 0
    assert ctx["A"] == "681522798996" and ctx["period_length"] == 212
    assert len(ctx["p"]) == 117 and len(ctx["q"]) == 111


def test_generate_csv(capsys):
    code, out, _ = run(capsys, "generate", "9", "12", "14", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 3
    assert all(is_socs_solution(int(r["a"]), int(r["b"]), int(r["c"])) for r in rows)


def test_polygon_svg(capsys):
    code, out, _ = run(capsys, "polygon", "59", "110", "135")
    assert code == 0
    root = ET.fromstring(out.split("?>", 1)[1])
    ns = {"s": "http://www.w3.org/2000/svg"}
    d = root.find("s:path", ns).get("d")
    assert d.startswith("M ") and d.endswith(" Z")
    assert d.count(" L ") + 1 == 76
    assert root.find("s:circle", ns) is not None


def test_polygon_json_turns(capsys):
    code, out, _ = run(capsys, "polygon", "9", "12", "14", "--mode", "turns", "--bits", "inward", "--out", "json")
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["side_targets"] == ["10", "11", "12", "13", "14"]
    assert payload["report"]["convex"] is True and payload["report"]["mu"] == 0
    assert payload["squared_diagonals"][2] == "365"


def test_polygon_invalid_exit_4(capsys, monkeypatch):
    import socs.cli as cli
    from socs.geometry import PolygonPath, construct_chainsaw

    def broken(t):
        path = construct_chainsaw(t)
        verts = list(path.vertices)
        verts[2] = (verts[2][0] + 0.5, verts[2][1])
        return PolygonPath(verts, path.side_targets)

    monkeypatch.setattr(cli, "construct_chainsaw", broken)
    code, _, err = run(capsys, "polygon", "9", "12", "14", "--out", "json")
    assert code == 4 and "failed validation" in err


def test_census_stable_output(capsys):
    code1, out1, _ = run(capsys, "census", "--format", "json")
    code2, out2, _ = run(capsys, "census", "--format", "json")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)["payload"]
    assert payload["convex_count"] == 2
    convex = [(r["a"], r["b"], r["c"]) for r in payload["rows"] if r["convex"]]
    assert convex == [("2", "4", "5"), ("9", "12", "14")]


def test_census_csv(capsys):
    code, out, _ = run(capsys, "census")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert sum(r["convex"] == "True" for r in rows) == 2


def test_census_mismatch_exit_5(capsys, monkeypatch):
    import socs.cli as cli

    monkeypatch.setattr(cli, "EXPECTED_CONVEX", ((2, 4, 5),))
    code, _, err = run(capsys, "census")
    assert code == 5 and "differs" in err
