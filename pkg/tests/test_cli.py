import json

import pytest

from brpickit import brpic as bp
from brpickit import cli
from brpickit import linalg as la


def _write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def _run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


SWEEDLER = {"group": [2], "u": [1], "V": [[1]]}


def test_orth_counts(tmp_path, capsys):
    spec = _write(tmp_path, "sw.json", SWEEDLER)
    code, out, err = _run(capsys, ["orth", "--spec", spec])
    assert code == 0 and err == ""
    assert "orthogonal automorphisms: 2" in out
    spec = _write(tmp_path, "z3.json", {"group": [3], "u": [0], "V": []})
    code, out, _ = _run(capsys, ["orth", "--spec", spec])
    assert code == 0
    assert "orthogonal automorphisms: 4" in out


def test_orth_json_round_trip(tmp_path, capsys):
    spec = _write(tmp_path, "sw.json", SWEEDLER)
    code, out, _ = _run(capsys, ["orth", "--spec", spec, "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["count"] == 2 and len(obj["automorphisms"]) == 2
    assert json.loads(json.dumps(obj)) == obj
    sizes = sorted(a["U_size"] for a in obj["automorphisms"])
    assert sizes == [2, 4]


def test_describe_sweedler(tmp_path, capsys):
    spec = _write(tmp_path, "sw.json", SWEEDLER)
    code, out, _ = _run(capsys, ["brpic", "describe", "--spec", spec,
                                 "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["component_count"] == 2
    assert all(c["A_dim"] == 1 and c["C_dim"] == 1
               for c in obj["components"])


def test_mul_identity_is_identity(tmp_path, capsys):
    spec = _write(tmp_path, "mul.json",
                  SWEEDLER | {"datum": "identity", "datum2": "identity"})
    code, out, _ = _run(capsys, ["brpic", "mul", "--spec", spec, "--json"])
    assert code == 0
    obj = json.loads(out)
    module = cli.parse_module(SWEEDLER)
    prod = bp.ODatum.from_json(module, obj["product"])
    assert prod == bp.identity_odatum(module)
    assert obj["validation"]["valid"]


def test_convert_graph_datum(tmp_path, capsys):
    datum = {"W": {"ambient": 2, "basis": [["1@1", "2@1"]]},
             "beta": {"gram": [["0@1"]]},
             "alpha": {"matrix": [[1, 0], [0, 1]]}}
    spec = _write(tmp_path, "conv.json", SWEEDLER | {"datum": datum})
    code, out, _ = _run(capsys, ["brpic", "convert", "--spec", spec,
                                 "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["kind"] == "odatum"
    T = obj["converted"]["T"]
    # graph v + 2*vhat carries T = [[a, 0], [c, 1/a]] with a = 1/2
    assert T[0][0] == "1/2@1" and T[1][1] == "2@1"
    assert T[0][1] == "0@1"
    assert obj["validation"]["valid"]
    # converting back yields an equivalent relation datum
    spec2 = _write(tmp_path, "conv2.json",
                   SWEEDLER | {"datum": obj["converted"]})
    code, out, _ = _run(capsys, ["brpic", "convert", "--spec", spec2,
                                 "--json"])
    assert code == 0
    back = json.loads(out)
    module = cli.parse_module(SWEEDLER)
    d0 = bp.RDatum.from_json(module, datum)
    d1 = bp.RDatum.from_json(module, back["converted"])
    assert bp.rdatum_equiv(d0, d1)[0]


def test_inv_then_mul_gives_identity(tmp_path, capsys):
    datum = {"T": [["1/2@1", "0@1"], ["3@1", "2@1"]],
             "alpha": {"matrix": [[1, 0], [0, 1]]}}
    spec = _write(tmp_path, "inv.json", SWEEDLER | {"datum": datum})
    code, out, _ = _run(capsys, ["brpic", "inv", "--spec", spec, "--json"])
    assert code == 0
    inv = json.loads(out)["inverse"]
    spec2 = _write(tmp_path, "mul2.json",
                   SWEEDLER | {"datum": datum, "datum2": inv})
    code, out, _ = _run(capsys, ["brpic", "mul", "--spec", spec2, "--json"])
    assert code == 0
    obj = json.loads(out)
    module = cli.parse_module(SWEEDLER)
    prod = bp.ODatum.from_json(module, obj["product"])
    assert prod == bp.identity_odatum(module)


def test_equiv_self(tmp_path, capsys):
    datum = {"T": [["1/2@1", "0@1"], ["3@1", "2@1"]],
             "alpha": {"matrix": [[1, 0], [0, 1]]}}
    spec = _write(tmp_path, "eq.json",
                  SWEEDLER | {"datum": datum, "datum2": datum})
    code, out, _ = _run(capsys, ["brpic", "equiv", "--spec", spec, "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["equivalent"] and obj["witness"] == [[0], [0]]


def test_validation_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out, err = _run(capsys, ["orth", "--spec", str(bad)])
    assert code == 2 and out == "" and "spec" in err
    spec = _write(tmp_path, "nog.json", {"u": [1], "V": []})
    code, _, err = _run(capsys, ["orth", "--spec", spec])
    assert code == 2 and err.startswith("group")
    spec = _write(tmp_path, "badu.json", {"group": [4], "u": [1], "V": []})
    code, _, err = _run(capsys, ["orth", "--spec", spec])
    assert code == 2 and err.startswith("u")
    spec = _write(tmp_path, "badv.json", {"group": [2], "u": [1], "V": [[0]]})
    code, _, err = _run(capsys, ["orth", "--spec", spec])
    assert code == 2 and err.startswith("V[0]")
    spec = _write(tmp_path, "z30.json", {"group": [3], "u": [0], "V": []})
    code, _, err = _run(capsys, ["verify", "all", "--spec", spec])
    assert code == 2 and err.startswith("u")
    spec = _write(tmp_path, "nodat.json", SWEEDLER)
    code, _, err = _run(capsys, ["brpic", "mul", "--spec", spec])
    assert code == 2 and err.startswith("datum")


def test_capacity_exit_code(tmp_path, capsys):
    spec = _write(tmp_path, "z22.json",
                  {"group": [2, 2], "u": [1, 1], "V": [[1, 0]]})
    code, out, err = _run(capsys, ["orth", "--spec", spec, "--bound", "10"])
    assert code == 3 and out == "" and "bound" in err


def test_verify_all_passes(tmp_path, capsys):
    spec = _write(tmp_path, "sw.json", SWEEDLER)
    code, out, _ = _run(capsys, ["verify", "all", "--spec", spec,
                                 "--seed", "7", "--count", "5"])
    assert code == 0
    assert "result: PASS" in out
    assert "check cotensor_iso: pass" in out


def test_verify_corrupted_datum_fails(tmp_path, capsys):
    datum = {"T": [["1@1", "0@1"], ["0@1", "2@1"]],
             "alpha": {"matrix": [[1, 0], [0, 1]]}}
    spec = _write(tmp_path, "cor.json",
                  SWEEDLER | {"datum": datum, "suite": "group-axioms",
                              "count": 2})
    code, out, _ = _run(capsys, ["verify", "--spec", spec])
    assert code == 1
    assert "check datum_valid: FAIL" in out and "duality" in out
    assert "result: FAIL" in out


def test_verify_cotensor_dimension_lines(tmp_path, capsys):
    spec = _write(tmp_path, "z22.json",
                  {"group": [2, 2], "u": [1, 1], "V": [[1, 0]]})
    code, out, _ = _run(capsys, ["verify", "cotensor", "--spec", spec,
                                 "--seed", "3", "--count", "3"])
    assert code == 0
    for i in range(3):
        assert f"instance {i}: dim " in out
    assert "== expected" in out


def test_verify_deterministic(tmp_path, capsys):
    spec = _write(tmp_path, "sw.json", SWEEDLER)
    argv = ["verify", "comodule", "--spec", spec, "--seed", "11",
            "--count", "4", "--json"]
    code1, out1, _ = _run(capsys, argv)
    code2, out2, _ = _run(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2
    obj = json.loads(out1)
    assert obj["ok"] and json.loads(json.dumps(obj)) == obj


def test_seed_from_spec_file(tmp_path, capsys):
    spec = _write(tmp_path, "sw.json",
                  SWEEDLER | {"seed": 11, "count": 4, "suite": "comodule"})
    code, out, _ = _run(capsys, ["verify", "--spec", spec, "--json"])
    assert code == 0
    assert json.loads(out)["seed"] == 11
