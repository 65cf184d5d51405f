import json
import math

from output_manager import OutputManager, config_hash, format_float, round_floats


def test_format_float():
    assert format_float(1 / 3) == "0.333333333"
    assert format_float(4.708) == "4.708"
    assert format_float(-0.0) == "0"
    assert format_float(float("nan")) == "nan"
    assert format_float(float("-inf")) == "-inf"


def test_round_floats():
    data = round_floats({"a": 1 / 3, "b": [float("nan"), 2], "c": True})
    assert data == {"a": 0.333333333, "b": [None, 2], "c": True}


def test_config_hash_ignores_run_only_keys():
    base = {"command": "zz-map", "params": {"fsr": 0.44}, "out": "a", "threads": 1, "verbose": False}
    moved = dict(base, out="b", threads=8, verbose=True)
    assert config_hash(base) == config_hash(moved)
    assert len(config_hash(base)) == 16
    assert config_hash(base) != config_hash(dict(base, params={"fsr": 0.917}))


def test_csv_header_and_rows(tmp_path, read_table):
    output = OutputManager(tmp_path, "zz-map", {"command": "zz-map"})
    path = output.write_csv("zz_map.csv", ["f1_ghz", "zz_ghz", "flag"], [(4.6, 1 / 3, "ok"), (4.7, math.nan, "ambiguous")])
    lines = path.read_text().splitlines()
    assert lines[0] == "# command: zz-map"
    assert lines[1] == f"# config_hash: {output.hash}"
    assert lines[2] == "# columns: f1_ghz,zz_ghz,flag"
    assert lines[3] == "f1_ghz,zz_ghz,flag"
    assert lines[4] == "4.6,0.333333333,ok"

    header, columns, rows = read_table(path)
    assert header["command"] == "zz-map"
    assert columns == ["f1_ghz", "zz_ghz", "flag"]
    assert rows[1] == ["4.7", "nan", "ambiguous"]


def test_json_and_manifest(tmp_path):
    config = {"command": "zz-free", "out": str(tmp_path), "threads": 2}
    output = OutputManager(tmp_path / "run", "zz-free", config)
    output.write_json("zz_free.json", {"zz_free_ghz": 4.70812345678})
    data = json.loads((tmp_path / "run" / "zz_free.json").read_text())
    assert data == {"command": "zz-free", "config_hash": output.hash, "zz_free_ghz": 4.70812346}

    manifest = json.loads(output.write_manifest().read_text())
    assert manifest["outputs"] == ["zz_free.json"]
    assert "out" not in manifest["config"] and "threads" not in manifest["config"]
    assert set(manifest["libraries"]) == {"numpy", "scipy", "qutip"}
