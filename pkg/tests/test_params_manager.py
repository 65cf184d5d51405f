import json
from pathlib import Path

import pytest

from errors import ConfigError
from params_manager import DEFAULT_PARAMS, ParamsManager, get_params_manager, load_params

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def write(tmp_path, data, name="params.json"):
    path = tmp_path / name
    path.write_text(data if isinstance(data, str) else json.dumps(data))
    return path


def test_defaults():
    params = load_params()
    assert params.fsr == 0.440
    assert params.c_cable == 11.75
    assert set(DEFAULT_PARAMS) == set(params.to_dict())


def test_partial_file_merges_over_defaults(tmp_path):
    params = load_params(write(tmp_path, {"fsr": 0.917, "c_cable": 5.64}))
    assert params.fsr == 0.917
    assert params.c_cable == 5.64
    assert params.c_q1 == 90.0


@pytest.mark.parametrize("content", [
    {"fsr_ghz": 0.44},
    {"fsr": "fast"},
    {"fsr": True},
    {"fsr": -0.44},
    [0.44],
    "{not json",
])
def test_invalid_files(tmp_path, content):
    with pytest.raises(ConfigError):
        load_params(write(tmp_path, content))


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_params(tmp_path / "missing.json")


def test_manager_save_and_reload(tmp_path):
    manager = ParamsManager(write(tmp_path, {"f_q1": 4.9}))
    assert manager.params.f_q1 == 4.9
    saved = tmp_path / "saved.json"
    manager.save(saved)
    assert json.loads(saved.read_text()) == manager.get_all()

    manager.load(None)
    assert manager.params.f_q1 == DEFAULT_PARAMS["f_q1"]
    manager.load(saved)
    assert manager.params.f_q1 == 4.9


def test_manager_apply_cable_length(tmp_path):
    manager = ParamsManager()
    manager.apply_cable_length(0.48)
    assert manager.params.fsr == pytest.approx(0.440 / 0.48)
    assert manager.params.c_cable == pytest.approx(11.75 * 0.48)
    saved = tmp_path / "short.json"
    manager.save(saved)
    assert load_params(saved) == manager.params
    with pytest.raises(ConfigError):
        manager.apply_cable_length(0.0)


def test_bundled_configs_load():
    manager = get_params_manager()
    for name in ("paper_defaults", "fsr917", "crossmode"):
        manager.load(CONFIGS / f"{name}.json")
    assert manager.params.f_q2 == 4.93
    manager.load(None)
