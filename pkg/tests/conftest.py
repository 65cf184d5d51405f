"""Shared fixtures for the CableQSim test suite."""

import csv
from dataclasses import replace

import pytest

from circuit import CircuitParams, adjacent_modes, select_modes
from hilbert import CouplingModel, TruncationSpec
from pool_manager import get_pool_manager


@pytest.fixture(autouse=True)
def single_thread_pool():
    pool = get_pool_manager()
    pool.set_threads(1)
    yield pool
    pool.shutdown()


@pytest.fixture
def params():
    return CircuitParams()


@pytest.fixture
def decoupled(params):
    return replace(params, c_c1=0.0, c_c2=0.0)


@pytest.fixture
def mode_set(params):
    """Modes 10 and 11 around the default qubits."""
    return adjacent_modes(params)


@pytest.fixture
def trunc():
    """Smallest truncation that still holds |02> and |20>."""
    return TruncationSpec(levels_qubit=3, levels_mode=2)


@pytest.fixture
def qubit_trunc():
    return TruncationSpec(levels_qubit=2, levels_mode=2)


@pytest.fixture
def jaynes_cummings(params):
    """
    Qubit 1 resonant with mode 10 (4.4 GHz), qubit 2 decoupled, RWA, two
    levels everywhere and g frozen at 4.4 GHz.
    """
    jc_params = replace(params, f_q1=4.4, c_c2=0.0)
    jc_modes = select_modes(jc_params, indices=[10])
    jc_trunc = TruncationSpec(levels_qubit=2, levels_mode=2, coupling_model=CouplingModel.RWA,
                              track_coupling=False)
    return jc_params, jc_modes, jc_trunc


@pytest.fixture
def read_table():
    """(comment header, column names, rows) of a CSV written by OutputManager.write_csv."""

    def read(path):
        header, body = {}, []
        for line in path.read_text(encoding="utf-8").splitlines():
            if line.startswith("# "):
                key, _, value = line[2:].partition(": ")
                header[key] = value
            else:
                body.append(line)
        rows = list(csv.reader(body))
        return header, rows[0], rows[1:]

    return read
