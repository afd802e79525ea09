import json
import pathlib

import pytest

import qtorus

CONFIGS = pathlib.Path(__file__).resolve().parents[2] / "configs"
T1 = {"n": 2, "conductor": 2, "exps": [[0, 1], [1, 0]]}
MODULE = {"torus": T1, "d": 2, "rep": "natural", "window": 3}


def test_cyclotomic_arithmetic():
    z = qtorus.Cyclotomic.root_of_unity(3, 1)
    assert (z * z * z).is_one()
    assert (z + z - z) == z
    assert (z / z).is_one()
    assert json.loads(z.to_json())["conductor"] == 3


def test_torus_radical_and_cocycle():
    q = qtorus.Torus(T1)
    assert q.n == 2
    assert q.central_powers == [2, 2]
    assert q.in_radf([2, 0]) and not q.in_radf([1, 0])
    s = q.skew([1, 0], [0, 1])
    assert (s * s).is_one() and not s.is_one()


def test_hc1_dims():
    q = qtorus.Torus(T1)
    assert q.hc1_dim([0, 0]) == 2
    assert q.hc1_dim([2, 0]) == 1
    assert q.hc1_dim([1, 0]) == 0
    assert q.hc1_bruteforce_dim([2, 0]) == 1


def test_suites_from_config_file():
    config = (CONFIGS / "mixed.json").read_text()
    assert qtorus.cocycle_suite(config, trials=50)["failures"] == 0
    assert qtorus.center_suite(config, trials=10)["failures"] == 0
    assert qtorus.jacobi_suite(T1, d=2, trials=30)["failures"] == 0


def test_bracket_of_opposite_units():
    lhs = {"mat": [{"entries": [[0, 1], [0, 0]], "exp": [1, 0]}]}
    rhs = {"mat": [{"entries": [[0, 0], [1, 0]], "exp": [-1, 0]}]}
    out = qtorus.bracket(T1, 2, lhs, rhs)
    assert "mat" in out


def test_module_operations():
    assert qtorus.module_dim(MODULE) == 4
    assert qtorus.module_axiom_suite(MODULE, trials=20)["failures"] == 0
    assert qtorus.vplus_dim(MODULE) == 2
    weights = qtorus.vplus_weights(MODULE)
    assert [w["coroot_values"] for w in weights] == [["1"]]
    assert weights[0]["mult"] == 2
    assert qtorus.integrability_index(MODULE, 0, 1, [0, 0]) >= 1
    assert all(c["forward"] and c["converse"] for c in qtorus.loop_checks(MODULE))


def test_decompose_window():
    out = qtorus.decompose_window(MODULE, bound=2)
    assert out["window"] == 2
    assert out["classes"] == 1 and out["direct"]


def test_errors_surface_as_qtorus_error():
    with pytest.raises(qtorus.QTorusError):
        qtorus.Torus({"n": 2, "conductor": 2})
    with pytest.raises(qtorus.QTorusError):
        qtorus.decompose_window(MODULE, bound=1)
