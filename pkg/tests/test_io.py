import json

import numpy as np
import pytest

from monogen import io
from monogen import fixtures


def test_algebra_round_trip():
    for spec in fixtures.algebras().values():
        back = io.algebra_from_json(json.loads(json.dumps(io.algebra_to_json(spec))))
        assert back.m == spec.m and back.n == spec.n
        assert back.upsilon == spec.upsilon and back.u_map == spec.u_map


def test_frame_and_function_round_trip():
    frame = fixtures.default_frame("mixed")
    back = io.frame_from_json(io.frame_to_json(frame), frame.spec)
    np.testing.assert_array_equal(back.a, frame.a)
    mf = io.monogenic_from_json({"F": [{"terms": [{"poly": [1, [0, 2]], "exp_lambda": [0.5, -1]}]},
                                       {"terms": [{"poly": [0, 1]}]}]}, frame)
    again = io.monogenic_from_json(io.monogenic_to_json(mf), frame)
    assert again.F == mf.F


def test_pde_round_trip():
    pde = io.pde_from_json({"N": 2, "terms": [{"alpha": [2, 0], "c": 1}, {"alpha": [0, 2], "c": 1}]})
    assert io.pde_from_json(io.pde_to_json(pde)).terms == pde.terms


@pytest.mark.parametrize("v,z", [(2, 2), ([1, -1], 1 - 1j), ({"re": 0.5, "im": 2}, 0.5 + 2j), ({"im": 1}, 1j)])
def test_parse_complex(v, z):
    assert io.parse_complex(v) == z


def test_parse_complex_rejects():
    with pytest.raises(io.InputError):
        io.parse_complex("x")
    with pytest.raises(io.InputError):
        io.parse_complex(True)


def test_error_paths():
    with pytest.raises(io.InputError) as exc:
        io.algebra_from_json({"m": 1})
    assert exc.value.path == "$.n"
    with pytest.raises(io.InputError) as exc:
        io.algebra_from_json({"m": 1, "n": 3, "upsilon": [{"r": 2, "s": 2, "p": 3, "value": "bad"}]})
    assert exc.value.path == "$.upsilon[0].value"
    with pytest.raises(io.InputError) as exc:
        io.pde_from_json({"N": 2, "terms": [{"alpha": [2, 0], "c": [1, 1]}]})
    assert exc.value.path == "$.terms[0].c"


def test_load_json_file_and_errors(tmp_path):
    p = tmp_path / "a.json"
    p.write_text('{"m": 1,\n "n": }')
    with pytest.raises(io.InputError) as exc:
        io.load_json(str(p))
    assert exc.value.line == 2 and exc.value.source == str(p)
    with pytest.raises(io.InputError):
        io.load_json(str(tmp_path / "missing.json"))
    obj, src = io.load_json('{"m": 1, "n": 1}')
    assert obj == {"m": 1, "n": 1} and src == "<inline>"


def test_frame_k_mismatch():
    with pytest.raises(io.InputError) as exc:
        io.frame_from_json({"k": 4, "vectors": [[[0, 1]]]}, fixtures.complex_plane())
    assert exc.value.path == "$.k"


def test_element_length():
    with pytest.raises(io.InputError):
        io.element_from_json([1, 2], fixtures.dual3())
