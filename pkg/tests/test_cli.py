import json
import subprocess
import sys
from importlib import resources

import jsonschema
import numpy as np
import pytest

from geoknot.cli import main
from geoknot.fixtures import fixture_path
from geoknot.polygon import dumps_polygon, parse_polygon, save_polygon

TREFOIL = str(fixture_path("trefoil_hexagon.json"))
UNKNOT = str(fixture_path("unknot_hexagon.json"))
PENTAGON = str(fixture_path("pentagon_q.json"))


def schema(name):
    return json.loads((resources.files("geoknot") / "schemas" / f"{name}.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, name, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema(name))
    return data


@pytest.fixture
def heptagon(tmp_path, figure_eights):
    path = tmp_path / "hept.json"
    save_polygon(path, figure_eights[0])
    return str(path)


def test_check(capsys):
    data = run_json(capsys, "embedding_report", "check", TREFOIL)
    assert data["status"] == "Embedded" and data["n"] == 6


def test_classify_hex(capsys):
    data = run_json(capsys, "classify_hex", "classify-hex", TREFOIL)
    assert data == {"chirality": 1, "curl": 1, "class": "right-trefoil", "deltas": [1, 1, 1], "region": "2-4-3"}
    data = run_json(capsys, "classify_hex", "classify-hex", UNKNOT)
    assert data["class"] == "unknot"
    code, out, _ = run(capsys, "classify-hex", TREFOIL, "--format", "text")
    assert code == 0 and out.startswith("right-trefoil")


def test_classify_hept(capsys, heptagon):
    data = run_json(capsys, "xi_report", "classify-hept", heptagon)
    assert data["type"] == "4_1" and data["xi"] in (-1, 1)


def test_region(capsys, heptagon):
    assert run_json(capsys, "region", "region", PENTAGON) == {"region": "2-4-3"}
    assert run_json(capsys, "region", "region", "--hexagon", TREFOIL) == {"region": "2-4-3"}
    run_json(capsys, "region", "region", "--heptagon", heptagon)
    code, _, err = run(capsys, "region", "--heptagon", TREFOIL)
    assert code == 2 and "expected 7" in err


def test_act(capsys, tmp_path):
    code, out, _ = run(capsys, "act", TREFOIL, "--op", "mirror")
    assert code == 0
    jsonschema.validate(json.loads(out), schema("polygon"))
    mirrored = parse_polygon(out)
    assert np.allclose(mirrored[:, 2], -parse_polygon(open(TREFOIL).read())[:, 2])
    target = tmp_path / "m.json"
    assert run(capsys, "act", TREFOIL, "--op", "mirror", "-o", str(target))[0] == 0
    assert run_json(capsys, "classify_hex", "classify-hex", str(target))["class"] == "left-trefoil"
    assert run(capsys, "act", TREFOIL, "--op", "twist")[0] == 2
    assert run(capsys, "act", TREFOIL, "--op", "rotate:9")[0] == 1


def test_project(capsys):
    data = run_json(capsys, "diagram", "project", TREFOIL)
    assert data["gauss"] == "-1 2 -3 1 -2 3"
    assert data["pd"] == "PD[X[6,4,1,3], X[4,2,5,1], X[2,6,3,5]]"
    assert data["crossings"] <= data["bound"]
    data = run_json(capsys, "diagram", "project", TREFOIL, "--method", "orthogonal")
    assert data["method"] == "orthogonal"


def test_identify(capsys, tmp_path):
    data = run_json(capsys, "identification", "identify", TREFOIL)
    assert data["type"] == "3_1" and data["display"] == "right-trefoil"
    pd = tmp_path / "t.pd"
    pd.write_text("PD[X[6,4,1,3], X[4,2,5,1], X[2,6,3,5]]\n")
    data = run_json(capsys, "identification", "identify", str(pd))
    assert data["type"] == "3_1" and data["source"] == "pd" and data["jones_terms"] == {"1": 1, "3": 1, "4": -1}
    code, out, _ = run(capsys, "identify", str(pd), "--max-crossings", "2")
    assert code == 1
    err = json.loads(out)
    jsonschema.validate(err, schema("error"))
    assert err["error"] == "TooManyCrossings"
    pd.write_text("PD[X[1,2,3,4]]")
    assert run(capsys, "identify", str(pd))[0] == 2


def test_census(capsys, tmp_path):
    out = tmp_path / "c.json"
    data = run_json(capsys, "census_report", "census", "--n", "6", "--samples", "40", "--seed", "1", "--out", str(out))
    assert sum(data["histogram"].values()) == 40
    assert json.loads(out.read_text()) == data
    assert run(capsys, "census", "--n", "2")[0] == 2


def test_path_check(capsys, tmp_path, trefoil, unknot):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"frames": [trefoil.tolist(), (trefoil + 1e-4).tolist()]}))
    data = run_json(capsys, "isotopy_path", "path-check", str(path))
    assert data["certified"] is True
    path.write_text(json.dumps([unknot.tolist(), trefoil.tolist()]))
    data = run_json(capsys, "isotopy_path", "path-check", str(path))
    assert data["certified"] is False and data["failed_step"] == 1
    path.write_text("[]")
    assert run(capsys, "path-check", str(path))[0] == 2


def test_permutahedron(capsys):
    data = run_json(capsys, "permutahedron", "permutahedron", "--format", "json")
    assert len(data["nodes"]) == 24 and len(data["edges"]) == 36
    code, out, _ = run(capsys, "permutahedron")
    assert code == 0 and out.startswith("graph permutahedron {")


def test_usage_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 0 0\n1 0 0\n")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2 and "at least 3" in err
    assert run(capsys, "check", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "classify-hex", PENTAGON)[0] == 2
    assert run(capsys, "check", TREFOIL, "--tol", "0")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_domain_error_is_json(capsys, tmp_path):
    path = tmp_path / "sing.txt"
    v = np.array([(0, 0, 0), (2, 0, 0), (2, 2, 1), (1, 0, -1), (1, 0, 1), (0, 2, 1)], float)
    path.write_text(dumps_polygon(v))
    code, out, _ = run(capsys, "classify-hex", str(path))
    assert code == 1
    data = json.loads(out)
    jsonschema.validate(data, schema("error"))
    assert data["error"] == "NotEmbedded"


def test_perturb_option(capsys):
    data = run_json(capsys, "classify_hex", "classify-hex", TREFOIL, "--perturb", "1e-6", "--seed", "3")
    assert data["class"] == "right-trefoil"


def test_module_entry_point():
    result = subprocess.run([sys.executable, "-m", "geoknot", "region", PENTAGON],
                            capture_output=True, text=True, check=False)
    assert result.returncode == 0 and json.loads(result.stdout) == {"region": "2-4-3"}
