import json
import subprocess
import sys

import pytest

from kehom.cli import main
from kehom.homology import HomologyDecomposition, h_route_g
from kehom.weights import WeightLabel


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_homology_all_routes_json(capsys):
    code, out, _ = run(capsys, "homology", "--family", "c", "--lam", "1", "--d", "1", "--k", "1",
                       "--route", "all", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "ke/1" and data["agree"] is True
    decs = {r: HomologyDecomposition.from_json(v) for r, v in data["routes"].items()}
    assert set(decs) == {"g", "relabel", "bar"}
    assert decs["g"] == h_route_g(WeightLabel.make("c", (1,), 1), 1)
    assert decs["g"].same_as(decs["relabel"]) and decs["g"].same_as(decs["bar"])
    (s,) = data["routes"]["g"]["summands"]
    assert s["mu"] == "1,1,1" and s["weight"]["theta"] == "-2"


def test_homology_enright(capsys):
    code, out, _ = run(capsys, "homology", "--family", "d", "--lam", "", "--d", "5/2", "--k", "0",
                       "--route", "enright", "--n", "3", "--format", "json")
    assert code == 0
    (s,) = json.loads(out)["routes"]["enright"]["summands"]
    assert s["weight"]["eps"]["coeffs"] == {"1": "5/4", "2": "5/4", "3": "5/4"}


def test_homology_family_a_text(capsys):
    code, out, _ = run(capsys, "homology", "--family", "a", "--lam", "|", "--d", "1", "--k", "1")
    assert code == 0
    assert "mu=1,1|1,1" in out and "routes agree: True" in out


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate-weyl", "--family", "a", "--k", "3", "--format", "json")
    assert code == 0 and len(json.loads(out)["elements"]) == 3
    code, out, _ = run(capsys, "enumerate-weyl", "--family", "c", "--k", "1")
    assert "c:1->-1" in out


def test_zeta(capsys):
    code, out, _ = run(capsys, "zeta", "--family", "c", "--lam", "2,1", "--d", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["zeta"]["head"] == ["-1", "-3"] and data["zbar"]["head"] == ["4", "2"]
    assert data["J"] == "N \\ {1,2,3,5,7}" and data["J0"] == "N \\ {1,2,5,7}"


def test_truncate(capsys):
    code, out, _ = run(capsys, "truncate", "--family", "c", "--lam", "1", "--d", "1", "--n", "2", "--k", "1",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["summands"] == [{"mu": "1,1,1", "survives": False, "gamma": None}]
    assert data["gamma"]["eps"]["coeffs"] == {"1": "2", "2": "1"}


@pytest.mark.parametrize("argv,field", [
    (["homology", "--family", "x", "--d", "1", "--k", "0"], "--family"),
    (["homology", "--family", "c", "--lam", "1,a", "--d", "1", "--k", "0"], "--lam"),
    (["homology", "--family", "c", "--lam", "1", "--d", "one", "--k", "0"], "--d"),
    (["homology", "--family", "c", "--lam", "1,1", "--d", "1", "--k", "0"], "--lam/--d"),
    (["homology", "--family", "c", "--lam", "1", "--d", "1", "--k", "0", "--route", "enright"], "--n"),
    (["enumerate-weyl", "--family", "c", "--k", "-1"], "--k"),
])
def test_input_errors(capsys, argv, field):
    code, _, err = run(capsys, *argv)
    assert code == 2 and field in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["homology", "--family", "c"])
    assert exc.value.code == 2


def test_verify_quick_with_env(capsys, monkeypatch):
    monkeypatch.setenv("KE_SWEEP_BOUND", "1")
    code, out, _ = run(capsys, "verify", "--quick", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["passed"] is True
    assert [c["number"] for c in data["criteria"]] == list(range(1, 9))


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kehom", "enumerate-weyl", "--family", "d", "--k", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "1 element(s)" in proc.stdout
