import io
import json
import subprocess
import sys

import pytest

from zelisko import cli, group, linsolve
from zelisko.matrix import MatrixRm, build_phi, smith_normal_form
from zelisko.residue import Modulus, associates


def run(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--format", "json")
    return code, (json.loads(out) if out.strip() else None), err


def test_solve_example_one():
    code, obj, _ = run_json("solve", "33", "30", "--mod", "36")
    assert code == 0
    z = Modulus(36)
    assert associates(z(obj["x0"]), z(2))
    assert obj["solutions"] == [2, 14, 26]
    assert obj["ann_gen"] == 12


def test_solve_unsolvable():
    code, obj, _ = run_json("solve", "4", "2", "--mod", "8")
    assert code == 1 and obj["solvable"] is False


def test_solve_large_ring_omits_listing():
    code, obj, _ = run_json("solve", "3", "6", "--mod", "1000003", "--bound", "100")
    assert code == 0 and obj["solutions"] is None and obj["x0"] == 2


def test_solve_polynomial():
    code, obj, _ = run_json("solve", "[0,1]", "[0,0,1]", "--mod", "[0,1,0,0,1]", "--poly-p", "2")
    assert code == 0
    assert obj["p"] == 2 and len(obj["solutions"]) == 2
    assert [0, 1] in obj["solutions"]


def test_ann_example_two():
    code, obj, _ = run_json("ann", "8", "--mod", "144")
    assert code == 0
    assert obj["generator"] == 18 and obj["count"] == 8
    assert obj["elements"] == list(range(0, 144, 18))


def test_decompose():
    code, obj, _ = run_json("decompose", "30", "--mod", "36")
    assert (code, obj["mu"], obj["e"]) == (0, 6, 5)


def test_phi_check():
    code, obj, _ = run_json("phi-check", "[1,2,4,0]", "--mod", "8")
    assert code == 0
    assert (obj["case"], obj["t"], obj["k"], obj["adj_quot"]) == ("i", 2, 3, [2])
    code, _, err = run_json("phi-check", "[2,4,6]", "--mod", "8")
    assert code == 2 and "error" in err


def test_member_yes_no():
    assert run("member", "[[1,0],[2,1]]", "[2,4]", "--mod", "8")[0] == 0
    code, obj, _ = run_json("member", "[[1,0],[1,1]]", "[2,4]", "--mod", "8")
    assert code == 1
    assert obj["violation"]["entry"] == [1, 0] and obj["violation"]["block"] == "H_22"
    code, obj, _ = run_json("member", "[[2,0],[0,1]]", "[2,4]", "--mod", "8")
    assert code == 1 and "det" in obj["violation"]["reason"]


@pytest.mark.parametrize("diag", ["[1,0]", "[2,2]", "[0,0]", "[1,1]"])
def test_member_identity(diag):
    assert run("member", "[[1,0],[0,1]]", diag, "--mod", "8")[0] == 0


def test_witness_round_trip(tmp_path):
    code, obj, _ = run_json("witness", "[[1,0],[2,1]]", '{"mod":8,"diag":[2,4]}')
    assert code == 0
    assert obj["S"] == {"mod": 8, "n": 2, "rows": [[1, 0], [1, 1]]}
    assert obj["HPhi_eq_PhiS"] and obj["det_equal"]
    assert MatrixRm.from_json(obj["S"]).to_json() == obj["S"]
    path = tmp_path / "S.json"
    path.write_text(json.dumps(obj["S"]))
    # S is a unit but fails the H_22 divisibility, so it is not a member itself
    assert run("member", str(path), "[2,4]", "--mod", "8")[0] == 1


def test_witness_violation():
    code, obj, _ = run_json("witness", "[[1,0],[1,1]]", "[1,0]", "--mod", "8")
    assert code == 1
    assert obj["violation"]["block"] == "H_31"


def test_sample_deterministic_and_round_trip(tmp_path):
    args = ("sample", "[1,2,4,0]", "--mod", "8", "--seed", "7", "--format", "json")
    a, b = run(*args), run(*args)
    assert a == b and a[0] == 0
    obj = json.loads(a[1])
    assert obj["HPhi_eq_PhiS"] and obj["det_equal"]
    h_path = tmp_path / "H.json"
    h_path.write_text(json.dumps(obj["H"]))
    phi_path = tmp_path / "phi.json"
    phi_path.write_text(json.dumps({"mod": 8, "diag": [1, 2, 4, 0]}))
    assert run("member", str(h_path), str(phi_path))[0] == 0
    code, w, _ = run_json("witness", str(h_path), str(phi_path))
    # witnesses are not unique, so only check the constructed one is valid
    assert code == 0 and w["HPhi_eq_PhiS"] and w["det_equal"]


def test_sample_polynomial():
    code, obj, _ = run_json("sample", '{"mod":[0,1,0,0,1],"diag":[1,[0,1],[0,1,1],0],"p":2}')
    assert code == 0 and obj["H"]["p"] == 2
    assert obj["HPhi_eq_PhiS"] and obj["det_equal"]


def test_stdin_input(monkeypatch):
    code, out, _ = run("phi-check", "-", "--format", "json", stdin='{"mod":8,"diag":[2,4]}', monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["case"] == "iii"


def test_enumerate_matches_oracle():
    code, out, _ = run("enumerate", "[2,2]", "--mod", "4", "--format", "json")
    assert code == 0
    lines = out.strip().split("\n")
    *rows, tail = [json.loads(line) for line in lines]
    z4 = Modulus(4)
    phi = build_phi(2, [z4(2), z4(2)])
    codes = [group.encode(MatrixRm.from_json(r)) for r in rows]
    assert tail == {"count": 96}
    assert codes == [int(c) for c in group.member_codes(phi)]


def test_enumerate_refuses_past_bound():
    code, out, err = run("enumerate", "[1,2,4]", "--mod", "8")
    assert code == 3 and out == "" and "exceed" in err


def test_snf():
    code, obj, _ = run_json("snf", "[[4,2],[2,4]]")
    assert code == 0 and obj["diag"] == [2, 6]
    u, d, v = smith_normal_form([[4, 2], [2, 4]])
    assert (obj["U"], obj["D"], obj["V"]) == (u, d, v)
    code, obj, _ = run_json("snf", '{"rows":[[[1,1],0],[0,[1,2,1]]],"p":3}')
    assert code == 0 and obj["diag"] == [[1, 1], [1, 2, 1]]


@pytest.mark.parametrize(
    "argv",
    [
        ("solve", "1", "2"),  # no --mod
        ("solve", "x", "2", "--mod", "8"),
        ("solve", "1", "1", "--mod", "1"),
        ("solve", "1", "1", "--mod", "[1,1]", "--poly-p", "4"),
        ("member", "{not json", "[1,0]", "--mod", "8"),
        ("member", "[[1,0],[0,1]]", "[1,0,0]", "--mod", "8"),
        ("member", "[[1,0],[0,1]]", '{"mod":8,"diag":[1,0],"p":6}'),
        ("snf", "[[1,2]]"),
        ("sample", "[1,0]", "--mod", "8", "--bound", "0"),
        ("frobnicate",),
    ],
)
def test_malformed_input_exit_code(argv):
    assert run(*argv)[0] == 2


def test_human_format():
    code, out, _ = run("member", "[[1,0],[2,1]]", "[2,4]", "--mod", "8")
    assert code == 0 and "member: True" in out


def test_verify_quick():
    code, obj, _ = run_json("verify", "--level", "quick")
    assert code == 0 and obj["passed"]
    names = [c["name"] for c in obj["checks"]]
    assert "example 1 (Z_36)" in names and "lemmas 3-4 n=5" in names


def test_verify_detects_tampering(monkeypatch):
    real = linsolve.generating_solution

    def off_by_one(a, b):
        return real(a, b) + 1

    monkeypatch.setattr(linsolve, "generating_solution", off_by_one)
    code, out, _ = run("verify", "--level", "quick")
    assert code == 1
    assert "FAIL  example 1" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zelisko", "decompose", "33", "--mod", "36", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"c": 33, "e": 11, "mod": 36, "mu": 3}
