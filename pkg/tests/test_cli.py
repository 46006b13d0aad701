import json
import subprocess
import sys

import pytest

from asmlab import cli, codec, verify
from asmlab.fpl import MINUS, enumerate_fpls, tau_plus
from asmlab.gyration import h_half

EXAMPLE_4 = [[0, 1, 0, 0], [1, -1, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]


def run(argv, stdin="", monkeypatch=None, capsys=None):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def sh(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


def test_enumerate_counts(sh):
    assert sh(["enumerate", "asm", "-n", "3", "--format", "count"])[1] == "7\n"
    assert sh(["enumerate", "linkpattern", "-n", "4", "--format", "count"])[1] == "14\n"
    for kind in ("sixvertex", "fpl", "height"):
        assert sh(["enumerate", kind, "-n", "4", "--format", "count"])[1] == "42\n"


def test_enumerate_json(sh):
    code, out, _ = sh(["enumerate", "asm", "-n", "1"])
    data = json.loads(out)
    assert code == 0 and data["schema"] == "asmlab/1"
    assert data["items"] == [{"n": 1, "rows": [[1]]}]


def test_size_cap(sh, monkeypatch):
    assert sh(["enumerate", "asm", "-n", "8", "--format", "count"])[0] == 2
    monkeypatch.setenv("ASMLAB_MAX_N", "2")
    assert sh(["enumerate", "asm", "-n", "3", "--format", "count"])[0] == 2
    assert sh(["enumerate", "asm", "-n", "3", "--format", "count", "--allow-large"])[1] == "7\n"


def test_usage_errors(sh):
    assert sh([])[0] == 2
    assert sh(["verify", "nosuch", "-n", "2"])[0] == 2
    assert sh(["enumerate", "asm"])[0] == 2


def test_convert_asm_to_height(sh):
    code, out, _ = sh(["convert", "--to", "height"], json.dumps({"kind": "asm", "n": 1, "rows": [[1]]}))
    assert code == 0 and json.loads(out)["h"] == [[0, 1], [1, 0]]


@pytest.mark.parametrize("via", ["sixvertex", "height", "fpl"])
def test_convert_roundtrip(sh, via):
    src = json.dumps({"kind": "asm", "n": 4, "rows": EXAMPLE_4})
    _, mid, _ = sh(["convert", "--to", via], src)
    code, back, _ = sh(["convert", "--to", "asm"], mid)
    assert code == 0 and json.loads(back)["rows"] == EXAMPLE_4


def test_convert_rejects_plus_boundary(sh):
    (f,) = enumerate_fpls(1, MINUS)
    g = h_half(f, 1)
    assert g.boundary_word() == tau_plus(1)
    code, _, err = sh(["convert", "--to", "asm"], codec.to_text(codec.dump(g)))
    assert code == 2 and "boundary" in err.lower()


def test_convert_rejects_invalid(sh):
    code, _, err = sh(["convert", "--to", "fpl"], json.dumps({"kind": "asm", "n": 2, "rows": [[1, 1], [0, -1]]}))
    assert code == 2 and "row 1" in err
    assert sh(["convert", "--to", "fpl"], "not json")[0] == 2


@pytest.mark.parametrize("suite,n", [("wieland", 3), ("orbit-sums", 4), ("roundtrips", 4)])
def test_verify_passes(sh, suite, n):
    code, out, _ = sh(["verify", suite, "-n", str(n)])
    assert code == 0
    assert all(r["passed"] for r in json.loads(out)["results"])


def test_verify_all_n4(sh):
    code, out, _ = sh(["verify", "all", "-n", "4", "--format", "text"])
    assert code == 0 and "FAIL" not in out


def test_verify_failure_exit_code(sh, monkeypatch):
    def broken(n):
        res = verify.SuiteResult("wieland", n)
        res.add("always wrong", False)
        return res

    monkeypatch.setitem(verify.SUITES, "wieland", broken)
    assert sh(["verify", "wieland", "-n", "2"])[0] == 1


def test_orbit_commands(sh):
    code, out, _ = sh(["orbit", "-n", "3"])
    data = json.loads(out)
    assert code == 0 and sum(o["period"] for o in data["orbits"]) == 7
    (f,) = enumerate_fpls(1, MINUS)
    code, out, _ = sh(["orbit"], codec.to_text(codec.dump(f)))
    assert code == 0


def test_psi(sh):
    data = json.loads(sh(["psi", "-n", "3"])[1])
    assert sum(r["count"] for r in data["records"]) == 7
    code, out, _ = sh(["psi", "-n", "3", "--refined", "--cycles", "black"])
    assert code == 0
    assert sh(["psi", "-n", "2", "--boundary", "x"])[0] == 2


def test_poset(sh):
    assert sh(["poset", "-n", "4", "--format", "dot"])[1].count("->") == 16
    code, out, _ = sh(["poset", "-n", "4", "--ideals"])
    assert code == 0 and "42" in out


def test_tl(sh):
    assert sh(["tl", "basis", "-n", "3"])[0] == 0
    code, out, _ = sh(["tl", "matrix", "-n", "2", "--op", "rotate"])
    assert code == 0
    assert sh(["tl", "relations", "-n", "3"])[0] == 0
    assert sh(["tl", "s-vector", "-n", "3"])[0] == 0
    assert sh(["tl", "classes", "-n", "4"])[0] == 0
    code, out, _ = sh(["tl", "apply", "--op", "matchmaker", "-j", "2"],
                      json.dumps({"kind": "linkpattern", "n": 4, "pairs": [[1, 8], [2, 5], [3, 4], [6, 7]]}))
    assert code == 0
    assert json.loads(out)["vector"] == [{"key": [[1, 8], [2, 3], [4, 5], [6, 7]], "coeff": 1}]


def test_render(sh):
    (f,) = enumerate_fpls(1, MINUS)
    code, out, _ = sh(["render"], codec.to_text(codec.dump(f)))
    assert code == 0 and out.count("#") == 2 and out.count(".") == 2
    code, out, _ = sh(["render", "--format", "svg"],
                      json.dumps({"kind": "linkpattern", "n": 2, "pairs": [[1, 2], [3, 4]]}))
    assert code == 0 and out.startswith("<svg") and out.count("<path") == 2 + 1
    code, out, _ = sh(["render", "--kind", "poset", "-n", "4", "--format", "dot"])
    assert code == 0 and out.count("->") == 16
    code, _, _ = sh(["render", "--format", "dot"], json.dumps({"kind": "asm", "n": 1, "rows": [[1]]}))
    assert code == 2


def test_in_and_out_files(sh, tmp_path):
    src = tmp_path / "a.json"
    src.write_text(json.dumps({"kind": "asm", "n": 1, "rows": [[1]]}))
    dst = tmp_path / "h.json"
    assert sh(["convert", "--to", "height", "--in", str(src), "--out", str(dst)]) == (0, "", "")
    assert json.loads(dst.read_text())["h"] == [[0, 1], [1, 0]]


@pytest.mark.parametrize(
    "argv",
    [
        ["enumerate", "fpl", "-n", "3"],
        ["verify", "sym-pi", "-n", "3"],
        ["psi", "-n", "4", "--refined"],
    ],
)
def test_repeat_runs_are_byte_identical(argv):
    cmd = [sys.executable, "-m", "asmlab", *argv]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
