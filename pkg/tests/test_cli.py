import subprocess
import sys

import pytest

from polysum import cli, cube
from polysum.cdd import parse_file

from conftest import OCTAGON


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_sum_check_octagon(capsys, data_dir, tmp_path):
    ine, ext = tmp_path / "c.ine", tmp_path / "c.ext"
    code, _, err = run(capsys, "sum", data_dir / "square.ine", data_dir / "diamond.ine",
                       "--method", "dual-opt", "--check", "-o", ine, "--ext", ext)
    assert code == 0 and "check: ok" in err
    assert set(parse_file(ext.read_text()).points()) == set(OCTAGON)
    assert len(parse_file(ine.read_text()).rows) == 8


@pytest.mark.parametrize("method", cli.METHODS)
def test_sum_methods_agree(capsys, data_dir, method):
    code, out, _ = run(capsys, "sum", data_dir / "square.ine", data_dir / "diamond.ine", "--method", method)
    assert code == 0
    h, v = out.split("end\n")[:2]
    assert set(parse_file(v + "end\n").points()) == set(OCTAGON)


def test_sum_primal_cube(capsys, data_dir, tmp_path):
    ext = tmp_path / "c.ext"
    assert run(capsys, "sum", data_dir / "cube.ine", data_dir / "cube.ine", "--method", "primal", "--ext", ext)[0] == 0
    assert parse_file(ext.read_text()).to_polytope() == cube(3, 0, 2)


def test_sum_segments(capsys, data_dir):
    code, _, err = run(capsys, "sum", data_dir / "seg.ext", data_dir / "seg2.ext", "--method", "dual")
    assert code == 2 and "NotFullDimensional" in err
    code, out, _ = run(capsys, "sum", data_dir / "seg.ext", data_dir / "seg2.ext", "--method", "oracle")
    assert code == 0
    assert parse_file(out.split("end\n")[1] + "end\n").to_polytope() == cube(2)


def test_sum_witnesses(capsys, data_dir, tmp_path):
    ext = tmp_path / "c.ext"
    run(capsys, "sum", data_dir / "square.ine", data_dir / "diamond.ine", "--witnesses", "--ext", ext)
    lines = [l for l in ext.read_text().splitlines() if l.startswith("* vertex")]
    assert len(lines) == 8
    assert "* vertex 0 (-1, 0) = A[0] (0, 0) + B[0] (-1, 0)" in lines


def test_sum_check_mismatch(capsys, data_dir, monkeypatch):
    real = cli._run_method

    def wrong(method, A, B):
        return real(method, A, A)

    monkeypatch.setattr(cli, "_run_method", wrong)
    code, _, err = run(capsys, "sum", data_dir / "square.ine", data_dir / "diamond.ine", "--check")
    assert code == 3 and "MISMATCH" in err


def test_input_errors(capsys, data_dir, tmp_path):
    bad = tmp_path / "bad.ine"
    bad.write_text("H-representation\nbegin\n1 3 integer\n0 1 x\nend\n")
    code, _, err = run(capsys, "sum", bad, data_dir / "square.ine")
    assert code == 1 and "line 4, column 5" in err
    assert run(capsys, "convert", tmp_path / "missing.ine", "--to", "V")[0] == 1
    code, _, err = run(capsys, "sum", data_dir / "square.ine", data_dir / "cube.ine")
    assert code == 2 and "DimensionMismatch" in err


def test_convert_cube6(capsys, data_dir):
    code, out, _ = run(capsys, "convert", data_dir / "cube6.ine", "--to", "V")
    assert code == 0
    assert len(parse_file(out).rows) == 64


def test_convert_simplex_to_h(capsys, data_dir, tmp_path):
    out = tmp_path / "s.ine"
    assert run(capsys, "convert", data_dir / "simplex3.ext", "--to", "H", "-o", out)[0] == 0
    assert len(parse_file(out.read_text()).rows) == 4


def test_validate(capsys, data_dir, tmp_path):
    code, out, _ = run(capsys, "validate", data_dir / "square.ine")
    assert code == 0 and out.rstrip().endswith("valid")
    redundant = tmp_path / "r.ine"
    redundant.write_text((data_dir / "square.ine").read_text().replace(" 4 3", " 5 3").replace("end", " 2 -1 0\nend"))
    code, out, _ = run(capsys, "validate", redundant)
    assert code == 1 and "redundant facet" in out
    inner = tmp_path / "p.ext"
    inner.write_text("V-representation\nbegin\n5 3 rational\n1 0 0\n1 1 0\n1 0 1\n1 1 1\n1 1/2 1/2\nend\n")
    code, out, _ = run(capsys, "validate", inner)
    assert code == 1 and "not extreme" in out
    unb = tmp_path / "u.ine"
    unb.write_text("H-representation\nbegin\n2 3 integer\n0 1 0\n0 0 1\nend\n")
    assert run(capsys, "validate", unb)[0] == 1


def test_cap(capsys, data_dir):
    code, out, _ = run(capsys, "cap", data_dir / "square.ine", data_dir / "diamond.ine", "--vertex", 3)
    assert code == 0
    assert "anchor: A[3] (1, 1)" in out
    assert "(1, 0)" in out and "(0, 1)" in out and "members: 2 of 4" in out
    assert "connected: yes" in out
    assert run(capsys, "cap", data_dir / "square.ine", data_dir / "diamond.ine", "--vertex", 9)[0] == 1


def test_bench(capsys, data_dir):
    code, out, err = run(capsys, "bench", data_dir / "square.ine", data_dir / "diamond.ine")
    assert code == 0
    counts = dict(l.rsplit(": ", 1) for l in out.splitlines() if l.startswith("cone intersections"))
    assert int(counts["cone intersections dual"]) == 16
    assert int(counts["cone intersections dual-opt"]) <= 16
    assert "time dual-opt" in err


@pytest.mark.parametrize("argv", [
    ["sum", "square.ine", "diamond.ine", "--method", "primal", "--witnesses"],
    ["convert", "cube.ine", "--to", "V"],
    ["bench", "square.ine", "diamond.ine"],
])
def test_deterministic_output(data_dir, argv):
    cmd = [sys.executable, "-m", "polysum.cli"] + [str(data_dir / a) if a.endswith((".ine", ".ext")) else a for a in argv]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_seed_env(capsys, data_dir, monkeypatch):
    monkeypatch.setenv("POLYSUM_SEED", "nope")
    assert run(capsys, "sum", data_dir / "square.ine", data_dir / "diamond.ine", "--method", "primal")[0] == 1
    monkeypatch.setenv("POLYSUM_SEED", "42")
    code, out, _ = run(capsys, "sum", data_dir / "square.ine", data_dir / "diamond.ine", "--method", "primal")
    assert code == 0 and len(parse_file(out.split("end\n")[1] + "end\n").rows) == 8


def test_corpus_check_never_fails(capsys, data_dir):
    pairs = [("square.ine", "diamond.ine"), ("square.ext", "triangle.ext"), ("cube.ine", "simplex3.ext")]
    for a, b in pairs:
        for method in ("dual", "dual-opt", "primal"):
            assert run(capsys, "sum", data_dir / a, data_dir / b, "--method", method, "--check")[0] == 0
