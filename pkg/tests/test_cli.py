import subprocess
import sys

import pytest

from gelfdual.catalog import parse_recipe, recipe_triple
from gelfdual.cli import _unescape, main
from gelfdual.spectral import parse_triple


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_analyze_symmetric(capsys):
    code, out = run(capsys, "analyze", "--recipe", "symmetric 7")
    assert code == 0
    assert "[ 1   6 ]\n  [ 6  -6 ]" in out


def test_analyze_wreath(capsys):
    code, out = run(capsys, "analyze", "--recipe", "wreath 4 2")
    assert "[ 1   1   6 ]" in out and "[ 3   3  -6 ]" in out and "[ 4  -4   0 ]" in out


def test_analyze_trivial(capsys):
    code, out = run(capsys, "analyze", "--recipe", "cyclic 1")
    assert code == 0 and "[ 1 ]" in out


def test_analyze_approx_is_labeled(capsys):
    _, out = run(capsys, "analyze", "--recipe", "cyclic 3", "--approx")
    assert "approximate" in out and "-0.500000+0.866025i" in out


def test_analyze_pair_file(capsys, tmp_path):
    f = tmp_path / "s4.pair"
    f.write_text("degree 4\n(1 2)\n(1 2 3 4)\n")
    code, out = run(capsys, "analyze", "--pair", str(f))
    assert code == 0 and "name: L_4" in out


def test_machine_round_trip(capsys):
    for recipe in ["semidirect 7 ; 2", "wreath 2 3", "cyclic 5"]:
        _, out = run(capsys, "analyze", "--machine", "--recipe", recipe)
        rec = dict(line.split("=", 1) for line in out.splitlines())
        assert parse_triple(_unescape(rec["triple"])) == recipe_triple(parse_recipe(recipe))


def test_not_gelfand_exit(capsys):
    code, out = run(capsys, "analyze", "--recipe", "file transitive/s3_regular.pair")
    assert code == 2 and "gelfand: no" in out


def test_usage_errors(capsys):
    assert main(["analyze", "--recipe", "bogus 3"]) == 1
    assert main(["analyze"]) == 1
    assert main(["frobnicate"]) == 1
    assert main(["table", "--max-degree", "99"]) == 1
    capsys.readouterr()


def test_check(capsys):
    code, out = run(capsys, "check", "--recipe", "young 2 5")
    assert code == 2 and "ratio_witness" in out
    code, _ = run(capsys, "check", "--recipe", "diagonal sym 3")
    assert code == 0


def test_dual_search(capsys):
    code, out = run(capsys, "dual-search", "--recipe", "diagonal sym 3")
    assert code == 0 and "found: file transitive/cube_faces.pair" in out
    code, out = run(capsys, "dual-search", "--recipe", "young 2 5")
    assert code == 2 and "integrality_prefilter: fail" in out


def test_table(capsys):
    code, out = run(capsys, "table", "--max-degree", "2")
    assert code == 0
    body = [l for l in out.splitlines() if not l.startswith("#")]
    assert body == ["|X| = 2", "  [1] L_2^1  {1}, {1}"]


def test_equiv(capsys):
    code, out = run(capsys, "equiv", "--recipe", "alt 7", "--recipe", "symmetric 7")
    assert code == 0
    assert "alt 7 -> symmetric 7 : " in out
    assert "terminal symmetric 7" in out
    code, out = run(capsys, "equiv", "--recipe", "alt 7", "--recipe", "cyclic 7")
    assert code == 2


def test_validate_catalog_file(capsys, tmp_path):
    cat = tmp_path / "c.txt"
    cat.write_text("symmetric 4\nwreath 2 2\ncyclic 5\n")
    code, out = run(capsys, "validate", "--catalog", str(cat))
    assert code == 0 and "failures: 0" in out


def test_validate_empty(capsys, tmp_path):
    cat = tmp_path / "empty.txt"
    cat.write_text("# nothing\n")
    code, out = run(capsys, "validate", "--catalog", str(cat))
    assert code == 0 and "0 checks" in out


def test_validate_corrupted_triple(capsys, tmp_path):
    t = recipe_triple(parse_recipe("wreath 2 3"))
    lines = t.serialize().splitlines()
    row = lines[4].split(" | ")
    row[1] = "1; 4"            # was 2
    row[2] = "1; -5"           # keep the row sum
    lines[4] = " | ".join(row)
    f = tmp_path / "bad.triple"
    f.write_text("\n".join(lines) + "\n")
    code, out = run(capsys, "validate", "--no-catalog", str(f))
    assert code == 2
    assert "orthogonality" in out and "reproduce:" in out


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "gelfdual.cli", "table", "--max-degree", "5", "--machine"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert a == b and a
