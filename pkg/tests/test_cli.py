import json
import subprocess
import sys
from pathlib import Path

import pytest

from courantkit.algebra import Q
from courantkit.cli import parse, parse_expression
from courantkit.cli.main import main
from courantkit.courant import GeneralizedSection
from courantkit.errors import ParseError
from courantkit.exterior import Chart

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = sorted((ROOT / "fixtures").glob("*.cdoc"))
GOLDEN = ROOT / "fixtures" / "golden"
C = Chart.of("x", "y", "z")
x, y, z = (C.coord(c) for c in "xyz")
dx, dy, dz = (C.dx(c) for c in "xyz")


def test_expression_examples():
    assert parse_expression("dx^dx", C) == C.zero_form(2)
    assert parse_expression("x^2*dy - 1/2*dz", C) == x * x * dy - dz.scale(Q("1/2"))
    assert parse_expression("y*@x - x*@y", C) == C.partial("x") * y - C.partial("y") * x
    assert parse_expression("(@x, y*dz)", C) == GeneralizedSection(C.partial("x"), y * dz)
    assert parse_expression("(x + y)^2", C) == x * x + (x * y).scale(2) + y * y
    assert parse_expression("a ^ dz", C, {"a": x * dy}) == x * (dy ^ dz)


@pytest.mark.parametrize("text, column", [("2x", 2), ("x + q", 5), ("dx + x", 4), ("x*/y", 3)])
def test_expression_errors_carry_positions(text, column):
    with pytest.raises(ParseError) as err:
        parse_expression(text, C)
    assert err.value.column == column


def test_document_errors_carry_lines():
    text = "chart R3 (x, y, z)\nform a = x*dy\nhamiltonian b\n"
    with pytest.raises(ParseError) as err:
        parse(text)
    assert err.value.line == 3
    with pytest.raises(ParseError) as err:
        parse("chart R2 (x, y, z)\n")
    assert err.value.line == 1
    with pytest.raises(ParseError):
        parse("chart R3 (x, y, z)\nfunction f = dx\n")
    with pytest.raises(ParseError):
        parse("chart R3 (x, y, z)\nform a = x*dy\ncurvature a a a\n")


@pytest.mark.parametrize("path", FIXTURES, ids=lambda p: p.name)
def test_print_round_trip(path):
    doc = parse(path.read_text())
    printed = str(doc)
    again = parse(printed)
    assert again.objects == doc.objects
    assert again.points == doc.points
    assert again.commands == doc.commands
    assert again.structure == doc.structure
    assert again.covers == doc.covers
    assert str(again) == printed


def _run(*args):
    return subprocess.run([sys.executable, "-m", "courantkit", *map(str, args)], capture_output=True, text=True,
                          cwd=ROOT)


@pytest.mark.parametrize("path", FIXTURES, ids=lambda p: p.name)
def test_golden_machine_output(path):
    codes = json.loads((GOLDEN / "exit_codes.json").read_text())
    proc = _run("run", path, "--machine", "--seed", "0")
    assert proc.stdout == (GOLDEN / f"{path.stem}.tsv").read_text()
    assert proc.returncode == codes[path.name]
    for line in proc.stdout.splitlines():
        assert len(line.split("\t")) == 4


def test_parallel_runs_match():
    path = ROOT / "fixtures" / "r3_standard.cdoc"
    assert _run("run", path, "--machine", "--jobs", "3").stdout == _run("run", path, "--machine").stdout


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.cdoc"
    bad.write_text("chart R3 (x, y, z)\nform a = 2x\n")
    with pytest.raises(SystemExit) as err:
        main(["run", str(bad)])
    assert err.value.code == 2
    assert f"{bad}:2:" in capsys.readouterr().err
    assert main(["run", str(ROOT / "fixtures" / "symplectic_r2.cdoc")]) == 0
    assert main(["run", str(ROOT / "fixtures" / "not_hamiltonian.cdoc"), "--machine"]) == 1


def test_human_output_shows_values(capsys):
    assert main(["run", str(ROOT / "fixtures" / "r3_standard.cdoc")]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# seed 0")
    assert "PASS" in out and "FAIL" not in out


def test_suite_command(capsys):
    assert main(["suite", "exterior", "--count", "8", "--machine"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines and all(line.startswith("PASS\t") for line in lines)
