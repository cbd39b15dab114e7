"""Command-line interface: parsing, rendering, reports, determinism."""

import json

import pytest

from zzeval.cli import main, parse_hecke, parse_scalar, render_hecke
from zzeval.hecke import HeckeElement
from zzeval.scalars import LaurentPoly

Q = LaurentPoly.q()


def test_parse_scalar():
    assert parse_scalar("q") == Q
    assert parse_scalar("q^2") == Q ** 2
    assert parse_scalar("-q") == -Q
    assert parse_scalar("(-q)^4") == Q ** 4
    assert parse_scalar("(-q)^3") == -(Q ** 3)
    assert parse_scalar("q^-1") == Q ** (-1)
    assert parse_scalar("1 - q^2") == LaurentPoly.one() - Q ** 2
    assert parse_scalar("2*q + 3") == Q.scale(2) + LaurentPoly.from_int(3)
    with pytest.raises(ValueError):
        parse_scalar("q + +")
    with pytest.raises(ValueError):
        parse_scalar("x")


def test_parse_hecke():
    d = 3
    assert parse_hecke(d, "T1*T1") == HeckeElement.T(d, 1) ** 2
    assert parse_hecke(d, "rho") == HeckeElement.rho_elt(d)
    assert parse_hecke(d, "rho^-2") == HeckeElement.rho_elt(d, -2)
    assert parse_hecke(d, "T1^{-1}") == HeckeElement.T_inv(d, 1)
    assert parse_hecke(d, "b0") == HeckeElement.b(d, 0)
    assert parse_hecke(d, "(q) * T2") == HeckeElement.T(d, 2).scale(Q)
    with pytest.raises(ValueError):
        parse_hecke(d, "T7")
    with pytest.raises(ValueError):
        parse_hecke(d, "T1 **")


def test_render_hecke_quadratic_relation():
    x = HeckeElement.T(3, 1) * HeckeElement.T(3, 1)
    assert render_hecke(x) == "1 + (q^-1 - q) T_{s1}"


def test_hecke_mul_command(capsys):
    assert main(["hecke", "mul", "--d", "3", "T1*T1"]) == 0
    assert capsys.readouterr().out.strip() == "1 + (q^-1 - q) T_{s1}"


def test_eval_command_parameter_independence(capsys):
    assert main(["hecke", "eval", "--d", "3", "--a", "1", "T0"]) == 0
    out1 = capsys.readouterr().out
    assert main(["hecke", "eval", "--d", "3", "--a", "q^2", "T0"]) == 0
    assert capsys.readouterr().out == out1


def test_cell_command(capsys):
    assert main(["cell", "gram", "--d", "4", "--z", "(-q)^4"]) == 0
    out = capsys.readouterr().out
    assert "gram rank: 3" in out
    assert "radical dimension: 1" in out


def test_verify_exit_codes(tmp_path):
    path = tmp_path / "report.json"
    assert main(["verify", "cell-radical", "--d", "3", "--json", str(path)]) == 0
    report = json.loads(path.read_text())
    assert report["schema"] == 1
    assert report["pass"] is True
    ids = [c["id"] for c in report["checks"]]
    assert ids == sorted(ids)
    # the affine relation suite contains genuine failures -> exit 1
    assert main(["verify", "relations-Mhat", "--d", "3", "--json", str(path)]) == 1
    report = json.loads(path.read_text())
    assert report["pass"] is False


def test_verify_guards(tmp_path):
    assert main(["verify", "no-such-suite", "--d", "3"]) == 2
    assert main(["verify", "cell-radical", "--d", "6"]) == 2
    path = tmp_path / "report.json"
    assert main(["verify", "cell-radical", "--d", "6", "--allow-large",
                 "--json", str(path)]) == 0


@pytest.mark.parametrize("suite", ["cell-radical", "prop-invariant", "decat"])
def test_reports_are_byte_identical(tmp_path, suite):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", suite, "--d", "3", "--seed", "11"]
    assert main(args + ["--json", str(p1)]) == 0
    assert main(args + ["--json", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_complex_command(capsys):
    assert main(["complex", "apply", "--d", "3", "--vertex", "1",
                 "--braid", "1 -1"]) == 0
    out = capsys.readouterr().out
    assert "P(1)<0>" in out
