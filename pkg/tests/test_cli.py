import json
import subprocess
import sys

import pytest

from jonesq.catalog import builtin, builtin_names
from jonesq.cli import CliError, main, parse_orientation
from jonesq.report import build_report
from jonesq.tangle import Orientation


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


@pytest.fixture
def files(tmp_path):
    (tmp_path / "unknot.tg").write_text("u\nn\n")
    (tmp_path / "twisted_unknot.tg").write_text("# one positive twist\nu\nt+ |\nn\n")
    (tmp_path / "hopf.tg").write_text("u u\n| x+ |\n| x+ |\nn n\n")
    (tmp_path / "bad_token.tg").write_text("u\n| q |\nn\n")
    (tmp_path / "bad_width.tg").write_text("u\nu u u\nn n\n")
    (tmp_path / "open.tg").write_text("u\n")
    return tmp_path


def test_bracket_unknot(capsys, files):
    assert run(capsys, "bracket", str(files / "unknot.tg")) == (0, "-q - q^-1", "")


def test_jones_twisted_unknot(capsys, files):
    assert run(capsys, "jones", str(files / "twisted_unknot.tg"))[:2] == (0, "-q - q^-1")


def test_jones_needs_orientation_for_links(capsys, files):
    code, _, err = run(capsys, "jones", str(files / "hopf.tg"))
    assert code == 2 and "orientation required" in err
    code, out, _ = run(capsys, "jones", str(files / "hopf.tg"), "--orient", "c1=+", "--orient", "c2=-")
    assert code == 0 and out == "1 + q^-2 + q^-4 + q^-6"


def test_orientation_parsing():
    assert parse_orientation(["c1=+,c2=-"], 2, True) == Orientation((1, -1))
    assert parse_orientation(None, 1, True) == Orientation((1,))
    assert parse_orientation(None, 3, False) == Orientation((1, 1, 1))
    with pytest.raises(CliError, match="missing"):
        parse_orientation(["c1=+"], 2, True)
    with pytest.raises(CliError, match="c3"):
        parse_orientation(["c3=+"], 2, True)
    with pytest.raises(CliError, match="bad orientation"):
        parse_orientation(["c1=up"], 1, True)


def test_qeval_modes(capsys, files):
    hopf = str(files / "hopf.tg")
    k = "q^3 + q + q^-1 + q^-3"
    assert run(capsys, "qeval", hopf)[:2] == (0, k)
    assert run(capsys, "qeval", hopf, "--directed")[:2] == (0, k)
    code, _, err = run(capsys, "qeval", hopf, "--directed", "--ribbon", "s")
    assert code == 2 and "orientation" in err
    # w = -2, #L = 2: sign +1
    assert run(capsys, "qeval", hopf, "--directed", "--ribbon", "s", "--orient", "c1=+,c2=+")[:2] == (0, k)
    code, _, err = run(capsys, "qeval", hopf, "--undirected", "--ribbon", "s")
    assert code == 2
    assert run(capsys, "qeval", "builtin:unknot", "--directed", "--ribbon", "s")[:2] == (0, "q + q^-1")


def test_writhe_and_components(capsys):
    assert run(capsys, "writhe", "builtin:trefoil_r")[:2] == (0, "3")
    assert run(capsys, "writhe", "builtin:hopf+", "--orient", "c1=+,c2=-")[:2] == (0, "2")
    code, out, _ = run(capsys, "components", "builtin:hopf+", "--json")
    assert code == 0 and json.loads(out)["components"] == 2


def test_parse_errors_have_line_and_column(capsys, files):
    code, _, err = run(capsys, "bracket", str(files / "bad_token.tg"))
    assert code == 2 and "line 2, column 3" in err
    code, _, err = run(capsys, "bracket", str(files / "bad_width.tg"))
    assert code == 2 and "line 2" in err and "width" in err
    code, _, err = run(capsys, "bracket", str(files / "open.tg"))
    assert code == 2 and "not closed" in err
    code, _, err = run(capsys, "bracket", str(files / "missing.tg"))
    assert code == 2 and "no such file" in err
    code, _, err = run(capsys, "bracket", "builtin:nope")
    assert code == 2 and "figure8" in err


def test_report_text_and_json_agree(capsys, files):
    code, text, _ = run(capsys, "report", str(files / "hopf.tg"))
    assert code == 0
    code, raw, _ = run(capsys, "report", str(files / "hopf.tg"), "--json")
    data = json.loads(raw)
    assert data["components"] == 2
    for key in ("bracket", "F_undirected"):
        assert f"{key}: {data[key]}" in text
    for entry in data["orientations"]:
        block = f"orientation {entry['orientation']}:"
        assert block in text
        for key in ("writhe", "jones", "F_Qs", "F_Qt"):
            assert f"  {key}: {entry[key]}" in text
    assert all(c["passed"] for c in data["checks"])


def test_report_is_deterministic(capsys):
    first = run(capsys, "report", "builtin:figure8", "--json")
    assert run(capsys, "report", "builtin:figure8", "--json") == first


@pytest.mark.parametrize("name", builtin_names())
def test_report_invariants_on_builtins(name):
    rep = build_report(builtin(name), name)
    assert rep.passed
    n = rep.n_components
    for e in rep.entries:
        sign = 1 if (e.writhe + n) % 2 == 0 else -1
        assert e.f_qt == rep.bracket
        assert e.f_qs == sign * rep.bracket


def test_check_command(capsys):
    code, out, _ = run(capsys, "check", "--cases", "8", "--seed", "3")
    assert code == 0
    assert out.splitlines()[-1].endswith("checks passed")
    assert "[FAIL]" not in out
    code, raw, _ = run(capsys, "check", "--cases", "4", "--json")
    data = json.loads(raw)
    assert code == 0 and data["passed"] and data["cases"] == 4


def test_builtins_listing(capsys):
    code, out, _ = run(capsys, "builtins")
    assert code == 0 and out.split() == builtin_names()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "jonesq", "bracket", "builtin:trefoil_r"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "q^(7/2) + q^(3/2) + q^(-1/2) - q^(-9/2)"


def test_check_failure_names_identity(capsys, monkeypatch):
    from jonesq import cli
    from jonesq.checks import CheckResult

    monkeypatch.setattr(cli, "run_all", lambda seed, cases: [CheckResult("ok", True), CheckResult("broken identity", False, "x")])
    code, out, err = run(capsys, "check")
    assert code == 1
    assert "[FAIL] broken identity" in out and "failed: broken identity" in err
