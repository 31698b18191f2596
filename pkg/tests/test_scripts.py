import runpy
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize("argv", [
    ["bm_table.py", "--group", "GL2", "--e", "2", "--max-pairing", "2"],
    ["asymptotics_scan.py", "--n-max", "4"],
    ["adjoint_scan.py", "--p", "5"],
])
def test_script_runs(argv, monkeypatch, capsys):
    monkeypatch.setattr(sys, "argv", argv)
    runpy.run_path(str(SCRIPTS / argv[0]), run_name="__main__")
    out = capsys.readouterr().out
    assert out.strip()
    assert "False" not in out.splitlines()[-1] or argv[0] != "adjoint_scan.py"
