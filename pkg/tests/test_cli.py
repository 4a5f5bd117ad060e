import csv
import io
import json
import subprocess
import sys

import pytest

from curveconfig.cli import run
from curveconfig.config import CurveConfiguration


def ok(argv):
    code, out = run(argv)
    assert code == 0, out
    return out


def test_family_boroczky():
    data = json.loads(ok(["family", "--name", "boroczky", "--k", "6"]))
    assert data == {"label": "boroczky k=6", "degree": 1, "count": 6, "spectrum": {"2": 3, "3": 4}}


def test_family_fermat_round_trips_through_schema():
    data = json.loads(ok(["family", "--name", "fermat", "--k", "3"]))
    cfg = CurveConfiguration.from_json(data)
    assert (cfg.count, dict(cfg.spectrum)) == (9, {3: 12})
    assert cfg.is_valid


def test_family_domain_error_exits_2(capsys):
    code, out = run(["family", "--name", "s-elliptic", "--w", "3", "--k", "5"])
    assert code == 2 and out == ""
    assert "error:" in capsys.readouterr().err


def test_family_needs_k():
    assert run(["family", "--name", "polyhedral"])[0] == 2


def test_unknown_family_rejected_by_parser():
    assert run(["family", "--name", "hesse", "--k", "3"])[0] == 2


@pytest.mark.parametrize("argv", [["family", "--name", "polyhedral", "--limits"], ["limits", "--name", "polyhedral"]])
def test_limits(argv):
    data = json.loads(ok(argv))
    assert data["asymptotic_harbourne"] == {"exact": "-3", "decimal": "-3.00000"}
    assert data["k_chern_slope"]["text"] == "(5/2*n^2 - 4*n + 1)/(n^2 - 2*n + 3/2)"
    assert data["kn_chern_slope"]["exact"] == "5/2"


def test_chern_t6():
    data = json.loads(ok(["chern", "--config", "catalog:t6", "--n", "5"]))
    assert data["slope"]["exact"] == "3"
    assert data["c2"] == ["2", "-10", "15"]
    assert data["c1sq"] == ["5", "-20", "20"]
    assert data["bmy_gap"] == ["1", "-10", "25"]
    assert data["general_type_condition"] == "strong"
    assert data["ball_quotient_n"] == [5]


def test_chern_klein_from_file(fixtures_dir):
    data = json.loads(ok(["chern", "--config", str(fixtures_dir / "klein.json"), "--n", "4"]))
    assert data["slope"] == {"exact": "491/166", "decimal": "2.95783"}
    assert data["gamma"]["exact"] == "53/20"


def test_chern_digits():
    data = json.loads(ok(["chern", "--config", "catalog:klein", "--n", "4", "--digits", "2"]))
    assert data["slope"]["decimal"] == "2.96"


def test_chern_conics_have_no_gap():
    data = json.loads(ok(["chern", "--config", "catalog:hesse-conics"]))
    assert data["gamma"]["exact"] == "13/6"
    assert data["bmy_gap"] is None


def test_chern_sweep():
    out = ok(["chern", "--config", "catalog:t6", "--sweep", "2:10", "--csv"])
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "c1sq", "c2", "slope", "gap"]
    assert [r[0] for r in rows[1:]] == [str(n) for n in range(2, 11)]
    assert rows[4][0] == "5" and rows[4][3:] == ["3", "0"]


def test_chern_sweep_slope_at_five():
    rows = list(csv.reader(io.StringIO(ok(["chern", "--config", "catalog:t6", "--sweep", "5:5"]))))
    n, c1sq, c2, slope, gap = rows[1]
    assert (n, slope, gap) == ("5", "3", "0")
    assert int(c1sq) == 3 * int(c2)


@pytest.mark.parametrize("sweep", ["1:4", "5:3", "a:b"])
def test_bad_sweep(sweep):
    assert run(["chern", "--config", "catalog:t6", "--sweep", sweep])[0] == 2


def test_n_and_sweep_are_exclusive():
    assert run(["chern", "--config", "catalog:t6", "--n", "3", "--sweep", "2:4"])[0] == 2


def test_malformed_config(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["chern", "--config", str(bad)])[0] == 2
    assert run(["chern", "--config", str(tmp_path / "missing.json")])[0] == 2
    assert run(["chern", "--config", "catalog:nope"])[0] == 2


def test_identity_failure_exits_2(fixtures_dir):
    assert run(["chern", "--config", str(fixtures_dir / "broken.json")])[0] == 2


def test_verify():
    data = json.loads(ok(["verify", "--config", "catalog:t6"]))
    names = {v["name"]: v for v in data}
    assert names["hirzebruch"]["holds"] is True
    assert names["hirzebruch"]["slack"] == "0"
    assert names["melchior"]["lhs"] == "3"


def test_verify_strict():
    assert run(["verify", "--config", "catalog:klein"])[0] == 0
    assert run(["verify", "--config", "catalog:klein", "--strict"])[0] == 1
    assert run(["verify", "--config", "catalog:t6", "--strict"])[0] == 0


def test_verify_all_lists_every_checker():
    data = json.loads(ok(["verify", "--config", "catalog:ap-conics", "--all"]))
    assert len(data) == 5
    assert {v["name"]: v["holds"] for v in data}["tang-conics"] is True


@pytest.mark.parametrize(
    "name, count, spectrum",
    [("triangle.txt", 3, {"2": 3}), ("pencil5.txt", 5, {"5": 1}), ("six_generic.txt", 6, {"2": 15})],
)
def test_arrangement(fixtures_dir, name, count, spectrum):
    data = json.loads(ok(["arrangement", str(fixtures_dir / name)]))
    assert (data["count"], data["spectrum"]) == (count, spectrum)
    assert data["validation"]["passed"] is True


def test_arrangement_duplicate(fixtures_dir):
    assert run(["arrangement", str(fixtures_dir / "duplicate.txt")])[0] == 2


def test_arrangement_generic():
    data = json.loads(ok(["arrangement", "--generic", "5", "--seed", "3"]))
    assert data["spectrum"] == {"2": 10}
    assert len(data["lines"]) == 5
    assert ok(["arrangement", "--generic", "5", "--seed", "3"]) == json.dumps(data, indent=2) + "\n"


def test_ball_quotient():
    data = json.loads(ok(["ball-quotient", "--config", "catalog:t6"]))
    assert data["ball_quotient_n"] == [5]
    assert run(["ball-quotient", "--config", "catalog:t6", "--condition", "weird"])[0] == 2


def test_reproduce():
    code, out = run(["reproduce"])
    assert code == 0
    assert "[PASS] criterion  1  wiman-harbourne" in out
    assert "t6-ball-quotient" in out
    assert out.rstrip().endswith("claims reproduced")


def test_reproduce_json():
    data = json.loads(ok(["reproduce", "--json"]))
    assert data["all_match"] is True


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "curveconfig.cli", "chern", "--config", "catalog:t6", "--n", "5"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["slope"]["exact"] == "3"
