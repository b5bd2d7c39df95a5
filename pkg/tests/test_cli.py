import csv
import io
import json
import subprocess
import sys

import pytest

from grassblow import cli, mirror


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_point_in_g25(capsys):
    code, out, _ = run(capsys, "classify", "--k", "2", "--n", "5", "--a", "2", "--b", "0")
    assert code == 0
    assert json.loads(out)["isFano"] is False


def test_classify_sweep_is_csv(capsys):
    code, out, _ = run(capsys, "classify", "--sweep", "--max-n", "5")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows and {"k", "n", "isFano"} <= set(rows[0])
    code, out2, _ = run(capsys, "--format", "json", "classify", "--sweep", "--max-n", "5")
    assert len(json.loads(out2)) == len(rows)


def test_qh_present_n3(capsys):
    code, out, _ = run(capsys, "qh", "present", "--n", "3")
    assert code == 0
    data = json.loads(out)
    assert data["ideal"] == ["h^2 - x*q1", "h*x + x^2 - q2"]
    assert data["rank"] == 4


def test_qh_mul(capsys):
    code, out, _ = run(capsys, "qh", "mul", "--n", "3", "--left", "E", "--right", "E")
    assert code == 0
    terms = {(t["q1"], t["q2"]) for t in json.loads(out)["terms"]}
    assert terms == {(0, 0), (1, 0), (0, 1)}


def test_schubert_and_xkn(capsys):
    code, out, _ = run(capsys, "schubert", "mult", "--k", "2", "--n", "4",
                       "--left", "1", "--right", "1", "--check")
    assert code == 0 and "2" in out
    code, out, _ = run(capsys, "xkn", "convert", "--k", "2", "--n", "5", "--left", "s[1]",
                       "--to", "B2")
    assert code == 0
    code, out, _ = run(capsys, "xkn", "pair", "--k", "2", "--n", "4", "--left", "s[2,2]",
                       "--right", "1")
    assert code == 0 and json.loads(out)["pairing"] == "1"


def test_gw_and_weyl(capsys):
    code, out, _ = run(capsys, "gw", "table", "--k", "2", "--n", "4", "--degree", "e")
    assert code == 0 and all(r["value"] == "1" for r in json.loads(out))
    code, out, _ = run(capsys, "weyl", "zd", "--d1", "1", "--d2", "1", "--k", "2", "--n", "5")
    assert code == 0
    code, out, _ = run(capsys, "weyl", "bound", "--sweep", "--max-d", "3", "--max-n", "6")
    assert code == 0 and out.startswith("d1,")


def test_usage_errors(capsys):
    assert run(capsys, "gw", "table", "--k", "2", "--n", "4", "--degree", "l")[0] == 2
    assert run(capsys, "qh", "mul", "--n", "3", "--left", "E**", "--right", "E")[0] == 2
    assert run(capsys, "classify", "--k", "2", "--n", "4", "--a", "0", "--b", "2")[0] == 2
    assert run(capsys, "xkn", "convert", "--k", "3", "--n", "6", "--left", "s[1,1]",
               "--to", "B2")[0] == 2
    with pytest.raises(SystemExit) as e:
        cli.main(["qh", "present"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        cli.main(["nonsense"])
    assert e.value.code == 2


def test_falsification_exits_1(capsys, monkeypatch):
    real = mirror.verify_theorem62

    def broken(n):
        rep = real(n)
        rep["z0_j = R_b(j)"] = False
        return rep

    monkeypatch.setattr(mirror, "verify_theorem62", broken)
    code, _, err = run(capsys, "mirror", "verify", "--n", "4")
    assert code == 1
    assert "z0_j = R_b(j)" in err


def test_mirror_commands(capsys):
    code, out, _ = run(capsys, "mirror", "verify", "--n-min", "3", "--n-max", "4")
    assert code == 0
    reps = json.loads(out)
    assert [r["n"] for r in reps] == [3, 4]
    assert reps[1]["criticalCount"]["count"] == 9
    code, out, _ = run(capsys, "mirror", "chain", "--n", "5")
    assert code == 0 and json.loads(out)["A"]


def test_verify_all_small(capsys):
    code, out, err = run(capsys, "verify-all", "--max-n", "5")
    assert code == 0, err
    data = json.loads(out)
    assert data["failed"] == 0 and data["passed"] == len(data["checks"])
    assert all(line.startswith("PASS") for line in err.strip().splitlines())


def test_determinism_and_parallel():
    base = [sys.executable, "-m", "grassblow"]
    a = subprocess.run(base + ["--seed", "7", "verify-all", "--max-n", "4"],
                       capture_output=True, text=True)
    b = subprocess.run(base + ["--seed", "7", "verify-all", "--max-n", "4"],
                       capture_output=True, text=True)
    c = subprocess.run(base + ["--seed", "7", "--jobs", "2", "verify-all", "--max-n", "4"],
                       capture_output=True, text=True)
    assert a.returncode == b.returncode == c.returncode == 0
    assert a.stdout == b.stdout == c.stdout


def test_seed_changes_sample_points():
    base = [sys.executable, "-m", "grassblow"]
    outs = [subprocess.run(base + ["--seed", s, "mirror", "verify", "--n", "5"],
                           capture_output=True, text=True).stdout for s in ("1", "2")]
    samples = [json.loads(o)[0]["jacobi"]["axisFreeSamples"] for o in outs]
    assert samples[0] != samples[1]


def test_global_options_before_or_after_subcommand(capsys):
    before = run(capsys, "--seed", "5", "mirror", "verify", "--n", "3")[1]
    after = run(capsys, "mirror", "verify", "--n", "3", "--seed", "5")[1]
    default = run(capsys, "mirror", "verify", "--n", "3")[1]
    assert before == after != default
