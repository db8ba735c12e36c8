import json

import pytest

from quasikoorn import cli
from quasikoorn import operators

CFG = {"rank": 2, "sqrt_q": "3/2", "k0": "2/5", "u0": "7/3", "k": "5/4", "kr": "3/7", "ur": "11/4"}


def write(tmp_path, data, name="cfg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_default_config(capsys):
    code, out, _ = run(capsys, "verify", "--trials", "10")
    assert code == 0 and "all relations pass" in out


def test_verify_json_deterministic(tmp_path, capsys):
    cfg = write(tmp_path, CFG)
    a = run(capsys, "verify", "--config", cfg, "--trials", "4", "--seed", "7", "--format", "json")
    b = run(capsys, "verify", "--config", cfg, "--trials", "4", "--seed", "7", "--format", "json")
    assert a == b and json.loads(a[1])["all_passed"]


def test_verify_rank_one(tmp_path, capsys):
    cfg = write(tmp_path, dict(CFG, rank=1))
    code, out, _ = run(capsys, "verify", "--config", cfg, "--trials", "5", "--format", "json")
    names = [r["name"] for r in json.loads(out)["relations"]]
    assert code == 0
    assert not any("braid" in n for n in names)
    assert {"hecke T0", "hecke T1"} <= set(names)


def test_verify_negative_control(monkeypatch, capsys):
    # flip the sign of T_r inside the kernel: the Hecke relation for T_r must fail
    real = operators._backend.apply_generator

    def corrupted(terms, j, r, *rest):
        out = real(terms, j, r, *rest)
        return {Y: -c for Y, c in out.items()} if j == r else out

    monkeypatch.setattr(operators._backend, "apply_generator", corrupted)
    code, out, _ = run(capsys, "verify", "--trials", "3")
    assert code == 1
    assert any(line.startswith("hecke T2") and "FAIL" in line for line in out.splitlines())


def test_orbit_command(capsys):
    code, out, _ = run(capsys, "orbit", "--point", "3/4,0", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["basepoint"] == ["1/4", "0"] and data["g_word"] == [0]
    code, out, _ = run(capsys, "orbit", "--point", "0,0", "--format", "json")
    data = json.loads(out)
    assert data["facet"] == [1, 2] and data["torus_constraints"] == "t = 1"
    code, out, _ = run(capsys, "orbit", "--point", "3/8,1/8")
    assert "T_O = T" in out


def test_epoly_command(tmp_path, capsys):
    cfg = write(tmp_path, dict(CFG, t=["2/3", "5/2"]))
    out_file = tmp_path / "e.json"
    code, _, _ = run(capsys, "epoly", "--config", cfg, "--point", "3/8,1/8",
                     "--format", "json", "--out", str(out_file))
    data = json.loads(out_file.read_text())
    assert code == 0 and data["terms"] == [{"exponent": ["3/8", "1/8"], "coeff": "1"}]


def test_negative_leading_coordinate(tmp_path, capsys):
    cfg = write(tmp_path, dict(CFG, t=["7/11", "13/3"]))
    code, out, _ = run(capsys, "epoly", "--config", cfg, "--point", "-3/8,1/8", "--format", "json")
    assert code == 0 and json.loads(out)["degree"] == ["-3/8", "1/8"]


def test_koornwinder_command(tmp_path, capsys):
    cfg = write(tmp_path, dict(CFG, rank=1))
    code, out, _ = run(capsys, "koornwinder", "--config", cfg, "--degree", "0", "--format", "json")
    assert code == 0 and json.loads(out)["terms"] == [{"exponent": ["0"], "coeff": "1"}]
    code, out, _ = run(capsys, "koornwinder", "--config", cfg, "--degree", "−2", "--oracle")
    assert code == 0 and "match: true" in out


@pytest.mark.parametrize("argv, data", [
    (["orbit", "--point", "1/2"], CFG),                          # dimension mismatch
    (["epoly", "--point", "3/8,1/8"], CFG),                      # free torus, no t
    (["epoly", "--point", "1/2,0"], dict(CFG, t=["1", "1"])),    # t outside T_O
    (["orbit", "--point", "0,0"], dict(CFG, k0="0")),             # zero parameter
    (["orbit", "--point", "0,0"], {"rank": 2}),                    # missing keys
    (["koornwinder", "--degree", "1/2,0"], CFG),                   # non-integral degree
    (["koornwinder", "--degree", "1,0", "--oracle"], CFG),         # oracle rank guard
    (["verify", "--trials", "0"], CFG),
    (["bogus"], CFG),
])
def test_usage_errors(tmp_path, capsys, argv, data):
    cfg = write(tmp_path, data)
    assert cli.main(argv[:1] + ["--config", cfg] + argv[1:] if argv[0] != "bogus" else argv) == 2


def test_unreadable_config(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli.main(["orbit", "--config", str(bad), "--point", "0,0"]) == 2
    assert cli.main(["orbit", "--config", str(tmp_path / "missing.json"), "--point", "0,0"]) == 2


def test_non_generic_exit_code(tmp_path, capsys):
    cfg = write(tmp_path, {"rank": 1, "sqrt_q": "1", "k0": "1", "u0": "1", "k": "1",
                           "kr": "1", "ur": "1"})
    code, _, err = run(capsys, "koornwinder", "--config", cfg, "--degree", "1")
    assert code == 1 and "share eigenvalues" in err
