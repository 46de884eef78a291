import json
import os
import subprocess

CLI = os.environ["ORBIK_CLI"]
DATA = os.environ["ORBIK_EXAMPLES"]


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_compare_s3():
    r = run("--builtin", "S3", "--cmd", "compare")
    assert r.returncode == 0
    assert r.stdout.strip() == "8 basis elements, 512 constants, 0 mismatches"


def test_product_table_trivial_group():
    r = run("--builtin", "trivial", "--cmd", "product-table")
    assert r.returncode == 0
    t = json.loads(r.stdout)
    assert len(t["basis"]) == 1
    assert t["constants"] == [[0, 0, 0, 1]]


def test_check_z2_sign():
    r = run("--builtin", "Z2", "--rep", "sign", "--cmd", "check")
    assert r.returncode == 0
    report = json.loads(r.stdout)
    assert report["passed"]
    assert report["ring"]["associative"] and report["ring"]["commutative"] and report["ring"]["unit"]
    assert report["molien"]["degree"] == 10


def test_group_files():
    r = run("--group", os.path.join(DATA, "s3_perm.json"), "--cmd", "chartab")
    assert r.returncode == 0
    assert json.loads(r.stdout)["irreducibles"][2] == ["2", "0", "-1"]
    r = run("--group", os.path.join(DATA, "z4_cayley.json"), "--rep", "irrep:2", "--cmd", "check", "--degree", "6")
    assert r.returncode == 0
    assert json.loads(r.stdout)["molien"]["degree"] == 6


def test_sectors_report():
    r = run("--builtin", "Z2", "--rep", "sign", "--cmd", "sectors")
    assert r.returncode == 0
    rep = json.loads(r.stdout)
    assert [s["fixed_dimension"] for s in rep["sectors"]] == [1, 0]
    sigma = [p for p in rep["pair_sectors"] if p["g"] == 1 and p["h"] == 1][0]
    assert sigma["B"] == ["1", "-1"]
    assert sigma["D"] == ["0", "2"]


def test_drinfeld_matches_product_table():
    a = run("--builtin", "Q8", "--cmd", "drinfeld")
    b = run("--builtin", "Q8", "--cmd", "product-table")
    assert a.returncode == 0 and b.returncode == 0
    assert a.stdout == b.stdout


def test_determinism_and_seeds(tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert run("--builtin", "S3", "--rep", "regular", "--cmd", "product-table", "--out", str(out1)).returncode == 0
    assert run("--builtin", "S3", "--rep", "regular", "--cmd", "product-table", "--out", str(out2), "--seed", "9").returncode == 0
    assert out1.read_bytes() == out2.read_bytes()
    again = run("--builtin", "S3", "--rep", "regular", "--cmd", "product-table")
    assert again.stdout.encode() == out1.read_bytes()


def test_text_rendering():
    r = run("--builtin", "Z2", "--rep", "sign", "--cmd", "product-table", "--format", "text")
    assert r.returncode == 0
    assert "e2 * e2 = 2*e0 - 2*e1" in r.stdout


def test_exit_codes():
    assert run("--builtin", "nonsense", "--cmd", "chartab").returncode == 2
    assert run("--builtin", "S3", "--cmd", "frobnicate").returncode == 2
    assert run("--cmd", "chartab").returncode == 2
    assert run("--group", os.path.join(DATA, "malformed.json"), "--cmd", "chartab").returncode == 2
    assert run("--group", os.path.join(DATA, "missing.json"), "--cmd", "chartab").returncode == 2
    assert run("--builtin", "S3", "--rep", "chars:1,2", "--cmd", "sectors").returncode == 2
    assert run("--group", os.path.join(DATA, "bad_assoc.json"), "--cmd", "chartab").returncode == 3
    # A virtual character that is not a representation.
    assert run("--builtin", "S3", "--rep", "chars:1,-1,-1", "--cmd", "product-table").returncode == 3
