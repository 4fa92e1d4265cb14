import json
import subprocess
import sys

import numpy as np
import pytest

from sboxkit import get_entry, save_sbox

KEY_FLAGS = ["--x0", "0.442637767848956", "--a", "1.0", "--b", "7317130",
             "--c", "731713", "--d", "167527",
             "--e", "0.442637767848956", "--f", "0.372463939884994"]


def run_cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "sboxkit", *map(str, args)],
        capture_output=True, text=True, cwd=cwd,
    )


def strip_timestamp(report_text: str) -> dict:
    payload = json.loads(report_text)
    payload["manifest"].pop("timestamp")
    return payload


@pytest.fixture
def aes_grid(tmp_path):
    path = tmp_path / "aes.sbox"
    save_sbox(path, get_entry("aes").table)
    return path


# ---------------------------------------------------------------------------
# generate

def test_generate_writes_valid_grid(tmp_path):
    out = tmp_path / "box.sbox"
    res = run_cli("generate", *KEY_FLAGS, "--budget", "64", "--out", out)
    assert res.returncode == 0, res.stderr
    assert res.stdout.startswith("nl min")
    values = [int(v) for v in out.read_text().split()]
    assert sorted(values) == list(range(256))


def test_generate_rejects_out_of_range_key(tmp_path):
    flags = list(KEY_FLAGS)
    flags[flags.index("--a") + 1] = "3.0"
    res = run_cli("generate", *flags, "--out", tmp_path / "x.sbox")
    assert res.returncode == 1
    assert "(0, 2)" in res.stderr


def test_generate_missing_key_fields(tmp_path):
    res = run_cli("generate", "--x0", "0.5", "--out", tmp_path / "x.sbox")
    assert res.returncode == 1
    assert "missing key fields" in res.stderr


def test_generate_key_json_inline_and_file(tmp_path):
    key = {"x0": "0.442637767848956", "a": "1.0", "b": 7317130,
           "c": 731713, "d": 167527, "e": "0.442637767848956",
           "f": "0.372463939884994"}
    out1 = tmp_path / "inline.sbox"
    res = run_cli("generate", "--key-json", json.dumps(key),
                  "--budget", "64", "--out", out1)
    assert res.returncode == 0, res.stderr
    key_path = tmp_path / "key.json"
    key_path.write_text(json.dumps(key))
    out2 = tmp_path / "fromfile.sbox"
    res = run_cli("generate", "--key-json", key_path, "--budget", "64", "--out", out2)
    assert res.returncode == 0, res.stderr
    assert out1.read_bytes() == out2.read_bytes()

    flagged = tmp_path / "flagged.sbox"
    res = run_cli("generate", *KEY_FLAGS, "--budget", "64", "--out", flagged)
    assert res.returncode == 0
    assert flagged.read_bytes() == out1.read_bytes()


def test_generate_deterministic_artifacts(tmp_path):
    out, rep = tmp_path / "a.sbox", tmp_path / "a.json"
    artifacts = []
    for _ in range(2):
        res = run_cli("generate", *KEY_FLAGS, "--budget", "64",
                      "--out", out, "--report", rep)
        assert res.returncode == 0, res.stderr
        artifacts.append((out.read_bytes(), strip_timestamp(rep.read_text())))
    assert artifacts[0] == artifacts[1]


def test_generate_hex_format(tmp_path):
    out = tmp_path / "box.hex"
    res = run_cli("generate", *KEY_FLAGS, "--budget", "64",
                  "--format", "hex", "--out", out)
    assert res.returncode == 0
    cells = out.read_text().split()
    assert len(cells) == 256 and all(len(c) == 2 for c in cells)


def test_generate_mode_flags(tmp_path):
    eq1, alg1 = tmp_path / "eq1.sbox", tmp_path / "alg1.sbox"
    res = run_cli("generate", *KEY_FLAGS, "--budget", "0", "--out", eq1)
    assert res.returncode == 0
    res = run_cli("generate", *KEY_FLAGS, "--budget", "0",
                  "--branch-mode", "alg1", "--out", alg1)
    assert res.returncode == 0
    assert eq1.read_bytes() != alg1.read_bytes()
    res = run_cli("generate", *KEY_FLAGS, "--budget", "32",
                  "--objective", "min", "--out", tmp_path / "min.sbox")
    assert res.returncode == 0


def test_analyze_full_spectrum_mode(aes_grid):
    res = run_cli("analyze", aes_grid, "--json", "--nl-mode", "full")
    assert res.returncode == 0
    report = json.loads(res.stdout)["report"]
    assert report["nl_mode"] == "full"
    assert report["nl_min"] == 112  # AES is flat across all 255 masks


# ---------------------------------------------------------------------------
# analyze

def test_analyze_aes_json(aes_grid):
    res = run_cli("analyze", aes_grid, "--json")
    assert res.returncode == 0, res.stderr
    payload = json.loads(res.stdout)
    report = payload["report"]
    assert report["du"] == 4
    assert report["lp"] == 0.0625
    assert report["nl_min"] == 112 and report["nl_max"] == 112
    assert payload["manifest"]["subcommand"] == "analyze"


def test_analyze_identity_grid(tmp_path):
    path = tmp_path / "identity.sbox"
    save_sbox(path, np.arange(256))
    res = run_cli("analyze", path, "--json")
    assert res.returncode == 0
    assert json.loads(res.stdout)["report"]["fixed_point_count"] == 256


def test_analyze_truncated_file(tmp_path):
    path = tmp_path / "short.sbox"
    path.write_text("1 2 3 4\n")
    res = run_cli("analyze", path)
    assert res.returncode == 1
    assert "expected 256" in res.stderr


def test_analyze_non_bijective_exit_codes(tmp_path):
    table = np.arange(256)
    table[0] = 5
    path = tmp_path / "dup.sbox"
    save_sbox(path, table)
    res = run_cli("analyze", path)
    assert res.returncode == 2
    res = run_cli("analyze", path, "--allow-non-bijective", "--json")
    assert res.returncode == 0
    assert json.loads(res.stdout)["report"]["bijective"] is False


def test_analyze_human_and_markdown(aes_grid):
    res = run_cli("analyze", aes_grid)
    assert res.returncode == 0
    assert "nonlinearity" in res.stdout
    assert "SAC dependency matrix" in res.stdout
    res = run_cli("analyze", aes_grid, "--md")
    assert res.returncode == 0
    assert res.stdout.startswith("| aes.sbox |")


# ---------------------------------------------------------------------------
# compare

def test_compare_corpus_pair():
    res = run_cli("compare", "aes", "paper-proposed")
    assert res.returncode == 0, res.stderr
    assert "| AES |" in res.stdout
    assert "| Proposed |" in res.stdout
    assert "deltas for paper-proposed" in res.stdout


def test_compare_unknown_id_annotates_row():
    res = run_cli("compare", "aes", "mystery-box")
    assert res.returncode == 0
    assert "unknown corpus id or file" in res.stdout
    assert "| AES |" in res.stdout


def test_compare_all_unknown_fails():
    res = run_cli("compare", "mystery-box")
    assert res.returncode == 1


def test_compare_requires_entries():
    res = run_cli("compare")
    assert res.returncode == 1


def test_compare_path_entry(aes_grid):
    res = run_cli("compare", aes_grid, "--csv")
    assert res.returncode == 0
    lines = res.stdout.splitlines()
    assert lines[0].startswith("id,")
    assert lines[1].startswith("aes,112,112,112")


# ---------------------------------------------------------------------------
# bifurcate / lyapunov

def test_bifurcate_single_step(tmp_path):
    out = tmp_path / "bif.csv"
    res = run_cli("bifurcate", "--map", "logistic", "--param-lo", "3.1",
                  "--param-hi", "3.9", "--steps", "1", "--transient", "100",
                  "--samples", "20", "--out", out)
    assert res.returncode == 0, res.stderr
    lines = out.read_text().splitlines()
    assert lines[0] == "param,x"
    assert len(lines) == 21
    assert len({line.split(",")[0] for line in lines[1:]}) == 1


def test_bifurcate_rejects_bad_range():
    res = run_cli("bifurcate", "--map", "ahyb", "--param-lo", "0.5",
                  "--param-hi", "2.5", "--steps", "3")
    assert res.returncode == 1


def test_lyapunov_scalar_logistic():
    res = run_cli("lyapunov", "--map", "logistic", "--param", "4.0")
    assert res.returncode == 0, res.stderr
    value = float(res.stdout.strip())
    assert 0.683 <= value <= 0.703


def test_lyapunov_sweep_csv(tmp_path):
    out = tmp_path / "le.csv"
    res = run_cli("lyapunov", "--map", "ahyb", "--param-lo", "0.04",
                  "--param-hi", "1.96", "--steps", "50", "--n", "5000",
                  "--transient", "200", "--out", out)
    assert res.returncode == 0, res.stderr
    lines = out.read_text().splitlines()
    assert lines[0] == "param,le"
    assert len(lines) == 51
    for line in lines[1:]:
        p, le = line.split(",")
        assert np.isfinite(float(p)) and np.isfinite(float(le))


def test_lyapunov_needs_param_or_sweep():
    res = run_cli("lyapunov", "--map", "logistic")
    assert res.returncode == 1


# ---------------------------------------------------------------------------
# generate -> analyze round trip

def test_generate_analyze_round_trip(tmp_path):
    out = tmp_path / "box.sbox"
    rep = tmp_path / "box.json"
    res = run_cli("generate", *KEY_FLAGS, "--budget", "64",
                  "--out", out, "--report", rep)
    assert res.returncode == 0, res.stderr
    res = run_cli("analyze", out, "--json")
    assert res.returncode == 0, res.stderr
    embedded = json.loads(rep.read_text())["report"]
    analyzed = json.loads(res.stdout)["report"]
    assert json.dumps(embedded) == json.dumps(analyzed)
