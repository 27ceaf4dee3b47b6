import json
import os
import subprocess
import sys

import pytest

from fusionlim.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


# -- limits -------------------------------------------------------------------

def test_a6_centric_first_limit(capsys):
    code, out, _ = run(capsys, "limits", "--group", "a6.grp", "--collection", "centric", "--k", "1")
    assert code == 0 and out.strip() == "[2]"


def test_a6_centric_other_degrees(capsys):
    for k in ("0", "2"):
        code, out, _ = run(capsys, "limits", "--group", "a6", "--k", k)
        assert code == 0 and out.strip() == "[]"


def test_s4_overgroups(capsys):
    code, out, _ = run(capsys, "limits", "--group", "s4", "--collection", "overgroups-of", "Y=V4", "--k", "1")
    assert code == 0 and out.strip() == "[]"
    # the Y line is used when no label is given
    code, out, _ = run(capsys, "limits", "--group", "s4", "--collection", "overgroups-of", "--k", "2")
    assert code == 0 and out.strip() == "[]"


def test_overgroups_with_generators(capsys):
    code, out, _ = run(capsys, "limits", "--group", "a6", "--collection", "overgroups-of",
                       "(1,2)(3,4), (1,3)(2,4)", "--k", "1")
    assert code == 1  # V4 is not normal in A6, so this is not a setup


def test_explicit_empty_collection(capsys):
    code, out, _ = run(capsys, "limits", "--group", "s4", "--collection", "explicit", "--k", "0")
    assert code == 0 and out.strip() == "[]"


def test_explicit_sylow(capsys):
    code, data = run_json(capsys, "limits", "--group", "a6", "--collection", "explicit",
                          "(3,4)(5,6), (3,5)(4,6), (1,2)(5,6)", "--k", "0")
    assert code == 0
    assert data["collection_size"] == 1


def test_explicit_outside_sylow(capsys):
    code, _, err = run(capsys, "limits", "--group", "a6", "--collection", "explicit", "(1,2,3)")
    assert code == 1 and "not contained in S" in err


def test_limits_json(capsys):
    code, data = run_json(capsys, "limits", "--group", "a6", "--k", "1")
    assert code == 0
    assert data["schema"] == 1 and data["command"] == "limits"
    assert data["invariant_factors"] == [2] and data["order"] == 2
    assert data["cochain_dims"] == [6, 34, 162]
    assert data["collection_size"] == 4
    assert data["config"]["group"] == "a6" and data["config"]["threads"] == 1


def test_offender_interval_collection(capsys):
    # the interval is the class of the normal four group alone
    code, data = run_json(capsys, "limits", "--group", "s4", "--collection", "offender-interval", "--k", "1")
    assert code == 0
    assert data["collection_size"] == 1 and data["invariant_factors"] == [2]


# -- offenders -------------------------------------------------------------------

def test_offenders_s5(capsys):
    code, out, _ = run(capsys, "offenders", "--group", "s5-natural")
    assert code == 0
    assert "solitary: 10" in out
    code, data = run_json(capsys, "offenders", "--group", "s5-natural")
    assert len(data["solitary"]) == 10
    assert data["group_order"] == 120 and data["module_order"] == 16


def test_offenders_sl32(capsys):
    code, data = run_json(capsys, "offenders", "--group", "sl32-natural")
    assert code == 0
    assert data["solitary"] == []
    assert len(data["best_offenders"]) == 56
    assert sum(row["over"] for row in data["best_offenders"]) == 7
    assert data["thompson_subgroup_order"] == 8


def test_offenders_needs_module(capsys):
    code, _, err = run(capsys, "offenders", "--group", "s4")
    assert code == 1 and "no module" in err


def test_offenders_not_faithful(capsys, tmp_path):
    f = tmp_path / "trivial.mod"
    f.write_text("degree 2\ngen (1 2)\nprime 2\norders 2\nmat 1\n")
    code, _, err = run(capsys, "offenders", "--group", str(f))
    assert code == 1 and "not faithful" in err


# -- errors --------------------------------------------------------------------

def test_cap_exceeded(capsys):
    code, _, err = run(capsys, "limits", "--group", "a6", "--k", "1", "--cap-cochains", "5")
    assert code == 2 and "CapExceeded" in err


def test_high_degree_hits_the_cap(capsys):
    # the complex is built up to the requested degree, so the cochain cap applies
    code, _, _ = run(capsys, "limits", "--group", "a6", "--k", "7", "--cap-cochains", "10000")
    assert code == 2


def test_order_cap(capsys):
    code, data = run_json(capsys, "limits", "--group", "a6", "--cap-order", "100")
    assert code == 2 and data["error"] == "CapExceeded" and data["schema"] == 1


@pytest.mark.parametrize("argv", [
    ["limits", "--group", "nowhere"],
    ["limits"],
    ["limits", "--group", "a6", "--k", "-1"],
    ["limits", "--group", "a6", "--prime", "4"],
    ["limits", "--group", "a6", "--threads", "0"],
    ["limits", "--group", "a6", "--collection", "mystery"],
    ["verify", "--suite", "nope"],
])
def test_validation_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 1


def test_error_json(capsys):
    code, data = run_json(capsys, "verify", "--suite", "nope")
    assert code == 1
    assert data["error"] == "ValidationError" and "olijm" in data["message"]


# -- verify --------------------------------------------------------------------

def test_verify_olijm_s4(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "olijm", "--group", "s4.grp")
    assert code == 0
    assert out.strip().splitlines()[-1] == "suite olijm: pass"


def test_verify_quadnorm(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "quadnorm")
    assert code == 0 and "suite quadnorm: pass" in out


def test_verify_les_a6(capsys):
    code, data = run_json(capsys, "verify", "--suite", "les", "--group", "a6.grp")
    assert code == 0 and data["passed"]
    assert data["suite"] == "les"
    assert all(c["ok"] for c in data["checks"])
    assert any(c["label"].startswith("a6.grp:V4a") for c in data["checks"])


def test_verify_module_suite_needs_module(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "replacement", "--group", "s4")
    assert code == 1


def test_verify_module_descriptor(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "replacement", "--group", "sl32-natural")
    assert code == 0 and "suite replacement: pass" in out


# -- determinism and the console script -----------------------------------------

def test_output_is_deterministic(capsys):
    outs = set()
    for _ in range(2):
        code, out, _ = run(capsys, "offenders", "--group", "sl32-natural", "--format", "json")
        outs.add(out)
    assert len(outs) == 1
    outs = {run(capsys, "limits", "--group", "a6", "--format", "json")[1] for _ in range(2)}
    assert len(outs) == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fusionlim.cli", "limits", "--group", "a6", "--k", "1"],
                          capture_output=True, text=True, timeout=300)
    assert proc.returncode == 0 and proc.stdout.strip() == "[2]"


def test_help_lists_suites(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "--help"])
    out = capsys.readouterr().out
    for name in ("olijm", "oddquadratic", "thompson2", "restinj"):
        assert name in out


def test_output_independent_of_hash_seed():
    outs = set()
    for seed in ("1", "2"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        proc = subprocess.run([sys.executable, "-m", "fusionlim.cli", "offenders", "--group", "sl32-natural",
                               "--format", "json"], capture_output=True, text=True, timeout=300, env=env)
        assert proc.returncode == 0
        outs.add(proc.stdout)
    assert len(outs) == 1
