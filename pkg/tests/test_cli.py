import json

import pytest

from garside.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_scenario_verify_pairs(capsys):
    rc, out, err = run(capsys, "scenario", "verify-pairs")
    assert rc == 0
    report = json.loads(out)
    assert report["schema"] == 1
    assert report["scenario"] == "verify-pairs"
    assert report["pass"] is True
    assert [c["id"] for c in report["checks"]] == ["c01-pair-count", "c02-pair-list"]
    assert all(c["pass"] for c in report["checks"])


def test_scenario_output_is_byte_stable(capsys):
    rc1, out1, _ = run(capsys, "scenario", "verify-regular")
    rc2, out2, _ = run(capsys, "scenario", "verify-regular")
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_scenario_timings_flag(capsys):
    _, out, _ = run(capsys, "scenario", "verify-pairs", "--timings")
    report = json.loads(out)
    assert all(isinstance(c["elapsed_ms"], float) for c in report["checks"])
    _, out, _ = run(capsys, "scenario", "verify-pairs")
    report = json.loads(out)
    assert all(c["elapsed_ms"] is None for c in report["checks"])


def test_scenario_rejects_unknown_name(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["scenario", "verify-nothing"])
    assert exc.value.code == 2


def test_verify_bundled(capsys):
    rc, out, _ = run(capsys, "verify", "g12")
    assert rc == 0
    report = json.loads(out)
    assert report["axioms"] == {"balanced": True, "lattice": True, "phi": True}
    assert report["simple_count"] == 11


def test_verify_failure_exits_1(capsys, tmp_path):
    bad = tmp_path / "free.gar"
    bad.write_text("gens: s t\ndelta: s t\n")
    rc, out, _ = run(capsys, "verify", str(bad))
    assert rc == 1
    report = json.loads(out)
    assert report["axioms"]["balanced"] is False
    assert report["witnesses"]


def test_missing_source_exits_2_without_report(capsys):
    rc, out, err = run(capsys, "verify", "/no/such/file.gar")
    assert rc == 2
    assert out == ""
    assert err.startswith("error:")


def test_nf(capsys):
    rc, out, _ = run(capsys, "nf", "g12", "s", "t", "u", "s")
    assert rc == 0
    report = json.loads(out)
    assert report["delta_power"] == 1
    assert report["factors"] == []
    assert report["rendered"] == "delta"
    assert report["canonical_length"] == 4


def test_nf_signed(capsys):
    rc, out, _ = run(capsys, "nf", "g12", "s", "s^-1", "t")
    assert rc == 0
    assert json.loads(out)["rendered"] == "t"


def test_nf_empty_word_is_identity(capsys):
    rc, out, _ = run(capsys, "nf", "g12", "")
    assert rc == 0
    report = json.loads(out)
    assert report["rendered"] == "1"
    assert report["delta_power"] == 0
    assert report["canonical_length"] == 0


def test_bundled_names_accept_gar_suffix(capsys):
    rc, out, _ = run(capsys, "nf", "g12.gar", "s", "t", "u", "s")
    assert rc == 0
    assert json.loads(out)["rendered"] == "delta"


def test_nf_rejects_general_exponents(capsys):
    rc, out, err = run(capsys, "nf", "g12", "s^2")
    assert rc == 2
    assert out == ""
    assert "^-1" in err


def test_divided_json(capsys):
    rc, out, _ = run(capsys, "divided", "g12", "-p", "2", "-q", "3")
    assert rc == 0
    report = json.loads(out)
    assert [o["label"] for o in report["objects"]] == [
        "(s t, u s)",
        "(t u, s t)",
        "(u s, t u)",
    ]
    assert len(report["morphisms"]) == 6
    assert report["component_count"] == 1


def test_divided_dot(capsys):
    rc, out, _ = run(capsys, "divided", "g13", "-p", "3", "-q", "4", "--dot")
    assert rc == 0
    assert out.startswith('digraph "C_3^4"')
    assert out.count("->") == 9
    assert out.count("style=dashed") == 3


def test_roots(capsys):
    rc, out, _ = run(capsys, "roots", "g12", "--zp", "6", "-d", "12")
    assert rc == 0
    report = json.loads(out)
    assert report["exists"] is False
    assert report["object_count"] == 0
    assert report["centralizer"] is None


def test_roots_noncentral_power_exits_1(capsys):
    rc, out, err = run(capsys, "roots", "g12", "--zp", "1", "-d", "2")
    assert rc == 1
    assert out == ""
    assert "central" in err


def test_regular_single_report(capsys):
    rc, out, _ = run(capsys, "regular", "G(12,12,2)", "-d", "3")
    assert rc == 0
    report = json.loads(out)["report"]
    assert report["regular"] is True
    assert report["class"] == [3, 4, 6, 12]
    assert report["class_minimum"] is None


def test_regular_unknown_group(capsys):
    rc, out, err = run(capsys, "regular", "G99")
    assert rc == 2
    assert out == ""


def test_pairs_with_caps(capsys):
    rc, out, _ = run(capsys, "pairs", "--max-de", "6", "--max-n", "4")
    assert rc == 0
    report = json.loads(out)
    assert report["count"] == 5
    assert report["pairs"][0]["first"] == "G(1,1,3)"


def test_typeb_member_requires_e(capsys):
    rc, out, err = run(capsys, "typeb", "-n", "2", "--member", "b1")
    assert rc == 2
    assert "-e" in err


def test_typeb_winding(capsys):
    rc, out, _ = run(capsys, "typeb", "-n", "3", "--wd", "b1 b2^-1 b1 b2 b1^-1")
    assert rc == 0
    assert json.loads(out)["winding"]["value"] == 1


def test_budget_flag_too_small(capsys):
    rc, out, err = run(capsys, "verify", "g12", "--budget", "5")
    assert rc == 2
    assert out == ""
    assert "budget" in err


def test_budget_env_var(capsys, monkeypatch):
    monkeypatch.setenv("GARSIDE_ENUM_BUDGET", "5")
    rc, _, err = run(capsys, "verify", "g12")
    assert rc == 2
    assert "budget" in err
    monkeypatch.setenv("GARSIDE_ENUM_BUDGET", "not-a-number")
    rc, _, err = run(capsys, "verify", "g12")
    assert rc == 2
    assert "GARSIDE_ENUM_BUDGET" in err


def test_budget_flag_overrides_env(capsys, monkeypatch):
    monkeypatch.setenv("GARSIDE_ENUM_BUDGET", "5")
    rc, out, _ = run(capsys, "verify", "g12", "--budget", str(3**10))
    assert rc == 0
    assert json.loads(out)["simple_count"] == 11
