import json

import pytest

from conftest import GROUPS, QQ, load_group, load_spec, make_group
from modinv import cli
from modinv.engine import (
    GroupSpec, induced_generator_action, probe_polynomial_structure, quasi_gorenstein_verdict,
)
from modinv.errors import ComputationError, InputError
from modinv.invariants import group_action
from modinv.matgroup import Mat
from modinv.polyalg import MultiPoly
from modinv.reflect import reflection_report


def spec_of(field, gens, **extra):
    return GroupSpec.from_json({"field": field, "dim": len(gens[0]), "generators": gens, **extra})


# ------------------------------------------------------------- spec parsing

def test_spec_accepts_flat_and_string_entries():
    a = spec_of({"kind": "cyclotomic", "n": 4}, [[["z", 0], [0, "-z"]]])
    b = GroupSpec.from_json({"field": {"kind": "cyclotomic", "n": 4}, "dim": 2,
                             "generators": [["z", 0, 0, "-z"]]})
    assert a.generators == b.generators


@pytest.mark.parametrize("bad", [
    {"dim": 2, "generators": []},
    {"field": {"kind": "rational"}, "dim": 0, "generators": []},
    {"field": {"kind": "rational"}, "dim": 2, "generators": [[[1, 0]]]},
    {"field": {"kind": "rational"}, "dim": 1, "generators": [[[0.5]]]},
    {"field": {"kind": "rational"}, "dim": 1, "generators": [[[True]]]},
    {"field": {"kind": "finite", "p": 4}, "dim": 1, "generators": [[[1]]]},
    {"field": {"kind": "rational"}, "dim": 1, "generators": [[[1]]], "options": {"subgroup": "X"}},
    {"field": {"kind": "rational"}, "dim": 1, "generators": [[[1]]], "cap": 0},
])
def test_spec_rejects(bad):
    with pytest.raises(InputError):
        GroupSpec.from_json(bad)


def test_spec_load_errors(tmp_path):
    with pytest.raises(InputError):
        GroupSpec.load(tmp_path / "missing.json")
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    with pytest.raises(InputError):
        GroupSpec.load(p)


# -------------------------------------------------------------------- probe

def test_probe_trivial_group():
    H = make_group(QQ, [[[1, 0, 0], [0, 1, 0], [0, 0, 1]]])
    pr = probe_polynomial_structure(H, 4)
    assert pr.succeeded and pr.degrees == [1, 1, 1]


def test_probe_transvection_f2():
    H = load_group("transvection_f2")
    pr = probe_polynomial_structure(H, 8)
    assert pr.succeeded and pr.degrees == [1, 2]
    F = H.field
    assert [f for _, f in pr.generators] == [MultiPoly.parse("x1", F, 2),
                                             MultiPoly.parse("x1*x2 + x2^2", F, 2)]


def test_probe_pm_identity_not_polynomial():
    pr = probe_polynomial_structure(load_group("pm_identity"), 8)
    assert pr.status == "not-polynomial"


def test_probe_inconclusive_when_degree_too_small():
    pr = probe_polynomial_structure(load_group("gl2_f3"), 4)
    assert pr.status == "inconclusive"


@pytest.mark.parametrize("name,degrees", [
    ("transvection_f3", [1, 3]), ("gl2_f2", [2, 3]), ("gl2_f3", [6, 8]),
    ("signed_permutations_b3", [2, 4, 6]), ("s3_permutation", [1, 2, 3]), ("dihedral8", [2, 4]),
])
def test_probe_known_degrees(name, degrees):
    G = load_group(name)
    rr = reflection_report(G)
    H = rr.Wtilde if G.characteristic else rr.W
    assert probe_polynomial_structure(H, 12).degrees == degrees


def test_induced_action_sign_on_transvection_invariants():
    G = load_group("transvection_sign_f3")
    rr = reflection_report(G)
    pr = probe_polynomial_structure(rr.Wtilde, 8)
    assert pr.degrees == [1, 3]
    acts = induced_generator_action(G, pr)
    minus = Mat.diag(G.field, [-G.field.one, -G.field.one])
    assert minus in G
    for (d, act), (_, f) in zip(acts, pr.generators):
        M = act[minus]
        assert M.n == 1
        assert group_action(minus, f) == f * M.rows[0][0]
        assert M.rows[0][0] == -G.field.one


def test_induced_action_trivial_quotient():
    G = load_group("s3_permutation")
    pr = probe_polynomial_structure(reflection_report(G).W, 8)
    for _, act in induced_generator_action(G, pr):
        assert all(M.is_identity() for M in act.values())


# ------------------------------------------------------------------ verdicts

@pytest.mark.parametrize("name,status,rule", [
    ("pm_identity", "yes", "NR-rule"),
    ("diag_f7", "yes", "NR-rule"),
    ("reflection_sign", "yes", "reflection-quotient rule"),
    ("transvection_f2", "yes", "reflection-quotient rule"),
    ("transvection_f3", "yes", "reflection-quotient rule"),
    ("z3_scalar", "no", "NR-rule"),
    ("reflections_with_scalar_i", "conditional", "w-tilde rule"),
    ("reflections_with_scalar_w", "conditional", "w-tilde rule"),
])
def test_verdicts(name, status, rule):
    v = quasi_gorenstein_verdict(load_spec(name)).verdict
    assert v["status"] == status and v["rule"] == rule and v["citations"]


def test_assert_polynomial_settles_conditional():
    spec = load_spec("reflections_with_scalar_w")
    v = quasi_gorenstein_verdict(spec, assert_polynomial=True).verdict
    assert v["status"] == "no" and v["quasi_gorenstein"] is False
    v = quasi_gorenstein_verdict(load_spec("reflections_with_scalar_i"), assert_polynomial=True).verdict
    assert v["status"] == "yes"


def test_inconclusive_when_no_rule_applies():
    rep = quasi_gorenstein_verdict(load_spec("reflections_with_scalar_i"), max_degree=1)
    assert rep.verdict["status"] == "inconclusive"


def test_report_is_json_and_stable():
    a = quasi_gorenstein_verdict(load_spec("quaternion")).to_json()
    b = quasi_gorenstein_verdict(load_spec("quaternion")).to_json()
    assert a == b
    data = json.loads(a)
    assert data["class_group"]["description"] == "Z/2 x Z/2"
    assert data["verdict"]["status"] == "yes"


# ---------------------------------------------------------------------- CLI

def test_cli_analyze(capsys):
    assert cli.main(["analyze", str(GROUPS / "pm_identity.json")]) == 0
    out = capsys.readouterr().out
    assert "quasi-Gorenstein YES" in out and "NR-rule" in out


def test_cli_classgroup(capsys):
    assert cli.main(["classgroup", str(GROUPS / "pm_identity.json")]) == 0
    assert "Z/2" in capsys.readouterr().out


def test_cli_missing_file(capsys):
    assert cli.main(["analyze", "--json", "nonexistent.json"]) == 1
    assert "error" in capsys.readouterr().err


def test_cli_bad_flag():
    with pytest.raises(SystemExit) as exc:
        cli.main(["analyze", "--no-such-flag", "x.json"])
    assert exc.value.code == 1


def test_cli_negative_degree():
    assert cli.main(["invariants", str(GROUPS / "pm_identity.json"), "--max-degree", "-1"]) == 1


def test_cli_internal_failure_exit_code(monkeypatch, capsys):
    def boom(*a, **k):
        raise ComputationError("forced")
    monkeypatch.setattr(cli, "quasi_gorenstein_verdict", boom)
    assert cli.main(["analyze", str(GROUPS / "pm_identity.json")]) == 2
    assert "forced" in capsys.readouterr().err


def test_cli_json_out(tmp_path):
    out = tmp_path / "r.json"
    assert cli.main(["analyze", "--json", "--out", str(out), str(GROUPS / "c4_rotation.json")]) == 0
    data = json.loads(out.read_text())
    assert data["class_group"]["invariant_factors"] == [4]


@pytest.mark.parametrize("cmd", [
    ["series", "--element", "1"], ["invariants", "--max-degree", "3"],
    ["semiinv", "--character", "1", "--max-degree", "3"], ["check-identities"],
])
def test_cli_other_commands(cmd, capsys):
    argv = [cmd[0], str(GROUPS / "quaternion.json")] + cmd[1:]
    assert cli.main(argv) == 0
    assert capsys.readouterr().out


def test_cli_semiinv_bad_character():
    assert cli.main(["semiinv", str(GROUPS / "pm_identity.json"), "--character", "9",
                     "--max-degree", "2"]) == 1
