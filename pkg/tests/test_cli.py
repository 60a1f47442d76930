import json
from types import SimpleNamespace

import pytest

from commands import ACCEPTANCE_CLAIMS, SUBCOMMANDS, ClaimRegistry, build_registry
from commands.invariants import setup_invariants_commands
from utils import get_settings
from winger_main import VerifierContext, build_parser, build_settings, main


def test_every_acceptance_claim_is_registered():
    ids = build_registry().ids()
    assert len(ids) == len(set(ids))
    assert set(ACCEPTANCE_CLAIMS.values()) <= set(ids)


def test_each_subcommand_has_claims():
    registry = build_registry()
    for name in SUBCOMMANDS:
        assert registry.select(name)
    assert len(registry.select("all")) == len(registry.ids())
    with pytest.raises(ValueError):
        registry.select("everything")


def test_unknown_subcommand_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_unknown_fault_is_a_usage_error():
    with pytest.raises(ValueError):
        VerifierContext(get_settings({"fault": "Q"}))


def test_cli_flags_override_settings():
    args = build_parser().parse_args(["covers", "--seed", "7", "--digits", "12", "--quiet"])
    settings = build_settings(args)
    assert settings["random_seed"] == 7
    assert settings["digits"] == 12
    assert settings["quiet"] is True
    assert settings["fault"] is None


def test_environment_overrides_config(monkeypatch):
    monkeypatch.setenv("WINGER_LAMBDA_SAMPLES", "3")
    monkeypatch.setenv("WINGER_FAULT", "F")
    settings = get_settings({"fault": None})
    assert settings["lambda_samples"] == 3
    assert settings["fault"] == "F"


def test_characters_pass(capsys):
    assert main(["characters", "--quiet"]) == 0
    out = capsys.readouterr().out
    assert "sym-cube-table" in out
    assert "0 failed" in out


def test_json_report(tmp_path):
    path = tmp_path / "covers.json"
    assert main(["covers", "--quiet", "--json", str(path)]) == 0
    data = json.loads(path.read_text())
    assert set(data) == {"version", "convention", "claims"}
    assert data["convention"] == "rtl"
    by_id = {c["id"]: c for c in data["claims"]}
    assert by_id["signature-solutions"]["witness"] == {"solutions": ["(0;5,2,2,2)"]}
    assert all(c["millis"] == 0 for c in data["claims"])


def test_tuples_report(tmp_path):
    path = tmp_path / "tuples.json"
    assert main(["tuples", "--quiet", "--json", str(path)]) == 0
    by_id = {c["id"]: c for c in json.loads(path.read_text())["claims"]}
    assert by_id["tuple-classes-20"]["witness"]["count"] == 20
    assert by_id["tuple-classes-20"]["witness"]["by_r"] == {"2": 4, "3": 6, "5": 10}


def test_discriminant_skipped_without_deep(tmp_path):
    path = tmp_path / "pencil.json"
    assert main(["pencil", "--quiet", "--json", str(path)]) == 0
    by_id = {c["id"]: c for c in json.loads(path.read_text())["claims"]}
    assert by_id["pencil-discriminant"]["status"] == "skipped"
    assert by_id["singular-members"]["status"] == "pass"


@pytest.mark.parametrize("fault, broken", [
    ("F", {"group-invariance", "member-invariance"}),
    ("matrix", {"group-reconstruction", "group-invariance"}),
])
def test_injected_faults_fail_claims(tmp_path, fault, broken):
    path = tmp_path / f"{fault}.json"
    assert main(["pencil", "--quiet", "--inject", fault, "--json", str(path)]) == 1
    failed = {c["id"] for c in json.loads(path.read_text())["claims"] if c["status"] == "fail"}
    assert broken <= failed


def _sextic_claim():
    registry = ClaimRegistry()
    setup_invariants_commands(registry)
    return next(c for c in registry.claims if c.id == "sextic-dimensions")


@pytest.mark.parametrize("molien_t6, invariant, expected", [(2, 2, True), (3, 2, False), (2, 3, False)])
def test_sextic_dimensions_use_computed_counts(molien_t6, invariant, expected):
    ctx = SimpleNamespace(molien=SimpleNamespace(as_ints=lambda: [1, 0, 1, 0, 1, 0, molien_t6]),
                          reynolds_basis=lambda degree: [None] * invariant)
    passed, witness = _sextic_claim().func(ctx)
    assert passed is expected
    assert witness["projective"] == 27
