import json
from pathlib import Path

import pytest

import free_courant
from axiom_checks import CheckReport, all_pass
from cli.commands import run_dims, run_expand
from cli.config import SUITES, EngineConfig, load_config
from cli.instances import MapSpec, TargetSpec
from cli.reporting import RunReport, Section
from linquot import Bounds

CONFIGS = Path(__file__).resolve().parents[2] / "configs"


def _config(name):
    return str(CONFIGS / name)


def _stdout_lines(capsys):
    return capsys.readouterr().out.splitlines()


def test_anchor_dx_config():
    cfg = load_config(_config("anchor_dx.yaml"))
    assert cfg.module.generators == ("e",)
    assert (cfg.bounds.wmax, cfg.bounds.pmax) == (3, 3)
    assert cfg.checks.suites == SUITES
    assert cfg.run.log_dir is None
    assert cfg.bounds.pair_bounds() is None


def test_overrides_replace_only_given_fields():
    cfg = load_config(_config("anchor_dx.yaml")).with_overrides(wmax=2, seed=5, suite="leibniz")
    assert (cfg.bounds.wmax, cfg.bounds.pmax) == (2, 3)
    assert cfg.seed == 5
    assert cfg.checks.suites == ("leibniz",)
    assert cfg.instance.type == "symmetric"


def test_pair_bounds_default_to_the_base_bounds():
    cfg = EngineConfig.from_mapping({"bounds": {"wmax": 4, "pmax": 2, "pair_pmax": 1}})
    assert cfg.bounds.pair_bounds() == Bounds(4, 1)


def test_sc_file_resolves_against_the_config_directory():
    cfg = load_config(_config("sc_nilpotent2.yaml"))
    assert Path(cfg.instance.sc_file).is_file()
    assert cfg.instance.values == "adjoint"


@pytest.mark.parametrize(
    "raw",
    [
        {"bounds": {"wmax": 2, "pmax": 0}, "bogus": 1},
        {"bounds": {"wmax": 2, "pmax": 0}, "instance": {"type": "lie"}},
        {"module": None},
    ],
)
def test_unknown_keys_are_rejected(raw):
    with pytest.raises(ValueError):
        EngineConfig.from_mapping(raw)


def test_map_and_target_specs():
    assert TargetSpec.parse("sc:sc/nilpotent2.yaml") == TargetSpec("sc", "sc/nilpotent2.yaml")
    with pytest.raises(ValueError):
        TargetSpec.parse("lie")
    with pytest.raises(ValueError):
        MapSpec.from_mapping({"pairing": "standard"})
    assert MapSpec.from_mapping({"images": {"e": "(e)"}}).pairing == "standard"


def test_expand_reproduces_nested_brackets():
    cfg = load_config(_config("expand.yaml"))
    report = run_expand(cfg, "[(e1)⊗(e2),(e3)]", config_name="expand.yaml")
    lines = report.body().splitlines()
    assert lines[0] == "command=expand config=expand.yaml wmax=3 pmax=1 seed=0"
    assert "normal_form=(e1)⊗(e2)⊗(e3) - (e2)⊗(e1)⊗(e3)" in lines
    assert lines[-1] == "verdict=PASS"


def test_dims_without_variables():
    report = run_dims(load_config(_config("zero_anchor.yaml")), config_name="zero_anchor.yaml")
    assert report.sections[0].lines == (
        "weight=1 dim_free=2 dim_relations=0 dim_quotient=2 saturation_delta=2",
        "weight=2 dim_free=4 dim_relations=0 dim_quotient=4 saturation_delta=2",
        "weight=3 dim_free=8 dim_relations=0 dim_quotient=8 saturation_delta=2",
    )


def test_refused_section_fails_the_report():
    report = RunReport("courant", (), (Section("C(F)", ("not built",), refused=True),))
    assert not report.verdict
    assert report.render().splitlines()[-2] == "verdict=FAIL"


def test_checks_without_samples_are_vacuous():
    empty = CheckReport("vvw", 0, 0, "exhaustive")
    skipped = CheckReport("wvv", 4, 4, "exhaustive")
    held = CheckReport("vwv", 4, 1, "exhaustive")
    assert [r.verdict_text for r in (empty, skipped, held)] == ["VACUOUS", "VACUOUS", "PASS"]
    assert not all_pass((empty, held))
    assert all_pass((held,))
    report = RunReport("courant", (), (Section("module", checks=(empty, skipped, held)),))
    lines = report.body().splitlines()
    assert lines[-2:] == ["vacuous_checks=2", "verdict=PASS"]
    assert report.to_dict()["vacuous_checks"] == 2


def test_main_expand_prints_report_and_mirror(tmp_path, capsys):
    mirror = tmp_path / "expand.json"
    code = free_courant.main(["expand", _config("expand.yaml"), "[(e1),(e2)]", "--report", str(mirror)])
    lines = _stdout_lines(capsys)
    assert code == free_courant.EXIT_PASS
    assert "normal_form=(e1)⊗(e2)" in lines
    data = json.loads(mirror.read_text(encoding="utf-8"))
    assert data["verdict"] == "PASS"
    assert lines[-1] == f"digest={data['digest']}"


def test_main_is_deterministic(capsys):
    argv = ["check", _config("sc_nilpotent2.yaml"), "--suite", "leibniz", "--seed", "4"]
    assert free_courant.main(argv) == free_courant.EXIT_PASS
    first = capsys.readouterr().out
    assert free_courant.main(argv) == free_courant.EXIT_PASS
    assert capsys.readouterr().out == first


def test_main_failing_identity_exits_one(capsys):
    assert free_courant.main(["check", _config("sc_idempotent.yaml")]) == free_courant.EXIT_FAIL
    out = capsys.readouterr().out
    assert "witness=(e, e, e)" in out
    assert "verdict=FAIL" in out


def test_main_config_errors_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.yaml"
    bad.write_text("bounds: {wmax: 2, pmax: 0}\nunexpected: 1\n", encoding="utf-8")
    assert free_courant.main(["dims", str(bad)]) == free_courant.EXIT_CONFIG
    broken = tmp_path / "broken.yaml"
    broken.write_text("bounds: [wmax\n", encoding="utf-8")
    assert free_courant.main(["dims", str(broken)]) == free_courant.EXIT_CONFIG
    assert free_courant.main(["dims", str(tmp_path / "missing.yaml")]) == free_courant.EXIT_CONFIG
    assert "config error" in capsys.readouterr().err


def test_main_syntax_error_in_expression_exits_two(capsys):
    assert free_courant.main(["expand", _config("expand.yaml"), "[(e1), (e9)]"]) == free_courant.EXIT_CONFIG


def test_main_truncation_exits_three(capsys):
    code = free_courant.main(["expand", _config("expand.yaml"), "[ (e1)⊗(e2), (e3)⊗(e1) ]"])
    assert code == free_courant.EXIT_TRUNCATION
    assert "TruncationOverflow" in capsys.readouterr().err


def test_main_universal_into_structure_constants(capsys):
    argv = [
        "universal",
        _config("sc_nilpotent2.yaml"),
        "--target",
        f"sc:{CONFIGS / 'sc' / 'nilpotent2.yaml'}",
        "--map",
        str(CONFIGS / "maps" / "sc_identity.yaml"),
    ]
    assert free_courant.main(argv) == free_courant.EXIT_PASS
    out = capsys.readouterr().out
    assert "== universal morphism" in out


def test_wmax_flag_overrides_the_config(capsys):
    assert free_courant.main(["dims", _config("zero_anchor.yaml"), "--wmax", "2"]) == free_courant.EXIT_PASS
    out = capsys.readouterr().out
    assert "command=dims config=zero_anchor.yaml wmax=2 pmax=0 seed=0" in out
    assert "weight=2 dim_free=4" in out
    assert "weight=3" not in out


@pytest.mark.parametrize("suites", ["all", ["leibniz", "module"]])
def test_suite_lists(suites):
    cfg = EngineConfig.from_mapping({"bounds": {"wmax": 1, "pmax": 0}, "checks": {"suites": suites}})
    assert set(cfg.checks.suites) <= set(SUITES)
    assert cfg.bounds.pair_bounds() is None


def test_main_quotient_reports_saturation(tmp_path, capsys):
    cfg = tmp_path / "small.yaml"
    cfg.write_text(
        "module: {vars: [x], generators: [e], anchor: [['1']]}\n"
        "bounds: {wmax: 3, pmax: 3}\n"
        "checks: {suites: all, sample_limit: 300}\n",
        encoding="utf-8",
    )
    assert free_courant.main(["quotient", str(cfg)]) == free_courant.EXIT_PASS
    out = capsys.readouterr().out
    assert "== saturation" in out
    assert "anchor_on_relations" in out


def test_main_courant_on_structure_constants(capsys):
    assert free_courant.main(["courant", _config("sc_nilpotent2.yaml")]) == free_courant.EXIT_PASS
    out = capsys.readouterr().out
    assert "inv_generators=" in out
    assert "== square lemmas" in out


def test_main_courant_refuses_a_non_symmetric_base(capsys):
    argv = ["courant", _config("two_generators.yaml"), "--wmax", "2", "--pmax", "2"]
    assert free_courant.main(argv) == free_courant.EXIT_FAIL
    assert "not built" in capsys.readouterr().out


def test_main_courant_marks_vacuous_checks(capsys):
    argv = ["courant", _config("anchor_dx.yaml"), "--wmax", "2", "--pmax", "1"]
    assert free_courant.main(argv) == free_courant.EXIT_PASS
    lines = _stdout_lines(capsys)
    assert any(line.startswith("pair_bounds=(2,1) ") for line in lines)
    assert any(line.startswith("vvw ") and " VACUOUS " in line for line in lines)
    assert lines[-3].startswith("vacuous_checks=")
    assert lines[-2] == "verdict=PASS"


def test_main_universal_rejects_a_polynomial_module_into_structure_constants(tmp_path, capsys):
    mapping = tmp_path / "into_sc.yaml"
    mapping.write_text("images: {e: 'e1'}\n", encoding="utf-8")
    argv = [
        "universal",
        _config("anchor_dx.yaml"),
        "--wmax",
        "1",
        "--pmax",
        "0",
        "--target",
        f"sc:{CONFIGS / 'sc' / 'nilpotent2.yaml'}",
        "--map",
        str(mapping),
    ]
    assert free_courant.main(argv) == free_courant.EXIT_CONFIG
    assert "AlgebraMismatch" in capsys.readouterr().err
