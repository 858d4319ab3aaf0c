"""
Smoke: the command line, exit codes, and artifacts re-verified from disk.
"""

import json
import os

import pytest

from fixtures.kernel import BASE_SIGNATURE
from fixtures.scenarios import CAN_A, CAN_B, RELAY_SCENARIO, scenario_path
from tentacle.cli import main

pytestmark = pytest.mark.smoke


def _write(path, text):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)
    return path


@pytest.fixture
def relay_file(artifact_dir):
    text = RELAY_SCENARIO.format(mode="level1") + f"(formula {CAN_A})\n(formula {CAN_B})\n"
    return _write(os.path.join(artifact_dir, "relay.tai"), text)


@pytest.fixture
def knowledge_file(artifact_dir):
    text = BASE_SIGNATURE + "(formula (K a 1 p))\n(formula (K a 1 (implies p q)))\n"
    return _write(os.path.join(artifact_dir, "knowledge.tai"), text)


def test_check_exit_codes(artifact_dir, capsys):
    assert main(["check", scenario_path("storm")]) == 0
    assert "0 error(s)" in capsys.readouterr().out

    bad = _write(os.path.join(artifact_dir, "bad.tai"), BASE_SIGNATURE + "(formula (holds 3 f1))\n")
    assert main(["check", bad, "--format", "structured"]) == 1
    records = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert records[0]["kind"] == "error"
    assert "SortError" in records[0]["message"]
    assert records[0]["line"] == BASE_SIGNATURE.count("\n") + 1
    assert records[-1] == {"kind": "summary", "file": bad, "formulas": 0, "errors": 1}

    assert main(["check", os.path.join(artifact_dir, "missing.tai")]) == 2


def test_prove_and_verify(knowledge_file, artifact_dir, capsys):
    proof = os.path.join(artifact_dir, "q.proof.jsonl")
    assert main(["prove", knowledge_file, "(K a 2 q)", "--emit-proof", proof]) == 0
    assert "proved (K a 2 q)" in capsys.readouterr().out
    assert main(["verify", proof, knowledge_file]) == 0
    assert capsys.readouterr().out.startswith("accept")

    assert main(["prove", knowledge_file, "(K b 2 q)"]) == 1
    assert main(["prove", knowledge_file, "(K a 2 nonsense)"]) == 2


def test_mutated_proof_is_rejected(knowledge_file, artifact_dir, capsys):
    proof = os.path.join(artifact_dir, "q.proof.jsonl")
    assert main(["prove", knowledge_file, "(K a 2 q)", "--emit-proof", proof]) == 0
    with open(proof, encoding="utf-8") as handle:
        lines = handle.read().splitlines()
    record = json.loads(lines[-1])
    record["conclusion"] = "r"
    lines[-1] = json.dumps(record)
    mutated = _write(os.path.join(artifact_dir, "mutated.proof.jsonl"), "\n".join(lines) + "\n")
    capsys.readouterr()
    assert main(["verify", mutated, knowledge_file]) == 1
    assert capsys.readouterr().out.startswith("reject at root")

    garbage = _write(os.path.join(artifact_dir, "garbage.jsonl"), "not json\n")
    assert main(["verify", garbage, knowledge_file]) == 2


def test_plan_with_and_without_helpers(relay_file, artifact_dir, capsys):
    assert main(["plan", relay_file, "q", "--agent", "a", "--format", "structured"]) == 0
    record = json.loads(capsys.readouterr().out.splitlines()[-1])
    assert record["found"] is True
    assert record["steps"] == [["a", "alpha", 1], ["b", "beta", 2]]

    cert = os.path.join(artifact_dir, "solo.cert.jsonl")
    assert main(["plan", relay_file, "q", "--agent", "a", "--pool", "a",
                 "--certify-nonexistence", cert]) == 1
    assert "8 candidates" in capsys.readouterr().out
    assert main(["verify", cert, relay_file]) == 0

    assert main(["plan", relay_file, "q", "--agent", "kitchen"]) == 2


def test_plan_over_the_ceiling_is_a_planning_failure(relay_file):
    assert main(["plan", relay_file, "q", "--horizon", "40"]) == 1


def test_run_writes_verifiable_artifacts(artifact_dir, capsys):
    out = os.path.join(artifact_dir, "monoxide")
    assert main(["run", scenario_path("monoxide"), "--out", out]) == 0
    printed = capsys.readouterr().out
    with open(os.path.join(out, "transcript.txt"), encoding="utf-8") as handle:
        assert handle.read() == printed

    artifacts = sorted(f for f in os.listdir(out) if f.endswith((".proof.jsonl", ".cert.jsonl")))
    assert len(artifacts) == 4
    for name in artifacts:
        stem = name.rsplit(".", 2)[0]
        kb = os.path.join(out, stem + ".kb.tai")
        print(f"\n[Smoke] verifying {name}")
        assert main(["verify", os.path.join(out, name), kb]) == 0, name


def test_run_empty_scenario(artifact_dir, capsys):
    out = os.path.join(artifact_dir, "empty")
    assert main(["run", scenario_path("empty"), "--out", out, "--format", "structured"]) == 0
    assert capsys.readouterr().out == ""
    assert os.path.exists(os.path.join(out, "transcript.jsonl"))
