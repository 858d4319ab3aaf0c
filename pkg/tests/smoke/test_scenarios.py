"""
Smoke: the shipped scenarios run end to end and every artifact they leave
verifies against the knowledge base it was produced from.
"""

import pytest

from fixtures.scenarios import load_shipped, run_shipped, scenario_path
from tentacle.kernel.formulas import Believes
from tentacle.kernel.parser import parse_formula
from tentacle.kernel.printer import pretty
from tentacle.planner.certificate import check_certificate
from tentacle.prover.checker import check, check_refutation
from tentacle.prover.search import prove

pytestmark = pytest.mark.smoke

STORM_PLAN = "[(a_h, (req a_c (shopping j)), 9), (a_c, (recc (shopping j)), 10), (j, shop, 11)]"


def _verify_all(world):
    for artifact in world.artifacts:
        if artifact.kind == "certificate":
            verdict = check_certificate(artifact.payload, artifact.kb)
        elif artifact.kind == "refutation":
            verdict = check_refutation(artifact.payload, artifact.kb)
        else:
            verdict = check(artifact.payload, artifact.kb)
        assert verdict, f"{artifact.name} rejected"
    return len(world.artifacts)


def test_storm_run(storm_world):
    world = storm_world
    print(f"\n[Smoke] storm transcript:\n{world.transcript.text()}")

    goals = {(e.agent, e.text.split(" because ")[0]) for e in world.transcript.of_kind("goal")}
    assert ("a_h", "(forall (s Supply) (stocked s))") in goals

    plans = [e for e in world.transcript.of_kind("plan") if e.agent == "a_h"]
    assert [e.text for e in plans] == [STORM_PLAN]
    certificates = [e.text for e in world.transcript.of_kind("certificate") if e.agent == "a_h"]
    assert certificates[0].startswith("no solo plan: 8 candidates over {a_h}")

    execution = next(x for x in world.executions if x.agent == "a_h")
    assert {c.name for c in execution.plan.agents} == {"a_h", "a_c", "j"}
    complete = [e for e in world.transcript.of_kind("complete") if e.agent == "a_h"]
    assert [(e.tick, e.text) for e in complete] == [(11, "(forall (s Supply) (stocked s))")]
    # completion asserts nothing into Γ; the stocking rules live only in a_h's store
    stocked = parse_formula("(forall (s Supply) (stocked s))", world.gamma.signature)
    assert stocked not in world.gamma
    assert not prove(world.gamma, stocked)
    # a_c's warning reached a_h only because Γ entails it after the warn step
    warnings = [m for m in world.messages if pretty(m.agent) == "a_c" and pretty(m.body) == "storm"]
    assert warnings
    for says in warnings:
        assert prove(world.gamma, says)
        assert Believes(world.agents["a_h"].term, says.time, says.body) in world.agents["a_h"].store
    assert not world.transcript.of_kind("failure")
    assert not world.transcript.of_kind("divergence")


def test_storm_reconstructed_message_arrives_before_planning(storm_world):
    scenario = load_shipped("storm")
    told = parse_formula("(S a_p a_h 6 (not (shops j tomorrow)))", scenario.signature)
    assert [(e.tick, e.formula) for e in scenario.schedule if e.kind == "message"] == [(6, told)]
    plan_ticks = [e.tick for e in storm_world.transcript.of_kind("plan") if e.agent == "a_h"]
    assert plan_ticks and min(plan_ticks) > 6
    # the header says which parts of the story are encoded rather than quoted
    with open(scenario_path("storm"), encoding="utf-8") as handle:
        header = handle.read().split("(sort", 1)[0]
    for note in ("stocked s", "re-encoded as timed rules", "reconstruction"):
        assert note in header


def test_storm_artifacts_verify(storm_world):
    count = _verify_all(storm_world)
    print(f"\n[Smoke] {count} storm artifacts verified")
    assert count > 3


def test_monoxide_run(monoxide_world):
    world = monoxide_world
    print(f"\n[Smoke] monoxide transcript:\n{world.transcript.text()}")
    kinds = [e.kind for e in world.transcript.entries if e.agent == "tau"]
    assert kinds.index("goal") < kinds.index("suspension") < kinds.index("certificate") < kinds.index("plan")
    assert world.transcript.of_kind("certificate")[0].text.startswith("no solo plan: 64 candidates")
    plan = world.transcript.of_kind("plan")[0].text
    assert "(tv, blare, 3)" in plan
    kinds_of = [a.kind for a in world.artifacts]
    assert kinds_of == ["proof", "refutation", "certificate", "proof"]


def test_monoxide_artifacts_verify(monoxide_world):
    assert _verify_all(monoxide_world) == 4


def test_empty_scenario_runs_to_an_empty_transcript():
    world = run_shipped("empty")
    assert world.ticks == 0
    assert len(world.transcript) == 0
    assert world.transcript.text() == ""
    assert world.artifacts == []


def test_runs_are_deterministic(storm_world, monoxide_world):
    assert run_shipped("storm").transcript.text() == storm_world.transcript.text()
    assert run_shipped("monoxide").transcript.jsonl() == monoxide_world.transcript.jsonl()
