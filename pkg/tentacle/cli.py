"""
Command-line front end.

    tai check FILE
    tai prove FILE GOAL [--emit-proof PATH]
    tai plan FILE GOAL [--agent A] [--pool A,B] [--at T] [--certify-nonexistence PATH]
    tai run SCENARIO [--out DIR] [--ticks N]
    tai verify ARTIFACT KB

Exit codes: 0 success, 1 verification or planning failure, 2 input error.
"""

import argparse
import json
import logging
import os
import sys
from typing import List, Optional

from tentacle.agents.runtime import run_world
from tentacle.agents.state import World
from tentacle.errors import ArtifactError, InputError, TentacleError
from tentacle.kernel.parser import parse_formula
from tentacle.kernel.printer import pretty
from tentacle.kernel.sorts import AGENT
from tentacle.planner.certificate import check_certificate, dump_certificate, load_certificate
from tentacle.planner.search import PlanFound, PlanningProblem, search
from tentacle.prover.checker import check
from tentacle.prover.rules import Budget
from tentacle.prover.search import Prover
from tentacle.prover.serialize import dump_proof, load_proof
from tentacle.scenario import Scenario, build_world, dump_kb, load_kb, load_scenario
from utils.file_lock import AtomicLock
from utils.logs import setup_logging
from utils.settings import Settings, load_settings

logger = logging.getLogger(__name__)

OK, FAILED, BAD_INPUT = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget-depth", type=int, help="Prover depth budget")
    common.add_argument("--budget-size", type=int, help="Prover proof-size budget")
    common.add_argument("--budget-candidates", type=int, help="Instantiation candidates per quantifier")
    common.add_argument("--horizon", type=int, help="Planning horizon in moments")
    common.add_argument("--seed", type=int, default=0, help="Run seed (recorded; runs are deterministic)")
    common.add_argument("--format", choices=("human", "structured"), default="human",
                        help="human narrative or JSON lines on stdout")
    common.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")

    parser = argparse.ArgumentParser(prog="tai", description="Tentacular planning engine")
    commands = parser.add_subparsers(dest="command", required=True)

    check_cmd = commands.add_parser("check", parents=[common], help="Parse and sort-check a file")
    check_cmd.add_argument("file")

    prove_cmd = commands.add_parser("prove", parents=[common], help="Prove a goal from a knowledge base")
    prove_cmd.add_argument("file")
    prove_cmd.add_argument("goal")
    prove_cmd.add_argument("--emit-proof", metavar="PATH")

    plan_cmd = commands.add_parser("plan", parents=[common], help="Search for a plan reaching a goal")
    plan_cmd.add_argument("file")
    plan_cmd.add_argument("goal")
    plan_cmd.add_argument("--agent", help="Planning agent (default: first declared agent)")
    plan_cmd.add_argument("--pool", help="Comma-separated agent pool (default: every agent)")
    plan_cmd.add_argument("--at", type=int, default=0, help="Planning moment")
    plan_cmd.add_argument("--stepwise", action="store_true", help="Check consistency step by step")
    plan_cmd.add_argument("--emit-proof", metavar="PATH")
    plan_cmd.add_argument("--certify-nonexistence", metavar="PATH")

    run_cmd = commands.add_parser("run", parents=[common], help="Execute a scenario")
    run_cmd.add_argument("scenario")
    run_cmd.add_argument("--out", help="Artifacts directory (default: TAI_ARTIFACT_DIR)")
    run_cmd.add_argument("--ticks", type=int)

    verify_cmd = commands.add_parser("verify", parents=[common], help="Check a proof or certificate file")
    verify_cmd.add_argument("artifact")
    verify_cmd.add_argument("kb")
    return parser


# --- helpers -------------------------------------------------------------------

def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"Cannot read {path}: {exc.strerror}")


def _write(path: str, text: str):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def _emit(args, text: str, record: dict):
    if args.format == "structured":
        print(json.dumps(record, ensure_ascii=False))
    else:
        print(text)


def _overrides(args) -> dict:
    return {
        "budget_depth": args.budget_depth,
        "budget_size": args.budget_size,
        "budget_candidates": args.budget_candidates,
        "horizon": args.horizon,
    }


def _settings(args, scenario: Optional[Scenario] = None) -> Settings:
    settings = load_settings()
    if scenario is not None:
        settings = settings.with_overrides(**scenario.config)
    return settings.with_overrides(**_overrides(args))


def _agent_names(scenario: Scenario) -> List[str]:
    if scenario.agents:
        return list(scenario.agents)
    return [c.name for c in scenario.signature.constants_of(AGENT)]


def _agent(scenario: Scenario, name: str):
    constant = scenario.signature.constant(name)
    if not constant.sort.is_subsort_of(AGENT):
        raise InputError(f"'{name}' is not an Agent")
    return constant


# --- commands ------------------------------------------------------------------

def cmd_check(args) -> int:
    text = _read(args.file)
    try:
        scenario = load_scenario(text, collect=True)
        errors = scenario.errors
        formulas = len(scenario.gamma)
    except InputError as exc:
        errors, formulas = [exc], 0
    for error in errors:
        _emit(args, f"{args.file}: {error}", {"kind": "error", "file": args.file, "message": str(error),
                                               "line": error.position.line if error.position else None,
                                               "column": error.position.column if error.position else None})
    summary = f"{args.file}: {formulas} formulas, {len(errors)} error(s)"
    _emit(args, summary, {"kind": "summary", "file": args.file, "formulas": formulas, "errors": len(errors)})
    return FAILED if errors else OK


def cmd_prove(args) -> int:
    scenario = load_scenario(_read(args.file))
    settings = _settings(args, scenario)
    goal = parse_formula(args.goal, scenario.signature)
    result = Prover(scenario.gamma, Budget.from_settings(settings)).prove(goal)
    if not result:
        _emit(args, f"no proof of {pretty(goal)} within budget (exhausted: {result.exhausted or 'none'})",
              {"kind": "prove", "goal": pretty(goal), "proved": False, "exhausted": result.exhausted})
        return FAILED
    verdict = check(result, scenario.gamma)
    if not verdict:
        logger.error("[CLI] checker rejected a prover proof: %s", verdict.reason)
        return FAILED
    if args.emit_proof:
        _write(args.emit_proof, dump_proof(result))
    _emit(args, f"proved {pretty(goal)} ({result.size} nodes, checked)",
          {"kind": "prove", "goal": pretty(goal), "proved": True, "nodes": result.size,
           "proof": args.emit_proof})
    return OK


def cmd_plan(args) -> int:
    scenario = load_scenario(_read(args.file))
    settings = _settings(args, scenario)
    names = _agent_names(scenario)
    planner_name = args.agent or (names[0] if names else None)
    if planner_name is None:
        raise InputError("No agents declared; pass --agent")
    pool_names = [n.strip() for n in args.pool.split(",") if n.strip()] if args.pool else names
    if planner_name not in pool_names:
        pool_names = [planner_name] + pool_names
    problem = PlanningProblem(
        gamma=scenario.gamma,
        planner=_agent(scenario, planner_name),
        goal=parse_formula(args.goal, scenario.signature),
        time=args.at,
        pool=tuple(_agent(scenario, n) for n in pool_names),
        horizon=settings.horizon,
        budget=Budget.from_settings(settings),
        max_steps=settings.max_plan_steps,
        ceiling=settings.plan_ceiling,
        stepwise=args.stepwise,
    )
    result = search(problem)
    if isinstance(result, PlanFound):
        if args.emit_proof:
            _write(args.emit_proof, dump_proof(result.proof))
            _write(args.emit_proof + ".kb.tai", dump_kb(result.kb))
        _emit(args, f"plan: {result.plan.describe()} ({result.examined} candidates examined)",
              {"kind": "plan", "goal": pretty(problem.goal), "found": True,
               "steps": [[pretty(s.agent), pretty(s.action), s.time] for s in result.plan.steps],
               "examined": result.examined, "proof": args.emit_proof})
        return OK
    if args.certify_nonexistence:
        _write(args.certify_nonexistence, dump_certificate(result))
    reasons = ", ".join(f"{k}={v}" for k, v in result.reasons().items())
    _emit(args, f"no plan for {pretty(problem.goal)} within horizon {problem.horizon}: "
                f"{result.count} candidates ({reasons})",
          {"kind": "plan", "goal": pretty(problem.goal), "found": False, "count": result.count,
           "reasons": result.reasons(), "certificate": args.certify_nonexistence})
    return FAILED


def write_artifacts(world: World, directory: str, timeout: float):
    """Transcript, final Γ, and every proof / certificate with the base it checks against."""
    with AtomicLock(directory, timeout):
        _write(os.path.join(directory, "transcript.txt"), world.transcript.text())
        _write(os.path.join(directory, "transcript.jsonl"), world.transcript.jsonl())
        _write(os.path.join(directory, "kb.tai"), dump_kb(world.gamma))
        for artifact in world.artifacts:
            if artifact.kind == "certificate":
                body, suffix = dump_certificate(artifact.payload), ".cert.jsonl"
            else:
                body, suffix = dump_proof(artifact.payload), ".proof.jsonl"
            _write(os.path.join(directory, artifact.name + suffix), body)
            _write(os.path.join(directory, artifact.name + ".kb.tai"), dump_kb(artifact.kb))
    logger.info("[CLI] wrote %d artifacts to %s", len(world.artifacts), directory)


def cmd_run(args) -> int:
    scenario = load_scenario(_read(args.scenario))
    settings = load_settings()
    world = build_world(scenario, settings, **_overrides(args))
    logger.info("[CLI] running %s with seed %d", args.scenario, args.seed)
    run_world(world, args.ticks)
    write_artifacts(world, args.out or world.settings.artifact_dir, world.settings.lock_timeout)
    if args.format == "structured":
        sys.stdout.write(world.transcript.jsonl())
    else:
        sys.stdout.write(world.transcript.text())
    return OK


def cmd_verify(args) -> int:
    kb = load_kb(_read(args.kb))
    text = _read(args.artifact)
    first = text.lstrip().split("\n", 1)[0]
    try:
        kind = json.loads(first).get("kind") if first else None
    except (json.JSONDecodeError, AttributeError):
        raise ArtifactError(f"{args.artifact} is not a proof or certificate file")

    if kind == "proof":
        verdict = check(load_proof(text, kb.signature), kb)
        if verdict:
            _emit(args, f"accept: {verdict.nodes} nodes", {"kind": "verify", "accepted": True,
                                                           "nodes": verdict.nodes})
            return OK
        _emit(args, f"reject at {verdict.path}: {verdict.reason}",
              {"kind": "verify", "accepted": False, "path": verdict.path, "reason": verdict.reason})
        return FAILED
    if kind == "certificate":
        result = check_certificate(load_certificate(text, kb.signature), kb)
        if result:
            _emit(args, "accept: certificate verified", {"kind": "verify", "accepted": True})
            return OK
        for problem in result.problems:
            _emit(args, f"reject: {problem}", {"kind": "verify", "accepted": False, "reason": problem})
        return FAILED
    raise ArtifactError(f"{args.artifact}: unknown artifact kind {kind!r}")


COMMANDS = {
    "check": cmd_check,
    "prove": cmd_prove,
    "plan": cmd_plan,
    "run": cmd_run,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        env_settings = load_settings()
        setup_logging(args.log_level or env_settings.log_level, env_settings.color)
        return COMMANDS[args.command](args)
    except TentacleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
