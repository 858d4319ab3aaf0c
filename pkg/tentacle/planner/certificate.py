"""
Bounded nonexistence certificates.

A certificate claims that no candidate over the restricted agents' catalog,
at most `max_steps` long, inside (time, time+horizon], is a plan for the
goal. It lists every candidate with the reason it failed, in canonical
order, so a checker can re-enumerate and re-verify each line on its own.

File format (JSON lines): one header record, then one record per candidate
    {"index", "plan": [[agent, action, time], ...], "reason", ...}
where reason is missing-can (with "step"), inconsistent (with the
"refutation" as proof node records) or not-entailed (with "exhausted").
"""

import json
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from tentacle.errors import ArtifactError, InputError
from tentacle.kernel.formulas import Formula
from tentacle.kernel.knowledge import KnowledgeBase
from tentacle.kernel.parser import parse_formula, parse_term
from tentacle.kernel.printer import pretty
from tentacle.kernel.signature import Signature
from tentacle.kernel.terms import Term
from tentacle.kernel.vocabulary import can
from tentacle.planner.catalog import (
    CatalogEntry, candidate_count, catalog_hash, catalog_pairs, enumerate_candidates,
)
from tentacle.planner.plans import Plan, PlanStep
from tentacle.prover.checker import check_refutation
from tentacle.prover.rules import Budget, Proof
from tentacle.prover.search import Prover
from tentacle.prover.serialize import build_proof, proof_records

logger = logging.getLogger(__name__)

FORMAT = 1

MISSING_CAN = "missing-can"
INCONSISTENT = "inconsistent"
NOT_ENTAILED = "not-entailed"


@dataclass(frozen=True)
class CandidateRecord:
    plan: Plan
    reason: str
    step: Optional[PlanStep] = None
    refutation: Optional[Proof] = None
    exhausted: Optional[str] = None


@dataclass(frozen=True)
class NonexistenceCertificate:
    goal: Formula
    planner: Term
    agents: Tuple[Term, ...]
    horizon: int
    time: int
    max_steps: int
    catalog: Tuple[CatalogEntry, ...]
    catalog_hash: str
    count: int
    budget: Budget
    records: Tuple[CandidateRecord, ...]
    stepwise: bool = False

    def __bool__(self):
        return False

    def reasons(self) -> dict:
        tally: dict = {}
        for record in self.records:
            tally[record.reason] = tally.get(record.reason, 0) + 1
        return tally


@dataclass
class CertificateCheck:
    problems: List[str] = field(default_factory=list)

    def __bool__(self):
        return not self.problems


# --- writing ---------------------------------------------------------------

def _plan_record(plan: Plan) -> list:
    return [[pretty(s.agent), pretty(s.action), s.time] for s in plan.steps]


def dump_certificate(cert: NonexistenceCertificate) -> str:
    header = {
        "kind": "certificate",
        "format": FORMAT,
        "goal": pretty(cert.goal),
        "planner": pretty(cert.planner),
        "agents": [pretty(a) for a in cert.agents],
        "horizon": cert.horizon,
        "time": cert.time,
        "max_steps": cert.max_steps,
        "catalog": [entry.record() for entry in cert.catalog],
        "catalog_hash": cert.catalog_hash,
        "count": cert.count,
        "budget": cert.budget.to_record(),
        "stepwise": cert.stepwise,
    }
    lines = [json.dumps(header, ensure_ascii=False)]
    for index, record in enumerate(cert.records):
        line = {"index": index, "plan": _plan_record(record.plan), "reason": record.reason}
        if record.step is not None:
            line["step"] = list(record.plan.steps).index(record.step)
        if record.refutation is not None:
            line["refutation"] = proof_records(record.refutation)
        if record.exhausted is not None:
            line["exhausted"] = record.exhausted
        lines.append(json.dumps(line, ensure_ascii=False))
    return "\n".join(lines) + "\n"


# --- reading ---------------------------------------------------------------

def load_certificate(text: str, signature: Signature) -> NonexistenceCertificate:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ArtifactError("Certificate file is empty")
    try:
        header = json.loads(lines[0])
        body = [json.loads(line) for line in lines[1:]]
    except json.JSONDecodeError as exc:
        raise ArtifactError(f"Certificate file is not JSON lines: {exc}")
    if header.get("kind") != "certificate" or header.get("format") != FORMAT:
        raise ArtifactError("Not a certificate file (bad header)")

    try:
        term = lambda text: parse_term(text, signature)  # noqa: E731
        time = header["time"]
        catalog = tuple(CatalogEntry(term(a), term(x), t) for a, x, t in header["catalog"])
        records = []
        for line in body:
            steps = tuple(PlanStep(term(a), term(x), t) for a, x, t in line["plan"])
            plan = Plan(steps, time)
            step = steps[line["step"]] if "step" in line else None
            refutation = None
            if "refutation" in line:
                refutation = build_proof(line["refutation"], 0, signature)
            records.append(CandidateRecord(plan, line["reason"], step, refutation, line.get("exhausted")))
        return NonexistenceCertificate(
            goal=parse_formula(header["goal"], signature),
            planner=term(header["planner"]),
            agents=tuple(term(a) for a in header["agents"]),
            horizon=header["horizon"],
            time=time,
            max_steps=header["max_steps"],
            catalog=catalog,
            catalog_hash=header["catalog_hash"],
            count=header["count"],
            budget=Budget.from_record(header["budget"]),
            records=tuple(records),
            stepwise=header.get("stepwise", False),
        )
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise ArtifactError(f"Malformed certificate: {exc!r}")
    except InputError as exc:
        if isinstance(exc, ArtifactError):
            raise
        raise ArtifactError(f"Certificate does not parse against the knowledge base: {exc}")


# --- checking --------------------------------------------------------------

def check_certificate(cert: NonexistenceCertificate, base: KnowledgeBase) -> CertificateCheck:
    """
    Re-verify a certificate against the planning base it was produced from:
    catalog restriction and hash, the combinatorial count, the canonical
    enumeration, and every candidate's failure reason.
    """
    from tentacle.planner.search import plan_base, satisfies

    result = CertificateCheck()
    problem = result.problems.append

    outside = [pretty(e.agent) for e in cert.catalog if e.agent not in cert.agents]
    if outside:
        problem(f"catalog mentions agents outside the restricted set: {', '.join(outside)}")
        return result
    if catalog_hash(cert.catalog) != cert.catalog_hash:
        problem("catalog hash does not match the catalog")
    pairs = catalog_pairs(cert.catalog, cert.agents)
    expected = candidate_count(len(pairs), cert.horizon, cert.max_steps)
    if cert.count != expected:
        problem(f"count {cert.count} differs from the combinatorial count {expected}")
    if len(cert.records) != expected:
        problem(f"{len(cert.records)} candidate records, expected {expected}")
        return result

    can_prover = Prover(base, cert.budget)
    candidates = enumerate_candidates(pairs, cert.time, cert.horizon, cert.max_steps)
    for index, (plan, record) in enumerate(zip(candidates, cert.records)):
        if record.plan != plan:
            problem(f"record {index} lists {record.plan.describe()}, expected {plan.describe()}")
            continue
        if record.reason == MISSING_CAN:
            step = record.step
            if step is None or step not in plan.steps:
                problem(f"record {index}: missing-can without a step of the plan")
            elif can_prover.prove(can(step.agent, step.action, step.time)):
                problem(f"record {index}: can{step.describe()} is provable")
        elif record.reason == INCONSISTENT:
            if record.refutation is None:
                problem(f"record {index}: inconsistent without a refutation")
                continue
            verdict = check_refutation(record.refutation, plan_base(base, plan))
            if not verdict:
                problem(f"record {index}: refutation rejected ({verdict.reason} at {verdict.path})")
        elif record.reason == NOT_ENTAILED:
            if satisfies(plan, base, cert.goal, cert.budget):
                problem(f"record {index}: the goal is provable for {plan.describe()}")
        else:
            problem(f"record {index}: unknown reason {record.reason!r}")

    if result.problems:
        logger.info("[Certificate] rejected: %s", result.problems[0])
    else:
        logger.info("[Certificate] accepted: %d candidates re-verified", expected)
    return result
