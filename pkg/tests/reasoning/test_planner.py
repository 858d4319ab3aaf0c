"""
Planner: consistent-plan checks, goal satisfaction, canonical search,
nonexistence certificates and plan terms.
"""

import json
from dataclasses import replace

import pytest

from fixtures.kernel import formula, kb, signature
from tentacle.errors import HorizonTooLarge, MalformedPlanTerm
from tentacle.eventcalc.axioms import axioms
from tentacle.eventcalc.narrative import Narrative, completion
from tentacle.kernel.knowledge import KnowledgeBase
from tentacle.kernel.parser import parse_formula
from tentacle.kernel.printer import pretty
from tentacle.kernel.substitution import alpha_equivalent
from tentacle.planner.catalog import (
    CatalogEntry, can_entry, candidate_count, catalog_from, catalog_pairs, enumerate_candidates,
)
from tentacle.planner.certificate import (
    INCONSISTENT, MISSING_CAN, NOT_ENTAILED, check_certificate, dump_certificate, load_certificate,
)
from tentacle.planner.oracle import brute_force
from tentacle.planner.plans import Plan, PlanStep, interpret, nonexistence_says, plan_says, reify
from tentacle.planner.search import (
    PlanFound, PlanningProblem, is_consistent_plan, plan_base, satisfies, search,
)
from tentacle.prover.checker import check, check_refutation

pytestmark = pytest.mark.reasoning

CAN_A = "(forall (t Moment) (can a alpha t))"
CAN_B = "(forall (t Moment) (can b beta t))"
RELAY = ("(forall (u Moment) (forall (v Moment) (implies (and (happens (action a alpha) u)"
         " (happens (action b beta) v) (prior u v)) q)))")


def _step(sig, agent, action, time):
    return PlanStep(sig.constant(agent), sig.constant(action), time)


def _relay_problem(*formulas, **overrides):
    gamma = kb(*(formulas or (CAN_A, CAN_B, RELAY)))
    sig = gamma.signature
    fields = dict(gamma=gamma, planner=sig.constant("a"), goal=formula("q", sig), time=0,
                  pool=(sig.constant("a"), sig.constant("b")))
    fields.update(overrides)
    return PlanningProblem(**fields)


# --- consistent plans ----------------------------------------------------------

def test_capable_step_is_a_consistent_plan():
    gamma = kb(CAN_A)
    plan = Plan((_step(gamma.signature, "a", "alpha", 1),), 0)
    assert is_consistent_plan(plan, gamma)


def test_missing_capability_names_the_step():
    gamma = kb(CAN_A)
    sig = gamma.signature
    plan = Plan((_step(sig, "a", "alpha", 1), _step(sig, "b", "beta", 2)), 0)
    verdict = is_consistent_plan(plan, gamma)
    assert not verdict
    assert verdict.reason == MISSING_CAN
    assert verdict.step == _step(sig, "b", "beta", 2)


def test_prohibited_step_is_inconsistent_with_a_refutation():
    gamma = kb(CAN_A, "(forall (t Moment) (not (happens (action a alpha) t)))")
    plan = Plan((_step(gamma.signature, "a", "alpha", 1),), 0)
    verdict = is_consistent_plan(plan, gamma)
    assert verdict.reason == INCONSISTENT
    assert check_refutation(verdict.refutation, verdict.base)


def test_empty_plan_is_always_consistent():
    assert is_consistent_plan(Plan((), 3), kb())


def test_stepwise_check_finds_the_same_clash():
    gamma = kb(CAN_A, CAN_B, "(not (happens (action b beta) 2))")
    sig = gamma.signature
    plan = Plan((_step(sig, "a", "alpha", 1), _step(sig, "b", "beta", 2)), 0)
    joint = is_consistent_plan(plan, gamma)
    stepwise = is_consistent_plan(plan, gamma, stepwise=True)
    assert joint.reason == stepwise.reason == INCONSISTENT


# --- satisfaction --------------------------------------------------------------

def test_initiated_fluent_satisfies_the_goal():
    sig = signature()
    gamma = kb(CAN_A, "(initiates (action a alpha) f1 1)", sig=sig)
    gamma = gamma.extend(axioms(), prefix="axiom")
    narrative = Narrative.from_formulas(gamma.formulas)
    gamma = gamma.extend(completion(narrative, 3), prefix="closed")
    plan = Plan((_step(sig, "a", "alpha", 1),), 0)
    proof = satisfies(plan, gamma, formula("(holds f1 2)", sig))
    assert proof
    assert check(proof, plan_base(gamma, plan))
    assert not satisfies(Plan((), 0), gamma, formula("(holds f1 2)", sig))


def test_satisfaction_needs_the_steps_in_order():
    problem = _relay_problem()
    sig = problem.gamma.signature
    backwards = Plan((_step(sig, "b", "beta", 1), _step(sig, "a", "alpha", 2)), 0)
    forwards = Plan((_step(sig, "a", "alpha", 1), _step(sig, "b", "beta", 2)), 0)
    assert not satisfies(backwards, problem.gamma, problem.goal)
    assert satisfies(forwards, problem.gamma, problem.goal)


# --- search and certificates -----------------------------------------------------

def test_solo_search_certifies_nonexistence():
    problem = _relay_problem()
    solo = search(problem.restricted((problem.planner,)))
    assert not isinstance(solo, PlanFound)
    assert solo.count == candidate_count(1, 3, 3) == 8
    assert len(solo.records) == 8
    assert solo.reasons() == {NOT_ENTAILED: 8}
    assert solo.agents == (problem.planner,)
    assert check_certificate(solo, problem.base())


def test_joint_search_finds_the_canonical_first_plan():
    problem = _relay_problem()
    sig = problem.gamma.signature
    found = search(problem)
    assert isinstance(found, PlanFound)
    assert found.plan.steps == (_step(sig, "a", "alpha", 1), _step(sig, "b", "beta", 2))
    assert found.plan.agents == (sig.constant("a"), sig.constant("b"))
    assert check(found.proof, found.kb)
    assert found.examined > 1


def test_stepwise_search_agrees():
    plain = search(_relay_problem())
    stepwise = search(_relay_problem(stepwise=True))
    assert stepwise.plan == plain.plan


def test_oracle_agrees_with_search():
    problem = _relay_problem()
    assert brute_force(problem) is not None
    assert brute_force(problem.restricted((problem.planner,))) is None


def test_already_true_goal_gives_the_empty_plan():
    problem = _relay_problem(CAN_A, "q")
    found = search(problem)
    assert isinstance(found, PlanFound)
    assert found.plan.steps == ()
    assert found.examined == 1


def test_explicit_catalog_limits_the_search():
    problem = _relay_problem()
    sig = problem.gamma.signature
    only_a = (CatalogEntry(sig.constant("a"), sig.constant("alpha")),)
    result = search(replace(problem, catalog=only_a))
    assert not isinstance(result, PlanFound)
    assert result.count == 8


def test_constraints_join_the_planning_base():
    problem = _relay_problem()
    sig = problem.gamma.signature
    ban = parse_formula("(not (happens (action b beta) 2))", sig)
    found = search(replace(problem, constraints=(ban,)))
    assert found.plan.steps == (_step(sig, "a", "alpha", 1), _step(sig, "b", "beta", 3))


def test_horizon_ceiling():
    problem = _relay_problem(ceiling=5)
    with pytest.raises(HorizonTooLarge) as info:
        search(problem)
    assert info.value.count == 1 + 3 * 2 + 3 * 4 + 8
    assert info.value.ceiling == 5


def test_candidate_counts():
    assert candidate_count(0, 3, 3) == 1
    assert candidate_count(3, 3, 3) == 64
    assert candidate_count(4, 3, 3) == 125
    assert candidate_count(5, 3, 3) == 216
    assert candidate_count(2, 1, 3) == 3


def test_canonical_enumeration_order():
    sig = signature()
    pairs = [(sig.constant("a"), sig.constant("alpha")), (sig.constant("b"), sig.constant("beta"))]
    plans = list(enumerate_candidates(pairs, 0, 2, 2))
    assert len(plans) == candidate_count(2, 2, 2)
    assert plans[0].steps == ()
    assert [p.describe() for p in plans[1:5]] == [
        "[(a, alpha, 1)]", "[(a, alpha, 2)]", "[(b, beta, 1)]", "[(b, beta, 2)]",
    ]
    assert plans[5].describe() == "[(a, alpha, 1), (a, alpha, 2)]"


def test_catalog_pairs_follow_the_pool_order():
    sig = signature()
    formulas = [parse_formula(text, sig) for text in (CAN_B, CAN_A, "(can a beta 2)", "p")]
    pool = (sig.constant("a"), sig.constant("b"))
    catalog = catalog_from(formulas, pool)
    assert len(catalog) == 3
    assert catalog[2].time == 2
    assert [pretty(x) for _, x in catalog_pairs(catalog, pool)] == ["beta", "alpha", "beta"]
    assert catalog_from(formulas, (sig.constant("b"),)) == catalog[:1]
    assert can_entry(parse_formula("(can a alpha ?t:Moment)", sig)) is None


def test_certificate_file_round_trip_and_tampering():
    problem = _relay_problem()
    sig = problem.gamma.signature
    cert = search(problem.restricted((problem.planner,)))
    text = dump_certificate(cert)
    loaded = load_certificate(text, sig)
    assert loaded.count == cert.count
    assert loaded.records == cert.records
    assert check_certificate(loaded, problem.base())

    lines = text.splitlines()
    header = json.loads(lines[0])
    header["count"] = 7
    bad_count = load_certificate("\n".join([json.dumps(header)] + lines[1:]), sig)
    assert not check_certificate(bad_count, problem.base())

    record = json.loads(lines[3])
    record["reason"] = MISSING_CAN
    record["step"] = 0
    lines[3] = json.dumps(record)
    bad_reason = load_certificate("\n".join(lines), sig)
    verdict = check_certificate(bad_reason, problem.base())
    assert not verdict
    assert any("record 2" in line for line in verdict.problems)


def test_certificate_against_a_base_where_the_goal_is_provable():
    problem = _relay_problem()
    cert = search(problem.restricted((problem.planner,)))
    richer = problem.gamma.extend([formula("q", problem.gamma.signature)])
    assert not check_certificate(cert, richer)


def test_certificate_with_inconsistent_records_rechecks_refutations():
    gamma = kb(CAN_A, "(forall (t Moment) (not (happens (action a alpha) t)))")
    sig = gamma.signature
    problem = PlanningProblem(gamma, sig.constant("a"), formula("q", sig), 0, (sig.constant("a"),),
                              horizon=2, max_steps=1)
    cert = search(problem)
    assert cert.reasons() == {NOT_ENTAILED: 1, INCONSISTENT: 2}
    again = load_certificate(dump_certificate(cert), sig)
    assert check_certificate(again, gamma)


# --- plan terms ----------------------------------------------------------------

def test_reify_and_interpret():
    sig = signature()
    plan = Plan((_step(sig, "a", "alpha", 2), _step(sig, "b", "beta", 4)), 1)
    term = reify(plan)
    assert term.sort.name == "Plan"
    assert interpret(term) == plan
    empty = Plan((), 7)
    assert interpret(reify(empty)) == empty


def test_malformed_plans():
    sig = signature()
    with pytest.raises(MalformedPlanTerm):
        Plan((_step(sig, "a", "alpha", 2), _step(sig, "b", "beta", 2)), 0)
    with pytest.raises(MalformedPlanTerm):
        Plan((_step(sig, "a", "alpha", 0),), 0)
    with pytest.raises(MalformedPlanTerm):
        interpret(sig.constant("a"))


def test_declarations_are_well_sorted_formulas():
    problem = _relay_problem()
    sig = problem.gamma.signature
    plan = search(problem).plan
    says = plan_says(problem.planner, 0, plan, problem.goal)
    none = nonexistence_says(problem.planner, 0, 3, problem.goal)
    base = KnowledgeBase(sig)
    base.add(says)
    base.add(none)
    for declaration in (says, none):
        assert alpha_equivalent(parse_formula(pretty(declaration), sig), declaration)
    assert "(plan-step a alpha 1 (plan-step b beta 2 (plan-end 0)))" in pretty(says)
    assert "(within rho 3)" in pretty(none)


def test_plan_declaration_always_lists_the_planner():
    problem = _relay_problem()
    sig = problem.gamma.signature
    helper_only = Plan((_step(sig, "b", "beta", 2),), 0)
    says = plan_says(problem.planner, 0, helper_only, problem.goal)
    assert "(plan (plan-step b beta 2 (plan-end 0)) (agents-cons a (agents-cons b agents-nil)))" in pretty(says)

    empty = plan_says(problem.planner, 0, Plan((), 0), problem.goal)
    assert "(plan (plan-end 0) (agents-cons a agents-nil))" in pretty(empty)

    joint = plan_says(problem.planner, 0, search(problem).plan, problem.goal)
    assert "(agents-cons a (agents-cons b agents-nil))" in pretty(joint)
