"""
Kernel: parsing, sort checking, substitution and knowledge bases.
"""

import pytest

from fixtures.kernel import BASE_SIGNATURE, formula, kb, signature, term
from fixtures.scenarios import load_shipped
from tentacle.errors import ScenarioSyntaxError, SignatureError, SortError, UnknownSymbol
from tentacle.kernel.formulas import Atom, Flavor, ForAll, Not, Ought, Says
from tentacle.kernel.knowledge import AXIOM, DERIVED, KnowledgeBase
from tentacle.kernel.moments import MomentOrder
from tentacle.kernel.parser import parse, parse_formula
from tentacle.kernel.printer import pretty
from tentacle.kernel.signature import Signature
from tentacle.kernel.sorts import ACTION, AGENT, EVENT, MOMENT
from tentacle.kernel.substitution import (
    alpha_equivalent, fresh_variable, instantiate, sort_of, substitute,
)
from tentacle.kernel.terms import Application, Variable, moment
from tentacle.scenario import load_scenario

pytestmark = pytest.mark.reasoning


# --- parsing and sorts -------------------------------------------------------

def test_action_is_an_event(sig):
    parsed = parse("(happens (action a alpha) 3)", sig)
    assert isinstance(parsed, Atom)
    event = parsed.term.args[0]
    assert sort_of(event) == ACTION
    assert sort_of(event).is_subsort_of(EVENT)
    assert parsed.term.args[1] == moment(3)


def test_boolean_terms_parse_as_atoms_and_others_as_terms(sig):
    assert isinstance(parse("p", sig), Atom)
    assert isinstance(parse("(clean kitchen)", sig), Atom)
    room = parse("kitchen", sig)
    assert not isinstance(room, Atom)
    assert room.sort.name == "Room"


def test_holds_with_swapped_arguments_is_a_sort_error(sig):
    with pytest.raises(SortError) as info:
        parse("(holds 3 f1)", sig)
    assert info.value.expected == "Fluent"
    assert info.value.found == "Moment"


def test_agent_where_an_event_is_expected(sig):
    with pytest.raises(SortError) as info:
        parse("(happens a 3)", sig)
    assert info.value.expected == "Event"
    assert info.value.found == "Agent"


def test_sort_error_carries_the_source_position():
    text = BASE_SIGNATURE + "\n(formula (holds 3 f1))"
    with pytest.raises(SortError) as info:
        load_scenario(text)
    position = info.value.position
    assert position.line == BASE_SIGNATURE.count("\n") + 2
    assert position.column == len("(formula (holds ") + 1


def test_unknown_symbol(sig):
    with pytest.raises(UnknownSymbol) as info:
        parse("(holds f9 1)", sig)
    assert info.value.name == "f9"


def test_modal_operands_are_sort_checked(sig):
    with pytest.raises(SortError):
        parse_formula("(K kitchen 1 p)", sig)
    with pytest.raises(SortError):
        parse_formula("(B a f1 p)", sig)


def test_wrong_arity(sig):
    with pytest.raises(ScenarioSyntaxError):
        parse("(holds f1)", sig)
    with pytest.raises(ScenarioSyntaxError):
        parse_formula("(not p q)", sig)


def test_formula_keyword_is_not_a_term(sig):
    with pytest.raises(SortError):
        parse("(clean (not p))", sig)


def test_plus_folds_integer_literals(sig):
    assert term("(+ 2 3)", sig) == moment(5)
    symbolic = term("(+ ?t:Moment 1)", sig)
    assert isinstance(symbolic, Application)
    assert symbolic.sort == MOMENT


def test_says_broadcast_and_addressed(sig):
    broadcast = parse_formula("(S a 2 p)", sig)
    addressed = parse_formula("(S a b 2 p)", sig)
    assert isinstance(broadcast, Says) and broadcast.audience is None
    assert addressed.audience == sig.constant("b")
    assert not alpha_equivalent(broadcast, addressed)


def test_ought_flavors_and_action_literal(sig):
    legal = parse_formula("(O-legal a 1 p (not (happens (action b alpha) 2)))", sig)
    assert isinstance(legal, Ought) and legal.flavor == Flavor.LEGAL
    literal = legal.action_literal()
    assert literal.positive is False
    assert literal.actor == sig.constant("b")
    assert literal.action_type == sig.constant("alpha")
    assert literal.time == moment(2)

    moral = parse_formula("(O-moral a 1 p (happens (action a beta) 3))", sig)
    assert moral.flavor == Flavor.MORAL and moral.action_literal().positive

    # any formula is accepted as the prescribed action; it just has no literal view
    loose = parse_formula("(O a 1 p (holds f1 2))", sig)
    assert loose.flavor == Flavor.UNFLAGGED
    assert loose.action_literal() is None


def test_storm_formulas_print_and_reparse():
    scenario = load_shipped("storm")
    sig = scenario.signature
    formulas = list(scenario.gamma.formulas)
    for decl in scenario.agents.values():
        formulas.extend(f for _, f in decl.contract)
        formulas.extend(f for _, f in decl.store)
    assert len(formulas) > 9
    for original in formulas:
        again = parse_formula(pretty(original), sig)
        assert alpha_equivalent(again, original), pretty(original)


# --- signatures --------------------------------------------------------------

def test_signature_rejects_reserved_and_duplicate_names():
    sig = Signature()
    sig.declare_constant("kettle", "Agent")
    for bad in ("not", "K", "O-legal", "holds", "Agent", "kettle", "42", "?x"):
        with pytest.raises(SignatureError):
            sig.declare_constant(bad, "Agent")


def test_frozen_signature():
    sig = signature().freeze()
    with pytest.raises(SignatureError):
        sig.declare_sort("Kitchenware")


def test_digit_names_are_moments(sig):
    assert sig.constant("17") == moment(17)
    assert sig.lookup("0") == moment(0)


def test_subsort_declarations():
    sig = signature("(sort Pantry Room)\n(constant larder Pantry)")
    parsed = parse("(clean larder)", sig)
    assert isinstance(parsed, Atom)


# --- substitution and alpha-equivalence -----------------------------------------

def test_substitute_a_constant(sig):
    x = Variable("x", sig.sort("Room"))
    body = formula("(implies (clean ?x:Room) (holds f1 1))", sig)
    result = substitute(body, {x: sig.constant("kitchen")})
    assert result == formula("(implies (clean kitchen) (holds f1 1))", sig)


def test_substitute_identity(sig):
    x = Variable("x", sig.sort("Room"))
    body = formula("(forall (y Room) (implies (clean ?x:Room) (clean y)))", sig)
    assert substitute(body, {x: x}) == body
    assert substitute(body, {}) == body


def test_substitution_avoids_capture(sig):
    x, y = Variable("x", AGENT), Variable("y", AGENT)
    body = formula("(forall (y Agent) (B y 1 (K ?x:Agent 1 p)))", sig)
    result = substitute(body, {x: y})
    assert isinstance(result, ForAll)
    assert result.var.name == "y_1"
    expected = formula("(forall (z Agent) (B z 1 (K ?y:Agent 1 p)))", sig)
    assert alpha_equivalent(result, expected)


def test_substitution_is_sort_checked(sig):
    x = Variable("x", sig.sort("Room"))
    with pytest.raises(SortError):
        substitute(formula("(clean ?x:Room)", sig), {x: sig.constant("a")})


def test_instantiate_folds_moment_arithmetic(sig):
    rule = formula("(forall (t Moment) (implies (happens e1 t) (holds f1 (+ t 1))))", sig)
    assert instantiate(rule, moment(2)) == formula("(implies (happens e1 2) (holds f1 3))", sig)


def test_alpha_equivalence_ignores_bound_names(sig):
    left = formula("(forall (r Room) (exists (t Moment) (holds f1 t)))", sig)
    right = formula("(forall (s Room) (exists (u Moment) (holds f1 u)))", sig)
    other = formula("(forall (s Room) (exists (u Moment) (holds f2 u)))", sig)
    assert alpha_equivalent(left, right)
    assert not alpha_equivalent(left, other)


def test_fresh_variable_is_deterministic():
    v = Variable("t", MOMENT)
    assert fresh_variable(v, {"t"}).name == "t_1"
    assert fresh_variable(v, {"t", "t_1", "t_2"}).name == "t_3"
    assert fresh_variable(Variable("t_4", MOMENT), set()).name == "t_1"


# --- knowledge bases ---------------------------------------------------------

def test_knowledge_base_rejects_free_variables(sig):
    base = KnowledgeBase(sig)
    with pytest.raises(SortError):
        base.add(formula("(clean ?r:Room)", sig))
    assert len(base) == 0


def test_knowledge_base_deduplicates_up_to_alpha(sig):
    base = KnowledgeBase(sig)
    first = base.add(formula("(forall (r Room) (clean r))", sig), "c1", AXIOM)
    second = base.add(formula("(forall (s Room) (clean s))", sig), "c2", DERIVED)
    assert second is first
    assert len(base) == 1
    assert formula("(forall (z Room) (clean z))", sig) in base


def test_extend_leaves_the_original_alone():
    base = kb("p", "(implies p q)")
    sig = base.signature
    bigger = base.extend([formula("r", sig)], prefix="step")
    assert len(base) == 2 and len(bigger) == 3
    assert bigger.entries[-1].label == "step1"
    assert formula("r", sig) not in base


def test_moment_order_mixes_symbolic_and_integer_moments():
    sig = signature("(constant noon Moment)")
    order = MomentOrder([formula("(prior 2 noon)", sig)])
    noon = sig.constant("noon")
    assert order.lt(moment(1), noon)
    assert order.leq(noon, noon)
    assert not order.lt(noon, moment(5))
    assert order.decide_prior(moment(3), noon) is None
    assert order.decide_prior(noon, moment(0)) is False


def test_negated_atoms_print_back(sig):
    f = Not(formula("(happens (action a alpha) 2)", sig))
    assert pretty(f) == "(not (happens (action a alpha) 2))"
