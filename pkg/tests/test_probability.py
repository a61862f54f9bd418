import json

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given, settings

from oracles import classical_value, godel_psi_truths, joint_psi_values
from ulogic.evaluation import Evaluation, evaluate, validate
from ulogic.probability import (FuzzyRandomJudgment, HypothesisViolation, ProbabilitySpace, SpaceError,
                                event_set, extend_to_evaluation, load_space, mp_bounds, random_space,
                                restrict_evaluation, space_from_document, validate_space)


def uniform4():
    return ProbabilitySpace.from_weights({x: 0.25 for x in "abcd"}, {"A": "ab", "B": "bc"})


def test_uniform_space_is_valid():
    rep = validate_space(uniform4())
    assert rep.ok
    assert rep.checked["P3'"] == 16 * 15 // 2


def test_total_mass_violation():
    s = uniform4()
    s.p[frozenset("abcd")] = 0.9
    rep = validate_space(s)
    assert rep.failed("P1") and not rep.kolmogorov


def test_missing_complement_is_named():
    s = space_from_document({"omega": ["a", "b", "c"], "field": [[], ["a"], ["a", "b", "c"]],
                             "p": {"": 0, "a": 0.5, "a,b,c": 1}})
    msgs = [m for k, m in validate_space(s).violations if k == "closure"]
    assert any("{b,c}" in m for m in msgs)


def test_bridge_examples():
    e = extend_to_evaluation(uniform4())
    assert evaluate("A \\/ B", e).value == pytest.approx(0.75)
    assert evaluate("~A", e).value == pytest.approx(0.5)
    # the conditional-probability ratio comes from A -> A & B
    assert evaluate("A -> A & B", e).value == pytest.approx(0.5)
    # plain A -> B is residuum(0.5, 0.5), which is 1 on the probability ray
    assert evaluate("A -> B", e).value == pytest.approx(1.0)
    assert evaluate("B | A", e).value == pytest.approx(0.5)


def test_extension_is_lawful():
    e = extend_to_evaluation(uniform4())
    for f in ["A & B", "(A \\/ B) & ~A", "(A -> B) & A", "~(A & ~B) \\/ (B & A)"]:
        assert validate(e, f).ok, f


def test_extension_rejects_invalid_space():
    s = uniform4()
    s.p[frozenset("a")] = 0.4
    with pytest.raises(SpaceError):
        extend_to_evaluation(s)


def test_round_trip_exact():
    s = uniform4()
    r = restrict_evaluation(extend_to_evaluation(s), s)
    assert r.ok
    assert r.p == s.p


def test_restriction_hypothesis():
    e = Evaluation.of("prob-ray", {"A": 0.5})
    e.atoms["A"] = e.algebra.element(1.2)
    with pytest.raises(HypothesisViolation):
        restrict_evaluation(e, {"A": {"a"}}, omega=["a", "b"])


def test_restriction_additivity_negative_control():
    names = {"N": set(), "A": {"a"}, "B": {"b"}, "U": {"a", "b"}}
    e = Evaluation.of("prob-ray", {"N": 0.0, "A": 0.3, "B": 0.3, "U": 0.9})
    r = restrict_evaluation(e, names)
    assert not r.ok
    p2 = [m for k, m in r.report.violations if k == "P2"]
    assert p2 and "{a}" in p2[0] and "{b}" in p2[0]


def test_document_round_trip(tmp_path):
    s = random_space(np.random.default_rng(2))
    path = tmp_path / "space.json"
    path.write_text(json.dumps(s.to_document()))
    back = load_space(path)
    assert back.p == s.p
    assert back.names == s.names


def test_document_errors(tmp_path):
    for doc in [{}, {"omega": ["a", "a"]}, {"omega": ["a"], "field": "all"},
                {"omega": ["a"], "p": {"b": 1}}, {"omega": ["a"], "weights": {"b": 1}},
                {"omega": ["a"], "events": {"X": ["z"]}}]:
        with pytest.raises(SpaceError):
            space_from_document(doc)
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(SpaceError):
        load_space(bad)


def test_weights_shorthand():
    s = space_from_document({"omega": ["h", "t"], "field": "powerset", "weights": {"h": 0.3, "t": 0.7},
                             "events": {"H": ["h"]}})
    assert s.prob("ht") == pytest.approx(1.0)
    assert evaluate("~H", extend_to_evaluation(s)).value == pytest.approx(0.7)


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=60)
@given(seeds)
def test_random_spaces_valid(seed):
    rep = validate_space(random_space(np.random.default_rng(seed)))
    assert rep.ok and rep.kolmogorov and rep.primed


@settings(max_examples=80)
@given(seeds, st.floats(-0.3, 0.3).filter(lambda d: abs(d) > 1e-6))
def test_kolmogorov_iff_primed_under_perturbation(seed, delta):
    rng = np.random.default_rng(seed)
    s = random_space(rng)
    target = s.field[int(rng.integers(len(s.field)))]
    s.p[target] += delta
    rep = validate_space(s)
    assert rep.kolmogorov == rep.primed
    if len(s.omega) > 1 or target:
        assert not rep.kolmogorov


@settings(max_examples=60)
@given(seeds)
def test_kolmogorov_iff_primed_on_arbitrary_functions(seed):
    rng = np.random.default_rng(seed)
    s = random_space(rng, max_outcomes=3)
    for e in s.field:
        if rng.random() < 0.3:
            s.p[e] = float(rng.random())
    rep = validate_space(s)
    assert rep.kolmogorov == rep.primed


events = st.sampled_from(["A", "B", "C"])
event_formulas = st.recursive(
    st.one_of(events, st.just("0")),
    lambda sub: st.one_of(sub.map(lambda f: f"~({f})"),
                          st.tuples(sub, sub).map(lambda t: f"({t[0]}) & ({t[1]})"),
                          st.tuples(sub, sub).map(lambda t: f"({t[0]}) \\/ ({t[1]})")),
    max_leaves=6,
)


@settings(max_examples=100, deadline=None)
@given(seeds, event_formulas)
def test_pure_events_match_set_probability(seed, text):
    s = random_space(np.random.default_rng(seed))
    weights = {x: s.prob([x]) for x in s.omega}
    # brute force over outcomes: sum the weights where the formula is classically true
    want = sum(w for x, w in weights.items()
               if classical_value(text, {n: x in s.names[n] for n in "ABC"}))
    assert evaluate(text, extend_to_evaluation(s)).value == pytest.approx(want, abs=1e-9)
    assert s.p[event_set(text, s)] == pytest.approx(want, abs=1e-9)


def test_event_set_of_non_event():
    assert event_set("A -> B", uniform4()) is None


@pytest.mark.parametrize("phi, imp, p, t", [
    ((0.6, 0.8), (0.7, 0.9), (0.72, 0.9), (0.6, 0.7)),
    ((0.5, 1.0), (0.5, 0.35), (0.35, 0.35), (0.5, 0.5)),
    ((0.2, 0.0), (0.9, 0.4), (0.0, 0.4), (0.2, 0.9)),
])
def test_mp_bounds_examples(phi, imp, p, t):
    b = mp_bounds(FuzzyRandomJudgment(*phi), FuzzyRandomJudgment(*imp))
    assert b.p == pytest.approx(p) and b.t == pytest.approx(t)


def test_bounds_text():
    b = mp_bounds(FuzzyRandomJudgment(0.6, 0.8), FuzzyRandomJudgment(0.7, 0.9))
    assert str(b) == "p:[0.72,0.9] t:[0.6,0.7]"


@pytest.mark.parametrize("t, p", [(1.1, 0.5), (0.5, -0.1), (float("nan"), 0.5)])
def test_judgment_range(t, p):
    with pytest.raises(ValueError):
        FuzzyRandomJudgment(t, p)


unit = st.floats(0, 1)


@given(unit, unit, unit, unit)
def test_bounds_nonempty(t1, p1, t2, p2):
    b = mp_bounds(FuzzyRandomJudgment(t1, p1), FuzzyRandomJudgment(t2, p2))
    assert b.p[0] <= b.p[1] and b.t[0] <= b.t[1]


grid20 = st.integers(0, 20).map(lambda i: i / 20)


@settings(max_examples=60, deadline=None)
@given(grid20, grid20)
def test_ray_reading_lands_inside(a, q):
    b = mp_bounds(FuzzyRandomJudgment(0.5, a), FuzzyRandomJudgment(0.5, q))
    psi = joint_psi_values(a, q, "ray")
    assert np.all(psi >= b.p[0] - 1e-9) and np.all(psi <= b.p[1] + 1e-9)


@settings(max_examples=60, deadline=None)
@given(grid20, grid20)
def test_truth_bounds_sound_for_godel_residuum(t1, t2):
    b = mp_bounds(FuzzyRandomJudgment(t1, 0.5), FuzzyRandomJudgment(t2, 0.5))
    ts = godel_psi_truths(t1, t2)
    assert np.all(ts >= b.t[0] - 1e-9) and np.all(ts <= b.t[1] + 1e-9)


def test_other_readings_leave_the_interval():
    # p(phi) = 0.8, p(phi -> psi) = 0.9 gives [0.72, 0.9]
    cond = joint_psi_values(0.8, 0.9, "conditional")
    mat = joint_psi_values(0.8, 0.9, "material")
    assert cond.max() == pytest.approx(0.92)
    assert mat.min() == pytest.approx(0.70)
