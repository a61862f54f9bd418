import pytest

from oracles import sampling_counterexamples
from ulogic.formula import BOTTOM, TOP, parse, desugar
from ulogic.proof import (DEPTH_CAP, INCONSISTENT, NO_DERIVATION_FOUND, THEORIES, ClosureCapExceeded,
                          ProofScriptError, Schema, bundled_scripts, check_proof, consistency_probe,
                          derive_closure, instantiate, load_script, mutations, parse_script)

SCRIPTS = bundled_scripts()


def test_nine_scripts_ship():
    assert SCRIPTS == ["prop_3_2_1.upl", "prop_3_2_2.upl", "prop_3_2_3.upl", "prop_4_1_1.upl",
                       "prop_4_1_2.upl", "prop_4_1_3.upl", "prop_4_1_4.upl", "prop_5_1_1.upl",
                       "prop_5_1_2.upl"]


@pytest.mark.parametrize("name", SCRIPTS)
def test_shipped_scripts_accepted(name):
    verdict = check_proof(load_script(f"proofs/{name}"))
    assert verdict.accepted, verdict.first_failure


@pytest.mark.parametrize("name, theory, conclusion, n", [
    ("prop_3_2_2", "UPL", "(1 -> p) -> p", 5),
    ("prop_4_1_1", "GFL", "p & (p -> q) -> q", 5),
    ("prop_4_1_2", "GFL", "(p -> q) \\/ (q -> p)", 9),
    ("prop_5_1_2", "GPL", "~(p \\/ ~p) -> p", 9),
])
def test_script_conclusions(name, theory, conclusion, n):
    s = load_script(f"proofs/{name}")
    assert s.theory.id == theory
    assert s.conclusion == parse(conclusion)
    assert len(s.lines) == n


@pytest.mark.parametrize("name", SCRIPTS)
def test_every_mutation_rejected(name):
    script = load_script(f"proofs/{name}")
    muts = mutations(script)
    assert len(muts) == len(script.lines)
    for number, bad in muts:
        verdict = check_proof(bad)
        assert not verdict.accepted
        assert verdict.first_failure.number == number


@pytest.mark.parametrize("name", SCRIPTS)
def test_conclusions_survive_sampling(name):
    script = load_script(f"proofs/{name}")
    assert not [v.to_dict() for v in sampling_counterexamples(script)]


def test_mp_premise_mismatch_rejected():
    text = """theory: UPL
1. p -> p ;; AXIOM(A2)
2. (q -> r) -> (q -> r) ;; AXIOM(A2)
3. q -> r ;; MP(1, 2)
"""
    verdict = check_proof(text)
    assert [r.ok for r in verdict.results] == [True, True, False]
    assert verdict.first_failure.number == 3


def test_axiom_with_wrong_binding_rejected():
    verdict = check_proof("theory: UPL\n1. p & q -> p ;; AXIOM(A4){$A=q}\n")
    assert not verdict.accepted
    verdict = check_proof("theory: UPL\n1. p & q -> p ;; AXIOM(A4){$Z=q}\n")
    assert "no metavariable" in verdict.first_failure.message


def test_def_compares_expansions():
    ok = "theory: UPL\n1. 0 -> 0 ;; AXIOM(A2)\n2. 1 ;; DEF(1)\n"
    assert check_proof(ok).accepted
    bad = "theory: UPL\n1. 0 -> 0 ;; AXIOM(A2)\n2. 0 ;; DEF(1)\n"
    assert not check_proof(bad).accepted


def test_axiom_outside_theory():
    with pytest.raises(ProofScriptError):
        check_proof("theory: UPL\n1. ~~p -> p ;; AXIOM(GPL1)\n")
    assert check_proof("theory: GPL\n1. ~~p -> p ;; AXIOM(GPL1)\n").accepted


@pytest.mark.parametrize("text", [
    "1. p -> p ;; AXIOM(A2)\n",
    "theory: XYZ\n1. p -> p ;; AXIOM(A2)\n",
    "theory: UPL\n",
    "theory: UPL\n2. p -> p ;; AXIOM(A2)\n",
    "theory: UPL\n1. p -> p ;; MP(1, 1)\n",
    "theory: UPL\n1. p -> p ;; RULE(1)\n",
    "theory: UPL\n1. p -> ;; AXIOM(A2)\n",
    "theory: UPL\naxiom X: p\n1. p ;; AXIOM(X)\n",
])
def test_malformed_scripts(text):
    with pytest.raises(ProofScriptError):
        check_proof(parse_script(text))


def test_custom_theory_header():
    text = """# a theory with p as an axiom
theory: CUSTOM(facts) extends GFL
axiom F1: p
axiom F2: p -> q
1. p ;; AXIOM(F1)
2. p -> q ;; AXIOM(F2)
3. q ;; MP(1, 2)
"""
    script = parse_script(text)
    assert script.theory.id == "CUSTOM(facts)"
    assert [s.id for s in script.theory.schemas][-2:] == ["F1", "F2"]
    assert check_proof(script).accepted
    # the text form parses back to the same script
    again = parse_script(script.text())
    assert again.lines == script.lines
    assert [s.id for s in again.theory.schemas] == [s.id for s in script.theory.schemas]


def test_script_text_round_trip():
    for name in SCRIPTS:
        s = load_script(f"proofs/{name}")
        assert parse_script(s.text()).lines == s.lines


def test_load_script_from_disk(tmp_path):
    path = tmp_path / "mine.upl"
    path.write_text("theory: UPL\n1. p -> p ;; AXIOM(A2){$A=p}\n")
    assert check_proof(load_script(path)).accepted
    with pytest.raises(ProofScriptError):
        load_script(tmp_path / "missing.upl")


@pytest.mark.parametrize("sid, bindings, want", [
    ("A4", {"$A": "p", "$B": "q"}, "(p & q) -> p"),
    ("GPL1", {"A": "p \\/ q"}, "~~(p \\/ q) -> (p \\/ q)"),
    ("A2", {"$A": "0"}, "1"),
])
def test_instantiate(sid, bindings, want):
    assert instantiate(sid, bindings) == desugar(parse(want))


def test_instantiate_missing_binding():
    with pytest.raises(ProofScriptError):
        instantiate("A1", {"$A": "p", "$B": "q"})


def test_theory_membership():
    assert len(THEORIES["UPL"].schemas) == 8
    assert len(THEORIES["GFL"].schemas) == 15
    assert THEORIES["GPL"].reference == ("prob-ray",)
    assert THEORIES["FRL"].reference == ("godel-x-prob-ray",)
    with pytest.raises(ProofScriptError):
        THEORIES["UPL"].extend("dup", [Schema("A2", "$A")])


def test_closure_one_mp_step():
    cl = derive_closure("UPL", ["p", "p -> q"], 1)
    assert "q" in cl
    assert cl.level[parse("q")] == 1


def test_closure_contains_one_without_seeds():
    assert TOP in derive_closure("UPL", [], 2)


def test_closure_gpl_excluded_middle_negation():
    # the shortest derivation found here has MP height 4
    assert "p" not in derive_closure("GPL", ["~(p \\/ ~p)"], 3)
    cl = derive_closure("GPL", ["~(p \\/ ~p)"], 4)
    assert "p" in cl
    proof = cl.proof_of("p")
    assert check_proof(proof).accepted
    assert proof.conclusion == parse("p")


def test_closure_monotone_and_deterministic():
    seeds = ["p", "p -> q", "q -> r"]
    layers = [derive_closure("UPL", seeds, d) for d in range(4)]
    for a, b in zip(layers, layers[1:]):
        assert a.formulas() <= b.formulas()
    again = derive_closure("UPL", seeds, 3)
    assert again.provenance == layers[3].provenance
    assert layers[3].at_depth(1) == layers[1].formulas()


def test_closure_caps():
    with pytest.raises(ClosureCapExceeded):
        derive_closure("UPL", [], DEPTH_CAP + 1)
    with pytest.raises(ClosureCapExceeded):
        derive_closure("GFL", ["p -> q"], 2, max_formulas=100)


def test_probe_bottom_axiom():
    r = consistency_probe("UPL", ["0"], 2)
    assert r.outcome == INCONSISTENT
    assert len(r.witness.lines) == 1


def test_probe_mp():
    r = consistency_probe("UPL", ["p", "p -> 0"], 3)
    assert (r.outcome, r.depth) == (INCONSISTENT, 1)
    assert r.witness.conclusion == BOTTOM
    assert check_proof(r.witness).accepted


def test_probe_plain_gfl_finds_nothing():
    r = consistency_probe("GFL", [], 3)
    assert r.outcome == NO_DERIVATION_FOUND
    assert r.witness is None and r.closure_size > 0


def test_mp_failure_message_keeps_parentheses():
    text = "theory: UPL\n1. p -> p ;; AXIOM(A2)\n2. q -> q ;; AXIOM(A2)\n3. q ;; MP(1, 2)\n"
    fail = check_proof(text).first_failure
    assert fail.number == 3
    assert fail.message == "line 2 is not '(p -> p) -> q'"
