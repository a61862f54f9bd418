import hypothesis.strategies as st
import pytest
from hypothesis import given

from ulogic.formula import (BOTTOM, TOP, And, Atom, Cond, Iff, Implies, Not, Or, ParseError,
                            SchemaMismatch, and_key, atoms, desugar, is_core, match_schema,
                            metavariables, parse, parse_schema, size, substitute, unparse)

p, q, r = Atom("p"), Atom("q"), Atom("r")


@pytest.mark.parametrize("text, tree", [
    ("p & q -> r", Implies(And(p, q), r)),
    ("p -> q -> r", Implies(p, Implies(q, r))),
    ("p \\/ q & r", Or(p, And(q, r))),
    ("~p & q", And(Not(p), q)),
    ("~~p", Not(Not(p))),
    ("p <-> q <-> r", Iff(Iff(p, q), r)),
    ("q | p", Cond(q, p)),
    ("p -> q | r", Implies(p, Cond(q, r))),
    ("0 -> p", Implies(BOTTOM, p)),
    ("(p -> q) -> r", Implies(Implies(p, q), r)),
])
def test_precedence(text, tree):
    assert parse(text) == tree


@pytest.mark.parametrize("text, pos", [
    ("p &", 3),
    ("(p -> q", 0),
    ("p -> q)", 6),
    ("p # q", 2),
    ("", 0),
])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.pos == pos


def test_metavariables_only_in_schemas():
    with pytest.raises(ParseError):
        parse("$A -> $A")
    s = parse_schema("$A -> $B & $A")
    assert metavariables(s) == {"$A", "$B"}
    assert atoms(s) == set()


def test_desugar_sugar():
    assert desugar(parse("1")) == TOP == Implies(BOTTOM, BOTTOM)
    assert desugar(parse("p <-> q")) == And(Implies(p, q), Implies(q, p))
    # "q given p" is p -> (p & q)
    assert desugar(parse("q | p")) == Implies(p, And(p, q))
    assert not is_core(parse("q | p"))
    assert is_core(desugar(parse("q | p <-> 1")))


def test_match_and_substitute():
    schema = desugar(parse_schema("$A & $B -> $A"))
    f = desugar(parse("(p -> q) & r -> (p -> q)"))
    sigma = match_schema(schema, f)
    assert sigma == {"$A": Implies(p, q), "$B": r}
    assert substitute(schema, sigma) == f
    with pytest.raises(SchemaMismatch):
        match_schema(schema, desugar(parse("p & q -> q")))
    with pytest.raises(SchemaMismatch):
        match_schema(schema, f, {"$A": p})


def test_and_key_is_unordered():
    assert and_key(p, q) == and_key(q, p) == (p, q)


def test_size_and_atoms():
    f = parse("p & (q -> ~p)")
    assert size(f) == 6
    assert atoms(f) == {"p", "q"}


names = st.sampled_from(["p", "q", "r", "x1", "long_name"])


def formulas(max_leaves=12):
    leaves = st.one_of(names.map(Atom), st.just(BOTTOM), st.just(parse("1")))
    return st.recursive(
        leaves,
        lambda sub: st.one_of(
            sub.map(Not),
            *[st.tuples(sub, sub).map(lambda t, c=c: c(*t)) for c in (And, Or, Implies, Iff, Cond)],
        ),
        max_leaves=max_leaves,
    )


@given(formulas())
def test_unparse_round_trip(f):
    assert parse(unparse(f)) == f


@given(formulas())
def test_desugar_is_core_and_idempotent(f):
    g = desugar(f)
    assert is_core(g)
    assert desugar(g) == g
    assert atoms(g) == atoms(f)


@given(formulas(6), formulas(4), formulas(4))
def test_substitution_matches_back(f, a, b):
    schema = substitute(f, {"p": Atom("$A"), "q": Atom("$B")})
    inst = substitute(schema, {"$A": a, "$B": b})
    sigma = match_schema(schema, inst)
    assert substitute(schema, sigma) == inst
