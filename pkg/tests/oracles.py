"""Independent oracles shared by the test modules.

Nothing here calls into the algebra or evaluation code: the classical oracle
walks the syntax tree with Python booleans.
"""

import itertools

from ulogic.formula import And, Atom, Bottom, Implies, Not, Or, atoms, desugar, parse

# Formulas over at most four atoms; roughly half are classical tautologies.
BOOLEAN_CORPUS = [
    "p \\/ ~p",
    "(p & ~p) -> 0",
    "~~p <-> p",
    "((p -> q) -> p) -> p",
    "p -> (q -> p)",
    "(p -> q) -> (~q -> ~p)",
    "(~q -> ~p) -> (p -> q)",
    "~(p & q) <-> ~p \\/ ~q",
    "~(p \\/ q) <-> ~p & ~q",
    "p & (q \\/ r) <-> (p & q) \\/ (p & r)",
    "p \\/ (q & r) <-> (p \\/ q) & (p \\/ r)",
    "(p -> q) \\/ (q -> p)",
    "p -> p & p",
    "(p & (p -> q)) -> q",
    "(p -> q) -> ((q -> r) -> (p -> r))",
    "(p -> (q -> r)) -> ((p -> q) -> (p -> r))",
    "(p -> (q -> r)) <-> (p & q -> r)",
    "0 -> p",
    "p -> 1",
    "p & q -> q \\/ r",
    "p & (q | p) -> q",
    "(p \\/ q) & ~p -> q",
    "(p -> r) -> ((q -> r) -> (p \\/ q -> r))",
    "((p -> q) & (r -> s)) -> (p & r -> q & s)",
    "(p <-> q) <-> (~p <-> ~q)",
    "p \\/ q \\/ r \\/ s \\/ ~p",
    # not classical tautologies
    "p",
    "p -> q",
    "p \\/ q",
    "p & ~p",
    "~p",
    "(p -> q) -> p",
    "p \\/ q -> p & q",
    "(p -> q) -> (q -> p)",
    "~(p -> q)",
    "(p -> q) -> (~p -> ~q)",
    "q | p",
    "p <-> q",
    "(p -> q) -> r",
    "p & q & r & s",
    "(p \\/ q) & (r \\/ s) -> p \\/ r",
    "~~p & ~q",
    "p -> ~p",
    "(p & q) \\/ (~p & r) -> q",
    "(p <-> q) \\/ (q <-> r) -> (p <-> r)",
    "1 -> p",
    "p -> 0",
    "(p \\/ q -> r) -> (p -> r) & s",
    "((p -> q) -> q) -> p",
    "(p -> q \\/ r) -> (p -> q)",
]


def classical_value(f, values: dict) -> bool:
    """Truth value of ``f`` under the classical reading of every connective."""

    def go(g):
        if isinstance(g, Atom):
            return values[g.name]
        if isinstance(g, Bottom):
            return False
        if isinstance(g, Not):
            return not go(g.arg)
        a, b = go(g.left), go(g.right)
        if isinstance(g, And):
            return a and b
        if isinstance(g, Or):
            return a or b
        if isinstance(g, Implies):
            return (not a) or b
        raise TypeError(g)

    return go(desugar(parse(f) if isinstance(f, str) else f))


def classical_tautology(f) -> bool:
    g = parse(f) if isinstance(f, str) else f
    names = sorted(atoms(g))
    return all(classical_value(g, dict(zip(names, bits)))
               for bits in itertools.product([False, True], repeat=len(names)))


def axiom_instances(schema_ids, letters="pqr"):
    """Every instance of the schemas with metavariables bound to atoms."""
    from ulogic.proof import instantiate, schema

    out = []
    for sid in schema_ids:
        names = schema(sid).variables
        for combo in itertools.product(letters, repeat=len(names)):
            out.append(instantiate(sid, dict(zip(names, combo))))
    return out


def sampling_counterexamples(script, count=10_000, step=0.1, seed=0):
    """Refutations of a script's conclusion on its theory's reference algebras.

    Fixed MIN conjunction on GRID and RANDOM, plus RANDOM with every
    ``&``-node ranging over its lawful values.
    """
    from ulogic.tautology import Strategy, check

    strategies = [Strategy.grid(step), Strategy.random(count, seed=seed),
                  Strategy.random(count, seed=seed, search_and=True)]
    out = []
    for alg in script.theory.reference:
        for s in strategies:
            v = check(script.conclusion, alg, s)
            if not v.holds:
                out.append(v)
    return out


def joint_psi_values(a, q, reading, n=400):
    """p(psi) over every joint table of two events on a 1/n grid with
    p(phi) = a whose reading of ``phi -> psi`` has probability q.

    Cells are (p11, p10, p01, p00) for phi/psi true/false.  Readings:
    ``conditional`` p11 / a, ``material`` 1 - p10 and ``ray`` p(psi) / a
    (the probability-ray residuum, written out by hand).
    """
    import numpy as np

    ia = round(a * n)
    p11 = np.arange(ia + 1)[:, None] / n
    p01 = np.arange(n - ia + 1)[None, :] / n
    p11, p01 = np.broadcast_arrays(p11, p01)
    p10 = a - p11
    psi = p11 + p01
    if reading == "conditional":
        value = p11 / a if a > 0 else np.full(psi.shape, np.nan)
    elif reading == "material":
        value = 1 - p10
    elif reading == "ray":
        value = psi / a if a > 0 else np.full(psi.shape, np.inf)
    else:
        raise ValueError(reading)
    keep = np.abs(value - q) <= 1e-9
    return psi[keep]


def godel_psi_truths(t1, t2, n=100):
    """Truth degrees t(psi) on a 1/n grid with t(phi) = t1 and the Goedel
    residuum of (t1, t(psi)) equal to t2."""
    import numpy as np

    t = np.arange(n + 1) / n
    imp = np.where(t1 <= t, 1.0, t)
    return t[np.abs(imp - t2) <= 1e-9]
