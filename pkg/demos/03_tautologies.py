"""
Searching for counterexamples
=============================

``check`` walks a grid or a random sample of evaluations looking for one
where the formula falls below 1.  Sampling can only refute, so a clean run
reports HOLDS_ON_SAMPLED; only exhaustive runs on finite carriers prove.
"""

from ulogic import Strategy, check

for f in ["p \\/ ~p", "(p & ~p) -> 0", "p -> p"]:
    v = check(f, "godel-unit", Strategy.grid(0.25))
    where = v.witness.atoms if v.witness else ""
    print(f"{f:16s} {v.outcome:18s} {where}")

print("boolean2:", check("p \\/ ~p", "boolean2", Strategy.exhaustive()).outcome)

#%%
# With search_and every &-node ranges over its lawful values instead of
# following MIN.  Contraction p -> (p & p) then fails on the Goedel unit
# interval, while double negation still holds.
v = check("p -> (p & p)", "godel-unit", Strategy.grid(0.1, search_and=True))
print(v.outcome, v.witness.atoms, [(str(l), str(r), x) for l, r, x in v.witness.and_table])
print(check("~~p <-> p", "godel-unit", Strategy.random(10_000, seed=0, search_and=True)).outcome)

#%%
# Witnesses serialize to assignment documents that ``ulogic eval --assign``
# reads back.
v = check("(p & (p -> q)) -> q", "prob-ray", Strategy.grid(0.1, search_and=True))
print(v.to_dict()["witness"])
