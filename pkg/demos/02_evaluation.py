"""
Evaluating formulas with a free conjunction
===========================================

Conjunction is not a function of its operands' values: only bounds are
fixed.  A policy picks the value, and a table can pin individual nodes.
"""

from ulogic import MIN, PRODUCT_THEN_MIN, Evaluation, TablePolicy, evaluate, validate

# Excluded middle on the Goedel unit interval sits at 0.5 when p does.
e = Evaluation.of("godel-unit", {"p": 0.5}, MIN)
print("p \\/ ~p on godel-unit:", evaluate("p \\/ ~p", e))

#%%
# On the probability ray the disjunction is recovered from the conjunction:
# with a product conjunction, e(p \/ ~p) = 0.6 + 0.4 - 0.24.
e = Evaluation.of("prob-ray", {"p": 0.6}, PRODUCT_THEN_MIN)
for f in ["p & ~p", "p \\/ ~p", "~(p \\/ ~p)"]:
    print(f"{f:12s} = {evaluate(f, e)}")

#%%
# A table sets e(p & (p -> q)) directly.  The causality formula then drops
# below 1, so it is not a tautology here.
table = TablePolicy([("p", "p -> q", 0.5)])
e = Evaluation.of("prob-ray", {"p": 0.8, "q": 0.4}, table)
print("(p & (p -> q)) -> q =", evaluate("(p & (p -> q)) -> q", e))

# An entry above either operand is rejected by the validator.
bad = Evaluation.of("godel-unit", {"p": 0.5, "q": 0.7}, TablePolicy([("p", "q", 0.9)]))
for v in validate(bad, "p & q").violations:
    print("violation:", v.kind, "-", v.message)
