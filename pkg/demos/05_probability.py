"""
Probability spaces as evaluations
=================================

A finite probability space extends to a probability-ray evaluation: events
become atoms, and the conjunction of two events takes the probability of
their intersection.  Restricting the evaluation gives the measure back.
"""

from ulogic import (ProbabilitySpace, evaluate, extend_to_evaluation, restrict_evaluation,
                    validate_space)

space = ProbabilitySpace.from_weights({x: 0.25 for x in "abcd"}, {"A": "ab", "B": "bc"})
print(validate_space(space).to_dict()["checked"])

e = extend_to_evaluation(space)
for f in ["A \\/ B", "~A", "A & B", "A -> A & B", "A -> B"]:
    print(f"{f:10s} = {evaluate(f, e)}")

#%%
# The round trip is exact.
back = restrict_evaluation(e, space)
print("round trip exact:", back.p == space.p)

#%%
# Breaking additivity shows up in both the P1/P2 and the primed checks.
space.p[frozenset("a")] = 0.4
report = validate_space(space)
print("kolmogorov:", report.kolmogorov, "primed:", report.primed)
print(report.violations[0])
