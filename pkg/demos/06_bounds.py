"""
Bounds for fuzzy-random modus ponens
====================================

Judgments pair a truth degree with a probability.  From judgments on phi
and phi -> psi we get intervals for psi.
"""

import numpy as np

from ulogic import FuzzyRandomJudgment, mp_bounds

b = mp_bounds(FuzzyRandomJudgment(t=0.6, p=0.8), FuzzyRandomJudgment(t=0.7, p=0.9))
print(b)

#%%
# Which p(psi) values do two-event joint distributions allow?  It depends
# on how p(phi -> psi) is read.  As the ratio p(psi) / p(phi) (the
# probability-ray residuum) the value is pinned to p(phi) * p(phi -> psi).
# As a conditional probability p(psi) can exceed the upper bound.
a, q = 0.8, 0.9
p01 = np.linspace(0, 1 - a, 5)
print("ratio reading:       ", round(a * q, 3))
print("conditional reading: ", np.round(a * q + p01, 3))
