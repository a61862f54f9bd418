"""
Eleven algebras and their laws
==============================

Every algebra in the catalogue carries an order, a star, a residuum, a
truncated sum and a negation.  Here we poke at the probability ray, where
the residuum behaves like a ratio, and then run the law checker across the
whole catalogue.
"""

from ulogic import catalogue, check_laws, make_algebra

ray = make_algebra("prob-ray")

# The residuum is the largest y with a * y <= x, which on the ray is x / a.
print("0.4 / 0.8       ->", ray.residuum(0.8, 0.4))
print("0.2 / 0         ->", ray.residuum(0.0, 0.2))
print("neg(0.3), neg(2.5) ->", ray.neg(0.3), ray.neg(2.5))

# The truncated sum has a largest solution c of 0.3 (+) c = 0.8.
print("max solution    ->", ray.max_solution(0.3, 0.8))

#%%
# Laws are sampled (or enumerated on finite carriers) with a fixed seed, so
# a failing law always comes back with a witness that fails again.
for spec in catalogue():
    report = check_laws(make_algebra(spec.id), samples=2000, seed=1)
    mode = "exhaustive" if report.exhaustive else "sampled"
    print(f"{spec.id:18s} {'ok' if report.ok else report.failed_laws} ({mode})")
