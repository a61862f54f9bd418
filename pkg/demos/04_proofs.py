"""
Checking Hilbert-style proofs
=============================

Proof scripts are numbered lines justified by an axiom schema, modus
ponens or an abbreviation step.  Nine scripts ship with the package.
"""

from ulogic import check_proof, consistency_probe, derive_closure, load_script
from ulogic.proof import bundled_scripts, mutations

for name in bundled_scripts():
    script = load_script(f"proofs/{name}")
    verdict = check_proof(script)
    print(f"{name:16s} {script.theory.id:4s} {'accepted' if verdict.accepted else 'rejected'}: "
          f"{script.conclusion}")

#%%
# Corrupting any single justification makes the checker reject the script.
script = load_script("proofs/prop_4_1_1")
print(script.text())
for number, bad in mutations(script):
    print(f"line {number} corrupted -> {check_proof(bad).first_failure.message}")

#%%
# A bounded forward closure finds short derivations; the proof it returns
# is checked like any other script.
closure = derive_closure("GPL", ["~(p \\/ ~p)"], 4)
print(len(closure), "formulas;", "p derivable:", "p" in closure)
print(closure.proof_of("p").text())

# Adding p and p -> 0 to the base logic derives 0 in one step.
print(consistency_probe("UPL", ["p", "p -> 0"], 2).to_dict())
