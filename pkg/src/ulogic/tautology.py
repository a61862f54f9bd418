"""Tautology testing: search evaluations for one with ``not 1 <= e(f)``.

Sampling can only refute.  A run that finds nothing reports
``HOLDS_ON_SAMPLED``; only exhaustive runs over finite carriers report
``PROVEN_EXHAUSTIVE``.

With ``search_and`` the conjunction is not fixed by a policy: every
``&``-node ranges over lawful values (``k`` evenly spaced points below the
smaller operand on continuous carriers, every lawful element on finite ones,
one random lawful value per sample in random mode).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Union

import numpy as np

from .algebra import INF, Algebra, Element, _jsonable
from .evaluation import MIN, BatchRun, ConjunctionPolicy, Evaluation, TablePolicy
from .formula import And, Formula, Or, atoms, coerce, desugar, unparse
from .zoo import make_algebra

__all__ = ["Strategy", "Verdict", "Witness", "StrategyError", "check", "check_suite",
           "HOLDS_ON_SAMPLED", "COUNTEREXAMPLE", "PROVEN_EXHAUSTIVE", "default_seed"]

HOLDS_ON_SAMPLED = "HOLDS_ON_SAMPLED"
COUNTEREXAMPLE = "COUNTEREXAMPLE"
PROVEN_EXHAUSTIVE = "PROVEN_EXHAUSTIVE"

# rows evaluated per batch
CHUNK = 200_000


class StrategyError(ValueError):
    pass


def default_seed() -> int:
    return int(os.environ.get("ULOGIC_SEED", "0"))


@dataclass(frozen=True)
class Strategy:
    kind: str  # "exhaustive" | "grid" | "random"
    step: float = 0.1
    count: int = 10_000
    seed: int = 0
    search_and: bool = False
    policy: ConjunctionPolicy = MIN
    k: int = 8

    @classmethod
    def exhaustive(cls, search_and=False, policy=MIN):
        return cls("exhaustive", search_and=search_and, policy=policy)

    @classmethod
    def grid(cls, step=0.1, search_and=False, policy=MIN, k=8):
        return cls("grid", step=step, search_and=search_and, policy=policy, k=k)

    @classmethod
    def random(cls, count=10_000, seed=None, search_and=False, policy=MIN):
        return cls("random", count=count, seed=default_seed() if seed is None else seed,
                   search_and=search_and, policy=policy)

    @classmethod
    def parse(cls, text: str, search_and=False, policy=MIN) -> "Strategy":
        """``exhaustive``, ``grid:STEP`` or ``random:N[:SEED]``."""
        parts = text.strip().lower().split(":")
        try:
            if parts == ["exhaustive"]:
                return cls.exhaustive(search_and, policy)
            if parts[0] == "grid" and len(parts) == 2:
                return cls.grid(float(parts[1]), search_and, policy)
            if parts[0] == "random" and len(parts) in (2, 3):
                seed = int(parts[2]) if len(parts) == 3 else None
                return cls.random(int(parts[1]), seed, search_and, policy)
        except ValueError as exc:
            raise StrategyError(f"bad strategy {text!r}: {exc}") from exc
        raise StrategyError(f"bad strategy {text!r}")

    def __str__(self):
        base = {"exhaustive": "exhaustive", "grid": f"grid:{self.step:g}",
                "random": f"random:{self.count}:{self.seed}"}[self.kind]
        return base + (" search-and" if self.search_and else f" policy={self.policy.id}")


@dataclass
class Witness:
    """A refuting evaluation: atom values, every ``&``-node value, and the result."""

    atoms: dict[str, Any]
    and_table: list[tuple[Formula, Formula, Any]]
    value: Element

    def evaluation(self, algebra: Algebra, fallback: ConjunctionPolicy = MIN) -> Evaluation:
        return Evaluation.of(algebra, self.atoms, TablePolicy(self.and_table, fallback))

    def to_assignment(self, algebra: Algebra, fallback: ConjunctionPolicy = MIN) -> dict:
        """The witness as an assignment document accepted by ``eval --assign``."""
        return {
            "algebra": algebra.key,
            "atoms": {k: _jsonable(v) for k, v in self.atoms.items()},
            "policy": "table" if self.and_table else fallback.id,
            "fallback": fallback.id,
            "table": [{"left": unparse(l), "right": unparse(r), "value": _jsonable(v)}
                      for l, r, v in self.and_table],
        }


@dataclass
class Verdict:
    outcome: str
    formula: Formula
    algebra: Algebra
    strategy: Strategy
    witness: Optional[Witness] = None
    stats: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.outcome != COUNTEREXAMPLE

    def to_dict(self) -> dict:
        out = {"formula": unparse(self.formula), "algebra": self.algebra.key,
               "strategy": str(self.strategy), "outcome": self.outcome, "stats": self.stats}
        if self.witness is not None:
            out["value"] = _jsonable(self.witness.value.value)
            out["witness"] = self.witness.to_assignment(self.algebra, self.strategy.policy)
        return out


def _and_keys(f: Formula) -> int:
    """Number of distinct ``&``-nodes, counting those implied by ``\\/``."""
    from .formula import and_key, subformulas
    return len({and_key(g.left, g.right) for g in subformulas(f) if isinstance(g, (And, Or))})


# grid points visited before the rest, coordinatewise
SPECIAL = (0.0, 0.5, 1.0, 2.0, INF)


def _specials_first(pts: np.ndarray) -> np.ndarray:
    special = np.isin(pts, SPECIAL).all(axis=1)
    return np.concatenate([pts[special], pts[~special]])


def _assignment_source(alg: Algebra, names: list[str], strategy: Strategy):
    """Return (total, fetch) where fetch(lo, hi) yields atom columns."""
    if strategy.kind == "random":
        rng = np.random.default_rng([strategy.seed, 0])
        cols = {name: alg.sample_unit(rng, strategy.count) for name in names}
        total = strategy.count if names else 1
        return total, lambda lo, hi: {n: c[lo:hi] for n, c in cols.items()}
    if strategy.kind == "exhaustive":
        if not alg.finite:
            raise StrategyError(f"exhaustive search needs a finite carrier; {alg.key} is infinite")
        pts = alg.grid_unit(0)
    else:
        pts = _specials_first(alg.grid_unit(strategy.step))
    m = len(pts)
    total = m ** len(names)

    def fetch(lo, hi):
        flat = np.arange(lo, hi)
        out = {}
        for j, name in enumerate(reversed(names)):
            out[name] = pts[(flat // m ** j) % m]
        return out

    return total, fetch


def check(f: Union[str, Formula], algebra: Union[Algebra, str], strategy: Strategy) -> Verdict:
    """Look for an evaluation refuting ``1 <= e(f)``.

    Rows are visited in a fixed order (atom assignments in mixed-radix order
    over the grid with the points 0, 0.5, 1, 2 and INF first, then ``&``
    candidates) and the first refuting row becomes the witness.
    Rows where a fixed policy picks an unlawful ``&`` value are not
    evaluations; they are skipped and counted in ``stats["unlawful"]``.
    """
    alg = make_algebra(algebra) if isinstance(algebra, str) else algebra
    original = coerce(f)
    g = desugar(original)
    names = sorted(atoms(g))
    total, fetch = _assignment_source(alg, names, strategy)
    mode = "policy"
    chunk = CHUNK
    if strategy.search_and:
        if strategy.kind == "random":
            mode = "random"
        else:
            mode = "grid"
            fan = alg.and_candidate_count(strategy.k) ** _and_keys(g)
            if fan > CHUNK * 10:
                raise StrategyError(f"{fan} conjunction choices per assignment; use a random strategy")
            chunk = max(1, CHUNK // fan)
    and_rng = np.random.default_rng([strategy.seed, 1]) if mode == "random" else None
    evaluated = unlawful = 0
    one = alg.one
    for lo in range(0, total, chunk):
        hi = min(total, lo + chunk)
        cols = fetch(lo, hi) if names else {}
        run = BatchRun(alg, cols, strategy.policy, mode=mode, k=strategy.k, rng=and_rng)
        value = run.run(g)
        ok = ~run.bad
        refuted = ok & ~alg.leq_b(np.broadcast_to(one, value.shape), value)
        unlawful += int(run.bad.sum())
        hits = np.flatnonzero(refuted)
        if len(hits):
            i = hits[0]
            evaluated += int(ok[: i + 1].sum())
            witness = Witness(
                atoms={name: alg.decode(run.memo[_atom(name)][i]) for name in names},
                and_table=[(l, r, alg.decode(v[i])) for (l, r), v in run.and_values.items()],
                value=alg.wrap(value[i]),
            )
            stats = {"evaluations": evaluated, "unlawful": unlawful, "assignments": lo + int(run.origin[i]) + 1}
            return Verdict(COUNTEREXAMPLE, original, alg, strategy, witness, stats)
        evaluated += int(ok.sum())
    outcome = PROVEN_EXHAUSTIVE if strategy.kind == "exhaustive" and unlawful == 0 else HOLDS_ON_SAMPLED
    return Verdict(outcome, original, alg, strategy, None,
                   {"evaluations": evaluated, "unlawful": unlawful, "assignments": total})


def _atom(name):
    from .formula import Atom
    return Atom(name)


def check_suite(formulas: Iterable[Union[str, Formula]], algebra: Union[Algebra, str],
                strategy: Strategy) -> list[Verdict]:
    return [check(f, algebra, strategy) for f in formulas]
