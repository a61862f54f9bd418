"""Evaluations: atom assignments extended over the connectives.

Conjunction is not truth-functional, so every evaluation carries a
:class:`ConjunctionPolicy` choosing ``e(a & b)`` for each ``&``-node.  The
chosen value must lie below both operands, must not depend on operand order,
and must equal the smaller operand when the larger one is at least ``1``
(the unit law, enforced only where it is consistent with the bounds).

Disjunction is ``max{c : e(a & b) (+) c = e(a) (+) e(b)}``; implication is the
residuum; negation and ``0`` map to the algebra's ``~`` and zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from .algebra import INF, Algebra, AlgebraError, Element
from .formula import (And, Atom, Bottom, Formula, Implies, Not, Or, and_key,
                      atoms, coerce, desugar, unparse)
from .zoo import ProductAlgebra, make_algebra

__all__ = [
    "ConjunctionPolicy", "MinPolicy", "StarPolicy", "ProductThenMinPolicy",
    "TablePolicy", "ComponentwisePolicy", "MIN", "STAR", "PRODUCT_THEN_MIN",
    "policy_from_id", "Evaluation", "evaluate", "validate", "Violation",
    "ValidationReport", "or_identity_check", "EvaluationError",
    "UnassignedAtom", "PolicyViolation", "DisjunctionError", "BatchRun",
]


class EvaluationError(Exception):
    def __init__(self, message: str, subformula: Optional[Formula] = None):
        where = f" at {unparse(subformula)}" if subformula is not None else ""
        super().__init__(message + where)
        self.subformula = subformula


class UnassignedAtom(EvaluationError, KeyError):
    def __str__(self):
        return self.args[0]


class PolicyViolation(EvaluationError):
    pass


class DisjunctionError(EvaluationError):
    pass


# ----------------------------------------------------------------- policies

class ConjunctionPolicy:
    """Chooses the value of ``&``-nodes from the operand values."""

    id = "abstract"

    def value(self, alg: Algebra, x: np.ndarray, y: np.ndarray,
              key: tuple[Formula, Formula]) -> np.ndarray:
        raise NotImplementedError

    def conflicts(self) -> set:
        return set()

    def __repr__(self):
        return f"<policy {self.id}>"


class MinPolicy(ConjunctionPolicy):
    id = "min"

    def value(self, alg, x, y, key):
        return alg.meet_b(x, y)


class StarPolicy(ConjunctionPolicy):
    """The algebra's own ``*``; lawful on unit sub-interval operands."""

    id = "star"

    def value(self, alg, x, y, key):
        return alg.star_b(x, y)


class ProductThenMinPolicy(ConjunctionPolicy):
    """``*`` when both operands are at most 1, ``min`` otherwise.

    On products the rule is applied in each component.
    """

    id = "product-then-min"

    def value(self, alg, x, y, key):
        if isinstance(alg, ProductAlgebra):
            return np.concatenate([self.value(c, x[:, s], y[:, s], key)
                                   for c, s in zip(alg.components, alg.slices)], axis=1)
        one = np.broadcast_to(alg.one, x.shape)
        small = alg.leq_b(x, one) & alg.leq_b(y, one)
        return np.where(small[:, None], alg.star_b(x, y), alg.meet_b(x, y))


class ComponentwisePolicy(ConjunctionPolicy):
    """One policy per component of a product algebra."""

    def __init__(self, policies: Sequence[ConjunctionPolicy]):
        self.policies = tuple(policies)
        self.id = "componentwise(" + ",".join(p.id for p in self.policies) + ")"

    def value(self, alg, x, y, key):
        if not isinstance(alg, ProductAlgebra) or len(alg.components) != len(self.policies):
            raise AlgebraError(f"{self.id} needs a product with {len(self.policies)} components")
        return np.concatenate([p.value(c, x[:, s], y[:, s], key)
                               for p, c, s in zip(self.policies, alg.components, alg.slices)], axis=1)


class TablePolicy(ConjunctionPolicy):
    """Explicit values for chosen ``&``-nodes, ``fallback`` elsewhere.

    Entries are ``(left, right, value)``; the pair is unordered, so two
    entries for ``p & q`` and ``q & p`` must agree.
    """

    id = "table"

    def __init__(self, entries: Iterable[tuple[Union[str, Formula], Union[str, Formula], Any]] = (),
                 fallback: ConjunctionPolicy = None):
        self.fallback = fallback or MIN
        self.entries: list[tuple[Formula, Formula, Any]] = []
        self._values: dict[tuple[Formula, Formula], Any] = {}
        self._conflicts: set = set()
        for left, right, value in entries:
            self.add(left, right, value)

    def add(self, left, right, value) -> None:
        left, right = desugar(coerce(left)), desugar(coerce(right))
        self.entries.append((left, right, value))
        key = and_key(left, right)
        if key in self._values and not _same(self._values[key], value):
            self._conflicts.add(key)
        self._values.setdefault(key, value)

    def conflicts(self) -> set:
        return set(self._conflicts)

    def lookup(self, key):
        return self._values.get(key)

    def value(self, alg, x, y, key):
        if key in self._values:
            row = alg.encode(_unwrap(self._values[key]))
            return np.broadcast_to(row, x.shape).copy()
        return self.fallback.value(alg, x, y, key)

    def __repr__(self):
        return f"<policy table ({len(self._values)} entries, fallback {self.fallback.id})>"


def _unwrap(value):
    return value.value if isinstance(value, Element) else value


def _same(a, b) -> bool:
    a, b = _unwrap(a), _unwrap(b)
    try:
        return np.allclose(np.asarray(a, dtype=float), np.asarray(b, dtype=float), atol=1e-9, rtol=0)
    except (TypeError, ValueError):
        return a == b


MIN = MinPolicy()
STAR = StarPolicy()
PRODUCT_THEN_MIN = ProductThenMinPolicy()
_POLICIES = {p.id: p for p in (MIN, STAR, PRODUCT_THEN_MIN)}


def policy_from_id(name: str, table=None) -> ConjunctionPolicy:
    name = name.strip().lower()
    if name in _POLICIES:
        return _POLICIES[name]
    if name == "table":
        return TablePolicy(table or ())
    if name.startswith("componentwise(") and name.endswith(")"):
        return ComponentwisePolicy([policy_from_id(p) for p in name[14:-1].split(",")])
    raise ValueError(f"unknown conjunction policy {name!r}")


# --------------------------------------------------------------- evaluation

@dataclass
class Evaluation:
    """An atom assignment plus a conjunction interpretation."""

    algebra: Algebra
    atoms: dict[str, Element]
    policy: ConjunctionPolicy = field(default_factory=lambda: MIN)

    @classmethod
    def of(cls, algebra: Union[Algebra, str], assignment: Mapping[str, Any],
           policy: ConjunctionPolicy = None) -> "Evaluation":
        alg = make_algebra(algebra) if isinstance(algebra, str) else algebra
        return cls(alg, {name: alg.element(v) for name, v in assignment.items()}, policy or MIN)

    def __call__(self, f: Union[str, Formula]) -> Element:
        return evaluate(f, self)


@dataclass
class Violation:
    subformula: str
    kind: str
    message: str


@dataclass
class ValidationReport:
    violations: list[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


class BatchRun:
    """Evaluate a core formula over ``n`` assignments at once.

    ``mode`` is ``"policy"`` (use the policy), ``"grid"`` (branch every new
    ``&``-node over lawful candidates) or ``"random"`` (draw one lawful value
    per row).  Unlawful policy choices and failed disjunctions are recorded
    in ``bad``; ``problems`` keeps one message per offending node.
    """

    def __init__(self, alg: Algebra, atom_values: Mapping[str, np.ndarray],
                 policy: ConjunctionPolicy = MIN, mode: str = "policy", k: int = 8,
                 rng: Optional[np.random.Generator] = None, check_atoms: bool = True):
        self.alg = alg
        self.policy = policy
        self.mode = mode
        self.k = k
        self.rng = rng
        sizes = {len(v) for v in atom_values.values()}
        self.n = sizes.pop() if sizes else 1
        self.memo: dict[Formula, np.ndarray] = {Atom(a): np.asarray(v, dtype=float)
                                               for a, v in atom_values.items()}
        self.and_values: dict[tuple[Formula, Formula], np.ndarray] = {}
        self.origin = np.arange(self.n)
        self.bad = np.zeros(self.n, dtype=bool)
        self.problems: list[tuple[Formula, str, str, np.ndarray]] = []
        self.conflicts = policy.conflicts() if mode == "policy" else set()
        if check_atoms:
            one = np.broadcast_to(alg.one, (self.n, alg.dim))
            for name in sorted(atom_values):
                v = self.memo[Atom(name)]
                outside = ~alg.leq_b(v, one)
                if outside.any():
                    self._problem(Atom(name), "atom-range",
                                  f"atom {name} is not in the unit sub-interval", outside)

    def _problem(self, f, kind, message, mask):
        self.bad |= mask
        self.problems.append((f, kind, message, mask))

    def _expand(self, rows: np.ndarray) -> None:
        for key in self.memo:
            self.memo[key] = self.memo[key][rows]
        for key in self.and_values:
            self.and_values[key] = self.and_values[key][rows]
        self.origin = self.origin[rows]
        self.bad = self.bad[rows]
        self.problems = [(f, k, m, mask[rows]) for f, k, m, mask in self.problems]
        self.n = len(rows)

    def value(self, f: Formula) -> np.ndarray:
        got = self.memo.get(f)
        if got is not None:
            return got
        alg = self.alg
        if isinstance(f, Atom):
            raise UnassignedAtom(f"atom {f.name} is not assigned")
        if isinstance(f, Bottom):
            out = np.broadcast_to(alg.zero, (self.n, alg.dim)).copy()
        elif isinstance(f, Not):
            out = alg.neg_b(self.value(f.arg))
        elif isinstance(f, Implies):
            self.value(f.left)
            self.value(f.right)
            out = alg.residuum_b(self.memo[f.left], self.memo[f.right])
        elif isinstance(f, And):
            out = self.conjunction(f.left, f.right)
        elif isinstance(f, Or):
            out = self.disjunction(f)
        else:
            raise EvaluationError(f"not a core formula: {type(f).__name__}", f)
        self.memo[f] = out
        return out

    def conjunction(self, left: Formula, right: Formula) -> np.ndarray:
        key = and_key(left, right)
        got = self.and_values.get(key)
        if got is not None:
            return got
        self.value(key[0])
        self.value(key[1])
        alg = self.alg
        if self.mode == "grid":
            x, y = self.memo[key[0]], self.memo[key[1]]
            cand, valid = alg.lawful_and_candidates(x, y, self.k)
            rows, pick = np.nonzero(valid)
            self._expand(rows)
            c = cand[rows, pick]
        elif self.mode == "random":
            x, y = self.memo[key[0]], self.memo[key[1]]
            c = alg.lawful_random_and(x, y, self.rng)
        else:
            x, y = self.memo[key[0]], self.memo[key[1]]
            node = And(*key)
            if key in self.conflicts:
                raise PolicyViolation("conjunction table gives different values for "
                                      f"{unparse(key[0])} & {unparse(key[1])} and its mirror", node)
            c = np.asarray(self.policy.value(alg, x, y, key), dtype=float)
            below = alg.leq_b(c, x) & alg.leq_b(c, y)
            if not below.all():
                self._problem(node, "bound", "conjunction value exceeds an operand", ~below)
            forced, fv = alg.forced_and(x, y)
            unit = ~forced | alg.eq_b(c, fv)
            if not unit.all():
                self._problem(node, "unit-law", "conjunction value breaks the unit law", ~unit)
        self.and_values[key] = c
        return c

    def disjunction(self, f: Or) -> np.ndarray:
        self.conjunction(f.left, f.right)
        self.value(f.left)
        self.value(f.right)
        alg = self.alg
        c = self.and_values[and_key(f.left, f.right)]
        s = alg.oplus_b(self.memo[f.left], self.memo[f.right])
        exists = alg.leq_b(c, s)
        if not exists.all():
            self._problem(f, "disjunction", "e(a & b) is not below e(a) (+) e(b)", ~exists)
        with np.errstate(invalid="ignore"):
            m = alg.max_solution_b(np.where(exists[:, None], c, alg.zero), s)
            solved = alg.eq_b(alg.oplus_b(c, m), s)
        missing = exists & ~solved
        if missing.any():
            self._problem(f, "disjunction", "no maximal solution of e(a & b) (+) c = e(a) (+) e(b)", missing)
        return m

    def run(self, f: Formula) -> np.ndarray:
        self.value(f)
        return self.memo[f]


def _single(ev: Evaluation, f: Formula, check_atoms=True) -> BatchRun:
    rows = {name: ev.algebra.row(e) for name, e in ev.atoms.items()}
    return BatchRun(ev.algebra, rows, ev.policy, check_atoms=check_atoms)


def evaluate(f: Union[str, Formula], ev: Evaluation) -> Element:
    """Value of ``f`` under ``ev``; raises on unlawful conjunction choices."""
    g = desugar(coerce(f))
    missing = sorted(atoms(g) - set(ev.atoms))
    if missing:
        raise UnassignedAtom(f"unassigned atom(s): {', '.join(missing)}")
    run = _single(ev, g)
    out = run.run(g)
    for sub, kind, message, mask in run.problems:
        if mask[0]:
            if kind == "disjunction":
                raise DisjunctionError(message, sub)
            if kind == "atom-range":
                raise EvaluationError(message)
            raise PolicyViolation(message, sub)
    return ev.algebra.wrap(out[0])


def validate(ev: Evaluation, f: Union[str, Formula]) -> ValidationReport:
    """Report every violation of the evaluation clauses met while evaluating ``f``."""
    g = desugar(coerce(f))
    found: list[Violation] = []
    for name in sorted(atoms(g) - set(ev.atoms)):
        found.append(Violation(name, "unassigned", f"atom {name} is not assigned"))
    if found:
        return ValidationReport(found)
    policy = ev.policy
    for left, right in sorted(policy.conflicts(), key=lambda k: (unparse(k[0]), unparse(k[1]))):
        found.append(Violation(unparse(And(left, right)), "symmetry",
                               "table values for the two orders of this conjunction differ"))

    # same choices, minus the conflict check already reported above
    class _Lenient(ConjunctionPolicy):
        id = policy.id

        def value(self, alg, x, y, key):
            return policy.value(alg, x, y, key)

    run = _single(Evaluation(ev.algebra, ev.atoms, _Lenient()), g)
    run.run(g)
    for sub, kind, message, mask in run.problems:
        if mask[0]:
            found.append(Violation(unparse(sub), kind, message))
    return ValidationReport(found)


def or_identity_check(ev: Evaluation, phi: Union[str, Formula], psi: Union[str, Formula]) -> bool:
    """Compare the generic disjunction with its closed form.

    On ``godel-unit`` the closed form is ``max``; on ``prob-ray`` it is
    ``e(a) + e(b) - e(a & b)``, or ``inf`` when either side is infinite.
    """
    alg = ev.algebra
    if alg.key not in ("godel-unit", "prob-ray"):
        raise ValueError(f"no closed-form disjunction for {alg.key}")
    a, b = desugar(coerce(phi)), desugar(coerce(psi))
    x, y = float(evaluate(a, ev)), float(evaluate(b, ev))
    generic = float(evaluate(Or(a, b), ev))
    if alg.key == "godel-unit":
        closed = max(x, y)
    elif x == INF or y == INF:
        closed = INF
    else:
        closed = x + y - float(evaluate(And(a, b), ev))
    return alg.eq(generic, closed)
