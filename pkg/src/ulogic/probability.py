"""Finite probability spaces and their bridge to the probability ray.

A space is ``(omega, field, P)`` with ``field`` an explicit list of subsets.
:func:`extend_to_evaluation` turns ``P`` into an evaluation on the
probability ray whose conjunction on pure event formulas is intersection;
:func:`restrict_evaluation` goes back.  :func:`mp_bounds` gives the interval
estimates for modus ponens with (probability, truth degree) judgments.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from itertools import chain, combinations
from pathlib import Path
from typing import Iterable, Mapping, Optional, Union

import numpy as np

from .evaluation import MIN, ConjunctionPolicy, Evaluation, evaluate
from .formula import And, Atom, Bottom, Formula, Not, Or, coerce, desugar
from .zoo import make_algebra

__all__ = [
    "ProbabilitySpace", "SpaceReport", "SpaceError", "HypothesisViolation", "EventPolicy",
    "Restriction", "FuzzyRandomJudgment", "Bounds", "validate_space", "extend_to_evaluation",
    "restrict_evaluation", "mp_bounds", "event_set", "event_key", "load_space", "space_from_document",
    "random_space",
]

TOL = 1e-9


class SpaceError(ValueError):
    """Malformed space document or an invalid space where a valid one is needed."""


class HypothesisViolation(ValueError):
    """An event evaluates above 1, so the restriction is not a probability."""


def event_key(event: Iterable[str]) -> str:
    """Document key of an event: sorted labels joined by commas."""
    return ",".join(sorted(event))


def _canonical_name(event: frozenset) -> str:
    if not event:
        return "EMPTY"
    return "E_" + "_".join(re.sub(r"\W", "_", label) for label in sorted(event))


@dataclass
class ProbabilitySpace:
    omega: tuple[str, ...]
    field: list[frozenset]
    p: dict[frozenset, float]
    # named events, usable as atoms; every field member also gets a canonical name
    names: dict[str, frozenset] = field(default_factory=dict)

    def __post_init__(self):
        self.omega = tuple(self.omega)
        self.field = list(dict.fromkeys(frozenset(e) for e in self.field))
        self.p = {frozenset(k): float(v) for k, v in self.p.items()}
        for name, ev in list(self.names.items()):
            self.names[name] = frozenset(ev)
        for ev in self.field:
            self.names.setdefault(_canonical_name(ev), ev)

    @classmethod
    def from_weights(cls, weights: Mapping[str, float], names: Optional[Mapping[str, Iterable[str]]] = None):
        """Powerset field with ``P`` additive over the outcome weights."""
        omega = tuple(weights)
        fld = [frozenset(c) for c in _powerset(omega)]
        p = {e: float(sum(weights[x] for x in e)) for e in fld}
        return cls(omega, fld, p, dict(names or {}))

    @property
    def events(self) -> dict[str, frozenset]:
        return dict(self.names)

    def prob(self, event: Iterable[str]) -> float:
        return self.p[frozenset(event)]

    def to_document(self) -> dict:
        return {
            "omega": list(self.omega),
            "field": [sorted(e) for e in self.field],
            "p": {event_key(e): v for e, v in self.p.items()},
            "events": {k: sorted(v) for k, v in self.names.items() if k != _canonical_name(v)},
        }


def _powerset(items):
    items = list(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def space_from_document(doc: Mapping) -> ProbabilitySpace:
    """Read ``{"omega": [...], "field": [[...]] | "powerset", "p": {key: value}}``.

    ``"weights": {label: w}`` may replace ``"p"`` on a powerset field, and
    ``"events": {name: [labels]}`` names events for use as atoms.
    """
    try:
        omega = [str(x) for x in doc["omega"]]
    except (KeyError, TypeError) as exc:
        raise SpaceError("space document needs an 'omega' list") from exc
    if len(set(omega)) != len(omega):
        raise SpaceError("duplicate outcome labels in omega")
    names = {str(k): frozenset(map(str, v)) for k, v in (doc.get("events") or {}).items()}
    raw_field = doc.get("field", "powerset")
    if raw_field == "powerset":
        fld = [frozenset(c) for c in _powerset(omega)]
    elif isinstance(raw_field, list):
        fld = [frozenset(map(str, e)) for e in raw_field]
    else:
        raise SpaceError("'field' must be a list of label lists or \"powerset\"")
    for e in chain(fld, names.values()):
        stray = set(e) - set(omega)
        if stray:
            raise SpaceError(f"event {event_key(e)!r} uses labels outside omega: {sorted(stray)}")
    if "weights" in doc:
        w = {str(k): float(v) for k, v in doc["weights"].items()}
        if set(w) != set(omega):
            raise SpaceError("'weights' must give one weight per outcome")
        p = {e: float(sum(w[x] for x in e)) for e in fld}
    else:
        p = {}
        by_key = {event_key(e): e for e in fld}
        for k, v in (doc.get("p") or {}).items():
            labels = [s.strip() for s in str(k).split(",") if s.strip()]
            ev = frozenset(labels)
            if ev not in by_key.values():
                raise SpaceError(f"probability given for {k!r}, which is not in the field")
            p[ev] = float(v)
    return ProbabilitySpace(omega, fld, p, names)


def load_space(path: Union[str, Path]) -> ProbabilitySpace:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SpaceError(f"cannot read space {path}: {exc}") from exc
    return space_from_document(doc)


# --------------------------------------------------------------- validation

@dataclass
class SpaceReport:
    violations: list[tuple[str, str]] = field(default_factory=list)
    checked: dict[str, int] = field(default_factory=dict)

    def failed(self, kind: str) -> bool:
        return any(k == kind for k, _ in self.violations)

    @property
    def kolmogorov(self) -> bool:
        """P1 and P2 both hold."""
        return not (self.failed("P1") or self.failed("P2"))

    @property
    def primed(self) -> bool:
        """P1', P2' and P3' all hold."""
        return not any(self.failed(k) for k in ("P1'", "P2'", "P3'"))

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"valid": self.ok, "kolmogorov": self.kolmogorov, "primed": self.primed,
                "checked": self.checked,
                "violations": [{"kind": k, "message": m} for k, m in self.violations]}


def _close(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=0, abs_tol=TOL)


def validate_space(s: ProbabilitySpace) -> SpaceReport:
    """Check field closure, P in [0, 1], P1, P2 and the primed triple.

    The P-conditions are only checked where every set they mention is an
    event with a probability, so a broken field yields closure violations
    rather than a cascade of missing values.
    """
    rep = SpaceReport()
    omega = frozenset(s.omega)
    fld = set(s.field)
    bad = rep.violations.append

    if omega not in fld:
        bad(("closure", "omega is not an event"))
    for e in s.field:
        comp = omega - e
        if comp not in fld:
            bad(("closure", f"complement of {{{event_key(e)}}} is missing: {{{event_key(comp)}}}"))
    for a, b in combinations(s.field, 2):
        if a | b not in fld:
            bad(("closure", f"union of {{{event_key(a)}}} and {{{event_key(b)}}} is missing"))
    for e in s.field:
        if e not in s.p:
            bad(("probability", f"no probability for {{{event_key(e)}}}"))
        elif not (-TOL <= s.p[e] <= 1 + TOL):
            bad(("probability", f"P({{{event_key(e)}}}) = {s.p[e]:g} is outside [0, 1]"))
    p = s.p

    def has(*events):
        return all(e in p for e in events)

    rep.checked["P1"] = 1
    if not has(omega) or not _close(p[omega], 1.0):
        bad(("P1", f"P(omega) = {p.get(omega, float('nan')):g}, expected 1"))
    n2 = 0
    for a, b in combinations(s.field, 2):
        if a & b or not has(a, b, a | b):
            continue
        n2 += 1
        if not _close(p[a | b], p[a] + p[b]):
            bad(("P2", f"disjoint {{{event_key(a)}}} and {{{event_key(b)}}}: "
                       f"P(union) = {p[a | b]:g} but P(A) + P(B) = {p[a] + p[b]:g}"))
    rep.checked["P2"] = n2

    empty = frozenset()
    rep.checked["P1'"] = 1
    if not has(empty) or not _close(p[empty], 0.0):
        bad(("P1'", f"P(empty) = {p.get(empty, float('nan')):g}, expected 0"))
    n = 0
    for e in s.field:
        c = omega - e
        if has(e, c):
            n += 1
            if not _close(p[c], 1 - p[e]):
                bad(("P2'", f"P(complement of {{{event_key(e)}}}) = {p[c]:g}, expected {1 - p[e]:g}"))
    rep.checked["P2'"] = n
    n = 0
    for a, b in combinations(s.field, 2):
        if has(a, b, a | b, a & b):
            n += 1
            want = p[a] + p[b] - p[a & b]
            if not _close(p[a | b], want):
                bad(("P3'", f"{{{event_key(a)}}} and {{{event_key(b)}}}: P(union) = {p[a | b]:g}, "
                            f"inclusion-exclusion gives {want:g}"))
    rep.checked["P3'"] = n
    return rep


# ------------------------------------------------------------------- bridge

def event_set(f: Formula, space: ProbabilitySpace) -> Optional[frozenset]:
    """The set a pure event formula denotes, or ``None`` if it is not one.

    Atoms name events; ``~``, ``&``, ``\\/`` and ``0`` read as complement,
    intersection, union and the empty set.
    """
    omega = frozenset(space.omega)
    memo: dict[Formula, Optional[frozenset]] = {}

    def go(g):
        if g in memo:
            return memo[g]
        if isinstance(g, Atom):
            out = space.names.get(g.name)
        elif isinstance(g, Bottom):
            out = frozenset()
        elif isinstance(g, Not):
            inner = go(g.arg)
            out = None if inner is None else omega - inner
        elif isinstance(g, (And, Or)):
            a, b = go(g.left), go(g.right)
            out = None if a is None or b is None else (a & b if isinstance(g, And) else a | b)
        else:
            out = None
        memo[g] = out
        return out

    return go(desugar(coerce(f)))


class EventPolicy(ConjunctionPolicy):
    """``P`` of the intersection on pure event pairs, ``fallback`` elsewhere."""

    id = "event-intersection"

    def __init__(self, space: ProbabilitySpace, fallback: ConjunctionPolicy = MIN):
        self.space = space
        self.fallback = fallback

    def value(self, alg, x, y, key):
        a, b = event_set(key[0], self.space), event_set(key[1], self.space)
        if a is not None and b is not None and (a & b) in self.space.p:
            return np.full(x.shape, self.space.p[a & b])
        return self.fallback.value(alg, x, y, key)


def extend_to_evaluation(s: ProbabilitySpace, check: bool = True) -> Evaluation:
    """A probability-ray evaluation that agrees with ``P`` on events.

    Atoms are the space's event names.  The extension is one choice among
    many: conjunctions involving non-event formulas use the MIN policy.
    """
    if check:
        rep = validate_space(s)
        if not rep.ok:
            raise SpaceError("invalid probability space: " + "; ".join(m for _, m in rep.violations[:3]))
    atoms_ = {name: s.p[ev] for name, ev in s.names.items() if ev in s.p}
    return Evaluation.of(make_algebra("prob-ray"), atoms_, EventPolicy(s))


@dataclass
class Restriction:
    p: dict[frozenset, float]
    report: SpaceReport

    @property
    def ok(self) -> bool:
        return self.report.ok

    def to_dict(self) -> dict:
        return {"p": {event_key(e): v for e, v in sorted(self.p.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))},
                "report": self.report.to_dict()}


def restrict_evaluation(e: Evaluation, events: Union[ProbabilitySpace, Mapping[str, Iterable[str]]],
                        omega: Optional[Iterable[str]] = None) -> Restriction:
    """Read ``P(A) = e(A)`` off the named events and validate the result.

    ``events`` maps a formula (usually an atom name) to the set it denotes;
    passing a space uses its field with canonical names.  Raises
    :class:`HypothesisViolation` if some event evaluates above 1.
    """
    if isinstance(events, ProbabilitySpace):
        omega = events.omega
        named = {name: ev for name, ev in events.names.items() if ev in set(events.field)}
    else:
        named = {name: frozenset(ev) for name, ev in events.items()}
        if omega is None:
            omega = sorted(set().union(*named.values())) if named else []
    p: dict[frozenset, float] = {}
    for name, ev in named.items():
        # atoms are read directly so an out-of-range assignment reaches the check
        v = e.atoms[name] if name in e.atoms else evaluate(name, e)
        if not e.algebra.leq(v, 1.0):
            raise HypothesisViolation(f"e({name}) = {v} exceeds 1")
        p.setdefault(ev, float(v))
    fld = list(p)
    rep = validate_space(ProbabilitySpace(tuple(omega), fld, p))
    return Restriction(p, rep)


# ------------------------------------------------------------------- bounds

@dataclass(frozen=True)
class FuzzyRandomJudgment:
    """A (truth degree, probability) pair, in that component order."""

    t: float
    p: float

    def __post_init__(self):
        for name in ("t", "p"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0) or math.isnan(v):
                raise ValueError(f"{name} = {v} is outside [0, 1]")

    def as_element(self) -> tuple[float, float]:
        return (self.t, self.p)


@dataclass(frozen=True)
class Bounds:
    p: tuple[float, float]
    t: tuple[float, float]

    def to_dict(self) -> dict:
        return {"p": list(self.p), "t": list(self.t)}

    def __str__(self):
        return f"p:[{self.p[0]:g},{self.p[1]:g}] t:[{self.t[0]:g},{self.t[1]:g}]"


def mp_bounds(j_phi: FuzzyRandomJudgment, j_imp: FuzzyRandomJudgment) -> Bounds:
    """Intervals for ``psi`` given judgments on ``phi`` and ``phi -> psi``."""
    return Bounds(p=(j_phi.p * j_imp.p, j_imp.p), t=(min(j_phi.t, j_imp.t), j_imp.t))


def random_space(rng: np.random.Generator, max_outcomes: int = 6, names: bool = True) -> ProbabilitySpace:
    """A powerset space on 1..max_outcomes outcomes with random weights."""
    n = int(rng.integers(1, max_outcomes + 1))
    labels = [f"w{i}" for i in range(n)]
    w = rng.dirichlet(np.ones(n))
    ev = {}
    if names:
        for name in ("A", "B", "C"):
            ev[name] = [x for x in labels if rng.random() < 0.5]
    return ProbabilitySpace.from_weights(dict(zip(labels, w.tolist())), ev)
