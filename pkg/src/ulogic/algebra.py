"""UL-algebra contract, elements, and the law-checking harness.

Every algebra works on batches: carrier values are float arrays of shape
``(n, dim)`` with ``inf`` standing for the distinguished top of ``[0, inf]``.
Finite algebras store element indices in the same float arrays.  The scalar
methods (``leq``, ``star``, ...) wrap the batch ones for single elements.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

import numpy as np

__all__ = [
    "INF", "EPS", "Element", "Algebra", "AlgebraError", "AlgebraMismatch",
    "PreconditionError", "LawResult", "LawReport", "LAWS", "check_laws",
]

INF = math.inf
EPS = 1e-9


class AlgebraError(Exception):
    pass


class AlgebraMismatch(AlgebraError, TypeError):
    """An element was passed to an algebra that does not own it."""


class PreconditionError(AlgebraError, ValueError):
    pass


@dataclass(frozen=True)
class Element:
    """A carrier value tagged with the key of its owning algebra."""

    key: str
    value: Any
    algebra: "Algebra" = field(repr=False, compare=False)

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        return self.algebra.format(self.value)


class Algebra:
    """Base class for UL-algebras ``(L, <=, *, (+), ~, 0, 1)``.

    Subclasses implement the ``*_b`` batch operations and the carrier
    helpers; everything else (scalar API, law checks, conjunction candidate
    generation) is shared.
    """

    key: str = "abstract"
    dim: int = 1
    finite: bool = False
    eps: float = EPS
    zero: np.ndarray
    one: np.ndarray
    top: Optional[np.ndarray] = None

    # -- batch operations -------------------------------------------------
    def leq_b(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.all(a <= b + self.eps, axis=-1)

    def eq_b(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        with np.errstate(invalid="ignore"):
            return np.all((a == b) | (np.abs(a - b) <= self.eps), axis=-1)

    def star_b(self, a, b):
        raise NotImplementedError

    def oplus_b(self, a, b):
        raise NotImplementedError

    def neg_b(self, a):
        raise NotImplementedError

    def residuum_b(self, a, x):
        raise NotImplementedError

    def max_solution_b(self, a, b):
        """Greatest ``c`` with ``a (+) c = b``; caller guarantees ``a <= b``."""
        raise NotImplementedError

    def meet_b(self, a, b):
        """Greatest lower bound, used by the MIN conjunction policy."""
        raise NotImplementedError

    # -- carrier ------------------------------------------------------------
    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        raise NotImplementedError

    def sample_unit(self, rng: np.random.Generator, n: int) -> np.ndarray:
        """Sample the unit sub-interval ``{a : a <= 1}``."""
        raise NotImplementedError

    def grid_unit(self, step: float) -> np.ndarray:
        raise NotImplementedError

    def elements(self) -> np.ndarray:
        raise AlgebraError(f"{self.key} has no finite carrier")

    def encode(self, value: Any) -> np.ndarray:
        raise NotImplementedError

    def decode(self, row: np.ndarray) -> Any:
        raise NotImplementedError

    def format(self, value: Any) -> str:
        return _fmt(value)

    # -- conjunction interpretations -----------------------------------------
    def and_candidates(self, x, y, k: int):
        """Lawful candidate values for an ``&``-node with operands ``x, y``.

        Returns ``(cand, valid)`` with shapes ``(n, K, dim)`` and ``(n, K)``.
        """
        raise NotImplementedError

    def random_and(self, x, y, rng):
        raise NotImplementedError

    def forced_and(self, x, y):
        """Rows where the unit law pins ``e(a & b)``, and the pinned value."""
        one = np.broadcast_to(self.one, x.shape)
        first = self.leq_b(one, x) & self.leq_b(y, x)
        second = ~first & self.leq_b(one, y) & self.leq_b(x, y)
        value = np.where(first[:, None], y, x)
        return first | second, value

    def lawful_and_candidates(self, x, y, k: int = 8):
        cand, valid = self.and_candidates(x, y, k)
        forced, value = self.forced_and(x, y)
        if forced.any():
            cand = cand.copy()
            valid = valid.copy()
            cand[forced] = value[forced][:, None, :]
            valid[forced] = False
            valid[forced, 0] = True
        return cand, valid

    def lawful_random_and(self, x, y, rng):
        c = self.random_and(x, y, rng)
        forced, value = self.forced_and(x, y)
        return np.where(forced[:, None], value, c)

    def and_candidate_count(self, k: int = 8) -> int:
        return k

    # -- scalar API ---------------------------------------------------------
    def element(self, value: Any) -> Element:
        if isinstance(value, Element):
            self._check(value)
            return value
        return Element(self.key, self.decode(self.encode(value)), self)

    def _check(self, e: Element) -> None:
        if e.key != self.key:
            raise AlgebraMismatch(f"element of {e.key} used in {self.key}")

    def row(self, value: Any) -> np.ndarray:
        if isinstance(value, Element):
            self._check(value)
            value = value.value
        return self.encode(value)[None, :]

    def wrap(self, row: np.ndarray) -> Element:
        return Element(self.key, self.decode(np.asarray(row).reshape(self.dim)), self)

    def leq(self, a, b) -> bool:
        return bool(self.leq_b(self.row(a), self.row(b))[0])

    def eq(self, a, b) -> bool:
        return bool(self.eq_b(self.row(a), self.row(b))[0])

    def star(self, a, b) -> Element:
        return self.wrap(self.star_b(self.row(a), self.row(b)))

    def oplus(self, a, b) -> Element:
        return self.wrap(self.oplus_b(self.row(a), self.row(b)))

    def neg(self, a) -> Element:
        return self.wrap(self.neg_b(self.row(a)))

    def residuum(self, a, x) -> Element:
        return self.wrap(self.residuum_b(self.row(a), self.row(x)))

    def meet(self, a, b) -> Element:
        return self.wrap(self.meet_b(self.row(a), self.row(b)))

    def max_solution(self, a, b) -> Element:
        ra, rb = self.row(a), self.row(b)
        if not self.leq_b(ra, rb)[0]:
            raise PreconditionError(f"max_solution needs a <= b, got {self.format(self.decode(ra[0]))}"
                                    f" and {self.format(self.decode(rb[0]))}")
        c = self.max_solution_b(ra, rb)
        if not self.eq_b(self.oplus_b(ra, c), rb)[0]:
            raise AlgebraError(f"{self.key}: no solution of a (+) c = b")
        return self.wrap(c)

    @property
    def zero_element(self) -> Element:
        return self.wrap(self.zero)

    @property
    def one_element(self) -> Element:
        return self.wrap(self.one)

    def in_unit(self, a) -> bool:
        return self.leq(a, self.one_element)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.key}>"


def _fmt(value: Any) -> str:
    if isinstance(value, tuple):
        return "(" + ", ".join(_fmt(v) for v in value) + ")"
    if isinstance(value, float):
        if value == INF:
            return "inf"
        return f"{value:.12g}"
    return str(value)


# ------------------------------------------------------------------- laws

def _bc(alg: Algebra, row: np.ndarray, n: int) -> np.ndarray:
    return np.broadcast_to(row, (n, alg.dim))


def _u1_least(alg, a):
    return alg.leq_b(_bc(alg, alg.zero, len(a)), a)


def _u1_reflexive(alg, a):
    return alg.leq_b(a, a)


def _u1_antisymmetric(alg, a, b):
    return ~(alg.leq_b(a, b) & alg.leq_b(b, a)) | alg.eq_b(a, b)


def _u1_transitive(alg, a, b, c):
    return ~(alg.leq_b(a, b) & alg.leq_b(b, c)) | alg.leq_b(a, c)


def _u2_commutative(alg, a, b):
    return alg.eq_b(alg.star_b(a, b), alg.star_b(b, a))


def _u2_associative(alg, a, b, c):
    return alg.eq_b(alg.star_b(alg.star_b(a, b), c), alg.star_b(a, alg.star_b(b, c)))


def _u2_unit(alg, a):
    return alg.eq_b(alg.star_b(a, _bc(alg, alg.one, len(a))), a)


def _u2_unit_interval(alg, a, b):
    one = _bc(alg, alg.one, len(a))
    inside = alg.leq_b(a, one) & alg.leq_b(b, one)
    return ~inside | alg.leq_b(alg.star_b(a, b), one)


def _u3_commutative(alg, a, b):
    return alg.eq_b(alg.oplus_b(a, b), alg.oplus_b(b, a))


def _u3_associative(alg, a, b, c):
    return alg.eq_b(alg.oplus_b(alg.oplus_b(a, b), c), alg.oplus_b(a, alg.oplus_b(b, c)))


def _u3_unit(alg, a):
    return alg.eq_b(alg.oplus_b(a, _bc(alg, alg.zero, len(a))), a)


def _u3_monotone(alg, x, y, z):
    return ~alg.leq_b(x, y) | alg.leq_b(alg.oplus_b(x, z), alg.oplus_b(y, z))


def _u3_max_solution(alg, a, b, c):
    # a <= b: the solution exists and bounds every sampled solution c
    le = alg.leq_b(a, b)
    with np.errstate(invalid="ignore"):
        m = alg.max_solution_b(a, b)
        solves = alg.eq_b(alg.oplus_b(a, m), b)
        c_solves = alg.eq_b(alg.oplus_b(a, c), b)
        return ~le | (solves & (~c_solves | alg.leq_b(c, m)))


def _u4_constants(alg, a):
    n = len(a)
    zero, one = _bc(alg, alg.zero, n), _bc(alg, alg.one, n)
    return alg.eq_b(alg.neg_b(zero), one) & alg.eq_b(alg.neg_b(one), zero)


def _u4_antitone(alg, a, b):
    return ~alg.leq_b(a, b) | alg.leq_b(alg.neg_b(b), alg.neg_b(a))


def _u5_adjunction(alg, a, x, y):
    return alg.leq_b(y, alg.residuum_b(a, x)) == alg.leq_b(alg.star_b(a, y), x)


def _l1_star_monotone(alg, x, y, z):
    return ~alg.leq_b(x, y) | alg.leq_b(alg.star_b(x, z), alg.star_b(y, z))


def _l1_residuum_monotone(alg, x, y, z):
    return ~alg.leq_b(x, y) | alg.leq_b(alg.residuum_b(z, x), alg.residuum_b(z, y))


def _l1_residuum_antitone(alg, x, y, z):
    return ~alg.leq_b(x, y) | alg.leq_b(alg.residuum_b(y, z), alg.residuum_b(x, z))


def _l2_oplus_extensive(alg, x, y):
    return alg.leq_b(x, alg.oplus_b(x, y))


def _l3_residuum_order(alg, x, y):
    one = _bc(alg, alg.one, len(x))
    return ~alg.leq_b(one, alg.residuum_b(x, y)) | alg.leq_b(x, y)


def _l4_residuum_one(alg, x):
    return alg.eq_b(alg.residuum_b(_bc(alg, alg.one, len(x)), x), x)


# name -> (arity, check); names are grouped by prefix ("U3.monotone" -> "U3")
LAWS: dict[str, tuple[int, Callable[..., np.ndarray]]] = {
    "U1.least": (1, _u1_least),
    "U1.reflexive": (1, _u1_reflexive),
    "U1.antisymmetric": (2, _u1_antisymmetric),
    "U1.transitive": (3, _u1_transitive),
    "U2.commutative": (2, _u2_commutative),
    "U2.associative": (3, _u2_associative),
    "U2.unit": (1, _u2_unit),
    "U2.unit_interval": (2, _u2_unit_interval),
    "U3.commutative": (2, _u3_commutative),
    "U3.associative": (3, _u3_associative),
    "U3.unit": (1, _u3_unit),
    "U3.monotone": (3, _u3_monotone),
    "U3.max_solution": (3, _u3_max_solution),
    "U4.constants": (1, _u4_constants),
    "U4.antitone": (2, _u4_antitone),
    "U5.adjunction": (3, _u5_adjunction),
    "L1.star_monotone": (3, _l1_star_monotone),
    "L1.residuum_monotone": (3, _l1_residuum_monotone),
    "L1.residuum_antitone": (3, _l1_residuum_antitone),
    "L2.oplus_extensive": (2, _l2_oplus_extensive),
    "L3.residuum_order": (2, _l3_residuum_order),
    "L4.residuum_one": (1, _l4_residuum_one),
}

# laws whose inputs are drawn from the unit sub-interval
_UNIT_LAWS = {"U2.unit_interval"}


@dataclass
class LawResult:
    law: str
    checked: int
    failed: int
    witness: Optional[tuple] = None

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class LawReport:
    algebra: str
    seed: int
    samples: int
    exhaustive: bool
    results: dict[str, LawResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results.values())

    @property
    def failed_laws(self) -> list[str]:
        return [name for name, r in self.results.items() if not r.ok]

    @property
    def failed_groups(self) -> list[str]:
        return sorted({name.split(".")[0] for name in self.failed_laws})

    def recheck(self, alg: Algebra, law: str) -> bool:
        """Re-run the stored witness; True when it still fails."""
        witness = self.results[law].witness
        if witness is None:
            return False
        _, check = LAWS[law]
        rows = [alg.encode(v)[None, :] for v in witness]
        return not bool(check(alg, *rows)[0])

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra, "seed": self.seed, "samples": self.samples,
            "exhaustive": self.exhaustive, "ok": self.ok,
            "laws": {name: {"checked": r.checked, "failed": r.failed,
                            "witness": None if r.witness is None else [_jsonable(v) for v in r.witness]}
                     for name, r in self.results.items()},
        }


def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, float) and value == INF:
        return "inf"
    return value


def _specials(alg: Algebra) -> np.ndarray:
    rows = [alg.zero, alg.one]
    if alg.top is not None:
        rows.append(alg.top)
    return np.stack(rows)


def _sampled_tuples(alg: Algebra, arity: int, n: int, rng: np.random.Generator,
                    unit: bool) -> list[np.ndarray]:
    draw = alg.sample_unit if unit else alg.sample
    specials = _specials(alg)
    if unit:
        one = _bc(alg, alg.one, len(specials))
        specials = specials[alg.leq_b(specials, one)]
    cols = []
    for j in range(arity):
        col = draw(rng, n).copy()
        r = rng.random(n)
        pick = rng.integers(0, len(specials), n)
        mask = r < 0.05
        col[mask] = specials[pick[mask]]
        if j:
            src = rng.integers(0, j, n)
            copy = (r >= 0.05) & (r < 0.12)
            for i in range(j):
                sel = copy & (src == i)
                col[sel] = cols[i][sel]
        cols.append(col)
    return cols


def check_laws(alg: Algebra, samples: int = 10_000, seed: int = 0,
               laws: Optional[list[str]] = None) -> LawReport:
    """Test U1-U5 and the derived order properties on ``alg``.

    Finite carriers are checked exhaustively; otherwise ``samples`` tuples are
    drawn per law from a generator seeded with ``seed``.  The witness of a
    failed law is the first failing tuple in sample order.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    names = list(LAWS) if laws is None else laws
    results = {}
    for index, name in enumerate(names):
        arity, check = LAWS[name]
        if alg.finite:
            elems = alg.elements()
            if name in _UNIT_LAWS:
                elems = elems[alg.leq_b(elems, _bc(alg, alg.one, len(elems)))]
            idx = np.array(list(itertools.product(range(len(elems)), repeat=arity)))
            cols = [elems[idx[:, j]] for j in range(arity)]
        else:
            rng = np.random.default_rng([seed, index])
            cols = _sampled_tuples(alg, arity, samples, rng, name in _UNIT_LAWS)
        with np.errstate(invalid="ignore"):
            ok = np.asarray(check(alg, *cols), dtype=bool)
        bad = np.flatnonzero(~ok)
        witness = None
        if len(bad):
            i = bad[0]
            witness = tuple(alg.decode(c[i]) for c in cols)
        results[name] = LawResult(name, len(ok), len(bad), witness)
    return LawReport(alg.key, seed, samples, alg.finite, results)
