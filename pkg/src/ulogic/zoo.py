"""Concrete UL-algebras: the unit interval, the ray ``[0, inf]``, t-norm
algebras, finite tables, and pointwise products.

Use :func:`make_algebra` with an :class:`AlgebraSpec` or a string id such as
``"godel-unit"``, ``"prob-ray"`` or ``"product:godel-unit,prob-ray"``.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Sequence, Union

import numpy as np

from .algebra import INF, Algebra, AlgebraError, check_laws

__all__ = [
    "AlgebraSpec", "make_algebra", "catalogue", "GodelUnit", "TNormUnit",
    "Boolean2", "RayAlgebra", "ProductAlgebra", "TableAlgebra",
    "load_table", "SpecError",
]

GODEL_UNIT = "GODEL_UNIT"
PROB_RAY = "PROB_RAY"
RAY_VARIANT = "RAY_VARIANT"
PRODUCT = "PRODUCT"
BOOLEAN2 = "BOOLEAN2"
TNORM_UNIT = "TNORM_UNIT"
FINITE_TABLE = "FINITE_TABLE"

TNORMS = ("minimum", "product", "lukasiewicz")


class SpecError(AlgebraError, ValueError):
    pass


def _unit_grid(step: float) -> np.ndarray:
    if not 0 < step <= 1:
        raise ValueError("grid step must be in (0, 1]")
    pts = np.concatenate([np.arange(0.0, 1.0 + step / 2, step), [0.0, 0.5, 1.0]])
    return np.unique(np.round(np.clip(pts, 0.0, 1.0), 12))


def _ray_sample(rng: np.random.Generator, n: int) -> np.ndarray:
    # 0.6 on [0, 1], 0.3 on (1, 10], 0.1 at inf
    r = rng.random(n)
    u = rng.random(n)
    out = np.where(r < 0.6, u, 10.0 - 9.0 * u)
    out[r >= 0.9] = INF
    return out


def _fraction_ladder(k: int) -> np.ndarray:
    return np.linspace(0.0, 1.0, k)


def _inf_ladder(k: int) -> np.ndarray:
    if k < 3:
        return np.array([0.0, INF])[:k]
    return np.concatenate([[0.0], np.geomspace(0.25, 8.0, k - 2), [INF]])


class RealAlgebra(Algebra):
    """One-dimensional numeric carrier inside ``[0, inf]``."""

    upper = 1.0  # largest carrier value

    def encode(self, value: Any) -> np.ndarray:
        if isinstance(value, str):
            if value.strip().lower() in ("inf", "infinity", "+inf"):
                value = INF
            else:
                value = float(value)
        if isinstance(value, (list, tuple)):
            raise AlgebraError(f"{self.key} expects a number, got {value!r}")
        v = float(value)
        if np.isnan(v) or v < 0 or v > self.upper:
            raise AlgebraError(f"{v} is not in the carrier of {self.key}")
        return np.array([v])

    def decode(self, row: np.ndarray) -> float:
        return float(row[0])

    def meet_b(self, a, b):
        return np.minimum(a, b)

    def and_candidates(self, x, y, k):
        m = np.minimum(x, y)
        with np.errstate(invalid="ignore"):
            cand = m[:, None, :] * _fraction_ladder(k)[None, :, None]
        infinite = np.isinf(m[:, 0])
        if infinite.any():
            cand[infinite] = _inf_ladder(k)[None, :, None]
        return cand, np.ones(cand.shape[:2], dtype=bool)

    def random_and(self, x, y, rng):
        m = np.minimum(x, y)
        n = len(m)
        r = rng.random(n)
        u = rng.random(n)
        with np.errstate(invalid="ignore"):
            c = np.where(r < 0.1, 0.0, np.where(r < 0.2, m[:, 0], u * m[:, 0]))
        infinite = np.isinf(m[:, 0])
        if infinite.any():
            c[infinite] = _ray_sample(rng, int(infinite.sum()))
        return c[:, None]


class GodelUnit(RealAlgebra):
    """``[0, 1]`` with min, max, ``1 - x`` and the Goedel residuum."""

    key = "godel-unit"

    def __init__(self):
        self.zero = np.array([0.0])
        self.one = np.array([1.0])
        self.top = self.one

    def star_b(self, a, b):
        return np.minimum(a, b)

    def oplus_b(self, a, b):
        return np.maximum(a, b)

    def neg_b(self, a):
        return 1.0 - a

    def residuum_b(self, a, x):
        return np.where(self.leq_b(a, x)[:, None], 1.0, x)

    def max_solution_b(self, a, b):
        return np.array(b, dtype=float, copy=True)

    def sample(self, rng, n):
        return rng.random((n, 1))

    sample_unit = sample

    def grid_unit(self, step):
        return _unit_grid(step)[:, None]


class TNormUnit(GodelUnit):
    """``[0, 1]`` with a continuous t-norm, max as oplus, and ``1 - x``."""

    def __init__(self, tnorm: str):
        super().__init__()
        if tnorm not in TNORMS:
            raise SpecError(f"unknown t-norm {tnorm!r}; choose from {TNORMS}")
        self.tnorm = tnorm
        self.key = f"tnorm-{tnorm}"

    def star_b(self, a, b):
        if self.tnorm == "minimum":
            return np.minimum(a, b)
        if self.tnorm == "product":
            return a * b
        return np.maximum(0.0, a + b - 1.0)

    def residuum_b(self, a, x):
        if self.tnorm == "minimum":
            return super().residuum_b(a, x)
        if self.tnorm == "product":
            le = self.leq_b(a, x)[:, None]
            with np.errstate(divide="ignore", invalid="ignore"):
                return np.where(le, 1.0, x / np.where(a > 0, a, 1.0))
        return np.minimum(1.0, 1.0 - a + x)


class Boolean2(GodelUnit):
    """The two-element lattice ``{0, 1}``."""

    key = "boolean2"
    finite = True

    def encode(self, value):
        if isinstance(value, bool):
            value = int(value)
        row = super().encode(value)
        if row[0] not in (0.0, 1.0):
            raise AlgebraError(f"{row[0]} is not in the carrier of boolean2")
        return row

    def decode(self, row):
        return int(row[0])

    def elements(self):
        return np.array([[0.0], [1.0]])

    def sample(self, rng, n):
        return rng.integers(0, 2, (n, 1)).astype(float)

    sample_unit = sample

    def grid_unit(self, step):
        return self.elements()

    def and_candidates(self, x, y, k):
        cand = np.broadcast_to(self.elements()[None], (len(x), 2, 1))
        valid = self.leq_b(cand, x[:, None, :]) & self.leq_b(cand, y[:, None, :])
        return cand, valid

    def random_and(self, x, y, rng):
        m = np.minimum(x, y)
        return np.where(rng.random((len(x), 1)) < 0.5, m, 0.0)

    def and_candidate_count(self, k=8):
        return 2


class RayAlgebra(RealAlgebra):
    """``[0, inf]`` with star in {min, product} and oplus in {max, sum}.

    The product star follows ``0 * inf = 0`` and ``a * inf = inf`` for
    ``a != 0``; the sum absorbs ``inf``.  Negation is ``1 - x`` on ``[0, 1]``
    and ``0`` above.  With ``star="min"`` the monoid unit is ``inf``; there
    ``~0`` is also ``inf`` so that negation swaps the constants.
    """

    upper = INF

    def __init__(self, star: str = "product", oplus: str = "sum"):
        if star not in ("min", "product") or oplus not in ("max", "sum"):
            raise SpecError(f"unknown ray variant ({star}, {oplus})")
        self.star_kind = star
        self.oplus_kind = oplus
        self.key = "prob-ray" if (star, oplus) == ("product", "sum") else f"ray-{_SHORT[star]}-{oplus}"
        self.zero = np.array([0.0])
        self.one = np.array([INF if star == "min" else 1.0])
        self.top = np.array([INF])

    def star_b(self, a, b):
        if self.star_kind == "min":
            return np.minimum(a, b)
        with np.errstate(invalid="ignore"):
            return np.where((a == 0) | (b == 0), 0.0, a * b)

    def oplus_b(self, a, b):
        if self.oplus_kind == "max":
            return np.maximum(a, b)
        return a + b

    def neg_b(self, a):
        out = np.where(a <= 1.0, np.maximum(1.0 - a, 0.0), 0.0)
        if self.star_kind == "min":
            out = np.where(a == 0, INF, out)
        return out

    def residuum_b(self, a, x):
        if self.star_kind == "min":
            return np.where(self.leq_b(a, x)[:, None], INF, x)
        # a subnormal a can push the ratio past the float range; inf stands in for it
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            ratio = x / np.where((a == 0) | np.isinf(a), 1.0, a)
        out = np.where(np.isinf(a), 0.0, ratio)
        return np.where((a == 0) | np.isinf(x), INF, out)

    def max_solution_b(self, a, b):
        if self.oplus_kind == "max":
            return np.array(b, dtype=float, copy=True)
        with np.errstate(invalid="ignore"):
            return np.where(np.isinf(b), INF, np.maximum(b - a, 0.0))

    def sample(self, rng, n):
        return _ray_sample(rng, n)[:, None]

    def sample_unit(self, rng, n):
        if self.one[0] == INF:
            return self.sample(rng, n)
        return rng.random((n, 1))

    def grid_unit(self, step):
        g = _unit_grid(step)
        if self.one[0] == INF:
            g = np.concatenate([g, [2.0, INF]])
        return g[:, None]


_SHORT = {"min": "min", "product": "prod"}


class ProductAlgebra(Algebra):
    """Pointwise product of UL-algebras."""

    def __init__(self, components: Sequence[Algebra]):
        if len(components) < 2:
            raise SpecError("a product needs at least two components")
        self.components = tuple(components)
        self.key = "product:" + ",".join(c.key for c in components)
        self.dim = sum(c.dim for c in components)
        self.finite = all(c.finite for c in components)
        bounds = np.cumsum([0] + [c.dim for c in components])
        self.slices = [slice(int(lo), int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:])]
        self.zero = np.concatenate([c.zero for c in components])
        self.one = np.concatenate([c.one for c in components])
        tops = [c.top for c in components]
        self.top = None if any(t is None for t in tops) else np.concatenate(tops)

    def _map(self, name, *arrays):
        return np.concatenate(
            [getattr(c, name)(*(a[..., s] for a in arrays)) for c, s in zip(self.components, self.slices)],
            axis=-1)

    def leq_b(self, a, b):
        out = np.ones(a.shape[:-1], dtype=bool)
        for c, s in zip(self.components, self.slices):
            out &= c.leq_b(a[..., s], b[..., s])
        return out

    def eq_b(self, a, b):
        out = np.ones(a.shape[:-1], dtype=bool)
        for c, s in zip(self.components, self.slices):
            out &= c.eq_b(a[..., s], b[..., s])
        return out

    def star_b(self, a, b):
        return self._map("star_b", a, b)

    def oplus_b(self, a, b):
        return self._map("oplus_b", a, b)

    def neg_b(self, a):
        return self._map("neg_b", a)

    def residuum_b(self, a, x):
        return self._map("residuum_b", a, x)

    def max_solution_b(self, a, b):
        return self._map("max_solution_b", a, b)

    def meet_b(self, a, b):
        return self._map("meet_b", a, b)

    def sample(self, rng, n):
        return np.concatenate([c.sample(rng, n) for c in self.components], axis=1)

    def sample_unit(self, rng, n):
        return np.concatenate([c.sample_unit(rng, n) for c in self.components], axis=1)

    def _cartesian(self, parts):
        idx = np.indices([len(p) for p in parts]).reshape(len(parts), -1)
        return np.concatenate([p[i] for p, i in zip(parts, idx)], axis=1)

    def grid_unit(self, step):
        return self._cartesian([c.grid_unit(step) for c in self.components])

    def elements(self):
        return self._cartesian([c.elements() for c in self.components])

    def encode(self, value):
        if not isinstance(value, (list, tuple)) or len(value) != len(self.components):
            raise AlgebraError(f"{self.key} expects a {len(self.components)}-tuple, got {value!r}")
        return np.concatenate([c.encode(v) for c, v in zip(self.components, value)])

    def decode(self, row):
        return tuple(c.decode(row[s]) for c, s in zip(self.components, self.slices))

    def format(self, value):
        return "(" + ", ".join(c.format(v) for c, v in zip(self.components, value)) + ")"

    def and_candidate_count(self, k=8):
        return int(np.prod([c.and_candidate_count(k) for c in self.components]))

    def and_candidates(self, x, y, k):
        parts = [c.and_candidates(x[:, s], y[:, s], k) for c, s in zip(self.components, self.slices)]
        n = len(x)
        sizes = [p[0].shape[1] for p in parts]
        idx = np.indices(sizes).reshape(len(parts), -1)
        cand = np.concatenate([p[0][:, i, :] for p, i in zip(parts, idx)], axis=2)
        valid = np.ones((n, idx.shape[1]), dtype=bool)
        for p, i in zip(parts, idx):
            valid &= p[1][:, i]
        return cand, valid

    def random_and(self, x, y, rng):
        return np.concatenate([c.random_and(x[:, s], y[:, s], rng)
                               for c, s in zip(self.components, self.slices)], axis=1)


class TableAlgebra(Algebra):
    """Finite algebra given by explicit operation tables over ``0..n-1``.

    The residuum and the ``max_solution`` table are derived by search when
    not supplied; :func:`make_algebra` rejects tables that fail the laws.
    """

    finite = True

    def __init__(self, leq, star, oplus, neg, zero: int, one: int,
                 labels: Optional[Sequence[str]] = None, name: str = "table",
                 residuum=None, max_solution=None):
        self.n = n = len(neg)
        self.leq_t = np.asarray(leq, dtype=bool)
        self.star_t = np.asarray(star, dtype=int)
        self.oplus_t = np.asarray(oplus, dtype=int)
        self.neg_t = np.asarray(neg, dtype=int)
        for t, shape in ((self.leq_t, (n, n)), (self.star_t, (n, n)), (self.oplus_t, (n, n))):
            if t.shape != shape:
                raise SpecError(f"table of shape {t.shape}, expected {shape}")
        for t in (self.star_t, self.oplus_t, self.neg_t):
            if t.min() < 0 or t.max() >= n:
                raise SpecError("table entry outside the carrier")
        if not (0 <= zero < n and 0 <= one < n):
            raise SpecError("constant index outside the carrier")
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        if len(self.labels) != n or len(set(self.labels)) != n:
            raise SpecError("labels must be n distinct names")
        self.key = f"table:{name}"
        self.zero = np.array([float(zero)])
        self.one = np.array([float(one)])
        tops = [i for i in range(n) if self.leq_t[:, i].all()]
        self.top = np.array([float(tops[0])]) if tops else None
        self.res_t = (np.asarray(residuum, dtype=int) if residuum is not None
                      else self._derive(lambda a, x: [y for y in range(n) if self.leq_t[self.star_t[a, y], x]]))
        self.ms_t = (np.asarray(max_solution, dtype=int) if max_solution is not None
                     else self._derive(lambda a, b: [c for c in range(n) if self.oplus_t[a, c] == b]
                                       if self.leq_t[a, b] else []))
        self.meet_t = self._derive(lambda a, b: [c for c in range(n) if self.leq_t[c, a] and self.leq_t[c, b]])

    def _greatest(self, items):
        for g in items:
            if all(self.leq_t[s, g] for s in items):
                return g
        return -1

    def _derive(self, candidates):
        t = np.empty((self.n, self.n), dtype=int)
        for a in range(self.n):
            for b in range(self.n):
                t[a, b] = self._greatest(candidates(a, b))
        return t

    @staticmethod
    def _i(a):
        return a[..., 0].astype(int)

    def _lookup(self, table, a, b):
        out = table[self._i(a), self._i(b)].astype(float)
        return out[..., None]

    def leq_b(self, a, b):
        return self.leq_t[self._i(a), self._i(b)]

    def eq_b(self, a, b):
        return self._i(a) == self._i(b)

    def star_b(self, a, b):
        return self._lookup(self.star_t, a, b)

    def oplus_b(self, a, b):
        return self._lookup(self.oplus_t, a, b)

    def neg_b(self, a):
        return self.neg_t[self._i(a)].astype(float)[..., None]

    def residuum_b(self, a, x):
        return self._lookup(self.res_t, a, x)

    def max_solution_b(self, a, b):
        return self._lookup(self.ms_t, a, b)

    def meet_b(self, a, b):
        out = self._lookup(self.meet_t, a, b)
        if (out < 0).any():
            raise AlgebraError(f"{self.key} is not a meet-semilattice")
        return out

    def elements(self):
        return np.arange(self.n, dtype=float)[:, None]

    def sample(self, rng, n):
        return rng.integers(0, self.n, (n, 1)).astype(float)

    def sample_unit(self, rng, n):
        unit = self.grid_unit(0)
        return unit[rng.integers(0, len(unit), n)]

    def grid_unit(self, step):
        e = self.elements()
        return e[self.leq_t[:, int(self.one[0])]]

    def encode(self, value):
        if isinstance(value, str) and value in self.labels:
            return np.array([float(self.labels.index(value))])
        if isinstance(value, (int, np.integer)) and not isinstance(value, bool) and 0 <= value < self.n:
            return np.array([float(value)])
        raise AlgebraError(f"{value!r} is not an element of {self.key}")

    def decode(self, row):
        return self.labels[int(row[0])]

    def format(self, value):
        return str(value)

    def and_candidate_count(self, k=8):
        return self.n

    def and_candidates(self, x, y, k):
        cand = np.broadcast_to(self.elements()[None], (len(x), self.n, 1))
        valid = self.leq_b(cand, x[:, None, :]) & self.leq_b(cand, y[:, None, :])
        return cand, valid

    def random_and(self, x, y, rng):
        cand, valid = self.and_candidates(x, y, 0)
        keys = np.where(valid, rng.random(valid.shape), -1.0)
        return cand[np.arange(len(x)), keys.argmax(axis=1)]


# -------------------------------------------------------------------- specs

@dataclass(frozen=True)
class AlgebraSpec:
    """Description of a built-in algebra; ``id`` is the stable CLI name."""

    kind: str
    params: tuple = ()

    @property
    def id(self) -> str:
        if self.kind == GODEL_UNIT:
            return "godel-unit"
        if self.kind == PROB_RAY:
            return "prob-ray"
        if self.kind == BOOLEAN2:
            return "boolean2"
        if self.kind == RAY_VARIANT:
            star, oplus = self.params
            return f"ray-{_SHORT[star]}-{oplus}"
        if self.kind == TNORM_UNIT:
            return f"tnorm-{self.params[0]}"
        if self.kind == PRODUCT:
            ids = [p.id for p in self.params]
            if ids == ["godel-unit", "prob-ray"]:
                return "godel-x-prob-ray"
            return "product:" + ",".join(ids)
        if self.kind == FINITE_TABLE:
            return f"table:{self.params[0]}"
        raise SpecError(f"unknown algebra kind {self.kind!r}")

    def __str__(self) -> str:
        return self.id


# Example 2.1 style: the three-element Heyting chain 0 < h < 1 with meet,
# join and pseudo-complement.
HEYTING3 = {
    "name": "heyting3",
    "labels": ["0", "h", "1"],
    "leq": [[1, 1, 1], [0, 1, 1], [0, 0, 1]],
    "star": [[0, 0, 0], [0, 1, 1], [0, 1, 2]],
    "oplus": [[0, 1, 2], [1, 1, 2], [2, 2, 2]],
    "neg": [2, 0, 0],
    "zero": 0,
    "one": 2,
}

_TABLES: dict[str, dict] = {"heyting3": HEYTING3}


def _table_spec(doc: dict) -> AlgebraSpec:
    frozen = json.dumps(doc, sort_keys=True)
    return AlgebraSpec(FINITE_TABLE, (doc.get("name", "table"), frozen))


def catalogue() -> list[AlgebraSpec]:
    g, p = AlgebraSpec(GODEL_UNIT), AlgebraSpec(PROB_RAY)
    return [
        g,
        p,
        AlgebraSpec(RAY_VARIANT, ("min", "max")),
        AlgebraSpec(RAY_VARIANT, ("min", "sum")),
        AlgebraSpec(RAY_VARIANT, ("product", "max")),
        AlgebraSpec(BOOLEAN2),
        AlgebraSpec(TNORM_UNIT, ("minimum",)),
        AlgebraSpec(TNORM_UNIT, ("product",)),
        AlgebraSpec(TNORM_UNIT, ("lukasiewicz",)),
        AlgebraSpec(PRODUCT, (g, p)),
        _table_spec(HEYTING3),
    ]


def spec_from_id(text: str) -> AlgebraSpec:
    text = text.strip()
    for spec in catalogue():
        if spec.id == text:
            return spec
    if text == "ray-prod-sum":
        return AlgebraSpec(PROB_RAY)
    if text.startswith("product:"):
        parts = [spec_from_id(t) for t in _split_top(text[len("product:"):])]
        return AlgebraSpec(PRODUCT, tuple(parts))
    if text.startswith("table:"):
        ref = text[len("table:"):]
        if ref in _TABLES:
            return _table_spec(_TABLES[ref])
        return _table_spec(load_table_doc(ref))
    raise SpecError(f"unknown algebra id {text!r}")


def _split_top(text: str) -> list[str]:
    # split a product component list; nested products are not parenthesised
    return [t for t in text.split(",") if t]


def load_table_doc(path: Union[str, Path]) -> dict:
    doc = json.loads(Path(path).read_text())
    doc.setdefault("name", Path(path).stem)
    return doc


def load_table(path: Union[str, Path]) -> Algebra:
    """Load and law-check a finite table algebra from a JSON document."""
    return make_algebra(_table_spec(load_table_doc(path)))


def _table_from_doc(doc: dict) -> TableAlgebra:
    try:
        n = int(doc.get("size", len(doc["neg"])))
        labels = doc.get("labels")
        index = (lambda v: labels.index(v) if isinstance(v, str) else int(v)) if labels else int
        alg = TableAlgebra(
            leq=doc["leq"], star=doc["star"], oplus=doc["oplus"], neg=doc["neg"],
            zero=index(doc["zero"]), one=index(doc["one"]), labels=labels,
            name=doc.get("name", "table"),
            residuum=doc.get("residuum"), max_solution=doc.get("max_solution"))
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError(f"malformed table document: {exc}") from exc
    if alg.n != n:
        raise SpecError(f"size {n} does not match the tables ({alg.n})")
    for name, t in (("residuum", alg.res_t), ("max_solution", alg.ms_t)):
        if (t < 0).any():
            a, b = np.argwhere(t < 0)[0]
            if name == "residuum" or alg.leq_t[a, b]:
                raise SpecError(f"{name}({alg.labels[a]}, {alg.labels[b]}) has no greatest solution")
    return alg


@functools.lru_cache(maxsize=None)
def _build(spec: AlgebraSpec) -> Algebra:
    kind = spec.kind
    if kind == GODEL_UNIT:
        return GodelUnit()
    if kind == PROB_RAY:
        return RayAlgebra("product", "sum")
    if kind == BOOLEAN2:
        return Boolean2()
    if kind == RAY_VARIANT:
        if len(spec.params) != 2:
            raise SpecError("RAY_VARIANT takes (star, oplus)")
        return RayAlgebra(*spec.params)
    if kind == TNORM_UNIT:
        if len(spec.params) != 1:
            raise SpecError("TNORM_UNIT takes (tnorm,)")
        return TNormUnit(spec.params[0])
    if kind == PRODUCT:
        alg = ProductAlgebra([make_algebra(p) for p in spec.params])
        if spec.id == "godel-x-prob-ray":
            alg.key = "godel-x-prob-ray"
        return alg
    if kind == FINITE_TABLE:
        alg = _table_from_doc(json.loads(spec.params[1]))
        report = check_laws(alg)
        if not report.ok:
            raise SpecError(f"{alg.key} fails {', '.join(report.failed_laws)}")
        return alg
    raise SpecError(f"unknown algebra kind {kind!r}")


def make_algebra(spec: Union[AlgebraSpec, str]) -> Algebra:
    """Return the (shared, immutable) algebra handle for ``spec``."""
    if isinstance(spec, str):
        spec = spec_from_id(spec)
    if not isinstance(spec, AlgebraSpec):
        raise SpecError(f"not an algebra spec: {spec!r}")
    return _build(spec)


def table_document(alg: TableAlgebra) -> dict:
    """Serialise a table algebra back into the JSON document format."""
    return {
        "name": alg.key.split(":", 1)[1], "size": alg.n, "labels": alg.labels,
        "leq": alg.leq_t.astype(int).tolist(), "star": alg.star_t.tolist(),
        "oplus": alg.oplus_t.tolist(), "neg": alg.neg_t.tolist(),
        "zero": alg.labels[int(alg.zero[0])], "one": alg.labels[int(alg.one[0])],
    }

