import json

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given

from ulogic.algebra import INF, AlgebraError, AlgebraMismatch, PreconditionError, check_laws
from ulogic.zoo import (HEYTING3, GodelUnit, SpecError, catalogue, load_table, make_algebra,
                        table_document)

ALL = [s.id for s in catalogue()]


def test_catalogue_ids():
    assert ALL == ["godel-unit", "prob-ray", "ray-min-max", "ray-min-sum", "ray-prod-max",
                   "boolean2", "tnorm-minimum", "tnorm-product", "tnorm-lukasiewicz",
                   "godel-x-prob-ray", "table:heyting3"]


# Frozen from a brute-force grid oracle: the greatest y on a 1e-4 grid over
# [0, 20] plus inf with a * y <= x, using plain float arithmetic.
@pytest.mark.parametrize("alg, a, x, want", [
    ("prob-ray", 0.8, 0.4, 0.5),
    ("prob-ray", 0.5, 0.25, 0.5),
    ("prob-ray", 0.25, 0.5, 2.0),
    ("prob-ray", 0.0, 0.2, INF),
    ("prob-ray", INF, 3.0, 0.0),
    ("prob-ray", 2.0, INF, INF),
    ("prob-ray", 3.0, 1.5, 0.5),
    ("tnorm-lukasiewicz", 0.7, 0.6, 0.9),
    ("tnorm-product", 0.5, 0.2, 0.4),
    ("godel-unit", 0.7, 0.6, 0.6),
])
def test_residuum_against_grid_oracle(alg, a, x, want):
    assert make_algebra(alg).residuum(a, x).value == pytest.approx(want)


def test_worked_values():
    ray = make_algebra("prob-ray")
    assert ray.neg(2.5).value == 0
    assert ray.neg(0.3).value == pytest.approx(0.7)
    assert ray.max_solution(0.3, 0.8).value == pytest.approx(0.5)
    assert make_algebra("tnorm-lukasiewicz").star(0.7, 0.6).value == pytest.approx(0.3)
    # negation of 0 on the min-star rays is their unit, inf
    assert make_algebra("ray-min-sum").neg(0).value == INF


def test_residuum_of_one_is_identity():
    rng = np.random.default_rng(5)
    for alg_id in ("prob-ray", "godel-unit", "tnorm-product"):
        alg = make_algebra(alg_id)
        for x in alg.sample(rng, 100)[:, 0]:
            assert alg.eq(alg.residuum(alg.one_element, float(x)), float(x))


def test_max_solution_precondition():
    with pytest.raises(PreconditionError):
        make_algebra("prob-ray").max_solution(0.8, 0.3)


def test_elements_do_not_mix():
    e = make_algebra("godel-unit").element(0.5)
    with pytest.raises(AlgebraMismatch):
        make_algebra("prob-ray").star(e, 0.5)


def test_carrier_checks():
    with pytest.raises(AlgebraError):
        make_algebra("godel-unit").element(1.5)
    with pytest.raises(AlgebraError):
        make_algebra("boolean2").element(0.5)
    assert make_algebra("prob-ray").element("inf").value == INF


def test_product_is_componentwise():
    prod = make_algebra("godel-x-prob-ray")
    assert prod.star((0.4, 2.0), (0.7, 0.25)).value == (0.4, 0.5)
    assert prod.residuum((0.7, 0.5), (0.4, 0.25)).value == (0.4, 0.5)
    assert prod.leq((0.2, 3.0), (0.3, INF))
    assert not prod.leq((0.2, 3.0), (0.1, INF))


def test_heyting_table():
    h = make_algebra("table:heyting3")
    assert h.neg("h").value == "0"
    assert h.residuum("h", "0").value == "0"
    assert h.residuum("1", "h").value == "h"
    assert h.elements().shape == (3, 1)


@pytest.mark.parametrize("alg_id", ALL)
def test_laws_hold(alg_id):
    report = check_laws(make_algebra(alg_id), samples=2000, seed=11)
    assert report.ok, report.failed_laws


def test_laws_deterministic():
    alg = make_algebra("prob-ray")
    assert check_laws(alg, 500, seed=3).to_dict() == check_laws(alg, 500, seed=3).to_dict()


class BrokenOplus(GodelUnit):
    """Negative control: oplus replaced by min, so 0 is no longer its unit."""

    key = "broken-oplus"

    def oplus_b(self, a, b):
        return np.minimum(a, b)


def test_broken_oplus_is_caught():
    alg = BrokenOplus()
    report = check_laws(alg, samples=500, seed=0)
    assert not report.ok
    assert "U3.unit" in report.failed_laws
    assert "U3" in report.failed_groups
    assert report.recheck(alg, "U3.unit")


def test_table_document_round_trip(tmp_path):
    path = tmp_path / "h3.json"
    path.write_text(json.dumps(dict(HEYTING3, name="copy")))
    alg = load_table(path)
    assert table_document(alg)["neg"] == [2, 0, 0]
    assert make_algebra(f"table:{path}").key == alg.key


def test_table_failing_laws_is_rejected(tmp_path):
    bad = dict(HEYTING3, name="bad", neg=[0, 0, 0])
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    with pytest.raises(SpecError):
        load_table(path)


# Order comparisons are tolerant (eps 1e-9), so values come from a 1/64 grid
# where every nonzero gap the law depends on is far above the tolerance.
dyadic = st.integers(0, 64 * 50).map(lambda i: i / 64)
ray_values = st.one_of(dyadic, st.just(INF), st.sampled_from([0.0, 0.5, 1.0]))


@given(ray_values, ray_values, ray_values)
def test_prob_ray_adjunction(a, y, x):
    ray = make_algebra("prob-ray")
    assert ray.leq(ray.star(a, y), x) == ray.leq(y, ray.residuum(a, x))


@given(st.floats(0, 1), st.floats(0, 1))
def test_lukasiewicz_residuum_closed_form(a, x):
    got = make_algebra("tnorm-lukasiewicz").residuum(a, x).value
    assert got == pytest.approx(min(1.0, 1.0 - a + x), abs=1e-12)
