"""Uncertain propositional logic: UL-algebras, evaluations with a
non-truth-functional conjunction, tautology search, proof checking and a
bridge to finite probability spaces."""

from .algebra import INF, Algebra, AlgebraError, Element, check_laws
from .evaluation import (MIN, PRODUCT_THEN_MIN, STAR, Evaluation, TablePolicy, evaluate,
                         policy_from_id, validate)
from .formula import ParseError, parse, unparse
from .probability import (FuzzyRandomJudgment, ProbabilitySpace, extend_to_evaluation, mp_bounds,
                          restrict_evaluation, validate_space)
from .proof import check_proof, consistency_probe, derive_closure, instantiate, load_script
from .tautology import Strategy, check, check_suite
from .zoo import AlgebraSpec, catalogue, make_algebra

__version__ = "0.1.0"

__all__ = [
    "INF", "Algebra", "AlgebraError", "Element", "check_laws", "MIN", "STAR", "PRODUCT_THEN_MIN",
    "Evaluation", "TablePolicy", "evaluate", "policy_from_id", "validate", "ParseError", "parse",
    "unparse", "FuzzyRandomJudgment", "ProbabilitySpace", "extend_to_evaluation", "mp_bounds",
    "restrict_evaluation", "validate_space", "check_proof", "consistency_probe", "derive_closure",
    "instantiate", "load_script", "Strategy", "check", "check_suite", "AlgebraSpec", "catalogue",
    "make_algebra",
]
