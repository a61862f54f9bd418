"""Command-line entry point: ``python -m ulogic COMMAND ...``.

Exit codes: 0 when the check succeeds (laws hold, formula holds, proof
accepted, space valid), 1 when it does not, 2 on usage or input errors.
``ULOGIC_SEED`` sets the default seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from .algebra import INF, AlgebraError, _jsonable, check_laws
from .evaluation import (MIN, EvaluationError, Evaluation, TablePolicy, evaluate, policy_from_id,
                         validate)
from .formula import ParseError, parse, unparse
from .probability import (FuzzyRandomJudgment, HypothesisViolation, SpaceError, extend_to_evaluation,
                          load_space, mp_bounds, restrict_evaluation, validate_space)
from .proof import ProofScriptError, check_proof, load_script
from .tautology import COUNTEREXAMPLE, Strategy, StrategyError, check, default_seed
from .zoo import catalogue, make_algebra

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, default=_json_default))
    else:
        print(text)


def _json_default(obj):
    if isinstance(obj, float) and obj == INF:
        return "inf"
    if hasattr(obj, "tolist"):
        return obj.tolist()
    return str(obj)


def _clean(value: Any) -> Any:
    """Make values JSON-safe (``inf`` becomes the string ``"inf"``)."""
    if isinstance(value, dict):
        return {k: _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    return _jsonable(value)


def _fmt(alg, value) -> str:
    return alg.format(value)


# ----------------------------------------------------------------- commands

def cmd_catalogue(args) -> int:
    rows = []
    for spec in catalogue():
        alg = make_algebra(spec)
        rows.append({"id": spec.id, "kind": spec.kind, "finite": alg.finite, "dim": alg.dim,
                     "zero": _clean(alg.decode(alg.zero)), "one": _clean(alg.decode(alg.one))})
    text = "\n".join(f"{r['id']:<20} {r['kind']:<14} {'finite' if r['finite'] else 'infinite'}" for r in rows)
    _emit(args, {"algebras": rows}, text)
    return OK


def cmd_laws(args) -> int:
    seed = default_seed() if args.seed is None else args.seed
    ids = [s.id for s in catalogue()] if args.algebra == "all" else [args.algebra]
    reports = [check_laws(make_algebra(a), samples=args.samples, seed=seed) for a in ids]
    lines = []
    for rep in reports:
        mode = "exhaustive" if rep.exhaustive else f"{rep.samples} samples, seed {rep.seed}"
        lines.append(f"{rep.algebra}: {'ok' if rep.ok else 'FAILED'} ({mode})")
        for name in rep.failed_laws:
            r = rep.results[name]
            lines.append(f"  {name}: {r.failed}/{r.checked} failed, witness {r.witness}")
    _emit(args, {"reports": [rep.to_dict() for rep in reports],
                 "ok": all(r.ok for r in reports)}, "\n".join(lines))
    return OK if all(r.ok for r in reports) else FAIL


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def evaluation_from_document(doc: dict, algebra: Optional[str] = None) -> Evaluation:
    """Build an evaluation from an assignment document.

    ``{"algebra": ID, "atoms": {name: value}, "policy": "min" | "table" | ...,
    "fallback": ID, "table": [{"left": F, "right": G, "value": V}]}``; only
    ``atoms`` is required.
    """
    if not isinstance(doc, dict) or not isinstance(doc.get("atoms", {}), dict):
        raise UsageError("assignment must be an object with an 'atoms' mapping")
    alg_id = algebra or doc.get("algebra")
    if not alg_id:
        raise UsageError("no algebra given (use --algebra or an 'algebra' field)")
    alg = make_algebra(alg_id)
    fallback = policy_from_id(doc.get("fallback", "min"))
    table = doc.get("table") or []
    name = doc.get("policy", "table" if table else "min")
    if name == "table":
        try:
            entries = [(t["left"], t["right"], t["value"]) for t in table]
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed table entry: {exc}") from exc
        policy = TablePolicy(entries, fallback)
    else:
        policy = policy_from_id(name)
    return Evaluation.of(alg, doc.get("atoms", {}), policy)


def cmd_eval(args) -> int:
    f = parse(args.formula)
    doc = _read_json(args.assign) if args.assign else {"atoms": {}}
    if args.policy:
        doc = dict(doc, policy=args.policy)
    ev = evaluation_from_document(doc, args.algebra)
    report = validate(ev, f)
    if not report.ok:
        viol = [{"subformula": v.subformula, "kind": v.kind, "message": v.message} for v in report.violations]
        if any(v.kind == "unassigned" for v in report.violations):
            raise UsageError("; ".join(v.message for v in report.violations))
        _emit(args, {"formula": unparse(f), "algebra": ev.algebra.key, "lawful": False, "violations": viol},
              "\n".join(f"unlawful: {v['subformula']}: {v['message']}" for v in viol))
        return FAIL
    value = evaluate(f, ev)
    holds = ev.algebra.leq(ev.algebra.one_element, value)
    _emit(args, {"formula": unparse(f), "algebra": ev.algebra.key, "lawful": True,
                 "value": _clean(value.value), "at_least_one": holds},
          f"{unparse(f)} = {value}")
    return OK


def cmd_taut(args) -> int:
    alg = make_algebra(args.algebra)
    policy = policy_from_id(args.policy) if args.policy else MIN
    strategy = Strategy.parse(args.strategy, search_and=args.search_and, policy=policy)
    v = check(args.formula, alg, strategy)
    if v.outcome == COUNTEREXAMPLE:
        w = v.witness
        atoms_ = ", ".join(f"{k}={alg.format(x)}" for k, x in w.atoms.items())
        table = "".join(f"\n  e({unparse(l)} & {unparse(r)}) = {alg.format(x)}" for l, r, x in w.and_table)
        text = f"COUNTEREXAMPLE: {atoms_} gives {w.value}{table}"
    else:
        text = f"{v.outcome} ({v.stats['evaluations']} evaluations)"
    _emit(args, _clean(v.to_dict()), text)
    return FAIL if v.outcome == COUNTEREXAMPLE else OK


def cmd_proof_check(args) -> int:
    script = load_script(args.script)
    v = check_proof(script)
    fail = v.first_failure
    text = (f"accepted: {unparse(script.conclusion)} in {script.theory.id} ({len(script.lines)} lines)"
            if v.accepted else f"rejected at line {fail.number}: {fail.message}")
    _emit(args, v.to_dict(), text)
    return OK if v.accepted else FAIL


def cmd_prob_validate(args) -> int:
    rep = validate_space(load_space(args.space))
    text = "valid" if rep.ok else "\n".join(f"{k}: {m}" for k, m in rep.violations)
    if rep.ok:
        text += " (" + ", ".join(f"{k} on {n}" for k, n in rep.checked.items()) + ")"
    _emit(args, rep.to_dict(), text)
    return OK if rep.ok else FAIL


def cmd_prob_extend(args) -> int:
    space = load_space(args.space)
    rep = validate_space(space)
    if not rep.ok:
        _emit(args, rep.to_dict(), "\n".join(f"{k}: {m}" for k, m in rep.violations))
        return FAIL
    ev = extend_to_evaluation(space, check=False)
    out = {"algebra": ev.algebra.key, "atoms": {k: _clean(e.value) for k, e in ev.atoms.items()},
           "policy": ev.policy.id}
    lines = [f"{k} = {e}" for k, e in ev.atoms.items()]
    if args.formula:
        value = evaluate(args.formula, ev)
        out["formula"] = unparse(parse(args.formula))
        out["value"] = _clean(value.value)
        lines = [f"{out['formula']} = {value}"]
    _emit(args, out, "\n".join(lines))
    return OK


def cmd_prob_restrict(args) -> int:
    space = load_space(args.space)
    if args.assign:
        ev = evaluation_from_document(_read_json(args.assign), "prob-ray")
    else:
        ev = extend_to_evaluation(space)
    try:
        res = restrict_evaluation(ev, space)
    except HypothesisViolation as exc:
        _emit(args, {"hypothesis": False, "message": str(exc)}, f"hypothesis violated: {exc}")
        return FAIL
    out = dict(res.to_dict(), hypothesis=True)
    if args.formula:
        out["value"] = _clean(evaluate(args.formula, ev).value)
    rep = res.report
    text = "probability function" if rep.ok else "\n".join(f"{k}: {m}" for k, m in rep.violations)
    _emit(args, out, text)
    return OK if rep.ok else FAIL


def cmd_bounds(args) -> int:
    try:
        b = mp_bounds(FuzzyRandomJudgment(args.t_phi, args.p_phi), FuzzyRandomJudgment(args.t_imp, args.p_imp))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(args, b.to_dict(), str(b))
    return OK


# ------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ulogic", description="Uncertain propositional logic toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def command(name, fn, help_):
        c = sub.add_parser(name, help=help_)
        c.add_argument("--format", choices=("text", "json"), default="text")
        c.set_defaults(fn=fn)
        return c

    command("catalogue", cmd_catalogue, "list the built-in algebras")
    c = command("laws", cmd_laws, "check the algebra laws")
    c.add_argument("--algebra", required=True, help="algebra id, or 'all'")
    c.add_argument("--samples", type=int, default=10_000)
    c.add_argument("--seed", type=int)
    c = command("eval", cmd_eval, "evaluate a formula")
    c.add_argument("--algebra")
    c.add_argument("--formula", required=True)
    c.add_argument("--assign", help="assignment JSON file")
    c.add_argument("--policy", help="conjunction policy (min, star, product-then-min, table)")
    c = command("taut", cmd_taut, "search for a counterexample")
    c.add_argument("--algebra", required=True)
    c.add_argument("--formula", required=True)
    c.add_argument("--strategy", default="grid:0.1", help="exhaustive | grid:STEP | random:N[:SEED]")
    c.add_argument("--search-and", action="store_true", help="range over all lawful conjunction values")
    c.add_argument("--policy", help="fixed conjunction policy (default min)")
    c = command("proof-check", cmd_proof_check, "check a proof script")
    c.add_argument("--script", required=True)
    c = command("prob-validate", cmd_prob_validate, "validate a probability space")
    c.add_argument("--space", required=True)
    c = command("prob-extend", cmd_prob_extend, "extend P to an evaluation")
    c.add_argument("--space", required=True)
    c.add_argument("--formula")
    c = command("prob-restrict", cmd_prob_restrict, "restrict an evaluation to the events")
    c.add_argument("--space", required=True)
    c.add_argument("--assign", help="evaluation to restrict (default: the extension of the space)")
    c.add_argument("--formula")
    c = command("bounds", cmd_bounds, "modus ponens bounds for (t, p) judgments")
    for flag in ("--p-phi", "--p-imp", "--t-phi", "--t-imp"):
        c.add_argument(flag, type=float, required=True)
    return p


_INPUT_ERRORS = (UsageError, ParseError, StrategyError, ProofScriptError, SpaceError,
                 AlgebraError, EvaluationError, ValueError, OSError)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.fn(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
