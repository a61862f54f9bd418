"""Hilbert-style proof checking for the base logic and its theories.

A proof script is plain text::

    theory: GFL
    # comments start with '#'
    1. (p -> q) -> (p -> q)          ;; AXIOM(A2){$A=p -> q}
    2. ...                           ;; MP(1, 3)
    3. ...                           ;; DEF(2)

``AXIOM(id){bindings}`` instantiates a schema (bindings are optional and are
inferred by matching when absent), ``MP(i, j)`` needs line ``j`` to be
``line_i -> this`` and ``DEF(i)`` restates line ``i`` with abbreviations
expanded or introduced.  All comparisons are made on desugared formulas.

Custom theories are declared in the header::

    theory: CUSTOM(mine) extends GFL
    axiom X1: $A -> ~~$A
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from itertools import product
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

from .formula import (BOTTOM, TOP, Formula, Implies, ParseError, SchemaMismatch, coerce,
                      desugar, match_schema, metavariables, parse, parse_schema, size,
                      subformulas, substitute, unparse)

__all__ = [
    "Schema", "Theory", "ProofLine", "ProofScript", "LineResult", "ProofVerdict",
    "ProofScriptError", "ClosureCapExceeded", "Closure", "ProbeResult",
    "SCHEMAS", "THEORIES", "schema", "theory", "instantiate", "parse_script",
    "load_script", "check_proof", "derive_closure", "consistency_probe",
    "bundled_scripts", "bundled_path", "mutations", "INCONSISTENT", "NO_DERIVATION_FOUND",
]


class ProofScriptError(ValueError):
    """Malformed script, unknown theory or schema, or a bad line reference."""


class ClosureCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Schema:
    id: str
    text: str

    @property
    def formula(self) -> Formula:
        return desugar(parse_schema(self.text))

    @property
    def variables(self) -> list[str]:
        return sorted(metavariables(self.formula))


def _schemas(pairs):
    return {sid: Schema(sid, text) for sid, text in pairs}


SCHEMAS: dict[str, Schema] = _schemas([
    ("A1", "($A -> $B) -> (($B -> $C) -> ($A -> $C))"),
    ("A2", "$A -> $A"),
    ("A3", "($A -> ($B -> $C)) -> ($B -> ($A -> $C))"),
    ("A4", "$A & $B -> $A"),
    ("A5", "$A & $B -> $B & $A"),
    ("A6a", "$A \\/ $B -> $B \\/ $A"),
    ("A6b", "0 \\/ $A -> $A"),
    ("A7", "0 -> $A"),
    ("GFL1", "(($A -> $B) -> $C) -> ((($B -> $A) -> $C) -> $C)"),
    ("GFL2", "($A -> ($B -> $C)) -> ($A & $B -> $C)"),
    ("GFL3", "$A -> ($B -> $A)"),
    ("GFL4", "$A -> $A \\/ $B"),
    ("GFL5", "($A \\/ $B) \\/ $C <-> $A \\/ ($B \\/ $C)"),
    ("GFL6", "$A \\/ $B -> (($A -> $B) -> $B)"),
    ("GFL7", "~~$A <-> $A"),
    ("GPL1", "~~$A -> $A"),
    ("GPL2", "$A -> $A \\/ $B"),
    ("GPL3", "$A & ~$A <-> ~($A \\/ ~$A)"),
    ("FRL1", "$A -> $A \\/ $B"),
    ("FRL2", "~~$A -> $A"),
])

_UPL = ("A1", "A2", "A3", "A4", "A5", "A6a", "A6b", "A7")


@dataclass(frozen=True)
class Theory:
    id: str
    schemas: tuple[Schema, ...]
    # algebra ids the theory's provable formulas are checked against
    reference: tuple[str, ...]

    def __post_init__(self):
        ids = [s.id for s in self.schemas]
        if len(ids) != len(set(ids)):
            raise ProofScriptError(f"duplicate schema ids in theory {self.id}")
        for s in self.schemas:
            try:
                s.formula
            except ParseError as exc:
                raise ProofScriptError(f"schema {s.id}: {exc}") from exc

    def schema(self, sid: str) -> Schema:
        for s in self.schemas:
            if s.id == sid:
                return s
        raise ProofScriptError(f"theory {self.id} has no axiom schema {sid}")

    def extend(self, name: str, extra: Iterable[Schema]) -> "Theory":
        return Theory(f"CUSTOM({name})", self.schemas + tuple(extra), self.reference)


def _theory(tid, extra, reference):
    return Theory(tid, tuple(SCHEMAS[s] for s in _UPL + extra), reference)


def _upl_reference():
    from .zoo import catalogue
    return tuple(spec.id for spec in catalogue())


THEORIES: dict[str, Theory] = {
    "UPL": _theory("UPL", (), _upl_reference()),
    "GFL": _theory("GFL", tuple(f"GFL{i}" for i in range(1, 8)), ("godel-unit",)),
    "GPL": _theory("GPL", ("GPL1", "GPL2", "GPL3"), ("prob-ray",)),
    "FRL": _theory("FRL", ("FRL1", "FRL2"), ("godel-x-prob-ray",)),
}


def theory(tid: Union[str, Theory]) -> Theory:
    if isinstance(tid, Theory):
        return tid
    try:
        return THEORIES[tid.upper()]
    except KeyError:
        raise ProofScriptError(f"unknown theory {tid!r}") from None


def schema(sid: str) -> Schema:
    try:
        return SCHEMAS[sid]
    except KeyError:
        raise ProofScriptError(f"unknown axiom schema {sid!r}") from None


def _binding_formula(value: Union[str, Formula]) -> Formula:
    return desugar(coerce(value))


def instantiate(schema_id: Union[str, Schema], bindings: dict, theory_: Optional[Theory] = None) -> Formula:
    """Substitute ``bindings`` (``{"$A": "p"}`` or ``{"A": ...}``) into a schema."""
    s = schema_id if isinstance(schema_id, Schema) else (
        theory_.schema(schema_id) if theory_ else schema(schema_id))
    sigma = {(k if k.startswith("$") else "$" + k): _binding_formula(v) for k, v in bindings.items()}
    missing = [v for v in s.variables if v not in sigma]
    if missing:
        raise ProofScriptError(f"{s.id}: no binding for {', '.join(missing)}")
    return substitute(s.formula, sigma)


# ------------------------------------------------------------------ scripts

@dataclass(frozen=True)
class ProofLine:
    number: int
    formula: Formula
    rule: str  # "AXIOM" | "MP" | "DEF"
    schema: Optional[str] = None
    bindings: Optional[tuple[tuple[str, Formula], ...]] = None
    refs: tuple[int, ...] = ()

    def justification(self) -> str:
        if self.rule == "AXIOM":
            text = f"AXIOM({self.schema})"
            if self.bindings:
                text += "{" + ", ".join(f"{k}={unparse(v)}" for k, v in self.bindings) + "}"
            return text
        return f"{self.rule}({', '.join(map(str, self.refs))})"

    def text(self) -> str:
        return f"{self.number}. {unparse(self.formula)} ;; {self.justification()}"


@dataclass
class ProofScript:
    theory: Theory
    lines: list[ProofLine]
    name: str = ""

    def text(self) -> str:
        head = [f"theory: {self.theory.id}"]
        base = _base_theory(self.theory)
        if base is not self.theory:
            head[0] += f" extends {base.id}"
            head += [f"axiom {s.id}: {s.text}" for s in self.theory.schemas[len(base.schemas):]]
        return "\n".join(head + [line.text() for line in self.lines]) + "\n"

    @property
    def conclusion(self) -> Formula:
        return self.lines[-1].formula


def _base_theory(t: Theory) -> Theory:
    if t.id in THEORIES:
        return t
    best = THEORIES["UPL"]
    for cand in THEORIES.values():
        n = len(cand.schemas)
        if cand.schemas == t.schemas[:n] and n > len(best.schemas):
            best = cand
    return best


_HEADER = re.compile(r"theory:\s*(?:CUSTOM\((?P<name>[^)]+)\)\s*(?:extends\s+(?P<base>\w+))?|(?P<id>\w+))\s*\Z",
                     re.IGNORECASE)
_AXIOM_DECL = re.compile(r"axiom\s+(?P<id>[A-Za-z_][\w]*)\s*:\s*(?P<text>.+)\Z")
_LINE = re.compile(r"(?P<n>\d+)\.\s*(?P<formula>.*?)\s*;;\s*(?P<just>.+)\Z")
_JUST = re.compile(
    r"(?:(?P<ax>AXIOM)\(\s*(?P<sid>[\w]+)\s*\)\s*(?:\{(?P<bind>.*)\})?"
    r"|(?P<mp>MP)\(\s*(?P<i>\d+)\s*,\s*(?P<j>\d+)\s*\)"
    r"|(?P<df>DEF(?:-EXPANSION)?)\(\s*(?P<k>\d+)\s*\))\s*\Z",
    re.IGNORECASE,
)


def _parse_bindings(text: str, where: str) -> tuple[tuple[str, Formula], ...]:
    out = []
    # split on commas that start a new "$X=" binding
    for part in re.split(r",\s*(?=\$?[A-Za-z_]\w*\s*=)", text.strip()):
        if not part.strip():
            continue
        name, eq, value = part.partition("=")
        if not eq:
            raise ProofScriptError(f"{where}: bad binding {part!r}")
        name = name.strip()
        name = name if name.startswith("$") else "$" + name
        try:
            out.append((name, parse(value.strip())))
        except ParseError as exc:
            raise ProofScriptError(f"{where}: binding {name}: {exc}") from exc
    return tuple(out)


def parse_script(text: str, name: str = "") -> ProofScript:
    th: Optional[Theory] = None
    custom: Optional[tuple[str, Theory]] = None
    extra: list[Schema] = []
    lines: list[ProofLine] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"{name or 'script'}:{lineno}"
        if th is None and custom is None:
            m = _HEADER.match(line)
            if not m:
                raise ProofScriptError(f"{where}: expected 'theory: ID' header")
            if m.group("id"):
                th = theory(m.group("id"))
            else:
                custom = (m.group("name").strip(), theory(m.group("base") or "UPL"))
            continue
        m = _AXIOM_DECL.match(line)
        if m:
            if custom is None or lines:
                raise ProofScriptError(f"{where}: axiom declarations belong to a CUSTOM header")
            s = Schema(m.group("id"), m.group("text").strip())
            try:
                s.formula
            except ParseError as exc:
                raise ProofScriptError(f"{where}: axiom {s.id}: {exc}") from exc
            extra.append(s)
            continue
        if custom is not None and th is None:
            th = custom[1].extend(custom[0], extra)
        m = _LINE.match(line)
        if not m:
            raise ProofScriptError(f"{where}: expected 'n. formula ;; justification'")
        number = int(m.group("n"))
        if number != len(lines) + 1:
            raise ProofScriptError(f"{where}: line numbered {number}, expected {len(lines) + 1}")
        try:
            formula = parse(m.group("formula"))
        except ParseError as exc:
            raise ProofScriptError(f"{where}: {exc}") from exc
        j = _JUST.match(m.group("just").strip())
        if not j:
            raise ProofScriptError(f"{where}: bad justification {m.group('just')!r}")
        if j.group("ax"):
            bind = _parse_bindings(j.group("bind"), where) if j.group("bind") is not None else None
            pl = ProofLine(number, formula, "AXIOM", j.group("sid"), bind)
        elif j.group("mp"):
            pl = ProofLine(number, formula, "MP", refs=(int(j.group("i")), int(j.group("j"))))
        else:
            pl = ProofLine(number, formula, "DEF", refs=(int(j.group("k")),))
        for r in pl.refs:
            if not 1 <= r < number:
                raise ProofScriptError(f"{where}: line {number} refers to line {r}, "
                                       "which is not an earlier line")
        lines.append(pl)
    if th is None:
        if custom is None:
            raise ProofScriptError(f"{name or 'script'}: missing 'theory:' header")
        th = custom[1].extend(custom[0], extra)
    if not lines:
        raise ProofScriptError(f"{name or 'script'}: no proof lines")
    return ProofScript(th, lines, name)


def bundled_path(name: str) -> Path:
    base = name.removeprefix("proofs/")
    if not base.endswith(".upl"):
        base += ".upl"
    return Path(str(resources.files("ulogic") / "proofs" / base))


def bundled_scripts() -> list[str]:
    folder = resources.files("ulogic") / "proofs"
    return sorted(p.name for p in folder.iterdir() if p.name.endswith(".upl"))


def load_script(path: Union[str, Path]) -> ProofScript:
    """Read a script from disk; ``proofs/NAME`` falls back to the bundled copy."""
    p = Path(path)
    if not p.exists():
        alt = bundled_path(str(path))
        if str(path).startswith("proofs/") or p.parent == Path("."):
            if alt.exists():
                p = alt
    try:
        text = p.read_text()
    except OSError as exc:
        raise ProofScriptError(f"cannot read {path}: {exc}") from exc
    return parse_script(text, p.name)


# ----------------------------------------------------------------- checking

@dataclass(frozen=True)
class LineResult:
    number: int
    ok: bool
    message: str = ""


@dataclass
class ProofVerdict:
    script: ProofScript
    results: list[LineResult]

    @property
    def accepted(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def first_failure(self) -> Optional[LineResult]:
        return next((r for r in self.results if not r.ok), None)

    def to_dict(self) -> dict:
        fail = self.first_failure
        return {
            "theory": self.script.theory.id,
            "accepted": self.accepted,
            "conclusion": unparse(self.script.conclusion),
            "lines": len(self.script.lines),
            "first_failure": None if fail is None else {"line": fail.number, "message": fail.message},
        }


def _check_axiom(th: Theory, line: ProofLine, target: Formula) -> str:
    s = th.schema(line.schema)
    given = {}
    for name, value in line.bindings or ():
        if name not in s.variables:
            return f"{s.id} has no metavariable {name}"
        given[name] = desugar(value)
    try:
        match_schema(s.formula, target, given)
    except SchemaMismatch as exc:
        return f"not an instance of {s.id}: {exc}"
    return ""


def check_proof(script: Union[ProofScript, str]) -> ProofVerdict:
    """Check every line; the verdict records each line's status."""
    if isinstance(script, str):
        script = parse_script(script)
    th = script.theory
    core = [desugar(line.formula) for line in script.lines]
    results = []
    for idx, line in enumerate(script.lines):
        target = core[idx]
        for r in line.refs:
            if not 1 <= r <= idx:
                raise ProofScriptError(f"line {line.number} refers to line {r}, which is not an earlier line")
        if line.rule == "AXIOM":
            msg = _check_axiom(th, line, target)
        elif line.rule == "MP":
            i, j = line.refs
            want = Implies(core[i - 1], target)
            msg = "" if core[j - 1] == want else (
                f"line {j} is not '{unparse(Implies(script.lines[i - 1].formula, line.formula))}'")
        else:
            k = line.refs[0]
            msg = "" if core[k - 1] == target else f"line {k} differs after expanding abbreviations"
        results.append(LineResult(line.number, not msg, msg))
    return ProofVerdict(script, results)


def mutations(script: ProofScript) -> list[tuple[int, ProofScript]]:
    """One corrupted copy per line, each with a single wrong justification.

    AXIOM lines get the first schema of the theory that does not match the
    line, MP lines swap their premises, and DEF lines point at an earlier
    line with a different expansion (or become ``MP(k, k)``).
    """
    th = script.theory
    out = []
    core = [desugar(line.formula) for line in script.lines]
    for idx, line in enumerate(script.lines):
        if line.rule == "AXIOM":
            for s in th.schemas:
                probe = ProofLine(line.number, line.formula, "AXIOM", s.id)
                if s.id != line.schema and _check_axiom(th, probe, core[idx]):
                    bad = probe
                    break
            else:
                continue
        elif line.rule == "MP":
            bad = ProofLine(line.number, line.formula, "MP", refs=line.refs[::-1])
        else:
            k = line.refs[0]
            other = next((i + 1 for i in range(idx) if core[i] != core[idx]), None)
            bad = ProofLine(line.number, line.formula, *(("DEF", None, None, (other,)) if other
                                                         else ("MP", None, None, (k, k))))
        lines = list(script.lines)
        lines[idx] = bad
        out.append((line.number, ProofScript(th, lines, script.name)))
    return out


# ------------------------------------------------------------------ closure

INCONSISTENT = "INCONSISTENT"
NO_DERIVATION_FOUND = "NO_DERIVATION_FOUND"

DEPTH_CAP = 8


@dataclass
class Closure:
    """Formulas reachable within ``depth`` layers, with how each was obtained.

    ``provenance[f]`` is one of ``("seed", i)``, ``("axiom", schema_id,
    bindings)`` or ``("mp", premise, implication)``; ``level[f]`` is the
    first layer containing ``f``.
    """

    theory: Theory
    seeds: list[Formula]
    depth: int
    provenance: dict[Formula, tuple] = field(default_factory=dict)
    level: dict[Formula, int] = field(default_factory=dict)

    def __contains__(self, f) -> bool:
        return desugar(coerce(f)) in self.provenance

    def __len__(self):
        return len(self.provenance)

    def __iter__(self):
        return iter(self.provenance)

    def formulas(self) -> set[Formula]:
        return set(self.provenance)

    def at_depth(self, d: int) -> set[Formula]:
        return {f for f, lv in self.level.items() if lv <= d}

    def proof_of(self, f) -> ProofScript:
        """A proof script deriving ``f``; seeds become axioms ``S1, S2, ...``."""
        f = desugar(coerce(f))
        if f not in self.provenance:
            raise KeyError(f"{unparse(f)} is not in the closure")
        th = self.theory.extend("closure", [Schema(f"S{i + 1}", unparse(s)) for i, s in enumerate(self.seeds)])
        lines: list[ProofLine] = []
        number: dict[Formula, int] = {}

        def emit(g):
            # iterative post-order so deep derivations do not hit the recursion limit
            stack = [(g, False)]
            while stack:
                h, ready = stack.pop()
                if h in number:
                    continue
                prov = self.provenance[h]
                if prov[0] == "mp" and not ready:
                    stack.append((h, True))
                    stack.append((prov[2], False))
                    stack.append((prov[1], False))
                    continue
                n = len(lines) + 1
                if prov[0] == "seed":
                    lines.append(ProofLine(n, h, "AXIOM", f"S{prov[1] + 1}"))
                elif prov[0] == "axiom":
                    lines.append(ProofLine(n, h, "AXIOM", prov[1], prov[2]))
                else:
                    lines.append(ProofLine(n, h, "MP", refs=(number[prov[1]], number[prov[2]])))
                number[h] = n

        emit(f)
        return ProofScript(th, lines, "closure")


def _pool(seeds: Sequence[Formula], max_size: int) -> list[Formula]:
    seen: dict[Formula, None] = {}
    for s in seeds:
        for g in sorted(subformulas(s), key=lambda h: (size(h), unparse(h))):
            if size(g) <= max_size:
                seen.setdefault(g, None)
    seen.setdefault(BOTTOM, None)
    seen.setdefault(TOP, None)
    return list(seen)


def _is_rule(s: Schema) -> bool:
    """Schemas applied forward: ``X -> Y`` with ``X`` not a bare metavariable
    and every metavariable of ``Y`` occurring in ``X``."""
    f = s.formula
    return (isinstance(f, Implies) and not metavariables(f.left) == {unparse(f.left)}
            and metavariables(f.right) <= metavariables(f.left))


def derive_closure(theory_: Union[str, Theory], seeds: Iterable = (), depth: int = 2, *,
                   max_size: int = 64, max_formulas: int = 200_000) -> Closure:
    """Bounded forward closure of ``seeds`` under the theory's axioms and MP.

    Layer 0 holds the seeds and every schema instance whose metavariables
    range over the pool (subformulas of the seeds, ``0`` and ``1``).  Each
    further layer adds ``B`` for every ``A`` and ``A -> B`` already present,
    and also applies rule-like schemas ``X -> Y`` (see :func:`_is_rule`) to
    present formulas matching ``X``; the instance is recorded as an axiom.
    Formulas above ``max_size`` nodes are dropped; exceeding ``max_formulas``
    raises :class:`ClosureCapExceeded`.
    """
    th = theory(theory_)
    if depth > DEPTH_CAP or depth < 0:
        raise ClosureCapExceeded(f"depth {depth} outside 0..{DEPTH_CAP}")
    seeds = [desugar(coerce(s)) for s in seeds]
    pool = _pool(seeds, max_size)
    cl = Closure(th, seeds, depth)

    def add(f, prov, lv):
        if f in cl.provenance or size(f) > max_size:
            return False
        if len(cl.provenance) >= max_formulas:
            raise ClosureCapExceeded(f"closure exceeded {max_formulas} formulas")
        cl.provenance[f] = prov
        cl.level[f] = lv
        return True

    for i, s in enumerate(seeds):
        add(s, ("seed", i), 0)
    for s in th.schemas:
        vars_ = s.variables
        for combo in product(pool, repeat=len(vars_)):
            bind = tuple(zip(vars_, combo))
            add(substitute(s.formula, dict(bind)), ("axiom", s.id, bind), 0)

    rules = [s for s in th.schemas if _is_rule(s)]
    by_antecedent: dict[Formula, list[Formula]] = {}
    for f in cl.provenance:
        if isinstance(f, Implies):
            by_antecedent.setdefault(f.left, []).append(f)
    frontier = list(cl.provenance)
    for lv in range(1, depth + 1):
        new: list[tuple[Formula, tuple]] = []
        for a in frontier:
            # a as premise of an implication already present
            for imp in by_antecedent.get(a, ()):
                new.append((imp.right, ("mp", a, imp)))
            # a as the implication, its antecedent already present
            if isinstance(a, Implies) and a.left in cl.provenance:
                new.append((a.right, ("mp", a.left, a)))
            for s in rules:
                try:
                    sigma = match_schema(s.formula.left, a)
                except SchemaMismatch:
                    continue
                inst = substitute(s.formula, sigma)
                bind = tuple((v, sigma[v]) for v in s.variables)
                new.append((inst, ("axiom", s.id, bind)))
                new.append((inst.right, ("mp", a, inst)))
        frontier = []
        for f, prov in new:
            # an oversized rule instance was dropped, so nothing follows from it
            if prov[0] == "mp" and prov[2] not in cl.provenance:
                continue
            if add(f, prov, lv):
                frontier.append(f)
                if isinstance(f, Implies):
                    by_antecedent.setdefault(f.left, []).append(f)
    return cl


@dataclass
class ProbeResult:
    outcome: str
    depth: int
    witness: Optional[ProofScript] = None
    closure_size: int = 0

    def to_dict(self) -> dict:
        return {"outcome": self.outcome, "depth": self.depth, "closure_size": self.closure_size,
                "witness": None if self.witness is None else self.witness.text()}


def consistency_probe(theory_: Union[str, Theory], extra_axioms: Iterable = (), depth: int = 3,
                      **kw) -> ProbeResult:
    """Search for a derivation of ``0``.

    ``NO_DERIVATION_FOUND`` only means the bounded search came up empty; it
    is not a consistency proof.  An ``INCONSISTENT`` witness has been
    re-checked by :func:`check_proof`.
    """
    th = theory(theory_)
    extra = [desugar(coerce(f)) for f in extra_axioms]
    cl = None
    for d in range(depth + 1):
        cl = derive_closure(th, extra, d, **kw)
        if BOTTOM in cl.provenance:
            script = cl.proof_of(BOTTOM)
            verdict = check_proof(script)
            if not verdict.accepted:
                raise AssertionError(f"closure witness failed to check: {verdict.first_failure}")
            return ProbeResult(INCONSISTENT, d, script, len(cl))
    return ProbeResult(NO_DERIVATION_FOUND, depth, None, len(cl))
