"""Command-line front end.

Problem files are JSON::

    {"matrix": [[0, 1, 1, 3], [4, 2, 3, 1]], "target": [10, 10],
     "strategy": {"mode": "auto", "override_rho_condition": false}}

or plain text: two whitespace-separated rows, then an optional
``target: r rho`` line.  Columns are numbered from 1 on the command line.

Exit codes: 0 success, 1 computational failure or mismatch, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass
from typing import Any

from .coeffs import CoeffTable, coeff_table_appendixA, coeff_table_direct
from .core import (
    AugmentedMatrix,
    CollinearColumns,
    DoublePartitionError,
    GeneratorMatrix,
    Target,
    ValidationError,
    validate,
    validate_matrix,
)
from .decomposer import (
    MODES,
    Strategy,
    chambers,
    collinear_classes,
    column_reduction,
    count,
    count_detailed,
)
from .oracle import DEFAULT_NODE_BUDGET, verify_grid, vpf_bruteforce
from .reduction import Method, ReductionTerm, affine_term

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class DocumentError(ValidationError):
    pass


@dataclass(frozen=True)
class ProblemDocument:
    matrix: tuple[tuple[int, ...], tuple[int, ...]]
    target: tuple[int, int] | None = None
    strategy: Strategy | None = None

    @property
    def generator_matrix(self) -> GeneratorMatrix:
        return GeneratorMatrix.from_rows(*self.matrix)

    def augmented(self) -> AugmentedMatrix:
        if self.target is None:
            raise DocumentError("this command needs a target", field="target")
        return AugmentedMatrix(Target(*self.target), self.generator_matrix)


def _int(value: Any, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{field}: expected an integer, got {value!r}", field=field)
    return value


def _from_json(data: Any) -> ProblemDocument:
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object", field="document")
    unknown = set(data) - {"matrix", "target", "strategy"}
    if unknown:
        raise DocumentError(f"unknown field(s): {', '.join(sorted(unknown))}", field="document")
    rows = data.get("matrix")
    if not isinstance(rows, list) or len(rows) != 2 or not all(isinstance(r, list) for r in rows):
        raise DocumentError("matrix: expected two rows", field="matrix")
    if len(rows[0]) != len(rows[1]):
        raise DocumentError("matrix: rows have different lengths", field="matrix")
    matrix = tuple(
        tuple(_int(v, f"matrix[{k}][{j}]") for j, v in enumerate(row)) for k, row in enumerate(rows)
    )
    target = None
    if data.get("target") is not None:
        t = data["target"]
        if not isinstance(t, list) or len(t) != 2:
            raise DocumentError("target: expected [r, rho]", field="target")
        target = (_int(t[0], "target[0]"), _int(t[1], "target[1]"))
    strategy = None
    if data.get("strategy") is not None:
        s = data["strategy"]
        if not isinstance(s, dict) or not set(s) <= {"mode", "override_rho_condition"}:
            raise DocumentError("strategy: expected {mode, override_rho_condition}", field="strategy")
        mode = s.get("mode", "auto")
        if mode not in MODES:
            raise DocumentError(f"strategy.mode: expected one of {MODES}", field="strategy.mode")
        override = s.get("override_rho_condition", False)
        if not isinstance(override, bool):
            raise DocumentError("strategy.override_rho_condition: expected a boolean",
                                field="strategy.override_rho_condition")
        strategy = Strategy(mode, override)
    return ProblemDocument(matrix, target, strategy)


def _from_text(text: str) -> ProblemDocument:
    rows: list[list[int]] = []
    target = None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.lower().startswith("target:"):
                vals = [int(v) for v in line.split(":", 1)[1].split()]
                if len(vals) != 2:
                    raise DocumentError("target: expected two integers", field="target")
                target = (vals[0], vals[1])
            else:
                rows.append([int(v) for v in line.split()])
        except ValueError as exc:
            if isinstance(exc, DocumentError):
                raise
            raise DocumentError(f"line {lineno}: not an integer row", field="matrix") from exc
    if len(rows) != 2:
        raise DocumentError(f"matrix: expected two rows, found {len(rows)}", field="matrix")
    return _from_json({"matrix": rows, "target": list(target) if target else None})


def parse_document(text: str) -> ProblemDocument:
    """Parse a JSON or plain-text problem document."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}", field="document") from exc
        return _from_json(data)
    return _from_text(text)


def dump_document(doc: ProblemDocument) -> str:
    data: dict[str, Any] = {"matrix": [list(r) for r in doc.matrix]}
    if doc.target is not None:
        data["target"] = list(doc.target)
    if doc.strategy is not None:
        data["strategy"] = {
            "mode": doc.strategy.mode,
            "override_rho_condition": doc.strategy.classic_override_rho_condition,
        }
    return json.dumps(data)


# ---------------------------------------------------------------- rendering

def table_document(table: CoeffTable) -> dict:
    return {
        "column": table.column + 1,
        "modulus": table.modulus,
        "n_minus": table.n_minus,
        "n_plus": table.n_plus,
        "rows": {str(jy): table.row(jy) for jy in range(table.modulus)},
    }


def _term_document(term: ReductionTerm) -> dict:
    weight, arg, gens = term.normalized()
    return {
        "source_column": term.source_column + 1,
        "method": term.method.value,
        "weight": weight,
        "argument": arg,
        "scale": term.scale,
        "generators": list(gens),
    }


def _term_human(doc: dict) -> str:
    w = doc["weight"]
    sign = "+" if w > 0 else "-"
    mag = "" if abs(w) == 1 else f"{abs(w)}*"
    arg = doc["argument"] if doc["scale"] == 1 else f"{doc['argument']}/{doc['scale']}"
    gens = ",".join(map(str, doc["generators"]))
    return f"{sign}{mag}W({arg}, {{{gens}}})"


def _symbolic_column(D: GeneratorMatrix, i: int) -> dict:
    c = D[i]
    if c.gcd == 1:
        t = affine_term(D, i)
        return {
            "source_column": i + 1,
            "method": Method.CLASSIC.value,
            "weight": t.sign,
            "argument": t.argument_str(),
            "scale": 1,
            "generators": list(t.generators),
            "human": str(t),
        }
    table = coeff_table_direct(D, i)
    if c.b == 0:
        method, scale, gens = Method.ZERO_COLUMN, c.beta, list(table.b_prime)
        arg, human_arg = "r-j_x", f"(r-j_x)/{c.beta}"
    else:
        # signed generators; evaluation applies the sign/shift rewrite per term
        method, scale, gens = Method.BAR, 1, _signed_generators(D, i)
        arg = human_arg = f"r-j_x-(rho-j_y)*{c.b}/{c.beta}"
    g_str = ",".join(map(str, gens))
    return {
        "source_column": i + 1,
        "method": method.value,
        "argument": arg,
        "scale": scale,
        "generators": gens,
        "j_y": f"rho mod {c.beta}",
        "coefficients": table_document(table),
        "human": f"+sum_j_x a[j_x, rho mod {c.beta}] * W({human_arg}, {{{g_str}}})",
    }


def _signed_generators(D: GeneratorMatrix, i: int) -> list[int]:
    ci = D[i]
    return [cj.b * ci.beta - ci.b * cj.beta for j, cj in enumerate(D) if j != i]


def reduce_document(doc: ProblemDocument, strategy: Strategy) -> list[dict]:
    D = doc.generator_matrix
    validate_matrix(D)
    if doc.target is not None:
        validate(doc.augmented())
    if D.m == 0:
        return [{"method": "empty", "rule": "W = 1 iff (r, rho) = (0, 0)",
                 "human": "[r = 0 and rho = 0]"}]
    if D.m == 1:
        b, beta = D[0]
        rule = f"W = 1 iff (r, rho) = k*({b}, {beta}) for an integer k >= 0"
        return [{"source_column": 1, "method": "divisibility", "rule": rule, "human": rule}]
    for cls in collinear_classes(D):
        if len(cls.members) > 1:
            rest = ProblemDocument(D.without(cls.indices).rows(), None, None)
            d = cls.direction
            return [{
                "method": Method.CONVOLUTION.value,
                "direction": [d.b, d.beta],
                "members": [k + 1 for k in cls.indices],
                "multipliers": cls.multipliers,
                "rest": reduce_document(rest, strategy),
                "human": (f"sum_l W(l, {{{','.join(map(str, cls.multipliers))}}}) * "
                          f"W_rest((r, rho) - l*({d.b}, {d.beta}))"),
            }]
    if doc.target is None:
        return [_symbolic_column(D, i) for i, c in enumerate(D) if c.beta > 0]
    red = column_reduction(doc.augmented(), strategy)
    out = []
    for term in red.terms:
        item = _term_document(term)
        item["human"] = _term_human(item)
        out.append(item)
    return out


# ---------------------------------------------------------------- commands

def _emit(payload: Any, human: str | None, args) -> None:
    if args.human and human is not None:
        print(human)
    else:
        print(json.dumps(payload, indent=None if not args.human else 2))


def cmd_count(doc: ProblemDocument, args) -> int:
    strategy = doc.strategy or Strategy()
    aug = doc.augmented()
    res = count_detailed(aug, strategy, cap=args.budget, budget=args.budget)
    payload = {"count": str(res.value), "method": res.method, "terms_evaluated": res.terms_evaluated}
    _emit(payload, f"W = {res.value}  (method {res.method}, {res.terms_evaluated} terms)", args)
    return EXIT_OK


def cmd_reduce(doc: ProblemDocument, args) -> int:
    terms = reduce_document(doc, doc.strategy or Strategy())
    human = " ; ".join(t["human"] for t in terms)
    _emit([{k: v for k, v in t.items() if k != "human"} for t in terms], human, args)
    return EXIT_OK


def cmd_coeffs(doc: ProblemDocument, args) -> int:
    D = doc.generator_matrix
    validate_matrix(D)
    i = args.column - 1
    if not 0 <= i < D.m:
        raise DocumentError(f"--column must be in 1..{D.m}", field="column")
    if D[i].beta < 1:
        raise DocumentError(f"column {args.column} has beta = 0", field="column")
    if args.method == "appendixA":
        payload = table_document(coeff_table_appendixA(D, i))
        _emit(payload, _table_human(payload), args)
        return EXIT_OK
    direct = coeff_table_direct(D, i, cap=args.budget)
    payload = table_document(direct)
    if args.method == "both":
        other = coeff_table_appendixA(D, i)
        keys = sorted(set(direct.entries) | set(other.entries))
        bad = [k for k in keys if direct.get(*k) != other.get(*k)]
        payload["agree"] = not bad
        if bad:
            payload["first_disagreement"] = list(bad[0])
            _emit(payload, f"disagree at (j_x, j_y) = {bad[0]}", args)
            return EXIT_FAIL
    _emit(payload, _table_human(payload), args)
    return EXIT_OK


def _table_human(payload: dict) -> str:
    lo, hi = payload["n_minus"], payload["n_plus"]
    head = "j_x    " + " ".join(f"{j:>3}" for j in range(lo, hi + 1))
    lines = [head]
    for jy, row in payload["rows"].items():
        lines.append(f"j_y={jy:<3}" + " ".join(f"{a:>3}" for a in row))
    if "agree" in payload:
        lines.append(f"agree: {payload['agree']}")
    return "\n".join(lines)


def _random_matrix(rng: random.Random, max_m: int = 4, max_entry: int = 6) -> GeneratorMatrix:
    m = rng.randint(1, max_m)
    cols = []
    while len(cols) < m:
        c = (rng.randint(0, max_entry), rng.randint(0, max_entry))
        if c != (0, 0):
            cols.append(c)
    return GeneratorMatrix(tuple(cols))


def cmd_verify(doc: ProblemDocument | None, args) -> int:
    if args.random:
        rng = random.Random(args.seed)
        matrices = [_random_matrix(rng) for _ in range(args.random)]
    else:
        if doc is None:
            raise DocumentError("verify needs a problem file or --random N", field="document")
        matrices = [doc.generator_matrix]
    checked, mismatches = 0, []
    for D in matrices:
        validate_matrix(D)
        report = verify_grid(D, args.r_max, args.rho_max, "auto", budget=args.budget)
        checked += report.checked
        for mm in report.mismatches:
            mismatches.append({
                "matrix": [list(r) for r in D.rows()],
                "target": [mm.target.r, mm.target.rho],
                "expected": str(mm.expected),
                "got": None if mm.got is None else str(mm.got),
                "error": mm.error,
            })
    payload = {"checked": checked, "matrices": len(matrices), "mismatches": len(mismatches),
               "first": mismatches[:10]}
    _emit(payload, f"{checked} targets checked, {len(mismatches)} mismatches", args)
    return EXIT_OK if not mismatches else EXIT_FAIL


def cmd_chambers(doc: ProblemDocument, args) -> int:
    D = doc.generator_matrix
    try:
        walls = chambers(D)
    except CollinearColumns as exc:
        raise DocumentError(f"chambers need pairwise non-parallel columns: {exc.render(1)}",
                            field="matrix") from exc
    payload = [{"column": w.column + 1, "line": list(w.line)} for w in walls]
    human = "\n".join(f"column {w.column + 1}: {w.line[0]}*r + ({w.line[1]})*rho = 0" for w in walls)
    _emit(payload, human, args)
    return EXIT_OK


def cmd_bench(doc: ProblemDocument, args) -> int:
    D = doc.generator_matrix
    validate_matrix(D)
    targets = [Target(r, rho) for r in range(args.r_max + 1) for rho in range(args.rho_max + 1)]
    t0 = time.perf_counter()
    fast = [count(AugmentedMatrix(t, D), doc.strategy) for t in targets]
    t1 = time.perf_counter()
    slow = [vpf_bruteforce(AugmentedMatrix(t, D), args.budget) for t in targets]
    t2 = time.perf_counter()
    payload = {"targets": len(targets), "dispatcher_seconds": round(t1 - t0, 6),
               "oracle_seconds": round(t2 - t1, 6), "agree": fast == slow}
    _emit(payload, f"{len(targets)} targets: dispatcher {t1 - t0:.3f}s, "
                   f"oracle {t2 - t1:.3f}s, agree={fast == slow}", args)
    return EXIT_OK if fast == slow else EXIT_FAIL


# ---------------------------------------------------------------- entry point

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--human", action="store_true", default=argparse.SUPPRESS,
                        help="pretty text instead of JSON")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for random verification corpora")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help="enumeration cap for the oracle and coefficient tables")

    parser = argparse.ArgumentParser(prog="doublepart", parents=[common],
                                     description="Count solutions of 2-row Diophantine systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help, file_required=True):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("file", nargs=None if file_required else "?",
                       help="problem file (JSON or text), '-' for stdin")
        return p

    add("count", "exact number of solutions")
    add("reduce", "reduction to scalar partitions")
    p = add("coeffs", "expansion coefficient table for one column")
    p.add_argument("--column", type=int, required=True, help="1-based column index")
    p.add_argument("--method", choices=("direct", "appendixA", "both"), default="direct")
    p = add("verify", "compare against brute force on a target grid", file_required=False)
    p.add_argument("--r-max", type=int, default=20)
    p.add_argument("--rho-max", type=int, default=20)
    p.add_argument("--random", type=int, default=0, metavar="N",
                   help="check N seeded random matrices instead of a file")
    add("chambers", "chamber walls L_i = 0 per column")
    p = add("bench", "dispatcher vs brute force wall time")
    p.add_argument("--r-max", type=int, default=20)
    p.add_argument("--rho-max", type=int, default=20)
    return parser


COMMANDS = {
    "count": cmd_count,
    "reduce": cmd_reduce,
    "coeffs": cmd_coeffs,
    "verify": cmd_verify,
    "chambers": cmd_chambers,
    "bench": cmd_bench,
}


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.human = getattr(args, "human", False)
    args.seed = getattr(args, "seed", 0)
    args.budget = getattr(args, "budget", DEFAULT_NODE_BUDGET)
    try:
        doc = parse_document(_read(args.file)) if args.file else None
        return COMMANDS[args.command](doc, args)
    except (ValidationError, OSError) as exc:
        print(f"error: {_message(exc)}", file=sys.stderr)
        return EXIT_INPUT
    except (DoublePartitionError, ValueError) as exc:
        print(f"error: {_message(exc)}", file=sys.stderr)
        return EXIT_FAIL


def _message(exc: Exception) -> str:
    # the command line numbers columns from 1
    return exc.render(1) if isinstance(exc, DoublePartitionError) else str(exc)


if __name__ == "__main__":
    sys.exit(main())
