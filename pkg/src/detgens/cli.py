"""Command-line driver: read a problem file, run a construction, report.

Problem files are YAML mappings::

    field: Q                  # or gf:<p>; default Q
    variables: [x1, x2, x3]   # declaration order = printing order
    t: 2                      # default: number of rows
    mode: Antidiagonal        # Generic | TheoremMain | DisjointSets |
                              # Antidiagonal | MaxMinor | TwoRowReduce
    matrix:                   # rows of polynomial strings, 0 for zeros
      - [0, 0, x1]
      - [x2, x3, x4]
    zeros: [[1, 1], [1, 2]]   # optional; default: every entry equal to 0
    relations:                # TheoremMain (one) and DisjointSets (several)
      - positions: [[1, 3], [2, 3]]   # 1-based (row, col), one per y_i
        F: y1^3 - y2^2
        order: [y2, y1]       # optional elimination order

Without ``variables`` the identifiers are taken in order of first
appearance in the matrix, row by row.
"""

from __future__ import annotations

import argparse
import difflib
import json
import re
import sys
from dataclasses import dataclass, field

import yaml

from .errors import (DetgensError, HypothesisViolation, ParseError, RelationError,
                     ResourceLimitExceeded)
from .groebner import Budget, MonomialOrder, RadicalReport, radical_equal
from .minorposet import (MinorIndex, PosetContext, RankedGenerator, RankedGeneratorSet, q_prefix,
                         t_minor_indices)
from .polyring import CoeffField, PolyMatrix, PolyRing
from .reducers import DependenceRelation, reduce_disjoint_sets, reduce_theorem_main
from .sparsegen import ZeroPattern, antidiagonal_reduce, maxminor_reduce, two_row_reduce

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_HYPOTHESIS = 3
EXIT_RELATION = 4
EXIT_CERTIFICATION = 5
EXIT_RESOURCE = 6
EXIT_GOLDEN = 7

MODES = ("Generic", "TheoremMain", "DisjointSets", "Antidiagonal", "MaxMinor", "TwoRowReduce")
CERTIFY_BY_DEFAULT = {"DisjointSets", "MaxMinor"}
_KEYS = {"field", "variables", "t", "mode", "matrix", "zeros", "relations"}
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass
class Problem:
    field: CoeffField
    variables: tuple
    matrix: list
    t: int
    mode: str = "Generic"
    zeros: tuple | None = None
    relations: list = field(default_factory=list)

    def ring(self, fld: CoeffField | None = None) -> PolyRing:
        return PolyRing.user(self.variables, fld or self.field)


@dataclass
class Result:
    mode: str
    X: PolyMatrix
    Xprime: PolyMatrix
    gens: RankedGeneratorSet
    dropped: PolyMatrix | None = None


def _mode_name(text) -> str:
    for m in MODES:
        if str(text).strip().lower() == m.lower():
            return m
    raise ParseError(f"unknown mode {text!r}; expected one of {', '.join(MODES)}")


def _positions(raw, what: str) -> tuple:
    try:
        out = tuple((int(r), int(c)) for r, c in raw)
    except (TypeError, ValueError):
        raise ParseError(f"{what}: expected a list of [row, col] pairs, got {raw!r}") from None
    return out


def parse_problem(text: str) -> Problem:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ParseError(f"problem file is not valid YAML: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("problem file must be a mapping")
    unknown = set(data) - _KEYS
    if unknown:
        raise ParseError(f"unknown keys in problem file: {sorted(unknown)}")
    if "matrix" not in data:
        raise ParseError("problem file has no matrix")
    rows = data["matrix"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) and r for r in rows):
        raise ParseError("matrix must be a nonempty list of nonempty rows")
    if len({len(r) for r in rows}) != 1:
        raise ParseError("matrix rows have different lengths")
    rows = [[str(x) for x in r] for r in rows]
    try:
        fld = CoeffField.parse(str(data.get("field", "Q")))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if "variables" in data:
        names = data["variables"]
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        names = tuple(str(v) for v in names)
    else:
        seen: dict = {}
        for r in rows:
            for x in r:
                for nm in _IDENT.findall(x):
                    seen.setdefault(nm, None)
        names = tuple(seen)
    if len(set(names)) != len(names):
        raise ParseError(f"repeated variable names: {list(names)}")
    t = data.get("t", len(rows))
    if not isinstance(t, int):
        raise ParseError(f"t must be an integer, got {t!r}")
    zeros = _positions(data["zeros"], "zeros") if data.get("zeros") is not None else None
    rels = []
    for i, rel in enumerate(data.get("relations") or [], start=1):
        if not isinstance(rel, dict) or "positions" not in rel or "F" not in rel:
            raise ParseError(f"relation {i} needs 'positions' and 'F'")
        extra = set(rel) - {"positions", "F", "order"}
        if extra:
            raise ParseError(f"relation {i}: unknown keys {sorted(extra)}")
        order = rel.get("order")
        if isinstance(order, str):
            order = order.replace(",", " ").split()
        rels.append({"positions": _positions(rel["positions"], f"relation {i}"),
                     "F": str(rel["F"]), "order": tuple(order) if order else None})
    return Problem(fld, names, rows, t, _mode_name(data.get("mode", "Generic")), zeros, rels)


def build(pb: Problem, fld: CoeffField | None = None, mode: str | None = None) -> Result:
    """Run the construction selected by ``mode`` (default: the problem's)."""
    mode = mode or pb.mode
    ring = pb.ring(fld)
    X = PolyMatrix.from_text(ring, pb.matrix, pb.t)
    zp = ZeroPattern(pb.zeros) if pb.zeros is not None else None
    rels = [DependenceRelation.parse(r["positions"], r["F"], ring.field) for r in pb.relations]
    orders = [r["order"] for r in pb.relations]
    if mode == "Generic":
        return Result(mode, X, X, q_prefix(PosetContext.of(X).max_rank, X))
    if mode == "TheoremMain":
        if len(rels) != 1:
            raise RelationError(f"TheoremMain needs exactly one relation, got {len(rels)}")
        Xp, gens = reduce_theorem_main(X, rels[0], orders[0])
        return Result(mode, X, Xp, gens)
    if mode == "DisjointSets":
        if not rels:
            raise RelationError("DisjointSets needs at least one relation")
        Xp, gens = reduce_disjoint_sets(X, rels, orders)
        return Result(mode, X, Xp, gens)
    if mode == "Antidiagonal":
        Xp, gens = antidiagonal_reduce(X, zp)
        return Result(mode, X, Xp, gens)
    if mode == "MaxMinor":
        Xp, gens = maxminor_reduce(X, zp)
        return Result(mode, X, Xp, gens)
    Xd, Xp, gens = two_row_reduce(X, zp)
    return Result(mode, X, Xp, gens, Xd)


def certify(res: Result, order: MonomialOrder | None = None,
            budget: Budget | None = None) -> RadicalReport:
    """Compare the radical of the t-minors of X with that of the generators."""
    ctx = PosetContext.of(res.X)
    minors = [res.X.minor(d.rows, d.cols) for d in t_minor_indices(ctx)]
    return radical_equal(minors, res.gens.polys, order, budget)


# ----------------------------------------------------------------------
# output
# ----------------------------------------------------------------------

def _verdict_text(label: str, v) -> str:
    how = v.method + (f" k={v.exponent}" if v.method == "power" else "")
    return (f"    {label:<12} {'yes' if v.member else 'no ':<4} {how:<14} "
            f"basis {v.basis_size:<5} pairs {v.pairs}")


def render_text(res: Result, report: RadicalReport | None = None, order: MonomialOrder | None = None) -> str:
    X, Xp = res.X, res.Xprime
    out = [f"mode: {res.mode}",
           f"field: {X.ring.field}",
           f"matrix: {X.m}x{X.n}, t = {X.t}"]
    if res.dropped is not None and res.dropped.n != X.n:
        out.append(f"zero columns dropped: {X.n - res.dropped.n}")
    out.append("X':")
    out.extend("  " + line for line in str(Xp).splitlines())
    out.append(f"generators: {len(res.gens)}")
    if not len(res.gens):
        out.append("  (no generators)")
    for g in res.gens:
        out.append(f"  q{g.h} = {g.expression()} = {g.poly}")
    if report is not None:
        kind = (order or MonomialOrder()).kind
        out.append(f"certificate: {report.field}, {kind}: {report.outcome}")
        labels = [str(d) for d in t_minor_indices(PosetContext.of(X))]
        out.append("  t-minors in the radical of the generators:")
        out.extend(_verdict_text(lab, v) for lab, v in zip(labels, report.left_in_right))
        out.append("  generators in the radical of the t-minors:")
        out.extend(_verdict_text(f"q{g.h}", v) for g, v in zip(res.gens, report.right_in_left))
        if report.inconclusive:
            out.append(f"  inconclusive: {report.inconclusive}")
    return "\n".join(out) + "\n"


def to_records(res: Result, report: RadicalReport | None = None, order: MonomialOrder | None = None) -> dict:
    X, Xp = res.X, res.Xprime
    rec = {"mode": res.mode, "field": str(X.ring.field), "variables": list(X.ring.names),
           "m": X.m, "n": X.n, "t": X.t,
           "matrix": Xp.to_text(),
           "generators": [{"rank": g.h, "minors": [str(d) for d in g.summands], "poly": str(g.poly)}
                          for g in res.gens]}
    if res.dropped is not None:
        rec["dropped_columns"] = X.n - res.dropped.n
    if report is not None:
        cert = report.records()
        cert["order"] = (order or MonomialOrder()).kind
        rec["certificate"] = cert
    return rec


def render_records(res: Result, report: RadicalReport | None = None, order: MonomialOrder | None = None) -> str:
    return json.dumps(to_records(res, report, order), indent=2, sort_keys=True) + "\n"


def load_records(text: str):
    """Inverse of :func:`render_records`: (X', generator set)."""
    rec = json.loads(text)
    ring = PolyRing.user(rec["variables"], CoeffField.parse(rec["field"]))
    Xp = PolyMatrix.from_text(ring, rec["matrix"], rec["t"])
    items = [RankedGenerator(g["rank"], ring.parse(g["poly"]),
                             tuple(MinorIndex.parse(d) for d in g["minors"]))
             for g in rec["generators"]]
    return Xp, RankedGeneratorSet(items, Xp)


# ----------------------------------------------------------------------
# entry point
# ----------------------------------------------------------------------

def _budget(text: str) -> Budget:
    parts = text.replace(",", ":").split(":")
    try:
        nums = [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"budget must be PAIRS or PAIRS:BASIS, got {text!r}") from None
    if len(nums) == 1:
        return Budget(max_pairs=nums[0])
    if len(nums) == 2:
        return Budget(max_pairs=nums[0], max_basis=nums[1])
    raise argparse.ArgumentTypeError(f"budget must be PAIRS or PAIRS:BASIS, got {text!r}")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="detgens",
        description="Few generators up to radical for determinantal ideals, with certification.")
    ap.add_argument("problem", help="problem file (YAML), or - for stdin")
    ap.add_argument("--mode", choices=MODES, help="override the mode of the problem file")
    ap.add_argument("--field", help="override the coefficient field: Q or gf:<p>")
    ap.add_argument("--certify", action=argparse.BooleanOptionalAction, default=None,
                    help="certify the radical equality (default on for DisjointSets and MaxMinor)")
    ap.add_argument("--certify-field", default="gf:32003",
                    help="field for the certificate: Q or gf:<p> (default gf:32003)")
    ap.add_argument("--order", default="degrevlex", help="monomial order: degrevlex or lex")
    ap.add_argument("--budget", type=_budget, default=Budget(),
                    help="Groebner budget PAIRS[:BASIS] (default 200000:5000)")
    ap.add_argument("--format", choices=("text", "records"), default="text")
    ap.add_argument("--golden", help="compare the output with this file; mismatch exits 7")
    return ap


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = _parser().parse_args(argv)
    try:
        if args.problem == "-":
            text = sys.stdin.read()
        else:
            with open(args.problem, encoding="utf-8") as fh:
                text = fh.read()
        pb = parse_problem(text)
        fld = CoeffField.parse(args.field) if args.field else None
        cert_field = CoeffField.parse(args.certify_field)
        order = MonomialOrder.parse(args.order)
    except (OSError, ValueError, DetgensError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PARSE
    mode = args.mode or pb.mode
    certify_on = args.certify if args.certify is not None else mode in CERTIFY_BY_DEFAULT
    report = None
    try:
        res = build(pb, fld, mode)
        if certify_on:
            cres = res if cert_field == res.X.ring.field else build(pb, cert_field, mode)
            report = certify(cres, order, args.budget)
    except ParseError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PARSE
    except HypothesisViolation as exc:
        print(f"hypothesis violated: {exc}", file=stderr)
        return EXIT_HYPOTHESIS
    except RelationError as exc:
        print(f"relation error: {exc}", file=stderr)
        return EXIT_RELATION
    except ResourceLimitExceeded as exc:
        print(f"resource limit: {exc}", file=stderr)
        return EXIT_RESOURCE
    except DetgensError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PARSE
    render = render_records if args.format == "records" else render_text
    out = render(res, report, order)
    stdout.write(out)
    code = EXIT_OK
    if report is not None and report.outcome == "inconclusive":
        print(f"certification inconclusive: {report.inconclusive}", file=stderr)
        code = EXIT_RESOURCE
    elif report is not None and not report.equal:
        print("certification failed: the radicals differ", file=stderr)
        code = EXIT_CERTIFICATION
    if args.golden:
        try:
            with open(args.golden, encoding="utf-8") as fh:
                want = fh.read()
        except OSError as exc:
            print(f"error: {exc}", file=stderr)
            return EXIT_PARSE
        if want != out:
            diff = difflib.unified_diff(want.splitlines(True), out.splitlines(True),
                                        args.golden, "output")
            stderr.writelines(diff)
            return EXIT_GOLDEN
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
