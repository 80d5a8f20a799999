"""Command line interface.

Exit codes: 0 success or "yes", 1 "no", 2 typing error, 3 parse error,
4 violated precondition, 5 step budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from itertools import product
from typing import Sequence

from .analysis import (
    AdjunctionContext, NotInSubcategory, TypeMismatch, VariableYOccurs, check_adjunction,
    check_star, decide_equal, diversify, same_generality,
)
from .diagram import eval_diagram, eval_traced, to_ascii, to_dot
from .proofterm import Theory, TypingError, infer_type, random_term
from .rewrite.derivation import BudgetExceeded
from .rewrite.equations import RewriteError, equation_table
from .rewrite.normal import (
    NormalizationStuck, PreconditionError, delta_sigma_purge, develop, r_normal, s_normal,
)
from .rewrite.search import instantiate_schema, random_walk
from .syntax import TOP, Atom, Conj, Formula, Var
from .text import ParseError, parse_arrow, show_arrow, show_formula

EXIT_YES, EXIT_NO, EXIT_TYPE, EXIT_PARSE, EXIT_PRE, EXIT_BUDGET = range(6)


def _emit(doc) -> None:
    print(json.dumps(doc, separators=(",", ":")))


def _fail(kind: str, exc: Exception, code: int) -> int:
    print(json.dumps({"error": kind, "message": str(exc)}, separators=(",", ":")),
          file=sys.stderr)
    return code


def _type_doc(f, th: Theory) -> dict:
    ty = infer_type(f, th)
    return {"source": show_formula(ty.source), "target": show_formula(ty.target),
            "type": str(ty)}


# -- commands ----------------------------------------------------------------

def cmd_type(a, th: Theory) -> int:
    _emit(_type_doc(parse_arrow(a.term), th))
    return EXIT_YES


def cmd_diagram(a, th: Theory) -> int:
    d = eval_diagram(parse_arrow(a.term), th)
    if a.format == "dot":
        print(to_dot(d))
    elif a.format == "ascii":
        print(to_ascii(d))
    else:
        _emit(d.to_json())
    return EXIT_YES


def cmd_eq(a, th: Theory) -> int:
    f, g = parse_arrow(a.f), parse_arrow(a.g)
    ok = decide_equal(f, g, th)
    _emit({"equal": ok})
    return EXIT_YES if ok else EXIT_NO


def cmd_generality(a, th: Theory) -> int:
    f, g = parse_arrow(a.f), parse_arrow(a.g)
    ok = same_generality(f, g, th)
    _emit({"same_generality": ok})
    return EXIT_YES if ok else EXIT_NO


def cmd_normalize(a, th: Theory) -> int:
    f = parse_arrow(a.term)
    if a.pass_ == "r":
        fr, fp, d = r_normal(f, th, a.budget)
        doc = {"result": show_arrow(d.end), "f_r": show_arrow(fr), "f_prime": show_arrow(fp)}
    else:
        run = {"develop": develop, "ds": delta_sigma_purge, "s": s_normal}[a.pass_]
        out, d = run(f, th, a.budget)
        doc = {"result": show_arrow(out)}
    doc["steps"] = len(d)
    doc["derivation"] = d.to_json()
    _emit(doc)
    return EXIT_YES


def cmd_diversify(a, th: Theory) -> int:
    g, rho = diversify(parse_arrow(a.term), th)
    doc = {"term": show_arrow(g), "renaming": {k.name: v.name for k, v in rho.items()}}
    doc.update(_type_doc(g, th))
    _emit(doc)
    return EXIT_YES


def cmd_axioms(a, th: Theory) -> int:
    rows = []
    for schema in equation_table(th):
        modes = ["distinct", "equal", "mixed"] + (["product"] if th.dotted else [])
        for mode in modes:
            lhs, rhs = instantiate_schema(schema, th, mode, a.seed)
            same_type = infer_type(lhs, th) == infer_type(rhs, th)
            same_diagram = eval_diagram(lhs, th) == eval_diagram(rhs, th)
            rows.append({"equation": schema.name, "group": schema.group, "mode": mode,
                         "lhs": show_arrow(lhs), "rhs": show_arrow(rhs),
                         "pass": same_type and same_diagram})
    ok = all(r["pass"] for r in rows)
    if a.format == "ascii":
        for r in rows:
            print(f"{'pass' if r['pass'] else 'FAIL'}  {r['equation']:<14} {r['mode']}")
    else:
        _emit({"theory": th.value, "pass": ok, "rows": rows})
    return EXIT_YES if ok else EXIT_NO


def sample_objects(th: Theory, names: Sequence[str], max_atoms: int) -> list[Formula]:
    """Every formula with at most ``max_atoms`` leaves drawn from ``T`` and atoms on ``names``."""
    vs = [Var(n) for n in names]
    leaves: list[Formula] = [TOP] + [Atom(th.relation, p, q) for p, q in product(vs, vs)]
    by_size: dict[int, list[Formula]] = {1: leaves}
    for n in range(2, max_atoms + 1):
        by_size[n] = [Conj(l, r) for k in range(1, n)
                      for l in by_size[k] for r in by_size[n - k]]
    return [x for n in sorted(by_size) for x in by_size[n]]


def cmd_adjoint(a, th: Theory) -> int:
    try:
        ctx = AdjunctionContext(Var(a.y), Var(a.z), th)
    except ValueError as e:
        return _fail("precondition", e, EXIT_PRE)
    names = [n for n in ("x", "u") if n not in (a.y, a.z)] or ["x"]
    objs = sample_objects(th, names, a.size or 2)
    rep = check_adjunction(ctx, objs, seed=a.seed)
    _emit(rep.to_json())
    return EXIT_YES if rep.ok else EXIT_NO


def cmd_fuzz(a, th: Theory) -> int:
    size = a.size or 12
    failures, max_loops = [], 0
    for i in range(a.n):
        seed = a.seed + i
        f = random_term(th, size, seed, ["x", "y", "z"])
        g, trace = random_walk(f, th, 20, random.Random(seed))
        for t in (f, g):
            d, prov = eval_traced(t, th)
            max_loops = max(max_loops, d.loops)
        if not decide_equal(f, g, th):
            failures.append({"seed": seed, "start": show_arrow(f), "end": show_arrow(g)})
    _emit({"theory": th.value, "n": a.n, "seed": a.seed, "failures": failures,
           "max_loops_discarded": max_loops})
    return EXIT_NO if failures else EXIT_YES


def cmd_star(a, th: Theory) -> int:
    ok = check_star(parse_arrow(a.term), th)
    _emit({"star": ok})
    return EXIT_YES if ok else EXIT_NO


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--theory", required=True, choices=[t.value for t in Theory])
    common.add_argument("--format", choices=["json", "dot", "ascii"], default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--size", type=int, default=None)
    common.add_argument("--budget", type=int, default=None)

    p = argparse.ArgumentParser(prog="lineq", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *args, help=""):
        sp = sub.add_parser(name, parents=[common], help=help)
        for arg in args:
            sp.add_argument(arg)
        sp.set_defaults(fn=fn)
        return sp

    add("type", cmd_type, "term", help="print the type of an arrow term")
    add("diagram", cmd_diagram, "term", help="print the diagram of an arrow term")
    add("eq", cmd_eq, "f", "g", help="exit 0 iff the two terms are equal in the theory")
    add("generality", cmd_generality, "f", "g", help="exit 0 iff the terms are equally general")
    sp = add("normalize", cmd_normalize, "term", help="run a normalization pass")
    sp.add_argument("--pass", dest="pass_", choices=["develop", "r", "ds", "s"], required=True)
    add("diversify", cmd_diversify, "term", help="rename to a diversified term")
    add("axioms", cmd_axioms, help="check every equation schema on sample instances")
    sp = add("adjoint", cmd_adjoint, help="check the adjunction for the given y and z")
    sp.add_argument("--y", required=True)
    sp.add_argument("--z", required=True)
    sp = add("fuzz", cmd_fuzz, help="random rewrite walks checked against diagrams")
    sp.add_argument("--n", type=int, default=100)
    add("star", cmd_star, "term", help="exit 0 iff property (*) holds for an r-less term")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    th = Theory(args.theory)
    try:
        return args.fn(args, th)
    except ParseError as e:
        return _fail("parse", e, EXIT_PARSE)
    except (TypingError, TypeMismatch) as e:
        return _fail("type", e, EXIT_TYPE)
    except (PreconditionError, VariableYOccurs, NotInSubcategory) as e:
        return _fail("precondition", e, EXIT_PRE)
    except BudgetExceeded as e:
        return _fail("budget", e, EXIT_BUDGET)
    except (NormalizationStuck, RewriteError) as e:
        return _fail("rewrite", e, EXIT_NO)


if __name__ == "__main__":
    sys.exit(main())
