"""Command-line front end.

Exit codes: 0 success, 1 a checked claim fails or an obstruction is found,
2 malformed input. ``--json`` prints canonical JSON (sorted keys, compact).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import free_group as fg
from . import gluing_homology as gh
from . import orbifold as orb
from . import ordered_groups as og
from . import recipes
from . import reduction_graph as rg
from . import sl2z
from . import symmetry_groups as sym
from . import twist_catalogue as tc
from .sentinels import INFINITE, NOT_FOUND

DEFAULT_BUDGETS = {"brute": 5, "lift": 64, "graph": 12}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def search_budgets(env=None) -> dict:
    """Defaults overridden by MCG_SEARCH_BUDGET, e.g. ``brute=4,lift=32``."""
    env = os.environ if env is None else env
    out = dict(DEFAULT_BUDGETS)
    raw = env.get("MCG_SEARCH_BUDGET", "").strip()
    if not raw:
        return out
    for part in raw.split(","):
        key, sep, value = part.partition("=")
        key = key.strip()
        if not sep or key not in out or not value.strip().isdigit() or int(value) < 1:
            raise UsageError(f"bad MCG_SEARCH_BUDGET entry {part!r}; "
                             f"expected key=positive int with key in {sorted(out)}")
        out[key] = int(value)
    return out


def load_payload(text: str):
    """Inline JSON, or a path to a JSON file."""
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc.msg}") from None


def _matrix(text):
    data = load_payload(text)
    try:
        return sl2z.Sl2Matrix.from_rows(data)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad matrix: {exc}") from None


def _plain(x):
    if x is INFINITE or x is NOT_FOUND:
        return repr(x)
    return x


class Result:
    def __init__(self, payload, text=None, code=0):
        self.payload = payload
        self.text = text
        self.code = code


# -- sl2z --------------------------------------------------------------------------

def _sl2z(args):
    cmd = args.cmd
    if cmd in ("roots", "oracle-roots") and args.m < 1:
        raise UsageError("-m must be >= 1")
    M = _matrix(args.matrix)
    if cmd == "order":
        order = _plain(sl2z.element_order(M))
        return Result({"order": order}, str(order))
    if cmd == "classify":
        tclass = sl2z.trace_classify(M)
        return Result({"class": str(tclass)}, str(tclass))
    if cmd == "roots":
        rs = sl2z.mth_roots(M, args.m)
        if rs.is_finite:
            text = "\n".join(str(r.rows()) for r in rs.roots) or "no roots"
        else:
            text = "torsion family representatives: " + ", ".join(l.value for l in rs.labels)
        return Result(rs.to_json(), text)
    if cmd == "torsion-class":
        if sl2z.element_order(M) is INFINITE:
            raise UsageError("matrix has infinite order")
        label = sl2z.torsion_class(M)
        return Result({"label": label.value, "order": label.order}, label.value)
    bound = args.bound or search_budgets()["brute"]
    roots = sl2z.brute_force_roots(M, args.m, bound)
    return Result({"bound": bound, "roots": [r.rows() for r in roots]},
                  "\n".join(str(r.rows()) for r in roots) or "no roots")


# -- twists ------------------------------------------------------------------------

def _word(text):
    try:
        return tc.parse_word(load_payload(text))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad twist word: {exc}") from None


def _model(name):
    try:
        return tc.model(name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None


def _twist(args):
    cmd = args.cmd
    if cmd == "verify":
        if args.relation not in tc.RELATIONS:
            raise UsageError(f"unknown relation {args.relation!r}; known: {', '.join(tc.RELATIONS)}")
        rep = tc.relation_report(args.relation)
        status = "verified" if rep["verified"] else "FAILED"
        return Result(rep, f"{rep['id']}: {status} ({rep['relation']} on {rep['model']})",
                      0 if rep["verified"] else 1)
    m = _model(args.model)
    if cmd == "certify":
        rep = tc.certify_model(m)
        lines = [f"({k}) {tc.CLAUSES[k]}: {'pass' if rep.clause_passed(k) else 'FAIL'}"
                 f" [{rep.checks[k]} checks]" for k in tc.CLAUSES]
        return Result(rep.to_json(), "\n".join(lines), 0 if rep.passed else 1)
    w = _word(args.word)
    try:
        if cmd == "compose":
            e = tc.evaluate(m, w)
            return Result(e.to_json(), "\n".join(f"{i} -> {list(img)}"
                                                 for i, img in enumerate(e.images, 1)))
        mat = tc.h1_matrix(m, w)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    return Result({"h1": mat}, "\n".join(" ".join(f"{v:3d}" for v in row) for row in mat))


# -- gluing ------------------------------------------------------------------------

def _pattern(args):
    if bool(args.pattern) == bool(args.file):
        raise UsageError("give exactly one of --pattern or --file")
    try:
        if args.pattern:
            p = gh.pattern_from_id(args.pattern)
        else:
            p = gh.GluingPattern.from_json(load_payload(args.file))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad pattern: {exc}") from None
    problems = gh.pattern_problems(p)
    if problems:
        raise UsageError("bad pattern: " + "; ".join(problems))
    return p


def _glue(args):
    p = _pattern(args)
    try:
        if args.cmd == "analyze":
            rep = gh.analyze(p)
            return Result(rep.to_json(), ", ".join(f"{k} {v}" for k, v in rep.to_json().items()))
        M = gh.induced_h1(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.cmd == "induced":
        return Result({"matrix": M}, "\n".join(" ".join(f"{v:3d}" for v in row) for row in M))
    poly = gh.char_poly(M)
    return Result({"coefficients": list(poly.coeffs), "ascending": poly.ascending_string(),
                   "factored": poly.factored_string()},
                  f"{poly.factored_string()}\nascending: {poly.ascending_string()}")


# -- symmetry groups ---------------------------------------------------------------

def _sym(args):
    cmd = args.cmd
    try:
        if cmd in ("verify-521", "verify-522"):
            fn = sym.verify_thm_5_2_1 if cmd == "verify-521" else sym.verify_thm_5_2_2
            rep = fn(args.rho)
            lines = [f"{k}: {'pass' if v else 'FAIL'}" for k, v in rep["checks"].items()]
            return Result(rep, "\n".join(lines), 0 if rep["passed"] else 1)
        if cmd == "fixed":
            rule = sym.FixedPointRule(args.construction, args.rho)
            x = sym.parse_element(rule.group, args.element)
            n = _plain(sym.fixed_points(rule, x))
            return Result({"element": str(x), "fixed_points": n}, str(n))
        G = sym.parse_group(args.group)
        if cmd == "elements":
            els = [str(x) for x in G.elements()]
            return Result({"group": str(G), "order": G.order, "elements": els}, " ".join(els))
        if cmd == "order":
            x = sym.parse_element(G, args.element)
            n = sym.elem_order(G, x)
            return Result({"element": str(x), "order": n}, str(n))
        x, y = sym.parse_element(G, args.x), sym.parse_element(G, args.y)
        if cmd == "commute":
            ans = sym.commutes(G, x, y)
            return Result({"x": str(x), "y": str(y), "commute": ans}, str(ans).lower())
        ans = sym.conjugate_exists(G, x, y)
        return Result({"x": str(x), "y": str(y), "conjugate": ans}, str(ans).lower())
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- orbifold ----------------------------------------------------------------------

def _int_list(text):
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from None


def _check(ok, payload, label):
    return Result(dict(payload, holds=ok), f"{label}: {'holds' if ok else 'FAILS'}", 0 if ok else 1)


def _orb(args):
    cmd = args.cmd
    try:
        if cmd == "euler":
            chi = orb.euler_char(args.genus, args.boundary)
            return Result({"chi": chi}, str(chi))
        if cmd == "prongs":
            sings = [orb.SingularityDatum(f"P{i}", k) for i, k in enumerate(_int_list(args.prongs))]
            return _check(orb.check_prong_formula(args.chi, sings),
                          {"chi": args.chi, "prongs": [s.prongs for s in sings]}, "prong formula")
        if cmd == "rh":
            cover = orb.CoverDatum.from_json(load_payload(args.cover))
            return _check(orb.check_riemann_hurwitz(cover), cover.to_json(), "Riemann-Hurwitz")
        if cmd == "pivot":
            points = [tuple(int(v) for v in pt) for pt in load_payload(args.points)]
            return _check(orb.is_pivot(points, args.candidate),
                          {"points": [list(p) for p in points], "candidate": args.candidate}, "pivot")
        if cmd == "orders":
            orders = sorted(orb.admissible_orders(args.genus, args.q, args.max_order))
            return Result({"genus": args.genus, "q": args.q, "orders": orders},
                          " ".join(map(str, orders)))
        if cmd == "maxfix":
            n = orb.max_fixed_points_sphere(args.m)
            return Result({"m": args.m, "max_fixed_points": n}, str(n))
        if cmd == "liftk":
            rep = orb.PermRep.from_json(load_payload(args.rep))
            phi = fg.FreeEndo.from_json(load_payload(args.phi))
            cap = args.cap or search_budgets()["lift"]
            k = orb.lift_exponent(rep, phi, cap)
            found = k is not NOT_FOUND
            return Result({"k": _plain(k), "cap": cap}, str(_plain(k)), 0 if found else 1)
        pairs = orb.cyclic_orbit_factorizations(args.n)
        return Result({"n": args.n, "factorizations": [list(p) for p in pairs]},
                      " ".join(f"{k}x{s}" for k, s in pairs) or "none")
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise UsageError(f"{type(exc).__name__}: {exc}") from None


# -- reduction graphs --------------------------------------------------------------

_GRAPH_EXAMPLES = {
    "case1": lambda: rg.case1_star(3),
    "case2": lambda: rg.case2_loop(2),
    "case3": lambda: rg.cycle_graph(2),
    "case4": lambda: rg.cycle_graph(3),
}


def _graph(args):
    if bool(args.graph) == bool(args.example):
        raise UsageError("give exactly one of --graph or --example")
    g = _GRAPH_EXAMPLES[args.example]() if args.example else \
        rg.DecompositionGraph.from_json(load_payload(args.graph))
    check = rg.validate(g)
    if args.cmd == "validate":
        return Result({"valid": check.ok, "reason": check.reason},
                      "valid" if check else f"invalid: {check.reason}", 0 if check else 1)
    if not check:
        raise UsageError(f"invalid graph: {check.reason}")
    if args.cmd == "rank":
        r = rg.cycle_rank(g)
        return Result({"cycle_rank": r}, str(r))
    if args.cmd == "classify":
        label = rg.classify_case(g)
        return Result({"case": str(label)}, str(label))
    budget = search_budgets()["graph"]
    try:
        autos = rg.leaf_fixing_automorphisms(g, budget)
    except rg.BudgetExceeded as exc:
        raise UsageError(str(exc)) from None
    lines = [json.dumps(a.to_json(), sort_keys=True) for a in autos]
    return Result({"count": len(autos), "automorphisms": [a.to_json() for a in autos],
                   "is_group": rg.is_group(autos)}, f"{len(autos)} automorphisms\n" + "\n".join(lines))


# -- ordered groups ----------------------------------------------------------------

def _element(G, text):
    data = load_payload(text)

    def tup(x):
        return tuple(tup(v) for v in x) if isinstance(x, list) else x
    return tup(data)


def _order(args):
    try:
        G = og.instance(args.group)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.cmd == "demo":
        rng = random.Random(args.seed)
        bi = og.bi_invariance_counterexamples(G, rng, args.samples)
        roots = og.root_uniqueness_counterexamples(G, rng, args.samples)
        ok = not bi and not roots
        payload = {"group": args.group, "samples": args.samples,
                   "bi_invariance_counterexamples": len(bi),
                   "root_uniqueness_counterexamples": len(roots)}
        return Result(payload, f"{args.group}: {len(bi)} bi-invariance and {len(roots)} "
                               f"root-uniqueness counterexamples in {args.samples} samples",
                      0 if ok else 1)
    if args.m < 1:
        raise UsageError("-m must be >= 1")
    f, g = _element(G, args.f), _element(G, args.g)
    try:
        order = og.compare(G, f, g)
        ok = og.unique_root_check(G, f, g, args.m)
    except (TypeError, ValueError, IndexError) as exc:
        raise UsageError(f"bad group element: {exc}") from None
    return Result({"compare": str(order), "unique_root": ok},
                  f"compare: {order}\nunique root: {str(ok).lower()}", 0 if ok else 1)


# -- verify all --------------------------------------------------------------------

def _verify(args):
    results = recipes.run_all()
    ok = all(r["passed"] for r in results)
    payload = []
    for r in results:
        row = {"name": r["name"], "passed": r["passed"], "budget_seconds": r["budget_seconds"],
               "details": r["details"]}
        # wall-clock fields would break byte-identical output, so they are opt-in
        if args.timing:
            row["elapsed_seconds"] = round(r["elapsed_seconds"], 4)
            row["within_budget"] = r["within_budget"]
        payload.append(row)
    lines = [f"{'PASS' if r['passed'] else 'FAIL'}  {r['name']:<22} {r['elapsed_seconds']:.3f}s"
             for r in results]
    return Result({"passed": ok, "recipes": payload}, "\n".join(lines), 0 if ok else 1)


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False, allow_abbrev=False)
    common.add_argument("--json", action="store_true", help="print canonical JSON")

    parser = _Parser(prog="mcg-roots", allow_abbrev=False, parents=[common],
                     description="Exact checks for mapping-class roots and symmetries.")
    top = parser.add_subparsers(dest="area", required=True, parser_class=_Parser)

    def sub(group, name, handler, **kw):
        p = group.add_parser(name, parents=[common], allow_abbrev=False, **kw)
        p.set_defaults(handler=handler, cmd=name)
        return p

    s = top.add_parser("sl2z", help="SL(2,Z) arithmetic").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    for name in ("order", "classify", "roots", "torsion-class", "oracle-roots"):
        p = sub(s, name, _sl2z)
        p.add_argument("--matrix", required=True, help="[[a,b],[c,d]] or a JSON file")
        if name in ("roots", "oracle-roots"):
            p.add_argument("-m", type=int, required=True)
        if name == "oracle-roots":
            p.add_argument("--bound", type=int, default=None)

    t = top.add_parser("twist", help="Dehn twist words").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    sub(t, "verify", _twist).add_argument("relation")
    for name in ("compose", "h1"):
        p = sub(t, name, _twist)
        p.add_argument("--model", required=True, choices=tc.MODEL_NAMES)
        p.add_argument("--word", required=True, help='[["a1",1],["b",-1]] or a JSON file')
    sub(t, "certify", _twist).add_argument("--model", required=True, choices=tc.MODEL_NAMES)

    g = top.add_parser("glue", help="annulus gluing patterns").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    for name in ("analyze", "induced", "charpoly"):
        p = sub(g, name, _glue)
        p.add_argument("--pattern", help="f:<rho> or g:<rho>")
        p.add_argument("--file", help="GluingPattern JSON (inline or path)")

    y = top.add_parser("sym", help="dihedral symmetry groups").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    sub(y, "elements", _sym).add_argument("--group", required=True)
    p = sub(y, "order", _sym)
    p.add_argument("--group", required=True)
    p.add_argument("element")
    for name in ("commute", "conj"):
        p = sub(y, name, _sym)
        p.add_argument("--group", required=True)
        p.add_argument("x")
        p.add_argument("y")
    p = sub(y, "fixed", _sym)
    p.add_argument("--construction", required=True, choices=("Thm521", "Thm522"))
    p.add_argument("--rho", type=int, required=True)
    p.add_argument("element")
    for name in ("verify-521", "verify-522"):
        sub(y, name, _sym).add_argument("--rho", type=int, required=True)

    o = top.add_parser("orb", help="orbifold bookkeeping").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    p = sub(o, "euler", _orb)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--boundary", type=int, default=0)
    p = sub(o, "prongs", _orb)
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--prongs", required=True, help="comma-separated prong counts")
    sub(o, "rh", _orb).add_argument("--cover", required=True, help="CoverDatum JSON")
    p = sub(o, "pivot", _orb)
    p.add_argument("--points", required=True, help="[[ind, r], ...]")
    p.add_argument("--candidate", type=int, default=0)
    p = sub(o, "orders", _orb)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--max-order", type=int, default=64)
    sub(o, "maxfix", _orb).add_argument("-m", type=int, required=True)
    p = sub(o, "liftk", _orb)
    p.add_argument("--rep", required=True, help="PermRep JSON")
    p.add_argument("--phi", required=True, help="endomorphism JSON")
    p.add_argument("--cap", type=int, default=None)
    sub(o, "primesplit", _orb).add_argument("-n", type=int, required=True)

    r = top.add_parser("graph", help="reduction graphs").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    for name in ("validate", "rank", "classify", "autos"):
        p = sub(r, name, _graph)
        p.add_argument("--graph", help="graph JSON (inline or path)")
        p.add_argument("--example", choices=sorted(_GRAPH_EXAMPLES))

    d = top.add_parser("order", help="bi-ordered groups").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    p = sub(d, "demo", _order)
    p.add_argument("--group", default="heisenberg")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p = sub(d, "check", _order)
    p.add_argument("--group", required=True)
    p.add_argument("--f", required=True, help="element as JSON")
    p.add_argument("--g", required=True, help="element as JSON")
    p.add_argument("-m", type=int, required=True)

    v = top.add_parser("verify", help="run every recipe").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    sub(v, "all", _verify).add_argument("--timing", action="store_true",
                                        help="include wall-clock times in JSON output")
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if args.json:
        print(json.dumps(result.payload, sort_keys=True, separators=(",", ":")), file=out)
    else:
        print(result.text if result.text is not None else result.payload, file=out)
    return result.code


def main():
    sys.exit(run())
