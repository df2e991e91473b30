"""Command-line front end: `python -m serredepth <group> <command> ...`."""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import graphs, hochster, monomials, symbolic, verify
from .complex_core import (
    BudgetExceeded,
    SimplicialComplex,
    alexander_dual,
    is_pure,
    is_shellable,
    link,
    skeleton,
)
from .homology import FieldSpec, reduced_homology


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def jsonable(x):
    """Replace infinities by the strings 'inf' / '-inf'; None stays null."""
    if isinstance(x, float) and math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


def from_jsonable(x):
    if x == "inf":
        return math.inf
    if x == "-inf":
        return -math.inf
    if isinstance(x, dict):
        return {k: from_jsonable(v) for k, v in x.items()}
    if isinstance(x, list):
        return [from_jsonable(v) for v in x]
    return x


# -- input ----------------------------------------------------------------------------------


def _load_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def _with_location(path, reader):
    try:
        return reader()
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def load_complex(path: str) -> SimplicialComplex:
    obj = _load_json(path)
    return _with_location(path, lambda: SimplicialComplex.from_json(obj))


def load_ideal(args) -> monomials.MonomialIdeal:
    if args.gens is not None:
        return _with_location("--gens", lambda: monomials.MonomialIdeal.parse(args.gens, args.n))
    if args.input is None:
        raise UsageError("give --in FILE or --gens 'x1*x2, ...'")
    obj = _load_json(args.input)
    return _with_location(args.input, lambda: monomials.MonomialIdeal.from_json(obj))


def load_graph(path: str) -> graphs.Graph:
    obj = _load_json(path)
    return _with_location(path, lambda: graphs.Graph.from_json(obj))


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


# -- commands ---------------------------------------------------------------------------------


def cmd_complex(args, fld):
    cx = load_complex(args.input)
    c = args.command
    if c == "info":
        return {
            "n": cx.n,
            "dim": cx.dim,
            "facets": [list(f) for f in cx.facets],
            "f_vector": cx.f_vector(),
            "pure": is_pure(cx),
        }
    if c == "homology":
        return reduced_homology(cx, fld).to_json()
    if c == "betti":
        return hochster.betti_table(cx, fld)
    if c == "depth":
        return hochster.depth(cx, fld)
    if c == "serre-depth":
        return hochster.serre_depth(cx, args.r, fld)
    if c == "local-coh":
        return hochster.local_coh_dims(cx, fld).to_json()
    if c == "cm":
        return hochster.is_cohen_macaulay(cx, fld)
    if c == "dual":
        return alexander_dual(cx)
    if c == "link":
        return link(cx, _int_list(args.face))
    if c == "skeleton":
        return skeleton(cx, args.i)
    if c == "shelling":
        found, order = is_shellable(cx)
        return {"shellable": found if isinstance(found, bool) else "unknown", "order": [list(f) for f in order or []]}
    raise AssertionError(c)


def cmd_ideal(args, fld):
    ideal = load_ideal(args)
    c = args.command
    if c == "show":
        return ideal
    if c == "depth":
        return monomials.depth_monomial(ideal, fld, method=args.method)
    if c == "serre-depth":
        return monomials.serre_depth_monomial(ideal, args.r, fld, method=args.method)
    if c == "symbolic-power":
        return monomials.symbolic_power(ideal, args.ell)
    if c == "polarize":
        pol = monomials.polarize_full(ideal)
        return {"ideal": pol.ideal.to_json(), "extra": pol.extra,
                "names": {str(k): list(v) for k, v in sorted(pol.names.items())}}
    if c == "complex":
        return monomials.sr_complex(ideal)
    if c == "betti":
        return hochster.betti_table(monomials.sr_complex(ideal), fld)
    raise AssertionError(c)


def cmd_symbolic(args, fld):
    cx = load_complex(args.input)
    c = args.command
    if c == "depth":
        return symbolic.symbolic_depth(cx, args.ell, fld, args.max_enum)
    if c == "serre-depth":
        return symbolic.symbolic_serre_depth(cx, args.ell, args.r, fld, args.max_enum)
    if c == "sequence":
        if args.r is None:
            return symbolic.depth_sequence(cx, args.max, fld, args.max_enum)
        return symbolic.serre_depth_sequence(cx, args.max, args.r, fld, args.max_enum)
    if c == "profile":
        return symbolic.symbolic_coh_profile(cx, args.ell, fld, args.max_enum).to_json()
    if c == "takayama":
        tk = symbolic.takayama_complex(cx, _int_list(args.a), args.ell)
        return {"complex": tk.to_json(), "homology": reduced_homology(tk, fld).to_json()}
    raise AssertionError(c)


def cmd_graph(args, fld):
    G = load_graph(args.input)
    c = args.command
    if c == "edge-ideal":
        return graphs.edge_ideal(G)
    if c == "cover-ideal":
        return graphs.cover_ideal(G)
    if c == "im":
        return graphs.induced_matching_number(G)
    if c == "gl":
        return graphs.construct_G_ell(G, args.ell)
    if c == "vwc-depth":
        st = graphs.vwc_decompose(G, fld)
        return graphs.vwc_serre_depth_formula(st, args.r)
    if c == "cover-depth":
        return graphs.cover_serre_depth(G, args.r, fld)
    raise AssertionError(c)


def cmd_verify(args, fld):
    cfg = verify.VerifyConfig(max_enum=args.max_enum, seed=args.seed, field=fld)
    echo = None if args.json else print
    report = verify.verify_paper(cfg, only=args.only, echo=echo)
    return report


# -- output ---------------------------------------------------------------------------------


def render(value, as_json: bool) -> str:
    if isinstance(value, verify.VerificationReport):
        if as_json:
            return json.dumps(jsonable(value.to_json()), indent=2)
        n_ok = sum(c.status == verify.PASS for c in value.checks)
        return f"{n_ok}/{len(value.checks)} checks passed"
    if isinstance(value, hochster.BettiTable):
        return json.dumps(value.to_json()) if as_json else value.render()
    if hasattr(value, "to_json"):
        return json.dumps(value.to_json()) if as_json else str(value)
    if as_json:
        return json.dumps(jsonable(value))
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, list) and all(isinstance(v, (int, float)) for v in value):
        return " ".join(json.dumps(jsonable(v)).strip('"') for v in value)
    if isinstance(value, (dict, list)):
        return json.dumps(jsonable(value))
    if isinstance(value, float) and math.isinf(value):
        return jsonable(value)
    return str(value)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", default=argparse.SUPPRESS, help="q (default) or fp:P")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    p = _Parser(prog="serredepth", parents=[common], description=__doc__)
    groups = p.add_subparsers(dest="group", required=True)

    def leaf(sub, name, help_text, needs_input=True):
        q = sub.add_parser(name, parents=[common], help=help_text)
        if needs_input:
            q.add_argument("--in", dest="input", required=True, help="JSON file, or - for stdin")
        return q

    g = groups.add_parser("complex", help="simplicial complex invariants")
    sub = g.add_subparsers(dest="command", required=True)
    for name, h in [("info", "facets, dimension, f-vector"), ("homology", "reduced homology"),
                    ("betti", "graded Betti table of k[Delta]"), ("depth", "depth of k[Delta]"),
                    ("local-coh", "dimensions of dual local cohomology"), ("cm", "Cohen-Macaulay test"),
                    ("dual", "Alexander dual"), ("shelling", "search for a shelling order")]:
        leaf(sub, name, h)
    leaf(sub, "serre-depth", "S_r-depth").add_argument("--r", type=int, required=True)
    leaf(sub, "link", "link of a face").add_argument("--face", required=True)
    leaf(sub, "skeleton", "i-skeleton").add_argument("--i", type=int, required=True)

    g = groups.add_parser("ideal", help="monomial ideals")
    sub = g.add_subparsers(dest="command", required=True)

    def ideal_leaf(name, h):
        q = sub.add_parser(name, parents=[common], help=h)
        q.add_argument("--in", dest="input")
        q.add_argument("--gens", help="e.g. 'x1*x3, x2^2'")
        q.add_argument("--n", type=int, help="number of variables for --gens")
        return q

    for name, h in [("show", "minimal generators"), ("polarize", "polarization"),
                    ("complex", "Stanley-Reisner complex"), ("betti", "Betti table of a squarefree ideal")]:
        ideal_leaf(name, h)
    for name, h in [("depth", "depth of S/I"), ("serre-depth", "S_r-depth of S/I")]:
        q = ideal_leaf(name, h)
        q.add_argument("--method", choices=["polarization", "direct"], default="polarization")
        if name == "serre-depth":
            q.add_argument("--r", type=int, required=True)
    ideal_leaf("symbolic-power", "symbolic power").add_argument("--ell", type=int, required=True)

    g = groups.add_parser("symbolic", help="symbolic powers of Stanley-Reisner ideals")
    sub = g.add_subparsers(dest="command", required=True)
    for name, h in [("depth", "depth of S/I^(l)"), ("serre-depth", "S_r-depth of S/I^(l)"),
                    ("sequence", "depths for l = 1..max"), ("profile", "local cohomology dimensions"),
                    ("takayama", "degree complex for a given a")]:
        q = leaf(sub, name, h)
        q.add_argument("--max-enum", type=int, default=symbolic.DEFAULT_MAX_ENUM)
        if name == "sequence":
            q.add_argument("--max", type=int, required=True)
            q.add_argument("--r", type=int, help="S_r-depth instead of depth")
        else:
            q.add_argument("--ell", type=int, required=True)
        if name == "serre-depth":
            q.add_argument("--r", type=int, required=True)
        if name == "takayama":
            q.add_argument("--a", required=True, help="comma-separated exponents")

    g = groups.add_parser("graph", help="edge and cover ideals of graphs")
    sub = g.add_subparsers(dest="command", required=True)
    for name, h in [("edge-ideal", "edge ideal I(G)"), ("cover-ideal", "cover ideal J(G)"),
                    ("im", "induced matching number")]:
        leaf(sub, name, h)
    leaf(sub, "gl", "the layered graph G_l").add_argument("--ell", type=int, required=True)
    leaf(sub, "vwc-depth", "S_r-depth of S/I(G), G very well-covered").add_argument("--r", type=int, required=True)
    leaf(sub, "cover-depth", "S_r-depth of S/J(G)").add_argument("--r", type=int, required=True)

    g = groups.add_parser("verify", help="replay the acceptance checks")
    sub = g.add_subparsers(dest="command", required=True)
    q = leaf(sub, "paper", "run every named check", needs_input=False)
    q.add_argument("--max-enum", type=int, default=symbolic.DEFAULT_MAX_ENUM)
    q.add_argument("--seed", type=int, default=verify.VerifyConfig.seed)
    q.add_argument("--only", help="run checks whose name contains this text")
    return p


HANDLERS = {"complex": cmd_complex, "ideal": cmd_ideal, "symbolic": cmd_symbolic,
            "graph": cmd_graph, "verify": cmd_verify}


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.json = getattr(args, "json", False)
        fld = FieldSpec.parse(getattr(args, "field", "q"))
        value = HANDLERS[args.group](args, fld)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (UsageError, BudgetExceeded, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(render(value, args.json))
    if isinstance(value, verify.VerificationReport) and not value.ok:
        return 2
    return 0


def main() -> None:
    sys.exit(run())
