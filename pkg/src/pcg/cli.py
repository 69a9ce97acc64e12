"""Command-line front end: ``pcg analyze|export|verify|bound``.

Exit codes: 0 success, 1 verification mismatch, 2 usage, 3 solver
timeout, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional

from . import closedform as cf
from .decompositions import cyclic_hjoin_graph, dicyclic_join_model, dihedral_join_model
from .groups import (
    DEFAULT_ENUM_BOUND,
    GroupSpec,
    GroupSpecError,
    enumerate_elements,
    i_d_size,
    load_orders_file,
    order_profile,
    p_set_size,
)
from .mis import (
    SolverLimitError,
    SolverTimeout,
    default_oracle_bound,
    i_d_set,
    mis_oracle,
    mis_quotient,
    sp_lower_bound,
)
from .numth import semiprime_divisors
from .pcgraph import build_quotient, build_theta, export_dot, export_edges, is_isomorphic, split_obstruction

SCHEMA = "pcg/1"
EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_TIMEOUT, EXIT_IO = 0, 1, 2, 3, 4
ALL_CHECKS = ("formula", "bound", "split", "idmax", "joins")
NAMED = ("cyclic", "dihedral", "dicyclic", "semidihedral")


class UsageError(Exception):
    pass


def _spec_from_args(args) -> GroupSpec:
    if args.orders_file:
        if args.family is not None:
            raise UsageError("give either a family and n or --orders-file, not both")
        try:
            return load_orders_file(args.orders_file)
        except OSError as exc:
            raise OSError(f"cannot read {args.orders_file}: {exc.strerror}") from exc
    if args.family is None or args.n is None:
        raise UsageError("a family and n (or --orders-file) are required")
    if args.family not in NAMED:
        raise UsageError(f"family must be one of {', '.join(NAMED)}")
    return GroupSpec(args.family, args.n)


def _oracle_bound(args) -> int:
    return args.max_order if args.max_order is not None else default_oracle_bound()


# -- analyze ---------------------------------------------------------------


def build_report(spec: GroupSpec, method: str = "auto", timeout: Optional[float] = None,
                 max_order: Optional[int] = None) -> Dict:
    """Everything ``analyze`` prints, as a JSON-ready dict."""
    if max_order is None:
        max_order = default_oracle_bound()
    profile = order_profile(spec)
    sp = semiprime_divisors(profile.group_order)
    split = cf.classify_split(profile)
    formula = cf.alpha_exact_formula(spec)
    report: Dict = {
        "schema": SCHEMA,
        "group": {
            "family": spec.family,
            "n": spec.n,
            "name": spec.name,
            "order": profile.group_order,
        },
        "profile": [{"order": d, "count": c} for d, c in profile.items()],
        "p_set_size": p_set_size(profile),
        "semiprime_divisors": sp,
        "i_d": [{"d": d, "size": i_d_size(profile, d)} for d in sp],
        "split": {
            "verdict": split.verdict,
            "primes": list(split.primes),
            "witness_orders": list(split.witness),
        },
        "alpha": None,
        "formula": None,
        "bounds": {"sp_lower_bound": sp_lower_bound(profile), "cyclic_lower_bound": None},
        "agreement": {"formula_vs_solver": None, "bound_le_alpha": None},
        "incomplete": False,
    }
    if formula.kind != cf.UNSUPPORTED:
        report["formula"] = {"value": formula.value, "kind": formula.kind, "provenance": formula.provenance}
    if spec.family == "cyclic" and spec.n > 1 and sp:
        report["bounds"]["cyclic_lower_bound"] = cf.cyclic_lower_bound(spec.n).value

    if method == "formula" and formula.kind != cf.EXACT:
        raise UsageError(f"no closed form for {spec.name}; use --method quotient or oracle")

    try:
        quotient = mis_quotient(build_quotient(profile), timeout=timeout)
        if method == "oracle":
            graph = build_theta(enumerate_elements(spec, bound=max_order))
            res = mis_oracle(graph, bound=max_order, timeout=timeout)
            orders = sorted({graph.orders[v] for v in res.witness})
            report["alpha"] = {"value": res.alpha, "method": "oracle",
                               "witness": {"size": len(res.witness), "orders": orders}}
            solver_alpha = res.alpha
        elif method == "quotient" or (method == "auto" and formula.kind != cf.EXACT):
            report["alpha"] = {"value": quotient.alpha, "method": "quotient",
                               "witness": {"classes": list(quotient.witness)}}
            solver_alpha = quotient.alpha
        else:
            report["alpha"] = {"value": formula.value, "method": "formula",
                               "witness": {"classes": list(quotient.witness)}}
            solver_alpha = quotient.alpha
    except SolverTimeout as exc:
        report["incomplete"] = True
        report["alpha"] = {"value": None, "best_found": len(exc.best or ()), "method": method}
        raise _IncompleteReport(report) from exc

    if formula.kind == cf.EXACT:
        report["agreement"]["formula_vs_solver"] = formula.value == solver_alpha
    report["agreement"]["bound_le_alpha"] = report["bounds"]["sp_lower_bound"] <= solver_alpha
    return report


class _IncompleteReport(Exception):
    def __init__(self, report: Dict):
        super().__init__("solver timed out")
        self.report = report


def dump_json(report: Dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def format_text(report: Dict) -> str:
    g = report["group"]
    lines = [f"group        {g['name']}  (|G| = {g['order']})"]
    lines.append("orders       " + ", ".join(f"{p['order']}:{p['count']}" for p in report["profile"]))
    lines.append(f"|P(G)|       {report['p_set_size']}")
    lines.append(f"SP(|G|)      {report['semiprime_divisors']}")
    if report["i_d"]:
        lines.append("|I_d|        " + ", ".join(f"d={r['d']}:{r['size']}" for r in report["i_d"]))
    s = report["split"]
    verdict = s["verdict"]
    if s["primes"]:
        verdict += "(" + ", ".join(map(str, s["primes"])) + ")"
    if s["witness_orders"]:
        verdict += " witness orders " + ", ".join(map(str, s["witness_orders"]))
    lines.append(f"split        {verdict}")
    a = report["alpha"]
    if a is not None:
        if a["value"] is None:
            lines.append(f"alpha        INCOMPLETE (best found {a['best_found']}, {a['method']})")
        else:
            w = a["witness"]
            desc = (f"classes {w['classes']}" if "classes" in w
                    else f"{w['size']} vertices, orders {w['orders']}")
            lines.append(f"alpha        {a['value']}  [{a['method']}; {desc}]")
    f = report["formula"]
    if f is not None:
        lines.append(f"formula      {f['value']}  ({f['provenance']})")
    b = report["bounds"]
    lines.append(f"lower bound  {b['sp_lower_bound']}"
                 + (f"  (cyclic closed form {b['cyclic_lower_bound']})" if b["cyclic_lower_bound"] is not None else ""))
    ag = report["agreement"]
    lines.append("agreement    " + ", ".join(f"{k}={v}" for k, v in ag.items()))
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    spec = _spec_from_args(args)
    try:
        report = build_report(spec, args.method, args.timeout, _oracle_bound(args))
        code = EXIT_OK
    except _IncompleteReport as exc:
        report, code = exc.report, EXIT_TIMEOUT
    out = dump_json(report) if args.format == "json" else format_text(report)
    sys.stdout.write(out)
    return code


# -- export ----------------------------------------------------------------


def cmd_export(args) -> int:
    spec = _spec_from_args(args)
    bound = args.max_order if args.max_order is not None else DEFAULT_ENUM_BOUND
    graph = build_theta(enumerate_elements(spec, bound=bound))
    text = export_dot(graph, spec.name) if args.format == "dot" else export_edges(graph)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- bound -----------------------------------------------------------------


def cmd_bound(args) -> int:
    spec = _spec_from_args(args)
    profile = order_profile(spec)
    sp = semiprime_divisors(profile.group_order)
    data = {
        "schema": SCHEMA,
        "group": spec.name,
        "i_d": [{"d": d, "size": i_d_size(profile, d)} for d in sp],
        "sp_lower_bound": sp_lower_bound(profile),
        "cyclic_lower_bound": (cf.cyclic_lower_bound(spec.n).value
                               if spec.family == "cyclic" and sp else None),
    }
    if args.format == "json":
        sys.stdout.write(dump_json(data))
    else:
        sys.stdout.write(f"{spec.name}: lower bound {data['sp_lower_bound']}\n")
        for r in data["i_d"]:
            sys.stdout.write(f"  |I_{r['d']}| = {r['size']}\n")
        if data["cyclic_lower_bound"] is not None:
            sys.stdout.write(f"  cyclic closed form: {data['cyclic_lower_bound']}\n")
    return EXIT_OK


# -- verify ----------------------------------------------------------------


def _parse_range(text: str):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"range must look like LO..HI, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"empty range {text}")
    return lo, hi


def run_check(spec: GroupSpec, check: str, oracle_bound: int):
    """Return ``(status, detail)`` with status one of PASS, FAIL, SKIP."""
    profile = order_profile(spec)
    size = profile.group_order
    if check == "formula":
        f = cf.alpha_exact_formula(spec)
        if f.kind != cf.EXACT:
            return "SKIP", "no closed form"
        alpha = mis_quotient(build_quotient(profile)).alpha
        return ("PASS" if f.value == alpha else "FAIL"), f"formula {f.value} solver {alpha}"
    if check == "bound":
        alpha = mis_quotient(build_quotient(profile)).alpha
        lb = sp_lower_bound(profile)
        ok = lb <= alpha
        detail = f"bound {lb} <= alpha {alpha}"
        if spec.family == "cyclic" and semiprime_divisors(size):
            clb = cf.cyclic_lower_bound(spec.n).value
            ok = ok and clb == lb and clb <= alpha
            detail += f"; cyclic closed form {clb}"
        return ("PASS" if ok else "FAIL"), detail
    if size > oracle_bound:
        return "SKIP", f"|G|={size} above graph bound {oracle_bound}"
    graph = build_theta(enumerate_elements(spec, bound=size))
    if check == "split":
        cls = cf.classify_split(profile)
        obstruction = split_obstruction(graph)
        ok = cls.is_split == (obstruction is None)
        if ok and cls.is_split:
            a = cf.alpha_if_split(profile).value
            oracle = mis_oracle(graph, bound=oracle_bound).alpha
            ok = a == oracle
            return ("PASS" if ok else "FAIL"), f"{cls}; alpha {a} oracle {oracle}"
        found = "none" if obstruction is None else obstruction[0]
        return ("PASS" if ok else "FAIL"), f"{cls}; induced obstruction {found}"
    if check == "idmax":
        nonempty = 0
        for d in semiprime_divisors(size):
            try:
                members = i_d_set(graph, d)
            except AssertionError as exc:
                return "FAIL", str(exc)
            nonempty += bool(members)
        return "PASS", f"{nonempty} nonempty I_d sets maximal"
    if check == "joins":
        n = spec.n
        if spec.family == "dihedral":
            model = dihedral_join_model(n, build_theta(enumerate_elements(GroupSpec("cyclic", n))))
            what = "Theta(Z_n) v K_n"
        elif spec.family == "dicyclic" and n % 2:
            model = dicyclic_join_model(n, build_theta(enumerate_elements(GroupSpec("cyclic", 2 * n))))
            what = "Theta(Z_2n) v E_2n"
        elif spec.family == "cyclic" and cyclic_hjoin_graph(n) is not None:
            model = cyclic_hjoin_graph(n)
            what = "H-join model"
        else:
            return "SKIP", "no join model"
        ok = is_isomorphic(graph, model, bound=max(oracle_bound, size))
        return ("PASS" if ok else "FAIL"), f"isomorphic to {what}: {ok}"
    raise UsageError(f"unknown check {check!r}")


def cmd_verify(args) -> int:
    if args.family not in NAMED:
        raise UsageError(f"family must be one of {', '.join(NAMED)}")
    lo, hi = _parse_range(args.range)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    bad = [c for c in checks if c not in ALL_CHECKS]
    if bad or not checks:
        raise UsageError(f"unknown checks {bad}; choose from {','.join(ALL_CHECKS)}")
    oracle_bound = _oracle_bound(args)
    low = 1 if args.family == "cyclic" else 3
    tally: Dict[str, Dict[str, int]] = {c: {"PASS": 0, "FAIL": 0, "SKIP": 0} for c in checks}
    for n in range(max(lo, low), hi + 1):
        spec = GroupSpec(args.family, n)
        for check in checks:
            status, detail = run_check(spec, check, oracle_bound)
            tally[check][status] += 1
            print(f"{status} {spec.name:<8} {check:<7} {detail}")
    print()
    print(f"{'check':<8} {'pass':>6} {'fail':>6} {'skip':>6}")
    for check in checks:
        t = tally[check]
        print(f"{check:<8} {t['PASS']:>6} {t['FAIL']:>6} {t['SKIP']:>6}")
    return EXIT_MISMATCH if any(t["FAIL"] for t in tally.values()) else EXIT_OK


# -- entry point -----------------------------------------------------------


def _add_group_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("family", nargs="?", help="cyclic, dihedral, dicyclic or semidihedral")
    p.add_argument("n", nargs="?", type=int, help="family parameter")
    p.add_argument("--orders-file", metavar="PATH", help="explicit group: one element order per line")
    p.add_argument("--max-order", type=int, metavar="N", help="vertex bound for full-graph work")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pcg", description="Prime-coprime graphs of finite groups.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("analyze", help="report order statistics, split type and alpha")
    _add_group_args(p)
    p.add_argument("--method", choices=("auto", "formula", "quotient", "oracle"), default="auto")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--timeout", type=float, metavar="SECONDS")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("export", help="write the graph as DOT or an edge list")
    _add_group_args(p)
    p.add_argument("--format", choices=("dot", "edges"), default="edges")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify", help="cross-check formulas and constructions over a range")
    p.add_argument("family")
    p.add_argument("range", help="LO..HI, inclusive")
    p.add_argument("--checks", default="formula,bound", help=f"comma list from {','.join(ALL_CHECKS)}")
    p.add_argument("--max-order", type=int, metavar="N", help="vertex bound for full-graph checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="semiprime lower bounds for alpha")
    _add_group_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_bound)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, GroupSpecError) as exc:
        print(f"pcg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SolverLimitError as exc:
        print(f"pcg: error: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT if isinstance(exc, SolverTimeout) else EXIT_USAGE
    except ValueError as exc:
        print(f"pcg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"pcg: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
