"""Command-line front end.

Exit codes: 0 success, 1 a requested decision came out "no" (or a
decomposition failed validation), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from treecut import io as tio
from treecut.decomposition import metrics, validate
from treecut.graph import CapacitatedGraph
from treecut.nice import is_nice, nicify, to_tree_decomposition, validate_tree_decomposition
from treecut.oracles import SizeGuardError

log = logging.getLogger("treecut")

ORACLE_LIMIT = 9


class InputError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    instance: dict = field(default_factory=dict)
    result: dict = field(default_factory=dict)
    seconds: float = 0.0

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(asdict(self), indent=2, sort_keys=True, default=_jsonable)
        lines = [f"command: {self.command}"]
        for section in ("instance", "result"):
            for k, v in getattr(self, section).items():
                lines.append(f"{k}: {_plain(v)}")
        lines.append(f"seconds: {self.seconds:.3f}")
        return "\n".join(lines)


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if x == float("inf"):
        return "inf"
    return str(x)


def _plain(v):
    if isinstance(v, float) and v == float("inf"):
        return "inf"
    if isinstance(v, (list, tuple)):
        return " ".join(_plain(x) for x in v)
    return str(v)


def _read(path: str, parser, *args):
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    try:
        return parser(text, *args)
    except ValueError as e:
        raise InputError(f"{path}: {e}") from None


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_pair(args):
    g = _read(args.graph, tio.parse_graph)
    dec = _read(args.decomposition, tio.parse_decomposition)
    return g, dec


def _checked(g, dec, path):
    rep = validate(g, dec)
    if not rep:
        raise InputError(f"{path}: invalid decomposition: {rep.message}")


def _caps(args, g) -> CapacitatedGraph:
    if not args.caps:
        raise InputError("this problem needs --caps")
    return CapacitatedGraph(g, _read(args.caps, tio.parse_capacities, g.n))


# --- subcommands ----------------------------------------------------------


def cmd_validate(args, rep: RunReport) -> int:
    g, dec = _load_pair(args)
    v = validate(g, dec)
    rep.instance.update(n=g.n, m=g.m, nodes=dec.size)
    rep.result["valid"] = bool(v)
    if not v:
        rep.result["reason"] = v.message
        return 1
    rep.result["width"] = metrics(g, dec).width
    rep.result["nice"] = is_nice(g, dec)
    return 0


def cmd_metrics(args, rep: RunReport) -> int:
    g, dec = _load_pair(args)
    _checked(g, dec, args.decomposition)
    met = metrics(g, dec)
    rep.instance.update(n=g.n, m=g.m, nodes=dec.size, nice=is_nice(g, dec))
    rep.result["width"] = met.width
    rep.result["per_node"] = [
        {"node": t, "torso_size": met.torso_size[t], "adhesion": met.adhesion[t], "bag": sorted(dec.bags[t])}
        for t in dec.nodes
    ]
    if not args.json:
        rep.result["per_node"] = [
            f"[{r['node']}:tor={r['torso_size']},adh={r['adhesion']}]" for r in rep.result["per_node"]
        ]
    return 0


def cmd_nicify(args, rep: RunReport) -> int:
    g, dec = _load_pair(args)
    _checked(g, dec, args.decomposition)
    out = nicify(g, dec)
    _write(args.output, tio.format_decomposition(out))
    rep.instance.update(n=g.n, m=g.m, input_nodes=dec.size, input_width=metrics(g, dec).width)
    rep.result.update(nodes=out.size, width=metrics(g, out).width, nice=True)
    return 0


def cmd_export(args, rep: RunReport) -> int:
    g, dec = _load_pair(args)
    _checked(g, dec, args.decomposition)
    nd = dec if is_nice(g, dec) else nicify(g, dec)
    k = metrics(g, nd).width
    td = to_tree_decomposition(g, nd)
    err = validate_tree_decomposition(g, td)
    if err:
        raise AssertionError(f"exported tree decomposition is invalid: {err}")
    _write(args.output, tio.format_tree_decomposition(td, g.n))
    rep.instance.update(n=g.n, m=g.m, tcw_width=k)
    rep.result.update(treewidth_bound=td.width, guaranteed=2 * k * k + 3 * k)
    return 0


def _oracle_value(problem, g, cg):
    from treecut import oracles

    if g.n > ORACLE_LIMIT:
        raise SizeGuardError(f"n = {g.n} exceeds the oracle guard {ORACLE_LIMIT}")
    if problem == "cvc":
        return oracles.cvc_brute(cg)
    if problem == "cds":
        return oracles.cds_brute(cg)
    if problem == "imb":
        return oracles.imb_brute(g)
    return oracles.tcw_exact(g, limit=ORACLE_LIMIT)


def cmd_solve(args, rep: RunReport) -> int:
    from treecut.cds import solve_cds
    from treecut.cvc import solve_cvc
    from treecut.imbalance import solve_imb

    g, dec = _load_pair(args)
    _checked(g, dec, args.decomposition)
    cg = _caps(args, g) if args.problem in ("cvc", "cds") else None
    rep.instance.update(n=g.n, m=g.m, width=metrics(g, dec).width, nice=is_nice(g, dec))
    if args.threads and args.threads > 1:
        log.info("--threads %d accepted; the table computation runs serially", args.threads)
    if args.problem == "cvc":
        _, opt = solve_cvc(cg, dec)
    elif args.problem == "cds":
        _, opt = solve_cds(cg, dec)
    else:
        _, opt = solve_imb(g, dec, cutoff=not args.no_cutoff)
    rep.result["optimum"] = opt
    if args.check_oracle:
        try:
            ref = _oracle_value(args.problem, g, cg)
        except SizeGuardError as e:
            rep.result["oracle"] = f"skipped ({e})"
        else:
            rep.result["oracle"] = ref
            if ref != opt:
                raise AssertionError(f"solver gave {opt}, oracle gave {ref}")
    return _decide(args, rep, opt)


def _decide(args, rep, opt) -> int:
    if args.budget is None:
        return 0
    ok = opt <= args.budget
    rep.result["budget"] = args.budget
    rep.result["answer"] = "yes" if ok else "no"
    return 0 if ok else 1


def cmd_oracle(args, rep: RunReport) -> int:
    g = _read(args.graph, tio.parse_graph)
    cg = _caps(args, g) if args.problem in ("cvc", "cds") else None
    rep.instance.update(n=g.n, m=g.m)
    try:
        val = _oracle_value(args.problem, g, cg)
    except SizeGuardError as e:
        raise InputError(str(e)) from None
    rep.result["optimum"] = val
    return _decide(args, rep, val)


def cmd_gen(args, rep: RunReport) -> int:
    from treecut import reductions as red

    kind = args.kind
    if kind == "star-of-stars":
        n = _one_int(args)
        g = red.gen_star_of_stars(n)
        _write(args.output, tio.format_graph(g))
        if args.decomposition:
            _write(args.decomposition, tio.format_decomposition(red.star_of_stars_decomposition(n)))
        rep.result.update(n=g.n, m=g.m)
        return 0
    if kind == "ternary":
        g = red.gen_ternary_tree(_one_int(args))
        _write(args.output, tio.format_graph(g))
        rep.result.update(n=g.n, m=g.m)
        return 0
    if args.mcc:
        mcc = _read(args.mcc, tio.parse_mcc)
    else:
        mcc = red.random_mcc(args.k, args.n, args.p, random.Random(args.seed))
    if args.mcc_out:
        _write(args.mcc_out, tio.format_mcc(mcc))
    lc, dec = red.mcc_to_list_coloring(mcc)
    if kind == "mcc-listcol":
        inst_text, graph = tio.format_list_coloring(lc), lc.graph
    elif kind == "mcc-precol":
        pc, dec = red.list_to_precoloring(lc, dec)
        inst_text, graph = tio.format_precoloring(pc), pc.graph
    else:
        csp, dec = red.mcc_to_boolean_csp(mcc)
        inst_text, graph = tio.format_csp(csp), csp.incidence_graph()
    _write(args.output, inst_text)
    if args.decomposition:
        _write(args.decomposition, tio.format_decomposition(dec))
    rep.instance.update(k=mcc.k, part_size=mcc.n, mcc_edges=len(mcc.edges))
    rep.result.update(vertices=graph.n, width=metrics(graph, dec).width)
    return 0


def _one_int(args) -> int:
    if len(args.params) != 1:
        raise InputError(f"gen {args.kind} expects one integer parameter")
    try:
        return int(args.params[0])
    except ValueError:
        raise InputError(f"not an integer: {args.params[0]!r}") from None


# --- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="treecut", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="count", default=0)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--threads", type=int, default=1, help="worker cap")
    sub = ap.add_subparsers(dest="command", required=True)

    def pair(name, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("graph")
        p.add_argument("decomposition")
        return p

    pair("validate", "check a tree-cut decomposition").set_defaults(func=cmd_validate)
    pair("metrics", "per-node torso-size and adhesion").set_defaults(func=cmd_metrics)
    p = pair("nicify", "write an equivalent nice decomposition")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_nicify)
    p = pair("export-treedec", "write a tree decomposition derived from a nice one")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("solve", parents=[common], help="run a DP solver")
    p.add_argument("problem", choices=["cvc", "cds", "imb"])
    p.add_argument("graph")
    p.add_argument("decomposition")
    p.add_argument("--caps")
    p.add_argument("--budget", type=int)
    p.add_argument("--check-oracle", action="store_true")
    p.add_argument("--no-cutoff", action="store_true", help="imb: keep every finite table entry")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", parents=[common], help="brute-force reference value")
    p.add_argument("problem", choices=["cvc", "cds", "imb", "tcw"])
    p.add_argument("graph")
    p.add_argument("--caps")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", parents=[common], help="generate instances")
    p.add_argument(
        "kind", choices=["star-of-stars", "ternary", "mcc-listcol", "mcc-precol", "mcc-csp"]
    )
    p.add_argument("params", nargs="*", help="n for star-of-stars, depth for ternary")
    p.add_argument("-o", "--output")
    p.add_argument("--decomposition", help="also write the bundled decomposition here")
    p.add_argument("--mcc", help="read the MCC instance instead of sampling one")
    p.add_argument("--mcc-out", help="write the sampled MCC instance here")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--p", type=float, default=0.7)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(name)s: %(message)s"
    )
    argv_list = list(sys.argv[1:] if argv is None else argv)
    rep = RunReport(" ".join(argv_list))
    start = time.perf_counter()
    try:
        code = args.func(args, rep)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    rep.seconds = time.perf_counter() - start
    out = rep.render(args.json)
    # keep stdout clean when the instance itself goes to stdout
    stream = sys.stderr if getattr(args, "output", "") in (None, "-") and args.command in (
        "nicify", "export-treedec", "gen") else sys.stdout
    print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
