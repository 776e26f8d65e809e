"""
Command line interface.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage, input or
precondition errors.
"""
import argparse
import sys
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from kkclique import binomial, extremal, graph, search
from kkclique.data_source_connection import format_edge_list, read_graph, write_graph
from kkclique.model import FORMATS, OutputEnvelope
from kkclique.plotting import to_dot
from kkclique.util.config import get_settings
from kkclique.util.exceptions import KKCliqueError
from kkclique.util.log import configure_logging, get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(KKCliqueError):
    """Arguments that parse but make no sense together."""


def parse_pair(text: str) -> Tuple[int, int]:
    try:
        r, s = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'r,s', got {text!r}") from None
    return r, s


def parse_range(text: str) -> range:
    """``7..200`` or a single ``12``."""
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split(".."))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"expected an integer or a range 'a..b', got {text!r}") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def parse_ints(text: str) -> List[int]:
    if text == "":
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _need(params: Sequence[str], count: int, usage: str) -> List[int]:
    if len(params) != count:
        raise UsageError(f"expected {count} parameters: {usage}")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise UsageError(f"parameters must be integers: {usage}") from None


# -- commands -----------------------------------------------------------------

def cmd_canon(args: argparse.Namespace, env: OutputEnvelope) -> None:
    env.parameters = [("x", args.x), ("r", args.r)]
    env.result = str(binomial.canonical_rep(args.x, args.r))


def cmd_bound(args: argparse.Namespace, env: OutputEnvelope) -> None:
    env.parameters = [("x", args.x), ("r", args.r), ("s", args.s)]
    env.result = binomial.kk_bound(args.x, args.r, args.s)


def cmd_count(args: argparse.Namespace, env: OutputEnvelope) -> None:
    env.parameters = [("file", args.file), ("r", args.r), ("prune", args.prune)]
    g = read_graph(args.file)
    if args.prune and args.r >= 2:
        env.result = graph.prune_then_count(g, args.r)
    else:
        env.result = graph.count_cliques(g, args.r)


def cmd_profile(args: argparse.Namespace, env: OutputEnvelope) -> None:
    env.parameters = [("file", args.file), ("r_max", args.r_max)]
    profile = graph.clique_profile(read_graph(args.file), args.r_max)
    env.result = [{"r": r, "k_r": k} for r, k in profile.as_dict().items()]


def cmd_core(args: argparse.Namespace, env: OutputEnvelope) -> None:
    env.parameters = [("file", args.file), ("k", args.k)]
    g = read_graph(args.file)
    core = graph.k_core(g, args.k)
    result = {"vertices": core.n, "edges": core.m}
    if args.bound:
        r, s = args.bound
        env.parameters.append(("bound", f"{r},{s}"))
        if s - 1 != args.k:
            raise UsageError(f"--bound {r},{s} prunes to the {s - 1}-core, not the {args.k}-core")
        result["bound_whole_graph"] = binomial.kk_bound(graph.count_cliques(g, r), r, s)
        result["bound_core"] = graph.core_bound(g, r, s)
    if args.out:
        write_graph(core, args.out)
        result["written"] = args.out
    else:
        result["graph"] = format_edge_list(core)
    env.result = result


FAMILIES: Dict[str, Tuple[str, Callable[[List[str]], Tuple[graph.Graph, List[int]]]]] = {}


def _family(name: str, usage: str):
    def register(builder):
        FAMILIES[name] = (usage, builder)
        return builder
    return register


@_family("complete", "complete N")
def _build_complete(params):
    (n,) = _need(params, 1, "complete N")
    return graph.complete_graph(n), []


@_family("apex", "apex N A1,A2,...")
def _build_apex(params):
    if len(params) not in (1, 2):
        raise UsageError("expected: apex N A1,A2,...")
    (n,) = _need(params[:1], 1, "apex N A1,A2,...")
    attachments = parse_ints(params[1]) if len(params) == 2 else []
    return graph.apex_construction(n, attachments), list(range(n + 1, n + len(attachments) + 1))


@_family("star", "star N P")
def _build_star(params):
    n, p = _need(params, 2, "star N P")
    return graph.complete_minus_star(n, p), [n]


@_family("turan", "turan N K")
def _build_turan(params):
    n, k = _need(params, 2, "turan N K")
    return graph.turan_graph(n, k), []


@_family("two-edges", "two-edges N")
def _build_two_edges(params):
    (n,) = _need(params, 1, "two-edges N")
    return graph.complete_minus_two_disjoint_edges(n), [1, 2, 3, 4]


@_family("path", "path N")
def _build_path(params):
    (n,) = _need(params, 1, "path N")
    return graph.path_graph(n), []


def cmd_construct(args: argparse.Namespace, env: OutputEnvelope) -> None:
    env.parameters = [("family", args.family), ("params", " ".join(args.params))]
    usage, builder = FAMILIES[args.family]
    g, highlight = builder(args.params)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(to_dot(g, name=args.family.replace("-", "_"), highlight=highlight))
    if args.out:
        write_graph(g, args.out)
        env.result = {"written": args.out, "vertices": g.n, "edges": g.m}
    else:
        env.result = format_edge_list(g)


def cmd_table(args: argparse.Namespace, env: OutputEnvelope) -> None:
    env.parameters = [("n_min", args.n_min), ("n_max", args.n_max), ("pair", "%d,%d" % args.pair)]
    if args.pair == (3, 5):
        rows = extremal.table_section3(args.n_min, args.n_max)
    else:
        rows = extremal.gap_table(args.pair, args.n_min, args.n_max)
    env.result = extremal.rows_to_frame(rows, args.pair)


def _run_range(env: OutputEnvelope, check: Callable[[int], extremal.VerificationReport], ns: range) -> None:
    reports = [check(n) for n in ns]
    env.passed = all(report.passed for report in reports)
    if len(reports) == 1:
        env.result = reports[0].to_dict()
        return
    env.result = [{"n": rep.parameters["n"], "passed": rep.passed, "message": rep.message} for rep in reports]


def cmd_verify(args: argparse.Namespace, env: OutputEnvelope) -> None:
    env.parameters = [("which", args.which), ("params", " ".join(args.params))]
    which, params = args.which, args.params
    if which in ("t5", "t6", "canon-x"):
        if len(params) > 1:
            raise UsageError(f"expected: verify {which} [N or A..B]")
        check = {"t5": extremal.verify_identity_t5, "t6": extremal.verify_identity_t6,
                 "canon-x": extremal.verify_canonical_x}[which]
        ns = parse_range(params[0]) if params else range(7, get_settings().identity_n_max + 1)
        _run_range(env, check, ns)
        return
    if which == "gap":
        if len(params) != 3:
            raise UsageError("expected: verify gap R,S N_MIN N_MAX")
        try:
            pair = parse_pair(params[0])
        except argparse.ArgumentTypeError as err:
            raise UsageError(str(err)) from None
        n_min, n_max = _need(params[1:], 2, "verify gap R,S N_MIN N_MAX")
        report = extremal.gap_report(pair, n_min, n_max)
        env.passed = report.passed
        env.result = {"pair": "%d,%d" % pair, "passed": report.passed, "deviations": report.deviations,
                      "rows": len(report.rows)}
        return
    if which == "t2":
        report = extremal.verify_bollobas(*_need(params, 4, "verify t2 N M R S"))
    elif which == "t3":
        report = extremal.verify_theorem3(*_need(params, 5, "verify t3 N M W R S"))
    elif which == "t4":
        report = extremal.verify_theorem4(*_need(params, 3, "verify t4 N P S"))
    elif which == "plateau":
        if len(params) == 2:
            u, s = _need(params, 2, "verify plateau U S")
            r, t, _ = extremal.corollary1_params(u, s)
            n, m = extremal.minimal_admissible(u, s)
            report = extremal.plateau_check(n, m, t, r, s)
        else:
            report = extremal.plateau_check(*_need(params, 5, "verify plateau N M T R S | U S"))
    else:
        raise UsageError(f"unknown check {which!r}")
    env.passed = report.passed
    env.result = report.to_dict()


def cmd_search(args: argparse.Namespace, env: OutputEnvelope) -> None:
    env.parameters = [("mode", args.mode), ("v_max", args.v_max), ("r", args.r), ("s", args.s), ("x", args.x)]
    if args.mode == "exhaustive":
        record = search.exhaustive_extremal(args.v_max, args.r, args.s, args.x,
                                            workers=args.workers, checkpoint=args.checkpoint)
    else:
        if args.seed is None:
            raise UsageError("heuristic search needs an explicit --seed")
        env.parameters += [("seed", args.seed), ("iters", args.iters)]
        record = search.heuristic_extremal(args.v_max, args.r, args.s, args.x,
                                           seed=args.seed, iterations=args.iters)
    env.result = record.to_dict()


def _v_max(args: argparse.Namespace) -> int:
    return args.v_max if args.v_max is not None else get_settings().default_v_max


def cmd_scan(args: argparse.Namespace, env: OutputEnvelope) -> None:
    v_max = _v_max(args)
    env.parameters = [("r", args.r), ("s", args.s), ("x_max", args.x_max), ("v_max", v_max)]
    rows = search.tightness_scan(args.r, args.s, args.x_max, v_max, workers=args.workers)
    env.result = search.tightness_frame(rows)


def cmd_conjecture(args: argparse.Namespace, env: OutputEnvelope) -> None:
    v_max = _v_max(args)
    env.parameters = [("n", args.n), ("v_max", v_max)]
    report = search.conjecture_check(args.n, v_max, workers=args.workers)
    env.passed = report.status != search.analysis.REFUTED
    env.result = report.to_dict()


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kkclique",
        description="Kruskal-Katona bounds, extremal constructions and clique counts.")
    parser.add_argument("--format", choices=FORMATS, default="plain", help="output format")
    parser.add_argument("--log-level", type=str.upper, default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], help="log level (stderr)")
    parser.add_argument("--workers", type=int, default=None, help="worker processes for exhaustive search")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", help="r-canonical representation of x")
    p.add_argument("x", type=int)
    p.add_argument("r", type=int)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("bound", help="Kruskal-Katona bound [x]^r_s")
    p.add_argument("x", type=int)
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("count", help="number of K_r subgraphs of a graph file")
    p.add_argument("file")
    p.add_argument("r", type=int)
    p.add_argument("--prune", action="store_true", help="count on the (r-1)-core")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("profile", help="k_1 .. k_rmax of a graph file")
    p.add_argument("file")
    p.add_argument("r_max", type=int)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("core", help="k-core of a graph file")
    p.add_argument("file")
    p.add_argument("k", type=int)
    p.add_argument("--out", help="write the core to this file")
    p.add_argument("--bound", type=parse_pair, metavar="R,S",
                   help="compare the bound from the whole graph with the one from its core")
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("construct", help="build a graph family",
                       epilog="families: " + "; ".join(usage for usage, _ in FAMILIES.values()))
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*")
    p.add_argument("--out", help="write the edge list here instead of stdout")
    p.add_argument("--dot", help="also write a DOT drawing here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("table", help="gap table for T(n, n-2)")
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int)
    p.add_argument("--pair", type=parse_pair, default=(3, 5), metavar="3,5|3,4")
    p.add_argument("--csv", action="store_true", help="same as --format csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check a theorem instance or identity range")
    p.add_argument("which", choices=["t2", "t3", "t4", "t5", "t6", "canon-x", "plateau", "gap"])
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="k_s(k_r <= x) by exhaustive or heuristic search")
    p.add_argument("mode", choices=["exhaustive", "heuristic"])
    p.add_argument("v_max", type=int)
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)
    p.add_argument("x", type=int)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--iters", type=int, default=None)
    p.add_argument("--checkpoint", default=None, help="JSON file for resumable exhaustive runs")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("scan", help="tightness of the bound for every x <= x_max")
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)
    p.add_argument("x_max", type=int)
    p.add_argument("v_max", type=int, nargs="?", default=None, help="vertex cap (default KKCLIQUE_V_MAX)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("conjecture", help="exhaustive evidence on k_4(k_3 <= C(n,3) - 2(n-2))")
    p.add_argument("n", type=int)
    p.add_argument("v_max", type=int, nargs="?", default=None, help="vertex cap (default KKCLIQUE_V_MAX)")
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = get_settings().with_overrides(log_level=args.log_level, workers=args.workers)
        configure_logging(settings.log_level)
        args.workers = settings.workers
        fmt = "csv" if getattr(args, "csv", False) else args.format
        env = OutputEnvelope(command=args.command, format=fmt)
        args.func(args, env)
    except (KKCliqueError, OSError) as err:
        print(f"kkclique {args.command}: {err}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(env.render())
    return EXIT_OK if env.passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
