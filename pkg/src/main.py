"""Command-line entry point: ``python -m src.main <subcommand> ...``.

Exit codes: 0 success (and no FAILS), 1 at least one FAILS verdict,
2 usage, parse, budget or I/O errors.
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

import pandas as pd
from loguru import logger

from src import __version__
from src.claims.model import GraphSubject
from src.claims.registry import evaluate, get_claim, resolve_claims
from src.enumeration.graph_class import GraphClass, class_members
from src.generators.graph_families import (
    REFERENCE_VALUES,
    StaircaseParams,
    generate_caterpillar,
    generate_complete_bipartite,
    generate_cycle,
    generate_path,
    generate_staircase_bipartite,
    generate_star,
    staircase_parts,
)
from src.generators.report_generator import (
    EXTREMAL_COLUMNS,
    SUMMARY_COLUMNS,
    CsvTableGenerator,
    JsonReportGenerator,
    rows_to_csv,
)
from src.graph.graph import Graph
from src.invariants.indices import albertson, compute_bundle, sigma
from src.parsers.edgelist_parser import EdgeListParser
from src.parsers.graph6_parser import Graph6Parser, write_graph6
from src.utils.config_manager import ConfigManager, VerificationSettings
from src.utils.errors import IrrlabError
from src.utils.helpers import canonical_json, get_file_type, number_to_text, parse_int_range, parse_int_tuple, sniff_format
from src.verifier.extremal import INDEX_FUNCTIONS, extremal_scan
from src.verifier.runner import run_suite

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_ERROR = 2

FAMILIES = (
    "path", "star", "cycle", "complete-bipartite", "caterpillar", "staircase",
    "random-tree", "random-bipartite", "gnp",
)
EXAMPLE_CLAIMS = ("C20", "C22", "C23", "C24", "C25", "C26")


class UsageError(IrrlabError, ValueError):
    """Raised for flag combinations argparse cannot reject by itself."""


def _add_corpus_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("corpus")
    group.add_argument("--trees", action="append", default=[], metavar="A..B",
                       help="all trees of each order in the range")
    group.add_argument("--trees-maxdeg", action="append", default=[], metavar="N,DELTA",
                       help="trees of order N with maximum degree DELTA")
    group.add_argument("--bipartite", action="append", default=[], metavar="N1,N2[,connected]",
                       help="bipartite graphs with the given parts")
    group.add_argument("--connected", action="append", default=[], metavar="A..B",
                       help="connected graphs of each order in the range")
    group.add_argument("--random", action="append", default=[], metavar="KIND,COUNT,SEED",
                       help="seeded random corpus: tree-N, bipartite-N1xN2-P or gnp-N-P")


def _add_settings_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--mode", choices=("class", "per_graph"), default=None,
                        help="reading of class-minimum bounds")
    parser.add_argument("--sigma2", choices=("standard", "literal"), default=None,
                        help="sigma2 degree-sum convention")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="irrlab", description="Degree-irregularity indices and claim verification")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="loguru level for the error stream")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="compute every index of each input graph")
    compute.add_argument("input", help="graph6 or edge-list file, '-' for standard input")
    compute.add_argument("--input-format", choices=("auto", "graph6", "edgelist"), default="auto")
    compute.add_argument("--format", choices=("json", "csv"), default="json")
    compute.add_argument("--out", default=None)
    _add_settings_flags(compute)

    gen = sub.add_parser("gen", help="generate graphs of a family")
    gen.add_argument("family", choices=FAMILIES)
    gen.add_argument("sizes", nargs="+", type=int, help="family parameters (orders, parts or spine degrees)")
    gen.add_argument("--p", type=float, default=0.5, help="edge probability of random families")
    gen.add_argument("--count", type=int, default=1, help="graphs to draw from random families")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    gen.add_argument("--out", default=None)

    enum = sub.add_parser("enum", help="list every graph of the corpus classes")
    _add_corpus_flags(enum)
    enum.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    enum.add_argument("--count", action="store_true", help="print class sizes only")
    enum.add_argument("--out", default=None)

    verify = sub.add_parser("verify", help="evaluate claims over a corpus")
    _add_corpus_flags(verify)
    verify.add_argument("--claims", default="all", help="comma-separated claim ids or 'all'")
    verify.add_argument("--list", action="store_true", help="print the claim catalogue and exit")
    verify.add_argument("--out", default=None, help="JSON report path; a CSV summary is written next to it")
    verify.add_argument("--format", choices=("json", "csv"), default="json", help="standard output format")
    verify.add_argument("--workers", type=int, default=None)
    verify.add_argument("--shrink", action="store_true", help="shrink the first failure per claim and class")
    _add_settings_flags(verify)

    extremal = sub.add_parser("extremal", help="exact index extrema over corpus classes")
    _add_corpus_flags(extremal)
    extremal.add_argument("--index", choices=tuple(INDEX_FUNCTIONS) + ("all",), default="irr")
    extremal.add_argument("--format", choices=("csv", "json"), default="csv")
    extremal.add_argument("--out", default=None)

    example = sub.add_parser("example", help="staircase bipartite construction and its published values")
    example.add_argument("n", type=int)
    example.add_argument("m", type=int)
    example.add_argument("--format", choices=("json", "csv"), default="json")
    _add_settings_flags(example)
    return parser


def corpus_from_args(args: argparse.Namespace) -> List[GraphClass]:
    """Graph classes named by the corpus flags, in flag order within each kind."""
    try:
        corpus = [GraphClass.trees(n) for text in args.trees for n in parse_int_range(text)]
        corpus += [GraphClass.trees_maxdeg(*parse_int_tuple(text, 2)) for text in args.trees_maxdeg]
        for text in args.bipartite:
            fields = [f.strip() for f in text.split(',')]
            if len(fields) not in (2, 3) or (len(fields) == 3 and fields[2] != "connected"):
                raise UsageError(f"--bipartite expects N1,N2[,connected], got {text!r}")
            n1, n2 = parse_int_tuple(",".join(fields[:2]), 2)
            corpus.append(GraphClass.bipartite(n1, n2, len(fields) == 3))
        corpus += [GraphClass.connected(n) for text in args.connected for n in parse_int_range(text)]
        for text in args.random:
            fields = [f.strip() for f in text.split(',')]
            if len(fields) != 3:
                raise UsageError(f"--random expects KIND,COUNT,SEED, got {text!r}")
            corpus.append(GraphClass.random(fields[0], int(fields[1]), int(fields[2])))
    except IrrlabError:
        raise
    except ValueError as e:
        raise UsageError(f"Invalid corpus flag: {e}") from e
    return corpus


def _settings(args: argparse.Namespace, config: ConfigManager) -> VerificationSettings:
    return VerificationSettings.from_config(
        config,
        extremum_reading=getattr(args, "mode", None),
        sigma2_mode=getattr(args, "sigma2", None),
    )


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {path}")


def _read_graphs(source: str, input_format: str) -> List[Graph]:
    parsers = {"graph6": Graph6Parser, "edgelist": EdgeListParser}
    if input_format == "auto" and source != "-":
        input_format = get_file_type(source)
    if source != "-" and input_format in parsers:
        return parsers[input_format]().parse(source)
    text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="ascii")
    if input_format not in parsers:
        input_format = sniff_format(text)
    return parsers[input_format]().parse_text(text)


def cmd_compute(args: argparse.Namespace, config: ConfigManager) -> int:
    settings = _settings(args, config)
    graphs = _read_graphs(args.input, args.input_format)
    bundles = [compute_bundle(g, settings.sigma2_mode) for g in graphs]
    rows = [{**bundle.to_dict(), "graph6": write_graph6(g)} for g, bundle in zip(graphs, bundles)]
    if args.format == "json":
        text = "".join(canonical_json(row, indent=None) + "\n" for row in rows)
    else:
        flat = [{**row, "deg_ave": number_to_text(bundle.deg_ave)} for row, bundle in zip(rows, bundles)]
        text = rows_to_csv(flat, ["graph6", "n", "m", "Delta", "delta", "irr", "sigma", "irr_t",
                                  "m1", "m2", "deg_ave", "sigma2"])
    _emit(text, args.out)
    logger.info(f"Computed indices of {len(graphs)} graphs")
    return EXIT_OK


def _generate(args: argparse.Namespace) -> List[Graph]:
    family, sizes = args.family, args.sizes

    def expect(count: int) -> None:
        if len(sizes) != count:
            raise UsageError(f"{family} takes {count} size parameter(s), got {len(sizes)}")

    if family == "caterpillar":
        return [generate_caterpillar(sizes)]
    if family == "complete-bipartite":
        expect(2)
        return [generate_complete_bipartite(*sizes)]
    if family == "staircase":
        expect(2)
        return [generate_staircase_bipartite(StaircaseParams(*sizes))]
    if family == "random-bipartite":
        expect(2)
        kind = f"bipartite-{sizes[0]}x{sizes[1]}-{args.p}"
    elif family in ("random-tree", "gnp"):
        expect(1)
        kind = f"tree-{sizes[0]}" if family == "random-tree" else f"gnp-{sizes[0]}-{args.p}"
    else:
        expect(1)
        constructors = {"path": generate_path, "star": generate_star, "cycle": generate_cycle}
        return [constructors[family](sizes[0])]
    return list(class_members(GraphClass.random(kind, args.count, args.seed)))


def _format_graphs(graphs: List[Graph], fmt: str) -> str:
    writer = Graph6Parser() if fmt == "graph6" else EdgeListParser()
    return writer.format_graphs(graphs)


def cmd_gen(args: argparse.Namespace, config: ConfigManager) -> int:
    graphs = _generate(args)
    _emit(_format_graphs(graphs, args.format), args.out)
    return EXIT_OK


def _require_corpus(corpus: List[GraphClass]) -> None:
    if not corpus:
        raise UsageError("No corpus given: use --trees, --trees-maxdeg, --bipartite, --connected or --random")


def cmd_enum(args: argparse.Namespace, config: ConfigManager) -> int:
    settings = _settings(args, config)
    corpus = corpus_from_args(args)
    _require_corpus(corpus)
    if args.count:
        rows = [{"class": gc.label, "size": len(class_members(gc, settings.budgets))} for gc in corpus]
        _emit(rows_to_csv(rows, ["class", "size"]), args.out)
        return EXIT_OK
    graphs = [g for gc in corpus for g in class_members(gc, settings.budgets)]
    _emit(_format_graphs(graphs, args.format), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: ConfigManager, argv: List[str]) -> int:
    claim_filter = [c for c in args.claims.split(',') if c.strip()]
    claims = resolve_claims(claim_filter)
    if args.list:
        _emit(canonical_json([claim.to_dict() for claim in claims]) + "\n", args.out)
        return EXIT_OK
    settings = _settings(args, config)
    corpus = corpus_from_args(args)
    _require_corpus(corpus)
    workers = args.workers if args.workers is not None else config.workers()
    report = run_suite(
        corpus,
        [claim.id for claim in claims],
        settings,
        workers=workers,
        chunk_size=int(config.get_or(16, 'runtime', 'chunk_size')),
        shrink=args.shrink,
        version=str(config.get_or(__version__, 'report', 'version')),
    )
    report.run["invocation"] = list(argv)
    if config.get_or(False, 'report', 'include_timestamp'):
        report.run["timestamp"] = pd.Timestamp.now().strftime('%Y-%m-%d %H:%M:%S')
    data = report.to_dict()
    if args.out is not None:
        if not JsonReportGenerator().create_report(data, args.out):
            raise OSError(f"Could not write report {args.out}")
        summary_path = str(Path(args.out).with_suffix(".csv"))
        if not CsvTableGenerator(SUMMARY_COLUMNS).create_report({"rows": report.class_summaries()}, summary_path):
            raise OSError(f"Could not write summary {summary_path}")
    elif args.format == "json":
        sys.stdout.write(JsonReportGenerator().render(data))
    else:
        sys.stdout.write(rows_to_csv(report.class_summaries(), SUMMARY_COLUMNS))
    if report.has_failures:
        failed = sorted({o.claim_id for o in report.failures()}, key=lambda cid: int(cid[1:]))
        logger.warning(f"FAILS verdicts for {', '.join(failed)}")
        return EXIT_FAILS
    return EXIT_OK


def cmd_extremal(args: argparse.Namespace, config: ConfigManager) -> int:
    settings = _settings(args, config)
    corpus = corpus_from_args(args)
    _require_corpus(corpus)
    indices = list(INDEX_FUNCTIONS) if args.index == "all" else [args.index]
    results = [extremal_scan(gc, index, settings) for gc in corpus for index in indices]
    if args.format == "json":
        text = canonical_json([r.to_dict() for r in results]) + "\n"
    else:
        text = rows_to_csv([r.to_row() for r in results], EXTREMAL_COLUMNS)
    _emit(text, args.out)
    return EXIT_OK


def cmd_example(args: argparse.Namespace, config: ConfigManager) -> int:
    settings = _settings(args, config)
    params = StaircaseParams(args.n, args.m)
    g = generate_staircase_bipartite(params)
    computed = {"irr": albertson(g), "sigma": sigma(g)}
    comparison = []
    published = REFERENCE_VALUES.get((params.n, params.m))
    if published is not None:
        for index in ("irr", "sigma"):
            verdict = "MATCH" if computed[index] == published[index] else "MISMATCH"
            comparison.append({"index": index, "computed": computed[index],
                               "published": published[index], "verdict": verdict})
            if verdict == "MISMATCH":
                logger.warning(f"({params.n}, {params.m}) {index}: computed {computed[index]}, "
                               f"published {published[index]}")
    subject = GraphSubject(g, f"STAIRCASE({params.n},{params.m})", staircase_parts(params))
    outcomes = [evaluate(get_claim(cid), subject, None, settings) for cid in EXAMPLE_CLAIMS]
    if args.format == "json":
        data = {
            "params": {"n": params.n, "m": params.m},
            "graph6": write_graph6(g),
            "vertices": g.n,
            "edges": g.m,
            "connected": g.is_connected(),
            **computed,
            "comparison": comparison,
            "claims": [o.to_dict() for o in outcomes],
        }
        sys.stdout.write(canonical_json(data) + "\n")
    else:
        rows = [{"index": index, "computed": value, "published": published[index] if published else None,
                 "verdict": next((c["verdict"] for c in comparison if c["index"] == index), None)}
                for index, value in computed.items()]
        sys.stdout.write(rows_to_csv(rows, ["index", "computed", "published", "verdict"]))
    return EXIT_OK


COMMANDS = {
    "compute": cmd_compute,
    "gen": cmd_gen,
    "enum": cmd_enum,
    "extremal": cmd_extremal,
    "example": cmd_example,
}


def _configure_logging(level: str) -> None:
    logger.remove()
    logger.add(sys.stderr, level=level.upper())


def main(args=None) -> int:
    """Main function.

    Args:
        args: Command line arguments (defaults to ``sys.argv[1:]``)

    Returns:
        Process exit code
    """
    if args is None:
        args = sys.argv[1:]
    args = list(args)
    parser = build_parser()
    try:
        namespace = parser.parse_args(args)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_ERROR

    try:
        config = ConfigManager()
    except Exception as e:
        logger.error(f"Error loading configuration: {e}")
        return EXIT_ERROR
    try:
        _configure_logging(namespace.log_level or str(config.get_or("INFO", 'logging', 'level')))
    except ValueError as e:
        logger.error(f"Invalid log level: {e}")
        return EXIT_ERROR

    try:
        if namespace.command == "verify":
            return cmd_verify(namespace, config, args)
        return COMMANDS[namespace.command](namespace, config)
    except (IrrlabError, ValueError) as e:
        logger.error(f"{namespace.command}: {e}")
        return EXIT_ERROR
    except OSError as e:
        logger.error(f"{namespace.command}: I/O error: {e}")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
