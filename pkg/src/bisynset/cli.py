"""Command line entry point: ``bisynset {extract,flatten,evaluate,experiment,stats}``.

Results go to standard output (or ``--out``); progress and summaries go to
standard error.  Exit status is 1 on input/output or parse errors and 2 on
invalid options; low scores never make a command fail.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import __version__
from .errors import BisynsetError, EmptyInput, InvalidBound
from .evaluation import (
    evaluate,
    gold_sides,
    render_table,
    reports_to_json,
    row_label,
    run_experiment,
    select_gold,
)
from .graph import check_bound
from .lexicon import Lang, Languages, flatten_synsets, load_gold_synsets, load_pairs, serialize_pairs
from .synset import ConsolidationPolicy, extract_synsets, format_synsets, load_synsets

logger = logging.getLogger("bisynset")


def _bound(text):
    try:
        return check_bound(int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    except InvalidBound as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _source(path):
    return sys.stdin.buffer if path == "-" else path


def _write(text, path=None):
    data = text.encode("utf-8")
    if path is None or path == "-":
        out = getattr(sys.stdout, "buffer", None)
        if out is None:
            sys.stdout.write(text)
        else:
            sys.stdout.flush()
            out.write(data)
            out.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _languages(args):
    return Languages(args.l1, args.l2)


def _policy(args):
    return ConsolidationPolicy.parse(args.policy, args.theta)


def _dumps(args, extraction):
    languages = _languages(args)
    if getattr(args, "dump_graph", None):
        _write(extraction.graph.dump_edges(languages), args.dump_graph)
    if getattr(args, "dump_cycles", None):
        graph = extraction.graph
        _write("".join(graph.format_cycle(c, languages) + "\n" for c in extraction.cycles), args.dump_cycles)


def _summary(extraction):
    s = extraction.summary()
    print(
        "pairs={pairs} nodes={nodes} cycles={cycles} candidates={candidates} "
        "trivial={trivial} final={final}".format(**s),
        file=sys.stderr,
    )


def _gold(args):
    gold = load_gold_synsets(_source(args.gold))
    if not gold:
        raise EmptyInput("gold file")
    return gold


def cmd_extract(args):
    pairs, report = load_pairs(_source(args.pairs))
    if not pairs:
        raise EmptyInput("pairs file")
    if report.duplicates or report.skipped:
        logger.info("skipped %d line(s), merged %d duplicate(s)", report.skipped, report.duplicates)
    extraction = extract_synsets(
        pairs,
        k_max=args.k,
        policy=_policy(args),
        consolidate_candidates=args.consolidate,
        trivial_pairs=args.trivial_pairs,
        threads=args.threads,
        grouping=args.grouping,
    )
    _dumps(args, extraction)
    _write(format_synsets(extraction.synsets, args.format), args.out)
    _summary(extraction)
    return 0


def cmd_flatten(args):
    bilingual, monolingual = select_gold(_gold(args), args.drop_singleton_gold)
    if monolingual:
        logger.warning("skipped %d gold synset(s) with an empty side", len(monolingual))
    if not bilingual:
        raise EmptyInput("bilingual gold synsets")
    pairs = flatten_synsets(bilingual)
    _write(serialize_pairs(pairs), args.out)
    print(f"synsets={len(bilingual)} pairs={len(pairs)}", file=sys.stderr)
    return 0


def _print_reports(args, reports_by_row, result=None):
    languages = _languages(args)
    text = []
    for side in (Lang.L1, Lang.L2):
        rows = [(label, reports[side]) for label, reports in reports_by_row]
        text.append(render_table(rows, title=f"{languages.label(side)} synsets"))
    _write("\n".join(text), args.out)
    if args.json:
        if result is not None:
            _write(reports_to_json(result, languages), args.json)
        else:
            import json

            obj = {languages.label(s): r.to_dict() for s, r in reports_by_row[0][1].items()}
            _write(json.dumps(obj, ensure_ascii=False, indent=2, sort_keys=True) + "\n", args.json)


def cmd_evaluate(args):
    bilingual, monolingual = select_gold(_gold(args), args.drop_singleton_gold)
    sides = gold_sides(bilingual, monolingual if args.keep_monolingual_gold else ())
    extracted = load_synsets(_source(args.synsets))
    config = {"synsets": args.synsets, "gold": args.gold}
    reports = evaluate(extracted, sides, _languages(args), config)
    _print_reports(args, [("extracted", reports)])
    return 0


def cmd_experiment(args):
    result = run_experiment(
        _gold(args),
        k_max=args.k,
        policy=_policy(args),
        consolidate_flag=args.consolidate,
        trivial_pairs_flag=args.trivial_pairs,
        threads=args.threads,
        languages=_languages(args),
        keep_monolingual_gold=args.keep_monolingual_gold,
        drop_singleton_gold=args.drop_singleton_gold,
        grouping=args.grouping,
    )
    rows = [(row_label(result.reports[Lang.L1].config), result.reports)]
    if result.cycles_only is not None:
        rows.append((row_label(result.cycles_only[Lang.L1].config), result.cycles_only))
    _dumps(args, result.extraction)
    if args.synsets_out:
        _write(format_synsets(result.extraction.synsets, args.format), args.synsets_out)
    _print_reports(args, rows, result)
    _summary(result.extraction)
    return 0


def cmd_stats(args):
    if args.pairs:
        pairs, _ = load_pairs(_source(args.pairs))
    else:
        bilingual, _ = select_gold(_gold(args))
        pairs = flatten_synsets(bilingual)
    if not pairs:
        raise EmptyInput("pair set")
    extraction = extract_synsets(pairs, k_max=args.k, consolidate_candidates=False, threads=args.threads)
    _dumps(args, extraction)
    graph = extraction.graph
    by_length = {}
    for c in extraction.cycles:
        by_length[len(c)] = by_length.get(len(c), 0) + 1
    l1_nodes = sum(1 for w in graph.nodes if w.lang is Lang.L1)
    lines = [
        f"pairs\t{graph.n_edges}",
        f"nodes\t{len(graph.nodes)}",
        f"nodes_{args.l1}\t{l1_nodes}",
        f"nodes_{args.l2}\t{len(graph.nodes) - l1_nodes}",
        f"cycles\t{len(extraction.cycles)}",
    ]
    lines += [f"cycles_len{n}\t{by_length[n]}" for n in sorted(by_length)]
    lines.append(f"candidates\t{len(extraction.candidates)}")
    _write("\n".join(lines) + "\n", args.out)
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--l1", default="l1", help="label of the first language (default: l1)")
    common.add_argument("--l2", default="l2", help="label of the second language (default: l2)")
    common.add_argument("--out", default=None, help="output file (default: standard output)")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("-v", "--verbose", action="store_true")

    algo = argparse.ArgumentParser(add_help=False)
    algo.add_argument("--k", type=_bound, default=6, help="maximum cycle length in nodes, even (default: 6)")
    algo.add_argument("--consolidate", action=argparse.BooleanOptionalAction, default=True)
    algo.add_argument(
        "--policy",
        default="shared-word-each-side",
        help="shared-word-each-side (default), shared-pair, or jaccard (with --theta)",
    )
    algo.add_argument("--theta", type=float, default=None, help="threshold for the jaccard policy")
    algo.add_argument("--grouping", choices=("star", "pair"), default="star", help="fallback grouping")
    algo.add_argument("--format", choices=("tsv", "jsonl"), default="tsv")
    algo.add_argument("--dump-graph", metavar="PATH", help="write the sorted edge list here")
    algo.add_argument("--dump-cycles", metavar="PATH", help="write the enumerated cycles here")

    gold_opts = argparse.ArgumentParser(add_help=False)
    gold_opts.add_argument("--keep-monolingual-gold", action="store_true")
    gold_opts.add_argument("--drop-singleton-gold", action="store_true")

    parser = argparse.ArgumentParser(prog="bisynset", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", parents=[common, algo], help="extract synsets from a pairs file")
    p.add_argument("--pairs", required=True)
    p.add_argument("--trivial-pairs", action=argparse.BooleanOptionalAction, default=False)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("flatten", parents=[common], help="turn gold synsets into translation pairs")
    p.add_argument("--gold", required=True)
    p.add_argument("--drop-singleton-gold", action="store_true")
    p.set_defaults(func=cmd_flatten)

    p = sub.add_parser("evaluate", parents=[common, gold_opts], help="score a synset file against gold")
    p.add_argument("--synsets", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--json", metavar="PATH", help="also write full-precision JSON here")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser(
        "experiment", parents=[common, algo, gold_opts], help="rebuild gold synsets from flattened pairs"
    )
    p.add_argument("--gold", required=True)
    p.add_argument("--trivial-pairs", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--json", metavar="PATH", help="also write full-precision JSON here")
    p.add_argument("--synsets-out", metavar="PATH", help="write the extracted synsets here")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("stats", parents=[common], help="graph and cycle counts")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--pairs")
    src.add_argument("--gold")
    p.add_argument("--k", type=_bound, default=6)
    p.add_argument("--dump-graph", metavar="PATH")
    p.add_argument("--dump-cycles", metavar="PATH")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        if hasattr(args, "policy"):
            try:
                _policy(args)
                _languages(args)
            except (BisynsetError, ValueError) as exc:
                parser.error(str(exc))
        if args.threads < 1:
            parser.error("--threads must be at least 1")
        return args.func(args)
    except (BisynsetError, OSError) as exc:
        print(f"bisynset: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
