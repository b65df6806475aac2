"""Command-line interface.

    paracomp complete --corpus F --lemmas F --out F [--config F] [--jobs N] [--seed N]
    paracomp evaluate --pred F --gold F [--corpus F]
    paracomp stats    --corpus F --lemmas F --gold F

Exit status: 0 success, 2 bad input or usage, 1 internal error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from paracomp import formats
from paracomp.analysis import bmacc_by_split, split_seen
from paracomp.bmacc import MATCH_ALL, MATCH_ANY, bmacc, report_tsv
from paracomp.config import Config, parse_assignments
from paracomp.corpus import dataset_stats, read_corpus, read_lemmas
from paracomp.errors import InputError
from paracomp.inflector import predictions_tsv
from paracomp.pipeline import complete
from paracomp.retrieval import candidates_tsv, trees_tsv
from paracomp.slots import groups_tsv

log = logging.getLogger("paracomp")


def cmd_complete(args: argparse.Namespace) -> int:
    cfg = Config.from_file(args.config) if args.config else Config()
    overrides = parse_assignments(args.set or [])
    if args.seed is not None:
        overrides["seed"] = str(args.seed)
    cfg = cfg.with_overrides(overrides)
    corpus = read_corpus(args.corpus)
    lemmas = read_lemmas(args.lemmas)
    if not lemmas:
        raise InputError(f"{args.lemmas}: no lemmas")
    result = complete(lemmas, corpus, cfg, jobs=args.jobs)
    formats.write_text(args.out, predictions_tsv(result.paradigms))
    if args.dump_trees:
        formats.write_text(args.dump_trees, trees_tsv(result.retrieval.trees))
    if args.dump_candidates:
        formats.write_text(args.dump_candidates, candidates_tsv(result.retrieval.candidates))
    if args.dump_slots:
        formats.write_text(args.dump_slots, groups_tsv(result.groups))
    print(
        f"wrote {len(lemmas) * len(result.slot_ids)} rows "
        f"({len(lemmas)} lemmas x {len(result.slot_ids)} slots) to {args.out}",
        file=sys.stderr,
    )
    return 0


def cmd_evaluate(args: argparse.Namespace) -> int:
    pred = formats.read_table(args.pred)
    gold = formats.read_table(args.gold)
    report = bmacc(pred, gold, args.match)
    print(report.summary())
    rows = report.tsv_rows()
    if args.corpus:
        corpus = read_corpus(args.corpus)
        split = split_seen(sorted(gold.lemmas()), corpus)
        for name, sub in zip(("seen", "unseen"), bmacc_by_split(pred, gold, split, args.match)):
            n = len(getattr(split, name))
            if sub is None:
                print(f"{name} lemmas (0): n/a")
                rows.append((f"{name}_score", "n/a"))
            else:
                print(f"{name} lemmas ({n}): {sub.summary()}")
                rows += sub.tsv_rows(f"{name}_")
    if args.report:
        formats.write_text(args.report, report_tsv(rows))
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    corpus = read_corpus(args.corpus)
    lemmas = read_lemmas(args.lemmas)
    gold_rows = formats.read_rows(args.gold)
    sys.stdout.write(dataset_stats(corpus, lemmas, gold_rows).to_tsv())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="paracomp", description="Unsupervised morphological paradigm completion.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log progress to stderr (repeat for debug)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complete", help="generate paradigms for a lemma list from raw text")
    p.add_argument("--corpus", required=True)
    p.add_argument("--lemmas", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--config", help="key = value config file")
    p.add_argument("--set", action="append", metavar="KEY=VALUE", help="override one config value")
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the retrieval scan")
    p.add_argument("--dump-trees", metavar="F", help="write kept edit trees as TSV")
    p.add_argument("--dump-candidates", metavar="F", help="write retrieved candidate forms as TSV")
    p.add_argument("--dump-slots", metavar="F", help="write slot groups as TSV")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("evaluate", help="score predictions with BMAcc")
    p.add_argument("--pred", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--corpus", help="also report seen/unseen lemma breakdown")
    p.add_argument("--match", choices=(MATCH_ANY, MATCH_ALL), default=MATCH_ANY)
    p.add_argument("--report", metavar="F", help="write machine-readable TSV report")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("stats", help="print dataset statistics")
    p.add_argument("--corpus", required=True)
    p.add_argument("--lemmas", required=True)
    p.add_argument("--gold", required=True)
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        level=(logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)],
        format="%(levelname)s %(name)s: %(message)s",
    )
    if getattr(args, "jobs", 1) < 1:
        print("paracomp: --jobs must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"paracomp: error: {exc}", file=sys.stderr)
        return 2
    except Exception:
        log.exception("internal error")
        return 1


if __name__ == "__main__":
    sys.exit(main())
