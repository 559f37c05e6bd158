"""Command-line pipeline: each stage persists its artifacts under the output
directory so later stages (and reruns) can pick them up independently."""

from __future__ import annotations

import argparse
import json
import shutil
import sys
from pathlib import Path

from . import artifacts as art
from . import data_path
from .corpus import ingest, reviews_to_jsonl, sentences_from_jsonl, sentences_to_jsonl, write_rejects
from .evaluate import evaluation_matrix, load_gold, load_overrides, match, precision, recall
from .kano import assign_all, assignments_from_json, assignments_to_json, load_assignments, load_votes
from .miner import (
    CategoriesResult,
    MiningConfigError,
    build_transactions,
    extract_aspects,
    generate_rules,
    load_categories,
    mine_frequent,
)
from .report import entity_table, overall_table, render
from .sentiment import load_lexicon, score_corpus_parallel
from .tagger import Tagger, extract_noun_phrases, load_tag_lexicon


class StageInputError(Exception):
    """A required intermediate is missing; message names the producing stage."""


def _require(path: Path, producer: str) -> Path:
    if not path.exists():
        raise StageInputError(f"missing {path} -- run the '{producer}' subcommand first")
    return path


def _fraction_arg(low_open: bool):
    def parse(text: str) -> float:
        value = float(text)
        lo_ok = value > 0 if low_open else value >= 0
        if not (lo_ok and value <= 1):
            interval = "(0, 1]" if low_open else "[0, 1]"
            raise argparse.ArgumentTypeError(f"must be in {interval}, got {text}")
        return value

    return parse


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aspectmine", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", type=Path, required=True, help="artifact directory")
        p.add_argument("--jobs", type=int, default=1, help="parallelism cap")
        p.add_argument("--seed", type=int, default=0, help="accepted for compatibility; the pipeline is deterministic")

    def add_mining_flags(p):
        p.add_argument("--min-support", type=_fraction_arg(True), default=0.0004)
        p.add_argument("--min-confidence", type=_fraction_arg(False), default=0.6)
        p.add_argument("--prune-threshold", type=_nonneg_int, default=3)
        p.add_argument("--max-gap", type=_nonneg_int, default=2)
        p.add_argument("--min-sentences", type=_nonneg_int, default=2)
        p.add_argument("--include-frequent-singletons", action="store_true")
        p.add_argument("--tag-lexicon", type=Path, default=None, help="word<TAB>tag overrides")
        p.add_argument("--categories", type=Path, default=None, help="manual grouping JSON")

    p_ingest = sub.add_parser("ingest", help="load reviews JSONL, segment and tokenize")
    p_ingest.add_argument("--reviews", type=Path, required=True)
    p_ingest.add_argument("--collapse-elongation", action="store_true")
    add_common(p_ingest)

    p_mine = sub.add_parser("mine", help="chunk noun phrases, mine rules, extract aspect terms")
    add_mining_flags(p_mine)
    add_common(p_mine)

    p_score = sub.add_parser("score", help="distance-weighted lexicon scores per term/category/entity")
    p_score.add_argument("--lexicon-dir", type=Path, default=None, help="dir with positive-words.txt / negative-words.txt")
    p_score.add_argument("--categories", type=Path, default=None)
    add_common(p_score)

    p_bucket = sub.add_parser("bucketize", help="majority-vote Kano assignment per category")
    p_bucket.add_argument("--votes", type=Path, default=None, help="survey votes CSV")
    p_bucket.add_argument("--assignments", type=Path, default=None, help="pre-made assignments JSON")
    p_bucket.add_argument("--categories", type=Path, default=None)
    add_common(p_bucket)

    p_report = sub.add_parser("report", help="render the bucketized tables")
    p_report.add_argument("--format", choices=["csv", "md", "html"], default="csv")
    add_common(p_report)

    p_eval = sub.add_parser("eval", help="recall/precision against a gold feature list")
    p_eval.add_argument("--gold", type=Path, required=True)
    p_eval.add_argument("--overrides", type=Path, default=None)
    add_common(p_eval)

    p_serve = sub.add_parser("serve", help="HTTP survey service")
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--survey-config", type=Path, default=None)
    p_serve.add_argument("--votes-log", type=Path, default=Path("votes.jsonl"))
    p_serve.add_argument("--report-dir", type=Path, default=None)
    p_serve.add_argument("--ui-dir", type=Path, default=None)

    p_pipe = sub.add_parser("pipeline", help="run ingest, mine, bucketize, score, report (and eval) in order")
    p_pipe.add_argument("--reviews", type=Path, required=True)
    p_pipe.add_argument("--collapse-elongation", action="store_true")
    add_mining_flags(p_pipe)
    p_pipe.add_argument("--lexicon-dir", type=Path, default=None)
    p_pipe.add_argument("--votes", type=Path, default=None)
    p_pipe.add_argument("--assignments", type=Path, default=None)
    p_pipe.add_argument("--gold", type=Path, default=None)
    p_pipe.add_argument("--overrides", type=Path, default=None)
    p_pipe.add_argument("--format", choices=["csv", "md", "html"], default="csv")
    add_common(p_pipe)

    return parser


class Run:
    """Collects inputs and artifacts for the manifest as stages execute."""

    def __init__(self, out: Path):
        self.out = out
        self.inputs: dict[str, Path] = {}
        self.artifacts: dict[str, Path] = {}

    def add_input(self, name: str, path: Path) -> Path:
        self.inputs[name] = path
        return path

    def artifact(self, relpath: str) -> Path:
        path = self.out / relpath
        path.parent.mkdir(parents=True, exist_ok=True)
        self.artifacts[relpath] = path
        return path


def run_ingest(args, run: Run) -> None:
    reviews_path = run.add_input("reviews", args.reviews)
    if not reviews_path.exists():
        raise StageInputError(f"reviews file not found: {reviews_path}")
    corpus = ingest(reviews_path)
    sentences = corpus.build_sentences(collapse_elongation=args.collapse_elongation)
    reviews_to_jsonl(corpus, run.artifact("ingest/reviews.jsonl"))
    sentences_to_jsonl(sentences, run.artifact("ingest/sentences.jsonl"))
    write_rejects(corpus.rejects, run.artifact("ingest/rejects.csv"))
    art.write_json(run.artifact("ingest/counts.json"), corpus.review_counts())
    print(
        f"ingested {sum(corpus.review_counts().values())} reviews across "
        f"{len(corpus.entities)} entities ({len(corpus.rejects)} rejects)"
    )


def run_mine(args, run: Run) -> None:
    sentences_path = _require(run.out / "ingest/sentences.jsonl", "ingest")
    sentences = sentences_from_jsonl(run.add_input("sentences", sentences_path))

    overrides = None
    if args.tag_lexicon is not None:
        overrides = load_tag_lexicon(run.add_input("tag_lexicon", args.tag_lexicon))
    tagger = Tagger(overrides)

    phrases = extract_noun_phrases(sentences, tagger)
    transactions = build_transactions(phrases)
    itemsets = mine_frequent(transactions, args.min_support)
    rules = generate_rules(itemsets, args.min_confidence)
    terms = extract_aspects(
        rules,
        sentences,
        frequent=itemsets,
        threshold=args.prune_threshold,
        max_gap=args.max_gap,
        min_sentences=args.min_sentences,
        include_frequent_singletons=args.include_frequent_singletons,
    )

    art.noun_phrases_to_jsonl(phrases, run.artifact("mine/noun_phrases.jsonl"))
    art.transactions_to_jsonl(transactions, run.artifact("mine/transactions.jsonl"))
    art.itemsets_to_jsonl(itemsets, run.artifact("mine/itemsets.jsonl"))
    art.rules_to_jsonl(rules, run.artifact("mine/rules.jsonl"))
    art.aspect_terms_to_jsonl(terms, run.artifact("mine/aspect_terms.jsonl"))

    if args.categories is not None:
        result = load_categories(run.add_input("categories", args.categories), mined_terms=terms)
        shutil.copyfile(args.categories, run.artifact("mine/categories.json"))
        art.write_json(
            run.artifact("mine/categories_report.json"),
            {
                "unknown_members": [" ".join(w) for w in result.unknown_members],
                "uncategorized_terms": [" ".join(w) for w in result.uncategorized_terms],
            },
        )
        for words in result.unknown_members:
            print(f"warning: category member {' '.join(words)!r} is not a mined aspect term")
    print(
        f"mined {len(transactions)} transactions -> {len(itemsets)} frequent itemsets, "
        f"{len(rules)} rules, {len(terms)} aspect terms"
    )


def _categories_for(args, run: Run, producer_hint: str) -> CategoriesResult:
    explicit = getattr(args, "categories", None)
    if explicit is not None:
        return load_categories(run.add_input("categories", explicit))
    copied = run.out / "mine/categories.json"
    if copied.exists():
        run.artifacts["mine/categories.json"] = copied
        return load_categories(copied)
    raise StageInputError(
        f"no categories file: pass --categories or run the '{producer_hint}' subcommand with one first"
    )


def run_score(args, run: Run) -> None:
    sentences = sentences_from_jsonl(_require(run.out / "ingest/sentences.jsonl", "ingest"))
    terms = art.aspect_terms_from_jsonl(_require(run.out / "mine/aspect_terms.jsonl", "mine"))
    counts_path = _require(run.out / "ingest/counts.json", "ingest")
    review_counts = json.loads(counts_path.read_text(encoding="utf-8"))
    categories = _categories_for(args, run, "mine").categories

    lexicon_dir = args.lexicon_dir if args.lexicon_dir is not None else data_path("lexicon")
    pos_path = Path(lexicon_dir) / "positive-words.txt"
    neg_path = Path(lexicon_dir) / "negative-words.txt"
    lexicon = load_lexicon(run.add_input("positive_lexicon", pos_path), run.add_input("negative_lexicon", neg_path))

    scores = score_corpus_parallel(sentences, terms, categories, lexicon, jobs=args.jobs)
    art.scores_to_json(scores, review_counts, run.artifact("score/scores.json"))
    print(f"scored {len(terms)} terms over {len(sentences)} sentences for {len(review_counts)} entities")


def run_bucketize(args, run: Run) -> None:
    if (args.votes is None) == (args.assignments is None):
        raise StageInputError("bucketize needs exactly one of --votes or --assignments")
    categories = _categories_for(args, run, "mine").categories
    category_ids = [c.category_id for c in categories]
    if args.votes is not None:
        votes, rejects = load_votes(run.add_input("votes", args.votes), known_category_ids=category_ids)
        assignments = assign_all(votes, category_ids)
        with open(run.artifact("kano/vote_rejects.csv"), "w", encoding="utf-8") as fh:
            fh.write("line,reason\n")
            for r in rejects:
                fh.write(f"{r.line},{r.reason}\n")
        print(f"tallied {len(votes)} votes ({len(rejects)} rejected)")
    else:
        loaded = load_assignments(run.add_input("assignments", args.assignments))
        by_id = {a.category_id: a for a in loaded}
        assignments = [by_id[cid] for cid in category_ids if cid in by_id]
        missing = [cid for cid in category_ids if cid not in by_id]
        for cid in missing:
            print(f"warning: no assignment for category {cid!r}")
    assignments_to_json(assignments, run.artifact("kano/assignments.json"))
    tied = [a.category_id for a in assignments if a.tied]
    if tied:
        print(f"tie(s) resolved by bucket priority, review manually: {', '.join(tied)}")


def run_report(args, run: Run) -> None:
    scores, review_counts = art.scores_from_json(_require(run.out / "score/scores.json", "score"))
    assignments = assignments_from_json(_require(run.out / "kano/assignments.json", "bucketize"))
    categories = _categories_for(args, run, "mine").categories

    overall = overall_table(assignments, scores.category, categories)
    for warning in overall.warnings:
        print(f"warning: {warning}")
    ordered_ids = _row_order(overall)
    entities = sorted(scores.entity_category) or sorted(review_counts)
    etable = entity_table(scores, categories, review_counts, entities=entities, row_order=ordered_ids)
    written = render(overall, etable, args.format, run.out / "report")
    for path in written:
        run.artifacts[str(path.relative_to(run.out))] = path
    print(f"report written: {', '.join(str(p) for p in written)}")


def _row_order(overall) -> list[str]:
    order = []
    for row in overall.rows:
        if row.category_id and row.category_id not in order:
            order.append(row.category_id)
    return order


def run_eval(args, run: Run) -> None:
    terms = art.aspect_terms_from_jsonl(_require(run.out / "mine/aspect_terms.jsonl", "mine"))
    gold = load_gold(run.add_input("gold", args.gold))
    overrides = load_overrides(run.add_input("overrides", args.overrides)) if args.overrides else []
    extracted = [t.words for t in terms]
    result = match(gold, extracted, overrides)

    entities: list[str] = []
    for g in gold:
        for e in sorted(g.offered_by):
            if e not in entities:
                entities.append(e)
    text = evaluation_matrix(gold, result, entities)
    run.artifact("eval/evaluation.txt").write_text(text, encoding="utf-8")
    payload = {
        "pairs": [{"gold": name, "term": " ".join(term)} for name, term in result.pairs],
        "unmatched_gold": result.unmatched_gold,
        "unmatched_extracted": [" ".join(t) for t in result.unmatched_extracted],
        "recall_per_entity": {e: recall(result, gold, e) for e in entities},
        "recall_overall": recall(result, gold),
        "precision": precision(len(result.pairs), len(result.unmatched_extracted)),
    }
    art.write_json(run.artifact("eval/evaluation.json"), payload)
    print(text, end="")


def run_pipeline(args, run: Run) -> None:
    if (args.votes is None) == (args.assignments is None):
        raise StageInputError("pipeline needs exactly one of --votes or --assignments for the bucketize stage")
    run_ingest(args, run)
    run_mine(args, run)
    run_bucketize(args, run)
    run_score(args, run)
    run_report(args, run)
    if args.gold is not None:
        run_eval(args, run)


STAGES = {
    "ingest": run_ingest,
    "mine": run_mine,
    "score": run_score,
    "bucketize": run_bucketize,
    "report": run_report,
    "eval": run_eval,
    "pipeline": run_pipeline,
}


def _config_payload(args) -> dict:
    skip = {"command"}
    payload = {}
    for key, value in sorted(vars(args).items()):
        if key in skip:
            continue
        payload[key] = str(value) if isinstance(value, Path) else value
    return payload


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        from .server import serve

        return serve(
            port=args.port,
            survey_config=args.survey_config,
            votes_log=args.votes_log,
            report_dir=args.report_dir,
            ui_dir=args.ui_dir,
        )

    run = Run(out=args.out)
    try:
        run.out.mkdir(parents=True, exist_ok=True)
        STAGES[args.command](args, run)
    except StageInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except MiningConfigError as exc:
        parser.error(str(exc))  # exits 2
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    manifest_name = "manifest.json" if args.command == "pipeline" else f"manifest-{args.command}.json"
    art.write_manifest(run.out / manifest_name, {"command": args.command, **_config_payload(args)}, run.inputs, run.artifacts)
    return 0


if __name__ == "__main__":
    sys.exit(main())
