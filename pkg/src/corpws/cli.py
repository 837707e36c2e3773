"""Command-line front end.

Subcommands: tag, semtag, ingest, query (concordance/freq/colloc/ngram/
keywords), tiwtiadur (cloze/profile/identify/wordtask), eval, serve.
Tabular output is TSV on stdout; exercise output is JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

from .corpus import (
    DocMeta,
    ingest,
    load_corpus,
    parse_meta_filters,
    write_vertical,
)
from .errors import CorpwsError
from .evaluation import evaluate, format_report
from .query import (
    CorpusSnapshot,
    QueryExpr,
    collocations,
    concordance,
    frequency_list,
    keywords,
    ngrams,
)
from .resources import default_corpus
from .tagset import BasicCat
from .tiwtiadur import (
    build_bands,
    cloze_create,
    identify_task,
    profile,
    word_task,
)

SCRATCH_META = dict(id="cli", language_type="written",
                    genre="miscellaneous", sensitive=False)


def _tag_rows(text: str, with_sem: bool) -> list[str]:
    doc = ingest(text, DocMeta(**SCRATCH_META))
    rows = []
    for n, tok in enumerate(doc.tokens, 1):
        cols = [str(n), tok.text, f"{tok.sentence},{tok.position}",
                tok.lemma, tok.basic.value, tok.rich, tok.mutation.value]
        if with_sem:
            cols.append(tok.sem)
        rows.append("\t".join(cols))
    return rows


def _load_snapshot(manifest: str | None) -> CorpusSnapshot:
    corpus = default_corpus() if manifest is None else load_corpus(manifest)
    return CorpusSnapshot(corpus)


def _read_text(args) -> str:
    if getattr(args, "text", None) is not None:
        return args.text
    if getattr(args, "file", None) is not None:
        return Path(args.file).read_text(encoding="utf-8")
    return sys.stdin.read()


def _emit_json(payload) -> None:
    print(json.dumps(payload, ensure_ascii=False, indent=2))


# ------------------------------------------------------------- commands


def cmd_tag(args) -> int:
    print("\n".join(_tag_rows(args.text, with_sem=False)))
    return 0


def cmd_semtag(args) -> int:
    print("\n".join(_tag_rows(args.text, with_sem=True)))
    return 0


def cmd_ingest(args) -> int:
    meta = DocMeta(id=args.id, language_type=args.language_type,
                   genre=args.genre, sensitive=args.sensitive,
                   region=args.region, source=args.source)
    doc = ingest(_read_text(args), meta)
    rendered = write_vertical(doc)
    if args.out:
        Path(args.out).write_text(rendered, encoding="utf-8")
    else:
        sys.stdout.write(rendered)
    return 0


def cmd_query(args) -> int:
    snapshot = _load_snapshot(args.corpus)
    op = args.operation
    if op == "concordance":
        lines = concordance(snapshot, QueryExpr.parse(args.expr),
                            context_words=args.context, limit=args.limit,
                            where=parse_meta_filters(args.where) or None)
        for kl in lines:
            print("\t".join([kl.doc_id, str(kl.sentence), str(kl.position),
                             " ".join(kl.left), " ".join(kl.node),
                             " ".join(kl.right)]))
    elif op == "freq":
        for value, count in frequency_list(snapshot, unit=args.unit,
                                           limit=args.limit):
            print(f"{value}\t{count}")
    elif op == "colloc":
        rows = collocations(snapshot, args.node, span=args.span,
                            stat=args.stat, min_count=args.min_count,
                            unit=args.unit)
        if args.limit is not None:
            rows = rows[:args.limit]
        for coll, obs, expected, score in rows:
            print(f"{coll}\t{obs}\t{expected:.6f}\t{score:.6f}")
    elif op == "ngram":
        for gram, count in ngrams(snapshot, args.n, limit=args.limit,
                                  unit=args.unit):
            print(f"{' '.join(gram)}\t{count}")
    elif op == "keywords":
        ref_args = args.reference or ["rest"]
        reference = ("rest" if ref_args == ["rest"]
                     else parse_meta_filters(ref_args))
        rows = keywords(snapshot, parse_meta_filters(args.target),
                        reference=reference, limit=args.limit)
        for word, a, b, ll, direction in rows:
            print(f"{word}\t{a}\t{b}\t{ll:.6f}\t{direction}")
    return 0


def cmd_tiwtiadur(args) -> int:
    snapshot = _load_snapshot(args.corpus)
    op = args.operation
    if op == "cloze":
        task = cloze_create(snapshot, args.genre, args.gap_frequency,
                            args.text_length, args.seed)
        _emit_json(asdict(task))
    elif op == "profile":
        bands = build_bands(snapshot)
        prof = profile(_read_text(args), bands,
                       highlight_non_level=args.highlight_non_level)
        _emit_json(asdict(prof))
    elif op == "identify":
        bands = build_bands(snapshot)
        try:
            word_type = BasicCat(args.word_type)
        except ValueError:
            raise CorpwsError(
                f"unknown basic category {args.word_type!r}") from None
        task = identify_task(snapshot, bands, args.band, word_type,
                             args.max_sentences, args.seed)
        _emit_json(asdict(task))
    elif op == "wordtask":
        pos = None
        if args.pos is not None:
            try:
                pos = BasicCat(args.pos)
            except ValueError:
                raise CorpwsError(
                    f"unknown basic category {args.pos!r}") from None
        task = word_task(snapshot, args.word, pos=pos,
                         max_lines=args.max_lines, seed=args.seed)
        _emit_json(asdict(task))
    return 0


def cmd_eval(args) -> int:
    report = evaluate(args.system, args.gold)
    if args.json:
        _emit_json(report.as_dict())
    else:
        print(format_report(report))
    return 0


def cmd_serve(args) -> int:
    from .service import run

    run(bind=args.bind, manifest=args.corpus, static_dir=args.static)
    return 0


# -------------------------------------------------------------- parsing


def _add_corpus_flag(parser) -> None:
    parser.add_argument("--corpus", metavar="MANIFEST", default=None,
                        help="corpus manifest path (default: bundled)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corpws",
        description="Welsh corpus workbench: tagging, queries, exercises.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tag", help="POS-tag a text, one TSV row per token")
    p.add_argument("text")
    p.set_defaults(func=cmd_tag)

    p = sub.add_parser("semtag",
                       help="tag a text with a semantic field column added")
    p.add_argument("text")
    p.set_defaults(func=cmd_semtag)

    p = sub.add_parser("ingest",
                       help="annotate a text and emit a vertical file")
    p.add_argument("--id", required=True)
    p.add_argument("--language-type", required=True)
    p.add_argument("--genre", required=True)
    p.add_argument("--sensitive", action="store_true")
    p.add_argument("--region")
    p.add_argument("--source")
    p.add_argument("--text", help="inline text (default: read stdin)")
    p.add_argument("--file", help="read the text from this file")
    p.add_argument("--out", help="write here instead of stdout")
    p.set_defaults(func=cmd_ingest)

    q = sub.add_parser("query", help="search the corpus")
    qsub = q.add_subparsers(dest="operation", required=True)

    p = qsub.add_parser("concordance", help="KWIC lines for an expression")
    p.add_argument("expr", help='e.g. [lemma="bod"] [basic="E"]')
    p.add_argument("--context", type=int, default=5)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--where", action="append", metavar="KEY=VALUE")
    _add_corpus_flag(p)
    p.set_defaults(func=cmd_query)

    p = qsub.add_parser("freq", help="word frequency list")
    p.add_argument("--unit", default="token", choices=["token", "lemma"])
    p.add_argument("--limit", type=int, default=None)
    _add_corpus_flag(p)
    p.set_defaults(func=cmd_query)

    p = qsub.add_parser("colloc", help="collocates of a node word")
    p.add_argument("node")
    p.add_argument("--span", type=int, default=3)
    p.add_argument("--stat", default="MI", choices=["MI", "LL"])
    p.add_argument("--min-count", type=int, default=1)
    p.add_argument("--unit", default="token", choices=["token", "lemma"])
    p.add_argument("--limit", type=int, default=None)
    _add_corpus_flag(p)
    p.set_defaults(func=cmd_query)

    p = qsub.add_parser("ngram", help="n-gram frequency list")
    p.add_argument("n", type=int)
    p.add_argument("--unit", default="token", choices=["token", "lemma"])
    p.add_argument("--limit", type=int, default=None)
    _add_corpus_flag(p)
    p.set_defaults(func=cmd_query)

    p = qsub.add_parser("keywords",
                        help="over/under-represented words of a subcorpus")
    p.add_argument("--target", action="append", metavar="KEY=VALUE",
                   required=True)
    p.add_argument("--reference", action="append", metavar="KEY=VALUE",
                   help="metadata filter, or 'rest' (default)")
    p.add_argument("--limit", type=int, default=None)
    _add_corpus_flag(p)
    p.set_defaults(func=cmd_query)

    t = sub.add_parser("tiwtiadur", help="generate learning exercises")
    tsub = t.add_subparsers(dest="operation", required=True)

    p = tsub.add_parser("cloze", help="gap-fill task from a corpus text")
    p.add_argument("--genre", default=None)
    p.add_argument("--gap_frequency", type=int, required=True)
    p.add_argument("--text_length", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    _add_corpus_flag(p)
    p.set_defaults(func=cmd_tiwtiadur)

    p = tsub.add_parser("profile", help="frequency-band profile of a text")
    p.add_argument("--text", help="inline text (default: read stdin)")
    p.add_argument("--file", help="read the text from this file")
    p.add_argument("--highlight_non_level", action="store_true")
    _add_corpus_flag(p)
    p.set_defaults(func=cmd_tiwtiadur)

    p = tsub.add_parser("identify", help="guess-the-word task")
    p.add_argument("--band", required=True)
    p.add_argument("--word_type", required=True)
    p.add_argument("--max_sentences", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    _add_corpus_flag(p)
    p.set_defaults(func=cmd_tiwtiadur)

    p = tsub.add_parser("wordtask", help="blanked concordance for a word")
    p.add_argument("--word", required=True)
    p.add_argument("--pos", default=None)
    p.add_argument("--max_lines", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    _add_corpus_flag(p)
    p.set_defaults(func=cmd_tiwtiadur)

    p = sub.add_parser("eval", help="score tagger output against a gold file")
    p.add_argument("system")
    p.add_argument("gold")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--bind", default=None,
                   help="host:port (default 127.0.0.1:8000; "
                        "CORPWS_BIND overrides)")
    p.add_argument("--static", default=None,
                   help="directory of UI assets to serve at /")
    _add_corpus_flag(p)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CorpwsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
