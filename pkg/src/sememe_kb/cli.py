"""Command-line front door for the knowledge base.

Exit codes: 0 success, 1 domain error (unknown word/sense, load
failure), 2 usage error.  Every subcommand takes ``--json`` for
machine-readable output structurally identical to the HTTP API.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import wire
from .errors import KbError
from .lexicon import Lexicon, load_dataset
from .render import RenderFormat, render_ascii
from .similarity import (DEFAULT_CONFIG, SimilarityConfig, best_sense_pair,
                         nearest_senses, word_similarity)
from .service import ServiceConfig, serve


class _UsageError(Exception):
    pass


def _emit(payload, as_json: bool, human: str) -> None:
    if as_json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(human)


def _resolve_data_dir(args) -> str:
    data_dir = args.data or os.environ.get("SEMEME_KB_DATA")
    if not data_dir:
        raise _UsageError("no data directory: pass --data or set SEMEME_KB_DATA")
    return data_dir


def _load(args, strict: bool = True) -> Lexicon:
    return load_dataset(_resolve_data_dir(args), strict=strict)


def _sim_config(args) -> SimilarityConfig:
    path = getattr(args, "config", None)
    return SimilarityConfig.from_file(path) if path else DEFAULT_CONFIG


def _summary_lines(senses) -> str:
    return "\n".join(f"{s.id}\t{s.zh}\t{s.en}\t{s.pos}\t{s.def_text()}"
                     for s in senses)


def cmd_stats(args) -> int:
    stats = _load(args).stats()
    payload = wire.stats_payload(stats)
    human = "\n".join(f"{name}\t{value}" for name, value in payload.items())
    _emit(payload, args.json, human)
    return 0


def cmd_search(args) -> int:
    lexicon = _load(args)
    senses = lexicon.search_word(args.query, lang=args.lang, mode=args.mode,
                                 limit=args.limit)
    _emit(wire.search_payload(senses), args.json, _summary_lines(senses))
    return 0


def cmd_sense(args) -> int:
    lexicon = _load(args)
    sense = lexicon.get_sense(args.id)
    card = wire.sense_card(sense, lexicon, _sim_config(args), k=5)
    if args.json:
        _emit(card, True, "")
        return 0
    lines = [
        f"sense {card['id']}",
        f"  zh: {card['zh']}",
        f"  en: {card['en']}",
        f"  pos: {card['pos']}",
        f"  def: {card['def_text']}",
        f"  sentiment: {card['sentiment'] or '-'}",
    ]
    if card["examples"]:
        lines.append("  examples:")
        lines.extend(f"    - {example}" for example in card["examples"])
    lines.append("  tree:")
    lines.extend("    " + row for row in render_ascii(sense.definition).splitlines())
    if card["near"]:
        lines.append("  near senses:")
        lines.extend(f"    {n['sense']['id']}\t{n['score']:.6f}\t"
                     f"{n['sense']['zh']}\t{n['sense']['en']}"
                     for n in card["near"])
    print("\n".join(lines))
    return 0


def cmd_tree(args) -> int:
    lexicon = _load(args)
    sense = lexicon.get_sense(args.id)
    fmt = RenderFormat.parse(args.format)
    payload = wire.tree_payload(sense, fmt, ascii_only=args.ascii_only)
    _emit(payload, args.json, payload.get("text") or json.dumps(
        payload["tree"], ensure_ascii=False, separators=(",", ":")))
    return 0


def cmd_sim(args) -> int:
    lexicon = _load(args)
    config = _sim_config(args)
    score = word_similarity(args.word_a, args.word_b, args.lang, lexicon, config)
    if args.json:
        _emit(wire.similarity_payload(score), True, "")
        return 0
    sense_a, sense_b, _ = best_sense_pair(args.word_a, args.word_b, args.lang,
                                          lexicon, config)
    print(f"{score:.6f}")
    print(f"best pair: {sense_a.id} ({sense_a.def_text()}) ~ "
          f"{sense_b.id} ({sense_b.def_text()})")
    return 0


def cmd_nearest(args) -> int:
    lexicon = _load(args)
    scored = nearest_senses(args.id, args.k, lexicon, _sim_config(args))
    payload = [wire.scored_sense_payload(s) for s in scored]
    human = "\n".join(f"{s.sense.id}\t{s.score:.6f}\t{s.sense.zh}\t{s.sense.en}"
                      for s in scored)
    _emit(payload, args.json, human)
    return 0


def cmd_sememe(args) -> int:
    lexicon = _load(args)
    matches = lexicon.taxonomy.resolve(args.query)
    payload = [wire.sememe_payload(s) for s in matches]
    human = "\n".join(f"{s.id}\t{s.ref}\t{s.category.name}\tparent="
                      f"{'-' if s.parent is None else s.parent}"
                      for s in matches)
    _emit(payload, args.json, human)
    return 0


def cmd_validate(args) -> int:
    lexicon = _load(args, strict=False)
    issues = lexicon.load_issues
    if args.json:
        payload = {"issues": [{"kind": i.kind, "sense_id": i.sense_id,
                               "message": i.message} for i in issues]}
        print(json.dumps(payload, ensure_ascii=False))
    elif issues:
        for issue in issues:
            print(f"{issue.kind}\t{issue.message}")
        print(f"{len(issues)} issue(s) found", file=sys.stderr)
    else:
        print(f"ok: {len(lexicon)} senses, {len(lexicon.taxonomy)} sememes, no issues")
    return 1 if issues else 0


def cmd_serve(args) -> int:
    config = ServiceConfig(
        data_dir=_resolve_data_dir(args),
        host=args.host,
        port=args.port,
        similarity_config_path=args.config,
        static_dir=args.static,
        cors_origins=tuple(args.cors_origin or ()),
    )
    serve(config)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sememe-kb",
        description="Query a sememe-based lexical knowledge base.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--data", help="dataset directory (or set SEMEME_KB_DATA)")
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")
        p.set_defaults(handler=handler)
        return p

    add("stats", cmd_stats, "dataset statistics")

    p = add("search", cmd_search, "search senses by word")
    p.add_argument("query")
    p.add_argument("--lang", choices=["zh", "en", "auto"], default="auto")
    p.add_argument("--mode", choices=["exact", "prefix", "substring"],
                   default="exact")
    p.add_argument("--limit", type=int, default=50)

    p = add("sense", cmd_sense, "show a sense card")
    p.add_argument("id", type=int)
    p.add_argument("--config", help="similarity config JSON file")

    p = add("tree", cmd_tree, "render a sense's sememe tree")
    p.add_argument("id", type=int)
    p.add_argument("--format", choices=["ascii", "dot", "json"], default="ascii")
    p.add_argument("--ascii-only", action="store_true",
                   help="plain connectors instead of box drawing")

    p = add("sim", cmd_sim, "word similarity by sememe-tree comparison")
    p.add_argument("word_a")
    p.add_argument("word_b")
    p.add_argument("--lang", choices=["zh", "en"], default="en")
    p.add_argument("--config", help="similarity config JSON file")

    p = add("nearest", cmd_nearest, "semantically nearest senses")
    p.add_argument("id", type=int)
    p.add_argument("-k", type=int, default=5)
    p.add_argument("--config", help="similarity config JSON file")

    p = add("sememe", cmd_sememe, "resolve a sememe by label")
    p.add_argument("query")

    add("validate", cmd_validate, "run all load-time checks")

    p = add("serve", cmd_serve, "run the HTTP query service")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", help="static directory for the web explorer")
    p.add_argument("--config", help="similarity config JSON file")
    p.add_argument("--cors-origin", action="append",
                   help="allowed CORS origin (repeatable)")

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KbError as exc:
        if getattr(args, "json", False):
            print(json.dumps(wire.error_payload(exc), ensure_ascii=False))
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
