"""JSON payload builders shared by the CLI (--json) and the HTTP service,
so both surfaces emit structurally identical responses."""

from __future__ import annotations

from .errors import KbError
from .lexicon import Lexicon, Sense, Stats
from .render import RenderFormat, render_tree, tree_to_obj
from .similarity import ScoredSense, SimilarityConfig, nearest_senses
from .taxonomy import Sememe


def sense_summary(sense: Sense) -> dict:
    return {
        "id": sense.id,
        "zh": sense.zh,
        "en": sense.en,
        "pos": sense.pos,
        "def_text": sense.def_text(),
    }


def scored_sense_payload(scored: ScoredSense) -> dict:
    return {"sense": sense_summary(scored.sense), "score": scored.score}


def search_payload(senses: list[Sense]) -> list[dict]:
    return [sense_summary(s) for s in senses]


def sense_card(sense: Sense, lexicon: Lexicon, config: SimilarityConfig,
               k: int) -> dict:
    """The sense exhibition card: identity, POS, definition in text and
    tree form, sentiment, usage examples, and semantically near senses."""
    k = min(k, max(len(lexicon) - 1, 0))
    near = nearest_senses(sense.id, k, lexicon, config) if k else []
    return {
        "id": sense.id,
        "zh": sense.zh,
        "en": sense.en,
        "pos": sense.pos,
        "def_text": sense.def_text(),
        "def_tree": tree_to_obj(sense.definition),
        "sentiment": sense.sentiment,
        "examples": list(sense.examples),
        "near": [scored_sense_payload(s) for s in near],
    }


def sememe_payload(sememe: Sememe) -> dict:
    return {
        "id": sememe.id,
        "en": sememe.english,
        "zh": sememe.chinese,
        "ref": str(sememe.ref),
        "category": sememe.category.name,
        "parent": sememe.parent,
    }


def stats_payload(stats: Stats) -> dict:
    return {
        "sense_count": stats.sense_count,
        "distinct_zh_words": stats.distinct_zh_words,
        "distinct_en_words": stats.distinct_en_words,
        "sememe_count": stats.sememe_count,
    }


def tree_payload(sense: Sense, fmt: RenderFormat, ascii_only: bool = False) -> dict:
    payload: dict = {"sense_id": sense.id, "format": fmt.value}
    if fmt is RenderFormat.Json:
        payload["tree"] = tree_to_obj(sense.definition)
    else:
        payload["text"] = render_tree(sense.definition, fmt, ascii_only=ascii_only)
    return payload


def similarity_payload(score: float) -> dict:
    return {"score": score}


def similarity_detail_payload(score: float, a: Sense, b: Sense) -> dict:
    return {
        "score": score,
        "best_pair": {"a": sense_summary(a), "b": sense_summary(b)},
    }


def error_payload(exc: Exception) -> dict:
    kind = exc.kind if isinstance(exc, KbError) else type(exc).__name__
    return {"error": {"kind": kind, "message": str(exc)}}
