"""Sense records, parsed definitions, and the indexed lexicon.

The lexicon is immutable after load: senses are indexed by id, by word
form (Chinese and English, exact keys), and by contained sememe.  All
queries are read-only.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Optional, Union

from .errors import BadParameter, LoadError, UnknownSememe, UnknownSense
from .kdml import ParseError, SememeRef, SememeTree, parse_def, render_def
from .taxonomy import Sememe, Taxonomy, load_taxonomy

LANGS = ("zh", "en", "auto")
MODES = ("exact", "prefix", "substring")


@dataclass(frozen=True)
class Sense:
    """One meaning of a word: bilingual forms, POS, and a definition tree."""

    id: int
    zh: str
    en: str
    pos: str
    definition: SememeTree
    sentiment: Optional[str] = None
    examples: tuple[str, ...] = ()

    def def_text(self) -> str:
        return render_def(self.definition)


@dataclass(frozen=True)
class Stats:
    sense_count: int
    distinct_zh_words: int
    distinct_en_words: int
    sememe_count: int


@dataclass(frozen=True)
class LoadIssue:
    """One record skipped by a lenient load."""

    kind: str
    sense_id: Optional[int]
    message: str


class Lexicon:
    """Immutable collection of senses plus the taxonomy they validate against."""

    def __init__(self, senses: Iterable[Sense], taxonomy: Taxonomy,
                 load_issues: Iterable[LoadIssue] = ()):
        self.taxonomy = taxonomy
        self.load_issues = tuple(load_issues)
        self._by_id: dict[int, Sense] = {}
        self._by_zh: dict[str, list[int]] = {}
        self._by_en: dict[str, list[int]] = {}
        self._by_sememe: dict[int, list[int]] = {}
        for sense in senses:
            self._by_id[sense.id] = sense
            self._by_zh.setdefault(sense.zh, []).append(sense.id)
            self._by_en.setdefault(sense.en, []).append(sense.id)
            contained = set()
            for node in sense.definition.iter_nodes():
                if isinstance(node.head, SememeRef):
                    sememe = taxonomy.find_ref(node.head)
                    if sememe is not None:
                        contained.add(sememe.id)
            for sememe_id in contained:
                self._by_sememe.setdefault(sememe_id, []).append(sense.id)
        for index in (self._by_zh, self._by_en, self._by_sememe):
            for ids in index.values():
                ids.sort()

    def __len__(self) -> int:
        return len(self._by_id)

    def __iter__(self) -> Iterator[Sense]:
        """Senses in ascending id order."""
        return iter(sorted(self._by_id.values(), key=lambda s: s.id))

    def __contains__(self, sense_id: int) -> bool:
        return sense_id in self._by_id

    def get_sense(self, sense_id: int) -> Sense:
        try:
            return self._by_id[sense_id]
        except KeyError:
            raise UnknownSense(f"no sense with id {sense_id}") from None

    def sense_ids_for_word(self, word: str, lang: str) -> list[int]:
        index = self._index_for(lang)
        return list(index.get(word, ()))

    def _index_for(self, lang: str) -> dict[str, list[int]]:
        if lang == "zh":
            return self._by_zh
        if lang == "en":
            return self._by_en
        raise BadParameter(f"lang must be one of {LANGS}, got {lang!r}")

    def search_word(self, query: str, lang: str = "auto",
                    mode: str = "exact", limit: Optional[int] = None) -> list[Sense]:
        """Ranked word search.

        Exact matches come first, then prefix, then substring matches
        (``mode`` selects how deep that list goes); ascending sense id
        within a band.  ``auto`` searches both language indices and
        deduplicates by sense id.  The empty query matches nothing.
        """
        if lang not in LANGS:
            raise BadParameter(f"lang must be one of {LANGS}, got {lang!r}")
        if mode not in MODES:
            raise BadParameter(f"mode must be one of {MODES}, got {mode!r}")
        if not query:
            return []
        indices = [self._by_zh, self._by_en] if lang == "auto" else [self._index_for(lang)]

        bands: list[list[int]] = [[], [], []]  # exact, prefix, substring
        depth = MODES.index(mode)
        for index in indices:
            exact = index.get(query)
            if exact:
                bands[0].extend(exact)
            if depth >= 1:
                # Linear scan over index keys; fine at dictionary scale.
                for key, ids in index.items():
                    if key == query:
                        continue
                    if key.startswith(query):
                        bands[1].extend(ids)
                    elif depth >= 2 and query in key:
                        bands[2].extend(ids)

        results: list[Sense] = []
        seen: set[int] = set()
        for band in bands:
            for sense_id in sorted(band):
                if sense_id not in seen:
                    seen.add(sense_id)
                    results.append(self._by_id[sense_id])
                    if limit is not None and len(results) >= limit:
                        return results
        return results

    def senses_with_sememe(self, key: Union[int, str, SememeRef, Sememe]) -> list[Sense]:
        """All senses whose definition contains the sememe at any depth."""
        sememe = self._resolve_sememe(key)
        return [self._by_id[i] for i in self._by_sememe.get(sememe.id, ())]

    def _resolve_sememe(self, key: Union[int, str, SememeRef, Sememe]) -> Sememe:
        if isinstance(key, Sememe):
            return key
        if isinstance(key, int):
            return self.taxonomy.get(key)
        if isinstance(key, str):
            try:
                key = SememeRef.parse(key)
            except ValueError:
                raise UnknownSememe(f"not a sememe ref (expected en|zh): {key!r}") from None
        found = self.taxonomy.find_ref(key)
        if found is None:
            raise UnknownSememe(f"no sememe with ref {key}")
        return found

    def stats(self) -> Stats:
        """Counts computed from the live collections, never cached."""
        return Stats(
            sense_count=len(self._by_id),
            distinct_zh_words=len(self._by_zh),
            distinct_en_words=len(self._by_en),
            sememe_count=len(self.taxonomy),
        )


def _parse_sense_record(record: Mapping, taxonomy: Taxonomy) -> Sense:
    sense_id = record["id"]
    if not isinstance(sense_id, int) or sense_id < 0:
        raise ValueError(f"id must be a non-negative integer, got {sense_id!r}")
    zh, en = record["zh"], record["en"]
    if not zh or not isinstance(zh, str):
        raise ValueError("zh word form must be a non-empty string")
    if not en or not isinstance(en, str):
        raise ValueError("en word form must be a non-empty string")
    pos = record.get("pos", "")
    sentiment = record.get("sentiment")
    examples = tuple(record.get("examples") or ())
    tree = parse_def(record["def"])
    for node in tree.iter_nodes():
        if isinstance(node.head, SememeRef) and taxonomy.find_ref(node.head) is None:
            raise UnknownSememe(f"definition uses unknown sememe {node.head}")
    return Sense(sense_id, zh, en, pos, tree, sentiment, examples)


def load_lexicon(records: Iterable[Mapping], taxonomy: Taxonomy,
                 strict: bool = True) -> Lexicon:
    """Parse, validate, and index sense records.

    Strict mode (the default) raises LoadError on the first offending
    record, leaving nothing half-loaded.  Lenient mode skips offenders
    and reports them on ``Lexicon.load_issues``.
    """
    senses: dict[int, Sense] = {}
    issues: list[LoadIssue] = []

    def offend(kind: str, sense_id, message: str):
        if strict:
            raise LoadError(kind, message)
        issues.append(LoadIssue(kind, sense_id, message))

    for record in records:
        sense_id = record.get("id") if isinstance(record, Mapping) else None
        try:
            sense = _parse_sense_record(record, taxonomy)
        except ParseError as exc:
            offend("DefinitionParseError", sense_id,
                   f"sense {sense_id}: bad definition: {exc} [{exc.kind}]")
            continue
        except UnknownSememe as exc:
            offend("UnknownSememeInDef", sense_id, f"sense {sense_id}: {exc}")
            continue
        except (KeyError, TypeError, ValueError) as exc:
            offend("BadRecord", sense_id, f"sense {sense_id}: {exc}")
            continue
        if sense.id in senses:
            offend("DuplicateSenseId", sense.id,
                   f"sense {sense.id}: id already defined")
            continue
        senses[sense.id] = sense

    return Lexicon(senses.values(), taxonomy, issues)


def read_jsonl(path: Union[str, Path]) -> Iterator[dict]:
    """Yield one JSON object per non-blank line."""
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line:
                yield json.loads(line)


def data_dir_from_env() -> Optional[str]:
    return os.environ.get("SEMEME_KB_DATA") or None


def load_dataset(data_dir: Union[str, Path], strict: bool = True) -> Lexicon:
    """Load ``taxonomy.jsonl`` + ``senses.jsonl`` from a dataset directory."""
    base = Path(data_dir)
    if not base.is_dir():
        raise LoadError("BadRecord", f"data directory not found: {base}")
    taxonomy = load_taxonomy(read_jsonl(base / "taxonomy.jsonl"))
    return load_lexicon(read_jsonl(base / "senses.jsonl"), taxonomy, strict=strict)
