"""Similarity by sememe-tree comparison.

Atomic sememe similarity is ``alpha / (alpha + d)`` with d the taxonomy
path distance (a fixed cross-tree constant when the sememes live in
different category trees).  Tree similarity combines the head score with
a per-role greedy best-pair matching of the child multisets:

    score      = beta_root * s_head + (1 - beta_root) * s_children
    s_role     = sum(matched pair scores) / max(|A|, |B|)
    s_children = mean of s_role over the union of role names
                 (1.0 when both nodes are leaves)

Word similarity is the maximum sense-pair similarity across the two
words' sense sets.  Everything here is stateless given (lexicon,
taxonomy, config) and safe to call concurrently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Optional, Union

from .errors import BadParameter, InvalidK, NoSuchWord, UnknownSememe
from .kdml import Literal, Placeholder, SememeRef, SememeTree
from .lexicon import Lexicon, Sense
from .taxonomy import Taxonomy


@dataclass(frozen=True)
class SimilarityConfig:
    """Tunable constants of the tree-comparison measure."""

    alpha: float = 1.6
    beta_root: float = 0.5
    cross_tree_sim: float = 0.1
    placeholder_match: float = 1.0

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        for name in ("beta_root", "cross_tree_sim", "placeholder_match"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {value}")

    @classmethod
    def from_mapping(cls, mapping: Mapping) -> "SimilarityConfig":
        known = {"alpha", "beta_root", "cross_tree_sim", "placeholder_match"}
        unknown = set(mapping) - known
        if unknown:
            raise ValueError(f"unknown similarity config fields: {sorted(unknown)}")
        return cls(**{k: float(v) for k, v in mapping.items()})

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "SimilarityConfig":
        with open(path, encoding="utf-8") as handle:
            return cls.from_mapping(json.load(handle))


DEFAULT_CONFIG = SimilarityConfig()


@dataclass(frozen=True)
class ScoredSense:
    sense: Sense
    score: float


def sememe_similarity(a: int, b: int, taxonomy: Taxonomy,
                      config: SimilarityConfig = DEFAULT_CONFIG) -> float:
    """Similarity of two sememes by taxonomy path distance."""
    d = taxonomy.path_distance(a, b)
    if d is None:
        return config.cross_tree_sim
    return config.alpha / (config.alpha + d)


def _head_similarity(h1, h2, taxonomy, config, memo) -> float:
    if isinstance(h1, SememeRef):
        if not isinstance(h2, SememeRef):
            return 0.0
        s1 = taxonomy.find_ref(h1)
        s2 = taxonomy.find_ref(h2)
        if s1 is None:
            raise UnknownSememe(f"no sememe with ref {h1}")
        if s2 is None:
            raise UnknownSememe(f"no sememe with ref {h2}")
        key = (s1.id, s2.id) if s1.id <= s2.id else (s2.id, s1.id)
        cached = memo.get(key)
        if cached is None:
            cached = sememe_similarity(key[0], key[1], taxonomy, config)
            memo[key] = cached
        return cached
    if isinstance(h1, Placeholder):
        return config.placeholder_match if h1 == h2 else 0.0
    return 1.0 if isinstance(h2, Literal) and h1.text == h2.text else 0.0


def _greedy_matched_sum(sims: list[list[float]]) -> float:
    """Greedy best-pair matching: scan pairs by descending similarity
    (ties by index), consuming each row and column at most once."""
    pairs = [(sims[i][j], i, j)
             for i in range(len(sims)) for j in range(len(sims[0]))]
    pairs.sort(key=lambda p: (-p[0], p[1], p[2]))
    used_rows: set[int] = set()
    used_cols: set[int] = set()
    total = 0.0
    for value, i, j in pairs:
        if i not in used_rows and j not in used_cols:
            used_rows.add(i)
            used_cols.add(j)
            total += value
    return total


def _tree_similarity(t1: SememeTree, t2: SememeTree, taxonomy, config, memo) -> float:
    s_head = _head_similarity(t1.head, t2.head, taxonomy, config, memo)
    c1, c2 = t1.children, t2.children
    if not c1 and not c2:
        s_children = 1.0
    else:
        by_role1: dict[str, list[SememeTree]] = {}
        for role, child in c1:
            by_role1.setdefault(role, []).append(child)
        by_role2: dict[str, list[SememeTree]] = {}
        for role, child in c2:
            by_role2.setdefault(role, []).append(child)
        # Sorted order keeps float summation identical under argument swap
        # (exact symmetry) and byte-deterministic across runs.
        roles = sorted(by_role1.keys() | by_role2.keys())
        total = 0.0
        for role in roles:
            group1 = by_role1.get(role)
            group2 = by_role2.get(role)
            if not group1 or not group2:
                continue  # unmatched side contributes 0 for this role
            if len(group1) == 1 and len(group2) == 1:
                matched = _tree_similarity(group1[0], group2[0], taxonomy, config, memo)
            else:
                sims = [[_tree_similarity(a, b, taxonomy, config, memo)
                         for b in group2] for a in group1]
                matched = _greedy_matched_sum(sims)
            total += matched / max(len(group1), len(group2))
        s_children = total / len(roles)
    return config.beta_root * s_head + (1.0 - config.beta_root) * s_children


def tree_similarity(t1: SememeTree, t2: SememeTree, taxonomy: Taxonomy,
                    config: SimilarityConfig = DEFAULT_CONFIG) -> float:
    """Similarity of two definition trees in [0, 1]."""
    return _tree_similarity(t1, t2, taxonomy, config, {})


def _as_sense(sense: Union[Sense, int], lexicon: Lexicon) -> Sense:
    if isinstance(sense, Sense):
        return lexicon.get_sense(sense.id)
    return lexicon.get_sense(sense)


def sense_similarity(s1: Union[Sense, int], s2: Union[Sense, int], lexicon: Lexicon,
                     config: SimilarityConfig = DEFAULT_CONFIG) -> float:
    """Similarity of two senses: tree similarity of their definitions."""
    a = _as_sense(s1, lexicon)
    b = _as_sense(s2, lexicon)
    return tree_similarity(a.definition, b.definition, lexicon.taxonomy, config)


def word_similarity(w1: str, w2: str, lang: str, lexicon: Lexicon,
                    config: SimilarityConfig = DEFAULT_CONFIG) -> float:
    """Maximum sense-pair similarity between two words.

    A word absent from the chosen language index is a hard NoSuchWord
    error, never score 0: unknown is not the same as dissimilar.
    """
    if lang not in ("zh", "en"):
        raise BadParameter(f"lang must be 'zh' or 'en', got {lang!r}")
    ids1 = lexicon.sense_ids_for_word(w1, lang)
    if not ids1:
        raise NoSuchWord(f"no {lang} senses for word {w1!r}")
    ids2 = lexicon.sense_ids_for_word(w2, lang)
    if not ids2:
        raise NoSuchWord(f"no {lang} senses for word {w2!r}")
    best = 0.0
    for i in ids1:
        for j in ids2:
            score = sense_similarity(i, j, lexicon, config)
            if score > best:
                best = score
    return best


def best_sense_pair(w1: str, w2: str, lang: str, lexicon: Lexicon,
                    config: SimilarityConfig = DEFAULT_CONFIG) -> tuple[Sense, Sense, float]:
    """The sense pair attaining word_similarity, ids ascending on ties."""
    if lang not in ("zh", "en"):
        raise BadParameter(f"lang must be 'zh' or 'en', got {lang!r}")
    ids1 = lexicon.sense_ids_for_word(w1, lang)
    if not ids1:
        raise NoSuchWord(f"no {lang} senses for word {w1!r}")
    ids2 = lexicon.sense_ids_for_word(w2, lang)
    if not ids2:
        raise NoSuchWord(f"no {lang} senses for word {w2!r}")
    best: Optional[tuple[float, int, int]] = None
    for i in sorted(ids1):
        for j in sorted(ids2):
            score = sense_similarity(i, j, lexicon, config)
            if best is None or score > best[0]:
                best = (score, i, j)
    return lexicon.get_sense(best[1]), lexicon.get_sense(best[2]), best[0]


def nearest_senses(target: Union[Sense, int], k: int, lexicon: Lexicon,
                   config: SimilarityConfig = DEFAULT_CONFIG) -> list[ScoredSense]:
    """Top-k senses by similarity to the target, target itself excluded.

    Descending score, ties broken by ascending sense id; the scan is
    sequential and deterministic.
    """
    if k < 1:
        raise InvalidK(f"k must be >= 1, got {k}")
    anchor = _as_sense(target, lexicon)
    taxonomy = lexicon.taxonomy
    memo: dict = {}
    scored = []
    for sense in lexicon:
        if sense.id == anchor.id:
            continue
        score = _tree_similarity(anchor.definition, sense.definition,
                                 taxonomy, config, memo)
        scored.append((-score, sense.id, sense))
    scored.sort(key=lambda t: (t[0], t[1]))
    return [ScoredSense(sense, -neg) for neg, _, sense in scored[:k]]
