"""Sememe-based lexical knowledge base engine.

Parses sememe definition expressions into labeled trees, indexes senses
for bilingual retrieval, computes similarity by sememe-tree comparison,
renders trees, and serves everything over a CLI and a JSON HTTP API.
"""

from .errors import (BadParameter, InvalidK, KbError, LoadError, NoSuchWord,
                     UnknownSememe, UnknownSense)
from .kdml import (Head, Issue, Literal, ParseError, Placeholder, SememeRef,
                   SememeTree, leaf, parse_def, render_def, validate_def)
from .lexicon import (Lexicon, LoadIssue, Sense, Stats, load_dataset,
                      load_lexicon, read_jsonl)
from .render import (RenderFormat, render_ascii, render_dot, render_json,
                     render_tree, tree_from_json, tree_from_obj, tree_to_obj)
from .service import ServiceConfig, create_app, serve
from .similarity import (DEFAULT_CONFIG, ScoredSense, SimilarityConfig,
                         best_sense_pair, nearest_senses, sememe_similarity,
                         sense_similarity, tree_similarity, word_similarity)
from .taxonomy import Category, Sememe, Taxonomy, load_taxonomy

__version__ = "0.1.0"

__all__ = [
    "BadParameter", "Category", "DEFAULT_CONFIG", "Head", "InvalidK", "Issue",
    "KbError", "Lexicon", "Literal", "LoadError", "LoadIssue", "NoSuchWord",
    "ParseError", "Placeholder", "RenderFormat", "ScoredSense", "Sememe",
    "SememeRef", "SememeTree", "Sense", "ServiceConfig", "SimilarityConfig",
    "Stats", "Taxonomy", "UnknownSememe", "UnknownSense", "best_sense_pair",
    "create_app", "leaf", "load_dataset", "load_lexicon", "load_taxonomy",
    "nearest_senses", "parse_def", "read_jsonl", "render_ascii", "render_def",
    "render_dot", "render_json", "render_tree", "sememe_similarity",
    "sense_similarity", "serve", "tree_from_json", "tree_from_obj",
    "tree_to_obj", "tree_similarity", "validate_def", "word_similarity",
]
