"""Read-only JSON HTTP API over the loaded lexicon.

The dataset is loaded once when the app is created (startup fails fast
on load errors); afterwards every handler is a pure read over immutable
structures, so requests are served concurrently without locks.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from . import wire
from .errors import BadParameter, InvalidK, KbError, LoadError, NoSuchWord, UnknownSememe, UnknownSense
from .lexicon import Lexicon, load_dataset
from .render import RenderFormat
from .similarity import (DEFAULT_CONFIG, SimilarityConfig, nearest_senses,
                         word_similarity, best_sense_pair)

DEFAULT_LIMIT = 50
MAX_LIMIT = 500
MAX_K = 100

_NOT_FOUND = (UnknownSense, UnknownSememe, NoSuchWord)
_BAD_REQUEST = (BadParameter, InvalidK)


@dataclass
class ServiceConfig:
    """Startup configuration for the query service."""

    data_dir: Optional[str] = None
    host: str = "127.0.0.1"
    port: int = 8080
    similarity_config_path: Optional[str] = None
    k_default: int = 5
    static_dir: Optional[str] = None
    cors_origins: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not 1 <= self.port <= 65535:
            raise ValueError(f"port must be in [1, 65535], got {self.port}")
        if self.k_default < 1:
            raise ValueError(f"k_default must be >= 1, got {self.k_default}")

    def resolved_data_dir(self) -> str:
        """Explicit setting wins; SEMEME_KB_DATA fills the gap."""
        data_dir = self.data_dir or os.environ.get("SEMEME_KB_DATA")
        if not data_dir:
            raise LoadError("BadRecord",
                            "no data directory: set ServiceConfig.data_dir or SEMEME_KB_DATA")
        return data_dir


def _error_response(status: int, exc: Exception) -> JSONResponse:
    return JSONResponse(status_code=status, content=wire.error_payload(exc))


def _clamped_limit(limit: int) -> int:
    if limit < 0:
        raise BadParameter(f"limit must be >= 0, got {limit}")
    return min(limit, MAX_LIMIT)


def create_app(config: ServiceConfig) -> FastAPI:
    """Load the dataset and build the API application."""
    lexicon: Lexicon = load_dataset(config.resolved_data_dir())
    if config.similarity_config_path:
        sim_config = SimilarityConfig.from_file(config.similarity_config_path)
    else:
        sim_config = DEFAULT_CONFIG

    app = FastAPI(title="sememe-kb", docs_url=None, redoc_url=None, openapi_url=None)

    if config.cors_origins:
        from fastapi.middleware.cors import CORSMiddleware
        app.add_middleware(CORSMiddleware, allow_origins=list(config.cors_origins),
                           allow_methods=["GET"], allow_headers=["*"])

    @app.exception_handler(KbError)
    def handle_domain_error(request: Request, exc: KbError):
        status = 404 if isinstance(exc, _NOT_FOUND) else 400
        return _error_response(status, exc)

    @app.exception_handler(RequestValidationError)
    def handle_validation_error(request: Request, exc: RequestValidationError):
        return _error_response(400, BadParameter(
            "; ".join(f"{'.'.join(str(p) for p in e['loc'])}: {e['msg']}"
                      for e in exc.errors())))

    @app.get("/api/search")
    def search(q: str, lang: str = "auto", mode: str = "exact",
               limit: int = DEFAULT_LIMIT):
        senses = lexicon.search_word(q, lang=lang, mode=mode,
                                     limit=_clamped_limit(limit))
        return wire.search_payload(senses)

    @app.get("/api/sense/{sense_id}")
    def sense_card(sense_id: int):
        sense = lexicon.get_sense(sense_id)
        return wire.sense_card(sense, lexicon, sim_config, config.k_default)

    @app.get("/api/sense/{sense_id}/tree")
    def sense_tree(sense_id: int, format: str = "ascii", ascii_only: bool = False):
        sense = lexicon.get_sense(sense_id)
        try:
            fmt = RenderFormat.parse(format)
        except ValueError as exc:
            raise BadParameter(str(exc)) from None
        return wire.tree_payload(sense, fmt, ascii_only=ascii_only)

    @app.get("/api/sense/{sense_id}/nearest")
    def sense_nearest(sense_id: int, k: Optional[int] = None):
        if k is None:
            k = config.k_default
        if k > MAX_K:
            k = MAX_K
        scored = nearest_senses(sense_id, k, lexicon, sim_config)
        return [wire.scored_sense_payload(s) for s in scored]

    @app.get("/api/similarity")
    def similarity(a: str, b: str, lang: str = "en", detail: bool = False):
        if detail:
            sense_a, sense_b, score = best_sense_pair(a, b, lang, lexicon, sim_config)
            return wire.similarity_detail_payload(score, sense_a, sense_b)
        return wire.similarity_payload(word_similarity(a, b, lang, lexicon, sim_config))

    @app.get("/api/sememes")
    def sememes(q: str):
        return [wire.sememe_payload(s) for s in lexicon.taxonomy.resolve(q)]

    @app.get("/api/sememe/{sememe_id}/senses")
    def sememe_senses(sememe_id: int):
        return wire.search_payload(lexicon.senses_with_sememe(sememe_id))

    @app.get("/api/stats")
    def stats():
        return wire.stats_payload(lexicon.stats())

    static_dir = config.static_dir
    if static_dir and Path(static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="explorer")

    return app


def serve(config: ServiceConfig) -> None:
    """Run the service until shutdown; in-flight requests complete."""
    import uvicorn
    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
