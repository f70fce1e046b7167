# -*- coding: utf-8 -*-
"""HTTP API for the pronunciation coach.

Endpoints (JSON, UTF-8, versioned under /api/v1):

    GET  /healthz                      liveness; 503 until the corpus is loaded
    GET  /api/v1/items/random          uniform random practice item
    GET  /api/v1/items/{id}            one item by id
    GET  /api/v1/assets/{ref}          audio/image assets (traversal-guarded)
    POST /api/v1/items/{id}/attempts   score an attempt (multipart: "audio"
                                       WAV part and/or "hypothesis_text")

Attempts are scored statelessly; the only shared state is the immutable
corpus, the seeded item-selection PRNG, and the optional append-only
attempt log, each behind a lock.
"""

from __future__ import annotations

import json
import mimetypes
import random
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import acoustic, arabic_text, corpus as corpus_mod, pipeline
from .acoustic import (
    AudioClip,
    CorruptFile,
    ErrorRates,
    Hypothesis,
    MockRecognizer,
    UnsupportedFormat,
)
from .arabic_text import MalformedText
from .corpus import Corpus, EmptyCorpus, NotFound

API_PREFIX = "/api/v1"


@dataclass
class ServiceConfig:
    corpus_path: str = "data/corpus.json"
    asset_root: str = "data/assets"
    host: str = "127.0.0.1"
    port: int = 8000
    recognizer: str = "mock"  # "mock" or "sidecar"
    mock_rates: ErrorRates = field(default_factory=ErrorRates)
    text_weight: float = acoustic.DEFAULT_TEXT_WEIGHT
    acoustic_weight: float = acoustic.DEFAULT_ACOUSTIC_WEIGHT
    seed: Optional[int] = None
    cors_origins: list[str] = field(default_factory=list)
    attempt_log: Optional[str] = None

    def __post_init__(self):
        if self.recognizer not in ("mock", "sidecar"):
            raise ValueError(f"unknown recognizer {self.recognizer!r}")

    @classmethod
    def from_file(cls, path: str | Path) -> "ServiceConfig":
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
        rates = raw.pop("mock_rates", None)
        cfg = cls(**raw)
        if rates is not None:
            cfg.mock_rates = ErrorRates(**rates)
        return cfg


class _State:
    def __init__(self, config: ServiceConfig):
        self.config = config
        self.corpus: Optional[Corpus] = None
        self.rng = random.Random(config.seed)
        self.rng_lock = threading.Lock()
        self.log_lock = threading.Lock()

    def load(self):
        self.corpus = corpus_mod.load_corpus(
            self.config.corpus_path, self.config.asset_root
        )

    def log_attempt(self, record: dict):
        if not self.config.attempt_log:
            return
        line = json.dumps(record, ensure_ascii=False)
        with self.log_lock:
            with open(self.config.attempt_log, "a", encoding="utf-8") as f:
                f.write(line + "\n")


def _item_json(item: corpus_mod.PracticeItem) -> dict:
    return {
        "id": item.id,
        "surface_text": item.surface_text,
        "vowelized_text": item.vowelized_text,
        "transliteration": item.transliteration,
        "translation_en": item.translation_en,
        "image_ref": item.image_ref,
        "audio_normal_ref": item.audio_normal_ref,
        "audio_slow_ref": item.audio_slow_ref,
        "example_sentence_ar": item.example_sentence_ar,
        "example_sentence_en": item.example_sentence_en,
        "example_audio_ref": item.example_audio_ref,
        "graphophonic_note": item.graphophonic_note,
    }


def _error(status: int, code: str, detail: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": code, "detail": detail})


def create_app(config: ServiceConfig, defer_load: bool = False) -> FastAPI:
    """Build the service; the corpus loads at startup unless defer_load is
    set (used to exercise readiness gating)."""
    app = FastAPI(title="proncoach", openapi_url=None)
    state = _State(config)
    app.state.proncoach = state

    if config.cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=config.cors_origins,
            allow_methods=["*"],
            allow_headers=["*"],
        )

    if not defer_load:
        state.load()

    @app.get("/healthz")
    def healthz():
        if state.corpus is None:
            return _error(503, "not_ready", "corpus not loaded")
        return Response(content="ok", media_type="text/plain")

    @app.get(API_PREFIX + "/items/random")
    def items_random():
        if state.corpus is None:
            return _error(503, "not_ready", "corpus not loaded")
        try:
            with state.rng_lock:
                item = corpus_mod.random_item(state.corpus, state.rng)
        except EmptyCorpus:
            return _error(503, "empty_corpus", "no practice items loaded")
        return JSONResponse(_item_json(item))

    @app.get(API_PREFIX + "/items/{item_id}")
    def items_get(item_id: str):
        if state.corpus is None:
            return _error(503, "not_ready", "corpus not loaded")
        try:
            item = corpus_mod.get_item(state.corpus, item_id)
        except NotFound:
            return _error(404, "not_found", f"no item {item_id!r}")
        return JSONResponse(_item_json(item))

    @app.get(API_PREFIX + "/assets/{ref:path}")
    def assets_get(ref: str):
        root = Path(config.asset_root).resolve()
        resolved = (root / ref).resolve()
        if root not in resolved.parents:
            return _error(403, "path_escape", "asset path escapes asset root")
        if not resolved.is_file():
            return _error(404, "not_found", f"no asset {ref!r}")
        media_type = mimetypes.guess_type(resolved.name)[0] or "application/octet-stream"
        if resolved.suffix.lower() == ".wav":
            media_type = "audio/wav"
        return Response(content=resolved.read_bytes(), media_type=media_type)

    @app.post(API_PREFIX + "/items/{item_id}/attempts")
    async def attempts_post(item_id: str, request: Request):
        if state.corpus is None:
            return _error(503, "not_ready", "corpus not loaded")
        try:
            item = corpus_mod.get_item(state.corpus, item_id)
        except NotFound:
            return _error(404, "not_found", f"no item {item_id!r}")

        try:
            form = await request.form()
        except Exception:
            return _error(400, "bad_request", "unreadable multipart body")
        audio_part = form.get("audio")
        hypothesis_text = form.get("hypothesis_text")
        if not isinstance(hypothesis_text, str):
            hypothesis_text = None

        clip: Optional[AudioClip] = None
        if audio_part is not None and not isinstance(audio_part, str):
            data = await audio_part.read()
            try:
                clip = acoustic.decode_wav(data)
            except UnsupportedFormat as e:
                return _error(400, "unsupported_format", str(e))
            except CorruptFile as e:
                return _error(400, "corrupt_audio", str(e))
            if clip.duration > acoustic.MAX_CLIP_SECONDS:
                return _error(413, "audio_too_long",
                              f"clip is {clip.duration:.1f} s, limit {acoustic.MAX_CLIP_SECONDS:.0f} s")

        try:
            if config.recognizer == "sidecar" or hypothesis_text is not None:
                if hypothesis_text is None:
                    return _error(400, "missing_hypothesis",
                                  "sidecar recognizer needs a hypothesis_text part")
                gs = arabic_text.segment_graphemes(arabic_text.normalize(hypothesis_text))
                hyp = Hypothesis(graphemes=gs)
            else:
                if clip is None:
                    return _error(400, "missing_audio",
                                  "attempt needs an audio part or hypothesis_text")
                recognizer = MockRecognizer(rates=config.mock_rates,
                                            seed=config.seed or 0)
                hyp = recognizer.recognize(clip, item)
        except MalformedText as e:
            return _error(400, "malformed_text", str(e))

        reference_audio = None
        if clip is not None:
            try:
                ref_bytes = (Path(config.asset_root) / item.audio_normal_ref).read_bytes()
                reference_audio = acoustic.decode_wav(ref_bytes)
            except (OSError, CorruptFile, UnsupportedFormat):
                reference_audio = None

        result = pipeline.score_attempt(
            item, hyp,
            attempt_audio=clip,
            reference_audio=reference_audio,
            text_weight=config.text_weight,
            acoustic_weight=config.acoustic_weight,
        )
        payload = result.to_dict()
        state.log_attempt({"item_id": item_id, "feedback": payload})
        return JSONResponse(payload)

    return app
