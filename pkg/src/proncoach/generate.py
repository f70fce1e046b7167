# -*- coding: utf-8 -*-
"""Corpus generation: the curated word list plus synthetic items to reach
the target scale, with deterministic beep/silence WAV assets and tiny
placeholder images. Everything is seeded, so the same arguments always
produce the same corpus tree."""

from __future__ import annotations

import json
import random
import struct
import zlib
from pathlib import Path

import numpy as np

from . import arabic_text
from .acoustic import SAMPLE_RATE, encode_wav
from .arabic_text import Grapheme, GraphemeString
from .curated import CURATED_ITEMS

#: Frequent letters used for synthetic words, weighted towards easy shapes.
_SYNTH_BASES = list("بتجحدرسشصطعفقكلمنهوي")
_SYNTH_VOWELS = [arabic_text.FATHA, arabic_text.DAMMA, arabic_text.KASRA]

NUM_TONES = 20
NUM_IMAGES = 10


def _tone_samples(freq: float, seconds: float) -> np.ndarray:
    t = np.arange(int(SAMPLE_RATE * seconds)) / SAMPLE_RATE
    fade = np.minimum(1.0, np.minimum(t, t[::-1]) / 0.02)
    return 0.4 * np.sin(2 * np.pi * freq * t) * fade


def _png_bytes(rgb: tuple[int, int, int]) -> bytes:
    """Minimal 8x8 single-colour PNG, no image library needed."""
    def chunk(tag: bytes, data: bytes) -> bytes:
        return (struct.pack(">I", len(data)) + tag + data
                + struct.pack(">I", zlib.crc32(tag + data)))

    header = struct.pack(">IIBBBBB", 8, 8, 8, 2, 0, 0, 0)
    row = b"\x00" + bytes(rgb) * 8
    body = zlib.compress(row * 8)
    return (b"\x89PNG\r\n\x1a\n"
            + chunk(b"IHDR", header)
            + chunk(b"IDAT", body)
            + chunk(b"IEND", b""))


def write_assets(asset_root: Path) -> None:
    """Write the shared asset pool: tones, slow tones, silence, images."""
    audio_dir = asset_root / "audio"
    img_dir = asset_root / "img"
    audio_dir.mkdir(parents=True, exist_ok=True)
    img_dir.mkdir(parents=True, exist_ok=True)
    for i in range(NUM_TONES):
        freq = 220.0 * 2 ** (i / 12.0)
        (audio_dir / f"tone_{i:03d}.wav").write_bytes(
            encode_wav(_tone_samples(freq, 0.6))
        )
        (audio_dir / f"slow_tone_{i:03d}.wav").write_bytes(
            encode_wav(_tone_samples(freq, 1.2))
        )
    (audio_dir / "silence.wav").write_bytes(
        encode_wav(np.zeros(SAMPLE_RATE // 2))
    )
    palette = [(int(180 + 60 * ((i * 37) % 2)), (i * 53) % 256, (i * 101) % 256)
               for i in range(NUM_IMAGES)]
    for i, rgb in enumerate(palette):
        (img_dir / f"placeholder_{i:03d}.png").write_bytes(_png_bytes(rgb))


def _asset_refs(item_id: str, rng: random.Random, with_slow: bool) -> dict:
    tone = rng.randrange(NUM_TONES)
    return {
        "image_ref": f"img/placeholder_{rng.randrange(NUM_IMAGES):03d}.png",
        "audio_normal_ref": f"audio/tone_{tone:03d}.wav",
        "audio_slow_ref": f"audio/slow_tone_{tone:03d}.wav" if with_slow else None,
        "example_audio_ref": f"audio/tone_{rng.randrange(NUM_TONES):03d}.wav",
    }


def _synthetic_word(rng: random.Random) -> GraphemeString:
    """A pronounceable nonsense word of 2..5 graphemes; every word has at
    least two graphemes so single-error injection cannot empty a word."""
    n = rng.randint(2, 5)
    graphemes = []
    for i in range(n):
        base = rng.choice(_SYNTH_BASES)
        marks: tuple[str, ...]
        roll = rng.random()
        if i == n - 1 and rng.random() < 0.3:
            marks = (arabic_text.SUKUN,)
        elif roll < 0.08:
            marks = (arabic_text.SHADDA, rng.choice(_SYNTH_VOWELS))
        elif roll < 0.85:
            marks = (rng.choice(_SYNTH_VOWELS),)
        else:
            marks = ()
        graphemes.append(Grapheme(base, marks))
    return GraphemeString(tuple(graphemes))


def _curated_item(index: int, rng: random.Random) -> dict:
    slug, surface, vowelized, translation, ex_ar, ex_en, note = CURATED_ITEMS[index]
    gs = arabic_text.segment_graphemes(arabic_text.normalize(vowelized))
    return {
        "id": f"w{index + 1:03d}-{slug}",
        "surface_text": surface,
        "vowelized_text": vowelized,
        "transliteration": arabic_text.transliterate(gs),
        "translation_en": translation,
        "example_sentence_ar": ex_ar,
        "example_sentence_en": ex_en,
        "graphophonic_note": note,
        **_asset_refs(slug, rng, with_slow=index % 2 == 0),
    }


def _synthetic_item(k: int, rng: random.Random) -> dict:
    num_words = 1 if rng.random() < 0.8 else 2
    words = [_synthetic_word(rng) for _ in range(num_words)]
    space = Grapheme(" ")
    graphemes: list[Grapheme] = []
    for i, w in enumerate(words):
        if i:
            graphemes.append(space)
        graphemes.extend(w.graphemes)
    gs = GraphemeString(tuple(graphemes))
    vowelized = gs.text()
    surface = arabic_text.strip_diacritics(gs).text()
    item_id = f"gen{k:04d}"
    return {
        "id": item_id,
        "surface_text": surface,
        "vowelized_text": vowelized,
        "transliteration": arabic_text.transliterate(gs),
        "translation_en": f"practice drill {k}",
        "example_sentence_ar": f"انطق كلمة {surface} بوضوح",
        "example_sentence_en": f"Pronounce the word (drill {k}) clearly.",
        "graphophonic_note":
            "Synthetic drill: read each letter with its mark, left unmarked "
            "letters take no vowel.",
        **_asset_refs(item_id, rng, with_slow=k % 2 == 1),
    }


def generate_corpus(n: int, seed: int, out_dir: Path) -> Path:
    """Write corpus.json plus assets for `n` items (curated first, then
    synthetic). Returns the corpus file path."""
    if n < 1:
        raise ValueError("need n >= 1")
    out_dir = Path(out_dir)
    asset_root = out_dir / "assets"
    rng = random.Random(seed)
    write_assets(asset_root)

    items = [_curated_item(i, rng) for i in range(min(n, len(CURATED_ITEMS)))]
    items += [_synthetic_item(k, rng) for k in range(n - len(items))]

    corpus_path = out_dir / "corpus.json"
    corpus_path.write_text(
        json.dumps(items, ensure_ascii=False, indent=1) + "\n", encoding="utf-8"
    )
    return corpus_path
