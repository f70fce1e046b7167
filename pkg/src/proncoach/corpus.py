# -*- coding: utf-8 -*-
"""Practice-item corpus: loading, validation, lookup, random selection.

The corpus file is a UTF-8 JSON array of objects carrying exactly the
PracticeItem field names; unknown fields are rejected so schema drift is
caught at load time. Audio/image references are relative paths that must
resolve inside the asset root (audio_slow_ref may be null).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Optional

from . import arabic_text
from .arabic_text import MalformedText


class ParseError(ValueError):
    """Corpus file is not valid JSON of the expected shape."""


class ValidationError(ValueError):
    def __init__(self, item_id: str, message: str):
        super().__init__(f"item {item_id!r}: {message}")
        self.item_id = item_id


class MissingAsset(ValidationError):
    pass


class NotFound(KeyError):
    pass


class EmptyCorpus(ValueError):
    pass


@dataclass(frozen=True)
class PracticeItem:
    id: str
    surface_text: str
    vowelized_text: str
    transliteration: str
    translation_en: str
    image_ref: str
    audio_normal_ref: str
    audio_slow_ref: Optional[str]
    example_sentence_ar: str
    example_sentence_en: str
    example_audio_ref: str
    graphophonic_note: str


_ITEM_FIELDS = {f.name for f in fields(PracticeItem)}
_REQUIRED_FIELDS = _ITEM_FIELDS - {"audio_slow_ref", "transliteration"}


@dataclass(frozen=True)
class Corpus:
    items: dict[str, PracticeItem]
    asset_root: Path

    def __len__(self) -> int:
        return len(self.items)

    def ordered_ids(self) -> list[str]:
        return sorted(self.items)


def _validate_item(raw: dict, asset_root: Path) -> PracticeItem:
    item_id = str(raw.get("id", "<missing id>"))
    unknown = set(raw) - _ITEM_FIELDS
    if unknown:
        raise ValidationError(item_id, f"unknown fields {sorted(unknown)}")
    missing = _REQUIRED_FIELDS - set(raw)
    if missing:
        raise ValidationError(item_id, f"missing fields {sorted(missing)}")

    vowelized = arabic_text.normalize(raw["vowelized_text"])
    surface = arabic_text.normalize(raw["surface_text"])
    try:
        vowelized_gs = arabic_text.segment_graphemes(vowelized)
        surface_gs = arabic_text.segment_graphemes(surface)
    except MalformedText as e:
        raise ValidationError(item_id, f"text does not segment: {e}") from e
    # Store the canonical serialization (shadda before vowel mark) so the
    # text round-trips exactly through segmentation.
    vowelized = vowelized_gs.text()

    bare = arabic_text.strip_diacritics(vowelized_gs)
    if bare.text() != arabic_text.strip_diacritics(surface_gs).text():
        raise ValidationError(
            item_id, "vowelized_text base letters do not match surface_text"
        )

    expected_translit = arabic_text.transliterate(vowelized_gs)
    translit = raw.get("transliteration") or expected_translit
    if translit != expected_translit:
        raise ValidationError(
            item_id,
            f"transliteration {translit!r} does not match vowelized text "
            f"(expected {expected_translit!r})",
        )

    example_ar = arabic_text.normalize(raw["example_sentence_ar"])
    if surface not in example_ar:
        raise ValidationError(
            item_id, "example_sentence_ar does not contain surface_text"
        )

    for field_name in ("image_ref", "audio_normal_ref", "audio_slow_ref", "example_audio_ref"):
        ref = raw.get(field_name)
        if ref is None:
            if field_name == "audio_slow_ref":
                continue
            raise ValidationError(item_id, f"{field_name} is null")
        resolved = (asset_root / ref).resolve()
        if asset_root.resolve() not in resolved.parents and resolved != asset_root.resolve():
            raise ValidationError(item_id, f"{field_name} escapes asset root: {ref}")
        if not resolved.is_file():
            raise MissingAsset(item_id, f"{field_name} missing: {ref}")

    return PracticeItem(
        id=str(raw["id"]),
        surface_text=surface,
        vowelized_text=vowelized,
        transliteration=translit,
        translation_en=raw["translation_en"],
        image_ref=raw["image_ref"],
        audio_normal_ref=raw["audio_normal_ref"],
        audio_slow_ref=raw.get("audio_slow_ref"),
        example_sentence_ar=example_ar,
        example_sentence_en=raw["example_sentence_en"],
        example_audio_ref=raw["example_audio_ref"],
        graphophonic_note=raw["graphophonic_note"],
    )


def load_corpus(path: str | Path, asset_root: str | Path) -> Corpus:
    """Load and fully validate a corpus file; transliteration fields are
    regenerated when absent."""
    path = Path(path)
    asset_root = Path(asset_root)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot parse corpus file {path}: {e}") from e
    if not isinstance(data, list):
        raise ParseError(f"corpus file {path} is not a JSON array")

    items: dict[str, PracticeItem] = {}
    for raw in data:
        if not isinstance(raw, dict):
            raise ParseError("corpus entries must be JSON objects")
        item = _validate_item(raw, asset_root)
        if item.id in items:
            raise ValidationError(item.id, "duplicate id")
        items[item.id] = item
    return Corpus(items=items, asset_root=asset_root)


def get_item(corpus: Corpus, item_id: str) -> PracticeItem:
    try:
        return corpus.items[item_id]
    except KeyError:
        raise NotFound(item_id) from None


def random_item(corpus: Corpus, rng: random.Random) -> PracticeItem:
    """Uniform draw; deterministic for a fixed seed (items ordered by id)."""
    if not corpus.items:
        raise EmptyCorpus("corpus has no items")
    return corpus.items[rng.choice(corpus.ordered_ids())]
