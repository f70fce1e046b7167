# -*- coding: utf-8 -*-
import json
import random
from pathlib import Path

import pytest

from proncoach import corpus as corpus_mod, generate
from proncoach.arabic_text import (
    FATHA,
    DAMMA,
    KASRA,
    SHADDA,
    SUKUN,
    Grapheme,
    GraphemeString,
)

REPO_ROOT = Path(__file__).resolve().parent.parent
BUNDLED_CORPUS = REPO_ROOT / "data" / "corpus.json"
BUNDLED_ASSETS = REPO_ROOT / "data" / "assets"

#: Fixed 8-grapheme alphabet for oracle-style alignment tests.
ORACLE_ALPHABET = (
    Grapheme("ب"),
    Grapheme("ب", (FATHA,)),
    Grapheme("ت", (DAMMA,)),
    Grapheme("ت", (SHADDA, FATHA)),
    Grapheme("س", (KASRA,)),
    Grapheme("س", (SUKUN,)),
    Grapheme("ل", (FATHA,)),
    Grapheme("م",),
)


def random_sequence(rng: random.Random, max_len: int = 6):
    return [rng.choice(ORACLE_ALPHABET) for _ in range(rng.randint(0, max_len))]


def gs(*graphemes) -> GraphemeString:
    return GraphemeString(tuple(graphemes))


@pytest.fixture(scope="session")
def bundled_corpus():
    return corpus_mod.load_corpus(BUNDLED_CORPUS, BUNDLED_ASSETS)


@pytest.fixture(scope="session")
def small_corpus_dir(tmp_path_factory):
    """A 12-item generated corpus for tests that do not need full scale."""
    out = tmp_path_factory.mktemp("smallcorpus")
    generate.generate_corpus(12, seed=3, out_dir=out)
    return out


@pytest.fixture
def small_corpus(small_corpus_dir):
    return corpus_mod.load_corpus(
        small_corpus_dir / "corpus.json", small_corpus_dir / "assets"
    )


def write_corpus_file(tmp_path: Path, items: list) -> Path:
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(items, ensure_ascii=False), encoding="utf-8")
    return path
