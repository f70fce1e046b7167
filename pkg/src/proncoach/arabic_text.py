# -*- coding: utf-8 -*-
"""Unicode-correct Arabic text handling.

Three concerns live here:

1. Normalization: NFC, tatweel (kashida) removal, whitespace collapsing.
2. Grapheme segmentation: one base letter plus its attached harakat is the
   unit everything downstream scores against.
3. Reversible Buckwalter romanization, used as a learning cue and for
   round-trip testing.

Supported alphabet: Arabic letters U+0621..U+064A plus alef wasla U+0671,
the space character, and the eight common diacritics (fatha, damma, kasra,
the three tanwin forms, sukun, shadda). Anything else is rejected rather
than transliterated loosely, so that scoring units stay well-defined.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass


class MalformedText(ValueError):
    """Text cannot be segmented into well-formed graphemes."""


class UnknownSymbol(ValueError):
    """Romanized input contains a symbol outside the transliteration table."""


# Diacritic codepoints
FATHATAN = "ً"
DAMMATAN = "ٌ"
KASRATAN = "ٍ"
FATHA = "َ"
DAMMA = "ُ"
SHADDA = "ّ"
SUKUN = "ْ"
KASRA = "ِ"

#: Vowel-like marks: at most one of these per grapheme.
VOWEL_MARKS = frozenset({FATHA, DAMMA, KASRA, FATHATAN, DAMMATAN, KASRATAN, SUKUN})
DIACRITICS = VOWEL_MARKS | {SHADDA}

TATWEEL = "ـ"

# Buckwalter romanization, 1:1 and reversible over the supported set.
_AR2BW = {
    "ء": "'",   # hamza
    "آ": "|",   # alef madda
    "أ": ">",   # alef hamza above
    "ؤ": "&",   # waw hamza
    "إ": "<",   # alef hamza below
    "ئ": "}",   # ya hamza
    "ا": "A",   # alef
    "ب": "b",
    "ة": "p",   # ta marbuta
    "ت": "t",
    "ث": "v",   # tha
    "ج": "j",
    "ح": "H",   # hha
    "خ": "x",   # kha
    "د": "d",
    "ذ": "*",   # dhal
    "ر": "r",
    "ز": "z",
    "س": "s",
    "ش": "$",   # shin
    "ص": "S",   # sad
    "ض": "D",   # dad
    "ط": "T",   # tah
    "ظ": "Z",   # zah
    "ع": "E",   # ain
    "غ": "g",   # ghain
    "ف": "f",
    "ق": "q",
    "ك": "k",
    "ل": "l",
    "م": "m",
    "ن": "n",
    "ه": "h",
    "و": "w",
    "ى": "Y",   # alef maqsura
    "ي": "y",
    "ٱ": "{",   # alef wasla
    FATHATAN: "F",
    DAMMATAN: "N",
    KASRATAN: "K",
    FATHA: "a",
    DAMMA: "u",
    KASRA: "i",
    SHADDA: "~",
    SUKUN: "o",
    " ": " ",
}
_BW2AR = {v: k for k, v in _AR2BW.items()}
assert len(_BW2AR) == len(_AR2BW), "romanization table must be injective"

#: Letters of the supported alphabet (hamza forms through ya, plus alef
#: wasla); reserved codepoints in U+063B..U+0640 are deliberately excluded.
ARABIC_LETTERS = frozenset(_AR2BW) - DIACRITICS - {" "}
BASE_LETTERS = ARABIC_LETTERS | {" "}

_WS_RUN = re.compile(r"\s+")


@dataclass(frozen=True)
class Grapheme:
    """One base letter with its attached diacritics, in canonical order
    (shadda first, then at most one vowel/tanwin/sukun mark)."""

    base: str
    diacritics: tuple[str, ...] = ()

    def __post_init__(self):
        if self.base not in BASE_LETTERS:
            raise MalformedText(f"unsupported base letter {self.base!r}")
        if self.base == " " and self.diacritics:
            raise MalformedText("space cannot carry diacritics")
        marks = [d for d in self.diacritics if d in VOWEL_MARKS]
        shaddas = [d for d in self.diacritics if d == SHADDA]
        if len(marks) + len(shaddas) != len(self.diacritics):
            bad = set(self.diacritics) - DIACRITICS
            raise MalformedText(f"unsupported diacritics {bad!r}")
        if len(shaddas) > 1 or len(marks) > 1:
            raise MalformedText(
                f"at most one shadda and one vowel mark allowed, got {self.diacritics!r}"
            )
        canonical = tuple(shaddas) + tuple(marks)
        object.__setattr__(self, "diacritics", canonical)

    @property
    def is_space(self) -> bool:
        return self.base == " "

    def text(self) -> str:
        return self.base + "".join(self.diacritics)


@dataclass(frozen=True)
class GraphemeString:
    """Ordered grapheme sequence; concatenation reproduces the source text."""

    graphemes: tuple[Grapheme, ...] = ()

    def __len__(self) -> int:
        return len(self.graphemes)

    def __iter__(self):
        return iter(self.graphemes)

    def __getitem__(self, i):
        return self.graphemes[i]

    def text(self) -> str:
        return "".join(g.text() for g in self.graphemes)


def normalize(text: str) -> str:
    """NFC-normalize, drop tatweel, collapse whitespace runs to single
    spaces, strip. Total over arbitrary Unicode input."""
    text = unicodedata.normalize("NFC", text)
    text = text.replace(TATWEEL, "")
    text = _WS_RUN.sub(" ", text).strip()
    return text


def segment_graphemes(text: str) -> GraphemeString:
    """Split normalized text into graphemes, attaching each diacritic to the
    nearest preceding base letter.

    Raises MalformedText on codepoints outside the supported set, on a
    diacritic with no preceding base letter, and on diacritic combinations
    that violate the grapheme invariants (two vowel marks, doubled shadda,
    marks on a space).
    """
    out: list[Grapheme] = []
    base: str | None = None
    marks: list[str] = []

    def flush():
        nonlocal base, marks
        if base is not None:
            out.append(Grapheme(base, tuple(marks)))
        base, marks = None, []

    for ch in text:
        if ch in BASE_LETTERS:
            flush()
            base = ch
        elif ch in DIACRITICS:
            if base is None or base == " ":
                raise MalformedText(f"diacritic {ch!r} has no preceding letter")
            marks.append(ch)
        else:
            raise MalformedText(f"unsupported codepoint {ch!r} (U+{ord(ch):04X})")
    flush()
    return GraphemeString(tuple(out))


def transliterate(gs: GraphemeString) -> str:
    """Buckwalter romanization, one ASCII symbol per codepoint."""
    return "".join(_AR2BW[cp] for g in gs for cp in g.text())


def transliterate_inverse(s: str) -> GraphemeString:
    """Invert transliterate(); raises UnknownSymbol for characters outside
    the table image, MalformedText if the decoded text does not segment."""
    try:
        arabic = "".join(_BW2AR[ch] for ch in s)
    except KeyError as e:
        raise UnknownSymbol(f"symbol {e.args[0]!r} not in romanization table") from None
    return segment_graphemes(arabic)


def strip_diacritics(gs: GraphemeString) -> GraphemeString:
    """Same bases, no marks."""
    return GraphemeString(tuple(Grapheme(g.base) for g in gs))
