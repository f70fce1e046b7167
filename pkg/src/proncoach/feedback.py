# -*- coding: utf-8 -*-
"""Assemble the full feedback payload for one practice attempt: stars,
per-character grades tied to the displayed reference graphemes, the diff of
omitted/added/mispronounced sounds, audio playback directives, and the
assistant content (example sentence with the practiced word's highlight
span)."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional, Sequence

from .acoustic import Hypothesis
from .alignment import (
    LABEL_CORRECT,
    LABEL_DELETED,
    AlignmentOp,
    CharacterScore,
    OpKind,
    UtteranceScore,
)
from .arabic_text import segment_graphemes, transliterate
from .corpus import PracticeItem

#: Client-side playback rate used when no slowed recording exists.
SLOW_PLAYBACK_RATE = 0.6


class Inconsistent(ValueError):
    """Feedback inputs do not describe the same attempt."""


@dataclass(frozen=True)
class CharacterFeedback:
    ref_index: int
    display: str  # the reference grapheme's codepoints
    label: str
    score: float
    band: str


@dataclass(frozen=True)
class InsertionFeedback:
    after_ref_index: int  # -1 when inserted before the first grapheme
    display: str


@dataclass(frozen=True)
class AudioRefs:
    normal_ref: str
    slow_ref: Optional[str]
    slow_client_rate: Optional[float]  # set iff slow_ref is absent


@dataclass(frozen=True)
class AssistantContent:
    example_sentence_ar: str
    highlight_span: tuple[int, int]  # codepoint offsets [start, end)
    example_sentence_en: str
    example_audio_ref: str
    graphophonic_note: str


@dataclass(frozen=True)
class AttemptFeedback:
    item_id: str
    utterance: UtteranceScore
    characters: tuple[CharacterFeedback, ...]
    hypothesis_text: str
    hypothesis_transliteration: str
    insertions: tuple[InsertionFeedback, ...]
    omitted: tuple[int, ...]
    mispronounced: tuple[int, ...]
    audio: AudioRefs
    assistant: AssistantContent

    def to_dict(self) -> dict:
        d = asdict(self)
        d["assistant"]["highlight_span"] = list(self.assistant.highlight_span)
        return d


def build_feedback(
    item: PracticeItem,
    hyp: Hypothesis,
    ops: Sequence[AlignmentOp],
    chars: Sequence[CharacterScore],
    utt: UtteranceScore,
) -> AttemptFeedback:
    reference = segment_graphemes(item.vowelized_text)
    ref_graphemes = [g for g in reference if not g.is_space]
    if len(chars) != len(ref_graphemes):
        raise Inconsistent(
            f"{len(chars)} character scores for {len(ref_graphemes)} reference graphemes"
        )

    # Insertions anchor to the last reference index seen before them.
    insertions = []
    hyp_no_space = [g for g in hyp.graphemes if not g.is_space]
    last_ref = -1
    for op in ops:
        if op.kind is OpKind.INS:
            insertions.append(
                InsertionFeedback(
                    after_ref_index=last_ref,
                    display=hyp_no_space[op.hyp_index].text(),
                )
            )
        elif op.ref_index is not None:
            last_ref = op.ref_index
    if len(insertions) != utt.insertion_count:
        raise Inconsistent(
            f"{len(insertions)} insertion ops but utterance counts {utt.insertion_count}"
        )

    recomputed = (
        1.0
        if not chars and utt.insertion_count == 0
        else sum(c.score for c in chars) / (len(chars) + utt.insertion_count)
    )
    if abs(recomputed - utt.value) > 1e-12:
        raise Inconsistent(
            f"utterance value {utt.value} does not match characters ({recomputed})"
        )

    start = item.example_sentence_ar.index(item.surface_text)
    span = (start, start + len(item.surface_text))

    return AttemptFeedback(
        item_id=item.id,
        utterance=utt,
        characters=tuple(
            CharacterFeedback(c.ref_index, ref_graphemes[c.ref_index].text(),
                              c.label, c.score, c.band)
            for c in chars
        ),
        hypothesis_text=hyp.graphemes.text(),
        hypothesis_transliteration=transliterate(hyp.graphemes),
        insertions=tuple(insertions),
        omitted=tuple(c.ref_index for c in chars if c.label == LABEL_DELETED),
        mispronounced=tuple(
            c.ref_index for c in chars
            if c.label not in (LABEL_CORRECT, LABEL_DELETED)
        ),
        audio=AudioRefs(
            normal_ref=item.audio_normal_ref,
            slow_ref=item.audio_slow_ref,
            slow_client_rate=None if item.audio_slow_ref else SLOW_PLAYBACK_RATE,
        ),
        assistant=AssistantContent(
            example_sentence_ar=item.example_sentence_ar,
            highlight_span=span,
            example_sentence_en=item.example_sentence_en,
            example_audio_ref=item.example_audio_ref,
            graphophonic_note=item.graphophonic_note,
        ),
    )
