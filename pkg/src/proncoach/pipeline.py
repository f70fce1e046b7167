# -*- coding: utf-8 -*-
"""End-to-end scoring of one attempt: hypothesis vs reference alignment,
per-character grades, utterance score, optional acoustic similarity, and
the assembled feedback payload."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import acoustic, alignment, arabic_text, feedback
from .acoustic import AudioClip, Hypothesis
from .corpus import PracticeItem


@dataclass(frozen=True)
class AttemptResult:
    feedback: feedback.AttemptFeedback
    acoustic_similarity: Optional[float]
    fused_score: float

    def to_dict(self) -> dict:
        d = self.feedback.to_dict()
        d["acoustic_similarity"] = self.acoustic_similarity
        d["fused_score"] = self.fused_score
        return d


def score_attempt(
    item: PracticeItem,
    hyp: Hypothesis,
    attempt_audio: Optional[AudioClip] = None,
    reference_audio: Optional[AudioClip] = None,
    text_weight: float = acoustic.DEFAULT_TEXT_WEIGHT,
    acoustic_weight: float = acoustic.DEFAULT_ACOUSTIC_WEIGHT,
) -> AttemptResult:
    """Run align -> score -> fuse -> build_feedback for one attempt.

    The feedback's utterance score is purely textual; acoustic similarity
    (when both audio clips are usable) only contributes to fused_score.
    """
    reference = arabic_text.segment_graphemes(item.vowelized_text)
    ops = alignment.align_words(reference, hyp.graphemes)
    ref_len = sum(1 for g in reference if not g.is_space)
    chars = alignment.score_characters(ops, ref_len)
    insertion_count = sum(1 for op in ops if op.kind is alignment.OpKind.INS)
    utt = alignment.utterance_score(chars, insertion_count)

    similarity: Optional[float] = None
    if attempt_audio is not None and reference_audio is not None:
        try:
            similarity = acoustic.dtw_similarity(
                acoustic.mfcc(attempt_audio), acoustic.mfcc(reference_audio)
            )
        except acoustic.TooShort:
            similarity = None

    fused = acoustic.fuse_scores(utt.value, similarity, text_weight, acoustic_weight)
    fb = feedback.build_feedback(item, hyp, ops, chars, utt)
    return AttemptResult(feedback=fb, acoustic_similarity=similarity, fused_score=fused)
