# -*- coding: utf-8 -*-
"""Weighted edit alignment between reference and attempted grapheme
sequences, and the grading built on top of it.

Costs: match 0, diacritic-only substitution (same base) 0.5, full
substitution 1.0, deletion 1.0, insertion 1.0. Ties in the dynamic program
are broken by preferring Match > SubDiacritic > SubFull > Del > Ins during
the backtrace from the sequence ends, which makes alignments deterministic.

Multi-word phrases are split on spaces and aligned word-by-word (words
paired by position, surplus words become whole-word deletion/insertion
runs) so one bad word cannot smear errors across its neighbours.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .arabic_text import Grapheme, GraphemeString

MATCH_COST = 0.0
SUB_DIACRITIC_COST = 0.5
SUB_FULL_COST = 1.0
DEL_COST = 1.0
INS_COST = 1.0


class OpKind(Enum):
    MATCH = "match"
    SUB_DIACRITIC = "sub_diacritic"
    SUB_FULL = "sub_full"
    DEL = "del"
    INS = "ins"


#: Backtrace preference, best first.
_KIND_PRIORITY = {
    OpKind.MATCH: 0,
    OpKind.SUB_DIACRITIC: 1,
    OpKind.SUB_FULL: 2,
    OpKind.DEL: 3,
    OpKind.INS: 4,
}

_KIND_COST = {
    OpKind.MATCH: MATCH_COST,
    OpKind.SUB_DIACRITIC: SUB_DIACRITIC_COST,
    OpKind.SUB_FULL: SUB_FULL_COST,
    OpKind.DEL: DEL_COST,
    OpKind.INS: INS_COST,
}


class InconsistentAlignment(ValueError):
    """Op sequence does not cover the reference it claims to align."""


class OutOfRange(ValueError):
    """Score argument outside [0, 1]."""


@dataclass(frozen=True)
class AlignmentOp:
    kind: OpKind
    ref_index: Optional[int] = None
    hyp_index: Optional[int] = None

    def __post_init__(self):
        if self.kind is OpKind.DEL:
            ok = self.ref_index is not None and self.hyp_index is None
        elif self.kind is OpKind.INS:
            ok = self.ref_index is None and self.hyp_index is not None
        else:
            ok = self.ref_index is not None and self.hyp_index is not None
        if not ok:
            raise InconsistentAlignment(f"bad index combination for {self.kind}")

    @property
    def cost(self) -> float:
        return _KIND_COST[self.kind]


LABEL_CORRECT = "correct"
LABEL_DIACRITIC = "diacritic_error"
LABEL_SUBSTITUTED = "substituted"
LABEL_DELETED = "deleted"

_LABEL_SCORE = {
    LABEL_CORRECT: 1.0,
    LABEL_DIACRITIC: 0.5,
    LABEL_SUBSTITUTED: 0.0,
    LABEL_DELETED: 0.0,
}

BANDS = ("red", "orange", "yellow", "light_green", "green")


@dataclass(frozen=True)
class CharacterScore:
    ref_index: int
    label: str
    score: float
    band: str


@dataclass(frozen=True)
class UtteranceScore:
    value: float
    stars: int
    insertion_count: int


def classify_pair(ref: Grapheme, hyp: Grapheme) -> OpKind:
    """Kind of the diagonal step pairing one reference grapheme with one
    hypothesis grapheme."""
    if ref == hyp:
        return OpKind.MATCH
    if ref.base == hyp.base:
        return OpKind.SUB_DIACRITIC
    return OpKind.SUB_FULL


def align(ref: Sequence[Grapheme], hyp: Sequence[Grapheme]) -> list[AlignmentOp]:
    """Minimal-cost edit alignment of two space-free grapheme sequences.

    Returns ops covering every reference and hypothesis index exactly once,
    in increasing order of both coordinates.
    """
    for g in ref:
        if g.is_space:
            raise ValueError("align() expects space-free sequences; use align_words()")
    for g in hyp:
        if g.is_space:
            raise ValueError("align() expects space-free sequences; use align_words()")

    n, m = len(ref), len(hyp)
    # dp[i][j] = min cost aligning ref[:i] with hyp[:j]
    dp = [[0.0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        dp[i][0] = i * DEL_COST
    for j in range(1, m + 1):
        dp[0][j] = j * INS_COST
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            diag_kind = classify_pair(ref[i - 1], hyp[j - 1])
            dp[i][j] = min(
                dp[i - 1][j - 1] + _KIND_COST[diag_kind],
                dp[i - 1][j] + DEL_COST,
                dp[i][j - 1] + INS_COST,
            )

    # Backtrace from the end, choosing the preferred kind at each tie.
    ops: list[AlignmentOp] = []
    i, j = n, m
    while i > 0 or j > 0:
        candidates: list[tuple[int, AlignmentOp, int, int]] = []
        if i > 0 and j > 0:
            kind = classify_pair(ref[i - 1], hyp[j - 1])
            if dp[i][j] == dp[i - 1][j - 1] + _KIND_COST[kind]:
                candidates.append(
                    (_KIND_PRIORITY[kind],
                     AlignmentOp(kind, ref_index=i - 1, hyp_index=j - 1),
                     i - 1, j - 1)
                )
        if i > 0 and dp[i][j] == dp[i - 1][j] + DEL_COST:
            candidates.append(
                (_KIND_PRIORITY[OpKind.DEL],
                 AlignmentOp(OpKind.DEL, ref_index=i - 1), i - 1, j)
            )
        if j > 0 and dp[i][j] == dp[i][j - 1] + INS_COST:
            candidates.append(
                (_KIND_PRIORITY[OpKind.INS],
                 AlignmentOp(OpKind.INS, hyp_index=j - 1), i, j - 1)
            )
        _, op, i, j = min(candidates, key=lambda c: c[0])
        ops.append(op)
    ops.reverse()
    return ops


def alignment_cost(ops: Sequence[AlignmentOp]) -> float:
    return sum(op.cost for op in ops)


def split_words(gs: GraphemeString) -> list[list[Grapheme]]:
    """Split on space graphemes; empty words are dropped."""
    words: list[list[Grapheme]] = [[]]
    for g in gs:
        if g.is_space:
            words.append([])
        else:
            words[-1].append(g)
    return [w for w in words if w]


def align_words(ref: GraphemeString, hyp: GraphemeString) -> list[AlignmentOp]:
    """Word-by-word alignment of possibly multi-word strings.

    Words pair up by position; surplus words on either side become runs of
    whole-word deletions/insertions. Returned indices run over the
    space-free concatenation of each side's words.
    """
    ref_words = split_words(ref)
    hyp_words = split_words(hyp)
    ops: list[AlignmentOp] = []
    ref_off = hyp_off = 0
    for k in range(max(len(ref_words), len(hyp_words))):
        rw = ref_words[k] if k < len(ref_words) else []
        hw = hyp_words[k] if k < len(hyp_words) else []
        for op in align(rw, hw):
            ops.append(
                AlignmentOp(
                    op.kind,
                    ref_index=None if op.ref_index is None else op.ref_index + ref_off,
                    hyp_index=None if op.hyp_index is None else op.hyp_index + hyp_off,
                )
            )
        ref_off += len(rw)
        hyp_off += len(hw)
    return ops


def score_characters(ops: Sequence[AlignmentOp], ref_len: int) -> list[CharacterScore]:
    """One score per reference index; insertions carry no reference index
    and are accounted separately in the utterance score."""
    by_ref: dict[int, AlignmentOp] = {}
    for op in ops:
        if op.ref_index is not None:
            if op.ref_index in by_ref:
                raise InconsistentAlignment(f"ref index {op.ref_index} covered twice")
            by_ref[op.ref_index] = op
    if sorted(by_ref) != list(range(ref_len)):
        raise InconsistentAlignment(
            f"ops cover ref indices {sorted(by_ref)}, expected 0..{ref_len - 1}"
        )
    label_of = {
        OpKind.MATCH: LABEL_CORRECT,
        OpKind.SUB_DIACRITIC: LABEL_DIACRITIC,
        OpKind.SUB_FULL: LABEL_SUBSTITUTED,
        OpKind.DEL: LABEL_DELETED,
    }
    out = []
    for i in range(ref_len):
        label = label_of[by_ref[i].kind]
        score = _LABEL_SCORE[label]
        out.append(CharacterScore(i, label, score, color_band(score)))
    return out


def utterance_score(chars: Sequence[CharacterScore], insertion_count: int) -> UtteranceScore:
    """Aggregate value = sum of character scores over (ref length +
    insertions); an empty reference with no insertions is vacuously perfect."""
    if insertion_count < 0:
        raise ValueError("insertion_count must be >= 0")
    denom = len(chars) + insertion_count
    value = 1.0 if denom == 0 else sum(c.score for c in chars) / denom
    return UtteranceScore(value=value, stars=stars(value), insertion_count=insertion_count)


def stars(value: float) -> int:
    """Map [0,1] to 0..5 stars, rounding half up."""
    if not 0.0 <= value <= 1.0:
        raise OutOfRange(f"value {value} outside [0, 1]")
    return min(5, int(5.0 * value + 0.5))


def color_band(score: float) -> str:
    """Five equal-width bands, left-inclusive: red < 0.2 <= orange < 0.4 <=
    yellow < 0.6 <= light_green < 0.8 <= green."""
    if not 0.0 <= score <= 1.0:
        raise OutOfRange(f"score {score} outside [0, 1]")
    # Explicit comparisons: score / 0.2 is not float-exact at the boundaries.
    if score < 0.2:
        return "red"
    if score < 0.4:
        return "orange"
    if score < 0.6:
        return "yellow"
    if score < 0.8:
        return "light_green"
    return "green"
