# -*- coding: utf-8 -*-
"""Error-injection benchmarking: corrupt references with known ground
truth, run the alignment, and measure how well injected errors are
recovered.

Detection is scored two ways: "exact" requires both the error type and the
reference position to match the injection; "type_only" credits any
detection of the right type regardless of position. Zero-injection metrics
are reported as 1.0 with an explicit injected=0 flag.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from . import alignment, arabic_text
from .acoustic import ErrorRates, corrupt_reference
from .alignment import AlignmentOp, OpKind
from .corpus import Corpus

#: Ground-truth / predicted error kinds (matches corrupt_reference).
ERROR_KINDS = ("sub_full", "sub_diacritic", "del", "ins")

_KIND_OF_OP = {
    OpKind.SUB_FULL: "sub_full",
    OpKind.SUB_DIACRITIC: "sub_diacritic",
    OpKind.DEL: "del",
}


def predicted_errors(ops: Sequence[AlignmentOp]) -> list[tuple[str, int]]:
    """Extract (kind, position) error records from an alignment; insertions
    are anchored to the last reference index seen before them, mirroring
    corrupt_reference's ground-truth convention."""
    out: list[tuple[str, int]] = []
    last_ref = -1
    for op in ops:
        if op.kind is OpKind.INS:
            out.append(("ins", last_ref))
        else:
            if op.kind in _KIND_OF_OP:
                out.append((_KIND_OF_OP[op.kind], op.ref_index))
            last_ref = op.ref_index
    return out


@dataclass
class _Tally:
    injected: int = 0
    predicted: int = 0
    exact_matched: int = 0
    type_matched: int = 0

    def metrics(self) -> dict:
        def _prf(matched):
            precision = 1.0 if self.predicted == 0 else matched / self.predicted
            recall = 1.0 if self.injected == 0 else matched / self.injected
            denom = precision + recall
            f1 = 0.0 if denom == 0 else 2 * precision * recall / denom
            return {"precision": precision, "recall": recall, "f1": f1}

        return {
            "injected": self.injected,
            "predicted": self.predicted,
            "exact": _prf(self.exact_matched),
            "type_only": _prf(self.type_matched),
        }


def evaluate_detection(
    corpus: Corpus, rates: ErrorRates, trials: int, seed: int
) -> dict:
    """Corrupt every item `trials` times, realign, and score detection.

    Returns a JSON-ready report: per-kind and overall metrics, confusion
    counts (injected kind x predicted kind at the same position), and the
    worst-scoring item/trial cases. Deterministic for a fixed seed.
    """
    per_kind = {k: _Tally() for k in ERROR_KINDS}
    overall = _Tally()
    confusion: Counter[tuple[str, str]] = Counter()
    cases = []

    for item_id in corpus.ordered_ids():
        item = corpus.items[item_id]
        reference = arabic_text.segment_graphemes(item.vowelized_text)
        ref_len = sum(1 for g in reference if not g.is_space)
        for trial in range(trials):
            rng = random.Random(f"{seed}:{item_id}:{trial}")
            hyp, _, truth = corrupt_reference(reference, rates, rng)
            ops = alignment.align_words(reference, hyp)
            predicted = predicted_errors(ops)

            truth_set, pred_set = set(truth), set(predicted)
            truth_kinds = Counter(k for k, _ in truth)
            pred_kinds = Counter(k for k, _ in predicted)
            for kind in ERROR_KINDS:
                t = per_kind[kind]
                t.injected += truth_kinds[kind]
                t.predicted += pred_kinds[kind]
                t.exact_matched += sum(
                    1 for rec in truth_set & pred_set if rec[0] == kind
                )
                t.type_matched += min(truth_kinds[kind], pred_kinds[kind])
            overall.injected += len(truth)
            overall.predicted += len(predicted)
            overall.exact_matched += len(truth_set & pred_set)
            overall.type_matched += sum(
                min(truth_kinds[k], pred_kinds[k]) for k in ERROR_KINDS
            )

            for t_kind, t_pos in truth:
                if t_kind == "ins":
                    continue
                hit = next(
                    (p for p in predicted if p[1] == t_pos and p[0] != "ins"), None
                )
                if hit is not None:
                    confusion[(t_kind, hit[0])] += 1

            chars = alignment.score_characters(ops, ref_len)
            ins_count = sum(1 for op in ops if op.kind is OpKind.INS)
            utt = alignment.utterance_score(chars, ins_count)
            cases.append(
                {"item_id": item_id, "trial": trial, "value": utt.value,
                 "injected": len(truth), "detected_exact": len(truth_set & pred_set)}
            )

    cases.sort(key=lambda c: (c["value"], c["item_id"], c["trial"]))
    return {
        "seed": seed,
        "trials": trials,
        "rates": {
            "p_sub_full": rates.p_sub_full,
            "p_sub_diac": rates.p_sub_diac,
            "p_del": rates.p_del,
            "p_ins": rates.p_ins,
        },
        "items": len(corpus),
        "overall": overall.metrics(),
        "per_kind": {k: per_kind[k].metrics() for k in ERROR_KINDS},
        "confusion": {
            f"{inj}->{pred}": n
            for (inj, pred), n in sorted(confusion.items())
        },
        "worst_cases": cases[:10],
    }


def _neighbors_equal(graphemes, pos) -> bool:
    g = graphemes[pos]
    return (pos > 0 and graphemes[pos - 1] == g) or (
        pos + 1 < len(graphemes) and graphemes[pos + 1] == g
    )


def single_error_report(corpus: Corpus, seed: int = 0) -> dict:
    """Inject exactly one substitution, one deletion, and one insertion per
    item (three separate attempts) and check position+type recovery.

    A deletion/insertion case is flagged ambiguous when the affected
    grapheme equals an adjacent reference grapheme, since equal-cost
    alignments then disagree only on position. Exact recovery is reported
    over non-ambiguous cases; type-only recovery over all cases.
    """
    total = {"cases": 0, "exact_hits": 0, "type_hits": 0}
    ambiguous = []
    non_ambiguous_misses = []

    for item_id in corpus.ordered_ids():
        item = corpus.items[item_id]
        reference = arabic_text.segment_graphemes(item.vowelized_text)
        words = alignment.split_words(reference)
        flat = [g for w in words for g in w]
        if not flat:
            continue
        rng = random.Random(f"{seed}:{item_id}")

        for kind in ("sub_full", "del", "ins"):
            pos = rng.randrange(len(flat))
            hyp_graphemes, amb = _inject(words, flat, kind, pos, rng)
            ops = alignment.align_words(
                reference, arabic_text.GraphemeString(tuple(hyp_graphemes))
            )
            predicted = predicted_errors(ops)
            expected = (kind, pos)
            exact = predicted == [expected]
            type_ok = [k for k, _ in predicted] == [kind]
            total["cases"] += 1
            total["exact_hits"] += exact and not amb
            total["type_hits"] += type_ok
            if amb:
                ambiguous.append({"item_id": item_id, "kind": kind, "pos": pos,
                                  "exact": exact})
            elif not exact:
                non_ambiguous_misses.append(
                    {"item_id": item_id, "kind": kind, "pos": pos,
                     "predicted": predicted}
                )

    n_ambiguous = len(ambiguous)
    n_clean = total["cases"] - n_ambiguous
    return {
        "seed": seed,
        "cases": total["cases"],
        "ambiguous": ambiguous,
        "non_ambiguous_cases": n_clean,
        "non_ambiguous_exact_recall": 1.0 if n_clean == 0 else total["exact_hits"] / n_clean,
        "type_only_recall": 1.0 if total["cases"] == 0 else total["type_hits"] / total["cases"],
        "non_ambiguous_misses": non_ambiguous_misses,
    }


def _inject(words, flat, kind, pos, rng):
    """Apply one error of `kind` at space-free position `pos`; returns the
    corrupted grapheme sequence (with word spaces restored) and whether the
    case is position-ambiguous."""
    from .acoustic import _BASE_CHOICES, _random_grapheme  # shared corruption pools

    target = flat[pos]
    if kind == "sub_full":
        bases_in_ref = {g.base for g in flat}
        candidates = [b for b in _BASE_CHOICES if b not in bases_in_ref]
        replacement = arabic_text.Grapheme(rng.choice(candidates), target.diacritics)
        new_flat = flat[:pos] + [replacement] + flat[pos + 1:]
        amb = False
    elif kind == "del":
        new_flat = flat[:pos] + flat[pos + 1:]
        amb = _neighbors_equal(flat, pos)
    else:  # ins
        inserted = _random_grapheme(rng)
        new_flat = flat[: pos + 1] + [inserted] + flat[pos + 1:]
        # Ambiguous if the inserted grapheme duplicates its neighbourhood.
        amb = inserted == flat[pos] or (
            pos + 1 < len(flat) and inserted == flat[pos + 1]
        )

    # Restore word boundaries at the original word lengths.
    out = []
    i = 0
    deleted = kind == "del"
    for w_idx, w in enumerate(words):
        length = len(w)
        if deleted and sum(len(x) for x in words[:w_idx]) <= pos < sum(len(x) for x in words[:w_idx + 1]):
            length -= 1
        elif kind == "ins" and sum(len(x) for x in words[:w_idx]) <= pos < sum(len(x) for x in words[:w_idx + 1]):
            length += 1
        if w_idx > 0:
            out.append(arabic_text.Grapheme(" "))
        out.extend(new_flat[i:i + length])
        i += length
    return out, amb
