# -*- coding: utf-8 -*-
import pytest

from proncoach import alignment as al, arabic_text as at, pipeline
from proncoach.acoustic import ErrorRates, Hypothesis, mock_recognize
from proncoach.feedback import Inconsistent, SLOW_PLAYBACK_RATE, build_feedback
from proncoach.alignment import AlignmentOp, OpKind


def run_pipeline(item, hyp_text):
    gs = at.segment_graphemes(at.normalize(hyp_text))
    return pipeline.score_attempt(item, Hypothesis(graphemes=gs))


@pytest.fixture
def salam(bundled_corpus):
    return bundled_corpus.items["w003-salam"]


class TestBuildFeedback:
    def test_perfect_attempt(self, salam):
        fb = run_pipeline(salam, salam.vowelized_text).feedback
        assert fb.utterance.stars == 5
        assert fb.utterance.value == 1.0
        assert len(fb.characters) == 4
        assert all(c.band == "green" for c in fb.characters)
        assert fb.omitted == () and fb.mispronounced == () and fb.insertions == ()
        assert fb.hypothesis_transliteration == salam.transliteration

    def test_final_deletion(self, salam):
        fb = run_pipeline(salam, "سَلَا").feedback
        assert fb.omitted == (3,)
        assert fb.utterance.value == pytest.approx(0.75)
        assert fb.utterance.stars == 4

    def test_mock_seed42_transliteration_golden(self, salam):
        hyp = mock_recognize(None, salam, ErrorRates(p_sub_full=0.5), seed=42)
        result = pipeline.score_attempt(salam, hyp)
        assert result.feedback.hypothesis_transliteration == "T~aZ~AqF"

    def test_partition_of_ref_indices(self, salam):
        fb = run_pipeline(salam, "سَلَّامو").feedback
        correct = {c.ref_index for c in fb.characters if c.label == "correct"}
        claimed = correct | set(fb.omitted) | set(fb.mispronounced)
        assert claimed == set(range(len(fb.characters)))
        assert len(correct) + len(fb.omitted) + len(fb.mispronounced) == len(
            fb.characters
        )

    def test_value_recomputes_from_characters(self, bundled_corpus):
        for item_id in bundled_corpus.ordered_ids()[:30]:
            item = bundled_corpus.items[item_id]
            hyp = mock_recognize(
                None, item, ErrorRates(0.1, 0.1, 0.1, 0.1), seed=9
            )
            fb = pipeline.score_attempt(item, hyp).feedback
            recomputed = (
                1.0
                if not fb.characters and not fb.utterance.insertion_count
                else sum(c.score for c in fb.characters)
                / (len(fb.characters) + fb.utterance.insertion_count)
            )
            assert abs(recomputed - fb.utterance.value) < 1e-12

    def test_highlight_span_slices_surface(self, bundled_corpus):
        for item in bundled_corpus.items.values():
            hyp = Hypothesis(
                graphemes=at.segment_graphemes(item.vowelized_text)
            )
            fb = pipeline.score_attempt(item, hyp).feedback
            start, end = fb.assistant.highlight_span
            assert fb.assistant.example_sentence_ar[start:end] == item.surface_text

    def test_insertion_anchor(self, salam):
        # Insert an extra grapheme after the first reference character.
        fb = run_pipeline(salam, "سَبِلَام").feedback
        assert len(fb.insertions) == 1
        assert fb.insertions[0].after_ref_index == 0
        assert fb.utterance.insertion_count == 1

    def test_slow_audio_directive(self, bundled_corpus):
        with_slow = bundled_corpus.items["w001-bayt"]
        without_slow = bundled_corpus.items["w002-kitab"]
        fb1 = run_pipeline(with_slow, with_slow.vowelized_text).feedback
        assert fb1.audio.slow_ref and fb1.audio.slow_client_rate is None
        fb2 = run_pipeline(without_slow, without_slow.vowelized_text).feedback
        assert fb2.audio.slow_ref is None
        assert fb2.audio.slow_client_rate == SLOW_PLAYBACK_RATE

    def test_inconsistent_inputs_rejected(self, salam):
        ref = [g for g in at.segment_graphemes(salam.vowelized_text)]
        ops = [AlignmentOp(OpKind.MATCH, i, i) for i in range(4)]
        chars = al.score_characters(ops, 4)
        utt = al.utterance_score(chars, 0)
        with pytest.raises(Inconsistent):
            build_feedback(salam, Hypothesis(graphemes=at.GraphemeString()),
                           ops, chars[:2], utt)
        bad_utt = al.UtteranceScore(value=0.5, stars=3, insertion_count=0)
        with pytest.raises(Inconsistent):
            build_feedback(salam, Hypothesis(graphemes=at.segment_graphemes(salam.vowelized_text)),
                           ops, chars, bad_utt)

    def test_to_dict_shape(self, salam):
        d = run_pipeline(salam, salam.vowelized_text).to_dict()
        assert d["item_id"] == salam.id
        assert d["utterance"]["stars"] == 5
        assert d["assistant"]["highlight_span"] == list(
            d["assistant"]["highlight_span"]
        )
        assert "fused_score" in d and "acoustic_similarity" in d
