// Wire formats of the /api/v1 service, mirrored 1:1.

export interface PracticeItem {
  id: string;
  surface_text: string;
  vowelized_text: string;
  transliteration: string;
  translation_en: string;
  image_ref: string;
  audio_normal_ref: string;
  audio_slow_ref: string | null;
  example_sentence_ar: string;
  example_sentence_en: string;
  example_audio_ref: string;
  graphophonic_note: string;
}

export type Band = "red" | "orange" | "yellow" | "light_green" | "green";

export interface UtteranceScore {
  value: number;
  stars: number;
  insertion_count: number;
}

export interface CharacterFeedback {
  ref_index: number;
  display: string;
  label: string;
  score: number;
  band: Band;
}

export interface InsertionFeedback {
  after_ref_index: number; // -1 when inserted before the first grapheme
  display: string;
}

export interface AudioRefs {
  normal_ref: string;
  slow_ref: string | null;
  slow_client_rate: number | null; // set iff slow_ref is absent
}

export interface AssistantContent {
  example_sentence_ar: string;
  highlight_span: [number, number]; // codepoint offsets [start, end)
  example_sentence_en: string;
  example_audio_ref: string;
  graphophonic_note: string;
}

export interface AttemptFeedback {
  item_id: string;
  utterance: UtteranceScore;
  characters: CharacterFeedback[];
  hypothesis_text: string;
  hypothesis_transliteration: string;
  insertions: InsertionFeedback[];
  omitted: number[];
  mispronounced: number[];
  audio: AudioRefs;
  assistant: AssistantContent;
  acoustic_similarity: number | null;
  fused_score: number;
}
