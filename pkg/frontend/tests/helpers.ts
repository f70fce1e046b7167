import type {
  AttemptFeedback,
  Band,
  CharacterFeedback,
  PracticeItem,
} from "../src/types.js";

export const BANDS: Band[] = ["red", "orange", "yellow", "light_green", "green"];

export function makeItem(overrides: Partial<PracticeItem> = {}): PracticeItem {
  return {
    id: "w001-salam",
    surface_text: "سلام",
    vowelized_text: "سَلَام",
    transliteration: "salaAm",
    translation_en: "peace",
    image_ref: "images/salam.png",
    audio_normal_ref: "audio/salam.wav",
    audio_slow_ref: "audio/salam_slow.wav",
    example_sentence_ar: "سلام عليكم",
    example_sentence_en: "Peace be upon you.",
    example_audio_ref: "audio/salam_example.wav",
    graphophonic_note: "The seen is a plain s sound.",
    ...overrides,
  };
}

const REF_CHARS = ["سَ", "لَ", "ا", "م"];

function character(
  refIndex: number,
  label: string,
  score: number,
  band: Band,
): CharacterFeedback {
  return {
    ref_index: refIndex,
    display: REF_CHARS[refIndex % REF_CHARS.length],
    label,
    score,
    band,
  };
}

/** A flawless attempt at the default item: value 1.0, 5 stars, all green. */
export function perfectFeedback(
  overrides: Partial<AttemptFeedback> = {},
): AttemptFeedback {
  return {
    item_id: "w001-salam",
    utterance: { value: 1.0, stars: 5, insertion_count: 0 },
    characters: REF_CHARS.map((_, i) => character(i, "correct", 1.0, "green")),
    hypothesis_text: "سَلَام",
    hypothesis_transliteration: "salaAm",
    insertions: [],
    omitted: [],
    mispronounced: [],
    audio: {
      normal_ref: "audio/salam.wav",
      slow_ref: "audio/salam_slow.wav",
      slow_client_rate: null,
    },
    assistant: {
      example_sentence_ar: "سلام عليكم",
      highlight_span: [0, 4],
      example_sentence_en: "Peace be upon you.",
      example_audio_ref: "audio/salam_example.wav",
      graphophonic_note: "The seen is a plain s sound.",
    },
    acoustic_similarity: null,
    fused_score: 1.0,
    ...overrides,
  };
}

/** The same attempt with reference grapheme `at` dropped: 4 stars. */
export function oneDeletionFeedback(at = 2): AttemptFeedback {
  const characters = REF_CHARS.map((_, i) =>
    i === at
      ? character(i, "deleted", 0.0, "red")
      : character(i, "correct", 1.0, "green"),
  );
  const value = (REF_CHARS.length - 1) / REF_CHARS.length;
  return perfectFeedback({
    utterance: { value, stars: 4, insertion_count: 0 },
    characters,
    hypothesis_text: "سَلَم",
    hypothesis_transliteration: "salam",
    omitted: [at],
    fused_score: value,
  });
}

/** Small deterministic RNG for generated payloads (mulberry32). */
export function rng(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

const LABEL_FOR_BAND: Record<Band, string> = {
  red: "deleted",
  orange: "substituted",
  yellow: "diacritic_error",
  light_green: "diacritic_error",
  green: "correct",
};

/** A structurally valid random AttemptFeedback payload. */
export function randomFeedback(random: () => number): AttemptFeedback {
  const n = 1 + Math.floor(random() * 8);
  const characters: CharacterFeedback[] = [];
  const omitted: number[] = [];
  const mispronounced: number[] = [];
  for (let i = 0; i < n; i++) {
    const band = BANDS[Math.floor(random() * BANDS.length)];
    const label = LABEL_FOR_BAND[band];
    characters.push(character(i, label, random(), band));
    if (label === "deleted") {
      omitted.push(i);
    } else if (label !== "correct") {
      mispronounced.push(i);
    }
  }
  const insertions = [];
  const insertionCount = Math.floor(random() * 3);
  for (let k = 0; k < insertionCount; k++) {
    insertions.push({
      after_ref_index: Math.floor(random() * (n + 1)) - 1,
      display: REF_CHARS[Math.floor(random() * REF_CHARS.length)],
    });
  }
  const hasSlow = random() < 0.5;
  const sentence = "سلام عليكم يا صديقي";
  const start = Math.floor(random() * 5);
  const end = start + 1 + Math.floor(random() * 4);
  return perfectFeedback({
    utterance: {
      value: random(),
      stars: Math.floor(random() * 6),
      insertion_count: insertionCount,
    },
    characters,
    insertions,
    omitted,
    mispronounced,
    audio: {
      normal_ref: "audio/x.wav",
      slow_ref: hasSlow ? "audio/x_slow.wav" : null,
      slow_client_rate: hasSlow ? null : 0.6,
    },
    assistant: {
      example_sentence_ar: sentence,
      highlight_span: [start, Math.min(end, Array.from(sentence).length)],
      example_sentence_en: "A random example.",
      example_audio_ref: "audio/x_example.wav",
      graphophonic_note: "note",
    },
    acoustic_similarity: random() < 0.5 ? random() : null,
    fused_score: random(),
  });
}
