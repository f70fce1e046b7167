import type {
  AssistantContent,
  AttemptFeedback,
  AudioRefs,
  Band,
  PracticeItem,
} from "./types.js";

// DOM builders for the three views. All color decisions come straight
// from the band values the service sent — no re-scoring on the client.

export const BAND_ORDER: Band[] = ["red", "orange", "yellow", "light_green", "green"];

/** CSS class for a character's color band; a pure lookup. */
export function bandClass(band: Band): string {
  return `band-${band}`;
}

/** Source ref + playback rate for the "slow" control (DD-C3 directive). */
export function slowPlaybackPlan(audio: AudioRefs): { ref: string; rate: number } {
  if (audio.slow_ref !== null) {
    return { ref: audio.slow_ref, rate: 1.0 };
  }
  return { ref: audio.normal_ref, rate: audio.slow_client_rate ?? 0.6 };
}

/** play() without letting unimplemented/blocked playback crash the UI. */
export function safePlay(el: HTMLAudioElement): void {
  try {
    const p = el.play();
    if (p && typeof p.catch === "function") {
      p.catch(() => {});
    }
  } catch {
    // autoplay restrictions / test environments without media support
  }
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

export interface PracticeHandlers {
  onHoldStart: () => void;
  onHoldEnd: () => void;
  onSkip: () => void;
}

export function renderPractice(
  root: HTMLElement,
  item: PracticeItem,
  assetUrl: (ref: string) => string,
  handlers: PracticeHandlers,
): void {
  root.innerHTML = "";
  const view = el("section", "practice-view");

  const img = el("img", "item-image");
  img.src = assetUrl(item.image_ref);
  img.alt = item.translation_en;
  view.appendChild(img);

  const word = el("div", "arabic word", item.vowelized_text);
  word.dir = "rtl";
  word.lang = "ar";
  view.appendChild(word);

  view.appendChild(el("div", "transliteration", item.transliteration));
  view.appendChild(el("div", "translation", item.translation_en));

  const record = el("button", "record-button", "● hold to record");
  record.addEventListener("pointerdown", () => {
    record.classList.add("pulsating");
    handlers.onHoldStart();
  });
  const release = () => {
    if (!record.classList.contains("pulsating")) {
      return;
    }
    record.classList.remove("pulsating");
    handlers.onHoldEnd();
  };
  record.addEventListener("pointerup", release);
  record.addEventListener("pointerleave", release);
  view.appendChild(record);

  const skip = el("button", "skip-button", "another word");
  skip.addEventListener("click", handlers.onSkip);
  view.appendChild(skip);

  root.appendChild(view);
}

export function renderMicPrompt(root: HTMLElement, onRetry: () => void): void {
  const prompt = el("div", "mic-prompt");
  prompt.appendChild(
    el("p", undefined, "Microphone access is needed to record your attempt."),
  );
  const retry = el("button", "mic-retry", "try again");
  retry.addEventListener("click", () => {
    prompt.remove();
    onRetry();
  });
  prompt.appendChild(retry);
  root.appendChild(prompt);
}

export function renderToast(root: HTMLElement, message: string): void {
  const toast = el("div", "toast", message);
  root.appendChild(toast);
  setTimeout(() => toast.remove(), 4000);
}

function starRow(stars: number): HTMLElement {
  const row = el("div", "stars");
  row.setAttribute("data-stars", String(stars));
  for (let i = 0; i < 5; i++) {
    row.appendChild(el("span", i < stars ? "star filled" : "star empty",
                       i < stars ? "★" : "☆"));
  }
  return row;
}

function legendBar(): HTMLElement {
  const legend = el("div", "legend");
  for (const band of BAND_ORDER) {
    legend.appendChild(el("span", `legend-swatch ${bandClass(band)}`, band.replace("_", " ")));
  }
  return legend;
}

export interface FeedbackHandlers {
  onPlayNormal: () => void;
  onPlaySlow: () => void;
  onTryAgain: () => void;
  onNextWord: () => void;
}

export function renderFeedback(
  root: HTMLElement,
  fb: AttemptFeedback,
  assetUrl: (ref: string) => string,
  handlers: FeedbackHandlers,
): void {
  root.innerHTML = "";
  const view = el("section", "feedback-view");

  view.appendChild(starRow(fb.utterance.stars));
  view.appendChild(
    el("div", "score-value", `${Math.round(fb.utterance.value * 100)}%`),
  );

  // Reference characters tinted by band. Arabic runs right-to-left; the
  // characters arrive in reading order, so dir=rtl lays them out correctly.
  const chars = el("div", "characters arabic");
  chars.dir = "rtl";
  chars.lang = "ar";
  for (const c of fb.characters) {
    const span = el("span", `char ${bandClass(c.band)}`, c.display);
    span.setAttribute("data-ref-index", String(c.ref_index));
    span.setAttribute("data-label", c.label);
    chars.appendChild(span);
  }
  view.appendChild(chars);
  view.appendChild(legendBar());

  view.appendChild(
    el("div", "hyp-translit", fb.hypothesis_transliteration),
  );

  // Diff of the attempt against the reference: omitted struck through,
  // insertions marked, mispronounced highlighted.
  const diff = el("div", "diff arabic");
  diff.dir = "rtl";
  diff.lang = "ar";
  const omitted = new Set(fb.omitted);
  const mispronounced = new Set(fb.mispronounced);
  const insertionsAfter = new Map<number, string[]>();
  for (const ins of fb.insertions) {
    const group = insertionsAfter.get(ins.after_ref_index) ?? [];
    group.push(ins.display);
    insertionsAfter.set(ins.after_ref_index, group);
  }
  const appendInsertions = (after: number) => {
    for (const display of insertionsAfter.get(after) ?? []) {
      const span = el("ins", "diff-char inserted", display);
      span.setAttribute("data-after", String(after));
      diff.appendChild(span);
    }
  };
  appendInsertions(-1);
  for (const c of fb.characters) {
    let span: HTMLElement;
    if (omitted.has(c.ref_index)) {
      span = el("del", "diff-char omitted", c.display);
    } else if (mispronounced.has(c.ref_index)) {
      span = el("mark", "diff-char mispronounced", c.display);
    } else {
      span = el("span", "diff-char correct", c.display);
    }
    span.setAttribute("data-ref-index", String(c.ref_index));
    diff.appendChild(span);
    appendInsertions(c.ref_index);
  }
  view.appendChild(diff);

  const playback = el("div", "playback");
  const normal = el("button", "play-normal", "▶ listen");
  normal.addEventListener("click", handlers.onPlayNormal);
  playback.appendChild(normal);
  const slow = el("button", "play-slow", "▶ slow");
  slow.addEventListener("click", handlers.onPlaySlow);
  playback.appendChild(slow);
  view.appendChild(playback);

  const nav = el("div", "feedback-nav");
  const again = el("button", "try-again", "try again");
  again.addEventListener("click", handlers.onTryAgain);
  nav.appendChild(again);
  const next = el("button", "next-word", "next word");
  next.addEventListener("click", handlers.onNextWord);
  nav.appendChild(next);
  view.appendChild(nav);

  view.appendChild(renderAssistant(fb.assistant, assetUrl));
  root.appendChild(view);
}

export function renderAssistant(
  assistant: AssistantContent,
  assetUrl: (ref: string) => string,
): HTMLElement {
  const panel = document.createElement("aside");
  panel.className = "assistant-view";

  // Example sentence with the practiced word highlighted in blue. The
  // span is in codepoints, so slice via the codepoint array, not UTF-16.
  const cps = Array.from(assistant.example_sentence_ar);
  const [start, end] = assistant.highlight_span;
  const sentence = document.createElement("p");
  sentence.className = "arabic example-sentence";
  sentence.dir = "rtl";
  sentence.lang = "ar";
  sentence.appendChild(
    document.createTextNode(cps.slice(0, start).join("")),
  );
  const highlight = document.createElement("span");
  highlight.className = "highlight-word";
  highlight.textContent = cps.slice(start, end).join("");
  sentence.appendChild(highlight);
  sentence.appendChild(
    document.createTextNode(cps.slice(end).join("")),
  );
  panel.appendChild(sentence);

  const translation = document.createElement("p");
  translation.className = "example-translation";
  translation.textContent = assistant.example_sentence_en;
  panel.appendChild(translation);

  const audio = document.createElement("audio");
  audio.className = "example-audio";
  audio.src = assetUrl(assistant.example_audio_ref);
  panel.appendChild(audio);

  const controls = document.createElement("div");
  controls.className = "assistant-controls";
  const playPause = document.createElement("button");
  playPause.className = "example-play";
  playPause.textContent = "▶";
  playPause.disabled = !assistant.example_audio_ref;
  playPause.addEventListener("click", () => {
    if (audio.paused) {
      safePlay(audio);
    } else {
      audio.pause();
    }
  });
  controls.appendChild(playPause);
  const replay = document.createElement("button");
  replay.className = "example-replay";
  replay.textContent = "↺";
  replay.disabled = !assistant.example_audio_ref;
  replay.addEventListener("click", () => {
    audio.currentTime = 0;
    safePlay(audio);
  });
  controls.appendChild(replay);
  panel.appendChild(controls);

  const note = document.createElement("p");
  note.className = "graphophonic-note";
  note.textContent = assistant.graphophonic_note;
  panel.appendChild(note);

  return panel;
}
