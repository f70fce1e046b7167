import type { AttemptFeedback, PracticeItem } from "./types.js";

// View-state machine for the single-session app. Invariants:
//   - feedback mode only with a populated lastFeedback
//   - recording only in practice mode
//   - at most one in-flight upload (no recording while uploading)

export interface ViewState {
  mode: "practice" | "feedback";
  item: PracticeItem | null;
  recording: boolean;
  uploading: boolean;
  lastFeedback: AttemptFeedback | null;
}

export function initialState(): ViewState {
  return {
    mode: "practice",
    item: null,
    recording: false,
    uploading: false,
    lastFeedback: null,
  };
}

export function itemLoaded(state: ViewState, item: PracticeItem): ViewState {
  return { ...initialState(), item };
}

export function recordingStarted(state: ViewState): ViewState {
  if (state.mode !== "practice" || !state.item) {
    throw new Error("can only record from the practice view");
  }
  if (state.uploading) {
    throw new Error("an attempt upload is already in flight");
  }
  return { ...state, recording: true };
}

export function recordingStopped(state: ViewState): ViewState {
  if (!state.recording) {
    throw new Error("not recording");
  }
  return { ...state, recording: false, uploading: true };
}

export function uploadFailed(state: ViewState): ViewState {
  return { ...state, uploading: false };
}

export function feedbackReceived(
  state: ViewState,
  fb: AttemptFeedback,
): ViewState {
  return {
    ...state,
    mode: "feedback",
    recording: false,
    uploading: false,
    lastFeedback: fb,
  };
}

export function backToPractice(state: ViewState): ViewState {
  return { ...state, mode: "practice" };
}

export function checkInvariants(state: ViewState): void {
  if (state.mode === "feedback" && !state.lastFeedback) {
    throw new Error("feedback mode without feedback");
  }
  if (state.recording && state.mode !== "practice") {
    throw new Error("recording outside the practice view");
  }
  if (state.recording && state.uploading) {
    throw new Error("recording during an upload");
  }
}
