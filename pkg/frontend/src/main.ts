import { ApiClient } from "./api.js";
import { MicDenied, Recorder } from "./recorder.js";
import {
  renderFeedback,
  renderMicPrompt,
  renderPractice,
  renderToast,
  safePlay,
  slowPlaybackPlan,
} from "./render.js";
import * as state from "./state.js";

const api = new ApiClient(
  new URLSearchParams(location.search).get("service") ?? "",
);
const root = document.getElementById("app") as HTMLElement;
const recorder = new Recorder();
let view = state.initialState();

function update(next: state.ViewState): void {
  state.checkInvariants(next);
  view = next;
  render();
}

function render(): void {
  if (view.mode === "feedback" && view.lastFeedback) {
    const fb = view.lastFeedback;
    renderFeedback(root, fb, (ref) => api.assetUrl(ref), {
      onPlayNormal: () => playRef(fb.audio.normal_ref, 1.0),
      onPlaySlow: () => {
        const plan = slowPlaybackPlan(fb.audio);
        playRef(plan.ref, plan.rate);
      },
      onTryAgain: () => update(state.backToPractice(view)),
      onNextWord: () => void loadItem(),
    });
  } else if (view.item) {
    renderPractice(root, view.item, (ref) => api.assetUrl(ref), {
      onHoldStart: () => void startRecording(),
      onHoldEnd: () => void finishAttempt(),
      onSkip: () => void loadItem(),
    });
  }
}

function playRef(ref: string, rate: number): void {
  const audio = new Audio(api.assetUrl(ref));
  audio.playbackRate = rate;
  safePlay(audio);
}

async function loadItem(): Promise<void> {
  try {
    update(state.itemLoaded(view, await api.randomItem()));
  } catch {
    renderToast(root, "could not reach the practice service");
  }
}

async function startRecording(): Promise<void> {
  if (view.uploading || view.recording) {
    return;
  }
  try {
    await recorder.start();
    update(state.recordingStarted(view));
  } catch (err) {
    if (err instanceof MicDenied) {
      renderMicPrompt(root, () => void startRecording());
      return;
    }
    renderToast(root, "recording failed");
  }
}

async function finishAttempt(): Promise<void> {
  if (!view.recording || !view.item) {
    return;
  }
  const item = view.item;
  update(state.recordingStopped(view));
  try {
    const wav = await recorder.stop();
    update(state.feedbackReceived(view, await api.submitAttempt(item.id, wav)));
  } catch {
    update(state.uploadFailed(view));
    renderToast(root, "attempt could not be scored");
  }
}

void loadItem();
