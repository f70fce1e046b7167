import { toServiceWav } from "./wav.js";

// Press-and-hold microphone capture. MediaRecorder hands back a
// compressed container at the device's native rate, so the blob is
// decoded with an AudioContext and re-encoded to the service's exact
// WAV contract (16 kHz mono s16le) before upload.

export class MicDenied extends Error {}

export class Recorder {
  private stream: MediaStream | null = null;
  private recorder: MediaRecorder | null = null;
  private chunks: Blob[] = [];

  async start(): Promise<void> {
    try {
      this.stream = await navigator.mediaDevices.getUserMedia({ audio: true });
    } catch (err) {
      throw new MicDenied(String(err));
    }
    this.chunks = [];
    this.recorder = new MediaRecorder(this.stream);
    this.recorder.ondataavailable = (ev) => {
      if (ev.data.size > 0) {
        this.chunks.push(ev.data);
      }
    };
    this.recorder.start();
  }

  /** Stop capture and return the attempt as a service-contract WAV. */
  async stop(): Promise<ArrayBuffer> {
    const recorder = this.recorder;
    const stream = this.stream;
    if (!recorder || !stream) {
      throw new Error("not recording");
    }
    this.recorder = null;
    this.stream = null;

    await new Promise<void>((resolve) => {
      recorder.onstop = () => resolve();
      recorder.stop();
    });
    stream.getTracks().forEach((t) => t.stop());

    const raw = await new Blob(this.chunks, { type: recorder.mimeType }).arrayBuffer();
    const ctx = new AudioContext();
    try {
      const decoded = await ctx.decodeAudioData(raw);
      const channels: Float32Array[] = [];
      for (let ch = 0; ch < decoded.numberOfChannels; ch++) {
        channels.push(decoded.getChannelData(ch));
      }
      return toServiceWav(channels, decoded.sampleRate);
    } finally {
      await ctx.close();
    }
  }
}
