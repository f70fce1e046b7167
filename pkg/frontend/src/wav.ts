// Re-encode captured audio to the service contract: WAV, PCM s16le,
// mono, 16 kHz. Browsers capture at whatever rate the device uses, so
// resample before encoding.

export const TARGET_RATE = 16000;

/** Average multichannel sample data down to one channel. */
export function downmix(channels: Float32Array[]): Float32Array {
  if (channels.length === 0) {
    return new Float32Array(0);
  }
  if (channels.length === 1) {
    return channels[0];
  }
  const n = channels[0].length;
  const out = new Float32Array(n);
  for (let i = 0; i < n; i++) {
    let sum = 0;
    for (const ch of channels) {
      sum += ch[i];
    }
    out[i] = sum / channels.length;
  }
  return out;
}

/** Linear-interpolation resample from `sourceRate` to `targetRate`. */
export function resample(
  samples: Float32Array,
  sourceRate: number,
  targetRate: number = TARGET_RATE,
): Float32Array {
  if (sourceRate <= 0 || targetRate <= 0) {
    throw new Error("sample rates must be positive");
  }
  if (sourceRate === targetRate || samples.length === 0) {
    return samples;
  }
  const outLen = Math.max(1, Math.round((samples.length * targetRate) / sourceRate));
  const out = new Float32Array(outLen);
  const step = (samples.length - 1) / Math.max(1, outLen - 1);
  for (let i = 0; i < outLen; i++) {
    const pos = i * step;
    const lo = Math.floor(pos);
    const hi = Math.min(lo + 1, samples.length - 1);
    const frac = pos - lo;
    out[i] = samples[lo] * (1 - frac) + samples[hi] * frac;
  }
  return out;
}

/** Encode mono float samples as a 16-bit PCM WAV file. */
export function encodeWav(
  samples: Float32Array,
  sampleRate: number = TARGET_RATE,
): ArrayBuffer {
  const dataLen = samples.length * 2;
  const buf = new ArrayBuffer(44 + dataLen);
  const view = new DataView(buf);
  const writeAscii = (offset: number, text: string) => {
    for (let i = 0; i < text.length; i++) {
      view.setUint8(offset + i, text.charCodeAt(i));
    }
  };

  writeAscii(0, "RIFF");
  view.setUint32(4, 36 + dataLen, true);
  writeAscii(8, "WAVE");
  writeAscii(12, "fmt ");
  view.setUint32(16, 16, true); // fmt chunk size
  view.setUint16(20, 1, true); // PCM
  view.setUint16(22, 1, true); // mono
  view.setUint32(24, sampleRate, true);
  view.setUint32(28, sampleRate * 2, true); // byte rate
  view.setUint16(32, 2, true); // block align
  view.setUint16(34, 16, true); // bits per sample
  writeAscii(36, "data");
  view.setUint32(40, dataLen, true);

  for (let i = 0; i < samples.length; i++) {
    const clamped = Math.max(-1, Math.min(1, samples[i]));
    view.setInt16(44 + i * 2, Math.round(clamped * 32767), true);
  }
  return buf;
}

/** Full pipeline: downmix, resample to 16 kHz, encode as a WAV blob part. */
export function toServiceWav(
  channels: Float32Array[],
  sourceRate: number,
): ArrayBuffer {
  return encodeWav(resample(downmix(channels), sourceRate));
}
