# -*- coding: utf-8 -*-
"""Audio side of the pipeline: WAV decoding, MFCC features, DTW similarity
against the reference recording, the pluggable recognizer port with a
deterministic mock, and textual/acoustic score fusion.

Audio contract is strict: WAV, PCM signed 16-bit little-endian, mono,
16 kHz. Features are the standard 13-coefficient MFCC setup (25 ms Hamming
window, 10 ms hop, 26 mel filters over 0..8 kHz, pre-emphasis 0.97).
"""

from __future__ import annotations

import io
import random
import wave
from dataclasses import dataclass, field
from typing import Optional, Protocol, Sequence

import numpy as np
from numba import njit
from scipy.fftpack import dct
from scipy.spatial.distance import cdist

from .arabic_text import (
    ARABIC_LETTERS,
    DIACRITICS,
    SHADDA,
    VOWEL_MARKS,
    Grapheme,
    GraphemeString,
    segment_graphemes,
)
from .corpus import PracticeItem

SAMPLE_RATE = 16_000
MAX_CLIP_SECONDS = 30.0

WINDOW_MS = 25
HOP_MS = 10
WINDOW_SAMPLES = SAMPLE_RATE * WINDOW_MS // 1000   # 400
HOP_SAMPLES = SAMPLE_RATE * HOP_MS // 1000         # 160
NUM_MEL_FILTERS = 26
NUM_CEPSTRA = 13
PRE_EMPHASIS = 0.97
LOG_FLOOR = 1e-10

DEFAULT_TEXT_WEIGHT = 0.7
DEFAULT_ACOUSTIC_WEIGHT = 0.3


class UnsupportedFormat(ValueError):
    """WAV exists but violates the s16le/mono/16kHz contract."""


class CorruptFile(ValueError):
    """Bytes do not decode as a WAV container."""


class TooShort(ValueError):
    """Clip shorter than one analysis window."""


class EmptyFeatures(ValueError):
    pass


class InvalidRates(ValueError):
    pass


class OutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class AudioClip:
    samples: np.ndarray  # float in [-1, 1]
    sample_rate: int = SAMPLE_RATE

    @property
    def duration(self) -> float:
        return len(self.samples) / self.sample_rate


@dataclass(frozen=True)
class FeatureMatrix:
    frames: np.ndarray  # shape (num_frames, NUM_CEPSTRA)


@dataclass(frozen=True)
class Hypothesis:
    graphemes: GraphemeString
    confidences: Optional[tuple[float, ...]] = None

    def __post_init__(self):
        if self.confidences is not None and len(self.confidences) != len(self.graphemes):
            raise ValueError("confidences length must match grapheme count")


class RecognizerPort(Protocol):
    """Stand-in for a real acoustic recognizer; implementations must be
    deterministic for identical inputs and configuration."""

    def recognize(self, audio: Optional[AudioClip], item: PracticeItem) -> Hypothesis: ...


def decode_wav(data: bytes) -> AudioClip:
    """Decode WAV bytes to floats in [-1, 1]; rejects anything that is not
    PCM s16le mono 16 kHz."""
    try:
        with wave.open(io.BytesIO(data), "rb") as wf:
            channels = wf.getnchannels()
            rate = wf.getframerate()
            width = wf.getsampwidth()
            nframes = wf.getnframes()
            raw = wf.readframes(nframes)
    except (wave.Error, EOFError) as e:
        raise CorruptFile(f"not a decodable WAV file: {e}") from e
    if channels != 1 or rate != SAMPLE_RATE or width != 2:
        raise UnsupportedFormat(
            f"need mono 16000 Hz s16le, got {channels} ch, {rate} Hz, {8 * width} bit"
        )
    pcm = np.frombuffer(raw, dtype="<i2")
    return AudioClip(samples=pcm.astype(np.float64) / 32768.0)


def encode_wav(samples: np.ndarray, sample_rate: int = SAMPLE_RATE) -> bytes:
    """Inverse of decode_wav for floats in [-1, 1]; used by asset
    generation and tests."""
    pcm = np.clip(np.asarray(samples) * 32767.0, -32768, 32767).astype("<i2")
    buf = io.BytesIO()
    with wave.open(buf, "wb") as wf:
        wf.setnchannels(1)
        wf.setsampwidth(2)
        wf.setframerate(sample_rate)
        wf.writeframes(pcm.tobytes())
    return buf.getvalue()


def _mel(hz):
    return 2595.0 * np.log10(1.0 + hz / 700.0)


def _inv_mel(mel):
    return 700.0 * (10.0 ** (mel / 2595.0) - 1.0)


def _mel_filterbank(nfft: int) -> np.ndarray:
    """Triangular filters, NUM_MEL_FILTERS x (nfft//2 + 1), 0..8 kHz."""
    low, high = _mel(0.0), _mel(SAMPLE_RATE / 2.0)
    points = _inv_mel(np.linspace(low, high, NUM_MEL_FILTERS + 2))
    bins = np.floor((nfft + 1) * points / SAMPLE_RATE).astype(int)
    fb = np.zeros((NUM_MEL_FILTERS, nfft // 2 + 1))
    for i in range(NUM_MEL_FILTERS):
        left, center, right = bins[i], bins[i + 1], bins[i + 2]
        for k in range(left, center):
            if center > left:
                fb[i, k] = (k - left) / (center - left)
        for k in range(center, right):
            if right > center:
                fb[i, k] = (right - k) / (right - center)
    return fb


_NFFT = 512
_FILTERBANK = _mel_filterbank(_NFFT)
_HAMMING = np.hamming(WINDOW_SAMPLES)


def mfcc(audio: AudioClip) -> FeatureMatrix:
    """13 MFCCs (c0 included) per 25 ms frame, 10 ms hop."""
    x = np.asarray(audio.samples, dtype=np.float64)
    if len(x) < WINDOW_SAMPLES:
        raise TooShort(f"need >= {WINDOW_SAMPLES} samples, got {len(x)}")
    emphasized = np.append(x[0], x[1:] - PRE_EMPHASIS * x[:-1])
    num_frames = (len(x) - WINDOW_SAMPLES) // HOP_SAMPLES + 1
    idx = (
        np.arange(WINDOW_SAMPLES)[None, :]
        + HOP_SAMPLES * np.arange(num_frames)[:, None]
    )
    frames = emphasized[idx] * _HAMMING
    spectrum = np.abs(np.fft.rfft(frames, n=_NFFT)) ** 2
    mel_energies = spectrum @ _FILTERBANK.T
    log_mel = np.log(np.maximum(mel_energies, LOG_FLOOR))
    cepstra = dct(log_mel, type=2, axis=1, norm="ortho")[:, :NUM_CEPSTRA]
    return FeatureMatrix(frames=cepstra)


@njit(cache=True)
def _dtw_accumulate(dist):
    n, m = dist.shape
    acc = np.empty((n, m))
    acc[0, 0] = dist[0, 0]
    for j in range(1, m):
        acc[0, j] = acc[0, j - 1] + dist[0, j]
    for i in range(1, n):
        acc[i, 0] = acc[i - 1, 0] + dist[i, 0]
        for j in range(1, m):
            best = acc[i - 1, j - 1]
            if acc[i - 1, j] < best:
                best = acc[i - 1, j]
            if acc[i, j - 1] < best:
                best = acc[i, j - 1]
            acc[i, j] = dist[i, j] + best
    return acc


def dtw_path(a: FeatureMatrix, b: FeatureMatrix) -> tuple[float, list[tuple[int, int]]]:
    """DTW with symmetric diag/horiz/vert steps, all weight 1. Returns
    (total path distance, warping path from (0,0) to (n-1,m-1))."""
    fa, fb = a.frames, b.frames
    if len(fa) == 0 or len(fb) == 0:
        raise EmptyFeatures("feature matrices must be non-empty")
    dist = cdist(fa, fb, metric="euclidean")
    n, m = dist.shape
    acc = _dtw_accumulate(dist)
    path = [(n - 1, m - 1)]
    i, j = n - 1, m - 1
    while (i, j) != (0, 0):
        candidates = []
        if i > 0 and j > 0:
            candidates.append((acc[i - 1, j - 1], (i - 1, j - 1)))
        if i > 0:
            candidates.append((acc[i - 1, j], (i - 1, j)))
        if j > 0:
            candidates.append((acc[i, j - 1], (i, j - 1)))
        _, (i, j) = min(candidates, key=lambda c: c[0])
        path.append((i, j))
    path.reverse()
    return float(acc[n - 1, m - 1]), path


def dtw_similarity(a: FeatureMatrix, b: FeatureMatrix) -> float:
    """1 / (1 + mean per-step DTW distance), in (0, 1]; 1.0 for identical
    inputs."""
    total, path = dtw_path(a, b)
    return 1.0 / (1.0 + total / len(path))


@dataclass(frozen=True)
class ErrorRates:
    p_sub_full: float = 0.0
    p_sub_diac: float = 0.0
    p_del: float = 0.0
    p_ins: float = 0.0

    def __post_init__(self):
        for name in ("p_sub_full", "p_sub_diac", "p_del", "p_ins"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise InvalidRates(f"{name}={v} outside [0, 1]")
        if self.p_sub_full + self.p_sub_diac + self.p_del > 1.0 + 1e-12:
            raise InvalidRates("p_sub_full + p_sub_diac + p_del must be <= 1")


#: Diacritic sets a corrupted grapheme can carry: bare, or exactly one
#: vowel mark, or shadda plus an optional vowel mark.
_DIACRITIC_CHOICES: list[tuple[str, ...]] = (
    [()]
    + [(m,) for m in sorted(VOWEL_MARKS)]
    + [(SHADDA,)]
    + [(SHADDA, m) for m in sorted(VOWEL_MARKS)]
)
_BASE_CHOICES = sorted(ARABIC_LETTERS)


def _random_grapheme(rng: random.Random) -> Grapheme:
    return Grapheme(rng.choice(_BASE_CHOICES), rng.choice(_DIACRITIC_CHOICES))


def corrupt_reference(
    reference: GraphemeString, rates: ErrorRates, rng: random.Random
) -> tuple[GraphemeString, tuple[float, ...], list[tuple[str, int]]]:
    """Apply seeded per-grapheme corruptions to a reference sequence.

    Returns (hypothesis graphemes, per-grapheme confidences, ground truth).
    Ground truth entries are (kind, index) with kinds "sub_full",
    "sub_diacritic", "del" indexed by space-free reference position, and
    "ins" indexed by the space-free reference position it follows (-1 for a
    leading insertion). Space graphemes are never corrupted.
    """
    hyp: list[Grapheme] = []
    confidences: list[float] = []
    truth: list[tuple[str, int]] = []
    ref_pos = -1  # last space-free reference index consumed
    for g in reference:
        if g.is_space:
            hyp.append(g)
            confidences.append(1.0)
            continue
        ref_pos += 1
        u = rng.random()
        if u < rates.p_sub_full:
            other = rng.choice([b for b in _BASE_CHOICES if b != g.base])
            hyp.append(Grapheme(other, rng.choice(_DIACRITIC_CHOICES)))
            confidences.append(0.3)
            truth.append(("sub_full", ref_pos))
        elif u < rates.p_sub_full + rates.p_sub_diac:
            others = [d for d in _DIACRITIC_CHOICES if d != g.diacritics]
            hyp.append(Grapheme(g.base, rng.choice(others)))
            confidences.append(0.3)
            truth.append(("sub_diacritic", ref_pos))
        elif u < rates.p_sub_full + rates.p_sub_diac + rates.p_del:
            truth.append(("del", ref_pos))
        else:
            hyp.append(g)
            confidences.append(1.0)
        if rng.random() < rates.p_ins:
            hyp.append(_random_grapheme(rng))
            confidences.append(0.3)
            truth.append(("ins", ref_pos))
    return GraphemeString(tuple(hyp)), tuple(confidences), truth


def mock_recognize(
    audio: Optional[AudioClip],
    item: PracticeItem,
    rates: ErrorRates,
    seed: int,
) -> Hypothesis:
    """Deterministic test double for the recognizer: starts from the item's
    vowelized text and applies seeded corruptions. The audio content is
    ignored; only the text matters."""
    reference = segment_graphemes(item.vowelized_text)
    rng = random.Random(f"{seed}:{item.id}")
    hyp, confidences, _ = corrupt_reference(reference, rates, rng)
    return Hypothesis(graphemes=hyp, confidences=confidences)


@dataclass(frozen=True)
class MockRecognizer:
    rates: ErrorRates = field(default_factory=ErrorRates)
    seed: int = 0

    def recognize(self, audio: Optional[AudioClip], item: PracticeItem) -> Hypothesis:
        return mock_recognize(audio, item, self.rates, self.seed)


def fuse_scores(
    textual: float,
    acoustic: Optional[float],
    text_weight: float = DEFAULT_TEXT_WEIGHT,
    acoustic_weight: float = DEFAULT_ACOUSTIC_WEIGHT,
) -> float:
    """Blend the alignment-derived score with acoustic similarity; without
    acoustic evidence the textual score passes through unchanged."""
    if not 0.0 <= textual <= 1.0:
        raise OutOfRange(f"textual score {textual} outside [0, 1]")
    if acoustic is None:
        return textual
    if not 0.0 < acoustic <= 1.0:
        raise OutOfRange(f"acoustic score {acoustic} outside (0, 1]")
    return text_weight * textual + acoustic_weight * acoustic
