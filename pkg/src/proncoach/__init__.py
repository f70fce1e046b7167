"""Arabic pronunciation practice: grapheme-level mispronunciation scoring,
an HTTP practice service, and evaluation tooling."""

__version__ = "0.1.0"
