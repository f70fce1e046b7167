# -*- coding: utf-8 -*-
"""Command-line entry points.

    proncoach validate --corpus data/corpus.json --assets data/assets
    proncoach generate --n 400 --seed 7 --out data/
    proncoach evaluate --corpus ... --assets ... --rates 0.1,0.1,0.1,0.1 \
                       --trials 5 --seed 11 [--out report.json]
    proncoach score    --corpus ... --assets ... --attempts attempts.jsonl
    proncoach serve    [--config cfg.json] [--port N] [--corpus ...] \
                       [--assets ...] [--recognizer mock|sidecar] [--seed N]

serve also honours the PRONCOACH_CONFIG environment variable, which
overrides --config.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import arabic_text, corpus as corpus_mod, evaluation, generate, pipeline
from .acoustic import ErrorRates, Hypothesis
from .corpus import NotFound
from .service import ServiceConfig, create_app


def _load_corpus_or_die(corpus_path: str, asset_root: str):
    try:
        return corpus_mod.load_corpus(corpus_path, asset_root)
    except (corpus_mod.ParseError, corpus_mod.ValidationError) as e:
        print(f"invalid corpus: {e}", file=sys.stderr)
        sys.exit(1)


def cmd_validate(args) -> int:
    try:
        c = corpus_mod.load_corpus(args.corpus, args.assets)
    except (corpus_mod.ParseError, corpus_mod.ValidationError) as e:
        print(f"INVALID: {e}")
        return 1
    print(f"OK: {len(c)} items, assets under {c.asset_root}")
    return 0


def cmd_generate(args) -> int:
    if args.n < 1:
        print("need --n >= 1", file=sys.stderr)
        return 2
    out_dir = Path(args.out)
    corpus_path = generate.generate_corpus(args.n, args.seed, out_dir)
    # Self-check: generated output must load cleanly.
    c = corpus_mod.load_corpus(corpus_path, out_dir / "assets")
    print(f"wrote {corpus_path} with {len(c)} items")
    return 0


def _parse_rates(text: str) -> ErrorRates:
    parts = [float(p) for p in text.split(",")]
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(
            "rates must be p_sub_full,p_sub_diac,p_del,p_ins"
        )
    return ErrorRates(*parts)


def cmd_evaluate(args) -> int:
    c = _load_corpus_or_die(args.corpus, args.assets)
    report = evaluation.evaluate_detection(c, args.rates, args.trials, args.seed)
    text = json.dumps(report, ensure_ascii=False, sort_keys=True, indent=1)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    print(text)
    overall = report["overall"]
    print(
        f"\ninjected={overall['injected']} predicted={overall['predicted']} "
        f"exact F1={overall['exact']['f1']:.3f} "
        f"type-only F1={overall['type_only']['f1']:.3f}",
        file=sys.stderr,
    )
    return 0


def cmd_score(args) -> int:
    c = _load_corpus_or_die(args.corpus, args.assets)
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    failures = 0
    with open(args.attempts, encoding="utf-8") as f:
        for line_no, line in enumerate(f, 1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
                item = corpus_mod.get_item(c, record["item_id"])
                gs = arabic_text.segment_graphemes(
                    arabic_text.normalize(record["hypothesis_text"])
                )
                result = pipeline.score_attempt(item, Hypothesis(graphemes=gs))
                payload = result.to_dict()
            except (json.JSONDecodeError, KeyError, NotFound,
                    arabic_text.MalformedText) as e:
                payload = {"error": type(e).__name__, "line": line_no,
                           "detail": str(e)}
                failures += 1
            out.write(json.dumps(payload, ensure_ascii=False) + "\n")
    if out is not sys.stdout:
        out.close()
    return 1 if failures else 0


def cmd_serve(args) -> int:
    config_path = os.environ.get("PRONCOACH_CONFIG") or args.config
    cfg = ServiceConfig.from_file(config_path) if config_path else ServiceConfig()
    if args.port is not None:
        cfg.port = args.port
    if args.corpus is not None:
        cfg.corpus_path = args.corpus
    if args.assets is not None:
        cfg.asset_root = args.assets
    if args.recognizer is not None:
        cfg.recognizer = args.recognizer
    if args.seed is not None:
        cfg.seed = args.seed

    import uvicorn

    app = create_app(cfg)
    uvicorn.run(app, host=cfg.host, port=cfg.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="proncoach")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a corpus file")
    p.add_argument("--corpus", required=True)
    p.add_argument("--assets", required=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("generate", help="generate a corpus with assets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("evaluate", help="error-injection detection benchmark")
    p.add_argument("--corpus", required=True)
    p.add_argument("--assets", required=True)
    p.add_argument("--rates", type=_parse_rates,
                   default=ErrorRates(0.1, 0.1, 0.1, 0.1),
                   help="p_sub_full,p_sub_diac,p_del,p_ins")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("score", help="batch-score a JSONL attempts file")
    p.add_argument("--corpus", required=True)
    p.add_argument("--assets", required=True)
    p.add_argument("--attempts", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--config")
    p.add_argument("--port", type=int)
    p.add_argument("--corpus")
    p.add_argument("--assets")
    p.add_argument("--recognizer", choices=["mock", "sidecar"])
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
