"""Command-line entry point.

Exit codes: 0 success, 1 configuration/validation error, 2 runtime error.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .config import build_config, parse_t_grid, read_config_file
from .errors import ConfigError, ReactMetricsError
from .pipeline import run_pipeline


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reactmetrics",
        description="Emotion metrics, topic model, and distribution tests over "
                    "article reaction records.",
    )
    parser.add_argument("--config", help="key=value config file; flags override it")
    parser.add_argument("--input", help="share records file (JSONL or CSV)")
    parser.add_argument("--format", choices=["jsonl", "csv"], help="input format (default jsonl)")
    parser.add_argument("--out", help="output directory (default ./out)")
    parser.add_argument("--topics-grid", help="comma-separated topic counts, e.g. 15,20,25")
    parser.add_argument("--seed", type=int, help="RNG seed for the topic model")
    parser.add_argument("--iterations", type=int, help="Gibbs sampling iterations")
    parser.add_argument("--min-df", type=int, help="minimum document frequency for vocabulary terms")
    parser.add_argument("--max-df-ratio", type=float, help="maximum document-frequency ratio")
    parser.add_argument("--ks-alpha", type=float, help="significance level for the KS tests")
    parser.add_argument("--ks-rule", choices=["two_tailed", "conventional"],
                        help="decision rule applied to KS p-values")
    parser.add_argument("--bins", type=int, help="polarity histogram bin count")
    parser.add_argument("--stopwords", help="stopword file, one term per line")
    parser.add_argument("--log-level", default="INFO",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        file_values = read_config_file(args.config) if args.config else {}
        config = build_config(
            file_values,
            input_path=args.input,
            input_format=args.format,
            output_dir=args.out,
            t_grid=parse_t_grid(args.topics_grid) if args.topics_grid is not None else None,
            seed=args.seed,
            iterations=args.iterations,
            min_df=args.min_df,
            max_df_ratio=args.max_df_ratio,
            ks_alpha=args.ks_alpha,
            ks_rule=args.ks_rule,
            histogram_bins=args.bins,
            stopwords_path=args.stopwords,
        )
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 1

    try:
        summary = run_pipeline(config)
    except FileNotFoundError as exc:
        print(f"error: input file not found: {exc}", file=sys.stderr)
        return 2
    except ReactMetricsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    print(f"analyzed {summary['articles_analyzed']} of {summary['articles_loaded']} articles")
    print(f"topic model: t={summary['selected_t']} coherence={summary['selected_coherence']:.4f}")
    print(f"KS tests run: {summary['ks_tests_run']}")
    print(f"artifacts in {config.output_dir}: {', '.join(summary['files'])}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
