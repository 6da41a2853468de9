#!/usr/bin/env python3
"""Train LDA models across a topic-count grid and print the coherence table.

Useful for choosing a topic count before a full pipeline run: shows the
(t, coherence) curve and the top words of the best model's topics.

    python scripts/topic_grid_experiment.py --input data/fixture_shares.jsonl \
        --grid 3,4,5,6 --iterations 300 --min-df 5
"""

import argparse

from reactmetrics.ingest import filter_special, load_corpus
from reactmetrics.topics.coherence import select_model
from reactmetrics.topics.lda import assign_topics, top_words
from reactmetrics.topics.preprocess import preprocess


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--input", required=True)
    parser.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    parser.add_argument("--grid", default="15,20,25,30,35,40,45")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--iterations", type=int, default=500)
    parser.add_argument("--min-df", type=int, default=15)
    parser.add_argument("--max-df-ratio", type=float, default=0.5)
    args = parser.parse_args()

    corpus = filter_special(load_corpus(args.input, args.format))
    docs, vocab = preprocess(corpus, min_df=args.min_df, max_df_ratio=args.max_df_ratio)
    print(f"{len(docs)} documents, {len(vocab)} vocabulary terms")

    grid = [int(t) for t in args.grid.split(",") if t.strip()]
    best, table = select_model(docs, vocab, t_grid=grid, seed=args.seed,
                               iterations=args.iterations)

    print("\n  t   coherence")
    for t, coherence in table:
        marker = " <- selected" if t == best.t else ""
        print(f"{t:4d}   {coherence:+.4f}{marker}")

    counts = {}
    for a in assign_topics(best):
        counts[a.topic] = counts.get(a.topic, 0) + 1
    print(f"\ntop words for t={best.t}:")
    for k, words in enumerate(top_words(best, 10), start=1):
        print(f"  topic {k:2d} ({counts.get(k, 0):4d} articles): {', '.join(words)}")


if __name__ == "__main__":
    main()
