#!/usr/bin/env python3
"""Regenerate the bundled share fixture (data/fixture_shares.jsonl).

The file is deterministic for a given seed; the repository copy was built
with the defaults below. A CSV twin with identical content is written next
to it for exercising the CSV reader.
"""

import argparse
import csv
import json
from pathlib import Path

from reactmetrics.synthetic import make_share_rows

COLUMNS = ["article_id", "page_id_hash", "lang", "text", "like", "love", "wow",
           "laughter", "sad", "anger", "reshares", "title", "abstract", "pub_date"]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--articles", type=int, default=200)
    parser.add_argument("--seed", type=int, default=20170)
    parser.add_argument("--out", default=str(Path(__file__).parent.parent / "data"))
    args = parser.parse_args()

    rows = make_share_rows(n_articles=args.articles, seed=args.seed)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    jsonl_path = out_dir / "fixture_shares.jsonl"
    with open(jsonl_path, "w", encoding="utf-8", newline="") as fh:
        for row in rows:
            fh.write(json.dumps(row) + "\n")

    csv_path = out_dir / "fixture_shares.csv"
    with open(csv_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)

    print(f"wrote {len(rows)} share rows for {args.articles} articles")
    print(f"  {jsonl_path}")
    print(f"  {csv_path}")


if __name__ == "__main__":
    main()
