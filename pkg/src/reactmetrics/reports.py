"""Deterministic CSV/JSON emitters for every pipeline artifact.

All writers sort or fix their row order, use plain ``str()`` float
formatting (full round-trip precision), and write LF newlines, so a re-run
with identical inputs produces byte-identical files.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .ingest import Corpus, REACTIONS
from .metrics import EmotionScores
from .stats import DescriptiveStats, KsResult, spearman
from .topics.lda import TopicAssignment, TopicModel, top_words
from .weighting import IdfTable, WeightedReactions


def _write_rows(path: str | Path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def read_table(path: str | Path) -> tuple[list[str], list[dict[str, str]]]:
    """Generic reader for any CSV this module writes."""
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        return list(reader.fieldnames or []), list(reader)


def write_metrics_csv(path: str | Path, scores: Sequence[EmotionScores]) -> None:
    header = ["article_id", "valence", "intensity", "diversity", "divint_index",
              "polarity", "total_reacts", "reshares"]
    rows = [
        [s.article_id, s.valence, s.intensity, s.diversity, s.divint_index,
         s.polarity, s.total_reacts, s.reshares]
        for s in scores
    ]
    _write_rows(path, header, rows)


def write_idf_csv(path: str | Path, idf: IdfTable) -> None:
    header = ["reaction", "presence_proportion", "idf"]
    rows = [[r, idf.presence[r], idf.idf[r]] for r in REACTIONS]
    _write_rows(path, header, rows)


def write_rfidf_csv(path: str | Path, weighted: Sequence[WeightedReactions]) -> None:
    header = ["article_id"] + list(REACTIONS) + [f"{r}_defined" for r in REACTIONS]
    rows = [
        [w.article_id]
        + [w.rfidf[r] for r in REACTIONS]
        + [int(w.defined[r]) for r in REACTIONS]
        for w in weighted
    ]
    _write_rows(path, header, rows)


def write_descriptive_csv(path: str | Path, stats: Mapping[str, DescriptiveStats]) -> None:
    header = ["feature", "mean", "std_dev", "min", "q25", "median", "q75", "max", "n", "sd_defined"]
    rows = [
        [name, s.mean, s.std_dev, s.min, s.q25, s.median, s.q75, s.max, s.n, int(s.sd_defined)]
        for name, s in stats.items()
    ]
    _write_rows(path, header, rows)


def write_presence_csv(path: str | Path, presence: Mapping[str, float]) -> None:
    _write_rows(path, ["reaction", "presence_proportion"],
                [[r, presence[r]] for r in REACTIONS])


def write_pairs_csv(path: str | Path, pairs: Mapping[tuple[str, str], float]) -> None:
    """Symmetric co-presence matrix; the diagonal is left blank."""
    header = ["reaction"] + list(REACTIONS)
    rows = []
    for r in REACTIONS:
        row = [r]
        for s in REACTIONS:
            if r == s:
                row.append("")
            else:
                row.append(pairs.get((r, s), pairs.get((s, r))))
        rows.append(row)
    _write_rows(path, header, rows)


def spearman_matrix(corpus: Corpus) -> dict[tuple[str, str], float | None]:
    features = REACTIONS + ("reshares",)
    columns = {f: [a.reactions.get(f) for a in corpus] for f in features}
    out = {}
    for a in features:
        for b in features:
            out[(a, b)] = 1.0 if a == b else spearman(columns[a], columns[b])
    return out


def write_spearman_csv(path: str | Path, matrix: Mapping[tuple[str, str], float | None]) -> None:
    features = REACTIONS + ("reshares",)
    header = ["feature"] + list(features)
    rows = []
    for a in features:
        row = [a]
        for b in features:
            value = matrix[(a, b)]
            row.append("" if value is None else value)
        rows.append(row)
    _write_rows(path, header, rows)


def write_topics_csv(path: str | Path, model: TopicModel, assignments: Sequence[TopicAssignment]) -> None:
    header = ["topic_no", "article_count", "top_10_words"]
    counts = {k: 0 for k in range(1, model.t + 1)}
    for a in assignments:
        counts[a.topic] += 1
    words = top_words(model, 10)
    rows = [[k, counts[k], ";".join(words[k - 1])] for k in range(1, model.t + 1)]
    _write_rows(path, header, rows)


def write_assignments_csv(path: str | Path, assignments: Sequence[TopicAssignment]) -> None:
    _write_rows(path, ["article_id", "topic", "prob"],
                [[a.article_id, a.topic, a.prob] for a in assignments])


def write_model_selection_csv(path: str | Path, table: Sequence[tuple[int, float]]) -> None:
    _write_rows(path, ["t", "coherence"], [[t, c] for t, c in table])


def write_ks_csv(path: str | Path, rows: Sequence[tuple[int, str, str, KsResult]]) -> None:
    header = ["topic_no", "keywords", "metric", "ks_statistic", "p_value", "reject_null"]
    out = [
        [topic_no, keywords, metric, res.statistic, res.p_value, int(res.reject_null)]
        for topic_no, keywords, metric, res in rows
    ]
    _write_rows(path, header, out)


def hexbin_counts(
    xs: Sequence[float], ys: Sequence[float], gridsize: int = 20
) -> list[tuple[float, float, int]]:
    """Hexagonal binning on two interleaved lattices, matplotlib-style.

    Returns (x_center, y_center, count) triples sorted by center; empty
    cells are omitted.
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.size == 0:
        return []
    xmin, xmax = float(xs.min()), float(xs.max())
    ymin, ymax = float(ys.min()), float(ys.max())
    nx = gridsize
    ny = max(int(round(nx / math.sqrt(3))), 1)
    sx = (xmax - xmin) / nx or 1.0
    sy = (ymax - ymin) / ny or 1.0
    ix = (xs - xmin) / sx
    iy = (ys - ymin) / sy
    # nearest center on the integer lattice vs the half-offset lattice
    cx1, cy1 = np.round(ix), np.round(iy)
    cx2, cy2 = np.floor(ix) + 0.5, np.floor(iy) + 0.5
    d1 = (ix - cx1) ** 2 + 3.0 * (iy - cy1) ** 2
    d2 = (ix - cx2) ** 2 + 3.0 * (iy - cy2) ** 2
    use2 = d2 < d1
    cx = np.where(use2, cx2, cx1)
    cy = np.where(use2, cy2, cy1)
    cells: dict[tuple[float, float], int] = {}
    for x, y in zip(cx, cy):
        key = (float(x), float(y))
        cells[key] = cells.get(key, 0) + 1
    return [
        (xmin + x * sx, ymin + y * sy, n)
        for (x, y), n in sorted(cells.items())
    ]


def regression_line(xs: Sequence[float], ys: Sequence[float]) -> tuple[float, float]:
    """Least-squares slope and intercept; slope 0 for a degenerate x."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    dx = xs - xs.mean()
    sxx = float(dx @ dx)
    if sxx == 0.0:
        return 0.0, float(ys.mean())
    slope = float(dx @ (ys - ys.mean())) / sxx
    return slope, float(ys.mean() - slope * xs.mean())


def emit_plot_data(
    out_dir: str | Path,
    scores: Sequence[EmotionScores],
    corpus: Corpus,
    histogram_bins: int = 40,
    hexbin_gridsize: int = 20,
) -> dict[str, str]:
    """Plot-ready data files: divint/reshare hexbin + fit, polarity
    histogram, and per-reaction totals."""
    out_dir = Path(out_dir)
    xs = [s.divint_index for s in scores]
    ys = [math.log1p(s.reshares) for s in scores]

    hex_path = out_dir / "plot_hexbin.csv"
    _write_rows(hex_path, ["divint_index", "log1p_reshares", "count"],
                hexbin_counts(xs, ys, hexbin_gridsize))

    slope, intercept = regression_line(xs, ys)
    reg_path = out_dir / "plot_hexbin_regression.csv"
    _write_rows(reg_path, ["slope", "intercept", "n"], [[slope, intercept, len(xs)]])

    hist_path = out_dir / "plot_polarity_hist.csv"
    counts, edges = np.histogram([s.polarity for s in scores], bins=histogram_bins, range=(-1.0, 1.0))
    _write_rows(hist_path, ["bin_left", "bin_right", "count"],
                [[float(edges[i]), float(edges[i + 1]), int(counts[i])] for i in range(len(counts))])

    bar_path = out_dir / "plot_reaction_totals.csv"
    totals = {r: sum(a.reactions.get(r) for a in corpus) for r in REACTIONS}
    _write_rows(bar_path, ["reaction", "total"], [[r, totals[r]] for r in REACTIONS])

    return {
        "hexbin": str(hex_path),
        "hexbin_regression": str(reg_path),
        "polarity_hist": str(hist_path),
        "reaction_totals": str(bar_path),
    }
