"""End-to-end pipeline: ingest, filter, weight, score, topics, tests, reports.

The run is a pure function of (input file, config): no timestamps or other
run-varying values reach the output files, so identical runs produce
byte-identical artifacts.
"""

from __future__ import annotations

import json
import logging
from contextlib import contextmanager
from pathlib import Path

from . import reports
from .config import PipelineConfig
from .errors import EmptyPartition, PipelineStageError, ReactMetricsError
from .ingest import filter_special, load_corpus
from .metrics import score_article
from .stats import describe, presence_tables, topic_metric_test
from .topics.coherence import select_model
from .topics.lda import assign_topics, save_model, top_words
from .topics.preprocess import preprocess
from .topics.stopwords import load_stopwords
from .weighting import build_idf, rf_idf

log = logging.getLogger(__name__)

KS_REPORT_METRICS = ("diversity", "polarity")


@contextmanager
def _stage(name: str):
    log.info("stage %s", name)
    try:
        yield
    except ReactMetricsError as exc:
        raise PipelineStageError(name, exc) from exc


def run_pipeline(config: PipelineConfig) -> dict:
    """Execute every stage and write all artifacts; returns the run summary."""
    config.validate()
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    with _stage("ingest"):
        raw_corpus = load_corpus(config.input_path, config.input_format)
        corpus = filter_special(raw_corpus)

    with _stage("weighting"):
        idf = build_idf(corpus)
        reports.write_idf_csv(out_dir / "idf.csv", idf)
        weighted = [rf_idf(a.reactions, idf, article_id=a.article_id) for a in corpus]
        reports.write_rfidf_csv(out_dir / "rfidf.csv", weighted)

    with _stage("metrics"):
        scores = [score_article(a.reactions, article_id=a.article_id) for a in corpus]
        reports.write_metrics_csv(out_dir / "metrics.csv", scores)

    with _stage("stats"):
        reports.write_descriptive_csv(out_dir / "descriptive_stats.csv", describe(corpus))
        presence, pairs = presence_tables(corpus)
        reports.write_presence_csv(out_dir / "presence.csv", presence)
        reports.write_pairs_csv(out_dir / "presence_pairs.csv", pairs)
        reports.write_spearman_csv(out_dir / "spearman.csv", reports.spearman_matrix(corpus))

    with _stage("topics"):
        stopwords = load_stopwords(config.stopwords_path)
        docs, vocab = preprocess(
            corpus,
            stopwords=stopwords,
            min_df=config.min_df,
            max_df_ratio=config.max_df_ratio,
            npmi_threshold=config.npmi_threshold,
            min_pair_count=config.min_pair_count,
        )
        model, grid_table = select_model(
            docs,
            vocab,
            t_grid=config.t_grid,
            seed=config.seed,
            iterations=config.iterations,
            alpha=config.alpha_lda,
            beta=config.beta_lda,
        )
        reports.write_model_selection_csv(out_dir / "model_selection.csv", grid_table)
        save_model(model, out_dir / "model.json")
        assignments = assign_topics(model)
        reports.write_topics_csv(out_dir / "topics.csv", model, assignments)
        reports.write_assignments_csv(out_dir / "assignments.csv", assignments)

    with _stage("ks_tests"):
        keyword_lists = top_words(model, 3)
        assignment_map = {a.article_id: a.topic for a in assignments}
        ks_rows = []
        for topic_no in range(1, model.t + 1):
            keywords = ";".join(keyword_lists[topic_no - 1])
            for metric in KS_REPORT_METRICS:
                try:
                    result = topic_metric_test(
                        assignment_map, scores, topic_no, metric,
                        alpha=config.ks_alpha, rule=config.ks_rule,
                    )
                except EmptyPartition:
                    log.info("skipping KS test for topic %d (%s): empty partition", topic_no, metric)
                    continue
                ks_rows.append((topic_no, keywords, metric, result))
        reports.write_ks_csv(out_dir / "ks_report.csv", ks_rows)

    with _stage("plot_data"):
        plot_files = reports.emit_plot_data(
            out_dir, scores, corpus,
            histogram_bins=config.histogram_bins,
            hexbin_gridsize=config.hexbin_gridsize,
        )

    summary = {
        "input_digest": raw_corpus.provenance.source_digest if raw_corpus.provenance else None,
        "articles_loaded": len(raw_corpus),
        "articles_analyzed": len(corpus),
        "documents_modeled": len(docs),
        "vocabulary_size": len(vocab),
        "selected_t": model.t,
        "selected_coherence": model.coherence,
        "ks_tests_run": len(ks_rows),
        "files": sorted(
            [
                "idf.csv", "rfidf.csv", "metrics.csv", "descriptive_stats.csv",
                "presence.csv", "presence_pairs.csv", "spearman.csv",
                "model_selection.csv", "model.json", "topics.csv",
                "assignments.csv", "ks_report.csv",
            ]
            + [Path(p).name for p in plot_files.values()]
        ),
    }
    (out_dir / "summary.json").write_text(json.dumps(summary, indent=2) + "\n", encoding="utf-8")
    return summary
