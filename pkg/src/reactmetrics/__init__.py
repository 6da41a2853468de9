"""Aggregate emotion metrics, topic clustering, and distribution tests for
click-based reaction records."""

from .ingest import (
    ArticleRecord,
    Corpus,
    REACTIONS,
    ReactionCounts,
    SPECIAL_REACTIONS,
    ShareRecord,
    aggregate_articles,
    filter_special,
    load_corpus,
    load_shares,
)
from .weighting import IdfTable, WeightedReactions, build_idf, reaction_frequency, rf_idf
from .metrics import (
    EmotionScores,
    diversity,
    divint_index,
    intensity,
    js_distance,
    polarity,
    score_article,
    special_distribution,
    total_reactions,
    valence,
)
from .stats import (
    DescriptiveStats,
    KsResult,
    describe,
    ks_two_sample,
    presence_tables,
    spearman,
    topic_metric_test,
)
from .config import PipelineConfig
from .pipeline import run_pipeline

__version__ = "0.1.0"
