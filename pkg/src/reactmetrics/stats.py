"""Descriptive statistics, rank correlation, and two-sample KS testing."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import EmptyCorpus, EmptyPartition, EmptySample, LengthMismatch
from .ingest import Corpus, REACTIONS
from .metrics import EmotionScores

log = logging.getLogger(__name__)

KS_RULES = ("two_tailed", "conventional")

# Metric names accepted by topic_metric_test, mapped to EmotionScores fields.
METRIC_FIELDS = {
    "diversity": "diversity",
    "polarity": "polarity",
    "intensity": "intensity",
    "divint": "divint_index",
}


@dataclass(frozen=True)
class DescriptiveStats:
    mean: float
    std_dev: float
    min: float
    q25: float
    median: float
    q75: float
    max: float
    n: int
    sd_defined: bool = True


@dataclass(frozen=True)
class KsResult:
    statistic: float
    p_value: float
    n1: int
    n2: int
    reject_null: bool
    alpha: float
    rule: str = "two_tailed"


def describe_sample(values: Sequence[float]) -> DescriptiveStats:
    """Mean, sample SD (n-1), and linearly interpolated quartiles."""
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise EmptyCorpus("cannot describe an empty sample")
    if arr.size == 1:
        sd, sd_defined = 0.0, False
    else:
        sd, sd_defined = float(np.std(arr, ddof=1)), True
    q25, q50, q75 = (float(np.percentile(arr, q)) for q in (25, 50, 75))
    return DescriptiveStats(
        mean=float(np.mean(arr)),
        std_dev=sd,
        min=float(np.min(arr)),
        q25=q25,
        median=q50,
        q75=q75,
        max=float(np.max(arr)),
        n=int(arr.size),
        sd_defined=sd_defined,
    )


def describe(corpus: Corpus) -> dict[str, DescriptiveStats]:
    """One row per reaction type plus reshares."""
    if len(corpus) == 0:
        raise EmptyCorpus("cannot describe an empty corpus")
    out = {}
    for name in REACTIONS + ("reshares",):
        out[name] = describe_sample([a.reactions.get(name) for a in corpus])
    return out


def presence_tables(corpus: Corpus):
    """Per-reaction presence proportions and pairwise co-presence proportions.

    Returns (presence, pairs) where pairs maps (r, s) with r before s in the
    canonical reaction order; the matrix is symmetric so only the upper
    triangle is materialized.
    """
    n = len(corpus)
    if n == 0:
        raise EmptyCorpus("cannot tabulate an empty corpus")
    has = {r: np.array([a.reactions.get(r) >= 1 for a in corpus]) for r in REACTIONS}
    presence = {r: float(np.mean(has[r])) for r in REACTIONS}
    pairs = {}
    for i, r in enumerate(REACTIONS):
        for s in REACTIONS[i + 1 :]:
            pairs[(r, s)] = float(np.mean(has[r] & has[s]))
    return presence, pairs


def _average_ranks(values: np.ndarray) -> np.ndarray:
    """Fractional ranks starting at 1; tied values share the average rank."""
    order = np.argsort(values, kind="stable")
    ranks = np.empty(values.size, dtype=float)
    sorted_vals = values[order]
    i = 0
    while i < values.size:
        j = i
        while j + 1 < values.size and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def spearman(x: Sequence[float], y: Sequence[float]) -> float | None:
    """Pearson correlation of average ranks; None when either sample is constant."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.size != y.size:
        raise LengthMismatch(f"samples have lengths {x.size} and {y.size}")
    if x.size < 2:
        raise LengthMismatch("need at least 2 paired observations")
    rx = _average_ranks(x)
    ry = _average_ranks(y)
    dx = rx - rx.mean()
    dy = ry - ry.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        return None
    return float((dx @ dy) / math.sqrt(sxx * syy))


def ks_statistic(sample1: Sequence[float], sample2: Sequence[float]) -> float:
    """Supremum gap between the two ECDFs, evaluated at all pooled distinct points."""
    s1 = np.sort(np.asarray(sample1, dtype=float))
    s2 = np.sort(np.asarray(sample2, dtype=float))
    if s1.size == 0 or s2.size == 0:
        raise EmptySample("both samples need at least one observation")
    pooled = np.unique(np.concatenate([s1, s2]))
    cdf1 = np.searchsorted(s1, pooled, side="right") / s1.size
    cdf2 = np.searchsorted(s2, pooled, side="right") / s2.size
    return float(np.max(np.abs(cdf1 - cdf2)))


def _kolmogorov_sf(lam: float, tol: float = 1e-12, max_terms: int = 100_000) -> float:
    """Tail probability Q(lam) = 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 lam^2).

    Alternating series truncated once a term drops below ``tol``; for very
    small lam the terms stay near 1 for many k, so the sum is capped and
    clamped into [0, 1].
    """
    if lam <= 0.0:
        return 1.0
    total = 0.0
    sign = 1.0
    for k in range(1, max_terms + 1):
        term = math.exp(-2.0 * k * k * lam * lam)
        total += sign * term
        if term < tol:
            break
        sign = -sign
    return min(max(2.0 * total, 0.0), 1.0)


def ks_two_sample(
    sample1: Sequence[float],
    sample2: Sequence[float],
    alpha: float = 0.05,
    rule: str = "two_tailed",
) -> KsResult:
    """Two-sample Kolmogorov-Smirnov test with an asymptotic p-value.

    The p-value uses the Kolmogorov tail series at
    lam = (sqrt(ne) + 0.12 + 0.11/sqrt(ne)) * D with ne = n1 n2 / (n1 + n2).

    Decision rules: "two_tailed" treats the p-value as two-tailed and
    rejects when p < alpha/2 or p > 1 - alpha/2; "conventional" rejects
    when p < alpha.
    """
    if rule not in KS_RULES:
        raise ValueError(f"unknown decision rule {rule!r}")
    n1 = len(sample1)
    n2 = len(sample2)
    statistic = ks_statistic(sample1, sample2)
    if min(n1, n2) < 30:
        log.warning(
            "ks_two_sample: min sample size %d < 30; asymptotic p-value is unreliable",
            min(n1, n2),
        )
    if statistic == 0.0:
        p_value = 1.0
    else:
        ne = n1 * n2 / (n1 + n2)
        lam = (math.sqrt(ne) + 0.12 + 0.11 / math.sqrt(ne)) * statistic
        p_value = _kolmogorov_sf(lam)
    if rule == "two_tailed":
        reject = p_value < alpha / 2 or p_value > 1 - alpha / 2
    else:
        reject = p_value < alpha
    return KsResult(
        statistic=statistic,
        p_value=p_value,
        n1=n1,
        n2=n2,
        reject_null=reject,
        alpha=alpha,
        rule=rule,
    )


def topic_metric_test(
    assignments: Mapping[str, int] | Iterable,
    scores: Iterable[EmotionScores],
    topic: int,
    metric: str,
    alpha: float = 0.05,
    rule: str = "two_tailed",
) -> KsResult:
    """KS test of one topic's metric values against all other articles.

    ``assignments`` maps article_id -> topic number (or is an iterable of
    objects with article_id/topic attributes).  ``metric`` is one of
    diversity, polarity, intensity, divint.
    """
    if metric not in METRIC_FIELDS:
        raise ValueError(f"unknown metric {metric!r}; expected one of {sorted(METRIC_FIELDS)}")
    if not isinstance(assignments, Mapping):
        assignments = {a.article_id: a.topic for a in assignments}
    field = METRIC_FIELDS[metric]
    in_topic, rest = [], []
    for s in scores:
        topic_no = assignments.get(s.article_id)
        if topic_no is None:
            continue
        (in_topic if topic_no == topic else rest).append(getattr(s, field))
    if not in_topic:
        raise EmptyPartition(topic, "topic")
    if not rest:
        raise EmptyPartition(topic, "complement")
    return ks_two_sample(in_topic, rest, alpha=alpha, rule=rule)
