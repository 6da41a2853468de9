"""Per-article emotion metrics over reaction counts.

Five quantities per article, all proportion-based and scale-invariant:

* valence: +1 or -1 depending on whether sad+anger outweigh love
* intensity: fraction of click-based reactions that are special reactions
* diversity: 1 minus the Jensen-Shannon distance (base-2 logs) between the
  article's special-reaction distribution and the five-way uniform
* divint_index: diversity x intensity
* polarity: valence x intensity
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import NoSpecialReactions, ZeroTotal
from .ingest import ReactionCounts, SPECIAL_REACTIONS

UNIFORM_SPECIAL = (0.2, 0.2, 0.2, 0.2, 0.2)


@dataclass(frozen=True)
class EmotionScores:
    article_id: str
    valence: int
    intensity: float
    diversity: float
    divint_index: float
    polarity: float
    total_reacts: int
    reshares: int = 0


def valence(counts: ReactionCounts) -> int:
    """-1 when sad+anger strictly exceed love, else +1 (ties are positive)."""
    if counts.special_total == 0:
        raise NoSpecialReactions("valence needs at least one special reaction")
    return -1 if (counts.sad + counts.anger) > counts.love else 1


def total_reactions(counts: ReactionCounts) -> int:
    """Sum of the six click-based reactions; reshares excluded."""
    return counts.click_total


def intensity(counts: ReactionCounts) -> float:
    """special_total / click total: 0 for like-only articles, 1 for no likes."""
    total = counts.click_total
    if total == 0:
        raise ZeroTotal("all six click-based reaction counts are zero")
    return counts.special_total / total


def special_distribution(counts: ReactionCounts) -> tuple[float, ...]:
    """Probability vector over (love, wow, laughter, sad, anger)."""
    total = counts.special_total
    if total == 0:
        raise NoSpecialReactions("no special reactions to form a distribution")
    return tuple(counts.get(r) / total for r in SPECIAL_REACTIONS)


def _kld2(p: Sequence[float], m: Sequence[float]) -> float:
    """Kullback-Leibler divergence with base-2 logs; 0 log(0/x) taken as 0."""
    acc = 0.0
    for p_i, m_i in zip(p, m):
        if p_i > 0.0:
            acc += p_i * math.log2(p_i / m_i)
    return acc


def js_distance(p: Sequence[float], q: Sequence[float]) -> float:
    """Jensen-Shannon distance with base-2 logs, so the range is [0, 1].

    Square root of the Jensen-Shannon divergence; a true metric on the
    simplex (symmetric, triangle inequality holds).
    """
    if len(p) != len(q):
        raise ValueError("distributions must have the same length")
    for dist in (p, q):
        if any(x < 0 for x in dist):
            raise ValueError("distribution entries must be non-negative")
        if abs(math.fsum(dist) - 1.0) > 1e-9:
            raise ValueError("distribution must sum to 1")
    m = [0.5 * (p_i + q_i) for p_i, q_i in zip(p, q)]
    divergence = 0.5 * _kld2(p, m) + 0.5 * _kld2(q, m)
    return math.sqrt(max(divergence, 0.0))


def diversity(counts: ReactionCounts) -> float:
    """1 at an even five-way special spread, falling toward 0 as one type dominates."""
    return 1.0 - js_distance(special_distribution(counts), UNIFORM_SPECIAL)


def divint_index(diversity: float, intensity: float) -> float:
    return diversity * intensity


def polarity(valence: int, intensity: float) -> float:
    return valence * intensity


def score_article(counts: ReactionCounts, article_id: str = "") -> EmotionScores:
    """All five metrics for one article; needs >= 1 special reaction."""
    v = valence(counts)
    i = intensity(counts)
    d = diversity(counts)
    return EmotionScores(
        article_id=article_id,
        valence=v,
        intensity=i,
        diversity=d,
        divint_index=divint_index(d, i),
        polarity=polarity(v, i),
        total_reacts=total_reactions(counts),
        reshares=counts.reshares,
    )
