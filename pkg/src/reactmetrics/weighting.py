"""RF-IDF weighting of reaction counts.

A reaction's frequency within an article is its share of the article's six
click-based reactions, log-scaled; its inverse document frequency is the
natural log of one over the fraction of articles that received it at all.
The product down-weights ubiquitous reactions (likes) and keeps rare,
deliberate ones (anger, sadness) visible.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Mapping

from .errors import EmptyCorpus, ZeroCount, ZeroTotal
from .ingest import Corpus, REACTIONS, ReactionCounts

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdfTable:
    """Per-reaction inverse document frequency over an analysis corpus.

    ``presence`` holds the raw presence proportions the idf values derive
    from.  Reactions absent from every article get idf 0 and are listed in
    ``absent``; their weighted values downstream are the 0 sentinel.
    """

    idf: Mapping[str, float]
    presence: Mapping[str, float]
    n_articles: int
    absent: frozenset[str] = frozenset()


@dataclass(frozen=True)
class WeightedReactions:
    """Per-article RF-IDF vector with a mask of which entries are defined.

    ``rfidf[r]`` is 0.0 both when the article has none of reaction r (the
    sentinel) and when r makes up 100% of its reactions; ``defined[r]``
    disambiguates: True means the value came out of the weighting formula.
    """

    article_id: str
    rfidf: Mapping[str, float]
    defined: Mapping[str, bool]


def reaction_proportion(counts: ReactionCounts, reaction: str) -> float:
    """count_r / total click-based reactions, in (0, 1]."""
    if reaction not in REACTIONS:
        raise KeyError(reaction)
    total = counts.click_total
    if total == 0:
        raise ZeroTotal("all six click-based reaction counts are zero")
    c = counts.get(reaction)
    if c == 0:
        raise ZeroCount(f"article has no {reaction!r} reactions")
    return c / total


def reaction_frequency(counts: ReactionCounts, reaction: str) -> float:
    """Natural log of the reaction's proportion of the article's total."""
    return math.log(reaction_proportion(counts, reaction))


def build_idf(corpus: Corpus) -> IdfTable:
    """idf[r] = ln(n_articles / n_articles_with_r), over the analysis corpus."""
    n = len(corpus)
    if n == 0:
        raise EmptyCorpus("cannot build an IDF table from an empty corpus")
    idf = {}
    presence = {}
    absent = set()
    for r in REACTIONS:
        n_r = sum(1 for a in corpus if a.reactions.get(r) >= 1)
        presence[r] = n_r / n
        if n_r == 0:
            log.warning("reaction %r absent from every article; flagged unusable", r)
            absent.add(r)
            idf[r] = 0.0
        else:
            idf[r] = math.log(n / n_r)
    return IdfTable(idf=idf, presence=presence, n_articles=n, absent=frozenset(absent))


def rf_idf(counts: ReactionCounts, idf: IdfTable, article_id: str = "") -> WeightedReactions:
    """Weighted vector for one article: RF x IDF where defined, else 0 sentinel."""
    if counts.click_total == 0:
        raise ZeroTotal("all six click-based reaction counts are zero")
    values = {}
    defined = {}
    for r in REACTIONS:
        if counts.get(r) >= 1 and r not in idf.absent:
            # + 0.0 normalizes -0.0 (negative RF times a zero idf)
            values[r] = reaction_frequency(counts, r) * idf.idf[r] + 0.0
            defined[r] = True
        else:
            values[r] = 0.0
            defined[r] = False
    return WeightedReactions(article_id=article_id, rfidf=values, defined=defined)
