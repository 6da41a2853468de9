"""Document-co-occurrence topic coherence and coherence-based model selection.

Coherence of a topic is the mean over ordered top-word pairs of
ln((codf(w_m, w_l) + 1) / df(w_l)), with words ranked by in-topic
probability and w_l the higher-ranked word of the pair; the model score is
the mean over topics.  Values are typically negative; closer to zero means
the top words co-occur more, which reads as a better topic.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Sequence

from .lda import TopicModel, top_words, train_lda
from .preprocess import TokenizedDoc, Vocabulary

log = logging.getLogger(__name__)


def _doc_frequencies(docs: Sequence[TokenizedDoc], terms: set[str]):
    df: dict[str, int] = {t: 0 for t in terms}
    codf: dict[tuple[str, str], int] = {}
    for doc in docs:
        present = sorted(terms.intersection(doc.tokens))
        for t in present:
            df[t] += 1
        for a, b in combinations(present, 2):
            codf[(a, b)] = codf.get((a, b), 0) + 1
    return df, codf


def coherence_score(model: TopicModel, docs: Sequence[TokenizedDoc], top_n: int = 10) -> float:
    """Mean per-topic coherence of the top_n words; 0.0 when top_n < 2."""
    import math

    if top_n < 2:
        return 0.0
    words_per_topic = top_words(model, top_n)
    needed = set(w for ws in words_per_topic for w in ws)
    df, codf = _doc_frequencies(docs, needed)

    topic_scores = []
    for words in words_per_topic:
        pair_scores = []
        for m in range(1, len(words)):
            for l in range(m):
                w_l, w_m = words[l], words[m]
                d_l = df.get(w_l, 0)
                if d_l == 0:
                    continue
                key = (w_l, w_m) if w_l < w_m else (w_m, w_l)
                d_lm = codf.get(key, 0)
                pair_scores.append(math.log((d_lm + 1) / d_l))
        topic_scores.append(sum(pair_scores) / len(pair_scores) if pair_scores else 0.0)
    return sum(topic_scores) / len(topic_scores)


def select_model(
    docs: Sequence[TokenizedDoc],
    vocab: Vocabulary,
    t_grid: Sequence[int],
    seed: int,
    iterations: int = 1000,
    alpha: float | None = None,
    beta: float = 0.01,
    top_n: int = 10,
) -> tuple[TopicModel, list[tuple[int, float]]]:
    """Train one model per grid point, return the coherence maximizer.

    Ties break toward the smaller topic count.  The second return value is
    the full (t, coherence) table in grid order.
    """
    if not t_grid:
        raise ValueError("t_grid must be non-empty")
    best: TopicModel | None = None
    table: list[tuple[int, float]] = []
    for t in sorted(t_grid):
        model = train_lda(docs, vocab, t=t, seed=seed, iterations=iterations, alpha=alpha, beta=beta)
        model.coherence = coherence_score(model, docs, top_n=top_n)
        table.append((t, model.coherence))
        log.info("select_model: t=%d coherence=%.4f", t, model.coherence)
        if best is None or model.coherence > best.coherence:
            best = model
    return best, table
