"""Synthetic corpora with known structure, for evaluation and fixtures.

Two generators: planted-topic token corpora (disjoint per-topic
vocabularies, Dirichlet document mixtures) used to validate topic recovery,
and a share-row generator producing files in the ingest schema with
topic-flavored texts, emotion-profiled reactions, and reshare counts tied
positively to the diversity-intensity product.
"""

from __future__ import annotations

import hashlib
from typing import Sequence

import numpy as np

from .ingest import ReactionCounts
from .metrics import score_article
from .topics.preprocess import TokenizedDoc, Vocabulary, build_vocabulary


def planted_corpus(
    n_docs: int,
    n_topics: int = 3,
    words_per_topic: int = 50,
    doc_len: tuple[int, int] = (40, 80),
    mixture_alpha: float = 0.15,
    seed: int = 0,
) -> tuple[list[TokenizedDoc], Vocabulary, list[int]]:
    """Documents drawn from disjoint per-topic vocabularies.

    Within a topic, word probabilities fall off as 1/(rank+1) so each topic
    has a distinctive head.  Returns (docs, vocabulary, planted labels)
    where a label is the argmax of the document's true mixture (0-based).
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    words = [
        [f"t{k}w{i:02d}" for i in range(words_per_topic)]
        for k in range(n_topics)
    ]
    weights = 1.0 / (np.arange(words_per_topic) + 1.0)
    weights /= weights.sum()

    docs: list[TokenizedDoc] = []
    labels: list[int] = []
    for d in range(n_docs):
        mixture = rng.dirichlet(np.full(n_topics, mixture_alpha))
        labels.append(int(np.argmax(mixture)))
        length = int(rng.integers(doc_len[0], doc_len[1] + 1))
        topic_draws = rng.choice(n_topics, size=length, p=mixture)
        tokens = []
        for k in topic_draws:
            w = int(rng.choice(words_per_topic, p=weights))
            tokens.append(words[k][w])
        docs.append(TokenizedDoc(article_id=f"doc{d:04d}", tokens=tuple(tokens)))
    vocab = build_vocabulary(docs, min_df=1, max_df_ratio=1.0)
    return docs, vocab, labels


_TOPIC_WORDS = {
    "health": """vitamin diet exercise nutrition patient treatment therapy
        clinical trial dose symptom disease heart blood pressure sleep
        obesity cancer screening recovery hospital doctor medicine immune""",
    "space": """planet telescope orbit galaxy star asteroid probe lander
        spacecraft astronomer cosmic radiation gravity lunar solar eclipse
        satellite exoplanet nebula observatory mission rocket atmosphere""",
    "climate": """climate warming emission carbon glacier drought wildfire
        ocean temperature ecosystem species habitat pollution renewable
        energy forest coral reef sea level ice melting weather storm""",
    "genetics": """gene genome dna mutation protein cell neuron brain
        sequencing crispr enzyme chromosome receptor molecule bacteria
        microbiome embryo stem trait heredity expression synapse""",
}

_FILLER = """study research finding result new shows suggests according
    scientists data evidence published analysis report university team
    discovered link between effect potential major""".split()

_STOPPERS = "the and of in to a is are was for on with that this from".split()

# Per-flavor tendencies: (mean like scale, intensity level, special mix over
# love/wow/laughter/sad/anger).
_PROFILES = {
    "health": (40, 0.25, (0.45, 0.25, 0.10, 0.15, 0.05)),
    "space": (60, 0.20, (0.35, 0.50, 0.10, 0.03, 0.02)),
    "climate": (30, 0.45, (0.10, 0.15, 0.05, 0.35, 0.35)),
    "genetics": (45, 0.30, (0.30, 0.40, 0.15, 0.10, 0.05)),
}


def _page_hash(i: int) -> str:
    return hashlib.sha256(f"page-{i}".encode()).hexdigest()[:16]


def _share_text(rng, flavor: str, length: int) -> str:
    pool = _TOPIC_WORDS[flavor].split()
    words = []
    for _ in range(length):
        r = rng.random()
        if r < 0.55:
            words.append(pool[int(rng.integers(len(pool)))])
        elif r < 0.8:
            words.append(_FILLER[int(rng.integers(len(_FILLER)))])
        else:
            words.append(_STOPPERS[int(rng.integers(len(_STOPPERS)))])
    return " ".join(words)


def _draw_counts(rng, flavor: str, no_specials: bool) -> ReactionCounts:
    like_scale, intensity_level, mix = _PROFILES[flavor]
    like = int(rng.poisson(like_scale * rng.lognormal(0.0, 0.6))) + 1
    if no_specials:
        counts = ReactionCounts(like=like)
    else:
        target = intensity_level * float(np.clip(rng.normal(1.0, 0.35), 0.2, 2.5))
        target = min(target, 0.95)
        n_special = max(1, int(round(like * target / (1.0 - target))))
        specials = rng.multinomial(n_special, mix)
        counts = ReactionCounts(
            like=like,
            love=int(specials[0]),
            wow=int(specials[1]),
            laughter=int(specials[2]),
            sad=int(specials[3]),
            anger=int(specials[4]),
        )
    divint = 0.0
    if counts.special_total >= 1:
        divint = score_article(counts).divint_index
    reshares = int(rng.poisson(np.exp(0.8 + 2.5 * divint)))
    return ReactionCounts(
        **{f: counts.get(f) for f in ("like", "love", "wow", "laughter", "sad", "anger")},
        reshares=reshares,
    )


def make_share_rows(n_articles: int = 200, seed: int = 20170, max_shares: int = 4) -> list[dict]:
    """Rows in the ingest JSONL/CSV schema for a plausible small corpus.

    Roughly 8% of articles receive likes only (dropped by the special-
    reaction filter); a few rows carry non-English or untagged texts to
    exercise the language handling.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    flavors = sorted(_TOPIC_WORDS)
    rows = []
    for i in range(n_articles):
        article_id = f"a{i:04d}"
        flavor = flavors[int(rng.integers(len(flavors)))]
        no_specials = rng.random() < 0.08
        counts = _draw_counts(rng, flavor, no_specials)
        n_shares = int(rng.integers(1, max_shares + 1))
        split = rng.multinomial(
            counts.reshares, np.full(n_shares, 1.0 / n_shares)
        )
        per_share = _split_counts(rng, counts, n_shares)
        title = f"{flavor.capitalize()} study {i}"
        pub_date = f"2017-{int(rng.integers(1, 13)):02d}-{int(rng.integers(1, 29)):02d}"
        for s in range(n_shares):
            text_len = int(rng.integers(15, 50))
            row = {
                "article_id": article_id,
                "page_id_hash": _page_hash(int(rng.integers(10_000))),
                "lang": "en",
                "text": _share_text(rng, flavor, text_len),
                **{f: per_share[s].get(f) for f in ("like", "love", "wow", "laughter", "sad", "anger")},
                "reshares": int(split[s]),
                "title": title,
                "pub_date": pub_date,
            }
            r = rng.random()
            if r < 0.03:
                row["lang"] = "es"
                row["text"] = "estudio cientifico interesante resultados nuevos"
            elif r < 0.05:
                del row["lang"]
            rows.append(row)
    return rows


def _split_counts(rng, totals: ReactionCounts, n_shares: int) -> list[ReactionCounts]:
    """Distribute an article's reaction totals across its shares."""
    shares = [dict.fromkeys(("like", "love", "wow", "laughter", "sad", "anger"), 0) for _ in range(n_shares)]
    p = np.full(n_shares, 1.0 / n_shares)
    for field in shares[0]:
        parts = rng.multinomial(totals.get(field), p)
        for s in range(n_shares):
            shares[s][field] = int(parts[s])
    return [ReactionCounts(**s) for s in shares]
