"""Text cleaning, collocation joining, and vocabulary pruning for topic models.

Per-document processing order: lowercase, strip hyperlinks / email
addresses / hashtags / punctuation, tokenize on whitespace, join collocated
bigrams then trigrams, drop stopwords, normalize inflected endings, prune
the vocabulary by document frequency.
"""

from __future__ import annotations

import logging
import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from ..errors import EmptyCorpusAfterPreprocessing
from ..ingest import Corpus
from .stopwords import DEFAULT_STOPWORDS

log = logging.getLogger(__name__)

_URL_RE = re.compile(r"(https?://\S+|www\.\S+)")
_EMAIL_RE = re.compile(r"\S+@\S+")
_HASHTAG_RE = re.compile(r"#\w+")
_NON_WORD_RE = re.compile(r"[^\w\s]+")
_DIGITS_ONLY_RE = re.compile(r"^[\d_]+$")


@dataclass(frozen=True)
class TokenizedDoc:
    article_id: str
    tokens: tuple[str, ...]


@dataclass(frozen=True)
class Vocabulary:
    terms: tuple[str, ...]
    doc_freq: tuple[int, ...]
    index: dict[str, int]

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self.index


def clean_text(text: str) -> str:
    text = text.lower()
    text = _URL_RE.sub(" ", text)
    text = _EMAIL_RE.sub(" ", text)
    text = _HASHTAG_RE.sub(" ", text)
    text = _NON_WORD_RE.sub(" ", text)
    return text


def tokenize(text: str) -> list[str]:
    """Cleaned word tokens; pure-digit remnants are dropped."""
    return [t for t in clean_text(text).split() if not _DIGITS_ONLY_RE.match(t)]


_SUFFIX_RULES = (
    # (suffix, replacement, minimum token length for the rule to fire)
    ("ies", "y", 5),
    ("sses", "ss", 6),
    ("xes", "x", 5),
    ("ches", "ch", 6),
    ("shes", "sh", 6),
    ("ing", "", 6),
    ("ed", "", 5),
    ("s", "", 4),
)
_KEEP_S_ENDINGS = ("ss", "us", "is")


def _apply_suffix_rules(token: str) -> str:
    for suffix, repl, min_len in _SUFFIX_RULES:
        if not token.endswith(suffix) or len(token) < min_len:
            continue
        if suffix == "s" and token.endswith(_KEEP_S_ENDINGS):
            continue
        if suffix == "ed" and token.endswith("eed"):
            continue
        stem = token[: -len(suffix)] + repl
        # collapse the doubled consonant left by -ing/-ed (running -> run)
        if suffix in ("ing", "ed") and len(stem) >= 2 and stem[-1] == stem[-2] and stem[-1] not in "aeiou":
            stem = stem[:-1]
        return stem
    return token


def default_lemmatizer(token: str) -> str:
    """Rule-based suffix normalizer, iterated to a fixed point.

    Plural nouns to singular, common verb inflections to a stem.  Not a
    dictionary lemmatizer: stems need not be dictionary words, only stable
    (idempotent) and consistent across the corpus.
    """
    for _ in range(5):
        stripped = _apply_suffix_rules(token)
        if stripped == token:
            return token
        token = stripped
    return token


def _pair_counts(docs: Sequence[list[str]]):
    unigrams: Counter = Counter()
    pairs: Counter = Counter()
    for tokens in docs:
        unigrams.update(tokens)
        for a, b in zip(tokens, tokens[1:]):
            pairs[(a, b)] += 1
    return unigrams, pairs


def detect_collocations(
    docs: Sequence[list[str]],
    threshold: float = 0.5,
    min_count: int = 5,
) -> set[tuple[str, str]]:
    """Adjacent pairs whose normalized PMI clears ``threshold``.

    NPMI = ln(p(ab) / (p(a) p(b))) / -ln(p(ab)), in [-1, 1]; all three
    probabilities share the token-count denominator so the bound holds.
    Pairs seen fewer than ``min_count`` times are ignored regardless of
    score.
    """
    unigrams, pairs = _pair_counts(docs)
    n_tokens = sum(unigrams.values())
    if not pairs or n_tokens == 0:
        return set()
    selected = set()
    for (a, b), c_ab in pairs.items():
        if c_ab < min_count:
            continue
        p_ab = c_ab / n_tokens
        p_a = unigrams[a] / n_tokens
        p_b = unigrams[b] / n_tokens
        if p_ab >= 1.0:
            continue
        npmi = math.log(p_ab / (p_a * p_b)) / -math.log(p_ab)
        if npmi >= threshold:
            selected.add((a, b))
    return selected


def _join_pairs(tokens: list[str], pairs: set[tuple[str, str]]) -> list[str]:
    out = []
    i = 0
    while i < len(tokens):
        if i + 1 < len(tokens) and (tokens[i], tokens[i + 1]) in pairs:
            out.append(tokens[i] + "_" + tokens[i + 1])
            i += 2
        else:
            out.append(tokens[i])
            i += 1
    return out


def build_vocabulary(
    docs: Iterable[TokenizedDoc],
    min_df: int = 15,
    max_df_ratio: float = 0.5,
) -> Vocabulary:
    """Terms kept when their document frequency is in [min_df, max_df_ratio * D]."""
    docs = list(docs)
    df: Counter = Counter()
    for doc in docs:
        df.update(set(doc.tokens))
    max_df = max_df_ratio * len(docs)
    terms = sorted(t for t, c in df.items() if c >= min_df and c <= max_df)
    return Vocabulary(
        terms=tuple(terms),
        doc_freq=tuple(df[t] for t in terms),
        index={t: i for i, t in enumerate(terms)},
    )


def preprocess(
    corpus: Corpus,
    stopwords: frozenset[str] | None = None,
    min_df: int = 15,
    max_df_ratio: float = 0.5,
    npmi_threshold: float = 0.5,
    min_pair_count: int = 5,
    lemmatizer: Callable[[str], str] | None = None,
) -> tuple[list[TokenizedDoc], Vocabulary]:
    """Tokenized documents plus the pruned vocabulary.

    Documents emptied by cleaning or pruning are dropped (count logged);
    raises EmptyCorpusAfterPreprocessing when nothing survives.
    """
    if stopwords is None:
        stopwords = DEFAULT_STOPWORDS
    if lemmatizer is None:
        lemmatizer = default_lemmatizer

    ids = [a.article_id for a in corpus]
    raw = [tokenize(a.combined_text) for a in corpus]

    bigram_pairs = detect_collocations(raw, npmi_threshold, min_pair_count)
    joined = [_join_pairs(tokens, bigram_pairs) for tokens in raw]
    # second pass builds trigrams only: one side a fresh bigram, the other a word
    trigram_pairs = {
        (a, b)
        for a, b in detect_collocations(joined, npmi_threshold, min_pair_count)
        if a.count("_") + b.count("_") == 1
    }
    joined = [_join_pairs(tokens, trigram_pairs) for tokens in joined]

    docs = []
    for article_id, tokens in zip(ids, joined):
        kept = [lemmatizer(t) for t in tokens if t not in stopwords]
        kept = [t for t in kept if t and t not in stopwords]
        if kept:
            docs.append(TokenizedDoc(article_id=article_id, tokens=tuple(kept)))

    vocab = build_vocabulary(docs, min_df=min_df, max_df_ratio=max_df_ratio)
    pruned_docs = []
    for doc in docs:
        tokens = tuple(t for t in doc.tokens if t in vocab)
        if tokens:
            pruned_docs.append(TokenizedDoc(article_id=doc.article_id, tokens=tokens))

    dropped = len(corpus) - len(pruned_docs)
    if dropped:
        log.info("preprocess: dropped %d of %d documents emptied by cleaning/pruning", dropped, len(corpus))
    if not pruned_docs:
        raise EmptyCorpusAfterPreprocessing(
            f"no documents left (started with {len(corpus)}); lower min_df or relax pruning"
        )
    return pruned_docs, vocab
