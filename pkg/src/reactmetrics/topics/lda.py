"""Latent Dirichlet allocation via collapsed Gibbs sampling.

Single-threaded sampler with all randomness drawn from one seeded PCG64
generator, so a (corpus, t, seed, hyperparameters, iterations) tuple always
reproduces the same model bit for bit on a given platform.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from ..errors import EmptyDocument, InvalidTopicCount
from .preprocess import TokenizedDoc, Vocabulary

log = logging.getLogger(__name__)

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda fn: fn

MODEL_FORMAT_VERSION = 1


@dataclass
class TopicModel:
    t: int
    phi: np.ndarray        # t x V, rows are word distributions
    theta: np.ndarray      # D x t, rows are topic distributions
    seed: int
    alpha: float
    beta: float
    iterations: int
    vocab: Vocabulary
    doc_ids: tuple[str, ...]
    coherence: float | None = None


@dataclass(frozen=True)
class TopicAssignment:
    article_id: str
    topic: int             # 1-based
    prob: float


@njit(cache=True)
def _gibbs_sweep(doc_ids, word_ids, z, n_dk, n_kw, n_k, alpha, beta, v_size, t, rand_vals):
    for j in range(doc_ids.shape[0]):
        d = doc_ids[j]
        w = word_ids[j]
        k_old = z[j]
        n_dk[d, k_old] -= 1
        n_kw[k_old, w] -= 1
        n_k[k_old] -= 1
        total = 0.0
        for k in range(t):
            total += (n_kw[k, w] + beta) / (n_k[k] + beta * v_size) * (n_dk[d, k] + alpha)
        u = rand_vals[j] * total
        acc = 0.0
        k_new = t - 1
        for k in range(t):
            acc += (n_kw[k, w] + beta) / (n_k[k] + beta * v_size) * (n_dk[d, k] + alpha)
            if u < acc:
                k_new = k
                break
        z[j] = k_new
        n_dk[d, k_new] += 1
        n_kw[k_new, w] += 1
        n_k[k_new] += 1


def _encode_docs(docs: Sequence[TokenizedDoc], vocab: Vocabulary):
    doc_ids = []
    word_ids = []
    for d, doc in enumerate(docs):
        in_vocab = [vocab.index[t] for t in doc.tokens if t in vocab.index]
        if not in_vocab:
            raise EmptyDocument(doc.article_id)
        doc_ids.extend([d] * len(in_vocab))
        word_ids.extend(in_vocab)
    return (
        np.asarray(doc_ids, dtype=np.int32),
        np.asarray(word_ids, dtype=np.int32),
    )


def train_lda(
    docs: Sequence[TokenizedDoc],
    vocab: Vocabulary,
    t: int,
    seed: int,
    iterations: int = 1000,
    alpha: float | None = None,
    beta: float = 0.01,
) -> TopicModel:
    """Run the collapsed Gibbs sampler and estimate phi/theta from final counts.

    ``alpha`` defaults to 50/t.  Out-of-vocabulary tokens are ignored; a
    document with no in-vocabulary tokens raises EmptyDocument.
    """
    if not isinstance(t, int) or t < 2:
        raise InvalidTopicCount(f"topic count must be an integer >= 2, got {t!r}")
    if not docs:
        raise ValueError("no documents to train on")
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    if alpha is None:
        alpha = 50.0 / t
    v_size = len(vocab)
    if v_size == 0:
        raise ValueError("empty vocabulary")

    doc_idx, word_idx = _encode_docs(docs, vocab)
    n_tokens = doc_idx.shape[0]
    n_docs = len(docs)

    rng = np.random.Generator(np.random.PCG64(seed))
    z = rng.integers(0, t, size=n_tokens, dtype=np.int32)
    n_dk = np.zeros((n_docs, t), dtype=np.int32)
    n_kw = np.zeros((t, v_size), dtype=np.int32)
    n_k = np.zeros(t, dtype=np.int64)
    np.add.at(n_dk, (doc_idx, z), 1)
    np.add.at(n_kw, (z, word_idx), 1)
    np.add.at(n_k, z, 1)

    for _ in range(iterations):
        _gibbs_sweep(
            doc_idx, word_idx, z, n_dk, n_kw, n_k,
            float(alpha), float(beta), v_size, t, rng.random(n_tokens),
        )

    phi = (n_kw + beta) / (n_k + beta * v_size)[:, None]
    doc_lens = n_dk.sum(axis=1)
    theta = (n_dk + alpha) / (doc_lens + alpha * t)[:, None]
    return TopicModel(
        t=t,
        phi=phi,
        theta=theta,
        seed=seed,
        alpha=float(alpha),
        beta=float(beta),
        iterations=iterations,
        vocab=vocab,
        doc_ids=tuple(d.article_id for d in docs),
    )


def top_words(model: TopicModel, n: int = 10) -> list[list[str]]:
    """Top-n vocabulary terms per topic, by descending probability."""
    out = []
    for k in range(model.t):
        order = np.argsort(-model.phi[k], kind="stable")[:n]
        out.append([model.vocab.terms[i] for i in order])
    return out


def assign_topics(model: TopicModel) -> list[TopicAssignment]:
    """Dominant topic per document: argmax of its theta row (ties -> lowest index)."""
    assignments = []
    for article_id, row in zip(model.doc_ids, model.theta):
        k = int(np.argmax(row))
        assignments.append(TopicAssignment(article_id=article_id, topic=k + 1, prob=float(row[k])))
    return assignments


def save_model(model: TopicModel, path: str | Path) -> None:
    payload = {
        "format_version": MODEL_FORMAT_VERSION,
        "t": model.t,
        "seed": model.seed,
        "alpha": model.alpha,
        "beta": model.beta,
        "iterations": model.iterations,
        "coherence": model.coherence,
        "vocab_terms": list(model.vocab.terms),
        "vocab_doc_freq": list(model.vocab.doc_freq),
        "doc_ids": list(model.doc_ids),
        "phi": model.phi.tolist(),
        "theta": model.theta.tolist(),
    }
    Path(path).write_text(json.dumps(payload), encoding="utf-8")


def load_model(path: str | Path) -> TopicModel:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    version = payload.get("format_version")
    if version != MODEL_FORMAT_VERSION:
        raise ValueError(f"unsupported model format version {version!r}")
    terms = tuple(payload["vocab_terms"])
    vocab = Vocabulary(
        terms=terms,
        doc_freq=tuple(payload["vocab_doc_freq"]),
        index={t: i for i, t in enumerate(terms)},
    )
    return TopicModel(
        t=payload["t"],
        phi=np.asarray(payload["phi"], dtype=float),
        theta=np.asarray(payload["theta"], dtype=float),
        seed=payload["seed"],
        alpha=payload["alpha"],
        beta=payload["beta"],
        iterations=payload["iterations"],
        vocab=vocab,
        doc_ids=tuple(payload["doc_ids"]),
        coherence=payload["coherence"],
    )
