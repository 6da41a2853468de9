from .preprocess import (
    TokenizedDoc,
    Vocabulary,
    build_vocabulary,
    clean_text,
    default_lemmatizer,
    detect_collocations,
    preprocess,
    tokenize,
)
from .stopwords import DEFAULT_STOPWORDS, load_stopwords
from .lda import (
    TopicAssignment,
    TopicModel,
    assign_topics,
    load_model,
    save_model,
    top_words,
    train_lda,
)
from .coherence import coherence_score, select_model

__all__ = [
    "DEFAULT_STOPWORDS",
    "TokenizedDoc",
    "TopicAssignment",
    "TopicModel",
    "Vocabulary",
    "assign_topics",
    "build_vocabulary",
    "clean_text",
    "coherence_score",
    "default_lemmatizer",
    "detect_collocations",
    "load_model",
    "load_stopwords",
    "preprocess",
    "save_model",
    "select_model",
    "tokenize",
    "top_words",
    "train_lda",
]
