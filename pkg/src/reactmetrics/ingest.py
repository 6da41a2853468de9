"""Load, validate, aggregate, and filter article reaction records.

Input is one row per share of an article onto a public page, either as
JSONL (one object per line) or CSV with the same column names.  Rows are
validated strictly: a malformed row aborts the load with a line-numbered
error rather than being dropped silently.
"""

from __future__ import annotations

import csv
import hashlib
import json
import logging
from dataclasses import dataclass, field, replace
from datetime import date, datetime, timezone
from pathlib import Path

from .errors import NegativeCount, SchemaViolation

log = logging.getLogger(__name__)

REACTIONS = ("like", "love", "wow", "laughter", "sad", "anger")
SPECIAL_REACTIONS = ("love", "wow", "laughter", "sad", "anger")

_COUNT_FIELDS = REACTIONS + ("reshares",)
_OPTIONAL_STR_FIELDS = ("lang", "text", "title", "abstract", "pub_date")


@dataclass(frozen=True)
class ReactionCounts:
    """The six click-based reaction tallies plus reshares for one article."""

    like: int = 0
    love: int = 0
    wow: int = 0
    laughter: int = 0
    sad: int = 0
    anger: int = 0
    reshares: int = 0

    def __post_init__(self):
        for name in _COUNT_FIELDS:
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")

    @property
    def special_total(self) -> int:
        return self.love + self.wow + self.laughter + self.sad + self.anger

    @property
    def click_total(self) -> int:
        """Sum of the six click-based reactions; reshares excluded."""
        return self.like + self.special_total

    def get(self, reaction: str) -> int:
        if reaction not in _COUNT_FIELDS:
            raise KeyError(reaction)
        return getattr(self, reaction)

    def add(self, other: "ReactionCounts") -> "ReactionCounts":
        return ReactionCounts(
            **{name: getattr(self, name) + getattr(other, name) for name in _COUNT_FIELDS}
        )


@dataclass(frozen=True)
class ShareRecord:
    """One share of an article onto one (pre-hashed) public page."""

    article_id: str
    page_id_hash: str
    post_text: str = ""
    reactions: ReactionCounts = field(default_factory=ReactionCounts)
    title: str | None = None
    abstract: str | None = None
    pub_date: str | None = None


@dataclass(frozen=True)
class ArticleRecord:
    """All shares of one article, with reactions summed element-wise."""

    article_id: str
    title: str = ""
    abstract: str | None = None
    publication_date: str | None = None
    share_count: int = 1
    combined_text: str = ""
    reactions: ReactionCounts = field(default_factory=ReactionCounts)


@dataclass(frozen=True)
class Provenance:
    source_digest: str
    loaded_at: str


@dataclass(frozen=True)
class Corpus:
    articles: tuple[ArticleRecord, ...]
    provenance: Provenance | None = None

    def __post_init__(self):
        ids = [a.article_id for a in self.articles]
        if len(ids) != len(set(ids)):
            raise ValueError("article_id values must be unique within a corpus")

    def __len__(self) -> int:
        return len(self.articles)

    def __iter__(self):
        return iter(self.articles)


def _is_english(lang: str) -> bool:
    return lang.lower().replace("_", "-").split("-")[0] == "en"


def _parse_count(raw, line: int, name: str) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise SchemaViolation(line, name, f"expected an integer, got {raw!r}")
    if raw < 0:
        raise NegativeCount(line, name)
    return raw


def _validate_pub_date(raw: str, line: int) -> str:
    try:
        date.fromisoformat(raw)
    except ValueError as exc:
        raise SchemaViolation(line, "pub_date", f"not an ISO-8601 date: {exc}") from None
    return raw


def _row_to_share(row: dict, line: int) -> ShareRecord:
    article_id = row.get("article_id")
    if not isinstance(article_id, str) or not article_id:
        raise SchemaViolation(line, "article_id", "required non-empty string")
    page_id_hash = row.get("page_id_hash")
    if not isinstance(page_id_hash, str) or not page_id_hash:
        raise SchemaViolation(line, "page_id_hash", "required non-empty string")

    counts = {}
    for name in _COUNT_FIELDS:
        if name not in row:
            raise SchemaViolation(line, name, "required count is missing")
        counts[name] = _parse_count(row[name], line, name)

    optional = {}
    for name in _OPTIONAL_STR_FIELDS:
        value = row.get(name)
        if value is not None and not isinstance(value, str):
            raise SchemaViolation(line, name, f"expected a string, got {value!r}")
        optional[name] = value
    if optional["pub_date"] is not None:
        _validate_pub_date(optional["pub_date"], line)

    text = optional["text"] or ""
    lang = optional["lang"]
    if lang is None:
        if text:
            log.warning(
                "line %d: share of %r has text but no language tag; keeping the text",
                line,
                article_id,
            )
    elif not _is_english(lang):
        text = ""

    return ShareRecord(
        article_id=article_id,
        page_id_hash=page_id_hash,
        post_text=text,
        reactions=ReactionCounts(**counts),
        title=optional["title"],
        abstract=optional["abstract"],
        pub_date=optional["pub_date"],
    )


def _iter_jsonl_rows(path: Path):
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                row = json.loads(line)
            except json.JSONDecodeError as exc:
                raise SchemaViolation(line_no, "", f"invalid JSON: {exc}") from None
            if not isinstance(row, dict):
                raise SchemaViolation(line_no, "", "each line must be a JSON object")
            yield row, line_no


def _iter_csv_rows(path: Path):
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            return
        missing = [c for c in ("article_id", "page_id_hash") + _COUNT_FIELDS if c not in reader.fieldnames]
        if missing:
            raise SchemaViolation(1, missing[0], "required column missing from CSV header")
        for record in reader:
            line_no = reader.line_num
            row: dict = {}
            for key, value in record.items():
                if key is None or value is None or value == "":
                    continue
                if key in _COUNT_FIELDS:
                    try:
                        row[key] = int(value)
                    except ValueError:
                        raise SchemaViolation(line_no, key, f"expected an integer, got {value!r}") from None
                else:
                    row[key] = value
            for name in _COUNT_FIELDS:
                if name not in row and record.get(name, "") == "":
                    raise SchemaViolation(line_no, name, "required count is missing")
            yield row, line_no


def load_shares(path: str | Path, format: str = "jsonl") -> list[ShareRecord]:
    """Parse one ShareRecord per input row; raises on the first malformed row.

    ``format`` is "jsonl" or "csv".  Non-English share texts (per the row's
    ``lang`` tag) are blanked so they never reach the combined text; rows
    with text but no tag keep the text and log a warning.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(path)
    if format == "jsonl":
        rows = _iter_jsonl_rows(path)
    elif format == "csv":
        rows = _iter_csv_rows(path)
    else:
        raise ValueError(f"unknown input format {format!r}")

    shares = [_row_to_share(row, line_no) for row, line_no in rows]
    if not shares:
        log.warning("%s: no share records found", path)
    return shares


def file_digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def aggregate_articles(shares: list[ShareRecord], provenance: Provenance | None = None) -> Corpus:
    """Group shares by article_id, summing reactions element-wise.

    combined_text joins the non-empty share texts with a single newline in
    input order; title/abstract/pub_date take the first value seen.
    """
    order: list[str] = []
    grouped: dict[str, list[ShareRecord]] = {}
    for share in shares:
        if share.article_id not in grouped:
            order.append(share.article_id)
            grouped[share.article_id] = []
        grouped[share.article_id].append(share)

    articles = []
    for article_id in order:
        group = grouped[article_id]
        reactions = group[0].reactions
        for share in group[1:]:
            reactions = reactions.add(share.reactions)
        texts = [s.post_text for s in group if s.post_text]
        title = next((s.title for s in group if s.title), "")
        abstract = next((s.abstract for s in group if s.abstract), None)
        pub_date = next((s.pub_date for s in group if s.pub_date), None)
        articles.append(
            ArticleRecord(
                article_id=article_id,
                title=title,
                abstract=abstract,
                publication_date=pub_date,
                share_count=len(group),
                combined_text="\n".join(texts),
                reactions=reactions,
            )
        )
    return Corpus(articles=tuple(articles), provenance=provenance)


def load_corpus(path: str | Path, format: str = "jsonl") -> Corpus:
    """Convenience loader: read shares, aggregate, attach file provenance."""
    shares = load_shares(path, format)
    provenance = Provenance(
        source_digest=file_digest(path),
        loaded_at=datetime.now(timezone.utc).isoformat(),
    )
    return aggregate_articles(shares, provenance)


def filter_special(corpus: Corpus) -> Corpus:
    """Keep only articles that received at least one special reaction."""
    kept = tuple(a for a in corpus.articles if a.reactions.special_total >= 1)
    log.info("filter_special: retained %d of %d articles", len(kept), len(corpus.articles))
    return replace(corpus, articles=kept)
