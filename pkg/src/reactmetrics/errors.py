"""Exception types shared across the package."""


class ReactMetricsError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(ReactMetricsError):
    """Invalid pipeline configuration; raised before any work starts."""


class IngestError(ReactMetricsError):
    """Base class for input-file problems."""


class SchemaViolation(IngestError):
    def __init__(self, line: int, field: str, reason: str):
        self.line = line
        self.field = field
        self.reason = reason
        super().__init__(f"line {line}: field {field!r}: {reason}")


class NegativeCount(IngestError):
    def __init__(self, line: int, field: str):
        self.line = line
        self.field = field
        super().__init__(f"line {line}: field {field!r}: count must be non-negative")


class ZeroTotal(ReactMetricsError):
    """All six click-based reaction counts are zero."""


class ZeroCount(ReactMetricsError):
    """Requested reaction has a zero count; log of zero proportion is undefined."""


class NoSpecialReactions(ReactMetricsError):
    """Article has none of the five special reactions."""


class EmptyCorpus(ReactMetricsError):
    """Operation requires at least one article."""


class LengthMismatch(ReactMetricsError):
    """Paired samples must have equal length >= 2."""


class EmptySample(ReactMetricsError):
    """Two-sample test requires at least one observation per sample."""


class EmptyPartition(ReactMetricsError):
    def __init__(self, topic: int, side: str):
        self.topic = topic
        self.side = side
        super().__init__(f"topic {topic}: {side} partition is empty")


class EmptyCorpusAfterPreprocessing(ReactMetricsError):
    """Cleaning and vocabulary pruning removed every document."""


class InvalidTopicCount(ReactMetricsError):
    """Topic count must be an integer >= 2."""


class EmptyDocument(ReactMetricsError):
    def __init__(self, article_id: str):
        self.article_id = article_id
        super().__init__(f"document {article_id!r} has no in-vocabulary tokens")


class PipelineStageError(ReactMetricsError):
    """Wraps a module error with the pipeline stage it occurred in."""

    def __init__(self, stage: str, cause: Exception):
        self.stage = stage
        self.cause = cause
        super().__init__(f"stage {stage!r}: {cause}")
