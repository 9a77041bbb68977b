"""Exception types raised across the pipeline.

Unreadable files raise the builtin OSError; everything domain-specific
lives under InterestGraphError so callers can catch one base class.
"""


class InterestGraphError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(InterestGraphError):
    """Malformed input record (carries the offending line number)."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ConfigError(InterestGraphError):
    """A configuration value is outside its documented range."""


class SchemaError(InterestGraphError):
    """A knowledge-base entry is missing a field or violates uniqueness."""


class DanglingLinkError(InterestGraphError):
    """A knowledge-base outlink references an entity that does not exist."""


class RangeError(InterestGraphError):
    """A lexicon row has scores outside [0, 1] or pos + neg > 1."""


class UnknownEntityError(InterestGraphError):
    """An entity id was requested that the knowledge base or keyword list lacks."""


class EmptyGraphError(InterestGraphError):
    """Matching was attempted against a graph with no nodes."""


class MissingUpstreamError(InterestGraphError):
    """A pipeline stage ran before the stage it depends on."""

    def __init__(self, stage: str, artifact: str | None = None):
        self.stage = stage
        detail = f" (expected artifact {artifact})" if artifact else ""
        super().__init__(f"missing upstream stage '{stage}'{detail}")


class SerializationError(InterestGraphError):
    """A graph export could not be written to its sink."""


class OutputLockedError(InterestGraphError):
    """Another pipeline invocation holds the output directory lock."""
