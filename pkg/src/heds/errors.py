"""Exception types shared across the package.

Every failure mode callers are expected to handle has its own class so that
the CLI and the HTTP API can map them to exit codes / status codes without
string matching.
"""

from __future__ import annotations

from typing import List, Optional


class HedsError(Exception):
    """Base class for all errors raised by this package."""


class UnknownQuestionError(HedsError):
    """A question path does not exist in the schema."""

    def __init__(self, path: str):
        super().__init__(f"unknown question: {path!r}")
        self.path = path


class NotAChoiceQuestionError(HedsError):
    """An option lookup was attempted on a free-text or integer question."""

    def __init__(self, path: str):
        super().__init__(f"question {path} has no options (not a choice question)")
        self.path = path


class KindMismatchError(HedsError):
    """An answer value does not structurally fit its question."""

    def __init__(self, path: str, reason: str):
        super().__init__(f"answer for {path} does not fit the question: {reason}")
        self.path = path
        self.reason = reason


class CriterionOutOfRangeError(HedsError):
    """A criterion index is missing, non-positive, or beyond the sheet's blocks."""

    def __init__(self, message: str):
        super().__init__(message)


class CriterionLimitError(HedsError):
    """Attempt to add an eleventh quality-criterion block."""

    def __init__(self, limit: int):
        super().__init__(f"a datasheet holds at most {limit} quality criteria")
        self.limit = limit


class ParseError(HedsError):
    """Syntactically broken input; carries a position when one is known."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        at = ""
        if line is not None:
            at = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + at)
        self.line = line
        self.column = column


class UnsupportedSchemaVersionError(HedsError):
    """The file declares a schema version this build does not understand."""

    def __init__(self, version: str):
        super().__init__(f"unsupported schema version: {version!r} (expected '1.0')")
        self.version = version


class MalformedTemplateError(HedsError):
    """A Markdown template is structurally broken (headings, option labels)."""

    def __init__(self, message: str, path: Optional[str] = None):
        if path:
            message = f"{message} (question {path})"
        super().__init__(message)
        self.path = path


class IncompleteCriterionError(HedsError):
    """A criterion block is missing answers needed to derive its key."""

    def __init__(self, block_index: int, missing: List[str]):
        super().__init__(
            f"criterion block {block_index} is missing answers for: {', '.join(missing)}"
        )
        self.block_index = block_index
        self.missing = list(missing)


class VersionMismatchError(HedsError):
    """Two datasheets with different schema versions cannot be diffed."""

    def __init__(self, a: str, b: str):
        super().__init__(f"schema version mismatch: {a!r} vs {b!r}")
        self.versions = (a, b)
