"""Exception hierarchy for the vulnspan pipeline."""

from __future__ import annotations


class VulnspanError(Exception):
    """Base class for all errors raised by this package."""


# --- repository access ---

class NotARepositoryError(VulnspanError):
    """The given path does not contain a git object store."""


class UnknownCommitError(VulnspanError):
    """A commit id does not resolve in the repository."""


class FileAbsentError(VulnspanError):
    """A file does not exist at the requested commit."""


class LineOutOfRangeError(VulnspanError):
    """A requested line number lies outside the file."""


class FunctionAbsentError(VulnspanError):
    """The named function cannot be located at the commit."""


# --- patch parsing ---

class MalformedDiffError(VulnspanError):
    """Unified diff text violates the format.

    ``offset`` is the byte offset of the first violating line.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset


class EmptyPatchError(VulnspanError):
    """A patch with zero hunks cannot be classified."""


# --- C front-end ---

class UnparseableError(VulnspanError):
    """No function definition could be recovered from the source."""


# --- slicing ---

class EmptyFlowError(VulnspanError):
    """Slicing produced nothing that maps to pre-patch statements."""


# --- LLM refinement ---

class BackendUnavailableError(VulnspanError):
    """The chat-completion backend stayed unreachable after retries."""


class TokenLimitError(VulnspanError):
    """The backend rejected or truncated the request for length."""


class UnparseableResponseError(VulnspanError):
    """The model response carries no bracketed line list."""


# --- clone detection ---

class EmptySetError(VulnspanError):
    """similarity_score is undefined for an empty statement set."""


# --- configuration ---

class ConfigError(VulnspanError):
    """One or more configuration values are invalid.

    ``problems`` lists every violation found, field by field.
    """

    def __init__(self, problems: list[str]):
        super().__init__("invalid configuration: " + "; ".join(problems))
        self.problems = list(problems)
