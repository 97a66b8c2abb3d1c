"""Exception types shared across the package."""

from __future__ import annotations


class LeetforgeError(Exception):
    """Base class for every error this package raises on purpose."""


class InputFormatError(LeetforgeError):
    """Malformed user-supplied input: rule files, wordlists, hash lists."""


class RuleParseError(InputFormatError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ExportError(InputFormatError):
    """A rule cannot be written in the target rule syntax."""


class WordlistDecodeError(InputFormatError):
    def __init__(self, source: str, line: int, message: str = "invalid UTF-8"):
        super().__init__(f"{source}, line {line}: {message}")
        self.source = source
        self.line = line


class HashFormatError(InputFormatError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownAlgorithmError(InputFormatError):
    """Digest algorithm id is not in the registry."""


class HashStoreError(LeetforgeError):
    """Digest store contract violation: wrong width, unknown digest, bad plaintext."""


class AlgorithmMismatchError(LeetforgeError):
    """A store was asked to match digests of a different algorithm."""
