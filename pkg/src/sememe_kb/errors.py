"""Domain exceptions shared across the knowledge-base modules.

Every error carries a machine-readable ``kind`` so the CLI and HTTP
layers can map it to exit codes / status codes uniformly.
"""

from __future__ import annotations


class KbError(Exception):
    """Base class for all knowledge-base domain errors."""

    kind = "Error"

    @property
    def message(self) -> str:
        return str(self)


class UnknownSememe(KbError):
    kind = "UnknownSememe"


class UnknownSense(KbError):
    kind = "UnknownSense"


class NoSuchWord(KbError):
    kind = "NoSuchWord"


class InvalidK(KbError):
    kind = "InvalidK"


class BadParameter(KbError):
    kind = "BadParameter"


class LoadError(KbError):
    """Dataset rejected at load time.

    ``kind`` is one of: DuplicateId, DuplicateRef, DanglingParent,
    ParentCategoryMismatch, CycleDetected, DuplicateSenseId,
    DefinitionParseError, UnknownSememeInDef, BadRecord.
    """

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind
