"""Exceptions raised when a precondition of a computation fails."""

from __future__ import annotations

from typing import Any, Dict, Optional


class PreconditionError(Exception):
    """Base class; ``kind`` and ``witness`` feed the CLI's JSON error object."""

    kind = "precondition"

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.witness = witness or {}

    def as_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"kind": self.kind, "message": str(self)}
        out.update(self.witness)
        return out


class NotTwoDeveloped(PreconditionError):
    kind = "not_2_developed"


class NotPrickly(PreconditionError):
    kind = "not_prickly"


class GradingTie(PreconditionError):
    kind = "grading_tie"


class GenericityFailure(PreconditionError):
    kind = "genericity_failure"
