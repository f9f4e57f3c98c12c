"""Exception hierarchy with machine-readable error codes.

Every service-level failure maps to one code so API clients and the CLI
can branch on ``code`` instead of parsing messages.
"""

from __future__ import annotations

from typing import Any


class PracticeError(Exception):
    """Base error. ``code`` is stable; ``detail`` carries structured context."""

    code = "error"
    http_status = 400

    def __init__(self, message: str, *, detail: dict[str, Any] | None = None):
        super().__init__(message)
        self.message = message
        self.detail = detail or {}

    def payload(self) -> dict[str, Any]:
        return {"code": self.code, "message": self.message, "detail": self.detail}


class ValidationError(PracticeError):
    code = "validation_error"
    http_status = 422


class SliderOffGridError(ValidationError):
    """Slider value not on the 11-point grid; detail lists the legal values."""

    code = "slider_off_grid"


class NotFoundError(PracticeError):
    code = "not_found"
    http_status = 404


class InsufficientBankError(PracticeError):
    """Topic has fewer exercises than one series needs."""

    code = "insufficient_bank"
    http_status = 422


class WrongPhaseError(PracticeError):
    """Operation not legal in the session's current phase."""

    code = "wrong_phase"
    http_status = 409


class AlreadyAnsweredError(PracticeError):
    code = "already_answered"
    http_status = 409


class ConfigError(PracticeError):
    code = "config_error"
    http_status = 400


class BankFormatError(PracticeError):
    """Malformed bank or catalog file; message carries the line number."""

    code = "bank_format"
    http_status = 400


class StoreConsistencyError(PracticeError):
    """Attempt log disagrees with itself during replay."""

    code = "store_inconsistent"
    http_status = 500
