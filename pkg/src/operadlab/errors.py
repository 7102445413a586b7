"""Exception hierarchy shared by every module.

Every error carries a ``details`` mapping so the CLI can emit a
machine-readable witness on stderr.
"""

from __future__ import annotations

from typing import Any


class OperadLabError(ValueError):
    """Base class for domain errors (CLI exit code 1)."""

    kind = "domain"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.details = details

    def to_json(self) -> dict:
        return {"error": self.kind, "message": str(self), "details": _plain(self.details)}


class ArityError(OperadLabError):
    kind = "arity"


class DegeneracyError(OperadLabError):
    kind = "degeneracy"


class NormalFormError(OperadLabError):
    kind = "normal-form"


class ParameterError(OperadLabError):
    kind = "parameter"


class SizeMismatchError(OperadLabError):
    kind = "size-mismatch"


class SlotError(OperadLabError, IndexError):
    """Composition or graft index out of range."""

    kind = "index"


class PairingError(OperadLabError):
    kind = "pairing"


class ValidityError(OperadLabError):
    """A configuration violates containment, disjointness or colour rules."""

    kind = "invalid-configuration"


class BlendInvalidError(ValidityError):
    kind = "blend-invalid"


class ChartDomainError(OperadLabError):
    kind = "chart-domain"


class ContractionError(OperadLabError):
    kind = "contraction"


class TreeError(OperadLabError):
    kind = "tree"


class BoundExceededError(OperadLabError):
    kind = "bound-exceeded"


class SamplingExhaustedError(OperadLabError):
    kind = "sampling-exhausted"


class SymmetryError(OperadLabError):
    kind = "symmetry"


def _plain(value: Any) -> Any:
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, (int, float, str, bool)) or value is None:
        return value
    return repr(value)
