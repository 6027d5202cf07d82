"""Exceptions shared across the package."""
from __future__ import annotations


class JacringError(Exception):
    """Base class for all package-specific errors."""


class HypothesisViolation(JacringError):
    """An operation's mathematical precondition does not hold (e.g. r >= n
    where a strict complete-intersection setting is required)."""


class CertificateRequired(JacringError):
    """A verification was requested without a successful certificate."""


class SliceMismatch(JacringError):
    """An operator produced a term outside the expected graded slice; this
    always indicates a bookkeeping bug and is never silently ignored."""


class InputError(JacringError):
    """Problem input rejected at validation time (non-homogeneous or zero
    polynomial, bad variable count, ...)."""
