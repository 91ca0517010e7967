"""Exception hierarchy shared by every module.

The CLI maps these onto stable exit codes, so new error kinds should subclass
one of the classes below rather than ``Exception`` directly.
"""

from __future__ import annotations


class GJError(Exception):
    """Base class for all package errors."""


class InputError(GJError, ValueError):
    """Malformed or out-of-range input (bad word, bad parameters, bad spec)."""


class ValidationError(InputError):
    """A forbidden set violates a structural requirement (e.g. not reduced)."""


class ExactDivisionError(GJError, ArithmeticError):
    """An exact division left a remainder; an algebraic invariant was broken."""


class NoRootError(GJError):
    """No positive real root exists in the searched interval."""


class DegenerateError(GJError):
    """The forbidden set admits only finitely many free strings."""


class ResourceError(GJError):
    """A configured size/time budget would be exceeded."""


class InternalError(GJError, RuntimeError):
    """A mathematically guaranteed property failed to hold."""
