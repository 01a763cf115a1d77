#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Exceptions and warning categories used across the package.

Hard failures raise one of the :class:`PeoError` subclasses. Soft conditions
(truncated series, verbatim formulas that depart from their derived form)
go through :func:`warnings.warn` with the categories defined here.
"""


class PeoError(Exception):
    """Base class for every error raised by peocalc."""


class DomainError(PeoError, ValueError):
    """An argument lies outside the domain of the operation."""


class PoleError(DomainError):
    """The Gamma function was evaluated at one of its poles."""


class ConvergenceError(PeoError, ArithmeticError):
    """A series did not reach the requested tolerance."""


class ConditioningError(PeoError, ArithmeticError):
    """Eigenvalues are too close for the Cayley-Hamilton reduction."""


class AlgebraSizeError(PeoError, ValueError):
    """Exact operator expansion exceeds the configured size guard."""


class ConfigError(PeoError, ValueError):
    """Invalid problem configuration or command line input."""


class TruncationWarning(UserWarning):
    """A series was truncated or its tail bound was not met."""


class DiscrepancyWarning(UserWarning):
    """A formula evaluated verbatim departs from its derived counterpart."""


#: exit status used by the command line for each error family
EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3


def exit_code(error):
    """Returns the command line exit status for an exception.

    Args:
        error (Exception): raised error.

    Returns:
        int
    """
    if isinstance(error, ConfigError):
        return EXIT_USAGE
    if isinstance(error, PeoError):
        return EXIT_NUMERIC
    return EXIT_USAGE
