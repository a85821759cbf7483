#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from enum import Enum


class ErrorCode(str, Enum):
    # Property failures (exit code 1).
    NON_SYMMETRIC = "NON_SYMMETRIC"
    NOT_SIMPLE_SUMMAND = "NOT_SIMPLE_SUMMAND"
    NOT_COMMUTING = "NOT_COMMUTING"
    NOT_INVOLUTION = "NOT_INVOLUTION"
    NOT_AUTOMORPHISM = "NOT_AUTOMORPHISM"
    NOT_LIE_ALGEBRA = "NOT_LIE_ALGEBRA"
    NOT_CARTAN = "NOT_CARTAN"
    NOT_COMPACT = "NOT_COMPACT"
    NOT_SEMISIMPLE = "NOT_SEMISIMPLE"
    THETA_NOT_STABLE = "THETA_NOT_STABLE"
    NOT_IRREDUCIBLE = "NOT_IRREDUCIBLE"
    UNRECOGNIZED_PATTERN = "UNRECOGNIZED_PATTERN"
    NOT_IN_V = "NOT_IN_V"
    NOT_IN_GAMMA = "NOT_IN_GAMMA"
    NOT_IN_SPAN = "NOT_IN_SPAN"
    NON_INTEGER_GRADING = "NON_INTEGER_GRADING"
    NOT_GRADE_REVERSING = "NOT_GRADE_REVERSING"
    NOT_RIEMANNIAN = "NOT_RIEMANNIAN"
    NOT_INVARIANT = "NOT_INVARIANT"
    # Malformed input (exit code 2).
    DIM_MISMATCH = "DIM_MISMATCH"
    BAD_PARAMS = "BAD_PARAMS"
    MALFORMED_DOCUMENT = "MALFORMED_DOCUMENT"
    UNKNOWN_WITNESS = "UNKNOWN_WITNESS"
    # Unsupported (exit code 3).
    ROOT_NOT_GAUSSIAN = "ROOT_NOT_GAUSSIAN"
    TOO_LARGE = "TOO_LARGE"


MALFORMED_CODES = frozenset({
    ErrorCode.DIM_MISMATCH,
    ErrorCode.BAD_PARAMS,
    ErrorCode.MALFORMED_DOCUMENT,
    ErrorCode.UNKNOWN_WITNESS,
})

UNSUPPORTED_CODES = frozenset({
    ErrorCode.ROOT_NOT_GAUSSIAN,
    ErrorCode.TOO_LARGE,
})

(EXIT_PASS, EXIT_FAILURE, EXIT_MALFORMED, EXIT_UNSUPPORTED) = range(4)


class LieDualError(RuntimeError):
    """
    Exception raised by every :py:mod:`liedual` operation.

    The ``code`` attribute is an :py:class:`ErrorCode` telling which
    property failed, so that callers (the CLI in particular) can react
    without parsing the message.
    """
    def __init__(self, code: ErrorCode, message: str):
        """
        Constructor.

        Args:
            code (ErrorCode): The error code.
            message (str): A human readable explanation.
        """
        self.code = ErrorCode(code)
        self.detail = message
        super().__init__(f"Error ({self.code.value}) {message}")

    @property
    def exit_code(self) -> int:
        """
        Returns:
            The CLI exit code associated to this error.
        """
        if self.code in MALFORMED_CODES:
            return EXIT_MALFORMED
        if self.code in UNSUPPORTED_CODES:
            return EXIT_UNSUPPORTED
        return EXIT_FAILURE


def require(condition: bool, code: ErrorCode, message: str):
    """
    Raises a :py:class:`LieDualError` if ``condition`` does not hold.

    Args:
        condition (bool): The checked condition.
        code (ErrorCode): The error code used if ``condition`` is ``False``.
        message (str): The error message.
    """
    if not condition:
        raise LieDualError(code, message)
