"""
Error Hierarchy

Exceptions raised across hardy-verify. The command line maps InputError to
exit code 2 and AssertionViolation to exit code 1.
"""

from typing import Optional


class VerificationError(Exception):
    """Base class for all hardy-verify errors."""


class InputError(VerificationError, ValueError):
    """Malformed input, non-finite numbers or out-of-range parameters."""


class TailNotComputableError(InputError):
    """The infinite tail of a norm sum cannot be bracketed for this weight rule."""


class HypothesisError(InputError):
    """Inputs violate the hypotheses of the statement being probed."""


class AssertionViolation(VerificationError):
    """
    A claim inside its proven parameter range failed numerically.

    Attributes:
        check: Identifier of the violated check
        index: Offending index, when the check is a sweep over n
        value: Offending margin or residual
    """

    def __init__(
        self,
        check: str,
        message: str,
        index: Optional[int] = None,
        value: Optional[float] = None
    ):
        self.check = check
        self.index = index
        self.value = value
        detail = f"[{check}] {message}"
        if index is not None:
            detail += f" at n={index}"
        if value is not None:
            detail += f" (value={value:.6e})"
        super().__init__(detail)
