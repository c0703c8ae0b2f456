"""
Error types for specint
Every failure a numerical routine can report, with the CLI exit code it maps to
"""
from typing import Optional, Any


class SpecialFunctionError(Exception):
    """Base exception for special-function evaluation"""
    exit_code = 2


class DomainError(SpecialFunctionError):
    """Argument outside the domain of the function"""
    pass


class PoleError(DomainError):
    """Gamma-type function evaluated at a non-positive integer"""
    pass


class InvalidParams(SpecialFunctionError):
    """Parameter record violates one of its invariants"""
    pass


class Unsupported(SpecialFunctionError):
    """No closed form is registered for the requested parameters"""
    pass


class Divergent(SpecialFunctionError):
    """Series has zero or insufficient radius of convergence"""
    pass


class DivergentIntegral(SpecialFunctionError):
    """Tail integral has no decaying envelope"""
    pass


class NoConvergence(SpecialFunctionError):
    """Series did not settle within the term cap"""
    exit_code = 3


class ToleranceNotMet(SpecialFunctionError):
    """Adaptive quadrature stopped above the requested tolerance"""
    exit_code = 3

    def __init__(self, message: str, result: Optional[Any] = None):
        super().__init__(message)
        self.result = result


class RangeOverflow(SpecialFunctionError, OverflowError):
    """Result exceeds the double-precision range"""
    exit_code = 3


class OutputError(SpecialFunctionError, OSError):
    """Report or table could not be written to the requested path"""
    exit_code = 74
