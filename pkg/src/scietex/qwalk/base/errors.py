"""
Quantum walk error hierarchy.

All errors raised by the package derive from `QuantumWalkError`. Errors caused by bad argument
values also derive from `ValueError`, so code that already guards calls with
`except ValueError` keeps working.

Classes:
    QuantumWalkError: Root of the hierarchy; knows how to render itself as a dict.
    WindowTooSmall: A lattice window does not contain the sites an operation needs.
    WindowMismatch: Two windows that must agree (state vs. coin field) do not.
    EnvelopeViolation: A generated coin breaks the exponential envelope bound.
    UnsupportedParameter: Parameter values outside the range an operation supports.
    ConvergenceFailure: An eigensolver result misses its residual target.
    AllZeroCoefficients: Superposition coefficients that are all zero.
    SchemaError: Configuration document does not match the schema.
    RangeError: Configuration value outside its permitted range.
"""

from typing import Any, Optional


class QuantumWalkError(Exception):
    """
    Base class of all quantum walk errors.

    Parameters
    ----------
    message : str
        Human-readable description of the failure.
    path : Optional[str], optional
        Dotted path of the offending configuration field, if any.
    """

    def __init__(self, message: str, path: Optional[str] = None) -> None:
        self.message = message
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)

    def to_dict(self) -> dict[str, Any]:
        """
        Render the error as a machine-readable dictionary.

        Returns
        -------
        dict[str, Any]
            Mapping with keys ``error`` (class name), ``message`` and ``path``.
        """
        return {"error": type(self).__name__, "message": self.message, "path": self.path}


class WindowTooSmall(QuantumWalkError, ValueError):
    """A lattice window does not contain the sites an operation needs."""


class WindowMismatch(QuantumWalkError, ValueError):
    """Windows of a state and a coin field are incompatible for the requested boundary."""


class EnvelopeViolation(QuantumWalkError, RuntimeError):
    """A generated perturbation coin breaks the exponential envelope bound."""


class UnsupportedParameter(QuantumWalkError, ValueError):
    """Model parameters outside the range an operation is defined for."""


class ConvergenceFailure(QuantumWalkError, ArithmeticError):
    """The eigensolver did not reach its residual target."""


class AllZeroCoefficients(QuantumWalkError, ValueError):
    """All superposition coefficients are zero."""


class SchemaError(QuantumWalkError, ValueError):
    """Configuration document does not match the schema."""


class RangeError(QuantumWalkError, ValueError):
    """Configuration value outside its permitted range."""
