"""
cavitybell exceptions
"""

from typing import Any, Optional, Sequence


class CavityBellException(Exception):
    """
    A common exception class
    """
    msg: Optional[str] = None

    def __init__(self, msg: Optional[str] = None, cause: Optional[Exception] = None) -> None:
        self.msg = msg if msg is not None else self.msg
        self.cause = cause
        super(CavityBellException, self).__init__(self.msg)


class ConfigError(CavityBellException):
    """
    A base class for usage errors
    """
    msg = "Invalid configuration"


class AttributeDeserializationError(ConfigError):
    """
    Raised when a configuration value cannot be parsed for its field
    """
    def __init__(self, attr_name: str, value: Any, reason: Optional[str] = None) -> None:
        self.attr_name = attr_name
        msg = "Cannot parse '{}' for field '{}'".format(value, attr_name)
        if reason:
            msg = '{}: {}'.format(msg, reason)
        super(AttributeDeserializationError, self).__init__(msg)


class AttributeNullError(ConfigError):
    """
    Raised when a required configuration field has no value
    """
    def __init__(self, attr_name: str) -> None:
        self.attr_name = attr_name
        super(AttributeNullError, self).__init__("Field '{}' cannot be None".format(attr_name))


class InvalidParametersError(ConfigError):
    """
    Raised when physical parameters violate their contract
    """
    msg = "Invalid physical parameters"


class NumericContractError(CavityBellException):
    """
    A base class for violated numeric contracts
    """
    msg = "Numeric contract violated"


class ContractError(NumericContractError):
    """
    Raised when a matrix does not satisfy the preconditions of an operation
    """
    msg = "Matrix contract violated"


class EigensolverError(NumericContractError):
    """
    Raised when the Jacobi eigensolver does not converge or leaves a large residual
    """
    msg = "Eigensolver failed"


class InternalConsistencyError(NumericContractError):
    """
    Raised when a quantity that must be real comes out complex
    """
    msg = "Internal consistency check failed"


class DensityMatrixError(NumericContractError):
    """
    Raised when a matrix is not a valid two-qubit density matrix
    """
    msg = "Invalid density matrix"


class DegeneracyError(NumericContractError):
    """
    Raised when the expected degenerate pair of correlation eigenvalues is missing
    """
    msg = "Correlation spectrum is not degenerate"


class GridTruncationError(NumericContractError):
    """
    Raised when a displaced packet leaves the oracle grid
    """
    msg = "Packet escapes the position grid"


class VerificationError(CavityBellException):
    """
    Raised when one or more verification checks fail
    """
    msg = "Verification failed"

    def __init__(self, failures: Sequence[Any], msg: Optional[str] = None) -> None:
        self.failures = list(failures)
        if msg is None:
            msg = "{} verification check(s) failed: {}".format(
                len(self.failures), ', '.join(getattr(f, 'name', str(f)) for f in self.failures))
        super(VerificationError, self).__init__(msg)
