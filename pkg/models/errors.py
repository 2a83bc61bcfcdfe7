"""
Toolkit Exceptions
Every failure the library can signal, grouped by the CLI exit code it maps to.
"""


class BicomplexToolkitError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


# Parse / configuration errors (exit 2)

class ParseError(BicomplexToolkitError):
    exit_code = 2


class ExpressionSyntaxError(ParseError):
    """Malformed expression text; `offset` is the byte offset of the offending token."""

    def __init__(self, message: str, offset: int, source: str = ""):
        self.offset = offset
        self.source = source
        super().__init__(f"{message} at offset {offset}")


class UnknownVariable(ParseError):
    pass


class UnknownFunction(ParseError):
    pass


class ConfigError(ParseError):
    pass


class InvalidArgument(ParseError, ValueError):
    """A value handed to the toolkit is outside what the operation accepts."""


# Domain errors (exit 3)

class DomainError(BicomplexToolkitError):
    exit_code = 3


class EvalDomain(DomainError):
    pass


class OutOfDomain(DomainError):
    pass


class OutOfHalfPlane(DomainError):
    pass


class DegenerateKernel(DomainError):
    pass


class NonInvertible(DomainError):
    pass


class ComponentMismatch(DomainError):
    pass


class NonAnalytic(DomainError):
    pass


class UnboundedData(DomainError):
    pass


# Certification errors (exit 4)

class CertificationError(BicomplexToolkitError):
    exit_code = 4


class NotHarmonic(CertificationError):
    pass


class RepresentationMismatch(CertificationError):
    pass
