"""Exception hierarchy for the abelian codes library.

Every error raised on purpose by ``ab_core`` derives from ``AbelianCodeError``.
The class name is the error's public identity: the workbench prints it on the
diagnostic stream, and ``describe_error`` uses it as the ``type`` of the
structured error envelope.
"""


class AbelianCodeError(Exception):
    """Base class for all library errors."""

    detail = "The requested algebraic operation is not defined for these inputs."


class ParameterError(AbelianCodeError):
    """A verb parameter failed validation (usage error)."""

    detail = "Check the command flags; run with --help for the expected format."


class FormatError(AbelianCodeError):
    """A serialized field, orbit set, polynomial or code record is malformed or not canonical."""

    detail = "The input file does not follow the canonical record format."


class NonPrimeCharacteristic(AbelianCodeError):
    detail = "A field characteristic must be a prime number."


class SizeCapExceeded(AbelianCodeError):
    detail = "Raise ABELIAN_FIELD_SIZE_CAP or choose smaller moduli."

    def __init__(self, message: str, *, order: int, cap: int):
        super().__init__(message)
        self.order = order
        self.cap = cap


class DivisionByZero(AbelianCodeError, ZeroDivisionError):
    detail = "Zero has no multiplicative inverse."


class FieldMismatch(AbelianCodeError):
    detail = "Both operands must belong to the same field."


class SemisimplicityViolation(AbelianCodeError):
    detail = "The moduli must be coprime to the field size (gcd(q, r1*r2) = 1)."


class OrderUnavailable(AbelianCodeError):
    detail = "The field has no element of the requested multiplicative order."


class NotCoprime(AbelianCodeError):
    detail = "The integers involved must be coprime."


class NotAUnit(AbelianCodeError):
    detail = "Multipliers must be units modulo the corresponding modulus."


class NotOrbitClosed(AbelianCodeError):
    detail = "Defining sets must be unions of q-orbits."


class AllZeroAxis(AbelianCodeError):
    detail = "Every hyperplane of this axis is zero; use sd*(0) = 0 instead of a zero run."


class BudgetExceeded(AbelianCodeError):
    detail = "Raise the cap (--cap or the ABELIAN_*_CAP environment variables) to allow the search."

    def __init__(self, message: str, *, size: int, cap: int):
        super().__init__(message)
        self.size = size
        self.cap = cap


class ZeroCode(AbelianCodeError):
    detail = "The operation is undefined for the zero code (defining set equal to I)."


class DesignedDistanceOutOfRange(AbelianCodeError):
    detail = "Designed distances must satisfy 2 <= delta <= r."


class TrivialDistance(AbelianCodeError):
    detail = "Dimension multiplication requires sd*(C) > 1."


class LengthMismatch(AbelianCodeError):
    detail = "The message length must equal the code dimension."


class NotACodeword(AbelianCodeError):
    detail = "The polynomial does not vanish on the defining set of the code."


def describe_error(exc: BaseException) -> dict:
    """Map an exception to the structured error envelope used by the workbench.

    Library errors keep their class name as ``type``; anything else is reported
    as ``internal_error`` so unexpected failures are never mistaken for
    algebraic ones.
    """
    if isinstance(exc, AbelianCodeError):
        return {
            "error": {
                "type": type(exc).__name__,
                "message": str(exc),
                "detail": exc.detail,
            }
        }
    return {
        "error": {
            "type": "internal_error",
            "message": f"{type(exc).__name__}: {exc}",
            "detail": "Unexpected failure; rerun with --verbose for the log trail.",
        }
    }
