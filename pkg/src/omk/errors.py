"""Exception hierarchy.

Every error carries a stable ``code`` string (used verbatim in JSON output)
and the process exit code the CLI maps it to.
"""


class OmkError(Exception):
    code = "Error"
    exit_code = 2

    def __init__(self, message="", **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        out = {"code": self.code, "message": self.message}
        if self.details:
            out["details"] = self.details
        return out


class InputError(OmkError):
    code = "InputError"


class ParseError(InputError):
    code = "ParseError"

    def __init__(self, message, position, text=""):
        super().__init__(f"{message} at position {position}", position=position, text=text)
        self.position = position


class OrderMismatch(OmkError, ValueError):
    code = "OrderMismatch"


class DivisionByZero(OmkError, ZeroDivisionError):
    code = "DivisionByZero"


class NotDivisible(OmkError, ValueError):
    code = "NotDivisible"


class CapExceeded(OmkError):
    code = "CapExceeded"
    exit_code = 4


class SingularGenerator(InputError):
    code = "SingularGenerator"


class OrderOverflow(OmkError):
    code = "OrderOverflow"
    exit_code = 4


class NotAMember(OmkError, ValueError):
    code = "NotAMember"


class NonIntegerMultiplicity(OmkError, ArithmeticError):
    code = "NonIntegerMultiplicity"
    exit_code = 1


class RouteMismatch(OmkError, ArithmeticError):
    code = "RouteMismatch"
    exit_code = 1


class IndeterminateZeroTimesInfinity(OmkError, ArithmeticError):
    code = "IndeterminateZeroTimesInfinity"


class InfiniteArithmetic(OmkError, ArithmeticError):
    code = "InfiniteArithmetic"


class PoleAtPoint(OmkError, ArithmeticError):
    code = "PoleAtPoint"


class NotAPerfectPower(OmkError, ValueError):
    code = "NotAPerfectPower"


class NotAPolynomial(OmkError, ValueError):
    code = "NotAPolynomial"


class TrivialGroup(OmkError):
    code = "TrivialGroup"
    exit_code = 3


class HasReflections(OmkError):
    code = "HasReflections"
    exit_code = 3


class CoordinateMismatch(InputError):
    code = "CoordinateMismatch"


class StrataNotPartition(InputError):
    code = "StrataNotPartition"


class NonFaithfulPreset(InputError):
    code = "NonFaithfulPreset"
