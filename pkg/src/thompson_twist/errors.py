"""Exception hierarchy.  Every error carries a short machine-readable ``code``."""


class ThompsonError(Exception):
    code = "error"

    def __init__(self, detail=""):
        super().__init__(detail)
        self.detail = detail

    def to_json(self):
        return {"error": self.code, "detail": self.detail}


class ValidationError(ThompsonError, ValueError):
    code = "validation"


class NonMonotone(ValidationError):
    code = "NonMonotone"


class BadSlope(ValidationError):
    code = "BadSlope"


class TailMismatch(ValidationError):
    code = "TailMismatch"


class NonDyadic(ValidationError):
    code = "NonDyadic"


class PeriodSeedMismatch(ValidationError):
    code = "PeriodSeedMismatch"


class FormatError(ValidationError):
    """Malformed JSON document or wrong element type."""

    code = "FormatError"


class WindowInconsistency(ThompsonError, ArithmeticError):
    code = "WindowInconsistency"


class ProbeMismatch(ThompsonError, ArithmeticError):
    code = "ProbeMismatch"


class NotAutomorphism(ThompsonError, ValueError):
    code = "NotAutomorphism"


class DimensionMismatch(ThompsonError, ValueError):
    code = "DimensionMismatch"
