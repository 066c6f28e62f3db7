"""Exception hierarchy shared by every module of the package."""


class LambertTsallisError(Exception):
    """Base class for all package errors."""


class DomainError(LambertTsallisError, ValueError):
    """Argument lies outside the real domain of the requested function or branch."""


class ZeroPowerError(LambertTsallisError, ValueError):
    """The q-exponential power rule was asked for the exponent r = 0."""


class UnsupportedQ(LambertTsallisError, ValueError):
    """No closed form is available for this deformation parameter."""


class BranchUnavailable(LambertTsallisError, ValueError):
    """The secondary real branch was requested but no finite branch point exists."""


class NoConvergence(LambertTsallisError, ArithmeticError):
    """An iteration exhausted its budget without meeting the residual tolerance."""


class EmptyResult(LambertTsallisError, ArithmeticError):
    """No seed of the complex enumeration converged."""


class DegenerateError(LambertTsallisError, ValueError):
    """The trinomial cannot be expressed through the W_q formulas."""


class DegenerateABError(DegenerateError):
    """Fermat problem with A == B == C (every term cancels)."""


class NoSolution(LambertTsallisError, ValueError):
    """The reduced equation is inconsistent and has no solution."""


class NoRootFound(LambertTsallisError, ArithmeticError):
    """No candidate passed residual verification (raised only on request)."""


class RangeError(LambertTsallisError, ValueError):
    """Integer argument outside the range where double precision is exact."""
