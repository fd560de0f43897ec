"""Exception types raised by the verification engine."""


class CourantKitError(Exception):
    """Base class for every domain error."""


class ChartMismatch(CourantKitError, ValueError):
    pass


class DegreeMismatch(CourantKitError, ValueError):
    pass


class NotClosed(CourantKitError):
    def __init__(self, residual, message="form is not closed"):
        super().__init__(f"{message}: d = {residual}")
        self.residual = residual


class RationalCoefficientUnsupported(CourantKitError):
    pass


class NotHamiltonian(CourantKitError):
    """No vector field solves d(alpha) = -iota_v(omega); ``residual`` is the leftover form."""

    def __init__(self, residual):
        super().__init__(f"form is not Hamiltonian; residual {residual}")
        self.residual = residual


class NoPrimitive(CourantKitError):
    def __init__(self, residual):
        super().__init__(f"contraction is not closed: d = {residual}")
        self.residual = residual


class DegenerateStructure(CourantKitError):
    pass


class MembershipViolation(CourantKitError):
    def __init__(self, certificate):
        super().__init__(f"section does not preserve the splitting; certificate {certificate}")
        self.certificate = certificate


class NotPreserving(MembershipViolation):
    pass


class TwistMismatch(CourantKitError):
    pass


class ParseError(CourantKitError):
    def __init__(self, message, line=None, column=None):
        where = f"{line}:{column}: " if line is not None else ""
        super().__init__(f"{where}{message}")
        self.line = line
        self.column = column
