"""Exception hierarchy for the hypmin package."""


class HypminError(Exception):
    """Base class for all errors raised by hypmin."""


class SingularCurveError(HypminError):
    """The input equation defines a singular (non-smooth) curve."""


class DegreeError(HypminError):
    """Degree bounds of a Weierstrass equation are violated."""


class NotCoprimeError(HypminError):
    """Modular inverse of a non-invertible element was requested."""


class FactorizationIncompleteError(HypminError):
    """An integer could not be fully factored within the rho budget."""


class OracleTimeoutError(HypminError):
    """The brute-force oracle exceeded its node budget."""


class InternalError(HypminError):
    """An internal consistency check failed; indicates a bug."""
