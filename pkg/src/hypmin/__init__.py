"""Minimal Weierstrass equations of hyperelliptic curves over Q.

Exact-arithmetic computation of minimal and pointed-minimal integral
models y^2 + Q(x) y = P(x) of hyperelliptic curves of genus g >= 1,
together with the change of variables and the factored minimal
discriminant.
"""

from .arith import FactoredInteger, factorize, is_prime, val_p
from .curve import (
    AffineChange,
    MobiusChange,
    PointedEquation,
    WeierstrassEquation,
    apply_affine_change,
    apply_change,
    discriminant,
    validate,
    validate_pointed,
)
from .errors import (
    DegreeError,
    FactorizationIncompleteError,
    HypminError,
    InternalError,
    NotCoprimeError,
    OracleTimeoutError,
    SingularCurveError,
)
from .localize import MinimalityVerdict, Status, is_minimal_at, is_unique_minimal_at
from .minimize import MinimizationResult, minimize
from .pointed import PointedResult, minimize_pointed

__version__ = "0.1.0"

__all__ = [
    "AffineChange",
    "DegreeError",
    "FactoredInteger",
    "FactorizationIncompleteError",
    "HypminError",
    "InternalError",
    "MinimalityVerdict",
    "MinimizationResult",
    "MobiusChange",
    "NotCoprimeError",
    "OracleTimeoutError",
    "PointedEquation",
    "PointedResult",
    "SingularCurveError",
    "Status",
    "WeierstrassEquation",
    "apply_affine_change",
    "apply_change",
    "discriminant",
    "factorize",
    "is_minimal_at",
    "is_prime",
    "is_unique_minimal_at",
    "minimize",
    "minimize_pointed",
    "validate",
    "validate_pointed",
    "val_p",
]
