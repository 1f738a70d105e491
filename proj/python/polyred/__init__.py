"""Exact reduction of polylogarithmic integrals and Euler sums to zeta values."""

import json

from ._polyred import DomainError, ParseError, evaluate, kappa_num
from ._polyred import reduce as _reduce
from ._polyred import tables_json as _tables_json
from ._polyred import verify_json as _verify_json

__all__ = ["DomainError", "ParseError", "evaluate", "kappa_num", "reduce", "reduce_json", "tables", "verify"]


def reduce(target: str, format: str = "text") -> str:
    """Closed form of a target such as "K(3,0,3)" or "S(1^2,2)" as text or LaTeX."""
    return _reduce(target, format).strip()


def reduce_json(target: str, trace: bool = False) -> dict:
    return json.loads(_reduce(target, "json", trace))


def verify(target: str, tolerance: float = 1e-8) -> dict:
    """Compare the closed form against an independent quadrature or summation."""
    return json.loads(_verify_json(target, tolerance))


def tables(range: str = "1..9") -> dict:
    return json.loads(_tables_json(range))
