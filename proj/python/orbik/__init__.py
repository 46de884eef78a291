"""Exact inertial products on K-theory of linear quotient stacks [V/G].

The heavy lifting lives in the compiled extension ``orbik._core``.
"""

from ._core import (
    ContractError,
    Cyclotomic,
    Group,
    InertialProduct,
    ParseError,
    compare,
    drinfeld_fusion,
)

__all__ = [
    "ContractError",
    "Cyclotomic",
    "Group",
    "InertialProduct",
    "ParseError",
    "compare",
    "drinfeld_fusion",
]
