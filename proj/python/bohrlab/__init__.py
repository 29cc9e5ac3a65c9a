"""Bohr radius and majorant bounds for Hadamard convolution operators."""

from ._core import *  # noqa: F401,F403
from ._core import BohrLabError, ContractError, DomainError, UnsupportedRange  # noqa: F401
