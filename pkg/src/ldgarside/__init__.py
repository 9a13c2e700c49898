"""Symbolic engine for locally left-Garside monoids: LD-expansions and braids."""

from . import braids, garside, mld, reversing, terms
from .reversing import BudgetExhausted, Complement, NotDivisor

__all__ = [
    "braids",
    "garside",
    "mld",
    "reversing",
    "terms",
    "BudgetExhausted",
    "Complement",
    "NotDivisor",
]
