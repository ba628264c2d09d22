"""Exact fractal-top computations for graph IFSs on the line."""

from ._topskit import (
    BudgetError,
    DomainError,
    Error,
    ExactReal,
    GraphIFS,
    ParseError,
    UncertifiedHullError,
    ValidationError,
    compare,
    first_rbw_length,
    is_reduced_banned,
    rbw_endpoint,
    rbw_enumerate,
)

__all__ = [
    "BudgetError",
    "DomainError",
    "Error",
    "ExactReal",
    "GraphIFS",
    "ParseError",
    "UncertifiedHullError",
    "ValidationError",
    "compare",
    "first_rbw_length",
    "is_reduced_banned",
    "rbw_endpoint",
    "rbw_enumerate",
]
