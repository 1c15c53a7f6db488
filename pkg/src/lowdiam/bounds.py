"""Closed-form part-count bounds that outputs are checked against."""

from __future__ import annotations

import math
from fractions import Fraction

# kind -> (description, needs n)
KINDS = {
    "diam2_stars": ("one star per vertex: n", True),
    "diam2_prune": ("single part once e0 may hold n^2/4 edges: 1", False),
    "diam3_upper": ("50 / eps^2", False),
    "diam4_upper": ("16 / eps", False),
    "sampling_diam3": ("2 log2(n) / eps^2 samples", True),
    "cover5_upper": ("1 / eps^2", False),
    "cover6_upper": ("1 / eps", False),
    "cliques_lower": ("1 / (16 eps)", False),
}


def bound_formula(kind: str, n: int | None = None, eps=None) -> float:
    """Value of the named bound at (n, eps).

    >>> bound_formula("diam3_upper", eps=Fraction(1, 10))
    5000.0
    """
    if kind not in KINDS:
        raise ValueError(f"unknown bound kind {kind!r}; expected one of {sorted(KINDS)}")
    if KINDS[kind][1] and n is None:
        raise ValueError(f"bound {kind!r} needs n")
    if kind == "diam2_stars":
        return float(n)
    if kind == "diam2_prune":
        return 1.0
    eps = Fraction(str(eps)) if isinstance(eps, float) else Fraction(eps)
    if eps <= 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    if kind == "diam3_upper":
        return float(50 / eps**2)
    if kind == "diam4_upper":
        return float(16 / eps)
    if kind == "sampling_diam3":
        return float(2 / eps**2) * math.log2(n)
    if kind == "cover5_upper":
        return float(1 / eps**2)
    if kind == "cover6_upper":
        return float(1 / eps)
    return float(1 / (16 * eps))


def sample_count(n: int, eps) -> int:
    """Number of random pairs the diameter-3 sampling cover draws."""
    return math.ceil(bound_formula("sampling_diam3", n=n, eps=eps))
