"""Entropy functions and the two single-letter entropy bounds on the rate.

All logarithms are base 2, so bounds come out in bits per symbol.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from b2weight.core import BoundResult, DomainError, Variant, WeightFraction, as_wbar

_SLACK = 1e-12


def _check_probability(x: float, name: str = "x") -> float:
    if not -_SLACK <= x <= 1.0 + _SLACK:
        raise DomainError(f"{name} must lie in [0, 1], got {x!r}")
    return min(max(float(x), 0.0), 1.0)


def _plogp(p: float) -> float:
    # 0 log 0 = 0
    if p <= 0.0:
        return 0.0
    return p * math.log2(p)


def plogp(p: np.ndarray) -> np.ndarray:
    """Elementwise ``p * log2(p)`` with ``0 log 0 = 0``."""
    p = np.asarray(p, dtype=float)
    out = np.zeros_like(p)
    mask = p > 0.0
    out[mask] = p[mask] * np.log2(p[mask])
    return out


def binary_entropy_array(x: np.ndarray) -> np.ndarray:
    """Vectorized :func:`binary_entropy` without domain checks (inputs are clipped)."""
    x = np.clip(np.asarray(x, dtype=float), 0.0, 1.0)
    return -plogp(x) - plogp(1.0 - x)


@dataclass(frozen=True)
class TernaryDistribution:
    """Distribution of a {0, +1, -1}-valued variable."""

    p0: float
    p1: float
    pm1: float

    def __post_init__(self) -> None:
        for name in ("p0", "p1", "pm1"):
            _check_probability(getattr(self, name), name)
        total = self.p0 + self.p1 + self.pm1
        if abs(total - 1.0) > _SLACK:
            raise DomainError(f"probabilities sum to {total!r}, not 1")

    @classmethod
    def symmetric(cls, p0: float) -> TernaryDistribution:
        """(p0, (1-p0)/2, (1-p0)/2)."""
        rest = (1.0 - p0) / 2.0
        return cls(p0, rest, rest)


def binary_entropy(x: float) -> float:
    """Binary Shannon entropy ``H(x)`` in bits."""
    x = _check_probability(x)
    return -_plogp(x) - _plogp(1.0 - x)


def ternary_entropy(d: TernaryDistribution | tuple[float, float, float]) -> float:
    """Shannon entropy of a three-point distribution, in bits."""
    if not isinstance(d, TernaryDistribution):
        d = TernaryDistribution(*d)
    return -(_plogp(d.p0) + _plogp(d.p1) + _plogp(d.pm1))


def binom2_entropy(p: float) -> float:
    """Entropy of Binomial(2, p), i.e. of ``C + C'`` for two independent Bernoulli(p) bits.

    Uses the closed form ``-2p log p - 2(1-p) log(1-p) - 2p + 2p^2``, which
    equals ``2 H(p) - 2p(1-p)``.
    """
    p = _check_probability(p, "p")
    return -2.0 * _plogp(p) - 2.0 * _plogp(1.0 - p) - 2.0 * p + 2.0 * p * p


def difference_distribution(wbar: float) -> TernaryDistribution:
    """Law of ``C - C'`` for independent Bernoulli(wbar) bits."""
    cross = wbar * (1.0 - wbar)
    return TernaryDistribution(wbar * wbar + (1.0 - wbar) ** 2, cross, cross)


def bound_sum_entropy(wbar: WeightFraction | float) -> BoundResult:
    """Rate bound ``H_bin(wbar) / 2`` from the entropy of pairwise sums."""
    w = as_wbar(wbar)
    return BoundResult(Variant.SUM_ENTROPY, 0.5 * binom2_entropy(w))


def bound_diff_entropy(wbar: WeightFraction | float) -> BoundResult:
    """Rate bound ``H(q) / 2`` from the entropy of pairwise differences."""
    w = as_wbar(wbar)
    return BoundResult(Variant.DIFF_ENTROPY, 0.5 * ternary_entropy(difference_distribution(w)))
