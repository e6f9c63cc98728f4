"""Constant-weight B2 codebooks from integer Sidon sets.

Coordinate ``k`` (0-indexed) is written as ``k = a * omega + b`` and gets the
integer weight ``a * r**b`` with ``r = n // omega``. The resulting map ``F``
on {0, 1, 2}^n is additive, and every integer in ``[0, r**omega - 1]`` has a
weight-``omega`` binary preimage (one coordinate per digit position ``b``).
Pushing a Sidon set through that preimage yields a B2 code.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

from b2weight.core import (
    B2Error,
    BinaryVector,
    BoundResult,
    Codebook,
    CodeParameters,
    DomainError,
    Variant,
    WeightFraction,
    as_wbar,
)
from b2weight.sidon import bose_sidon_set, largest_prime_q

_INTEGER_TOL = 1e-9


class IndexSplit(NamedTuple):
    a: int
    b: int


def index_split(k: int, omega: int) -> IndexSplit:
    """``(k // omega, k % omega)``."""
    if k < 0 or omega < 1:
        raise B2Error(f"need k >= 0 and omega >= 1, got k={k}, omega={omega}")
    return IndexSplit(*divmod(k, omega))


def _require_divisible(params: CodeParameters) -> None:
    if not params.divisible:
        raise B2Error(
            f"omega must divide n (got n={params.n}, omega={params.omega}); "
            "only the integer n/omega construction is implemented"
        )


def map_f(c: Sequence[int] | BinaryVector, params: CodeParameters) -> int:
    """Exact value of the additive map ``F`` on a vector over {0, 1, 2}."""
    _require_divisible(params)
    entries = c.bits if isinstance(c, BinaryVector) else tuple(c)
    if len(entries) != params.n:
        raise B2Error(f"vector length {len(entries)} != n={params.n}")
    if any(x not in (0, 1, 2) for x in entries):
        raise B2Error("entries must lie in {0, 1, 2}")
    r = params.radix
    total = 0
    for k, x in enumerate(entries):
        if x:
            a, b = index_split(k, params.omega)
            total += a * r**b * x
    return total


def unmap(m: int, params: CodeParameters) -> BinaryVector:
    """Weight-``omega`` preimage of ``m`` under ``F``.

    With base-``r`` digits ``m_0 .. m_{omega-1}``, the support is
    ``{m_i * omega + i}``.
    """
    _require_divisible(params)
    r, omega = params.radix, params.omega
    if not 0 <= m < r**omega:
        raise B2Error(f"m={m} outside [0, {r**omega - 1}]")
    support = []
    for i in range(omega):
        m, digit = divmod(m, r)
        support.append(digit * omega + i)
    return BinaryVector.from_support(support, params.n)


def build_codebook(params: CodeParameters) -> Codebook:
    """Codebook of ``q`` weight-``omega`` vectors, ``q`` the largest prime with ``q^2 - 1 <= (n/omega)^omega``."""
    _require_divisible(params)
    if 2 * params.omega > params.n:
        raise B2Error(f"need omega <= n/2, got n={params.n}, omega={params.omega}")
    M = params.radix**params.omega
    if M < 8:
        raise B2Error(f"(n/omega)^omega = {M} is too small for the construction (need >= 8)")
    sidon = bose_sidon_set(largest_prime_q(M))
    return Codebook(params, tuple(unmap(s, params) for s in sidon.elements))


def lower_bound_rate(wbar: WeightFraction | float) -> BoundResult:
    """Rate achieved asymptotically by the Sidon-based construction."""
    w = as_wbar(wbar)
    if w > 0.5:
        raise DomainError(f"lower bound defined for wbar <= 1/2, got {w}")
    inv = 1.0 / w
    k = round(inv)
    if abs(inv - k) <= _INTEGER_TOL:
        return BoundResult(Variant.LOWER, 0.5 * w * math.log2(k))
    lo, hi = math.floor(inv), math.ceil(inv)
    gap = 2.0 * (hi - lo)
    value = (w * hi - 1.0) / gap * math.log2(lo) + (1.0 - w * lo) / gap * math.log2(hi)
    return BoundResult(Variant.LOWER, value)
