"""Prefix/suffix decomposition bounds and the grid min-max optimizer.

Each codeword of length ``n`` is split into a prefix of length ``e`` and a
suffix of length ``f = n - e``; codewords are grouped by prefix weight
``omega'``. The asymptotic bounds are functions of the normalized split
``(ebar, wprime) = (e/n, omega'/n)`` and are minimized over ``ebar`` after
maximizing over the feasible ``wprime``.

Limit conventions at the grid edges:

* ``x * H(y / x) = 0`` when ``x = 0``;
* suffix terms weighted by ``1 - ebar`` vanish when ``ebar = 1``;
* the suffix zero-probability ``p0`` is 1 when the suffix is empty, and is
  clamped to ``[1/2, 1]`` otherwise.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from b2weight.core import (
    B2Error,
    BoundResult,
    InfeasibleSplitError,
    Variant,
    WeightFraction,
    as_wbar,
)
from b2weight.entropy_bounds import binary_entropy, binary_entropy_array, plogp

_FEAS_SLACK = 1e-12

Objective = Callable[[float, np.ndarray], "np.ndarray | float"]


class TieBreak(enum.Enum):
    SMALLEST_EBAR = "smallest_ebar"


@dataclass(frozen=True)
class OptimizerOptions:
    coarse_step: float = 1e-3
    refine_rounds: int = 3
    refine_shrink: float = 0.1
    tie_break: TieBreak = TieBreak.SMALLEST_EBAR

    def __post_init__(self) -> None:
        if not self.coarse_step > 0:
            raise B2Error(f"coarse_step must be positive, got {self.coarse_step}")
        if self.refine_rounds < 0:
            raise B2Error(f"refine_rounds must be >= 0, got {self.refine_rounds}")
        if not 0 < self.refine_shrink < 1:
            raise B2Error(f"refine_shrink must lie in (0, 1), got {self.refine_shrink}")


@dataclass(frozen=True)
class SplitPoint:
    ebar: float
    wprime: float


def feasible_wprime_interval(ebar: float, wbar: float) -> tuple[float, float]:
    """Range of normalized prefix weights compatible with ``ebar`` and ``wbar``."""
    return max(0.0, wbar - 1.0 + ebar), min(ebar, wbar)


def _check_split(ebar: float, wprime: float, wbar: float) -> None:
    if not -_FEAS_SLACK <= ebar <= 1.0 + _FEAS_SLACK:
        raise InfeasibleSplitError(f"ebar must lie in [0, 1], got {ebar}")
    lo, hi = feasible_wprime_interval(ebar, wbar)
    if not lo - _FEAS_SLACK <= wprime <= hi + _FEAS_SLACK:
        raise InfeasibleSplitError(
            f"wprime={wprime} outside feasible interval [{lo}, {hi}] for ebar={ebar}, wbar={wbar}"
        )


def _scaled_entropy(length: float, ones: np.ndarray) -> np.ndarray:
    """``length * H(ones / length)``, zero for an empty block."""
    if length <= 0.0:
        return np.zeros_like(ones)
    return length * binary_entropy_array(ones / length)


def _symmetric_ternary_entropy(p0: np.ndarray) -> np.ndarray:
    return -plogp(p0) - 2.0 * plogp((1.0 - p0) / 2.0)


def prefix_suffix_values(ebar: float, wprime: np.ndarray, wbar: float) -> np.ndarray:
    """Vectorized prefix/suffix objective over an array of prefix weights."""
    wprime = np.asarray(wprime, dtype=float)
    f = 1.0 - ebar
    wdd = np.minimum(wbar - wprime, f / 4.0)
    wdd = np.maximum(wdd, 0.0)
    head = _scaled_entropy(ebar, wprime)
    tail = _scaled_entropy(f, 2.0 * wdd) + 2.0 * wdd if f > 0.0 else np.zeros_like(wprime)
    return np.maximum(head, 0.5 * (head + tail))


def improved_values(ebar: float, wprime: np.ndarray, wbar: float) -> np.ndarray:
    """Vectorized improved (difference-entropy) objective over prefix weights."""
    wprime = np.asarray(wprime, dtype=float)
    f = 1.0 - ebar
    head = _scaled_entropy(ebar, wprime)
    if f > 0.0:
        wdd = wbar - wprime
        p0 = (wdd**2 + (f - wdd) ** 2) / f**2
        p0 = np.clip(p0, 0.5, 1.0)
        tail = f * _symmetric_ternary_entropy(p0)
    else:
        tail = np.zeros_like(wprime)
    return np.maximum(head, 0.5 * (head + tail))


def objective_prefix_suffix(ebar: float, wprime: float, wbar: WeightFraction | float) -> float:
    """Prefix/suffix objective at one feasible split point."""
    w = as_wbar(wbar)
    _check_split(ebar, wprime, w)
    return float(prefix_suffix_values(ebar, np.array([wprime]), w)[0])


def objective_improved(ebar: float, wprime: float, wbar: WeightFraction | float) -> float:
    """Improved objective at one feasible split point."""
    w = as_wbar(wbar)
    _check_split(ebar, wprime, w)
    return float(improved_values(ebar, np.array([wprime]), w)[0])


def _grid(lo: float, hi: float, step: float) -> np.ndarray:
    if hi - lo <= 0.0:
        return np.array([lo])
    count = int(math.ceil((hi - lo) / step - 1e-9))
    return np.linspace(lo, hi, max(count, 1) + 1)


def _evaluate(objective: Objective, ebar: float, wprimes: np.ndarray) -> np.ndarray:
    vals = np.asarray(objective(float(ebar), wprimes), dtype=float)
    return np.broadcast_to(vals, wprimes.shape)


def _inner_max(objective: Objective, ebar: float, wbar: float, opts: OptimizerOptions) -> tuple[float, float]:
    lo, hi = feasible_wprime_interval(ebar, wbar)
    step = opts.coarse_step
    grid = _grid(lo, hi, step)
    vals = _evaluate(objective, ebar, grid)
    k = int(np.argmax(vals))
    best_v, best_w = float(vals[k]), float(grid[k])
    for _ in range(opts.refine_rounds):
        fine = step * opts.refine_shrink
        grid = _grid(max(lo, best_w - step), min(hi, best_w + step), fine)
        vals = _evaluate(objective, ebar, grid)
        k = int(np.argmax(vals))
        v, w = float(vals[k]), float(grid[k])
        if v > best_v or (v == best_v and w < best_w):
            best_v, best_w = v, w
        step = fine
    return best_v, best_w


def minimax_over_splits(
    objective: Objective,
    wbar: WeightFraction | float,
    opts: OptimizerOptions | None = None,
) -> tuple[float, float, float]:
    """Minimize over ``ebar`` in [0, 1] the maximum over feasible ``wprime``.

    ``objective(ebar, wprimes)`` receives a scalar ``ebar`` and a 1-D array
    of prefix weights and returns an array of the same shape (a scalar is
    broadcast). Both levels use a coarse grid followed by
    ``opts.refine_rounds`` local refinements around the incumbent. Ties go to
    the smallest ``ebar``, then the smallest ``wprime``.

    Returns
    -------
    tuple
        ``(value, ebar_star, wprime_star)``.
    """
    opts = opts or OptimizerOptions()
    w = as_wbar(wbar)

    def outer(ebars: np.ndarray) -> tuple[float, float, float]:
        best = None
        for e in ebars:
            v, wp = _inner_max(objective, float(e), w, opts)
            if best is None or v < best[0]:
                best = (v, float(e), wp)
        return best

    step = opts.coarse_step
    best = outer(_grid(0.0, 1.0, step))
    for _ in range(opts.refine_rounds):
        fine = step * opts.refine_shrink
        cand = outer(_grid(max(0.0, best[1] - step), min(1.0, best[1] + step), fine))
        if cand[0] < best[0] or (cand[0] == best[0] and (cand[1], cand[2]) < (best[1], best[2])):
            best = cand
        step = fine
    return best


def bound_prefix_suffix(wbar: WeightFraction | float, opts: OptimizerOptions | None = None) -> BoundResult:
    """Asymptotic prefix/suffix (counting) bound on the rate."""
    w = as_wbar(wbar)
    value, e, wp = minimax_over_splits(lambda e, ws: prefix_suffix_values(e, ws, w), w, opts)
    return BoundResult(Variant.PREFIX_SUFFIX, value, argmin_ebar=e, argmax_wprime=wp)


def bound_improved(wbar: WeightFraction | float, opts: OptimizerOptions | None = None) -> BoundResult:
    """Asymptotic improved bound combining prefix counting with suffix difference entropy.

    Every split gives a valid bound, so the outer optimization takes the
    minimum over ``ebar``.
    """
    w = as_wbar(wbar)
    value, e, wp = minimax_over_splits(lambda e, ws: improved_values(e, ws, w), w, opts)
    return BoundResult(Variant.IMPROVED, value, argmin_ebar=e, argmax_wprime=wp)


# -- finite-n bounds ---------------------------------------------------------


@dataclass(frozen=True)
class FiniteSplit:
    n: int
    e: int
    omega: int
    omega_prime: int

    def __post_init__(self) -> None:
        if not 0 < self.e < self.n:
            raise InfeasibleSplitError(f"need 0 < e < n, got e={self.e}, n={self.n}")
        if not 0 <= self.omega <= self.n:
            raise InfeasibleSplitError(f"need 0 <= omega <= n, got omega={self.omega}")
        lo, hi = max(0, self.omega - self.f), min(self.e, self.omega)
        if not lo <= self.omega_prime <= hi:
            raise InfeasibleSplitError(f"omega_prime={self.omega_prime} outside [{lo}, {hi}]")

    @property
    def f(self) -> int:
        return self.n - self.e

    @property
    def omega_dprime(self) -> int:
        return self.omega - self.omega_prime


def finite_bound_improved(fs: FiniteSplit) -> float:
    """Upper bound on ``log2`` of the number of codewords with prefix weight ``omega'``."""
    f, wdd = fs.f, fs.omega_dprime
    head = fs.e * binary_entropy(fs.omega_prime / fs.e)
    p0 = (wdd**2 + (f - wdd) ** 2) / f**2
    p0 = min(max(p0, 0.5), 1.0)
    tail = f * float(_symmetric_ternary_entropy(np.array([p0]))[0])
    return max(head + math.log2(fs.n), 0.5 * (head + tail) + 1.0)


def finite_bound_prefix_suffix(fs: FiniteSplit) -> float:
    """Counting-based counterpart of :func:`finite_bound_improved`."""
    n, f = fs.n, fs.f
    wdd = min(f / 4.0, fs.omega_dprime)
    head = fs.e * binary_entropy(fs.omega_prime / fs.e) + math.log2(n + 1)
    tail = f * binary_entropy(2.0 * wdd / f) + 2.0 * wdd + math.log2(n * (n + 1))
    return max(head + 1.0, 0.5 * (head + tail) + 1.0)


def finite_bound_code_size(n: int, e: int, omega: int, variant: Variant = Variant.IMPROVED) -> float:
    """Upper bound on ``log2 A_n^omega`` from one split ``e``.

    Takes the worst prefix-weight class and adds ``log2`` of the number of
    classes, which accounts for summing over classes at every finite ``n``.
    """
    if not 0 < e < n:
        raise B2Error(f"need 0 < e < n, got e={e}, n={n}")
    if not 0 < omega <= n:
        raise B2Error(f"need 0 < omega <= n, got omega={omega}")
    per_class = {
        Variant.IMPROVED: finite_bound_improved,
        Variant.PREFIX_SUFFIX: finite_bound_prefix_suffix,
    }
    if variant not in per_class:
        raise B2Error(f"finite bound not defined for variant {variant.value}")
    bound = per_class[variant]
    lo, hi = max(0, omega - (n - e)), min(e, omega)
    worst = max(bound(FiniteSplit(n, e, omega, wp)) for wp in range(lo, hi + 1))
    return worst + math.log2(hi - lo + 1)
