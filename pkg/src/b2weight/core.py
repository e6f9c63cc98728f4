"""Shared value types and exceptions.

Every type here is an immutable value. Floating-point quantities are plain
Python floats (double precision); integers that can grow past 64 bits
(mapped codeword values, Sidon elements) are plain Python ints.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class B2Error(ValueError):
    """Base class for domain errors raised by this package."""


class DomainError(B2Error):
    """An argument lies outside the domain of a formula."""


class InfeasibleSplitError(B2Error):
    """A prefix/suffix split point violates its feasibility interval."""


class WeightError(B2Error):
    """A codeword does not have the declared Hamming weight."""


class DuplicateError(B2Error):
    """A codebook (or integer set) contains a repeated entry."""


class ScaleError(B2Error):
    """An exhaustive computation was requested beyond its size guard."""


class Variant(enum.Enum):
    SUM_ENTROPY = "SumEntropy"
    DIFF_ENTROPY = "DiffEntropy"
    PREFIX_SUFFIX = "PrefixSuffix"
    IMPROVED = "Improved"
    LOWER = "Lower"


_SPLIT_VARIANTS = (Variant.PREFIX_SUFFIX, Variant.IMPROVED)


@dataclass(frozen=True)
class WeightFraction:
    """Normalized weight ``omega / n``, strictly inside (0, 1)."""

    value: float

    def __post_init__(self) -> None:
        v = float(self.value)
        if not 0.0 < v < 1.0:
            raise DomainError(f"weight fraction must lie in (0, 1), got {self.value!r}")
        object.__setattr__(self, "value", v)

    def __float__(self) -> float:
        return self.value


def as_wbar(wbar: WeightFraction | float) -> float:
    """Validate ``wbar`` and return it as a float."""
    if isinstance(wbar, WeightFraction):
        return wbar.value
    return WeightFraction(wbar).value


@dataclass(frozen=True)
class CodeParameters:
    n: int
    omega: int

    def __post_init__(self) -> None:
        if int(self.n) != self.n or int(self.omega) != self.omega:
            raise B2Error("n and omega must be integers")
        if self.n < 1:
            raise B2Error(f"n must be positive, got {self.n}")
        if not 1 <= self.omega <= self.n:
            raise B2Error(f"omega must satisfy 1 <= omega <= n, got omega={self.omega}, n={self.n}")

    @property
    def radix(self) -> int:
        """``n // omega``; only meaningful when omega divides n."""
        return self.n // self.omega

    @property
    def divisible(self) -> bool:
        return self.n % self.omega == 0


@dataclass(frozen=True)
class BinaryVector:
    """Dense 0/1 vector. ``bits[0]`` is the first coordinate."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise B2Error("a binary vector must have positive length")
        if any(b not in (0, 1) for b in bits):
            raise B2Error(f"binary vector entries must be 0 or 1, got {self.bits!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_string(cls, text: str) -> BinaryVector:
        if not text or any(ch not in "01" for ch in text):
            raise B2Error(f"not a binary string: {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def from_support(cls, support: Iterable[int], length: int) -> BinaryVector:
        bits = [0] * length
        for i in support:
            bits[i] = 1
        return cls(tuple(bits))

    @property
    def length(self) -> int:
        return len(self.bits)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.bits) if b)

    def complement(self) -> BinaryVector:
        return BinaryVector(tuple(1 - b for b in self.bits))

    def __add__(self, other: BinaryVector) -> tuple[int, ...]:
        """Entrywise integer sum; entries lie in {0, 1, 2}."""
        if self.length != other.length:
            raise B2Error("vector lengths differ")
        return tuple(a + b for a, b in zip(self.bits, other.bits))

    def __sub__(self, other: BinaryVector) -> tuple[int, ...]:
        if self.length != other.length:
            raise B2Error("vector lengths differ")
        return tuple(a - b for a, b in zip(self.bits, other.bits))

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


def weight(v: BinaryVector | Sequence[int]) -> int:
    """Hamming weight (number of ones)."""
    bits = v.bits if isinstance(v, BinaryVector) else v
    return int(sum(bits))


@dataclass(frozen=True)
class Codebook:
    """An ordered collection of length-``n`` binary vectors.

    Only lengths are checked on construction. Weight, distinctness and the
    B2 property are left to :func:`b2weight.oracle.verify_b2`, so that a
    defective codebook can still be represented and diagnosed.
    """

    params: CodeParameters
    vectors: tuple[BinaryVector, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        vectors = tuple(self.vectors)
        for v in vectors:
            if v.length != self.params.n:
                raise B2Error(f"vector {v} has length {v.length}, expected n={self.params.n}")
        object.__setattr__(self, "vectors", vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    @classmethod
    def from_strings(cls, n: int, omega: int, lines: Iterable[str]) -> Codebook:
        return cls(CodeParameters(n, omega), tuple(BinaryVector.from_string(s) for s in lines))


@dataclass(frozen=True)
class BoundResult:
    """A rate bound in bits per symbol.

    ``argmin_ebar`` / ``argmax_wprime`` carry the optimizing split point and
    are set exactly for the two split-based variants.
    """

    variant: Variant
    value: float
    argmin_ebar: float | None = None
    argmax_wprime: float | None = None

    def __post_init__(self) -> None:
        if not -1e-12 <= self.value <= 1.0 + 1e-12:
            raise B2Error(f"rate bound out of [0, 1]: {self.value}")
        has_split = self.argmin_ebar is not None and self.argmax_wprime is not None
        if has_split != (self.variant in _SPLIT_VARIANTS):
            raise B2Error(f"split point presence does not match variant {self.variant.value}")

    def __float__(self) -> float:
        return self.value
