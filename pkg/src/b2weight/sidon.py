"""Integer Sidon sets from the Bose construction over GF(q^2).

For a prime ``q`` and a primitive element ``theta`` of GF(q^2), the set

    { a in [1, q^2 - 1] : theta^a - theta lies in GF(q) }

has ``q`` elements and is a Sidon set modulo ``q^2 - 1``; its
representatives in ``[0, q^2 - 2]`` are therefore Sidon in the integers.

GF(q^2) is realised as GF(q)[x] / (x^2 - s x - t). Only prime ``q`` is
supported.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import sympy

from b2weight.core import B2Error, DuplicateError


@dataclass(frozen=True)
class QuadExtElement:
    """``c0 + c1 * x`` in GF(q)[x] / (x^2 - s x - t)."""

    c0: int
    c1: int
    q: int
    s: int
    t: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "c0", self.c0 % self.q)
        object.__setattr__(self, "c1", self.c1 % self.q)

    def _same_field(self, other: QuadExtElement) -> None:
        if (self.q, self.s, self.t) != (other.q, other.s, other.t):
            raise B2Error("elements belong to different fields")

    def __mul__(self, other: QuadExtElement) -> QuadExtElement:
        self._same_field(other)
        a0, a1, b0, b1 = self.c0, self.c1, other.c0, other.c1
        # x^2 = s x + t
        hi = a1 * b1
        return QuadExtElement(a0 * b0 + hi * self.t, a0 * b1 + a1 * b0 + hi * self.s, self.q, self.s, self.t)

    def __pow__(self, exponent: int) -> QuadExtElement:
        if exponent < 0:
            raise B2Error("negative exponents are not supported")
        result = self.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def one(self) -> QuadExtElement:
        return QuadExtElement(1, 0, self.q, self.s, self.t)

    def is_one(self) -> bool:
        return self.c0 == 1 and self.c1 == 0

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0


@dataclass(frozen=True)
class SidonSet:
    modulus: int
    elements: tuple[int, ...]
    q: int | None = None

    def __len__(self) -> int:
        return len(self.elements)


def largest_prime_q(M: int) -> int:
    """Largest prime ``q`` with ``q^2 - 1 <= M``."""
    if M < 8:
        raise B2Error(f"need M >= 8, got {M}")
    return int(sympy.prevprime(math.isqrt(M + 1) + 1))


def _has_root(q: int, s: int, t: int) -> bool:
    return any((x * x - s * x - t) % q == 0 for x in range(q))


def find_irreducible_quadratic(q: int) -> tuple[int, int]:
    """First ``(s, t)`` in lexicographic order with ``x^2 - s x - t`` rootless mod ``q``."""
    if not sympy.isprime(q):
        raise B2Error(f"q must be prime, got {q}")
    for s, t in itertools.product(range(q), repeat=2):
        if not _has_root(q, s, t):
            return s, t
    raise AssertionError("no irreducible quadratic found")  # unreachable for prime q


def element_order(theta: QuadExtElement) -> int:
    """Multiplicative order by direct enumeration of powers."""
    if theta.is_zero():
        raise B2Error("zero has no multiplicative order")
    x, k = theta, 1
    while not x.is_one():
        x = x * theta
        k += 1
    return k


def find_primitive_element(q: int, st: tuple[int, int]) -> QuadExtElement:
    """Lexicographically least ``(c0, c1)`` generating the multiplicative group of GF(q^2)."""
    s, t = st
    order = q * q - 1
    exponents = [order // p for p in sympy.primefactors(order)]
    for c0, c1 in itertools.product(range(q), repeat=2):
        theta = QuadExtElement(c0, c1, q, s, t)
        if theta.is_zero():
            continue
        if all(not (theta**k).is_one() for k in exponents):
            return theta
    raise AssertionError("no primitive element found")  # unreachable


def bose_sidon_set(q: int) -> SidonSet:
    """The Bose Sidon set for prime ``q``: ``q`` integers in ``[0, q^2 - 2]``."""
    if not sympy.isprime(q):
        raise B2Error(f"q must be prime, got {q}")
    st = find_irreducible_quadratic(q)
    theta = find_primitive_element(q, st)
    modulus = q * q - 1
    elements = []
    x = theta
    for a in range(1, modulus + 1):
        # theta^a - theta in GF(q)  <=>  matching x-coefficients
        if x.c1 == theta.c1:
            elements.append(a % modulus)
        x = x * theta
    return SidonSet(modulus=modulus, elements=tuple(sorted(elements)), q=q)


def _check_distinct(elements: Sequence[int]) -> None:
    if len(set(elements)) != len(elements):
        raise DuplicateError("elements must be distinct")


def sidon_violation(elements: Sequence[int]) -> tuple[tuple[int, int], tuple[int, int]] | None:
    """Return two pairs ``(a, b)``, ``(c, d)`` with ``a + b == c + d``, or ``None``.

    Pairs are unordered with repetition allowed (``a <= b``) and are scanned
    in lexicographic order of the sorted input.
    """
    _check_distinct(elements)
    seen: dict[int, tuple[int, int]] = {}
    xs = sorted(elements)
    for i, a in enumerate(xs):
        for b in xs[i:]:
            prev = seen.setdefault(a + b, (a, b))
            if prev != (a, b):
                return prev, (a, b)
    return None


def is_sidon(elements: Sequence[int]) -> bool:
    return sidon_violation(elements) is None


def is_sidon_by_differences(elements: Sequence[int]) -> bool:
    """Sidon test via distinctness of all nonzero differences."""
    _check_distinct(elements)
    diffs = [a - b for a in elements for b in elements if a != b]
    return len(diffs) == len(set(diffs))
