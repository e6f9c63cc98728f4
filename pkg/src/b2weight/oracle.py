"""Brute-force ground truth: B2 verification and exact small-instance search.

Two independent exact searches are provided. :func:`exhaustive_max_b2` is a
depth-first branch and bound. :func:`max_b2_by_enumeration` walks subsets
by increasing size with no bound at all, stopping at the first size with
no B2 subset (valid because subsets of B2 sets are B2). The second
exists only to cross-check the first.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from b2weight.core import (
    BinaryVector,
    Codebook,
    CodeParameters,
    DuplicateError,
    ScaleError,
    WeightError,
    weight,
)

MAX_CANDIDATES = 5000
DEFAULT_NODE_LIMIT = 10**8


@dataclass(frozen=True)
class B2Violation:
    """Two distinct unordered index pairs whose vector sums coincide."""

    pair1: tuple[int, int]
    pair2: tuple[int, int]
    sum: tuple[int, ...]

    def __str__(self) -> str:
        s = "".join(map(str, self.sum))
        return f"pairs {self.pair1} and {self.pair2} both sum to {s}"


@dataclass(frozen=True)
class SearchResult:
    n: int
    omega: int
    max_size: int
    witness: Codebook
    nodes_explored: int
    exact: bool


def _check_codebook(cb: Codebook) -> None:
    seen: dict[tuple[int, ...], int] = {}
    for idx, v in enumerate(cb.vectors):
        if weight(v) != cb.params.omega:
            raise WeightError(f"vector {idx} ({v}) has weight {weight(v)}, expected {cb.params.omega}")
        if v.bits in seen:
            raise DuplicateError(f"vectors {seen[v.bits]} and {idx} are equal ({v})")
        seen[v.bits] = idx


def verify_b2(cb: Codebook) -> B2Violation | None:
    """Check the B2 property; return ``None`` if it holds, else the first collision.

    Pairs are scanned in lexicographic order ``(0,1), (0,2), ..., (1,2), ...``;
    the reported violation pairs the earlier pair with the first later pair
    hitting the same sum. Raises :class:`WeightError` or
    :class:`DuplicateError` before any sums are formed.
    """
    _check_codebook(cb)
    seen: dict[bytes, tuple[int, int]] = {}
    vs = cb.vectors
    for i, j in itertools.combinations(range(len(vs)), 2):
        s = vs[i] + vs[j]
        key = bytes(s)
        prev = seen.setdefault(key, (i, j))
        if prev != (i, j):
            return B2Violation(prev, (i, j), s)
    return None


def is_b2(cb: Codebook) -> bool:
    return verify_b2(cb) is None


def is_b2_by_differences(vectors: Sequence[BinaryVector]) -> bool:
    """B2 test via distinctness of differences over ordered pairs of distinct vectors."""
    diffs = set()
    for i, j in itertools.permutations(range(len(vectors)), 2):
        d = vectors[i] - vectors[j]
        if d in diffs:
            return False
        diffs.add(d)
    return True


def constant_weight_vectors(n: int, omega: int) -> list[BinaryVector]:
    """All weight-``omega`` vectors, ordered lexicographically by support."""
    return [BinaryVector.from_support(s, n) for s in itertools.combinations(range(n), omega)]


def _check_scale(n: int, omega: int) -> None:
    CodeParameters(n, omega)
    count = math.comb(n, omega)
    if count > MAX_CANDIDATES:
        raise ScaleError(f"C({n}, {omega}) = {count} exceeds the exhaustive-search guard of {MAX_CANDIDATES}")


def _pack(v: BinaryVector) -> int:
    # base-4 digits: sums of two packed vectors never carry
    x = 0
    for b in v.bits:
        x = 4 * x + b
    return x


def exhaustive_max_b2(n: int, omega: int, node_limit: int = DEFAULT_NODE_LIMIT) -> SearchResult:
    """Largest constant-weight B2 set by depth-first branch and bound.

    Each search node holds the candidates whose sums with every chosen vector
    are still unused; a branch is cut when chosen + remaining candidates
    cannot beat the incumbent. If more than ``node_limit`` nodes are
    expanded the search stops and the result is flagged ``exact=False``
    (a lower bound).
    """
    if node_limit <= 0:
        raise ValueError("node_limit must be positive")
    _check_scale(n, omega)
    vectors = constant_weight_vectors(n, omega)
    codes = [_pack(v) for v in vectors]
    index = {c: i for i, c in enumerate(codes)}

    best: list[int] = []
    chosen: list[int] = []
    sums: set[int] = set()
    added: list[list[int]] = []
    frames: list[tuple[list[int], int]] = [(codes, 0)]
    nodes = 1
    exact = True

    while frames:
        if len(chosen) > len(best):
            best = chosen.copy()
        cands, i = frames[-1]
        if i >= len(cands) or len(chosen) + len(cands) - i <= len(best):
            frames.pop()
            if chosen:
                chosen.pop()
                sums.difference_update(added.pop())
            continue
        if nodes >= node_limit:
            exact = False
            break
        frames[-1] = (cands, i + 1)
        c = cands[i]
        new = [c + x for x in chosen]
        chosen.append(c)
        sums.update(new)
        added.append(new)
        rest = [d for d in cands[i + 1 :] if all(d + x not in sums for x in chosen)]
        frames.append((rest, 0))
        nodes += 1

    witness = Codebook(CodeParameters(n, omega), tuple(vectors[index[c]] for c in best))
    return SearchResult(n, omega, len(best), witness, nodes, exact)


def max_b2_by_enumeration(n: int, omega: int, subset_limit: int = 10**7) -> SearchResult:
    """Largest constant-weight B2 set by plain subset enumeration.

    Sizes ``k = 1, 2, ...`` are tried in turn; each size scans
    ``itertools.combinations`` until some subset has pairwise-distinct sums.
    No bounding is used. Stops with ``exact=False`` once more than
    ``subset_limit`` subsets have been examined.
    """
    _check_scale(n, omega)
    vectors = constant_weight_vectors(n, omega)
    N = len(vectors)
    sum_ids: dict[tuple[int, ...], int] = {}
    pair_id = [[-1] * N for _ in range(N)]
    for i, j in itertools.combinations(range(N), 2):
        pair_id[i][j] = sum_ids.setdefault(vectors[i] + vectors[j], len(sum_ids))

    best: tuple[int, ...] = ()
    examined = 0
    exact = True
    for k in range(1, N + 1):
        found = None
        for subset in itertools.combinations(range(N), k):
            examined += 1
            if examined > subset_limit:
                exact = False
                break
            ids = [pair_id[i][j] for i, j in itertools.combinations(subset, 2)]
            if len(ids) == len(set(ids)):
                found = subset
                break
        if not exact or found is None:
            break
        best = found

    witness = Codebook(CodeParameters(n, omega), tuple(vectors[i] for i in best))
    return SearchResult(n, omega, len(best), witness, examined, exact)
