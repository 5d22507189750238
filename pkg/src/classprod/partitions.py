"""Integer partitions, Young diagrams, hooks, and border strips.

A partition is a plain tuple of weakly decreasing positive integers.  The
same tuple doubles as a Young diagram (rows of cells, English notation)
and as the cycle type of a permutation.  All functions here are pure and
safe to call concurrently; the enumeration order is fixed so that CLI
output and test fixtures are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .errors import ConsistencyError, UsageError

Partition = tuple[int, ...]


def validate_partition(parts: Iterable[int]) -> Partition:
    """Return ``parts`` as a canonical tuple, rejecting invalid shapes."""
    lam = tuple(int(p) for p in parts)
    for i, p in enumerate(lam):
        if p < 1:
            raise ValueError(f"partition parts must be positive, got {p}")
        if i and lam[i - 1] < p:
            raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated partition string such as ``"5,3,1"``.

    Rejects empty input, non-integer parts, non-positive parts, and part
    sequences that are not weakly decreasing.
    """
    items = [t.strip() for t in text.split(",")]
    if items == [""]:
        raise UsageError("empty partition string")
    try:
        parts = [int(t) for t in items]
    except ValueError:
        raise UsageError(f"partition parts must be integers: {text!r}") from None
    try:
        return validate_partition(parts)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def conjugate(lam: Partition) -> Partition:
    """Reflect the Young diagram through its main diagonal."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def is_self_adjoint(lam: Partition) -> bool:
    return lam == conjugate(lam)


@dataclass(frozen=True)
class HookInfo:
    """One cell of a Young diagram together with its hook data.

    ``arm`` counts cells strictly to the right in the same row, ``leg``
    counts cells strictly below in the same column.
    """

    row: int
    col: int
    arm: int
    leg: int

    @property
    def length(self) -> int:
        return self.arm + self.leg + 1


def hook_lengths(lam: Partition) -> list[list[HookInfo]]:
    """Hook data for every cell, as a list of rows."""
    conj = conjugate(lam)
    return [
        [HookInfo(i, j, lam[i] - j - 1, conj[j] - i - 1) for j in range(lam[i])]
        for i in range(len(lam))
    ]


def hook_length_product(lam: Partition) -> int:
    prod = 1
    conj = conjugate(lam)
    for i in range(len(lam)):
        for j in range(lam[i]):
            prod *= lam[i] + conj[j] - i - j - 1
    return prod


def diagonal_hook_partition(lam: Partition) -> Partition:
    """Partition formed by the hook lengths along the main diagonal.

    Defined for self-adjoint shapes only; the result always has pairwise
    distinct odd parts (each diagonal hook has equal arm and leg, and the
    lengths drop by at least 2 down the diagonal).
    """
    if not is_self_adjoint(lam):
        raise ValueError(f"diagonal hooks require a self-adjoint partition, got {lam}")
    parts = []
    for i, p in enumerate(lam):
        if p <= i:
            break
        parts.append(2 * (p - i) - 1)
    return tuple(parts)


def find_l_hook(lam: Partition, length: int) -> Optional[HookInfo]:
    """The first cell (in row-major order) whose hook has the given length.

    For ``length`` in ``{n, n-1}`` a matching hook is unique when it exists;
    this is asserted rather than assumed.
    """
    if length < 1:
        raise ValueError("hook length must be positive")
    matches = [
        h for row in hook_lengths(lam) for h in row if h.length == length
    ]
    if not matches:
        return None
    n = sum(lam)
    if length >= n - 1 and len(matches) > 1:
        raise ConsistencyError(
            f"hook of length {length} in partition of {n} should be unique, "
            f"found {len(matches)}"
        )
    return matches[0]


@dataclass(frozen=True)
class StripRemoval:
    """Result of removing one border strip: what is left, and the strip's
    height (rows spanned minus one)."""

    remainder: Partition
    height: int


@lru_cache(maxsize=None)
def remove_border_strips(lam: Partition, length: int) -> tuple[StripRemoval, ...]:
    """All ways to remove a connected border strip of the given length.

    Implemented on first-column hook lengths (beta-numbers): a strip of
    length L is removable exactly when some beta-number b has b-L
    nonnegative and absent from the beta-set; the strip's height is the
    number of beta-numbers strictly between b-L and b.  Results are
    ordered by the row of the strip's topmost cell.
    """
    if length < 1:
        raise ValueError("strip length must be positive")
    m = len(lam)
    beta = [lam[i] + m - 1 - i for i in range(m)]
    beta_set = set(beta)
    removals = []
    for b in beta:
        nb = b - length
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((nb if x == b else x for x in beta), reverse=True)
        parts = [v - (m - 1 - j) for j, v in enumerate(new_beta)]
        while parts and parts[-1] == 0:
            parts.pop()
        removals.append(StripRemoval(tuple(parts), height))
    return tuple(removals)


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in descending lexicographic order.

    The order starts at ``(n,)`` and ends at ``(1,)*n``; it is the
    canonical order for every enumeration in this package.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ((),)
    out = []
    cur = [n]
    while True:
        out.append(tuple(cur))
        k = len(cur) - 1
        while k >= 0 and cur[k] == 1:
            k -= 1
        if k < 0:
            break
        cur[k] -= 1
        val = cur[k]
        rem = len(cur) - 1 - k
        del cur[k + 1 :]
        rem += 1
        while rem > 0:
            take = min(val, rem)
            cur.append(take)
            rem -= take
    return tuple(out)
