"""Shared exact-arithmetic helpers for the test suite."""

from fractions import Fraction
from functools import lru_cache


def quad_sum(terms) -> Fraction:
    """Sum QuadValues across fields; insist the radical parts cancel."""
    rational = Fraction(0)
    buckets: dict[int, Fraction] = {}
    for term in terms:
        rational += term.a
        if term.b:
            buckets[term.d] = buckets.get(term.d, Fraction(0)) + term.b
    assert not any(buckets.values()), f"radical parts did not cancel: {buckets}"
    return rational


def row_orthogonality_holds(table) -> bool:
    """Sum over classes of |C| chi_i(C) conj(chi_j(C)) == |G| delta_ij."""
    k = len(table.chars)
    for i in range(k):
        for j in range(i, k):
            total = quad_sum(
                table.values[i][c] * table.values[j][c].conjugate() * size
                for c, size in enumerate(table.class_sizes)
            )
            if total != (table.order if i == j else 0):
                return False
    return True


def column_orthogonality_holds(table) -> bool:
    """Sum over characters of chi(C) conj(chi(C')) == |centralizer| delta_CC'."""
    m = len(table.classes)
    for c1 in range(m):
        for c2 in range(c1, m):
            total = quad_sum(
                table.values[i][c1] * table.values[i][c2].conjugate()
                for i in range(len(table.chars))
            )
            expect = (
                Fraction(table.order, table.class_sizes[c1]) if c1 == c2 else 0
            )
            if total != expect:
                return False
    return True


@lru_cache(maxsize=None)
def partition_count(n: int, max_part: int) -> int:
    """Independent p(n) recurrence: partitions of n with parts <= max_part."""
    if n == 0:
        return 1
    if max_part == 0:
        return 0
    return sum(partition_count(n - k, min(k, n - k)) for k in range(1, max_part + 1))


def skew_strip_removals(lam, length):
    """Independent border-strip oracle by searching sub-partitions.

    A border strip is a connected skew shape containing no 2x2 block; the
    search enumerates every partition of |lam| - length that fits under
    lam and checks the skew cells directly.
    """
    from classprod.partitions import enumerate_partitions

    n = sum(lam)
    results = set()
    for mu in enumerate_partitions(n - length):
        if len(mu) > len(lam):
            continue
        padded = tuple(mu) + (0,) * (len(lam) - len(mu))
        if any(m > l for m, l in zip(padded, lam)):
            continue
        cells = {
            (i, j)
            for i in range(len(lam))
            for j in range(padded[i], lam[i])
        }
        if not cells:
            continue
        if any(
            (i + 1, j) in cells and (i, j + 1) in cells and (i + 1, j + 1) in cells
            for i, j in cells
        ):
            continue
        start = next(iter(cells))
        seen = {start}
        stack = [start]
        while stack:
            i, j = stack.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        if seen != cells:
            continue
        height = len({i for i, _ in cells}) - 1
        results.add((mu, height))
    return results
