"""Class-product analysis through exact character sums.

The number of factorizations g = xy with x in A and y in B equals
|A||B|/|G| times the sum over irreducible characters of
chi(a) chi(b) conj(chi(g)) / chi(1); the class of g lies in the normal
set AB exactly when that sum is nonzero.  Every sum is evaluated over the
full Alt(n) character table in exact arithmetic: terms are accumulated
per radicand, the radical parts must cancel, and the resulting pair count
must be a nonnegative integer.  Any failure raises ConsistencyError.

Pairwise class products are cached as bitmasks over the canonical class
order, which makes iterated products (covering numbers, four-class
sweeps) cheap unions.  The cache may be filled by parallel workers; each
evaluation is pure, so results are independent of scheduling.
"""

from __future__ import annotations

import math
import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Optional

from .alt_group import (
    AltClass,
    NormalSet,
    class_index,
    class_size,
    delta,
    enumerate_alt_classes,
    identity_class,
    is_exceptional,
    long_cycle_classes,
    power_at_least,
)
from .characters import character_table
from .errors import ConsistencyError

ENGINE_MAX_N = 14

_PAIR_CACHE: dict[tuple[int, int, int], int] = {}
_EXACTNESS_CHECKS = 0


def exactness_check_count() -> int:
    """How many character sums have passed the collapse/integrality checks
    in this process."""
    return _EXACTNESS_CHECKS


@dataclass(frozen=True)
class FrobeniusResult:
    class_triple: tuple[AltClass, AltClass, AltClass]
    sum_value: Fraction
    pair_count: int

    def to_dict(self) -> dict:
        a, b, g = self.class_triple
        return {
            "a": a.name,
            "b": b.name,
            "g": g.name,
            "sum_value": str(self.sum_value),
            "pair_count": self.pair_count,
        }


@lru_cache(maxsize=None)
def _columns(n: int):
    """Per-class data laid out for the hot loop: for each class j a tuple
    of conj(value)/degree per character, plus raw value columns."""
    tbl = character_table(n)
    k = len(tbl.chars)
    raw = [tuple(tbl.values[i][j] for i in range(k)) for j in range(len(tbl.classes))]
    weighted = [
        tuple(
            tbl.values[i][j].conjugate() * Fraction(1, tbl.degrees[i])
            for i in range(k)
        )
        for j in range(len(tbl.classes))
    ]
    return tbl, raw, weighted


def _check_same_n(*classes: AltClass) -> int:
    n = classes[0].n
    for c in classes[1:]:
        if c.n != n:
            raise ValueError("classes belong to different alternating groups")
    return n


def _collapse(rational: Fraction, buckets: dict[int, Fraction]) -> Fraction:
    if any(buckets.values()):
        bad = {d: str(c) for d, c in buckets.items() if c}
        raise ConsistencyError(f"character sum kept radical parts: {bad}")
    return rational


def _sum_over_chars(vec_ab, weighted_g) -> Fraction:
    rational = Fraction(0)
    buckets: dict[int, Fraction] = {}
    for vab, wg in zip(vec_ab, weighted_g):
        if vab is None or wg.is_zero:
            continue
        term = vab * wg
        rational += term.a
        if term.b:
            buckets[term.d] = buckets.get(term.d, Fraction(0)) + term.b
    return _collapse(rational, buckets)


def _pair_vector(raw, ia: int, ib: int):
    col_a, col_b = raw[ia], raw[ib]
    return [
        None if (va.is_zero or vb.is_zero) else va * vb
        for va, vb in zip(col_a, col_b)
    ]


def _counted(sum_value: Fraction, sa: int, sb: int, order: int) -> int:
    global _EXACTNESS_CHECKS
    count = Fraction(sa * sb, order) * sum_value
    if count.denominator != 1 or count < 0:
        raise ConsistencyError(f"pair count {count} is not a nonnegative integer")
    if (count == 0) != (sum_value == 0):
        raise ConsistencyError("zero sum and zero count disagree")
    _EXACTNESS_CHECKS += 1
    return count.numerator


def frobenius_sum(a: AltClass, b: AltClass, g: AltClass) -> FrobeniusResult:
    """Exact factorization count data for g = xy, x in A, y in B."""
    n = _check_same_n(a, b, g)
    tbl, raw, weighted = _columns(n)
    idx = class_index(n)
    vec = _pair_vector(raw, idx[a], idx[b])
    total = _sum_over_chars(vec, weighted[idx[g]])
    count = _counted(
        total, tbl.class_sizes[idx[a]], tbl.class_sizes[idx[b]], tbl.order
    )
    return FrobeniusResult((a, b, g), total, count)


def contains(a: AltClass, b: AltClass, g: AltClass) -> bool:
    """Does the normal set AB contain the class of g?"""
    return frobenius_sum(a, b, g).pair_count > 0


def _compute_pair_mask(n: int, ia: int, ib: int) -> int:
    tbl, raw, weighted = _columns(n)
    vec = _pair_vector(raw, ia, ib)
    sa, sb = tbl.class_sizes[ia], tbl.class_sizes[ib]
    mask = 0
    for jg in range(len(tbl.classes)):
        total = _sum_over_chars(vec, weighted[jg])
        if _counted(total, sa, sb, tbl.order):
            mask |= 1 << jg
    return mask


def _pair_mask(n: int, ia: int, ib: int) -> int:
    if ia > ib:
        ia, ib = ib, ia
    key = (n, ia, ib)
    mask = _PAIR_CACHE.get(key)
    if mask is None:
        mask = _compute_pair_mask(n, ia, ib)
        _PAIR_CACHE[key] = mask
    return mask


def _pair_mask_task(key: tuple[int, int, int]) -> tuple[tuple[int, int, int], int]:
    return key, _compute_pair_mask(*key)


def ensure_pair_masks(
    n: int, pairs: Optional[Iterable[tuple[int, int]]] = None, jobs: int = 1
) -> None:
    """Precompute class-pair product masks, optionally in parallel.

    Workers evaluate disjoint pairs; every evaluation is deterministic,
    so the merged cache does not depend on scheduling.
    """
    k = len(enumerate_alt_classes(n))
    if pairs is None:
        pairs = combinations_with_replacement(range(k), 2)
    keys = [
        (n, min(i, j), max(i, j))
        for i, j in pairs
    ]
    missing = sorted({key for key in keys if key not in _PAIR_CACHE})
    if not missing:
        return
    if jobs <= 1 or len(missing) < 4:
        for key in missing:
            _PAIR_CACHE[key] = _compute_pair_mask(*key)
        return
    character_table(n)  # built before fork so workers inherit it
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:
        for key in missing:
            _PAIR_CACHE[key] = _compute_pair_mask(*key)
        return
    chunk = max(1, len(missing) // (jobs * 4))
    with ctx.Pool(jobs) as pool:
        for key, mask in pool.imap_unordered(_pair_mask_task, missing, chunk):
            _PAIR_CACHE[key] = mask


def _mask_of(s: NormalSet) -> int:
    idx = class_index(s.n)
    mask = 0
    for cls in s.classes:
        mask |= 1 << idx[cls]
    return mask


def _set_from_mask(n: int, mask: int) -> NormalSet:
    classes = enumerate_alt_classes(n)
    return NormalSet(
        n, frozenset(classes[j] for j in range(len(classes)) if mask >> j & 1)
    )


def _bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _mask_product(n: int, mask_a: int, mask_b: int, pair_mask=None) -> int:
    if pair_mask is None:
        pair_mask = lambda i, j: _pair_mask(n, i, j)
    out = 0
    for ia in _bits(mask_a):
        for ib in _bits(mask_b):
            out |= pair_mask(ia, ib)
    return out


def product_set(s: NormalSet, t: NormalSet) -> NormalSet:
    """All classes meeting the product of two normal sets."""
    if s.n != t.n:
        raise ValueError("normal sets over different groups")
    return _set_from_mask(s.n, _mask_product(s.n, _mask_of(s), _mask_of(t)))


def _full_mask(n: int) -> int:
    return (1 << len(enumerate_alt_classes(n))) - 1


def power_covers(cls: AltClass, k: int) -> bool:
    """Does the k-fold product of the class with itself cover Alt(n)?"""
    if k < 1:
        raise ValueError("k must be positive")
    n = cls.n
    base = 1 << class_index(n)[cls]
    current = base
    for _ in range(k - 1):
        current = _mask_product(n, current, base)
    return current == _full_mask(n)


def covering_number(cls: AltClass, k_max: int) -> Optional[int]:
    """Least k <= k_max whose k-fold product covers Alt(n), if any."""
    if cls == identity_class(cls.n):
        raise ValueError("covering number is defined for nontrivial classes")
    n = cls.n
    base = 1 << class_index(n)[cls]
    current = base
    full = _full_mask(n)
    for k in range(1, k_max + 1):
        if k > 1:
            current = _mask_product(n, current, base)
        if current == full:
            return k
    return None


def missing_classes(cls: AltClass, k: int) -> tuple[AltClass, ...]:
    """Classes not reached by the k-fold product of a class with itself."""
    n = cls.n
    base = 1 << class_index(n)[cls]
    current = base
    for _ in range(k - 1):
        current = _mask_product(n, current, base)
    return _set_from_mask(n, _full_mask(n) & ~current).sorted_classes()


# ---------------------------------------------------------------------------
# Named sweeps
# ---------------------------------------------------------------------------


def dvir_rodgers_applies(a: AltClass, b: AltClass) -> bool:
    """The long-cycle inclusion criterion: delta(A) + delta(B) > n-1 for n
    odd, > n for n even."""
    n = _check_same_n(a, b)
    bound = n - 1 if n % 2 else n
    return delta(a) + delta(b) > bound


@dataclass(frozen=True)
class DvirRodgersReport:
    n: int
    pairs_checked: int
    violations: tuple[tuple[str, str, str], ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pairs_checked": self.pairs_checked,
            "violations": [list(v) for v in self.violations],
            "passed": self.passed,
        }


def _providers(n: int, mode: str, jobs: int, pairs=None):
    """Yield (label, pair-mask function) for the requested mode."""
    if mode not in ("engine", "oracle", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode in ("engine", "both"):
        ensure_pair_masks(n, pairs, jobs)
        yield "engine", lambda i, j: _pair_mask(n, i, j)
    if mode in ("oracle", "both"):
        yield "oracle", _oracle_pair_mask_fn(n)


def _type_masks(n: int) -> list[tuple[tuple[int, ...], str, int]]:
    """Even cycle types as (delta, name, class bitmask) triples; a split
    type contributes the union of its two classes, matching the classes
    of Sym(n) that lie inside Alt(n)."""
    idx = class_index(n)
    by_type: dict[tuple[int, ...], int] = {}
    for cls in enumerate_alt_classes(n):
        by_type[cls.cycle_type] = by_type.get(cls.cycle_type, 0) | 1 << idx[cls]
    from .partitions import format_partition

    return [
        (ct, format_partition(ct), mask) for ct, mask in by_type.items()
    ]


def check_dvir_rodgers(n: int, jobs: int = 1, mode: str = "engine") -> DvirRodgersReport:
    """Exhaustively verify the long-cycle inclusion criterion at one n.

    The criterion concerns classes of Sym(n) lying inside Alt(n), so the
    sweep runs over even cycle types; a split type enters as the union
    of its two Alt(n) classes.  For every type pair meeting the delta
    condition, both long-cycle classes must appear in the product.
    """
    idx = class_index(n)
    targets = [(c, idx[c]) for c in long_cycle_classes(n)]
    bound = n - 1 if n % 2 else n
    types = _type_masks(n)
    qualifying = [
        (t1, t2)
        for t1, t2 in combinations_with_replacement(types, 2)
        if (sum(t1[0]) - len(t1[0])) + (sum(t2[0]) - len(t2[0])) > bound
    ]
    pairs = [
        (i, j)
        for t1, t2 in qualifying
        for i in _bits(t1[2])
        for j in _bits(t2[2])
    ]
    reports = {}
    for label, pair_mask in _providers(n, mode, jobs, pairs):
        violations = []
        for t1, t2 in qualifying:
            mask = _mask_product(n, t1[2], t2[2], pair_mask)
            for target, jt in targets:
                if not mask >> jt & 1:
                    violations.append((t1[1], t2[1], target.name))
        reports[label] = DvirRodgersReport(n, len(qualifying), tuple(violations))
    if mode == "both" and reports["engine"] != reports["oracle"]:
        raise ConsistencyError("engine and oracle delta sweeps disagree")
    return reports.get("engine", reports.get("oracle"))


@dataclass(frozen=True)
class QuadrupleVerdict:
    classes: tuple[str, str, str, str]
    min_pair_product: int
    covered: bool
    missing: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "classes": list(self.classes),
            "min_pair_product": self.min_pair_product,
            "covered": self.covered,
            "missing": list(self.missing),
        }


@dataclass(frozen=True)
class FourClassReport:
    n: int
    epsilon: Fraction
    mode: str
    quadruples: tuple[QuadrupleVerdict, ...]

    @property
    def covered_count(self) -> int:
        return sum(1 for q in self.quadruples if q.covered)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "epsilon": str(self.epsilon),
            "mode": self.mode,
            "total": len(self.quadruples),
            "covered": self.covered_count,
            "quadruples": [q.to_dict() for q in self.quadruples],
        }


def _qualifying_quadruples(n: int, epsilon: Fraction):
    classes = enumerate_alt_classes(n)
    sizes = [class_size(c) for c in classes]
    order = math.factorial(n) // 2
    threshold = Fraction(1) + Fraction(epsilon)
    out = []
    for quad in combinations_with_replacement(range(len(classes)), 4):
        products = [sizes[a] * sizes[b] for a, b in combinations(quad, 2)]
        if all(power_at_least(p, order, threshold) for p in products):
            out.append((quad, min(products)))
    out.sort(key=lambda item: (-item[1], item[0]))
    return classes, out


def verify_four_class_theorem(
    n: int, epsilon: Fraction, jobs: int = 1, mode: str = "engine"
) -> FourClassReport:
    """Sweep all class quadruples (up to multiset symmetry; normal-set
    products commute) whose six pairwise size products reach
    (n!/2)**(1+epsilon), and report whether ((AB)C)D covers Alt(n).

    The report is descriptive: coverage is only guaranteed for large n,
    so a non-covering quadruple at small n is data, not an error.  With
    ``mode="oracle"`` the products come from brute-force enumeration
    (n <= 8); ``mode="both"`` insists the two agree.
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if mode not in ("engine", "oracle", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    classes, quads = _qualifying_quadruples(n, epsilon)
    if not quads:
        return FourClassReport(n, epsilon, mode, ())
    full = _full_mask(n)
    reports = {}
    for label, pair_mask in _providers(n, mode, jobs):
        rows = []
        for quad, min_product in quads:
            mask = pair_mask(quad[0], quad[1])
            for extra in quad[2:]:
                mask = _mask_product(n, mask, 1 << extra, pair_mask)
            missing = _set_from_mask(n, full & ~mask).sorted_classes()
            rows.append(
                QuadrupleVerdict(
                    tuple(classes[i].name for i in quad),
                    min_product,
                    mask == full,
                    tuple(c.name for c in missing),
                )
            )
        reports[label] = tuple(rows)
    if mode == "both" and reports["engine"] != reports["oracle"]:
        raise ConsistencyError("engine and oracle four-class sweeps disagree")
    return FourClassReport(n, epsilon, mode, reports.get("engine", reports.get("oracle")))


def _oracle_pair_mask_fn(n: int):
    from .brute_force import alt_conjugacy_classes, oracle_class_product

    table = alt_conjugacy_classes(n)
    classes = enumerate_alt_classes(n)
    idx = class_index(n)
    cache: dict[tuple[int, int], int] = {}

    def mask(i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        if (i, j) not in cache:
            hit = oracle_class_product(table, classes[i], classes[j])
            cache[(i, j)] = sum(1 << idx[c] for c in hit)
        return cache[(i, j)]

    return mask


@dataclass(frozen=True)
class ProductCheckCase:
    classes: tuple[str, ...]
    passed: bool
    missing: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "classes": list(self.classes),
            "passed": self.passed,
            "missing": list(self.missing),
        }


@dataclass(frozen=True)
class ProductCheckPart:
    part: int
    statement: str
    cases: tuple[ProductCheckCase, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def to_dict(self) -> dict:
        return {
            "part": self.part,
            "statement": self.statement,
            "passed": self.passed,
            "cases": [c.to_dict() for c in self.cases],
        }


@dataclass(frozen=True)
class LongCycleProductReport:
    n: int
    parts: tuple[ProductCheckPart, ...]

    def to_dict(self) -> dict:
        return {"n": self.n, "parts": [p.to_dict() for p in self.parts]}


def long_cycle_product_checks(n: int, jobs: int = 1, mode: str = "engine") -> LongCycleProductReport:
    """Exercise the four long-cycle product statements at a single n.

    These hold for all sufficiently large n; at desk scale the report is
    descriptive, recording pass/fail per case.
    """
    classes = enumerate_alt_classes(n)
    idx = class_index(n)
    long_pair = long_cycle_classes(n)
    long_mask = _mask_of(NormalSet.of(long_pair))
    exceptional = [c for c in classes if is_exceptional(c.cycle_type)]
    exc_mask = sum(1 << idx[c] for c in exceptional)
    full = _full_mask(n)
    named = [(idx[c], c.name) for c in classes]

    def subset_case(members, mask, targets_mask):
        missing = targets_mask & ~mask
        return ProductCheckCase(
            tuple(c.name for c in members),
            missing == 0,
            tuple(name for j, name in named if missing >> j & 1),
        )

    reports = {}
    for label, pair_mask in _providers(n, mode, jobs):
        parts = []

        cases = [
            subset_case((a, b), pair_mask(idx[a], idx[b]), long_mask)
            for a, b in combinations_with_replacement(exceptional, 2)
        ]
        parts.append(
            ProductCheckPart(
                1,
                "a product of two exceptional classes contains both long-cycle classes",
                tuple(cases),
            )
        )

        cases = [
            subset_case((a, b), pair_mask(idx[a], idx[b]), exc_mask)
            for a, b in combinations_with_replacement(long_pair, 2)
        ]
        parts.append(
            ProductCheckPart(
                2,
                "a product of two long-cycle classes contains every exceptional class",
                tuple(cases),
            )
        )

        cases = [
            subset_case(
                (a,), _mask_product(n, long_mask, 1 << idx[a], pair_mask), full
            )
            for a in long_pair
        ]
        parts.append(
            ProductCheckPart(
                3,
                "the set of all long cycles times a long-cycle class covers Alt(n)",
                tuple(cases),
            )
        )

        cases = []
        for triple in combinations_with_replacement(long_pair, 3):
            mask = pair_mask(idx[triple[0]], idx[triple[1]])
            mask = _mask_product(n, mask, 1 << idx[triple[2]], pair_mask)
            cases.append(subset_case(triple, mask, full))
        parts.append(
            ProductCheckPart(
                4,
                "the product of any three long-cycle classes covers Alt(n)",
                tuple(cases),
            )
        )
        reports[label] = LongCycleProductReport(n, tuple(parts))
    if mode == "both" and reports["engine"] != reports["oracle"]:
        raise ConsistencyError("engine and oracle long-cycle checks disagree")
    return reports.get("engine", reports.get("oracle"))


@dataclass(frozen=True)
class PairCoverageRow:
    a: str
    b: str
    size_product: int
    covers_long_cycles: bool

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "size_product": self.size_product,
            "covers_long_cycles": self.covers_long_cycles,
        }


@dataclass(frozen=True)
class PairCoverageReport:
    n: int
    epsilon: Fraction
    rows: tuple[PairCoverageRow, ...]

    @property
    def flagged(self) -> tuple[PairCoverageRow, ...]:
        return tuple(r for r in self.rows if not r.covers_long_cycles)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "epsilon": str(self.epsilon),
            "rows": [r.to_dict() for r in self.rows],
            "flagged": [r.to_dict() for r in self.flagged],
        }


def large_pair_coverage_report(n: int, epsilon: Fraction, jobs: int = 1) -> PairCoverageReport:
    """Descriptive check: class pairs (neither of long cycles) with size
    product at least (n!/2)**(1+epsilon) should eventually have products
    containing both long-cycle classes.  Non-covering pairs are flagged,
    never failed: the statement is asymptotic."""
    epsilon = Fraction(epsilon)
    classes = enumerate_alt_classes(n)
    idx = class_index(n)
    order = math.factorial(n) // 2
    long_mask = _mask_of(NormalSet.of(long_cycle_classes(n)))
    long_type = long_cycle_classes(n)[0].cycle_type
    eligible = [c for c in classes if c.cycle_type != long_type]
    qualifying = [
        (a, b)
        for a, b in combinations_with_replacement(eligible, 2)
        if power_at_least(class_size(a) * class_size(b), order, 1 + epsilon)
    ]
    ensure_pair_masks(n, [(idx[a], idx[b]) for a, b in qualifying], jobs)
    rows = []
    for a, b in qualifying:
        mask = _pair_mask(n, idx[a], idx[b])
        rows.append(
            PairCoverageRow(
                a.name,
                b.name,
                class_size(a) * class_size(b),
                mask & long_mask == long_mask,
            )
        )
    return PairCoverageReport(n, epsilon, tuple(rows))
