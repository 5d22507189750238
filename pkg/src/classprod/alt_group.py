"""Conjugacy classes of Alt(n): parity, exceptionality, sizes, delta.

A cycle type with all parts odd and pairwise distinct labels two Alt(n)
classes of equal size (the Sym(n) class splits); every other even cycle
type labels a single class.  Split classes carry a ``+``/``-`` tag whose
meaning is fixed by the canonical representative convention shared with
the brute-force module: the ``+`` class contains the permutation whose
cycles fill the points in order, longest cycle first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

from .errors import UsageError
from .partitions import (
    Partition,
    enumerate_partitions,
    format_partition,
    parse_partition,
    validate_partition,
)


def is_even_type(rho: Partition) -> bool:
    """True when permutations of this cycle type are even."""
    return (sum(rho) - len(rho)) % 2 == 0


def is_exceptional(rho: Partition) -> bool:
    """True when the Sym(n) class of this type splits in Alt(n): all cycle
    lengths odd and pairwise distinct (and n >= 2, so odd elements exist)."""
    if sum(rho) < 2:
        return False
    return all(p % 2 for p in rho) and len(set(rho)) == len(rho)


def centralizer_order_sym(rho: Partition) -> int:
    """|C_Sym(n)(x)| for x of cycle type rho: prod i^{r_i} r_i!."""
    mult: dict[int, int] = {}
    for p in rho:
        mult[p] = mult.get(p, 0) + 1
    order = 1
    for part, r in mult.items():
        order *= part**r * math.factorial(r)
    return order


@dataclass(frozen=True)
class AltClass:
    """A conjugacy class of Alt(n): an even cycle type, plus a split tag
    when (and only when) the type is exceptional."""

    cycle_type: Partition
    split: Optional[str] = None

    def __post_init__(self):
        ct = validate_partition(self.cycle_type)
        object.__setattr__(self, "cycle_type", ct)
        if not is_even_type(ct):
            raise ValueError(f"cycle type {ct} is odd, not a class of Alt(n)")
        if is_exceptional(ct):
            if self.split not in ("+", "-"):
                raise ValueError(
                    f"exceptional type {ct} requires a '+'/'-' tag "
                    "(a bare name denotes the union of both classes)"
                )
        elif self.split is not None:
            raise ValueError(f"type {ct} does not split")

    @property
    def n(self) -> int:
        return sum(self.cycle_type)

    @property
    def name(self) -> str:
        return format_partition(self.cycle_type) + (self.split or "")


def format_class(cls: AltClass) -> str:
    return cls.name


def parse_class(text: str) -> AltClass:
    """Parse a single class name such as ``"5,3,1-"``; exceptional types
    must carry an explicit tag."""
    classes = parse_class_or_union(text)
    if len(classes) != 1:
        raise UsageError(
            f"{text!r} names an exceptional type without a tag; "
            "append '+' or '-' to pick one class"
        )
    return classes[0]


def parse_class_or_union(text: str) -> tuple[AltClass, ...]:
    """Parse a class name, expanding a bare exceptional type to the pair
    of split classes it denotes."""
    text = text.strip()
    split = None
    if text.endswith(("+", "-", "−")):
        split = "-" if text[-1] in ("-", "−") else "+"
        text = text[:-1]
    ct = parse_partition(text)
    try:
        if split is not None:
            return (AltClass(ct, split),)
        if is_exceptional(ct):
            return (AltClass(ct, "+"), AltClass(ct, "-"))
        return (AltClass(ct),)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def class_size(cls: AltClass) -> int:
    """Number of elements: the Sym(n) class size, halved when split."""
    n = cls.n
    size = math.factorial(n) // centralizer_order_sym(cls.cycle_type)
    if cls.split is not None:
        size //= 2
    return size


def delta(cls: AltClass) -> int:
    """n minus the number of disjoint cycles; even for every Alt(n) class."""
    return cls.n - len(cls.cycle_type)


@lru_cache(maxsize=None)
def enumerate_alt_classes(n: int) -> tuple[AltClass, ...]:
    """All classes of Alt(n) in canonical order: cycle types in descending
    lexicographic order, '+' before '-' within a split pair."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    classes = []
    for rho in enumerate_partitions(n):
        if not is_even_type(rho):
            continue
        if is_exceptional(rho):
            classes.append(AltClass(rho, "+"))
            classes.append(AltClass(rho, "-"))
        else:
            classes.append(AltClass(rho))
    return tuple(classes)


@lru_cache(maxsize=None)
def class_index(n: int) -> dict[AltClass, int]:
    return {cls: i for i, cls in enumerate(enumerate_alt_classes(n))}


def identity_class(n: int) -> AltClass:
    return AltClass((1,) * n) if n else AltClass(())


def inverse_class(cls: AltClass) -> AltClass:
    """The class of inverses.

    Inverting is conjugation by the product of per-cycle reversals, whose
    sign is (-1)**sum(floor(part/2)); for a split class the tag flips
    exactly when that sign is odd.
    """
    if cls.split is None:
        return cls
    flips = sum(p // 2 for p in cls.cycle_type) % 2
    if not flips:
        return cls
    return AltClass(cls.cycle_type, "-" if cls.split == "+" else "+")


def long_cycle_length(n: int) -> int:
    """n for n odd, n-1 for n even: the longest cycle length that keeps a
    permutation even."""
    if n < 3:
        raise ValueError("long cycles need n >= 3")
    return n if n % 2 else n - 1


def long_cycle_type(n: int) -> Partition:
    return (n,) if n % 2 else (n - 1, 1)


def long_cycle_classes(n: int) -> tuple[AltClass, AltClass]:
    """The two split classes of long cycles (their type is always
    exceptional for n >= 3)."""
    ct = long_cycle_type(n)
    return (AltClass(ct, "+"), AltClass(ct, "-"))


@dataclass(frozen=True)
class NormalSet:
    """A union of Alt(n) conjugacy classes (possibly empty)."""

    n: int
    classes: frozenset[AltClass]

    def __post_init__(self):
        for cls in self.classes:
            if cls.n != self.n:
                raise ValueError(f"class {cls.name} is not a class of Alt({self.n})")

    @staticmethod
    def of(classes: Iterable[AltClass], n: Optional[int] = None) -> "NormalSet":
        cs = frozenset(classes)
        if n is None:
            if not cs:
                raise ValueError("empty normal set needs an explicit n")
            n = next(iter(cs)).n
        return NormalSet(n, cs)

    @staticmethod
    def full(n: int) -> "NormalSet":
        return NormalSet(n, frozenset(enumerate_alt_classes(n)))

    def is_full(self) -> bool:
        return len(self.classes) == len(enumerate_alt_classes(self.n))

    def sorted_classes(self) -> tuple[AltClass, ...]:
        index = class_index(self.n)
        return tuple(sorted(self.classes, key=index.__getitem__))

    def __contains__(self, cls: AltClass) -> bool:
        return cls in self.classes

    def __iter__(self):
        return iter(self.sorted_classes())

    def __len__(self):
        return len(self.classes)


def largest_class(s: NormalSet) -> AltClass:
    """A class of maximal size in the set; ties go to the earliest class
    in canonical order (descending lex cycle type, '+' before '-')."""
    if not s.classes:
        raise ValueError("empty normal set has no largest class")
    index = class_index(s.n)
    return min(s.classes, key=lambda c: (-class_size(c), index[c]))


def power_at_least(value: int, base: int, exponent: Fraction) -> bool:
    """Exact test of value >= base**exponent via cross-multiplied integer
    powers; value, base >= 1 and exponent > 0."""
    if value < 1 or base < 1:
        raise ValueError("power comparison needs positive integers")
    exponent = Fraction(exponent)
    if exponent <= 0:
        raise ValueError("exponent must be positive")
    return value**exponent.denominator >= base**exponent.numerator


@dataclass(frozen=True)
class DeltaBoundRow:
    cls: AltClass
    size: int
    delta: int
    ratio: Fraction
    minimal: bool

    def to_dict(self) -> dict:
        return {
            "class": self.cls.name,
            "size": self.size,
            "delta": self.delta,
            "ratio": str(self.ratio),
            "minimal": self.minimal,
        }


@dataclass(frozen=True)
class DeltaBoundReport:
    n: int
    gamma: Fraction
    rows: tuple[DeltaBoundRow, ...]

    @property
    def min_ratio(self) -> Optional[Fraction]:
        return min((r.ratio for r in self.rows), default=None)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "gamma": str(self.gamma),
            "min_ratio": None if self.min_ratio is None else str(self.min_ratio),
            "rows": [r.to_dict() for r in self.rows],
        }


def delta_bound_report(n: int, gamma: Fraction) -> DeltaBoundReport:
    """For each class at least as large as (n!/2)**gamma, report delta and
    delta/n, marking the minimum ratio.  Size comparisons are exact.

    Empirical companion to the size-to-delta bound: no asymptotic claim
    is made, the table simply shows the witnesses at this n.
    """
    gamma = Fraction(gamma)
    if not 0 < gamma < 1:
        raise ValueError("gamma must lie strictly between 0 and 1")
    if n < 2:
        raise ValueError("delta report needs n >= 2")
    order = math.factorial(n) // 2
    rows = []
    for cls in enumerate_alt_classes(n):
        size = class_size(cls)
        if not power_at_least(size, order, gamma):
            continue
        rows.append((cls, size, delta(cls), Fraction(delta(cls), n)))
    min_ratio = min((r[3] for r in rows), default=None)
    return DeltaBoundReport(
        n,
        gamma,
        tuple(
            DeltaBoundRow(cls, size, d, ratio, ratio == min_ratio)
            for cls, size, d, ratio in rows
        ),
    )
