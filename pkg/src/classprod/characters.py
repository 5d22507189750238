"""Exact character values for Sym(n) and Alt(n).

Sym(n) values come from the Murnaghan-Nakayama recursion (memoized: the
recursion revisits subproblems exponentially often without the cache) and
degrees from the hook length formula.  Alt(n) characters are labeled by
partition pairs ``{lam, lam'}``, with a split pair ``+``/``-`` whenever
``lam`` is self-adjoint; split values on the one critical cycle type are
quadratic irrationals, kept symbolic in :class:`QuadValue` so that every
downstream membership test is an exact zero-test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Optional, Union

from .partitions import (
    Partition,
    conjugate,
    diagonal_hook_partition,
    enumerate_partitions,
    find_l_hook,
    format_partition,
    hook_length_product,
    is_self_adjoint,
    parse_partition,
    remove_border_strips,
    validate_partition,
)
from .errors import UsageError

if TYPE_CHECKING:  # pragma: no cover
    from .alt_group import AltClass

RationalLike = Union[int, Fraction]


def _squarefree_decompose(m: int) -> tuple[int, int]:
    """Write m = s*s*d with d squarefree; m must be positive."""
    s, d = 1, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    return s, d * m


class QuadValue:
    """An exact algebraic number a + b*sqrt(d).

    ``a`` and ``b`` are rationals and ``d`` is a squarefree integer,
    possibly negative (the square root is kept symbolic, never floated).
    ``d == 1`` means the value is rational.  Arithmetic between values
    with different radicands is refused unless one side is rational;
    sums across fields are the caller's job (see the per-radicand
    accumulation in the product engine).
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0, d: int = 1):
        a = Fraction(a)
        b = Fraction(b)
        if d == 0:
            b = Fraction(0)
            d = 1
        if b == 0:
            d = 1
        elif d != 1:
            neg = d < 0
            s, sf = _squarefree_decompose(-d if neg else d)
            b *= s
            d = -sf if neg else sf
        if d == 1 and b:
            a += b
            b = Fraction(0)
        self.a = a
        self.b = b
        self.d = d

    @classmethod
    def sqrt_integer(cls, m: int) -> "QuadValue":
        """The exact square root of an integer (negative allowed)."""
        if m == 0:
            return cls(0)
        return cls(0, 1, m)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b:
            raise ValueError(f"{self} is irrational")
        return self.a

    def conjugate(self) -> "QuadValue":
        """Complex conjugate: flips the radical only for negative radicands."""
        if self.d < 0:
            return QuadValue(self.a, -self.b, self.d)
        return self

    def galois(self) -> "QuadValue":
        """Field conjugate sqrt(d) -> -sqrt(d), regardless of sign of d."""
        return QuadValue(self.a, -self.b, self.d)

    @staticmethod
    def _coerce(value) -> Optional["QuadValue"]:
        if isinstance(value, QuadValue):
            return value
        if isinstance(value, (int, Fraction)):
            return QuadValue(value)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.d == o.d:
            return QuadValue(self.a + o.a, self.b + o.b, self.d)
        if self.b == 0:
            return QuadValue(self.a + o.a, o.b, o.d)
        if o.b == 0:
            return QuadValue(self.a + o.a, self.b, self.d)
        raise ValueError(f"cannot add values over sqrt({self.d}) and sqrt({o.d})")

    __radd__ = __add__

    def __neg__(self):
        return QuadValue(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.b == 0:
            return QuadValue(self.a * o.a, self.a * o.b, o.d)
        if o.b == 0:
            return QuadValue(self.a * o.a, self.b * o.a, self.d)
        if self.d != o.d:
            raise ValueError(
                f"cannot multiply values over sqrt({self.d}) and sqrt({o.d})"
            )
        return QuadValue(
            self.a * o.a + self.b * o.b * self.d,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def _inverse(self) -> "QuadValue":
        if self.is_zero:
            raise ZeroDivisionError("division by zero QuadValue")
        if self.b == 0:
            return QuadValue(1 / self.a)
        norm = self.a * self.a - self.b * self.b * self.d
        return QuadValue(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not (o.b == 0 or self.b == 0 or o.d == self.d):
            raise ValueError(
                f"cannot divide values over sqrt({self.d}) and sqrt({o.d})"
            )
        return self * o._inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b and self.d == o.d

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def real_sign(self) -> int:
        """Sign of the value as a real number; requires d > 0 or rational."""
        if self.d < 0:
            raise ValueError("not a real number")
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        if self.a > 0 and self.b > 0:
            return 1
        if self.a < 0 and self.b < 0:
            return -1
        lhs = self.a * self.a
        rhs = self.b * self.b * self.d
        if lhs == rhs:
            return 0
        return (1 if self.a > 0 else -1) if lhs > rhs else (1 if self.b > 0 else -1)

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).real_sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).real_sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).real_sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).real_sign() >= 0

    def modulus_squared(self) -> Fraction:
        """|value|^2 as an exact rational; defined for d <= 1 (rational or
        complex values).  Real irrational values square to irrationals."""
        if self.b == 0:
            return self.a * self.a
        if self.d > 0:
            raise ValueError("square of a real irrational is irrational")
        return self.a * self.a - self.b * self.b * self.d

    def modulus_float(self) -> float:
        """Floating |value|, for diagnostics only."""
        if self.d < 0:
            return math.sqrt(float(self.a * self.a - self.b * self.b * self.d))
        return abs(float(self.a) + float(self.b) * math.sqrt(self.d))

    def to_dict(self) -> dict:
        return {"rational": str(self.a), "coeff": str(self.b), "radicand": self.d}

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.d})"
        if self.b == 1:
            term = root
        elif self.b == -1:
            term = f"-{root}"
        else:
            term = f"{self.b}*{root}"
        if self.a == 0:
            return term
        sign = "-" if self.b < 0 else "+"
        mag = -self.b if self.b < 0 else self.b
        mag_term = root if mag == 1 else f"{mag}*{root}"
        return f"{self.a} {sign} {mag_term}"

    def __repr__(self):
        return f"QuadValue({self.a!r}, {self.b!r}, {self.d!r})"


ZERO = QuadValue(0)


@lru_cache(maxsize=None)
def mn_value(lam: Partition, rho: Partition) -> int:
    """Character of Sym(n) labeled by ``lam``, evaluated on cycle type ``rho``.

    Murnaghan-Nakayama recursion: strip a border strip of length
    ``rho[0]`` in every possible way, recurse on the remainder with sign
    ``(-1)**height``.
    """
    if sum(lam) != sum(rho):
        raise ValueError(
            f"partition sizes differ: |{lam}| = {sum(lam)}, |{rho}| = {sum(rho)}"
        )
    if not lam:
        return 1
    head, rest = rho[0], rho[1:]
    total = 0
    for removal in remove_border_strips(lam, head):
        term = mn_value(removal.remainder, rest)
        total += -term if removal.height % 2 else term
    return total


@lru_cache(maxsize=None)
def degree(lam: Partition) -> int:
    """Degree of the Sym(n) character labeled by ``lam`` (hook length formula)."""
    n = sum(lam)
    num = math.factorial(n)
    den = hook_length_product(lam)
    if num % den:
        raise ArithmeticError(f"hook product {den} does not divide {n}!")
    return num // den


def l_cycle_value(lam: Partition) -> int:
    """Value of the Sym(n) character ``lam`` on a long cycle.

    The long cycle length is n for n odd and n-1 for n even.  The value
    is 0 without a hook of that length, else ``(-1)**leg`` of the unique
    such hook.
    """
    n = sum(lam)
    length = n if n % 2 else n - 1
    hook = find_l_hook(lam, length)
    if hook is None:
        return 0
    return -1 if hook.leg % 2 else 1


@dataclass(frozen=True)
class AltChar:
    """An irreducible character of Alt(n).

    ``partition`` is the canonical label: the lexicographically smaller
    of the partition and its conjugate.  ``split`` is present exactly for
    self-adjoint labels (n >= 2), which restrict as a pair of characters.
    """

    partition: Partition
    split: Optional[str] = None

    def __post_init__(self):
        parts = validate_partition(self.partition)
        object.__setattr__(self, "partition", parts)
        lam = validate_alt_char_label(parts)
        if lam != parts:
            raise ValueError(
                f"{parts} is not the canonical label; use {lam} "
                "(or the alt_char_for factory)"
            )
        self_adj = is_self_adjoint(self.partition) and sum(self.partition) >= 2
        if self_adj:
            if self.split not in ("+", "-"):
                raise ValueError(
                    f"self-adjoint label {self.partition} needs a '+'/'-' tag"
                )
        elif self.split is not None:
            raise ValueError(f"label {self.partition} does not split")

    @property
    def n(self) -> int:
        return sum(self.partition)

    @property
    def name(self) -> str:
        return format_partition(self.partition) + (self.split or "")


def validate_alt_char_label(lam: Partition) -> Partition:
    mu = conjugate(lam)
    return min(lam, mu)


def alt_char_for(lam: Partition, split: Optional[str] = None) -> AltChar:
    """Build an AltChar from either member of a conjugate pair."""
    return AltChar(validate_alt_char_label(tuple(lam)), split)


def parse_char(text: str) -> AltChar:
    """Parse a character name such as ``"3,2,1+"`` (ASCII or U+2212 minus)."""
    text = text.strip()
    split = None
    if text.endswith(("+", "-", "−")):
        split = "-" if text[-1] in ("-", "−") else "+"
        text = text[:-1]
    lam = parse_partition(text)
    try:
        return alt_char_for(lam, split)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


@lru_cache(maxsize=None)
def alt_irreducibles(n: int) -> tuple[AltChar, ...]:
    """All irreducible characters of Alt(n), one per conjugate pair of
    partitions plus a split pair per self-adjoint partition."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    chars = []
    seen = set()
    for lam in enumerate_partitions(n):
        if lam in seen:
            continue
        mu = conjugate(lam)
        seen.add(lam)
        seen.add(mu)
        if lam == mu and n >= 2:
            chars.append(AltChar(lam, "+"))
            chars.append(AltChar(lam, "-"))
        else:
            chars.append(AltChar(min(lam, mu)))
    return tuple(chars)


def alt_degree(psi: AltChar) -> int:
    """psi(1): the full Sym degree, halved for split characters."""
    d = degree(psi.partition)
    if psi.split is None:
        return d
    if d % 2:
        raise ArithmeticError(f"split character degree {d} is odd")
    return d // 2


def alt_value(psi: AltChar, cls: "AltClass") -> QuadValue:
    """Exact value of an Alt(n) irreducible character on a conjugacy class.

    Non-split characters restrict from Sym(n) unchanged.  A split pair
    agrees with half the Sym value except on the class pair whose cycle
    type equals the diagonal-hook partition of the label, where the
    values are (chi +- sqrt(chi * product of diagonal hooks)) / 2; the
    ``+`` character takes the +sqrt value on the ``+`` class (the class
    of the canonical representative) and the conjugate value on the
    other, and symmetrically for the ``-`` character.
    """
    lam = psi.partition
    ct = cls.cycle_type
    if sum(lam) != sum(ct):
        raise ValueError(f"character of {sum(lam)} evaluated on class of {sum(ct)}")
    chi = mn_value(lam, ct)
    if psi.split is None:
        return QuadValue(chi)
    crit = diagonal_hook_partition(lam)
    if ct != crit:
        return QuadValue(Fraction(chi, 2))
    radicand = chi
    for h in crit:
        radicand *= h
    root = QuadValue.sqrt_integer(radicand)
    if psi.split != cls.split:
        root = -root
    return (QuadValue(chi) + root) * Fraction(1, 2)


@dataclass(frozen=True)
class CharacterTable:
    """The full character table of Alt(n) with exact entries.

    ``values[i][j]`` is ``chars[i]`` evaluated on ``classes[j]``; rows and
    columns follow the canonical enumeration orders.
    """

    n: int
    chars: tuple[AltChar, ...]
    classes: tuple["AltClass", ...]
    degrees: tuple[int, ...]
    class_sizes: tuple[int, ...]
    values: tuple[tuple[QuadValue, ...], ...]

    @property
    def order(self) -> int:
        return math.factorial(self.n) // 2 if self.n >= 2 else 1


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    from .alt_group import class_size, enumerate_alt_classes

    chars = alt_irreducibles(n)
    classes = enumerate_alt_classes(n)
    values = tuple(
        tuple(alt_value(psi, cls) for cls in classes) for psi in chars
    )
    return CharacterTable(
        n,
        chars,
        classes,
        tuple(alt_degree(psi) for psi in chars),
        tuple(class_size(cls) for cls in classes),
        values,
    )


def character_exponent_report(n: int) -> list[tuple[str, str, float]]:
    """Empirical exponents log|psi(x)| / log psi(1), diagnostics only.

    Scans nontrivial characters whose label carries a long-cycle hook,
    evaluated on exceptional classes; zero values are skipped.  Floating
    point is fine here: nothing downstream consumes these numbers.
    """
    from .alt_group import enumerate_alt_classes, is_exceptional

    length = n if n % 2 else n - 1
    rows = []
    for psi in alt_irreducibles(n):
        lam = psi.partition
        if lam in ((n,), (1,) * n) or find_l_hook(lam, length) is None:
            continue
        deg = alt_degree(psi)
        if deg <= 1:
            continue
        for cls in enumerate_alt_classes(n):
            if not is_exceptional(cls.cycle_type):
                continue
            mod = alt_value(psi, cls).modulus_float()
            if mod == 0.0:
                continue
            rows.append((psi.name, cls.name, math.log(mod) / math.log(deg)))
    return rows
