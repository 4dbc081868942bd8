"""Exact positive reals of the form (p/q)**(1/r) and ratios of their logs.

Bound endpoints have to compose exactly (products, reciprocals, shared-base
sums) without passing through floats; floating point enters only for display
and for last-resort comparisons, with outward rounding.  Two building blocks:

* ``Exact`` -- a positive real m**(1/r) with rational m, closed under
  multiplication, division and rational powers; comparisons are decided by
  cross-powering integers.
* ``LogRatio`` -- log2(num)/log2(den) over two ``Exact`` values.  Every
  nonnegative rational embeds as log2(2**(p/q))/log2(2), so a single type
  carries plain rationals, log ratios like log(5)/log(2.5) and values such
  as log2(sqrt(5)).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Union

RationalLike = Union[int, Fraction]

# Relative slack used when a comparison has to fall back to floats.
_FLOAT_SLACK = 1e-11


def iroot(x: int, r: int) -> tuple[int, bool]:
    """Floor r-th root of a nonnegative integer, plus an exactness flag."""
    if x < 0:
        raise ValueError("iroot of negative integer")
    if x in (0, 1) or r == 1:
        return x, True
    lo = int(round(x ** (1.0 / r)))
    # the float guess can be off by a few; walk to the true floor root
    while lo > 0 and lo**r > x:
        lo -= 1
    while (lo + 1) ** r <= x:
        lo += 1
    return lo, lo**r == x


def _fraction_root(m: Fraction, r: int) -> Optional[Fraction]:
    """Exact r-th root of a positive rational, or None."""
    pn, okn = iroot(m.numerator, r)
    if not okn:
        return None
    pd, okd = iroot(m.denominator, r)
    if not okd:
        return None
    return Fraction(pn, pd)


class Exact:
    """A positive real number m**(1/r) with m rational and r >= 1."""

    __slots__ = ("mant", "root")

    def __init__(self, mant: RationalLike, root: int = 1):
        mant = Fraction(mant)
        if mant <= 0:
            raise ValueError("Exact values must be positive")
        if root < 1:
            raise ValueError("root index must be >= 1")
        # pull out perfect p-th powers to keep representations canonical
        p = 2
        while p <= root:
            while root % p == 0:
                reduced = _fraction_root(mant, p)
                if reduced is None:
                    break
                mant = reduced
                root //= p
            p += 1
        self.mant = mant
        self.root = root

    # -- constructors -------------------------------------------------

    @staticmethod
    def of(value: RationalLike) -> "Exact":
        return Exact(Fraction(value))

    @staticmethod
    def nth_root(value: RationalLike, r: int) -> "Exact":
        return Exact(Fraction(value), r)

    # -- arithmetic ---------------------------------------------------

    def __mul__(self, other: "Exact") -> "Exact":
        if not isinstance(other, Exact):
            return NotImplemented
        r = math.lcm(self.root, other.root)
        m = self.mant ** (r // self.root) * other.mant ** (r // other.root)
        return Exact(m, r)

    def __truediv__(self, other: "Exact") -> "Exact":
        return self * other.inverse()

    def inverse(self) -> "Exact":
        return Exact(1 / self.mant, self.root)

    def pow_fraction(self, e: RationalLike) -> "Exact":
        """Raise to an exact rational power (``e`` may be negative)."""
        e = Fraction(e)
        if e == 0:
            return Exact(1)
        m = self.mant**e.numerator if e.numerator >= 0 else (1 / self.mant) ** (-e.numerator)
        return Exact(m, self.root * e.denominator)

    # -- comparisons (exact, via cross-powering) ----------------------

    def _cross(self, other: "Exact") -> tuple[Fraction, Fraction]:
        return self.mant**other.root, other.mant**self.root

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Exact(other)
        if not isinstance(other, Exact):
            return NotImplemented
        a, b = self._cross(other)
        return a == b

    def __lt__(self, other: "Exact") -> bool:
        if isinstance(other, (int, Fraction)):
            other = Exact(other)
        a, b = self._cross(other)
        return a < b

    def __le__(self, other: "Exact") -> bool:
        if isinstance(other, (int, Fraction)):
            other = Exact(other)
        a, b = self._cross(other)
        return a <= b

    def __gt__(self, other):
        return not self.__le__(other)

    def __ge__(self, other):
        return not self.__lt__(other)

    def __hash__(self) -> int:
        return hash((self.mant, self.root))

    # -- conversions --------------------------------------------------

    def as_fraction(self) -> Optional[Fraction]:
        return self.mant if self.root == 1 else None

    def log2(self) -> float:
        # math.log2 handles arbitrarily large ints; split num/den to stay exact-ish
        return (math.log2(self.mant.numerator) - math.log2(self.mant.denominator)) / self.root

    def __float__(self) -> float:
        return 2.0 ** self.log2()

    def __repr__(self) -> str:
        if self.root == 1:
            return f"Exact({self.mant})"
        return f"Exact({self.mant})^(1/{self.root})"

    def to_json(self) -> dict:
        if self.root == 1:
            return {"kind": "rational", "payload": str(self.mant)}
        return {"kind": "root", "payload": {"base": str(self.mant), "index": self.root}}

    @staticmethod
    def from_json(obj: dict) -> "Exact":
        if obj["kind"] == "rational":
            return Exact(Fraction(obj["payload"]))
        if obj["kind"] == "root":
            return Exact(Fraction(obj["payload"]["base"]), obj["payload"]["index"])
        raise ValueError(f"not an Exact payload: {obj}")


ONE = Exact(1)
TWO = Exact(2)


class LogRatio:
    """The value log2(num)/log2(den) for Exact num >= 1, den > 1.

    This is the common currency for information-ratio bounds: separation
    bounds, identity-mapped ratios and plain rationals all live here, and
    the algebra below keeps every acceptance-relevant combination exact.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Exact, den: Exact):
        if not isinstance(num, Exact) or not isinstance(den, Exact):
            raise TypeError("LogRatio wants Exact operands")
        if num < ONE:
            raise ValueError("LogRatio numerator must be >= 1")
        if den <= ONE:
            raise ValueError("LogRatio denominator must be > 1")
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(q: RationalLike) -> "LogRatio":
        q = Fraction(q)
        if q < 0:
            raise ValueError("bounds are nonnegative")
        return LogRatio(TWO.pow_fraction(q), TWO)

    @staticmethod
    def log2_of(x: Exact) -> "LogRatio":
        return LogRatio(x, TWO)

    # -- exact views --------------------------------------------------

    def as_rational(self) -> Optional[Fraction]:
        """Recognize log(num)/log(den) == p/q exactly, if p,q are small."""
        if self.num == ONE:
            return Fraction(0)
        target = self.float()
        for q in range(1, 49):
            p = round(target * q)
            if p < 0 or abs(target * q - p) > 1e-7 * max(1, q):
                continue
            if self.num.pow_fraction(q) == self.den.pow_fraction(p):
                return Fraction(p, q)
        return None

    def float(self) -> float:
        return self.num.log2() / self.den.log2()

    def interval(self) -> tuple[float, float]:
        """Outward-rounded float enclosure."""
        if self.num.mant == 1:
            return 0.0, 0.0
        v = self.float()
        pad = abs(v) * _FLOAT_SLACK + 1e-13
        return v - pad, v + pad

    # -- algebra (returns None when exactness can't be preserved) -----

    def mul(self, other: "LogRatio") -> Optional["LogRatio"]:
        a, b = self.as_rational(), other.as_rational()
        if a is not None and b is not None:
            return LogRatio.from_rational(a * b)
        if a is not None:
            return other.scale(a)
        if b is not None:
            return self.scale(b)
        if self.den == other.num:
            return LogRatio(self.num, other.den)
        if other.den == self.num:
            return LogRatio(other.num, self.den)
        return None

    def scale(self, q: Fraction) -> Optional["LogRatio"]:
        """q * log(num)/log(den) = log(num**q)/log(den)."""
        if q < 0:
            raise ValueError("bounds are nonnegative")
        if q == 0:
            return LogRatio.from_rational(0)
        return LogRatio(self.num.pow_fraction(q), self.den)

    def add(self, other: "LogRatio") -> Optional["LogRatio"]:
        a, b = self.as_rational(), other.as_rational()
        if a is not None and b is not None:
            return LogRatio.from_rational(a + b)
        if a is not None:
            return other.add_rational(a)
        if b is not None:
            return self.add_rational(b)
        if self.den == other.den:
            return LogRatio(self.num * other.num, self.den)
        return None

    def add_rational(self, q: Fraction) -> "LogRatio":
        """q + log(num)/log(den) = log(den**q * num)/log(den)."""
        return LogRatio(self.den.pow_fraction(q) * self.num, self.den)

    def div(self, other: "LogRatio") -> Optional["LogRatio"]:
        rec = other.reciprocal()
        return self.mul(rec) if rec is not None else None

    def reciprocal(self) -> Optional["LogRatio"]:
        if self.num == ONE or self.num.mant == 1:
            return None  # 1/0
        return LogRatio(self.den, self.num)

    def over_one_plus(self) -> "LogRatio":
        """x / (1 + x), exact: log(num)/log(den*num)."""
        return LogRatio(self.num, self.den * self.num)

    # -- comparisons ---------------------------------------------------

    def compare(self, other: Union["LogRatio", RationalLike]) -> Optional[int]:
        """-1/0/+1 when decidable exactly or separated in floats, else None."""
        if isinstance(other, (int, Fraction)):
            other = LogRatio.from_rational(other)
        a, b = self.as_rational(), other.as_rational()
        if a is not None and b is not None:
            return (a > b) - (a < b)
        if a is not None:
            # log c/log d vs p/q  <=>  c**q vs d**p   (d > 1)
            lhs = other.num.pow_fraction(a.denominator)
            rhs = other.den.pow_fraction(a.numerator)
            return (rhs > lhs) - (rhs < lhs)
        if b is not None:
            lhs = self.num.pow_fraction(b.denominator)
            rhs = self.den.pow_fraction(b.numerator)
            return (lhs > rhs) - (lhs < rhs)
        if self.den == other.den:
            if self.num == other.num:
                return 0
            return 1 if self.num > other.num else -1
        if self.num == other.num:
            return 1 if self.den < other.den else -1
        lo1, hi1 = self.interval()
        lo2, hi2 = other.interval()
        if hi1 < lo2:
            return -1
        if hi2 < lo1:
            return 1
        return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, LogRatio)):
            return self.compare(other) == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        q = self.as_rational()
        if q is not None:
            return f"LogRatio({q})"
        return f"LogRatio(log {self.num!r} / log {self.den!r})"

    def to_json(self) -> dict:
        q = self.as_rational()
        if q is not None:
            return {"kind": "rational", "payload": str(q)}
        return {"kind": "log_ratio", "payload": {"num": self.num.to_json(), "den": self.den.to_json()}}

    @staticmethod
    def from_json(obj: dict) -> "LogRatio":
        if obj["kind"] == "rational":
            return LogRatio.from_rational(Fraction(obj["payload"]))
        if obj["kind"] == "log_ratio":
            return LogRatio(Exact.from_json(obj["payload"]["num"]), Exact.from_json(obj["payload"]["den"]))
        raise ValueError(f"not a LogRatio payload: {obj}")
