"""Digit sets ``A`` in base ``p`` and the point sets ``A_p = {sum x_i p**-i : x_i in A}``.

Sums, differences and integer multiples of point sets reduce to the same
operation on digits, so everything here is integer arithmetic.
"""
from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .numerics import Interval

__all__ = [
    "DigitSet",
    "DigitStats",
    "ds_sum",
    "ds_diff",
    "ds_scale",
    "stats",
    "is_interval",
    "is_full_difference",
    "int_range",
]


def int_range(i: int, j: int) -> range:
    """Integer range ``<i, j>`` (empty when ``i > j``)."""
    return range(i, j + 1)


@dataclass(frozen=True)
class DigitSet:
    """Sorted, deduplicated digits in base ``base``.

    Digits outside ``<-p+1, p-1>`` are representable, since sums of digit sets
    can leave that window; callers that depend on the window use
    :meth:`require_bounded`.
    """

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if int(self.base) != self.base or self.base < 2:
            raise ValueError(f"base must be an integer >= 2, got {self.base}")
        digits = tuple(sorted({int(d) for d in self.digits}))
        if not digits:
            raise ValueError("digit set must be nonempty")
        object.__setattr__(self, "base", int(self.base))
        object.__setattr__(self, "digits", digits)

    @classmethod
    def of(cls, base: int, digits: Iterable[int]) -> "DigitSet":
        return cls(base, tuple(digits))

    @classmethod
    def full(cls, base: int, signed: bool = False) -> "DigitSet":
        lo = -base + 1 if signed else 0
        return cls(base, tuple(int_range(lo, base - 1)))

    _LITERAL = re.compile(r"^\s*p\s*=\s*(\d+)\s*:\s*\{([^}]*)\}\s*$")

    @classmethod
    def parse(cls, text: str) -> "DigitSet":
        """Parse ``"p=7:{-6,-5,-4,-1,0,1,4,5,6}"``."""
        m = cls._LITERAL.match(text)
        if not m:
            raise ValueError(f"not a digit-set literal: {text!r}")
        body = m.group(2).strip()
        digits = [int(t) for t in body.split(",")] if body else []
        return cls(int(m.group(1)), tuple(digits))

    def __str__(self) -> str:
        return f"p={self.base}:{{{','.join(map(str, self.digits))}}}"

    def __contains__(self, d: int) -> bool:
        return d in self.digit_set

    def __iter__(self):
        return iter(self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    @property
    def digit_set(self) -> frozenset[int]:
        return frozenset(self.digits)

    @property
    def min(self) -> int:
        return self.digits[0]

    @property
    def max(self) -> int:
        return self.digits[-1]

    @property
    def hull(self) -> Interval:
        """Convex hull ``[min/(p-1), max/(p-1)]`` of ``A_p``."""
        p = self.base
        return Interval(Fraction(self.min, p - 1), Fraction(self.max, p - 1))

    @property
    def in_range(self) -> bool:
        p = self.base
        return -p + 1 <= self.min and self.max <= p - 1

    def require_bounded(self) -> "DigitSet":
        if not self.in_range:
            bad = [d for d in self.digits if abs(d) > self.base - 1]
            raise ValueError(f"digits {bad} fall outside <-{self.base - 1}, {self.base - 1}>")
        return self

    def complement_in_window(self) -> tuple[int, ...]:
        p = self.base
        return tuple(k for k in int_range(-p + 1, p - 1) if k not in self.digit_set)


def _same_base(a: DigitSet, b: DigitSet) -> int:
    if a.base != b.base:
        raise ValueError(f"base mismatch: {a.base} vs {b.base}")
    return a.base


def ds_sum(a: DigitSet, b: DigitSet) -> DigitSet:
    """Digits of ``A_p + B_p``."""
    p = _same_base(a, b)
    return DigitSet(p, tuple({x + y for x in a.digits for y in b.digits}))


def ds_diff(a: DigitSet, b: DigitSet) -> DigitSet:
    """Digits of ``A_p - B_p``.

    When both inputs lie in ``<0, p-1>`` the result always fits the signed
    window; otherwise out-of-window digits are flagged with a warning.
    """
    p = _same_base(a, b)
    out = DigitSet(p, tuple({x - y for x in a.digits for y in b.digits}))
    if not out.in_range:
        warnings.warn(f"difference digits leave <-{p - 1}, {p - 1}>: {out}", stacklevel=2)
    return out


def ds_scale(k: int, a: DigitSet) -> DigitSet:
    """Digits of ``k * A_p``."""
    return DigitSet(a.base, tuple(k * x for x in a.digits))


@dataclass(frozen=True)
class DigitStats:
    diam: int
    delta: int
    ratio: Fraction

    def __iter__(self):
        return iter((self.diam, self.delta, self.ratio))


def stats(a: DigitSet) -> DigitStats:
    """Diameter, largest consecutive gap and ``I(A) = delta / (delta + diam)``."""
    if len(a) < 2:
        raise ValueError("largest gap is undefined for a single digit")
    d = a.digits
    diam = d[-1] - d[0]
    delta = max(y - x for x, y in zip(d, d[1:]))
    return DigitStats(diam, delta, Fraction(delta, delta + diam))


def is_interval(a: DigitSet) -> bool:
    """Whether ``A_p`` is an interval: ``1/p >= I(A)``, i.e. ``(p - 1) * delta <= diam``."""
    if len(a) < 2:
        warnings.warn("single-digit set: A_p is one point, reported as not an interval", stacklevel=2)
        return False
    s = stats(a)
    return Fraction(1, a.base) >= s.ratio


def is_full_difference(a: DigitSet, b: DigitSet) -> bool:
    """Whether ``A_p - B_p = [-1, 1]`` for ``A, B`` in ``<0, p-1>`` containing both ``0`` and ``p-1``."""
    p = _same_base(a, b)
    for name, s in (("A", a), ("B", b)):
        if s.min < 0 or s.max > p - 1:
            raise ValueError(f"{name} must lie in <0, {p - 1}>")
        if s.min != 0 or s.max != p - 1:
            raise ValueError(f"{name} must contain 0 and {p - 1}")
    return stats(ds_diff(a, b)).delta <= 2
