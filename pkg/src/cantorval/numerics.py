"""Exact scalars, closed intervals and canonical unions of disjoint closed intervals.

Everything here is built on :class:`fractions.Fraction`; no floating point is
used anywhere in the core.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ``x`` to a Fraction. Floats are rejected on purpose."""
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a Fraction, int or 'a/b' string")
    return x if type(x) is Fraction else Fraction(x)


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    try:
        # Fraction('0.5') would silently accept decimals; only a/b and integers are allowed
        if any(c in text for c in ".eE"):
            raise ValueError
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational literal: {text!r}") from None


def format_rational(x: Fraction) -> str:
    # str(Fraction) already prints integers without "/1"
    return str(Fraction(x))


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[lo, hi]`` with rational endpoints (``lo == hi`` allowed).

    The same type is used for the open gaps returned by :func:`gaps_of`;
    those are documented as open at the call site.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = as_rational(self.lo), as_rational(self.hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


class IntervalUnion:
    """Finite union of pairwise disjoint closed intervals in canonical form.

    Parts are sorted and strictly separated; intervals that touch or overlap
    are merged on construction, so two unions describing the same point set
    compare equal.
    """

    __slots__ = ("_parts",)

    def __init__(self, raw: Iterable[Interval] = ()):
        self._parts = _merge(raw)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[RationalLike]]) -> "IntervalUnion":
        return cls(Interval(lo, hi) for lo, hi in pairs)

    @property
    def parts(self) -> tuple[Interval, ...]:
        return self._parts

    @property
    def measure(self) -> Fraction:
        return sum((iv.length for iv in self._parts), Fraction(0))

    @property
    def hull(self) -> Interval:
        if not self._parts:
            raise ValueError("empty union has no hull")
        return Interval(self._parts[0].lo, self._parts[-1].hi)

    def is_empty(self) -> bool:
        return not self._parts

    def is_connected(self) -> bool:
        return len(self._parts) == 1

    def component_of(self, x) -> Interval | None:
        # binary search over sorted parts
        lo, hi = 0, len(self._parts)
        while lo < hi:
            mid = (lo + hi) // 2
            if self._parts[mid].hi < x:
                lo = mid + 1
            else:
                hi = mid
        if lo < len(self._parts) and x in self._parts[lo]:
            return self._parts[lo]
        return None

    def __contains__(self, x) -> bool:
        return self.component_of(x) is not None

    def covers(self, iv: Interval) -> bool:
        comp = self.component_of(iv.lo)
        return comp is not None and iv.hi <= comp.hi

    def __iter__(self) -> Iterator[Interval]:
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalUnion):
            return NotImplemented
        return self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def pairs(self) -> list[tuple[Fraction, Fraction]]:
        return [(iv.lo, iv.hi) for iv in self._parts]

    def __repr__(self) -> str:
        return "IntervalUnion([" + ", ".join(str(iv) for iv in self._parts) + "])"


def _merge(raw: Iterable[Interval]) -> tuple[Interval, ...]:
    # merging keeps the larger hi, so sorting on lo alone is enough; integer
    # keys over a common denominator sort much faster than Fractions
    ivs = list(raw)
    common = math.lcm(*(iv.lo.denominator for iv in ivs)) if ivs else 1
    ivs.sort(key=lambda iv: iv.lo.numerator * (common // iv.lo.denominator))
    out: list[list[Fraction]] = []
    for iv in ivs:
        if out and iv.lo <= out[-1][1]:
            if iv.hi > out[-1][1]:
                out[-1][1] = iv.hi
        else:
            out.append([iv.lo, iv.hi])
    return tuple(Interval(lo, hi) for lo, hi in out)


def union_normalize(raw: Iterable[Interval]) -> IntervalUnion:
    """Merge ``raw`` into canonical form (touching closed intervals are connected)."""
    return IntervalUnion(raw)


def minkowski_diff(u: IntervalUnion, v: IntervalUnion) -> IntervalUnion:
    """``{x - y : x in u, y in v}``, computed pairwise on parts."""
    return IntervalUnion(
        Interval(x.lo - y.hi, x.hi - y.lo) for x in u.parts for y in v.parts
    )


def minkowski_sum(u: IntervalUnion, v: IntervalUnion) -> IntervalUnion:
    return IntervalUnion(
        Interval(x.lo + y.lo, x.hi + y.hi) for x in u.parts for y in v.parts
    )


def gaps_of(u: IntervalUnion) -> list[Interval]:
    """Bounded components of the complement of ``u``, left to right.

    Each returned :class:`Interval` stands for the *open* interval ``(lo, hi)``.
    """
    if u.is_empty():
        raise ValueError("gaps_of needs a nonempty union")
    return [Interval(a.hi, b.lo) for a, b in zip(u.parts, u.parts[1:])]
