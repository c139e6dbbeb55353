"""S-Cantor sets ``C(l, r, p)`` and the five-way classification of their differences.

``C(l, r, p)`` keeps the ``l`` lowest and ``r`` highest base-``p`` digits. The
difference ``C(l1, r1, p) - C(l2, r2, p)`` is the whole interval ``[-1, 1]``, a
Cantor set, an L-, R- or M-Cantorval depending only on five integer
inequalities between the parameters.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .digitset import DigitSet, ds_diff, int_range

__all__ = [
    "SCantorParams",
    "SConditions",
    "TopologyClass",
    "digit_set_of",
    "difference_digits",
    "conditions",
    "classify",
    "classify_self",
    "classify_symmetric",
    "kraft_threshold",
    "lr_sets",
    "mirror",
    "valid_params",
    "valid_pairs",
]


@dataclass(frozen=True, order=True)
class SCantorParams:
    l: int
    r: int
    p: int

    def __post_init__(self):
        if self.l < 1 or self.r < 1:
            raise ValueError(f"l and r must be >= 1, got l={self.l}, r={self.r}")
        if self.p <= 2:
            raise ValueError(f"p must be > 2, got {self.p}")
        if self.l + self.r >= self.p:
            raise ValueError(f"need l + r < p, got {self.l} + {self.r} >= {self.p}")

    def __str__(self) -> str:
        return f"C({self.l},{self.r},{self.p})"


class TopologyClass(enum.Enum):
    FULL_INTERVAL = "FullInterval"
    CANTOR_SET = "CantorSet"
    L_CANTORVAL = "LCantorval"
    R_CANTORVAL = "RCantorval"
    M_CANTORVAL = "MCantorval"

    def __str__(self) -> str:
        return self.value


def mirror(cls: TopologyClass) -> TopologyClass:
    """Class of ``-E`` given the class of ``E``."""
    swap = {TopologyClass.L_CANTORVAL: TopologyClass.R_CANTORVAL,
            TopologyClass.R_CANTORVAL: TopologyClass.L_CANTORVAL}
    return swap.get(cls, cls)


@dataclass(frozen=True)
class SConditions:
    S1: bool
    S2: bool
    S3: bool
    S1star: bool
    S2star: bool

    def as_dict(self) -> dict[str, bool]:
        return {"S1": self.S1, "S2": self.S2, "S3": self.S3, "S1*": self.S1star, "S2*": self.S2star}


def _same_p(P1: SCantorParams, P2: SCantorParams) -> int:
    if P1.p != P2.p:
        raise ValueError(f"base mismatch: {P1.p} vs {P2.p}")
    return P1.p


def digit_set_of(P: SCantorParams) -> DigitSet:
    """``A(l, r, p) = <0, l-1> u <p-r, p-1>``."""
    return DigitSet(P.p, tuple(int_range(0, P.l - 1)) + tuple(int_range(P.p - P.r, P.p - 1)))


def difference_digits(P1: SCantorParams, P2: SCantorParams) -> DigitSet:
    _same_p(P1, P2)
    return ds_diff(digit_set_of(P1), digit_set_of(P2))


def conditions(P1: SCantorParams, P2: SCantorParams) -> SConditions:
    p = _same_p(P1, P2)
    l1, r1, l2, r2 = P1.l, P1.r, P2.l, P2.r
    return SConditions(
        S1=l1 + l2 + r2 >= p or l1 + r1 + r2 >= p,
        S2=l1 + r1 + l2 >= p or r1 + l2 + r2 >= p,
        S3=l1 + r1 + l2 + r2 <= p,
        S1star=l1 + l2 + r2 > p or l1 + r1 + r2 > p,
        S2star=l1 + r1 + l2 > p or r1 + l2 + r2 > p,
    )


def _clauses(c: SConditions) -> list[tuple[TopologyClass, bool]]:
    return [
        (TopologyClass.FULL_INTERVAL, c.S1 and c.S2),
        (TopologyClass.CANTOR_SET, c.S3),
        (TopologyClass.L_CANTORVAL, c.S1star and not c.S2),
        (TopologyClass.R_CANTORVAL, c.S2star and not c.S1),
        (TopologyClass.M_CANTORVAL,
         not c.S1star and not c.S2star and not c.S3 and not (c.S1 and c.S2)),
    ]


def fired_clauses(P1: SCantorParams, P2: SCantorParams) -> list[TopologyClass]:
    return [cls for cls, hit in _clauses(conditions(P1, P2)) if hit]


def classify(P1: SCantorParams, P2: SCantorParams) -> TopologyClass:
    """Topological type of ``C(l1, r1, p) - C(l2, r2, p)``.

    Exactly one of the five clauses is supposed to fire; anything else is a
    bug and raises ``AssertionError``.
    """
    fired = fired_clauses(P1, P2)
    if len(fired) != 1:
        raise AssertionError(f"{P1} - {P2}: clauses fired {fired}, expected exactly one")
    return fired[0]


def classify_self(P: SCantorParams) -> TopologyClass:
    """``C(l, r, p) - C(l, r, p)``: only the interval, a Cantor set or an M-Cantorval."""
    l, r, p = P.l, P.r, P.p
    if 2 * l + r >= p or l + 2 * r >= p:
        return TopologyClass.FULL_INTERVAL
    if 2 * l + 2 * r <= p:
        return TopologyClass.CANTOR_SET
    return TopologyClass.M_CANTORVAL


def classify_symmetric(l1: int, l2: int, p: int) -> TopologyClass:
    """``C(l1, l1, p) - C(l2, l2, p)`` for symmetric S-Cantor sets."""
    if p <= 2 or not (2 * l1 < p and 2 * l2 < p) or l1 < 1 or l2 < 1:
        raise ValueError(f"need p > 2, 1 <= l and 2l < p; got l1={l1}, l2={l2}, p={p}")
    if 2 * l1 + l2 >= p or l1 + 2 * l2 >= p:
        return TopologyClass.FULL_INTERVAL
    if 2 * l1 + 2 * l2 <= p:
        return TopologyClass.CANTOR_SET
    return TopologyClass.M_CANTORVAL


def kraft_threshold(l: int, p: int) -> TopologyClass:
    """``C(l, l, p) - C(l, l, p)`` decided by where ``l/p`` sits against 1/4 and 1/3."""
    if p <= 2 or l < 1 or not 2 * l < p:
        raise ValueError(f"need p > 2, l >= 1, 2l < p; got l={l}, p={p}")
    ratio = Fraction(l, p)
    if ratio >= Fraction(1, 3):
        return TopologyClass.FULL_INTERVAL
    if ratio <= Fraction(1, 4):
        return TopologyClass.CANTOR_SET
    return TopologyClass.M_CANTORVAL


def lr_sets(P1: SCantorParams, P2: SCantorParams) -> tuple[range, range]:
    """Digit ranges ``L`` (negative side) and ``R`` missing from ``A - B``.

    ``A - B = <-p+1, p-1> \\ (L u R)``.
    """
    p = _same_p(P1, P2)
    l1, r1, l2, r2 = P1.l, P1.r, P2.l, P2.r
    L = int_range(l1 + r2 - p, min(-l2, -r1))
    R = int_range(max(l1, r2), p - r1 - l2)
    return L, R


def valid_params(p: int) -> Iterator[SCantorParams]:
    for l in range(1, p):
        for r in range(1, p - l):
            yield SCantorParams(l, r, p)


def valid_pairs(p_max: int, p_min: int = 3) -> Iterator[tuple[SCantorParams, SCantorParams]]:
    """All ``(P1, P2)`` with a common base, lexicographic in ``(p, l1, r1, l2, r2)``."""
    for p in range(p_min, p_max + 1):
        params = list(valid_params(p))
        for P1 in params:
            for P2 in params:
                yield P1, P2
