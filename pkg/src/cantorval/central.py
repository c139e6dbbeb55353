"""Central Cantor sets ``C(a)`` and certified classification of ``C(a) - C(b)``.

A central Cantor set is generated by a ratio sequence ``a`` in ``(0, 1)``: at
step ``n`` every surviving interval loses a concentric open middle piece of
relative length ``a_n``. Two surviving children of length ``d_n`` remain, with
``d_n = prod_{i<=n} (1 - a_i) / 2``.

The difference ``C_n(a) - C_n(b)`` is the union of the ``4**n`` intervals
``J_s`` indexed by signatures ``s`` over ``{0, 1, 2, 3}``; every ``J_s`` has
length ``d_n + g_n`` (``g`` is the product sequence of ``b``), and the children
of ``J_s`` are obtained from its left endpoint by four fixed offsets.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Sequence

from .numerics import Interval, IntervalUnion, RationalLike, as_rational, parse_rational

__all__ = [
    "SequenceSpec",
    "CentralCantor",
    "CentralVerdictKind",
    "CentralVerdict",
    "ConditionRow",
    "signature_from_pair",
    "approximation",
    "j_interval",
    "difference_at_depth",
    "thickness",
    "newhouse_test",
    "condition_star",
    "condition_star_star",
    "condition_table",
    "classify",
    "DEFAULT_DEPTH_BUDGET",
]

DEFAULT_DEPTH_BUDGET = 64
# 4**n signatures; beyond this the stabilized union is reported without a witness
WITNESS_MAX_DEPTH = 12


class DepthError(ValueError):
    """Raised when a finite sequence is asked for a term it does not have."""


@dataclass(frozen=True)
class SequenceSpec:
    """Eventually periodic sequence ``prefix + cycle + cycle + ...`` (1-indexed).

    With an empty ``cycle`` the sequence is finite and only ``term(n)`` for
    ``n <= len(prefix)`` exists.
    """

    prefix: tuple[Fraction, ...] = ()
    cycle: tuple[Fraction, ...] = ()

    def __post_init__(self):
        prefix = tuple(as_rational(x) for x in self.prefix)
        cycle = tuple(as_rational(x) for x in self.cycle)
        if not prefix and not cycle:
            raise ValueError("sequence needs at least one term")
        for x in prefix + cycle:
            if not 0 < x < 1:
                raise ValueError(f"term {x} is not in (0, 1)")
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "cycle", cycle)

    @classmethod
    def periodic(cls, *cycle: RationalLike) -> "SequenceSpec":
        return cls((), tuple(cycle))

    @classmethod
    def finite(cls, *terms: RationalLike) -> "SequenceSpec":
        return cls(tuple(terms), ())

    @classmethod
    def parse(cls, text: str) -> "SequenceSpec":
        """Parse ``"prefix;cycle"``, e.g. ``"1/2,1/4;"`` or ``";1/3"``."""
        if text.count(";") != 1:
            raise ValueError(f"expected 'prefix;cycle', got {text!r}")
        head, tail = text.split(";")

        def items(part):
            part = part.strip()
            return tuple(parse_rational(t) for t in part.split(",")) if part else ()

        return cls(items(head), items(tail))

    def __str__(self) -> str:
        return ",".join(map(str, self.prefix)) + ";" + ",".join(map(str, self.cycle))

    @property
    def is_finite(self) -> bool:
        return not self.cycle

    @property
    def length(self) -> float:
        """Number of defined terms (``math.inf`` for periodic specs)."""
        return len(self.prefix) if self.is_finite else math.inf

    def term(self, n: int) -> Fraction:
        if n < 1:
            raise IndexError("terms are 1-indexed")
        if n <= len(self.prefix):
            return self.prefix[n - 1]
        if not self.cycle:
            raise DepthError(f"finite sequence has no term {n}")
        return self.cycle[(n - len(self.prefix) - 1) % len(self.cycle)]

    def distinct_terms(self) -> tuple[Fraction, ...]:
        return self.prefix + self.cycle


@dataclass(frozen=True)
class CentralCantor:
    seq: SequenceSpec
    _d: list = field(default_factory=lambda: [Fraction(1)], init=False, repr=False, compare=False)

    @classmethod
    def periodic(cls, *cycle: RationalLike) -> "CentralCantor":
        return cls(SequenceSpec.periodic(*cycle))

    @classmethod
    def finite(cls, *terms: RationalLike) -> "CentralCantor":
        return cls(SequenceSpec.finite(*terms))

    @classmethod
    def parse(cls, text: str) -> "CentralCantor":
        return cls(SequenceSpec.parse(text))

    def term(self, n: int) -> Fraction:
        return self.seq.term(n)

    def d(self, n: int) -> Fraction:
        """Length of each depth-``n`` interval, cached."""
        cache = self._d
        while len(cache) <= n:
            k = len(cache)
            cache.append(cache[-1] * (1 - self.term(k)) / 2)
        return cache[n]

    def defined_up_to(self, n: int) -> bool:
        return n <= self.seq.length


def _left_endpoints(c: CentralCantor, n: int) -> list[Fraction]:
    lefts = [Fraction(0)]
    for k in range(n):
        shift = c.d(k) - c.d(k + 1)
        lefts = [x for l in lefts for x in (l, l + shift)]
    return lefts


def approximation(c: CentralCantor, n: int) -> IntervalUnion:
    """``C_n(a)``: the ``2**n`` intervals of length ``d_n`` left after ``n`` steps."""
    if n < 0:
        raise ValueError("depth must be >= 0")
    dn = c.d(n)
    return IntervalUnion(Interval(l, l + dn) for l in _left_endpoints(c, n))


def signature_from_pair(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Encode the address pair ``(p, q)`` of ``I_p^a - I_q^b`` as ``s_i = 2 p_i - q_i + 1``."""
    if len(p) != len(q):
        raise ValueError("address lengths differ")
    return tuple(2 * pi - qi + 1 for pi, qi in zip(p, q))


@lru_cache(maxsize=4096)
def _child_offsets(a: CentralCantor, b: CentralCantor, n: int) -> tuple[Fraction, ...]:
    """Left-endpoint shifts of ``J_{s^0..3}`` relative to ``l(J_s)`` for ``|s| = n``."""
    dn, dn1, gn, gn1 = a.d(n), a.d(n + 1), b.d(n), b.d(n + 1)
    return (
        Fraction(0),
        gn - gn1,
        dn - dn1,
        dn + gn - dn1 - gn1,
    )


def j_interval(a: CentralCantor, b: CentralCantor, s: Sequence[int]) -> Interval:
    """The difference interval ``J_s``, built by descending the four-way recursion."""
    left = Fraction(-1)
    for n, digit in enumerate(s):
        if digit not in (0, 1, 2, 3):
            raise ValueError(f"signature digit {digit} not in 0..3")
        left += _child_offsets(a, b, n)[digit]
    n = len(s)
    return Interval(left, left + a.d(n) + b.d(n))


def difference_at_depth(a: CentralCantor, b: CentralCantor, n: int) -> IntervalUnion:
    """``C_n(a) - C_n(b)`` as the union of all ``J_s`` with ``|s| = n``.

    A ``J_s`` is determined by its left endpoint (the length depends on ``n``
    only), so coinciding endpoints are collapsed level by level.
    """
    if n < 0:
        raise ValueError("depth must be >= 0")
    lefts = {Fraction(-1)}
    for k in range(n):
        offs = _child_offsets(a, b, k)
        lefts = {l + o for l in lefts for o in offs}
    width = a.d(n) + b.d(n)
    return IntervalUnion(Interval(l, l + width) for l in lefts)


def thickness(c: CentralCantor) -> Fraction:
    """Newhouse thickness ``inf_n (1 - a_n) / (2 a_n)``.

    For eventually periodic (or finite) sequences the infimum is a minimum over
    the distinct stored terms.
    """
    return min((1 - x) / (2 * x) for x in c.seq.distinct_terms())


def newhouse_test(a: CentralCantor, b: CentralCantor) -> bool:
    # sufficient only: False says nothing about C(a) - C(b)
    return thickness(a) * thickness(b) >= 1


def condition_star(a: CentralCantor, b: CentralCantor, n: int) -> bool:
    """``g_{n+1} / d_n >= a_{n+1}  or  d_{n+1} / g_n >= b_{n+1}``."""
    an1, bn1 = a.term(n + 1), b.term(n + 1)
    return (
        b.d(n + 1) >= an1 * a.d(n)
        or a.d(n + 1) >= bn1 * b.d(n)
    )


def condition_star_star(a: CentralCantor, b: CentralCantor, n: int) -> bool:
    """``d_n / g_n >= b_{n+1}  and  g_n / d_n >= a_{n+1}``."""
    an1, bn1 = a.term(n + 1), b.term(n + 1)
    return a.d(n) >= bn1 * b.d(n) and b.d(n) >= an1 * a.d(n)


# The two conditions at index n only depend on rho_n = d_n / g_n and on the
# term pair (a_{n+1}, b_{n+1}); the decision procedure works on rho directly.
def _star_rho(rho: Fraction, an1: Fraction, bn1: Fraction) -> bool:
    return (1 - bn1) >= 2 * an1 * rho or rho * (1 - an1) >= 2 * bn1


def _star_star_rho(rho: Fraction, an1: Fraction, bn1: Fraction) -> bool:
    return rho >= bn1 and an1 * rho <= 1


class CentralVerdictKind(enum.Enum):
    FULL_INTERVAL = "FullInterval"
    FINITE_UNION = "FiniteUnionOfIntervals"
    NOT_FULL_INTERVAL = "NotFullInterval"
    NOT_FINITE_UNION = "NotFiniteUnion"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CentralVerdict:
    """Outcome of :func:`classify`.

    ``kind`` is the strongest certified statement. ``NOT_FINITE_UNION`` also
    implies ``NotFullInterval``; ``failing_index`` is then the first ``n`` at
    which the star condition fails. ``stabilization_depth`` is the depth
    ``n0`` from which the finite approximations no longer change, and
    ``witness`` is the stabilized union for the positive kinds.
    """

    kind: CentralVerdictKind
    stabilization_depth: int | None = None
    witness: IntervalUnion | None = None
    failing_index: int | None = None
    reason: str = ""

    @property
    def facts(self) -> tuple[str, ...]:
        k = CentralVerdictKind
        if self.kind is k.NOT_FINITE_UNION:
            return (k.NOT_FULL_INTERVAL.value, k.NOT_FINITE_UNION.value)
        return (self.kind.value,)


@dataclass(frozen=True)
class ConditionRow:
    n: int
    a_next: Fraction
    b_next: Fraction
    ratio: Fraction  # d_n / g_n
    star: bool
    star_star: bool


def _prefix_span(a: CentralCantor, b: CentralCantor) -> int:
    return max(len(a.seq.prefix), len(b.seq.prefix))


def _aligned_period(a: CentralCantor, b: CentralCantor) -> int:
    return math.lcm(len(a.seq.cycle), len(b.seq.cycle))


def condition_table(a: CentralCantor, b: CentralCantor, upto: int | None = None) -> list[ConditionRow]:
    """(*) and (**) for ``n = 0 .. upto - 1``.

    By default covers the prefix plus one aligned period (or every defined
    index of a finite sequence).
    """
    limit = min(a.seq.length, b.seq.length)
    if upto is None:
        if math.isinf(limit):
            upto = _prefix_span(a, b) + _aligned_period(a, b)
        else:
            upto = int(limit)
    upto = int(min(upto, limit))
    rows = []
    for n in range(upto):
        rho = a.d(n) / b.d(n)
        an1, bn1 = a.term(n + 1), b.term(n + 1)
        rows.append(ConditionRow(n, an1, bn1, rho, _star_rho(rho, an1, bn1), _star_star_rho(rho, an1, bn1)))
    return rows


def _first_star_failure_in_class(rho, c, an1, bn1, budget):
    """Smallest ``j`` with (*) failing at ``rho * c**j``, ``None`` if never.

    Returns ``"budget"`` when the answer needs more than ``budget`` periods.
    (*) fails exactly on the open window ``alpha < rho < beta``; ``rho * c**j``
    is strictly monotone, so at most one entry into the window matters.
    """
    alpha = (1 - bn1) / (2 * an1)
    beta = 2 * bn1 / (1 - an1)
    if alpha >= beta:
        return None
    x = rho
    for j in range(budget + 1):
        if c > 1:
            if x > alpha:
                return j if x < beta else None
        else:
            if x < beta:
                return j if x > alpha else None
        x *= c
    return "budget"


def classify(a: CentralCantor, b: CentralCantor, depth_budget: int = DEFAULT_DEPTH_BUDGET) -> CentralVerdict:
    """Certified (partial) classification of ``C(a) - C(b)``.

    Decision rules, in order:

    * (*) and (**) at every ``n``  -> ``FULL_INTERVAL``
    * both from some ``n0`` on      -> ``FINITE_UNION`` with witness ``C_{n0}(a) - C_{n0}(b)``
    * (*) fails infinitely often     -> ``NOT_FINITE_UNION``
    * (*) fails somewhere            -> ``NOT_FULL_INTERVAL``
    * otherwise                      -> ``INCONCLUSIVE``

    For periodic sequences "every n" is decided exactly: after the longer
    prefix ``P`` the ratio ``rho_n = d_n / g_n`` gets multiplied by a constant
    ``c`` every aligned period ``L``, and each condition at index ``n`` is a
    rational inequality in ``rho_n`` and the (periodic) next term pair.
    ``depth_budget`` caps, in periods, the search for the single possible
    failure of (*) along a residue class when ``c != 1``.
    """
    K = CentralVerdictKind
    limit = min(a.seq.length, b.seq.length)

    if not math.isinf(limit):
        rows = condition_table(a, b)
        for row in rows:
            if not row.star:
                return CentralVerdict(K.NOT_FULL_INTERVAL, failing_index=row.n,
                                      reason=f"(*) fails at n={row.n}")
        return CentralVerdict(K.INCONCLUSIVE, reason=f"finite sequences: (*) holds for n < {int(limit)}, "
                                                      "nothing is known beyond")

    P = _prefix_span(a, b)
    L = _aligned_period(a, b)
    rows = condition_table(a, b, P + L)
    prefix_rows, class_rows = rows[:P], rows[P:]

    c = Fraction(1)
    for i in range(P + 1, P + L + 1):
        c *= (1 - a.term(i)) / (1 - b.term(i))

    star_prefix_fail = [r.n for r in prefix_rows if not r.star]
    both_prefix_fail = [r.n for r in prefix_rows if not (r.star and r.star_star)]

    if c == 1:
        star_class_fail = [r.n for r in class_rows if not r.star]
        both_class_ok = all(r.star and r.star_star for r in class_rows)
        if both_class_ok:
            n0 = both_prefix_fail[-1] + 1 if both_prefix_fail else 0
            witness = difference_at_depth(a, b, n0) if n0 <= WITNESS_MAX_DEPTH else None
            if n0 == 0:
                return CentralVerdict(K.FULL_INTERVAL, stabilization_depth=0, witness=witness,
                                      reason="(*) and (**) hold for every n")
            first_fail = star_prefix_fail[0] if star_prefix_fail else None
            return CentralVerdict(K.FINITE_UNION, stabilization_depth=n0, witness=witness,
                                  failing_index=first_fail,
                                  reason=f"(*) and (**) hold for every n >= {n0}")
        if star_class_fail:
            first = min(star_prefix_fail + star_class_fail)
            return CentralVerdict(K.NOT_FINITE_UNION, failing_index=first,
                                  reason=f"(*) fails at n = {star_class_fail[0]} + {L}k for all k >= 0")
        if star_prefix_fail:
            return CentralVerdict(K.NOT_FULL_INTERVAL, failing_index=star_prefix_fail[0],
                                  reason=f"(*) fails at n={star_prefix_fail[0]}; (**) fails infinitely often")
        return CentralVerdict(K.INCONCLUSIVE, reason="(*) holds for every n but (**) fails infinitely often")

    # c != 1: rho drifts geometrically, so (**) fails infinitely often and (*)
    # fails at most once per residue class.
    failures = list(star_prefix_fail)
    exhausted = False
    for r in class_rows:
        j = _first_star_failure_in_class(r.ratio, c, r.a_next, r.b_next, depth_budget)
        if j == "budget":
            exhausted = True
        elif j is not None:
            failures.append(r.n + j * L)
    if failures:
        first = min(failures)
        return CentralVerdict(K.NOT_FULL_INTERVAL, failing_index=first, reason=f"(*) fails at n={first}")
    if exhausted:
        return CentralVerdict(K.INCONCLUSIVE,
                              reason=f"depth budget of {depth_budget} periods exhausted before (*) settled")
    return CentralVerdict(K.INCONCLUSIVE, reason="(*) holds for every n but (**) fails infinitely often "
                                                 f"(period ratio {c} != 1)")


def all_signatures(n: int) -> Iterable[tuple[int, ...]]:
    """Signatures of length ``n`` in lexicographic order."""
    return itertools.product(range(4), repeat=n)
