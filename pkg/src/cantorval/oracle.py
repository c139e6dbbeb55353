"""Brute-force verification of digit-set and central-Cantor verdicts.

Nothing here uses the classifiers' inequalities. The oracle works from the
definition of ``D_p`` (sums of digit expansions) through

* reachable depth-``n`` prefix sums ``k / p**n`` (a dynamic program),
* the depth-``n`` cover, the union of closed tail hulls around every prefix,
  which contains ``D_p`` (so its gaps are certified gaps of ``D_p``),
* a residual automaton that decides ``x in D_p`` for rational ``x``,
* bi-obtainability: a cell ``[k, k+1] / p**n`` whose two ends are prefixes
  lies inside ``D_p`` whenever every ``k in <0, p-1>`` has ``k`` or ``k - p``
  in ``D`` (the propagation condition).

Endpoints ``-1`` and ``1`` are never bi-obtainable, and neither is the end of a
gap. Intervals that reach such points are certified by anchoring: if
``[-1 + h/p, -1 + h]`` is inside ``D_p`` and ``-(p-1)`` is a digit, then
prepending that digit repeatedly fills ``[-1, -1 + h]``; the same segment
rescaled behind any depth-``m`` prefix ``c`` gives ``[c - p**-m, c - p**-m +
h p**-m]``. The mirror statement holds at ``1``.
"""
from __future__ import annotations

import bisect
import enum
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any

import numpy as np

from .central import (CentralCantor, CentralVerdict, CentralVerdictKind,
                      difference_at_depth, j_interval)
from .digitset import DigitSet
from .numerics import Interval, IntervalUnion, as_rational, gaps_of
from . import scantor
from .scantor import SCantorParams, TopologyClass

__all__ = [
    "PrefixSet",
    "Cover",
    "CertKind",
    "Certificate",
    "CertificateRefused",
    "MembershipUndecided",
    "Check",
    "Report",
    "prefixes",
    "cover",
    "member",
    "bi_obtainable",
    "bi_cells",
    "certify_interval",
    "certify_hull",
    "certify_gap",
    "replay",
    "crosscheck_scantor",
    "crosscheck_central",
]

_INT64_SAFE = 2**62
_BITMAP_LIMIT = 50_000_000


class CertificateRefused(ValueError):
    """The certificate argument does not apply; this is not a negative answer."""


class MembershipUndecided(RuntimeError):
    """The residual automaton outgrew ``max_states``; no answer is given."""


@dataclass(frozen=True)
class PrefixSet:
    """Integers ``k`` with ``k / p**n`` a depth-``n`` prefix sum, sorted."""

    base: int
    depth: int
    ks: tuple[int, ...]

    @property
    def members(self) -> frozenset[int]:
        return _frozen(self)

    def __contains__(self, k: int) -> bool:
        return k in self.members

    def __len__(self) -> int:
        return len(self.ks)


@lru_cache(maxsize=4096)
def _frozen(ps: PrefixSet) -> frozenset[int]:
    return frozenset(ps.ks)


@lru_cache(maxsize=1024)
def prefixes(D: DigitSet, n: int) -> PrefixSet:
    """Reachable prefixes by the recursion ``P(n+1) = p * P(n) + D``, ``P(0) = {0}``."""
    if n < 0:
        raise ValueError("depth must be >= 0")
    p = D.base
    bound = max(abs(D.min), abs(D.max)) * (p**n)
    if bound < _INT64_SAFE and (D.max - D.min) * p**n // max(p - 1, 1) < _BITMAP_LIMIT:
        ks = _prefixes_bitmap(D, n)
    else:
        cur = {0}
        for _ in range(n):
            cur = {p * k + d for k in cur for d in D.digits}
        ks = tuple(sorted(cur))
    return PrefixSet(p, n, ks)


def _prefixes_bitmap(D: DigitSet, n: int) -> tuple[int, ...]:
    p = D.base
    digits = np.asarray(D.digits, dtype=np.int64)
    cur = np.zeros(1, dtype=np.int64)
    lo = hi = 0
    for _ in range(n):
        nlo, nhi = p * lo + D.min, p * hi + D.max
        mask = np.zeros(nhi - nlo + 1, dtype=bool)
        base = p * cur - nlo
        for d in digits:
            mask[base + d] = True
        cur = np.flatnonzero(mask).astype(np.int64) + nlo
        lo, hi = nlo, nhi
    return tuple(cur.tolist())


@dataclass(frozen=True)
class Cover:
    """Depth-``n`` outer approximation of ``D_p``.

    ``parts`` holds merged integer ranges in units of ``1 / scale`` with
    ``scale = (p - 1) * p**n``; :attr:`union` gives the exact rational union.
    """

    base: int
    depth: int
    scale: int
    parts: tuple[tuple[int, int], ...]

    @property
    def union(self) -> IntervalUnion:
        return _cover_union(self)

    def is_connected(self) -> bool:
        return len(self.parts) == 1

    @property
    def n_gaps(self) -> int:
        return len(self.parts) - 1

    def gaps(self) -> list[Interval]:
        s = self.scale
        return [Interval(Fraction(a[1], s), Fraction(b[0], s)) for a, b in zip(self.parts, self.parts[1:])]

    def components(self) -> list[Interval]:
        s = self.scale
        return [Interval(Fraction(a, s), Fraction(b, s)) for a, b in self.parts]


@lru_cache(maxsize=1024)
def _cover_union(cv: Cover) -> IntervalUnion:
    return IntervalUnion(cv.components())


@lru_cache(maxsize=1024)
def cover(D: DigitSet, n: int) -> Cover:
    """Union over prefixes ``k`` of ``[k/p**n + min/((p-1) p**n), k/p**n + max/((p-1) p**n)]``."""
    p = D.base
    ks = prefixes(D, n).ks
    parts: list[list[int]] = []
    for k in ks:
        lo, hi = k * (p - 1) + D.min, k * (p - 1) + D.max
        if parts and lo <= parts[-1][1]:
            parts[-1][1] = max(parts[-1][1], hi)
        else:
            parts.append([lo, hi])
    return Cover(p, n, (p - 1) * p**n, tuple((a, b) for a, b in parts))


# --------------------------------------------------------------------------
# certificates


class CertKind(enum.Enum):
    INTERVAL_INSIDE = "IntervalInside"
    GAP_CERTIFIED = "GapCertified"
    MEMBER_YES = "MemberYes"
    MEMBER_NO = "MemberNo"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Certificate:
    kind: CertKind
    digits: DigitSet
    data: Any  # Interval for interval/gap certificates, Fraction for membership
    depth: int | None = None
    witness: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "digits": str(self.digits),
            "data": _jsonable(self.data),
            "depth": self.depth,
            "witness": _jsonable(self.witness),
        }


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Interval):
        return [str(x.lo), str(x.hi)]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, enum.Enum):
        return x.value
    return x


# --------------------------------------------------------------------------
# membership


def _expansion_value(p: int, head: tuple[int, ...], loop: tuple[int, ...]) -> Fraction:
    """Exact value of ``0.head(loop)`` in base ``p`` with signed digits."""
    v = sum((Fraction(d, p**i) for i, d in enumerate(head, 1)), Fraction(0))
    if loop:
        period = sum((Fraction(d, p**i) for i, d in enumerate(loop, 1)), Fraction(0))
        v += period / (1 - Fraction(1, p ** len(loop))) / p ** len(head)
    return v


def member(D: DigitSet, x, max_states: int = 1_000_000) -> Certificate:
    """Decide ``x in D_p`` for rational ``x``.

    States are residuals ``t_0 = x``, ``t_i = p t_{i-1} - d_i`` kept inside the
    hull ``[min/(p-1), max/(p-1)]``. Every residual has a denominator dividing
    that of ``x``, so only finitely many states exist; ``x`` is a member iff a
    cycle is reachable. A ``MemberYes`` witness is an eventually periodic digit
    expansion of ``x``; ``MemberNo`` records the size of the exhausted state
    space.
    """
    x = as_rational(x)
    p, lo_d, hi_d = D.base, D.min, D.max
    q = x.denominator
    # residual t = u / q; hull test: lo_d * q <= (p-1) u <= hi_d * q
    def inside(u):
        return lo_d * q <= (p - 1) * u <= hi_d * q

    start = x.numerator
    if not inside(start):
        return Certificate(CertKind.MEMBER_NO, D, x, witness={"states": 0, "reason": "outside hull"})

    succ: dict[int, list[tuple[int, int]]] = {}
    stack = [start]
    while stack:
        u = stack.pop()
        if u in succ:
            continue
        nxt = []
        for d in D.digits:
            v = p * u - d * q
            if inside(v):
                nxt.append((d, v))
        succ[u] = nxt
        if len(succ) > max_states:
            raise MembershipUndecided(f"more than {max_states} residual states for x={x}")
        stack.extend(v for _, v in nxt if v not in succ)

    # prune dead states until every survivor has a surviving successor
    live = set(succ)
    changed = True
    while changed:
        changed = False
        for u in list(live):
            if not any(v in live for _, v in succ[u]):
                live.discard(u)
                changed = True

    if start not in live:
        return Certificate(CertKind.MEMBER_NO, D, x, witness={"states": len(succ)})

    # walk live states until one repeats: that is the lasso
    seen: dict[int, int] = {}
    path_digits: list[int] = []
    u = start
    while u not in seen:
        seen[u] = len(path_digits)
        d, u = next((d, v) for d, v in succ[u] if v in live)
        path_digits.append(d)
    k = seen[u]
    head, loop = tuple(path_digits[:k]), tuple(path_digits[k:])
    return Certificate(CertKind.MEMBER_YES, D, x, witness={"head": head, "loop": loop, "states": len(succ)})


# --------------------------------------------------------------------------
# bi-obtainability and interval certificates


def _check_signed_digits(D: DigitSet) -> None:
    p = D.base
    D.require_bounded()
    missing = [d for d in (-p + 1, 0, p - 1) if d not in D]
    if missing:
        raise CertificateRefused(f"{D} lacks required digits {missing}")


def propagation_holds(D: DigitSet) -> bool:
    """Every ``k in <0, p-1>`` has ``k`` or ``k - p`` among the digits."""
    p = D.base
    return all(k in D or (k - p) in D for k in range(p))


def bi_obtainable(D: DigitSet, x, n: int) -> bool:
    """Whether some cell ``[k, k+1] / p**n`` containing ``x`` has both ends as prefixes."""
    _check_signed_digits(D)
    x = Fraction(x)
    if not -1 <= x <= 1:
        raise ValueError(f"x={x} outside [-1, 1]")
    ps = prefixes(D, n)
    scaled = x * D.base**n
    k = scaled.numerator // scaled.denominator
    candidates = (k - 1, k) if scaled.denominator == 1 else (k,)
    return any(c in ps and c + 1 in ps for c in candidates)


@lru_cache(maxsize=1024)
def _bi_runs(D: DigitSet, n: int) -> tuple[tuple[int, int], ...]:
    """Merged runs ``[k, k']`` (units of ``p**-n``) of consecutive prefixes."""
    runs: list[list[int]] = []
    for k in prefixes(D, n).ks:
        if runs and k == runs[-1][1] + 1:
            runs[-1][1] = k
        else:
            runs.append([k, k])
    return tuple((a, b) for a, b in runs if b > a)


def bi_cells(D: DigitSet, n: int) -> IntervalUnion:
    """Union of all depth-``n`` bi-obtainable cells."""
    s = D.base**n
    return IntervalUnion(Interval(Fraction(a, s), Fraction(b, s)) for a, b in _bi_runs(D, n))


def _anchor_reach(D: DigitSet, n: int) -> tuple[Fraction | None, Fraction | None]:
    """Largest ``beta`` with ``[-1, beta]`` certified and smallest ``alpha`` with ``[alpha, 1]``."""
    p = D.base
    beta = alpha = None
    for comp in bi_cells(D, n):
        if comp.lo <= -1 + (comp.hi + 1) / p:
            beta = comp.hi if beta is None else max(beta, comp.hi)
        if comp.hi >= 1 - (1 - comp.lo) / p:
            alpha = comp.lo if alpha is None else min(alpha, comp.lo)
    return beta, alpha


def _anchor_depth(D: DigitSet, e: Fraction, shift: int, n: int) -> int | None:
    """Smallest ``m <= n`` with ``e = (K + shift) / p**m`` for a depth-``m`` prefix ``K``."""
    p = D.base
    for m in range(n + 1):
        scaled = e * p**m
        if scaled.denominator == 1 and (scaled.numerator - shift) in prefixes(D, m):
            return m
    return None


def certify_interval(D: DigitSet, I: Interval, n: int) -> Certificate | None:
    """Certificate that ``I`` lies inside ``D_p``, or ``None`` if depth ``n`` is not enough.

    Raises :class:`CertificateRefused` when the digits lack ``-p+1, 0, p-1``
    or the propagation condition fails; that is not evidence against ``I``.
    """
    _check_signed_digits(D)
    if not propagation_holds(D):
        raise CertificateRefused(f"{D}: some k in <0, p-1> has neither k nor k-p as a digit")
    if not (-1 <= I.lo and I.hi <= 1):
        return None
    p = D.base
    pieces = list(bi_cells(D, n))
    beta, alpha = _anchor_reach(D, n)
    anchors = {}
    if beta is not None:
        m = _anchor_depth(D, I.lo, -1, n)
        if m is not None:
            seg = Interval(I.lo, I.lo + (beta + 1) / p**m)
            pieces.append(seg)
            anchors["left"] = {"depth": m, "segment": seg}
    if alpha is not None:
        m = _anchor_depth(D, I.hi, 1, n)
        if m is not None:
            seg = Interval(I.hi - (1 - alpha) / p**m, I.hi)
            pieces.append(seg)
            anchors["right"] = {"depth": m, "segment": seg}
    if not IntervalUnion(pieces).covers(I):
        return None
    s = p**n
    lo_k = (I.lo * s).__floor__()
    hi_k = (I.hi * s).__ceil__()
    used = [k for k in prefixes(D, n).ks if lo_k <= k <= hi_k]
    return Certificate(CertKind.INTERVAL_INSIDE, D, I, depth=n,
                       witness={"route": "bi-obtainable", "prefixes": used, "anchors": anchors})


def certify_hull(D: DigitSet) -> Certificate | None:
    """Certificate that ``D_p`` equals its hull.

    The first-level images of the hull cover the hull exactly when the depth-1
    cover is connected; the hull is then invariant under the digit maps and is
    therefore the attractor ``D_p`` itself.
    """
    if not cover(D, 1).is_connected():
        return None
    return Certificate(CertKind.INTERVAL_INSIDE, D, D.hull, depth=1,
                       witness={"route": "self-cover", "prefixes": list(prefixes(D, 1).ks)})


def certify_gap(D: DigitSet, n: int) -> list[Certificate]:
    """Open gaps of the depth-``n`` cover; each one misses ``D_p`` entirely."""
    cv = cover(D, n)
    return [Certificate(CertKind.GAP_CERTIFIED, D, g, depth=n) for g in cv.gaps()]


def replay(cert: Certificate) -> bool:
    """Re-check a certificate by direct enumeration of digit strings.

    Independent of the prefix dynamic program; meant for small depths.
    """
    D, p = cert.digits, cert.digits.base
    if cert.kind is CertKind.MEMBER_YES:
        w = cert.witness
        return _expansion_value(p, tuple(w["head"]), tuple(w["loop"])) == cert.data and \
            all(d in D for d in tuple(w["head"]) + tuple(w["loop"]))

    def brute_prefixes(n):
        return {sum(d * p ** (n - i) for i, d in enumerate(ds, 1))
                for ds in itertools.product(D.digits, repeat=n)}

    if cert.kind is CertKind.GAP_CERTIFIED:
        n, g = cert.depth, cert.data
        scale = Fraction(1, (p - 1) * p**n)
        for k in brute_prefixes(n):
            lo = (k * (p - 1) + D.min) * scale
            hi = (k * (p - 1) + D.max) * scale
            if lo < g.hi and g.lo < hi:
                return False
        return True
    if cert.kind is CertKind.INTERVAL_INSIDE:
        n, I = cert.depth, cert.data
        if cert.witness.get("route") == "self-cover":
            parts = IntervalUnion(Interval((Fraction(d) + D.hull.lo) / p, (Fraction(d) + D.hull.hi) / p)
                                  for d in D.digits)
            return parts == IntervalUnion([D.hull]) and I == D.hull
        ks = brute_prefixes(n)
        s = p**n
        pieces = [Interval(Fraction(k, s), Fraction(k + 1, s)) for k in ks if k + 1 in ks]
        for side, info in cert.witness.get("anchors", {}).items():
            pieces.append(info["segment"])
        # anchored segments are re-derived from their defining facts
        for side, info in cert.witness.get("anchors", {}).items():
            m, seg = info["depth"], info["segment"]
            h = seg.length * p**m
            if side == "left":
                core = Interval(-1 + h / p, -1 + h)
                anchor_k = (seg.lo * p**m) + 1
                sign_digit = -p + 1
            else:
                core = Interval(1 - h, 1 - h / p)
                anchor_k = (seg.hi * p**m) - 1
                sign_digit = p - 1
            if sign_digit not in D or not IntervalUnion(pieces[:len(pieces) - len(cert.witness["anchors"])]).covers(core):
                return False
            if anchor_k.denominator != 1 or int(anchor_k) not in brute_prefixes(m):
                return False
        return IntervalUnion(pieces).covers(I)
    if cert.kind is CertKind.MEMBER_NO:
        return not _has_infinite_path(D, cert.data)
    return False


def _has_infinite_path(D: DigitSet, x: Fraction) -> bool:
    """Rational-valued residual search with Kahn's algorithm for cycle detection."""
    p, hull = D.base, D.hull
    if x not in hull:
        return False
    succ: dict[Fraction, list[Fraction]] = {}
    todo = [x]
    while todo:
        t = todo.pop()
        if t in succ:
            continue
        succ[t] = [p * t - d for d in D.digits if p * t - d in hull]
        todo.extend(succ[t])
    indeg = {t: 0 for t in succ}
    for vs in succ.values():
        for v in vs:
            indeg[v] += 1
    queue = [t for t, k in indeg.items() if k == 0]
    removed = 0
    while queue:
        t = queue.pop()
        removed += 1
        for v in succ[t]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    # every state was reached from x, so a leftover cycle is reachable from x
    return removed < len(succ)


# --------------------------------------------------------------------------
# crosscheck harnesses


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    certificate: Certificate | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "ok": self.ok, "detail": self.detail}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


@dataclass
class Report:
    subject: str
    verdict: str
    depth: int
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "", certificate: Certificate | None = None) -> None:
        self.checks.append(Check(name, bool(ok), detail, certificate))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "verdict": self.verdict,
            "depth": self.depth,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _try_certify(D: DigitSet, I: Interval, n: int) -> Certificate | None:
    try:
        return certify_interval(D, I, n)
    except CertificateRefused:
        return None


def _count_inside(gaps: list[Interval], lo: Fraction, hi: Fraction) -> int:
    """Number of gaps (sorted, disjoint) lying inside ``[lo, hi]``."""
    i = bisect.bisect_left([g.lo for g in gaps], lo)
    j = bisect.bisect_right([g.hi for g in gaps], hi)
    return max(0, j - i)


ACCUMULATION_LOOKAHEAD = 2


def _side_checks(report: Report, D: DigitSet, n: int, adjacent: str | None, accumulating: tuple[str, ...]) -> None:
    """Gap-by-gap signatures at depth ``n``.

    ``adjacent`` names the side ("left"/"right") where every gap must have a
    certified adjacent interval. Each side in ``accumulating`` must gain gaps
    inside the width-``p**-n`` window next to the gap within
    ``ACCUMULATION_LOOKAHEAD`` further levels, and must never admit an
    interval certificate.
    """
    p = D.base
    w = Fraction(1, p**n)
    gaps = cover(D, n).gaps()
    later = [cover(D, n + k).gaps() for k in range(1, ACCUMULATION_LOOKAHEAD + 1)]
    report.add("gaps present", bool(gaps), f"{len(gaps)} gaps at depth {n}")
    for g in gaps:
        windows = {"left": Interval(max(g.lo - w, Fraction(-1)), g.lo),
                   "right": Interval(g.hi, min(g.hi + w, Fraction(1)))}
        if adjacent is not None:
            cert = _try_certify(D, windows[adjacent], n)
            report.add(f"adjacent interval on the {adjacent} of gap {g}", cert is not None,
                       f"window {windows[adjacent]}", cert)
        for side in accumulating:
            win = windows[side]
            counts = [_count_inside(gs, win.lo, win.hi) for gs in [gaps] + later]
            report.add(f"gaps accumulate on the {side} of gap {g}", max(counts[1:]) > counts[0],
                       f"gaps in {win} at depths {n}..{n + len(later)}: {counts}")
            cert = _try_certify(D, win, n)
            report.add(f"no interval certificate on the {side} of gap {g}", cert is None,
                       "" if cert is None else "a certified interval touches an accumulating side", cert)


def _cell_certificates(D: DigitSet, n: int) -> list[Certificate]:
    """Certificates for the maximal runs of bi-obtainable cells at depth ``n``."""
    s = D.base**n
    out = []
    for a, b in _bi_runs(D, n):
        cert = _try_certify(D, Interval(Fraction(a, s), Fraction(b, s)), n)
        if cert is not None:
            out.append(cert)
    return out


def crosscheck_scantor(P1: SCantorParams, P2: SCantorParams, depth: int = 3,
                       verdict: TopologyClass | None = None) -> Report:
    """Run the verdict-specific oracle checks for ``C(P1) - C(P2)``."""
    if depth < 2:
        raise ValueError("crosscheck needs depth >= 2")
    verdict = scantor.classify(P1, P2) if verdict is None else verdict
    D = scantor.difference_digits(P1, P2)
    report = Report(f"{P1} - {P2} = {D}", verdict.value, depth)
    covers = [cover(D, i) for i in range(depth + 1)]
    all_connected = all(cv.is_connected() for cv in covers)
    T = TopologyClass

    if verdict is T.FULL_INTERVAL:
        report.add("cover is [-1, 1] at every depth", all_connected and covers[0].union == IntervalUnion.from_pairs([(-1, 1)]),
                   ", ".join(str(cv.n_gaps) for cv in covers) + " gaps by depth")
        cert = certify_hull(D)
        report.add("hull self-cover certificate", cert is not None and cert.data == Interval(-1, 1), "", cert)
        return report

    report.add("cover splits by the requested depth", not all_connected,
               f"gaps per depth: {[cv.n_gaps for cv in covers]}")

    if verdict is T.CANTOR_SET:
        report.add("certified gaps at every depth >= 1", all(cv.n_gaps > 0 for cv in covers[1:]),
                   f"gaps per depth: {[cv.n_gaps for cv in covers]}")
        cv = covers[depth]
        wide = [c for c in cv.components() if c.length >= Fraction(2, D.base**depth)]
        hits = [c for c in wide if _try_certify(D, c, depth) is not None]
        report.add("no cover component is certified as an interval", not hits,
                   f"{len(wide)} wide components checked")
        cells = _cell_certificates(D, depth)
        report.add("no bi-obtainable cell is certified", not cells,
                   "" if not cells else f"certified {cells[0].data}", cells[0] if cells else None)
        # nowhere density: every depth-n component is split two levels down
        finer = cover(D, depth + 2)
        finer_gaps = finer.gaps()
        unsplit = [c for c in cv.components() if _count_inside(finer_gaps, c.lo, c.hi) == 0]
        report.add("every component splits two levels down", not unsplit,
                   f"unsplit: {[str(c) for c in unsplit[:3]]}")
        return report

    cells = _cell_certificates(D, depth)
    report.add("some interval is certified inside", bool(cells),
               f"{len(cells)} certified cells at depth {depth}", cells[0] if cells else None)
    if verdict is T.L_CANTORVAL:
        _side_checks(report, D, depth, adjacent="right", accumulating=("left",))
    elif verdict is T.R_CANTORVAL:
        _side_checks(report, D, depth, adjacent="left", accumulating=("right",))
    else:
        _side_checks(report, D, depth, adjacent=None, accumulating=("left", "right"))
    return report


def crosscheck_central(a: CentralCantor, b: CentralCantor, verdict: CentralVerdict, depth: int = 6) -> Report:
    """Compare a central verdict with the explicit depth-``n`` differences."""
    K = CentralVerdictKind
    report = Report(f"C({a.seq}) - C({b.seq})", verdict.kind.value, depth)
    full = IntervalUnion.from_pairs([(-1, 1)])
    limit = min(a.seq.length, b.seq.length)
    top = int(min(depth, limit))

    if verdict.kind is K.FULL_INTERVAL:
        for n in range(top + 1):
            report.add(f"depth {n} difference is [-1, 1]", difference_at_depth(a, b, n) == full)
    elif verdict.kind is K.FINITE_UNION:
        n0 = verdict.stabilization_depth
        if verdict.witness is None:
            report.add("witness available", False, f"n0={n0} too deep to build")
        for n in range(n0, top + 1):
            report.add(f"depth {n} difference equals the depth-{n0} witness",
                       difference_at_depth(a, b, n) == verdict.witness)
    elif verdict.kind in (K.NOT_FULL_INTERVAL, K.NOT_FINITE_UNION):
        m = verdict.failing_index
        if m + 1 > top:
            report.add(f"hole predicted at depth {m + 1}", True, f"beyond checked depth {top}; skipped")
        else:
            # with (*) failing at m, nothing of depth m+1 meets the open
            # stretch between J_{0^(m+1)} and its two right neighbours
            zeros = (0,) * m
            left = j_interval(a, b, zeros + (0,)).hi
            right = min(j_interval(a, b, zeros + (1,)).lo, j_interval(a, b, zeros + (2,)).lo)
            diff = difference_at_depth(a, b, m + 1)
            ok = left < right and any(g.lo <= left and right <= g.hi for g in gaps_of(diff))
            report.add(f"hole ({left}, {right}) at depth {m + 1}", ok)
            report.add(f"depth {m + 1} difference is not [-1, 1]", diff != full)
    return report
