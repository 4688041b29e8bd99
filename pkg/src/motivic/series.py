"""Rational power series in T with coefficients in the localized ring.

A series is num(T) / prod (1 - L^a T^b); this is the natural home of the
arc-space Poincare series and of its coefficient limits.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple

from .errors import NoLimit
from .grring import LaurentPoly, MotClass
from .parsing import format_motclass


class RationalMotSeries:
    """num: polynomial in T with MotClass coefficients; den: factors (1 - L^a T^b)."""

    __slots__ = ("num", "den")

    def __init__(self, num: Mapping[int, MotClass], den: Sequence[Tuple[int, int]] = ()):
        self.num: Dict[int, MotClass] = {}
        for e, c in num.items():
            if e < 0:
                raise ValueError("negative T-exponent in series numerator")
            if not c.is_zero:
                self.num[int(e)] = c
        self.den: Tuple[Tuple[int, int], ...] = tuple(sorted(
            (int(a), int(b)) for a, b in den))
        for a, b in self.den:
            if b < 1:
                raise ValueError(f"denominator factor (1 - L^{a} T^{b}) needs b >= 1")

    @classmethod
    def geometric(cls, a: int, b: int = 1, coeff: MotClass = None) -> "RationalMotSeries":
        """coeff / (1 - L^a T^b)."""
        c = coeff if coeff is not None else MotClass.one()
        return cls({0: c}, [(a, b)])

    def __add__(self, other: "RationalMotSeries") -> "RationalMotSeries":
        from collections import Counter

        ca, cb = Counter(self.den), Counter(other.den)
        common = ca | cb
        num: Dict[int, MotClass] = {}

        def accumulate(src: Dict[int, MotClass], missing: Counter):
            poly = dict(src)
            for (a, b), mult in sorted(missing.items()):
                for _ in range(mult):
                    # multiply by (1 - L^a T^b)
                    nxt: Dict[int, MotClass] = {}
                    for e, c in poly.items():
                        nxt[e] = nxt.get(e, MotClass.zero()) + c
                        shifted = c.shift(a)
                        nxt[e + b] = nxt.get(e + b, MotClass.zero()) - shifted
                    poly = nxt
            for e, c in poly.items():
                num[e] = num.get(e, MotClass.zero()) + c

        accumulate(self.num, common - ca)
        accumulate(other.num, common - cb)
        return RationalMotSeries(num, tuple(common.elements()))

    def __neg__(self) -> "RationalMotSeries":
        return RationalMotSeries({e: -c for e, c in self.num.items()}, self.den)

    def __sub__(self, other: "RationalMotSeries") -> "RationalMotSeries":
        return self + (-other)

    def __repr__(self) -> str:
        parts = [f"({format_motclass(c)})*T^{e}" for e, c in sorted(self.num.items())]
        den = "".join(f"/(1 - L^{a} T^{b})" for a, b in self.den)
        return f"RationalMotSeries({' + '.join(parts) or '0'}{den})"


def expand(P: RationalMotSeries, N: int) -> List[MotClass]:
    """Coefficients a_0 .. a_N of the formal expansion of P."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    coeffs: List[MotClass] = [P.num.get(n, MotClass.zero()) for n in range(N + 1)]
    for a, b in P.den:
        # multiply by sum_{k>=0} L^{ak} T^{bk}
        out: List[MotClass] = []
        for n in range(N + 1):
            total = MotClass.zero()
            k = 0
            while b * k <= n:
                c = coeffs[n - b * k]
                if not c.is_zero:
                    total = total + c.shift(a * k)
                k += 1
            out.append(total)
        coeffs = out
    return coeffs


def limit_of_coefficients(P: RationalMotSeries, d: int) -> MotClass:
    """Limit of a_n L^{-(n+1)d} in the completed ring, in closed form.

    The dominant denominator factor must be exactly (1 - L^d T), appearing
    at most once; every other factor (a, b) must satisfy a - b*d < 0.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    dominant_seen = False
    others: List[Tuple[int, int]] = []
    for a, b in P.den:
        if (a, b) == (d, 1) and not dominant_seen:
            dominant_seen = True
            continue
        if a - b * d >= 0:
            raise NoLimit(
                f"factor (1 - L^{a} T^{b}) has a - b*d = {a - b * d} >= 0 for d = {d}")
        others.append((a, b))
    if not dominant_seen:
        return MotClass.zero()
    # evaluate L^{-d} * num(T = L^{-d}) / prod of remaining factors at T = L^{-d}
    value = MotClass.zero()
    for e, c in P.num.items():
        value = value + c.shift(-d * e)
    for a, b in others:
        # 1 - L^{a - b d} = (L^{bd - a} - 1) * L^{a - b d}; divide by it
        i = b * d - a
        value = value * MotClass(LaurentPoly.L(i), (i,))
    return value.shift(-d)


def specialize_at_q(P: RationalMotSeries, q: int, N: int) -> List[Fraction]:
    """The rational sequence a_n(L := q) for n = 0..N."""
    if q < 2:
        raise ValueError("q must be an integer >= 2")
    return [c.eval_at(q) for c in expand(P, N)]


@dataclass
class CompareReport:
    """Per-index comparison of a declared series against an enumerated table."""

    q: int
    expected: List[Fraction]
    actual: List[int]
    mismatches: List[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def lines(self) -> List[str]:
        out = []
        for n, (e, a) in enumerate(zip(self.expected, self.actual)):
            status = "ok" if e == a else "MISMATCH"
            out.append(f"n={n} expected={e} actual={a} {status}")
        out.append("PASS" if self.passed else "FAIL")
        return out


def compare_counts(P: RationalMotSeries, q: int, counts: Sequence[int]) -> CompareReport:
    """Check specialize_at_q(P, q) against an enumerated count table."""
    if not counts:
        raise ValueError("counts must be nonempty")
    expected = specialize_at_q(P, q, len(counts) - 1)
    mismatches = [n for n, (e, a) in enumerate(zip(expected, counts)) if e != a]
    return CompareReport(q=q, expected=expected, actual=list(counts), mismatches=mismatches)
