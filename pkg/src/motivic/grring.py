"""Exact arithmetic in the localized Grothendieck ring of varieties.

Classes here live in Z[L, L^-1] localized at the multiplicative set
generated by (L^i - 1), i >= 1.  L is the class of the affine line.
Everything is exact integer/rational arithmetic; no floats.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .errors import ChiUndefined


class LaurentPoly:
    """Laurent polynomial in L with arbitrary-precision integer coefficients.

    Stored as a map exponent -> coefficient with no zero coefficients.
    Instances are immutable by convention.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        cleaned: Dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    cleaned[int(e)] = int(c)
        self.terms = cleaned

    # -- constructors ------------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def L(cls, power: int = 1, coeff: int = 1) -> "LaurentPoly":
        return cls({power: coeff})

    @classmethod
    def binom(cls, i: int) -> "LaurentPoly":
        """The factor L^i - 1."""
        return cls({i: 1, 0: -1})

    # -- queries -----------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of zero polynomial")
        return max(self.terms)

    @property
    def low(self) -> int:
        if not self.terms:
            raise ValueError("low exponent of zero polynomial")
        return min(self.terms)

    def coeff(self, e: int) -> int:
        return self.terms.get(e, 0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: Dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative power of a general Laurent polynomial")
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by L^k."""
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly({e: c * v for e, v in self.terms.items()})

    def divexact(self, other: "LaurentPoly") -> Optional["LaurentPoly"]:
        """Exact quotient self / other, or None if the division has a remainder.

        Valid for any nonzero divisor; exactness is over the rationals, and
        the quotient is returned only when its coefficients are integers.
        """
        if other.is_zero:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero:
            return LaurentPoly()
        # normalize both to ordinary polynomials
        slow, olow = self.low, other.low
        num = {e - slow: Fraction(c) for e, c in self.terms.items()}
        den = {e - olow: Fraction(c) for e, c in other.terms.items()}
        dd = max(den)
        lead = den[dd]
        quot: Dict[int, Fraction] = {}
        while num:
            nd = max(num)
            if nd < dd:
                return None
            q = num[nd] / lead
            quot[nd - dd] = q
            for e, c in den.items():
                e2 = e + nd - dd
                v = num.get(e2, Fraction(0)) - q * c
                if v:
                    num[e2] = v
                else:
                    num.pop(e2, None)
        out: Dict[int, int] = {}
        for e, c in quot.items():
            if c.denominator != 1:
                return None
            out[e + slow - olow] = int(c)
        return LaurentPoly(out)

    def eval_at(self, x: Fraction) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * (Fraction(x) ** e)
        return total

    def __repr__(self) -> str:
        from .parsing import format_laurent

        return f"LaurentPoly({format_laurent(self)})"


def _clean_den(den: Iterable[int]) -> Tuple[int, ...]:
    out = tuple(sorted(int(i) for i in den))
    for i in out:
        if i < 1:
            raise ValueError(f"denominator factor (L^{i} - 1) needs i >= 1")
    return out


class MotClass:
    """Element num / prod_{i in den} (L^i - 1) of the localized ring.

    Canonical form divides out denominator factors that divide the numerator
    exactly; equality is nevertheless decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: Iterable[int] = ()):
        den = _clean_den(den)
        if num.is_zero:
            den = ()
        else:
            remaining = []
            for i in sorted(den, reverse=True):
                q = num.divexact(LaurentPoly.binom(i))
                if q is not None:
                    num = q
                else:
                    remaining.append(i)
            den = tuple(sorted(remaining))
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "MotClass":
        return cls(LaurentPoly.const(c))

    @classmethod
    def L(cls, power: int = 1) -> "MotClass":
        return cls(LaurentPoly.L(power))

    @classmethod
    def zero(cls) -> "MotClass":
        return cls(LaurentPoly())

    @classmethod
    def one(cls) -> "MotClass":
        return cls.const(1)

    # -- queries -----------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def den_poly(self) -> LaurentPoly:
        p = LaurentPoly.const(1)
        for i in self.den:
            p = p * LaurentPoly.binom(i)
        return p

    def virtual_dim(self) -> int:
        """deg_L(num) - sum(den); raises on the zero class."""
        return self.num.degree - sum(self.den)

    # -- ring structure ----------------------------------------------------
    def __add__(self, other: "MotClass") -> "MotClass":
        # common denominator: multiset max of the two factor multisets
        from collections import Counter

        ca, cb = Counter(self.den), Counter(other.den)
        common = ca | cb
        pa = LaurentPoly.const(1)
        for i, m in sorted((common - ca).items()):
            for _ in range(m):
                pa = pa * LaurentPoly.binom(i)
        pb = LaurentPoly.const(1)
        for i, m in sorted((common - cb).items()):
            for _ in range(m):
                pb = pb * LaurentPoly.binom(i)
        return MotClass(self.num * pa + other.num * pb, common.elements())

    def __neg__(self) -> "MotClass":
        return MotClass(-self.num, self.den)

    def __sub__(self, other: "MotClass") -> "MotClass":
        return self + (-other)

    def __mul__(self, other: "MotClass") -> "MotClass":
        return MotClass(self.num * other.num, self.den + other.den)

    def __pow__(self, n: int) -> "MotClass":
        if n < 0:
            raise ValueError("negative power of a MotClass")
        out = MotClass.one()
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "MotClass":
        """Multiply by L^k."""
        return MotClass(self.num.shift(k), self.den)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MotClass) and mot_eq(self, other)

    def __hash__(self) -> int:
        # hash on the canonical representative
        return hash((self.num, self.den))

    def eval_at(self, q: int) -> Fraction:
        """Specialize L to the integer q (q >= 2 keeps all factors nonzero)."""
        value = self.num.eval_at(Fraction(q))
        for i in self.den:
            value /= Fraction(q) ** i - 1
        return value

    def __repr__(self) -> str:
        from .parsing import format_motclass

        return f"MotClass({format_motclass(self)})"


def mot_arith(a: MotClass, b: MotClass, op: str) -> MotClass:
    """Named entry point for ring arithmetic (add / sub / mul)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def mot_eq(a: MotClass, b: MotClass) -> bool:
    """Equality by cross-multiplication, independent of canonical form."""
    return a.num * b.den_poly() == b.num * a.den_poly()


def filtration_degree(a: MotClass):
    """Largest m with a in F^m of the dimension filtration; +inf for zero."""
    if a.is_zero:
        return math.inf
    return -a.virtual_dim()


class CompletionExpansion:
    """Truncated expansion sum_n c_n L^{-n} through order n <= order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Mapping[int, int], order: int):
        self.order = int(order)
        self.coeffs = {int(n): int(c) for n, c in coeffs.items()
                       if c and n <= self.order}

    def coeff(self, n: int) -> int:
        if n > self.order:
            raise ValueError(f"coefficient at L^-{n} beyond truncation order {self.order}")
        return self.coeffs.get(n, 0)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, CompletionExpansion)
                and self.order == other.order and self.coeffs == other.coeffs)

    def matches(self, other: "CompletionExpansion") -> bool:
        """Agreement through the common valid order."""
        m = min(self.order, other.order)
        for n in set(self.coeffs) | set(other.coeffs):
            if n <= m and self.coeffs.get(n, 0) != other.coeffs.get(n, 0):
                return False
        return True

    def __repr__(self) -> str:
        parts = [f"{c}*L^-{n}" for n, c in sorted(self.coeffs.items())]
        body = " + ".join(parts) if parts else "0"
        return f"CompletionExpansion({body}; order {self.order})"


def _series_mul_geom(series: Dict[int, int], i: int, order: int) -> Dict[int, int]:
    """Multiply a series in u = L^-1 by sum_{k>=1} u^{ik}, truncating at order."""
    out: Dict[int, int] = {}
    for n, c in series.items():
        k = 1
        while n + i * k <= order:
            e = n + i * k
            out[e] = out.get(e, 0) + c
            k += 1
    return out


def expand_completion(a: MotClass, m: int) -> CompletionExpansion:
    """Laurent expansion of a in powers of L^-1 through order m.

    Requires m >= -vd(a) unless a = 0, so the principal part is visible.
    """
    if a.is_zero:
        return CompletionExpansion({}, m)
    if m < -a.virtual_dim():
        raise ValueError(
            f"order {m} truncates the entire expansion (needs >= {-a.virtual_dim()})")
    series: Dict[int, int] = {-e: c for e, c in a.num.terms.items()}
    for i in a.den:
        # 1/(L^i - 1) = sum_{k>=1} L^{-ik}
        series = _series_mul_geom(series, i, m)
    return CompletionExpansion(series, m)


def chi_realize(a: MotClass) -> Fraction:
    """Euler characteristic of a, extending chi((L-1)/(L^i-1)) = 1/i.

    Defined iff (L-1)^m divides the numerator, m the number of denominator
    factors; the value is then (num/(L-1)^m)(1) / prod(i).
    """
    if a.is_zero:
        return Fraction(0)
    num = a.num
    for _ in a.den:
        q = num.divexact(LaurentPoly.binom(1))
        if q is None:
            from .parsing import format_motclass

            raise ChiUndefined(
                f"chi undefined for {format_motclass(a)}: "
                f"(L-1)^{len(a.den)} does not divide the numerator")
        num = q
    value = Fraction(sum(num.terms.values()))
    for i in a.den:
        value /= i
    return value


class HodgeRational:
    """Hodge-Deligne realization value: a rational function in u, v.

    Numerator is a Laurent polynomial in u, v (map (p, q) -> int); the
    denominator is a multiset of factors ((uv)^i - 1).  L-polynomial classes
    land on the diagonal w = uv, but realization-only strata may carry
    genuinely two-variable numerators.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Mapping[Tuple[int, int], int], den: Iterable[int] = ()):
        self.num = {(int(p), int(q)): int(c) for (p, q), c in num.items() if c}
        self.den = _clean_den(den)
        self._cancel()

    def _cancel(self) -> None:
        """Cancel ((uv)^i - 1) factors when the numerator is a single
        diagonal translate u^s of a polynomial in w = uv."""
        if not self.den or not self.num:
            if not self.num:
                self.den = ()
            return
        offsets = {p - q for (p, q) in self.num}
        if len(offsets) != 1:
            return
        s = offsets.pop()
        poly = LaurentPoly({q: c for (p, q), c in self.num.items()})
        remaining = []
        for i in sorted(self.den, reverse=True):
            qt = poly.divexact(LaurentPoly.binom(i))
            if qt is None:
                remaining.append(i)
            else:
                poly = qt
        if len(remaining) != len(self.den):
            self.num = {(q + s, q): c for q, c in poly.terms.items()}
            self.den = _clean_den(remaining)

    @classmethod
    def const(cls, c: int) -> "HodgeRational":
        return cls({(0, 0): c})

    @classmethod
    def w(cls, power: int = 1) -> "HodgeRational":
        """(uv)^power."""
        return cls({(power, power): 1})

    @property
    def is_zero(self) -> bool:
        return not self.num

    def _den_num(self) -> Dict[Tuple[int, int], int]:
        p: Dict[Tuple[int, int], int] = {(0, 0): 1}
        for i in self.den:
            p = _hr_mul(p, {(i, i): 1, (0, 0): -1})
        return p

    def __add__(self, other: "HodgeRational") -> "HodgeRational":
        num = _hr_add(_hr_mul(self.num, other._den_num()),
                      _hr_mul(other.num, self._den_num()))
        return HodgeRational(num, self.den + other.den)

    def __neg__(self) -> "HodgeRational":
        return HodgeRational({k: -c for k, c in self.num.items()}, self.den)

    def __sub__(self, other: "HodgeRational") -> "HodgeRational":
        return self + (-other)

    def __mul__(self, other: "HodgeRational") -> "HodgeRational":
        return HodgeRational(_hr_mul(self.num, other.num), self.den + other.den)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HodgeRational):
            return NotImplemented
        return _hr_mul(self.num, other._den_num()) == _hr_mul(other.num, self._den_num())

    def __hash__(self) -> int:
        return hash((frozenset(self.num.items()), self.den))

    def at_uv_one(self) -> Fraction:
        """Value at u = v = 1 (the Euler specialization), when defined."""
        # substitute u = v = s and take the limit s -> 1 after cancelling
        # the (s^{2i} - 1) denominator factors against the numerator
        diag: Dict[int, int] = {}
        for (p, q), c in self.num.items():
            e = p + q
            diag[e] = diag.get(e, 0) + c
        poly = LaurentPoly(diag)
        for i in self.den:
            qt = poly.divexact(LaurentPoly.binom(1))
            if qt is None:
                raise ChiUndefined("value at u = v = 1 undefined")
            poly = qt
        value = Fraction(sum(poly.terms.values()))
        for i in self.den:
            value /= 2 * i
        return value

    def __repr__(self) -> str:
        from .parsing import format_hodge

        return f"HodgeRational({format_hodge(self)})"


def _hr_add(a: Dict[Tuple[int, int], int], b: Mapping[Tuple[int, int], int]):
    out = dict(a)
    for k, c in b.items():
        out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


def _hr_mul(a: Mapping[Tuple[int, int], int], b: Mapping[Tuple[int, int], int]):
    out: Dict[Tuple[int, int], int] = {}
    for (p1, q1), c1 in a.items():
        for (p2, q2), c2 in b.items():
            k = (p1 + p2, q1 + q2)
            out[k] = out.get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def hodge_realize(a: MotClass) -> HodgeRational:
    """Hodge realization: substitute L -> uv; a ring morphism."""
    num = {(e, e): c for e, c in a.num.terms.items()}
    return HodgeRational(num, a.den)
