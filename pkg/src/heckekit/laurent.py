"""Sparse Laurent polynomials in one variable v over arbitrary-precision integers.

This is the coefficient ring of the whole package: Hecke structure constants,
Schur elements and crystal edge weights all live in Z[v, v^-1].  Polynomials
are stored sparsely as a map exponent -> nonzero coefficient (the zero
polynomial is the empty map) and are immutable; every operation returns a new
object.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union


class DivisionByZero(ArithmeticError):
    """Division of a Laurent polynomial by the zero polynomial."""


class NotDivisible(ArithmeticError):
    """The requested quotient does not exist in Z[v, v^-1]."""


class ZeroPolynomial(ValueError):
    """Extremal data requested for the zero polynomial."""


class LaurentPoly:
    """A Laurent polynomial with integer coefficients.

    >>> p = LaurentPoly({1: 1, -1: 1})   # v + v^-1
    >>> q = LaurentPoly({1: 1, -1: -1})  # v - v^-1
    >>> (p * q).text()
    '-v^-2 + v^2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], Iterable[tuple[int, int]]] = ()):
        data: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            if coeff:
                c = data.get(exp, 0) + coeff
                if c:
                    data[exp] = c
                elif exp in data:
                    del data[exp]
        self._terms = data
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "LaurentPoly":
        return _ONE

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    # -- basic queries -------------------------------------------------

    def items(self):
        """Term list sorted by ascending exponent."""
        return sorted(self._terms.items())

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def mindeg(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no minimal degree")
        return min(self._terms)

    @property
    def maxdeg(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no maximal degree")
        return max(self._terms)

    def extremal(self) -> tuple[int, int, int, int]:
        """Return (mindeg, mincoeff, maxdeg, maxcoeff) of a nonzero polynomial."""
        if not self._terms:
            raise ZeroPolynomial("extremal terms of the zero polynomial")
        lo = min(self._terms)
        hi = max(self._terms)
        return lo, self._terms[lo], hi, self._terms[hi]

    # -- ring operations -----------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        data = dict(self._terms)
        for exp, coeff in other._terms.items():
            c = data.get(exp, 0) + coeff
            if c:
                data[exp] = c
            elif exp in data:
                del data[exp]
        return _wrap(data)

    __radd__ = __add__

    def __neg__(self):
        return _wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return _ZERO
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        data: dict[int, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                c = data.get(e, 0) + c1 * c2
                if c:
                    data[e] = c
                elif e in data:
                    del data[e]
        return _wrap(data)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        if k == 0:
            return self
        return _wrap({e + k: c for e, c in self._terms.items()})

    def bar(self) -> "LaurentPoly":
        """The involution v -> v^-1 (exponents negated)."""
        return _wrap({-e: c for e, c in self._terms.items()})

    def neg_part(self) -> "LaurentPoly":
        """Truncation to strictly negative exponents."""
        return _wrap({e: c for e, c in self._terms.items() if e < 0})

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / other in Z[v, v^-1].

        Raises DivisionByZero when other is zero and NotDivisible when the
        quotient is not a Laurent polynomial with integer coefficients.
        """
        other = _coerce(other)
        if not other._terms:
            raise DivisionByZero("division by the zero polynomial")
        if not self._terms:
            return _ZERO
        plo, phi = min(self._terms), max(self._terms)
        qlo, qhi = min(other._terms), max(other._terms)
        dq = qhi - qlo
        dp = phi - plo
        if dp < dq:
            raise NotDivisible("degree spread too small")
        # Shift both to ordinary polynomials and long-divide over Q.
        num = [Fraction(self._terms.get(plo + i, 0)) for i in range(dp + 1)]
        den = [Fraction(other._terms.get(qlo + i, 0)) for i in range(dq + 1)]
        quot = [Fraction(0)] * (dp - dq + 1)
        for i in range(dp - dq, -1, -1):
            c = num[i + dq] / den[dq]
            quot[i] = c
            if c:
                for j in range(dq + 1):
                    num[i + j] -= c * den[j]
        if any(num[: dq]) or any(c.denominator != 1 for c in quot):
            raise NotDivisible("remainder nonzero or quotient not integral")
        base = plo - qlo
        return _wrap({base + i: int(c) for i, c in enumerate(quot) if c})

    # -- specialization ------------------------------------------------

    def at_one(self) -> int:
        """Value at v = 1."""
        return sum(self._terms.values())

    def evaluate(self, x: Fraction) -> Fraction:
        return sum((Fraction(c) * Fraction(x) ** e for e, c in self._terms.items()),
                   Fraction(0))

    # -- comparisons and hashing ----------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- rendering -------------------------------------------------------

    def text(self) -> str:
        """Canonical rendering with ascending exponents and explicit signs."""
        if not self._terms:
            return "0"
        pieces = []
        for i, (exp, coeff) in enumerate(self.items()):
            mag = abs(coeff)
            if exp == 0:
                body = str(mag)
            else:
                vpow = "v" if exp == 1 else f"v^{exp}"
                body = vpow if mag == 1 else f"{mag}*{vpow}"
            if i == 0:
                pieces.append(("-" if coeff < 0 else "") + body)
            else:
                pieces.append((" - " if coeff < 0 else " + ") + body)
        return "".join(pieces)

    def json_pairs(self) -> list[list]:
        """[[exponent, coefficient-as-decimal-string], ...] sorted by exponent."""
        return [[e, str(c)] for e, c in self.items()]

    def __repr__(self):
        return f"LaurentPoly('{self.text()}')"


def _wrap(data: dict[int, int]) -> LaurentPoly:
    p = LaurentPoly.__new__(LaurentPoly)
    p._terms = data
    p._hash = None
    return p


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return _wrap({0: x}) if x else _ZERO
    return NotImplemented


_ZERO = _wrap({})
_ONE = _wrap({0: 1})

#: the generator v
V = LaurentPoly.monomial(1)


def vpow(k: int, coeff: int = 1) -> LaurentPoly:
    """Shorthand for coeff * v^k."""
    return LaurentPoly.monomial(k, coeff)


def geometric(k: int, step: int) -> LaurentPoly:
    """1 + v^step + ... + v^((k-1)*step); the constant k when step = 0."""
    if k < 0:
        raise ValueError("length must be nonnegative")
    if step == 0:
        return LaurentPoly.const(k)
    return LaurentPoly({j * step: 1 for j in range(k)})
