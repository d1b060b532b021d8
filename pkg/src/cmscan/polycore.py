"""Exact Laurent polynomial arithmetic over the integers.

Two value types cover everything the higher layers need:

* ``LaurentPoly`` is a sparse map from integer exponents (possibly
  negative) to nonzero integer coefficients.  All arithmetic is exact;
  there is no floating point anywhere in this package.

* ``GradedProduct`` is a formal product ``scalar * t^shift *
  prod_a (1 - t^a)^e(a)`` with multiplicities of either sign.  Graded
  dimension formulas are assembled in this shape so that factors cancel
  exactly *before* anything is expanded; expansion goes through the
  cyclotomic factorisation ``1 - t^a = prod_{k | a} Phi_k(t)`` (up to
  sign) and fails loudly when the product is not a polynomial.
"""
from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping


class NotPolynomialError(ArithmeticError):
    """A graded product failed to reduce to a polynomial.

    ``cyclotomic_index`` names the first Phi_k left with negative
    multiplicity after cancellation.
    """

    def __init__(self, cyclotomic_index: int):
        self.cyclotomic_index = cyclotomic_index
        super().__init__(
            f"not a polynomial: Phi_{cyclotomic_index} has negative multiplicity"
        )


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    >>> p = LaurentPoly({0: 1, 1: 1})
    >>> print(p * p)
    t^2 + 2*t + 1
    >>> print(LaurentPoly.parse("t^8 + 2*t^5"))
    t^8 + 2*t^5
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        if coeffs:
            for e, c in coeffs.items():
                if not isinstance(e, int) or not isinstance(c, int):
                    raise TypeError("exponents and coefficients must be ints")
                if c:
                    clean[e] = clean.get(e, 0) + c
        self._coeffs = {e: c for e, c in sorted(clean.items()) if c}

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls({})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff: int, exp: int = 0) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def t(cls, exp: int = 1) -> LaurentPoly:
        return cls({exp: 1})

    # -- inspection --------------------------------------------------

    def items(self) -> Iterator[tuple[int, int]]:
        """Exponent/coefficient pairs in increasing exponent order."""
        return iter(self._coeffs.items())

    def coeff(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def trailing_degree(self) -> int:
        """Least exponent with nonzero coefficient; rejects the zero polynomial."""
        if not self._coeffs:
            raise ValueError("the zero polynomial has no trailing degree")
        return next(iter(self._coeffs))

    def degree(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree")
        return next(reversed(self._coeffs))

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        return math.gcd(*self._coeffs.values()) if self._coeffs else 0

    def at_one(self) -> int:
        return sum(self._coeffs.values())

    def __call__(self, x):
        """Evaluate at ``x``; negative exponents need an invertible ``x``."""
        total = 0
        for e, c in self._coeffs.items():
            if e >= 0:
                total = total + c * x**e
            elif isinstance(x, int):
                total = total + Fraction(c, x ** (-e))
            else:
                total = total + c * x**e
        return total

    # -- arithmetic --------------------------------------------------

    def _coerce(self, other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return -(self - other)

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def __divmod__(self, other) -> tuple[LaurentPoly, LaurentPoly]:
        """Long division ordered by descending exponent, over the integers.

        Returns ``(q, r)`` with ``self == q * other + r``.  Division stops
        as soon as the leading coefficient of ``other`` fails to divide the
        current leading coefficient, so the remainder is canonical and the
        quotient is always integral; ``r == 0`` iff ``other`` divides
        ``self`` in Z[t, t^-1].
        """
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return LaurentPoly.zero(), LaurentPoly.zero()
        # Normalise both operands to honest polynomials with nonzero
        # constant term; units t^k are invertible so this loses nothing.
        a_tr, b_tr = self.trailing_degree(), other.trailing_degree()
        rem = {e - a_tr: c for e, c in self._coeffs.items()}
        den = {e - b_tr: c for e, c in other._coeffs.items()}
        den_deg = max(den)
        den_lead = den[den_deg]
        quot: dict[int, int] = {}
        while rem:
            rem_deg = max(rem)
            if rem_deg < den_deg:
                break
            lead, r = divmod(rem[rem_deg], den_lead)
            if r:
                break
            e = rem_deg - den_deg
            quot[e] = lead
            for de, dc in den.items():
                k = de + e
                v = rem.get(k, 0) - lead * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        q = LaurentPoly(quot).shift(a_tr - b_tr)
        r = LaurentPoly(rem).shift(a_tr)
        return q, r

    def __truediv__(self, other) -> LaurentPoly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"{self} is not divisible by {other}")
        return q

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    # -- text format -------------------------------------------------

    _TERM = re.compile(
        r"\s*(?P<sign>[+-])?\s*(?:"
        r"(?P<coeff>\d+)\s*\*?\s*t(?:\^(?P<cexp>-?\d+))?"
        r"|t(?:\^(?P<exp>-?\d+))?"
        r"|(?P<const>\d+)"
        r")\s*"
    )

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse sparse ``c*t^e`` terms in either exponent order.

        Accepts ``"t^8 + 2*t^5"`` and ``"2*t^5 + 1*t^8"`` alike.
        """
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return cls.zero()
        out: dict[int, int] = {}
        pos = 0
        first = True
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"bad polynomial text {text!r} at offset {pos}")
            if not first and m.group("sign") is None:
                raise ValueError(f"missing +/- between terms in {text!r}")
            if m.group("const") is not None:
                coeff, exp = int(m.group("const")), 0
            elif m.group("coeff") is not None:
                coeff = int(m.group("coeff"))
                exp = int(m.group("cexp")) if m.group("cexp") is not None else 1
            else:
                coeff = 1
                exp = int(m.group("exp")) if m.group("exp") is not None else 1
            if m.group("sign") == "-":
                coeff = -coeff
            out[exp] = out.get(exp, 0) + coeff
            pos = m.end()
            first = False
        return cls(out)

    def render(self) -> str:
        """Canonical text: descending exponents, unit coefficients elided."""
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for e, c in sorted(self._coeffs.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                tpow = "t" if e == 1 else f"t^{e}"
                body = tpow if mag == 1 else f"{mag}*{tpow}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly.parse({self.render()!r})"


@functools.lru_cache(maxsize=None)
def cyclotomic(k: int) -> LaurentPoly:
    """The k-th cyclotomic polynomial Phi_k, computed by exact division.

    >>> print(cyclotomic(1))
    t - 1
    >>> print(cyclotomic(6))
    t^2 - t + 1
    """
    if k < 1:
        raise ValueError("cyclotomic index must be positive")
    num = LaurentPoly({k: 1, 0: -1})
    for d in range(1, k):
        if k % d == 0:
            num = num / cyclotomic(d)
    return num


def parse_poly(text: str) -> LaurentPoly:
    return LaurentPoly.parse(text)


def render_poly(p: LaurentPoly) -> str:
    return p.render()


@dataclass(frozen=True)
class CycloFactorisation:
    """Multiplicities of cyclotomic polynomials Phi_k, k >= 1."""

    multiplicities: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.multiplicities)

    def negative_indices(self) -> list[int]:
        return [k for k, e in self.multiplicities if e < 0]

    def expand(self) -> LaurentPoly:
        """Product of the Phi_k^e; rejects negative multiplicities."""
        out = LaurentPoly.one()
        for k, e in self.multiplicities:
            if e < 0:
                raise NotPolynomialError(k)
            out = out * cyclotomic(k) ** e
        return out


class GradedProduct:
    """Formal product ``scalar * t^shift * prod_a (1 - t^a)^e(a)``.

    Instances are immutable by convention; every operation returns a new
    value.  Equality is on the normalised data, so two products that
    differ only by cancelled factors compare equal.
    """

    __slots__ = ("scalar", "shift", "factors")

    def __init__(self, scalar: int = 1, shift: int = 0,
                 factors: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        if factors:
            for a, e in factors.items():
                if a < 1:
                    raise ValueError("factor degrees must be positive")
                if e:
                    clean[a] = clean.get(a, 0) + e
        self.scalar = scalar
        self.shift = shift
        self.factors = {a: e for a, e in sorted(clean.items()) if e}

    @classmethod
    def one(cls) -> GradedProduct:
        return cls()

    @classmethod
    def of(cls, a: int, e: int = 1) -> GradedProduct:
        """The single factor (1 - t^a)^e."""
        return cls(factors={a: e})

    def __mul__(self, other: GradedProduct) -> GradedProduct:
        if not isinstance(other, GradedProduct):
            return NotImplemented
        factors = dict(self.factors)
        for a, e in other.factors.items():
            factors[a] = factors.get(a, 0) + e
        return GradedProduct(self.scalar * other.scalar,
                             self.shift + other.shift, factors)

    def inv(self) -> GradedProduct:
        """Formal reciprocal; only unit scalars are invertible over Z."""
        if self.scalar not in (1, -1):
            raise ValueError("only products with scalar +-1 are invertible")
        return GradedProduct(self.scalar, -self.shift,
                             {a: -e for a, e in self.factors.items()})

    def scaled(self, c: int) -> GradedProduct:
        return GradedProduct(self.scalar * c, self.shift, self.factors)

    def shifted(self, k: int) -> GradedProduct:
        return GradedProduct(self.scalar, self.shift + k, self.factors)

    def substitute(self, k: int) -> GradedProduct:
        """Substitute t -> t^k (k >= 1): degrees and shift scale by k."""
        if k < 1:
            raise ValueError("substitution degree must be positive")
        return GradedProduct(self.scalar, self.shift * k,
                             {a * k: e for a, e in self.factors.items()})

    def cyclotomic_factorisation(self) -> tuple[CycloFactorisation, int]:
        """Phi_k multiplicities of the (1 - t^a) part, plus the sign.

        Uses 1 - t^a = -(t^a - 1) = -prod_{k | a} Phi_k(t), so the
        returned sign is (-1)^(sum of multiplicities).
        """
        mult: dict[int, int] = {}
        sign_exp = 0
        for a, e in self.factors.items():
            sign_exp += e
            for k in range(1, a + 1):
                if a % k == 0:
                    mult[k] = mult.get(k, 0) + e
        sign = -1 if sign_exp % 2 else 1
        pairs = tuple((k, e) for k, e in sorted(mult.items()) if e)
        return CycloFactorisation(pairs), sign

    def reduce(self) -> LaurentPoly:
        """Expand to a LaurentPoly, or raise NotPolynomialError.

        The verdict is exact: after cancelling cyclotomic factors, any
        Phi_k left in the denominator proves the value is not a
        polynomial, and the error names the first offender.
        """
        cf, sign = self.cyclotomic_factorisation()
        negatives = cf.negative_indices()
        if negatives:
            raise NotPolynomialError(negatives[0])
        return (cf.expand() * (self.scalar * sign)).shift(self.shift)

    def reduce_with(self, poly: LaurentPoly) -> LaurentPoly:
        """Expand ``poly * self`` when that product is a polynomial.

        Negative cyclotomic multiplicities are allowed here as long as the
        expanded denominator divides ``poly`` times the expanded numerator
        exactly; fake-degree assembly relies on this cancellation.
        """
        cf, sign = self.cyclotomic_factorisation()
        num = poly
        den = LaurentPoly.one()
        for k, e in cf.multiplicities:
            if e > 0:
                num = num * cyclotomic(k) ** e
            else:
                den = den * cyclotomic(k) ** (-e)
        q, r = divmod(num, den)
        if not r.is_zero():
            raise NotPolynomialError(max(cf.negative_indices(), default=1))
        return (q * (self.scalar * sign)).shift(self.shift)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedProduct):
            return NotImplemented
        return (self.scalar, self.shift, self.factors) == \
            (other.scalar, other.shift, other.factors)

    def __hash__(self) -> int:
        return hash((self.scalar, self.shift, tuple(self.factors.items())))

    def __repr__(self) -> str:
        body = " ".join(f"(1-t^{a})^{e}" for a, e in self.factors.items())
        return f"GradedProduct({self.scalar} * t^{self.shift} * {body or '1'})"


def series_quotient(num: LaurentPoly, den: LaurentPoly, n: int) -> LaurentPoly:
    """First n+1 coefficients of num/den as a formal power series.

    ``den`` must be an honest polynomial with nonzero constant term and
    ``num`` must have no negative exponents.  The recurrence is run over
    exact rationals and the truncated result must be integral.
    """
    if den.is_zero():
        raise ZeroDivisionError("series division by zero")
    if den.trailing_degree() != 0:
        raise ValueError("series denominator needs a nonzero constant term")
    if not num.is_zero() and num.trailing_degree() < 0:
        raise ValueError("series numerator must not have negative exponents")
    if n < 0:
        raise ValueError("truncation order must be nonnegative")
    d0 = Fraction(den.coeff(0))
    coeffs: list[Fraction] = []
    for k in range(n + 1):
        acc = Fraction(num.coeff(k))
        for j, c in den.items():
            if 1 <= j <= k:
                acc -= c * coeffs[k - j]
        coeffs.append(acc / d0)
    out: dict[int, int] = {}
    for k, c in enumerate(coeffs):
        if c.denominator != 1:
            raise ValueError(f"series coefficient at t^{k} is not an integer: {c}")
        if c.numerator:
            out[k] = c.numerator
    return LaurentPoly(out)
