"""Exact arithmetic: Laurent polynomials in y, fractional-exponent
polynomials in t, and truncated power series over Q[y, 1/y].

Rationals are :class:`fractions.Fraction` throughout. Every container is
immutable once built and prunes zero coefficients on construction, so
structural equality is mathematical equality.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .errors import InexactDivisionError, PoleError, SchemaError

RationalLike = Union[int, Fraction, str]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions, ``"p/q"`` strings and ``{"num", "den"}``
    mappings to a reduced Fraction.  Floats are refused."""
    if isinstance(value, bool):
        raise SchemaError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"not a rational: {value!r}") from exc
    if isinstance(value, Mapping):
        return rational_from_json(value)
    raise SchemaError(f"not a rational: {value!r}")


def rational_to_json(q: Fraction) -> dict:
    return {"num": q.numerator, "den": q.denominator}


def rational_from_json(obj) -> Fraction:
    if not isinstance(obj, Mapping) or set(obj) != {"num", "den"}:
        raise SchemaError(f"expected {{'num': .., 'den': ..}}, got {obj!r}")
    num, den = obj["num"], obj["den"]
    if not (isinstance(num, int) and isinstance(den, int)) or isinstance(num, bool) or isinstance(den, bool):
        raise SchemaError(f"rational parts must be integers: {obj!r}")
    if den <= 0:
        raise SchemaError(f"denominator must be positive: {obj!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _join_terms(pieces: list[tuple[int, str]]) -> str:
    """Render (sign, body) pairs as ``a + b - c``."""
    if not pieces:
        return "0"
    out = []
    for i, (sign, body) in enumerate(pieces):
        if i == 0:
            out.append(("-" if sign < 0 else "") + body)
        else:
            out.append((" - " if sign < 0 else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# Laurent polynomials in y
# ---------------------------------------------------------------------------

_LAURENT_TERM = re.compile(
    r"""^(?P<coef>\d+(?:/\d+)?)?\s*(?:(?P<star>\*)?\s*y(?:\s*\^\s*(?P<exp>\(?-?\d+\)?))?)?$"""
)


class LaurentPolyY:
    """Finite Q-linear combination of integer powers of ``y``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, RationalLike] | None = None):
        clean = {}
        for exp, coef in (terms or {}).items():
            if isinstance(exp, bool) or not isinstance(exp, int):
                raise SchemaError(f"exponent of y must be an integer, got {exp!r}")
            c = as_rational(coef)
            if c:
                clean[exp] = c
        self._terms = MappingProxyType(dict(sorted(clean.items())))
        self._hash = None

    # constructors ----------------------------------------------------------
    @classmethod
    def constant(cls, c: RationalLike) -> "LaurentPolyY":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coef: RationalLike = 1) -> "LaurentPolyY":
        return cls({exp: coef})

    @classmethod
    def y(cls) -> "LaurentPolyY":
        return cls({1: 1})

    @classmethod
    def coerce(cls, other) -> "LaurentPolyY":
        if isinstance(other, LaurentPolyY):
            return other
        return cls.constant(as_rational(other))

    # accessors -------------------------------------------------------------
    @property
    def terms(self) -> Mapping[int, Fraction]:
        return self._terms

    def coeff(self, exp: int) -> Fraction:
        return self._terms.get(exp, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    @property
    def min_degree(self) -> int | None:
        return min(self._terms) if self._terms else None

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # ring operations -------------------------------------------------------
    def __add__(self, other):
        try:
            other = LaurentPolyY.coerce(other)
        except SchemaError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolyY(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolyY({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = LaurentPolyY.coerce(other)
        except SchemaError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPolyY.coerce(other) - self

    def __mul__(self, other):
        try:
            other = LaurentPolyY.coerce(other)
        except SchemaError:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolyY(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            if self.is_monomial() and isinstance(k, int):
                (e, c), = self._terms.items()
                return LaurentPolyY({e * k: c ** k})
            raise ValueError("only monomials admit negative powers")
        result = LaurentPolyY.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPolyY):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPolyY.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # evaluation ------------------------------------------------------------
    def evaluate(self, y0: RationalLike) -> Fraction:
        y0 = as_rational(y0)
        total = Fraction(0)
        for e, c in self._terms.items():
            if e < 0 and y0 == 0:
                raise PoleError(f"{self} has a pole at y = 0")
            total += c * y0 ** e
        return total

    def reciprocal(self) -> "LaurentPolyY":
        """Return p(1/y)."""
        return LaurentPolyY({-e: c for e, c in self._terms.items()})

    # rendering -------------------------------------------------------------
    def __str__(self):
        pieces = []
        for e, c in self._terms.items():
            sign = -1 if c < 0 else 1
            a = abs(c)
            if e == 0:
                body = format_rational(a)
            else:
                mono = "y" if e == 1 else f"y^{e}"
                body = mono if a == 1 else f"{format_rational(a)}*{mono}"
            pieces.append((sign, body))
        return _join_terms(pieces)

    def __repr__(self):
        return f"LaurentPolyY({str(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [{"exp": e, "coeff": rational_to_json(c)} for e, c in self._terms.items()]}

    @classmethod
    def from_json(cls, obj) -> "LaurentPolyY":
        """Accept the canonical ``{"terms": [...]}`` form, a text rendering
        such as ``"2 - 20*y + 2*y^2"``, or a bare rational."""
        if isinstance(obj, str):
            return cls.parse(obj)
        if isinstance(obj, (int, Fraction)) and not isinstance(obj, bool):
            return cls.constant(obj)
        if isinstance(obj, Mapping) and set(obj) == {"num", "den"}:
            return cls.constant(rational_from_json(obj))
        if not isinstance(obj, Mapping) or "terms" not in obj or not isinstance(obj["terms"], list):
            raise SchemaError(f"not a Laurent polynomial: {obj!r}")
        out: dict[int, Fraction] = {}
        for t in obj["terms"]:
            if not isinstance(t, Mapping) or set(t) != {"exp", "coeff"}:
                raise SchemaError(f"bad Laurent term: {t!r}")
            e = t["exp"]
            if isinstance(e, bool) or not isinstance(e, int):
                raise SchemaError(f"exponent of y must be an integer, got {e!r}")
            out[e] = out.get(e, 0) + as_rational(t["coeff"])
        return cls(out)

    @classmethod
    def parse(cls, text: str) -> "LaurentPolyY":
        s = text.replace(" ", "")
        if not s:
            raise SchemaError("empty polynomial text")
        # split on + and - that are not part of an exponent
        tokens = re.findall(r"([+-]?)((?:[^+-]|(?<=\^)-|(?<=\^\()-)+)", s)
        if "".join(sign + body for sign, body in tokens) != s:
            raise SchemaError(f"cannot parse polynomial {text!r}")
        out: dict[int, Fraction] = {}
        for sign, body in tokens:
            m = _LAURENT_TERM.match(body)
            if not m or (m.group("coef") is None and "y" not in body):
                raise SchemaError(f"cannot parse term {body!r} in {text!r}")
            if m.group("star") and m.group("coef") is None:
                raise SchemaError(f"cannot parse term {body!r} in {text!r}")
            coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
            if "y" in body:
                exp = int(m.group("exp").strip("()")) if m.group("exp") else 1
            else:
                exp = 0
            if sign == "-":
                coef = -coef
            out[exp] = out.get(exp, 0) + coef
        return cls(out)


def laurent_eval(p: LaurentPolyY, y0: RationalLike) -> Fraction:
    return p.evaluate(y0)


# ---------------------------------------------------------------------------
# Fractional-exponent polynomials in t (the group ring Z[Q])
# ---------------------------------------------------------------------------

def _format_exponent(a: Fraction) -> str:
    if a.denominator == 1:
        return f"t^{a.numerator}"
    return f"t^({a.numerator}/{a.denominator})"


class FracPoly:
    """Finite Z-linear combination of monomials t^a with rational a."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[RationalLike, int] | None = None):
        clean: dict[Fraction, int] = {}
        for exp, coef in (terms or {}).items():
            if isinstance(coef, bool) or not isinstance(coef, int):
                raise SchemaError(f"spectrum multiplicities must be integers, got {coef!r}")
            a = as_rational(exp)
            clean[a] = clean.get(a, 0) + coef
        self._terms = MappingProxyType({a: c for a, c in sorted(clean.items()) if c})
        self._hash = None

    @classmethod
    def monomial(cls, exp: RationalLike, coef: int = 1) -> "FracPoly":
        return cls({as_rational(exp): coef})

    @classmethod
    def one(cls) -> "FracPoly":
        return cls({Fraction(0): 1})

    @property
    def terms(self) -> Mapping[Fraction, int]:
        return self._terms

    def coeff(self, exp: RationalLike) -> int:
        return self._terms.get(as_rational(exp), 0)

    def support(self) -> list[Fraction]:
        return list(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def mass(self) -> int:
        """Sum of coefficients, i.e. the value at t = 1."""
        return sum(self._terms.values())

    def __add__(self, other):
        if not isinstance(other, FracPoly):
            return NotImplemented
        out = dict(self._terms)
        for a, c in other._terms.items():
            out[a] = out.get(a, 0) + c
        return FracPoly(out)

    def __neg__(self):
        return FracPoly({a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, FracPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return FracPoly({a: c * other for a, c in self._terms.items()})
        if not isinstance(other, FracPoly):
            return NotImplemented
        return frac_mul(self, other)

    __rmul__ = __mul__

    def shift(self, delta: RationalLike) -> "FracPoly":
        """Multiply by t^delta."""
        d = as_rational(delta)
        return FracPoly({a + d: c for a, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, FracPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def exact_div(self, divisor: "FracPoly") -> "FracPoly":
        """Quotient q with q * divisor == self; raises if there is none."""
        if divisor.is_zero():
            raise InexactDivisionError("division by the zero polynomial")
        if self.is_zero():
            return FracPoly()
        den = math.lcm(*(a.denominator for a in (*self._terms, *divisor._terms)))
        num = {int(a * den): c for a, c in self._terms.items()}
        dvs = {int(a * den): c for a, c in divisor._terms.items()}
        top = max(dvs)
        lead = dvs[top]
        low_num, low_dvs = min(num), min(dvs)
        quotient: dict[int, int] = {}
        # descending long division in s = t^(1/den); quotient exponents are
        # confined to [low_num - low_dvs, max_num - top]
        while num:
            e = max(num)
            if e - top < low_num - low_dvs:
                break
            c = num[e]
            if c % lead:
                break
            q = c // lead
            shift = e - top
            quotient[shift] = q
            for de, dc in dvs.items():
                k = de + shift
                v = num.get(k, 0) - q * dc
                if v:
                    num[k] = v
                else:
                    num.pop(k, None)
        if num:
            raise InexactDivisionError(f"({self}) is not divisible by ({divisor})")
        return FracPoly({Fraction(e, den): c for e, c in quotient.items()})

    def __str__(self):
        pieces = []
        for a, c in self._terms.items():
            mono = _format_exponent(a)
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            pieces.append((-1 if c < 0 else 1, body))
        return _join_terms(pieces)

    def __repr__(self):
        return f"FracPoly({str(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [{"exp": rational_to_json(a), "coeff": c} for a, c in self._terms.items()]}

    @classmethod
    def from_json(cls, obj) -> "FracPoly":
        if not isinstance(obj, Mapping) or not isinstance(obj.get("terms"), list):
            raise SchemaError(f"not a fractional-exponent polynomial: {obj!r}")
        out: dict[Fraction, int] = {}
        for t in obj["terms"]:
            if not isinstance(t, Mapping) or set(t) != {"exp", "coeff"}:
                raise SchemaError(f"bad spectrum term: {t!r}")
            c = t["coeff"]
            if isinstance(c, bool) or not isinstance(c, int):
                raise SchemaError(f"spectrum multiplicities must be integers, got {c!r}")
            a = as_rational(t["exp"])
            out[a] = out.get(a, 0) + c
        return cls(out)


def frac_mul(a: FracPoly, b: FracPoly) -> FracPoly:
    """Group-ring product: convolution on exponents."""
    out: dict[Fraction, int] = {}
    for e1, c1 in a.terms.items():
        for e2, c2 in b.terms.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
    return FracPoly(out)


# ---------------------------------------------------------------------------
# Truncated power series in a formal variable over Q[y, 1/y]
# ---------------------------------------------------------------------------

class TruncatedSeries:
    """Power series sum_k c_k x^k known through x^order."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable, order: int | None = None):
        coeffs = [LaurentPolyY.coerce(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        coeffs = coeffs[: order + 1]
        coeffs += [LaurentPolyY()] * (order + 1 - len(coeffs))
        self.coefficients: tuple[LaurentPolyY, ...] = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> LaurentPolyY:
        return self.coefficients[k]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coefficients[: order + 1], order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __add__(self, other):
        n = min(self.order, other.order)
        return TruncatedSeries([self[k] + other[k] for k in range(n + 1)], n)

    def __sub__(self, other):
        n = min(self.order, other.order)
        return TruncatedSeries([self[k] - other[k] for k in range(n + 1)], n)

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coefficients], self.order)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = LaurentPolyY.coerce(other)
            return TruncatedSeries([c * other for c in self.coefficients], self.order)
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = LaurentPolyY()
            for i in range(k + 1):
                if self[i] and other[k - i]:
                    acc = acc + self[i] * other[k - i]
            out.append(acc)
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = TruncatedSeries([1], self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be a unit c*y^e."""
        c0 = self[0]
        if not c0.is_monomial():
            raise ZeroDivisionError(f"constant term {c0} is not a unit in Q[y, 1/y]")
        (e, c), = c0.terms.items()
        inv0 = LaurentPolyY({-e: 1 / c})
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = LaurentPolyY()
            for i in range(1, k + 1):
                if self[i]:
                    acc = acc + self[i] * out[k - i]
            out.append(-(acc * inv0))
        return TruncatedSeries(out, self.order)

    def rescale(self, factor) -> "TruncatedSeries":
        """Substitute x -> factor * x."""
        f = LaurentPolyY.coerce(factor)
        return TruncatedSeries([c * f ** k for k, c in enumerate(self.coefficients)], self.order)

    def specialize(self, y0: RationalLike) -> list[Fraction]:
        return [c.evaluate(y0) for c in self.coefficients]

    def __repr__(self):
        return f"TruncatedSeries([{', '.join(str(c) for c in self.coefficients)}])"


def todd_series(order: int) -> TruncatedSeries:
    """Coefficients of u / (1 - e^(-u)) through u^order (rational constants)."""
    # (1 - e^(-u)) / u = sum_k (-1)^k u^k / (k+1)!
    base = TruncatedSeries(
        [Fraction((-1) ** k, math.factorial(k + 1)) for k in range(order + 1)], order
    )
    return base.inverse()


def series_q_y(order: int) -> TruncatedSeries:
    """Hirzebruch's normalized power series
    Q_y(a) = a(1+y) / (1 - e^(-a(1+y))) - a*y, through a^order."""
    if order < 0:
        raise ValueError("order must be non-negative")
    one_plus_y = LaurentPolyY({0: 1, 1: 1})
    q = todd_series(order).rescale(one_plus_y)
    if order >= 1:
        coeffs = list(q.coefficients)
        coeffs[1] = coeffs[1] - LaurentPolyY.y()
        q = TruncatedSeries(coeffs, order)
    return q
