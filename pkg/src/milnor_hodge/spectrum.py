"""Hodge spectra of isolated hypersurface singularities.

Convention: a spectral exponent b = a + p splits into a fractional part
a in [0, 1), which records the monodromy eigenvalue exp(2 pi i a), and an
integer part p, the Hodge level.  This is the only normalization offered.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping

from .errors import PreconditionError, SchemaError
from .kernel import FracPoly, as_rational, frac_mul


@dataclass(frozen=True)
class Spectrum:
    """Spectrum ``sp`` of a germ in ``num_vars`` variables."""

    sp: FracPoly
    num_vars: int

    def __post_init__(self):
        if isinstance(self.num_vars, bool) or not isinstance(self.num_vars, int) or self.num_vars < 0:
            raise SchemaError(f"num_vars must be a non-negative integer, got {self.num_vars!r}")
        if self.is_unit():
            return
        m = self.num_vars
        for a, c in self.sp.terms.items():
            if c <= 0:
                raise PreconditionError(f"spectrum multiplicity at t^{a} is {c}, must be positive")
            if not 0 < a < m:
                raise PreconditionError(f"spectral number {a} lies outside (0, {m})")

    @classmethod
    def unit(cls) -> "Spectrum":
        """Identity for the Thom-Sebastiani product (no variables)."""
        return cls(FracPoly.one(), 0)

    def is_unit(self) -> bool:
        return self.num_vars == 0 and self.sp == FracPoly.one()

    @property
    def dim(self) -> int:
        """Dimension n = m - 1 of the hypersurface germ."""
        return self.num_vars - 1

    def __str__(self):
        return str(self.sp)

    def to_json(self) -> dict:
        return {"explicit_spectrum": self.sp.to_json(), "num_vars": self.num_vars}


def brieskorn_pham(exponents: Iterable[int]) -> Spectrum:
    """Spectrum of x_1^w_1 + ... + x_m^w_m."""
    exponents = list(exponents)
    for w in exponents:
        if isinstance(w, bool) or not isinstance(w, int) or w < 2:
            raise PreconditionError(f"Brieskorn-Pham exponents must be integers >= 2, got {w!r}")
    factors = (FracPoly({Fraction(i, w): 1 for i in range(1, w)}) for w in exponents)
    return Spectrum(reduce(frac_mul, factors, FracPoly.one()), len(exponents))


def quasi_homogeneous(weights: Iterable) -> Spectrum:
    """Spectrum of an isolated quasi-homogeneous singularity with the given
    weights, from the closed form prod_j (t^w_j - t) / (1 - t^w_j).

    The whole product is divided at once, so weight systems whose single
    factors are not polynomials (e.g. E_7 with weights 1/3, 2/9) still work.
    """
    ws = [as_rational(w) for w in weights]
    if not ws:
        raise PreconditionError("at least one weight is required")
    for w in ws:
        if not 0 < w <= Fraction(1, 2):
            raise PreconditionError(f"weights must lie in (0, 1/2], got {w}")
    num = reduce(frac_mul, (FracPoly({w: 1, Fraction(1): -1}) for w in ws))
    den = reduce(frac_mul, (FracPoly({0: 1, w: -1}) for w in ws))
    return Spectrum(num.exact_div(den), len(ws))


def thom_sebastiani(a: Spectrum, b: Spectrum) -> Spectrum:
    """Spectrum of f(x) + g(z) in separate variables."""
    return Spectrum(frac_mul(a.sp, b.sp), a.num_vars + b.num_vars)


def suspension(a: Spectrum) -> Spectrum:
    """Add a square of a new variable: shifts every exponent by 1/2."""
    return Spectrum(a.sp.shift(Fraction(1, 2)), a.num_vars + 1)


def milnor_number(a: Spectrum) -> int:
    return a.sp.mass()


def is_symmetric(a: Spectrum) -> bool:
    m = a.num_vars
    return all(a.sp.coeff(m - b) == c for b, c in a.sp.terms.items())


def spectrum_from_json(obj) -> Spectrum:
    """Parse one of::

        {"brieskorn_pham": [2, 3]}
        {"quasi_homogeneous": [{"num": 1, "den": 3}, "1/2"]}
        {"explicit_spectrum": {"terms": [...]}, "num_vars": m}
    """
    if not isinstance(obj, Mapping):
        raise SchemaError(f"singularity descriptor must be an object, got {obj!r}")
    keys = {"brieskorn_pham", "quasi_homogeneous", "explicit_spectrum"} & set(obj)
    if len(keys) != 1:
        raise SchemaError(
            "singularity descriptor needs exactly one of brieskorn_pham, "
            f"quasi_homogeneous, explicit_spectrum; got {sorted(obj)}"
        )
    kind = keys.pop()
    if kind == "brieskorn_pham":
        ws = obj[kind]
        if not isinstance(ws, list) or not all(isinstance(w, int) and not isinstance(w, bool) for w in ws):
            raise SchemaError(f"brieskorn_pham must be a list of integers, got {ws!r}")
        return brieskorn_pham(ws)
    if kind == "quasi_homogeneous":
        ws = obj[kind]
        if not isinstance(ws, list):
            raise SchemaError(f"quasi_homogeneous must be a list of rationals, got {ws!r}")
        return quasi_homogeneous(as_rational(w) for w in ws)
    m = obj.get("num_vars")
    if isinstance(m, bool) or not isinstance(m, int):
        raise SchemaError("explicit_spectrum requires an integer num_vars")
    return Spectrum(FracPoly.from_json(obj[kind]), m)
