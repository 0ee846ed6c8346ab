"""Invariants read off a spectrum: chi_y-polynomials, Hodge numbers of the
Milnor fibre cohomology, Steenbrink's signature, and the Du Bois test."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import PreconditionError, SchemaError
from .kernel import LaurentPolyY
from .spectrum import Spectrum

REDUCED_MIDDLE = "reduced_middle"
REDUCED_TOTAL = "reduced_total"
TOTAL = "total"
IH_CONE = "ih_cone"
CHI_KINDS = (REDUCED_MIDDLE, REDUCED_TOTAL, TOTAL, IH_CONE)

DU_BOIS_NOTE = (
    "Gr^0_F of the middle Milnor fibre cohomology vanishes; for isolated "
    "hypersurface singularities this is also sufficient for Du Bois (Ishii), "
    "which is reported here but not checked."
)


@dataclass(frozen=True)
class ChiClass:
    """A chi_y-polynomial tagged with the cohomology it was taken of."""

    value: LaurentPolyY
    kind: str

    def __post_init__(self):
        if self.kind not in CHI_KINDS:
            raise ValueError(f"unknown chi_y class kind {self.kind!r}")

    def at(self, y0) -> Fraction:
        return self.value.evaluate(y0)


@dataclass(frozen=True, order=True)
class HodgeEntry:
    p: int
    q: int
    weight: int
    unipotent: bool
    dim: int

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "weight": self.weight,
                "unipotent": self.unipotent, "dim": self.dim}


@dataclass(frozen=True)
class HodgeTable:
    """Hodge numbers h^{p,q} = dim Gr^p_F Gr^W_{p+q} H^n(F) of a Milnor fibre."""

    n: int
    entries: tuple[HodgeEntry, ...]

    def __post_init__(self):
        merged: dict[tuple, int] = defaultdict(int)
        for e in self.entries:
            if e.p + e.q != e.weight:
                raise SchemaError(f"entry {e} has p + q != weight")
            if e.dim <= 0:
                raise SchemaError(f"entry {e} has non-positive dimension")
            merged[(e.p, e.q, e.weight, e.unipotent)] += e.dim
        object.__setattr__(
            self, "entries",
            tuple(sorted(HodgeEntry(*k, d) for k, d in merged.items())),
        )

    def h(self, p: int, q: int) -> int:
        return sum(e.dim for e in self.entries if e.p == p and e.q == q)

    def total_dim(self) -> int:
        return sum(e.dim for e in self.entries)

    def invariant_violations(self) -> list[str]:
        """Weight-placement and conjugation checks for generated tables."""
        bad = []
        for e in self.entries:
            want = self.n + 1 if e.unipotent else self.n
            if e.weight != want:
                bad.append(f"{e}: weight should be {want}")
        for e in self.entries:
            if self.h(e.p, e.q) != self.h(e.q, e.p):
                bad.append(f"h^{e.p},{e.q} != h^{e.q},{e.p}")
        return bad

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [e.to_json() for e in self.entries]}

    @classmethod
    def from_json(cls, obj) -> "HodgeTable":
        if not isinstance(obj, Mapping) or not isinstance(obj.get("n"), int) \
                or not isinstance(obj.get("entries"), list):
            raise SchemaError(f"not a Hodge table: {obj!r}")
        entries = []
        for e in obj["entries"]:
            try:
                entries.append(HodgeEntry(int(e["p"]), int(e["q"]), int(e["weight"]),
                                          bool(e["unipotent"]), int(e["dim"])))
            except (KeyError, TypeError, ValueError) as exc:
                raise SchemaError(f"bad Hodge table entry {e!r}") from exc
        return cls(obj["n"], tuple(entries))


def _floor(b: Fraction) -> int:
    return b.numerator // b.denominator


def chi_y_of_spectrum(a: Spectrum) -> ChiClass:
    """chi_y of the reduced middle cohomology: t^b contributes (-y)^floor(b)."""
    out: dict[int, int] = defaultdict(int)
    for b, c in a.sp.terms.items():
        p = _floor(b)
        out[p] += c * (-1) ** p
    return ChiClass(LaurentPolyY(out), REDUCED_MIDDLE)


def reduced_total_chi(a: Spectrum) -> ChiClass:
    """chi_y of all reduced cohomology; the Milnor fibre of an isolated
    singularity only has reduced cohomology in the middle degree n."""
    if a.num_vars < 1:
        raise PreconditionError("reduced_total_chi needs at least one variable")
    sign = (-1) ** a.dim
    return ChiClass(chi_y_of_spectrum(a).value * sign, REDUCED_TOTAL)


def total_chi(a: Spectrum) -> ChiClass:
    return ChiClass(reduced_total_chi(a).value + 1, TOTAL)


def hodge_table(a: Spectrum) -> HodgeTable:
    """Place spectral numbers into Hodge numbers.

    A non-integer b sits at (floor b, n - floor b) in weight n; an integer b
    (eigenvalue one) sits at (b, n + 1 - b) in weight n + 1.  This is the
    quasi-homogeneous weight structure.
    """
    n = a.dim
    entries = []
    for b, c in a.sp.terms.items():
        if b.denominator == 1:
            p = b.numerator
            entries.append(HodgeEntry(p, n + 1 - p, n + 1, True, c))
        else:
            p = _floor(b)
            entries.append(HodgeEntry(p, n - p, n, False, c))
    return HodgeTable(n, tuple(entries))


def signature_steenbrink(h: HodgeTable) -> Fraction:
    """sigma = sum_{p+q=n} (-1)^p (h^{p,q} + 2 sum_{i>=1} (-1)^i h^{p+i,q+i}).

    Zero for odd n.
    """
    n = h.n
    if n % 2:
        return Fraction(0)
    numbers: dict[tuple[int, int], int] = defaultdict(int)
    for e in h.entries:
        numbers[(e.p, e.q)] += e.dim
    top = max((p for p, _ in numbers), default=0)
    low = min((p for p, _ in numbers), default=0)
    total = 0
    for p in range(min(low, 0), max(top, n) + 1):
        q = n - p
        inner = numbers.get((p, q), 0)
        i = 1
        while p + i <= top:
            inner += 2 * (-1) ** i * numbers.get((p + i, q + i), 0)
            i += 1
        total += (-1) ** p * inner
    return Fraction(total)


def chi_one(a: Spectrum) -> Fraction:
    return chi_y_of_spectrum(a).at(1)


def rhm_signature_check(a: Spectrum) -> bool:
    """Does chi_1 of the middle cohomology equal the Milnor fibre signature?"""
    return chi_one(a) == signature_steenbrink(hodge_table(a))


def link_is_rational_homology_sphere(a: Spectrum) -> bool:
    """True iff 1 is not a monodromy eigenvalue (no integer spectral number)."""
    return all(b.denominator != 1 for b in a.sp.terms)


def du_bois_test(a: Spectrum) -> bool:
    """Necessary condition for an isolated Du Bois singularity: no spectral
    number in the open interval (0, 1)."""
    return not any(0 < b < 1 for b in a.sp.terms)


def table_chi_one(h: HodgeTable) -> int:
    return sum((-1) ** e.p * e.dim for e in h.entries)

