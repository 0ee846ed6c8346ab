"""Milnor-Hirzebruch classes as formal sums over stratum closures.

Homology classes are never computed from geometry.  The Hirzebruch classes
T_y(V-bar), T_y(V-bar minus V), IT_y(V-bar) of stratum closures and the
chi_y of cone-on-link intersection cohomology are supplied as data; this
module evaluates the weighted sums built from them, including the
link-corrected classes

    ITHat(V) = IT(V) - sum_{W < V} ITHat(W) * Ichi(cone L_{W,V}).

Only trivial monodromy along strata is supported.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from graphlib import CycleError, TopologicalSorter
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatchError, PreconditionError, SchemaError, StratificationError
from .hodge import reduced_total_chi
from .kernel import LaurentPolyY
from .spectrum import Spectrum, milnor_number, spectrum_from_json


class StratifiedClass:
    """Formal Q[y, 1/y]-linear combination of stratum-closure symbols."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[str, LaurentPolyY] | None = None):
        clean = {}
        for sym, coef in (terms or {}).items():
            if not isinstance(sym, str) or not sym:
                raise SchemaError(f"class symbols must be non-empty strings, got {sym!r}")
            coef = LaurentPolyY.coerce(coef)
            if coef:
                clean[sym] = coef
        self._terms = MappingProxyType(dict(sorted(clean.items())))

    @classmethod
    def of(cls, symbol: str, coef=1) -> "StratifiedClass":
        return cls({symbol: LaurentPolyY.coerce(coef)})

    @property
    def terms(self) -> Mapping[str, LaurentPolyY]:
        return self._terms

    def coeff(self, symbol: str) -> LaurentPolyY:
        return self._terms.get(symbol, LaurentPolyY())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        if not isinstance(other, StratifiedClass):
            return NotImplemented
        out = dict(self._terms)
        for s, c in other._terms.items():
            out[s] = out[s] + c if s in out else c
        return StratifiedClass(out)

    def __neg__(self):
        return StratifiedClass({s: -c for s, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, StratifiedClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, StratifiedClass):
            return NotImplemented
        scalar = LaurentPolyY.coerce(scalar)
        return StratifiedClass({s: c * scalar for s, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, StratifiedClass):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def specialize(self, y0) -> dict[str, Fraction]:
        return {s: c.evaluate(y0) for s, c in self._terms.items()}

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for s, c in self._terms.items():
            coef = str(c)
            parts.append(f"{s}" if coef == "1" else f"({coef})*{s}")
        return " + ".join(parts)

    def __repr__(self):
        return f"StratifiedClass({str(self)!r})"

    def to_json(self) -> dict:
        return {s: c.to_json() for s, c in self._terms.items()}

    @classmethod
    def from_json(cls, obj) -> "StratifiedClass":
        if not isinstance(obj, Mapping):
            raise SchemaError(f"class data must map symbols to polynomials, got {obj!r}")
        return cls({s: LaurentPolyY.from_json(c) for s, c in obj.items()})


def class_sum(classes: Iterable[StratifiedClass]) -> StratifiedClass:
    total = StratifiedClass()
    for c in classes:
        total = total + c
    return total


@dataclass(frozen=True)
class Stratum:
    name: str
    dim: int
    is_singular_stratum: bool = True
    T_closure: StratifiedClass | None = None
    T_boundary: StratifiedClass | None = None
    IT_closure: StratifiedClass | None = None
    milnor_spectrum: Spectrum | None = None
    # reduced chi_y of the Milnor fibre, when no spectrum is known
    milnor_chi: LaurentPolyY | None = None
    ih_cone_link_chi: Mapping[str, LaurentPolyY] = field(default_factory=dict)
    ih_cone_link_in_X: LaurentPolyY | None = None

    def __post_init__(self):
        object.__setattr__(self, "ih_cone_link_chi", MappingProxyType(dict(self.ih_cone_link_chi)))


@dataclass(frozen=True)
class Stratification:
    """Strata of a hypersurface X of dimension ``ambient_dim`` together with
    the strict order W < V (W inside the boundary of V)."""

    ambient_dim: int
    strata: tuple[Stratum, ...]
    order: tuple[tuple[str, str], ...] = ()
    monodromy_trivial: bool = True

    def __post_init__(self):
        object.__setattr__(self, "strata", tuple(self.strata))
        object.__setattr__(self, "order", tuple(tuple(p) for p in self.order))
        names = [s.name for s in self.strata]
        if len(set(names)) != len(names):
            raise SchemaError(f"duplicate stratum names in {names}")
        known = set(names)
        for lo, hi in self.order:
            if lo not in known or hi not in known:
                raise SchemaError(f"order pair ({lo!r}, {hi!r}) names an unknown stratum")
            if lo == hi:
                raise StratificationError(f"stratum {lo!r} cannot lie below itself")
        for s in self.strata:
            if s.is_singular_stratum and s.dim >= self.ambient_dim:
                raise DimensionMismatchError(
                    f"singular stratum {s.name!r} has dim {s.dim} >= dim X = {self.ambient_dim}"
                )
        self.linear_extension()  # raises on cycles

    @property
    def by_name(self) -> dict[str, Stratum]:
        return {s.name: s for s in self.strata}

    def _graph(self) -> dict[str, set[str]]:
        preds: dict[str, set[str]] = {s.name: set() for s in self.strata}
        for lo, hi in self.order:
            preds[hi].add(lo)
        return preds

    def linear_extension(self) -> list[str]:
        try:
            return list(TopologicalSorter(self._graph()).static_order())
        except CycleError as exc:
            raise StratificationError(f"order relation has a cycle: {exc.args[1]}") from exc

    def below(self, name: str) -> set[str]:
        """All W with W < name in the transitive closure."""
        preds = self._graph()
        seen: set[str] = set()
        stack = list(preds[name])
        while stack:
            w = stack.pop()
            if w not in seen:
                seen.add(w)
                stack.extend(preds[w])
        return seen

    def singular_strata(self) -> list[Stratum]:
        return [s for s in self.strata if s.is_singular_stratum]


def _check_monodromy(s: Stratification):
    if not s.monodromy_trivial:
        raise StratificationError(
            "stratification is declared with non-trivial monodromy; "
            "the class formulas here require trivial monodromy along strata"
        )


def fiber_chi(s: Stratification, v: Stratum) -> LaurentPolyY:
    """chi_y of the reduced cohomology of the Milnor fibre at a point of v."""
    if v.milnor_chi is not None:
        return v.milnor_chi
    if v.milnor_spectrum is None:
        raise StratificationError(f"stratum {v.name!r} has neither milnor_spectrum nor milnor_chi")
    want = s.ambient_dim - v.dim + 1
    if v.milnor_spectrum.num_vars != want:
        raise DimensionMismatchError(
            f"stratum {v.name!r}: transversal spectrum has {v.milnor_spectrum.num_vars} "
            f"variables, expected n - dim + 1 = {want}"
        )
    return reduced_total_chi(v.milnor_spectrum).value


def _require(v: Stratum, attr: str):
    value = getattr(v, attr)
    if value is None:
        raise StratificationError(f"stratum {v.name!r} is missing {attr}")
    return value


# ---------------------------------------------------------------------------
# isolated singularities and smooth singular locus
# ---------------------------------------------------------------------------

def _common_dim(spectra: Sequence[tuple[str, Spectrum]]) -> None:
    dims = {sp.num_vars for _, sp in spectra}
    if len(dims) > 1:
        raise DimensionMismatchError(f"singular points have differing numbers of variables {sorted(dims)}")


def mt_isolated(sings: Sequence[tuple[str, Spectrum]]) -> StratifiedClass:
    """Sum over singular points x of (-1)^n chi_y(H~^n(F_x)) [x]."""
    _common_dim(sings)
    return class_sum(StratifiedClass.of(name, reduced_total_chi(sp).value) for name, sp in sings)


def mit_isolated(sings: Sequence[tuple[str, Spectrum, LaurentPolyY]]) -> StratifiedClass:
    """Sum over x of (chi_y(H^*(F_x)) - Ichi_y(cone on the link of x)) [x]."""
    _common_dim([(name, sp) for name, sp, _ in sings])
    return class_sum(
        StratifiedClass.of(name, reduced_total_chi(sp).value + 1 - LaurentPolyY.coerce(ih))
        for name, sp, ih in sings
    )


def mt_smooth_locus(transversal: Spectrum, n: int, r: int, T_sigma: StratifiedClass) -> StratifiedClass:
    """(-1)^(n-r) chi_y(H^(n-r)(F_N)) T_y(Sigma) for a smooth, simply
    connected singular locus Sigma of dimension r with transversal
    singularity ``transversal``."""
    if not 0 <= r < n:
        raise DimensionMismatchError(f"need 0 <= r < n, got r={r}, n={n}")
    if transversal.num_vars != n - r + 1:
        raise DimensionMismatchError(
            f"transversal spectrum has {transversal.num_vars} variables, expected n - r + 1 = {n - r + 1}"
        )
    if T_sigma.is_zero():
        raise DimensionMismatchError("T_y class of the singular locus must be non-zero")
    return T_sigma * reduced_total_chi(transversal).value


# ---------------------------------------------------------------------------
# general stratifications
# ---------------------------------------------------------------------------

def mt_stratified_direct(s: Stratification) -> StratifiedClass:
    """Sum over singular V of (T(V-bar) - T(V-bar minus V)) * chi_y(H~^*(F_v))."""
    _check_monodromy(s)
    total = StratifiedClass()
    for v in s.singular_strata():
        weight = _require(v, "T_closure") - _require(v, "T_boundary")
        total = total + weight * fiber_chi(s, v)
    return total


def it_hat(s: Stratification, linear_order: Sequence[str] | None = None) -> dict[str, StratifiedClass]:
    """Link-corrected intersection classes of the singular stratum closures,
    evaluated along ``linear_order`` (any linear extension; default: a
    topological sort)."""
    _check_monodromy(s)
    strata = s.by_name
    order = list(linear_order) if linear_order is not None else s.linear_extension()
    if sorted(order) != sorted(strata):
        raise StratificationError("linear order must list every stratum exactly once")
    position = {name: i for i, name in enumerate(order)}
    result: dict[str, StratifiedClass] = {}
    for name in order:
        v = strata[name]
        if not v.is_singular_stratum:
            continue
        acc = _require(v, "IT_closure")
        for w_name in sorted(s.below(name)):
            if position[w_name] > position[name]:
                raise StratificationError(f"{order} is not a linear extension: {w_name!r} < {name!r}")
            if not strata[w_name].is_singular_stratum:
                raise StratificationError(f"regular stratum {w_name!r} lies below {name!r}")
            if w_name not in v.ih_cone_link_chi:
                raise StratificationError(f"stratum {name!r} is missing ih_cone_link_chi for {w_name!r}")
            acc = acc - result[w_name] * v.ih_cone_link_chi[w_name]
        result[name] = acc
    return result


def mt_stratified_ic(s: Stratification) -> StratifiedClass:
    """Sum over singular V of ITHat(V) * chi_y(H~^*(F_v))."""
    hats = it_hat(s)
    return class_sum(hats[v.name] * fiber_chi(s, v) for v in s.singular_strata())


def t_minus_it(s: Stratification) -> StratifiedClass:
    """T_y(X) - IT_y(X) = sum over singular V of ITHat(V) * (1 - Ichi_y(cone L_{V,X}))."""
    hats = it_hat(s)
    return class_sum(
        hats[v.name] * (1 - _require(v, "ih_cone_link_in_X")) for v in s.singular_strata()
    )


def mit_stratified(s: Stratification) -> StratifiedClass:
    """Intersection Milnor-Hirzebruch class, weighted by T(V-bar) - T(V-bar minus V)."""
    _check_monodromy(s)
    total = StratifiedClass()
    for v in s.singular_strata():
        weight = _require(v, "T_closure") - _require(v, "T_boundary")
        normal = fiber_chi(s, v) + 1 - _require(v, "ih_cone_link_in_X")
        total = total + weight * normal
    return total


def mit_stratified_ic(s: Stratification) -> StratifiedClass:
    """Same class, weighted by the link-corrected classes ITHat(V)."""
    hats = it_hat(s)
    return class_sum(
        hats[v.name] * (fiber_chi(s, v) + 1 - _require(v, "ih_cone_link_in_X"))
        for v in s.singular_strata()
    )


def mobius_residuals(s: Stratification) -> dict[str, StratifiedClass]:
    """IT(V) - sum_{W <= V} ITHat(W) * Ichi(cone L_{W,V}) per singular stratum
    (Ichi(cone L_{V,V}) = 1); all zero when the recursion is consistent."""
    hats = it_hat(s)
    out = {}
    for v in s.singular_strata():
        rebuilt = hats[v.name] + class_sum(hats[w] * v.ih_cone_link_chi[w] for w in s.below(v.name))
        out[v.name] = v.IT_closure - rebuilt
    return out


def _attempt(fn, *args):
    try:
        return fn(*args), None
    except PreconditionError as exc:
        return None, str(exc)


def consistency_report(s: Stratification) -> dict:
    """Cross-checks between the evaluated formulas, for the ``stratified``
    command.  Entries are True/False, or None when the inputs needed for a
    check are absent."""
    report: dict[str, object] = {}
    direct, _ = _attempt(mt_stratified_direct, s)
    ic, _ = _attempt(mt_stratified_ic, s)
    report["mt_direct_equals_ic"] = None if direct is None or ic is None else direct == ic

    mit_a, _ = _attempt(mit_stratified, s)
    mit_b, _ = _attempt(mit_stratified_ic, s)
    report["mit_forms_agree"] = None if mit_a is None or mit_b is None else mit_a == mit_b

    hats, _ = _attempt(it_hat, s)
    if hats is None:
        report["mobius_identity"] = None
        report["boundary_matches_it_hat"] = None
    else:
        report["mobius_identity"] = all(r.is_zero() for r in mobius_residuals(s).values())
        if all(v.T_closure is not None and v.T_boundary is not None for v in s.singular_strata()):
            report["boundary_matches_it_hat"] = all(
                v.T_closure - v.T_boundary == hats[v.name] for v in s.singular_strata()
            )
        else:
            report["boundary_matches_it_hat"] = None

    euler = []
    for v in s.singular_strata():
        if v.milnor_spectrum is None:
            continue
        chi, _ = _attempt(fiber_chi, s, v)
        if chi is None:
            euler.append(False)
            continue
        euler.append(chi.evaluate(-1) == (-1) ** (s.ambient_dim - v.dim) * milnor_number(v.milnor_spectrum))
    report["euler_specialization"] = all(euler) if euler else None
    return report


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

_STRATUM_KEYS = {
    "name", "dim", "is_singular_stratum", "T_closure", "T_boundary", "IT_closure",
    "milnor_spectrum", "milnor_chi", "ih_cone_link_chi", "ih_cone_link_in_X",
}


def _opt(obj, key, parse):
    return parse(obj[key]) if obj.get(key) is not None else None


def stratum_from_json(obj) -> Stratum:
    if not isinstance(obj, Mapping):
        raise SchemaError(f"stratum must be an object, got {obj!r}")
    unknown = set(obj) - _STRATUM_KEYS
    if unknown:
        raise SchemaError(f"unknown stratum fields {sorted(unknown)}")
    name, dim = obj.get("name"), obj.get("dim")
    if not isinstance(name, str) or isinstance(dim, bool) or not isinstance(dim, int):
        raise SchemaError(f"stratum needs a string name and an integer dim: {obj!r}")
    links = obj.get("ih_cone_link_chi") or {}
    if not isinstance(links, Mapping):
        raise SchemaError(f"ih_cone_link_chi of {name!r} must be an object")
    singular = obj.get("is_singular_stratum", True)
    if not isinstance(singular, bool):
        raise SchemaError(f"is_singular_stratum of {name!r} must be a boolean")
    return Stratum(
        name=name,
        dim=dim,
        is_singular_stratum=singular,
        T_closure=_opt(obj, "T_closure", StratifiedClass.from_json),
        T_boundary=_opt(obj, "T_boundary", StratifiedClass.from_json),
        IT_closure=_opt(obj, "IT_closure", StratifiedClass.from_json),
        milnor_spectrum=_opt(obj, "milnor_spectrum", spectrum_from_json),
        milnor_chi=_opt(obj, "milnor_chi", LaurentPolyY.from_json),
        ih_cone_link_chi={w: LaurentPolyY.from_json(c) for w, c in links.items()},
        ih_cone_link_in_X=_opt(obj, "ih_cone_link_in_X", LaurentPolyY.from_json),
    )


def stratification_from_json(obj) -> Stratification:
    """Parse::

        {"ambient_dim": 2, "monodromy_trivial": true,
         "strata": [{"name": "p", "dim": 0, "T_closure": {"[p]": "1"}, ...}],
         "order": [["p", "C"]]}
    """
    if not isinstance(obj, Mapping):
        raise SchemaError("stratification file must hold a JSON object")
    n = obj.get("ambient_dim")
    if isinstance(n, bool) or not isinstance(n, int):
        raise SchemaError("stratification needs an integer ambient_dim")
    strata = obj.get("strata")
    if not isinstance(strata, list):
        raise SchemaError("stratification needs a 'strata' array")
    order = obj.get("order", [])
    if not isinstance(order, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(x, str) for x in p) for p in order
    ):
        raise SchemaError("'order' must be an array of [lower, upper] name pairs")
    trivial = obj.get("monodromy_trivial", True)
    if not isinstance(trivial, bool):
        raise SchemaError("monodromy_trivial must be a boolean")
    return Stratification(n, tuple(stratum_from_json(x) for x in strata),
                          tuple(tuple(p) for p in order), trivial)

