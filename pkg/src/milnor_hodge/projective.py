"""chi_y-genera of degree-d hypersurfaces in P^{n+1}.

The smooth (or virtual) genus is the degree of T_y^*(T_vir X) cap [X]:
with h the hyperplane class, T_vir X = (n+2) O(1) - O(d) restricted to X
and [X] = d h, so chi_y is the coefficient of h^{n+1} in

    d h Q_y(h)^{n+2} / Q_y(d h).

Q_y(d h) has constant term 1, so it is inverted directly as a series.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import DimensionMismatchError, PreconditionError
from .hodge import reduced_total_chi
from .kernel import LaurentPolyY, series_q_y
from .spectrum import Spectrum, milnor_number


def minimal_order(n: int) -> int:
    return n + 2


def chi_y_virtual(d: int, n: int, order: int | None = None) -> LaurentPolyY:
    """chi_y of a smooth degree-d hypersurface of dimension n."""
    if d < 1 or n < 0:
        raise PreconditionError(f"need d >= 1 and n >= 0, got d={d}, n={n}")
    if order is None:
        order = minimal_order(n)
    if order < minimal_order(n):
        raise PreconditionError(f"series order {order} is below the required {minimal_order(n)}")
    q = series_q_y(order)
    integrand = q ** (n + 2) * q.rescale(d).inverse()
    # coefficient of h^{n+1} in d*h*integrand
    return integrand[n] * d


@dataclass(frozen=True)
class ProjectiveHypersurface:
    degree: int
    dim: int
    singularities: tuple[tuple[str, Spectrum], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.degree < 1 or self.dim < 0:
            raise PreconditionError(f"need degree >= 1 and dim >= 0, got {self.degree}, {self.dim}")
        object.__setattr__(self, "singularities", tuple(self.singularities))
        for name, sp in self.singularities:
            if sp.num_vars != self.dim + 1:
                raise DimensionMismatchError(
                    f"singularity {name!r} has {sp.num_vars} variables; "
                    f"a hypersurface of dimension {self.dim} needs {self.dim + 1}"
                )


def degree_mt(h: ProjectiveHypersurface) -> LaurentPolyY:
    """Degree of the Milnor-Hirzebruch class: sum of reduced chi_y of the
    Milnor fibres at the singular points."""
    total = LaurentPolyY()
    for _, sp in h.singularities:
        total = total + reduced_total_chi(sp).value
    return total


def chi_y_singular(h: ProjectiveHypersurface, order: int | None = None) -> LaurentPolyY:
    return chi_y_virtual(h.degree, h.dim, order) - degree_mt(h)


def euler_defect(singularities: Iterable[tuple[str, Spectrum]], n: int) -> int:
    """Sum of (-1)^n mu over the singular points."""
    return sum((-1) ** n * milnor_number(sp) for _, sp in singularities)
