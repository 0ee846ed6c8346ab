from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from milnor_hodge.errors import DimensionMismatchError, PreconditionError
from milnor_hodge.kernel import LaurentPolyY
from milnor_hodge.projective import (ProjectiveHypersurface, chi_y_singular, chi_y_virtual,
                                     degree_mt, euler_defect, minimal_order)
from milnor_hodge.spectrum import brieskorn_pham, milnor_number

Y = LaurentPolyY.y()


def generating_function_table(d, max_n):
    """chi_y of smooth degree-d hypersurfaces of dimension 0..max_n, read off
    sum_n chi_y z^(n+1) = ((1+yz)^d - (1-z)^d) / (((1+yz)^d + y(1-z)^d)(1+yz)(1-z))."""
    y, z = sympy.symbols("y z")
    a, b = (1 + y * z) ** d, (1 - z) ** d
    expr = (a - b) / ((a + y * b) * (1 + y * z) * (1 - z))
    ser = sympy.expand(sympy.series(expr, z, 0, max_n + 2).removeO())
    out = []
    for n in range(max_n + 1):
        poly = sympy.Poly(sympy.cancel(ser.coeff(z, n + 1)), y)
        out.append(LaurentPolyY({m[0]: Fraction(str(c)) for m, c in zip(poly.monoms(), poly.coeffs())}))
    return out


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_agrees_with_generating_function(d):
    for n, expected in enumerate(generating_function_table(d, 3)):
        assert chi_y_virtual(d, n) == expected, (d, n)


@pytest.mark.parametrize("d, n, chi", [
    (1, 2, 1 - Y + Y ** 2),
    (4, 2, 2 - 20 * Y + 2 * Y ** 2),
    (3, 1, LaurentPolyY()),
    (1, 1, 1 - Y),
    (5, 3, 100 * Y - 100 * Y ** 2),
    (2, 0, LaurentPolyY.constant(2)),
])
def test_examples(d, n, chi):
    assert chi_y_virtual(d, n) == chi


@pytest.mark.parametrize("d", range(1, 6))
@pytest.mark.parametrize("n", range(0, 4))
def test_euler_closed_form(d, n):
    expected = Fraction((1 - d) ** (n + 2) - 1, d) + n + 2
    assert chi_y_virtual(d, n).evaluate(-1) == expected


@pytest.mark.parametrize("d", range(1, 7))
@pytest.mark.parametrize("n", range(0, 5))
def test_arithmetic_genus(d, n):
    assert chi_y_virtual(d, n).evaluate(0) == 1 + (-1) ** n * comb(d - 1, n + 1)


@pytest.mark.parametrize("d", range(1, 7))
@pytest.mark.parametrize("n", range(0, 5))
def test_serre_duality_symmetry(d, n):
    chi = chi_y_virtual(d, n)
    assert chi.reciprocal() * LaurentPolyY.monomial(n) == chi * (-1) ** n


@given(st.integers(1, 6), st.integers(0, 4), st.integers(1, 5))
def test_series_order_does_not_matter(d, n, extra):
    assert chi_y_virtual(d, n, minimal_order(n) + extra) == chi_y_virtual(d, n)


def test_order_below_minimum_refused():
    with pytest.raises(PreconditionError):
        chi_y_virtual(3, 2, order=minimal_order(2) - 1)


def test_nodal_and_cuspidal_cubics():
    node = ProjectiveHypersurface(3, 1, (("p", brieskorn_pham([2, 2])),))
    cusp = ProjectiveHypersurface(3, 1, (("p", brieskorn_pham([3, 2])),))
    assert chi_y_singular(node) == -Y
    assert chi_y_singular(cusp) == 1 - Y
    assert degree_mt(node) == Y


def test_nodal_quartic_surface():
    # one A_1 point: chi_y drops by the reduced chi_y of the Milnor fibre, -y
    h = ProjectiveHypersurface(4, 2, (("p", brieskorn_pham([2, 2, 2])),))
    assert chi_y_singular(h) == 2 - 19 * Y + 2 * Y ** 2


@given(st.integers(1, 5), st.integers(1, 3),
       st.lists(st.lists(st.integers(2, 5), min_size=4, max_size=4), max_size=3))
def test_degree_at_minus_one_is_euler_defect(d, n, raw):
    sings = tuple((f"x{i}", brieskorn_pham(ws[: n + 1])) for i, ws in enumerate(raw))
    h = ProjectiveHypersurface(d, n, sings)
    assert degree_mt(h).evaluate(-1) == euler_defect(sings, n)
    assert euler_defect(sings, n) == sum((-1) ** n * milnor_number(sp) for _, sp in sings)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        ProjectiveHypersurface(3, 2, (("p", brieskorn_pham([2, 2])),))


@pytest.mark.parametrize("d, n", [(0, 1), (2, -1)])
def test_bad_degree_or_dimension(d, n):
    with pytest.raises(PreconditionError):
        chi_y_virtual(d, n)
