import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from milnor_hodge.errors import DimensionMismatchError, SchemaError, StratificationError
from milnor_hodge.kernel import LaurentPolyY
from milnor_hodge.spectrum import brieskorn_pham, milnor_number
from milnor_hodge.strata import (StratifiedClass, Stratification, Stratum, consistency_report,
                                 it_hat, mit_isolated, mit_stratified, mit_stratified_ic,
                                 mobius_residuals, mt_isolated, mt_smooth_locus,
                                 mt_stratified_direct, mt_stratified_ic, stratification_from_json,
                                 t_minus_it)
from milnor_hodge.verify import consistent_stratification, random_stratification

Y = LaurentPolyY.y()
C = StratifiedClass.of


def zeta_inverse_oracle(s, y0):
    """Specialize at y0 and solve IT = ITHat * Z with a sympy matrix, Z the
    weighted zeta matrix of the poset."""
    names = sorted(s.by_name)
    idx = {v: i for i, v in enumerate(names)}
    Z = sympy.eye(len(names))
    for v in names:
        for w in s.below(v):
            Z[idx[w], idx[v]] = sympy.Rational(str(s.by_name[v].ih_cone_link_chi[w].evaluate(y0)))
    symbols = sorted({sym for v in names for sym in s.by_name[v].IT_closure.terms})
    IT = sympy.Matrix([[sympy.Rational(str(s.by_name[v].IT_closure.coeff(sym).evaluate(y0)))
                        for v in names] for sym in symbols])
    hat = IT * Z.inv()
    return {v: {sym: Fraction(str(hat[r, idx[v]])) for r, sym in enumerate(symbols)} for v in names}


@given(st.integers(0, 10 ** 6), st.integers(1, 6), st.sampled_from([Fraction(-1), Fraction(2), Fraction(1, 3)]))
def test_it_hat_against_matrix_inverse(seed, size, y0):
    s = random_stratification(random.Random(seed), size)
    hats = it_hat(s)
    oracle = zeta_inverse_oracle(s, y0)
    for v, c in hats.items():
        spec = c.specialize(y0)
        assert all(spec.get(sym, 0) == val for sym, val in oracle[v].items()), v


@given(st.integers(0, 10 ** 6), st.integers(1, 6))
def test_mobius_residuals_vanish(seed, size):
    s = random_stratification(random.Random(seed), size)
    assert all(r.is_zero() for r in mobius_residuals(s).values())


@given(st.integers(0, 10 ** 6), st.integers(2, 6))
def test_every_linear_extension_gives_the_same_answer(seed, size):
    rng = random.Random(seed)
    s = random_stratification(rng, size)
    base = it_hat(s)
    names = list(s.by_name)
    for _ in range(5):
        rng.shuffle(names)
        ext = sorted(names, key=lambda v: len(s.below(v)))
        assert it_hat(s, ext) == base


def test_not_a_linear_extension():
    s = random_stratification(random.Random(3), 3)
    s = Stratification(s.ambient_dim, s.strata, (("S0", "S1"),))
    with pytest.raises(StratificationError):
        it_hat(s, ["S1", "S0", "S2"])


@given(st.integers(0, 10 ** 6), st.integers(1, 5))
def test_consistent_data_reconciles_all_forms(seed, size):
    s = consistent_stratification(random.Random(seed), size)
    assert mt_stratified_ic(s) == mt_stratified_direct(s)
    assert mit_stratified_ic(s) == mit_stratified(s)
    report = consistency_report(s)
    assert report == {"mt_direct_equals_ic": True, "mit_forms_agree": True, "mobius_identity": True,
                      "boundary_matches_it_hat": True, "euler_specialization": True}


def two_strata(link=1 - Y):
    """A point p in the closure of a curve C inside a surface."""
    p = Stratum("p", 0, T_closure=C("[p]"), T_boundary=StratifiedClass(), IT_closure=C("[p]"),
                milnor_chi=-2 * Y, ih_cone_link_in_X=LaurentPolyY.constant(1))
    c = Stratum("C", 1, T_closure=C("[C]", 1 - Y) + C("[p]"), T_boundary=C("[p]"),
                IT_closure=C("[C]", 1 - Y) + C("[p]", link), milnor_spectrum=brieskorn_pham([2, 2]),
                ih_cone_link_chi={"p": link}, ih_cone_link_in_X=LaurentPolyY.constant(1))
    return Stratification(2, (p, c), (("p", "C"),))


def test_two_strata_by_hand():
    s = two_strata()
    hats = it_hat(s)
    assert hats["p"] == C("[p]")
    assert hats["C"] == C("[C]", 1 - Y)
    # p contributes [p] * (-2y); C contributes (1-y)[C] * y
    expected = C("[p]", -2 * Y) + C("[C]", (1 - Y) * Y)
    assert mt_stratified_direct(s) == expected
    assert mt_stratified_ic(s) == expected
    assert t_minus_it(s) == StratifiedClass()


def test_two_strata_link_mismatch_is_reported():
    # IT data built with link 1 - y, but the declared link is 1: ITHat no longer
    # equals the open-stratum class
    s = two_strata()
    c = s.by_name["C"]
    bad = Stratum("C", 1, T_closure=c.T_closure, T_boundary=c.T_boundary, IT_closure=c.IT_closure,
                  milnor_spectrum=c.milnor_spectrum, ih_cone_link_chi={"p": LaurentPolyY.constant(1)},
                  ih_cone_link_in_X=c.ih_cone_link_in_X)
    s = Stratification(2, (s.by_name["p"], bad), s.order)
    assert it_hat(s)["C"] == C("[C]", 1 - Y) + C("[p]", -Y)
    report = consistency_report(s)
    assert report["mt_direct_equals_ic"] is False
    assert report["boundary_matches_it_hat"] is False
    assert report["mobius_identity"] is True


def test_point_strata_reduce_to_isolated():
    sings = [("x", brieskorn_pham([2, 2, 2])), ("z", brieskorn_pham([3, 5, 2]))]
    s = Stratification(2, tuple(
        Stratum(n, 0, T_closure=C(f"[{n}]"), T_boundary=StratifiedClass(), IT_closure=C(f"[{n}]"),
                milnor_spectrum=sp) for n, sp in sings))
    iso = mt_isolated([(f"[{n}]", sp) for n, sp in sings])
    assert iso == C("[x]", -Y) + C("[z]", -8 * Y)
    assert mt_stratified_direct(s) == iso == mt_stratified_ic(s)


def test_mit_isolated():
    sings = [("[x]", brieskorn_pham([2, 2]), 1 + Y)]
    assert mit_isolated(sings) == StratifiedClass()
    with pytest.raises(DimensionMismatchError):
        mt_isolated([("[x]", brieskorn_pham([2, 2])), ("[z]", brieskorn_pham([2, 2, 2]))])


@pytest.mark.parametrize("n, r", [(n, r) for n in range(2, 6) for r in range(0, n)])
def test_smooth_locus_euler_specialization(n, r):
    ws = [2, 3] + [2] * (n - r - 1)
    sp = brieskorn_pham(ws)
    T = C("[S]", 1 - Y + Y ** 2)
    out = mt_smooth_locus(sp, n, r, T)
    assert out.coeff("[S]").evaluate(-1) == 3 * (-1) ** (n - r) * milnor_number(sp)


def test_smooth_locus_top_degree():
    # the transversal Milnor fibre of x^2 + y^2 + z^2 + w^2 contributes y^2 only
    out = mt_smooth_locus(brieskorn_pham([2, 2, 2, 2, 2]), 5, 1, C("[S]"))
    assert out == C("[S]", Y ** 2)


def test_smooth_locus_preconditions():
    with pytest.raises(DimensionMismatchError):
        mt_smooth_locus(brieskorn_pham([2, 2]), 3, 1, C("[S]"))
    with pytest.raises(DimensionMismatchError):
        mt_smooth_locus(brieskorn_pham([2, 2]), 1, 1, C("[S]"))
    with pytest.raises(DimensionMismatchError):
        mt_smooth_locus(brieskorn_pham([2, 2, 2]), 3, 1, StratifiedClass())


class TestErrors:
    def test_cycle(self):
        strata = (Stratum("a", 0), Stratum("b", 0))
        with pytest.raises(StratificationError):
            Stratification(2, strata, (("a", "b"), ("b", "a")))

    def test_unknown_and_duplicate_names(self):
        with pytest.raises(SchemaError):
            Stratification(2, (Stratum("a", 0),), (("a", "zz"),))
        with pytest.raises(SchemaError):
            Stratification(2, (Stratum("a", 0), Stratum("a", 1)))

    def test_singular_dimension_bound(self):
        with pytest.raises(DimensionMismatchError):
            Stratification(2, (Stratum("a", 2),))

    def test_missing_link(self):
        s = two_strata()
        c = s.by_name["C"]
        broken = Stratum("C", 1, T_closure=c.T_closure, T_boundary=c.T_boundary,
                         IT_closure=c.IT_closure, milnor_spectrum=c.milnor_spectrum)
        s = Stratification(2, (s.by_name["p"], broken), s.order)
        with pytest.raises(StratificationError, match="ih_cone_link_chi"):
            it_hat(s)
        assert consistency_report(s)["mobius_identity"] is None

    def test_nontrivial_monodromy_refused(self):
        s = two_strata()
        s = Stratification(2, s.strata, s.order, monodromy_trivial=False)
        for fn in (mt_stratified_direct, it_hat, mit_stratified):
            with pytest.raises(StratificationError, match="monodromy"):
                fn(s)

    def test_transversal_dimension(self):
        s = two_strata()
        c = s.by_name["C"]
        wrong = Stratum("C", 1, T_closure=c.T_closure, T_boundary=c.T_boundary,
                        milnor_spectrum=brieskorn_pham([2, 2, 2]))
        s = Stratification(2, (s.by_name["p"], wrong), s.order)
        with pytest.raises(DimensionMismatchError):
            mt_stratified_direct(s)
        assert consistency_report(s)["euler_specialization"] is False

    def test_missing_fibre_data(self):
        s = Stratification(2, (Stratum("p", 0, T_closure=C("[p]"), T_boundary=StratifiedClass()),))
        with pytest.raises(StratificationError):
            mt_stratified_direct(s)


class TestJson:
    def test_file_roundtrip_semantics(self, data_dir):
        import json
        s = stratification_from_json(json.loads((data_dir / "curve_through_point.json").read_text()))
        assert s.linear_extension() == ["p", "C"]
        assert mt_stratified_direct(s) == mt_stratified_ic(s)
        assert all(consistency_report(s).values())

    @given(st.dictionaries(st.sampled_from(["[a]", "[b]", "[c]"]),
                           st.dictionaries(st.integers(-2, 3), st.fractions(max_denominator=5),
                                           max_size=3).map(LaurentPolyY), max_size=3))
    def test_class_roundtrip(self, terms):
        c = StratifiedClass(terms)
        assert StratifiedClass.from_json(c.to_json()) == c

    @pytest.mark.parametrize("bad", [
        [], {"strata": []}, {"ambient_dim": 2, "strata": [{"name": "a"}]},
        {"ambient_dim": 2, "strata": [{"name": "a", "dim": 0, "colour": 1}]},
        {"ambient_dim": 2, "strata": [], "order": [["a"]]},
        {"ambient_dim": 2, "strata": [], "monodromy_trivial": "yes"},
    ])
    def test_schema_errors(self, bad):
        with pytest.raises(SchemaError):
            stratification_from_json(bad)


def test_class_arithmetic():
    a = C("[x]", Y) + C("[z]", 2)
    assert a - a == StratifiedClass()
    assert (a * (1 - Y)).coeff("[x]") == Y - Y ** 2
    assert (2 * a).coeff("[z]") == 4
    assert str(C("[x]")) == "[x]"
    assert a.specialize(-1) == {"[x]": -1, "[z]": 2}
    for u, v in itertools.permutations([a, C("[x]")]):
        assert u + v == v + u
