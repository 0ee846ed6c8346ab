"""Self-checks bundled with the CLI (``milnor-hodge verify``).

Each suite is a list of exact checks with fixed random seeds, so a run is
reproducible byte for byte.  A check can also be an *expected deviation*:
a known disagreement with a commonly quoted closed form that is reported but does
not count as a failure.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Callable

from .hodge import (chi_one, chi_y_of_spectrum, du_bois_test, hodge_table,
                    link_is_rational_homology_sphere, reduced_total_chi,
                    rhm_signature_check, signature_steenbrink)
from .kernel import LaurentPolyY
from .projective import (ProjectiveHypersurface, chi_y_singular, chi_y_virtual,
                         degree_mt, euler_defect)
from .spectrum import brieskorn_pham, is_symmetric, milnor_number
from .strata import (Stratification, StratifiedClass, Stratum, it_hat,
                     mt_isolated, mt_smooth_locus, mt_stratified_direct,
                     mt_stratified_ic)

SEED = 20240611

NODE_CURVE = brieskorn_pham([2, 2])
CUSP = brieskorn_pham([3, 2])
A1_SURFACE = brieskorn_pham([2, 2, 2])

GOLDEN_SIGNATURES = {
    "A_1": ([2, 2, 2], -1),
    "A_2": ([3, 2, 2], -2),
    "E_8": ([3, 5, 2], -8),
    "E_12": ([7, 3, 2], -8),
}


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failures: list[str] = field(default_factory=list)
    deviations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, label: str) -> None:
        if condition:
            self.passed += 1
        else:
            self.failures.append(label)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        line = f"{status} {self.name}: {self.passed} passed, {len(self.failures)} failed"
        if self.deviations:
            line += f", {len(self.deviations)} expected deviations"
        return line


def random_exponent_lists(rng: random.Random, count: int, max_vars: int = 6, max_exp: int = 9):
    return [[rng.randint(2, max_exp) for _ in range(rng.randint(1, max_vars))] for _ in range(count)]


def random_laurent(rng: random.Random, lo: int = -2, hi: int = 3) -> LaurentPolyY:
    return LaurentPolyY({e: Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                         for e in range(lo, hi + 1) if rng.random() < 0.5})


def random_poset(rng: random.Random, size: int) -> list[tuple[str, str]]:
    """Random strict order on S0..S{size-1}, compatible with index order."""
    names = [f"S{i}" for i in range(size)]
    return [(names[i], names[j]) for i, j in itertools.combinations(range(size), 2) if rng.random() < 0.45]


def random_stratification(rng: random.Random, size: int) -> Stratification:
    """Random link data on a random poset; every stratum singular."""
    order = random_poset(rng, size)
    dims = list(range(size))
    proto = Stratification(size, tuple(Stratum(f"S{i}", dims[i]) for i in range(size)), tuple(order))
    strata = []
    for i in range(size):
        name = f"S{i}"
        IT = StratifiedClass({f"[{w}]": random_laurent(rng) for w in proto.below(name) | {name}})
        links = {w: random_laurent(rng) for w in proto.below(name)}
        strata.append(Stratum(name, dims[i], IT_closure=IT, ih_cone_link_chi=links))
    return Stratification(size, tuple(strata), tuple(order))


def consistent_stratification(rng: random.Random, size: int) -> Stratification:
    """Data built from chosen open-stratum classes c_W so that
    T(V) = sum_{W<=V} c_W, T(V minus V) = sum_{W<V} c_W and
    IT(V) = sum_{W<=V} c_W * Ichi(W, V) hold identically."""
    order = random_poset(rng, size)
    ambient = size + 1
    proto = Stratification(ambient, tuple(Stratum(f"S{i}", i) for i in range(size)), tuple(order))
    opens = {f"S{i}": StratifiedClass({f"[S{j}]": random_laurent(rng, 0, 2) for j in range(i + 1)})
             for i in range(size)}
    strata = []
    for i in range(size):
        name = f"S{i}"
        below = proto.below(name)
        links = {w: random_laurent(rng) for w in below}
        T_bd = StratifiedClass()
        IT = opens[name]
        for w in below:
            T_bd = T_bd + opens[w]
            IT = IT + opens[w] * links[w]
        ws = [rng.randint(2, 4) for _ in range(ambient - i + 1)]
        strata.append(Stratum(name, i, T_closure=opens[name] + T_bd, T_boundary=T_bd,
                              IT_closure=IT, milnor_spectrum=brieskorn_pham(ws),
                              ih_cone_link_chi=links, ih_cone_link_in_X=random_laurent(rng)))
    return Stratification(ambient, tuple(strata), tuple(order))


def mobius_by_chains(s: Stratification) -> dict[str, StratifiedClass]:
    """ITHat(V) = sum_{W<=V} IT(W) * mu(W, V), where mu inverts the weighted
    zeta matrix zeta(W, V) = Ichi(cone L_{W,V}), zeta(V, V) = 1."""
    strata = s.by_name
    below = {v: s.below(v) for v in strata}

    def mu(w: str, v: str) -> LaurentPolyY:
        if w == v:
            return LaurentPolyY.constant(1)
        total = LaurentPolyY()
        for u in below[v]:
            if u == w or w in below[u]:
                total = total - mu(w, u) * strata[v].ih_cone_link_chi[u]
        return total

    out = {}
    for v in strata:
        acc = StratifiedClass()
        for w in below[v] | {v}:
            acc = acc + strata[w].IT_closure * mu(w, v)
        out[v] = acc
    return out


# ---------------------------------------------------------------------------

def suite_spectrum() -> SuiteResult:
    r = SuiteResult("1 spectrum mass and symmetry")
    for ws in random_exponent_lists(random.Random(SEED), 200):
        sp = brieskorn_pham(ws)
        r.check(milnor_number(sp) == prod(w - 1 for w in ws), f"mass {ws}")
        r.check(is_symmetric(sp), f"symmetry {ws}")
    return r


def suite_euler() -> SuiteResult:
    r = SuiteResult("2 chi_y Euler specialization")
    for ws in random_exponent_lists(random.Random(SEED), 200):
        sp = brieskorn_pham(ws)
        mu = milnor_number(sp)
        r.check(chi_y_of_spectrum(sp).at(-1) == mu, f"chi_-1 = mu for {ws}")
        r.check(reduced_total_chi(sp).at(-1) == (-1) ** sp.dim * mu, f"reduced total for {ws}")
    return r


def suite_signature() -> SuiteResult:
    r = SuiteResult("3 signature golden set")
    for label, (ws, sigma) in GOLDEN_SIGNATURES.items():
        r.check(signature_steenbrink(hodge_table(brieskorn_pham(ws))) == sigma, f"sigma({label}) = {sigma}")
    return r


def suite_local_hodge_index() -> SuiteResult:
    r = SuiteResult("4 chi_1 = signature on rational homology manifolds")
    for label, (ws, sigma) in GOLDEN_SIGNATURES.items():
        sp = brieskorn_pham(ws)
        if link_is_rational_homology_sphere(sp):
            r.check(chi_one(sp) == sigma and rhm_signature_check(sp), f"chi_1({label}) = sigma")
    node = NODE_CURVE
    r.check(not rhm_signature_check(node), "plane node check is false")
    r.check(signature_steenbrink(hodge_table(node)) == 0, "plane node sigma = 0")
    r.check(chi_one(node) == -1, "plane node chi_1 = -1")
    return r


def suite_du_bois() -> SuiteResult:
    r = SuiteResult("5 Du Bois test")
    r.check(du_bois_test(NODE_CURVE), "node passes")
    r.check(du_bois_test(A1_SURFACE), "A_1 surface passes")
    r.check(not du_bois_test(CUSP), "cusp fails")
    return r


def suite_projective() -> SuiteResult:
    r = SuiteResult("6 projective hypersurfaces")
    y = LaurentPolyY.y()
    r.check(chi_y_virtual(1, 2) == 1 - y + y ** 2, "P^2")
    r.check(chi_y_virtual(4, 2) == 2 - 20 * y + 2 * y ** 2, "quartic K3")
    r.check(chi_y_virtual(3, 1) == LaurentPolyY(), "plane cubic")
    r.check(chi_y_singular(ProjectiveHypersurface(3, 1, (("p", NODE_CURVE),))) == -y, "nodal cubic")
    r.check(chi_y_singular(ProjectiveHypersurface(3, 1, (("p", CUSP),))) == 1 - y, "cuspidal cubic")
    rng = random.Random(SEED + 6)
    for k in range(50):
        d, n = rng.randint(1, 5), rng.randint(1, 3)
        sings = tuple((f"x{i}", brieskorn_pham([rng.randint(2, 5) for _ in range(n + 1)]))
                      for i in range(rng.randint(0, 3)))
        h = ProjectiveHypersurface(d, n, sings)
        r.check(degree_mt(h).evaluate(-1) == euler_defect(sings, n), f"config {k}: d={d} n={n}")
    return r


def suite_palindromic() -> SuiteResult:
    """Checks y^n chi(1/y) = chi(y) literally.  Serre duality gives
    y^n chi(1/y) = (-1)^n chi(y), so odd n with chi != 0 fails."""
    r = SuiteResult("7 palindromicity y^n chi(1/y) = chi(y)")
    for d in range(1, 7):
        for n in range(0, 5):
            chi = chi_y_virtual(d, n)
            mirrored = chi.reciprocal() * LaurentPolyY.monomial(n)
            r.check(mirrored == chi, f"d={d} n={n}: y^n chi(1/y) = {mirrored}, chi = {chi}")
    return r


def suite_stratified() -> SuiteResult:
    r = SuiteResult("8 stratified calculus")
    rng = random.Random(SEED + 8)
    for k in range(100):
        s = random_stratification(rng, rng.randint(1, 6))
        hats = it_hat(s)
        r.check(hats == mobius_by_chains(s), f"poset {k}: recursion = chain Mobius inversion")
        alt = s.linear_extension()
        for _ in range(3):
            rng.shuffle(alt)
            alt.sort(key=lambda name: len(s.below(name)))
            r.check(it_hat(s, alt) == hats, f"poset {k}: order independence")
    # point-stratum degenerations
    for ws_list in ([[2, 2]], [[3, 2], [2, 2]], [[2, 2, 2], [3, 2, 2], [3, 5, 2]]):
        sings = [(f"x{i}", brieskorn_pham(ws)) for i, ws in enumerate(ws_list)]
        n = len(ws_list[0]) - 1
        s = Stratification(n, tuple(
            Stratum(name, 0, T_closure=StratifiedClass.of(f"[{name}]"), T_boundary=StratifiedClass(),
                    IT_closure=StratifiedClass.of(f"[{name}]"), milnor_spectrum=sp)
            for name, sp in sings))
        iso = mt_isolated([(f"[{name}]", sp) for name, sp in sings])
        r.check(mt_stratified_direct(s) == iso, f"direct = isolated for {ws_list}")
        r.check(mt_stratified_ic(s) == iso, f"ic = isolated for {ws_list}")
    for k in range(30):
        s = consistent_stratification(rng, rng.randint(1, 5))
        r.check(mt_stratified_ic(s) == mt_stratified_direct(s), f"consistent data {k}: ic = direct")
    return r


def suite_quadrics() -> SuiteResult:
    """f = x_1^2 + ... + x_{n-k+1}^2 on C^{n+1}: singular locus C^k."""
    r = SuiteResult("9 quadric family")
    y = LaurentPolyY.y()
    for n in range(2, 7):
        for k in range(1, n):
            c = n - k
            transversal = brieskorn_pham([2] * (c + 1))
            out = mt_smooth_locus(transversal, n, k, StratifiedClass.of("[C^k]"))
            coef = out.coeff("[C^k]")
            quoted = (-y) ** (-(-c // 2))
            if c % 2 == 0:
                r.check(out == StratifiedClass.of("[C^k]", (-y) ** (c // 2)), f"n={n} k={k}")
            else:
                r.check(coef.evaluate(-1) == (-1) ** c, f"n={n} k={k}: Euler value")
                if coef != quoted:
                    r.deviations.append(
                        f"n={n} k={k}: computed {coef}, quoted closed form (-y)^ceil((n-k)/2) = {quoted}; "
                        f"y=-1 value {coef.evaluate(-1)} matches the Euler oracle (-1)^(n-k)"
                    )
    return r


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "spectrum": suite_spectrum,
    "euler": suite_euler,
    "signature": suite_signature,
    "local-hodge-index": suite_local_hodge_index,
    "du-bois": suite_du_bois,
    "projective": suite_projective,
    "palindromic": suite_palindromic,
    "stratified": suite_stratified,
    "quadrics": suite_quadrics,
}


def run_all(names=None) -> list[SuiteResult]:
    chosen = list(SUITES) if not names else list(names)
    return [SUITES[name]() for name in chosen]
