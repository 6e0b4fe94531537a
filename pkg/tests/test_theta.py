import random
from fractions import Fraction
from itertools import product
from math import prod

import pytest

from thetainv.errors import (
    NoRationalEmbeddingError,
    ResourceLimitError,
)
from thetainv.harmonic import Poly, harmonic_project
from thetainv.lattice import change_basis, enumerate_shells, random_unimodular, validate_lattice
from thetainv.theta import (
    InvariantRequest,
    integrality_report,
    invariant_metadata,
    pair_scale,
    pair_term,
    pair_term_scaled,
    spherical_theta,
    theta_general,
    theta_pair,
    theta_series,
    theta_triple,
    triple_form,
)


def z(n):
    return validate_lattice([[2 if i == j else 0 for j in range(n)] for i in range(n)],
                            name=f"z{n}")


# -- theta series ---------------------------------------------------------------

def test_theta_z1():
    s = theta_series(z(1), 4)
    assert s.coeffs == (1, 2, 0, 0, 2)
    assert s.weight == Fraction(1, 2)
    assert s.level == 4


def test_theta_e8(e8, e8_shells6):
    s = theta_series(e8, 2, shells=e8_shells6)
    assert s.coeffs == (1, 240, 2160)
    assert s.weight == 4 and s.level == 1


def test_theta_a2_brute(a2):
    want = {}
    for v in product(range(-4, 5), repeat=2):
        k = a2.norm(v)
        if k <= 4:
            want[k] = want.get(k, 0) + 1
    s = theta_series(a2, 4)
    assert list(s.coeffs) == [want.get(k, 0) for k in range(5)]
    assert s.coeffs == (1, 6, 0, 6, 6)


# -- spherical theta series -------------------------------------------------------

def test_spherical_constant_recovers_theta():
    lat = z(2)
    h = Poly.constant(2, 1)
    assert spherical_theta(lat, h, 4) == theta_series(lat, 4)


def test_spherical_difference_cancels_on_z2():
    lat = z(2)
    h = Poly(2, {(2, 0): 1, (0, 2): -1})
    s = spherical_theta(lat, h, 4)
    assert s.coeff(1) == 0


def test_spherical_needs_embedding(a2):
    h = Poly.constant(2, 1)
    with pytest.raises(NoRationalEmbeddingError):
        spherical_theta(a2, h, 2)


def test_spherical_rejects_bad_embedding():
    lat = z(2)
    bad = [[Fraction(1), Fraction(1)], [Fraction(0), Fraction(1)]]
    with pytest.raises(ValueError):
        spherical_theta(lat, Poly.constant(2, 1), 2, embedding=bad)


def _e8_embedding():
    """Rational coordinates for the norm-halved root lattice: half-integer
    simple-root rows composed with a rational rotation shrinking norms by 2."""
    half = Fraction(1, 2)
    b = [
        [half, -half, -half, -half, -half, -half, -half, half],
        [1, 1, 0, 0, 0, 0, 0, 0],
        [-1, 1, 0, 0, 0, 0, 0, 0],
        [0, -1, 1, 0, 0, 0, 0, 0],
        [0, 0, -1, 1, 0, 0, 0, 0],
        [0, 0, 0, -1, 1, 0, 0, 0],
        [0, 0, 0, 0, -1, 1, 0, 0],
        [0, 0, 0, 0, 0, -1, 1, 0],
    ]
    r = [[Fraction(0)] * 8 for _ in range(8)]
    for blk in range(4):
        i = 2 * blk
        r[i][i] = half
        r[i][i + 1] = half
        r[i + 1][i] = -half
        r[i + 1][i + 1] = half
    return [[sum(Fraction(b[i][k]) * r[k][j] for k in range(8)) for j in range(8)]
            for i in range(8)]


def test_e8_spherical_theta_of_degree_two_harmonics_vanishes(e8, e8_shells6):
    emb = _e8_embedding()
    h1 = harmonic_project(Poly.monomial(8, (2, 0, 0, 0, 0, 0, 0, 0)))
    h2 = Poly.monomial(8, (1, 1, 0, 0, 0, 0, 0, 0))
    for h in (h1, h2):
        s = spherical_theta(e8, h, 3, embedding=emb, shells=e8_shells6)
        assert s.is_zero()
        assert s.weight == Fraction(2) + Fraction(8, 2)


# -- pair terms -------------------------------------------------------------------

def test_pair_term_zero_vector_contributes_nothing(a2):
    zero = (0, 0)
    v = (1, 0)
    for m in (1, 2, 3):
        assert pair_term_scaled(a2, zero, v, m) == 0
        assert pair_term(a2.rank, m, 0, a2.norm(v), 0) == 0


def test_pair_term_scaled_matches_displayed_sum():
    # worked example on the square lattice: v=(1,0), w=(1,1), m=1
    from math import factorial
    lat = z(2)
    v, w, m, n = (1, 0), (1, 1), 1, 2
    a, b, t = lat.norm(v), lat.norm(w), lat.inner2(v, w)
    direct = sum(
        (-1) ** k * factorial(2 * m) // (factorial(2 * m - 2 * k) * factorial(k))
        * 2 ** (2 * m - k) * Fraction(t, 2) ** (2 * m - 2 * k) * (a * b) ** k
        * prod(n + 4 * m - 4 - 2 * l for l in range(k, m))
        for k in range(m + 1))
    got = pair_term_scaled(lat, v, w, m)
    assert got == direct == 0


def test_pair_term_scaled_is_scale_times_pair_term(a2, skew3):
    rng = random.Random(23)
    for lat in (a2, skew3, z(4)):
        n = lat.rank
        for _ in range(200):
            m = rng.randint(1, 4)
            v = tuple(rng.randint(-3, 3) for _ in range(n))
            w = tuple(rng.randint(-3, 3) for _ in range(n))
            scaled = pair_term_scaled(lat, v, w, m)
            assert isinstance(scaled, int)
            term = pair_term(n, m, lat.norm(v), lat.norm(w), lat.inner2(v, w))
            assert Fraction(scaled) == pair_scale(n, m) * term


# -- pair invariant -----------------------------------------------------------------

def test_pair_m0_is_theta_squared(a2):
    assert theta_pair(a2, 0, 4) == theta_series(a2, 4) ** 2


def test_pair_z1_degree_one_vanishes():
    assert theta_pair(z(1), 1, 8).is_zero()


def test_pair_e8_q2(e8, e8_shells6):
    s = theta_pair(e8, 4, 2, shells=e8_shells6)
    assert s.coeff(2) == Fraction(3, 896)
    assert s.weight == 4 * 4 + 8 and s.level == 1


def test_pair_vanishing_threshold(skew3, diag246):
    # coefficients vanish for 0 < k < 2 * (minimal norm)
    for lat in (skew3, diag246):
        table = enumerate_shells(lat, 4)
        l0 = table.min_norm()
        for m in (1, 2):
            s = theta_pair(lat, m, 4, shells=table)
            for k in range(1, min(2 * l0, 5)):
                assert s.coeff(k) == 0


def test_pair_matches_naive_pair_loop(a2, skew2, diag246):
    for lat in (a2, skew2, diag246):
        n = lat.rank
        order = 4
        table = enumerate_shells(lat, order)
        for m in (1, 2):
            fast = theta_pair(lat, m, order, shells=table)
            naive = []
            for k in range(order + 1):
                acc = Fraction(0)
                for k1 in range(k + 1):
                    for v in table.shell(k1):
                        for w in table.shell(k - k1):
                            acc += pair_term(n, m, k1, k - k1, lat.inner2(v, w))
                naive.append(acc)
            assert list(fast.coeffs) == naive


def test_pair_threads_deterministic(d4):
    a = theta_pair(d4, 2, 4, threads=1)
    b = theta_pair(d4, 2, 4, threads=3)
    assert a == b


# -- triple form --------------------------------------------------------------------

def test_triple_form_zero_argument(a2):
    assert triple_form(a2, (0, 0), (1, 0), (0, 1)) == 0
    assert triple_form(a2, (1, 0), (0, 0), (0, 1)) == 0
    assert triple_form(a2, (1, 0), (0, 1), (0, 0)) == 0


def test_triple_form_rank_one_vanishes():
    lat = validate_lattice([[6]])
    rng = random.Random(1)
    for _ in range(20):
        u, v, w = ((rng.randint(-4, 4),) for _ in range(3))
        assert triple_form(lat, u, v, w) == 0


def test_triple_form_equal_unit_vectors():
    lat = z(3)
    u = (1, 0, 0)
    assert triple_form(lat, u, u, u) == 2  # (n-1)(n-2) at norm one


def test_triple_form_denominator_divides_eight(skew3, a2):
    rng = random.Random(9)
    for lat in (skew3, a2):
        n = lat.rank
        for _ in range(100):
            u, v, w = (tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(3))
            val = triple_form(lat, u, v, w)
            assert 8 % val.denominator == 0


# -- triple invariant ------------------------------------------------------------------

def _triple_brute(lat, order):
    table = enumerate_shells(lat, order)
    vectors = [(k, v) for k in range(order + 1) for v in table.shell(k)]
    acc = [Fraction(0)] * (order + 1)
    for ku, u in vectors:
        for kv, v in vectors:
            if ku + kv > order:
                continue
            for kw, w in vectors:
                k = ku + kv + kw
                if k <= order:
                    acc[k] += triple_form(lat, u, v, w)
    n = lat.rank
    return [n * x for x in acc]


def test_triple_z1_vanishes():
    assert theta_triple(z(1), 6).is_zero()


def test_triple_e8_needs_three_nonzero_vectors(e8, e8_shells6):
    s = theta_triple(e8, 2, shells=e8_shells6)
    assert s.coeffs == (0, 0, 0)


def test_triple_a2_matches_brute_force(a2):
    fast = theta_triple(a2, 3)
    assert list(fast.coeffs) == _triple_brute(a2, 3)


def test_triple_asymmetric_lattices_nonzero(diag246, skew3):
    got246 = theta_triple(diag246, 4)
    assert list(got246.coeffs) == _triple_brute(diag246, 4) == [0, 0, 0, 48, -144]
    got3 = theta_triple(skew3, 4)
    assert list(got3.coeffs) == _triple_brute(skew3, 4) == [0, 0, 0, 48, -180]
    assert got3.weight == Fraction(3 * 3 + 12, 2)


# -- general invariant ------------------------------------------------------------------

def test_general_degree_zero_is_theta(a2):
    got = theta_general(a2, InvariantRequest((0,), 4))
    assert got == theta_series(a2, 4)


def test_general_single_positive_degree_vanishes(skew2):
    # the sphere average of one projected kernel factor is zero
    got = theta_general(skew2, InvariantRequest((1,), 4))
    assert got.is_zero()


@pytest.mark.parametrize("m", [1, 2])
def test_general_pair_equivalence(skew2, m):
    n = skew2.rank
    gen = theta_general(skew2, InvariantRequest((m, m), 4))
    pair = theta_pair(skew2, m, 4)
    c2m = Fraction(1, prod(n + 2 * j for j in range(2 * m)))
    assert gen == c2m * pair
    assert not gen.is_zero()


def test_general_triple_equivalence(skew3):
    n = skew3.rank
    gen = theta_general(skew3, InvariantRequest((1, 1, 1), 4))
    tri = theta_triple(skew3, 4)
    assert Fraction(n**4 * (n + 2) * (n + 4)) * gen == tri


def test_general_normalization_shortcuts(skew2, skew3):
    gen_pair = theta_general(skew2, InvariantRequest((1, 1), 4, "pair"))
    assert gen_pair == theta_pair(skew2, 1, 4)
    gen_tri = theta_general(skew3, InvariantRequest((1, 1, 1), 3, "triple"))
    assert gen_tri == theta_triple(skew3, 3)


def test_general_mixed_degrees_basis_invariant(skew3):
    # no fast path exists for (1,2); check the defining invariance instead
    rng = random.Random(31)
    base = theta_general(skew3, InvariantRequest((1, 2), 3))
    for _ in range(5):
        u = random_unimodular(3, rng)
        moved = change_basis(skew3, u)
        assert theta_general(moved, InvariantRequest((1, 2), 3)) == base


def test_request_validation():
    with pytest.raises(ValueError):
        InvariantRequest((), 4)
    with pytest.raises(ValueError):
        InvariantRequest((2, 1), 4)
    with pytest.raises(ValueError):
        InvariantRequest((1, 1), -1)
    with pytest.raises(ValueError):
        InvariantRequest((1, 1), 4, "nope")
    with pytest.raises(ValueError):
        InvariantRequest((1, 2), 4, "pair")
    with pytest.raises(ValueError):
        InvariantRequest((1, 1), 4, "triple")


def test_resource_limit(skew2):
    with pytest.raises(ResourceLimitError):
        theta_general(skew2, InvariantRequest((1, 1), 4, max_tuples=10))


# -- integrality report --------------------------------------------------------------------

def test_integrality_report_e8(e8, e8_shells6):
    rep = integrality_report(e8, 4, 5, shells=e8_shells6)
    assert rep.ok and rep.pair_ok and rep.triple_ok
    assert rep.min_norm == 1
    assert rep.pair_scale == pair_scale(8, 4)


def test_integrality_report_z2():
    rep = integrality_report(z(2), 1, 8)
    assert rep.ok


def test_integrality_report_catches_violations(skew3):
    # sanity: the report inspects exactly the scaled coefficients
    rep = integrality_report(skew3, 1, 4)
    assert rep.ok
    assert rep.pair_failure is None and rep.triple_failure is None


# -- metadata --------------------------------------------------------------------------------

def test_invariant_metadata(e8, skew3):
    meta = invariant_metadata(e8, (4, 4))
    assert meta["weight"] == 24 and meta["level"] == 1 and meta["character"] is None
    meta3 = invariant_metadata(skew3, (1, 1, 1))
    assert meta3["weight"] == Fraction(3 * 3, 2) + 6
    assert meta3["character"] is not None
