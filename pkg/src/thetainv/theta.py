"""q-expansions of the lattice invariants: the theta series, spherical theta
series, the degree-(m,m) pair invariant, the degree-(1,1,1) triple invariant
and the general multi-degree invariant.

Everything is exact.  Cosines are never formed: all per-tuple quantities are
rewritten in terms of integer norms and the doubled pairing t = v^T A w, so
the only denominators are explicit powers of two and the structure constants.

The general invariant is evaluated by collapsing the sum over monomial
tuples with the reproducing kernel of the differential pairing: the sum over
a degree-2m orthonormal monomial basis of [projected basis element](x) times
the same element at v equals the harmonic projection (in x) of
(x . v)^{2m} / (2m)!.  The resulting integrand is a polynomial in the pair
values (x . v_l), and its sphere average is a universal polynomial in the
pairwise inner products of the v_l, evaluated here from the Gram data.  The
pair/triple fast paths below are independent implementations used as oracles
for this reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, isqrt, prod
from typing import Sequence

from .errors import (
    NoRationalEmbeddingError,
    RankMismatchError,
    ResourceLimitError,
)
from .harmonic import Poly, pair_poly, projector_coeffs
from .lattice import IntegralLattice, ShellTable, enumerate_shells
from .qseries import QSeries

_INT64_LIMIT = 2**62


def _table(lattice: IntegralLattice, order: int,
           shells: ShellTable | None, cache_dir: str | None = None) -> ShellTable:
    if shells is not None:
        if shells.lattice.gram2 != lattice.gram2 or shells.bound < order:
            raise ValueError("shell table does not cover the requested lattice/order")
        return shells
    return enumerate_shells(lattice, order, cache_dir=cache_dir)


def theta_series(lattice: IntegralLattice, order: int, *,
                 shells: ShellTable | None = None,
                 cache_dir: str | None = None) -> QSeries:
    """Vector counts by norm: coefficient of q^k is the size of shell k."""
    table = _table(lattice, order, shells, cache_dir)
    coeffs = [Fraction(len(table.shell(k))) for k in range(order + 1)]
    return QSeries(order, coeffs, weight=Fraction(lattice.rank, 2),
                   level=lattice.level())


# -- spherical theta series ----------------------------------------------

def default_embedding(lattice: IntegralLattice) -> list[list[Fraction]] | None:
    """Rational coordinate rows for lattices where one is immediate:
    gram2 = 2*I (identity) or diagonal with halves that are perfect squares."""
    a = lattice.gram2
    n = lattice.rank
    if any(a[i][j] != 0 for i in range(n) for j in range(n) if i != j):
        return None
    rows = []
    for i in range(n):
        half = a[i][i] // 2
        r = isqrt(half)
        if r * r != half:
            return None
        row = [Fraction(0)] * n
        row[i] = Fraction(r)
        rows.append(row)
    return rows


def _check_embedding(lattice: IntegralLattice, emb: Sequence[Sequence[Fraction]]):
    n = lattice.rank
    if len(emb) != n or any(len(r) != n for r in emb):
        raise RankMismatchError("embedding must be a square matrix of the lattice rank")
    for i in range(n):
        for j in range(i, n):
            dot = sum(Fraction(emb[i][k]) * Fraction(emb[j][k]) for k in range(n))
            if dot * 2 != lattice.gram2[i][j]:
                raise ValueError("embedding rows do not reproduce the Gram data")


def spherical_theta(lattice: IntegralLattice, h: Poly, order: int, *,
                    embedding: Sequence[Sequence[Fraction]] | None = None,
                    shells: ShellTable | None = None) -> QSeries:
    """Theta series weighted by a polynomial evaluated at vector coordinates.

    Needs rational coordinates: either an explicit embedding (rows = images
    of the basis vectors) or a lattice whose Gram data is diagonal with
    square halves.
    """
    if h.rank != lattice.rank:
        raise RankMismatchError("polynomial rank does not match the lattice")
    emb = embedding if embedding is not None else default_embedding(lattice)
    if emb is None:
        raise NoRationalEmbeddingError(
            "no rational coordinates available; pass an explicit embedding")
    _check_embedding(lattice, emb)
    n = lattice.rank
    table = _table(lattice, order, shells)
    coeffs = []
    for k in range(order + 1):
        total = Fraction(0)
        for v in table.shell(k):
            point = [sum(Fraction(v[i]) * emb[i][j] for i in range(n))
                     for j in range(n)]
            total += h.evaluate(point)
        coeffs.append(total)
    weight = None
    if h.is_homogeneous() and not h.is_zero():
        weight = Fraction(h.degree()) + Fraction(n, 2)
    return QSeries(order, coeffs, weight=weight, level=lattice.level())


# -- pair invariant --------------------------------------------------------

@lru_cache(maxsize=None)
def _pair_poly_cached(n: int, m: int):
    return pair_poly(n, m)


def pair_term(n: int, m: int, a: int, b: int, t: int) -> Fraction:
    """Contribution of one vector pair with norms a, b and doubled pairing t:
    the degree-2m pair polynomial evaluated cosine-free."""
    coeffs = _pair_poly_cached(n, m)
    total = Fraction(0)
    for k in range(m + 1):
        total += coeffs[k] * Fraction(t, 2) ** (2 * m - 2 * k) * (a * b) ** k
    return total


def pair_scale(n: int, m: int) -> int:
    """Integer clearing the denominators of every pair term:
    (2m)! 2^{2m} prod_{l<m} (n + 4m - 4 - 2l)."""
    return factorial(2 * m) * 2 ** (2 * m) * prod(n + 4 * m - 4 - 2 * l
                                                  for l in range(m))


def pair_term_scaled(lattice: IntegralLattice, v: Sequence[int],
                     w: Sequence[int], m: int) -> int:
    """The integer pair_scale(n, m) * pair_term for two explicit vectors.

    Integrality is visible termwise: with t = v^T A w each summand is
    (-1)^j (2m)!/((2m-2j)! j!) 2^j t^{2m-2j} (ab)^j prod_{l=j..m-1}(n+4m-4-2l).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    n = lattice.rank
    a = lattice.norm(v)
    b = lattice.norm(w)
    t = lattice.inner2(v, w)
    total = 0
    for j in range(m + 1):
        term = (-1) ** j * (factorial(2 * m) // (factorial(2 * m - 2 * j) * factorial(j)))
        term *= 2 ** j * t ** (2 * m - 2 * j) * (a * b) ** j
        term *= prod(n + 4 * m - 4 - 2 * l for l in range(j, m))
        total += term
    return total


def theta_pair(lattice: IntegralLattice, m: int, order: int, *,
               shells: ShellTable | None = None,
               threads: int = 1,
               cache_dir: str | None = None) -> QSeries:
    """Degree-(m,m) pair invariant, normalized as a plain sum of squared
    spherical theta series over an orthonormal harmonic basis.

    Coefficient of q^k: sum over shell pairs (k1, k2) with k1 + k2 = k of the
    pair-histogram buckets times pair_term(n, m, k1, k2, t).
    """
    n = lattice.rank
    table = _table(lattice, order, shells, cache_dir)
    cells = [(k1, k - k1) for k in range(order + 1) for k1 in range(k + 1)
             if table.shell(k1) and table.shell(k - k1)]
    table.ensure_pair_histograms(cells, threads=threads)
    coeffs = []
    for k in range(order + 1):
        total = Fraction(0)
        for k1 in range(k + 1):
            k2 = k - k1
            if not (table.shell(k1) and table.shell(k2)):
                continue
            for t, cnt in table.pair_histogram(k1, k2).items():
                total += cnt * pair_term(n, m, k1, k2, t)
        coeffs.append(total)
    return QSeries(order, coeffs, weight=4 * m + n, level=lattice.level())


# -- triple invariant -------------------------------------------------------

def triple_form(lattice: IntegralLattice, u: Sequence[int], v: Sequence[int],
                w: Sequence[int]) -> Fraction:
    """Cubic form in three vectors whose triple sums give the (1,1,1)
    invariant; denominator always divides 8.

    2 |u|^2 |v|^2 |w|^2 - n (|u|^2 <v,w>^2 + |v|^2 <u,w>^2 + |w|^2 <u,v>^2)
    + n^2 <v,w> <u,w> <u,v>.
    """
    n = lattice.rank
    a = lattice.norm(u)
    b = lattice.norm(v)
    c = lattice.norm(w)
    svw = Fraction(lattice.inner2(v, w), 2)
    suw = Fraction(lattice.inner2(u, w), 2)
    suv = Fraction(lattice.inner2(u, v), 2)
    return (2 * a * b * c
            - n * (a * svw**2 + b * suw**2 + c * suv**2)
            + n * n * svw * suw * suv)


def _pair_square_sum(table: ShellTable, ka: int, kb: int) -> Fraction:
    """Sum of <v,w>^2 over shell ka x shell kb."""
    total = sum(cnt * t * t for t, cnt in table.pair_histogram(ka, kb).items())
    return Fraction(total, 4)


def _triple_product_sum(table: ShellTable, ka: int, kb: int, kc: int) -> Fraction:
    """Sum of <u,v><u,w><v,w> over shells ka x kb x kc.

    Contracting the u slot: sum_{v,w} <v,w> * (v^T (A M A) w) / 8 with
    M = sum of u u^T over shell ka; the u slot is chosen largest so the
    remaining double loop is smallest.
    """
    order = sorted(((len(table.shell(k)), i) for i, k in enumerate((ka, kb, kc))),
                   reverse=True)
    slots = (ka, kb, kc)
    ia = order[0][1]
    ka2 = slots[ia]
    kb2, kc2 = (slots[i] for i in range(3) if i != ia)
    a = table.lattice.gram2
    n = table.lattice.rank
    mom = table.moment_matrix(ka2)
    am = [[sum(a[i][k] * mom[k][j] for k in range(n)) for j in range(n)]
          for i in range(n)]
    bmat = [[sum(am[i][k] * a[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]
    s1 = table.shell(kb2)
    s2 = table.shell(kc2)
    total = _bilinear_pair_sum(a, bmat, s1, s2, kb2, kc2, len(table.shell(ka2)), ka2)
    return Fraction(total, 8)


def _bilinear_pair_sum(a, bmat, s1, s2, k1, k2, na, ka) -> int:
    """Integer sum of (v^T a w)(v^T bmat w) over s1 x s2, numpy when safe."""
    n = len(a)
    if len(s1) * len(s2) >= 20000:
        try:
            import numpy as np
        except ImportError:
            np = None
        if np is not None:
            maxc = max((abs(c) for v in list(s1) + list(s2) for c in v), default=0)
            # |v^T a w| <= 2 sqrt(k1 k2); |v^T bmat w| <= 4 na ka sqrt(k1 k2)
            tb = 2 * isqrt(k1 * k2) + 2
            yb = 4 * na * ka * (isqrt(k1 * k2) + 1)
            if tb * yb * max(len(s1) * len(s2), 1) < _INT64_LIMIT \
                    and n * n * max(abs(x) for r in bmat for x in r) * max(maxc, 1) ** 2 < _INT64_LIMIT:
                av = np.array(a, dtype=np.int64)
                bv = np.array(bmat, dtype=np.int64)
                v1 = np.array(s1, dtype=np.int64)
                v2 = np.array(s2, dtype=np.int64)
                total = 0
                chunk = max(1, 4_000_000 // max(1, len(s1)))
                w1a = v1 @ av
                w1b = v1 @ bv
                for start in range(0, len(s2), chunk):
                    blk = v2[start:start + chunk].T
                    total += int(((w1a @ blk) * (w1b @ blk)).sum())
                return total
    rows_a = [tuple(sum(a[i][j] * w[j] for j in range(n)) for i in range(n))
              for w in s2]
    rows_b = [tuple(sum(bmat[i][j] * w[j] for j in range(n)) for i in range(n))
              for w in s2]
    total = 0
    for v in s1:
        nz = [(i, vi) for i, vi in enumerate(v) if vi]
        for aw, bw in zip(rows_a, rows_b):
            x = sum(vi * aw[i] for i, vi in nz)
            if x:
                total += x * sum(vi * bw[i] for i, vi in nz)
    return total


def theta_triple(lattice: IntegralLattice, order: int, *,
                 shells: ShellTable | None = None,
                 cache_dir: str | None = None) -> QSeries:
    """Degree-(1,1,1) invariant: n times the triple sums of triple_form,
    computed through pair statistics (never a raw triple loop).

    For each shell composition (k1,k2,k3) the triple sum splits into a
    volume term, three histogram square sums and one contracted product sum.
    """
    n = lattice.rank
    table = _table(lattice, order, shells, cache_dir)
    sizes = {k: len(table.shell(k)) for k in range(order + 1)}
    cell_cache: dict[tuple[int, int, int], Fraction] = {}

    def cell(k1: int, k2: int, k3: int) -> Fraction:
        key = tuple(sorted((k1, k2, k3)))
        got = cell_cache.get(key)
        if got is not None:
            return got
        n1, n2, n3 = sizes[key[0]], sizes[key[1]], sizes[key[2]]
        a, b, c = key
        total = Fraction(2 * a * b * c * n1 * n2 * n3)
        total -= n * (a * n1 * _pair_square_sum(table, b, c)
                      + b * n2 * _pair_square_sum(table, a, c)
                      + c * n3 * _pair_square_sum(table, a, b))
        total += n * n * _triple_product_sum(table, a, b, c)
        cell_cache[key] = total
        return total

    coeffs = []
    for k in range(order + 1):
        total = Fraction(0)
        for k1 in range(1, k + 1):
            for k2 in range(1, k - k1 + 1):
                k3 = k - k1 - k2
                if k3 < 1:
                    continue
                if sizes[k1] and sizes[k2] and sizes[k3]:
                    total += cell(k1, k2, k3)
        coeffs.append(n * total)
    return QSeries(order, coeffs, weight=Fraction(3 * n + 12, 2),
                   level=lattice.level())


# -- general invariant ------------------------------------------------------

_NORMALIZATIONS = ("general", "pair", "triple")


@dataclass(frozen=True)
class InvariantRequest:
    """Degrees, truncation order and normalization of a requested invariant."""

    degrees: tuple[int, ...]
    order: int
    normalization: str = "general"
    max_tuples: int = 2_000_000

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if len(self.degrees) < 1:
            raise ValueError("at least one degree is required")
        if any(m < 0 for m in self.degrees):
            raise ValueError("degrees must be non-negative")
        if list(self.degrees) != sorted(self.degrees):
            raise ValueError("degrees must be non-decreasing")
        if self.order < 0:
            raise ValueError("order must be >= 0")
        if self.normalization not in _NORMALIZATIONS:
            raise ValueError(f"normalization must be one of {_NORMALIZATIONS}")
        if self.normalization == "pair" and (
                len(self.degrees) != 2 or self.degrees[0] != self.degrees[1]):
            raise ValueError("pair normalization needs degrees (m, m)")
        if self.normalization == "triple" and self.degrees != (1, 1, 1):
            raise ValueError("triple normalization needs degrees (1, 1, 1)")


@lru_cache(maxsize=None)
def _moment_patterns(n: int, exps: tuple[int, ...]):
    """Sphere average of prod_l (x . y_l)^{e_l} as a polynomial in the pairwise
    products s_ab = <y_a, y_b>.

    Returns tuples (diag, off, coeff): the monomial prod_a s_aa^{diag_a} *
    prod_{a<b} s_ab^{off_{ab}} with its rational coefficient.  Derived from
    the perfect-matching expansion of spherical monomial averages: each
    matching matrix c contributes prod e_a! / (prod_{a<b} c_ab! prod_a
    2^{c_aa} c_aa!) over prod_{j < p} (n + 2j).
    """
    k = len(exps)
    total = sum(exps)
    if total % 2:
        return ()
    p = total // 2
    den = prod(n + 2 * j for j in range(p))
    pairs = [(a, b) for a in range(k) for b in range(a + 1, k)]
    out = []

    def descend(idx: int, rem: list[int], chosen: list[int]):
        if idx == len(pairs):
            if any(r % 2 for r in rem):
                return
            diag = tuple(r // 2 for r in rem)
            weight = prod(factorial(e) for e in exps)
            for c in chosen:
                weight //= factorial(c)
            for c in diag:
                weight //= 2**c * factorial(c)
            out.append((diag, tuple(chosen), Fraction(weight, den)))
            return
        a, b = pairs[idx]
        for c in range(min(rem[a], rem[b]) + 1):
            rem[a] -= c
            rem[b] -= c
            chosen.append(c)
            descend(idx + 1, rem, chosen)
            chosen.pop()
            rem[a] += c
            rem[b] += c

    descend(0, list(exps), [])
    return tuple(out)


def _composition_poly(n: int, degrees: tuple[int, ...],
                      norms: tuple[int, ...]) -> dict[tuple[int, ...], Fraction]:
    """Per-tuple value of the collapsed kernel sum as a polynomial in the
    doubled pairings t_ab = 2 <v_a, v_b>, for vectors with the given norms.

    Slot l carries phi_l(x . v) = sum_j (-1)^j r_{j,2m_l} norm^j / (2m_l-2j)!
    times (x . v)^{2m_l - 2j}; the product is averaged with _moment_patterns
    and the diagonal s_aa are the known norms.  Off-diagonal s_ab = t_ab / 2,
    so each monomial coefficient absorbs a power of two.
    """
    k = len(degrees)
    slot_coeffs = []
    for m, a in zip(degrees, norms):
        rk = projector_coeffs(n, 2 * m).coeffs
        slot_coeffs.append([
            Fraction((-1) ** j) * rk[j] * Fraction(a) ** j / factorial(2 * m - 2 * j)
            for j in range(m + 1)
        ])
    poly: dict[tuple[int, ...], Fraction] = {}

    def descend(l: int, jt: list[int], coef: Fraction):
        if coef == 0:
            return
        if l == k:
            exps = tuple(2 * degrees[i] - 2 * jt[i] for i in range(k))
            for diag, off, w in _moment_patterns(n, exps):
                c = coef * w
                for a_idx in range(k):
                    if diag[a_idx]:
                        c *= Fraction(norms[a_idx]) ** diag[a_idx]
                c /= Fraction(2) ** sum(off)  # s_ab = t_ab / 2
                if c:
                    poly[off] = poly.get(off, Fraction(0)) + c
            return
        for j in range(degrees[l] + 1):
            descend(l + 1, jt + [j], coef * slot_coeffs[l][j])

    descend(0, [], Fraction(1))
    return {e: c for e, c in poly.items() if c != 0}


def _compositions(total: int, slots: int):
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


def theta_general(lattice: IntegralLattice, request: InvariantRequest, *,
                  shells: ShellTable | None = None,
                  cache_dir: str | None = None) -> QSeries:
    """General invariant for an arbitrary non-decreasing degree list.

    The raw normalization is the plain orthonormal-basis sum; "pair" and
    "triple" rescale to the conventions used by the explicit identities
    (prod_{j<2m} (n+2j) and n^4 (n+2)(n+4) respectively).
    """
    degrees = request.degrees
    k = len(degrees)
    n = lattice.rank
    order = request.order
    table = _table(lattice, order, shells, cache_dir)
    sizes = {kk: len(table.shell(kk)) for kk in range(order + 1)}

    comps: list[tuple[int, tuple[int, ...]]] = []
    budget = 0
    for kap in range(order + 1):
        for comp in _compositions(kap, k):
            cnt = prod(sizes[c] for c in comp)
            if cnt == 0:
                continue
            budget += cnt
            comps.append((kap, comp))
    if budget > request.max_tuples:
        raise ResourceLimitError(
            f"invariant needs {budget} lattice tuples, over the budget of "
            f"{request.max_tuples}")

    coeffs = [Fraction(0)] * (order + 1)
    poly_cache: dict[tuple[int, ...], dict] = {}
    avec_cache: dict[int, list[tuple[int, ...]]] = {}
    a = lattice.gram2

    def avec(shell_k: int) -> list[tuple[int, ...]]:
        got = avec_cache.get(shell_k)
        if got is None:
            got = [tuple(sum(a[i][j] * v[j] for j in range(n)) for i in range(n))
                   for v in table.shell(shell_k)]
            avec_cache[shell_k] = got
        return got

    for kap, comp in comps:
        poly = poly_cache.get(comp)
        if poly is None:
            poly = _composition_poly(n, degrees, comp)
            poly_cache[comp] = poly
        if not poly:
            continue
        const = poly.get((0,) * (k * (k - 1) // 2), Fraction(0))
        cross = {e: c for e, c in poly.items() if any(e)}
        total = const * prod(sizes[c] for c in comp)
        if cross:
            if k == 2:
                hist = table.pair_histogram(comp[0], comp[1])
                for t, cnt in hist.items():
                    val = Fraction(0)
                    for (e,), c in cross.items():
                        val += c * t**e
                    total += cnt * val
            else:
                total += _cross_sum(table, comp, cross, avec)
        coeffs[kap] += total

    scale = Fraction(1)
    weight = Fraction(n * k, 2) + 2 * sum(degrees)
    if request.normalization == "pair":
        scale = Fraction(prod(n + 2 * j for j in range(2 * degrees[0])))
    elif request.normalization == "triple":
        scale = Fraction(n**4 * (n + 2) * (n + 4))
    return QSeries(order, [scale * c for c in coeffs], weight=weight,
                   level=lattice.level())


def _cross_sum(table: ShellTable, comp: tuple[int, ...], cross: dict,
               avec) -> Fraction:
    """Sum the off-diagonal polynomial over all vector tuples of the
    composition, bucketing tuples by their vector of doubled pairings."""
    k = len(comp)
    pairs = [(x, y) for x in range(k) for y in range(x + 1, k)]
    shells = [table.shell(c) for c in comp]
    arows = [avec(c) for c in comp]
    hist: dict[tuple[int, ...], int] = {}
    tvals = [0] * len(pairs)
    pair_pos = {pq: i for i, pq in enumerate(pairs)}

    def descend(slot: int, chosen_idx: list[int]):
        if slot == k:
            key = tuple(tvals)
            hist[key] = hist.get(key, 0) + 1
            return
        for idx, v in enumerate(shells[slot]):
            for prev in range(slot):
                av = arows[prev][chosen_idx[prev]]
                tvals[pair_pos[(prev, slot)]] = sum(
                    av[i] * v[i] for i in range(len(v)))
            chosen_idx.append(idx)
            descend(slot + 1, chosen_idx)
            chosen_idx.pop()

    descend(0, [])
    total = Fraction(0)
    for key, cnt in hist.items():
        val = Fraction(0)
        for exps, c in cross.items():
            term = c
            for t, e in zip(key, exps):
                if e:
                    term *= t**e
            val += term
        total += cnt * val
    return total


# -- integrality report -----------------------------------------------------

@dataclass(frozen=True)
class IntegralityReport:
    """Outcome of the integer-coefficient certificates for one lattice."""

    lattice: str
    rank: int
    m: int
    order: int
    min_norm: int | None
    pair_scale: int
    pair_ok: bool
    pair_failure: tuple[int, Fraction] | None
    triple_ok: bool
    triple_failure: tuple[int, Fraction] | None

    @property
    def ok(self) -> bool:
        return self.pair_ok and self.triple_ok


def integrality_report(lattice: IntegralLattice, m: int, order: int, *,
                       shells: ShellTable | None = None,
                       threads: int = 1) -> IntegralityReport:
    """Check that pair_scale(n,m) times the (m,m) invariant and 8/n times the
    (1,1,1) invariant have integer q-coefficients up to the given order."""
    if m < 1:
        raise ValueError("m must be >= 1")
    n = lattice.rank
    table = _table(lattice, order, shells)
    scal = pair_scale(n, m)
    series = theta_pair(lattice, m, order, shells=table, threads=threads)
    pair_ok, pair_fail = True, None
    for k in range(order + 1):
        val = scal * series.coeff(k)
        if val.denominator != 1:
            pair_ok, pair_fail = False, (k, val)
            break
    tri = theta_triple(lattice, order, shells=table)
    tri_ok, tri_fail = True, None
    for k in range(order + 1):
        val = Fraction(8, n) * tri.coeff(k)
        if val.denominator != 1:
            tri_ok, tri_fail = False, (k, val)
            break
    return IntegralityReport(
        lattice=lattice.label(), rank=n, m=m, order=order,
        min_norm=table.min_norm(), pair_scale=scal,
        pair_ok=pair_ok, pair_failure=pair_fail,
        triple_ok=tri_ok, triple_failure=tri_fail)


def invariant_metadata(lattice: IntegralLattice, degrees: Sequence[int]) -> dict:
    """Weight, level and character flag attached to a computed invariant."""
    n = lattice.rank
    k = len(degrees)
    meta = {
        "weight": Fraction(n * k, 2) + 2 * sum(degrees),
        "level": lattice.level(),
        "character": None,
    }
    if k % 2 == 1:
        meta["character"] = f"kronecker({lattice.discriminant()}|.)"
    return meta
