"""Integral lattices given by the doubled Gram matrix, with exact shell
enumeration and pair statistics.

A lattice of rank n is stored through the symmetric integer matrix
``gram2`` = twice the Gram matrix, which must have even diagonal entries.
Squared vector lengths are (1/2) v^T gram2 v and are always integers; the
doubled pairing v^T gram2 w keeps all pair statistics integral.

Shell enumeration uses an exact LDL^T decomposition over the rationals and
integer square roots only; no floating point enters any numeric path.
"""

from __future__ import annotations

import json
import os
import hashlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Iterable, Sequence

from .errors import (
    NotPositiveDefiniteError,
    NotSymmetricError,
    OddDiagonalError,
    RankMismatchError,
)

Vector = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]

SHELL_CACHE_FORMAT = 1

# int64 safety margin for the numpy fast paths
_INT64_LIMIT = 2**62


def _as_int_matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def bareiss_minors(a: Sequence[Sequence[int]]) -> list[int]:
    """Leading principal minors of a square integer matrix via fraction-free
    elimination (no pivoting; a zero pivot aborts with the minors found so far)."""
    n = len(a)
    m = [list(row) for row in a]
    minors = []
    prev = 1
    for k in range(n):
        minors.append(m[k][k])
        if m[k][k] == 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return minors


def det_int(a: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix (Bareiss with row pivoting)."""
    n = len(a)
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def invert_rational(a: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Exact inverse of an integer matrix over the rationals."""
    n = len(a)
    aug = [[Fraction(a[i][j]) for j in range(n)]
           + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True)
class IntegralLattice:
    """Positive-definite integral lattice stored as twice its Gram matrix."""

    gram2: IntMatrix
    name: str | None = None

    @property
    def rank(self) -> int:
        return len(self.gram2)

    def inner2(self, v: Sequence[int], w: Sequence[int]) -> int:
        """Doubled inner product v^T gram2 w (twice the geometric pairing)."""
        n = self.rank
        if len(v) != n or len(w) != n:
            raise RankMismatchError(f"vectors must have length {n}")
        a = self.gram2
        total = 0
        for i in range(n):
            vi = v[i]
            if vi:
                row = a[i]
                total += vi * sum(row[j] * w[j] for j in range(n))
        return total

    def norm(self, v: Sequence[int]) -> int:
        """Integer squared length (1/2) v^T gram2 v."""
        q = self.inner2(v, v)
        assert q % 2 == 0
        return q // 2

    def discriminant(self) -> int:
        return det_int(self.gram2)

    def level(self) -> int:
        """Smallest N > 0 with N * gram2^{-1} integral and even on the diagonal."""
        inv = invert_rational(self.gram2)
        m = 1
        for row in inv:
            for x in row:
                m = lcm(m, x.denominator)
        diag_even = all((m * inv[i][i]).numerator % 2 == 0 for i in range(self.rank))
        return m if diag_even else 2 * m

    def label(self) -> str:
        return self.name if self.name else f"lattice-{content_hash(self.gram2)[:12]}"

    def __repr__(self) -> str:
        return f"IntegralLattice(rank={self.rank}, name={self.name!r})"


def validate_lattice(gram2: Iterable[Iterable[int]], name: str | None = None) -> IntegralLattice:
    """Check symmetry, even diagonal and positive definiteness; certify exactly."""
    a = _as_int_matrix(gram2)
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise NotSymmetricError("matrix must be square and non-empty")
    for i in range(n):
        for j in range(i + 1, n):
            if a[i][j] != a[j][i]:
                raise NotSymmetricError(f"entries ({i},{j}) and ({j},{i}) differ")
    for i in range(n):
        if a[i][i] % 2 != 0:
            raise OddDiagonalError(f"diagonal entry ({i},{i}) = {a[i][i]} is odd")
    minors = bareiss_minors(a)
    for k, mk in enumerate(minors):
        if mk <= 0:
            raise NotPositiveDefiniteError(
                f"leading principal minor of order {k + 1} is {mk}")
    return IntegralLattice(a, name)


def change_basis(lattice: IntegralLattice, u: Iterable[Iterable[int]]) -> IntegralLattice:
    """Lattice with Gram data U^T A U for a unimodular integer matrix U."""
    um = _as_int_matrix(u)
    n = lattice.rank
    if len(um) != n or any(len(row) != n for row in um):
        raise RankMismatchError("basis-change matrix has wrong shape")
    if det_int(um) not in (1, -1):
        raise ValueError("basis-change matrix must have determinant +-1")
    a = lattice.gram2
    au = [[sum(a[i][k] * um[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    new = [[sum(um[k][i] * au[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return validate_lattice(new, name=lattice.name)


def random_unimodular(rank: int, rng, steps: int = 12) -> list[list[int]]:
    """Random determinant +-1 integer matrix built from elementary operations."""
    u = [[1 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for _ in range(steps):
        op = rng.randrange(3)
        i = rng.randrange(rank)
        j = rng.randrange(rank)
        if op == 0 and i != j:
            c = rng.choice((-2, -1, 1, 2))
            for k in range(rank):
                u[i][k] += c * u[j][k]
        elif op == 1 and i != j:
            u[i], u[j] = u[j], u[i]
        elif op == 2:
            u[i] = [-x for x in u[i]]
    return u


def _ldl(gram2: IntMatrix) -> tuple[list[Fraction], list[list[Fraction]]]:
    """A = U^T D U with U unit upper triangular; returns (diagonal, U rows)."""
    n = len(gram2)
    m = [[Fraction(x) for x in row] for row in gram2]
    d: list[Fraction] = []
    u = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d.append(m[i][i])
        u[i][i] = Fraction(1)
        for j in range(i + 1, n):
            u[i][j] = m[i][j] / d[i]
        for r in range(i + 1, n):
            for c in range(r, n):
                m[r][c] -= m[i][r] * m[i][c] / d[i]
                m[c][r] = m[r][c]
    return d, u


def _enumerate(gram2: IntMatrix, bound: int) -> dict[int, list[Vector]]:
    """Depth-first enumeration of all v with norm <= bound, exact integers only.

    The quadratic form is written as sum_i d_i (v_i + c_i(v))^2 from the LDL^T
    decomposition; all comparisons are cleared of denominators up front.
    """
    n = len(gram2)
    d, u = _ldl(gram2)
    dn = [x.numerator for x in d]
    dd = [x.denominator for x in d]
    cden = []
    cnum = []
    for i in range(n):
        den = 1
        for j in range(i + 1, n):
            den = lcm(den, u[i][j].denominator)
        cden.append(den)
        cnum.append([int(u[i][j] * den) for j in range(i + 1, n)])
    big = 1
    for i in range(n):
        big = lcm(big, dd[i] * cden[i] * cden[i])
    mult = [dn[i] * (big // (dd[i] * cden[i] * cden[i])) for i in range(n)]

    target = 2 * bound * big
    shells: dict[int, list[Vector]] = {k: [] for k in range(bound + 1)}
    v = [0] * n

    def descend(i: int, acc: int) -> None:
        if i < 0:
            q = acc // (2 * big)
            assert acc % (2 * big) == 0
            shells[q].append(tuple(v))
            return
        cn = cnum[i]
        c = sum(cn[j - i - 1] * v[j] for j in range(i + 1, n))
        cd = cden[i]
        rem = target - acc
        a = mult[i]
        # a * (x*cd + c)^2 <= rem  <=>  |x*cd + c| <= s with s = isqrt(rem // a);
        # bounds are exact: x in [ceil((-c - s)/cd), floor((-c + s)/cd)]
        s = isqrt(rem // a)
        lo = -((c + s) // cd)
        hi = (-c + s) // cd
        for x in range(lo, hi + 1):
            t = x * cd + c
            add = a * t * t
            if add <= rem:
                v[i] = x
                descend(i - 1, acc + add)
        v[i] = 0

    descend(n - 1, 0)
    return {k: sorted(vs) for k, vs in shells.items()}


def content_hash(gram2: IntMatrix, bound: int | None = None) -> str:
    payload = {"format": SHELL_CACHE_FORMAT, "gram2": [list(r) for r in gram2]}
    if bound is not None:
        payload["bound"] = bound
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


class ShellTable:
    """All lattice vectors up to a norm bound, grouped by exact norm, plus
    lazily built pair statistics.

    Immutable after construction apart from internal caches; the cached pair
    histograms and moment matrices are deterministic functions of the shells,
    so concurrent builds are safe to merge in any order.
    """

    def __init__(self, lattice: IntegralLattice, bound: int,
                 shells: dict[int, list[Vector]]):
        self.lattice = lattice
        self.bound = bound
        self._shells: dict[int, tuple[Vector, ...]] = {
            k: tuple(shells.get(k, ())) for k in range(bound + 1)}
        self._pair_hists: dict[tuple[int, int], dict[int, int]] = {}
        self._moments: dict[int, tuple[tuple[int, ...], ...]] = {}

    def shell(self, k: int) -> tuple[Vector, ...]:
        if not 0 <= k <= self.bound:
            raise IndexError(f"shell {k} beyond enumeration bound {self.bound}")
        return self._shells[k]

    def sizes(self) -> dict[int, int]:
        return {k: len(v) for k, v in self._shells.items()}

    def min_norm(self) -> int | None:
        """Smallest positive norm with a nonempty shell, if any within bound."""
        for k in range(1, self.bound + 1):
            if self._shells[k]:
                return k
        return None

    # -- pair statistics ---------------------------------------------------

    def pair_histogram(self, k1: int, k2: int) -> dict[int, int]:
        """Counts of the doubled pairing t = v^T A w over shell k1 x shell k2."""
        key = (min(k1, k2), max(k1, k2))
        hist = self._pair_hists.get(key)
        if hist is None:
            hist = self._build_pair_histogram(*key)
            self._pair_hists[key] = hist
        return hist

    def ensure_pair_histograms(self, cells: Iterable[tuple[int, int]],
                               threads: int = 1) -> None:
        todo = sorted({(min(a, b), max(a, b)) for a, b in cells}
                      - set(self._pair_hists))
        if threads > 1 and len(todo) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                for cell, hist in zip(todo, pool.map(
                        lambda c: self._build_pair_histogram(*c), todo)):
                    self._pair_hists[cell] = hist
        else:
            for cell in todo:
                self._pair_hists[cell] = self._build_pair_histogram(*cell)

    def _build_pair_histogram(self, k1: int, k2: int) -> dict[int, int]:
        s1 = self._shells[k1]
        s2 = self._shells[k2]
        if not s1 or not s2:
            return {}
        if len(s1) * len(s2) >= 20000 and self._numpy_safe():
            hist = self._pair_histogram_numpy(s1, s2, k1, k2)
            if hist is not None:
                return hist
        return self._pair_histogram_naive(s1, s2)

    def _pair_histogram_naive(self, s1, s2) -> dict[int, int]:
        a = self.lattice.gram2
        n = self.lattice.rank
        hist: dict[int, int] = {}
        rows = [tuple(sum(a[i][j] * w[j] for j in range(n)) for i in range(n))
                for w in s2]
        for v in s1:
            nz = [(i, vi) for i, vi in enumerate(v) if vi]
            for aw in rows:
                t = sum(vi * aw[i] for i, vi in nz)
                hist[t] = hist.get(t, 0) + 1
        return hist

    def _numpy_safe(self) -> bool:
        maxa = max(abs(x) for row in self.lattice.gram2 for x in row)
        maxc = max((abs(c) for sh in self._shells.values() for v in sh for c in v),
                   default=0)
        n = self.lattice.rank
        return n * n * maxa * max(maxc, 1) ** 2 < _INT64_LIMIT

    def _pair_histogram_numpy(self, s1, s2, k1: int, k2: int) -> dict[int, int] | None:
        try:
            import numpy as np
        except ImportError:
            return None
        a = np.array(self.lattice.gram2, dtype=np.int64)
        v1 = np.array(s1, dtype=np.int64)
        v2 = np.array(s2, dtype=np.int64)
        w = v1 @ a
        tmax = isqrt(4 * k1 * k2)  # |v^T A w| <= 2 sqrt(k1 k2), Cauchy-Schwarz
        counts = np.zeros(2 * tmax + 1, dtype=np.int64)
        chunk = max(1, 8_000_000 // max(1, len(s1)))
        for start in range(0, len(s2), chunk):
            block = w @ v2[start:start + chunk].T
            if block.size:
                bmin = int(block.min())
                bmax = int(block.max())
                if bmin < -tmax or bmax > tmax:
                    return None  # falls back to the exact python path
                counts += np.bincount((block + tmax).ravel(),
                                      minlength=2 * tmax + 1)
        return {t - tmax: int(c) for t, c in enumerate(counts.tolist()) if c}

    def moment_matrix(self, k: int) -> tuple[tuple[int, ...], ...]:
        """Sum of v v^T over the shell of norm k (coordinate outer products)."""
        cached = self._moments.get(k)
        if cached is not None:
            return cached
        n = self.lattice.rank
        sh = self._shells[k]
        m = [[0] * n for _ in range(n)]
        for v in sh:
            for i in range(n):
                vi = v[i]
                if vi:
                    row = m[i]
                    for j in range(n):
                        row[j] += vi * v[j]
        result = tuple(tuple(row) for row in m)
        self._moments[k] = result
        return result


def enumerate_shells(lattice: IntegralLattice, bound: int,
                     cache_dir: str | None = None,
                     use_cache: bool = True) -> ShellTable:
    """Enumerate all vectors of norm <= bound, optionally via the disk cache."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    if cache_dir and use_cache:
        cached = load_shell_table(lattice, bound, cache_dir)
        if cached is not None:
            return cached
    table = ShellTable(lattice, bound, _enumerate(lattice.gram2, bound))
    if cache_dir and use_cache:
        save_shell_table(table, cache_dir)
    return table


def _cache_path(gram2: IntMatrix, bound: int, cache_dir: str) -> str:
    return os.path.join(cache_dir, f"shells-{content_hash(gram2, bound)[:20]}.json")


def save_shell_table(table: ShellTable, cache_dir: str) -> str:
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_path(table.lattice.gram2, table.bound, cache_dir)
    doc = {
        "format_version": SHELL_CACHE_FORMAT,
        "hash": content_hash(table.lattice.gram2, table.bound),
        "gram2": [list(r) for r in table.lattice.gram2],
        "bound": table.bound,
        "shells": {str(k): [list(v) for v in table.shell(k)]
                   for k in range(table.bound + 1)},
    }
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(doc, fh, separators=(",", ":"))
    os.replace(tmp, path)
    return path


def load_shell_table(lattice: IntegralLattice, bound: int,
                     cache_dir: str) -> ShellTable | None:
    path = _cache_path(lattice.gram2, bound, cache_dir)
    if not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    if (doc.get("format_version") != SHELL_CACHE_FORMAT
            or doc.get("bound") != bound
            or _as_int_matrix(doc.get("gram2", ())) != lattice.gram2):
        return None
    shells = {int(k): [tuple(v) for v in vs] for k, vs in doc["shells"].items()}
    return ShellTable(lattice, bound, shells)
