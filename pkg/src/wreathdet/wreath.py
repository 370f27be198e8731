"""Wreath determinants, k-plexing, (n,k)-signs and orbit combinatorics.

The k-th wreath determinant of a kn x n matrix A is kdet of the matrix whose
columns are the columns of A each repeated k times:

    wrdet_k(A) = kdet(A^[k]) = sum over sigma in S_kn of
                 (-1/k)^(kn - nu(sigma)) * prod_{p,l} a_{sigma((p-1)k+l), p}.

Four independent evaluation routes are provided (the defining sum, the
standard-tableaux expansion, the Young-subgroup symmetrization, and the
monomial expansion over colorings); the test suites check they agree
everywhere.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import config
from .alphadet import kdet
from .errors import CapExceededError, ShapeError
from .linalg import Matrix, det, solve_exact
from .perm import (
    Permutation,
    phi_embed,
    psi_embed,
    young_subgroup_elements,
    young_subgroup_histogram,
    young_subgroup_order,
)
from .tableaux import Partition, g_of_T, row_reading_tableau, standard_tableaux


def column_k_plex(A, k):
    """Each column repeated k times in place (Kronecker with a length-k row of ones)."""
    return Matrix([[e for e in row for _ in range(k)] for row in A.rows])


def row_k_plex(A, k):
    """Each row repeated k times in place."""
    return Matrix([row for row in A.rows for _ in range(k)])


def pile(*blocks):
    """Stack matrices with equal column counts on top of each other."""
    return Matrix.from_blocks([[b] for b in blocks])


def _check_wrdet_shape(A, k):
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    n = A.ncols
    if A.nrows != k * n:
        raise ShapeError(f"wreath determinant needs kn x n, got {A.nrows}x{n} with k={k}")
    return n


def kdet_fraction_from_counts(counts, k, N):
    """sum_v counts[v] * (-1/k)^(N - v), assembled exactly."""
    num = sum(cnt * (-1) ** (N - nu) * k**nu for nu, cnt in enumerate(counts))
    return Fraction(num, k**N)


def wrdet_direct(A, k, *, cap=None):
    """wrdet by the defining sum over S_{kn}."""
    _check_wrdet_shape(A, k)
    return kdet(column_k_plex(A, k), k, method="sum", cap=cap)


def tdet(A, T):
    """Product over the tableau's columns of the n x n minors of A they name.

    T has rectangular shape (k^n); column l picks rows t_{1l}, ..., t_{nl}.
    """
    shape = T.shape
    if len(set(shape.parts)) > 1:
        raise ShapeError(f"rectangular tableau required, got {shape.parts}")
    n, k = shape.depth, shape.parts[0]
    if A.nrows != k * n or A.ncols != n:
        raise ShapeError(f"matrix must be {k * n}x{n} for this tableau")
    val = Fraction(1)
    cols = list(range(n))
    for l in range(1, k + 1):
        rows = [t - 1 for t in T.column(l)]
        val = val * det(A.submatrix(rows, cols))
    return val


def tableau_matrix(T):
    """I(T): the 0/1 matrix whose t_{ij}-th row is the i-th unit row vector."""
    shape = T.shape
    n, k = shape.depth, shape.parts[0]
    rows = [[0] * n for _ in range(k * n)]
    for i, row in enumerate(T.rows):
        for t in row:
            rows[t - 1][i] = 1
    return Matrix(rows)


@lru_cache(maxsize=32)
def tableau_unit_wrdets(n, k):
    """wrdet I(T) for every standard tableau T of shape (k^n), via the
    Young-subgroup sum sum_{sigma in S_k^n} (-1/k)^(kn - nu(g(T) sigma))."""
    coeffs = {}
    for T in standard_tableaux(Partition((k,) * n)):
        counts = young_subgroup_histogram(g_of_T(T).zero_based(), n, k)
        coeffs[T] = kdet_fraction_from_counts(counts, k, k * n)
    return coeffs


@lru_cache(maxsize=32)
def tdet_duality_matrix(n, k):
    """M[p][q] = tdet_{T_p}(I(T_q)) over the canonical tableau order.

    Unit diagonal, entries in {0, +-1}, and unit upper-triangular in the
    row-word order -- but NOT the identity in general: the first off-diagonal
    entry appears at (3,2) for the pair (row-reading tableau, column-reading
    tableau), whose columns and rows share no two-element set, so no minor
    can vanish. The tableaux expansion therefore solves against this matrix
    instead of reading coefficients straight off the unit wrdets.
    """
    tabs = standard_tableaux(Partition((k,) * n))
    mats = [tableau_matrix(U) for U in tabs]
    return tuple(tuple(tdet(IU, T) for IU in mats) for T in tabs)


@lru_cache(maxsize=32)
def wrdet_expansion_coefficients(n, k):
    """The coefficients C with wrdet A = sum_T C_T tdet_T(A): the unique
    solution of sum_p C_p tdet_{T_p}(I(T_q)) = wrdet I(T_q) for all q."""
    tabs = standard_tableaux(Partition((k,) * n))
    units = tableau_unit_wrdets(n, k)
    m = tdet_duality_matrix(n, k)
    f = len(tabs)
    system = [[m[p][q] for p in range(f)] for q in range(f)]
    sol = solve_exact(system, [units[T] for T in tabs])
    return {T: c for T, c in zip(tabs, sol)}


def wrdet_tableaux(A, k):
    """wrdet by the standard-tableaux expansion sum_T C_T * tdet_T(A)."""
    n = _check_wrdet_shape(A, k)
    total = Fraction(0)
    for T, c in wrdet_expansion_coefficients(n, k).items():
        total += c * tdet(A, T)
    return total


def wrdet_symmetric(A, k, *, cap=None):
    """wrdet by symmetrization: k^{-kn} sum_{sigma in S_k^n} tdet_{T0}(sigma . A)."""
    n = _check_wrdet_shape(A, k)
    T0 = row_reading_tableau(n, k)
    total = Fraction(0)
    for sigma in young_subgroup_elements(n, k, cap=cap):
        total += tdet(A.perm_rows(sigma), T0)
    return total * Fraction(1, k ** (k * n))


def colorings(n, k, *, cap=None):
    """All f: [kn] -> [n] with every fiber of size k, lexicographic order."""
    cap = config.YOUNG_SUBGROUP_CAP if cap is None else cap
    count = factorial(k * n) // factorial(k) ** n
    if count > cap:
        raise CapExceededError("coloring family", count, cap)
    word = [v for v in range(1, n + 1) for _ in range(k)]
    for values in _multiset_permutations(word):
        yield ColoringFunction(values, n, k)


def _multiset_permutations(word):
    values = sorted(set(word))
    counts = {v: word.count(v) for v in values}
    n = len(word)
    out = [0] * n

    def rec(pos):
        if pos == n:
            yield tuple(out)
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                out[pos] = v
                yield from rec(pos + 1)
                counts[v] += 1

    yield from rec(0)


class ColoringFunction:
    """f: [kn] -> [n] with all fibers of size k; also viewed as the n x k
    matrix with (i, j) entry f((i-1)k + j)."""

    __slots__ = ("values", "n", "k")

    def __init__(self, values, n, k):
        values = tuple(values)
        if len(values) != k * n:
            raise ShapeError(f"need {k * n} values, got {len(values)}")
        for j in range(1, n + 1):
            fiber = sum(1 for v in values if v == j)
            if fiber != k:
                raise ShapeError(f"fiber of {j} has size {fiber}, expected {k}")
        self.values = values
        self.n = n
        self.k = k

    @staticmethod
    def iota(n, k):
        """The canonical coloring (i-1)k+j -> i (stabilized by S_k^n)."""
        return ColoringFunction(
            [i for i in range(1, n + 1) for _ in range(k)], n, k
        )

    @staticmethod
    def from_tableau(T):
        """A standard tableau of shape (k^n) as a coloring: t_{ij} -> i."""
        shape = T.shape
        n, k = shape.depth, shape.parts[0]
        values = [0] * (k * n)
        for i, row in enumerate(T.rows, start=1):
            for t in row:
                values[t - 1] = i
        return ColoringFunction(values, n, k)

    def __call__(self, i):
        return self.values[i - 1]

    def matrix_view(self):
        k = self.k
        return tuple(self.values[(i - 1) * k : i * k] for i in range(1, self.n + 1))

    def canonical_values(self):
        """Orbit representative under the right S_k^n action: rows sorted."""
        return tuple(v for row in self.matrix_view() for v in sorted(row))

    def delta_matrix(self):
        """The kn x n 0/1 matrix (delta_{f(i), j})."""
        return Matrix(
            [[1 if self.values[i] == j else 0 for j in range(1, self.n + 1)]
             for i in range(self.k * self.n)]
        )

    def g_perm(self):
        """Some g with f = iota . g (i.e. iota(g(i)) = f(i)); fibers are sent
        to blocks in increasing order."""
        slot = [0] * self.n
        images = []
        for v in self.values:
            images.append((v - 1) * self.k + 1 + slot[v - 1])
            slot[v - 1] += 1
        return Permutation(images)

    def act_right(self, w):
        """f . w: i -> f(w(i)); the right S_{kn} action."""
        return ColoringFunction(
            [self.values[w(i) - 1] for i in range(1, self.k * self.n + 1)],
            self.n,
            self.k,
        )

    def act_left(self, tau):
        """tau . f: i -> tau(f(i)); the left S_n action."""
        return ColoringFunction(
            [tau(v) for v in self.values], self.n, self.k
        )

    def orbit(self):
        """The right S_k^n orbit: all independent row rearrangements."""
        rows = self.matrix_view()
        arrangements = [
            sorted(set(itertools.permutations(row))) for row in rows
        ]
        for combo in itertools.product(*arrangements):
            yield ColoringFunction(
                [v for row in combo for v in row], self.n, self.k
            )

    def multiplicity_matrix(self):
        """m_{ij}(f) = #{l in [k] : f((i-1)k+l) = j}."""
        return tuple(
            tuple(sum(1 for v in row if v == j) for j in range(1, self.n + 1))
            for row in self.matrix_view()
        )

    def column_perms(self):
        """When every matrix-view column is a permutation of [n], the tuple of
        those permutations (the omega-preimage); otherwise None."""
        view = self.matrix_view()
        perms = []
        for j in range(self.k):
            col = [view[i][j] for i in range(self.n)]
            if sorted(col) != list(range(1, self.n + 1)):
                return None
            perms.append(Permutation(col))
        return tuple(perms)

    def __eq__(self, other):
        return (
            isinstance(other, ColoringFunction)
            and (self.values, self.n, self.k) == (other.values, other.n, other.k)
        )

    def __hash__(self):
        return hash((self.values, self.n, self.k))

    def __repr__(self):
        return f"ColoringFunction({self.values}, n={self.n}, k={self.k})"


@lru_cache(maxsize=100_000)
def _nk_sign_cached(canon_values, n, k):
    f = ColoringFunction(canon_values, n, k)
    counts = young_subgroup_histogram(f.g_perm().zero_based(), n, k)
    return kdet_fraction_from_counts(counts, k, k * n)


def nk_sign(f):
    """sgn^(k)(f) = wrdet of the 0/1 matrix (delta_{f(i),j}), via the
    Young-subgroup sum; constant on right S_k^n orbits."""
    return _nk_sign_cached(f.canonical_values(), f.n, f.k)


def wrdet_monomial(A, k, *, cap=None):
    """wrdet by the monomial expansion sum_f sgn^(k)(f) prod_i a_{i, f(i)}."""
    n = _check_wrdet_shape(A, k)
    total = Fraction(0)
    for f in colorings(n, k, cap=cap):
        prod = 1
        for i in range(k * n):
            e = A[i, f.values[i] - 1]
            if e == 0:
                prod = 0
                break
            prod = prod * e
        if prod:
            total += nk_sign(f) * prod
    return total


def orbit_data(f):
    """(orbit size, |orbit ∩ column-regular colorings|, base sign).

    The orbit size comes from the multinomial formula k!^n / prod m_{ij}!;
    the intersection with the column-regular family (each matrix-view column
    a permutation) is counted by enumeration, and the base sign is the
    product of the column-permutation signs of any member (None when the
    intersection is empty, in which case sgn^(k)(f) must vanish).
    """
    orbit_size = factorial(f.k) ** f.n
    for row in f.multiplicity_matrix():
        for m in row:
            orbit_size //= factorial(m)
    intersection = 0
    base_sign = None
    for g in f.orbit():
        perms = g.column_perms()
        if perms is not None:
            intersection += 1
            sign = 1
            for p in perms:
                sign *= p.sign()
            if base_sign is None:
                base_sign = sign
    return orbit_size, intersection, base_sign


def det_power_identity_check(f, A, *, cap=None):
    """sgn^(k)(f) det(A)^k == sum_h sgn^(k)(h) prod_i a_{f(i), h(i)}?"""
    n, k = f.n, f.k
    if A.nrows != n or A.ncols != n:
        raise ShapeError(f"matrix must be {n}x{n}")
    lhs = nk_sign(f) * det(A) ** k
    rhs = Fraction(0)
    for h in colorings(n, k, cap=cap):
        prod = Fraction(1)
        for i in range(k * n):
            prod *= A[f.values[i] - 1, h.values[i] - 1]
        rhs += nk_sign(h) * prod
    return lhs == rhs


def pf_coefficient(f):
    """Coefficient of prod_{i,j} x_{ij} in the row-symmetrized monomial
    P_f(x) = (k!)^{-n} sum_{sigma in S_k^n} prod_{i,j} x_{f((i-1)k+j), sigma_i(j)}.

    Equals |orbit ∩ column-regular| / |orbit|.
    """
    n, k = f.n, f.k
    view = f.matrix_view()
    count = 0
    for combo in itertools.product(itertools.permutations(range(1, k + 1)), repeat=n):
        pairs = set()
        ok = True
        for i in range(n):
            for j in range(k):
                pair = (view[i][j], combo[i][j])
                if pair in pairs:
                    ok = False
                    break
                pairs.add(pair)
            if not ok:
                break
        if ok:
            count += 1
    return Fraction(count, factorial(k) ** n)


class WreathGroupElement:
    """An element of the wreath product S_k wr S_n acting on [kn]: n block
    permutations in S_k followed by a block-moving permutation in S_n."""

    __slots__ = ("block_perms", "outer")

    def __init__(self, block_perms, outer):
        block_perms = tuple(block_perms)
        k = block_perms[0].degree if block_perms else 1
        if any(p.degree != k for p in block_perms):
            raise ValueError("block permutations must share one degree")
        if outer.degree != len(block_perms):
            raise ValueError("outer degree must equal the number of blocks")
        self.block_perms = block_perms
        self.outer = outer

    @property
    def n(self):
        return self.outer.degree

    @property
    def k(self):
        return self.block_perms[0].degree

    def embed(self):
        """The corresponding permutation of [kn]."""
        return phi_embed(self.block_perms) * psi_embed(self.outer, self.k)

    def character(self):
        """The sign character of the outer part."""
        return self.outer.sign()

    def __repr__(self):
        return f"WreathGroupElement({self.block_perms}, {self.outer})"


def wreath_group_elements(n, k, *, cap=None):
    """All (k!)^n n! elements of S_k wr S_n."""
    cap = config.YOUNG_SUBGROUP_CAP if cap is None else cap
    order = young_subgroup_order(n, k) * factorial(n)
    if order > cap:
        raise CapExceededError("wreath product", order, cap)
    blocks = [list(itertools.permutations(range(1, k + 1))) for _ in range(n)]
    for combo in itertools.product(*blocks):
        sigmas = tuple(Permutation(c) for c in combo)
        for tau_images in itertools.permutations(range(1, n + 1)):
            yield WreathGroupElement(sigmas, Permutation(tau_images))
