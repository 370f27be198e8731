"""Symmetric functions through Vandermonde-type kdet ratios.

Everything here evaluates symmetric functions of kn variables two ways: once
by the classical definition (the oracle) and once as a ratio of -1/k
determinants of power matrices against the wreath Vandermonde determinant.
All checks are exact evaluations at rational points; no floats.
"""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction

from .alphadet import kdet
from .errors import ShapeError
from .linalg import Matrix, det
from .rings import as_fraction
from .tableaux import kostka, partitions, row_reading_tableau
from .wreath import _multiset_permutations, wrdet_direct, wrdet_expansion_coefficients

log = logging.getLogger(__name__)


def delta_shift(n, k):
    """The staircase exponent vector (n-1, ..., n-1, n-2, ..., 0), k of each."""
    return tuple(n - 1 - (j - 1) // k for j in range(1, k * n + 1))


def power_matrix(xs, exponents):
    """The square matrix (x_i ^ a_j)."""
    if len(xs) != len(exponents):
        raise ShapeError("need as many exponents as points")
    return Matrix([[as_fraction(x) ** a for a in exponents] for x in xs])


def d_nk(xs, exponents, k):
    """kdet of the power matrix (x_i^{a_j}) on kn points."""
    return kdet(power_matrix(xs, exponents), k)


def vandermonde_matrix(xs, n):
    """The kn x n matrix (x_i^{n-j})."""
    return Matrix([[as_fraction(x) ** (n - j) for j in range(1, n + 1)] for x in xs])


def wreath_vandermonde(xs, n, k):
    """wrdet of the Vandermonde-shaped kn x n matrix."""
    if len(xs) != k * n:
        raise ShapeError(f"need kn = {k * n} points, got {len(xs)}")
    return wrdet_direct(vandermonde_matrix(xs, n), k)


def diff_product(values):
    """prod_{i < j} (v_i - v_j)."""
    vals = list(values)
    out = Fraction(1)
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            out *= vals[i] - vals[j]
    return out


def specht_polynomial(T, xs):
    """prod over columns of T of the difference product of that column's points."""
    out = Fraction(1)
    for l in range(1, T.shape.parts[0] + 1):
        out *= diff_product(as_fraction(xs[t - 1]) for t in T.column(l))
    return out


def specht_expansion_check(xs, n, k):
    """wrdet V_{n,k}(x) == sum_T C_T * Delta_T(x) with the tableaux-expansion
    coefficients? (Delta_T is tdet_T of the Vandermonde-shaped matrix.)"""
    lhs = wreath_vandermonde(xs, n, k)
    rhs = Fraction(0)
    for T, c in wrdet_expansion_coefficients(n, k).items():
        rhs += c * specht_polynomial(T, xs)
    return lhs == rhs


def symmetric_sum_vdm_check(xs, n, k):
    """wrdet V_{n,k}(x) == k^{-kn} sum_{sigma in S_k^n} Delta_{n,k}(x o sigma)?"""
    from .perm import young_subgroup_elements

    T0 = row_reading_tableau(n, k)
    total = Fraction(0)
    for sigma in young_subgroup_elements(n, k):
        permuted = [xs[sigma(i) - 1] for i in range(1, k * n + 1)]
        total += specht_polynomial(T0, permuted)
    return wreath_vandermonde(xs, n, k) == total * Fraction(1, k ** (k * n))


def cauchy_check(xs, ys, k, variant="plus"):
    """The Cauchy-type identity for wreath determinants, exactly.

    variant='plus' uses entries 1/(x_i + y_j); variant='geometric' uses
    1/(1 - x_i y_j). Both reduce to Delta_n(y)^k / prod(entries denominator)
    times the wreath Vandermonde.
    """
    n = len(ys)
    if len(xs) != k * n:
        raise ShapeError(f"need kn = {k * n} x-points for {n} y-points")
    xs = [as_fraction(x) for x in xs]
    ys = [as_fraction(y) for y in ys]
    denom = Fraction(1)
    rows = []
    for x in xs:
        row = []
        for y in ys:
            d = (x + y) if variant == "plus" else (1 - x * y)
            if d == 0:
                raise ZeroDivisionError(f"pole at x={x}, y={y} ({variant})")
            denom *= d
            row.append(1 / d)
        rows.append(row)
    lhs = wrdet_direct(Matrix(rows), k)
    rhs = diff_product(ys) ** k / denom * wreath_vandermonde(xs, n, k)
    return lhs == rhs


# --- monomial / Schur / power-complete-elementary ratios ----------------------


def monomial_direct(lam, xs):
    """m_lambda(x) by its definition: distinct rearrangement monomials."""
    exps = lam.padded(len(xs))
    total = Fraction(0)
    for arrangement in _multiset_permutations(list(exps)):
        prod = Fraction(1)
        for x, e in zip(xs, arrangement):
            prod *= as_fraction(x) ** e
        total += prod
    return total


def monomial_via_kdet(lam, xs, n, k):
    """m_lambda as a kdet ratio: sums of shifted power-matrix determinants
    over the distinct rearrangements of the padded exponent vector."""
    if lam.depth > k * n:
        raise ShapeError(f"partition depth {lam.depth} exceeds kn = {k * n}")
    w = wreath_vandermonde(xs, n, k)
    if w == 0:
        raise ZeroDivisionError("wreath Vandermonde vanishes at this point")
    delta = delta_shift(n, k)
    total = Fraction(0)
    for arrangement in _multiset_permutations(list(lam.padded(k * n))):
        exps = tuple(d + e for d, e in zip(delta, arrangement))
        total += d_nk(xs, exps, k)
    return total / w


def schur_bialternant(lam, xs):
    """s_lambda by the classical ratio of alternants (distinct points)."""
    N = len(xs)
    if lam.depth > N:
        return Fraction(0)
    exps = lam.padded(N)
    xs = [as_fraction(x) for x in xs]
    num = det(Matrix([[x ** (exps[j] + N - 1 - j) for j in range(N)] for x in xs]))
    den = det(Matrix([[x ** (N - 1 - j) for j in range(N)] for x in xs]))
    if den == 0:
        raise ZeroDivisionError("bialternant needs distinct points")
    return num / den


def schur_via_kdet(lam, xs, n, k):
    """s_lambda = sum_mu K_{lambda mu} m_mu with each m_mu a kdet ratio."""
    total = Fraction(0)
    for mu in partitions(lam.size):
        if mu.depth > k * n:
            continue
        c = kostka(lam, mu.parts)
        if c:
            total += c * monomial_via_kdet(mu, xs, n, k)
    return total


def power_direct(d, xs):
    return sum((as_fraction(x) ** d for x in xs), Fraction(0))


def complete_direct(d, xs):
    total = Fraction(0)
    for combo in itertools.combinations_with_replacement(range(len(xs)), d):
        prod = Fraction(1)
        for i in combo:
            prod *= as_fraction(xs[i])
        total += prod
    return total


def elementary_direct(d, xs):
    total = Fraction(0)
    for combo in itertools.combinations(range(len(xs)), d):
        prod = Fraction(1)
        for i in combo:
            prod *= as_fraction(xs[i])
        total += prod
    return total


def pde_via_kdet(kind, d, xs, n, k):
    """Power / complete / elementary symmetric functions as kdet ratios.

    kind='power' sums single-index shifts, 'complete' weakly increasing
    index tuples, 'elementary' strictly increasing ones.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    w = wreath_vandermonde(xs, n, k)
    if w == 0:
        raise ZeroDivisionError("wreath Vandermonde vanishes at this point")
    delta = delta_shift(n, k)
    kn = k * n
    total = Fraction(0)
    if kind == "power":
        index_sets = ((i,) * d for i in range(kn)) if d else ((),)
    elif kind == "complete":
        index_sets = itertools.combinations_with_replacement(range(kn), d)
    elif kind == "elementary":
        index_sets = itertools.combinations(range(kn), d)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    for idx in index_sets:
        exps = list(delta)
        for i in idx:
            exps[i] += 1
        total += d_nk(xs, tuple(exps), k)
    return total / w


def h_series_check(n, k, d_max, xs, ys):
    """Degree-sliced generating identity: for each d <= d_max the raw
    exponent-tuple sum equals Delta_n(y)^k * wrdet V * sum_{|lam|=d} s s."""
    kn = k * n
    base = sum(delta_shift(n, k))
    w = wreath_vandermonde(xs, n, k)
    dy = diff_product([as_fraction(y) for y in ys]) ** k
    for d in range(d_max + 1):
        lhs = Fraction(0)
        for exps in _compositions(d + base, kn):
            y_part = Fraction(1)
            for p in range(n):
                block = sum(exps[p * k : (p + 1) * k])
                y_part *= as_fraction(ys[p]) ** block
            lhs += y_part * d_nk(xs, exps, k)
        rhs = Fraction(0)
        for lam in partitions(d):
            if lam.depth > n:
                continue
            rhs += schur_bialternant(lam, xs) * schur_bialternant(lam, ys)
        rhs *= dy * w
        if lhs != rhs:
            return False
    return True


def _compositions(total, length):
    """All tuples of `length` nonnegative integers summing to `total`."""
    if length == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, length - 1):
            yield (first,) + rest


def sample_distinct_fractions(rng, count, num_hi=30, den_hi=7, positive=False):
    """Deterministic distinct nonzero rationals; resamples on collision."""
    out = []
    seen = set()
    attempts = 0
    while len(out) < count:
        f = Fraction(rng.randint(1, num_hi), rng.randint(1, den_hi))
        if not positive and rng.random() < 0.5:
            f = -f
        attempts += 1
        if f in seen:
            log.info("point collision after %d draws, resampling", attempts)
            continue
        seen.add(f)
        out.append(f)
    return out


def sample_cauchy_points(rng, n, k):
    """Pole-free (x, y) for both Cauchy variants: positive distinct values
    with every x_i * y_j != 1; offending y's are redrawn."""
    xs = sample_distinct_fractions(rng, k * n, positive=True)
    while True:
        ys = sample_distinct_fractions(rng, n, positive=True)
        if all(x * y != 1 for x in xs for y in ys):
            return xs, ys
        log.info("geometric-variant pole, resampling y points")
