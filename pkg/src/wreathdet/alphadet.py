"""Alpha-determinants over exact rings.

adet(A, alpha) = sum over w in S_n of alpha^(n - nu(w)) * a_{w(1),1} ... a_{w(n),n}

with nu the cycle count. alpha = -1 gives the determinant, alpha = +1 the
permanent; kdet is the specialization alpha = -1/k. alpha may be an exact
rational or a Poly (e.g. rings.ALPHA); entries may be rationals or Polys.

Two independent evaluators ship: the defining sum and a Laplace expansion
that removes one column and substitutes rows. Their agreement for every
expansion column is part of the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from . import config
from ._kernels import nu_grouped_products
from .errors import CapExceededError, ShapeError
from .linalg import Matrix
from .rings import Poly, is_rational


def singular_order(alpha):
    """k when alpha == -1/k for a positive integer k, else None."""
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    if isinstance(alpha, Fraction) and alpha.numerator == -1:
        return alpha.denominator
    return None


def _require_square(A):
    if A.nrows != A.ncols:
        raise ShapeError(f"adet needs a square matrix, got {A.nrows}x{A.ncols}")
    return A.nrows


def adet(A, alpha, method="auto", *, cap=None):
    """The alpha-determinant of a square matrix, exactly."""
    n = _require_square(A)
    if method == "auto":
        method = "sum" if n <= 8 else "laplace"
    if method == "sum":
        return adet_sum(A, alpha, cap=cap)
    if method == "laplace":
        return adet_laplace(A, alpha)
    raise ValueError(f"unknown method {method!r}")


def adet_sum(A, alpha, *, cap=None):
    """adet by the defining sum over S_n."""
    n = _require_square(A)
    cap = config.FACTORIAL_CAP if cap is None else cap
    if n > cap:
        raise CapExceededError("adet degree", n, cap)
    if n == 0:
        return Fraction(1)
    if A.is_rational():
        return _adet_sum_rational(A, alpha, n)
    return _adet_sum_ring(A, alpha, n)


def _adet_sum_rational(A, alpha, n):
    # clear denominators column by column (adet is multilinear in columns),
    # run the integer kernel grouped by cycle count, then divide once
    scale = 1
    cols = []
    for j in range(n):
        col = [Fraction(A[i, j]) for i in range(n)]
        d = lcm(*(c.denominator for c in col))
        scale *= d
        cols.append([int(c * d) for c in col])
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]
    sums = nu_grouped_products(rows, n)
    total = 0
    for nu, s in enumerate(sums):
        if s:
            total = total + s * alpha ** (n - nu)
    return total * Fraction(1, scale)


def _adet_sum_ring(A, alpha, n):
    # generic ring path (Poly entries): column recursion with zero pruning
    alpha_pows = [1]
    for _ in range(n):
        alpha_pows.append(alpha_pows[-1] * alpha)
    rows = A.rows
    total = Poly.const(0)
    choice = [0] * n

    def rec(col, prod, used):
        nonlocal total
        if col == n:
            seen = 0
            c = 0
            for s in range(n):
                if not (seen >> s) & 1:
                    c += 1
                    t = s
                    while not (seen >> t) & 1:
                        seen |= 1 << t
                        t = choice[t]
            total = total + prod * alpha_pows[n - c]
            return
        for r in range(n):
            if not (used >> r) & 1:
                e = rows[r][col]
                if e == 0:
                    continue
                choice[col] = r
                rec(col + 1, prod * e, used | (1 << r))

    rec(0, Poly.const(1), 0)
    return total


def adet_laplace(A, alpha, q=1):
    """adet by the one-column expansion at column q (1-based).

    The expansion removes column q and row q; the term for row p carries the
    weight alpha^(1 - delta_{pq}) times the entry a_{pq}, and when p != q the
    surviving row p is overwritten with row q's surviving entries. Recursive
    subexpansions always use the first remaining column, with memoization on
    the tuple of row contents (replacements cascade, so the content tuple is
    the correct key).
    """
    n = _require_square(A)
    if n == 0:
        return Fraction(1)
    if not 1 <= q <= n:
        raise ShapeError(f"expansion column {q} out of range 1..{n}")
    rows = A.rows
    memo = {}

    def value(row_ids, col_off, cols):
        # square submatrix: entry (u, v) = rows[row_ids[u]][cols[col_off + v]]
        m = len(row_ids)
        if m == 0:
            return Fraction(1)
        key = row_ids
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = 0
        c0 = cols[col_off]
        for p in range(m):
            x = rows[row_ids[p]][c0]
            if x == 0:
                continue
            if p == 0:
                sub = row_ids[1:]
                term = x * value(sub, col_off + 1, cols)
            else:
                sub = tuple(
                    row_ids[0] if u == p else row_ids[u] for u in range(1, m)
                )
                term = alpha * x * value(sub, col_off + 1, cols)
            total = total + term
        memo[key] = total
        return total

    q0 = q - 1
    cols = tuple(j for j in range(n) if j != q0)
    total = 0
    for p in range(n):
        x = rows[p][q0]
        if x == 0:
            continue
        if p == q0:
            sub = tuple(u for u in range(n) if u != q0)
            term = x * value(sub, 0, cols)
        else:
            sub = tuple(q0 if u == p else u for u in range(n) if u != q0)
            term = alpha * x * value(sub, 0, cols)
        total = total + term
    return total if not isinstance(total, int) else Fraction(total)


def kdet(A, k, method="auto", *, cap=None):
    """adet at alpha = -1/k, exactly."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    return adet(A, Fraction(-1, k), method, cap=cap)


def block_adet_check(A11, A12, A22, alpha, *, cap=None):
    """adet of [[A11, A12], [0, A22]] equals adet(A11) * adet(A22)?"""
    n, m = A11.nrows, A22.nrows
    if A11.ncols != n or A22.ncols != m:
        raise ShapeError("diagonal blocks must be square")
    if A12.nrows != n or A12.ncols != m:
        raise ShapeError(f"off-diagonal block must be {n}x{m}")
    assembled = Matrix.from_blocks([[A11, A12], [Matrix.zero(m, n), A22]])
    lhs = adet_sum(assembled, alpha, cap=cap)
    rhs = adet_sum(A11, alpha, cap=cap) * adet_sum(A22, alpha, cap=cap)
    return lhs == rhs
