# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as _pycore, selected by _kernels.__init__.

Permutation degrees are capped well below 32 by the library's enumeration
caps, so fixed-size C arrays and 32-bit visit masks are safe here.
"""

BACKEND = "c"

DEF MAXN = 31


def nu_histogram_compose(left, sigmas, int n):
    cdef int left_c[MAXN]
    cdef int tmp[MAXN]
    cdef long long counts_c[MAXN + 1]
    cdef int i, s, t, c
    cdef unsigned int seen
    if n > MAXN:
        raise ValueError(f"degree {n} too large for the compiled kernel")
    for i in range(n):
        left_c[i] = left[i]
    for i in range(n + 1):
        counts_c[i] = 0
    for sig in sigmas:
        for i in range(n):
            tmp[i] = left_c[<int> sig[i]]
        seen = 0
        c = 0
        for s in range(n):
            if not (seen >> s) & 1:
                c += 1
                t = s
                while not (seen >> t) & 1:
                    seen |= (<unsigned int> 1) << t
                    t = tmp[t]
        counts_c[c] += 1
    return [counts_c[i] for i in range(n + 1)]


cdef void _dfs_i64(long long *mat, int n, int col, long long prod,
                   unsigned int used, int *choice, long long *sums) noexcept:
    cdef int r, s, t, c
    cdef unsigned int seen
    cdef long long e
    if col == n:
        seen = 0
        c = 0
        for s in range(n):
            if not (seen >> s) & 1:
                c += 1
                t = s
                while not (seen >> t) & 1:
                    seen |= (<unsigned int> 1) << t
                    t = choice[t]
        sums[c] += prod
        return
    for r in range(n):
        if not (used >> r) & 1:
            e = mat[r * n + col]
            if e != 0:
                choice[col] = r
                _dfs_i64(mat, n, col + 1, prod * e,
                         used | ((<unsigned int> 1) << r), choice, sums)


cdef _dfs_obj(list rows, int n, int col, object prod,
              unsigned int used, int *choice, list sums):
    cdef int r, s, t, c
    cdef unsigned int seen
    if col == n:
        seen = 0
        c = 0
        for s in range(n):
            if not (seen >> s) & 1:
                c += 1
                t = s
                while not (seen >> t) & 1:
                    seen |= (<unsigned int> 1) << t
                    t = choice[t]
        sums[c] = sums[c] + prod
        return
    cdef list row
    for r in range(n):
        if not (used >> r) & 1:
            row = <list> rows[r]
            e = row[col]
            if e != 0:
                choice[col] = r
                _dfs_obj(rows, n, col + 1, prod * e,
                         used | ((<unsigned int> 1) << r), choice, sums)


def nu_grouped_products(rows, int n):
    cdef long long mat[MAXN * MAXN]
    cdef long long sums_c[MAXN + 1]
    cdef int choice[MAXN]
    cdef int i, j
    if n == 0:
        return [1]
    if n > MAXN:
        raise ValueError(f"degree {n} too large for the compiled kernel")

    # int64 fast path only when every partial result provably fits
    maxabs = 0
    for row in rows:
        for e in row:
            if e < 0:
                e = -e
            if e > maxabs:
                maxabs = e
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    if fact * (max(maxabs, 1) ** n) < (1 << 62):
        for i in range(n):
            row = rows[i]
            for j in range(n):
                mat[i * n + j] = row[j]
        for i in range(n + 1):
            sums_c[i] = 0
        _dfs_i64(mat, n, 0, 1, 0, choice, sums_c)
        return [sums_c[i] for i in range(n + 1)]

    sums = [0] * (n + 1)
    _dfs_obj([list(r) for r in rows], n, 0, 1, 0, choice, sums)
    return sums
