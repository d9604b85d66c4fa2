# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels: reduced-form enumeration and lattice point counts.

Same contract as ``_pure``.  Enumeration bounds are computed in doubles
with a safety margin; every candidate vector is re-checked exactly in
integer arithmetic, so float rounding can widen the search box but never
change a count.
"""

from libc.math cimport sqrt


def hurwitz_sixfold(long d):
    """Six times the Hurwitz class number H(d), d < 0 and d = 0,1 mod 4."""
    cdef long total = 0
    cdef long a, b, foura, num, c, amax
    amax = <long>sqrt((-d) / 3.0) + 1
    for a in range(1, amax + 1):
        if 3 * a * a > -d:
            break
        foura = 4 * a
        for b in range(-a + 1, a + 1):
            num = b * b - d
            if num % foura:
                continue
            c = num / foura
            if c < a:
                continue
            if a == c and b < 0:
                continue
            if a == b and b == c:
                total += 2
            elif b == 0 and a == c:
                total += 3
            else:
                total += 6
    return total


cdef long _gcd(long a, long b) noexcept:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


def hurwitz_sixfold_primitive(long d):
    """Like :func:`hurwitz_sixfold` but over primitive forms only."""
    cdef long total = 0
    cdef long a, b, foura, num, c, amax
    amax = <long>sqrt((-d) / 3.0) + 1
    for a in range(1, amax + 1):
        if 3 * a * a > -d:
            break
        foura = 4 * a
        for b in range(-a + 1, a + 1):
            num = b * b - d
            if num % foura:
                continue
            c = num / foura
            if c < a:
                continue
            if a == c and b < 0:
                continue
            if _gcd(_gcd(a, b), c) != 1:
                continue
            if a == b and b == c:
                total += 2
            elif b == 0 and a == c:
                total += 3
            else:
                total += 6
    return total


def lattice_counts(gram, long bound):
    """Vector counts by half-norm of a positive-definite integral lattice.

    ``gram`` is an n x n (n <= 4) even-diagonal symmetric integer matrix;
    returns counts[v] = #{x : x^t G x / 2 == v} for 0 <= v <= bound.
    """
    cdef int n = len(gram)
    if n < 1 or n > 4:
        raise ValueError("lattice_counts supports ranks 1 through 4")
    cdef long G[4][4]
    cdef double q[4][4]
    cdef int i, j, k, l
    for i in range(n):
        row = gram[i]
        for j in range(n):
            G[i][j] = row[j]
            q[i][j] = <double>G[i][j]
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("gram matrix is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]

    counts = [0] * (bound + 1)
    cdef long limit = 2 * bound
    cdef double budget = limit + 1e-6
    cdef double center[4]
    cdef double remaining[4]
    cdef long x[4]
    cdef long lo[4]
    cdef long hi[4]
    cdef double centers_stack[4][4]
    cdef int level
    cdef double r, base, term
    cdef long value, half

    for i in range(n):
        centers_stack[n - 1][i] = 0.0
    level = n - 1
    remaining[level] = budget
    _set_range(q, centers_stack, remaining, lo, hi, x, level)
    while True:
        if x[level] > hi[level]:
            level += 1
            if level >= n:
                break
            x[level] += 1
            continue
        if level == 0:
            # Exact integer evaluation of the full candidate vector.
            value = 0
            for i in range(n):
                value += G[i][i] * x[i] * x[i]
                for j in range(i + 1, n):
                    value += 2 * G[i][j] * x[i] * x[j]
            if 0 <= value <= limit and value % 2 == 0:
                half = value / 2
                counts[half] += 1
            x[0] += 1
            continue
        # Descend one level with the budget left after coordinate x[level].
        base = x[level] + centers_stack[level][level]
        term = q[level][level] * base * base
        if term <= remaining[level]:
            for i in range(level):
                centers_stack[level - 1][i] = centers_stack[level][i] + q[i][level] * x[level]
            remaining[level - 1] = remaining[level] - term
            level -= 1
            _set_range(q, centers_stack, remaining, lo, hi, x, level)
        else:
            x[level] += 1
    return counts


cdef void _set_range(double q[4][4], double centers_stack[4][4], double remaining[4],
                     long lo[4], long hi[4], long x[4], int level) noexcept:
    cdef double r = sqrt((remaining[level] + 1e-9) / q[level][level]) + 1e-9
    cdef double base = -centers_stack[level][level]
    lo[level] = <long>(base - r) - 1
    hi[level] = <long>(base + r) + 1
    x[level] = lo[level]
