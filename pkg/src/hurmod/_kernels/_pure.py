"""Pure-Python reference implementations of the hot kernels.

Same contract as the Cython module ``_speed``; see ``_kernels.__init__``
for the selection logic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt


def hurwitz_sixfold(d: int) -> int:
    """Six times the Hurwitz class number H(d), for d < 0 with d = 0,1 mod 4.

    Runs over the reduced positive-definite forms (a, b, c) of discriminant
    d, i.e. -a < b <= a <= c with b >= 0 when a == c.  The class of forms
    proportional to (e, e, e) carries weight 1/3 and the class of forms
    proportional to (e, 0, e) carries weight 1/2; all remaining classes
    carry weight 1, so the sixfold total is an integer.
    """
    total = 0
    amax = isqrt(-d // 3)
    for a in range(1, amax + 1):
        foura = 4 * a
        for b in range(-a + 1, a + 1):
            num = b * b - d
            if num % foura:
                continue
            c = num // foura
            if c < a:
                continue
            if a == c and b < 0:
                continue
            if a == b == c:
                total += 2
            elif b == 0 and a == c:
                total += 3
            else:
                total += 6
    return total


def hurwitz_sixfold_primitive(d: int) -> int:
    """Like :func:`hurwitz_sixfold` but over primitive forms only."""
    total = 0
    amax = isqrt(-d // 3)
    for a in range(1, amax + 1):
        foura = 4 * a
        for b in range(-a + 1, a + 1):
            num = b * b - d
            if num % foura:
                continue
            c = num // foura
            if c < a:
                continue
            if a == c and b < 0:
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            if a == b == c:
                total += 2
            elif b == 0 and a == c:
                total += 3
            else:
                total += 6
    return total


def lattice_counts(gram: list[list[int]], bound: int) -> list[int]:
    """Vector counts of a positive-definite integral lattice by half-norm.

    ``gram`` is the matrix of an even-diagonal symmetric bilinear form B,
    and the returned list has ``counts[v] = #{x in Z^n : B(x, x)/2 == v}``
    for 0 <= v <= bound (the zero vector contributes to counts[0]).
    Enumeration is Fincke-Pohst over an exact rational Cholesky
    decomposition, so no vector is missed or double counted.
    """
    n = len(gram)
    # B(x, x) = sum_i q[i][i] * (x_i + sum_{j > i} q[i][j] * x_j)**2
    q = [[Fraction(gram[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("gram matrix is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    limit = Fraction(2 * bound)
    counts = [0] * (bound + 1)

    def descend(i: int, remaining: Fraction, center: list[Fraction]) -> None:
        qi = q[i][i]
        r = _frac_sqrt_upper(remaining / qi)
        base = -center[i]
        for xi in range(_ceil_frac(base - r), _floor_frac(base + r) + 1):
            term = qi * (xi + center[i]) ** 2
            if term > remaining:
                continue
            if i == 0:
                value = limit - remaining + term
                half = value / 2
                if half.denominator == 1:
                    counts[int(half)] += 1
            else:
                new_center = center[:]
                for j in range(i):
                    new_center[j] += q[j][i] * xi
                descend(i - 1, remaining - term, new_center)

    descend(n - 1, limit, [Fraction(0)] * n)
    return counts


def _frac_sqrt_upper(x: Fraction) -> Fraction:
    """A rational upper bound for sqrt(x), x >= 0."""
    if x <= 0:
        return Fraction(0)
    num, den = x.numerator, x.denominator
    return Fraction(isqrt(num * den) + 1, den)


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _floor_frac(x: Fraction) -> int:
    return x.numerator // x.denominator
