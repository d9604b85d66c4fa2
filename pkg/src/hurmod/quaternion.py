"""Definite quaternion arithmetic at prime level.

Constructs the rational quaternion algebra ramified exactly at a prime N
and infinity, a maximal order in it, and the full set of left ideal
classes, with completeness certified by the exact mass identity
sum(1/w_i) = (N-1)/12 over the half-unit counts w_i of the right orders.
From the trace-zero theta series of the orders it assembles the integral
cusp series whose coefficients are congruent to the scaled
Cohen-Eisenstein coefficients.

Everything is exact: lattices are integer row matrices over a common
denominator, kept in Hermite normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, lcm

from . import _kernels
from .arith import is_prime, kronecker, level_constants, primes_up_to
from .errors import CapacityError
from .jacobi import DiscSeries, disc_keys

SUPPORTED_LEVEL_BOUND = 50
TRIVIAL_CUSP_LEVELS = (2, 3, 5, 7, 13)

Quat = tuple[Fraction, Fraction, Fraction, Fraction]


# ---------------------------------------------------------------------------
# The algebra.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuaternionAlgebra:
    """Basis 1, i, j, k with i*i = a, j*j = b, k = i*j = -j*i (a, b < 0)."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a >= 0 or self.b >= 0:
            raise ValueError("only definite algebras are supported")

    def one(self) -> Quat:
        return (Fraction(1), Fraction(0), Fraction(0), Fraction(0))

    def gens(self) -> list[Quat]:
        z = Fraction(0)
        o = Fraction(1)
        return [(o, z, z, z), (z, o, z, z), (z, z, o, z), (z, z, z, o)]

    def mul(self, x: Quat, y: Quat) -> Quat:
        a, b = self.a, self.b
        x0, x1, x2, x3 = x
        y0, y1, y2, y3 = y
        return (
            x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3,
            x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
            x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
            x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
        )

    @staticmethod
    def conj(x: Quat) -> Quat:
        return (x[0], -x[1], -x[2], -x[3])

    @staticmethod
    def trd(x: Quat) -> Fraction:
        return 2 * x[0]

    def nrd(self, x: Quat) -> Fraction:
        x0, x1, x2, x3 = x
        return x0 * x0 - self.a * x1 * x1 - self.b * x2 * x2 + self.a * self.b * x3 * x3

    def pair(self, x: Quat, y: Quat) -> Fraction:
        """The bilinear form trd(x * conj(y)); pair(x, x) = 2 nrd(x)."""
        return self.trd(self.mul(x, self.conj(y)))


def hilbert_symbol(a: int, b: int, place) -> int:
    """Hilbert symbol (a, b) at a finite prime or at the place 'inf'."""
    if a == 0 or b == 0:
        raise ValueError("hilbert symbol requires nonzero arguments")
    if place == "inf":
        return -1 if (a < 0 and b < 0) else 1
    p = place
    if not is_prime(p):
        raise ValueError(f"expected a prime place, got {p}")
    alpha, u = 0, a
    while u % p == 0:
        u //= p
        alpha += 1
    beta, v = 0, b
    while v % p == 0:
        v //= p
        beta += 1
    if p == 2:
        eps = ((u - 1) // 2) * ((v - 1) // 2)
        omega = alpha * ((v * v - 1) // 8) + beta * ((u * u - 1) // 8)
        return -1 if (eps + omega) % 2 else 1
    sign = 1
    if alpha * beta * ((p - 1) // 2) % 2:
        sign = -sign
    if beta % 2 and kronecker(u, p) == -1:
        sign = -sign
    if alpha % 2 and kronecker(v, p) == -1:
        sign = -sign
    return sign


def ramified_places(a: int, b: int) -> set:
    """All places (finite primes and possibly 'inf') where (a, b) ramifies."""
    candidates: set = {2, "inf"}
    for value in (a, b):
        for p in _prime_divisors(abs(value)):
            candidates.add(p)
    return {p for p in candidates if hilbert_symbol(a, b, p) == -1}


def _prime_divisors(n: int) -> list[int]:
    out = []
    for p in primes_up_to(isqrt(max(n, 1)) + 1):
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
    if n > 1:
        out.append(n)
    return out


def ramified_algebra(n: int) -> QuaternionAlgebra:
    """A definite algebra ramified exactly at {n, inf}, n prime.

    The (a, b) recipe per congruence class of n is only a search seed; the
    Hilbert-symbol verification is authoritative.
    """
    if not is_prime(n):
        raise ValueError(f"level must be prime, got {n}")
    seeds: list[tuple[int, int]] = []
    if n == 2:
        seeds.append((-1, -1))
    elif n % 4 == 3:
        seeds.append((-1, -n))
    elif n % 8 == 5:
        seeds.append((-2, -n))
    else:  # n = 1 mod 8
        for q in primes_up_to(1000):
            if q % 4 == 3 and kronecker(q, n) == -1:
                seeds.append((-q, -n))
    for a, b in seeds:
        if ramified_places(a, b) == {n, "inf"}:
            return QuaternionAlgebra(a, b)
    raise CapacityError(f"no ramified algebra found for level {n} within the search bound")


# ---------------------------------------------------------------------------
# Lattices: integer row matrices over a common denominator, in HNF.
# ---------------------------------------------------------------------------


def _hnf(rows: list[list[int]]) -> list[list[int]]:
    """Row Hermite normal form of a full-rank integer row span (4 columns).

    Returns 4 rows, upper triangular with positive diagonal and entries
    above each pivot reduced into [0, pivot).
    """
    work = [r[:] for r in rows if any(r)]
    basis: list[list[int]] = []
    for col in range(4):
        pool = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        if not pool:
            continue
        while len(pool) > 1:
            pool.sort(key=lambda r: abs(r[col]))
            head = pool[0]
            new_pool = [head]
            for r in pool[1:]:
                q = r[col] // head[col]
                reduced = [x - q * y for x, y in zip(r, head)]
                if reduced[col] != 0:
                    new_pool.append(reduced)
                elif any(reduced):
                    rest.append(reduced)
            if len(new_pool) == 1:
                pool = new_pool
                break
            pool = new_pool
        pivot = pool[0]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        basis.append(pivot)
        work = rest
    if len(basis) != 4:
        raise ValueError("generators do not span a full lattice")
    # Reduce entries above each pivot, in increasing pivot order so that a
    # later reduction (touching only later columns) cannot undo an earlier one.
    for i in range(1, 4):
        for j in range(i):
            q = basis[j][i] // basis[i][i]
            if q:
                basis[j] = [x - q * y for x, y in zip(basis[j], basis[i])]
    return basis


@dataclass(frozen=True)
class Lattice:
    """Full-rank lattice in a quaternion algebra: rows mat / den in HNF."""

    alg: QuaternionAlgebra
    mat: tuple[tuple[int, int, int, int], ...]
    den: int

    @classmethod
    def from_generators(cls, alg: QuaternionAlgebra, gens: list[Quat]) -> "Lattice":
        den = lcm(*(f.denominator for g in gens for f in g)) if gens else 1
        rows = [[int(f * den) for f in g] for g in gens]
        mat = _hnf(rows)
        shared = gcd(den, *(x for row in mat for x in row))
        if shared > 1:
            mat = [[x // shared for x in row] for row in mat]
            den //= shared
        return cls(alg, tuple(tuple(row) for row in mat), den)

    def basis(self) -> list[Quat]:
        return [tuple(Fraction(x, self.den) for x in row) for row in self.mat]

    def scaled(self, scalar: Fraction) -> "Lattice":
        scalar = Fraction(scalar)
        return Lattice.from_generators(
            self.alg, [tuple(scalar * f for f in b) for b in self.basis()]
        )

    def multiply(self, other: "Lattice") -> "Lattice":
        alg = self.alg
        gens = [alg.mul(x, y) for x in self.basis() for y in other.basis()]
        return Lattice.from_generators(alg, gens)

    def add(self, other: "Lattice") -> "Lattice":
        return Lattice.from_generators(self.alg, self.basis() + other.basis())

    def conjugate(self) -> "Lattice":
        return Lattice.from_generators(self.alg, [self.alg.conj(b) for b in self.basis()])

    def covolume(self) -> Fraction:
        det = 1
        for idx in range(4):
            det *= self.mat[idx][idx]
        return Fraction(det, self.den**4)

    def contains(self, q: Quat) -> bool:
        target = [Fraction(f) * self.den for f in q]
        coeffs = [Fraction(0)] * 4
        for col in range(4):
            residual = target[col] - sum(coeffs[i] * self.mat[i][col] for i in range(col))
            c = residual / self.mat[col][col]
            if c.denominator != 1:
                return False
            coeffs[col] = c
        return True

    def contains_lattice(self, other: "Lattice") -> bool:
        return all(self.contains(b) for b in other.basis())

    def index_in(self, super_lattice: "Lattice") -> Fraction:
        return self.covolume() / super_lattice.covolume()

    def gram(self) -> list[list[Fraction]]:
        basis = self.basis()
        alg = self.alg
        return [[alg.pair(x, y) for y in basis] for x in basis]

    def gram_int(self) -> list[list[int]]:
        g = self.gram()
        out = []
        for row in g:
            int_row = []
            for val in row:
                if val.denominator != 1:
                    raise ValueError("lattice is not integral for the trace pairing")
                int_row.append(val.numerator)
            out.append(int_row)
        return out

    def is_closed_under_multiplication(self) -> bool:
        basis = self.basis()
        return all(
            self.contains(self.alg.mul(x, y)) for x in basis for y in basis
        )


# ---------------------------------------------------------------------------
# Orders.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuatOrder:
    """An order in a definite quaternion algebra, with its unit data.

    ``gram`` is the integer matrix of trd(e_i conj(e_j)); its determinant
    is the square of the reduced discriminant.  ``w`` is half the number
    of units (elements of reduced norm one).
    """

    lattice: Lattice
    gram: tuple[tuple[int, ...], ...]
    w: int

    @property
    def alg(self) -> QuaternionAlgebra:
        return self.lattice.alg

    @property
    def reduced_discriminant(self) -> int:
        det = _det4([list(r) for r in self.gram])
        root = isqrt(det)
        assert root * root == det, "gram determinant is not a square"
        return root


def _det4(m: list[list[int]]) -> int:
    total = 0
    # Laplace over the first row; 4x4 only.
    for j in range(4):
        minor = [[m[r][c] for c in range(4) if c != j] for r in range(1, 4)]
        det3 = (
            minor[0][0] * (minor[1][1] * minor[2][2] - minor[1][2] * minor[2][1])
            - minor[0][1] * (minor[1][0] * minor[2][2] - minor[1][2] * minor[2][0])
            + minor[0][2] * (minor[1][0] * minor[2][1] - minor[1][1] * minor[2][0])
        )
        total += (-1) ** j * m[0][j] * det3
    return total


def _order_from_lattice(lat: Lattice) -> QuatOrder:
    gram = lat.gram_int()
    counts = _kernels.lattice_counts(gram, 1)
    return QuatOrder(
        lattice=lat,
        gram=tuple(tuple(row) for row in gram),
        w=counts[1] // 2,
    )


def maximal_order(alg: QuaternionAlgebra, n: int) -> QuatOrder:
    """A maximal order: reduced discriminant n, found by prime saturation.

    Starts from the obvious lattice spanned by 1, i, j, k and repeatedly
    adjoins integral elements with denominator a prime dividing the excess
    of the discriminant, closing under multiplication each time.  The
    discriminant check certifies maximality.
    """
    lat = Lattice.from_generators(alg, alg.gens())
    while True:
        disc = _reduced_disc(lat)
        if disc == n:
            order = _order_from_lattice(lat)
            assert order.reduced_discriminant == n
            assert lat.contains(alg.one()) and lat.is_closed_under_multiplication()
            return order
        excess = disc // n
        assert disc % n == 0, "discriminant lost the level factor"
        enlarged = None
        for ell in _prime_divisors(excess):
            enlarged = _saturate_at(lat, ell)
            if enlarged is not None:
                break
        if enlarged is None:
            raise RuntimeError(f"saturation stalled at discriminant {disc} (level {n})")
        lat = enlarged


def _reduced_disc(lat: Lattice) -> int:
    det = _det4(lat.gram_int())
    root = isqrt(det)
    if root * root != det:
        raise ValueError("order discriminant is not a perfect square")
    return root


def _saturate_at(lat: Lattice, ell: int) -> Lattice | None:
    alg = lat.alg
    basis = lat.basis()
    for code in range(1, ell**4):
        digits = []
        value = code
        for _ in range(4):
            digits.append(value % ell)
            value //= ell
        x = tuple(
            sum((Fraction(digits[i], ell) * basis[i][c] for i in range(4)), Fraction(0))
            for c in range(4)
        )
        if lat.contains(x):
            continue
        if alg.trd(x).denominator != 1 or alg.nrd(x).denominator != 1:
            continue
        candidate = _ring_closure(lat, x)
        if candidate is not None and candidate.covolume() < lat.covolume():
            return candidate
    return None


def _ring_closure(lat: Lattice, x: Quat) -> Lattice | None:
    current = Lattice.from_generators(lat.alg, lat.basis() + [x])
    for _ in range(8):
        grown = current.add(current.multiply(current))
        if grown.covolume() == current.covolume():
            return current
        current = grown
    return None


# ---------------------------------------------------------------------------
# Ideal classes.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdealClassSet:
    """The left ideal classes of a maximal order at prime level.

    ``classes`` pairs the right order of each class representative with
    its half-unit count w_i; completeness is certified by the mass
    identity, and the unit product identity prod(w_i) = dCoh is asserted.
    """

    N: int
    algebra: QuaternionAlgebra
    classes: tuple[tuple[QuatOrder, int], ...]
    mass: Fraction

    @property
    def w_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(w for _, w in self.classes))


def _norm_of_ideal(ideal: Lattice, order: Lattice) -> int:
    index = ideal.index_in(order)
    assert index.denominator == 1, "ideal is not integral"
    root = isqrt(index.numerator)
    assert root * root == index.numerator, "ideal index is not a square"
    return root


def _right_order(ideal: Lattice, norm: int) -> Lattice:
    product = ideal.conjugate().multiply(ideal)
    return product.scaled(Fraction(1, norm))


def _left_ideals_of_norm(order: Lattice, ell: int) -> list[Lattice]:
    """The ell + 1 left ideals of the given norm ell (ell coprime to the level)."""
    alg = order.alg
    basis = order.basis()
    seen: dict[tuple, Lattice] = {}
    scaled = [tuple(ell * f for f in b) for b in basis]
    for code in range(1, ell**4):
        digits = []
        value = code
        for _ in range(4):
            digits.append(value % ell)
            value //= ell
        x = tuple(
            sum((digits[i] * basis[i][c] for i in range(4)), Fraction(0))
            for c in range(4)
        )
        if alg.nrd(x).numerator % ell:
            continue
        gens = [alg.mul(b, x) for b in basis] + list(scaled)
        ideal = Lattice.from_generators(alg, gens)
        if ideal.index_in(order) != ell * ell:
            continue
        seen.setdefault((ideal.mat, ideal.den), ideal)
    ideals = list(seen.values())
    assert len(ideals) == ell + 1, f"expected {ell + 1} neighbor ideals, found {len(ideals)}"
    return ideals


def _content_normalized(ideal: Lattice) -> Lattice:
    shared = gcd(*(x for row in ideal.mat for x in row))
    if shared > 1 and shared % ideal.den == 0:
        factor = shared // ideal.den
        if factor > 1:
            return ideal.scaled(Fraction(1, factor))
    return ideal


def _ideals_equivalent(
    left_order: Lattice, i1: Lattice, n1: int, i2: Lattice, n2: int
) -> bool:
    """Left ideals i1 = i2 * b for some invertible b iff conj(i1) * i2
    represents the norm n1 * n2."""
    colon = i1.conjugate().multiply(i2)
    target = n1 * n2
    counts = _kernels.lattice_counts(colon.gram_int(), target)
    return counts[target] > 0


@lru_cache(maxsize=None)
def ideal_classes(n: int) -> IdealClassSet:
    """Complete the left ideal class set by neighbor search at a small prime.

    New classes are recognized by the theta series of their right orders
    (to precision 4n), with collisions settled by the exact equivalence
    test; the breadth-first search stops exactly when the mass identity
    sum(1/w) = (n-1)/12 is reached, which certifies completeness
    independently of the novelty tests.
    """
    if not is_prime(n):
        raise ValueError(f"level must be prime, got {n}")
    if n > SUPPORTED_LEVEL_BOUND:
        raise CapacityError(f"level {n} exceeds the supported bound {SUPPORTED_LEVEL_BOUND}")
    constants = level_constants(n)
    target_mass = Fraction(n - 1, 12)
    alg = ramified_algebra(n)
    base = maximal_order(alg, n)

    theta_prec = 4 * n
    classes: list[tuple[Lattice, int, QuatOrder]] = []  # (ideal, norm, right order)
    thetas: list[tuple[int, ...]] = []
    mass = Fraction(0)

    def register(ideal: Lattice, norm: int, order_lat: Lattice) -> None:
        nonlocal mass
        order = _order_from_lattice(order_lat)
        assert order.reduced_discriminant == n
        classes.append((ideal, norm, order))
        thetas.append(tuple(_kernels.lattice_counts([list(r) for r in order.gram], theta_prec)))
        mass += Fraction(1, order.w)
        if mass > target_mass:
            raise RuntimeError(
                f"mass overshoot at level {n}: {mass} > {target_mass} "
                "(ideal equivalence test failed)"
            )

    register(base.lattice, 1, base.lattice)
    for ell in (p for p in (2, 3, 5) if p != n):
        frontier = list(range(len(classes)))
        while frontier and mass != target_mass:
            idx = frontier.pop(0)
            ideal, norm, right = classes[idx]
            for neighbor in _left_ideals_of_norm(right.lattice, ell):
                if mass == target_mass:
                    break
                product = _content_normalized(ideal.multiply(neighbor))
                cand_norm = _norm_of_ideal(product, base.lattice)
                cand_right = _right_order(product, cand_norm)
                cand_theta = tuple(
                    _kernels.lattice_counts(cand_right.gram_int(), theta_prec)
                )
                is_new = True
                for existing_idx, theta in enumerate(thetas):
                    if theta != cand_theta:
                        continue
                    known_ideal, known_norm, _ = classes[existing_idx]
                    if _ideals_equivalent(
                        base.lattice, known_ideal, known_norm, product, cand_norm
                    ):
                        is_new = False
                        break
                if is_new:
                    register(product, cand_norm, cand_right)
                    frontier.append(len(classes) - 1)
        if mass == target_mass:
            break
    if mass != target_mass:
        raise CapacityError(f"neighbor search at level {n} did not complete the mass")

    w_product = 1
    for _, _, order in classes:
        w_product *= order.w
    assert w_product == constants.dCoh, (
        f"unit product {w_product} differs from the denominator constant {constants.dCoh}"
    )
    return IdealClassSet(
        N=n,
        algebra=alg,
        classes=tuple((order, order.w) for _, _, order in classes),
        mass=mass,
    )


# ---------------------------------------------------------------------------
# Theta series and the cusp series.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ThetaTable:
    """Counts of trace-zero vectors of Z + 2R by reduced norm."""

    prec: int
    coeffs: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]


def theta_trace_zero(order: QuatOrder, prec: int) -> ThetaTable:
    """Theta series of the trace-zero part of Z + 2R for the order R."""
    if prec < 4:
        raise ValueError(f"precision must be at least 4, got {prec}")
    alg = order.alg
    doubled = [tuple(2 * f for f in b) for b in order.lattice.basis()]
    s_lattice = Lattice.from_generators(alg, [alg.one()] + doubled)
    basis = s_lattice.basis()
    den = lcm(*(alg.trd(b).denominator for b in basis))
    trace_row = [int(alg.trd(b) * den) for b in basis]
    kernel = _integer_kernel(trace_row)
    kernel_basis = [
        tuple(
            sum((coeff[i] * basis[i][c] for i in range(4)), Fraction(0))
            for c in range(4)
        )
        for coeff in kernel
    ]
    gram = [[alg.pair(x, y) for y in kernel_basis] for x in kernel_basis]
    gram_int = [[v.numerator if v.denominator == 1 else None for v in row] for row in gram]
    if any(v is None for row in gram_int for v in row):
        raise RuntimeError("trace-zero lattice has a non-integral pairing")
    counts = _kernels.lattice_counts(gram_int, prec)
    return ThetaTable(prec=prec, coeffs=tuple(counts))


def _integer_kernel(row: list[int]) -> list[list[int]]:
    """A basis of the rank-3 kernel of a nonzero integer linear form on Z^4."""
    work = row[:]
    transform = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    while sum(1 for v in work if v) > 1:
        nonzero = sorted((i for i in range(4) if work[i]), key=lambda i: abs(work[i]))
        small, big = nonzero[0], nonzero[1]
        q = work[big] // work[small]
        work[big] -= q * work[small]
        transform[big] = [x - q * y for x, y in zip(transform[big], transform[small])]
    kernel = [transform[i] for i in range(4) if work[i] == 0]
    assert len(kernel) == 3
    return kernel


@lru_cache(maxsize=None)
def weighted_theta(n: int, prec: int) -> tuple[Fraction, ...]:
    """The unit-weighted combination sum_i (dCoh / w_i) * theta_i / 2.

    Its constant term is nCoh / 2 and all other coefficients are integers.
    """
    constants = level_constants(n)
    class_set = ideal_classes(n)
    total = [Fraction(0)] * (prec + 1)
    for order, w in class_set.classes:
        theta = theta_trace_zero(order, prec)
        scale = Fraction(constants.dCoh, 2 * w)
        for m in range(prec + 1):
            total[m] += scale * theta[m]
    assert total[0] == Fraction(constants.nCoh, 2)
    return tuple(total)


def build_phiN(n: int, dmax: int) -> DiscSeries:
    """The integral cusp series at prime level n, as a discriminant table.

    Coefficient at D is the q**(-D) coefficient of the unit-weighted theta
    combination minus nCoh/2 times the theta series of the initial order's
    class; the halves cancel, the constant term is zero, and every
    coefficient is an integer.  For levels with nCoh = 1 the zero series
    already satisfies the required congruence.
    """
    if not is_prime(n):
        raise ValueError(f"level must be prime, got {n}")
    if n in TRIVIAL_CUSP_LEVELS:
        return DiscSeries(n, "Cuspidal", dmax, {d: Fraction(0) for d in disc_keys(dmax)})
    constants = level_constants(n)
    class_set = ideal_classes(n)
    combined = weighted_theta(n, dmax)
    base_theta = theta_trace_zero(class_set.classes[0][0], dmax)
    coeffs: dict[int, Fraction] = {}
    for d in disc_keys(dmax):
        value = combined[-d] - Fraction(constants.nCoh, 2) * base_theta[-d]
        if value.denominator != 1:
            raise RuntimeError(f"half-integer leak in the cusp series at D = {d}")
        coeffs[d] = value
    return DiscSeries(n, "Cuspidal", dmax, coeffs)


@dataclass(frozen=True)
class LemmaCongruenceCertificate:
    """Outcome of the cusp-series congruence check at prime level."""

    N: int
    dmax: int
    modulus: int
    holds: bool
    witness: int | None = None

    def __bool__(self) -> bool:
        return self.holds


def verify_lemma_congruence(n: int, dmax: int) -> LemmaCongruenceCertificate:
    """Check dCoh * (Cohen-Eisenstein table minus its constant) = cusp series
    mod nCoh, coefficientwise down to -dmax."""
    from .classnum import cohen_coeff

    constants = level_constants(n)
    phi = build_phiN(n, dmax)
    for d in disc_keys(dmax):
        if d == 0:
            continue
        lhs = constants.dCoh * cohen_coeff(n, d)
        diff = lhs - phi[d]
        if diff.denominator != 1 or diff.numerator % constants.nCoh:
            return LemmaCongruenceCertificate(n, dmax, constants.nCoh, False, witness=d)
    return LemmaCongruenceCertificate(n, dmax, constants.nCoh, True)
