"""Class-number engines.

Four routes to the same weighted counts, kept deliberately independent of
each other so they can certify one another:

* :func:`hurwitz` / :func:`hurwitz_primitive` enumerate reduced forms.
* :func:`hurwitz_generalized` evaluates the closed level-N formula
  2 H(D) - (1 - (D'|N)) H(D'), where D' strips the level from the
  conductor of D.
* :func:`cohen_coeff` evaluates the Cohen-Eisenstein coefficient
  (1/2) (1 - (D'|N)) H(D').
* :func:`orbit_oracle` computes actual orbit representatives of the
  level-N form class set, with stabilizer orders, by explicit matrix
  searches; it never consults the closed formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping
from functools import lru_cache
from math import gcd, isqrt

from . import _kernels
from .arith import d_prime, index_gamma0, is_discriminant, is_prime, kronecker, sqrt_count
from .errors import CapacityError

ORACLE_DISC_BOUND = 2000
ORACLE_LEVEL_BOUND = 50


_hurwitz_memo: dict[int, Fraction] = {}


def hurwitz(d: int) -> Fraction:
    """Hurwitz class number H(d).

    Zero for d > 0 and for d = 2,3 mod 4; -1/12 at d = 0; otherwise the
    weighted count of classes of positive-definite binary quadratic forms
    of discriminant d.  Memoized; the CLI can seed and spill the memo
    through a persistent cache, but every value in it is reproducible.
    """
    if d > 0 or not is_discriminant(d):
        return Fraction(0)
    if d == 0:
        return Fraction(-1, 12)
    cached = _hurwitz_memo.get(d)
    if cached is None:
        cached = Fraction(_kernels.hurwitz_sixfold(d), 6)
        _hurwitz_memo[d] = cached
    return cached


def seed_hurwitz_memo(values: Mapping[int, Fraction]) -> int:
    """Install externally cached values; malformed entries are skipped.

    Returns the number of entries accepted.  Only negative discriminants
    with denominator dividing 6 are plausible, everything else is ignored
    so a corrupted cache can never poison results structurally.
    """
    accepted = 0
    for d, value in values.items():
        if d >= 0 or d % 4 not in (0, 1):
            continue
        if value.denominator not in (1, 2, 3, 6) or value <= 0:
            continue
        _hurwitz_memo[d] = value
        accepted += 1
    return accepted


def export_hurwitz_memo() -> dict[int, Fraction]:
    return dict(_hurwitz_memo)


@lru_cache(maxsize=None)
def hurwitz_primitive(d: int) -> Fraction:
    """Primitive-forms-only Hurwitz class number, for d < 0."""
    if d >= 0:
        raise ValueError(f"expected a negative discriminant, got {d}")
    if not is_discriminant(d):
        return Fraction(0)
    return Fraction(_kernels.hurwitz_sixfold_primitive(d), 6)


def hurwitz_generalized(n: int, d: int) -> Fraction:
    """Level-n Hurwitz class number by the closed formula (n = 1 or prime).

    At d = 0 this is -iota(n)/12 where iota is the index of the level-n
    congruence subgroup; for d < 0 it is 2 H(d) - (1 - (d'|n)) H(d').
    """
    if n == 1:
        return hurwitz(d)
    if not is_prime(n):
        raise ValueError(f"level must be 1 or prime, got {n}")
    if d > 0 or not is_discriminant(d):
        return Fraction(0)
    if d == 0:
        return Fraction(-index_gamma0(n), 12)
    dp = d_prime(d, n)
    return 2 * hurwitz(d) - (1 - kronecker(dp, n)) * hurwitz(dp)


def cohen_coeff(n: int, d: int) -> Fraction:
    """Cohen-Eisenstein coefficient at prime level n.

    (n-1)/24 at d = 0; for d < 0 it is (1/2)(1 - (d'|n)) H(d'), which is 0,
    H(d')/2, or H(d') according as n splits, ramifies, or is inert in the
    order of discriminant d'.
    """
    if not is_prime(n):
        raise ValueError(f"level must be prime, got {n}")
    if d > 0 or not is_discriminant(d):
        return Fraction(0)
    if d == 0:
        return Fraction(n - 1, 24)
    dp = d_prime(d, n)
    return Fraction(1 - kronecker(dp, n), 2) * hurwitz(dp)


# ---------------------------------------------------------------------------
# The orbit oracle: explicit level-N class representatives.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadForm:
    """Integral binary quadratic form a x**2 + b x y + c y**2."""

    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def content(self) -> int:
        return gcd(gcd(self.a, self.b), self.c)

    def value(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def transform(self, p: int, q: int, r: int, s: int) -> "QuadForm":
        """Act by the determinant-one matrix with columns (p, r), (q, s)."""
        a2 = self.value(p, r)
        c2 = self.value(q, s)
        b2 = 2 * self.a * p * q + self.b * (p * s + q * r) + 2 * self.c * r * s
        return QuadForm(a2, b2, c2)


@dataclass(frozen=True)
class OrbitTable:
    """Level-N orbit representatives of forms with a = 0 mod N.

    ``orbits`` pairs each representative with the order of its stabilizer
    inside the level-N group (6, 4, or 2 for primitive classes, counting
    the central -1); the weighted count uses 2/order so the central
    element is divided out.
    """

    level: int
    disc: int
    orbits: tuple[tuple[QuadForm, int], ...]

    @property
    def weighted_count(self) -> Fraction:
        return sum((Fraction(2, order) for _, order in self.orbits), Fraction(0))

    @property
    def primitive_count(self) -> int:
        return sum(1 for form, _ in self.orbits if form.content == 1)

    @property
    def level_primitive_count(self) -> int:
        """Classes primitive after the level is divided out of a.

        gcd(a/N, b, c) = 1 is the primitivity notion under which the
        square-root counting identity holds; it differs from plain
        primitivity exactly when N divides the content.
        """
        return sum(
            1
            for form, _ in self.orbits
            if gcd(gcd(form.a // self.level, form.b), form.c) == 1
        )


def _t_normalize(form: QuadForm) -> QuadForm:
    """Shift b into (-a, a] by the unipotent generator; a is untouched."""
    a, b, c = form.a, form.b, form.c
    b2 = b % (2 * a)
    if b2 > a:
        b2 -= 2 * a
    c2 = (b2 * b2 - form.disc) // (4 * a)
    return QuadForm(a, b2, c2)


def _reduced_forms(d: int) -> list[QuadForm]:
    """All reduced positive-definite forms of discriminant d < 0."""
    out = []
    for a in range(1, isqrt(-d // 3) + 1):
        for b in range(-a + 1, a + 1):
            num = b * b - d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (a == c and b < 0):
                continue
            out.append(QuadForm(a, b, c))
    return out


def _complete_column(a: int, c: int) -> tuple[int, int, int, int]:
    """Extend the primitive column (a, c) to a determinant-one matrix."""
    g, s, t = _egcd(a, c)
    assert g == 1
    # a*s + c*t = 1, so matrix [[a, -t], [c, s]] has determinant 1.
    return a, -t, c, s


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _first_columns(form: QuadForm, target: int, level: int):
    """Yield primitive columns (p, r) with form(p, r) == target, level | r.

    These are the candidate first columns of level-N matrices carrying
    ``form`` to a form with leading coefficient ``target``; the solution
    set is finite since the form is positive definite.
    """
    a, b, c, d = form.a, form.b, form.c, form.disc
    # a p**2 + b p r + c r**2 = target; for fixed r the p-discriminant is
    # r**2 d + 4 a target >= 0, so r**2 <= 4 a target / |d|.
    rbound = isqrt(4 * a * target // -d)
    for r in range(-rbound, rbound + 1):
        if r % level:
            continue
        disc_p = r * r * d + 4 * a * target
        if disc_p < 0:
            continue
        root = isqrt(disc_p)
        if root * root != disc_p:
            continue
        for pr in {(-b * r + root), (-b * r - root)}:
            if pr % (2 * a):
                continue
            p = pr // (2 * a)
            if gcd(p, r) == 1:
                yield p, r


def _equivalent_level(f1: QuadForm, f2: QuadForm, level: int) -> bool:
    """Exact level-N equivalence test by exhibiting a matrix.

    Complete: any matrix carrying f1 to f2 has a first column (p, r) with
    f1(p, r) = f2.a and level | r, all of which are enumerated.
    """
    if f1.disc != f2.disc:
        return False
    twoa = 2 * f2.a
    for p, r in _first_columns(f1, f2.a, level):
        p_, q_, r_, s_ = _complete_column(p, r)
        moved = f1.transform(p_, q_, r_, s_)
        # Residual freedom is the unipotent column shear, which moves b by
        # multiples of 2 a while fixing a.
        if (moved.b - f2.b) % twoa == 0:
            return True
    return False


def _stabilizer_order(form: QuadForm, level: int) -> int:
    """Order of the stabilizer of ``form`` in the level-N group."""
    count = 0
    twoa = 2 * form.a
    for p, r in _first_columns(form, form.a, level):
        p_, q_, r_, s_ = _complete_column(p, r)
        moved = form.transform(p_, q_, r_, s_)
        if (moved.b - form.b) % twoa == 0:
            count += 1
    return count


def orbit_oracle(n: int, d: int, bound: int = ORACLE_DISC_BOUND) -> OrbitTable:
    """Representatives of the level-n classes of forms with n | a, disc d.

    Seeds one candidate per line of the projective line mod n inside each
    reduced class (every level-n class arises this way: lifts of the same
    line differ by a level-n matrix), then merges seeds with the exact
    equivalence test.  Deliberately brute-force; the weighted count is an
    independent oracle for the closed formula.
    """
    if not is_prime(n) and n != 1:
        raise ValueError(f"level must be 1 or prime, got {n}")
    if d >= 0 or not is_discriminant(d):
        raise ValueError(f"expected a negative discriminant, got {d}")
    if -d > bound or n > ORACLE_LEVEL_BOUND:
        raise CapacityError(
            f"orbit oracle bounds exceeded: |{d}| > {bound} or {n} > {ORACLE_LEVEL_BOUND}"
        )

    seeds: list[QuadForm] = []
    for base in _reduced_forms(d):
        if n == 1:
            lines = [(1, 0)]
        else:
            lines = [(1, t) for t in range(n) if base.value(1, t) % n == 0]
            if base.value(0, 1) % n == 0:
                lines.append((0, 1))
        for p, r in lines:
            p_, q_, r_, s_ = _complete_column(p, r)
            cand = base.transform(p_, q_, r_, s_)
            assert cand.a % n == 0 and cand.a > 0
            seeds.append(_t_normalize(cand))

    reps: list[QuadForm] = []
    for cand in seeds:
        if not any(_equivalent_level(rep, cand, n) for rep in reps):
            reps.append(cand)
    orbits = tuple((rep, _stabilizer_order(rep, n)) for rep in reps)
    return OrbitTable(level=n, disc=d, orbits=orbits)


@dataclass(frozen=True)
class CountIdentityCertificate:
    """Outcome of the primitive-orbit counting identity at prime level."""

    level: int
    disc: int
    primitive_orbits: int
    roots_level: int
    roots_quotient: int
    primitive_base: int
    holds: bool


def verify_count_identity(n: int, d: int, bound: int = ORACLE_DISC_BOUND) -> CountIdentityCertificate:
    """Check that the primitive level-n orbit count factors as
    (n_d(n) + n_{d/n**2}(1)) times the primitive class count at level one.

    n_a(m) counts square roots of a mod 4m in Z/2m, and is 0 when a is not
    an integer.  Primitivity on the level-n side is gcd(a/n, b, c) = 1
    (see :attr:`OrbitTable.level_primitive_count`); with plain primitivity
    the identity fails whenever n**2 divides d.
    """
    table = orbit_oracle(n, d, bound=bound)
    roots_level = sqrt_count(d, n)
    if d % (n * n) == 0:
        roots_quotient = sqrt_count(d // (n * n), 1)
    else:
        roots_quotient = 0
    primitive_base = sum(1 for f in _reduced_forms(d) if f.content == 1)
    expected = (roots_level + roots_quotient) * primitive_base
    return CountIdentityCertificate(
        level=n,
        disc=d,
        primitive_orbits=table.level_primitive_count,
        roots_level=roots_level,
        roots_quotient=roots_quotient,
        primitive_base=primitive_base,
        holds=table.level_primitive_count == expected,
    )
