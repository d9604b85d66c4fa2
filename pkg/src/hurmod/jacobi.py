"""Discriminant-indexed coefficient series and theta expansions.

A :class:`DiscSeries` is a finite table D -> rational for the discriminants
0 >= D >= -dmax, and stands for an index-1 series whose (n, s) Fourier
coefficient depends only on D = s**2 - 4n.  Everything is exact rational
arithmetic; a series is immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .arith import index_gamma0, is_prime, moebius, totient
from .classnum import cohen_coeff, hurwitz_generalized
from .errors import CapacityError

KINDS = ("Hurwitz", "CohenEisenstein", "Rademacher", "Cuspidal", "McKayThompson", "Combination")


def disc_keys(dmax: int) -> list[int]:
    """The discriminants 0 >= D >= -dmax, largest first."""
    return [d for d in range(0, -dmax - 1, -1) if d % 4 in (0, 1)]


@dataclass(frozen=True)
class DiscSeries:
    """Exact coefficient table of an index-1 series, indexed by discriminant."""

    level: int
    kind: str
    dmax: int
    coeffs: Mapping[int, Fraction]

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown series kind {self.kind!r}")
        expected = set(disc_keys(self.dmax))
        if set(self.coeffs) != expected:
            raise ValueError("coefficient table does not match the declared range")
        if self.kind == "Cuspidal" and self.coeffs[0] != 0:
            raise ValueError("a cuspidal series must have constant term 0")

    def __getitem__(self, d: int) -> Fraction:
        return self.coeffs[d]

    def truncate(self, dmax: int) -> "DiscSeries":
        if dmax > self.dmax:
            raise CapacityError(f"cannot extend a series from {self.dmax} to {dmax}")
        if dmax == self.dmax:
            return self
        kept = {d: self.coeffs[d] for d in disc_keys(dmax)}
        return DiscSeries(self.level, self.kind, dmax, kept)

    def to_json_dict(self) -> dict:
        return {
            "level": self.level,
            "kind": self.kind,
            "dmax": self.dmax,
            "coeffs": [[d, c.numerator, c.denominator] for d, c in sorted(self.coeffs.items(), reverse=True)],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "DiscSeries":
        coeffs = {int(d): Fraction(num, den) for d, num, den in data["coeffs"]}
        return cls(int(data["level"]), data["kind"], int(data["dmax"]), coeffs)


def build_SH(n: int, dmax: int) -> DiscSeries:
    """Generating table of the level-n Hurwitz class numbers (n = 1 or prime)."""
    if n != 1 and not is_prime(n):
        raise ValueError(f"level must be 1 or prime, got {n}")
    coeffs = {d: hurwitz_generalized(n, d) for d in disc_keys(dmax)}
    return DiscSeries(n, "Hurwitz", dmax, coeffs)


def build_SCoh(n: int, dmax: int) -> DiscSeries:
    """Cohen-Eisenstein coefficient table at prime level n."""
    if not is_prime(n):
        raise ValueError(f"level must be prime, got {n}")
    coeffs = {d: cohen_coeff(n, d) for d in disc_keys(dmax)}
    return DiscSeries(n, "CohenEisenstein", dmax, coeffs)


def build_SR(n: int, dmax: int) -> DiscSeries:
    """The 1-optimal Eisenstein combination at level n (n = 1 or prime).

    (12/phi(n)) * sum over M | n of mu(n/M) (M/iota(M)) times the level-M
    Hurwitz table; its constant term is -1 for every supported n.
    """
    if n != 1 and not is_prime(n):
        raise ValueError(f"level must be 1 or prime, got {n}")
    divisors = [1] if n == 1 else [1, n]
    scale = Fraction(12, totient(n))
    coeffs = {d: Fraction(0) for d in disc_keys(dmax)}
    for m in divisors:
        weight = scale * moebius(n // m) * Fraction(m, index_gamma0(m))
        table = build_SH(m, dmax)
        for d in coeffs:
            coeffs[d] += weight * table[d]
    return DiscSeries(n, "Rademacher", dmax, coeffs)


def series_combine(terms: Iterable[tuple[Fraction | int, DiscSeries]], kind: str = "Combination") -> DiscSeries:
    """Exact linear combination, truncated to the smallest participating range."""
    terms = [(Fraction(scalar), series) for scalar, series in terms]
    if not terms:
        raise ValueError("series_combine needs at least one term")
    dmax = min(series.dmax for _, series in terms)
    level = terms[0][1].level
    coeffs = {d: Fraction(0) for d in disc_keys(dmax)}
    for scalar, series in terms:
        for d in coeffs:
            coeffs[d] += scalar * series[d]
    return DiscSeries(level, kind, dmax, coeffs)


@dataclass(frozen=True)
class CongruenceCertificate:
    """Outcome of a coefficientwise congruence test between two series."""

    modulus: int
    dmax: int
    holds: bool
    witness: int | None = None
    witness_value: Fraction | None = None

    def __bool__(self) -> bool:
        return self.holds


def series_congruent(a: DiscSeries, b: DiscSeries, modulus: int) -> CongruenceCertificate:
    """Certify that every coefficient of a - b is an integer divisible by modulus.

    A non-integral difference is reported as a failure with the witnessing
    discriminant, not an error.
    """
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    dmax = min(a.dmax, b.dmax)
    for d in disc_keys(dmax):
        diff = a[d] - b[d]
        if diff.denominator != 1 or diff.numerator % modulus:
            return CongruenceCertificate(modulus, dmax, False, witness=d, witness_value=diff)
    return CongruenceCertificate(modulus, dmax, True)


def series_integral(a: DiscSeries) -> CongruenceCertificate:
    """Certify that every coefficient of a is an integer (congruence mod 1)."""
    return series_congruent(a, zero_series(a.level, a.dmax), 1)


def zero_series(level: int, dmax: int, kind: str = "Cuspidal") -> DiscSeries:
    return DiscSeries(level, kind, dmax, {d: Fraction(0) for d in disc_keys(dmax)})


# ---------------------------------------------------------------------------
# (q, y) packings and theta expansions.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QYExpansion:
    """Double table (n, s) -> coefficient for a two-variable expansion."""

    nmax: int
    terms: Mapping[tuple[int, int], Fraction]


@dataclass(frozen=True)
class ThetaExpansion:
    """Index-m theta component; exponents stored 4m-integralized.

    The support of the classical series is { (s**2 / 4m, s) : s = r mod 2m },
    so ``terms`` maps (s**2, s) -> 1 with the first entry equal to 4m times
    the true q-exponent.
    """

    m: int
    r: int
    terms: Mapping[tuple[int, int], int] = field(repr=False)


def pack_qy(series: DiscSeries, nmax: int) -> QYExpansion:
    """Spread a discriminant table into (n, s) coefficients of q**n y**s."""
    if series.dmax < 4 * nmax:
        raise CapacityError(
            f"series range {series.dmax} cannot cover q-exponents up to {nmax}"
        )
    terms: dict[tuple[int, int], Fraction] = {}
    for n in range(nmax + 1):
        # Nonzero support needs d = s**2 - 4n in [-dmax, 0]; the range
        # precondition guarantees the lower cutoff for every n <= nmax.
        s = 0
        while s * s <= 4 * n:
            d = s * s - 4 * n
            terms[(n, s)] = series[d]
            if s:
                terms[(n, -s)] = series[d]
            s += 1
    return QYExpansion(nmax=nmax, terms=terms)


def pack_plus_space(series: DiscSeries) -> dict[int, Fraction]:
    """Repack as a q-table n -> coefficient of q**n, supported on n = 0, 3 mod 4.

    This is the scalar form whose exponent at q**(-D) carries the series
    coefficient at D (the weight-3/2 plus-space packing at index 1).
    """
    return {-d: series[d] for d in disc_keys(series.dmax)}


def theta_expansion(m: int, r: int, nmax: int) -> ThetaExpansion:
    """Index-m theta component with s = r mod 2m, exponents up to nmax."""
    if m < 1:
        raise ValueError(f"index must be positive, got {m}")
    terms: dict[tuple[int, int], int] = {}
    bound = 4 * m * nmax
    s = r % (2 * m)
    # Walk both arithmetic progressions s, s + 2m, ... and s - 2m, ...
    while s * s <= bound:
        terms[(s * s, s)] = 1
        s += 2 * m
    s = r % (2 * m) - 2 * m
    while s * s <= bound:
        terms[(s * s, s)] = 1
        s -= 2 * m
    return ThetaExpansion(m=m, r=r % (2 * m), terms=terms)


def thetanull(m: int, r: int, nmax: int) -> dict[int, int]:
    """q-table of the theta component at z = 0, exponents 4m-integralized."""
    table: dict[int, int] = {}
    for (exp, _s), coeff in theta_expansion(m, r, nmax).terms.items():
        table[exp] = table.get(exp, 0) + coeff
    return dict(sorted(table.items()))


def build_t_d(d: int, nmax: int) -> list[tuple[dict[int, int], ThetaExpansion]]:
    """Formal factor pairs of the weight-1 theta-type combination t_d.

    Each pair is (antiholomorphic factor as a Thetanullwert q-table,
    holomorphic index-1 theta component); no analytic structure is attached.
    """
    if d < 1:
        raise ValueError(f"expected d >= 1, got {d}")
    return [
        (thetanull(d * d, s * d * d, nmax), theta_expansion(1, s * d, nmax))
        for s in (0, 1)
    ]
