"""Command-line surface: tables, series dumps, verification suites.

Exit codes: 0 all requested work succeeded, 1 at least one verification
check failed, 2 usage error, 3 capacity bound exceeded.  Every failure
line names a witness sufficient to reproduce it in isolation.

The persistent cache is advisory: a versioned JSON file of class-number
values that seeds the in-process memo.  A version mismatch or corrupted
entry is discarded with a warning; results never depend on cache content.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import __version__, classnum, grpmod, jacobi, lfun, quaternion
from .arith import level_constants, primes_up_to
from .errors import CapacityError

CACHE_ENV_VAR = "HURMOD_CACHE"
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

VERIFY_LEVELS = {
    "lemma21": tuple(primes_up_to(31)),
    "integrality": tuple(primes_up_to(31)),
    "count-identity": (2, 3, 5, 7, 11, 13),
    "eisenstein-identities": tuple(primes_up_to(31)),
    "mod-N": tuple(primes_up_to(31)),
    "mass-formula": tuple(p for p in primes_up_to(47) if p >= 11),
    "lemma44": (11, 17, 19, 23),
    "thm-classification": (11, 17, 19, 23),
    "corollary-rank": (11, 13, 23, 37),
}
VERIFY_DEFAULT_DMAX = {
    "lemma21": 2000,
    "integrality": 2000,
    "count-identity": 200,
    "eisenstein-identities": 2000,
    "mod-N": 2000,
    "mass-formula": 0,
    "lemma44": 500,
    "thm-classification": 500,
    "corollary-rank": 0,
}


# ---------------------------------------------------------------------------
# Cache file.
# ---------------------------------------------------------------------------


class CacheFile:
    """Versioned JSON value store: {"version": ..., "entries": {...}}.

    Entries are "classnum:1:D" -> [numerator, denominator] for Hurwitz
    values.  A file with the wrong version is ignored entirely.
    """

    def __init__(self, path: str):
        self.path = path

    def load(self) -> None:
        try:
            with open(self.path, "r", encoding="utf-8") as handle:
                data = json.load(handle)
        except FileNotFoundError:
            return
        except (OSError, json.JSONDecodeError) as exc:
            print(f"warning: ignoring unreadable cache {self.path}: {exc}", file=sys.stderr)
            return
        if not isinstance(data, dict) or data.get("version") != __version__:
            print(f"warning: ignoring cache {self.path} with mismatched version", file=sys.stderr)
            return
        values: dict[int, Fraction] = {}
        dropped = 0
        for key, entry in data.get("entries", {}).items():
            try:
                tag, level, disc = key.split(":")
                if tag != "classnum" or int(level) != 1:
                    continue
                num, den = entry
                values[int(disc)] = Fraction(int(num), int(den))
            except (ValueError, TypeError, ZeroDivisionError):
                dropped += 1
        if dropped:
            print(f"warning: dropped {dropped} corrupted cache entries", file=sys.stderr)
        classnum.seed_hurwitz_memo(values)

    def save(self) -> None:
        entries = {
            f"classnum:1:{d}": [value.numerator, value.denominator]
            for d, value in sorted(classnum.export_hurwitz_memo().items())
        }
        payload = {"version": __version__, "entries": entries}
        try:
            with open(self.path, "w", encoding="utf-8") as handle:
                json.dump(payload, handle)
        except OSError as exc:
            print(f"warning: could not write cache {self.path}: {exc}", file=sys.stderr)


# ---------------------------------------------------------------------------
# Output helpers.
# ---------------------------------------------------------------------------


def _frac_str(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _emit_rows(rows: list[dict], columns: list[str], fmt: str, out) -> None:
    if fmt == "json":
        encoded = [
            {
                key: ([value.numerator, value.denominator] if isinstance(value, Fraction) else value)
                for key, value in row.items()
            }
            for row in rows
        ]
        json.dump(encoded, out, sort_keys=True)
        out.write("\n")
        return
    rendered = [
        {
            key: (_frac_str(value) if isinstance(value, Fraction) else ("" if value is None else str(value)))
            for key, value in row.items()
        }
        for row in rows
    ]
    if fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=columns)
        writer.writeheader()
        for row in rendered:
            writer.writerow(row)
        return
    widths = {c: max(len(c), *(len(r[c]) for r in rendered)) if rendered else len(c) for c in columns}
    out.write("  ".join(c.ljust(widths[c]) for c in columns).rstrip() + "\n")
    for row in rendered:
        out.write("  ".join(row[c].ljust(widths[c]) for c in columns).rstrip() + "\n")


# ---------------------------------------------------------------------------
# Subcommands.
# ---------------------------------------------------------------------------


def _cmd_classnum(args, out) -> int:
    kind_fn = {
        "hurwitz": lambda d: classnum.hurwitz(d),
        "generalized": lambda d: classnum.hurwitz_generalized(args.level, d),
        "cohen": lambda d: classnum.cohen_coeff(args.level, d),
    }[args.kind]
    if args.kind != "hurwitz" and args.level is None:
        raise UsageError("--level is required for generalized and cohen tables")
    rows = [
        {"D": d, "value": kind_fn(d)}
        for d in range(args.dmin, args.dmax + 1)
        if d % 4 in (0, 1)
    ]
    _emit_rows(rows, ["D", "value"], args.format, out)
    return EXIT_OK


def _cmd_series(args, out) -> int:
    level = args.level if args.level is not None else 1
    if args.kind == "SH":
        series = jacobi.build_SH(level, args.dmax)
    elif args.kind == "SCoh":
        series = jacobi.build_SCoh(level, args.dmax)
    elif args.kind == "SR":
        series = jacobi.build_SR(level, args.dmax)
    else:  # MT: the non-identity trace of the full optimal module
        series = grpmod.build_full_module(level, args.dmax).trace_g
    if args.format == "json":
        json.dump(series.to_json_dict(), out, sort_keys=True)
        out.write("\n")
    else:
        rows = [{"D": d, "value": series[d]} for d in jacobi.disc_keys(series.dmax)]
        _emit_rows(rows, ["D", "value"], args.format, out)
    return EXIT_OK


def _cmd_supersingular(args, out) -> int:
    class_set = quaternion.ideal_classes(args.level)
    prec = args.prec
    thetas = [
        list(quaternion.theta_trace_zero(order, prec).coeffs)
        for order, _ in class_set.classes
    ]
    payload = {
        "level": args.level,
        "algebra": [class_set.algebra.a, class_set.algebra.b],
        "class_count": len(class_set.classes),
        "w": [w for _, w in class_set.classes],
        "mass": [class_set.mass.numerator, class_set.mass.denominator],
        "prec": prec,
        "thetas": thetas,
    }
    json.dump(payload, out, sort_keys=True)
    out.write("\n")
    return EXIT_OK


def _cmd_predict(args, out) -> int:
    if args.dmin > args.dmax:
        raise UsageError("--dmin must not exceed --dmax")
    table = None
    if args.with_lvalue:
        if args.level != 11:
            raise UsageError("--with-lvalue is only available at level 11")
        table = lfun.eta_newform_11(2 * lfun.truncation_bound(args.dmin) + 1)
    rows = []
    for d in lfun.fundamental_inert_range(args.level, args.dmin, args.dmax):
        prediction = lfun.predict(
            args.level, d, args.p, with_lvalue=args.with_lvalue, table=table
        )
        rows.append(prediction.row())
    columns = ["D", "hD", "hD_mod_p", "verdict", "lvalue", "curve_a4", "curve_a6"]
    _emit_rows(rows, columns, args.format, out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Verification suites.
# ---------------------------------------------------------------------------


def _check_lemma21(levels, dmax):
    for n in levels:
        for d in jacobi.disc_keys(dmax):
            lhs = classnum.hurwitz(d)
            rhs = classnum.cohen_coeff(n, d) + Fraction(1, 2) * classnum.hurwitz_generalized(n, d)
            if lhs != rhs:
                return False, f"N={n} D={d}: {lhs} != {rhs}"
    return True, f"levels {list(levels)}, 0 >= D >= -{dmax}"


def _check_integrality(levels, dmax):
    for n in levels:
        constants = level_constants(n)
        for d in jacobi.disc_keys(dmax):
            if d == 0:
                continue
            v1 = constants.dHur * classnum.hurwitz_generalized(n, d)
            v2 = constants.dCoh * classnum.cohen_coeff(n, d)
            if v1.denominator != 1 or v2.denominator != 1:
                return False, f"N={n} D={d}: {v1}, {v2}"
    return True, f"levels {list(levels)}, 0 > D >= -{dmax}"


def _check_count_identity(levels, dmax):
    for n in levels:
        for d in jacobi.disc_keys(min(dmax, 200)):
            if d == 0:
                continue
            cert = classnum.verify_count_identity(n, d)
            if not cert.holds:
                return False, f"N={n} D={d}: {cert}"
    return True, f"levels {list(levels)}, 0 > D >= -{min(dmax, 200)}"


def _check_eisenstein_identities(levels, dmax):
    for n in levels:
        constants = level_constants(n)
        c_eis = grpmod.eisenstein_c(n)
        sr1 = jacobi.build_SR(1, dmax)
        srn = jacobi.build_SR(n, dmax)
        shn = jacobi.build_SH(n, dmax)
        scn = jacobi.build_SCoh(n, dmax)
        lhs1 = jacobi.series_combine([(c_eis, sr1)])
        rhs1 = jacobi.series_combine(
            [((n + 1) * constants.dHur * constants.nCoh, shn),
             ((n - 1) * constants.dCoh * constants.nHur, scn)]
        )
        lhs2 = jacobi.series_combine([(c_eis, srn)])
        rhs2 = jacobi.series_combine(
            [(constants.dHur * constants.nCoh, shn),
             (-constants.dCoh * constants.nHur, scn)]
        )
        for d in jacobi.disc_keys(dmax):
            if lhs1[d] != rhs1[d]:
                return False, f"N={n} D={d}: split of c*SR_1 fails"
            if lhs2[d] != rhs2[d]:
                return False, f"N={n} D={d}: split of c*SR_N fails"
    spot = jacobi.build_SR(3, 4)
    if 2 * spot[-3] != -1:
        return False, f"C_3(-3) = {2 * spot[-3]} != -1"
    return True, f"levels {list(levels)}, dmax {dmax}; spot value C_3(-3) = -1"


def _check_mod_n(levels, dmax):
    for n in levels:
        c_eis = grpmod.eisenstein_c(n)
        diff = jacobi.series_combine(
            [(c_eis, jacobi.build_SR(1, dmax)), (-c_eis, jacobi.build_SR(n, dmax))]
        )
        cert = jacobi.series_congruent(diff, jacobi.zero_series(n, dmax), n)
        if not cert.holds:
            return False, f"N={n} D={cert.witness}: difference not divisible"
    return True, f"levels {list(levels)}, dmax {dmax}"


def _check_mass_formula(levels, _dmax):
    for n in levels:
        constants = level_constants(n)
        class_set = quaternion.ideal_classes(n)
        if class_set.mass != Fraction(n - 1, 12):
            return False, f"N={n}: mass {class_set.mass}"
        product = 1
        for _, w in class_set.classes:
            product *= w
        if product != constants.dCoh:
            return False, f"N={n}: unit product {product} != {constants.dCoh}"
    return True, f"levels {list(levels)}"


def _check_lemma44(levels, dmax):
    for n in levels:
        cert = quaternion.verify_lemma_congruence(n, dmax)
        if not cert.holds:
            return False, f"N={n} D={cert.witness}"
    return True, f"levels {list(levels)}, dmax {dmax}"


def _check_classification(levels, dmax):
    for n in levels:
        c_opt = grpmod.copt(n)
        table = grpmod.build_full_module(n, dmax)
        cert = grpmod.certify(table, c_opt)
        if not cert.valid:
            return False, f"N={n}: {dict(cert.checks)} witnesses {dict(cert.witnesses)}"
        if cert.coprime_witness is None:
            return False, f"N={n}: no coprime witness found"
        for divisor in range(1, c_opt):
            if c_opt % divisor:
                continue
            scaled = grpmod.build_full_module(n, dmax, c=divisor)
            down = grpmod.certify(scaled, divisor)
            if down.checks["integrality_g"]:
                return False, f"N={n}: scaling by {divisor} unexpectedly integral"
    return True, f"levels {list(levels)}, dmax {dmax}; proper divisors rejected"


def _check_corollary_rank(_levels, _dmax):
    expected = {11: 10, 23: 44, 37: 72}
    for n, rank in expected.items():
        if grpmod.rank_Lopt(n) != rank:
            return False, f"N={n}: rank {grpmod.rank_Lopt(n)} != {rank}"
    if grpmod.genus_X0(13) != 0:
        return False, f"genus at 13 is {grpmod.genus_X0(13)}"
    return True, "rank values 10/44/72 at 11/23/37; genus 0 at 13"


CHECKS = {
    "lemma21": _check_lemma21,
    "integrality": _check_integrality,
    "count-identity": _check_count_identity,
    "eisenstein-identities": _check_eisenstein_identities,
    "mod-N": _check_mod_n,
    "mass-formula": _check_mass_formula,
    "lemma44": _check_lemma44,
    "thm-classification": _check_classification,
    "corollary-rank": _check_corollary_rank,
}


def _cmd_verify(args, out) -> int:
    names = args.check or list(CHECKS)
    failures = 0
    results = []
    for name in names:
        if name not in CHECKS:
            raise UsageError(f"unknown check {name!r}; choose from {sorted(CHECKS)}")
        levels = (args.level,) if args.level else VERIFY_LEVELS[name]
        dmax = args.dmax if args.dmax else VERIFY_DEFAULT_DMAX[name]
        ok, detail = CHECKS[name](levels, dmax)
        results.append({"check": name, "ok": ok, "detail": detail})
        if not ok:
            failures += 1
    if args.format == "json":
        json.dump(results, out, sort_keys=True)
        out.write("\n")
    else:
        for result in results:
            status = "PASS" if result["ok"] else "FAIL"
            out.write(f"{status} {result['check']} ({result['detail']})\n")
    return EXIT_CHECK_FAILED if failures else EXIT_OK


# ---------------------------------------------------------------------------
# Entry point.
# ---------------------------------------------------------------------------


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurmod",
        description="Exact class-number series, module certificates, and twist predictions",
    )
    parser.add_argument("--version", action="version", version=f"hurmod {__version__}")
    parser.add_argument("--cache", help=f"path to the JSON value cache (or ${CACHE_ENV_VAR})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classnum", help="tables of class-number values")
    p.add_argument("--kind", choices=["hurwitz", "generalized", "cohen"], required=True)
    p.add_argument("--level", type=int)
    p.add_argument("--dmin", type=int, required=True)
    p.add_argument("--dmax", type=int, default=0)
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")

    p = sub.add_parser("series", help="discriminant-series dumps")
    p.add_argument("--kind", choices=["SH", "SCoh", "SR", "MT"], required=True)
    p.add_argument("--level", type=int)
    p.add_argument("--dmax", type=int, default=100)
    p.add_argument("--format", choices=["table", "csv", "json"], default="json")

    p = sub.add_parser("verify", help="named verification suites")
    p.add_argument("--check", action="append", help="check name (repeatable; default all)")
    p.add_argument("--level", type=int, help="restrict to a single level")
    p.add_argument("--dmax", type=int, help="override the default range")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("supersingular", help="quaternionic class data as JSON")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--prec", type=int, default=None)

    p = sub.add_parser("predict", help="twist finiteness predictions")
    p.add_argument("--level", type=int, default=11)
    p.add_argument("--dmin", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--with-lvalue", action="store_true")
    p.add_argument("--format", choices=["csv", "table", "json"], default="csv")
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out if out is not None else sys.stdout

    cache = None
    cache_path = args.cache or os.environ.get(CACHE_ENV_VAR)
    if cache_path:
        cache = CacheFile(cache_path)
        cache.load()

    if getattr(args, "prec", None) is None and args.command == "supersingular":
        args.prec = 4 * args.level

    handlers = {
        "classnum": _cmd_classnum,
        "series": _cmd_series,
        "verify": _cmd_verify,
        "supersingular": _cmd_supersingular,
        "predict": _cmd_predict,
    }
    try:
        code = handlers[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    if cache is not None:
        cache.save()
    return code


if __name__ == "__main__":
    sys.exit(main())
