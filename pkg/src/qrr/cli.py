"""Command-line front door.

Verbs: expand, verify, verify-recurrence, guess, limit, selftest.
Results go to stdout, diagnostics to stderr. Exit codes: 0 all checks
passed, 1 a mathematical check failed (a witness block is printed),
2 usage error. Output is deterministic (stable ordering, no timestamps);
--timing adds wall-clock lines on stderr, outside the golden surface.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from math import comb

from . import _backend
from .families import (
    CvInstance,
    Family,
    Kernel,
    cv_residual,
    family_poly,
    kernel,
    kernel_sum_identity,
)
from .limits import FAMILY_SIDE, limit_check, rr_product
from .qbinom import contiguous_residual, qbinom, qbinom_via_product
from .qpoly import ONE, Q, ZERO, QPoly
from .recurrence import (
    RECURRENCE_FAMILIES,
    VerificationReport,
    chapman_residuals,
    guess,
    known_recurrence,
    verify,
)

IDENTITIES = {
    "bressoud1": (Family.A, Family.B, "bressoud1"),
    "bressoud2": (Family.C, Family.D, "bressoud2"),
    "santos-s": (Family.S, Family.S_ALT, "santos"),
    "santos-t": (Family.T, Family.T_ALT, "santos"),
    "u": (Family.U, Family.U_ALT, "u"),
}

FAMILY_CHOICES = [f.value for f in Family]


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _emit_reports(reports: list, fmt: str) -> int:
    if fmt == "json":
        print(_dumps([r.to_json_obj() for r in reports]))
    else:
        for r in reports:
            print(r.to_line())
    return 0 if all(r.passed for r in reports) else 1


def _range_arg(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit():
        raise argparse.ArgumentTypeError(f"expected a range like 3..7, got {text!r}")
    return int(lo), int(hi)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qrr",
        description="Exact q-series toolkit: polynomial families, recurrences, limits.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--timing", action="store_true", help="report wall-clock time on stderr")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("expand", help="print one family polynomial", parents=[common])
    p.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("verify", help="check a family-pair identity and its recurrence", parents=[common])
    p.add_argument("--identity", required=True, choices=sorted(IDENTITIES))
    p.add_argument("--n-max", required=True, type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("verify-recurrence", help="check one recurrence against one family", parents=[common])
    p.add_argument("--key", required=True, choices=sorted(RECURRENCE_FAMILIES))
    p.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    p.add_argument("--n-max", required=True, type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("guess", help="guess a recurrence from family values", parents=[common])
    p.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    p.add_argument("--order", required=True, type=int)
    p.add_argument("--deg-t", required=True, type=int)
    p.add_argument("--deg-q", required=True, type=int)
    p.add_argument("--fit", required=True, type=_range_arg, metavar="A..B")
    p.add_argument("--confirm", required=True, type=_range_arg, metavar="C..D")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("limit", help="check truncated limits against the product side", parents=[common])
    p.add_argument("--family", required=True, choices=["A", "B", "C", "D"])
    p.add_argument("--n-max", required=True, type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")

    sub.add_parser("selftest", help="run the invariant suite at pinned desk-scale parameters", parents=[common])
    return parser


def _cmd_expand(args) -> int:
    fam = Family(args.family)
    if args.n < 0:
        print("error: --n must be nonnegative", file=sys.stderr)
        return 2
    poly = family_poly(fam, args.n)
    if args.format == "json":
        print(_dumps({"family": fam.value, "n": args.n, "poly": poly.to_json_obj()}))
    else:
        print(poly.to_text())
    return 0


def _cmd_verify(args) -> int:
    fam_a, fam_b, key = IDENTITIES[args.identity]
    n_max = args.n_max
    if n_max < 0:
        print("error: --n-max must be nonnegative", file=sys.stderr)
        return 2
    subject = f"{args.identity}:{fam_a.value}={fam_b.value}"
    equality = VerificationReport(subject, (0, n_max), "pass")
    for n in range(n_max + 1):
        diff = family_poly(fam_a, n) - family_poly(fam_b, n)
        if diff:
            equality = VerificationReport(subject, (0, n_max), "fail", (n, diff))
            break
    rec = known_recurrence(key)
    reports = [equality, verify(rec, fam_a, n_max), verify(rec, fam_b, n_max)]
    return _emit_reports(reports, args.format)


def _cmd_verify_recurrence(args) -> int:
    if args.n_max < 0:
        print("error: --n-max must be nonnegative", file=sys.stderr)
        return 2
    report = verify(known_recurrence(args.key), Family(args.family), args.n_max)
    return _emit_reports([report], args.format)


def _cmd_guess(args) -> int:
    fam = Family(args.family)
    top = max(args.fit[1], args.confirm[1]) + args.order
    values = [family_poly(fam, n) for n in range(top + 1)]
    try:
        found = guess(values, args.order, args.deg_t, args.deg_q, args.fit, args.confirm)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(_dumps([r.to_json_obj() for r in found]))
    else:
        if not found:
            print("no recurrence within the ansatz")
        for rec in found:
            print(rec.to_text())
    return 0


def _cmd_limit(args) -> int:
    fam = Family(args.family)
    if args.n_max < 0:
        print("error: --n-max must be nonnegative", file=sys.stderr)
        return 2
    report = VerificationReport(f"limit:{fam.value}", (0, args.n_max), "pass")
    for n in range(args.n_max + 1):
        step = limit_check(fam, n)
        if not step.passed:
            report = VerificationReport(
                f"limit:{fam.value}", (0, args.n_max), "fail", step.witness
            )
            break
    return _emit_reports([report], args.format)


# --- selftest -------------------------------------------------------------

def _random_poly(rng: random.Random) -> QPoly:
    terms = {}
    for _ in range(rng.randint(0, 8)):
        terms[rng.randint(0, 64)] = rng.randint(-(10**6), 10**6)
    return QPoly(terms)


def _check_ring_axioms(cases: int) -> QPoly:
    rng = random.Random(20240803)
    for _ in range(cases):
        p, r, s = (_random_poly(rng) for _ in range(3))
        m = rng.randint(0, 80)
        if (p + r) + s != p + (r + s) or p + r != r + p:
            return ONE
        if p * r != r * p or (p * r) * s != p * (r * s):
            return ONE
        if p * (r + s) != p * r + p * s:
            return ONE
        if (p * r).eval_one() != p.eval_one() * r.eval_one():
            return ONE
        if ((p * r).truncate(m) != (p.truncate(m) * r.truncate(m)).truncate(m)):
            return ONE
        for poly in (p + r, p * r, p - s):
            if any(c == 0 for _, c in poly.terms()):
                return ONE
    return ZERO


def _check_qbinom(n_max: int) -> QPoly:
    for n in range(n_max + 1):
        for k in range(n + 1):
            b = qbinom(n, k)
            for base in (1, 2):
                if qbinom(n, k, base) != qbinom(n, n - k, base):
                    return ONE
            if b.eval_one() != comb(n, k):
                return ONE
            if qbinom(n, k, 2) != b.subs_q_power(2):
                return ONE
            if b.degree != k * (n - k) or any(c <= 0 for _, c in b.terms()):
                return ONE
            if n >= 1:
                pascal1 = qbinom(n - 1, k) + qbinom(n - 1, k - 1).monomial_mul(1, n - k)
                pascal2 = qbinom(n - 1, k).monomial_mul(1, k) + qbinom(n - 1, k - 1)
                if b != pascal1 or b != pascal2:
                    return ONE
    for n in range(13):
        for k in range(n + 1):
            if qbinom_via_product(n, k) != qbinom(n, k):
                return ONE
    return ZERO


def _check_contiguous(n_max: int) -> QPoly:
    for n in range(2, n_max + 1):
        for k in range(n + 1):
            r = contiguous_residual(n, k)
            if r:
                return r
    return ZERO


def _check_identities(n_max: int, u_max: int) -> QPoly:
    pairs = [(Family.A, Family.B, n_max), (Family.C, Family.D, n_max),
             (Family.S, Family.S_ALT, n_max), (Family.T, Family.T_ALT, n_max),
             (Family.U, Family.U_ALT, u_max)]
    for fam_a, fam_b, top in pairs:
        for n in range(top + 1):
            d = family_poly(fam_a, n) - family_poly(fam_b, n)
            if d:
                return d
    for fam in (Family.A, Family.C, Family.S, Family.T, Family.U):
        for n in range(n_max + 1):
            if any(c < 0 for _, c in family_poly(fam, n).terms()):
                return ONE
    return ZERO


def _check_kernel_oracle(n_max: int) -> QPoly:
    for n in range(n_max + 1):
        for k in range(n + 1):
            if kernel(Kernel.F, n, k) != qbinom(n, k):
                return ONE
        for k in range(n // 2 + 1):
            if kernel(Kernel.G, n, k) != qbinom(n, 2 * k):
                return ONE
        for k in range((n + 1) // 2):
            if kernel(Kernel.H, n, k) != qbinom(n, 2 * k + 1):
                return ONE
    return ZERO


def _check_kernel_recursions(n_max: int) -> QPoly:
    qn = QPoly.monomial
    for n in range(2, n_max + 1):
        for k in range(n + 1):
            f_n = kernel(Kernel.F, n, k)
            r = f_n - kernel(Kernel.F, n - 1, k) - kernel(Kernel.F, n - 1, k - 1).monomial_mul(1, n - k)
            if r:
                return r
            r = f_n - kernel(Kernel.F, n - 1, k).monomial_mul(1, k) - kernel(Kernel.F, n - 1, k - 1)
            if r:
                return r
            r = (f_n
                 - (ONE + Q - qn(1, n)) * kernel(Kernel.F, n - 1, k)
                 + (Q - qn(1, n)) * kernel(Kernel.F, n - 2, k))
            if k <= n:
                r = r - kernel(Kernel.F, n - 1, k - 1).monomial_mul(1, 2 * n - 2 * k)
            if r:
                return r
    for n in range(n_max - 1):
        for k in range(n // 2 + 2):
            r = (kernel(Kernel.G, n + 2, k) - (ONE + Q) * kernel(Kernel.G, n + 1, k)
                 + kernel(Kernel.G, n, k).monomial_mul(1, 1))
            gk = kernel(Kernel.G, n, k - 1)
            if gk:
                r = r - gk.monomial_mul(1, 2 * n + 4 - 4 * k)
            if r:
                return r
            r = (kernel(Kernel.H, n + 2, k) - (ONE + Q) * kernel(Kernel.H, n + 1, k)
                 + kernel(Kernel.H, n, k).monomial_mul(1, 1))
            hk = kernel(Kernel.H, n, k - 1)
            if hk:
                r = r - hk.monomial_mul(1, 2 * n + 2 - 4 * k)
            if r:
                return r
    return ZERO


def _check_cv(n_max: int) -> QPoly:
    for n in range(n_max + 1):
        for cid, step in ((CvInstance.CV_B, 2), (CvInstance.CV_D, 2),
                          (CvInstance.CV_S, 2), (CvInstance.CV_T, 2)):
            for j in range(-(n // step) - 1, n // step + 2):
                r = cv_residual(cid, n, j)
                if r:
                    return r
    return ZERO


def _check_kernel_sums(n_max: int) -> QPoly:
    for fam in (Family.B, Family.D, Family.S_ALT, Family.T_ALT):
        for n in range(n_max + 1):
            r = kernel_sum_identity(fam, n)
            if r:
                return r
    return ZERO


def _check_recurrences(n_max: int, u_max: int) -> QPoly:
    for key, fams in RECURRENCE_FAMILIES.items():
        rec = known_recurrence(key)
        for fam in fams:
            top = u_max if key == "u" else n_max
            if not verify(rec, fam, top).passed:
                return ONE
    return ZERO


def _check_chapman(n_max: int) -> QPoly:
    for n in range(1, n_max + 1):
        first, second = chapman_residuals(n)
        if first:
            return first
        if second:
            return second
    return ZERO


def _check_guess_recovery() -> QPoly:
    specs = [
        (Family.B, "bressoud1", 2, 3),
        (Family.S, "santos", 2, 2),
        (Family.U, "u", 2, 3),
    ]
    for fam, key, deg_t, deg_q in specs:
        values = [family_poly(fam, n) for n in range(19)]
        found = guess(values, 2, deg_t, deg_q, (0, 12), (13, 16))
        if found != [known_recurrence(key)]:
            return ONE
    return ZERO


def _check_limits(n_max: int) -> QPoly:
    for fam in FAMILY_SIDE:
        for n in range(n_max + 1):
            rep = limit_check(fam, n)
            if not rep.passed:
                return rep.witness[1]
    for side in (1, 2):
        series = rr_product(side, n_max + 1)
        if any(c < 0 for _, c in series.poly.terms()):
            return ONE
    return ZERO


def _check_backends() -> QPoly:
    try:
        from . import _kernels_c, _kernels_py
    except ImportError:
        return ZERO
    rng = random.Random(977)
    for _ in range(200):
        a = {rng.randint(0, 120): rng.randint(-(10**12), 10**12) for _ in range(rng.randint(1, 12))}
        b = {rng.randint(0, 120): rng.randint(-(10**12), 10**12) for _ in range(rng.randint(1, 12))}
        if _kernels_c.mul_terms(a, b) != _kernels_py.mul_terms(a, b):
            return ONE
        if _kernels_c.add_terms(a, b) != _kernels_py.add_terms(a, b):
            return ONE
    big = {i: rng.randint(-(10**40), 10**40) for i in range(50)}
    if _kernels_c.mul_terms(big, big) != _kernels_py.mul_terms(big, big):
        return ONE
    return ZERO


def _cmd_selftest(args) -> int:
    checks = [
        ("qpoly-ring-axioms[300 cases]", lambda: _check_ring_axioms(300)),
        ("qbinom-tables[n<=24]", lambda: _check_qbinom(24)),
        ("contiguous-relation[n<=30]", lambda: _check_contiguous(30)),
        ("family-identities[n<=24,U<=16]", lambda: _check_identities(24, 16)),
        ("kernel-oracle[n<=14]", lambda: _check_kernel_oracle(14)),
        ("kernel-recursions[n<=14]", lambda: _check_kernel_recursions(14)),
        ("cv-expansions[n<=10]", lambda: _check_cv(10)),
        ("kernel-sums[n<=12]", lambda: _check_kernel_sums(12)),
        ("recurrence-verify[n<=24,U<=16]", lambda: _check_recurrences(24, 16)),
        ("chapman-coupled[n<=24]", lambda: _check_chapman(24)),
        ("guess-recovery[fit 0..12]", _check_guess_recovery),
        ("limits[n<=20]", lambda: _check_limits(20)),
        ("backend-crosscheck", _check_backends),
    ]
    failures = 0
    for name, fn in checks:
        start = time.perf_counter()
        witness = fn()
        elapsed = time.perf_counter() - start
        if witness:
            failures += 1
            print(f"FAIL {name}: witness {witness.to_text()}")
        else:
            print(f"ok {name}")
        if args.timing:
            print(f"  [{name}: {elapsed:.2f}s]", file=sys.stderr)
    print(f"selftest: {len(checks) - failures}/{len(checks)} checks passed (backend={_backend.BACKEND})")
    return 1 if failures else 0


_COMMANDS = {
    "expand": _cmd_expand,
    "verify": _cmd_verify,
    "verify-recurrence": _cmd_verify_recurrence,
    "guess": _cmd_guess,
    "limit": _cmd_limit,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    start = time.perf_counter()
    try:
        code = _COMMANDS[args.verb](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.timing:
        print(f"[{args.verb}: {time.perf_counter() - start:.2f}s]", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
