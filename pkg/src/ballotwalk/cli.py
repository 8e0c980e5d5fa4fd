"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

import mpmath
from mpmath import mp, mpf

from ballotwalk import verify
from ballotwalk.asymptotics import local_limit
from ballotwalk.asymptotics.expansions import Quantity, expansion, moment_leading
from ballotwalk.chebyshev_series import Kind, gf_coefficient, gf_spectrum
from ballotwalk.closed_form import (
    ballot_explicit,
    height_spectrum_explicit,
    p_explicit,
    p_total_explicit,
    q_explicit,
    q_total_explicit,
)
from ballotwalk.errors import ValidityError
from ballotwalk.figures import ballot_cmp_csv
from ballotwalk.walks_exact import (
    WalkDomain,
    band_probability,
    enumerate_admissible,
    exact_total,
)

DIGITS = 20


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _num(x) -> str:
    with mp.workdps(DIGITS + 10):
        if isinstance(x, Fraction):
            x = mpf(x.numerator) / x.denominator
        return mpmath.nstr(x, DIGITS)


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return v


def _cmd_enumerate(args, out) -> int:
    domain = WalkDomain.parse(args.domain)
    paths = enumerate_admissible(args.n, domain)
    if not args.count_only:
        for wp in paths:
            out.write(f"{wp.path or '(empty)'} h={wp.height} p={_fmt(wp.probability)}\n")
    out.write(f"count={len(paths)} total={_fmt(sum((wp.probability for wp in paths), Fraction(0)))}\n")
    return 0


def _prob_by_method(method: str, n: int, domain: WalkDomain, h: "int | None") -> Fraction:
    if method == "enum":
        paths = enumerate_admissible(n, domain)
        return sum((wp.probability for wp in paths if h is None or wp.height == h), Fraction(0))
    if method == "dp":
        return exact_total(n, domain) if h is None else band_probability(n, h, domain)
    if method == "series":
        kind = Kind.for_domain(domain)
        if h is None:
            return sum(gf_spectrum(kind, n).values(), Fraction(0))
        return gf_coefficient(kind, h, n)
    if domain is WalkDomain.REFLECTIVE_N0:
        return p_total_explicit(n) if h is None else p_explicit(n, h)
    return q_total_explicit(n) if h is None else q_explicit(n, h)


def _cmd_prob(args, out) -> int:
    domain = WalkDomain.parse(args.domain)
    methods = ["enum", "dp", "series", "closed"] if args.method == "all" else [args.method]
    label = ("p" if domain is WalkDomain.REFLECTIVE_N0 else "q") + f"_{args.n}" + ("" if args.h is None else f"^({args.h})")
    values = []
    for method in methods:
        try:
            v = _prob_by_method(method, args.n, domain, args.h)
        except ValidityError as exc:
            if args.method != "all":
                raise
            out.write(f"{method}: skipped ({exc})\n")
            continue
        values.append(v)
        out.write(f"{method}: {label} = {_fmt(v)}\n")
    if args.method == "all":
        if len(set(values)) == 1:
            out.write("AGREE\n")
            return 0
        out.write("DISAGREE\n")
        return 2
    return 0


def _cmd_ballot(args, out) -> int:
    if args.max_n < 2:
        raise ValueError("--max-n must be at least 2")
    header = ["n", "B_n"]
    if args.check_zhao:
        header += ["B_n/2^n", "asy", "err*n^7"]
        exp = expansion(Quantity.BALLOT)
    out.write(" ".join(header) + "\n")
    for n in range(2, args.max_n + 1):
        b = ballot_explicit(n)
        row = [str(n), str(b)]
        if args.check_zhao:
            with mp.workdps(DIGITS + 40):
                ratio = mpf(b) / mpf(2) ** n
                asy = exp.evaluate(n, dps=DIGITS + 30)
                row += [_num(ratio), _num(asy), _num((ratio - asy) * mpf(n) ** 7)]
        out.write(" ".join(row) + "\n")
    return 0


_EXACT = {
    Quantity.P_TOTAL: lambda n: p_total_explicit(n),
    Quantity.Q_TOTAL: lambda n: q_total_explicit(n),
    Quantity.BALLOT: lambda n: Fraction(ballot_explicit(n), 2**n) if n >= 2 else None,
}


def _moment_exact(domain: WalkDomain, n: int, variance: bool) -> Fraction:
    sp = height_spectrum_explicit(n, domain)
    m1 = sp.shifted_moment(1)
    return sp.shifted_moment(2) - m1 * m1 if variance else m1


_EXACT.update(
    {
        Quantity.EH_N0: lambda n: _moment_exact(WalkDomain.REFLECTIVE_N0, n, False),
        Quantity.VH_N0: lambda n: _moment_exact(WalkDomain.REFLECTIVE_N0, n, True),
        Quantity.EH_Z: lambda n: _moment_exact(WalkDomain.FREE_Z, n, False),
        Quantity.VH_Z: lambda n: _moment_exact(WalkDomain.FREE_Z, n, True),
    }
)


def _cmd_asympt(args, out) -> int:
    q = Quantity(args.quantity)
    exp = expansion(q)
    if args.terms is not None and not 1 <= args.terms <= len(exp.terms):
        raise ValueError(f"--terms must be between 1 and {len(exp.terms)}")
    value = exp.evaluate(args.n, args.terms)
    out.write(f"quantity={q.value} n={args.n} terms={args.terms or len(exp.terms)}\n")
    out.write(f"expansion: {_num(value)}\n")
    exact = _EXACT[q](args.n)
    if exact is not None:
        out.write(f"exact: {_num(exact)}\n")
        with mp.workdps(DIGITS + 10):
            out.write(f"difference: {_num(mpf(exact.numerator) / exact.denominator - value)}\n")
    return 0


def _cmd_moments(args, out) -> int:
    domain = WalkDomain.parse(args.domain)
    if args.r < 1:
        raise ValueError("--r must be positive")
    lead = moment_leading(domain, args.r)
    with mp.workdps(DIGITS + 10):
        approx = lead * mpf(args.n) ** (mpf(args.r) / 2)
    out.write(f"leading coefficient: {_num(lead)}\n")
    out.write(f"leading approximation: {_num(approx)}\n")
    if args.exact:
        m = height_spectrum_explicit(args.n, domain).shifted_moment(args.r)
        out.write(f"exact: {_fmt(m)}\n")
        out.write(f"exact decimal: {_num(m)}\n")
    return 0


def _cmd_density(args, out) -> int:
    domain = WalkDomain.parse(args.domain)
    reps = ["gauss", "dual"] if args.rep == "both" else [args.rep]
    if args.h > args.n:
        raise ValueError(f"no walk of length {args.n} reaches height {args.h}")
    with mp.workdps(DIGITS + 10):
        out.write(f"eta: {_num(mpf(args.h) / mpmath.sqrt(args.n))}\n")
    for rep in reps:
        ll = local_limit.local_limit_approx(domain, args.n, args.h, rep)
        dens = local_limit.density(domain, ll.eta, rep).value
        out.write(f"{rep}: density={_num(dens)} approx={_num(ll.value)}\n")
    out.write(f"in_window: {'yes' if ll.in_window else 'no'}\n")
    sp = height_spectrum_explicit(args.n, domain)
    out.write(f"exact: {_num(sp[args.h] / sp.total)}\n")
    return 0


def _cmd_verify(args, out) -> int:
    failed = False
    for res in verify.run_suite(args.suite):
        out.write(res.line() + "\n")
        out.flush()
        failed |= not res.passed
    return 2 if failed else 0


def _cmd_figure(args, out) -> int:
    text = ballot_cmp_csv(args.max_n)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ballotwalk", description="Exact and asymptotic admissible-walk computations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    domains = [d.value for d in WalkDomain]

    s = sub.add_parser("enumerate", help="list admissible paths")
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--domain", choices=domains, required=True)
    s.add_argument("--count-only", action="store_true")
    s.set_defaults(func=_cmd_enumerate)

    s = sub.add_parser("prob", help="exact admissibility probability")
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--domain", choices=domains, required=True)
    s.add_argument("--h", type=_nonneg)
    s.add_argument("--method", choices=["enum", "dp", "series", "closed", "all"], required=True)
    s.set_defaults(func=_cmd_prob)

    s = sub.add_parser("ballot", help="bidirectional ballot counts")
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--check-zhao", action="store_true")
    s.set_defaults(func=_cmd_ballot)

    s = sub.add_parser("asympt", help="evaluate a printed expansion")
    s.add_argument("--quantity", choices=[q.value for q in Quantity], required=True)
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--terms", type=int)
    s.set_defaults(func=_cmd_asympt)

    s = sub.add_parser("moments", help="leading-order height moments")
    s.add_argument("--domain", choices=domains, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--exact", action="store_true")
    s.set_defaults(func=_cmd_moments)

    s = sub.add_parser("density", help="local-limit density")
    s.add_argument("--domain", choices=domains, required=True)
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--h", type=_positive, required=True)
    s.add_argument("--rep", choices=["gauss", "dual", "both"], default="both")
    s.set_defaults(func=_cmd_density)

    s = sub.add_parser("verify", help="run acceptance suites")
    s.add_argument("--suite", choices=list(verify.SUITES), required=True)
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("figure", help="export figure data")
    fig = s.add_subparsers(dest="figure", required=True, parser_class=_Parser)
    f = fig.add_parser("ballot-cmp", help="B_n / 2^n against the expansion")
    f.add_argument("--max-n", type=int, required=True)
    f.add_argument("--out")
    f.set_defaults(func=_cmd_figure)
    return p


def run(argv: "Sequence[str] | None" = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(str(exc))
        return 1
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"ballotwalk: error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
