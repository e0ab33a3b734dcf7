"""Command-line front end.

Exit codes: 0 success, 1 a verification mismatch, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from . import beiter, dense, kaplan
from .errors import CycloError, InvalidInput
from .numtheory import factorize, find_prime_in_ap
from .tables import check_table

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID = 0, 1, 2


@dataclass
class Report:
    command: str
    inputs: dict
    results: list[dict] = field(default_factory=list)
    checks_passed: int = 0
    checks_failed: int = 0
    elapsed_ms: int = 0

    def tally(self, ok: bool) -> None:
        if ok:
            self.checks_passed += 1
        else:
            self.checks_failed += 1


def to_json(report: Report) -> str:
    return json.dumps(asdict(report), indent=2)


def _csv_cell(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def to_csv(report: Report) -> str:
    if not report.results:
        return ""
    columns = list(report.results[0])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for rec in report.results:
        writer.writerow([_csv_cell(rec.get(col, "")) for col in columns])
    return buf.getvalue()


def to_text(report: Report) -> str:
    lines = []
    for rec in report.results:
        lines.append("  ".join(f"{k}={_csv_cell(v)}" for k, v in rec.items()))
    if report.checks_passed or report.checks_failed:
        total = report.checks_passed + report.checks_failed
        lines.append(f"{report.checks_passed}/{total} checks passed")
    return "\n".join(lines)


def _cert_record(cert: beiter.Certificate, result: beiter.VerificationResult | None = None) -> dict:
    rec = cert.to_dict()
    if result is not None:
        rec["verified"] = result.passed
        rec["checks"] = {c.name: c.passed for c in result.checks}
    return rec


def _ternary_factors(n: int) -> tuple[int, int, int] | None:
    fac = factorize(n)
    if len(fac.factors) == 3 and fac.is_squarefree and fac.factors[0][0] > 2:
        p, q, r = fac.primes
        return p, q, r
    return None


# Subcommands.  Each fills a Report and returns the exit code.


def cmd_coeff(args, report: Report) -> int:
    n, k = args.n, args.k
    if n < 2 or k < 0:
        raise InvalidInput("need n >= 2 and k >= 0")
    triple = _ternary_factors(n)
    if triple:
        value, method = kaplan.ternary_coeff(triple, k), "kaplan"
    else:
        value, method = dense.cyclotomic_poly(n, args.dense_cap)[k], "dense"
    report.results.append({"n": n, "k": k, "value": value, "method": method})
    return EXIT_OK


def cmd_poly(args, report: Report) -> int:
    v = dense.cyclotomic_poly(args.n, args.dense_cap)
    height, argmax = dense.height_of(v)
    report.results.append(
        {"n": args.n, "degree": v.degree, "height": height, "argmax": argmax, "coeffs": v.tolist()}
    )
    return EXIT_OK


def cmd_height(args, report: Report) -> int:
    rep = kaplan.ternary_height((args.p, args.q, args.r), workers=args.workers, scan_cap=args.scan_cap)
    report.results.append(
        {"p": args.p, "q": args.q, "r": args.r, "height": rep.height,
         "witness": rep.witness, "signed_value": rep.signed_value}
    )
    ok = kaplan.height_bounds_hold(rep)
    report.tally(ok)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_beiter_sets(args, report: Report) -> int:
    for p in args.p:
        minus, plus = beiter.beiter_sets(p)
        report.results.append(
            {"p": p, "b_minus": minus, "b_plus": plus, "lower_bound": beiter.mp_lower_bound(p)}
        )
    return EXIT_OK


def _verify_all(certs, args, report: Report) -> int:
    failed = False
    for cert in certs:
        res = beiter.verify_certificate(cert, args.dense_cap, args.scan_cap)
        report.results.append(_cert_record(cert, res))
        for c in res.checks:
            if c.passed is not None:
                report.tally(c.passed)
        failed |= not res.passed
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_construct(args, report: Report) -> int:
    p, sign = args.p, args.sign
    minus, plus = beiter.beiter_sets(p)
    members = minus if sign == "minus" else plus
    label = "B-" if sign == "minus" else "B+"
    if args.beta is not None:
        if args.beta not in members:
            raise InvalidInput(f"{args.beta} is not in {label}({p}) = {members}")
        members = [args.beta]
    elif args.q is not None:
        members = [b for b in members if args.q % p == b]
    if not members:
        raise InvalidInput(f"{label}({p}) empty" + ("" if args.q is None else f" for q={args.q}"))
    certs = []
    for beta in members:
        q = args.q if args.q is not None else beiter.least_admissible_q(p, beta, sign)
        certs.extend(beiter.construct(p, beta, q, sign, args.r_cap))
    return _verify_all(certs, args, report)


def cmd_moller(args, report: Report) -> int:
    cert = beiter.moller(args.p, args.m, search=args.search, q=args.q)
    certs = [cert, beiter.lehmer(cert.p, cert.q, cert.r)]
    return _verify_all(certs, args, report)


def cmd_verify_table(args, report: Report) -> int:
    rows = check_table(args.which)
    for row in rows:
        report.results.append(row.to_record())
        report.tally(row.passed)
    return EXIT_OK if report.checks_failed == 0 else EXIT_MISMATCH


def cmd_reciprocal(args, report: Report) -> int:
    nums = args.numbers
    if len(nums) == 1:
        n, triple = nums[0], _ternary_factors(nums[0])
    elif len(nums) == 3:
        triple = tuple(nums)
        kaplan.OddPrimeTriple(*triple)
        n = nums[0] * nums[1] * nums[2]
    else:
        raise InvalidInput("give either n or three primes p q r")
    block = dense.reciprocal_block(n, args.dense_cap)
    period = block.minimal_period()
    rec = {"n": n, "height": block.height, "minimal_period": period,
           "period_divides_n": n % period == 0}
    report.tally(rec["period_divides_n"])
    if triple:
        pred = dense.reciprocal_height_predicate(*triple)
        agree = (block.height == triple[0] - 1) == (pred is dense.ReciprocalPrediction.EQUAL)
        rec.update(predicate=pred.value, agreement=agree)
        report.tally(agree)
    if args.show_block:
        rec["block"] = [int(c) for c in block.block]
    report.results.append(rec)
    return EXIT_OK if report.checks_failed == 0 else EXIT_MISMATCH


def cmd_transport(args, report: Report) -> int:
    t = kaplan.OddPrimeTriple(args.p, args.q, args.r)
    value = kaplan.ternary_coeff(t, args.n)
    pq = t.pq
    if args.mode == "same":
        s = args.target or find_prime_in_ap(t.r, pq, t.r, args.r_cap)
        new_r, new_n, expect = s, kaplan.transport_same(t, args.n, s), value
    else:
        u = args.target or find_prime_in_ap(-t.r, pq, max(pq, t.q), args.r_cap)
        new_r, new_n, expect = u, kaplan.transport_neg(t, args.n, u), -value
    got = kaplan.ternary_coeff((t.p, t.q, new_r), new_n)
    ok = got == expect
    report.results.append(
        {"p": t.p, "q": t.q, "r": t.r, "n": args.n, "value": value, "mode": args.mode,
         "new_r": new_r, "new_n": new_n, "new_value": got, "passed": ok}
    )
    report.tally(ok)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_verify_cert(args, report: Report) -> int:
    text = sys.stdin.read() if args.file in (None, "-") else open(args.file, encoding="utf-8").read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"not JSON: {exc}") from exc
    if isinstance(data, dict) and "results" in data:
        data = data["results"]
    items = data if isinstance(data, list) else [data]
    certs = [beiter.Certificate.from_dict(d) for d in items]
    return _verify_all(certs, args, report)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--r-cap", type=int, default=beiter.DEFAULT_R_CAP,
                        help="largest r tried in prime searches")
    common.add_argument("--scan-cap", type=int, default=kaplan.DEFAULT_SCAN_CAP,
                        help="most coefficients a full height scan may visit")
    common.add_argument("--dense-cap", type=int, default=dense.DEFAULT_DENSE_CAP,
                        help="largest degree the dense oracle will build")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog="ternary-cyclo", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("coeff", parents=[common], help="coefficient a_n(k)")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.set_defaults(func=cmd_coeff)

    sp = sub.add_parser("poly", parents=[common], help="all coefficients of Phi_n")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("height", parents=[common], help="height of Phi_pqr by full scan")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("r", type=int)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_height)

    sp = sub.add_parser("beiter-sets", parents=[common], help="the sets B-(p), B+(p)")
    sp.add_argument("p", type=int, nargs="+")
    sp.set_defaults(func=cmd_beiter_sets)

    sp = sub.add_parser("construct", parents=[common], help="build and verify counter-examples")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--beta", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--sign", choices=("minus", "plus"), required=True)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("moller", parents=[common], help="Moller and Lehmer certificates")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--q", type=int)
    sp.add_argument("--search", action="store_true", help="try larger m until r is prime")
    sp.set_defaults(func=cmd_moller)

    sp = sub.add_parser("verify-table", parents=[common], help="re-check a published table")
    sp.add_argument("which", type=int, choices=(1, 2, 3))
    sp.set_defaults(func=cmd_verify_table)

    sp = sub.add_parser("reciprocal", parents=[common], help="height of 1/Phi_n")
    sp.add_argument("numbers", type=int, nargs="+", metavar="N_OR_PQR")
    sp.add_argument("--show-block", action="store_true")
    sp.set_defaults(func=cmd_reciprocal)

    sp = sub.add_parser("transport", parents=[common], help="move a coefficient to another r")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("r", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--mode", choices=("same", "neg"), default="same")
    sp.add_argument("--target", type=int, help="the new prime (default: least valid one)")
    sp.set_defaults(func=cmd_transport)

    sp = sub.add_parser("verify-cert", parents=[common], help="verify certificate JSON")
    sp.add_argument("file", nargs="?", help="path, or - / omitted for stdin")
    sp.set_defaults(func=cmd_verify_cert)
    return parser


def _inputs(args) -> dict:
    skip = {"func", "command", "format"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report = Report(args.command, _inputs(args))
    start = time.perf_counter()
    try:
        code = args.func(args, report)
    except (CycloError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    render = {"json": to_json, "csv": to_csv, "text": to_text}[args.format]
    print(render(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
