"""Command-line interface: ``symcube {eigenform,lvalues,padic,certify,selftest}``.

Exit status: 0 on success, 1 on an incomplete certificate or failed check,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from ..errors import ReportRefusedError, SymcubeError
from ..lfunc import LFunction, critical_values, lvalues_json, required_terms, root_number
from ..modforms import cached_eigenform, check_supported_weight
from .certificate import run_bk_certificate, run_imc_report, validate_certificate
from .selftest import selftest

CERT_HELP = """\
certificate JSON (schema 1), top-level keys:
  schema, form, prime, checklist, root_number, critical_values,
  algebraic_parts, interpolation, congruences, conclusions, caveats, meta
numbers with more than machine precision are decimal strings;
balls are {"re", "im", "radius"}; meta.status is "complete" or "incomplete".
"""


def _even_weight(text: str) -> int:
    k = int(text)
    if k % 2 or k < 2:
        raise argparse.ArgumentTypeError(f"weight must be an even integer >= 2, got {text}")
    return k


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symcube",
        description="Symmetric-cube L-function data and certificates for level-1 eigenforms.",
        epilog=CERT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, prime=False):
        p.add_argument("--weight", type=_even_weight, required=True, metavar="K")
        if prime:
            p.add_argument("--p", type=int, required=True, metavar="P")
        p.add_argument("--digits", type=int, default=30, metavar="D")
        p.add_argument("--terms", type=int, default=None, metavar="N",
                       help="number of q-expansion coefficients (default: sized from --digits)")
        p.add_argument("--cache", default="./cache", metavar="DIR", help="coefficient cache directory")
        p.add_argument("--seed", type=int, default=0, metavar="S")
        p.add_argument("--out", default=None, metavar="FILE")

    p = sub.add_parser("eigenform", help="print q-expansion coefficients a_1..a_N")
    p.add_argument("--weight", type=_even_weight, required=True, metavar="K")
    p.add_argument("--terms", type=int, default=100, metavar="N")
    p.add_argument("--cache", default="./cache", metavar="DIR")
    p.add_argument("--out", default=None, metavar="FILE")

    p = sub.add_parser("lvalues", help="root number and critical L-values")
    common(p)
    p.add_argument("--dump-lvalues", default=None, metavar="FILE")

    p = sub.add_parser("padic", help="interpolation records and congruence checks")
    common(p, prime=True)
    p.add_argument("--padic-prec", type=int, default=20, metavar="M")
    p.add_argument("--dump-padic", default=None, metavar="FILE")

    p = sub.add_parser("certify", help="emit a certificate", epilog=CERT_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    common(p, prime=True)
    p.add_argument("--padic-prec", type=int, default=None, metavar="M",
                   help="also append the interpolation report at this p-adic precision")
    p.add_argument("--dump-lvalues", default=None, metavar="FILE")
    p.add_argument("--dump-padic", default=None, metavar="FILE")

    sub.add_parser("selftest", help="run the invariant suites")
    return parser


def _emit(text: str, path) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_eigenform(args) -> int:
    check_supported_weight(args.weight)
    f = cached_eigenform(args.weight, args.terms, args.cache)
    _emit("".join(f"{n} {f.a(n)}\n" for n in range(1, args.terms + 1)), args.out)
    return 0


def _cmd_lvalues(args) -> int:
    check_supported_weight(args.weight)
    n = args.terms or required_terms(args.weight, args.digits) + 16
    L = LFunction(cached_eigenform(args.weight, n, args.cache))
    eps = root_number(L, args.digits)
    values = critical_values(L, args.digits)
    dump = lvalues_json(values, args.digits) + "\n"
    if args.dump_lvalues:
        _emit(dump, args.dump_lvalues)
    lines = [f"root number {eps.to_dict(args.digits)}"]
    lines += [f"j={cp.j_offset} s={cp.s} {ball.to_dict(args.digits)}" for cp, ball in values]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _padic_dump(cert) -> str:
    return json.dumps({"interpolation": cert.data["interpolation"], "congruences": cert.data["congruences"]},
                      indent=2) + "\n"


def _cmd_padic(args) -> int:
    cert = run_imc_report(args.weight, args.p, args.digits, args.padic_prec, args.seed, args.terms, args.cache)
    text = _padic_dump(cert)
    if args.dump_padic:
        _emit(text, args.dump_padic)
    _emit(text, args.out)
    return 0


def _cmd_certify(args) -> int:
    cert = run_bk_certificate(args.weight, args.p, args.digits, args.seed, args.terms, args.cache)
    if args.padic_prec is not None and cert.status == "complete":
        try:
            run_imc_report(args.weight, args.p, args.digits, args.padic_prec, certificate=cert)
        except ReportRefusedError as exc:
            cert.data["interpolation"] = {"refused": str(exc)}
    if args.dump_lvalues and cert.data["critical_values"]:
        rows = [{"j_offset": r["j_offset"], "s": r["s"], **r["value"]} for r in cert.data["critical_values"]]
        _emit(json.dumps(rows, indent=2) + "\n", args.dump_lvalues)
    if args.dump_padic and cert.data["interpolation"]:
        _emit(_padic_dump(cert), args.dump_padic)
    _emit(cert.to_json(), args.out)
    problems = validate_certificate(cert.data)
    for problem in problems:
        print(f"validation: {problem}", file=sys.stderr)
    return 0 if cert.status == "complete" and not problems else 1


COMMANDS = {
    "eigenform": _cmd_eigenform,
    "lvalues": _cmd_lvalues,
    "padic": _cmd_padic,
    "certify": _cmd_certify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.command == "selftest":
        return 0 if selftest() else 1
    try:
        return COMMANDS[args.command](args)
    except SymcubeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
