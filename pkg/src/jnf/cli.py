"""Command-line driver: read a matrix, compute the requested normal form,
emit the result, optionally verify."""

import argparse
import os
import sys
from dataclasses import dataclass

from .charpoly import char_data, hessenberg_charpoly
from .decomposition import verify
from .errors import (InternalConsistencyError, InvalidHintError, JnfError,
                     NeedsFactorizationError, ParseError, UnsupportedFieldError)
from .factor import factor_charpoly, format_factor_hint, parse_factor_hints
from .fields import PrimeField, QQ
from .io import emit_json, format_matrix, parse_matrix
from .jordan_linear import split_jordan
from .jordan_rational import assemble_pseudo_rational, rational_jordan
from .matrix import mat_mul

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NEEDS_FACTORIZATION = 3
EXIT_UNSUPPORTED_FIELD = 4
EXIT_INTERNAL = 5

DEFAULT_MAX_N = 512


@dataclass
class JobConfig:
    input_path: str
    field_spec: str = "q"
    form: str = "rational"
    factors_path: str = None
    output: str = "pretty"
    verify: bool = False
    orientation: str = None      # None picks the per-form default


def _make_field(spec):
    spec = spec.lower()
    if spec == "q":
        return QQ
    if spec.startswith("fp:"):
        try:
            p = int(spec[3:])
        except ValueError as exc:
            raise ParseError(f"bad field spec {spec!r}") from exc
        return PrimeField(p)
    raise ParseError(f"bad field spec {spec!r}; use 'q' or 'fp:<p>'")


def _default_orientation(form):
    # split form follows the classical subdiagonal display; the rational
    # forms follow the companion-block display with couplings above
    return "lower" if form == "split" else "upper"


def run(config):
    """Execute one job; returns (exit_code, report_text)."""
    field = _make_field(config.field_spec)
    try:
        with open(config.input_path, encoding="utf-8") as fh:
            a = parse_matrix(fh.read(), field)
    except OSError as exc:
        raise ParseError(f"cannot read {config.input_path}: {exc}") from exc
    if not a.is_square:
        raise ParseError("input matrix must be square")
    max_n = int(os.environ.get("JNF_MAX_N", DEFAULT_MAX_N))
    if a.rows > max_n:
        raise ParseError(f"matrix size {a.rows} exceeds JNF_MAX_N={max_n}")

    cd = char_data(a)
    hint = None
    if config.factors_path:
        try:
            with open(config.factors_path, encoding="utf-8") as fh:
                hint = parse_factor_hints(fh.read(), field)
        except OSError as exc:
            raise ParseError(f"cannot read {config.factors_path}: {exc}") from exc
    factorization = factor_charpoly(cd.p, hint=hint)

    orientation = config.orientation or _default_orientation(config.form)
    if config.form == "split":
        dec = split_jordan(a, factorization, orientation=orientation, chardata=cd)
    elif config.form == "pseudo":
        dec = assemble_pseudo_rational(a, factorization, orientation=orientation,
                                       chardata=cd)
    elif config.form == "rational":
        dec = rational_jordan(a, factorization, orientation=orientation,
                              chardata=cd)
    else:
        raise ParseError(f"unknown form {config.form!r}")

    lines = []
    if config.output == "json":
        lines.append(emit_json(dec))
    else:
        lines.append(f"form: {dec.form}")
        lines.append(f"field: {field!r}")
        lines.append("blocks (factor coefficients low->high, cycle length, offset):")
        for blk in dec.blocks:
            coeffs = " ".join(field.fmt(c) for c in blk.factor.coeffs)
            lines.append(f"  [{coeffs}]  k={blk.cycle_length}  offset={blk.offset}")
        lines.append("P =")
        lines.append(format_matrix(dec.p))
        lines.append("J =")
        lines.append(format_matrix(dec.j))
    if config.verify:
        verify(a, dec)
        ok_product = mat_mul(a, dec.p) == mat_mul(dec.p, dec.j)
        ok_charpoly = hessenberg_charpoly(dec.j) == cd.p
        if not (ok_product and ok_charpoly):
            raise InternalConsistencyError("verification failed")
        lines.append("verify: A*P == P*J and charpoly(J) == charpoly(A): exact")
    return EXIT_OK, "\n".join(lines)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="jnf",
        description="Exact Jordan and rational Jordan normal forms.")
    parser.add_argument("input", help="matrix file ('rows cols' header, then rows)")
    parser.add_argument("--field", default="q", dest="field_spec",
                        help="coefficient field: q (default) or fp:<prime>")
    parser.add_argument("--form", default="rational",
                        choices=["split", "pseudo", "rational"])
    parser.add_argument("--factors", dest="factors_path", default=None,
                        help="factor hint file for the characteristic polynomial")
    parser.add_argument("--output", default="pretty", choices=["pretty", "json"])
    parser.add_argument("--verify", action="store_true",
                        help="recheck A*P == P*J and charpoly(J) == charpoly(A)")
    orient = parser.add_mutually_exclusive_group()
    orient.add_argument("--upper", action="store_const", const="upper",
                        dest="orientation", default=None,
                        help="couplings/1s above the diagonal")
    orient.add_argument("--lower", action="store_const", const="lower",
                        dest="orientation",
                        help="couplings/1s below the diagonal")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    config = JobConfig(input_path=args.input, field_spec=args.field_spec,
                       form=args.form, factors_path=args.factors_path,
                       output=args.output, verify=args.verify,
                       orientation=args.orientation)
    try:
        code, report = run(config)
    except NeedsFactorizationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.residual is not None:
            print("unfactored part (hint-file syntax):", file=sys.stderr)
            print(format_factor_hint(exc.residual, exc.multiplicity), file=sys.stderr)
        return EXIT_NEEDS_FACTORIZATION
    except UnsupportedFieldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED_FIELD
    except (ParseError, InvalidHintError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InternalConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except JnfError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    print(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
