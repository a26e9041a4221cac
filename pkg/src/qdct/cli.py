"""Command-line front end: ``qdct synth|verify|apply|count``.

Exit codes: 0 success, 1 I/O failure, 2 invalid arguments, 3 a verified
identity missed its tolerance.
"""

import argparse
import sys

import numpy as np

from .builders import apply_transform, trig_transform_circuit
from .circuit import CostModel, serialize, to_qasm3
from .reference import TransformKind, Variant
from .verification import (
    CIRCUIT_TOL,
    MATRIX_TOL,
    MAX_COUNT_N,
    MAX_VERIFY_N,
    reports_to_jsonl,
    scaling_table,
    verify_identity,
)

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_FAILED = 3

MAX_SYNTH_N = MAX_COUNT_N


class UsageError(Exception):
    pass


def parse_n_range(text):
    """``"3"`` -> [3]; ``"2..10"`` -> [2, ..., 10]."""
    try:
        if ".." in text:
            lo, hi = (int(p) for p in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad n range {text!r}; expected <int> or <a>..<b>") from None
    if lo > hi:
        raise UsageError(f"empty n range {text!r}")
    return list(range(lo, hi + 1))


def _check_ns(ns, limit):
    bad = [n for n in ns if not 1 <= n <= limit]
    if bad:
        raise UsageError(f"n={bad[0]} outside the supported range 1..{limit}")


def parse_variants(text):
    """``all``, a variant name (I..IV) or a kind name (dct1..dst4)."""
    if text.lower() == "all":
        return list(Variant)
    if text.upper() in Variant.__members__:
        return [Variant(text.upper())]
    try:
        return [TransformKind.parse(text).variant]
    except ValueError:
        raise UsageError(f"unknown variant {text!r}; use I, II, III, IV, all or dct1..dst4") from None


def _parse_kind(text):
    try:
        return TransformKind.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_synth(args, out):
    kind = _parse_kind(args.kind)
    _check_ns([args.n], MAX_SYNTH_N)
    circuit = trig_transform_circuit(kind, args.n).renamed(f"{kind.cli_name}_n{args.n}")
    text = serialize(circuit) if args.format == "qcirc" else to_qasm3(circuit)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"wrote {circuit.name} ({len(circuit)} gates, {circuit.qubits} qubits) to {args.out}", file=out)
    return EXIT_OK


def cmd_verify(args, out):
    variants = parse_variants(args.variant)
    ns = parse_n_range(args.n)
    _check_ns(ns, MAX_VERIFY_N)
    reports = [verify_identity(v, n, tol=args.tol, matrix_tol=MATRIX_TOL) for v in variants for n in ns]
    for r in reports:
        print(r.line(), file=out)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(reports_to_jsonl(reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def read_vector(path):
    values = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                values.append(float(line))
            except ValueError:
                raise UsageError(f"{path}:{lineno}: not a real number: {line!r}") from None
    return np.array(values)


def cmd_apply(args, out):
    kind = _parse_kind(args.kind)
    x = read_vector(args.input)
    try:
        y = apply_transform(kind, x)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write("".join(format(v, ".17g") + "\n" for v in y))
    return EXIT_OK


def cmd_count(args, out):
    variants = parse_variants(args.variant)
    ns = parse_n_range(args.n)
    _check_ns(ns, MAX_COUNT_N)
    model = CostModel(args.cost_model)
    table = scaling_table(variants, ns, fit_model=model)
    print("# variant n abstract linear-mcx quadratic-mcx", file=out)
    for r in table.rows:
        print(f"{r.variant.value} {r.n} {r.abstract_count} {r.linear_count} {r.quadratic_count}", file=out)
    for v in variants:
        fit = table.fits[v]
        if fit is not None:
            print(
                f"fit variant={v.value} model={model.value} a={fit.a:.6g} b={fit.b:.6g} "
                f"c={fit.c:.6g} max_rel_residual={fit.max_relative_residual:.4f}",
                file=out,
            )
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qdct", description="Quantum circuits for the discrete cosine and sine transforms."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="write the circuit for one transform")
    p.add_argument("--kind", required=True, help="dct1..dct4 or dst1..dst4")
    p.add_argument("--n", required=True, type=int, help="log2 of the transform size N")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=["qcirc", "qasm3"], default="qcirc")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("verify", help="check the DFT conjugation identities")
    p.add_argument("--variant", default="all")
    p.add_argument("--n", required=True, help="<int> or <a>..<b>")
    p.add_argument("--tol", type=float, default=CIRCUIT_TOL)
    p.add_argument("--report", help="write one JSON record per (variant, n)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("apply", help="transform a real vector read from a file")
    p.add_argument("--kind", required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", dest="output", required=True)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("count", help="gate counts and quadratic fit")
    p.add_argument("--variant", default="all")
    p.add_argument("--n", required=True)
    p.add_argument(
        "--cost-model", choices=[m.value for m in CostModel], default=CostModel.LINEAR_MCX.value
    )
    p.set_defaults(func=cmd_count)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qdct {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"qdct {args.command}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
