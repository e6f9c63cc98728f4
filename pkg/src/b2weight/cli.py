"""Command-line interface.

Subcommands::

    b2weight table     [--wbars LIST] [--step S] [--refine R] [--out PATH]
    b2weight curve     --min A --max B --step S [--opt-step S] [--refine R] [--out PATH]
    b2weight construct --n N --omega W [--out PATH]
    b2weight verify    --in PATH
    b2weight search    --n N --omega W [--node-limit K]

Exit codes: 0 ok, 1 verification failure, 2 usage/domain error, 3 internal
consistency defect.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from b2weight.construction import build_codebook, lower_bound_rate
from b2weight.core import B2Error, Codebook, CodeParameters, WeightFraction
from b2weight.entropy_bounds import bound_diff_entropy, bound_sum_entropy
from b2weight.oracle import DEFAULT_NODE_LIMIT, exhaustive_max_b2, verify_b2
from b2weight.split_bounds import OptimizerOptions, bound_improved, bound_prefix_suffix

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_DEFECT = 3

TABLE1_WBARS = (0.5, 0.4, 0.345, 0.2, 0.1, 0.05, 0.02)
CSV_HEADER = "wbar,bound_sum_eq3,bound_diff_eq4,bound_prefix_suffix_eq7,bound_improved_eq19,lower_bound"
CODEBOOK_TAG = "# b2weight codebook"


class CodebookParseError(B2Error):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class BoundsRow:
    wbar: float
    bound_sum: float
    bound_diff: float
    bound_ps: float
    bound_improved: float
    lower: float

    def as_tuple(self) -> tuple[float, ...]:
        return (self.wbar, self.bound_sum, self.bound_diff, self.bound_ps, self.bound_improved, self.lower)


@dataclass(frozen=True)
class BoundsTable:
    rows: tuple[BoundsRow, ...]

    def to_csv(self) -> str:
        lines = [CSV_HEADER]
        lines += [",".join(f"{x:.6f}" for x in row.as_tuple()) for row in self.rows]
        return "\n".join(lines) + "\n"


def _check_table_wbar(wbar: float) -> float:
    if not 0.0 < wbar <= 0.5:
        raise B2Error(f"wbar must lie in (0, 1/2], got {wbar}")
    return WeightFraction(wbar).value


def bounds_row(wbar: float, opts: OptimizerOptions | None = None) -> BoundsRow:
    w = _check_table_wbar(wbar)
    return BoundsRow(
        w,
        bound_sum_entropy(w).value,
        bound_diff_entropy(w).value,
        bound_prefix_suffix(w, opts).value,
        bound_improved(w, opts).value,
        lower_bound_rate(w).value,
    )


def bounds_table(wbars: Sequence[float] = TABLE1_WBARS, opts: OptimizerOptions | None = None) -> BoundsTable:
    return BoundsTable(tuple(bounds_row(w, opts) for w in wbars))


def curve_wbars(wbar_min: float, wbar_max: float, step: float) -> list[float]:
    """Grid ``wbar_min, wbar_min + step, ...`` not exceeding ``wbar_max``."""
    if not 0.0 < wbar_min <= wbar_max <= 0.5:
        raise B2Error(f"need 0 < min <= max <= 1/2, got min={wbar_min}, max={wbar_max}")
    if not step > 0:
        raise B2Error(f"step must be positive, got {step}")
    out = []
    k = 0
    while True:
        w = round(wbar_min + k * step, 12)
        if w > wbar_max + 1e-12:
            break
        out.append(w)
        k += 1
    return out


# -- codebook files ---------------------------------------------------------


def format_codebook(cb: Codebook) -> str:
    p = cb.params
    header = f"{CODEBOOK_TAG} n={p.n} omega={p.omega} q={len(cb)} construction=bose"
    return "\n".join([header, *(str(v) for v in cb.vectors)]) + "\n"


def parse_codebook(text: str) -> Codebook:
    """Parse a codebook file. Raises :class:`CodebookParseError` naming the bad line."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or not lines[0].startswith(CODEBOOK_TAG):
        raise CodebookParseError(1, f"expected header starting with {CODEBOOK_TAG!r}")
    fields = dict(re.findall(r"(\w+)=(\S+)", lines[0]))
    try:
        n, omega, q = int(fields["n"]), int(fields["omega"]), int(fields["q"])
        params = CodeParameters(n, omega)
    except (KeyError, ValueError) as exc:
        raise CodebookParseError(1, f"header needs integer n, omega and q ({exc})") from None
    body = lines[1:]
    for lineno, line in enumerate(body, start=2):
        if len(line) != n or any(ch not in "01" for ch in line):
            raise CodebookParseError(lineno, f"expected {n} characters from {{0,1}}, got {line!r}")
    if len(body) != q:
        raise CodebookParseError(1, f"header declares q={q} vectors but body has {len(body)}")
    return Codebook.from_strings(params.n, params.omega, body)


# -- commands ---------------------------------------------------------------


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, newline="")
    else:
        sys.stdout.write(text)


def _opts(args: argparse.Namespace) -> OptimizerOptions:
    return OptimizerOptions(coarse_step=args.opt_step, refine_rounds=args.refine)


def cmd_table(args: argparse.Namespace) -> int:
    wbars = TABLE1_WBARS
    if args.wbars:
        wbars = tuple(float(x) for x in args.wbars.split(",") if x.strip())
    _emit(bounds_table(wbars, _opts(args)).to_csv(), args.out)
    return EXIT_OK


def cmd_curve(args: argparse.Namespace) -> int:
    wbars = curve_wbars(args.min, args.max, args.step)
    _emit(bounds_table(wbars, _opts(args)).to_csv(), args.out)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    cb = build_codebook(CodeParameters(args.n, args.omega))
    try:
        violation = verify_b2(cb)
    except B2Error as exc:
        violation = exc
    if violation is not None:
        print(f"internal error: constructed codebook failed verification: {violation}", file=sys.stderr)
        return EXIT_DEFECT
    _emit(format_codebook(cb), args.out)
    if args.out:
        print(f"wrote {len(cb)} vectors to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    cb = parse_codebook(Path(args.input).read_text())
    try:
        violation = verify_b2(cb)
    except B2Error as exc:
        print(f"FAIL: {exc}")
        return EXIT_VIOLATION
    if violation is not None:
        print(f"FAIL: B2 violation: {violation}")
        return EXIT_VIOLATION
    print(f"ok: {len(cb)} vectors, n={cb.params.n}, omega={cb.params.omega}")
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    res = exhaustive_max_b2(args.n, args.omega, args.node_limit)
    status = "exact" if res.exact else "lower bound (node limit reached)"
    print(f"n={res.n} omega={res.omega}")
    print(f"max_size={res.max_size}")
    print(f"status={status}")
    print(f"nodes_explored={res.nodes_explored}")
    print("witness:")
    for v in res.witness:
        print(v)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="b2weight", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="rate bounds at selected weight fractions")
    p.add_argument("--wbars", help="comma-separated weight fractions (default: 0.5,0.4,0.345,0.2,0.1,0.05,0.02)")
    p.add_argument("--step", dest="opt_step", type=float, default=1e-3, help="optimizer coarse grid step")
    p.add_argument("--refine", type=int, default=3, help="optimizer refinement rounds")
    p.add_argument("--out", help="CSV output path (default: stdout)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("curve", help="rate bounds on a grid of weight fractions")
    p.add_argument("--min", type=float, required=True)
    p.add_argument("--max", type=float, required=True)
    p.add_argument("--step", type=float, required=True, help="weight-fraction grid step")
    p.add_argument("--opt-step", type=float, default=1e-3, help="optimizer coarse grid step")
    p.add_argument("--refine", type=int, default=3, help="optimizer refinement rounds")
    p.add_argument("--out")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("construct", help="build and self-verify a Sidon-based codebook")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--omega", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a codebook file for constant weight and the B2 property")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exact maximum B2 set size at small scale")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--omega", type=int, required=True)
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except B2Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
