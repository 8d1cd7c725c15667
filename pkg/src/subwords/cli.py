"""Command-line front end: ``subwords <command> --base b ...``.

Exit status is 0 on success, 1 when a verification check fails and 2 on
usage errors (bad flags, base < 2, arguments outside an operation's domain).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .asymptotics import sample_h, series_to_csv
from .pascal import compressed_profile, profile_to_csv, render_triangle
from .regular import build_linear_representation, coefficients_to_json, s_fast, solve_coefficients
from .summatory import a_fast, decompose
from .trie import build_trie, level_counts, to_dot
from .verify import base_suite, run_suite
from .words import DomainError, parse_word


def _base(text: str) -> int:
    try:
        b = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid base {text!r}")
    if b < 2:
        raise argparse.ArgumentTypeError("base must be >= 2")
    return b


def _nat(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer")
    return n


def _positive(text: str) -> int:
    n = _nat(text)
    if n < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return n


def _numbers(tokens: list[str]) -> list[int]:
    """Expand arguments like ``7`` and ``0..32`` (inclusive) into integers."""
    out: list[int] = []
    for tok in tokens:
        if ".." in tok:
            lo, hi = tok.split("..", 1)
            lo_n, hi_n = _nat(lo), _nat(hi)
            if hi_n < lo_n:
                raise argparse.ArgumentTypeError(f"empty range {tok!r}")
            out.extend(range(lo_n, hi_n + 1))
        else:
            out.append(_nat(tok))
    return out


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _matrices_text(lin) -> str:
    lines = []
    for s, m in enumerate(lin.mu):
        lines.append(f"mu({s})")
        width = max(len(str(x)) for row in m for x in row)
        lines.extend("  " + " ".join(str(x).rjust(width) for x in row) for row in m)
    lines.append("v0 " + " ".join(str(x) for x in lin.v0))
    return "\n".join(lines) + "\n"


def _coeffs_text(co) -> str:
    b = co.base
    head = "r a " + " ".join(f"c{s}" for s in range(b - 1))
    rows = [f"{r} {co.a[r]} " + " ".join(str(x) for x in co.c[r]) for r in range(b * b)]
    return "\n".join([head] + rows) + "\n"


def cmd_sb(args) -> int:
    print(" ".join(str(s_fast(args.base, n)) for n in _numbers(args.n)))
    return 0


def cmd_ab(args) -> int:
    print(" ".join(str(a_fast(args.base, n)) for n in _numbers(args.n)))
    return 0


def cmd_decompose(args) -> int:
    d = decompose(args.base, args.n)
    if args.format == "json":
        _emit(d.to_json() + "\n", args.out)
    else:
        _emit(" ".join(str(x) for x in d.d) + "\n", args.out)
    return 0


def cmd_coeffs(args) -> int:
    co = solve_coefficients(args.base)
    if args.format == "json":
        lin = build_linear_representation(args.base, co)
        _emit(coefficients_to_json(lin, co) + "\n", args.out)
    else:
        _emit(_coeffs_text(co), args.out)
    return 0


def cmd_matrices(args) -> int:
    lin = build_linear_representation(args.base)
    if args.format == "json":
        obj = {
            "base": lin.base,
            "mu": [[[str(x) for x in row] for row in m] for m in lin.mu],
            "v0": [str(x) for x in lin.v0],
            "selector": [str(x) for x in lin.selector],
        }
        _emit(json.dumps(obj, indent=1) + "\n", args.out)
    else:
        _emit(_matrices_text(lin), args.out)
    return 0


def cmd_triangle(args) -> int:
    Path(args.out).write_bytes(render_triangle(args.base, args.rows, args.cap))
    return 0


def cmd_profile(args) -> int:
    _emit(profile_to_csv(compressed_profile(args.base, args.rows)), args.out)
    return 0


def cmd_hb_sample(args) -> int:
    _emit(series_to_csv(sample_h(args.base, args.n, args.res)), args.out)
    return 0


def cmd_trie(args) -> int:
    t = build_trie(args.base, parse_word(args.base, args.word), max_length=args.max_length)
    if args.format == "dot":
        _emit(to_dot(t), args.out)
    else:
        _emit(" ".join(str(c) for c in level_counts(t)) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    def report(res):
        print(res.line(), flush=True)

    results = run_suite(base_suite(args.base, args.max), report)
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="subwords", description="Distinct subwords of base-b expansions.")
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--base", "-b", type=_base, required=True)
        sp.set_defaults(func=func)
        return sp

    sp = cmd("sb", cmd_sb, "S_b(n) for each argument (ranges a..b allowed)")
    sp.add_argument("n", nargs="+")
    sp = cmd("ab", cmd_ab, "A_b(n) for each argument (ranges a..b allowed)")
    sp.add_argument("n", nargs="+")

    sp = cmd("decompose", cmd_decompose, "(2b-1)-decomposition of A_b(n)")
    sp.add_argument("n", type=_nat)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--out")

    for name, func, default in (("coeffs", cmd_coeffs, "text"), ("matrices", cmd_matrices, "text")):
        sp = cmd(name, func, f"{name} of the linear representation")
        sp.add_argument("--format", choices=("text", "json"), default=default)
        sp.add_argument("--out")

    sp = cmd("triangle", cmd_triangle, "render the generalized Pascal triangle as a PGM image")
    sp.add_argument("--rows", type=_positive, required=True)
    sp.add_argument("--cap", type=_positive, default=2)
    sp.add_argument("--out", required=True)

    sp = cmd("profile", cmd_profile, "positive entries per triangle row, as CSV")
    sp.add_argument("--rows", type=_positive, required=True)
    sp.add_argument("--out")

    sp = cmd("hb-sample", cmd_hb_sample, "sample the periodic fluctuation over one period, as CSV")
    sp.add_argument("--n", type=_positive, default=12)
    sp.add_argument("--res", type=_positive, default=512)
    sp.add_argument("--out")

    sp = cmd("trie", cmd_trie, "trie of subwords of a word (DOT or level counts)")
    sp.add_argument("--word", required=True)
    sp.add_argument("--format", choices=("dot", "levels"), default="dot")
    sp.add_argument("--max-length", type=_positive, default=20)
    sp.add_argument("--out")

    sp = cmd("verify", cmd_verify, "run the invariant checks for one base")
    sp.add_argument("--max", type=_positive, default=None, help="largest n swept (default b^5)")
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as e:
        return int(e.code or 0)
    except (DomainError, argparse.ArgumentTypeError) as e:
        print(f"subwords: error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
