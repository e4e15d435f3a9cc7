"""
hcode-verify - Main Entry Point

Usage:
    python client.py admissible --n 3..12 --m-max 1000 --csv periods.csv
    python client.py verify-all --k 1
    python client.py codeword --torus 3 3 --boundary 100 --out codeword.txt
    python client.py distance --torus 9 9
    python client.py entropy --torus 9 9 --region triangle
    python client.py entropy --torus 9 9 --region topo
    python client.py spectrum --operator hx --sector 0
    python client.py ame
    python client.py constraints --torus 3 3
"""

import argparse
import os
import re
import sys
import traceback

from src.automaton import make_lattice, write_codeword
from src.config import Config
from src.core import SPECTRUM_OPERATORS, VerificationClient
from src.errors import EnumerationLimitError, InadmissibleTorusError, SingularMatrixError, SubspaceLeakageError

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2
DOMAIN_ERRORS = (
    InadmissibleTorusError,
    EnumerationLimitError,
    SubspaceLeakageError,
    SingularMatrixError,
    ValueError,
)


def n_range(text):
    """'7' or '3..12'"""
    match = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not match:
        raise argparse.ArgumentTypeError(f"expected N or N..M, got {text!r}")
    low = int(match.group(1))
    high = int(match.group(2) or low)
    if low < 2 or high < low:
        raise argparse.ArgumentTypeError(f"n range must satisfy 2 <= N <= M, got {text!r}")
    return low, high


def boundary_trits(text):
    """'100' or '1,-1,0'"""
    parts = text.split(",") if "," in text else list(text)
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"boundary must be trits, got {text!r}")
    if any(v not in (-1, 0, 1, 2) for v in values):
        raise argparse.ArgumentTypeError(f"boundary must be trits, got {text!r}")
    return tuple(v % 3 for v in values)


def positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def add_lattice_flags(parser, default=(3, 3)):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--torus", nargs=2, type=int, metavar=("N", "M"), help=f"torus lattice (default {default})")
    group.add_argument("--patch", nargs=2, type=int, metavar=("N", "M"), help="planar patch lattice")


def lattice_from(args, default=(3, 3)):
    if args.patch:
        return make_lattice("patch", *args.patch)
    return make_lattice("torus", *(args.torus or default))


def build_parser():
    parser = argparse.ArgumentParser(description="Verification suite for ternary holographic codes")
    parser.add_argument("--workers", type=positive_int, default=Config.WORKERS,
                        help=f"worker threads (default {Config.WORKERS}, env HCODE_WORKERS)")
    parser.add_argument("--seed", type=int, default=Config.SEED,
                        help=f"seed for sampled checks (default {Config.SEED}, env HCODE_SEED)")
    parser.add_argument("--json", metavar="PATH", help="write the JSON report here instead of stdout")
    parser.add_argument("--quiet", action="store_true", help="suppress status lines on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("admissible", help="tabulate minimal admissible torus heights")
    p.add_argument("--n", type=n_range, required=True, help="boundary length N or range N..M")
    p.add_argument("--m-max", type=positive_int, default=1000, help="largest height searched (default 1000)")
    p.add_argument("--csv", metavar="PATH", help="also write the table as CSV")

    p = sub.add_parser("verify-all", help="run the acceptance suite on the 3^k torus")
    p.add_argument("--k", type=int, default=1, help="torus side 3^k, k in {1, 2} (default 1)")

    p = sub.add_parser("codeword", help="grow a codeword from its boundary row")
    add_lattice_flags(p)
    p.add_argument("--boundary", type=boundary_trits, required=True, help="boundary trits, e.g. 100 or 1,-1,0")
    p.add_argument("--out", metavar="PATH", help="write the codeword text file")

    p = sub.add_parser("distance", help="minimum Hamming distance")
    add_lattice_flags(p)
    p.add_argument("--samples", type=positive_int, help="sample this many codewords (upper bound)")

    p = sub.add_parser("entropy", help="entanglement entropy of a region")
    add_lattice_flags(p)
    p.add_argument("--region", default="triangle",
                   help="triangle | half | topo | site:r,c | sites:r,c;r,c | row:r[:len] | column:c[:len]")
    p.add_argument("--sector", type=int, choices=(0, 1, 2), help="project onto one charge sector")
    p.add_argument("--brute-force", action="store_true", help="cross-check with the density matrix")

    p = sub.add_parser("spectrum", help="spectra of the 3x3 parent and boundary Hamiltonians")
    p.add_argument("--operator", choices=SPECTRUM_OPERATORS, default="hx")
    p.add_argument("--sector", type=int, choices=(0, 1, 2), help="restrict to sector codewords")
    p.add_argument("--n", type=int, default=3, help="boundary length for --operator boundary")
    p.add_argument("--k", type=int, default=1, help="torus side 3^k for --operator hx-general")

    sub.add_parser("ame", help="absolute maximal entanglement of the four-qutrit simplex state")

    p = sub.add_parser("constraints", help="solve the triangle constraint system for X-strings")
    add_lattice_flags(p)
    return parser


def run(client, args):
    if args.command == "admissible":
        report = client.admissible(*args.n, args.m_max)
        if args.csv:
            with open(args.csv, "w", encoding="utf-8") as f:
                f.write(report.results["csv"])
            client.status(f"📄 CSV written to {args.csv}")
        return report
    if args.command == "verify-all":
        return client.verify_all(args.k)
    if args.command == "codeword":
        report, config = client.codeword(lattice_from(args), args.boundary)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as f:
                f.write(write_codeword(config))
            client.status(f"📄 Codeword written to {args.out}")
        return report
    if args.command == "distance":
        return client.distance(lattice_from(args), samples=args.samples)
    if args.command == "entropy":
        return client.entropy(lattice_from(args), args.region, sector=args.sector, brute_force=args.brute_force)
    if args.command == "spectrum":
        return client.spectrum(args.operator, sector=args.sector, n=args.n, k=args.k)
    if args.command == "ame":
        return client.ame()
    return client.constraints(lattice_from(args))


def emit(report, path):
    text = report.to_json()
    if not path:
        sys.stdout.write(text)
        return
    if not os.path.dirname(path):
        os.makedirs(Config.REPORT_DIR, exist_ok=True)
        path = os.path.join(Config.REPORT_DIR, path)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    client = VerificationClient(workers=args.workers, seed=args.seed, quiet=args.quiet)

    try:
        report = run(client, args)
    except DOMAIN_ERRORS as e:
        print(f"❌ {e}", file=sys.stderr)
        if isinstance(e, EnumerationLimitError):
            print(Config.get_guard_error_message(), file=sys.stderr)
        sys.exit(EXIT_USAGE)
    except KeyboardInterrupt:
        print("\n👋 Interrupted", file=sys.stderr)
        sys.exit(EXIT_CHECK_FAILED)
    except Exception as e:
        print(f"❌ Fatal error: {e}", file=sys.stderr)
        traceback.print_exc()
        sys.exit(EXIT_CHECK_FAILED)

    emit(report, args.json)
    if report.ok:
        client.status(f"✅ {args.command}: {len(report.checks)} checks passed ({report.wall_time}s)")
        sys.exit(EXIT_OK)
    for check in report.failed:
        client.status(f"❌ {check.name}: expected {check.expected}, observed {check.observed}")
    sys.exit(EXIT_CHECK_FAILED)


if __name__ == "__main__":
    main()
