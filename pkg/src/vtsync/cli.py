"""Command-line front end: encode, reconstruct, simulate, inspect.

Files are raw bit streams, most significant bit first within each byte; a
sequence of n bits occupies ceil(n/8) bytes with the last byte zero-padded.
Exit codes: 0 success, 1 usage/parameter error or empty reconstruction,
2 unparseable message file, 3 truncated decode.
"""

import argparse
import sys
from math import ceil

from .bits import bits_from_bytes, bits_to_bytes
from .decoder import DecoderLimits, decode
from .encoder import (CodeParams, MessageFormatError, ParamError, RandomBinary,
                      ReedSolomon, encode, message_bits, parse_message,
                      serialize_message, sync_rate)
from .sim import builtin_setups, export_stats, get_setup, run_trials, SetupSpec

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_TRUNCATED = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _params_from_flags(args) -> CodeParams:
    if args.code == "rs":
        if args.z % args.nc:
            raise ParamError(f"--z {args.z} is not a whole number of "
                             f"GF(2^{args.nc}) symbols")
        code = ReedSolomon(args.z // args.nc)
    else:
        code = RandomBinary(args.z, args.seed)
    return CodeParams(args.nc, args.l1, args.l2, code)


def _limits_from_flags(args) -> DecoderLimits:
    return DecoderLimits(max_tree_nodes=args.max_tree_nodes,
                         max_candidates=args.max_candidates,
                         max_affine_enumeration=args.max_affine)


def _read_exact_bits(path: str, nbits: int) -> bytes:
    data = open(path, "rb").read()
    expect = ceil(nbits / 8)
    if len(data) != expect:
        raise ParamError(f"{path}: expected {nbits} bits "
                         f"({expect} bytes), found {len(data)} bytes")
    return bits_from_bytes(data, nbits, require_zero_tail=True)


def cmd_encode(args) -> int:
    params = _params_from_flags(args)
    try:
        x = _read_exact_bits(args.input, params.n)
    except ValueError as exc:
        raise ParamError(str(exc)) from exc
    msg = encode(x, params)
    blob = serialize_message(msg, params)
    with open(args.out, "wb") as fh:
        fh.write(blob)
    bits = message_bits(params)
    print(f"wrote {args.out}: {bits} message bits "
          f"({len(blob)} bytes with header), rate {sync_rate(params):.3f}")
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    try:
        msg, params = parse_message(open(args.message, "rb").read())
    except MessageFormatError as exc:
        print(f"error: {args.message}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    data = open(args.received, "rb").read()
    nbits = args.received_bits if args.received_bits is not None else 8 * len(data)
    if nbits > params.n:
        raise ParamError(f"received length {nbits} exceeds n = {params.n}")
    if ceil(nbits / 8) != len(data):
        raise ParamError(f"{args.received}: {len(data)} bytes cannot hold "
                         f"exactly {nbits} bits")
    y = bits_from_bytes(data, nbits, require_zero_tail=True)
    report = decode(y, msg, params, _limits_from_flags(args))
    print(f"r1={report.r1} r3={report.r3} r4={report.r4} "
          f"r5={report.r5} r6={report.r6} truncated={report.truncated}")
    if report.r6 == 1:
        paths = [args.out]
    else:
        paths = [f"{args.out}.{i + 1}" for i in range(report.r6)]
    for path, seq in zip(paths, report.final_list):
        with open(path, "wb") as fh:
            fh.write(bits_to_bytes(seq))
    if paths:
        print(f"wrote {len(paths)} candidate(s): {', '.join(paths)}")
    if report.truncated:
        print("warning: search truncated by resource limits; "
              "the list may be incomplete", file=sys.stderr)
        return EXIT_TRUNCATED
    if report.r6 == 0:
        print("error: no consistent reconstruction found", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_simulate(args) -> int:
    if args.setup is not None:
        setup = get_setup(args.setup)
    else:
        if args.k is None:
            raise ParamError("--k is required when no --setup is chosen")
        setup = SetupSpec("custom", _params_from_flags(args), args.k)
    stats = run_trials(setup, args.trials, args.seed, _limits_from_flags(args))
    blob = export_stats(stats, args.format, include_wall_time=False)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(blob)
    else:
        sys.stdout.write(blob.decode("ascii"))
    print(f"{stats.trials} trials in {stats.wall_time_s:.2f}s "
          f"({setup.name}: n={setup.params.n}, k={setup.k})", file=sys.stderr)
    return EXIT_OK


def cmd_inspect(args) -> int:
    try:
        msg, params = parse_message(open(args.message, "rb").read())
    except MessageFormatError as exc:
        print(f"error: {args.message}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if isinstance(params.code, ReedSolomon):
        kind = f"reed-solomon z_sym={params.code.z_sym}"
        m3_hex = _pack_fields(msg.m3, params.n_c)
    else:
        kind = f"random-binary seed={params.code.seed:#x}"
        m3_hex = _pack_fields(msg.m3, 1)
    print(f"n={params.n} n_c={params.n_c} l1={params.l1} l2={params.l2} "
          f"code={kind} z={params.z}")
    print("M1 =", " ".join(str(v) for v in msg.m1))
    print("M2 =", " ".join(str(v) for v in msg.m2))
    print("M3 = 0x" + m3_hex)
    print(f"message bits: {message_bits(params)}, rate {sync_rate(params):.3f}")
    return EXIT_OK


def _pack_fields(values, width) -> str:
    acc = 0
    nbits = 0
    for v in values:
        acc = (acc << width) | v
        nbits += width
    pad = -nbits % 4
    return format(acc << pad, f"0{(nbits + pad) // 4}x") if nbits else ""


def _add_params_flags(p, seed_help="parity-matrix seed (random code only)"):
    p.add_argument("--nc", type=int, help="chunk size in bits")
    p.add_argument("--l1", type=int, help="number of blocks")
    p.add_argument("--l2", type=int, help="chunks per block")
    p.add_argument("--code", choices=["rs", "random"], default="rs",
                   help="parity-check family (default rs)")
    p.add_argument("--z", type=int, help="total parity bits")
    p.add_argument("--seed", type=int, default=0, help=seed_help)


def _add_limits_flags(p):
    p.add_argument("--max-tree-nodes", type=int, default=DecoderLimits.max_tree_nodes,
                   help="search-tree node ceiling")
    p.add_argument("--max-candidates", type=int, default=DecoderLimits.max_candidates,
                   help="candidate-list ceiling")
    p.add_argument("--max-affine", type=int,
                   default=DecoderLimits.max_affine_enumeration,
                   help="ceiling on enumerated solutions of an underdetermined "
                        "parity system")


def build_parser() -> _Parser:
    parser = _Parser(prog="vtsync",
                     description="One-way synchronization from deletions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="build a sync message from a bit file")
    p.add_argument("input", help="input file (exactly n_c*l1*l2 bits)")
    _add_params_flags(p)
    p.add_argument("--out", required=True, help="message output path")
    p.set_defaults(func=cmd_encode, needs_params=True)

    p = sub.add_parser("reconstruct",
                       help="rebuild the original from a shorter file + message")
    p.add_argument("received", help="file holding the deletion-corrupted bits")
    p.add_argument("message", help="sync message file")
    p.add_argument("--received-bits", type=int, default=None,
                   help="exact bit length of the received file "
                        "(default: 8 * file size)")
    p.add_argument("--out", required=True,
                   help="output path (suffixed .1, .2, ... when the list "
                        "has several entries)")
    _add_limits_flags(p)
    p.set_defaults(func=cmd_reconstruct, needs_params=False)

    p = sub.add_parser("simulate", help="run Monte-Carlo trials and export stats")
    p.add_argument("--setup", type=int, choices=range(1, len(builtin_setups()) + 1),
                   help="built-in preset number")
    _add_params_flags(p, seed_help="master seed for the trial streams (and the "
                                   "parity matrix when --code random)")
    p.add_argument("--k", type=int, help="deletions per trial (custom params)")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", help="stats output path (default: stdout)")
    _add_limits_flags(p)
    p.set_defaults(func=cmd_simulate, needs_params=False)

    p = sub.add_parser("inspect", help="print the contents of a message file")
    p.add_argument("message")
    p.set_defaults(func=cmd_inspect, needs_params=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "needs_params", False) or (
                args.command == "simulate" and args.setup is None):
            missing = [f for f in ("nc", "l1", "l2", "z")
                       if getattr(args, f, None) is None]
            if missing:
                raise ParamError("missing required parameter flags: "
                                 + ", ".join("--" + m for m in missing))
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParamError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
