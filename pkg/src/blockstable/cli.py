"""Command-line entry point.

Data goes to stdout, diagnostics to stderr. Exit status 0 on success, 1 when a
verification or asserted experiment row fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from .blocks import decompose_blocks
from .codec import decode_extended, encode_extended, sample_neighborhood_uniform
from .explosion import ExplosionNeighborhood, explode, neighborhood_of, skeleton_tree
from .graph import GraphFormatError, parse_graph, serialize_graph
from .prufer import format_codeword, parse_codeword

log = logging.getLogger("blockstable")


def _read_graph(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_graph(text)


def _read_descriptor(path: str) -> ExplosionNeighborhood:
    return ExplosionNeighborhood.from_json(Path(path).read_text())


def cmd_decompose(args) -> int:
    print(decompose_blocks(_read_graph(args.graph)).to_json())
    return 0


def cmd_explode(args) -> int:
    x = explode(_read_graph(args.graph))
    tree = skeleton_tree(x)
    out = {"descriptor": neighborhood_of(x).to_dict(), "skeleton_tree": sorted(list(e) for e in tree.edges)}
    print(json.dumps(out))
    return 0


def cmd_encode(args) -> int:
    g = _read_graph(args.graph)
    d = _read_descriptor(args.descriptor) if args.descriptor else neighborhood_of(explode(g))
    print(format_codeword(encode_extended(g, d)))
    return 0


def cmd_decode(args) -> int:
    d = _read_descriptor(args.descriptor)
    word = parse_codeword(args.word, d.n)
    sys.stdout.write(serialize_graph(decode_extended(word, d)))
    return 0


def cmd_sample(args) -> int:
    d = _read_descriptor(args.descriptor)
    docs = []
    for r in range(args.count):
        rng = np.random.default_rng(args.seed + r)
        docs.append(serialize_graph(sample_neighborhood_uniform(d, rng)))
    sys.stdout.write("\n".join(docs))
    return 0


def cmd_verify(args) -> int:
    from .oracle import run_verification

    ok = True
    for rep in run_verification(max_n=args.max_n, max_m=args.max_m, max_weight_sum=args.max_weight_sum):
        print(rep.to_json())
        ok &= rep.passed
        log.info("%s: %s", rep.check, "pass" if rep.passed else "FAIL")
    return 0 if ok else 1


def cmd_experiment(args) -> int:
    from .experiments import ExperimentConfig, run_experiment, write_report

    cfg = ExperimentConfig.load(args.config)
    if args.jobs is not None:
        cfg.jobs = args.jobs
    if args.seed is not None:
        cfg.seed = args.seed
    if args.output is not None:
        cfg.output = args.output
    report = run_experiment(cfg)
    if cfg.output:
        log.info("wrote %s", cfg.output)
    else:
        sys.stdout.write(report.to_csv())
    for row in report.rows:
        if row.passed is False:
            log.warning("row failed: %s %s empirical=%s bound=%s", row.statistic, row.parameter, row.empirical, row.bound)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="blockstable", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("decompose", help="block decomposition of an edge-list graph as JSON")
    s.add_argument("graph", help="edge-list file, or - for stdin")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("explode", help="explosion descriptor and skeleton tree as JSON")
    s.add_argument("graph")
    s.set_defaults(func=cmd_explode)

    s = sub.add_parser("encode", help="extended codeword of a graph")
    s.add_argument("graph")
    s.add_argument("--descriptor", help="descriptor JSON (default: the graph's own)")
    s.set_defaults(func=cmd_encode)

    s = sub.add_parser("decode", help="graph coded by a word in a neighbourhood")
    s.add_argument("--descriptor", required=True)
    s.add_argument("--word", required=True, help='space-separated symbols, e.g. "2 2"')
    s.set_defaults(func=cmd_decode)

    s = sub.add_parser("sample", help="uniform samples from a neighbourhood")
    s.add_argument("--descriptor", required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--count", type=int, default=1)
    s.set_defaults(func=cmd_sample)

    s = sub.add_parser("verify", help="run the exact oracle suite")
    s.add_argument("--max-n", type=int, default=6)
    s.add_argument("--max-m", type=int, default=7)
    s.add_argument("--max-weight-sum", type=int, default=12)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("experiment", help="run an experiment config and write its report")
    s.add_argument("--config", required=True)
    s.add_argument("--jobs", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--output")
    s.set_defaults(func=cmd_experiment)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"blockstable {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
