"""Command line interface: ``spinecalc <subcommand> ...``.

Exit status is 0 on success, 1 when a domain precondition fails and 2 on
I/O or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from .basis import basis, build_tree, loop_to_word, rank_formula
from .checks import sweep
from .embedding import compatible_tree, embed, verify_monomorphism
from .jsonio import (
    SCHEMA,
    FormatError,
    basis_to_dict,
    configuration_from_dict,
    graph_to_dict,
    loop_from_dict,
    trace_to_dict,
    word_to_dict,
)
from .retraction import homotopy, project_loop, retract_target
from .spine import build_spine, euler_characteristic, to_dot
from .star import SpineError, StarParams


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


@contextmanager
def _out(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _read_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def _params(args) -> StarParams:
    return StarParams(args.n, args.k, args.kappa)


def cmd_build(args):
    g = build_spine(_params(args))
    text = to_dot(g) if args.format == "dot" else _dump(graph_to_dict(g))
    with _out(args.output) as fh:
        fh.write(text)


def cmd_rank(args):
    p = _params(args)
    g = build_spine(p)
    rank = 1 - euler_characteristic(g)
    assert rank == rank_formula(p.n, p.k)
    with _out(args.output) as fh:
        if args.format == "json":
            fh.write(_dump({"schema": SCHEMA, "n": p.n, "k": p.k, "rank": rank,
                            "V": len(g.vertices), "E": len(g.edges)}))
        else:
            fh.write(f"rank={rank} V={len(g.vertices)} E={len(g.edges)}\n")


def cmd_basis(args):
    g = build_spine(_params(args))
    with _out(args.output) as fh:
        fh.write(_dump(basis_to_dict(basis(g, build_tree(g)))))


def cmd_embed(args):
    p = _params(args)
    if p.k < 3:
        raise SpineError(f"embedding needs level k-1 >= 2, so k >= 3 (got k={p.k})")
    gk1, gk = build_spine(StarParams(p.n, p.k - 1)), build_spine(p)
    emb = embed(gk1, gk, args.arm)
    tk1 = build_tree(gk1)
    tk = compatible_tree(gk, emb, tk1)
    rep = verify_monomorphism(gk1, gk, emb, tk1, tk)
    with _out(args.output) as fh:
        fh.write(_dump({"schema": SCHEMA, **rep.to_dict()}))
    if not rep.verified:
        for f in rep.failures:
            print(f"verification failure: {f}", file=sys.stderr)
        return 1


def cmd_retract(args):
    c = configuration_from_dict(_read_json(args.input))
    p = c.params
    rt = retract_target(p, c)
    doc = trace_to_dict(homotopy(p, c), rt.target, args.steps)
    with _out(args.output) as fh:
        fh.write(_dump(doc))


def cmd_word(args):
    doc = _read_json(args.input)
    if isinstance(doc, list):
        samples = [configuration_from_dict(d) for d in doc]
        if not samples:
            raise FormatError("empty sample list")
        p = samples[0].params
        if any(s.params != p for s in samples):
            raise FormatError("samples disagree on n, k or kappa")
        g = build_spine(p)
        w = project_loop(p, g, build_tree(g), samples)
    else:
        if args.n is None or args.k is None:
            raise FormatError("a vertex loop needs --n and --k")
        g = build_spine(_params(args))
        w = loop_to_word(g, build_tree(g), loop_from_dict(doc))
    with _out(args.output) as fh:
        fh.write(_dump(word_to_dict(w)))


def cmd_check(args):
    print(f"seed={args.seed} n_max={args.n_max} k_max={args.k_max} samples={args.samples}")
    failed = 0
    for label, bad in sweep(args.n_max, args.k_max, args.seed, args.samples):
        print(f"{'ok  ' if not bad else 'FAIL'} {label}")
        for b in bad[:10]:
            print(f"     {b}")
        failed += bool(bad)
    print("all checks passed" if not failed else f"{failed} check(s) failed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spinecalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def star_args(p, required=True):
        p.add_argument("--n", type=int, required=required, help="number of arms of the star")
        p.add_argument("--k", type=int, required=required, help="number of particles")
        p.add_argument("--kappa", type=float, default=None, help="arm length (default k - 1)")
        p.add_argument("-o", "--output", default=None, help="output file (default stdout)")

    p = sub.add_parser("build", help="build the k-spine graph")
    star_args(p)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("rank", help="rank of the braid group with vertex/edge counts")
    star_args(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("basis", help="free basis from the BFS spanning tree")
    star_args(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("embed", help="verify the embedding D_{k-1} -> D_k along one arm")
    star_args(p)
    p.add_argument("--arm", type=int, default=1)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("retract", help="retract a configuration onto the spine")
    p.add_argument("--input", required=True, help="configuration JSON ('-' for stdin)")
    p.add_argument("--steps", type=int, default=10, help="trace samples minus one")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_retract)

    p = sub.add_parser("word", help="free-group word of a vertex loop or sampled loop")
    star_args(p, required=False)
    p.add_argument("--input", required=True, help="loop JSON or array of configurations")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("check", help="run the invariant sweep")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--k-max", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=200, help="random configurations per (n, k)")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args) or 0
    except SpineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
