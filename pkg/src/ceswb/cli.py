"""Command-line interface.

Vertex and mutation indices are 1-based here and 0-based in the library.
"""
from __future__ import annotations

import argparse
import json
import sys

from ._bounds import BoundExceeded, check_bound
from .chords import enumerate_diagrams, labeled_to_seq
from .cmatdiag import (
    cmatrix_of_diagram,
    diagram_of_cmatrix,
    is_cmatrix_diagram,
    mutate_diagram_traced,
    st_witness,
)
from .exchange import CMatrix, c_matrix_of, enumerate_cmatrices, framed_matrix, mutate
from .ncpart import (
    chain_of_labeled_diagram,
    diagram_leaf_distribution,
    enumerate_nc_chains,
    labeled_diagram_of_chain,
    tree_leaf_distribution,
)
from .posets import (
    count_linear_extensions,
    cycle_notation,
    linear_extensions,
    permutations_of_cmatrix,
    poset_of_diagram,
    satisfies_poset_conditions,
    sequence_of_permutation,
)
from .serialize import (
    chain_from_json,
    chain_to_json,
    diagram_from_json,
    diagram_to_dot,
    diagram_to_json,
    dumps,
    poset_to_dot,
)
from .verify import run_all


class CLIError(Exception):
    pass


def parse_seq(text, n):
    """``"1,3"`` -> ``[0, 2]``; indices must lie in 1..n."""
    if text is None or not text.strip():
        return []
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            k = int(tok)
        except ValueError:
            raise CLIError(f"bad mutation index {tok!r}") from None
        if not 1 <= k <= n:
            raise CLIError(f"mutation index {k} outside 1..{n}")
        out.append(k - 1)
    return out


def _seq_json(seq):
    return [V.to_json() for V in seq]


def _seq_text(seq):
    return "(" + ", ".join(str(V) for V in seq) + ")"


def _read_json(path):
    if path is None:
        raise CLIError("--input is required for this command")
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _need_n(args):
    if args.n is None:
        raise CLIError("--n is required for this command")
    if args.n < 1:
        raise CLIError("--n must be at least 1")
    check_bound(args.n, args.bound)
    return args.n


def _fmt(args, default):
    return args.format or default


def cmd_mutate(args):
    n = _need_n(args)
    seq = parse_seq(args.seq, n)
    B = framed_matrix(n)
    d = diagram_of_cmatrix(c_matrix_of(B))
    steps = [{"step": 0, "vertex": None, "matrix": B, "diagram": d, "trace": []}]
    for t, k in enumerate(seq, start=1):
        d, trace = mutate_diagram_traced(d, B, k)
        B = mutate(B, k)
        if d != diagram_of_cmatrix(c_matrix_of(B)):
            raise AssertionError("diagram mutation disagrees with matrix mutation")
        steps.append({"step": t, "vertex": k, "matrix": B, "diagram": d, "trace": trace})

    fmt = _fmt(args, "text")
    if fmt == "dot":
        return diagram_to_dot(d)
    if fmt == "json":
        out = []
        for s in steps:
            rewrites = [{"row": j + 1, "case": case} for j, case in s["trace"] if case != "ii"]
            branches = (["i"] if rewrites else []) + (["ii"] if s["vertex"] is not None else [])
            out.append(
                {
                    "step": s["step"],
                    "vertex": None if s["vertex"] is None else s["vertex"] + 1,
                    "matrix": s["matrix"].to_json(),
                    "cmatrix": c_matrix_of(s["matrix"]).to_json(),
                    "diagram": diagram_to_json(s["diagram"]),
                    "branches": branches,
                    "rewrites": rewrites,
                }
            )
        return dumps({"n": n, "steps": out})
    lines = []
    for s in steps:
        if s["vertex"] is None:
            lines.append("initial seed")
        else:
            lines.append(f"step {s['step']}: mutate at {s['vertex'] + 1}")
            rewrites = [(j, case) for j, case in s["trace"] if case != "ii"]
            if rewrites:
                desc = ", ".join(f"row {j + 1} case {case}" for j, case in rewrites)
                lines.append(f"  branch i fired: {desc}")
            else:
                lines.append("  branch i fired: no other chord affected")
            lines.append(f"  branch ii fired: row {s['vertex'] + 1} reversed")
        lines.append("B =")
        lines.append(str(s["matrix"]))
        lines.append("C =")
        lines.append(str(c_matrix_of(s["matrix"])))
        lines.append(f"diagram = {s['diagram']}")
        lines.append("")
    return "\n".join(lines)


def _enum_items(what, n, k, bound):
    if what == "cmatrices":
        mats = sorted(enumerate_cmatrices(n, bound), key=lambda C: C.rows)
        return mats, [C.to_json() for C in mats], [" ".join(map(str, C.rows)) for C in mats]
    if what == "diagrams":
        ds = enumerate_diagrams(n, k, bound)
        return ds, [diagram_to_json(d) for d in ds], [str(d) for d in ds]
    if what == "ces":
        seqs = []
        for d in enumerate_diagrams(n, k, bound):
            seqs.extend(labeled_to_seq(d.with_labels(f)) for f in linear_extensions(poset_of_diagram(d)))
        seqs.sort()
        return seqs, [_seq_json(s) for s in seqs], [_seq_text(s) for s in seqs]
    chains = enumerate_nc_chains(n, k, bound)
    return chains, [chain_to_json(c) for c in chains], [" < ".join(str(p) for p in c) for c in chains]


def cmd_enum(args):
    n = _need_n(args)
    k = n if args.k is None else args.k
    if not 0 <= k <= n:
        raise CLIError(f"--k must lie in 0..{n}")
    items, as_json, as_text = _enum_items(args.what, n, k, args.bound)
    fmt = _fmt(args, "text" if args.count_only else "json")
    if args.count_only:
        return dumps({"what": args.what, "n": n, "k": k, "count": len(items)}) if fmt == "json" else f"{len(items)}\n"
    if fmt == "json":
        return dumps({"what": args.what, "n": n, "k": k, "count": len(items), "items": as_json})
    if fmt == "text":
        return "\n".join(as_text) + "\n"
    raise CLIError("enum supports --format json or text")


def cmd_classify(args):
    d = diagram_from_json(_read_json(args.input))
    if d.heads is None:
        raise CLIError("classify needs an oriented diagram (give 'dir' for every chord)")
    if not d.is_spanning:
        raise CLIError("classify needs a spanning diagram (n chords on n+1 points)")
    ok = is_cmatrix_diagram(d)
    result = {"is_cmatrix": ok, "cmatrix": None, "witness_ces": None}
    if ok:
        C = cmatrix_of_diagram(d)
        result["cmatrix"] = C.to_json()
        result["witness_ces"] = _seq_json(st_witness(C))
    if _fmt(args, "json") == "text":
        lines = [f"is_cmatrix: {ok}"]
        if ok:
            lines += ["C =", str(C), f"witness: {_seq_text(st_witness(C))}"]
        return "\n".join(lines) + "\n"
    return dumps(result)


def cmd_poset(args):
    d = diagram_from_json(_read_json(args.input))
    P = poset_of_diagram(d)
    fmt = _fmt(args, "json")
    if fmt == "dot":
        return poset_to_dot(P)
    count = count_linear_extensions(P)
    if fmt == "text":
        lines = [f"elements: {', '.join(str(c) for c in P.elements)}"]
        lines += [f"{lo} < {hi}" for lo, hi in sorted(P.covers)]
        lines.append(f"linear extensions: {count}")
        return "\n".join(lines) + "\n"
    return dumps(
        {
            "poset": P.to_json(),
            "linear_extensions": count,
            "conditions_hold": satisfies_poset_conditions(P) if d.is_spanning else None,
        }
    )


def cmd_perms(args):
    C = CMatrix.from_json(_read_json(args.input))
    if not C.is_sign_coherent():
        raise CLIError("c-matrix rows are not sign-coherent")
    if not C.has_interval_rows():
        raise CLIError("c-matrix rows are not signed interval dimension vectors")
    try:
        perms = permutations_of_cmatrix(C)
    except ValueError as exc:
        raise CLIError(f"classification failed: {exc}") from None
    entries = []
    for sigma in perms:
        seq = sequence_of_permutation(C, sigma)
        entries.append({"one_line": list(sigma), "cycles": cycle_notation(sigma), "ces": _seq_json(seq)})
    if _fmt(args, "json") == "text":
        lines = [f"{e['cycles']}  {_seq_text(sequence_of_permutation(C, tuple(e['one_line'])))}" for e in entries]
        return "\n".join(lines) + "\n"
    return dumps({"cmatrix": C.to_json(), "permutations": entries})


def cmd_ncchains(args):
    fmt = _fmt(args, "json")
    if args.input is not None:
        data = _read_json(args.input)
        if isinstance(data, list):
            d = labeled_diagram_of_chain(chain_from_json(data))
            return diagram_to_dot(d) if fmt == "dot" else dumps(diagram_to_json(d))
        chain = chain_of_labeled_diagram(diagram_from_json(data))
        if fmt == "text":
            return " < ".join(str(p) for p in chain) + "\n"
        return dumps(chain_to_json(chain))
    args.what = "ncchains"
    return cmd_enum(args)


def cmd_trees(args):
    n = _need_n(args)
    trees = tree_leaf_distribution(n, args.bound)
    diagrams = diagram_leaf_distribution(n, args.bound)
    if _fmt(args, "json") == "text":
        lines = ["leaves  trees  weighted-diagrams"]
        for r in sorted(set(trees) | set(diagrams)):
            lines.append(f"{r:6d}  {trees.get(r, 0):5d}  {diagrams.get(r, 0):5d}")
        lines.append(f"equal: {trees == diagrams}")
        return "\n".join(lines) + "\n"
    return dumps(
        {
            "n": n,
            "trees": {str(r): c for r, c in trees.items()},
            "diagrams": {str(r): c for r, c in diagrams.items()},
            "equal": trees == diagrams,
        }
    )


def cmd_verify(args):
    n = _need_n(args)
    results = run_all(n, args.bound, args.jobs)
    failed = [name for name, ok, _ in results if not ok]
    if _fmt(args, "text") == "json":
        text = dumps({"n": n, "gates": [{"name": nm, "passed": ok, "detail": dt} for nm, ok, dt in results]})
    else:
        text = "\n".join(f"{'PASS' if ok else 'FAIL'} {nm}: {dt}" for nm, ok, dt in results) + "\n"
    return text, (1 if failed else 0), failed


COMMANDS = {
    "mutate": cmd_mutate,
    "enum": cmd_enum,
    "classify": cmd_classify,
    "poset": cmd_poset,
    "perms": cmd_perms,
    "ncchains": cmd_ncchains,
    "trees": cmd_trees,
    "verify": cmd_verify,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="rank n of the linear quiver (n+1 marked points)")
    common.add_argument("--input", help="JSON input file ('-' for stdin)")
    common.add_argument("--output", help="write to this file instead of stdout")
    common.add_argument("--format", choices=("json", "dot", "text"))
    common.add_argument("--bound", type=int, help="largest n allowed for exhaustive searches (default 6, env CESWB_BOUND)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verify")

    parser = argparse.ArgumentParser(
        prog="ceswb",
        description="Exceptional sequences, c-matrices and chord diagrams for the linear quiver. "
        "Vertex indices on the command line are 1-based.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", parents=[common], help="mutate the framed quiver step by step")
    p.add_argument("--seq", help="comma-separated 1-based mutation vertices, e.g. 1,3")

    p = sub.add_parser("enum", parents=[common], help="enumerate and count objects")
    p.add_argument("what", choices=("ces", "cmatrices", "diagrams", "ncchains"))
    p.add_argument("--k", type=int, help="number of chords / sequence length (default n)")
    p.add_argument("--count-only", action="store_true")

    sub.add_parser("classify", parents=[common], help="test whether an oriented diagram comes from a c-matrix")
    sub.add_parser("poset", parents=[common], help="poset of a chord diagram")
    sub.add_parser("perms", parents=[common], help="permutations of c-matrix rows that give CESs")

    p = sub.add_parser("ncchains", parents=[common], help="chains of noncrossing partitions")
    p.add_argument("--k", type=int)
    p.add_argument("--count-only", action="store_true")

    sub.add_parser("trees", parents=[common], help="leaf distribution of labeled trees vs. weighted diagrams")
    sub.add_parser("verify", parents=[common], help="run every cross-check gate")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    failed = []
    code = 0
    try:
        out = COMMANDS[args.command](args)
        if isinstance(out, tuple):
            out, code, failed = out
    except (CLIError, BoundExceeded, ValueError, IndexError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    if failed:
        print("failed gates: " + ", ".join(failed), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
