"""Command-line front end: ``f1rep <verb> [flags]``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .colored import gamma_of, gamma_to_dot, key_dim, rep_key
from .corr import SkewShape, ShapeError, enumerate_shapes, rep_to_shape, shape_to_rep
from .enumeration import (IsoClassTable, embed_loops, embed_rank2, f_reduce, indecomposables,
                          ni_table_rows, reduce_to, rows_to_csv)
from .hall import HallAlgebra, HallElement, key_str, parse_key, tensor_to_json
from .quiver import Quiver, Tag, classify, named_quiver
from .rep import Representation
from .verify import NIL_DISCLAIMER, SUITES, run_suite

VERBS = ("enumerate", "ni-table", "indecomposables", "hall-mul", "hall-comul", "classify",
         "reduce", "embed", "skew", "verify", "dot")

DEFAULT_MAX = 6
WARN_MAX = 8

REGIME = {
    Tag.TREE: "finite type (equivalent to L0)",
    Tag.CYCLE: "bounded (equivalent to L1)",
    Tag.PROPER_PSEUDOTREE: "unbounded proper pseudotree (equivalence class open)",
    Tag.OTHER: "equivalent to L2",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="f1rep", description="Quiver representations over F1.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("items", nargs="*", help="keys or representations (hall-mul, hall-comul)")
    p.add_argument("--quiver", help="built-in name (L2, A3, C3:++-, K2, PT1) or a JSON file")
    p.add_argument("--max", type=int, help=f"dimension cap (default {DEFAULT_MAX})")
    p.add_argument("--dim-cap", type=int, help="Hall algebra truncation")
    p.add_argument("--format", choices=("csv", "json", "dot"))
    p.add_argument("--suite", help="verification suite, or 'all'")
    p.add_argument("--rep", help="representation as a JSON file or inline JSON")
    p.add_argument("--target", type=int, help="number of loops to reduce to (reduce)")
    p.add_argument("--out", help="write output here instead of stdout")
    return p


# -- input ------------------------------------------------------------------

def _load_json(text: str):
    path = Path(text)
    try:
        if path.is_file():
            return json.loads(path.read_text())
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read JSON from {text!r}: {e}")


def load_quiver(spec: str | None, default: str | None = None) -> Quiver:
    spec = spec or default
    if spec is None:
        raise UsageError("--quiver is required")
    if spec.endswith(".json") or spec.lstrip().startswith("{"):
        return Quiver.from_json(_load_json(spec))
    try:
        return named_quiver(spec)
    except ValueError as e:
        raise UsageError(str(e))


def load_rep(spec: str | None) -> Representation:
    if spec is None:
        raise UsageError("--rep is required")
    data = _load_json(spec)
    try:
        return Representation.from_json(data)
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError(f"bad representation: {e}")


def threads() -> int:
    raw = os.environ.get("F1REP_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"F1REP_THREADS must be a positive integer, got {raw!r}")
    if n < 1:
        raise UsageError(f"F1REP_THREADS must be a positive integer, got {raw!r}")
    return n


def cap(args) -> int:
    n = DEFAULT_MAX if args.max is None else args.max
    if n < 0:
        raise UsageError("--max must be non-negative")
    if n > WARN_MAX:
        print(f"warning: --max {n} is above {WARN_MAX}; enumeration is exponential and may take very long",
              file=sys.stderr)
    return n


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


# -- verbs ------------------------------------------------------------------

def cmd_enumerate(args) -> tuple[str, int]:
    q = load_quiver(args.quiver)
    table = IsoClassTable.build(q, cap(args))
    if args.format == "csv":
        lines = ["key,dim,dims,indecomposable"]
        for e in table.entries():
            lines.append(f"{key_str(e.key)},{e.rep.dim},{' '.join(map(str, e.rep.dims))},{int(e.indecomposable)}")
        return "\n".join(lines) + "\n", 0
    return _dump(table.to_json()), 0


def cmd_ni_table(args) -> tuple[str, int]:
    q = load_quiver(args.quiver)
    rows = ni_table_rows(q, cap(args))
    if args.format == "json":
        return _dump(rows), 0
    return rows_to_csv(rows), 0


def cmd_indecomposables(args) -> tuple[str, int]:
    q = load_quiver(args.quiver)
    n_max = cap(args)
    classes = {}
    for n in range(1, n_max + 1):
        classes.update(indecomposables(q, n))
    if args.format == "dot":
        return "".join(gamma_to_dot(gamma_of(r), name=f"I{i}")
                       for i, r in enumerate(classes[k] for k in sorted(classes))), 0
    return _dump({key_str(k): r.to_json() for k, r in classes.items()}), 0


def _hall_setup(args, needed: int):
    if len(args.items) != needed:
        raise UsageError(f"{args.verb} takes {needed} class argument(s), got {len(args.items)}")
    reps = []
    q = None
    for item in args.items:
        text = item.strip()
        if text.startswith("{") or text.endswith(".json"):
            r = load_rep(text)
            q = q or r.quiver
            reps.append(r)
        else:
            try:
                reps.append(parse_key(text))
            except ValueError:
                raise UsageError(f"not a hex key or JSON representation: {item!r}")
    if args.quiver or q is None:
        q = load_quiver(args.quiver, "L1")
    keys = [rep_key(r) if isinstance(r, Representation) else r for r in reps]
    need = sum(key_dim(k) for k in keys)
    dim_cap = args.dim_cap if args.dim_cap is not None else max(need, 1)
    if dim_cap < need:
        raise UsageError(f"--dim-cap {dim_cap} is below the total dimension {need}")
    alg = HallAlgebra(q, dim_cap)
    for k in keys:
        if k and k not in alg.reps:
            raise UsageError(f"key {key_str(k)} is not a nilpotent class of {q.name or 'the quiver'}")
    return alg, keys


def cmd_hall_mul(args) -> tuple[str, int]:
    alg, (m, n) = _hall_setup(args, 2)
    return _dump(alg.product(HallElement.basis(m), HallElement.basis(n)).to_json()), 0


def cmd_hall_comul(args) -> tuple[str, int]:
    alg, (r,) = _hall_setup(args, 1)
    return _dump(tensor_to_json(alg.coproduct(HallElement.basis(r)))), 0


def cmd_classify(args) -> tuple[str, int]:
    q = load_quiver(args.quiver)
    try:
        shape = classify(q)
    except ValueError as e:
        raise UsageError(str(e))
    out = {"quiver": q.name or "", "shape": shape.tag.value, "cycle_rank": shape.cycle_rank,
           "regime": REGIME[shape.tag]}
    if args.max is not None:
        out["NI"] = [row["NI"] for row in ni_table_rows(q, cap(args), with_i=False)]
    return _dump(out), 0


def _emit_rep(r: Representation, fmt: str | None) -> str:
    if fmt == "dot":
        return gamma_to_dot(gamma_of(r))
    return _dump({"key": key_str(rep_key(r)), "rep": r.to_json()})


def cmd_reduce(args) -> tuple[str, int]:
    m = load_rep(args.rep)
    if not m.quiver.is_loop_quiver() or m.quiver.num_arrows < 2:
        raise UsageError("reduce needs a representation of a loop quiver with at least 2 loops")
    target = m.quiver.num_arrows - 1 if args.target is None else args.target
    if not 1 <= target < m.quiver.num_arrows:
        raise UsageError("--target must be between 1 and the number of loops minus one")
    try:
        out = f_reduce(m) if target == m.quiver.num_arrows - 1 else reduce_to(m, target)
    except ValueError as e:
        raise UsageError(str(e))
    return _emit_rep(out, args.format), 0


def cmd_embed(args) -> tuple[str, int]:
    m = load_rep(args.rep)
    try:
        if args.quiver:
            out = embed_rank2(m, load_quiver(args.quiver))
        else:
            out = embed_loops(m)
    except ValueError as e:
        raise UsageError(str(e))
    return _emit_rep(out, args.format), 0


def _shape_block(s: SkewShape) -> dict:
    return {"shape": s.to_json(), "key": key_str(rep_key(shape_to_rep(s)))}


def cmd_skew(args) -> tuple[str, int]:
    if args.rep:
        try:
            s = rep_to_shape(load_rep(args.rep))
        except ShapeError as e:
            return _dump({"error": type(e).__name__, "message": str(e)}), 1
        if args.format == "json":
            return _dump(_shape_block(s)), 0
        return s.ascii() + "\n", 0
    n_max = 5 if args.max is None else cap(args)
    shapes = [s for c in range(1, n_max + 1) for s in enumerate_shapes(2, c)]
    if args.format == "json":
        return _dump([_shape_block(s) for s in shapes]), 0
    blocks = [f"# {len(s.cells)} cells, key {key_str(rep_key(shape_to_rep(s)))}\n{s.ascii()}" for s in shapes]
    return "\n\n".join(blocks) + "\n", 0


def cmd_verify(args) -> tuple[str, int]:
    if not args.suite:
        raise UsageError(f"--suite is required; one of: all, {', '.join(SUITES)}")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; one of: all, {', '.join(SUITES)}")
    if args.max is not None and args.max > WARN_MAX:
        cap(args)
    reports = [run_suite(name, args) for name in names]
    if args.format == "json":
        body = [r.to_json() for r in reports]
        text = _dump(body[0] if len(body) == 1 else body)
    else:
        lines = []
        for r in reports:
            lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.suite}")
            for c in r.checks:
                lines.append(f"  {'ok  ' if c.passed else 'FAIL'} {c.name}" + (f"  ({c.detail})" if c.detail else ""))
            lines.extend(f"  {note}" for note in r.notes)
        if any(n in ("n-to-n-1", "nil-order") for n in names) and NIL_DISCLAIMER not in "\n".join(lines):
            lines.append(NIL_DISCLAIMER)
        text = "\n".join(lines) + "\n"
    return text, 0 if all(r.passed for r in reports) else 1


def cmd_dot(args) -> tuple[str, int]:
    if args.rep:
        return gamma_to_dot(gamma_of(load_rep(args.rep))), 0
    if args.quiver:
        return load_quiver(args.quiver).to_dot(), 0
    raise UsageError("dot needs --rep or --quiver")


COMMANDS = {
    "enumerate": cmd_enumerate, "ni-table": cmd_ni_table, "indecomposables": cmd_indecomposables,
    "hall-mul": cmd_hall_mul, "hall-comul": cmd_hall_comul, "classify": cmd_classify,
    "reduce": cmd_reduce, "embed": cmd_embed, "skew": cmd_skew, "verify": cmd_verify, "dot": cmd_dot,
}


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
        threads()  # validated; work is sequential
        if args.items and args.verb not in ("hall-mul", "hall-comul"):
            raise UsageError(f"unexpected arguments: {' '.join(args.items)}")
        text, code = COMMANDS[args.verb](args)
    except UsageError as e:
        print(str(e), file=sys.stderr)
        return 2
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
