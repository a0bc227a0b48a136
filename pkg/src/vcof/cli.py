"""``vcof``: check, compose and enumerate structures stored as JSON documents.

Exit status: 0 when every law holds, 1 when a law fails (or a composite or
enumeration is refused), 2 when the input cannot be parsed or resolved.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from . import io
from .bases import FinSetBase
from .cofun import (
    CofunctorTransformation, EnrichedCofunctor, check_cofunctor, check_cofunctor_transformation,
    compose_cofunctors, vcompose_cofunctor_transformations, whisker_left, whisker_right,
)
from .doublecat import (
    Cell, CompatibleSquare, EnrichedLens, check_cell, check_compatible_square, check_lens, compose_lenses,
    hcompose_cells, hpaste_squares, vcompose_cells, vpaste_squares,
)
from .encat import (
    EnrichedCategory, EnrichedFunctor, FunctorTransformation, check_category, check_functor,
    check_functor_transformation, compose_functors, hcompose_functor_transformations,
    vcompose_functor_transformations,
)
from .errors import BoundaryError, EnumerationBoundError, StructuralError, VcofError
from .oracle import (
    enumerate_cofunctors, enumerate_lenses, from_enriched, to_enriched,
)

OK, LAW, BROKEN = 0, 1, 2


def check(x, *, fast=None):
    """The law report appropriate to a structure of any kind."""
    if isinstance(x, EnrichedCategory):
        return check_category(x, fast=fast)
    if isinstance(x, EnrichedFunctor):
        return check_functor(x, fast=fast)
    if isinstance(x, EnrichedCofunctor):
        return check_cofunctor(x, fast=fast)
    if isinstance(x, FunctorTransformation):
        return check_functor_transformation(x, fast=fast)
    if isinstance(x, CofunctorTransformation):
        return check_cofunctor_transformation(x, fast=fast)
    if isinstance(x, Cell):
        return check_cell(x, fast=fast)
    if isinstance(x, CompatibleSquare):
        return check_compatible_square(x, fast=fast)
    if isinstance(x, EnrichedLens):
        return check_lens(x, fast=fast, boundaries=True)
    raise StructuralError(f"nothing to check on {type(x).__name__}")


def _label(x):
    name = getattr(x, "name", "") or "?"
    return f"{type(x).__name__} {name}"


def compose(left, right, direction="horizontal"):
    """Composite of two documents, by kind; raises BoundaryError when they do not fit."""
    pair = (type(left), type(right))
    try:
        if pair == (EnrichedFunctor, EnrichedFunctor):
            return compose_functors(left, right)
        if pair == (EnrichedCofunctor, EnrichedCofunctor):
            return compose_cofunctors(left, right)
        if pair == (EnrichedLens, EnrichedLens):
            return compose_lenses(left, right)
        if pair == (FunctorTransformation, FunctorTransformation):
            if direction == "horizontal":
                return hcompose_functor_transformations(left, right)
            return vcompose_functor_transformations(left, right)
        if pair == (CofunctorTransformation, CofunctorTransformation):
            return vcompose_cofunctor_transformations(left, right)
        if pair == (EnrichedCofunctor, CofunctorTransformation):
            return whisker_left(left, right)
        if pair == (CofunctorTransformation, EnrichedCofunctor):
            return whisker_right(left, right)
        if pair == (Cell, Cell):
            return hcompose_cells(left, right) if direction == "horizontal" else vcompose_cells(left, right)
        if pair == (CompatibleSquare, CompatibleSquare):
            return hpaste_squares(left, right) if direction == "horizontal" else vpaste_squares(left, right)
    except BoundaryError as e:
        raise BoundaryError(f"{_label(left)} and {_label(right)} do not meet: {e}") from None
    raise BoundaryError(f"cannot compose {_label(left)} with {_label(right)}")


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_check(args) -> int:
    lib = io.load(args.files)
    targets = [args.target] if args.target else lib.names()
    fast = False if args.generic else None
    reports = [check(lib.get(t), fast=fast) for t in targets]
    ok = all(r.ok for r in reports)
    if args.format == "json":
        sys.stdout.write(io.dumps({"version": io.VERSION, "ok": ok, "reports": [r.to_dict() for r in reports]}))
    else:
        for r in reports:
            print(r.text())
    return OK if ok else LAW


def cmd_compose(args) -> int:
    lib = io.load(args.files)
    left, right = lib.get(args.left), lib.get(args.right)
    try:
        result = compose(left, right, args.direction)
    except BoundaryError as e:
        print(f"vcof: {e}", file=sys.stderr)
        return LAW
    name = args.name or f"{args.left.split('#')[-1]};{args.right.split('#')[-1]}"
    _emit(io.dumps(io.bundle(result, names=[name])), args.out)
    return OK


def cmd_enumerate(args) -> int:
    lib = io.load(args.files)
    A, B = lib.get(args.source), lib.get(args.target)
    for c in (A, B):
        if not isinstance(c, EnrichedCategory):
            raise StructuralError(f"{c.name or '?'} is not a category")
        if not isinstance(c.base, FinSetBase):
            raise StructuralError("enumeration works over finset only")
    OA, OB = from_enriched(A), from_enriched(B)
    try:
        found = (enumerate_cofunctors if args.kind == "cofunctor" else enumerate_lenses)(OA, OB, args.limit)
    except EnumerationBoundError as e:
        print(f"vcof: {e}", file=sys.stderr)
        return LAW
    structures = [to_enriched(x, A, B) for x in found]
    names = [f"{args.kind}_{i + 1}" for i in range(len(found))]
    if args.kind == "lens":
        structures = [replace(l, f=replace(l.f, name=f"{n}_f"), phi=replace(l.phi, name=f"{n}_phi"))
                      for l, n in zip(structures, names)]
    if args.format == "json":
        sys.stdout.write(io.dumps({"kind": args.kind, "source": A.name, "target": B.name, "count": len(found)}))
    else:
        plural = "lenses" if args.kind == "lens" else "cofunctors"
        print(f"{plural} {A.name} -> {B.name}: {len(found)}")
    if args.out:
        _emit(io.dumps(io.bundle(*structures, names=names)), args.out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vcof", description="Check enriched categories, cofunctors and lenses.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check the laws of documents")
    p.add_argument("files", nargs="+")
    p.add_argument("--target", help="document to check (default: every document)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--generic", action="store_true", help="compose both paths even over a thin base")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("compose", help="compose two documents")
    p.add_argument("files", nargs="+")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--direction", choices=("horizontal", "vertical"), default="horizontal",
                   help="for transformations, cells and squares")
    p.add_argument("--name", help="name of the composite document")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(run=cmd_compose)

    p = sub.add_parser("enumerate", help="list every cofunctor or lens between two finset categories")
    p.add_argument("files", nargs="+")
    p.add_argument("--kind", choices=("cofunctor", "lens"), required=True)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--limit", type=int, help="bound on the candidate space (default: $VCOF_MAX_ENUM or 10^7)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write every structure found to this file")
    p.set_defaults(run=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except VcofError as e:
        print(f"vcof: {e}", file=sys.stderr)
        return BROKEN


if __name__ == "__main__":
    sys.exit(main())
