"""Command line interface.

Exit status: 0 success, 1 negative domain answer (not a manifold, no
embedding, empty auto reconstruction), 2 input error, 3 violated
contract or failed internal verification.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .complex import CubicalComplex, skeleton
from .embedding import (
    SimpleGraph,
    bipartition_or_odd_cycle,
    find_graph_embedding,
    labelling_from_embedding,
    verify_labelling,
)
from .errors import ContractError, ContradictionError, StructuralError
from .generators import FAMILIES, generate, parse_generator_spec
from .homology import GF2, INTEGER, cohomology_profile, homology_profile
from .io import parse_complex, parse_graph, serialize_complex, serialize_graph
from .manifold import is_homology_manifold
from .reconstruct import (
    STANDARD,
    TIGHT_GF2,
    TIGHT_INTEGER,
    ReconstructionConfig,
    reconstruct_auto,
    reconstruct_steps,
)

_RINGS = {"gf2": GF2, "int": INTEGER}
_MODES = {"standard": STANDARD, "tight-gf2": TIGHT_GF2, "tight-int": TIGHT_INTEGER}


def _load_complex(path: str) -> CubicalComplex:
    c, added = parse_complex(Path(path).read_text())
    if added:
        print(f"note closure added {added} faces while reading {path}")
    return c


def _fmt_degree(data: tuple[int, tuple[int, ...]]) -> str:
    betti, torsion = data
    if torsion:
        return f"{betti}[{','.join(str(t) for t in torsion)}]"
    return str(betti)


def _cmd_homology(args) -> int:
    c = _load_complex(args.file)
    ring = _RINGS[args.ring]
    profile = cohomology_profile(c, ring) if args.cohomology else homology_profile(c, ring)
    print(f"ambient {c.ambient_dim}")
    print(f"faces {len(c.faces)}")
    print(f"dimension {c.dim}")
    print(f"ring {args.ring}")
    print("betti " + " ".join(str(b) for b in profile.betti))
    torsion_lines = [(j, t) for j, t in enumerate(profile.torsion) if t]
    if torsion_lines:
        for j, t in torsion_lines:
            print(f"torsion {j} " + " ".join(str(d) for d in t))
    else:
        print("torsion none")
    return 0


def _cmd_manifold_check(args) -> int:
    c = _load_complex(args.file)
    report = is_homology_manifold(c, check_orientability=True)
    print(f"manifold {'true' if report.is_manifold else 'false'}")
    if report.dimension is not None:
        print(f"dimension {report.dimension}")
    if report.orientable is not None:
        print(f"orientable {'true' if report.orientable else 'false'}")
    print(f"components {len(report.per_component)}")
    if report.failing_face is not None:
        print(f"failing-face {report.failing_face}")
    return 0 if report.is_manifold else 1


def _cmd_skeleton(args) -> int:
    c = _load_complex(args.file)
    out = skeleton(c, args.k)
    Path(args.output).write_text(serialize_complex(out))
    print(f"faces {len(out.faces)}")
    print(f"dimension {out.dim}")
    print(f"wrote {args.output}")
    return 0


def _print_verdicts(step) -> None:
    accepted = sum(1 for v in step.verdicts if v.accepted)
    print(f"step degree={step.degree} candidates={len(step.verdicts)} accepted={accepted}")
    for v in step.verdicts:
        bits = [
            f"candidate {v.face}",
            f"boundary={'present' if v.boundary_present else 'absent'}",
            f"accepted={'yes' if v.accepted else 'no'}",
        ]
        for j, left, right in v.profiles:
            bits.append(f"j={j} deleted={_fmt_degree(left)} base={_fmt_degree(right)}")
        print(" ".join(bits))


def _cmd_reconstruct(args) -> int:
    c = _load_complex(args.file)
    mode = _MODES[args.mode]
    if args.auto:
        if args.dmax is None:
            raise StructuralError("--auto requires --dmax")
        tight = mode if mode != STANDARD else None
        print(f"auto k={args.k} dmax={args.dmax} tight={args.mode if tight else 'off'}")
        results = reconstruct_auto(c, args.k, args.dmax, tight_mode=tight, jobs=args.jobs)
        for d, cx in results:
            print(f"result d={d} faces={len(cx.faces)}")
        if not results:
            print("no manifold found")
            return 1
        d, cx = results[0]
        Path(args.output).write_text(serialize_complex(cx))
        print(f"wrote {args.output} (d={d})")
        return 0
    if args.d is None:
        raise StructuralError("reconstruct requires -d or --auto")
    cfg = ReconstructionConfig(args.k, args.d, mode)
    print(f"mode {args.mode} k={args.k} d={args.d}")
    current = c
    for step in reconstruct_steps(c, cfg, jobs=args.jobs):
        _print_verdicts(step)
        current = step.complex_after
    print(f"faces {len(current.faces)}")
    print(f"dimension {current.dim}")
    Path(args.output).write_text(serialize_complex(current))
    print(f"wrote {args.output}")
    return 0


def _code_word(code: int, n: int) -> str:
    return "".join("1" if code >> i & 1 else "0" for i in range(n))


def _cmd_embed(args) -> int:
    g = parse_graph(Path(args.file).read_text())
    emb = find_graph_embedding(g, args.nmax)
    if emb is None:
        print(f"no embedding with n <= {args.nmax}")
        _, odd = bipartition_or_odd_cycle(g)
        if odd is not None:
            print("odd cycle " + " ".join(str(v) for v in odd))
        return 1
    print(f"embedding found n={emb.n}")
    for i, code in enumerate(emb.codes):
        print(f"vertex {i} {_code_word(code, emb.n)}")
    labels = labelling_from_embedding(emb, g)
    for (u, v), lab in sorted(labels.items()):
        print(f"edge {u} {v} label {lab}")
    if g.edges and g.is_connected():
        if not verify_labelling(g, labels):
            raise ContradictionError("labelling from embedding failed verification")
        print("labelling verified")
    return 0


def _cmd_generate(args) -> int:
    text = args.family
    if args.params:
        text += "(" + ", ".join(args.params) + ")"
    obj = generate(parse_generator_spec(text))
    if isinstance(obj, SimpleGraph):
        Path(args.output).write_text(serialize_graph(obj))
        print(f"graph vertices={obj.num_vertices} edges={len(obj.edges)}")
    else:
        Path(args.output).write_text(serialize_complex(obj))
        print(f"complex ambient={obj.ambient_dim} faces={len(obj.faces)} dimension={obj.dim}")
    print(f"wrote {args.output}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skelcube",
        description="Cubical complexes in hypercubes: homology, manifold checks, "
        "skeleton reconstruction, embeddability",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", help="homology profile of a complex file")
    p.add_argument("file")
    p.add_argument("--ring", choices=sorted(_RINGS), default="gf2")
    p.add_argument("--cohomology", action="store_true", help="report cohomology instead")
    p.set_defaults(func=_cmd_homology)

    p = sub.add_parser("manifold-check", help="homology manifold test with orientability")
    p.add_argument("file")
    p.set_defaults(func=_cmd_manifold_check)

    p = sub.add_parser("skeleton", help="write the k-skeleton of a complex")
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_skeleton)

    p = sub.add_parser("reconstruct", help="rebuild a manifold from its k-skeleton")
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-d", type=int)
    p.add_argument("--auto", action="store_true")
    p.add_argument("--dmax", type=int)
    p.add_argument("--mode", choices=sorted(_MODES), default="standard")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("embed", help="embed a graph into a hypercube graph")
    p.add_argument("file")
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("generate", help=f"write a named complex or graph ({', '.join(FAMILIES)})")
    p.add_argument("family")
    p.add_argument("params", nargs="*", help="integers or nested specs like 'boundary-cube(3)'")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_generate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ContractError as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return 3
    except ContradictionError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 3
    except (StructuralError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
