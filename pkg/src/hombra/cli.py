"""Command-line front end.

Exit codes: 0 all requested checks pass, 1 parse or usage error, 2 some
check failed, 3 no antipode within the exponent bound.  The --kmax flag
beats the HOMBRA_KMAX environment variable, which beats the default 8.
"""

import argparse
import os
import sys
from dataclasses import replace
from pathlib import Path

from .antipode import (
    check_grouplike,
    check_primitive,
    prop_anti_algebra,
    prop_anti_coalgebra,
    prop_counitality,
    prop_grouplike_inverse,
    prop_primitive_image,
    prop_s_squared,
    prop_unitality,
    verify_relative_antipode,
    verify_strict_antipode,
)
from .constructions import (
    cyclic_group,
    direct_product,
    hom_group_algebra,
    symmetric_group_3,
    tensor_hopf,
    twist_group,
    yau_twist,
)
from .convolution import ConvContext, solve_relative_inverse
from .errors import ParseError
from .fixtures import NAMES as FIXTURE_NAMES, fixture_path
from .linalg import Mat, Vec
from .qmatrix import QParams, to_hom_bialgebra
from .report import (
    antipode_to_json,
    assemble,
    axiom_to_json,
    flags_to_json,
    proposition_to_json,
    structure_to_json,
    to_json,
    to_text,
)
from .scalars import parse_scalar
from .serialize import ParsedStructure, emit_structure, parse_structure
from .structures import HomHopfCandidate, check_axioms, compute_flags

DEFAULT_KMAX = 8


def resolve_kmax(flag_value, env=None):
    if flag_value is not None:
        return flag_value
    raw = (os.environ if env is None else env).get("HOMBRA_KMAX")
    if raw is None:
        return DEFAULT_KMAX
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"HOMBRA_KMAX must be an integer, got {raw!r}") from None


def _load(path: str) -> ParsedStructure:
    return parse_structure(Path(path).read_text())


def _names(b) -> list:
    return list(b.basis) if len(b.basis) == b.dim else [f"e{i + 1}" for i in range(b.dim)]


def _solve(b, k_max: int):
    ctx = ConvContext.from_bialgebra(b)
    return solve_relative_inverse(ctx, Mat.identity(b.dim), k_max)


def _write_output(text: str, output) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_report(doc: dict, as_json: bool) -> None:
    sys.stdout.write(to_json(doc) if as_json else to_text(doc))


# ------------------------------------------------------------- commands


def cmd_check(args) -> int:
    parsed = _load(args.file)
    b = parsed.bialgebra
    kind = args.kind
    if kind == "algebra":
        axioms = check_axioms(b.algebra)
    elif kind == "coalgebra":
        axioms = check_axioms(b.coalgebra)
    else:
        axioms = check_axioms(b)
    ok = axioms.passed()

    antipode_doc = None
    if kind == "hopf":
        k_max = resolve_kmax(args.kmax)
        if parsed.antipode is not None:
            source, S = "file", parsed.antipode
        else:
            found = _solve(b, k_max)
            source, S = ("solved", found.inverse) if found else (None, None)
        if S is None:
            antipode_doc = antipode_to_json(None, None, None)
            ok = False
        else:
            cand = HomHopfCandidate(b, S)
            relative = verify_relative_antipode(cand, k_max)
            antipode_doc = antipode_to_json(
                source, verify_strict_antipode(cand), relative
            )
            ok = ok and relative.passed()

    doc = assemble(
        structure_to_json(b, kind),
        flags_to_json(compute_flags(b)),
        [axiom_to_json(e) for e in axioms],
        antipode_doc,
        None,
    )
    _emit_report(doc, args.json)
    return 0 if ok else 2


def cmd_antipode(args) -> int:
    parsed = _load(args.file)
    b = parsed.bialgebra
    k_max = resolve_kmax(args.kmax)

    if args.mode == "find":
        found = _solve(b, k_max)
        if found is None:
            msg = {"found": False, "k_max": k_max}
            sys.stdout.write(
                to_json(msg) if args.json else f"no antipode within k_max={k_max}\n"
            )
            return 3
        src = Path(args.file)
        out = Path(args.output) if args.output else src.with_name(
            src.stem + ".with_antipode.json"
        )
        params = dict(parsed.params)
        params["antipode_k"] = found.exponent
        out.write_text(emit_structure(b, found.inverse, params))
        msg = {
            "found": True,
            "k": found.exponent,
            "nullspace_dim": found.nullspace_dim,
            "output": str(out),
        }
        sys.stdout.write(
            to_json(msg)
            if args.json
            else (
                f"antipode found at k={found.exponent} "
                f"(nullspace dimension {found.nullspace_dim}); wrote {out}\n"
            )
        )
        return 0

    if parsed.antipode is None:
        raise ParseError(f"{args.file} has no antipode; run `hombra antipode find` first")
    cand = HomHopfCandidate(b, parsed.antipode)
    relative = verify_relative_antipode(cand, k_max)
    doc = assemble(
        structure_to_json(b, "hopf"),
        flags_to_json(compute_flags(b)),
        None,
        antipode_to_json("file", verify_strict_antipode(cand), relative),
        None,
    )
    _emit_report(doc, args.json)
    return 0 if relative.passed() else 2


def cmd_props(args) -> int:
    parsed = _load(args.file)
    b = parsed.bialgebra
    k_max = resolve_kmax(args.kmax)
    if parsed.antipode is not None:
        source, S = "file", parsed.antipode
    else:
        found = _solve(b, k_max)
        if found is None:
            sys.stdout.write(f"no antipode within k_max={k_max}\n")
            return 3
        source, S = "solved", found.inverse
    cand = HomHopfCandidate(b, S)

    verdicts = [
        prop_anti_algebra(cand, k_max),
        prop_anti_coalgebra(cand, k_max),
        prop_unitality(cand, k_max),
        prop_counitality(cand, k_max),
        prop_s_squared(cand, k_max),
    ]
    for i, name in enumerate(_names(b)):
        v = Vec.basis(b.dim, i)
        if check_grouplike(b, v):
            verdicts.append(
                replace(
                    prop_grouplike_inverse(cand, v, k_max),
                    name=f"grouplike-inverse({name})",
                )
            )
        if check_primitive(b, v):
            verdicts.append(
                replace(
                    prop_primitive_image(cand, v, k_max),
                    name=f"primitive-image({name})",
                )
            )

    relative = verify_relative_antipode(cand, k_max)
    doc = assemble(
        structure_to_json(b, "hopf"),
        flags_to_json(compute_flags(b)),
        None,
        antipode_to_json(source, verify_strict_antipode(cand), relative),
        [proposition_to_json(v) for v in verdicts],
    )
    _emit_report(doc, args.json)
    return 0 if all(v.min_exponent is not None for v in verdicts) else 2


def _group(name: str):
    u = name.upper()
    if u == "S3":
        return symmetric_group_3()
    if u in ("K4", "C2XC2", "KLEIN"):
        return direct_product(cyclic_group(2), cyclic_group(2))
    if u.startswith("C") and u[1:].isdigit() and int(u[1:]) >= 1:
        return cyclic_group(int(u[1:]))
    raise ParseError(f"unknown group {name!r} (use C<n>, S3, or K4)")


def _perm(spec: str, n: int) -> tuple:
    try:
        perm = tuple(int(t) for t in spec.split(","))
    except ValueError:
        raise ParseError(f"malformed permutation {spec!r}") from None
    if sorted(perm) != list(range(n)):
        raise ParseError(f"{spec!r} is not a permutation of 0..{n - 1}")
    return perm


def cmd_construct(args) -> int:
    if args.what == "group-algebra":
        g = _group(args.group)
        n = len(g.elements)
        spec = args.twist
        if spec == "id":
            phi = tuple(range(n))
        elif spec == "inv":
            phi = g.inverse
        else:
            phi = _perm(spec, n)
        hg = twist_group(g, phi)
        cand = hom_group_algebra(hg, twisted_comul=args.twisted_comul)
        text = emit_structure(
            cand.bialgebra, cand.antipode, {"antipode_k": max(hg.index)}
        )
    elif args.what == "twist":
        parsed = _load(args.file)
        n = parsed.bialgebra.dim
        phi = Mat.from_entries(n, n, ((p, j, 1) for j, p in enumerate(_perm(args.perm, n))))
        text = emit_structure(yau_twist(parsed.bialgebra, phi))
    elif args.what == "tensor":
        left, right = _load(args.left), _load(args.right)
        for path, p in ((args.left, left), (args.right, right)):
            if p.antipode is None:
                raise ParseError(f"{path} has no antipode; tensor needs both factors to have one")
        cand = tensor_hopf(
            HomHopfCandidate(left.bialgebra, left.antipode),
            HomHopfCandidate(right.bialgebra, right.antipode),
        )
        params = {}
        if "antipode_k" in left.params and "antipode_k" in right.params:
            params["antipode_k"] = max(left.params["antipode_k"], right.params["antipode_k"])
        text = emit_structure(cand.bialgebra, cand.antipode, params)
    else:
        p = QParams(parse_scalar(args.q), parse_scalar(args.lam))
        text = emit_structure(
            to_hom_bialgebra(p, args.degree),
            params={"q": p.q, "lambda": p.lam, "degree": args.degree},
        )
    _write_output(text, args.output)
    return 0


def cmd_fixtures(args) -> int:
    if args.path:
        sys.stdout.write(str(fixture_path(args.path)) + "\n")
    else:
        sys.stdout.write("\n".join(FIXTURE_NAMES) + "\n")
    return 0


# -------------------------------------------------------------- wiring


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hombra",
        description="Exact checks for twisted algebra/coalgebra structures.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run axiom checks on a structure file")
    c.add_argument("file")
    c.add_argument(
        "--kind",
        choices=("algebra", "coalgebra", "bialgebra", "hopf"),
        default="bialgebra",
    )
    c.add_argument("--kmax", type=int, default=None)
    c.add_argument("--json", action="store_true")
    c.set_defaults(fn=cmd_check)

    a = sub.add_parser("antipode", help="find or verify an antipode")
    a.add_argument("mode", choices=("find", "verify"))
    a.add_argument("file")
    a.add_argument("--kmax", type=int, default=None)
    a.add_argument("--json", action="store_true")
    a.add_argument("--output", help="find: where to write the completed file")
    a.set_defaults(fn=cmd_antipode)

    pr = sub.add_parser("props", help="run the twisted-identity proposition suite")
    pr.add_argument("file")
    pr.add_argument("--kmax", type=int, default=None)
    pr.add_argument("--json", action="store_true")
    pr.set_defaults(fn=cmd_props)

    co = sub.add_parser("construct", help="build a structure file")
    cosub = co.add_subparsers(dest="what", required=True)
    ga = cosub.add_parser("group-algebra")
    ga.add_argument("--group", required=True, help="C<n>, S3, or K4")
    ga.add_argument("--twist", default="id", help="id, inv, or a permutation like 0,3,2,1")
    ga.add_argument("--twisted-comul", action="store_true")
    ga.add_argument("--output")
    tw = cosub.add_parser("twist")
    tw.add_argument("file")
    tw.add_argument("--perm", required=True, help="basis permutation like 0,2,1")
    tw.add_argument("--output")
    te = cosub.add_parser("tensor")
    te.add_argument("left")
    te.add_argument("right")
    te.add_argument("--output")
    qm = cosub.add_parser("qmatrix")
    qm.add_argument("--q", default="2")
    qm.add_argument("--lambda", dest="lam", default="3")
    qm.add_argument("--degree", type=int, default=2)
    qm.add_argument("--output")
    co.set_defaults(fn=cmd_construct)

    fx = sub.add_parser("fixtures", help="list bundled structure files")
    fx.add_argument("--path", metavar="NAME", help="print the path of one fixture")
    fx.set_defaults(fn=cmd_fixtures)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if (e.code or 0) == 0 else 1
    try:
        return args.fn(args)
    except (ValueError, OSError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
