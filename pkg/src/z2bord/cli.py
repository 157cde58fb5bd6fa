"""Command-line interface.

Subcommands: check, dim, orbit, span, graph-validate, smallcover, milnor,
milnor-search, reproduce-paper.  Exit codes: 0 success/accepted, 1
rejected or failed checkpoint, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys

from z2bord.gf2 import ResourceLimitError, Subspace, parse_vec, vec_str
from z2bord.membership import (
    build_constraint_system,
    check_membership,
    image_dimension,
)
from z2bord.repalg import parse_polynomial, render_polynomial


class InputError(ValueError):
    """Malformed input file or inconsistent flags; maps to exit 2."""


def _read_polynomial(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_polynomial(fh.read())
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from e
    except ValueError as e:
        raise InputError(f"{path}: {e}") from e


def _read_subgroup(path, k: int):
    try:
        with open(path, encoding="utf-8") as fh:
            lines = [l.strip() for l in fh if l.strip() and not l.startswith("#")]
        if any(len(l) != k for l in lines):
            raise ValueError(f"each row must be a bit-string of width {k}")
        basis = [parse_vec(l)[0] for l in lines]
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from e
    except ValueError as e:
        raise InputError(f"{path}: {e}") from e
    return basis


def cmd_check(args) -> int:
    p = _read_polynomial(args.polynomial)
    if p.is_zero:
        print("accepted")
        print("zero polynomial")
        return 0
    cert = check_membership(p)
    if cert.accepted:
        print("accepted")
        for dec in cert.decompositions:
            print(f"rho {vec_str(dec.rho, p.k)}:")
            for g in dec.groups:
                members = " / ".join(str(m) for m in g.members)
                print(f"  multiplicity {g.multiplicity}"
                      f"  size {len(g.members)}  members {members}")
        return 0
    v = cert.violation
    print("rejected")
    print(f"rho {vec_str(v.rho, p.k)}")
    print(f"multiplicity {v.multiplicity}")
    print("witness " + (" / ".join(vec_str(g, p.k) for g in v.witness) or "(empty)"))
    return 1


def cmd_dim(args) -> int:
    n, k = args.n, args.k
    if n < 0 or k < 1:
        raise InputError("need n >= 0 and k >= 1")
    if 0 < n < k:
        print(f"n={n} k={k} faithful=0 constraints=0 dimension=0")
        print(0)
        return 0
    cs = build_constraint_system(n, k)
    d = cs.nullspace_dimension()
    print(f"n={n} k={k} faithful={len(cs.monomials)}"
          f" constraints={len(cs.rows)} dimension={d}")
    print(d)
    return 0


def cmd_orbit(args) -> int:
    from z2bord.orbits import orbit

    p = _read_polynomial(args.polynomial)
    if p.is_zero:
        raise InputError("orbit of the zero polynomial is trivial; give a nonzero input")
    o = orbit(p, p.k)
    print(f"orbit_size={len(o)}")
    print(f"stabilizer_size={len(o.stabilizer)}")
    if args.elements:
        for q in sorted(o.elements, key=render_polynomial):
            print("--")
            print(render_polynomial(q), end="")
    return 0


def cmd_span(args) -> int:
    from z2bord.orbits import extract_basis, span_dimension

    ps = [_read_polynomial(path) for path in args.polynomials]
    ps = [p for p in ps if not p.is_zero]
    if not ps:
        print("span_dimension=0")
        return 0
    if args.expand_orbits:
        from z2bord.orbits import orbit

        pool = []
        for p in ps:
            pool.extend(sorted(orbit(p, p.k).elements, key=render_polynomial))
        ps = pool
    print(f"span_dimension={span_dimension(ps)}")
    print(f"basis_size={len(extract_basis(ps))}")
    return 0


def cmd_graph_validate(args) -> int:
    from z2bord.graphs import parse_graph, validate_graph

    try:
        with open(args.graph, encoding="utf-8") as fh:
            g = parse_graph(fh.read())
    except OSError as e:
        raise InputError(f"{args.graph}: {e.strerror}") from e
    except ValueError as e:
        raise InputError(f"{args.graph}: {e}") from e
    report = validate_graph(g)
    if report.ok:
        print("valid")
        return 0
    print("invalid")
    for v in report.violations:
        print(v)
    return 1


def cmd_smallcover(args) -> int:
    from z2bord.smallcover import (
        CharacteristicFunction,
        InvalidCharacteristicError,
        NonIsolatedError,
        ProductOfSimplices,
        fixed_polynomial,
        parse_characteristic,
        restricted_polynomial,
    )

    try:
        polytope = ProductOfSimplices.parse(args.polytope)
        with open(getattr(args, "lambda"), encoding="utf-8") as fh:
            cf = parse_characteristic(fh.read(), polytope.factor_dims)
    except OSError as e:
        raise InputError(f"{getattr(args, 'lambda')}: {e.strerror}") from e
    except (ValueError, InvalidCharacteristicError) as e:
        raise InputError(str(e)) from e
    if not cf.is_valid():
        print("invalid characteristic function")
        return 1
    if args.subgroup is None:
        p = fixed_polynomial(cf)
    else:
        basis = _read_subgroup(args.subgroup, polytope.dim)
        h = Subspace.span(basis, polytope.dim)
        if h.dim != len(basis):
            raise InputError(f"{args.subgroup}: rows are not independent")
        try:
            p = restricted_polynomial(cf, h, basis)
        except NonIsolatedError as e:
            print(f"non-isolated: {e}")
            return 1
    print(render_polynomial(p), end="")
    return 0


def cmd_milnor(args) -> int:
    from z2bord.milnor import (
        InvalidFamilyError,
        NonIsolatedError,
        SubsetFamily,
        milnor_fixed_polynomial,
    )

    try:
        family = SubsetFamily.parse(args.r, args.sets)
        p = milnor_fixed_polynomial(args.m, args.n, family)
    except (ValueError, InvalidFamilyError) as e:
        if isinstance(e, NonIsolatedError):
            print(f"non-isolated: {e}")
            return 1
        raise InputError(str(e)) from e
    print(render_polynomial(p), end="")
    return 0


def cmd_milnor_search(args) -> int:
    from z2bord.catalog import GENERATORS
    from z2bord.milnor import family_label, search_orbit_hits
    from z2bord.orbits import orbit

    targets = [orbit(g, args.r) for g in GENERATORS] if args.r == 3 else []
    report = search_orbit_hits(args.m, args.n, args.r, targets)
    print(f"families_tried={report.families_tried}")
    print(f"skipped_non_isolated={report.skipped_non_isolated}")
    print(f"distinct_polynomials={report.distinct_polynomials()}")
    for i, fams in enumerate(report.hits, 1):
        first = f" first={family_label(fams[0])}" if fams else ""
        print(f"orbit_{i}_hits={len(fams)}{first}")
    print("unreached_orbits="
          + (",".join(str(i + 1) for i in report.unreached) or "none"))
    return 0


def cmd_reproduce(args) -> int:
    from z2bord.report import emit_data, run_reproduction

    report = run_reproduction()
    for line in report.lines():
        print(line)
    if args.emit_data:
        names = emit_data(args.emit_data)
        print(f"emitted {len(names)} files to {args.emit_data}")
    if report.ok:
        print("all checkpoints passed")
        return 0
    first = next(c for c in report.checkpoints if not c.passed)
    print(f"first failure: {first.name}")
    return 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="z2bord",
        description="Exact GF(2) engine for fixed-point data of involutions",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide realizability of a polynomial file")
    p.add_argument("polynomial")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("dim", help="dimension of the realizable space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_dim)

    p = sub.add_parser("orbit", help="automorphism orbit of a polynomial file")
    p.add_argument("polynomial")
    p.add_argument("--elements", action="store_true",
                   help="print every orbit element")
    p.set_defaults(fn=cmd_orbit)

    p = sub.add_parser("span", help="GF(2) span of polynomial files")
    p.add_argument("polynomials", nargs="+")
    p.add_argument("--expand-orbits", action="store_true",
                   help="span of the full orbits of the inputs")
    p.set_defaults(fn=cmd_span)

    p = sub.add_parser("graph-validate", help="validate a labeled graph file")
    p.add_argument("graph")
    p.set_defaults(fn=cmd_graph_validate)

    p = sub.add_parser("smallcover",
                       help="fixed-point polynomial of a small cover")
    p.add_argument("--polytope", required=True, metavar="N1xN2x...",
                   help="product of simplices, e.g. 1x4")
    p.add_argument("--lambda", required=True, metavar="FILE",
                   help="characteristic matrix file")
    p.add_argument("--subgroup", metavar="FILE",
                   help="restrict to the subgroup spanned by these rows")
    p.set_defaults(fn=cmd_smallcover)

    p = sub.add_parser("milnor",
                       help="fixed-point polynomial of a Milnor hypersurface action")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--sets", required=True,
                   help="semicolon-separated digit strings, e.g. '2;12;23;123'")
    p.set_defaults(fn=cmd_milnor)

    p = sub.add_parser("milnor-search",
                       help="search all subset families for orbit hits")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(fn=cmd_milnor_search)

    p = sub.add_parser("reproduce-paper",
                       help="run every published checkpoint and report")
    p.add_argument("--emit-data", metavar="DIR",
                   help="also export the embedded example data")
    p.set_defaults(fn=cmd_reproduce)

    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ResourceLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
