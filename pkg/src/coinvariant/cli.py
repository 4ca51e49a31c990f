"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (bad input data, failed
precondition), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from math import comb
from pathlib import Path

from .artinian import ArtinianSpec, hilbert_function, lefschetz_verdict
from .complex import (
    ComplexError,
    SimplicialComplex,
    classify_pseudomanifold,
    complex_from_json,
    complex_to_json,
    fhg_vectors,
)
from .compositions import identities_csv, verify_identities
from .homology import reduced_betti, reisner_check, top_cycle_space
from .inverse_systems import (
    dual_lefschetz_ranks,
    dual_module_generators,
    elementary_extras,
    parse_linear_forms,
    stress_vanishing_checks,
    top_stress,
)
from .linalg import Field
from .random_lm import DEFAULT_BUDGET, MODES, LMConfig, cd_table, monte_carlo


class DomainError(Exception):
    pass


def _tuple(xs) -> str:
    return "(" + ",".join(str(x) for x in xs) + ")"


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def resolve_data(name: str) -> Path:
    """A file path, or the name of a bundled complex (``gamma.json`` or ``gamma``)."""
    p = Path(name)
    if p.exists():
        return p
    stem = name if name.endswith(".json") else name + ".json"
    bundled = resources.files("coinvariant") / "data" / stem
    if bundled.is_file():
        return Path(str(bundled))
    raise DomainError(f"no such complex file: {name}")


def read_complex(name: str) -> SimplicialComplex:
    path = resolve_data(name)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path}: malformed JSON ({exc})") from None
    try:
        return complex_from_json(data)
    except ComplexError as exc:
        raise DomainError(f"{path}: {exc}") from None


def _field(text: str) -> Field:
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _caps(cx: SimplicialComplex, text: str) -> tuple[int, ...]:
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise DomainError(f"cannot parse caps {text!r}") from None
    if len(vals) == 1:
        return (vals[0],) * cx.n_vertices
    if len(vals) != cx.n_vertices:
        raise DomainError(f"caps list has {len(vals)} entries, complex has {cx.n_vertices} vertices")
    return tuple(vals)


def cmd_analyze(args, out) -> int:
    cx = read_complex(args.file)
    fv = fhg_vectors(cx)
    pm = classify_pseudomanifold(cx)
    betti = reduced_betti(cx, args.field)
    cm, sphere = reisner_check(cx, args.field)
    orientable = pm.is_pseudomanifold and betti.at(cx.dim) > 0
    print(f"vertices: {cx.n_vertices}", file=out)
    print(f"dimension: {cx.dim}", file=out)
    print(f"f-vector: {_tuple(fv.f)}", file=out)
    print(f"h-vector: {_tuple(fv.h)}", file=out)
    print(f"g-vector: {_tuple(fv.g)}", file=out)
    print(f"pseudomanifold: {_yes(pm.is_pseudomanifold)}, orientable: {_yes(orientable)}", file=out)
    print(f"boundary ridges: {len(pm.boundary_ridges)}", file=out)
    print(f"field: {args.field}", file=out)
    print(f"reduced betti (degrees -1..{cx.dim}): {_tuple(betti.betti)}", file=out)
    print(f"cohen-macaulay: {_yes(cm)}", file=out)
    print(f"homology sphere: {_yes(sphere)}", file=out)
    if args.emit:
        Path(args.emit).write_text(json.dumps(complex_to_json(cx)) + "\n")
    return 0


def cmd_stress(args, out) -> int:
    cx = read_complex(args.file)
    basis = top_cycle_space(cx, args.field)
    if not basis:
        raise DomainError(f"top homology of the complex vanishes over {args.field}; no top stress")
    if not 0 <= args.index < len(basis):
        raise DomainError(f"cycle index {args.index} outside 0..{len(basis) - 1}")
    cycle = basis[args.index]
    F = top_stress(cx, cycle, args.field)
    doc = {
        "field": str(args.field),
        "variables": list(cx.labels),
        "degree": F.degree,
        "cycle": [
            {"facet": [cx.labels[v] for v in f], "coeff": args.field.fmt(c)}
            for f, c in sorted(cycle.coefficients.items())
        ],
        "cycle_space_dim": len(basis),
        "stress": F.to_json(args.field),
        "checks": stress_vanishing_checks(cx, F, args.field),
    }
    print(json.dumps(doc, indent=1), file=out)
    return 0 if all(doc["checks"].values()) else 1


def _extras(cx: SimplicialComplex, text: str):
    if text == "elementary":
        return elementary_extras(cx)
    try:
        return parse_linear_forms(text, cx)
    except (ValueError, ComplexError) as exc:
        raise DomainError(f"cannot parse forms {text!r}: {exc}") from None


def cmd_perp(args, out) -> int:
    cx = read_complex(args.file)
    extra = _extras(cx, args.extra)
    K = comb(cx.dim + 2, 2) if args.max is None else args.max
    prof = dual_module_generators(cx, extra, K, args.field)
    ranks = None
    if args.ell:
        forms = _extras(cx, args.ell)
        if len(forms) != 1:
            raise DomainError("--ell takes exactly one linear form")
        ranks, _ = dual_lefschetz_ranks(cx, extra, forms[0], args.power, K, args.field)
    head = "degree,perp_dim,generators"
    if ranks is not None:
        head += f",rank_ell{args.power}"
    print(head, file=out)
    for k, (d, g) in enumerate(zip(prof.perp_dims, prof.generator_counts)):
        row = f"{k},{d},{g}"
        if ranks is not None:
            row += "," + (str(ranks[k - args.power]) if k >= args.power else "")
        print(row, file=out)
    return 0


def cmd_wlp(args, out) -> int:
    cx = read_complex(args.file)
    spec = ArtinianSpec(cx, _caps(cx, args.caps), args.field)
    rep = lefschetz_verdict(spec, args.max_power)
    out.write(rep.to_csv(quotient=args.quotient))
    print(f"wlp: {rep.verdict_wlp}", file=sys.stderr)
    if args.max_power > 1:
        print(f"slp: {rep.verdict_slp}", file=sys.stderr)
    for f in rep.failure_degrees:
        print(
            f"failure: degrees {f.source}->{f.target} rank {f.rank} of {f.full_rank_target} ({f.kind})",
            file=sys.stderr,
        )
    return 0


def cmd_hilbert(args, out) -> int:
    cx = read_complex(args.file)
    spec = ArtinianSpec(cx, _caps(cx, args.caps), args.field)
    if args.no_quotient:
        dims = hilbert_function(spec)
        print("degree," + ",".join(str(t) for t in range(len(dims))), file=out)
        print("hf," + ",".join(map(str, dims)), file=out)
        return 0
    out.write(lefschetz_verdict(spec).to_csv(quotient=True))
    return 0


def cmd_compositions(args, out) -> int:
    checks = verify_identities(args.dmax, strict=False)
    out.write(identities_csv(checks))
    return 0 if all(c.ok for c in checks) else 1


def cmd_lm(args, out) -> int:
    try:
        cfg = LMConfig(args.n, args.d, args.p, args.trials, args.seed, args.field)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    rep = monte_carlo(cfg, args.mode, args.budget)
    out.write(rep.to_csv(cfg))
    if rep.skipped:
        print(f"skipped {rep.skipped} trials over the budget of {args.budget} nonzeros", file=sys.stderr)
    return 0


def cmd_cd(args, out) -> int:
    if args.tol <= 0:
        raise DomainError("tol must be positive")
    if args.dmax < 2:
        raise DomainError("dmax must be >= 2")
    out.write(cd_table(args.dmax, args.tol))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="coinvariant", description="Coinvariant stresses and Lefschetz properties of simplicial complexes.")
    sub = ap.add_subparsers(dest="verb", required=True)

    def with_file(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="complex JSON file or bundled name (rp2, pinched_torus, gamma)")
        p.add_argument("--field", type=_field, default=Field(0), help="q (default) or a prime")
        return p

    p = with_file("analyze", "f/h/g-vectors, pseudomanifold report, Betti numbers, CM and sphere flags")
    p.add_argument("--emit", metavar="OUT", help="write the canonical complex JSON here")
    p.set_defaults(run=cmd_analyze)

    p = with_file("stress", "top coinvariant stress of a top cycle and its vanishing checks")
    p.add_argument("--index", type=int, default=0, help="which top-cycle basis vector")
    p.set_defaults(run=cmd_stress)

    p = with_file("perp", "perp-space dimensions and dual-module generator counts")
    p.add_argument("--extra", default="elementary", help="'elementary' or ';'-separated linear forms in x<label>")
    p.add_argument("--max", type=int, default=None, metavar="K", help="top degree (default C(d+2,2))")
    p.add_argument("--ell", default=None, help="linear form for the dual Lefschetz ranks")
    p.add_argument("--power", type=int, default=1)
    p.set_defaults(run=cmd_perp)

    p = with_file("wlp", "graded ranks of multiplication by x_1+...+x_n")
    p.add_argument("--caps", required=True, help="uniform cap k or a comma list, one per vertex")
    p.add_argument("--quotient", action="store_true", help="print the Hilbert function and the L-quotient rows")
    p.add_argument("--max-power", type=int, default=1, help="also test powers L^j up to this j")
    p.set_defaults(run=cmd_wlp)

    p = with_file("hilbert", "Hilbert function table")
    p.add_argument("--caps", required=True)
    p.add_argument("--no-quotient", action="store_true", help="skip the L-quotient row")
    p.set_defaults(run=cmd_hilbert)

    p = sub.add_parser("compositions", help="composition-count identities")
    p.add_argument("action", choices=["verify"])
    p.add_argument("--dmax", type=int, required=True)
    p.set_defaults(run=cmd_compositions)

    p = sub.add_parser("lm", help="Monte Carlo over Linial-Meshulam complexes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default="homology")
    p.add_argument("--field", type=_field, default=Field(0))
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max nonzeros per matrix in wlp_direct")
    p.set_defaults(run=cmd_lm)

    p = sub.add_parser("cd", help="table of the thresholds c_d")
    p.add_argument("--dmax", type=int, default=8)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(run=cmd_cd)
    return ap


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args, out)
    except (DomainError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
