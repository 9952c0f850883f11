"""Unified command-line front end.

Every subcommand prints a deterministic document (JSON by default, TSV or
text on request) whose header carries the seed in use, so reruns with fixed
inputs are byte-identical.  Exit codes: 0 success, 1 domain error, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import characters, golden, intform, schurweyl, torsion, toricpave, weyl
from .errors import LieparError
from .rootsys import build_root_system

_DESCRIPTIONS = {
    "rootsys": "root system data: roots, coroots, minuscule weights, dual Coxeter number, fundamental group",
    "weyl": "Weyl group combinatorics: double-quotient representatives and stratum cell polynomials",
    "torsion": "torsion-prime tables by the coroot-coefficient criterion and the subsystem oracle",
    "char": "character arithmetic: tensor and exterior-power decompositions, generation certificates",
    "intform": "ranks and radicals of integer intersection forms over Q and F_p, multiplicity reports",
    "schurweyl": "Specht-module Gram matrices and simple symmetric-group dimensions mod p",
    "nilpotent": "GL_n nilpotent orbit data: dimension, conjugate partition, centralizer type",
    "toric": "toric fans: validation, star subdivision, strictly convex supports, affine pavings",
    "golden": "replay the frozen golden tables against live computation",
}


def _weight_label(wt) -> str:
    terms = [f"{'' if c == 1 else c}w{j + 1}" for j, c in enumerate(wt) if c]
    return "+".join(terms) if terms else "0"


def _parse_weight(text: str, rank: int) -> tuple[int, ...]:
    """Parse 'w8', '2w1+w3' into fundamental-weight coordinates."""
    coords = [0] * rank
    for term in text.replace(" ", "").split("+"):
        if not term:
            continue
        if "w" not in term:
            raise LieparError(f"cannot parse weight term {term!r}")
        coeff, _, idx = term.partition("w")
        i = int(idx)
        if not 1 <= i <= rank:
            raise LieparError(f"fundamental index {i} out of range 1..{rank}")
        coords[i - 1] += int(coeff) if coeff else 1
    return tuple(coords)


def _parse_indices(text: str | None) -> frozenset[int]:
    """1-based comma list -> 0-based index set."""
    if not text:
        return frozenset()
    return frozenset(int(t) - 1 for t in text.split(",") if t)


def _emit(document: dict, fmt: str, tsv_rows=None, text_lines=None) -> str:
    if fmt == "json":
        return json.dumps(document, sort_keys=True, indent=2)
    if fmt == "tsv":
        lines = [f"# {k}={document[k]}" for k in sorted(document) if not isinstance(document[k], (list, dict))]
        for row in tsv_rows or []:
            lines.append("\t".join(str(x) for x in row))
        return "\n".join(lines)
    lines = [f"{k}: {document[k]}" for k in sorted(document) if not isinstance(document[k], (list, dict))]
    lines.extend(text_lines or [])
    return "\n".join(lines)


def _document(subcommand: str, seed: int = 0, **payload) -> dict:
    return {"subcommand": subcommand, "seed": seed, **payload}


def _cmd_rootsys(args) -> str:
    rs = build_root_system(args.type)
    doc = _document("rootsys", type=rs.type_name())
    rows = []
    if args.emit == "roots":
        doc["roots"] = [list(r) for r in rs.roots]
        rows = [(",".join(map(str, r)),) for r in rs.roots]
    elif args.emit == "coroots":
        doc["coroots"] = [list(rs.coroot(r)) for r in rs.positive_roots]
        rows = [(",".join(map(str, rs.coroot(r))),) for r in rs.positive_roots]
    elif args.emit == "minuscule":
        doc["minuscule"] = list(rs.minuscule_weights())
    elif args.emit == "h-dual":
        doc["h_dual"] = rs.dual_coxeter_number()
        doc["minimal_orbit_dimension"] = rs.minimal_orbit_dimension()
    elif args.emit == "fundamental-group":
        doc["fundamental_group"] = list(rs.fundamental_group().divisors)
    else:  # json document of the whole system
        doc.update(rs.to_dict())
    return _emit(doc, args.format, rows)


def _cmd_weyl(args) -> str:
    rs = build_root_system(args.type)
    I, J = _parse_indices(args.I), _parse_indices(args.J)
    reps = weyl.double_quotient_reps(rs, I, J)
    doc = _document("weyl", type=rs.type_name(),
                    I=sorted(i + 1 for i in I), J=sorted(j + 1 for j in J))
    if args.emit == "reps":
        doc["representatives"] = [
            {"word": [i + 1 for i in w.word], "length": w.length} for w in reps
        ]
        rows = [("-".join(str(i + 1) for i in w.word) or "e", w.length) for w in reps]
        return _emit(doc, args.format, rows)
    polys = []
    rows = []
    for w in reps:
        poly = weyl.stratum_poincare(rs, I, J, w)
        polys.append({"word": [i + 1 for i in w.word], "polynomial": list(poly.coeffs)})
        rows.append(("-".join(str(i + 1) for i in w.word) or "e", str(poly)))
    doc["poincare"] = polys
    return _emit(doc, args.format, rows)


def _cmd_torsion(args) -> str:
    rs = build_root_system(args.type)
    doc = _document("torsion", type=rs.type_name(), method=args.method)
    fast = oracle = None
    certs: list = []
    if args.method in ("fast", "both"):
        fast = list(torsion.torsion_primes_fast(rs))
        doc["fast"] = fast
    if args.method in ("oracle", "both"):
        primes, certificates = torsion.torsion_primes_subsystem_oracle(rs)
        oracle = list(primes)
        certs = certificates
        doc["oracle"] = oracle
    if args.method == "both":
        doc["agreement"] = fast == oracle
    doc["primes"] = fast if fast is not None else oracle
    if args.emit == "certificates":
        doc["certificates"] = [
            {
                "prime": c.prime,
                "subsystem": [list(r) for r in c.subsystem],
                "divisor_witness": c.divisor_witness,
                "verified": c.verify(rs),
            }
            for c in certs
        ]
    doc["minimal_orbit_primes"] = list(torsion.minimal_orbit_parity_primes(rs)) if rs.is_irreducible() else None
    bound = torsion.tilting_generation_bound(rs, improved=args.improved_bounds) if rs.is_irreducible() else None
    if bound is not None:
        doc["tilting_bound"] = bound.describe()
    rows = [(p,) for p in (doc["primes"] or [])]
    return _emit(doc, args.format, rows)


def _cmd_char(args) -> str:
    rs = build_root_system(args.type)
    doc = _document("char", type=rs.type_name())
    if args.certify_generation:
        cert = characters.generation_certificate(rs)
        doc["generators"] = [_weight_label(g) for g in cert.generators]
        doc["certificates"] = [
            {
                "fundamental": f"w{e.fundamental_index}",
                "word": [_weight_label(x) for x in e.word],
                "multiplicity": e.multiplicity,
                "verified": True,
            }
            for e in cert.entries
        ]
        assert cert.verify(rs)
        return _emit(doc, args.format,
                     [(c["fundamental"], "*".join(c["word"]), c["multiplicity"]) for c in doc["certificates"]])
    if args.tensor:
        parts = args.tensor.split(",")
        if len(parts) != 2:
            raise LieparError("--tensor expects two comma-separated weights, e.g. w8,w8")
        left, right = (_parse_weight(p, rs.rank) for p in parts)
        ch = characters.tensor_decompose(rs, left, right)
        doc["operation"] = f"{_weight_label(left)} (x) {_weight_label(right)}"
    elif args.exterior:
        weight_text, _, power_text = args.exterior.partition("^")
        weight = _parse_weight(weight_text, rs.rank)
        power = int(power_text) if power_text else 1
        ch = characters.exterior_power_decompose(rs, weight, power)
        doc["operation"] = f"Lambda^{power} {_weight_label(weight)}"
    else:
        raise LieparError("char needs one of --tensor, --exterior, --certify-generation")
    summands = [
        {"weight": _weight_label(wt), "coords": list(wt), "multiplicity": m,
         "dimension": characters.weyl_dimension(rs, wt)}
        for wt, m in ch.sorted_dominant()
    ]
    doc["decomposition"] = summands
    doc["dimension"] = ch.dimension()
    rows = [(s["weight"], s["multiplicity"], s["dimension"]) for s in summands]
    return _emit(doc, args.format, rows)


def _cmd_intform(args) -> str:
    forms = intform.load_forms(args.infile)
    report = intform.decomposition_report(forms, args.p)
    doc = _document("intform", **report.to_dict())
    rows = [
        (s["label"], s["size"], s["rank_q"], s["rank_fp"], s["multiplicity"], s["radical_dimension"])
        for s in doc["strata"]
    ]
    return _emit(doc, args.format, rows)


def _cmd_schurweyl(args) -> str:
    doc = _document("schurweyl", d=args.d, p=args.p)
    if args.emit == "gram":
        grams = []
        for lam in schurweyl.partitions(args.d):
            g = schurweyl.specht_gram(lam)
            grams.append({"partition": list(lam), "size": g.size,
                          "matrix": [list(r) for r in g.form.matrix]})
        doc["grams"] = grams
        rows = [(",".join(map(str, g["partition"])), g["size"]) for g in grams]
        return _emit(doc, args.format, rows)
    dims = schurweyl.simple_dims_table(args.d, args.p)
    doc["dims"] = dims
    per = [
        {"partition": list(lam), "f": schurweyl.hook_length_count(lam),
         "simple_dimension": schurweyl.simple_dimension(lam, args.p)}
        for lam in schurweyl.partitions(args.d)
        if schurweyl.is_p_regular(lam, args.p)
    ]
    doc["p_regular"] = per
    rows = [(",".join(map(str, r["partition"])), r["f"], r["simple_dimension"]) for r in per]
    return _emit(doc, args.format, rows)


def _cmd_nilpotent(args) -> str:
    lam = tuple(int(x) for x in args.partition.split(","))
    data = schurweyl.nilpotent_orbit_data(lam, args.n)
    doc = _document("nilpotent", **data.to_dict())
    return _emit(doc, args.format, [(doc["dimension"], doc["centralizer"])])


def _cmd_toric(args) -> str:
    with open(args.fan, encoding="utf-8") as fh:
        fan = toricpave.Fan.from_dict(json.load(fh))
    tau = None
    if args.tau:
        with open(args.tau, encoding="utf-8") as fh:
            tau = toricpave.Fan.from_dict(json.load(fh))
    doc = _document("toric", seed=args.seed)
    if args.paving:
        if tau is None:
            raise LieparError("--paving requires --tau")
        result = toricpave.paving(fan, tau, seed=args.seed)
        doc["poincare"] = list(result.polynomial.coeffs)
        doc["even"] = result.is_even()
        doc["cell_count"] = len(result.cells)
        doc["relevant_cone_count"] = len(result.relevant_cones)
        if args.emit == "cells":
            doc["cells"] = [
                {"sigma": list(c.sigma), "gamma": list(c.gamma),
                 "members": [list(m) for m in c.member_cones],
                 "complex_dimension": c.complex_dimension}
                for c in result.cells
            ]
        rows = [(str(toricpave.CellPolynomial(tuple(doc["poincare"]))),)]
        return _emit(doc, args.format, rows)
    if args.subdivide:
        ray = tuple(int(x) for x in args.subdivide.split(","))
        new_fan = toricpave.star_subdivision(fan, ray)
        doc["fan"] = new_fan.to_dict()
        return _emit(doc, args.format)
    report = toricpave.validate_fan(fan, tau=tau)
    doc["simplicial"] = report.simplicial
    doc["smooth"] = report.smooth
    doc["complete"] = report.complete
    doc["refines_tau"] = report.refines_tau
    poset = toricpave.orbit_poset(fan)
    doc["cones"] = [list(c) for c in poset.cones]
    doc["orbit_dimensions"] = list(poset.orbit_dimensions)
    return _emit(doc, args.format)


def _cmd_golden(args) -> str:
    report = golden.run_golden(fixtures_dir=args.fixtures)
    doc = _document("golden", **report.to_dict())
    if not report.passed:
        for f in report.failures():
            print(f"MISMATCH {f.table} [{f.row}]: {f.diff}", file=sys.stderr)
        raise LieparError(f"{len(report.failures())} golden rows failed")
    rows = [(o.table, o.row, "pass") for o in report.outcomes]
    return _emit(doc, args.format, rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liepar",
        description="exact computational Lie theory: root systems, Weyl combinatorics, "
                    "torsion primes, tilting character decompositions, intersection-form "
                    "multiplicities, Schur-Weyl dimensions and toric affine pavings",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, help=_DESCRIPTIONS[name], description=_DESCRIPTIONS[name])
        p.add_argument("--format", choices=("json", "tsv", "text"), default="json")
        p.set_defaults(func=func)
        return p

    p = add("rootsys", _cmd_rootsys)
    p.add_argument("--type", required=True)
    p.add_argument("--emit", choices=("roots", "coroots", "minuscule", "h-dual", "fundamental-group", "all"),
                   default="all")

    p = add("weyl", _cmd_weyl)
    p.add_argument("--type", required=True)
    p.add_argument("--I", default="")
    p.add_argument("--J", default="")
    p.add_argument("--emit", choices=("reps", "poincare"), default="reps")

    p = add("torsion", _cmd_torsion)
    p.add_argument("--type", required=True)
    p.add_argument("--method", choices=("fast", "oracle", "both"), default="fast")
    p.add_argument("--emit", choices=("primes", "certificates"), default="primes")
    p.add_argument("--improved-bounds", action="store_true",
                   help="use the sharper p > 2 generation bound in types B and D")

    p = add("char", _cmd_char)
    p.add_argument("--type", required=True)
    p.add_argument("--tensor", help="two weights, e.g. w8,w8")
    p.add_argument("--exterior", help="weight and power, e.g. w4^2")
    p.add_argument("--certify-generation", action="store_true")
    p.add_argument("--emit", choices=("decomposition",), default="decomposition")

    p = add("intform", _cmd_intform)
    p.add_argument("--in", dest="infile", required=True, help="JSON file of symmetric forms")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--emit", choices=("report",), default="report")

    p = add("schurweyl", _cmd_schurweyl)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--emit", choices=("dims", "gram"), default="dims")

    p = add("nilpotent", _cmd_nilpotent)
    p.add_argument("--partition", required=True, help="comma-separated parts, e.g. 3,2,2")
    p.add_argument("--n", type=int, required=True)

    p = add("toric", _cmd_toric)
    p.add_argument("--fan", required=True, help="fan JSON: {rank, rays, cones}")
    p.add_argument("--tau", help="ambient cone fan JSON")
    p.add_argument("--paving", action="store_true")
    p.add_argument("--subdivide", help="ray to star-subdivide along, e.g. 1,1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--emit", choices=("cells", "poincare"), default="poincare")

    p = add("golden", _cmd_golden)
    p.add_argument("--fixtures", help="override directory of golden tables")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output = args.func(args)
    except LieparError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
