"""Batch command line front end.

Every subcommand is flag-driven and deterministic: identical arguments give
byte-identical data output (figures excluded).  Exit status 0 means success
and every requested check passed, 1 means a check failed (details on
stdout), 2 means the invocation itself was invalid.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import dp2, eckardt, surface, tables, tilting
from .cyclic import CyclicType, ValidationError, h_series, hj_expand, i_series, j_series
from .excoll import build, gram, gram_is_unit_upper_triangular
from .fans import SimplicialCone, jk_fan_verify, normal_form_2d, resolve_2d
from .mckay import mckay_quiver, quiver_dot
from .resolution import psi_simple, psi_toric_oracle

USAGE_ERROR = 2
CHECK_FAILURE = 1


def _json_default(value):
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    raise TypeError(f"cannot serialize {value!r}")


def _dump_json(data, path: str | None):
    text = json.dumps(data, sort_keys=True, indent=2, default=_json_default)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _write_csv(rows, path: str | None):
    if path:
        with open(path, "w", newline="") as fh:
            csv.writer(fh).writerows(rows)
    else:
        csv.writer(sys.stdout).writerows(rows)


def _cyclic_type(r: int, a: int) -> CyclicType:
    return CyclicType(r, a)


# ---------------------------------------------------------------------------
# subcommand handlers


def cmd_hj(args) -> int:
    exp = hj_expand(_cyclic_type(args.r, args.a))
    print("[" + ",".join(str(x) for x in exp.alphas) + "]")
    return 0


def cmd_series(args) -> int:
    t = _cyclic_type(args.r, args.a)
    n = hj_expand(t).n
    data = {
        "r": t.r,
        "a": t.a,
        "alphas": list(hj_expand(t).alphas),
        "I": list(i_series(t).values),
        "J": list(j_series(t).values),
        "H": {str(s): list(h_series(t, s).values) for s in range(n + 2)},
    }
    if args.json:
        _dump_json(data, None)
    else:
        print(f"alphas: {data['alphas']}")
        print(f"I: {data['I']}")
        print(f"J: {data['J']}")
        for s in range(n + 2):
            print(f"H({s}): {data['H'][str(s)]}")
    return 0


def cmd_quiver(args) -> int:
    t = _cyclic_type(args.r, args.a)
    q = mckay_quiver(t)
    with open(args.dot, "w") as fh:
        fh.write(quiver_dot(q))
    if args.png:
        from . import viz

        viz.quiver_figure(q, args.png)
    print(
        f"vertices={q.r} solid={len(q.solid_edges)} dashed={len(q.dashed_edges)} dot={args.dot}"
    )
    return 0


def cmd_psi(args) -> int:
    t = _cyclic_type(args.r, args.a)
    weights = [args.i] if args.i is not None else list(range(t.r))
    status = 0
    for i in weights:
        formula = psi_simple(t, i % t.r)
        line = {"i": i % t.r, "formula": formula.to_json()}
        if args.oracle:
            oracle = psi_toric_oracle(t, i % t.r, check=False)
            line["oracle"] = oracle.to_json()
            line["match"] = oracle == formula
            if not line["match"]:
                status = CHECK_FAILURE
        print(json.dumps(line, sort_keys=True, default=_json_default))
    return status


def cmd_resolve_cone(args) -> int:
    cone = SimplicialCone.of(((args.x1, args.y1), (args.x2, args.y2)))
    nf = normal_form_2d(cone)
    print(f"index={nf.r} a={nf.a} a_pair={nf.a_pair}")
    if nf.r == 1:
        print("smooth")
        return 0
    t = CyclicType(nf.r, nf.a)
    rays = resolve_2d(t)
    print(f"alphas={list(hj_expand(t).alphas)}")
    print("rays=" + json.dumps([list(v) for v in rays]))
    return 0


def cmd_jk_fan(args) -> int:
    report = jk_fan_verify(args.k)
    for check in report.checks:
        print(f"{check.name}: {'pass' if check.passed else 'FAIL'} ({check.detail})")
    print(f"all_passed={report.all_passed}")
    if args.json:
        _dump_json(report.to_json(), args.json)
    return 0 if report.all_passed else CHECK_FAILURE


def cmd_dp2(args) -> int:
    if args.what == "count":
        vecs = dp2.exceptional_vectors(7)
        print(
            f"vectors={len(vecs)} dual_pairs={len(dp2.dual_pairs(7))} "
            f"cliques={len(dp2.enumerate_cliques())} exc_sets={len(dp2.enumerate_exceptional_sets())}"
        )
        return 0
    if args.what == "cliques":
        cliques = dp2.enumerate_cliques()
        print(f"cliques={len(cliques)}")
        if args.json:
            _dump_json([[list(v) for v in c] for c in cliques], args.json)
        return 0
    if args.what == "exc-sets":
        sets = dp2.enumerate_exceptional_sets()
        print(f"exc_sets={len(sets)}")
        if args.json:
            _dump_json([[list(v) for v in s] for s in sets], args.json)
        return 0
    # clique-cover: the existence and classification sweep
    cliques = dp2.enumerate_cliques()
    exc_sets = dp2.enumerate_exceptional_sets()
    degree_classes = [dp2.blowdown_degree_class(s) for s in exc_sets]
    rows = [["clique_index", "disjoint_sets", "disjoint_sets_avoiding_dual", "patterns"]]
    uncovered = 0
    off_pattern = 0
    pattern_counts: dict[str, int] = {}
    for idx, clique in enumerate(cliques):
        plain = dp2.disjoint_exceptional_sets(clique)
        guarded = dp2.disjoint_exceptional_sets(clique, avoid_dual=True)
        if not plain or not guarded:
            uncovered += 1
        patterns = set()
        for h in degree_classes:
            p = tuple(sorted(dp2.dot(v, h) for v in clique))
            patterns.add(p)
            if p not in dp2.DEGREE_PATTERNS:
                off_pattern += 1
        for p in patterns:
            key = "".join(map(str, p))
            pattern_counts[key] = pattern_counts.get(key, 0) + 1
        rows.append(
            [idx, len(plain), len(guarded), ";".join("".join(map(str, p)) for p in sorted(patterns))]
        )
    if args.csv:
        _write_csv(rows, args.csv)
    print(
        f"cliques={len(cliques)} uncovered={uncovered} off_pattern={off_pattern} "
        f"patterns={json.dumps(pattern_counts, sort_keys=True)}"
    )
    return 0 if uncovered == 0 and off_pattern == 0 else CHECK_FAILURE


def cmd_eckardt(args) -> int:
    if args.what == "build-a":
        config = eckardt.build_config_a()
        _dump_json(eckardt.config_to_json(config), args.out)
        if args.png:
            from . import viz

            viz.configuration_figure(config, args.png)
        return 0
    with open(args.path) as fh:
        config = eckardt.config_from_json(json.load(fh))
    report = eckardt.validate_config(config)
    for check in report.checks:
        print(f"{check.name}: {'pass' if check.passed else 'FAIL'}")
    print(f"all_passed={report.ok}")
    return 0 if report.ok else CHECK_FAILURE


def cmd_surface(args) -> int:
    model = surface.build_surface(args.k)
    if args.intersections:
        _write_csv(surface.intersection_table(model), args.csv)
    if args.classes:
        _dump_json(surface.classes_json(model), args.json)
    if not args.intersections and not args.classes:
        ranks = surface.ranks(args.k)
        disc = surface.discrepancies(args.k)
        print(
            f"k={args.k} picard_rank={ranks['picard_rank_resolution']} "
            f"ktheory_rank={ranks['ktheory_rank_resolution']} coarse_rank={ranks['picard_rank_coarse']}"
        )
        print(
            "discrepancies: central="
            + _json_default(disc.central)
            + " chain="
            + json.dumps([_json_default(x) for x in disc.chain])
        )
    return 0


def cmd_gram(args) -> int:
    label = args.collection.replace("-", "_")
    coll = build(args.k, label)
    matrix = gram(args.k, label)
    rows = [["object"] + coll.labels()]
    for lbl, row in zip(coll.labels(), matrix):
        rows.append([lbl] + list(row))
    _write_csv(rows, args.csv)
    if args.homs:
        from .excoll import hom_dims

        dump = []
        for x in coll.objects:
            for y in coll.objects:
                entry = {"from": x.label(), "to": y.label()}
                entry.update(hom_dims(args.k, x, y).to_json())
                dump.append(entry)
        _dump_json(dump, args.homs)
    if args.png:
        from . import viz

        viz.gram_figure(matrix, coll.labels(), args.png)
    ok = gram_is_unit_upper_triangular(matrix)
    print(f"collection={args.collection} size={len(matrix)} unit_upper_triangular={ok}")
    return 0 if ok else CHECK_FAILURE


def cmd_tables(args) -> int:
    report = tables.verify_tables(args.k)
    names = sorted({e.table for e in report.entries})
    for name in names:
        total = report.count(name)
        bad = [e for e in report.mismatches() if e.table == name]
        print(f"{name}: {total - len(bad)}/{total} entries match")
        for e in bad[:20]:
            print(f"  mismatch ({e.row}, {e.col}): expected {e.expected}, got {e.got}")
    print(f"all_passed={report.ok}")
    return 0 if report.ok else CHECK_FAILURE


def cmd_tilting(args) -> int:
    label = args.collection.replace("-", "_")
    result = tilting.universal_extension_tilting(args.k, label)
    print(f"collection={args.collection} steps={len(result.steps)}")
    for step in result.steps:
        print(f"  extend {step.target} by {step.head}^{step.copies}")
    print(f"summands={len(result.summands)}")
    for s in result.summands:
        print(f"  {s.label}")
    for x, y, deg in result.undetermined:
        print(f"undetermined: ({x}, {y}) degree {deg}")
    for x, y, deg, val in result.nonvanishing:
        print(f"NONVANISHING: ({x}, {y}) degree {deg} dimension {val}")
    print(f"certified={result.certified}")
    return 0 if result.certified else CHECK_FAILURE


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jkdp",
        description="exact computations for cyclic quotient singularities and the log del Pezzo series",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hj", help="continued fraction expansion of r/a")
    p.add_argument("r", type=int)
    p.add_argument("a", type=int)
    p.set_defaults(func=cmd_hj)

    p = sub.add_parser("series", help="the integer series attached to (r, a)")
    p.add_argument("r", type=int)
    p.add_argument("a", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("quiver", help="McKay quiver as a DOT file")
    p.add_argument("r", type=int)
    p.add_argument("a", type=int)
    p.add_argument("--dot", required=True, metavar="PATH")
    p.add_argument("--png", metavar="PATH")
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("psi", help="images of the simple sheaves")
    p.add_argument("r", type=int)
    p.add_argument("a", type=int)
    p.add_argument("--i", type=int, default=None, metavar="W")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("resolve-cone", help="normal form and resolution of a 2d cone")
    for name in ("x1", "y1", "x2", "y2"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_resolve_cone)

    p = sub.add_parser("jk-fan", help="fan-level verification of the staged resolution")
    p.add_argument("k", type=int)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_jk_fan)

    p = sub.add_parser("dp2", help="degree-two del Pezzo lattice enumerations")
    p.add_argument("what", choices=["count", "cliques", "exc-sets", "clique-cover"])
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--csv", metavar="PATH")
    p.set_defaults(func=cmd_dp2)

    p = sub.add_parser("eckardt", help="plane point configurations")
    eck_sub = p.add_subparsers(dest="what", required=True)
    pa = eck_sub.add_parser("build-a")
    pa.add_argument("--out", metavar="PATH")
    pa.add_argument("--png", metavar="PATH")
    pa.set_defaults(func=cmd_eckardt, what="build-a")
    pv = eck_sub.add_parser("validate")
    pv.add_argument("path", metavar="PATH")
    pv.set_defaults(func=cmd_eckardt, what="validate")

    p = sub.add_parser("jk", help="surface-level computations for the series")
    jk_sub = p.add_subparsers(dest="what", required=True)

    ps = jk_sub.add_parser("surface")
    ps.add_argument("k", type=int)
    ps.add_argument("--intersections", action="store_true")
    ps.add_argument("--classes", action="store_true")
    ps.add_argument("--csv", metavar="PATH")
    ps.add_argument("--json", metavar="PATH")
    ps.set_defaults(func=cmd_surface)

    pg = jk_sub.add_parser("gram")
    pg.add_argument("k", type=int)
    pg.add_argument(
        "--collection",
        required=True,
        choices=["sigma", "sigma-mut", "stack", "stack-shift", "stack-mut"],
    )
    pg.add_argument("--csv", metavar="PATH")
    pg.add_argument("--homs", metavar="PATH", help="JSON dump of all pairwise Hom dimensions")
    pg.add_argument("--png", metavar="PATH")
    pg.set_defaults(func=cmd_gram)

    pt = jk_sub.add_parser("tables")
    pt.add_argument("k", type=int)
    pt.set_defaults(func=cmd_tables)

    pl = jk_sub.add_parser("tilting")
    pl.add_argument("k", type=int)
    pl.add_argument(
        "--collection",
        default="sigma-mut",
        choices=["sigma", "sigma-mut", "stack-mut"],
    )
    pl.set_defaults(func=cmd_tilting)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as err:
        print(f"invalid input: {err}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
