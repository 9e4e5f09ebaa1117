"""Command-line front end.

    polychar roots G2
    polychar orbit A2 1,1
    polychar mult A2 1,1 --json
    polychar polytope G2 0,3
    polychar expand G2 1,3
    polychar matrix G2 --max-level 6
    polychar matrix A3 --order tests/data/a3_class1.order
    polychar verify C2 --max-level 6 --json
    polychar examples section2
"""

import argparse
import json
import re
import sys

from . import charmult, expansion, polytope, rootsys, weyl
from .rootsys import format_weight


class UsageError(Exception):
    pass


def _algebra(text):
    try:
        return rootsys.build(rootsys.parse_algebra(text))
    except rootsys.InvalidAlgebra as e:
        raise UsageError(f"argument algebra: {e}") from None


def _weight(cd, text, name="lambda", dominant=False):
    try:
        w = rootsys.parse_weight(text, cd.rank)
    except ValueError as e:
        raise UsageError(f"argument {name}: {e}") from None
    if dominant and not rootsys.is_dominant(w):
        raise UsageError(f"argument {name}: weight {text} is not dominant (all labels must be >= 0)")
    return w


def _table(header, rows):
    cells = [header] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=False)


# ---------------------------------------------------------------- verbs


def cmd_roots(args):
    cd = _algebra(args.algebra)
    data = {
        "algebra": str(cd.id),
        "cartan": [list(r) for r in cd.cartan],
        "positive_roots": [
            {"root": list(a), "weight": list(w)} for a, w in zip(cd.positive_roots, cd.positive_root_weights)
        ],
        "rho": list(cd.rho),
        "theta": {"root": list(cd.theta), "weight": list(cd.theta_weight)},
        "comarks": list(cd.comarks),
        "weyl_order": cd.weyl_order,
        "center_order": cd.center_order,
    }
    if args.json:
        return 0, _dump(data)
    lines = [f"algebra {cd.id}", "cartan matrix:"]
    lines += ["  " + " ".join(f"{x:3d}" for x in row) for row in cd.cartan]
    lines.append(f"positive roots ({len(cd.positive_roots)}):")
    lines.append(
        _table(["root", "weight"], [[format_weight(a), format_weight(w)] for a, w in zip(cd.positive_roots, cd.positive_root_weights)])
    )
    lines.append(f"rho {format_weight(cd.rho)}")
    lines.append(f"theta {format_weight(cd.theta)} = weight {format_weight(cd.theta_weight)}")
    lines.append(f"comarks {format_weight(cd.comarks)}")
    lines.append(f"|W| {cd.weyl_order}")
    lines.append(f"|P/Q| {cd.center_order}")
    return 0, "\n".join(lines)


def cmd_orbit(args):
    cd = _algebra(args.algebra)
    w = _weight(cd, args.weight, "weight")
    orb = weyl.orbit(cd, w)
    if args.json:
        return 0, _dump({"algebra": str(cd.id), "weight": list(w), "size": len(orb), "orbit": [list(x) for x in orb]})
    lines = [f"orbit of {format_weight(w)} in {cd.id}: {len(orb)} weights"]
    lines += [format_weight(x) for x in orb]
    return 0, "\n".join(lines)


def cmd_mult(args):
    cd = _algebra(args.algebra)
    lam = _weight(cd, args.weight, dominant=True)
    m = charmult.weight_system(cd, lam)
    d = charmult.dim(cd, lam)
    items = m.sorted_items(cd)
    if args.json:
        return 0, _dump(
            {
                "algebra": str(cd.id),
                "lambda": list(lam),
                "dim": d,
                "weights": [{"mu": list(mu), "mult": v} for mu, v in items],
            }
        )
    lines = [f"L({format_weight(lam)}) of {cd.id}: {len(items)} weights, dim {d}"]
    lines.append(_table(["weight", "mult"], [[format_weight(mu), v] for mu, v in items]))
    return 0, "\n".join(lines)


def cmd_polytope(args):
    cd = _algebra(args.algebra)
    lam = _weight(cd, args.weight, dominant=True)
    pts = polytope.points(cd, lam)
    closed = polytope.count_closed_form(cd, lam) if polytope.has_closed_form(cd) else None
    match = None if closed is None else closed == len(pts)
    if args.json:
        return 0, _dump(
            {
                "algebra": str(cd.id),
                "lambda": list(lam),
                "count": len(pts),
                "closed_form": closed,
                "match": match,
                "points": [list(p) for p in pts],
            }
        )
    lines = [f"weight polytope of {format_weight(lam)} in {cd.id}"]
    lines += [format_weight(p) for p in pts]
    lines.append(f"count {len(pts)}")
    if closed is None:
        lines.append("closed form: unavailable")
    else:
        lines.append(f"closed form {closed} ({'match' if match else 'MISMATCH'})")
    return 0, "\n".join(lines)


def cmd_expand(args):
    cd = _algebra(args.algebra)
    lam = _weight(cd, args.weight, dominant=True)
    row = expansion.a_row(cd, lam)
    order = sorted(row, key=lambda w: (rootsys.level(cd, w), tuple(-x for x in w)))
    if args.json:
        return 0, _dump(
            {
                "algebra": str(cd.id),
                "lambda": list(lam),
                "kind": "A",
                "row": [{"mu": list(mu), "coeff": row[mu]} for mu in order],
            }
        )
    terms = " + ".join(f"{'' if row[mu] == 1 else str(row[mu]) + ' '}B({format_weight(mu)})" for mu in reversed(order))
    return 0, f"ch({format_weight(lam)}) = {terms}"


def _read_order(cd, path):
    try:
        with open(path) as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    except OSError as e:
        raise UsageError(f"argument --order: cannot read {path}: {e.strerror}") from None
    return [_weight(cd, ln, "--order", dominant=True) for ln in lines]


def _render_matrix(m):
    labels = [format_weight(w) for w in m.order]
    header = ["", *labels]
    rows = [[labels[i], *m.rows[i]] for i in range(len(labels))]
    return _table(header, rows)


def cmd_matrix(args):
    cd = _algebra(args.algebra)
    if args.order:
        order = _read_order(cd, args.order)
    elif args.max_level is None:
        raise UsageError("argument --max-level: required unless --order is given")
    else:
        if args.class_index is not None and not 0 <= args.class_index < cd.center_order:
            raise UsageError(f"argument --class: {cd.id} has classes 0..{cd.center_order - 1}")
        order = expansion.default_order(cd, args.max_level, args.class_index)
    try:
        inv = expansion.a_inverse_matrix(cd, order)
        m = inv if args.inverse else expansion.a_matrix(cd, order, inverse=inv)
    except expansion.OrderError as e:
        raise UsageError(f"argument --order: {e}") from None
    if args.json:
        return 0, _dump(m.to_dict())
    title = "A^-1" if args.inverse else "A"
    cls = "" if m.class_index is None else f", class {m.class_index}"
    return 0, f"{title} for {cd.id}{cls}, {len(order)} weights\n" + _render_matrix(m)


def cmd_verify(args):
    cd = _algebra(args.algebra)
    counts = expansion.verify_counts(cd, args.max_level)
    conj = expansion.verify_conjectures(cd, args.max_level)
    status = 1 if (counts.identity_failures or conj.negative_entries) else 0
    if args.json:
        return status, _dump({"counts": counts.to_dict(), "conjectures": conj.to_dict()})
    lines = [f"verification for {cd.id}, level <= {args.max_level} ({conj.checked} dominant weights)", ""]
    lines.append("count identities (d = A b*, b* = A^-1 d):")
    lines.append(
        _table(
            ["lambda", "dim", "b*", "A.b*", "Ainv.d", "points", "closed"],
            [
                [
                    format_weight(r["lambda"]),
                    r["dim"],
                    r["b_star"],
                    r["sum_A_b_star"],
                    r["sum_Ainv_dim"],
                    r["points"],
                    "-" if r["closed_form"] is None else r["closed_form"],
                ]
                for r in counts.rows
            ],
        )
    )
    if counts.identity_failures:
        lines.append("IDENTITY FAILURES:")
        lines += [f"  {format_weight(f['lambda'])}: {f['identity']} ({f['lhs']} vs {f['rhs']})" for f in counts.identity_failures]
    else:
        lines.append("all count identities hold")
    if counts.count_flags:
        lines.append("count disagreements:")
        lines += [
            f"  {format_weight(f['lambda'])}: b*={f['b_star']} points={f['points']} closed={f['closed_form']}"
            for f in counts.count_flags
        ]
    else:
        lines.append("b* = |points| = closed form everywhere checked")
    lines.append("")
    lines.append("non-negativity of A:")
    if conj.negative_entries:
        lines += [f"  A[{format_weight(e['lambda'])}; {format_weight(e['mu'])}] = {e['value']}" for e in conj.negative_entries]
    else:
        lines.append("  no negative entry")
    lines.append("Brion sum vs polytope sum:")
    if conj.polytope_mismatches:
        for mm in conj.polytope_mismatches:
            lines.append(f"  {format_weight(mm['lambda'])}: b*={mm['b_star']} points={mm['points']}")
            lines += [f"    {format_weight(d['mu'])}: brion {d['brion']} polytope {d['indicator']}" for d in mm["differences"]]
    else:
        lines.append("  equal for every weight checked")
    return status, "\n".join(lines)


# fixed, generic evaluation points for the worked examples
EXAMPLE_POINTS = {1: (-0.37,), 2: (-0.37, 0.61)}


def cmd_examples(args):
    if args.name != "section2":
        raise UsageError(f"argument name: unknown example set {args.name!r}; available: section2")
    out = []
    for label, p in (("segment [2,7]", polytope.segment_example()), ("triangle (0,0),(1,0),(1,1)", polytope.triangle_example())):
        c = EXAMPLE_POINTS[p.dimension]
        direct = polytope.direct_sum(p, c)
        brion = polytope.generic_brion_numeric(p, c)
        out.append(
            {
                "example": label,
                "c": list(c),
                "points": [list(x) for x in p.lattice_points],
                "cones": [{"vertex": list(k.apex), "generators": [list(u) for u in k.generators]} for k in p.cones],
                "direct_sum": direct,
                "brion_sum": brion,
                "relative_difference": abs(direct - brion) / abs(direct),
            }
        )
    if args.json:
        return 0, _dump({"examples": out})
    lines = []
    for e in out:
        lines.append(f"{e['example']} at c = {tuple(e['c'])}")
        lines.append("  points: " + " ".join("(" + format_weight(x) + ")" for x in e["points"]))
        for k in e["cones"]:
            lines.append(f"  vertex ({format_weight(k['vertex'])}) cone " + " ".join("(" + format_weight(u) + ")" for u in k["generators"]))
        lines.append(f"  lattice sum {e['direct_sum']:.15g}   Brion sum {e['brion_sum']:.15g}   rel diff {e['relative_difference']:.1e}")
    return 0, "\n".join(lines)


# let weights such as -1,2 through as positionals instead of unknown options
_WEIGHT_LIKE = re.compile(r"^-\d+(,-?\d+)*$")


def build_parser():
    p = argparse.ArgumentParser(
        prog="polychar",
        description="Characters, weight polytopes and polytope expansions of simple Lie algebras.",
    )
    sub = p.add_subparsers(dest="verb", required=True, metavar="verb")

    def add(name, func, help_text, weight=None):
        s = sub.add_parser(name, help=help_text, description=help_text)
        s._negative_number_matcher = _WEIGHT_LIKE
        if name != "examples":
            s.add_argument("algebra", help="algebra name, e.g. A2, C2, G2, A3")
        if weight:
            s.add_argument("weight", metavar=weight, help="Dynkin labels, e.g. 1,0,1")
        s.add_argument("--json", action="store_true", help="emit JSON")
        s.set_defaults(func=func)
        return s

    add("roots", cmd_roots, "root system data")
    add("orbit", cmd_orbit, "Weyl orbit of a weight", "weight")
    add("mult", cmd_mult, "weight multiplicities of an irreducible representation", "lambda")
    add("polytope", cmd_polytope, "lattice points of a weight polytope", "lambda")
    add("expand", cmd_expand, "one row of the polytope expansion ch = sum A B", "lambda")
    m = add("matrix", cmd_matrix, "full expansion matrix A (or A^-1)")
    m.add_argument("--max-level", type=int, help="include dominant weights up to this level")
    m.add_argument("--class", dest="class_index", type=int, help="restrict to one congruence class")
    m.add_argument("--order", help="file with one weight per line, used verbatim as the order")
    m.add_argument("--inverse", action="store_true", help="print A^-1 instead of A")
    v = add("verify", cmd_verify, "count identities and conjecture scans")
    v.add_argument("--max-level", type=int, required=True)
    e = add("examples", cmd_examples, "worked lattice-polytope examples")
    e.add_argument("name", help="example set (section2)")
    return p


def run(argv=None):
    """Parse and dispatch; returns (exit status, stdout text, stderr text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0), "", ""
    try:
        status, text = args.func(args)
    except UsageError as e:
        return 2, "", f"polychar: error: {e}"
    except (weyl.GroupTooLarge, expansion.TooManyRoots) as e:
        return 2, "", f"polychar: error: argument algebra: {e}"
    return status, text, ""


def main(argv=None):
    status, out, err = run(argv)
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
