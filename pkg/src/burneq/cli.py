"""Command-line front end.

Exit codes: 0 success (and equal sides for `product`), 1 input errors or a
failed product check, 2 infeasible realization targets, 3 internal
assertion failures.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import burnside, degree, descriptors, fuzz, realize
from .errors import (
    BurneqError,
    DescriptorError,
    EmptyOrbitTypeStratum,
    InfeasibleCoefficient,
    InvalidAction,
    NonIntegralSolution,
)
from .group import (
    DEFAULT_ORDER_CAP,
    class_labels,
    class_leq,
    subgroup_classes,
    weyl_data,
)
from .representation import orbit_types


def _order_cap() -> int:
    value = os.environ.get("BURNEQ_ORDER_CAP")
    return int(value) if value else DEFAULT_ORDER_CAP


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _load_group(args):
    return descriptors.load_group(args.group, order_cap=_order_cap())


def cmd_group(args) -> int:
    group = _load_group(args)
    classes = subgroup_classes(group)
    labels = class_labels(group)
    rows = []
    for cls, label in zip(classes, labels):
        wd = weyl_data(group, cls.representative)
        rows.append(
            {
                "index": cls.class_index,
                "label": label,
                "order": cls.representative.order,
                "members": len(cls.members),
                "weyl_order": wd.weyl_order,
            }
        )
    leq = [
        [b.class_index for b in classes if class_leq(a, b)] for a in classes
    ]
    payload = {"order": group.order, "points": group.points, "classes": rows, "leq": leq}
    lines = [f"order: {group.order}", f"points: {group.points}", "classes:"]
    lines.append("  idx  order  members  weyl  label")
    for row in rows:
        lines.append(
            f"  {row['index']:<4} {row['order']:<6} {row['members']:<8} "
            f"{row['weyl_order']:<5} {row['label']}"
        )
    lines.append("partial order (classes <= class i):")
    for row, below in zip(rows, leq):
        lines.append(f"  {row['index']}: {' '.join(str(i) for i in below)}")
    if args.rep:
        rep = descriptors.load_representation(args.rep[0], group)
        table = orbit_types(rep)
        payload["orbit_types"] = [
            {
                "class": e.class_index,
                "dim_fixed": e.dim_fixed,
                "occupied": e.occupied,
            }
            for e in table.entries
        ]
        lines.append("orbit types:")
        for e in table.entries:
            mark = "occupied" if e.occupied else "empty"
            lines.append(
                f"  {e.class_index}: dim V^H = {e.dim_fixed}  [{mark}]"
            )
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_marks(args) -> int:
    group = _load_group(args)
    tom = burnside.table_of_marks(group)
    csv_text = burnside.marks_csv(tom)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(csv_text)
    if args.format == "json":
        print(json.dumps({"labels": list(class_labels(group)),
                          "marks": [list(r) for r in tom.marks]}, sort_keys=True))
    elif not args.out:
        print(csv_text, end="")
    return 0


def cmd_mul(args) -> int:
    group = _load_group(args)
    a = burnside.parse_element(group, args.a)
    b = burnside.parse_element(group, args.b)
    product = burnside.mul(a, b)
    _emit(
        args,
        {"coeffs": list(product.coeffs), "text": burnside.format_element(product)},
        burnside.format_element(product),
    )
    return 0


def _single(values, flag: str):
    if not values or len(values) != 1:
        raise DescriptorError(f"exactly one {flag} is required")
    return values[0]


def cmd_degree(args) -> int:
    group = _load_group(args)
    rep = descriptors.load_representation(_single(args.rep, "-r/--rep"), group)
    f = descriptors.load_map(_single(args.map, "-m/--map"), rep)
    result = degree.deg_polystandard(f)
    text_lines = [f"deg = {burnside.format_element(result.value)}"]
    labels = class_labels(group)
    for row in result.per_orbit:
        text_lines.append(
            f"orbit {row.orbit_label}: class [G/{labels[row.class_index]}], "
            f"index {row.index}"
        )
    _emit(
        args,
        {
            "coeffs": list(result.value.coeffs),
            "text": burnside.format_element(result.value),
            "per_orbit": [
                {
                    "orbit": row.orbit_label,
                    "class": row.class_index,
                    "index": row.index,
                }
                for row in result.per_orbit
            ],
        },
        "\n".join(text_lines),
    )
    return 0


def cmd_product(args) -> int:
    group = _load_group(args)
    rep1_path = args.r1 or (args.rep[0] if args.rep and len(args.rep) > 0 else None)
    rep2_path = args.r2 or (args.rep[1] if args.rep and len(args.rep) > 1 else None)
    map1_path = args.m1 or (args.map[0] if args.map and len(args.map) > 0 else None)
    map2_path = args.m2 or (args.map[1] if args.map and len(args.map) > 1 else None)
    if not all([rep1_path, rep2_path, map1_path, map2_path]):
        raise DescriptorError(
            "product needs two representations and two maps "
            "(-r1/-r2/-m1/-m2, or -r and -m twice)"
        )
    rep1 = descriptors.load_representation(rep1_path, group)
    rep2 = descriptors.load_representation(rep2_path, group)
    f = descriptors.load_map(map1_path, rep1)
    g = descriptors.load_map(map2_path, rep2)
    check = degree.verify_product(f, g)
    lhs = burnside.format_element(check.lhs)
    rhs = burnside.format_element(check.rhs)
    text = "\n".join(
        [
            f"deg(f x f') = {lhs}",
            f"deg(f) * deg(f') = {rhs}",
            f"equal: {'yes' if check.equal else 'no'}",
        ]
    )
    _emit(
        args,
        {
            "lhs": {"coeffs": list(check.lhs.coeffs), "text": lhs},
            "rhs": {"coeffs": list(check.rhs.coeffs), "text": rhs},
            "equal": check.equal,
            "orbits": [
                {
                    "base": r.base_label,
                    "class": r.class_index,
                    "d_left": r.index_left,
                    "d_right": r.index_right,
                    "d_product": r.index_product,
                    "consistent": r.consistent,
                }
                for r in check.orbit_rows
            ],
        },
        text,
    )
    return 0 if check.equal else 1


def cmd_realize(args) -> int:
    group = _load_group(args)
    rep = descriptors.load_representation(_single(args.rep, "-r/--rep"), group)
    element = burnside.parse_element(group, args.element)
    f = realize.realize_element(realize.RealizationTarget(element=element, rep=rep))
    if args.out:
        descriptors.save_map(args.out, f)
    payload = descriptors.map_to_dict(f)
    payload["degree"] = burnside.format_element(element)
    _emit(
        args,
        payload,
        f"realized {burnside.format_element(element)} with {len(f.pieces)} pieces"
        + (f" -> {args.out}" if args.out else ""),
    )
    return 0


def cmd_check(args) -> int:
    group = _load_group(args)
    classes = subgroup_classes(group)
    failures = 0

    pairs = 0
    for a in classes:
        for b in classes:
            lhs = burnside.mul(
                burnside.basis_element(group, a.class_index),
                burnside.basis_element(group, b.class_index),
            )
            rhs = burnside.decompose_gset(burnside.product_gset(a, b))
            pairs += 1
            if lhs != rhs:
                failures += 1
    print(f"marks-vs-orbit oracle: {pairs} class pairs, "
          f"{'OK' if failures == 0 else f'{failures} FAILED'}")

    if args.rep:
        rep = descriptors.load_representation(args.rep[0], group)
        rng = random.Random(args.seed)
        bad = 0
        for _ in range(args.pairs):
            f = fuzz.random_polystandard_map(rep, rng)
            g = fuzz.random_polystandard_map(rep, rng)
            if not degree.verify_product(f, g).equal:
                bad += 1
        print(f"product fuzz: {args.pairs} pairs, seed {args.seed}, "
              f"{'OK' if bad == 0 else f'{bad} FAILED'}")
        failures += bad

    if failures:
        raise NonIntegralSolution(f"{failures} self-check failures")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="burneq",
        description="Burnside ring arithmetic and equivariant degrees of "
        "polystandard maps",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, rep=True, maps=False):
        p.add_argument("-g", "--group", required=True, help="group descriptor JSON")
        if rep:
            p.add_argument("-r", "--rep", action="append",
                           help="representation descriptor JSON")
        if maps:
            p.add_argument("-m", "--map", action="append", help="map descriptor JSON")
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("group", help="print subgroup classes and orbit types")
    common(p)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("marks", help="print the table of marks as CSV")
    common(p, rep=False)
    p.add_argument("-o", "--out", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_marks)

    p = sub.add_parser("mul", help="multiply two elements given in text form")
    common(p, rep=False)
    p.add_argument("-a", required=True, help='element, e.g. "1*[G/e] + 1*[G/(1 2)]"')
    p.add_argument("-b", required=True, help="element")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("degree", help="degree of a polystandard map")
    common(p, maps=True)
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("product", help="verify the product formula on two maps")
    common(p, maps=True)
    p.add_argument("-r1", help="representation of the first map")
    p.add_argument("-r2", help="representation of the second map")
    p.add_argument("-m1", help="first map")
    p.add_argument("-m2", help="second map")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("realize", help="construct a map with a prescribed degree")
    common(p)
    p.add_argument("-e", "--element", required=True, help="target element text")
    p.add_argument("-o", "--out", help="write the map descriptor here")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("check", help="run the self-check suite on a group")
    common(p)
    p.add_argument("--seed", type=int, default=0, help="fuzzing seed")
    p.add_argument("--pairs", type=int, default=25, help="number of fuzzed map pairs")
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InfeasibleCoefficient, EmptyOrbitTypeStratum) as exc:
        reason = {
            "error": type(exc).__name__,
            "reason": str(exc),
            "kind": getattr(exc, "kind", None),
            "class_index": getattr(exc, "class_index", None),
        }
        print(json.dumps(reason, sort_keys=True), file=sys.stderr)
        return 2
    except (NonIntegralSolution, InvalidAction, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except BurneqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
