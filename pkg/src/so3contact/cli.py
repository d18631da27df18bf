"""Command-line front end.

Subcommands::

    invariants <example-id>            compute an example's invariant tuple
    compare <a> <b>                    decide equivalence of files/examples
    validate <file>                    check a tuple file's arithmetic conditions
    realize <file>                     emit a gluing plan for a valid tuple
    twist-check --k K [--eps E]        verify the twist's contact margin
    table --kmax K [--out DIR]         the simply connected example table

Example ids are ``sphere+``, ``sphere-`` or ``brieskorn:K:+`` /
``brieskorn:K:-``.  Exit status: 0 success / equivalent / valid, 1
inequivalent / invalid, 2 malformed input or numeric failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import Any

import numpy as np

from . import catalog, dehn_twist, geometry, invariants

CONVENTION_NOTES = (
    "cross-section positivity is fixed per example: x1*y2 - y1*x2 > 0 on the "
    "sphere, x2*y1 - x1*y2 > 0 on the Brieskorn varieties",
    "the orbit generator on a cross-section is the rotation generator that "
    "pairs positively with the contact form (-Z on the sphere, +Z on the "
    "Brieskorn varieties)",
    "O(2)-type boundary collars rotate at double speed; their markings are "
    "section-kind and enter the Dehn-Euler number through the single-sum rule",
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_FAILURE = 2

_NUMERIC_ERRORS = (
    geometry.ProjectionError,
    geometry.BranchTrackingError,
    geometry.StabilizerIndeterminate,
    geometry.ChartError,
    geometry.PhaseStepError,
    geometry.LoopClosureError,
)


def _metadata(args: argparse.Namespace) -> dict[str, Any]:
    return {
        "seed": args.seed,
        "samples": args.samples,
        "tol": args.tol,
        "conventions": list(CONVENTION_NOTES),
    }


def _emit(args: argparse.Namespace, payload: dict[str, Any], lines: list[str]) -> None:
    if args.format == "json":
        payload = dict(payload)
        payload["metadata"] = _metadata(args)
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
        print(f"# seed={args.seed} samples={args.samples} tol={args.tol}")
        for note in CONVENTION_NOTES:
            print(f"# note: {note}")


def _tuple_lines(t: invariants.InvariantTuple) -> list[str]:
    cs = t.cross_section
    orbits = ", ".join(f"({a},{b})" for a, b in cs.exceptional_orbits) or "-"
    euler = str(cs.euler_number) if cs.euler_number is not None else "-"
    comps = ", ".join(c.value for c in t.singular_components) or "-"
    dehn = str(t.dehn_euler) if t.dehn_euler is not None else "-"
    return [
        f"stabilizer_order   {t.stabilizer_order}",
        f"cross_section      genus {cs.genus}, boundaries {cs.boundary_count}, "
        f"orbits {orbits}, euler {euler}",
        f"singular           {comps}",
        f"dehn_euler         {dehn}",
    ]


def _load_tuple(path: str) -> invariants.InvariantTuple:
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    return invariants.loads(text)


def _resolve_operand(text: str, seed: int) -> invariants.InvariantTuple:
    """An operand is an example id or a path to a tuple file."""
    try:
        example = catalog.parse_example_id(text)
    except ValueError:
        return _load_tuple(text)
    return catalog.invariants_of_example(example, seed=seed)


def _cmd_invariants(args: argparse.Namespace) -> int:
    example = catalog.parse_example_id(args.example)
    tup = catalog.invariants_of_example(example, seed=args.seed)
    _emit(args, {"example": args.example, "invariants": invariants.tuple_to_dict(tup)},
          [f"example            {args.example}"] + _tuple_lines(tup))
    return EXIT_OK


def _cmd_compare(args: argparse.Namespace) -> int:
    left = _resolve_operand(args.left, args.seed)
    right = _resolve_operand(args.right, args.seed)
    result = invariants.equivalent(left, right)
    verdict = "equivalent" if result else "inequivalent"
    _emit(
        args,
        {
            "equivalent": result,
            "left": invariants.tuple_to_dict(invariants.normalize(left)),
            "right": invariants.tuple_to_dict(invariants.normalize(right)),
        },
        [verdict],
    )
    return EXIT_OK if result else EXIT_NEGATIVE


def _cmd_validate(args: argparse.Namespace) -> int:
    tup = _load_tuple(args.file)
    violations = invariants.validate(tup)
    lines = ["valid"] if not violations else [f"{v.code}: {v.message}" for v in violations]
    _emit(
        args,
        {
            "valid": not violations,
            "violations": [v._asdict() for v in violations],
        },
        lines,
    )
    return EXIT_OK if not violations else EXIT_NEGATIVE


def _cmd_realize(args: argparse.Namespace) -> int:
    tup = _load_tuple(args.file)
    try:
        plan = invariants.realize(tup)
    except invariants.InvalidTupleError as err:
        _emit(
            args,
            {"realizable": False,
             "violations": [v._asdict() for v in err.violations]},
            [f"{v.code}: {v.message}" for v in err.violations],
        )
        return EXIT_NEGATIVE
    gluings = [
        {"component": g.component.value, "collar": g.collar, "twists": g.twists}
        for g in plan.gluings
    ]
    recomputed = invariants.plan_dehn_euler(plan)
    lines = [
        f"base               {'closed flow-out SO(3) x_S1 R' if plan.is_closed else 'bounded Seifert piece'}",
    ]
    for i, g in enumerate(gluings):
        lines.append(
            f"boundary {i}         {g['component']}, collar {g['collar']}, twists {g['twists']}"
        )
    lines.append(f"dehn_euler_check   {recomputed if recomputed is not None else '-'}")
    _emit(
        args,
        {
            "realizable": True,
            "stabilizer_order": plan.stabilizer_order,
            "cross_section": invariants.tuple_to_dict(
                invariants.tuple_of_plan(plan)
            )["cross_section"],
            "gluings": gluings,
            "dehn_euler_check": recomputed,
        },
        lines,
    )
    return EXIT_OK


def _cmd_twist_check(args: argparse.Namespace) -> int:
    cfg = dehn_twist.twist_config(args.k, args.eps)
    margin = dehn_twist.contact_margin(cfg, args.samples)
    slope_bound = (
        dehn_twist.profile_norm(cfg.eps) * dehn_twist.BUMP_PEAK
    )
    radii = np.linspace(0.0, 1.5 * cfg.eps, args.samples)
    slope_max = max(dehn_twist.rho_prime(cfg, r) for r in radii)
    rng = np.random.default_rng(args.seed)
    defect_max = 0.0
    for _ in range(min(args.samples, 200)):
        pt = dehn_twist.random_cotangent(rng)
        v = dehn_twist.random_cotangent_tangent(pt, rng)
        defect = dehn_twist.pullback_defect(cfg, pt, v)
        defect_max = max(defect_max, defect / (1.0 + np.linalg.norm(pt.p)))
    ok = margin > 0.0
    _emit(
        args,
        {
            "k": cfg.k,
            "eps": cfg.eps,
            "contact_margin": margin,
            "profile_slope_max": slope_max,
            "profile_slope_bound": slope_bound,
            "pullback_defect_max_scaled": defect_max,
            "contact": ok,
        },
        [
            f"k                  {cfg.k}",
            f"eps                {cfg.eps:.6g}",
            f"contact margin     {margin:.6f} ({'contact' if ok else 'NOT contact'})",
            f"profile slope      {slope_max:.6g} (bound {slope_bound:.6g})",
            f"pullback defect    {defect_max:.3e} (scaled by 1 + |p|)",
        ],
    )
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_table(args: argparse.Namespace) -> int:
    entries = catalog.simply_connected_table(args.kmax, seed=args.seed)
    rows = []
    for entry in entries:
        t = entry.invariants
        rows.append(
            {
                "example": catalog.format_example_id(entry.example),
                "invariants": invariants.tuple_to_dict(t),
                "diffeo_type": entry.diffeo_type,
            }
        )
    lines = [f"{'example':<16} {'components':<12} {'dehn_euler':>10}  diffeo"]
    for entry in entries:
        t = entry.invariants
        comps = ",".join(c.value for c in t.singular_components)
        lines.append(
            f"{catalog.format_example_id(entry.example):<16} {comps:<12} "
            f"{t.dehn_euler:>10}  {entry.diffeo_type}"
        )
    coincidences = catalog.table_coincidences(entries)
    for left, right in coincidences:
        lines.append(f"coincidence: {left} ~ {right}")
    if args.out:
        written = catalog.write_table_json(entries, args.out)
        lines.append(f"wrote {len(written)} tuple file(s) to {args.out}")
    _emit(args, {"entries": rows, "coincidences": coincidences}, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument(
        "--samples", type=int, default=1000, help="sample count for sweeps (default 1000)"
    )
    common.add_argument(
        "--format", choices=("table", "json"), default="table", help="output format"
    )
    common.add_argument(
        "--tol", type=float, default=1e-9, help="reporting tolerance (default 1e-9)"
    )

    parser = argparse.ArgumentParser(
        prog="so3contact",
        description="Invariant calculus for 5-dimensional contact SO(3)-manifolds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="invariants of an example")
    p.add_argument("example", help="sphere+/- or brieskorn:K:+/-")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("compare", parents=[common], help="decide equivalence")
    p.add_argument("left", help="example id or tuple file")
    p.add_argument("right", help="example id or tuple file")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("validate", parents=[common], help="validate a tuple file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("realize", parents=[common], help="gluing plan for a tuple file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("twist-check", parents=[common], help="twist verification sweep")
    p.add_argument("--k", type=int, required=True, help="number of Dehn twists")
    p.add_argument("--eps", type=float, default=None, help="cut-off scale (default: rule)")
    p.set_defaults(func=_cmd_twist_check)

    p = sub.add_parser("table", parents=[common], help="simply connected example table")
    p.add_argument("--kmax", type=int, required=True, help="largest exponent")
    p.add_argument("--out", default=None, help="directory for per-entry JSON files")
    p.set_defaults(func=_cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except invariants.SchemaError as err:
        print(f"malformed input at {err.location}: {err}", file=sys.stderr)
        return EXIT_FAILURE
    except json.JSONDecodeError as err:
        print(f"malformed JSON (line {err.lineno}, column {err.colno}): {err.msg}",
              file=sys.stderr)
        return EXIT_FAILURE
    except FileNotFoundError as err:
        print(f"cannot read {err.filename}", file=sys.stderr)
        return EXIT_FAILURE
    except _NUMERIC_ERRORS as err:
        print(f"numeric failure: {err}", file=sys.stderr)
        return EXIT_FAILURE
    except (ValueError, invariants.InvalidTupleError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    raise SystemExit(main())
