"""Named example registry: the sphere and the Brieskorn family.

Each entry's invariant tuple is computed, not transcribed: the stabilizer
order comes from sampled rank tests, the singular-piece type from branch
tracing, and the Dehn-Euler number from the boundary-loop pipeline.  Only
the cross-section topology (a solid torus: disc times circle) is taken from
the structure of the examples, whose orbit projections are the explicit
disc coordinates z0 resp. the projective line chart.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import geometry
from .invariants import (
    CrossSectionData,
    InvariantTuple,
    SingularComponentType,
    equivalent,
    tuple_to_dict,
    validate,
)


@dataclass(frozen=True)
class SphereExample:
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


@dataclass(frozen=True)
class BrieskornExample:
    k: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("Brieskorn exponent must be nonnegative")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


ExampleId = SphereExample | BrieskornExample

SPHERE_PLUS = SphereExample(1)
SPHERE_MINUS = SphereExample(-1)


def format_example_id(example: ExampleId) -> str:
    sign = "+" if example.sign > 0 else "-"
    if isinstance(example, SphereExample):
        return f"sphere{sign}"
    return f"brieskorn:{example.k}:{sign}"


def parse_example_id(text: str) -> ExampleId:
    """Parse 'sphere+', 'sphere-', 'brieskorn:K:+' or 'brieskorn:K:-'."""
    t = text.strip().lower()
    if t in ("sphere+", "sphere-"):
        return SphereExample(1 if t.endswith("+") else -1)
    parts = t.split(":")
    if len(parts) == 3 and parts[0] == "brieskorn" and parts[2] in ("+", "-"):
        try:
            k = int(parts[1])
        except ValueError:
            raise ValueError(f"bad Brieskorn exponent in {text!r}") from None
        return BrieskornExample(k, 1 if parts[2] == "+" else -1)
    raise ValueError(
        f"unknown example id {text!r}; expected sphere+/- or brieskorn:K:+/-"
    )


def principal_stabilizer_order(
    variety: geometry.Variety, rng: np.random.Generator, *, attempts: int = 64
) -> int:
    """Order of the principal stabilizer, certified by one rank-2 sample.

    A rotation fixing two independent vectors of R^3 is the identity, so a
    single sampled point with independent acted x- and y-blocks pins the
    principal stabilizer to the trivial group.
    """
    for _ in range(attempts):
        point = geometry.sample_point(variety, rng)
        try:
            cls = geometry.stabilizer_class(point)
        except geometry.StabilizerIndeterminate:
            continue
        if cls is geometry.StabilizerClass.TRIVIAL:
            return 1
    raise RuntimeError("no principal-orbit sample found; cannot certify the stabilizer")


# both examples fiber over a disc: genus 0, one boundary circle, no
# exceptional orbits, no Euler number
SOLID_TORUS_SECTION = CrossSectionData(
    genus=0, boundary_count=1, exceptional_orbits=(), euler_number=None
)


def invariants_of_example(example: ExampleId, *, seed: int = 0) -> InvariantTuple:
    """Compute the full invariant tuple of a named example."""
    rng = np.random.default_rng(seed)
    if isinstance(example, SphereExample):
        stabilizer = principal_stabilizer_order(geometry.Sphere(), rng)
        component = geometry.sphere_component_type()
        dehn = geometry.dehn_euler_of_sphere(example.sign)
    else:
        stabilizer = principal_stabilizer_order(geometry.Brieskorn(example.k), rng)
        component = geometry.singular_component_type(example.k)
        dehn = geometry.dehn_euler_of_example(example.k, example.sign)
    tup = InvariantTuple(
        stabilizer_order=stabilizer,
        cross_section=SOLID_TORUS_SECTION,
        singular_components=(component,),
        dehn_euler=dehn,
    )
    violations = validate(tup)
    if violations:
        raise RuntimeError(f"computed tuple is invalid: {violations}")
    return tup


def diffeomorphism_type(k: int) -> str:
    """Underlying smooth manifold of the k-th Brieskorn example."""
    return "S^5" if k % 2 == 1 else "S^2 x S^3"


@dataclass(frozen=True)
class TableEntry:
    example: BrieskornExample
    invariants: InvariantTuple
    diffeo_type: str


def simply_connected_table(k_max: int, *, seed: int = 0) -> list[TableEntry]:
    """All simply connected examples with singular orbits, up to exponent k_max.

    Entries are pairwise inequivalent except for the two k = 0 forms, whose
    Dehn-Euler numbers both vanish.
    """
    if k_max > 12:
        raise ValueError("table exponent capped at 12 to bound the runtime")
    entries = []
    for k in range(k_max + 1):
        for sign in (1, -1):
            example = BrieskornExample(k, sign)
            entries.append(
                TableEntry(
                    example=example,
                    invariants=invariants_of_example(example, seed=seed),
                    diffeo_type=diffeomorphism_type(k),
                )
            )
    return entries


def table_coincidences(entries: list[TableEntry]) -> list[tuple[str, str]]:
    """Pairs of distinct table entries with equal invariants."""
    pairs = []
    for i, left in enumerate(entries):
        for right in entries[i + 1 :]:
            if equivalent(left.invariants, right.invariants):
                pairs.append(
                    (format_example_id(left.example), format_example_id(right.example))
                )
    return pairs


def write_table_json(entries: list[TableEntry], directory: str | Path) -> list[Path]:
    """One invariant-tuple JSON file per table entry."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for entry in entries:
        sign = "plus" if entry.example.sign > 0 else "minus"
        path = directory / f"brieskorn_{entry.example.k}_{sign}.json"
        path.write_text(json.dumps(tuple_to_dict(entry.invariants), indent=2) + "\n")
        written.append(path)
    return written
