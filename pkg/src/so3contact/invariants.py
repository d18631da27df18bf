"""Classifying data of closed 5-dimensional contact SO(3)-manifolds.

A manifold is described by an :class:`InvariantTuple`: the order of its
principal stabilizer, Seifert-type data of (the closure of) its
cross-section, the multiset of singular-piece types, and, when singular
pieces are present, the integer Dehn-Euler number.  Two manifolds are
equivalent exactly when their tuples agree after normalization.

Validity is a list of arithmetic conditions, checked by :func:`validate`
and returned as values rather than raised, so a front end can report all
of them at once:

* a nonempty singular list forces stabilizer order 1 or 2,
* order 2 allows only S^1 x RP^2 pieces, order 1 only the two S^2-bundles,
* with trivial stabilizer the Dehn-Euler number has the parity of the
  number of twisted pieces,
* a closed cross-section carries a nonzero rational Euler number and no
  Dehn-Euler number.

Exceptional orbit data (alpha, beta) is meaningful modulo alpha;
:func:`normalize` reduces beta into [1, alpha) and sorts everything.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Any, NamedTuple

from . import torus_calculus as tc


class SingularComponentType(Enum):
    RP2_BUNDLE = "RP2Bundle"  # S^1 x RP^2, stabilizer O(2)
    E_TRIV = "ETriv"          # trivial S^2-bundle over S^1
    E_TWIST = "ETwist"        # (R x S^2) / (t, p) ~ (t + 1, -p)


_COMPONENT_ORDER = {
    SingularComponentType.RP2_BUNDLE: 0,
    SingularComponentType.E_TRIV: 1,
    SingularComponentType.E_TWIST: 2,
}


@dataclass(frozen=True)
class CrossSectionData:
    """Seifert data of the closure of the cross-section.

    ``exceptional_orbits`` holds pairs (alpha, beta) with alpha >= 2 and
    gcd(alpha, beta) = 1; the orbit surface has the given genus and
    ``boundary_count`` boundary circles.  ``euler_number`` is present
    exactly for closed cross-sections.
    """

    genus: int
    boundary_count: int
    exceptional_orbits: tuple[tuple[int, int], ...] = ()
    euler_number: Fraction | None = None


@dataclass(frozen=True)
class InvariantTuple:
    stabilizer_order: int
    cross_section: CrossSectionData
    singular_components: tuple[SingularComponentType, ...] = ()
    dehn_euler: int | None = None


class Violation(NamedTuple):
    code: str
    message: str


class InvalidTupleError(ValueError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(f"{v.code}: {v.message}" for v in violations))


def validate(t: InvariantTuple) -> list[Violation]:
    """Return every violated condition (empty list = valid tuple)."""
    out: list[Violation] = []
    cs = t.cross_section
    if t.stabilizer_order < 1:
        out.append(Violation("stabilizer-range", f"stabilizer order {t.stabilizer_order} < 1"))
    if cs.genus < 0:
        out.append(Violation("genus-range", f"genus {cs.genus} < 0"))
    if cs.boundary_count < 0:
        out.append(Violation("boundary-range", f"boundary count {cs.boundary_count} < 0"))
    for alpha, beta in cs.exceptional_orbits:
        if alpha < 2:
            out.append(Violation("orbit-alpha", f"orbit pair ({alpha}, {beta}) needs alpha >= 2"))
        elif gcd(alpha, beta) != 1:
            out.append(Violation("orbit-coprime", f"orbit pair ({alpha}, {beta}) is not coprime"))
    n_comp = len(t.singular_components)
    if cs.boundary_count != n_comp:
        out.append(
            Violation(
                "boundary-mismatch",
                f"{cs.boundary_count} boundary circles vs {n_comp} singular components",
            )
        )
    closed = cs.boundary_count == 0
    if closed and cs.euler_number is None:
        out.append(Violation("euler-missing", "closed cross-section needs an Euler number"))
    if closed and cs.euler_number is not None and cs.euler_number == 0:
        out.append(Violation("euler-zero", "closed cross-section needs a nonzero Euler number"))
    if not closed and cs.euler_number is not None:
        out.append(
            Violation("euler-unexpected", "bounded cross-section carries no Euler number")
        )
    if n_comp == 0 and t.dehn_euler is not None:
        out.append(Violation("dehn-unexpected", "no singular components, so no Dehn-Euler number"))
    if n_comp > 0:
        if t.dehn_euler is None:
            out.append(Violation("dehn-missing", "singular components need a Dehn-Euler number"))
        if t.stabilizer_order not in (1, 2):
            out.append(
                Violation(
                    "singular-stabilizer",
                    f"stabilizer order {t.stabilizer_order} admits no singular orbits",
                )
            )
        elif t.stabilizer_order == 2:
            if any(c is not SingularComponentType.RP2_BUNDLE for c in t.singular_components):
                out.append(
                    Violation(
                        "component-kind",
                        "order-2 stabilizer allows only S^1 x RP^2 components",
                    )
                )
        else:
            if any(c is SingularComponentType.RP2_BUNDLE for c in t.singular_components):
                out.append(
                    Violation(
                        "component-kind",
                        "trivial stabilizer allows only the two S^2-bundle components",
                    )
                )
            n_twist = sum(
                1 for c in t.singular_components if c is SingularComponentType.E_TWIST
            )
            if t.dehn_euler is not None and (t.dehn_euler - n_twist) % 2 != 0:
                out.append(
                    Violation(
                        "dehn-parity",
                        f"Dehn-Euler number {t.dehn_euler} must have the parity of the "
                        f"{n_twist} twisted component(s)",
                    )
                )
    return out


def _require_valid(t: InvariantTuple) -> None:
    violations = validate(t)
    if violations:
        raise InvalidTupleError(violations)


def normalize(t: InvariantTuple) -> InvariantTuple:
    """Canonical form: beta reduced mod alpha into [1, alpha), everything sorted."""
    _require_valid(t)
    orbits = tuple(sorted((alpha, beta % alpha) for alpha, beta in t.cross_section.exceptional_orbits))
    components = tuple(sorted(t.singular_components, key=_COMPONENT_ORDER.__getitem__))
    return replace(
        t,
        cross_section=replace(t.cross_section, exceptional_orbits=orbits),
        singular_components=components,
    )


def equivalent(a: InvariantTuple, b: InvariantTuple) -> bool:
    """Equivariant-contactomorphism test: equality of normalized tuples."""
    return normalize(a) == normalize(b)


@dataclass(frozen=True)
class BoundaryGluing:
    component: SingularComponentType
    collar: int  # c in the collar change [[1, c], [0, 1]]
    twists: int  # number of Dehn twists glued in


@dataclass(frozen=True)
class GluingPlan:
    """Symbolic construction plan: a Seifert piece plus one gluing per boundary."""

    stabilizer_order: int
    cross_section: CrossSectionData
    gluings: tuple[BoundaryGluing, ...] = ()

    @property
    def is_closed(self) -> bool:
        return not self.gluings


def plan_markings(plan: GluingPlan) -> list[tc.BoundaryMarking]:
    """Boundary markings realized by the plan's collar changes and twists."""
    markings = []
    for gluing in plan.gluings:
        if gluing.component is SingularComponentType.RP2_BUNDLE:
            if gluing.twists != 0:
                raise ValueError("RP^2-bundle gluings are realized through collar changes only")
            base = tc.BoundaryMarking(
                tc.MarkingKind.SECTION, tc.TorusClass(1, 0), tc.TorusClass(1, 0)
            )
        else:
            base = tc.twist_boundary_class(gluing.twists)
        markings.append(tc.with_collar(base, gluing.collar))
    return markings


def plan_dehn_euler(plan: GluingPlan) -> int | None:
    if plan.is_closed:
        return None
    return tc.dehn_euler_number(plan_markings(plan), plan.stabilizer_order)


def realize(t: InvariantTuple) -> GluingPlan:
    """Construction plan for a valid tuple.

    Twisted pieces receive one Dehn twist each (odd contribution), trivial
    pieces none, and the even remainder of the Dehn-Euler number is absorbed
    by a collar change on the first boundary.  With an order-2 stabilizer a
    single collar change realizes any integer directly.
    """
    _require_valid(t)
    t = normalize(t)
    components = t.singular_components
    if not components:
        return GluingPlan(t.stabilizer_order, t.cross_section, ())
    assert t.dehn_euler is not None
    if t.stabilizer_order == 2:
        gluings = [BoundaryGluing(c, 0, 0) for c in components]
        gluings[0] = replace(gluings[0], collar=t.dehn_euler)
    else:
        gluings = [
            BoundaryGluing(c, 0, 1 if c is SingularComponentType.E_TWIST else 0)
            for c in components
        ]
        remainder = t.dehn_euler - sum(g.twists for g in gluings)
        # remainder is even by the parity condition; a collar change adds
        # 2c regardless of the marking kind.
        gluings[0] = replace(gluings[0], collar=remainder // 2)
    plan = GluingPlan(t.stabilizer_order, t.cross_section, tuple(gluings))
    assert plan_dehn_euler(plan) == t.dehn_euler
    return plan


def tuple_of_plan(plan: GluingPlan) -> InvariantTuple:
    """Invariant tuple of the manifold a plan constructs."""
    return InvariantTuple(
        stabilizer_order=plan.stabilizer_order,
        cross_section=plan.cross_section,
        singular_components=tuple(g.component for g in plan.gluings),
        dehn_euler=plan_dehn_euler(plan),
    )


# --- JSON wire format ------------------------------------------------------
#
# {"stabilizer_order": int,
#  "cross_section": {"genus": int, "boundary_count": int,
#                    "exceptional_orbits": [[a, b], ...],
#                    "euler_number": [num, den] | null},
#  "singular_components": ["ETriv" | "ETwist" | "RP2Bundle", ...],
#  "dehn_euler": int | null}
#
# Field order is irrelevant; unknown fields are rejected.


class SchemaError(ValueError):
    def __init__(self, location: str, message: str):
        self.location = location
        super().__init__(f"{location}: {message}")


def _expect_int(value: Any, location: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(location, f"expected an integer, got {value!r}")
    return value


def tuple_to_dict(t: InvariantTuple) -> dict[str, Any]:
    cs = t.cross_section
    euler = None
    if cs.euler_number is not None:
        euler = [cs.euler_number.numerator, cs.euler_number.denominator]
    return {
        "stabilizer_order": t.stabilizer_order,
        "cross_section": {
            "genus": cs.genus,
            "boundary_count": cs.boundary_count,
            "exceptional_orbits": [list(pair) for pair in cs.exceptional_orbits],
            "euler_number": euler,
        },
        "singular_components": [c.value for c in t.singular_components],
        "dehn_euler": t.dehn_euler,
    }


_TUPLE_KEYS = {"stabilizer_order", "cross_section", "singular_components", "dehn_euler"}
_CS_KEYS = {"genus", "boundary_count", "exceptional_orbits", "euler_number"}


def tuple_from_dict(data: Any) -> InvariantTuple:
    if not isinstance(data, dict):
        raise SchemaError("$", "expected a JSON object")
    unknown = set(data) - _TUPLE_KEYS
    if unknown:
        raise SchemaError("$", f"unknown field(s) {sorted(unknown)}")
    missing = _TUPLE_KEYS - set(data)
    if missing:
        raise SchemaError("$", f"missing field(s) {sorted(missing)}")

    cs_data = data["cross_section"]
    if not isinstance(cs_data, dict):
        raise SchemaError("$.cross_section", "expected a JSON object")
    unknown = set(cs_data) - _CS_KEYS
    if unknown:
        raise SchemaError("$.cross_section", f"unknown field(s) {sorted(unknown)}")
    missing = _CS_KEYS - set(cs_data)
    if missing:
        raise SchemaError("$.cross_section", f"missing field(s) {sorted(missing)}")

    orbits_data = cs_data["exceptional_orbits"]
    if not isinstance(orbits_data, list):
        raise SchemaError("$.cross_section.exceptional_orbits", "expected a list of pairs")
    orbits = []
    for i, pair in enumerate(orbits_data):
        loc = f"$.cross_section.exceptional_orbits[{i}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError(loc, "expected a pair [alpha, beta]")
        orbits.append((_expect_int(pair[0], loc), _expect_int(pair[1], loc)))

    euler_data = cs_data["euler_number"]
    euler: Fraction | None = None
    if euler_data is not None:
        loc = "$.cross_section.euler_number"
        if not isinstance(euler_data, list) or len(euler_data) != 2:
            raise SchemaError(loc, "expected null or a pair [numerator, denominator]")
        num = _expect_int(euler_data[0], loc)
        den = _expect_int(euler_data[1], loc)
        if den == 0:
            raise SchemaError(loc, "denominator must be nonzero")
        euler = Fraction(num, den)

    comp_data = data["singular_components"]
    if not isinstance(comp_data, list):
        raise SchemaError("$.singular_components", "expected a list of component names")
    components = []
    for i, name in enumerate(comp_data):
        try:
            components.append(SingularComponentType(name))
        except ValueError:
            raise SchemaError(
                f"$.singular_components[{i}]",
                f"unknown component type {name!r}",
            ) from None

    dehn = data["dehn_euler"]
    if dehn is not None:
        dehn = _expect_int(dehn, "$.dehn_euler")

    return InvariantTuple(
        stabilizer_order=_expect_int(data["stabilizer_order"], "$.stabilizer_order"),
        cross_section=CrossSectionData(
            genus=_expect_int(cs_data["genus"], "$.cross_section.genus"),
            boundary_count=_expect_int(
                cs_data["boundary_count"], "$.cross_section.boundary_count"
            ),
            exceptional_orbits=tuple(orbits),
            euler_number=euler,
        ),
        singular_components=tuple(components),
        dehn_euler=dehn,
    )


def dumps(t: InvariantTuple, **kwargs: Any) -> str:
    kwargs.setdefault("indent", 2)
    kwargs.setdefault("sort_keys", True)
    return json.dumps(tuple_to_dict(t), **kwargs)


def loads(text: str) -> InvariantTuple:
    return tuple_from_dict(json.loads(text))
