"""Integer arithmetic of curves on the boundary tori of a circle-fibered piece.

Homology classes on a boundary torus are written in the basis ``([t], [phi])``
where ``[t]`` is the class of a section to the circle action and ``[phi]`` is
the class of an orbit.  The torus is oriented so that
``intersection((1, 0), (0, 1)) == +1``.

Gluing data for a singular piece is carried by a :class:`BoundaryMarking`:
the class ``gamma`` of the curve of marked points (a section-kind curve meets
every orbit once, a double-kind curve twice) together with the class of the
section's boundary on that torus.  The Dehn-Euler number of a family of
markings is

* trivial principal stabilizer::

      2 * sum_{section kind} <gamma_j, dsigma_j> + sum_{double kind} <gamma_j, dsigma_j>

* principal stabilizer of order two (all markings section-kind)::

      sum_j <gamma_j, dsigma_j>

The first sum ranges over even integers and the second over odd ones, so for
a trivial stabilizer the parity of the total equals the number of double-kind
markings mod 2.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import NamedTuple, Sequence


class TorusClass(NamedTuple):
    """Homology class ``t*[t] + phi*[phi]`` on a boundary torus."""

    t: int
    phi: int

    def __neg__(self) -> "TorusClass":
        return TorusClass(-self.t, -self.phi)

    def is_primitive(self) -> bool:
        return math.gcd(self.t, self.phi) == 1

    def is_zero(self) -> bool:
        return self.t == 0 and self.phi == 0


def intersection(x: TorusClass, y: TorusClass) -> int:
    """Algebraic intersection number of two classes, bilinear and antisymmetric."""
    return x.t * y.phi - x.phi * y.t


class MarkingKind(Enum):
    SECTION = "section"
    DOUBLE = "double"


class MarkingError(ValueError):
    """Marking data that cannot occur on a boundary torus."""


class BoundaryMarking(NamedTuple):
    kind: MarkingKind
    gamma: TorusClass
    section_boundary: TorusClass


def validate_marking(marking: BoundaryMarking) -> None:
    """Raise MarkingError unless the marking satisfies the boundary model.

    The section boundary must be a section class (1, s).  A section-kind
    marked curve meets each orbit once, so its class is (1, g); a double-kind
    curve is (2, g) and must intersect the section boundary an odd number of
    times (equivalently: the class (2, g) is primitive).
    """
    gamma, dsigma = marking.gamma, marking.section_boundary
    if dsigma.t != 1:
        raise MarkingError(
            f"section boundary must be a section class (1, s), got {tuple(dsigma)}"
        )
    if marking.kind is MarkingKind.SECTION:
        if gamma.t != 1:
            raise MarkingError(
                f"section-kind curve must meet each orbit once, got {tuple(gamma)}"
            )
    else:
        if gamma.t != 2:
            raise MarkingError(
                f"double-kind curve must meet each orbit twice, got {tuple(gamma)}"
            )
        if intersection(gamma, dsigma) % 2 == 0:
            raise MarkingError(
                "double-kind curve has even intersection with the section boundary"
            )
        # (2, odd) is automatically primitive; (2, even) was just rejected.


def dehn_euler_number(
    markings: Sequence[BoundaryMarking], stabilizer_order: int
) -> int:
    """Dehn-Euler number of the marked boundary family.

    ``stabilizer_order`` is the order of the principal stabilizer (1 or 2);
    an order-2 stabilizer forces all markings to be section-kind and uses the
    single-sum formula.
    """
    if stabilizer_order not in (1, 2):
        raise MarkingError(f"principal stabilizer order must be 1 or 2, got {stabilizer_order}")
    total = 0
    for marking in markings:
        validate_marking(marking)
        if stabilizer_order == 2 and marking.kind is not MarkingKind.SECTION:
            raise MarkingError("order-2 principal stabilizer admits only section-kind markings")
        pairing = intersection(marking.gamma, marking.section_boundary)
        if stabilizer_order == 2:
            total += pairing
        elif marking.kind is MarkingKind.SECTION:
            total += 2 * pairing
        else:
            total += pairing
    return total


def change_section(
    markings: Sequence[BoundaryMarking], rotations: Sequence[int]
) -> list[BoundaryMarking]:
    """Replace the section by one rotated r_j times over the j-th boundary.

    The rotation numbers of a section change must sum to zero (the degree of
    a circle-valued map on a disc vanishes on the boundary).  Section-kind
    intersections shift by r_j, double-kind ones by 2*r_j, and the Dehn-Euler
    number is unchanged.
    """
    if len(markings) != len(rotations):
        raise MarkingError("one rotation number per boundary component required")
    if sum(rotations) != 0:
        raise MarkingError(f"rotation numbers must sum to zero, got {sum(rotations)}")
    out = []
    for marking, r in zip(markings, rotations):
        validate_marking(marking)
        dsigma = marking.section_boundary
        out.append(marking._replace(section_boundary=TorusClass(dsigma.t, dsigma.phi + r)))
    return out


Matrix = tuple[tuple[int, int], tuple[int, int]]


def collar_change(c: int) -> Matrix:
    """Unipotent collar reparametrization [[1, c], [0, 1]] in SL(2, Z).

    Acting on row vectors in the ([t], [phi]) basis it sends the section
    class [t] to [t] + c*[phi] and fixes [phi].
    """
    return ((1, c), (0, 1))


def apply_matrix(matrix: Matrix, cls: TorusClass) -> TorusClass:
    """Row-vector action of a 2x2 integer matrix on a torus class."""
    (a, b), (c, d) = matrix
    return TorusClass(cls.t * a + cls.phi * c, cls.t * b + cls.phi * d)


def compose(m1: Matrix, m2: Matrix) -> Matrix:
    """Matrix product, so that applying m1 then m2 equals applying compose(m1, m2)."""
    (a, b), (c, d) = m1
    (e, f), (g, h) = m2
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def determinant(matrix: Matrix) -> int:
    (a, b), (c, d) = matrix
    return a * d - b * c


def with_collar(marking: BoundaryMarking, c: int) -> BoundaryMarking:
    """Reglue the boundary through a collar change; adds c*gamma.t to the pairing."""
    new_dsigma = apply_matrix(collar_change(c), marking.section_boundary)
    return marking._replace(section_boundary=new_dsigma)


def twist_boundary_class(k: int) -> BoundaryMarking:
    """Boundary marking produced by gluing with k Dehn twists.

    For k odd the marked points form a single double-kind curve and the
    pairing with the section boundary is k; for k even they form two
    sections, the pairing with one of them is k/2, and the doubled count
    contributes k again.
    """
    if k < 0:
        raise ValueError(f"twist count must be nonnegative, got {k}")
    if k % 2 == 0:
        return BoundaryMarking(
            MarkingKind.SECTION, TorusClass(1, 0), TorusClass(1, k // 2)
        )
    return BoundaryMarking(
        MarkingKind.DOUBLE, TorusClass(2, 1), TorusClass(1, (k + 1) // 2)
    )
