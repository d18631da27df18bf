import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st

from so3contact.torus_calculus import (
    BoundaryMarking,
    MarkingError,
    MarkingKind,
    TorusClass,
    apply_matrix,
    change_section,
    collar_change,
    compose,
    dehn_euler_number,
    determinant,
    intersection,
    twist_boundary_class,
    validate_marking,
    with_collar,
)

from strategies import markings, random_marking, small_ints, torus_classes


def crossing_count(x: TorusClass, y: TorusClass, offset=(0.31, 0.17)) -> int:
    """Transversal crossings of the straight loops t*x and s*y + offset on the torus.

    Independent of the algebraic pairing: enumerates actual solutions of
    t*x = s*y + offset + (m, n) with t, s in [0, 1).
    """
    a, b = x
    c, d = y
    matrix = np.array([[a, -c], [b, -d]], dtype=float)
    if abs(np.linalg.det(matrix)) < 1e-9:
        raise ValueError("parallel classes")
    bound = abs(a) + abs(b) + abs(c) + abs(d) + 2
    count = 0
    for m in range(-bound, bound + 1):
        for n in range(-bound, bound + 1):
            t, s = np.linalg.solve(matrix, np.array(offset, dtype=float) + (m, n))
            if 0.0 <= t < 1.0 and 0.0 <= s < 1.0:
                count += 1
    return count


def test_intersection_basis_pair():
    assert intersection(TorusClass(1, 0), TorusClass(0, 1)) == 1


@given(torus_classes())
def test_intersection_self_vanishes(x):
    assert intersection(x, x) == 0


def test_intersection_matches_crossing_count():
    x, y = TorusClass(2, 1), TorusClass(1, 3)
    assert intersection(x, y) == 5
    assert crossing_count(x, y) == 5


@pytest.mark.parametrize(
    "x, y",
    [
        (TorusClass(1, 0), TorusClass(0, 1)),
        (TorusClass(1, 2), TorusClass(2, 1)),
        (TorusClass(3, 1), TorusClass(1, 1)),
        (TorusClass(2, 1), TorusClass(5, 3)),
        (TorusClass(1, 4), TorusClass(2, 3)),
    ],
)
def test_intersection_magnitude_counts_crossings(x, y):
    assert crossing_count(x, y) == abs(intersection(x, y))


@given(torus_classes(), torus_classes())
def test_intersection_antisymmetric(x, y):
    assert intersection(x, y) == -intersection(y, x)


@given(torus_classes(), torus_classes(), torus_classes(), small_ints, small_ints)
def test_intersection_bilinear(x, y, z, a, b):
    combo = TorusClass(a * x.t + b * y.t, a * x.phi + b * y.phi)
    assert intersection(combo, z) == a * intersection(x, z) + b * intersection(y, z)


def test_dehn_euler_single_double_curve():
    # one double-kind boundary with pairing 1 and trivial stabilizer
    marking = BoundaryMarking(MarkingKind.DOUBLE, TorusClass(2, 1), TorusClass(1, 1))
    assert intersection(marking.gamma, marking.section_boundary) == 1
    assert dehn_euler_number([marking], 1) == 1


def test_dehn_euler_section_curve_doubles():
    marking = BoundaryMarking(MarkingKind.SECTION, TorusClass(1, 0), TorusClass(1, 2))
    assert dehn_euler_number([marking], 1) == 4


def test_dehn_euler_empty():
    assert dehn_euler_number([], 1) == 0
    assert dehn_euler_number([], 2) == 0


def test_dehn_euler_order_two_single_sum():
    marking = BoundaryMarking(MarkingKind.SECTION, TorusClass(1, 0), TorusClass(1, 3))
    assert dehn_euler_number([marking], 2) == 3


def test_double_curve_even_intersection_rejected():
    marking = BoundaryMarking(MarkingKind.DOUBLE, TorusClass(2, 2), TorusClass(1, 1))
    with pytest.raises(MarkingError):
        dehn_euler_number([marking], 1)


def test_order_two_rejects_double_curves():
    marking = BoundaryMarking(MarkingKind.DOUBLE, TorusClass(2, 1), TorusClass(1, 1))
    with pytest.raises(MarkingError):
        dehn_euler_number([marking], 2)


def test_bad_stabilizer_order_rejected():
    with pytest.raises(MarkingError):
        dehn_euler_number([], 3)


def test_marking_shape_validation():
    with pytest.raises(MarkingError):
        validate_marking(
            BoundaryMarking(MarkingKind.SECTION, TorusClass(1, 0), TorusClass(2, 1))
        )
    with pytest.raises(MarkingError):
        validate_marking(
            BoundaryMarking(MarkingKind.SECTION, TorusClass(2, 1), TorusClass(1, 0))
        )
    with pytest.raises(MarkingError):
        validate_marking(
            BoundaryMarking(MarkingKind.DOUBLE, TorusClass(1, 0), TorusClass(1, 0))
        )


def test_change_section_cancels_on_two_boundaries():
    ms = [
        BoundaryMarking(MarkingKind.SECTION, TorusClass(1, 0), TorusClass(1, 1)),
        BoundaryMarking(MarkingKind.SECTION, TorusClass(1, 2), TorusClass(1, 0)),
    ]
    before = dehn_euler_number(ms, 1)
    after = dehn_euler_number(change_section(ms, [1, -1]), 1)
    assert before == after


def test_change_section_zero_rotations_identity():
    ms = [random_marking(np.random.default_rng(0)) for _ in range(3)]
    assert change_section(ms, [0, 0, 0]) == ms


def test_change_section_shifts_by_kind():
    section = BoundaryMarking(MarkingKind.SECTION, TorusClass(1, 0), TorusClass(1, 0))
    double = BoundaryMarking(MarkingKind.DOUBLE, TorusClass(2, 1), TorusClass(1, 1))
    shifted = change_section([section, double], [2, -2])
    pair = lambda m: intersection(m.gamma, m.section_boundary)
    assert pair(shifted[0]) - pair(section) == 2
    assert pair(shifted[1]) - pair(double) == -4


def test_change_section_rejects_nonzero_sum():
    ms = [BoundaryMarking(MarkingKind.SECTION, TorusClass(1, 0), TorusClass(1, 0))]
    with pytest.raises(MarkingError):
        change_section(ms, [1])
    with pytest.raises(MarkingError):
        change_section(ms, [])


@given(
    st.lists(markings, min_size=1, max_size=5),
    st.data(),
    st.sampled_from([1, 2]),
)
def test_change_section_preserves_dehn_euler(ms, data, order):
    if order == 2:
        ms = [m._replace(kind=MarkingKind.SECTION, gamma=TorusClass(1, m.gamma.phi)) for m in ms]
    rotations = [
        data.draw(st.integers(min_value=-5, max_value=5)) for _ in ms[:-1]
    ]
    rotations.append(-sum(rotations))
    before = dehn_euler_number(ms, order)
    assert dehn_euler_number(change_section(ms, rotations), order) == before


@given(st.lists(markings, min_size=0, max_size=5))
def test_dehn_euler_parity_counts_double_curves(ms):
    n = dehn_euler_number(ms, 1)
    doubles = sum(1 for m in ms if m.kind is MarkingKind.DOUBLE)
    assert n % 2 == doubles % 2


def test_collar_identity():
    assert collar_change(0) == ((1, 0), (0, 1))
    cls = TorusClass(3, -2)
    assert apply_matrix(collar_change(0), cls) == cls


def test_collar_action_on_section_class():
    assert apply_matrix(collar_change(2), TorusClass(1, 0)) == TorusClass(1, 2)


@pytest.mark.parametrize("c", range(-10, 11))
def test_collar_unimodular(c):
    assert determinant(collar_change(c)) == 1


@given(small_ints, small_ints, torus_classes())
def test_collar_composition(c1, c2, cls):
    assert compose(collar_change(c1), collar_change(c2)) == collar_change(c1 + c2)
    once = apply_matrix(collar_change(c2), apply_matrix(collar_change(c1), cls))
    assert once == apply_matrix(collar_change(c1 + c2), cls)


@given(markings, small_ints)
def test_collar_adds_twice_c_for_trivial_stabilizer(marking, c):
    before = dehn_euler_number([marking], 1)
    after = dehn_euler_number([with_collar(marking, c)], 1)
    assert after - before == 2 * c


def test_twist_boundary_class_odd():
    marking = twist_boundary_class(1)
    assert marking.kind is MarkingKind.DOUBLE
    assert dehn_euler_number([marking], 1) == 1


def test_twist_boundary_class_even():
    marking = twist_boundary_class(4)
    assert marking.kind is MarkingKind.SECTION
    assert intersection(marking.gamma, marking.section_boundary) == 2
    assert dehn_euler_number([marking], 1) == 4


def test_twist_boundary_class_zero():
    assert dehn_euler_number([twist_boundary_class(0)], 1) == 0


@pytest.mark.parametrize("k", range(0, 21))
def test_twist_boundary_contribution_matches_count(k):
    marking = twist_boundary_class(k)
    expected_kind = MarkingKind.DOUBLE if k % 2 else MarkingKind.SECTION
    assert marking.kind is expected_kind
    assert dehn_euler_number([marking], 1) == k


def test_twist_boundary_rejects_negative():
    with pytest.raises(ValueError):
        twist_boundary_class(-1)
