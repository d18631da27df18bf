import numpy as np
import pytest

from so3contact import geometry as g

ALL_FORMS = [
    (g.Sphere(), g.ALPHA_PLUS),
    (g.Sphere(), g.ALPHA_MINUS),
    (g.Brieskorn(1), g.BrieskornForm(1, 1)),
    (g.Brieskorn(1), g.BrieskornForm(1, -1)),
    (g.Brieskorn(2), g.BrieskornForm(2, 1)),
    (g.Brieskorn(4), g.BrieskornForm(4, -1)),
]


def test_lie_brackets():
    xm, ym, zm = g.X_MATRIX, g.Y_MATRIX, g.Z_MATRIX
    assert np.allclose(g.bracket(xm, ym), zm)
    assert np.allclose(g.bracket(ym, zm), xm)
    assert np.allclose(g.bracket(zm, xm), ym)


def test_rodrigues_rotation():
    rot = g.rodrigues(g.LieAlgElement(0.0, 0.0, np.pi / 2))
    assert np.allclose(rot @ np.array([1.0, 0, 0]), [0.0, 1.0, 0.0], atol=1e-12)
    assert np.allclose(rot @ rot.T, np.eye(3), atol=1e-12)
    assert np.isclose(np.linalg.det(rot), 1.0)


def test_reeb_direction_pairing_is_one():
    rng = np.random.default_rng(0)
    for _ in range(20):
        p = g.sample_point(g.Sphere(), rng)
        v = np.concatenate([-p.y, p.x])  # the direction i*z
        assert np.isclose(g.eval_form(g.ALPHA_PLUS, p, v), 1.0, atol=1e-12)


def test_zero_vector_pairs_to_zero():
    p = g.AmbientPoint(g.Sphere(), np.array([1.0, 0, 0], dtype=complex))
    for form in (g.ALPHA_PLUS, g.ALPHA_MINUS):
        assert g.eval_form(form, p, np.zeros(6)) == 0.0


def test_moment_frozen_value():
    p = g.AmbientPoint(g.Sphere(), np.array([1.0, 1.0j, 0.0]) / np.sqrt(2.0))
    assert np.allclose(g.moment_map(p, g.ALPHA_PLUS), [0.0, 0.0, -1.0], atol=1e-12)


def test_moment_vanishes_on_singular_orbits():
    rng = np.random.default_rng(1)
    for _ in range(20):
        u = rng.standard_normal(3)
        u /= np.linalg.norm(u)
        p = g.AmbientPoint(g.Sphere(), np.exp(0.7j) * u)
        assert np.max(np.abs(g.moment_map(p, g.ALPHA_PLUS))) <= 1e-12


@pytest.mark.parametrize("variety, form", ALL_FORMS)
def test_moment_definition_matches_formula(variety, form):
    rng = np.random.default_rng(2)
    worst = 0.0
    for _ in range(200):
        p = g.sample_point(variety, rng)
        worst = max(
            worst,
            float(np.max(np.abs(g.moment_map_defn(p, form) - g.moment_map(p, form)))),
        )
    assert worst <= 1e-10


def test_sphere_moment_maps_agree():
    rng = np.random.default_rng(3)
    for _ in range(200):
        p = g.sample_point(g.Sphere(), rng)
        diff = g.moment_map_defn(p, g.ALPHA_PLUS) - g.moment_map_defn(p, g.ALPHA_MINUS)
        assert np.max(np.abs(diff)) <= 1e-12


def test_brieskorn_moment_sign_independent():
    rng = np.random.default_rng(4)
    for _ in range(200):
        p = g.sample_point(g.Brieskorn(3), rng)
        diff = g.moment_map_defn(p, g.BrieskornForm(3, 1)) - g.moment_map_defn(
            p, g.BrieskornForm(3, -1)
        )
        assert np.max(np.abs(diff)) <= 1e-12


@pytest.mark.parametrize("variety, form", ALL_FORMS[:3])
def test_moment_equivariance(variety, form):
    rng = np.random.default_rng(5)
    for _ in range(100):
        p = g.sample_point(variety, rng)
        elem = g.LieAlgElement(*rng.standard_normal(3))
        rot = g.rodrigues(elem)
        lhs = g.moment_map(g.group_action(rot, p), form)
        rhs = rot @ g.moment_map(p, form)
        assert np.max(np.abs(lhs - rhs)) <= 1e-9


def test_exterior_derivative_of_standard_form():
    p = g.AmbientPoint(g.Sphere(), np.array([1.0, 0, 0], dtype=complex))
    d = g.exterior_derivative_matrix(g.ALPHA_PLUS, p.real)
    assert np.allclose(d, -d.T, atol=1e-12)
    # d(alpha_+) = 2 sum dx_j ^ dy_j
    expected = np.zeros((6, 6))
    for j in range(3):
        expected[j, j + 3] = 2.0
        expected[j + 3, j] = -2.0
    assert np.allclose(d, expected, atol=1e-9)


def test_form_volume_alternates():
    rng = np.random.default_rng(6)
    p = g.sample_point(g.Sphere(), rng)
    frame = g.tangent_frame(g.Sphere(), p)
    frame[1] = frame[0]
    assert g.form_volume(g.ALPHA_PLUS, p, frame) == 0.0


def test_contact_check_rejects_degenerate_frames():
    rng = np.random.default_rng(7)
    p = g.sample_point(g.Sphere(), rng)
    frame = g.tangent_frame(g.Sphere(), p)
    frame[1] = frame[0]
    with pytest.raises(g.DegenerateFrameError):
        g.contact_check(g.ALPHA_PLUS, p, frame)


@pytest.mark.parametrize("variety, form", ALL_FORMS)
def test_contact_volume_has_uniform_sign(variety, form):
    rng = np.random.default_rng(8)
    values = []
    for _ in range(100):
        p = g.sample_point(variety, rng)
        values.append(g.contact_check(form, p, g.tangent_frame(variety, p)))
    values = np.asarray(values)
    assert np.min(np.abs(values)) > 1e-6
    assert len(set(np.sign(values))) == 1


def test_sphere_volume_value_at_axis_point():
    p = g.AmbientPoint(g.Sphere(), np.array([1.0, 0, 0], dtype=complex))
    frame = g.tangent_frame(g.Sphere(), p)
    value = g.contact_check(g.ALPHA_PLUS, p, frame)
    assert np.isclose(abs(value), 8.0, atol=1e-6)
