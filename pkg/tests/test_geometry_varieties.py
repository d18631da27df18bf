import numpy as np
import pytest

from so3contact import geometry as g


def test_project_fixes_points_already_on_the_sphere():
    z = np.array([1.0, 1.0j, 0.0]) / np.sqrt(2.0)
    p = g.project_to_variety(z, g.Sphere())
    assert np.allclose(p.z, z, atol=1e-10)


def test_project_scaled_guess_onto_first_brieskorn():
    guess = 1.3 * np.array([1.0, 1.0j, 0.0, 0.0])
    p = g.project_to_variety(guess, g.Brieskorn(1))
    residual = np.max(np.abs(g.constraints(g.Brieskorn(1), p.real)))
    assert residual <= 1e-12
    assert abs(np.linalg.norm(p.z) ** 2 - 2.0) <= 1e-12


@pytest.mark.parametrize("variety", [g.Sphere(), g.Brieskorn(2), g.Brieskorn(5)])
def test_projection_converges_for_most_gaussian_guesses(variety):
    rng = np.random.default_rng(11)
    total, ok = 500, 0
    for _ in range(total):
        guess = rng.standard_normal(variety.ncoords) + 1j * rng.standard_normal(
            variety.ncoords
        )
        if not 0.1 <= np.linalg.norm(guess) <= 10.0:
            continue
        try:
            g.project_to_variety(guess, variety)
            ok += 1
        except g.ProjectionError:
            pass
    assert ok >= 0.95 * total


def test_projection_basin_guard():
    with pytest.raises(ValueError):
        g.project_to_variety(np.array([1e-3, 0, 0], dtype=complex), g.Sphere())
    with pytest.raises(ValueError):
        g.project_to_variety(np.array([20.0, 0, 0], dtype=complex), g.Sphere())


def test_ambient_point_rejects_off_variety_data():
    with pytest.raises(ValueError):
        g.AmbientPoint(g.Sphere(), np.array([1.0, 1.0, 0.0]))


def test_generator_of_z_rotation():
    p = g.AmbientPoint(g.Sphere(), np.array([1.0, 0.0, 0.0], dtype=complex))
    v = g.infinitesimal_generator(p, g.Z)
    assert np.allclose(v, [0.0, 1.0, 0.0, 0.0, 0.0, 0.0])


def test_generator_vanishes_at_invariant_point():
    p = g.AmbientPoint(g.Sphere(), np.array([1.0, 0.0, 0.0], dtype=complex))
    assert np.allclose(g.infinitesimal_generator(p, g.X), 0.0)


def test_generator_fixes_z0_on_brieskorn():
    rng = np.random.default_rng(1)
    p = g.sample_point(g.Brieskorn(3), rng)
    for elem in g.BASIS:
        v = g.infinitesimal_generator(p, elem)
        assert v[0] == 0.0 and v[4] == 0.0


@pytest.mark.parametrize("variety", [g.Sphere(), g.Brieskorn(1), g.Brieskorn(4)])
def test_generators_are_tangent(variety):
    rng = np.random.default_rng(2)
    worst = 0.0
    for _ in range(300):
        p = g.sample_point(variety, rng)
        for elem in g.BASIS:
            v = g.infinitesimal_generator(p, elem)
            worst = max(worst, g.tangent_residual(variety, p, v))
    assert worst <= 1e-10


def test_random_tangent_is_tangent():
    rng = np.random.default_rng(3)
    variety = g.Brieskorn(2)
    p = g.sample_point(variety, rng)
    for _ in range(20):
        v = g.random_tangent(variety, p, rng)
        assert g.tangent_residual(variety, p, v) <= 1e-8


@pytest.mark.parametrize("variety", [g.Sphere(), g.Brieskorn(3)])
def test_tangent_frame_is_orthonormal_and_tangent(variety):
    rng = np.random.default_rng(4)
    p = g.sample_point(variety, rng)
    frame = g.tangent_frame(variety, p)
    assert frame.shape == (5, 2 * variety.ncoords)
    assert np.allclose(frame @ frame.T, np.eye(5), atol=1e-10)
    for row in frame:
        assert g.tangent_residual(variety, p, row) <= 1e-8


def test_tangent_frame_orientation_is_ambient():
    rng = np.random.default_rng(5)
    for variety in (g.Sphere(), g.Brieskorn(2)):
        p = g.sample_point(variety, rng)
        frame = g.tangent_frame(variety, p)
        square = np.vstack([g.constraint_gradients(variety, p.real), frame])
        assert np.linalg.det(square) > 0


def test_group_action_stays_on_variety():
    rng = np.random.default_rng(6)
    rot = g.rodrigues(g.LieAlgElement(0.3, -1.1, 0.7))
    for variety in (g.Sphere(), g.Brieskorn(4)):
        p = g.sample_point(variety, rng)
        q = g.group_action(rot, p)  # AmbientPoint validates the constraints
        if isinstance(variety, g.Brieskorn):
            assert q.z[0] == p.z[0]
