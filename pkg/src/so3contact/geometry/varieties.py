"""The two ambient varieties and their numerical plumbing.

``Sphere`` is the unit sphere in C^3 with the linear SO(3)-action on all
three complex coordinates.  ``Brieskorn(k)`` is the intersection of the
radius-sqrt(2) sphere in C^4 with the zero set of

    f(z0, z1, z2, z3) = z0^k + z1^2 + z2^2 + z3^2,

with SO(3) fixing z0 and rotating (z1, z2, z3).  Points are stored as
complex vectors; the associated real vector is [x | y] with z = x + i y.
Constraint residuals of a valid point stay below 1e-10, Newton projection
targets 1e-12.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .lie import LieAlgElement


@dataclass(frozen=True)
class Sphere:
    """Unit 5-sphere in C^3."""

    @property
    def ncoords(self) -> int:
        return 3

    @property
    def acted(self) -> slice:
        return slice(0, 3)


@dataclass(frozen=True)
class Brieskorn:
    """W^5_k: radius-sqrt(2) 7-sphere in C^4 cut by z0^k + z1^2 + z2^2 + z3^2."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError(f"Brieskorn exponent must be nonnegative, got {self.k}")

    @property
    def ncoords(self) -> int:
        return 4

    @property
    def acted(self) -> slice:
        return slice(1, 4)


Variety = Sphere | Brieskorn

POINT_TOL = 1e-10
PROJECTION_TOL = 1e-12


class ProjectionError(RuntimeError):
    """Newton projection failed to converge; resample and retry."""


def split_real(w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n = w.size // 2
    return w[:n], w[n:]


def to_real(z: np.ndarray) -> np.ndarray:
    return np.concatenate([z.real, z.imag])


def to_complex(w: np.ndarray) -> np.ndarray:
    x, y = split_real(w)
    return x + 1j * y


def constraints(variety: Variety, w: np.ndarray) -> np.ndarray:
    """Real residuals of the defining equations at the real vector w."""
    x, y = split_real(w)
    if isinstance(variety, Sphere):
        return np.array([x @ x + y @ y - 1.0])
    z = x + 1j * y
    f = z[0] ** variety.k + z[1] ** 2 + z[2] ** 2 + z[3] ** 2
    return np.array([x @ x + y @ y - 2.0, f.real, f.imag])


def constraint_gradients(variety: Variety, w: np.ndarray) -> np.ndarray:
    """Rows: gradients of the constraints with respect to [x | y]."""
    x, y = split_real(w)
    norm_grad = 2.0 * np.concatenate([x, y])
    if isinstance(variety, Sphere):
        return norm_grad[np.newaxis, :]
    z = x + 1j * y
    # holomorphic derivative of f; Cauchy-Riemann gives the real gradients
    df = np.zeros(4, dtype=complex)
    if variety.k > 0:
        df[0] = variety.k * z[0] ** (variety.k - 1)
    df[1:] = 2.0 * z[1:]
    re_grad = np.concatenate([df.real, -df.imag])
    im_grad = np.concatenate([df.imag, df.real])
    return np.vstack([norm_grad, re_grad, im_grad])


@dataclass(frozen=True, eq=False)
class AmbientPoint:
    """Point on one of the varieties, validated on construction."""

    variety: Variety
    z: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        z = np.asarray(self.z, dtype=complex)
        if z.shape != (self.variety.ncoords,):
            raise ValueError(f"expected {self.variety.ncoords} complex coordinates")
        object.__setattr__(self, "z", z)
        residual = np.max(np.abs(constraints(self.variety, self.real)))
        if residual > POINT_TOL:
            raise ValueError(f"point misses the variety by {residual:.3e}")

    @property
    def x(self) -> np.ndarray:
        return self.z.real

    @property
    def y(self) -> np.ndarray:
        return self.z.imag

    @property
    def real(self) -> np.ndarray:
        return to_real(self.z)

    @property
    def acted_z(self) -> np.ndarray:
        return self.z[self.variety.acted]

    @property
    def acted_x(self) -> np.ndarray:
        return self.acted_z.real

    @property
    def acted_y(self) -> np.ndarray:
        return self.acted_z.imag


def from_real(variety: Variety, w: np.ndarray) -> AmbientPoint:
    return AmbientPoint(variety, to_complex(np.asarray(w, dtype=float)))


def project_to_variety(
    guess: np.ndarray,
    variety: Variety,
    *,
    tol: float = PROJECTION_TOL,
    max_iter: int = 50,
) -> AmbientPoint:
    """Newton-project an ambient guess onto the variety.

    Uses minimal-norm Newton steps on the real constraint system.  The guess
    must lie in the projection basin (norm between 0.1 and 10); failure to
    converge raises :class:`ProjectionError` as a resample signal.
    """
    z = np.asarray(guess, dtype=complex)
    norm = float(np.linalg.norm(z))
    if not 0.1 <= norm <= 10.0:
        raise ValueError(f"guess norm {norm:.3g} outside the projection basin [0.1, 10]")
    w = to_real(z)
    for _ in range(max_iter):
        g = constraints(variety, w)
        if np.max(np.abs(g)) <= tol:
            return from_real(variety, w)
        jac = constraint_gradients(variety, w)
        step, *_ = np.linalg.lstsq(jac, -g, rcond=None)
        w = w + step
    raise ProjectionError(
        f"no convergence after {max_iter} Newton iterations "
        f"(residual {np.max(np.abs(constraints(variety, w))):.3e})"
    )


def sample_point(
    variety: Variety, rng: np.random.Generator, *, max_attempts: int = 100
) -> AmbientPoint:
    """Draw a Gaussian ambient guess and project it onto the variety."""
    n = variety.ncoords
    for _ in range(max_attempts):
        guess = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        if not 0.1 <= np.linalg.norm(guess) <= 10.0:
            continue
        try:
            return project_to_variety(guess, variety)
        except ProjectionError:
            continue
    raise ProjectionError(f"sampling failed after {max_attempts} attempts")


def tangent_residual(variety: Variety, point: AmbientPoint, v: np.ndarray) -> float:
    """Largest pairing of v with a constraint gradient (0 for tangent vectors)."""
    jac = constraint_gradients(variety, point.real)
    return float(np.max(np.abs(jac @ v)))


def random_tangent(
    variety: Variety, point: AmbientPoint, rng: np.random.Generator
) -> np.ndarray:
    """Gaussian tangent vector at the point (orthogonal to all constraint gradients)."""
    jac = constraint_gradients(variety, point.real)
    v = rng.standard_normal(2 * variety.ncoords)
    lam, *_ = np.linalg.lstsq(jac @ jac.T, jac @ v, rcond=None)
    return v - jac.T @ lam


def tangent_frame(variety: Variety, point: AmbientPoint) -> np.ndarray:
    """Oriented orthonormal basis of the tangent space, shape (5, 2n).

    The orientation convention is ambient: the constraint gradients followed
    by the frame form a positively oriented basis of R^{2n}.
    """
    jac = constraint_gradients(variety, point.real)
    _, s, vt = np.linalg.svd(jac)
    if s[-1] < 1e-8:
        raise ProjectionError("degenerate constraint gradients; cannot build a frame")
    frame = vt[jac.shape[0]:]
    square = np.vstack([jac, frame])
    if np.linalg.det(square) < 0:
        frame = frame.copy()
        frame[[0, 1]] = frame[[1, 0]]
    return frame


def infinitesimal_generator(point: AmbientPoint, element: LieAlgElement) -> np.ndarray:
    """Velocity of the rotation flow of the element at the point, as a real vector.

    SO(3) rotates the acted complex block (all of C^3 on the sphere, the last
    three coordinates on a Brieskorn variety) and fixes the rest, so the
    generator rotates x- and y-parts of the acted block simultaneously.
    """
    n = point.variety.ncoords
    acted = point.variety.acted
    mat = element.matrix()
    v = np.zeros(2 * n)
    v[:n][acted] = mat @ point.acted_x
    v[n:][acted] = mat @ point.acted_y
    return v


def group_action(g: np.ndarray, point: AmbientPoint) -> AmbientPoint:
    """Apply a rotation matrix to the acted block of the point."""
    z = point.z.copy()
    acted = point.variety.acted
    z[acted] = g @ point.acted_x + 1j * (g @ point.acted_y)
    return AmbientPoint(point.variety, z)
