"""Contact forms on the two varieties, their moment maps, and volume checks.

The invariant 1-forms, written with z_j = x_j + i y_j:

* sphere, sign +1 (``alpha_+``)::

      sum_j (x_j dy_j - y_j dx_j)

* sphere, sign -1 (``alpha_-``)::

      alpha_+ + s du - u ds,   u + i s = z1^2 + z2^2 + z3^2

  i.e. the standard form corrected by a term built from the complex square
  sum.  The correction pairs to zero with every rotation generator, so both
  sphere forms share one moment map.

* Brieskorn, sign ±1 (``alpha_{±k}``)::

      ±(k + 1) (x0 dy0 - y0 dx0) + 2 sum_{j=1..3} (x_j dy_j - y_j dx_j)

Moment maps (pairings with the basis X, Y, Z, as a 3-vector):

      sphere:    2 (x3 y2 - x2 y3,  x1 y3 - x3 y1,  x2 y1 - x1 y2)
      Brieskorn: 4 (x3 y2 - x2 y3,  x1 y3 - x3 y1,  x2 y1 - x1 y2)

with (x, y) the acted block in both cases.

Exterior derivatives are assembled from central finite differences of the
coefficient functions (step 1e-5); the coefficients are polynomial of degree
at most three, so the differences are exact up to roundoff.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lie import LieAlgElement
from .varieties import AmbientPoint, Brieskorn, Sphere, Variety


@dataclass(frozen=True)
class SphereForm:
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


@dataclass(frozen=True)
class BrieskornForm:
    k: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("Brieskorn exponent must be nonnegative")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


ContactForm = SphereForm | BrieskornForm

ALPHA_PLUS = SphereForm(1)
ALPHA_MINUS = SphereForm(-1)

FD_STEP = 1e-5


def variety_of(form: ContactForm) -> Variety:
    if isinstance(form, SphereForm):
        return Sphere()
    return Brieskorn(form.k)


def coefficients(form: ContactForm, w: np.ndarray) -> np.ndarray:
    """Coefficient vector a with alpha = sum_i a_i dw_i at the real vector w."""
    if isinstance(form, SphereForm):
        x, y = w[:3], w[3:]
        base = np.concatenate([-y, x])
        if form.sign > 0:
            return base
        u = x @ x - y @ y
        s = 2.0 * (x @ y)
        du = np.concatenate([2.0 * x, -2.0 * y])
        ds = np.concatenate([2.0 * y, 2.0 * x])
        return base + s * du - u * ds
    x, y = w[:4], w[4:]
    a = np.empty(8)
    a[0] = -form.sign * (form.k + 1) * y[0]
    a[4] = form.sign * (form.k + 1) * x[0]
    a[1:4] = -2.0 * y[1:]
    a[5:8] = 2.0 * x[1:]
    return a


def eval_form(form: ContactForm, point: AmbientPoint, v: np.ndarray) -> float:
    """Pair the 1-form with a tangent vector at the point."""
    return float(coefficients(form, point.real) @ v)


def moment_map(point: AmbientPoint, form: ContactForm) -> np.ndarray:
    """Closed-form moment map, as the vector of pairings with X, Y, Z.

    Independent of the form's sign: the sphere correction term and the z0
    term both annihilate the rotation generators.
    """
    x, y = point.acted_x, point.acted_y
    scale = 2.0 if isinstance(form, SphereForm) else 4.0
    return scale * np.array(
        [
            x[2] * y[1] - x[1] * y[2],
            x[0] * y[2] - x[2] * y[0],
            x[1] * y[0] - x[0] * y[1],
        ]
    )


def moment_map_defn(point: AmbientPoint, form: ContactForm) -> np.ndarray:
    """Moment map through its definition: pair the form with each generator."""
    from .varieties import infinitesimal_generator
    from .lie import BASIS

    return np.array(
        [eval_form(form, point, infinitesimal_generator(point, a)) for a in BASIS]
    )


def cross_section_coordinate(point: AmbientPoint, form: ContactForm) -> float:
    """The component that is positive on the cross-section.

    Documented per example: x1 y2 - y1 x2 on the sphere, x2 y1 - x1 y2 on a
    Brieskorn variety (indices inside the acted block).  The two expressions
    differ by the sign of the Z-generator; see ``orbit_generator_sign``.
    """
    x, y = point.acted_x, point.acted_y
    if isinstance(form, SphereForm):
        return float(x[0] * y[1] - y[0] * x[1])
    return float(x[1] * y[0] - x[0] * y[1])


def orbit_generator_sign(form: ContactForm) -> int:
    """Sign s with positive pairing of the form against the s*Z orbit generator.

    The circle acting on the cross-section is generated by s*Z where s makes
    the moment pairing (equivalently the contact pairing) positive there:
    s = -1 on the sphere, s = +1 on the Brieskorn varieties.
    """
    return -1 if isinstance(form, SphereForm) else 1


class DegenerateFrameError(ValueError):
    """Frame does not span the tangent space."""


def exterior_derivative_matrix(
    form: ContactForm, w: np.ndarray, *, step: float = FD_STEP
) -> np.ndarray:
    """Antisymmetric matrix D with d(alpha)(u, v) = u^T D v, by central differences."""
    n = w.size
    grad = np.empty((n, n))
    for i in range(n):
        delta = np.zeros(n)
        delta[i] = step
        grad[i] = (coefficients(form, w + delta) - coefficients(form, w - delta)) / (
            2.0 * step
        )
    return grad - grad.T


def contact_three_form(
    form: ContactForm, w: np.ndarray, v1: np.ndarray, v2: np.ndarray, v3: np.ndarray
) -> float:
    """alpha ^ d(alpha) evaluated on three vectors at the real vector w."""
    a = coefficients(form, w)
    d = exterior_derivative_matrix(form, w)

    def two(u: np.ndarray, v: np.ndarray) -> float:
        return float(u @ d @ v)

    return float(
        (a @ v1) * two(v2, v3) - (a @ v2) * two(v1, v3) + (a @ v3) * two(v1, v2)
    )


def form_volume(form: ContactForm, point: AmbientPoint, frame: np.ndarray) -> float:
    """alpha ^ (d alpha)^2 on five vectors; multilinear and alternating.

    Vanishes exactly when the frame repeats a vector.
    """
    frame = np.asarray(frame, dtype=float)
    if frame.shape != (5, point.real.size):
        raise ValueError(f"expected a (5, {point.real.size}) frame, got {frame.shape}")
    a = coefficients(form, point.real)
    d = exterior_derivative_matrix(form, point.real)
    pair = frame @ d @ frame.T  # pair[i, j] = d(alpha)(v_i, v_j)

    def double(idx: tuple[int, int, int, int]) -> float:
        i, j, k, l = idx
        return 2.0 * (
            pair[i, j] * pair[k, l] - pair[i, k] * pair[j, l] + pair[i, l] * pair[j, k]
        )

    total = 0.0
    indices = list(range(5))
    for pos in range(5):
        rest = tuple(indices[:pos] + indices[pos + 1 :])
        total += (-1.0) ** pos * float(a @ frame[pos]) * double(rest)
    return total


def contact_check(form: ContactForm, point: AmbientPoint, frame: np.ndarray) -> float:
    """Contact volume on a spanning frame; rejects degenerate frames."""
    frame = np.asarray(frame, dtype=float)
    gram = frame @ frame.T
    if abs(np.linalg.det(gram)) <= 1e-6:
        raise DegenerateFrameError("frame does not span the tangent space")
    return form_volume(form, point, frame)
