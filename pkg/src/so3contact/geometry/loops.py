"""Boundary-torus charts, winding extraction, and the worked Dehn-Euler numbers.

A boundary torus of the (closure of the) cross-section consists of singular
points whose acted block is a common phase times a real unit vector,

    z_acted = e^{i psi} * a,   a in S^2,   a3 = 0 on the boundary,

so a sampled loop determines continuous angle tracks.  On a Brieskorn
variety the chart is (theta, phi') with theta = arg z0 and phi' the angle of
a in the rotation plane; one full turn of z0 advances psi by k*pi, which for
odd k identifies (theta + 2pi, phi') with (theta, phi' + pi) and the honest
torus chart is (theta, phi' + theta/2).  On the sphere psi itself is the
disc direction: the identification (psi + pi, phi' + pi) leaves (2 psi,
psi - phi') as an honest chart, with the phi-axis following the positive
orbit generator (which is -Z there; see ``orbit_generator_sign``).

Winding pairs of the marked curve gamma and of the section boundary are
turned into :class:`TorusClass` values by :func:`loop_to_class`; the sign
of the resulting intersection number is fixed by the orientation of the
cross-section, which is computed from the contact volume on a section frame
(:func:`section_orientation_sign`).  Curves are oriented so that the curve
velocity followed by the positive orbit generator orients the torus; with
both loops parametrized with increasing chart time, the torus-orientation
factors cancel and the Dehn-Euler contribution is a fixed global sign times
the section-orientation sign times the chart intersection number.  The
global sign is a labeling convention (its opposite would negate every
Dehn-Euler number at once); it is chosen here so that the standard-sign
Brieskorn forms get positive twist counts.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from ..torus_calculus import (
    BoundaryMarking,
    MarkingKind,
    TorusClass,
    dehn_euler_number,
)
from .forms import (
    BrieskornForm,
    ContactForm,
    SphereForm,
    contact_three_form,
    orbit_generator_sign,
)
from .lie import Z
from .varieties import AmbientPoint, Brieskorn, Sphere, infinitesimal_generator, to_real


class PhaseStepError(ValueError):
    """Successive samples differ by too large an angle; sample more densely."""


class LoopClosureError(ValueError):
    """Loop windings are not integral; the sampled curve does not close up."""


class ChartError(ValueError):
    """Sampled points do not lie on the chart's boundary torus."""


MAX_PHASE_STEP = np.pi / 2
CHART_TOL = 1e-8
WINDING_TOL = 1e-6


def unwrap_track(angles: np.ndarray, *, max_step: float = MAX_PHASE_STEP) -> np.ndarray:
    """Continuous lift of a sampled angle track; steps must stay below max_step."""
    a = np.asarray(angles, dtype=float)
    steps = np.diff(a)
    steps = np.mod(steps + np.pi, 2.0 * np.pi) - np.pi
    worst = float(np.max(np.abs(steps), initial=0.0))
    if worst >= max_step:
        raise PhaseStepError(
            f"phase step {worst:.3f} exceeds {max_step:.3f}; sample more densely"
        )
    return np.concatenate([[a[0]], a[0] + np.cumsum(steps)])


def loop_to_class(angle_samples: np.ndarray) -> TorusClass:
    """Winding pair of a closed curve given by (N, 2) chart angle samples.

    The first and last samples must describe the same point; each winding
    must be within 1e-6 of an integer before rounding.  Reversing the sample
    order negates the class.
    """
    samples = np.asarray(angle_samples, dtype=float)
    if samples.ndim != 2 or samples.shape[1] != 2 or samples.shape[0] < 2:
        raise ValueError("expected an (N, 2) array of chart angles")
    windings = []
    for col in range(2):
        track = unwrap_track(samples[:, col])
        w = (track[-1] - track[0]) / (2.0 * np.pi)
        if abs(w - round(w)) > WINDING_TOL:
            raise LoopClosureError(f"non-integral winding {w:.8f} in chart axis {col}")
        windings.append(int(round(w)))
    return TorusClass(windings[0], windings[1])


def _phase_split(block: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split acted samples e^{i psi} a into continuous psi and real a tracks."""
    square = np.sum(block * block, axis=1)  # e^{2 i psi} for unit a
    radius = np.abs(square)
    if np.max(np.abs(radius - 1.0)) > CHART_TOL:
        raise ChartError("samples are not singular boundary points (|sum z_j^2| != 1)")
    psi = unwrap_track(np.angle(square)) / 2.0
    a = block * np.exp(-1j * psi)[:, None]
    if np.max(np.abs(a.imag)) > CHART_TOL:
        raise ChartError("acted block is not a common phase times a real vector")
    return psi, a.real


def brieskorn_boundary_tracks(zs: np.ndarray, k: int) -> np.ndarray:
    """(theta, phi)-angle tracks of a sampled loop on the W_k boundary torus."""
    zs = np.asarray(zs, dtype=complex)
    if zs.ndim != 2 or zs.shape[1] != 4:
        raise ValueError("expected an (N, 4) array of Brieskorn samples")
    if np.max(np.abs(zs[:, 3])) > CHART_TOL:
        raise ChartError("boundary chart needs z3 = 0")
    if np.max(np.abs(np.abs(zs[:, 0]) - 1.0)) > CHART_TOL:
        raise ChartError("boundary chart needs |z0| = 1")
    theta = unwrap_track(np.angle(zs[:, 0]))
    _, a = _phase_split(zs[:, 1:3])
    phi = unwrap_track(np.arctan2(a[:, 1], a[:, 0]))
    if k % 2 == 1:
        # straighten the twisted identification (theta + 2pi ~ phi' + pi)
        phi = phi + theta / 2.0
    return np.column_stack([theta, phi])


def sphere_boundary_tracks(zs: np.ndarray) -> np.ndarray:
    """(t, phi)-angle tracks of a sampled loop on the sphere's boundary torus."""
    zs = np.asarray(zs, dtype=complex)
    if zs.ndim != 2 or zs.shape[1] != 3:
        raise ValueError("expected an (N, 3) array of sphere samples")
    if np.max(np.abs(zs[:, 2])) > CHART_TOL:
        raise ChartError("boundary chart needs z3 = 0")
    psi, a = _phase_split(zs[:, 0:2])
    phi_prime = unwrap_track(np.arctan2(a[:, 1], a[:, 0]))
    # the honest chart for the identification (psi + pi, phi' + pi), with the
    # phi-axis along the positive orbit generator -Z
    return np.column_stack([2.0 * psi, psi - phi_prime])


def brieskorn_section(k: int) -> Callable[[complex], np.ndarray]:
    """Section of the W_k cross-section over its z0-disc."""

    def embed(z0: complex) -> np.ndarray:
        r2 = abs(z0) ** 2
        inner = (2.0 - r2) ** 2 - r2**k
        if inner < 0.0:
            raise ValueError(f"z0 with |z0| = {abs(z0):.4f} is outside the disc")
        a = np.sqrt(2.0 - r2 + np.sqrt(inner))
        zk = z0**k
        return np.array(
            [z0, 1j * zk / (2.0 * a) + 0.5j * a, -zk / (2.0 * a) + 0.5 * a, 0.0],
            dtype=complex,
        )

    return embed


def sphere_section() -> Callable[[complex], np.ndarray]:
    """Section of the sphere cross-section over the upper half-plane."""

    def embed(z: complex) -> np.ndarray:
        scale = 1.0 / np.sqrt(2.0 + 2.0 * abs(z) ** 2)
        return scale * np.array([1.0 + z, z - 1.0, 0.0], dtype=complex)

    return embed


def section_orientation_sign(
    form: ContactForm,
    embed: Callable[[complex], np.ndarray],
    domain_points: Sequence[complex],
    *,
    fd_step: float = 1e-6,
) -> int:
    """Orientation of the section against the contact orientation of R.

    Evaluates alpha ^ d(alpha) on (d/dx embed, d/dy embed, positive orbit
    generator) at interior domain points; +1 means the standard orientation
    of the section's domain followed by the orbit realizes the contact
    orientation, -1 the opposite.  The sign must agree across the sample
    points.
    """
    variety = (
        Sphere() if isinstance(form, SphereForm) else Brieskorn(form.k)
    )
    orbit_sign = orbit_generator_sign(form)
    signs = set()
    for z in domain_points:
        w = to_real(embed(z))
        vx = (to_real(embed(z + fd_step)) - to_real(embed(z - fd_step))) / (2.0 * fd_step)
        vy = (to_real(embed(z + 1j * fd_step)) - to_real(embed(z - 1j * fd_step))) / (
            2.0 * fd_step
        )
        point = AmbientPoint(variety, embed(z))
        zeta = orbit_sign * infinitesimal_generator(point, Z)
        value = contact_three_form(form, w, vx, vy, zeta)
        if abs(value) < 1e-10:
            raise ChartError(f"degenerate section frame at z = {z}")
        signs.add(1 if value > 0 else -1)
    if len(signs) != 1:
        raise ChartError("section orientation sign is not constant")
    return signs.pop()


# Orientation labeling of the two form families, fixed once: the pairing
# orientation of the boundary torus is taken opposite to the section
# orientation sign, which makes the standard (+) forms carry positive
# Dehn-Euler numbers.  Flipping this constant would negate every computed
# Dehn-Euler number simultaneously and swap the roles of the two families.
PAIRING_ORIENTATION = -1


def _oriented_marking(
    gamma_cls: TorusClass, sigma_cls: TorusClass, orientation: int
) -> BoundaryMarking:
    """Marking in the orientation-corrected chart.

    A negative total orientation flips the chart's phi-axis (a legal change:
    the Dehn-Euler number does not depend on the orbit direction), which
    negates the phi-coefficients of both classes.
    """
    if sigma_cls.t != 1:
        raise ChartError(f"section boundary winds {sigma_cls.t} times around the orbit space")
    if gamma_cls.t == 1:
        kind = MarkingKind.SECTION
    elif gamma_cls.t == 2:
        kind = MarkingKind.DOUBLE
    else:
        raise ChartError(f"marked curve winds {gamma_cls.t} times around the orbit space")
    return BoundaryMarking(
        kind,
        TorusClass(gamma_cls.t, orientation * gamma_cls.phi),
        TorusClass(sigma_cls.t, orientation * sigma_cls.phi),
    )


_BRIESKORN_INTERIOR = (0.31 + 0.22j, -0.40 + 0.11j, 0.05 - 0.47j)
_SPHERE_INTERIOR = (1j, 0.45 + 0.85j, -0.65 + 1.3j)


def brieskorn_marked_curve(k: int, samples: int) -> np.ndarray:
    """The marked curve (e^{i t}, i e^{i k t / 2}, 0, 0); period 4pi for odd k."""
    period = 4.0 * np.pi if k % 2 == 1 else 2.0 * np.pi
    t = np.linspace(0.0, period, samples + 1)
    zs = np.zeros((t.size, 4), dtype=complex)
    zs[:, 0] = np.exp(1j * t)
    zs[:, 1] = 1j * np.exp(0.5j * k * t)
    return zs


def brieskorn_section_boundary(k: int, samples: int, shift: float = 0.0) -> np.ndarray:
    """Boundary values of the section, optionally rotated along the orbit."""
    t = np.linspace(0.0, 2.0 * np.pi, samples + 1)
    zs = np.zeros((t.size, 4), dtype=complex)
    zs[:, 0] = np.exp(1j * t)
    zs[:, 1] = 0.5j * (1.0 + np.exp(1j * k * t))
    zs[:, 2] = 0.5 * (1.0 - np.exp(1j * k * t))
    if shift != 0.0:
        c, s = np.cos(shift), np.sin(shift)
        z1, z2 = zs[:, 1].copy(), zs[:, 2].copy()
        zs[:, 1] = c * z1 - s * z2
        zs[:, 2] = s * z1 + c * z2
    return zs


def dehn_euler_of_example(k: int, sign: int, *, samples: int = 4096) -> int:
    """Dehn-Euler number of the Brieskorn variety W_k with the sign-chosen form.

    Builds the marked curve and the section boundary explicitly, extracts
    their torus classes, orients the data by the contact volume of the
    section, and evaluates the marking through the integer calculus.  For
    k = 0 the section boundary coincides with the marked curve and is pushed
    off along the orbit first.
    """
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    form = BrieskornForm(k, sign)
    n_samples = max(samples, 512 * max(k, 1))
    gamma = brieskorn_marked_curve(k, n_samples)
    shift = 0.1 if k == 0 else 0.0
    sigma = brieskorn_section_boundary(k, n_samples, shift=shift)
    gamma_cls = loop_to_class(brieskorn_boundary_tracks(gamma, k))
    sigma_cls = loop_to_class(brieskorn_boundary_tracks(sigma, k))
    orientation = section_orientation_sign(
        form, brieskorn_section(k), _BRIESKORN_INTERIOR
    )
    marking = _oriented_marking(gamma_cls, sigma_cls, PAIRING_ORIENTATION * orientation)
    expected_kind = MarkingKind.DOUBLE if k % 2 == 1 else MarkingKind.SECTION
    if marking.kind is not expected_kind:
        raise ChartError(f"marked curve of W_{k} has the wrong kind {marking.kind}")
    return dehn_euler_number([marking], stabilizer_order=1)


def sphere_marked_curve(samples: int) -> np.ndarray:
    """The marked curve (e^{i t}, 0, 0) on the sphere's boundary torus."""
    t = np.linspace(0.0, 2.0 * np.pi, samples + 1)
    zs = np.zeros((t.size, 3), dtype=complex)
    zs[:, 0] = np.exp(1j * t)
    return zs


def sphere_section_boundary(samples: int, *, reach: float = 1e-3) -> np.ndarray:
    """Boundary of the sphere section: the arc at infinity followed by the real axis.

    The real axis is compactified through x = tan(u); the loop is closed by
    repeating the first sample exactly, so the windings are exact even
    though the axis is truncated at |x| ~ 1/reach.
    """
    embed = sphere_section()
    arc_t = np.linspace(0.0, np.pi, samples, endpoint=False)
    arc = np.array(
        [np.exp(1j * t) * np.array([1.0, 1.0, 0.0]) / np.sqrt(2.0) for t in arc_t]
    )
    u = np.linspace(-np.pi / 2 + reach, np.pi / 2 - reach, samples)
    line = np.array([embed(complex(np.tan(v), 0.0)) for v in u])
    return np.vstack([arc, line, arc[:1]])


def dehn_euler_of_sphere(sign: int, *, samples: int = 4096) -> int:
    """Dehn-Euler number of the 5-sphere with the sign-chosen standard form."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    form = SphereForm(sign)
    gamma_cls = loop_to_class(sphere_boundary_tracks(sphere_marked_curve(samples)))
    sigma_cls = loop_to_class(sphere_boundary_tracks(sphere_section_boundary(samples)))
    orientation = section_orientation_sign(form, sphere_section(), _SPHERE_INTERIOR)
    marking = _oriented_marking(gamma_cls, sigma_cls, PAIRING_ORIENTATION * orientation)
    if marking.kind is not MarkingKind.DOUBLE:
        raise ChartError("the sphere's marked curve must be double-kind")
    return dehn_euler_number([marking], stabilizer_order=1)
