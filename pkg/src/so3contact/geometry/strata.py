"""Orbit-type tests: stabilizer class, cross-section membership, bundle types.

A point of either variety lies on a singular orbit exactly when the x- and
y-parts of its acted block are linearly dependent; the rank test uses the
second singular value of the 2x3 matrix [x; y].  Bundle types of the
singular pieces are decided by tracing their axis-invariant circles and
watching whether the two marked branches swap after one period.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from ..invariants import SingularComponentType
from .forms import ContactForm, cross_section_coordinate, moment_map
from .varieties import AmbientPoint


class StabilizerClass(Enum):
    TRIVIAL = "trivial"
    CIRCLE = "circle"


class StabilizerIndeterminate(RuntimeError):
    """Rank test landed between the two thresholds; resample."""


def stabilizer_class(
    point: AmbientPoint,
    *,
    circle_tol: float = 1e-8,
    trivial_tol: float = 1e-6,
) -> StabilizerClass:
    """Circle stabilizer iff the acted x- and y-blocks are parallel.

    The decision bands are separated on purpose: second singular values in
    [circle_tol, trivial_tol] raise :class:`StabilizerIndeterminate` rather
    than silently misclassifying points near the singular stratum.
    """
    matrix = np.vstack([point.acted_x, point.acted_y])
    sigma2 = np.linalg.svd(matrix, compute_uv=False)[1]
    if sigma2 < circle_tol:
        return StabilizerClass.CIRCLE
    if sigma2 > trivial_tol:
        return StabilizerClass.TRIVIAL
    raise StabilizerIndeterminate(
        f"second singular value {sigma2:.3e} inside the indeterminate band"
    )


def in_cross_section(
    point: AmbientPoint, form: ContactForm, *, tol: float = 1e-9
) -> bool:
    """Moment map on the positive Z-ray: X- and Y-pairings vanish, the
    documented component is positive."""
    mu = moment_map(point, form)
    if abs(mu[0]) > tol or abs(mu[1]) > tol:
        return False
    return cross_section_coordinate(point, form) > tol


class BranchTrackingError(RuntimeError):
    """Continuity matching between the two marked branches became ambiguous."""


def _branches_swap(branch, t_end: float, steps: int) -> bool:
    """Follow the +branch of a marked pair by continuity; True if it ends on -start.

    ``branch(t)`` returns the complex value of one branch; the other branch
    is its negative.  The two branches stay at distance 2 on the unit circle,
    so a step is ambiguous once the tracked value moves by a comparable
    amount.
    """
    ts = np.linspace(0.0, t_end, steps + 1)
    current = branch(0.0)
    for t in ts[1:]:
        plus = branch(t)
        d_plus = abs(plus - current)
        d_minus = abs(-plus - current)
        if min(d_plus, d_minus) > 0.5:
            raise BranchTrackingError(
                f"branch step of size {min(d_plus, d_minus):.3f} at t={t:.4f}; "
                f"increase the resolution"
            )
        current = plus if d_plus <= d_minus else -plus
    start = branch(0.0)
    return abs(current + start) < abs(current - start)


def singular_component_type(k: int, *, steps: int = 1024) -> SingularComponentType:
    """Bundle type of the singular piece of W_k, by branch tracing.

    The points of W_k invariant under rotations about the first acted axis
    form the pair of branches (e^{i t}, ±i e^{i k t / 2}, 0, 0).  Following
    one branch over a full turn of z0 either closes up (two marked curves,
    trivial bundle) or lands on the other branch (one marked curve, twisted
    bundle).  The traced answer must match the parity of k.
    """
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    swapped = _branches_swap(lambda t: 1j * np.exp(0.5j * k * t), 2.0 * np.pi, steps)
    result = (
        SingularComponentType.E_TWIST if swapped else SingularComponentType.E_TRIV
    )
    if (k % 2 == 1) != (result is SingularComponentType.E_TWIST):
        raise BranchTrackingError(
            f"trace of W_{k} disagrees with the parity rule; resolution too coarse"
        )
    return result


def sphere_component_type(*, steps: int = 1024) -> SingularComponentType:
    """Bundle type of the singular piece of the 5-sphere.

    The points invariant under rotations about the third axis are
    (0, 0, e^{i t}); the marked pair in the fiber over t is ±e^{i t} (the
    fiber structure repeats with period pi, where e^{i pi} maps a fiber to
    itself by the antipode).  The branch returns to minus itself, so the
    piece is the twisted bundle.
    """
    swapped = _branches_swap(lambda t: np.exp(1j * t), np.pi, steps)
    return SingularComponentType.E_TWIST if swapped else SingularComponentType.E_TRIV
