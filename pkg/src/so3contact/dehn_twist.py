"""Generalized Dehn twists on the cotangent bundle of the 2-sphere.

A point of T*S^2 is a pair (q, p) in R^3 x R^3 with |q| = 1 and q . p = 0.
The k-fold twist rotates each point inside its geodesic plane,

    tau_k(q, p) = (q cos F + (p/|p|) sin F,  p cos F - |p| q sin F),
    F = f(|p|),  f(r) = pi k (1 + rho_eps(r)),

with the smooth cut-off profile

    rho_eps(r) = 0                       for r <= eps/2,
               = N(eps) * int_{eps/2}^r exp(eps^2 / (4 (x - eps/2)(x - eps))) dx
                                          for eps/2 < r < eps,
               = 1                       for r >= eps,

where N(eps) normalizes the bump so rho_eps(eps) = 1.  The bump rescales:
N(eps) = N(1)/eps, and the profile's maximal slope is N(1) e^{-4} / eps.
Near the zero section the twist is (-1)^k times the identity, far out it is
the identity, and everywhere it is SO(3)-equivariant and preserves |p|.

The twist shifts the canonical 1-form lambda = p . dq by |p| d(f(|p|)),
so it preserves d(lambda).  Suspending it in a mapping torus with the form
dt + lambda - t |p| df is contact as long as 1 - 2 |p|^2 f'(|p|) stays
positive; ``default_eps`` picks a cut-off scale for which that margin is at
least one half.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np
from scipy.integrate import quad

from .invariants import SingularComponentType
from .torus_calculus import BoundaryMarking, twist_boundary_class


def _bump(u: float) -> float:
    """Profile integrand on the unit interval; supported on (1/2, 1)."""
    if u <= 0.5 or u >= 1.0:
        return 0.0
    return math.exp(1.0 / (4.0 * (u - 0.5) * (u - 1.0)))


@lru_cache(maxsize=None)
def _bump_mass(rel_tol: float) -> float:
    """Integral of the unit-interval bump, via adaptive quadrature."""
    value, _ = quad(_bump, 0.5, 1.0, epsabs=0.0, epsrel=rel_tol, limit=200)
    return value


BUMP_PEAK = math.exp(-4.0)  # maximum of the unit bump, attained at u = 3/4


def profile_norm(eps: float, *, rel_tol: float = 1e-10) -> float:
    """N(eps), the reciprocal of the bump integral over (eps/2, eps)."""
    return 1.0 / (eps * _bump_mass(rel_tol))


def default_eps(k: int) -> float:
    """Cut-off scale guaranteeing a mapping-torus contact margin >= 1/2.

    The slope of f is at most pi k N(1) e^{-4} / eps on an interval where
    |p| <= eps, so eps <= 1 / (32 k N(1) e^{-4} pi) bounds 2 |p|^2 f' by
    a constant well below 1/2.
    """
    if k <= 0:
        return 0.05
    n1_peak = profile_norm(1.0) * BUMP_PEAK
    return min(0.05, 1.0 / (32.0 * k * n1_peak * math.pi))


@dataclass(frozen=True)
class TwistConfig:
    k: int
    eps: float
    quad_rel_tol: float = 1e-10

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError(f"twist count must be nonnegative, got {self.k}")
        if self.eps <= 0.0:
            raise ValueError(f"cut-off scale must be positive, got {self.eps}")


def twist_config(k: int, eps: float | None = None) -> TwistConfig:
    return TwistConfig(k, default_eps(k) if eps is None else eps)


def rho(cfg: TwistConfig, r: float) -> float:
    """The cut-off profile rho_eps, monotone from 0 to 1 across (eps/2, eps)."""
    if r < 0.0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    u = r / cfg.eps
    if u <= 0.5:
        return 0.0
    if u >= 1.0:
        return 1.0
    value, _ = quad(_bump, 0.5, u, epsabs=0.0, epsrel=cfg.quad_rel_tol, limit=200)
    return value / _bump_mass(cfg.quad_rel_tol)


def rho_prime(cfg: TwistConfig, r: float) -> float:
    """Exact derivative of the profile (the normalized quadrature integrand)."""
    if r < 0.0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    return profile_norm(cfg.eps, rel_tol=cfg.quad_rel_tol) * _bump(r / cfg.eps)


def twist_angle(cfg: TwistConfig, r: float) -> float:
    """f(r) = pi k (1 + rho_eps(r))."""
    return math.pi * cfg.k * (1.0 + rho(cfg, r))


def twist_angle_prime(cfg: TwistConfig, r: float) -> float:
    return math.pi * cfg.k * rho_prime(cfg, r)


class CotangentPoint(NamedTuple):
    q: np.ndarray
    p: np.ndarray


def cotangent_point(q: np.ndarray, p: np.ndarray, *, tol: float = 1e-12) -> CotangentPoint:
    """Validated cotangent point: |q| = 1 and q . p = 0 within tol."""
    q = np.asarray(q, dtype=float)
    p = np.asarray(p, dtype=float)
    if q.shape != (3,) or p.shape != (3,):
        raise ValueError("expected 3-vectors q and p")
    if abs(np.linalg.norm(q) - 1.0) > tol:
        raise ValueError(f"base point is off the unit sphere by {abs(np.linalg.norm(q)) - 1.0:.3e}")
    if abs(q @ p) > tol:
        raise ValueError(f"fiber vector is not orthogonal to the base point: q.p = {q @ p:.3e}")
    return CotangentPoint(q, p)


def random_cotangent(
    rng: np.random.Generator, *, p_scale: float = 1.0
) -> CotangentPoint:
    q = rng.standard_normal(3)
    q = q / np.linalg.norm(q)
    p = rng.standard_normal(3) * p_scale
    p = p - (q @ p) * q
    return CotangentPoint(q, p)


def _twist_raw(cfg: TwistConfig, q: np.ndarray, p: np.ndarray, angle_sign: float) -> tuple[np.ndarray, np.ndarray]:
    """The twist formula on raw vectors; tolerates off-manifold input for FD."""
    n = float(np.linalg.norm(p))
    if n < 1e-300:
        # |p| below the resolvable scale: f is constant there, so the map is
        # exactly (-1)^k times the identity
        flip = (-1.0) ** cfg.k
        return flip * q, flip * p
    f = angle_sign * twist_angle(cfg, n)
    c, s = math.cos(f), math.sin(f)
    p_hat = p / n
    return q * c + p_hat * s, p * c - n * q * s


def twist(cfg: TwistConfig, pt: CotangentPoint) -> CotangentPoint:
    """Apply the k-fold twist; preserves |q| = 1, q . p = 0 and |p| exactly."""
    q, p = _twist_raw(cfg, pt.q, pt.p, 1.0)
    return CotangentPoint(q, p)


def untwist(cfg: TwistConfig, pt: CotangentPoint) -> CotangentPoint:
    """Inverse of the twist (the same flow run with the opposite angle)."""
    q, p = _twist_raw(cfg, pt.q, pt.p, -1.0)
    return CotangentPoint(q, p)


def canonical_one_form(pt: CotangentPoint, v: np.ndarray) -> float:
    """lambda = p . dq paired with a tangent vector (v_q, v_p) in R^6."""
    return float(pt.p @ np.asarray(v)[:3])


def random_cotangent_tangent(
    pt: CotangentPoint, rng: np.random.Generator
) -> np.ndarray:
    """Gaussian tangent vector to T*S^2 at pt: q.v_q = 0, p.v_q + q.v_p = 0."""
    w = rng.standard_normal(6)
    v_q = w[:3] - (pt.q @ w[:3]) * pt.q
    v_p = w[3:] - (pt.q @ w[3:] + pt.p @ v_q) * pt.q
    return np.concatenate([v_q, v_p])


def pullback_defect(
    cfg: TwistConfig, pt: CotangentPoint, v: np.ndarray, *, fd_step: float = 1e-6
) -> float:
    """Residual of the pullback identity tau* lambda = lambda + |p| d(f(|p|)).

    The differential of the twist is taken by central differences along v
    (the ambient formula maps the constraint set to itself, so the finite
    difference of tangent directions converges to the intrinsic
    differential).  Away from the cut-off annulus the twist is locally a
    constant multiple of the identity and the residual is pure roundoff.
    """
    v = np.asarray(v, dtype=float)
    w = np.concatenate([pt.q, pt.p])
    plus = np.concatenate(_twist_raw(cfg, *np.split(w + fd_step * v, 2), 1.0))
    minus = np.concatenate(_twist_raw(cfg, *np.split(w - fd_step * v, 2), 1.0))
    dtau_v = (plus - minus) / (2.0 * fd_step)
    image = twist(cfg, pt)
    n = float(np.linalg.norm(pt.p))
    radial = twist_angle_prime(cfg, n) * float(pt.p @ v[3:]) if n > 0.0 else 0.0
    return abs(canonical_one_form(image, dtau_v) - canonical_one_form(pt, v) - radial)


def contact_margin(cfg: TwistConfig, sample_count: int = 1000) -> float:
    """min over |p| in [0, 2 eps] of 1 - 2 |p|^2 f'(|p|).

    A positive value certifies the mapping-torus form dt + lambda - t |p| df
    is contact.  The slope f' is evaluated exactly, so the sampled margin is
    linear in eps on a fixed relative grid.
    """
    radii = np.linspace(0.0, 2.0 * cfg.eps, sample_count)
    values = [1.0 - 2.0 * r * r * twist_angle_prime(cfg, r) for r in radii]
    return float(min(values))


def mapping_torus_type(k: int) -> SingularComponentType:
    """Bundle type of the mapping torus of the k-fold twist."""
    if k < 0:
        raise ValueError(f"twist count must be nonnegative, got {k}")
    return SingularComponentType.E_TWIST if k % 2 == 1 else SingularComponentType.E_TRIV


def twist_marking(k: int, *, grid: int = 2048) -> BoundaryMarking:
    """Boundary marking of a k-fold twisted gluing, with a numerical crosscheck.

    The suspended section meets the marked set where cos(pi k t) = ±1 on one
    period, i.e. at the k zeros of sin(pi k t) in [0, 1); their count must
    agree with the marking's contribution.  For k = 0 the section is pushed
    off the marked set along the orbit and the contribution is zero.
    """
    marking = twist_boundary_class(k)
    if k > 0:
        # offset grid avoids sampling the zeros themselves
        ts = (np.arange(grid * k + 1) + 0.37) / (grid * k)
        signs = np.sign(np.sin(np.pi * k * ts))
        crossings = int(np.sum(signs[1:] * signs[:-1] < 0))
        if crossings != k:
            raise RuntimeError(
                f"marked-set crossing count {crossings} disagrees with twist count {k}"
            )
    return marking
