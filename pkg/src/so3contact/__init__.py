"""Invariant calculus for 5-dimensional contact SO(3)-manifolds.

Submodules:

* ``invariants``      the classifying tuple, validity, normalization, plans
* ``torus_calculus``  integer curve arithmetic on boundary tori
* ``geometry``        numerics on the sphere and Brieskorn examples
* ``dehn_twist``      generalized twists on T*S^2 and their verification
* ``catalog``         named examples with computed invariants
* ``cli``             command-line front end
"""

from . import catalog, dehn_twist, geometry, invariants, torus_calculus

__version__ = "0.1.0"

__all__ = ["catalog", "dehn_twist", "geometry", "invariants", "torus_calculus"]
