"""Minimal so(3) toolkit: fixed basis, Rodrigues exponential, brackets."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Basis fixed once for the whole package: X, Y, Z generate the rotations
# about the coordinate axes e1, e2, e3 of R^3, normalized so that
# exp(t Z) e1 = cos(t) e1 + sin(t) e2.  Then [X, Y] = Z cyclically.
X_MATRIX = np.array([[0.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]])
Y_MATRIX = np.array([[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [-1.0, 0.0, 0.0]])
Z_MATRIX = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])


@dataclass(frozen=True)
class LieAlgElement:
    """Element a*X + b*Y + c*Z of so(3)."""

    a: float
    b: float
    c: float

    def matrix(self) -> np.ndarray:
        return self.a * X_MATRIX + self.b * Y_MATRIX + self.c * Z_MATRIX

    def axis(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c])


X = LieAlgElement(1.0, 0.0, 0.0)
Y = LieAlgElement(0.0, 1.0, 0.0)
Z = LieAlgElement(0.0, 0.0, 1.0)
BASIS = (X, Y, Z)


def bracket(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def rodrigues(element: LieAlgElement) -> np.ndarray:
    """Rotation matrix exp(a X + b Y + c Z) by the Rodrigues formula."""
    theta = float(np.linalg.norm(element.axis()))
    k = element.matrix()
    if theta < 1e-12:
        # quadratic Taylor expansion keeps the map smooth through 0
        return np.eye(3) + k + 0.5 * (k @ k)
    return (
        np.eye(3)
        + (np.sin(theta) / theta) * k
        + ((1.0 - np.cos(theta)) / theta**2) * (k @ k)
    )
