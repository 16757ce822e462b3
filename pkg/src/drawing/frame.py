"""
The regular pentagon frame and the resolution constants.

Anchors sit on the unit circle in clockwise order with the edge V_1 V_5
horizontal at the bottom: V_k is at angle -126 - 72(k-1) degrees.
"""

from typing import List, Sequence

import numpy as np

# weight differences of the closest pairs in the face- and vertex-counting drawings
D5_DELTA = (-2, -1, 3, 1, -1)
D5_PRIME_DELTA = (-1, -1, 1, 1, 0)


def pentagon_modulus(delta: Sequence[int]) -> float:
    """|sum delta_k w^k| for w a primitive fifth root of unity."""
    roots = np.exp(2j * np.pi * np.arange(5) / 5)
    return float(abs(np.dot(np.asarray(delta, dtype=float), roots)))


D5 = pentagon_modulus(D5_DELTA)
D5_PRIME = pentagon_modulus(D5_PRIME_DELTA)


class PentagonFrame:
    """Circumradius-1 pentagon with V_1 bottom-left and V_5 bottom-right."""

    def __init__(self):
        degrees = -126.0 - 72.0 * np.arange(5)
        self.angles = np.deg2rad(degrees)
        self.anchors = np.column_stack([np.cos(self.angles), np.sin(self.angles)])

    def anchor(self, i: int) -> np.ndarray:
        return self.anchors[i]

    def coordinates(self, weights: np.ndarray) -> np.ndarray:
        """Rows of barycentric weights to (x, y) rows."""
        return np.asarray(weights, dtype=float) @ self.anchors

    def corners(self) -> List[tuple]:
        return [tuple(p) for p in self.anchors]
