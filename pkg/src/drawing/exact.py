"""
Exact arithmetic in Q(sqrt 5) for predicates on the pentagon frame.

Points are barycentric combinations of the anchors V_1..V_5 of a regular
pentagon. Cross and dot products of anchors are rational multiples of
1 and sqrt 5 (up to the common positive factor sin 72 for cross products),
so every sign the drawing checks is the sign of some a + b*sqrt(5).
Vectors here are 5-tuples of integers or Fractions, indexed 0..4.
"""

import math
from fractions import Fraction
from typing import NamedTuple, Sequence, Union

Number = Union[int, Fraction]


def _sign(x: Number) -> int:
    return (x > 0) - (x < 0)


class Quad5(NamedTuple):
    """The number a + b*sqrt(5)."""

    a: Fraction
    b: Fraction

    @classmethod
    def of(cls, a: Number, b: Number = 0) -> "Quad5":
        return cls(Fraction(a), Fraction(b))

    @property
    def sign(self) -> int:
        sa, sb = _sign(self.a), _sign(self.b)
        if sa >= 0 and sb >= 0:
            return 1 if sa or sb else 0
        if sa <= 0 and sb <= 0:
            return -1
        # opposite signs: compare a^2 with 5 b^2
        bigger = _sign(self.a * self.a - 5 * self.b * self.b)
        return sa * bigger

    def __add__(self, other: "Quad5") -> "Quad5":
        return Quad5(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Quad5") -> "Quad5":
        return Quad5(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "Quad5":
        return Quad5(-self.a, -self.b)

    def __mul__(self, other: "Quad5") -> "Quad5":
        return Quad5(self.a * other.a + 5 * self.b * other.b, self.a * other.b + self.b * other.a)

    def scale(self, k: Number) -> "Quad5":
        return Quad5(self.a * k, self.b * k)

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(5)

    def __repr__(self) -> str:
        return f"Quad5({self.a} + {self.b}*sqrt5)"


def cross_quad(delta: Sequence[Number], eps: Sequence[Number]) -> Quad5:
    """
    Q with cross(sum delta_k V_k, sum eps_k V_k) = -(sin 72 / 2) * Q.

    With T_m = sum_j delta_j eps_{j+m}: Q = 2(T1 - T4) - (T2 - T3) + (T2 - T3) sqrt 5.
    """
    t = [sum(delta[j] * eps[(j + m) % 5] for j in range(5)) for m in range(5)]
    return Quad5.of(2 * (t[1] - t[4]) - (t[2] - t[3]), t[2] - t[3])


def cross_sign(delta: Sequence[Number], eps: Sequence[Number]) -> int:
    """Sign of the cross product of two anchor combinations."""
    return -cross_quad(delta, eps).sign


def dot_anchor_quad(i: int, delta: Sequence[Number]) -> Quad5:
    """4 * dot(V_i, sum delta_k V_k)."""
    near = delta[(i + 1) % 5] + delta[(i - 1) % 5]
    far = delta[(i + 2) % 5] + delta[(i - 2) % 5]
    return Quad5.of(4 * delta[i] - near - far, near - far)


def dot_anchor_sign(i: int, delta: Sequence[Number]) -> int:
    return dot_anchor_quad(i, delta).sign


def dot_quad(delta: Sequence[Number], eps: Sequence[Number]) -> Quad5:
    """4 * dot(sum delta_k V_k, sum eps_k V_k)."""
    u = [sum(delta[j] * eps[(j + m) % 5] for j in range(5)) for m in range(5)]
    near = u[1] + u[4]
    far = u[2] + u[3]
    return Quad5.of(4 * u[0] - near - far, near - far)


def norm2_quad(delta: Sequence[Number]) -> Quad5:
    """4 * |sum delta_k V_k|^2."""
    return dot_quad(delta, delta)
