"""Formal points of the two-torus with monomial coordinates."""
from __future__ import annotations

from dataclasses import dataclass

from .scalars import ScalarRing

_NAMES = ("p", "q", "h", "zeta")


def _substitute(ring, e):
    ep, eq, eh, ez = e
    kind = ring.mode.kind
    if kind == "equal_pq":
        return (0, eq + ep, eh, 0)
    if kind == "root_of_unity":
        return (0, eq + ep, eh, (ez - ep) % ring.d)
    if ez:
        raise ValueError("zeta only exists in root_of_unity mode")
    return (ep, eq, eh, 0)


def monomial_text(e):
    factors = [n if k == 1 else f"{n}^{k}" for n, k in zip(_NAMES, e) if k]
    return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class TorusPoint:
    """Point ``(x1, x2)`` of T^2; each coordinate is p^i q^j h^k zeta^l.

    Coordinates are stored as exponent tuples ``(i, j, k, l)`` after the
    ring mode's substitution, so equality of points is tuple equality.
    """

    ring: ScalarRing
    x1: tuple
    x2: tuple

    @classmethod
    def make(cls, ring, x1, x2):
        x1 = tuple(x1) + (0,) * (4 - len(x1))
        x2 = tuple(x2) + (0,) * (4 - len(x2))
        return cls(ring, _substitute(ring, x1), _substitute(ring, x2))

    def _combine(self, other, sign):
        d = self.ring.d
        def add(u, v):
            w = tuple(a + sign * b for a, b in zip(u, v))
            return w[:3] + (w[3] % d,)
        return TorusPoint(self.ring, add(self.x1, other.x1), add(self.x2, other.x2))

    def __mul__(self, other):
        return self._combine(other, 1)

    def __truediv__(self, other):
        return self._combine(other, -1)

    def inverse(self):
        return self.identity()._combine(self, -1)

    def __pow__(self, k):
        out = self.identity()
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            out = out * base
        return out

    def identity(self):
        return TorusPoint(self.ring, (0, 0, 0, 0), (0, 0, 0, 0))

    def is_identity(self):
        return not any(self.x1) and not any(self.x2)

    def coordinate(self, i):
        e = self.x1 if i == 1 else self.x2
        return self.ring.monomial(*e)

    def character(self, m1, m2):
        """x1^m1 * x2^m2 as a Scalar."""
        return self.coordinate(1) ** m1 * self.coordinate(2) ** m2

    def alpha(self):
        return self.character(1, -1)

    def sort_key(self):
        return (self.x1, self.x2)

    def __str__(self):
        return f"T({monomial_text(self.x1)}, {monomial_text(self.x2)})"

    def __repr__(self):
        return str(self)
