"""Exact arithmetic in Z[ω], ω the positive root of x² + x - 1 (so ω² = 1 - ω)."""
from __future__ import annotations

from typing import Union

OMEGA_FLOAT = 0.6180339887498949


class ZOmega:
    def __init__(self, p: int, q: int = 0) -> None:
        self._p = int(p)
        self._q = int(q)

    @property
    def p(self) -> int:
        return self._p

    @property
    def q(self) -> int:
        return self._q

    @classmethod
    def from_int(cls, x: int) -> "ZOmega":
        return cls(x, 0)

    @classmethod
    def omega(cls) -> "ZOmega":
        return cls(0, 1)

    def _coerce(self, other: Union[int, "ZOmega"]) -> "ZOmega":
        if isinstance(other, ZOmega):
            return other
        if isinstance(other, int):
            return self.from_int(other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"ZOmega({self._p}, {self._q})"

    def __str__(self) -> str:
        if self._q == 0:
            return str(self._p)
        if self._p == 0:
            return {1: "ω", -1: "-ω"}.get(self._q, f"{self._q}ω")
        return f"{self._p}{self._q:+}ω"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = self.from_int(other)
        if not isinstance(other, ZOmega):
            return False
        return self._p == other.p and self._q == other.q

    def __hash__(self) -> int:
        return hash((self._p, self._q))

    def __bool__(self) -> bool:
        return bool(self._p or self._q)

    def __neg__(self) -> "ZOmega":
        return ZOmega(-self._p, -self._q)

    def __add__(self, other: Union[int, "ZOmega"]) -> "ZOmega":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ZOmega(self._p + other.p, self._q + other.q)

    def __radd__(self, other: int) -> "ZOmega":
        return self + other

    def __sub__(self, other: Union[int, "ZOmega"]) -> "ZOmega":
        return self + (-other)

    def __rsub__(self, other: int) -> "ZOmega":
        return (-self) + other

    def __mul__(self, other: Union[int, "ZOmega"]) -> "ZOmega":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # (a + bω)(c + dω) = ac + bd + (ad + bc - bd)ω
        a, b, c, d = self._p, self._q, other.p, other.q
        return ZOmega(a * c + b * d, a * d + b * c - b * d)

    def __rmul__(self, other: int) -> "ZOmega":
        return self * other

    def conjugate(self) -> "ZOmega":
        """Image under ω -> -1 - ω, the other root of x² + x - 1."""
        return ZOmega(self._p - self._q, -self._q)

    @property
    def norm(self) -> int:
        return (self * self.conjugate()).p

    def __float__(self) -> float:
        return self._p + self._q * OMEGA_FLOAT


OMEGA = ZOmega.omega()
