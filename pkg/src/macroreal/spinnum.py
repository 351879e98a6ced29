"""Exact spin magnitudes and magnetic quantum numbers.

Both ``j`` and ``m`` are stored doubled so that parity tests and group
boundaries are integer comparisons.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class Spin:
    """Spin magnitude ``j`` stored as the integer ``2j``."""

    twice_j: int

    def __post_init__(self):
        if isinstance(self.twice_j, bool) or not isinstance(self.twice_j, int):
            raise TypeError(f"twice_j must be an int, got {self.twice_j!r}")
        if self.twice_j < 1:
            raise ValueError(f"spin must satisfy 2j >= 1, got 2j={self.twice_j}")

    @classmethod
    def from_j(cls, j) -> "Spin":
        """Build from ``j`` given as int, Fraction, float or string like ``"3/2"``."""
        twice = Fraction(j) * 2
        if twice.denominator != 1:
            raise ValueError(f"j={j} is not a multiple of 1/2")
        return cls(int(twice))

    @property
    def j(self) -> Fraction:
        return Fraction(self.twice_j, 2)

    def dimension(self) -> int:
        return self.twice_j + 1

    def __str__(self):
        return str(self.j)


@dataclass(frozen=True, order=True)
class MagQuantum:
    """Magnetic quantum number ``m`` stored as ``2m``."""

    twice_m: int

    @property
    def m(self) -> Fraction:
        return Fraction(self.twice_m, 2)

    def check(self, spin: Spin) -> "MagQuantum":
        """Raise ValueError unless this is an allowed projection of ``spin``."""
        if abs(self.twice_m) > spin.twice_j:
            raise ValueError(f"|m|={abs(self.m)} exceeds j={spin.j}")
        if (self.twice_m - spin.twice_j) % 2:
            raise ValueError(f"m={self.m} has the wrong parity for j={spin.j}")
        return self

    def __str__(self):
        return str(self.m)


def outcomes(spin: Spin) -> list[MagQuantum]:
    """The ``2j + 1`` values of ``m``, ascending from ``-j`` to ``+j``."""
    return [MagQuantum(tm) for tm in range(-spin.twice_j, spin.twice_j + 1, 2)]


def is_integer_spin(spin: Spin) -> bool:
    return spin.twice_j % 2 == 0
