"""Truncated Hilbert series in s^(1/D) with exact integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

# coefficients at desk scale stay far below this; exceeding it means int64 might wrap
_GUARD = 2**62


def common_denominator(*values) -> int:
    return lcm(1, *(Fraction(v).denominator for v in values))


@dataclass(frozen=True)
class HilbertSeries:
    """sum_k coeffs[k] s^(k/D) for k/D <= order."""

    coeffs: np.ndarray
    D: int
    order: Fraction

    def __post_init__(self):
        if self.coeffs.size and np.abs(self.coeffs).max() >= _GUARD:
            raise OverflowError("Hilbert series coefficient too large for exact int64 arithmetic")

    @property
    def length(self) -> int:
        return int(self.order * self.D) + 1

    @classmethod
    def zero(cls, D: int, order) -> HilbertSeries:
        order = Fraction(order)
        return cls(np.zeros(int(order * D) + 1, dtype=np.int64), D, order)

    @classmethod
    def one(cls, D: int, order) -> HilbertSeries:
        z = cls.zero(D, order)
        c = z.coeffs.copy()
        c[0] = 1
        return cls(c, D, z.order)

    @classmethod
    def from_dims(cls, dims, D: int, order) -> HilbertSeries:
        """Integer-graded series with dims[j] in degree j (and dims[-1] repeated beyond)."""
        z = cls.zero(D, order)
        c = z.coeffs.copy()
        top = int(order)
        for j in range(top + 1):
            c[j * D] = dims(j)
        return cls(c, D, z.order)

    @classmethod
    def weighted_polynomial_ring(cls, weights, D: int, order) -> HilbertSeries:
        hs = cls.one(D, order)
        for w in weights:
            hs = hs.over_one_minus(w)
        return hs

    def _index(self, a) -> int:
        k = Fraction(a) * self.D
        if k.denominator != 1:
            raise ValueError(f"exponent {a} not on the 1/{self.D} grid")
        return int(k)

    def over_one_minus(self, w) -> HilbertSeries:
        """Multiply by 1/(1 - s^w), w > 0."""
        step = self._index(w)
        if step <= 0:
            raise ValueError("weights must be positive")
        c = self.coeffs.copy()
        for k in range(step, c.size):
            c[k] += c[k - step]
        return HilbertSeries(c, self.D, self.order)

    def times_one_minus(self, a) -> HilbertSeries:
        """Multiply by (1 - s^a), a >= 0."""
        step = self._index(a)
        c = self.coeffs.copy()
        if step < c.size:
            c[step:] -= self.coeffs[: c.size - step]
        return HilbertSeries(c, self.D, self.order)

    def shifted(self, a) -> HilbertSeries:
        """Multiply by s^a, a >= 0."""
        step = self._index(a)
        c = np.zeros_like(self.coeffs)
        if step < c.size:
            c[step:] = self.coeffs[: c.size - step]
        return HilbertSeries(c, self.D, self.order)

    def convolve_shifts(self, shift_counts: dict) -> HilbertSeries:
        """sum over (a, m) in shift_counts of m * s^a * self."""
        mask = np.zeros_like(self.coeffs)
        for a, m in shift_counts.items():
            k = self._index(a)
            if k < 0:
                raise ValueError("negative exponent shift")
            if k < mask.size:
                mask[k] += m
        c = np.convolve(mask, self.coeffs)[: self.coeffs.size]
        return HilbertSeries(c.astype(np.int64), self.D, self.order)

    def refine(self, D: int) -> HilbertSeries:
        """Same series on a finer grid 1/D (self.D must divide D)."""
        if D % self.D:
            raise ValueError("refinement must be a multiple of the current denominator")
        s = D // self.D
        c = np.zeros(int(self.order * D) + 1, dtype=np.int64)
        c[::s] = self.coeffs
        return HilbertSeries(c, D, self.order)

    def regrade(self, q: int) -> HilbertSeries:
        """Series of ^eM from that of M: degree d of ^eM is degree q*d of M."""
        return HilbertSeries(self.coeffs.copy(), self.D * q, self.order / q)

    def truncate(self, order) -> HilbertSeries:
        order = Fraction(order)
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return HilbertSeries(self.coeffs[: int(order * self.D) + 1].copy(), self.D, order)

    def __add__(self, other: HilbertSeries) -> HilbertSeries:
        if (self.D, self.order) != (other.D, other.order):
            raise ValueError("series on different grids")
        return HilbertSeries(self.coeffs + other.coeffs, self.D, self.order)

    def __eq__(self, other):
        return (
            isinstance(other, HilbertSeries)
            and (self.D, self.order) == (other.D, other.order)
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def first_difference(self, other: HilbertSeries):
        """(exponent, self coeff, other coeff) at the first mismatch, or None."""
        diff = np.nonzero(self.coeffs != other.coeffs)[0]
        if not diff.size:
            return None
        k = int(diff[0])
        return Fraction(k, self.D), int(self.coeffs[k]), int(other.coeffs[k])

    def as_dict(self) -> dict[Fraction, int]:
        return {Fraction(k, self.D): int(v) for k, v in enumerate(self.coeffs) if v}
