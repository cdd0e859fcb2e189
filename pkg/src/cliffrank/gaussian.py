"""Exact Gaussian integers re + im*i."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

Number = Union[int, "Gaussian"]


@dataclass(frozen=True, slots=True)
class Gaussian:
    re: int = 0
    im: int = 0

    @classmethod
    def coerce(cls, x: Number) -> Gaussian:
        if isinstance(x, Gaussian):
            return x
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"cannot make an exact Gaussian integer from {x!r}")
        return cls(x, 0)

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __neg__(self) -> Gaussian:
        return Gaussian(-self.re, -self.im)

    def __add__(self, other: Number) -> Gaussian:
        o = Gaussian.coerce(other)
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Number) -> Gaussian:
        o = Gaussian.coerce(other)
        return Gaussian(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Number) -> Gaussian:
        return Gaussian.coerce(other) - self

    def __mul__(self, other: Number) -> Gaussian:
        o = Gaussian.coerce(other)
        return Gaussian(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.re == other and self.im == 0
        if isinstance(other, Gaussian):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def conjugate(self) -> Gaussian:
        return Gaussian(self.re, -self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}i"
        im = "i" if abs(self.im) == 1 else f"{abs(self.im)}i"
        return f"{self.re}{'+' if self.im > 0 else '-'}{im}"


ONE = Gaussian(1, 0)
I = Gaussian(0, 1)


def i_power(e: int) -> Gaussian:
    """i**e for any integer e."""
    return (ONE, I, Gaussian(-1, 0), Gaussian(0, -1))[e % 4]
