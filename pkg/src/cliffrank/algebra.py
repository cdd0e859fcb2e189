"""Blade and multivector arithmetic for the complex Clifford algebra Cl(p, q).

A basis blade e^{a1...ak} (a1 < ... < ak) is stored as an int bit set with
bit (a - 1) set for each generator e^a, so the grade of a blade is its
popcount and the identity e is 0.  Multivector coefficients are exact
Gaussian integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping

import numpy as np

from .config import DEFAULT_LIMITS, DomainError
from .gaussian import Gaussian, Number


@dataclass(frozen=True)
class Signature:
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise DomainError(f"signature counts must be nonnegative, got ({self.p}, {self.q})")
        if not 1 <= self.p + self.q <= DEFAULT_LIMITS.n_max:
            raise DomainError(
                f"n = p + q must lie in [1, {DEFAULT_LIMITS.n_max}], got {self.p + self.q}"
            )

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def negative_mask(self) -> int:
        """Bits of the generators that square to -e."""
        return ((1 << self.q) - 1) << self.p

    def metric(self, a: int) -> int:
        """eta^{aa} for the 1-based generator index a."""
        if not 1 <= a <= self.n:
            raise DomainError(f"generator index {a} outside [1, {self.n}]")
        return 1 if a <= self.p else -1

    def check_blade(self, blade: int) -> None:
        if not 0 <= blade < (1 << self.n):
            raise DomainError(f"blade {blade:#b} is not valid for n = {self.n}")

    @classmethod
    def splits(cls, n: int) -> list[Signature]:
        """Every signature with p + q = n."""
        return [cls(p, n - p) for p in range(n, -1, -1)]


def grade(blade: int) -> int:
    return blade.bit_count()


def blade_indices(blade: int) -> tuple[int, ...]:
    """Ascending 1-based generator indices of a blade."""
    out = []
    a = 1
    while blade:
        if blade & 1:
            out.append(a)
        blade >>= 1
        a += 1
    return tuple(out)


def blade_from_indices(indices: Iterable[int]) -> int:
    """Bit set for a strictly ascending list of 1-based generator indices."""
    blade = 0
    prev = 0
    for a in indices:
        if a <= prev:
            raise DomainError(f"indices must be strictly ascending and >= 1, got {list(indices)}")
        blade |= 1 << (a - 1)
        prev = a
    return blade


def blades_of_grade(n: int, k: int) -> list[int]:
    """All grade-k blades of an n-generator algebra, in increasing bit order."""
    return sorted(sum(1 << i for i in c) for c in combinations(range(n), k))


def blade_product_reference(sig: Signature, a: int, b: int) -> tuple[int, int]:
    """Naive e^A e^B: bubble sort the concatenated index word, then contract.

    Every adjacent transposition of two distinct generators flips the sign;
    each adjacent equal pair e^c e^c collapses to metric(c).
    """
    sig.check_blade(a)
    sig.check_blade(b)
    word = list(blade_indices(a)) + list(blade_indices(b))
    sign = 1
    for i in range(len(word)):
        for j in range(len(word) - 1 - i):
            if word[j] > word[j + 1]:
                word[j], word[j + 1] = word[j + 1], word[j]
                sign = -sign
    result = 0
    j = 0
    while j < len(word):
        if j + 1 < len(word) and word[j] == word[j + 1]:
            sign *= sig.metric(word[j])
            j += 2
        else:
            result |= 1 << (word[j] - 1)
            j += 1
    return sign, result


def blade_product(sig: Signature, a: int, b: int) -> tuple[int, int]:
    """e^A e^B as (sign, blade) via bit-parallel transposition counting."""
    sig.check_blade(a)
    sig.check_blade(b)
    swaps = 0
    shifted = a >> 1
    while shifted:
        swaps += (shifted & b).bit_count()
        shifted >>= 1
    swaps += (a & b & sig.negative_mask).bit_count()
    return (-1 if swaps & 1 else 1), a ^ b


@lru_cache(maxsize=4)
def blade_sign_table(sig: Signature) -> np.ndarray:
    """Signs of e^A e^B for every blade pair, as an int8 array indexed [A, B].

    Same arithmetic as blade_product, vectorised over all 4**n pairs; the
    product blade is always A ^ B.
    """
    size = 1 << sig.n
    blades = np.arange(size, dtype=np.uint32)
    a = blades[:, None]
    b = blades[None, :]
    swaps = np.bitwise_count(a & b & np.uint32(sig.negative_mask)).astype(np.uint8)
    for shift in range(1, sig.n):
        swaps += np.bitwise_count((a >> np.uint32(shift)) & b).astype(np.uint8)
    table = 1 - 2 * (swaps & 1).astype(np.int8)
    table.setflags(write=False)
    return table


class Multivector:
    """Immutable sparse map blade -> Gaussian coefficient; zeros are never stored."""

    __slots__ = ("sig", "_terms")

    def __init__(self, sig: Signature, terms: Mapping[int, Number] | None = None):
        self.sig = sig
        clean: dict[int, Gaussian] = {}
        for blade, coeff in (terms or {}).items():
            sig.check_blade(blade)
            c = Gaussian.coerce(coeff)
            if c:
                clean[blade] = c
        self._terms = clean

    @classmethod
    def _trusted(cls, sig: Signature, terms: dict[int, Gaussian]) -> Multivector:
        # terms already validated and zero-free
        mv = cls.__new__(cls)
        mv.sig = sig
        mv._terms = terms
        return mv

    @classmethod
    def scalar(cls, sig: Signature, value: Number = 1) -> Multivector:
        return cls(sig, {0: value})

    @classmethod
    def blade(cls, sig: Signature, indices: Iterable[int], coeff: Number = 1) -> Multivector:
        b = blade_from_indices(indices)
        return cls(sig, {b: coeff})

    @property
    def terms(self) -> dict[int, Gaussian]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, Gaussian]]:
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.sig, frozenset(self._terms.items())))

    def _check_same(self, other: Multivector) -> None:
        if self.sig != other.sig:
            raise DomainError(f"signature mismatch: {self.sig} vs {other.sig}")

    def __add__(self, other: Multivector) -> Multivector:
        self._check_same(other)
        out = dict(self._terms)
        for blade, c in other._terms.items():
            s = out.get(blade, Gaussian()) + c
            if s:
                out[blade] = s
            else:
                out.pop(blade, None)
        return Multivector._trusted(self.sig, out)

    def __neg__(self) -> Multivector:
        return Multivector._trusted(self.sig, {b: -c for b, c in self._terms.items()})

    def __sub__(self, other: Multivector) -> Multivector:
        return self + (-other)

    def scale(self, factor: Number) -> Multivector:
        f = Gaussian.coerce(factor)
        if not f:
            return Multivector._trusted(self.sig, {})
        return Multivector._trusted(self.sig, {b: c * f for b, c in self._terms.items()})

    def __mul__(self, other: Multivector | Number) -> Multivector:
        if isinstance(other, Multivector):
            return geometric_product(self.sig, self, other)
        return self.scale(other)

    def __rmul__(self, other: Number) -> Multivector:
        return self.scale(other)

    def __repr__(self) -> str:
        return f"Multivector({self.sig.p}, {self.sig.q}: {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for blade, c in self.items():
            name = format_blade(blade)
            if blade == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(name)
            elif c == -1:
                parts.append("-" + name)
            elif c.re and c.im:
                parts.append(f"({c}){name}")
            else:
                parts.append(f"{c}{name}")
        return " + ".join(parts).replace("+ -", "- ")


def format_blade(blade: int) -> str:
    idx = blade_indices(blade)
    if not idx:
        return "e"
    if len(idx) == 1:
        return f"e^{idx[0]}"
    sep = "," if idx[-1] >= 10 else ""
    return "e^{" + sep.join(map(str, idx)) + "}"


def geometric_product(sig: Signature, x: Multivector, y: Multivector) -> Multivector:
    x._check_same(y)
    if x.sig != sig:
        raise DomainError(f"multivector signature {x.sig} does not match {sig}")
    out: dict[int, Gaussian] = {}
    for a, ca in x._terms.items():
        for b, cb in y._terms.items():
            sign, blade = blade_product(sig, a, b)
            c = ca * cb
            if sign < 0:
                c = -c
            out[blade] = out.get(blade, Gaussian()) + c
    return Multivector._trusted(sig, {b: c for b, c in out.items() if c})


def grade_projection(x: Multivector, k: int) -> Multivector:
    if not 0 <= k <= x.sig.n:
        raise DomainError(f"grade {k} outside [0, {x.sig.n}]")
    return Multivector._trusted(x.sig, {b: c for b, c in x._terms.items() if grade(b) == k})


def support_grades(x: Multivector) -> frozenset[int]:
    return frozenset(grade(b) for b in x._terms)


def commutator(sig: Signature, x: Multivector, y: Multivector) -> Multivector:
    return geometric_product(sig, x, y) - geometric_product(sig, y, x)


def anticommutator(sig: Signature, x: Multivector, y: Multivector) -> Multivector:
    return geometric_product(sig, x, y) + geometric_product(sig, y, x)


def reversion_sign(k: int) -> int:
    """Sign picked up by a grade-k blade when its generator order is reversed."""
    return -1 if (k * (k - 1) // 2) & 1 else 1


def conjugation_star(x: Multivector) -> Multivector:
    """Reverse every blade and complex-conjugate every coefficient."""
    out = {}
    for b, c in x._terms.items():
        c = c.conjugate()
        out[b] = c if reversion_sign(grade(b)) > 0 else -c
    return Multivector._trusted(x.sig, out)


def is_group_element(sig: Signature, u: Multivector) -> bool:
    """U* U == e exactly."""
    return geometric_product(sig, conjugation_star(u), u) == Multivector.scalar(sig)


def is_lie_element(x: Multivector) -> bool:
    """x* == -x exactly."""
    return conjugation_star(x) == -x
