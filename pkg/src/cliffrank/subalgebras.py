"""Graded Lie subalgebras: direct sums of whole grade components.

In the complex-lie variant a subspace with grade set S is the real span of
a_k * (real grade-k blades) for k in S, where a_k = 1 for k = 2, 3 (mod 4)
and a_k = i for k = 0, 1 (mod 4); these are exactly the anti-self-conjugate
elements.  The plain variant uses coefficient 1 on every grade.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import product

import numpy as np

from .algebra import Multivector, Signature, blades_of_grade, commutator, grade
from .config import DEFAULT_LIMITS, BudgetExceeded, DomainError, Limits
from .gaussian import ONE, Gaussian, i_power
from .rank_formulas import COMMUTATOR, bracket_pairs, kernel_grades

COMPLEX_LIE = "complex-lie"
PLAIN = "plain"
VARIANTS = (COMPLEX_LIE, PLAIN)

# smallest n for which each catalogue item is stated
ITEM_MIN_N = {1: 1, 2: 1, 3: 2, 4: 3, 5: 4, 6: 4, 7: 5, 8: 6, 9: 6, 10: 7, 11: 8, 12: 9}


def phase(k: int) -> int:
    """Exponent of i in a_k."""
    return 1 if k % 4 in (0, 1) else 0


def coefficient(k: int, variant: str = COMPLEX_LIE) -> Gaussian:
    return i_power(phase(k)) if variant == COMPLEX_LIE else ONE


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise DomainError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


@dataclass(frozen=True)
class GradedSubspace:
    n: int
    grades: frozenset[int]
    variant: str = COMPLEX_LIE
    provenance: str = "catalog"
    item: int | None = None

    def __post_init__(self) -> None:
        _check_variant(self.variant)
        if any(not 0 <= g <= self.n for g in self.grades):
            raise DomainError(f"grades {sorted(self.grades)} not within [0, {self.n}]")

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.grades))

    def label(self) -> str:
        if not self.grades:
            return "0"
        parts = []
        for k in self.key:
            prefix = "i " if self.variant == COMPLEX_LIE and phase(k) else ""
            parts.append(f"{prefix}u^{k}")
        return " + ".join(parts)


# -- the twelve families ------------------------------------------------------

def _truncated(pattern_mod4: tuple[int, ...], n: int, fits) -> frozenset[int] | None:
    pattern = [g for g in range(1, n + 1) if g % 4 in pattern_mod4]
    tops = [k for k in pattern if fits(k, n)]
    if not tops:
        return None
    top = max(tops)
    return frozenset(g for g in pattern if g <= top)


def item_grades(item: int, n: int) -> frozenset[int] | None:
    """Grade set of a catalogue item at dimension n, evaluated from its
    formula even below the item's stated threshold (None if undefined)."""
    if item == 1:
        return frozenset({0})
    if item == 2:
        return frozenset({n})
    if item == 3:
        return frozenset({1, 2}) if n >= 2 else None
    if item == 4:
        return frozenset({2}) if n >= 2 else None
    if item == 5:
        top = n if n % 2 == 0 else n - 1
        return frozenset(range(1, top + 1)) or None
    if item == 6:
        return frozenset({2, n - 1}) if n >= 3 else None
    if item == 7:
        return frozenset({2, n - 2}) if n >= 4 else None
    if item == 8:
        if n < 4:
            return None
        return frozenset({1, 2, n - 2, n - 1} if n % 2 else {1, 2, n - 1, n})
    if item == 9:
        return _truncated((2, 3), n, lambda k, n: n in ((k + 1, k + 2) if k % 2 else (k, k + 1)))
    if item == 10:
        return _truncated((0, 2), n, lambda k, n: n in (k + 1, k + 2))
    if item == 11:
        return _truncated((1, 2), n, lambda k, n: k % 2 == 0 and k <= n <= k + 3)
    if item == 12:
        return _truncated((2,), n, lambda k, n: k + 1 <= n <= k + 4)
    raise DomainError(f"catalogue items are numbered 1..12, got {item}")


def _augmentations(n: int, grades: frozenset[int]) -> list[frozenset[int]]:
    out = [grades | {0}]
    if n % 2 == 1 or all(g % 2 == 0 for g in grades):
        out += [grades | {n}, grades | {0, n}]
    return out


def catalog(n: int, variant: str = COMPLEX_LIE, augmented: bool = False) -> list[GradedSubspace]:
    """Items 1..12 that apply at dimension n, deduplicated, optionally followed
    by the reducible augmentations (adjoin grade 0, and grade n where allowed)."""
    _check_variant(variant)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    seen: set[frozenset[int]] = set()
    base: list[GradedSubspace] = []
    for item, min_n in ITEM_MIN_N.items():
        if n < min_n:
            continue
        g = item_grades(item, n)
        if g is None or g in seen:
            continue
        seen.add(g)
        base.append(GradedSubspace(n, g, variant, f"item {item}", item))
    if not augmented:
        return base
    extra = []
    for sub in base:
        for g in _augmentations(n, sub.grades):
            if g not in seen:
                seen.add(g)
                extra.append(GradedSubspace(n, g, variant, f"augmented item {sub.item}", sub.item))
    return base + extra


# -- transcribed listings -----------------------------------------------------

_TERM = re.compile(r"^(i )?u\^(\d+)$")


@dataclass(frozen=True)
class ListingEntry:
    n: int
    item: int
    printed: str
    grades: frozenset[int]
    # grades printed with an i in front
    imaginary: frozenset[int]


@lru_cache(maxsize=1)
def _listing() -> dict[int, tuple[ListingEntry, ...]]:
    text = resources.files("cliffrank.data").joinpath("subalgebra_listing.tsv").read_text()
    out: dict[int, list[ListingEntry]] = {}
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        n_s, item_s, printed = line.split("\t")
        grades, imaginary = set(), set()
        for term in printed.split(" + "):
            m = _TERM.match(term.strip())
            if m is None:
                raise ValueError(f"unparseable listing term {term!r} in {line!r}")
            k = int(m.group(2))
            grades.add(k)
            if m.group(1):
                imaginary.add(k)
        out.setdefault(int(n_s), []).append(
            ListingEntry(int(n_s), int(item_s), printed, frozenset(grades), frozenset(imaginary)))
    return {n: tuple(v) for n, v in out.items()}


def listing_entries(n: int) -> tuple[ListingEntry, ...]:
    if not 1 <= n <= 10:
        raise DomainError(f"the transcribed listings cover n = 1..10, got {n}")
    return _listing()[n]


def paper_listing(n: int) -> list[GradedSubspace]:
    return [GradedSubspace(n, e.grades, COMPLEX_LIE, f"listing item {e.item}", e.item)
            for e in listing_entries(n)]


# -- closure ------------------------------------------------------------------

def _phase_ok(k: int, l: int, m: int) -> bool:
    return (phase(k) + phase(l) - phase(m)) % 2 == 0


def closure_check_predicted(s: GradedSubspace) -> bool:
    for k in s.grades:
        for l in s.grades:
            for m in kernel_grades(s.n, k, l, COMMUTATOR):
                if m not in s.grades:
                    return False
                if s.variant == COMPLEX_LIE and not _phase_ok(k, l, m):
                    return False
    return True


@dataclass(frozen=True)
class BracketProfile:
    """What the commutators of all scaled basis blades of grades (k, l) produce."""
    grades: frozenset[int]
    # every coefficient lies in the real span of a_m for its output grade m
    phases_ok: bool


@lru_cache(maxsize=4096)
def bracket_profile(sig: Signature, k: int, l: int, variant: str,
                    limits: Limits = DEFAULT_LIMITS) -> BracketProfile:
    a, b, d = bracket_pairs(sig, k, l, COMMUTATOR, limits)
    hit = d != 0
    m = np.bitwise_count(a[hit] ^ b[hit])
    scale = coefficient(k, variant) * coefficient(l, variant)
    grades, ok = set(), True
    for mm, dd in set(zip(m.tolist(), d[hit].tolist())):
        grades.add(mm)
        c = scale * Gaussian(dd)
        if not (c * coefficient(mm, variant).conjugate()).is_real():
            ok = False
    return BracketProfile(frozenset(grades), ok)


def _closure_direct(sig: Signature, s: GradedSubspace) -> bool:
    scaled = [Multivector(sig, {b: coefficient(g, s.variant)})
              for g in sorted(s.grades) for b in blades_of_grade(sig.n, g)]
    for x, y in product(scaled, repeat=2):
        for blade, c in commutator(sig, x, y).items():
            m = grade(blade)
            if m not in s.grades:
                return False
            if not (c * coefficient(m, s.variant).conjugate()).is_real():
                return False
    return True


def closure_check_bruteforce(sig: Signature, s: GradedSubspace, limits: Limits = DEFAULT_LIMITS,
                             method: str = "table") -> bool:
    """Blade-level closure: every commutator of two scaled basis blades from S
    must land in the real span of a_m * (grade-m blades) with m in S.

    ``method="table"`` aggregates per grade pair over the vectorised sign
    table; ``method="direct"`` multiplies Multivector objects pair by pair.
    """
    if sig.n != s.n:
        raise DomainError(f"signature has n = {sig.n} but subspace has n = {s.n}")
    if method == "direct":
        if sig.n > limits.brute_force_n_max:
            raise BudgetExceeded(f"brute force limited to n <= {limits.brute_force_n_max}")
        return _closure_direct(sig, s)
    if method != "table":
        raise DomainError(f"unknown method {method!r}")
    for k in s.grades:
        for l in s.grades:
            prof = bracket_profile(sig, k, l, s.variant, limits)
            if not prof.grades <= s.grades or not prof.phases_ok:
                return False
    return True


# -- enumeration --------------------------------------------------------------

@lru_cache(maxsize=64)
def _requirements(n: int, variant: str) -> tuple[tuple[int, ...], ...]:
    """req[k][l]: bit mask of grades [u^k, v^l] reaches; bit n+1 marks a
    phase violation so no subset can satisfy it."""
    poison = 1 << (n + 1)
    req = []
    for k in range(n + 1):
        row = []
        for l in range(n + 1):
            mask = 0
            for m in kernel_grades(n, k, l, COMMUTATOR):
                mask |= 1 << m
                if variant == COMPLEX_LIE and not _phase_ok(k, l, m):
                    mask |= poison
            row.append(mask)
        req.append(tuple(row))
    return tuple(req)


def _mask_grades(mask: int) -> frozenset[int]:
    return frozenset(g for g in range(mask.bit_length()) if mask >> g & 1)


def enumerate_closed(n: int, variant: str = COMPLEX_LIE,
                     limits: Limits = DEFAULT_LIMITS) -> list[GradedSubspace]:
    """Every grade subset of {0..n} that passes the predicted closure test,
    in lexicographic order of sorted grade tuples, each tagged with its origin:
    "trivial" (empty), "item k", "augmented item k", or "extra"."""
    _check_variant(variant)
    if not 1 <= n <= limits.enumerate_n_max:
        raise BudgetExceeded(f"enumeration limited to 1 <= n <= {limits.enumerate_n_max}, got {n}")
    req = _requirements(n, variant)
    origin = {}
    for sub in reversed(catalog(n, variant, augmented=True)):
        origin[sub.grades] = (sub.provenance, sub.item)
    found = []
    for mask in range(1 << (n + 1)):
        members = [g for g in range(n + 1) if mask >> g & 1]
        closed = True
        for k in members:
            need = 0
            row = req[k]
            for l in members:
                need |= row[l]
            if need & ~mask:
                closed = False
                break
        if not closed:
            continue
        grades = _mask_grades(mask)
        if not grades:
            prov, item = "trivial", None
        else:
            prov, item = origin.get(grades, ("extra", None))
        found.append(GradedSubspace(n, grades, variant, prov, item))
    found.sort(key=lambda s: s.key)
    return found


# -- three-way comparison -----------------------------------------------------

@dataclass
class DiffReport:
    n: int
    listed_entries: int = 0
    catalog_entries: int = 0
    closed_subsets: int = 0
    # (listing label, signature) pairs failing blade-level closure
    listing_failures: list[str] = field(default_factory=list)
    # printed i-decorations that disagree with a_k
    decoration_mismatches: list[str] = field(default_factory=list)
    catalog_mismatches: list[str] = field(default_factory=list)
    # listing entries missing from the enumeration
    not_enumerated: list[str] = field(default_factory=list)
    extras: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.listing_failures or self.decoration_mismatches
                    or self.catalog_mismatches or self.not_enumerated)

    def lines(self) -> list[str]:
        out = [f"n={self.n}: {self.listed_entries} listed, {self.catalog_entries} catalogued, "
               f"{self.closed_subsets} closed grade subsets, {len(self.extras)} extra"]
        for title, rows in (("NOT CLOSED", self.listing_failures),
                            ("DECORATION", self.decoration_mismatches),
                            ("CATALOG", self.catalog_mismatches),
                            ("NOT ENUMERATED", self.not_enumerated),
                            ("extra", self.extras)):
            out += [f"  {title}: {r}" for r in rows]
        return out


def diff_report(n: int, limits: Limits = DEFAULT_LIMITS) -> DiffReport:
    entries = listing_entries(n)
    listed = paper_listing(n)
    cat = catalog(n)
    closed = enumerate_closed(n, COMPLEX_LIE, limits)
    rep = DiffReport(n, len(listed), len(cat), len(closed))

    for e in entries:
        expected = frozenset(k for k in e.grades if phase(k))
        if e.imaginary != expected:
            rep.decoration_mismatches.append(f"item {e.item} printed {e.printed!r}")

    for sub in listed:
        for sig in Signature.splits(n):
            if not closure_check_bruteforce(sig, sub, limits):
                rep.listing_failures.append(f"item {sub.item} {sub.label()} under Cl({sig.p},{sig.q})")

    by_item = {s.item: s for s in cat}
    for sub in listed:
        other = by_item.get(sub.item)
        if other is None or other.grades != sub.grades:
            got = other.label() if other else "absent"
            rep.catalog_mismatches.append(f"item {sub.item}: listing {sub.label()} vs catalogue {got}")
    for item in set(by_item) - {s.item for s in listed}:
        rep.catalog_mismatches.append(f"item {item}: catalogue {by_item[item].label()} not listed")

    closed_sets = {s.grades for s in closed}
    rep.not_enumerated = [f"item {s.item} {s.label()}" for s in listed if s.grades not in closed_sets]
    rep.extras = [s.label() for s in closed if s.provenance == "extra"]
    return rep
