"""Grade supports of [U^k, V^l] and {U^k, V^l}.

Three independent routes:

* ``kernel_grades``: two blades of grades k, l sharing s generators multiply
  into grade k + l - 2s and satisfy AB = (-1)^(kl - s) BA, so the
  commutator survives iff kl - s is odd (anticommutator: even).
* ``theorem_grades``: the closed-form case split by the parities of n, k, l.
* ``actual_grades``: brute force over every pair of basis blades.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterator

import numpy as np

from .algebra import Signature, blade_sign_table, blades_of_grade
from .config import DEFAULT_LIMITS, BudgetExceeded, DomainError, Limits

COMMUTATOR = "commutator"
ANTICOMMUTATOR = "anticommutator"
KINDS = (COMMUTATOR, ANTICOMMUTATOR)

GradeSet = frozenset


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise DomainError(f"unknown bracket kind {kind!r}; expected one of {KINDS}")


def _check_args(n: int, k: int, l: int, kind: str) -> None:
    _check_kind(kind)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not (0 <= k <= n and 0 <= l <= n):
        raise DomainError(f"ranks ({k}, {l}) must lie in [0, {n}]")


def kernel_grades(n: int, k: int, l: int, kind: str) -> GradeSet:
    _check_args(n, k, l, kind)
    a, b = max(k, l), min(k, l)
    want = 1 if kind == COMMUTATOR else 0
    return frozenset(
        a + b - 2 * s for s in range(max(0, a + b - n), b + 1) if (k * l - s) % 2 == want
    )


def _prog(start: int, stop: int) -> GradeSet:
    """start, start + 4, ..., stop (empty if stop < start)."""
    return frozenset(range(start, stop + 1, 4))


def _commutator_cases(n: int, k: int, l: int) -> GradeSet:
    if l == 0:
        return frozenset()
    if k == n:
        return frozenset({n - l}) if n % 2 == 0 and l % 2 == 1 else frozenset()
    n_even, k_even, l_even = n % 2 == 0, k % 2 == 0, l % 2 == 0
    if n >= k + l:
        if l_even:
            return _prog(k - l + 2, k + l - 2)
        if k_even:
            return _prog(k - l, k + l - 2)
        return _prog(k - l + 2, k + l)
    top = 2 * n - k - l
    if n_even and k_even and not l_even:
        return _prog(k - l, top)
    if not n_even and k_even and not l_even:
        return _prog(k - l, top - 2)
    if (n_even and not k_even) or (not n_even and k_even and l_even):
        return _prog(k - l + 2, top)
    # n odd, k odd; or n, k, l all even
    return _prog(k - l + 2, top - 2)


def _anticommutator_cases(n: int, k: int, l: int) -> GradeSet:
    if l == 0:
        return frozenset({k})
    if k == n:
        return frozenset() if n % 2 == 0 and l % 2 == 1 else frozenset({n - l})
    n_even, k_even, l_even = n % 2 == 0, k % 2 == 0, l % 2 == 0
    if n >= k + l:
        if l_even:
            return _prog(k - l, k + l)
        if k_even:
            return _prog(k - l + 2, k + l)
        return _prog(k - l, k + l - 2)
    top = 2 * n - k - l
    if not n_even and k_even and not l_even:
        return _prog(k - l + 2, top)
    if n_even and k_even and not l_even:
        return _prog(k - l + 2, top - 2)
    if (not n_even and not k_even) or (n_even and k_even and l_even):
        return _prog(k - l, top)
    # n even, k odd; or n odd with k, l even
    return _prog(k - l, top - 2)


def theorem_grades(n: int, k: int, l: int, kind: str) -> GradeSet:
    """Closed-form case analysis; assumes k >= l after swapping (both brackets
    are symmetric up to sign)."""
    _check_args(n, k, l, kind)
    if k < l:
        k, l = l, k
    if kind == COMMUTATOR:
        return _commutator_cases(n, k, l)
    return _anticommutator_cases(n, k, l)


def _check_budget(sig: Signature, k: int, l: int, limits: Limits) -> None:
    if sig.n > limits.brute_force_n_max:
        raise BudgetExceeded(
            f"brute force limited to n <= {limits.brute_force_n_max} (brute_force_n_max), got n = {sig.n}"
        )
    pairs = comb(sig.n, k) * comb(sig.n, l)
    if pairs > limits.pair_budget:
        raise BudgetExceeded(
            f"{pairs} blade pairs for (k, l) = ({k}, {l}) exceeds pair_budget = {limits.pair_budget}"
        )


def _grade_blades(n: int, k: int) -> np.ndarray:
    return np.asarray(blades_of_grade(n, k), dtype=np.int64)


def bracket_pairs(sig: Signature, k: int, l: int, kind: str,
                  limits: Limits = DEFAULT_LIMITS) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Every (A, B) with grade(A) = k, grade(B) = l, as arrays (A, B, d) where
    the bracket of e^A and e^B equals d * e^{A xor B}, d in {-2, 0, 2}."""
    _check_args(sig.n, k, l, kind)
    _check_budget(sig, k, l, limits)
    table = blade_sign_table(sig)
    rows, cols = _grade_blades(sig.n, k), _grade_blades(sig.n, l)
    ab = table[np.ix_(rows, cols)].astype(np.int64)
    ba = table[np.ix_(cols, rows)].T.astype(np.int64)
    d = ab - ba if kind == COMMUTATOR else ab + ba
    a_grid, b_grid = np.meshgrid(rows, cols, indexing="ij")
    return a_grid.ravel(), b_grid.ravel(), d.ravel()


def actual_grades(sig: Signature, k: int, l: int, kind: str,
                  limits: Limits = DEFAULT_LIMITS) -> GradeSet:
    a, b, d = bracket_pairs(sig, k, l, kind, limits)
    hit = d != 0
    return frozenset(int(g) for g in np.unique(np.bitwise_count(a[hit] ^ b[hit])))


@dataclass(frozen=True)
class RankTable:
    n: int
    kind: str
    cells: dict[tuple[int, int], GradeSet] = field(compare=True)

    def cell(self, k: int, l: int) -> GradeSet:
        return self.cells[(k, l)]

    def render_cell(self, k: int, l: int) -> str:
        return render_grades(self.cells[(k, l)])

    def to_text(self) -> str:
        lines = ["\t".join([f"n={self.n}"] + [str(l) for l in range(1, self.n + 1)])]
        for k in range(1, self.n + 1):
            lines.append("\t".join([str(k)] + [self.render_cell(k, l) for l in range(1, self.n + 1)]))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind,
            "cells": [[sorted(self.cells[(k, l)]) for l in range(1, self.n + 1)]
                      for k in range(1, self.n + 1)],
        }

    @classmethod
    def from_json(cls, doc: dict | str) -> RankTable:
        if isinstance(doc, str):
            doc = json.loads(doc)
        n, kind = int(doc["n"]), doc["kind"]
        _check_kind(kind)
        rows = doc["cells"]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise DomainError(f"table for n = {n} must be {n} x {n}")
        cells = {(k + 1, l + 1): frozenset(rows[k][l]) for k in range(n) for l in range(n)}
        return cls(n, kind, cells)

    def is_symmetric(self) -> bool:
        return all(self.cells[(k, l)] == self.cells[(l, k)] for k, l in self.cells)


def render_grades(grades: GradeSet) -> str:
    return "/".join(map(str, sorted(grades))) if grades else "-"


def parse_grades(text: str) -> GradeSet:
    if text == "-":
        return frozenset()
    return frozenset(int(t) for t in text.split("/"))


def build_table(n: int, kind: str, limits: Limits = DEFAULT_LIMITS) -> RankTable:
    _check_kind(kind)
    if not 1 <= n <= limits.n_max:
        raise DomainError(f"table size n must lie in [1, {limits.n_max}], got {n}")
    cells = {(k, l): theorem_grades(n, k, l, kind)
             for k in range(1, n + 1) for l in range(1, n + 1)}
    return RankTable(n, kind, cells)


# Hand-written rank rules (equal ranks, one fixed rank, small ranks, ranks
# near n).  Where superscripts on U and V were lost, the rank pair of each
# line is inferred from its position in the block.  A bare "0" in an
# anticommutator line with equal ranks is read as the rank-0 element W^0,
# matching the anticommutator tables; elsewhere it is the zero element.

@dataclass(frozen=True)
class SpecialRule:
    block: str
    label: str
    kind: str
    # yields every (n, k, l) the rule covers for n <= n_max
    cases: Callable[[int], Iterator[tuple[int, int, int]]]
    # the hand-written right-hand side
    predict: Callable[[int, int, int], GradeSet]


@dataclass
class SpecialCaseReport:
    n_max: int
    checked: int = 0
    rules: int = 0
    mismatches: list[str] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def lines(self) -> list[str]:
        out = [f"special cases: {self.rules} rules, {self.checked} evaluations, "
               f"{len(self.mismatches)} mismatches (n <= {self.n_max})"]
        out += [f"  MISMATCH {m}" for m in self.mismatches]
        out += [f"  skipped: unreadable source: {s}" for s in self.skipped]
        return out


def _fs(*gs: int) -> GradeSet:
    return frozenset(g for g in gs)


def _pair(k_of_n: Callable[[int], int], l_of_n: Callable[[int], int]):
    def cases(n_max: int):
        for n in range(1, n_max + 1):
            k, l = k_of_n(n), l_of_n(n)
            if 0 <= l <= k <= n:
                yield n, k, l
    return cases


def _equal_ranks(where: Callable[[int, int], bool]):
    def cases(n_max: int):
        for n in range(1, n_max + 1):
            for k in range(0, n + 1):
                if where(n, k):
                    yield n, k, k
    return cases


def _fixed_second(l: int):
    def cases(n_max: int):
        for n in range(1, n_max + 1):
            for a in range(l, n + 1):
                yield n, a, l
    return cases


def _equal_low_comm(n: int, k: int, _l: int) -> GradeSet:
    # n >= 2k
    return _prog(2, 2 * k) if k % 2 else _prog(2, 2 * k - 2)


def _equal_high_comm(n: int, k: int, _l: int) -> GradeSet:
    # 2k >= n
    return _prog(2, 2 * n - 2 * k) if (n - k) % 2 else _prog(2, 2 * n - 2 * k - 2)


def _equal_low_anti(n: int, k: int, _l: int) -> GradeSet:
    return _prog(0, 2 * k - 2) if k % 2 else _prog(0, 2 * k)


def _equal_high_anti(n: int, k: int, _l: int) -> GradeSet:
    return _prog(0, 2 * n - 2 * k - 2) if (n - k) % 2 else _prog(0, 2 * n - 2 * k)


def _fixed1_comm(n, a, _l):
    if a % 2 == 0:
        return _fs(a - 1)
    return _fs(a + 1) if a != n else _fs()


def _fixed1_anti(n, a, _l):
    if a % 2 == 1:
        return _fs(a - 1)
    return _fs(a + 1) if a != n else _fs()


def _fixed2_comm(n, a, _l):
    return _fs(a) if a != n else _fs()


def _fixed2_anti(n, a, _l):
    return _fs(a - 2, a + 2) if a not in (n, n - 1) else _fs(a - 2)


def _fixed3(n, a, _l, parity):
    # parity: residue of a selecting the "a - 3" branches
    if a % 2 == parity:
        return _fs(a - 3, a + 1) if a <= n - 2 else _fs(a - 3)
    if a <= n - 3:
        return _fs(a - 1, a + 3)
    if a in (n - 2, n - 1):
        return _fs(a - 1)
    return _fs()


def _fixed4_comm(n, a, _l):
    if a <= n - 3:
        return _fs(a - 2, a + 2)
    if a in (n - 2, n - 1):
        return _fs(a - 2)
    return _fs()


def _fixed4_anti(n, a, _l):
    if a <= n - 4:
        return _fs(a - 4, a, a + 4)
    if a in (n - 3, n - 2):
        return _fs(a - 4, a)
    return _fs(a - 4)


def _by_n(*branches: tuple[Callable[[int], bool], GradeSet]) -> Callable[[int, int, int], GradeSet]:
    def predict(n, _k, _l):
        for cond, value in branches:
            if cond(n):
                return value
        raise DomainError(f"no branch covers n = {n}")
    return predict


def _by_n_fn(*branches: tuple[Callable[[int], bool], Callable[[int], GradeSet]]):
    def predict(n, _k, _l):
        for cond, value in branches:
            if cond(n):
                return value(n)
        raise DomainError(f"no branch covers n = {n}")
    return predict


def _always(value: GradeSet):
    return _by_n((lambda n: True, value))


def _ge(m):
    return lambda n: n >= m


def _in(*ms):
    return lambda n: n in ms


def _even(n):
    return n % 2 == 0


def _odd(n):
    return n % 2 == 1


def _small(k: int, l: int):
    return _pair(lambda n: k, lambda n: l)


def _near(dk: int, dl: int):
    return _pair(lambda n: n - dk, lambda n: n - dl)


def _near_small(dk: int, l: int):
    return _pair(lambda n: n - dk, lambda n: l)


C, A = COMMUTATOR, ANTICOMMUTATOR

SPECIAL_RULES: tuple[SpecialRule, ...] = (
    SpecialRule("equal ranks", "[U^k, V^k], n >= 2k", C,
                _equal_ranks(lambda n, k: n >= 2 * k), _equal_low_comm),
    SpecialRule("equal ranks", "[U^k, V^k], 2k >= n", C,
                _equal_ranks(lambda n, k: 2 * k >= n), _equal_high_comm),
    SpecialRule("equal ranks", "[U^k, V^k], k = 0 or n", C,
                _equal_ranks(lambda n, k: k in (0, n)), lambda n, k, l: _fs()),
    SpecialRule("equal ranks", "{U^k, V^k}, n >= 2k", A,
                _equal_ranks(lambda n, k: n >= 2 * k), _equal_low_anti),
    SpecialRule("equal ranks", "{U^k, V^k}, 2k >= n", A,
                _equal_ranks(lambda n, k: 2 * k >= n), _equal_high_anti),
    SpecialRule("equal ranks", "{U^k, V^k}, k = 0 or n", A,
                _equal_ranks(lambda n, k: k in (0, n)), lambda n, k, l: _fs(0)),
    SpecialRule("fixed rank", "[U^a, V^1]", C, _fixed_second(1), _fixed1_comm),
    SpecialRule("fixed rank", "{U^a, V^1}", A, _fixed_second(1), _fixed1_anti),
    SpecialRule("fixed rank", "[U^a, V^2]", C, _fixed_second(2), _fixed2_comm),
    SpecialRule("fixed rank", "{U^a, V^2}", A, _fixed_second(2), _fixed2_anti),
    SpecialRule("fixed rank", "[U^a, V^3]", C, _fixed_second(3), lambda n, a, l: _fixed3(n, a, l, 0)),
    SpecialRule("fixed rank", "{U^a, V^3}", A, _fixed_second(3), lambda n, a, l: _fixed3(n, a, l, 1)),
    SpecialRule("fixed rank", "[U^a, V^4]", C, _fixed_second(4), _fixed4_comm),
    SpecialRule("fixed rank", "{U^a, V^4}", A, _fixed_second(4), _fixed4_anti),
    # small ranks
    SpecialRule("small ranks", "[U^1, V^1]", C, _small(1, 1), _by_n((_ge(2), _fs(2)), (_in(1), _fs()))),
    SpecialRule("small ranks", "{U^1, V^1}", A, _small(1, 1), _always(_fs(0))),
    SpecialRule("small ranks", "[U^2, V^1]", C, _small(2, 1), _always(_fs(1))),
    SpecialRule("small ranks", "[U^2, V^2]", C, _small(2, 2), _by_n((_ge(3), _fs(2)), (_in(2), _fs()))),
    SpecialRule("small ranks", "{U^2, V^2}", A, _small(2, 2),
                _by_n((lambda n: n not in (2, 3), _fs(0, 4)), (_in(2, 3), _fs(0)))),
    SpecialRule("small ranks", "[U^3, V^1]", C, _small(3, 1), _by_n((_ge(4), _fs(4)), (_in(3), _fs()))),
    SpecialRule("small ranks", "{U^3, V^1}", A, _small(3, 1), _always(_fs(2))),
    SpecialRule("small ranks", "[U^3, V^2]", C, _small(3, 2), _by_n((_ge(4), _fs(3)), (_in(3), _fs()))),
    SpecialRule("small ranks", "{U^3, V^2}", A, _small(3, 2),
                _by_n((lambda n: n not in (3, 4), _fs(1, 5)), (_in(3, 4), _fs(1)))),
    SpecialRule("small ranks", "[U^3, V^3]", C, _small(3, 3),
                _by_n((_ge(6), _fs(2, 6)), (_in(4, 5), _fs(2)), (_in(3), _fs()))),
    SpecialRule("small ranks", "{U^3, V^3}", A, _small(3, 3),
                _by_n((_ge(5), _fs(0, 4)), (_in(3, 4), _fs(0)))),
    SpecialRule("small ranks", "[U^4, V^1]", C, _small(4, 1), _always(_fs(3))),
    SpecialRule("small ranks", "{U^4, V^1}", A, _small(4, 1), _by_n((_ge(5), _fs(5)), (_in(4), _fs()))),
    SpecialRule("small ranks", "[U^4, V^2]", C, _small(4, 2), _by_n((_ge(5), _fs(4)), (_in(4), _fs()))),
    SpecialRule("small ranks", "{U^4, V^2}", A, _small(4, 2),
                _by_n((lambda n: n not in (4, 5), _fs(2, 6)), (_in(4, 5), _fs(2)))),
    SpecialRule("small ranks", "[U^4, V^3]", C, _small(4, 3),
                _by_n((_ge(6), _fs(1, 5)), (_in(4, 5), _fs(1)))),
    SpecialRule("small ranks", "{U^4, V^3}", A, _small(4, 3),
                _by_n((_ge(7), _fs(3, 7)), (_in(5, 6), _fs(3)), (_in(4), _fs()))),
    SpecialRule("small ranks", "[U^4, V^4]", C, _small(4, 4),
                _by_n((_ge(7), _fs(2, 6)), (_in(5, 6), _fs(2)), (_in(4), _fs()))),
    SpecialRule("small ranks", "{U^4, V^4}", A, _small(4, 4),
                _by_n((_ge(8), _fs(0, 4, 8)), (_in(6, 7), _fs(0, 4)), (_in(4, 5), _fs(0)))),
    # ranks near n
    SpecialRule("near n", "[U^n, V^n]", C, _near(0, 0), _always(_fs())),
    SpecialRule("near n", "{U^n, V^n}", A, _near(0, 0), _always(_fs(0))),
    SpecialRule("near n", "[U^n, V^(n-1)]", C, _near(0, 1), _by_n((_odd, _fs()), (_even, _fs(1)))),
    SpecialRule("near n", "{U^n, V^(n-1)}", A, _near(0, 1), _by_n((_even, _fs()), (_odd, _fs(1)))),
    SpecialRule("near n", "[U^n, V^(n-2)]", C, _near(0, 2), _always(_fs())),
    SpecialRule("near n", "{U^n, V^(n-2)}", A, _near(0, 2), _always(_fs(2))),
    SpecialRule("near n", "[U^(n-1), V^(n-1)]", C, _near(1, 1), _by_n((lambda n: n != 1, _fs(2)), (_in(1), _fs()))),
    SpecialRule("near n", "{U^(n-1), V^(n-1)}", A, _near(1, 1), _always(_fs(0))),
    SpecialRule("near n", "[U^(n-1), V^(n-2)]", C, _near(1, 2),
                _by_n((_odd, _fs(1)), (lambda n: n % 2 == 0 and n != 2, _fs(3)), (_in(2), _fs()))),
    SpecialRule("near n", "{U^(n-1), V^(n-2)}", A, _near(1, 2), _by_n((_even, _fs(1)), (_odd, _fs(3)))),
    SpecialRule("near n", "[U^(n-2), V^(n-2)]", C, _near(2, 2), _by_n((_ge(3), _fs(2)), (_in(2), _fs()))),
    SpecialRule("near n", "{U^(n-2), V^(n-2)}", A, _near(2, 2),
                _by_n((_ge(4), _fs(0, 4)), (_in(2, 3), _fs(0)))),
    # first rank near n, second small
    SpecialRule("near n / small", "[U^n, V^1]", C, _near_small(0, 1),
                _by_n_fn((_even, lambda n: _fs(n - 1)), (_odd, lambda n: _fs()))),
    SpecialRule("near n / small", "{U^n, V^1}", A, _near_small(0, 1),
                _by_n_fn((_even, lambda n: _fs()), (_odd, lambda n: _fs(n - 1)))),
    SpecialRule("near n / small", "[U^(n-1), V^1]", C, _near_small(1, 1),
                _by_n_fn((_even, lambda n: _fs(n)), (_odd, lambda n: _fs(n - 2)))),
    SpecialRule("near n / small", "{U^(n-1), V^1}", A, _near_small(1, 1),
                _by_n_fn((_even, lambda n: _fs(n - 2)), (_odd, lambda n: _fs(n)))),
    SpecialRule("near n / small", "[U^(n-2), V^1]", C, _near_small(2, 1),
                _by_n_fn((_even, lambda n: _fs(n - 3)), (_odd, lambda n: _fs(n - 1)))),
    SpecialRule("near n / small", "{U^(n-2), V^1}", A, _near_small(2, 1),
                _by_n_fn((_even, lambda n: _fs(n - 1)), (_odd, lambda n: _fs(n - 3)))),
    SpecialRule("near n / small", "[U^n, V^2]", C, _near_small(0, 2), _always(_fs())),
    SpecialRule("near n / small", "{U^n, V^2}", A, _near_small(0, 2),
                _by_n_fn((lambda n: True, lambda n: _fs(n - 2)))),
    SpecialRule("near n / small", "[U^(n-1), V^2]", C, _near_small(1, 2),
                _by_n_fn((lambda n: True, lambda n: _fs(n - 1)))),
    SpecialRule("near n / small", "{U^(n-1), V^2}", A, _near_small(1, 2),
                _by_n_fn((lambda n: True, lambda n: _fs(n - 3)))),
    SpecialRule("near n / small", "[U^(n-2), V^2]", C, _near_small(2, 2),
                _by_n_fn((lambda n: True, lambda n: _fs(n - 2)))),
    SpecialRule("near n / small", "{U^(n-2), V^2}", A, _near_small(2, 2),
                _by_n_fn((lambda n: True, lambda n: _fs(n - 4, n)))),
)

# Lines whose printed conditions contradict themselves are not encoded.
SKIPPED_LINES: tuple[str, ...] = (
    "small ranks {U^2, V^1}: printed 'W^3, n >= 2; 0, n = 2' assigns two values at n = 2",
)


def special_case_report(n_max: int) -> SpecialCaseReport:
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    report = SpecialCaseReport(n_max, rules=len(SPECIAL_RULES), skipped=list(SKIPPED_LINES))
    for rule in SPECIAL_RULES:
        for n, k, l in rule.cases(n_max):
            predicted = rule.predict(n, k, l)
            actual = theorem_grades(n, k, l, rule.kind)
            report.checked += 1
            if predicted != actual:
                report.mismatches.append(
                    f"{rule.block} {rule.label} at n={n}, (k, l)=({k}, {l}): "
                    f"rule {render_grades(predicted)} vs theorem {render_grades(actual)}"
                )
    return report
