"""Size caps and the two error types shared by every module."""

from __future__ import annotations

from dataclasses import dataclass


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class BudgetExceeded(RuntimeError):
    """A brute-force sweep would exceed its configured work cap."""


@dataclass(frozen=True)
class Limits:
    # largest n = p + q a Signature may have
    n_max: int = 16
    # largest n for brute-force (k, l) sweeps and subspace closure checks
    brute_force_n_max: int = 12
    # largest n for exhaustive grade-subset enumeration (2**(n+1) candidates)
    enumerate_n_max: int = 14
    # max blade pairs C(n,k)*C(n,l) examined for a single (k, l) cell
    pair_budget: int = 1 << 24


DEFAULT_LIMITS = Limits()
