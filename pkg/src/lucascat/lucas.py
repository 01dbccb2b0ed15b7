"""Lucas polynomials {n}, lucastorials {n}!, and the product identity.

{0} = 0, {1} = 1, {n} = s*{n-1} + t*{n-2}; {n}! = {n}{n-1}...{1} with
{0}! = 1.  Both tables grow bottom-up and monotonically inside a lock,
so concurrent readers only ever observe fully constructed entries.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Optional

from .poly import ONE, S, T, ZERO, Polynomial


@dataclass(frozen=True)
class IdentityVerdict:
    """Outcome of a polynomial identity check; lhs/rhs are set on failure."""

    holds: bool
    lhs: Optional[str] = None
    rhs: Optional[str] = None

    def __bool__(self) -> bool:
        return self.holds


def _compare(lhs: Polynomial, rhs: Polynomial) -> IdentityVerdict:
    if lhs == rhs:
        return IdentityVerdict(True)
    return IdentityVerdict(False, lhs=lhs.to_text(), rhs=rhs.to_text())


class LucasCache:
    """Memoized tables of {n} and {n}!.

    The lucastorial table is grown independently of the Lucas table:
    lucastorials get large quickly and most callers only need {n}.
    """

    def __init__(self):
        self._lucas = [ZERO, ONE]
        self._fact = [ONE]
        self._lock = threading.RLock()

    def lucas(self, n: int) -> Polynomial:
        """The Lucas polynomial {n}."""
        if n < 0:
            raise ValueError("index must be nonnegative")
        tab = self._lucas
        if n >= len(tab):
            with self._lock:
                while n >= len(self._lucas):
                    k = len(self._lucas)
                    self._lucas.append(S * self._lucas[k - 1] + T * self._lucas[k - 2])
                tab = self._lucas
        return tab[n]

    def lucastorial(self, n: int) -> Polynomial:
        """The lucastorial {n}! = {n}{n-1}...{1}, with {0}! = 1."""
        if n < 0:
            raise ValueError("index must be nonnegative")
        tab = self._fact
        if n >= len(tab):
            self.lucas(n)
            with self._lock:
                while n >= len(self._fact):
                    k = len(self._fact)
                    self._fact.append(self._lucas[k] * self._fact[k - 1])
                tab = self._fact
        return tab[n]


def product_identity_check(cache: LucasCache, n: int) -> IdentityVerdict:
    """Check {2n} = {n+1}{n} + t*{n-1}{n}."""
    if n < 1:
        raise ValueError("index must be positive")
    lhs = cache.lucas(2 * n)
    rhs = cache.lucas(n + 1) * cache.lucas(n) + T * cache.lucas(n - 1) * cache.lucas(n)
    return _compare(lhs, rhs)


def lemma21_check(cache: LucasCache, m: int, n: int) -> IdentityVerdict:
    """Check the addition law {m+n} = {m+1}{n} + t*{m}{n-1}."""
    if m < 1 or n < 1:
        raise ValueError("indices must be positive")
    lhs = cache.lucas(m + n)
    rhs = cache.lucas(m + 1) * cache.lucas(n) + T * cache.lucas(m) * cache.lucas(n - 1)
    return _compare(lhs, rhs)
