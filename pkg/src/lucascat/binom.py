"""Lucanomial coefficients {m choose k} by two independent routes.

The factorial route is the definition: {m}! / ({k}! {m-k}!) realized by
exact division, which doubles as a mechanical proof that the quotient
has integer coefficients.  The recurrence route

    {m choose k} = {k+1} * {m-1 choose k} + t * {m-k-1} * {m-1 choose k-1}

follows from the addition law {a+b} = {a+1}{b} + t*{a}{b-1} applied with
a = k, b = m-k inside {m}!/({k}!{m-k}!), and is kept as an independent
cross-check with a different arithmetic profile.

Out-of-range k (negative or above m) yields the zero polynomial, which
is the convention that keeps the Catalan identity uniform at n = 1.
"""

from __future__ import annotations

import threading

from .errors import IntegralityError, NonDivisibleError
from .lucas import IdentityVerdict, LucasCache, _compare
from .poly import ONE, T, ZERO, Polynomial


class LucanomialEngine:
    """Memoized lucanomial computation on top of a LucasCache."""

    def __init__(self, cache: LucasCache | None = None):
        self.cache = cache if cache is not None else LucasCache()
        self._factorial_memo: dict = {}
        self._recurrence_memo: dict = {}
        self._lock = threading.RLock()

    def binom_factorial(self, m: int, k: int) -> Polynomial:
        """{m choose k} = {m}!/({k}!{m-k}!) via exact division.

        Raises IntegralityError if the division fails, which would mean
        the quotient is not an integer-coefficient polynomial.
        """
        if m < 0:
            raise ValueError("m must be nonnegative")
        if k < 0 or k > m:
            return ZERO
        key = (m, k)
        hit = self._factorial_memo.get(key)
        if hit is not None:
            return hit
        cache = self.cache
        try:
            # divide by the two small factorials in turn; a single
            # division by their product would square the divisor size
            partial = cache.lucastorial(m).exact_div(cache.lucastorial(k))
            result = partial.exact_div(cache.lucastorial(m - k))
        except NonDivisibleError as exc:
            raise IntegralityError(
                f"lucanomial ({m} choose {k}) is not an integer-coefficient polynomial",
                numerator=cache.lucastorial(m),
                denominator=cache.lucastorial(k) * cache.lucastorial(m - k),
            ) from exc
        self._factorial_memo[key] = result
        return result

    def binom_recurrence(self, m: int, k: int) -> Polynomial:
        """{m choose k} via the addition-law recurrence."""
        if m < 0:
            raise ValueError("m must be nonnegative")
        if k < 0 or k > m:
            return ZERO
        if k == 0 or k == m:
            return ONE
        memo = self._recurrence_memo
        hit = memo.get((m, k))
        if hit is not None:
            return hit
        cache = self.cache
        # iterative row fill keeps recursion depth flat for large m
        with self._lock:
            for row in range(1, m + 1):
                top = min(row - 1, k)
                for col in range(1, top + 1):
                    if (row, col) in memo:
                        continue
                    left = memo[(row - 1, col - 1)] if col > 1 else ONE
                    if col == row - 1:
                        right = ONE
                    else:
                        right = memo[(row - 1, col)]
                    value = cache.lucas(col + 1) * right + T * cache.lucas(row - col - 1) * left
                    memo[(row, col)] = value
            return memo[(m, k)]

    def binom_symmetry_check(self, m: int) -> IdentityVerdict:
        """Check {m choose k} = {m choose m-k} for every 0 <= k <= m."""
        if m < 0:
            raise ValueError("m must be nonnegative")
        for k in range(m // 2 + 1):
            verdict = _compare(self.binom_factorial(m, k), self.binom_factorial(m, m - k))
            if not verdict:
                return verdict
        return IdentityVerdict(True)
