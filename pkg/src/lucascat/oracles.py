"""Independent integer and enumeration references for validation.

Nothing here reuses the recurrences or division machinery it is meant
to check: tilings are enumerated explicitly, and the integer sequences
are computed with plain integer arithmetic.  Only Polynomial
construction and addition are borrowed from the kernel.
"""

from __future__ import annotations

from .poly import Polynomial

STRIP_LENGTH_LIMIT = 30


def strip_tiling_poly(length: int) -> Polynomial:
    """Generating polynomial of 1 x length strip tilings.

    Sums s^(#monominoes) * t^(#dominoes) over every tiling by
    monominoes and dominoes, by explicit depth-first enumeration of
    tiling prefixes.  Equals the Lucas polynomial {length+1}.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    if length > STRIP_LENGTH_LIMIT:
        raise ValueError(f"length {length} exceeds the enumeration guard {STRIP_LENGTH_LIMIT}")
    counts: dict = {}
    stack = [(length, 0, 0)]
    while stack:
        remaining, monos, doms = stack.pop()
        if remaining == 0:
            key = (monos, doms)
            counts[key] = counts.get(key, 0) + 1
            continue
        stack.append((remaining - 1, monos + 1, doms))
        if remaining >= 2:
            stack.append((remaining - 2, monos, doms + 1))
    return Polynomial(counts)


def catalan_number(n: int) -> int:
    """The n-th Catalan number via the exact product formula."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    binom = 1
    for i in range(1, n + 1):
        binom = binom * (n + i) // i
    quotient, remainder = divmod(binom, n + 1)
    assert remainder == 0
    return quotient


def fibonacci(n: int) -> int:
    """F(n) with F(0) = 0, F(1) = 1."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def gaussian_binomial_at(m: int, k: int, q: int) -> int:
    """Gaussian binomial [m choose k]_q at an integer q >= 2.

    Computed with the integer q-Pascal recurrence
    [m choose k] = [m-1 choose k-1] + q^k * [m-1 choose k];
    zero outside 0 <= k <= m.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if q < 2:
        raise ValueError("q must be at least 2")
    if k < 0 or k > m:
        return 0
    row = [1]
    for r in range(1, m + 1):
        prev = row
        row = [1]
        for c in range(1, r):
            row.append(prev[c - 1] + q**c * prev[c])
        row.append(1)
    return row[k]


def pascal_binomial(m: int, k: int) -> int:
    """C(m, k) from an additively built Pascal triangle; zero out of range."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if k < 0 or k > m:
        return 0
    row = [1]
    for _ in range(m):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[k]


def fibonomial_catalan_number(n: int) -> int:
    """Value of the Lucas-Catalan polynomial at (s, t) = (1, 1).

    Recomputed through plain integers: Fibonacci factorials give the
    Fibonomial central binomial, divided exactly by F(n+1).
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    fib = [fibonacci(i) for i in range(2 * n + 2)]

    def fibonorial(k: int) -> int:
        out = 1
        for i in range(1, k + 1):
            out *= fib[i]
        return out

    numerator = fibonorial(2 * n)
    denominator = fibonorial(n) ** 2 * fib[n + 1]
    quotient, remainder = divmod(numerator, denominator)
    assert remainder == 0
    return quotient
