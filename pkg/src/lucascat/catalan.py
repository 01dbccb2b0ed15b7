"""Lucas-Catalan polynomials by two routes, with positivity verification.

The Lucas-Catalan polynomial for n is {2n choose n}/{n+1}.  Two routes:

* division route: compute the central lucanomial {2n choose n} and
  divide it exactly by {n+1};
* identity route: {2n-1 choose n-1} + t * {2n-1 choose n-2}.

Large-n sweeps use a product ladder across n instead of lucastorial
quotients: with A(n) = {2n-1 choose n-1},

    A(n) = A(n-1) * {2n-1}{2n-2} / ({n-1}{n})
    {2n choose n}     = A(n) * {2n} / {n}
    {2n-1 choose n-2} = A(n) * {n-1} / {n+1}

Every ladder step is an exact division in Z[s,t], so each intermediate
object is certified exactly as in the factorial route (a dense table of
lucastorials up to {400}! would need tens of gigabytes).
"""

from __future__ import annotations

import hashlib
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from .binom import LucanomialEngine
from .errors import IntegralityError, NonDivisibleError
from .lucas import LucasCache
from .poly import T, ZERO, Polynomial

DEFAULT_CHECKS = ("identity", "positivity")
ALL_CHECKS = ("identity", "positivity", "lemma21", "specializations")

# reports embed the polynomial only up to this many terms; larger ones
# are summarized by a digest so report streams stay small
DEFAULT_TERM_LIMIT = 200


@dataclass(frozen=True)
class SweepConfig:
    """Settings for a verification sweep."""

    max_n: int
    checks: Tuple[str, ...] = DEFAULT_CHECKS
    jobs: int = 1
    fmt: str = "text"
    spec_point: Optional[Tuple[int, int]] = None
    seed: int = 0
    term_limit: int = DEFAULT_TERM_LIMIT
    # integer points the sweep evaluates each catalan polynomial at
    # while it is still materialized (reports may keep only a digest)
    eval_points: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError("max_n must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")
        if not self.checks:
            raise ValueError("at least one check must be selected")
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")


@dataclass
class VerificationReport:
    """Per-n verification outcome.

    The polynomial is embedded only up to the configured term-count
    cutoff; beyond it the report keeps a digest so that long sweeps do
    not pin gigabytes of coefficients in memory.
    """

    n: int
    division_ok: bool
    identity_ok: bool
    positivity_ok: bool
    catalan_poly: Optional[Polynomial] = None
    catalan_digest: Optional[dict] = None
    failure_detail: Optional[str] = None
    # evaluations of the division-route polynomial at requested points
    values: Optional[dict] = None

    @property
    def all_ok(self) -> bool:
        return self.division_ok and self.identity_ok and self.positivity_ok

    def to_json_obj(self) -> dict:
        if self.catalan_poly is not None:
            catalan = self.catalan_poly.to_json_terms()
        else:
            catalan = self.catalan_digest
        return {
            "n": self.n,
            "division_ok": self.division_ok,
            "identity_ok": self.identity_ok,
            "positivity_ok": self.positivity_ok,
            "catalan": catalan,
            "failure": self.failure_detail,
        }


def poly_digest(p: Polynomial) -> dict:
    """Compact summary of a polynomial too large to embed in a report.

    The content hash covers a canonical binary encoding of the terms;
    decimal rendering of coefficients tens of thousands of bits wide
    would be quadratic (and trips CPython's int-to-str guard).
    """
    h = hashlib.sha256()
    for se, te, c in p.terms():
        mag = abs(c)
        payload = mag.to_bytes((mag.bit_length() + 7) // 8, "little")
        h.update(se.to_bytes(8, "little"))
        h.update(te.to_bytes(8, "little"))
        h.update(b"-" if c < 0 else b"+")
        h.update(len(payload).to_bytes(8, "little"))
        h.update(payload)
    return {
        "term_count": p.term_count,
        "total_degree": p.total_degree,
        "max_coeff_bits": p.max_coeff_bits,
        "sha256": h.hexdigest(),
    }


class CatalanVerifier:
    """Computes and verifies Lucas-Catalan polynomials.

    Holds the ladder state A(n) = {2n-1 choose n-1}; the state only ever
    moves forward, and a request below the current position rebuilds
    from n = 1 (cheap relative to the forward cost).
    """

    def __init__(self, engine: Optional[LucanomialEngine] = None):
        self.engine = engine if engine is not None else LucanomialEngine()
        self._lock = threading.RLock()
        self._n = 1
        self._a = Polynomial.constant(1)  # {1 choose 0}

    @property
    def cache(self) -> LucasCache:
        return self.engine.cache

    def _odd_central(self, n: int) -> Polynomial:
        """A(n) = {2n-1 choose n-1} via the certified ladder."""
        with self._lock:
            if n < self._n:
                self._n, self._a = 1, Polynomial.constant(1)
            lucas = self.cache.lucas
            while self._n < n:
                k = self._n + 1
                num = self._a * (lucas(2 * k - 1) * lucas(2 * k - 2))
                self._a = num.exact_div(lucas(k - 1) * lucas(k))
                self._n = k
            return self._a

    def central_binomial(self, n: int) -> Polynomial:
        """{2n choose n}."""
        if n < 1:
            raise ValueError("index must be positive")
        a = self._odd_central(n)
        return (a * self.cache.lucas(2 * n)).exact_div(self.cache.lucas(n))

    def catalan_via_division(self, n: int) -> Polynomial:
        """{2n choose n} divided exactly by {n+1}.

        Raises IntegralityError if the division fails, which would
        falsify the integer-coefficient claim.
        """
        if n < 1:
            raise ValueError("index must be positive")
        b = self.central_binomial(n)
        divisor = self.cache.lucas(n + 1)
        try:
            return b.exact_div(divisor)
        except NonDivisibleError as exc:
            raise IntegralityError(
                f"{{2n choose n}} for n={n} is not divisible by {{n+1}}",
                numerator=b,
                denominator=divisor,
            ) from exc

    def catalan_via_identity(self, n: int) -> Polynomial:
        """{2n-1 choose n-1} + t * {2n-1 choose n-2}."""
        if n < 1:
            raise ValueError("index must be positive")
        a = self._odd_central(n)
        if n == 1:
            second = ZERO  # {1 choose -1} = 0 by convention
        else:
            second = (a * self.cache.lucas(n - 1)).exact_div(self.cache.lucas(n + 1))
        return a + T * second

    def _produce(self, n: int):
        try:
            catalan = self.catalan_via_division(n)
            division_ok, detail = True, None
        except IntegralityError as exc:
            catalan, division_ok = None, False
            detail = (
                f"division failed: {exc}; numerator={exc.numerator.to_text()}; "
                f"denominator={exc.denominator.to_text()}"
            )
        via_identity = self.catalan_via_identity(n)
        return n, catalan, division_ok, detail, via_identity

    @staticmethod
    def _assemble(
        produced,
        term_limit: int = DEFAULT_TERM_LIMIT,
        eval_points: Tuple[Tuple[int, int], ...] = (),
    ) -> VerificationReport:
        n, catalan, division_ok, division_failure, via_identity = produced
        failures = []
        if division_failure:
            failures.append(division_failure)
        if division_ok:
            identity_ok = catalan == via_identity
            if not identity_ok:
                failures.append(
                    "route disagreement: division -> "
                    f"{catalan.to_text()}; identity -> {via_identity.to_text()}"
                )
        else:
            identity_ok = False
        checked = catalan if catalan is not None else via_identity
        verdict = checked.positivity()
        if not verdict.positive:
            if verdict.is_zero:
                failures.append("positivity failed: zero polynomial")
            else:
                se, te, c = verdict.offending
                failures.append(f"positivity failed at s^{se}*t^{te} with coefficient {c}")
        keep_poly = catalan is not None and catalan.term_count <= term_limit
        values = None
        if eval_points and catalan is not None:
            values = {point: catalan.evaluate(*point) for point in eval_points}
        return VerificationReport(
            n=n,
            division_ok=division_ok,
            identity_ok=identity_ok,
            positivity_ok=verdict.positive,
            catalan_poly=catalan if keep_poly else None,
            catalan_digest=None if keep_poly or catalan is None else poly_digest(catalan),
            failure_detail="; ".join(failures) if failures else None,
            values=values,
        )

    def verify_n(self, n: int, term_limit: int = DEFAULT_TERM_LIMIT) -> VerificationReport:
        """Run both routes plus positivity for one n; failures are data."""
        if n < 1:
            raise ValueError("index must be positive")
        return self._assemble(self._produce(n), term_limit)

    def iter_sweep(self, config: SweepConfig) -> Iterator[VerificationReport]:
        """Yield one report per n in 1..max_n, in order.

        The ladder itself is inherently sequential; jobs > 1 runs the
        per-n report assembly concurrently.  Report content and order
        are independent of the parallelism width.
        """
        ns = range(1, config.max_n + 1)
        points = config.eval_points
        if config.spec_point is not None and config.spec_point not in points:
            points = points + (config.spec_point,)
        if config.jobs == 1:
            for n in ns:
                yield self._assemble(self._produce(n), config.term_limit, points)
        else:
            with ThreadPoolExecutor(max_workers=config.jobs) as pool:
                # polynomial production stays in n order (shared ladder);
                # assembly fans out and results are yielded in n order
                futures = [
                    pool.submit(self._assemble, self._produce(n), config.term_limit, points)
                    for n in ns
                ]
                for fut in futures:
                    yield fut.result()

    def sweep(self, config: SweepConfig) -> List[VerificationReport]:
        return list(self.iter_sweep(config))
