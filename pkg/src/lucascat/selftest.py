"""Seeded randomized property suites for the polynomial kernel.

Used both by the CLI selftest subcommand and by the acceptance tests.
All randomness flows from one random.Random(seed), so a run is fully
reproducible from its seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, List

from .poly import Polynomial, parse

MAX_RANDOM_EXPONENT = 12
MAX_RANDOM_COEFF = 10**6


def random_polynomial(rng: random.Random, max_terms: int = 6) -> Polynomial:
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        se = rng.randint(0, MAX_RANDOM_EXPONENT)
        te = rng.randint(0, MAX_RANDOM_EXPONENT)
        c = rng.randint(-MAX_RANDOM_COEFF, MAX_RANDOM_COEFF)
        terms.append(((se, te), c))
    return Polynomial(terms)


def random_nonzero_polynomial(rng: random.Random, max_terms: int = 6) -> Polynomial:
    while True:
        p = random_polynomial(rng, max_terms)
        if p:
            return p


def _canonical_ok(p: Polynomial) -> bool:
    return all(c != 0 for _, _, c in p.terms())


@dataclass
class SuiteResult:
    name: str
    cases: int
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _run_cases(name: str, cases: int, rng: random.Random, check: Callable) -> SuiteResult:
    result = SuiteResult(name=name, cases=cases)
    for i in range(cases):
        message = check(rng)
        if message:
            result.failures.append(f"case {i}: {message}")
            if len(result.failures) >= 5:
                break
    return result


def ring_axioms_suite(seed: int, cases: int = 1000) -> SuiteResult:
    """Commutativity, associativity, distributivity, additive inverse."""
    rng = random.Random(seed)

    def check(rng: random.Random):
        a, b, c = (random_polynomial(rng) for _ in range(3))
        if a + b != b + a:
            return f"add commutativity: {a!r}, {b!r}"
        if a * b != b * a:
            return f"mul commutativity: {a!r}, {b!r}"
        if (a + b) + c != a + (b + c):
            return f"add associativity: {a!r}, {b!r}, {c!r}"
        if (a * b) * c != a * (b * c):
            return f"mul associativity: {a!r}, {b!r}, {c!r}"
        if a * (b + c) != a * b + a * c:
            return f"distributivity: {a!r}, {b!r}, {c!r}"
        if a + (-1) * a != Polynomial.zero():
            return f"additive inverse: {a!r}"
        for p in (a + b, a * b):
            if not _canonical_ok(p):
                return f"canonical form violated: {p!r}"
        return None

    return _run_cases("ring-axioms", cases, rng, check)


def division_roundtrip_suite(seed: int, cases: int = 1000) -> SuiteResult:
    """exact_div(a*b, b) == a for random a and nonzero b."""
    rng = random.Random(seed + 1)

    def check(rng: random.Random):
        a = random_polynomial(rng)
        b = random_nonzero_polynomial(rng)
        try:
            q = (a * b).exact_div(b)
        except Exception as exc:  # noqa: BLE001 - report any failure
            return f"exact_div raised {exc!r} on a={a!r}, b={b!r}"
        if q != a:
            return f"round trip failed: a={a!r}, b={b!r}, got {q!r}"
        return None

    return _run_cases("division-roundtrip", cases, rng, check)


def eval_homomorphism_suite(seed: int, cases: int = 1000) -> SuiteResult:
    """Evaluation commutes with + and *."""
    rng = random.Random(seed + 2)

    def check(rng: random.Random):
        a, b = random_polynomial(rng), random_polynomial(rng)
        sv = rng.randint(-50, 50)
        tv = rng.randint(-50, 50)
        if (a + b).evaluate(sv, tv) != a.evaluate(sv, tv) + b.evaluate(sv, tv):
            return f"addition hom: {a!r}, {b!r} at ({sv},{tv})"
        if (a * b).evaluate(sv, tv) != a.evaluate(sv, tv) * b.evaluate(sv, tv):
            return f"multiplication hom: {a!r}, {b!r} at ({sv},{tv})"
        return None

    return _run_cases("eval-homomorphism", cases, rng, check)


def parse_format_suite(seed: int, cases: int = 1000) -> SuiteResult:
    """parse(p.to_text()) == p and JSON round trip."""
    rng = random.Random(seed + 3)

    def check(rng: random.Random):
        p = random_polynomial(rng)
        text = p.to_text()
        try:
            back = parse(text)
        except Exception as exc:  # noqa: BLE001
            return f"parse raised {exc!r} on {text!r}"
        if back != p:
            return f"text round trip failed on {text!r}"
        if Polynomial.from_json_terms(p.to_json_terms()) != p:
            return f"json round trip failed on {text!r}"
        return None

    return _run_cases("parse-format-roundtrip", cases, rng, check)


def run_all(seed: int, cases: int = 1000) -> List[SuiteResult]:
    return [
        ring_axioms_suite(seed, cases),
        division_roundtrip_suite(seed, cases),
        eval_homomorphism_suite(seed, cases),
        parse_format_suite(seed, cases),
    ]
