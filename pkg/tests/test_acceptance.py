"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s`.  The full sweep to
n = 200 is computed once and shared; it is by far the dominant cost.
"""

import time

import pytest

from lucascat import oracles, selftest
from lucascat.binom import LucanomialEngine
from lucascat.catalan import CatalanVerifier, SweepConfig
from lucascat.cli import main
from lucascat.lucas import LucasCache, lemma21_check, product_identity_check

SWEEP_BOUND = 200


def report(criterion: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"\nACCEPTANCE {criterion}: {status}{suffix}")
    assert ok, f"{criterion} failed{suffix}"


@pytest.fixture(scope="module")
def full_sweep():
    verifier = CatalanVerifier()
    start = time.time()
    reports = verifier.sweep(SweepConfig(max_n=SWEEP_BOUND))
    elapsed = time.time() - start
    return reports, elapsed


def test_criterion_1_identity_sweep(full_sweep):
    reports, elapsed = full_sweep
    bad = [r.n for r in reports if not (r.division_ok and r.identity_ok)]
    report(
        "1 identity sweep",
        len(reports) == SWEEP_BOUND and not bad,
        f"n=1..{SWEEP_BOUND} exact route agreement, {elapsed:.1f}s"
        + (f"; failures at {bad}" if bad else ""),
    )


def test_criterion_2_positivity_sweep(full_sweep):
    reports, _ = full_sweep
    bad = [r.n for r in reports if not r.positivity_ok]
    report(
        "2 positivity sweep",
        not bad,
        f"all coefficients strictly positive for n=1..{SWEEP_BOUND}"
        + (f"; failures at {bad}" if bad else ""),
    )


def test_criterion_3_addition_law():
    cache = LucasCache()
    grid_ok = all(
        lemma21_check(cache, m, n).holds for m in range(1, 51) for n in range(1, 51)
    )
    diagonal_ok = all(
        product_identity_check(cache, n).holds == lemma21_check(cache, n, n).holds
        and product_identity_check(cache, n).holds
        for n in range(1, 201)
    )
    report(
        "3 addition law",
        grid_ok and diagonal_ok,
        "grid 1<=m,n<=50 and diagonal agreement to n=200",
    )


def test_criterion_4_catalan_specialization():
    verifier = CatalanVerifier()
    bad = []
    for n in range(1, 31):
        expected = oracles.catalan_number(n)
        got = verifier.catalan_via_division(n).evaluate(2, -1)
        if got != expected:
            bad.append(n)
    report(
        "4 ordinary Catalan specialization",
        not bad,
        f"(s,t)=(2,-1) matches oracle up to C_30={oracles.catalan_number(30)}",
    )


def test_criterion_5_lucanomial_route_agreement():
    engine = LucanomialEngine()
    bad = []
    for m in range(0, 61):
        for k in range(0, m + 1):
            factorial = engine.binom_factorial(m, k)  # raises on non-divisibility
            if factorial != engine.binom_recurrence(m, k) or not factorial.is_positive:
                bad.append((m, k))
    report(
        "5 lucanomial route agreement",
        not bad,
        "factorial and recurrence routes agree, divisions exact, 0<=k<=m<=60",
    )


def test_criterion_6_independent_oracles():
    cache = LucasCache()
    tiling_ok = all(
        oracles.strip_tiling_poly(n - 1) == cache.lucas(n) for n in range(1, 26)
    )
    engine = LucanomialEngine(cache)
    gauss_ok = True
    for q in (2, 3):
        for m in range(0, 31):
            for k in range(0, m + 1):
                value = engine.binom_factorial(m, k).evaluate(q + 1, -q)
                if value != oracles.gaussian_binomial_at(m, k, q):
                    gauss_ok = False
    report(
        "6 independent oracles",
        tiling_ok and gauss_ok,
        "strip tilings n<=25; Gaussian specialization q in {2,3}, m<=30",
    )


def test_criterion_7_kernel_soundness():
    results = selftest.run_all(seed=20110117, cases=1000)
    failed = [r.name for r in results if not r.ok]
    report(
        "7 kernel soundness",
        not failed,
        "ring axioms, division round-trip, eval homomorphism, parse/format; "
        "1000 seeded cases each" + (f"; failed: {failed}" if failed else ""),
    )


def test_criterion_8_determinism(capsys):
    main(["verify", "--max-n", "50", "--jobs", "1"])
    serial = capsys.readouterr().out
    main(["verify", "--max-n", "50", "--jobs", "8"])
    wide = capsys.readouterr().out
    with capsys.disabled():
        report(
            "8 determinism",
            serial == wide and bool(serial),
            "verify --max-n 50 output byte-identical for jobs=1 and jobs=8",
        )
