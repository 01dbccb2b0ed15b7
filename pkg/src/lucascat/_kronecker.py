"""Certified fast arithmetic for large positive homogeneous polynomials.

Everything the Lucas pipeline produces is homogeneous under the grading
w = s_exp + 2*t_exp, so such a polynomial is determined by its vector of
coefficients indexed by t_exp.  Packing that vector into one big integer
(Kronecker substitution at a power-of-two base) turns polynomial
multiplication and exact division into single GMP operations.

Soundness does not rest on the packing heuristics: a multiplication is
exact by the slot-width bound, and a division result is only returned
when the integer remainder is zero and the decoded coefficients are
small enough that the identity g*q = f is forced by injectivity of the
packing.  Any case the bounds cannot certify falls back to the greedy
dictionary algorithms in poly.py.
"""

from __future__ import annotations

from typing import Optional

from .errors import NonDivisibleError

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    mpz = int  # type: ignore[assignment]

# Below this work estimate the dict algorithms win on constant factors.
_MUL_THRESHOLD = 4096
_DIV_THRESHOLD = 4096


def _grade_and_sign(p) -> Optional[int]:
    """Grade of p if homogeneous with all coefficients > 0, else None."""
    if p.min_coeff() <= 0:
        return None
    return p.homogeneous_grade()


def _pack(terms: dict, slot_bytes: int, nslots: int) -> int:
    buf = bytearray(nslots * slot_bytes)
    for (_, te), c in terms.items():
        off = te * slot_bytes
        buf[off : off + slot_bytes] = c.to_bytes(slot_bytes, "little")
    return int.from_bytes(buf, "little")


def _unpack(value: int, slot_bytes: int, grade: int) -> Optional[dict]:
    """Decode slots back to terms of the given grade; None if out of range."""
    nbytes = (value.bit_length() + 7) // 8
    nslots = -(-nbytes // slot_bytes) if nbytes else 0
    if nslots > grade // 2 + 1:
        return None
    data = value.to_bytes(nslots * slot_bytes, "little")
    d = {}
    for te in range(nslots):
        c = int.from_bytes(data[te * slot_bytes : (te + 1) * slot_bytes], "little")
        if c:
            se = grade - 2 * te
            if se < 0:
                return None
            d[(se, te)] = c
    return d


def try_mul(f, g) -> Optional[dict]:
    """f*g as a term dict, or None when this path does not apply."""
    tf, tg = len(f._terms), len(g._terms)
    if tf * tg < _MUL_THRESHOLD:
        return None
    wf = _grade_and_sign(f)
    wg = _grade_and_sign(g)
    if wf is None or wg is None:
        return None
    # slot bound: each product slot < maxf * maxg * min(tf, tg)
    bits = f.max_coeff_bits + g.max_coeff_bits + (min(tf, tg) - 1).bit_length() + 1
    slot_bytes = (bits + 7) // 8
    w = wf + wg
    F = _pack(f._terms, slot_bytes, wf // 2 + 1)
    G = _pack(g._terms, slot_bytes, wg // 2 + 1)
    product = int(mpz(F) * mpz(G))
    d = _unpack(product, slot_bytes, w)
    assert d is not None  # slot width bound makes overflow impossible
    return d


def try_exact_div(f, g) -> Optional[dict]:
    """Exact quotient f/g as a term dict, or None to defer to greedy.

    Raises NonDivisibleError when integer evaluation proves no exact
    polynomial quotient exists.
    """
    tf, tg = len(f._terms), len(g._terms)
    if tf * tg < _DIV_THRESHOLD:
        return None
    wf = _grade_and_sign(f)
    wg = _grade_and_sign(g)
    if wf is None or wg is None:
        return None
    if wg > wf:
        # grades add under multiplication, so no quotient can exist
        raise NonDivisibleError(f"grade {wf} not divisible by grade {wg}")
    wq = wf - wg
    guard_bits = g.max_coeff_bits + (tg - 1).bit_length() + 2
    bits = f.max_coeff_bits + guard_bits
    slot_bytes = (bits + 7) // 8
    F = _pack(f._terms, slot_bytes, wf // 2 + 1)
    G = _pack(g._terms, slot_bytes, wg // 2 + 1)
    Q, R = divmod(mpz(F), mpz(G))
    if R:
        # f(B) not divisible by g(B) implies f not divisible by g
        raise NonDivisibleError("integer specialization rules out an exact quotient")
    q = _unpack(int(Q), slot_bytes, wq)
    if q is None:
        return None
    # certification: with every decoded coefficient below the guard
    # margin, packing g*q cannot overflow slots, so G*Q == F forces
    # g*q == f as polynomials.
    limit = 8 * slot_bytes - guard_bits
    if any(c.bit_length() > limit for c in q.values()):
        return None
    return q
