"""Exact sparse bivariate polynomial ring Z[s,t].

Polynomials are stored as a dict mapping exponent pairs (s_exp, t_exp)
to nonzero arbitrary-precision integer coefficients.  Values are
logically immutable: every operation returns a fresh Polynomial and
never mutates its operands, so values can be shared freely between
threads.

Canonical order everywhere (iteration, formatting, JSON, error
reporting) is descending lexicographic with s before t.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Tuple, Union

from . import _kronecker
from .errors import NonDivisibleError, ParseError, PolynomialError

__all__ = [
    "Polynomial",
    "PositivityVerdict",
    "PolynomialError",
    "NonDivisibleError",
    "ParseError",
    "parse",
    "ZERO",
    "ONE",
    "S",
    "T",
    "MAX_EXPONENT",
]

Key = Tuple[int, int]

MAX_EXPONENT = 2**32


@dataclass(frozen=True)
class PositivityVerdict:
    """Outcome of a coefficient-positivity scan.

    ``positive`` is true iff the polynomial is nonzero and every stored
    coefficient is strictly positive.  Otherwise ``is_zero`` flags the
    zero polynomial, or ``offending`` carries the first bad term
    (s_exp, t_exp, coeff) in canonical order.
    """

    positive: bool
    is_zero: bool = False
    offending: Optional[Tuple[int, int, int]] = None

    def __bool__(self) -> bool:
        return self.positive


def _check_exponent(e: int) -> int:
    if not isinstance(e, int) or isinstance(e, bool):
        raise TypeError(f"exponent must be an int, got {type(e).__name__}")
    if e < 0:
        raise ValueError(f"negative exponent {e}")
    if e >= MAX_EXPONENT:
        raise ValueError(f"exponent {e} exceeds the supported range")
    return e


class Polynomial:
    """An element of Z[s,t] in canonical sparse form."""

    __slots__ = ("_terms", "_grade")

    def __init__(self, terms: Union[Mapping[Key, int], Iterable[Tuple[Key, int]], None] = None):
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        d: dict = {}
        for (se, te), c in items:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficient must be an int, got {type(c).__name__}")
            _check_exponent(se)
            _check_exponent(te)
            key = (se, te)
            c = d.get(key, 0) + c
            if c:
                d[key] = c
            elif key in d:
                del d[key]
        self._terms = d
        self._grade: Union[int, None, bool] = False  # False = not computed yet

    # -- constructors ------------------------------------------------

    @classmethod
    def _raw(cls, d: dict) -> "Polynomial":
        # internal: d is already canonical (no zeros, valid exponents)
        p = cls.__new__(cls)
        p._terms = d
        p._grade = False
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, s_exp: int, t_exp: int, coeff: int = 1) -> "Polynomial":
        _check_exponent(s_exp)
        _check_exponent(t_exp)
        return cls._raw({(s_exp, t_exp): coeff} if coeff else {})

    # -- inspection --------------------------------------------------

    def terms(self) -> Iterator[Tuple[int, int, int]]:
        """Yield (s_exp, t_exp, coeff) in canonical (descending lex) order."""
        for se, te in sorted(self._terms, reverse=True):
            yield se, te, self._terms[(se, te)]

    @property
    def term_count(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def s_degree(self) -> int:
        """Largest s exponent; -1 for the zero polynomial."""
        return max((se for se, _ in self._terms), default=-1)

    @property
    def t_degree(self) -> int:
        return max((te for _, te in self._terms), default=-1)

    @property
    def total_degree(self) -> int:
        """Largest s_exp + t_exp; -1 for the zero polynomial."""
        return max((se + te for se, te in self._terms), default=-1)

    @property
    def max_coeff_bits(self) -> int:
        return max((abs(c).bit_length() for c in self._terms.values()), default=0)

    def homogeneous_grade(self) -> Optional[int]:
        """The common value of s_exp + 2*t_exp, or None if mixed or zero.

        Every Lucas-sequence object is homogeneous under this grading;
        the fast arithmetic paths key off it.
        """
        if self._grade is False:
            g: Optional[int] = None
            for se, te in self._terms:
                w = se + 2 * te
                if g is None:
                    g = w
                elif w != g:
                    g = None
                    break
            self._grade = g
        return self._grade  # type: ignore[return-value]

    def min_coeff(self) -> int:
        return min(self._terms.values(), default=0)

    def constant_term(self) -> int:
        return self._terms.get((0, 0), 0)

    def coeff(self, s_exp: int, t_exp: int) -> int:
        return self._terms.get((s_exp, t_exp), 0)

    def leading_term(self) -> Tuple[int, int, int]:
        """Leading term under descending lex (s before t)."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        se, te = max(self._terms)
        return se, te, self._terms[(se, te)]

    # -- equality / hashing ------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"

    # -- ring operations ---------------------------------------------

    def __add__(self, other: Union["Polynomial", int]) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        d = dict(a)
        for k, c in b.items():
            c = d.get(k, 0) + c
            if c:
                d[k] = c
            elif k in d:
                del d[k]
        return Polynomial._raw(d)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Union["Polynomial", int]) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Union["Polynomial", int]) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Union["Polynomial", int]) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f, g = self._terms, other._terms
        if not f or not g:
            return Polynomial.zero()
        fast = _kronecker.try_mul(self, other)
        if fast is not None:
            return Polynomial._raw(fast)
        if len(f) < len(g):
            f, g = g, f
        d: dict = {}
        get = d.get
        for (se1, te1), c1 in f.items():
            for (se2, te2), c2 in g.items():
                k = (se1 + se2, te1 + te2)
                c = get(k, 0) + c1 * c2
                if c:
                    d[k] = c
                elif k in d:
                    del d[k]
        if d:
            se, te = max(d)
            _check_exponent(se)
            _check_exponent(te)
        return Polynomial._raw(d)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shifted(self, s_exp: int, t_exp: int) -> "Polynomial":
        """Multiply by the monomial s^s_exp * t^t_exp."""
        return Polynomial._raw({(se + s_exp, te + t_exp): c for (se, te), c in self._terms.items()})

    def exact_div(self, g: "Polynomial") -> "Polynomial":
        """Exact division in Z[s,t].

        Returns the unique q with self == g*q, or raises
        NonDivisibleError when no such q exists.  ZeroDivisionError for
        g == 0.  Algorithm: greedy leading-term cancellation under lex
        order with s > t; a fast certified path handles large positive
        homogeneous operands.
        """
        if not g._terms:
            raise ZeroDivisionError("polynomial division by zero")
        if not self._terms:
            return Polynomial.zero()
        fast = _kronecker.try_exact_div(self, g)
        if fast is not None:
            return Polynomial._raw(fast)
        return self._exact_div_greedy(g)

    def _exact_div_greedy(self, g: "Polynomial") -> "Polynomial":
        gl = max(g._terms)
        glc = g._terms[gl]
        gitems = list(g._terms.items())
        r = dict(self._terms)
        q: dict = {}
        while r:
            rl = max(r)
            if rl[0] < gl[0] or rl[1] < gl[1]:
                raise NonDivisibleError(
                    f"leading term s^{rl[0]}*t^{rl[1]} not divisible by s^{gl[0]}*t^{gl[1]}"
                )
            rc = r[rl]
            qc, rem = divmod(rc, glc)
            if rem:
                raise NonDivisibleError(
                    f"coefficient {rc} not divisible by leading coefficient {glc}"
                )
            qe = (rl[0] - gl[0], rl[1] - gl[1])
            q[qe] = qc
            for (se, te), c in gitems:
                k = (se + qe[0], te + qe[1])
                c = r.get(k, 0) - qc * c
                if c:
                    r[k] = c
                elif k in r:
                    del r[k]
        return Polynomial._raw(q)

    def divides(self, f: "Polynomial") -> bool:
        try:
            f.exact_div(self)
            return True
        except NonDivisibleError:
            return False

    # -- evaluation / positivity --------------------------------------

    def evaluate(self, s_val: int, t_val: int) -> int:
        """Exact integer value at (s, t)."""
        spow: dict = {0: 1}
        tpow: dict = {0: 1}
        total = 0
        for (se, te), c in self._terms.items():
            sp = spow.get(se)
            if sp is None:
                sp = spow[se] = s_val**se
            tp = tpow.get(te)
            if tp is None:
                tp = tpow[te] = t_val**te
            total += c * sp * tp
        return total

    def positivity(self) -> PositivityVerdict:
        if not self._terms:
            return PositivityVerdict(positive=False, is_zero=True)
        for se, te, c in self.terms():
            if c <= 0:
                return PositivityVerdict(positive=False, offending=(se, te, c))
        return PositivityVerdict(positive=True)

    @property
    def is_positive(self) -> bool:
        return self.positivity().positive

    # -- text / JSON ---------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form, e.g. "s^4 + 3*s^2*t + 2*t^2"."""
        if not self._terms:
            return "0"
        parts = []
        for i, (se, te, c) in enumerate(self.terms()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            factors = []
            if se:
                factors.append("s" if se == 1 else f"s^{se}")
            if te:
                factors.append("t" if te == 1 else f"t^{te}")
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if i == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def to_json_terms(self) -> list:
        """Canonical JSON form: [[s_exp, t_exp, "coeff"], ...]."""
        return [[se, te, str(c)] for se, te, c in self.terms()]

    @classmethod
    def from_json_terms(cls, data: Iterable) -> "Polynomial":
        terms = []
        for entry in data:
            se, te, c = entry
            terms.append(((int(se), int(te)), int(c)))
        return cls(terms)

    def __str__(self) -> str:
        return self.to_text()


def _coerce(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Polynomial.constant(x)
    return NotImplemented


ZERO = Polynomial.zero()
ONE = Polynomial.constant(1)
S = Polynomial.monomial(1, 0)
T = Polynomial.monomial(0, 1)


# -- parsing -----------------------------------------------------------


def parse(text: str) -> Polynomial:
    """Parse polynomial text; inverse of Polynomial.to_text().

    Grammar: poly := ["+"|"-"] term (("+"|"-") term)*;
    term := factor ("*" factor)*; factor := "s" ["^" uint] | "t" ["^" uint] | uint.
    Whitespace is insignificant.  Raises ParseError with a byte offset.
    """
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def read_uint() -> int:
        nonlocal pos
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise ParseError("expected an unsigned integer", start)
        return int(text[start:pos])

    def read_factor() -> Tuple[int, int, int]:
        # returns (s_exp, t_exp, coeff) of one factor
        nonlocal pos
        skip_ws()
        if pos >= n:
            raise ParseError("expected a factor", pos)
        ch = text[pos]
        if ch in "st":
            pos += 1
            exp = 1
            skip_ws()
            if pos < n and text[pos] == "^":
                pos += 1
                skip_ws()
                if pos < n and text[pos] == "-":
                    raise ParseError("negative exponent", pos)
                exp = read_uint()
            _check_exponent(exp)
            return (exp, 0, 1) if ch == "s" else (0, exp, 1)
        if ch.isdigit():
            return (0, 0, read_uint())
        raise ParseError(f"unexpected character {ch!r}", pos)

    def read_term(sign: int) -> Tuple[Key, int]:
        nonlocal pos
        se, te, c = read_factor()
        while True:
            skip_ws()
            if pos < n and text[pos] == "*":
                pos += 1
                se2, te2, c2 = read_factor()
                se, te, c = se + se2, te + te2, c * c2
                _check_exponent(se)
                _check_exponent(te)
            else:
                break
        return (se, te), sign * c

    terms = []
    skip_ws()
    if pos >= n:
        raise ParseError("empty input", pos)
    sign = 1
    if text[pos] in "+-":
        sign = -1 if text[pos] == "-" else 1
        pos += 1
    terms.append(read_term(sign))
    skip_ws()
    while pos < n:
        ch = text[pos]
        if ch not in "+-":
            raise ParseError(f"unexpected character {ch!r}", pos)
        pos += 1
        terms.append(read_term(-1 if ch == "-" else 1))
        skip_ws()
    return Polynomial(terms)
