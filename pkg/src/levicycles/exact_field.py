"""Exact scalar arithmetic: rationals and cyclotomic field elements.

Rationals are plain :class:`fractions.Fraction`.  A :class:`CycloNumber` is
an element of Q(e) with e a primitive n-th root of unity, stored as a
rational-coefficient polynomial in e reduced modulo the n-th cyclotomic
polynomial.  All equality and zero tests are exact; nothing here ever touches
floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "Rational",
    "ConductorMismatch",
    "cyclotomic_polynomial",
    "CycloNumber",
    "cyclo_arith",
    "parse_scalar",
    "format_scalar",
]

Rational = Fraction


class ConductorMismatch(ValueError):
    """Mixed ``CycloNumber`` conductors in one operation."""


def _poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    # Exact division of integer polynomials (ascending coefficients);
    # the divisor must be monic, which every cyclotomic polynomial is.
    assert den[-1] == 1
    num = list(num)
    quo = [0] * max(1, len(num) - len(den) + 1)
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        if c:
            quo[shift] = c
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quo, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """
    Coefficients (ascending) of the n-th cyclotomic polynomial.

    Computed by the recursion Phi_n(x) = (x^n - 1) / prod_{d|n, d<n} Phi_d(x)
    with exact integer polynomial division.  Monic of degree phi(n).
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"conductor must be a positive integer, got {n!r}")
    if n == 1:
        return (-1, 1)
    work = [0] * (n + 1)
    work[0], work[n] = -1, 1  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            work, rem = _poly_divmod(work, cyclotomic_polynomial(d))
            assert rem == [0], f"non-exact division building Phi_{n}"
    return tuple(work)


def _phi_degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce_mod_phi(n: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for shift in range(len(coeffs) - len(phi), -1, -1):
        c = coeffs[shift + deg]
        if c:
            for i, d in enumerate(phi):
                coeffs[shift + i] -= c * d
    coeffs = coeffs[:deg]
    coeffs += [Fraction(0)] * (deg - len(coeffs))
    return tuple(coeffs)


class CycloNumber:
    """
    Element of the cyclotomic field Q(e), e = primitive n-th root of unity.

    Immutable; ``coeffs`` always has length deg Phi_n = phi(n) and represents
    sum coeffs[i] * e^i in the reduced basis.  Arithmetic reduces mod Phi_n;
    division inverts via the extended Euclidean algorithm in Q[x].
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Iterable[Fraction | int]) -> None:
        object.__setattr__(self, "n", n)
        vals = [Fraction(c) for c in coeffs]
        object.__setattr__(self, "coeffs", _reduce_mod_phi(n, vals))

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("CycloNumber is immutable")

    # -- constructors

    @classmethod
    def zero(cls, n: int) -> "CycloNumber":
        return cls(n, [])

    @classmethod
    def one(cls, n: int) -> "CycloNumber":
        return cls(n, [1])

    @classmethod
    def from_rational(cls, n: int, value) -> "CycloNumber":
        return cls(n, [Fraction(value)])

    @classmethod
    def root(cls, n: int, power: int = 1) -> "CycloNumber":
        """e^power as an element of Q(e)."""
        power %= n
        coeffs = [0] * (power + 1)
        coeffs[power] = 1
        return cls(n, coeffs)

    # -- predicates

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- arithmetic

    def _coerce(self, other) -> "CycloNumber":
        if isinstance(other, CycloNumber):
            if other.n != self.n:
                raise ConductorMismatch(f"conductors differ: {self.n} vs {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNumber.from_rational(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloNumber(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.n, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloNumber(self.n, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prod = [Fraction(0)] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycloNumber(self.n, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNumber":
        """Multiplicative inverse via extended Euclid on (self, Phi_n) in Q[x]."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        # r0 = Phi_n, r1 = self; maintain t-coefficients with r_i = s_i*Phi + t_i*self.
        r0 = [Fraction(c) for c in cyclotomic_polynomial(self.n)]
        r1 = list(self.coeffs)
        while len(r1) > 1 and not r1[-1]:
            r1.pop()
        t0: list[Fraction] = [Fraction(0)]
        t1: list[Fraction] = [Fraction(1)]

        def trim(p: list[Fraction]) -> list[Fraction]:
            while len(p) > 1 and not p[-1]:
                p.pop()
            return p

        while r1 != [Fraction(0)]:
            # quotient of r0 by r1 in Q[x]
            quo = [Fraction(0)] * max(1, len(r0) - len(r1) + 1)
            rem = list(r0)
            for shift in range(len(rem) - len(r1), -1, -1):
                c = rem[shift + len(r1) - 1] / r1[-1]
                if c:
                    quo[shift] = c
                    for i, d in enumerate(r1):
                        rem[shift + i] -= c * d
            rem = trim(rem)
            # t_next = t0 - quo * t1
            tn = [Fraction(0)] * max(len(t0), len(quo) + len(t1) - 1)
            for i, a in enumerate(t0):
                tn[i] += a
            for i, a in enumerate(quo):
                if a:
                    for j, b in enumerate(t1):
                        tn[i + j] -= a * b
            r0, r1 = trim(list(r1)), rem
            t0, t1 = t1, trim(tn)
        # r0 is now the gcd; Phi_n irreducible over Q => gcd is a nonzero constant.
        g = r0[0]
        assert len(r0) == 1 and g != 0, "cyclotomic polynomial must be coprime to nonzero elements"
        return CycloNumber(self.n, [c / g for c in t0])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    # -- comparison / hashing / display

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloNumber.from_rational(self.n, other)
        if not isinstance(other, CycloNumber):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.n, self.coeffs))

    def __repr__(self) -> str:
        return f"CycloNumber({self.n}, {format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)


def cyclo_arith(a: CycloNumber, b: CycloNumber, op: str) -> CycloNumber:
    """Dispatch add/sub/mul/div on two same-conductor cyclotomic numbers."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}; expected add, sub, mul or div")


# ---------------------------------------------------------------------------
# Exact-string formatting, used by the arrangement JSON coordinate payloads.
# Rationals render as Fraction strings ("-3/2"); cyclotomic numbers as
# polynomials in e ("e^2+1", "1/2*e-3").

_TERM_RE = re.compile(
    r"""(?P<sign>[+-])?\s*
        (?:
            (?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*(?P<pow1>e(?:\^(?P<exp1>\d+))?))?
          | (?P<pow2>e(?:\^(?P<exp2>\d+))?)
        )\s*""",
    re.VERBOSE,
)


def format_scalar(value) -> str:
    """Render a Fraction or CycloNumber as an exact, parseable string."""
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    if not isinstance(value, CycloNumber):
        raise TypeError(f"cannot format {type(value).__name__}")
    terms = []
    for exp in range(len(value.coeffs) - 1, -1, -1):
        c = value.coeffs[exp]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if exp == 0:
            body = str(mag)
        else:
            e = "e" if exp == 1 else f"e^{exp}"
            body = e if mag == 1 else f"{mag}*{e}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += sign + body
    return out


def parse_scalar(text: str, conductor: int | None = None):
    """
    Parse the output of :func:`format_scalar`.

    With ``conductor`` set, returns a CycloNumber (rational strings embed as
    constants); otherwise returns a Fraction and rejects any 'e' terms.
    """
    text = text.strip()
    if conductor is None:
        return Fraction(text)
    deg = _phi_degree(conductor)
    coeffs = [Fraction(0)] * max(deg, 1)
    if text in ("0", "-0", "+0"):
        return CycloNumber(conductor, coeffs)
    pos = 0
    found = False
    while pos < len(text):
        match = _TERM_RE.match(text, pos)
        if not match or match.end() == pos:
            raise ValueError(f"cannot parse scalar {text!r} at offset {pos}")
        if found and match.group("sign") is None:
            raise ValueError(f"missing sign between terms in {text!r}")
        sign = -1 if match.group("sign") == "-" else 1
        if match.group("coef") is not None:
            coef = Fraction(match.group("coef"))
            exp = 0
            if match.group("pow1"):
                exp = int(match.group("exp1") or 1)
        else:
            coef = Fraction(1)
            exp = int(match.group("exp2") or 1)
        exp %= conductor
        term = [Fraction(0)] * (exp + 1)
        term[exp] = sign * coef
        reduced = CycloNumber(conductor, term)
        coeffs = [a + b for a, b in zip(coeffs, reduced.coeffs)]
        found = True
        pos = match.end()
    if not found:
        raise ValueError(f"cannot parse scalar {text!r}")
    return CycloNumber(conductor, coeffs)
