"""Exact coefficient arithmetic.

Laurent polynomials in s = q^(1/2) over arbitrary-precision rationals,
and univariate rational functions in the spectral variable z whose
coefficients are Laurent polynomials.  Everything here is exact; there
is no floating-point mode.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a zero of its denominator."""

    def __init__(self, denominator: str):
        super().__init__(f"evaluation at a pole: denominator {denominator} vanishes")
        self.denominator = denominator


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


class LaurentPoly:
    """An element of Q[s, s^-1], stored as {exponent: nonzero coefficient}.

    q is identified with s^2, so q^t for half-integer t is the exact
    monomial s^(2t).
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean: dict[int, Fraction] = {}
        if terms:
            for k, c in terms.items():
                c = _as_fraction(c)
                if c:
                    clean[int(k)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def const(cls, c: Scalar) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def s_power(cls, k: int, coeff: Scalar = 1) -> "LaurentPoly":
        return cls({k: coeff})

    @classmethod
    def from_qpower(cls, t: Scalar) -> "LaurentPoly":
        """q^t as the monomial s^(2t); t must be a half-integer."""
        t = _as_fraction(t)
        two_t = 2 * t
        if two_t.denominator != 1:
            raise ValueError(f"q^t needs a half-integer t, got {t}")
        return cls({int(two_t): 1})

    # -- ring structure ------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-other if isinstance(other, LaurentPoly) else LaurentPoly.const(-other))

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return LaurentPoly.zero()
            res = LaurentPoly.__new__(LaurentPoly)
            res.terms = {k: v * c for k, v in self.terms.items()}
            return res
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                k = ka + kb
                v = out.get(k, 0) + ca * cb
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            inv = self.inverse()
            return inv ** (-n)
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- queries -------------------------------------------------------

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def inverse(self) -> "LaurentPoly":
        """Inverse of a monomial; only monomials are units of Q[s, s^-1]."""
        if not self.is_monomial():
            raise ValueError(f"not invertible in Q[s, s^-1]: {self}")
        ((k, c),) = self.terms.items()
        return LaurentPoly({-k: 1 / c})

    def evaluate(self, s0: Scalar) -> Fraction:
        """Exact value at s = s0; s0 must be nonzero (negative exponents)."""
        s0 = _as_fraction(s0)
        if not s0:
            raise ValueError("cannot evaluate a Laurent polynomial at s = 0")
        return sum((c * s0 ** k for k, c in self.terms.items()), Fraction(0))

    # -- canonical text form --------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = self.terms[k]
            parts.append(str(c) if k == 0 else f"{c}*s^{k}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    _TERM_RE = re.compile(r"^(-?\d+(?:/\d+)?)(?:\*s\^(-?\d+))?$")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the canonical text form, e.g. '-1*s^-2 + 3 + 1/2*s^4'."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        terms: dict[int, Fraction] = {}
        for part in text.split(" + "):
            m = cls._TERM_RE.match(part.strip())
            if m is None:
                raise ValueError(f"malformed Laurent term: {part!r}")
            coeff = Fraction(m.group(1))
            exp = int(m.group(2)) if m.group(2) is not None else 0
            if exp in terms:
                raise ValueError(f"duplicate exponent {exp} in {text!r}")
            if coeff:
                terms[exp] = coeff
        return cls(terms)


# Frequently used elements.
ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()


def q_power(t: Scalar) -> LaurentPoly:
    return LaurentPoly.from_qpower(t)


def q_minus_qinv() -> LaurentPoly:
    """q - q^-1 = s^2 - s^-2."""
    return LaurentPoly({2: 1, -2: -1})


def q_int(n: int) -> LaurentPoly:
    """The q-integer [n] = (q^n - q^-n)/(q - q^-1), exactly."""
    if n == 0:
        return LaurentPoly.zero()
    sign = 1 if n > 0 else -1
    n = abs(n)
    # [n] = q^(n-1) + q^(n-3) + ... + q^(1-n)
    return LaurentPoly({2 * e: sign for e in range(1 - n, n, 2)})


# ---------------------------------------------------------------------------
# Rational functions in z over Q[s, s^-1]
# ---------------------------------------------------------------------------

ZPoly = tuple  # tuple[LaurentPoly, ...], ascending powers of z


def _ztrim(coeffs: Iterable[LaurentPoly]) -> ZPoly:
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def _zadd(a: ZPoly, b: ZPoly) -> ZPoly:
    n = max(len(a), len(b))
    return _ztrim(
        (a[i] if i < len(a) else ZERO) + (b[i] if i < len(b) else ZERO) for i in range(n)
    )


def _zmul(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        return ()
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] = out[i + j] + ca * cb
    return _ztrim(out)


def _zneg(a: ZPoly) -> ZPoly:
    return tuple(-c for c in a)


def _zscale(a: ZPoly, c: LaurentPoly) -> ZPoly:
    return _ztrim(x * c for x in a)


def _zstr(a: ZPoly) -> str:
    if not a:
        return "0"
    return " ; ".join(f"z^{i}: {c}" for i, c in enumerate(a) if c)


class RatFunc:
    """A fraction of polynomials in z with LaurentPoly coefficients.

    Normalization is best effort (common z-power and monomial content are
    cancelled); equality never relies on canonical form and is decided by
    cross-multiplication instead.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Iterable[LaurentPoly], den: Iterable[LaurentPoly]):
        num = _ztrim(num)
        den = _ztrim(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = self._normalize(num, den)

    @staticmethod
    def _normalize(num: ZPoly, den: ZPoly) -> tuple[ZPoly, ZPoly]:
        if not num:
            return (), (ONE,)
        # cancel a common power of z
        shift = 0
        while shift < len(num) and shift < len(den) and not num[shift] and not den[shift]:
            shift += 1
        if shift:
            num = num[shift:]
            den = den[shift:]
        # make the leading denominator coefficient 1 when it is a unit
        lead = den[-1]
        if lead.is_monomial():
            inv = lead.inverse()
            num = _zscale(num, inv)
            den = _zscale(den, inv)
        return num, den

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "RatFunc":
        return cls((p,), (ONE,))

    @classmethod
    def const(cls, c: Scalar) -> "RatFunc":
        return cls.from_laurent(LaurentPoly.const(c))

    @classmethod
    def z(cls) -> "RatFunc":
        return cls((ZERO, ONE), (ONE,))

    # -- field structure --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        elif isinstance(other, LaurentPoly):
            other = RatFunc.from_laurent(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        # a/b == c/d  iff  a*d - c*b == 0
        return _zadd(_zmul(self.num, other.den), _zneg(_zmul(other.num, self.den))) == ()

    def __hash__(self):
        raise TypeError("RatFunc is not hashable (no canonical form)")

    def __add__(self, other) -> "RatFunc":
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        elif isinstance(other, LaurentPoly):
            other = RatFunc.from_laurent(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        num = _zadd(_zmul(self.num, other.den), _zmul(other.num, self.den))
        return RatFunc(num, _zmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        out = RatFunc.__new__(RatFunc)
        out.num = _zneg(self.num)
        out.den = self.den
        return out

    def __sub__(self, other) -> "RatFunc":
        return self + (-other if isinstance(other, RatFunc) else -RatFunc.const(other))

    def __mul__(self, other) -> "RatFunc":
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        elif isinstance(other, LaurentPoly):
            other = RatFunc.from_laurent(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(_zmul(self.num, other.num), _zmul(self.den, other.den))

    __rmul__ = __mul__

    def reciprocal(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other) -> "RatFunc":
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        elif isinstance(other, LaurentPoly):
            other = RatFunc.from_laurent(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self * other.reciprocal()

    # -- evaluation -------------------------------------------------------

    def evaluate(self, s0: Scalar, z0: Scalar) -> Fraction:
        """Exact rational value at (s, z) = (s0, z0); pole raises PoleError."""
        z0 = _as_fraction(z0)

        def horner(coeffs: ZPoly) -> Fraction:
            acc = Fraction(0)
            for c in reversed(coeffs):
                acc = acc * z0 + c.evaluate(s0)
            return acc

        dval = horner(self.den)
        if not dval:
            raise PoleError(_zstr(self.den))
        return horner(self.num) / dval

    # -- degrees / display --------------------------------------------------

    def degrees(self) -> tuple[int, int]:
        """(numerator z-degree, denominator z-degree); zero numerator gives -1."""
        return len(self.num) - 1, len(self.den) - 1

    def __str__(self) -> str:
        return f"({_zstr(self.num)}) / ({_zstr(self.den)})"

    def __repr__(self) -> str:
        return f"RatFunc({str(self)})"

    def to_json(self) -> dict:
        return {"num": [str(c) for c in self.num], "den": [str(c) for c in self.den]}

    @classmethod
    def from_json(cls, doc: dict) -> "RatFunc":
        return cls(
            [LaurentPoly.parse(t) for t in doc["num"]],
            [LaurentPoly.parse(t) for t in doc["den"]],
        )
