"""Exact coefficient arithmetic in the variable q.

``QPoly`` is a sparse Laurent polynomial in q with arbitrary-precision
integer coefficients.  ``QRat`` is a ratio of two such polynomials kept in
canonical reduced form: the denominator is an ordinary polynomial with a
nonzero constant term and positive leading coefficient, and numerator and
denominator share no polynomial factor and no integer content.  Canonical
form makes equality and hashing structural, which everything downstream
(memo caches, certificates, the test suites) relies on.

Values are immutable; all operations return fresh objects.
"""

from __future__ import annotations

import math
from fractions import Fraction


class QPoly:
    """Sparse integer Laurent polynomial in q."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = int(v)
                if v:
                    c[int(e)] = v
        self._c = c
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "QPoly":
        return _QP_ZERO

    @classmethod
    def one(cls) -> "QPoly":
        return _QP_ONE

    @classmethod
    def q(cls) -> "QPoly":
        return _QP_Q

    @classmethod
    def const(cls, n: int) -> "QPoly":
        return cls({0: n})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "QPoly":
        return cls({exp: coeff})

    # -- inspection ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def is_one(self) -> bool:
        return self._c == {0: 1}

    def items(self):
        """Terms as (exponent, coefficient), decreasing exponent."""
        return sorted(self._c.items(), reverse=True)

    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of zero polynomial")
        return max(self._c)

    def valuation(self) -> int:
        if not self._c:
            raise ValueError("valuation of zero polynomial")
        return min(self._c)

    def leading_coeff(self) -> int:
        return self._c[self.degree()]

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def content(self) -> int:
        g = 0
        for v in self._c.values():
            g = math.gcd(g, v)
        return g

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _as_qpoly(other)
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            elif e in c:
                del c[e]
        out = QPoly.__new__(QPoly)
        out._c = c
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = QPoly.__new__(QPoly)
        out._c = {e: -v for e, v in self._c.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        return self + (-_as_qpoly(other))

    def __rsub__(self, other):
        return _as_qpoly(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 1:
                return self
            out = QPoly.__new__(QPoly)
            out._c = {} if other == 0 else {e: v * other for e, v in self._c.items()}
            out._hash = None
            return out
        other = _as_qpoly(other)
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                w = c.get(e, 0) + v1 * v2
                if w:
                    c[e] = w
                elif e in c:
                    del c[e]
        out = QPoly.__new__(QPoly)
        out._c = c
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial; use QRat")
        out = _QP_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shifted(self, e: int) -> "QPoly":
        """Multiply by q**e."""
        if e == 0 or not self._c:
            return self
        return QPoly({k + e: v for k, v in self._c.items()})

    def subs_qpower(self, k: int) -> "QPoly":
        """Substitute q -> q**k."""
        if k == 1:
            return self
        return QPoly({e * k: v for e, v in self._c.items()})

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        total = Fraction(0)
        for e, v in self._c.items():
            if e < 0 and x == 0:
                raise ZeroDivisionError("pole at q=0 (negative exponent)")
            total += v * x**e
        return total

    # -- comparisons / hashing ----------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._c.items())))
        return self._hash

    # -- rendering ----------------------------------------------------

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, v in self.items():
            if e == 0:
                body = str(abs(v))
            else:
                qpow = "q" if e == 1 else f"q^{e}"
                body = qpow if abs(v) == 1 else f"{abs(v)}*{qpow}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __repr__(self):
        return f"QPoly({self})"

    def to_json(self) -> dict:
        return {str(e): v for e, v in self.items()}

    @classmethod
    def from_json(cls, data: dict) -> "QPoly":
        return cls({int(e): int(v) for e, v in data.items()})


_QP_ZERO = QPoly()
_QP_ONE = QPoly({0: 1})
_QP_Q = QPoly({1: 1})


def _as_qpoly(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to QPoly")


# -- polynomial gcd over Z[q] (via monic Euclid over Q[q]) -------------


def _dense(p: QPoly) -> list:
    deg = p.degree()
    out = [Fraction(0)] * (deg + 1)
    for e, v in p._c.items():
        out[e] = Fraction(v)
    return out


def _trimmed(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list, b: list) -> list:
    a = a[:]
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        factor = a[-1] / lead
        shift = len(a) - 1 - db
        for i in range(db + 1):
            a[shift + i] -= factor * b[i]
        a.pop()
    return _trimmed(a)


def _primitive_int(a: list) -> QPoly:
    """Clear denominators of a Fraction list, strip content, positive lead."""
    denom_lcm = 1
    for x in a:
        denom_lcm = denom_lcm * x.denominator // math.gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in a]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g == 0:
        return QPoly.zero()
    if ints[-1] < 0:
        g = -g
    return QPoly({e: v // g for e, v in enumerate(ints) if v})


def _poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Primitive gcd in Z[q] of two ordinary polynomials, positive leading
    coefficient.  Inputs must have valuation >= 0 and not both be zero."""
    if a.is_zero():
        return _primitive_int(_dense(b))
    if b.is_zero():
        return _primitive_int(_dense(a))
    A, B = _trimmed(_dense(a)), _trimmed(_dense(b))
    while B:
        A, B = B, _poly_mod(A, B)
    return _primitive_int(A)


def _exact_div(a: QPoly, g: QPoly) -> QPoly:
    """Exact division a / g for ordinary polynomials; g must divide a."""
    A, G = _trimmed(_dense(a)), _trimmed(_dense(g))
    dq = len(A) - len(G)
    if dq < 0:
        raise ArithmeticError("inexact polynomial division")
    quot = [Fraction(0)] * (dq + 1)
    lead = G[-1]
    while A:
        shift = len(A) - len(G)
        if shift < 0:
            raise ArithmeticError("inexact polynomial division")
        factor = A[-1] / lead
        quot[shift] = factor
        for i in range(len(G)):
            A[shift + i] -= factor * G[i]
        _trimmed(A)
    out = {}
    for e, v in enumerate(quot):
        if v:
            if v.denominator != 1:
                raise ArithmeticError("non-integral quotient")
            out[e] = int(v)
    return QPoly(out)


class QRat:
    """Rational function in q, a canonical ratio of two QPoly values."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num, den=None):
        num = _as_qpoly(num)
        den = _QP_ONE if den is None else _as_qpoly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self._num, self._den = _QP_ZERO, _QP_ONE
        elif den.is_one():
            self._num, self._den = num, _QP_ONE
        else:
            vn, vd = num.valuation(), den.valuation()
            a, b = num.shifted(-vn), den.shifted(-vd)
            g = _poly_gcd(a, b)
            if not g.is_one():
                a, b = _exact_div(a, g), _exact_div(b, g)
            cg = math.gcd(a.content(), b.content())
            if b.leading_coeff() < 0:
                cg = -cg
            if cg != 1:
                a = QPoly({e: v // cg for e, v in a._c.items()})
                b = QPoly({e: v // cg for e, v in b._c.items()})
            self._num = a.shifted(vn - vd)
            self._den = b
        self._hash = None

    @classmethod
    def _raw(cls, num: QPoly, den: QPoly) -> "QRat":
        out = cls.__new__(cls)
        out._num, out._den, out._hash = num, den, None
        return out

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "QRat":
        return _QR_ZERO

    @classmethod
    def one(cls) -> "QRat":
        return _QR_ONE

    @classmethod
    def q(cls) -> "QRat":
        return _QR_Q

    @classmethod
    def from_fraction(cls, x: Fraction) -> "QRat":
        return cls(QPoly.const(x.numerator), QPoly.const(x.denominator))

    # -- inspection ---------------------------------------------------

    @property
    def num(self) -> QPoly:
        return self._num

    @property
    def den(self) -> QPoly:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_one(self) -> bool:
        return self._num.is_one() and self._den.is_one()

    def integral_polynomial(self):
        """The value as a QPoly if it lies in Z[q], else None."""
        if not self._den.is_one():
            return None
        if not self._num.is_zero() and self._num.valuation() < 0:
            return None
        return self._num

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _as_qrat(other)
        if self._den.is_one() and other._den.is_one():
            return QRat._raw(self._num + other._num, _QP_ONE)
        return QRat(self._num * other._den + other._num * self._den,
                    self._den * other._den)

    __radd__ = __add__

    def __neg__(self):
        return QRat._raw(-self._num, self._den)

    def __sub__(self, other):
        return self + (-_as_qrat(other))

    def __rsub__(self, other):
        return _as_qrat(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int) and self._den.is_one():
            if other == 1:
                return self
            return QRat._raw(self._num * other, _QP_ONE)
        other = _as_qrat(other)
        if self._den.is_one() and other._den.is_one():
            return QRat._raw(self._num * other._num, _QP_ONE)
        return QRat(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_qrat(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        return QRat(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other):
        return _as_qrat(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return _QR_ONE / self ** (-n)
        out = _QR_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def subs_qpower(self, k: int) -> "QRat":
        """Substitute q -> q**k (k >= 1)."""
        if k < 1:
            raise ValueError("power substitution needs k >= 1")
        if k == 1:
            return self
        return QRat(self._num.subs_qpower(k), self._den.subs_qpower(k))

    def specialize(self, value) -> Fraction:
        """Exact evaluation at a rational value of q."""
        value = Fraction(value)
        d = self._den.evaluate(value)
        if d == 0:
            raise ZeroDivisionError(f"pole at q={value}")
        return self._num.evaluate(value) / d

    # -- comparisons / hashing ----------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, QPoly)):
            other = _as_qrat(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    # -- rendering ----------------------------------------------------

    def __str__(self):
        if self._den.is_one():
            return str(self._num)
        ns = str(self._num)
        if len(self._num._c) > 1:
            ns = f"({ns})"
        ds = str(self._den)
        if len(self._den._c) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"QRat({self})"

    def to_json(self) -> dict:
        return {"num": self._num.to_json(), "den": self._den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "QRat":
        return cls(QPoly.from_json(data["num"]), QPoly.from_json(data["den"]))


_QR_ZERO = QRat._raw(_QP_ZERO, _QP_ONE)
_QR_ONE = QRat._raw(_QP_ONE, _QP_ONE)
_QR_Q = QRat._raw(_QP_Q, _QP_ONE)


def _as_qrat(x) -> QRat:
    if isinstance(x, QRat):
        return x
    if isinstance(x, (int, QPoly)):
        return QRat(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to QRat")


# -- spec-level conveniences -------------------------------------------


def q_power_substitute(c: QRat, k: int) -> QRat:
    return c.subs_qpower(k)


def specialize(c: QRat, value) -> Fraction:
    return c.specialize(value)


def is_integral_polynomial(c: QRat):
    """(True, QPoly) when c lies in Z[q], else (False, None)."""
    p = c.integral_polynomial()
    return (p is not None), p
