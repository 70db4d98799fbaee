"""Exact arithmetic in the rational function field Q(a).

A :class:`Scalar` is a reduced fraction ``num/den`` of integer-coefficient
polynomials in one formal parameter ``a``.  Polynomials are stored as tuples
of Python ints, lowest degree first, without trailing zeros; the zero
polynomial is ``()``.

Canonical form:

* ``gcd(num, den)`` over Q[a] is a unit,
* ``den`` has a positive leading coefficient,
* the integer content of all coefficients of ``num`` and ``den`` together is 1.

Two scalars are therefore equal iff their tuples are identical.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = [
    "Scalar",
    "ScalarSyntaxError",
    "ScalarZeroDivisionError",
    "PoleError",
    "parse_scalar",
    "as_scalar",
    "ZERO",
    "ONE",
    "A",
]

Poly = tuple


class ScalarSyntaxError(ValueError):
    """Malformed scalar text; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.offset = len(text[:pos].encode("utf-8"))
        super().__init__(f"{message} at byte {self.offset} in {text!r}")


class ScalarZeroDivisionError(ZeroDivisionError):
    def __init__(self, scalar=None, message="division by zero"):
        self.scalar = scalar
        super().__init__(message if scalar is None else f"{message}: {scalar}")


class PoleError(ZeroDivisionError):
    def __init__(self, scalar, value):
        self.scalar = scalar
        self.value = value
        super().__init__(f"{scalar} has a pole at a = {value}")


# -- integer polynomial helpers ---------------------------------------------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return _trim(out)


def _pneg(p):
    return tuple(-c for c in p)


def _psub(p, q):
    return _padd(p, _pneg(q))


def _pmul(p, q):
    if not p or not q:
        return ()
    if len(p) == 1:
        c = p[0]
        return tuple(c * x for x in q)
    if len(q) == 1:
        c = q[0]
        return tuple(c * x for x in p)
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return tuple(out)


def _content(p):
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def _primitive(p):
    """Primitive part with positive leading coefficient."""
    c = _content(p)
    if p[-1] < 0:
        c = -c
    return tuple(x // c for x in p)


def _prem(p, q):
    """Remainder of p modulo q over Q, scaled back to integers."""
    p = [Fraction(c) for c in p]
    lead = q[-1]
    while len(p) >= len(q) and any(p):
        shift = len(p) - len(q)
        f = p[-1] / lead
        for i, c in enumerate(q):
            p[i + shift] -= f * c
        while p and p[-1] == 0:
            p.pop()
    if not p:
        return ()
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    return _trim(int(c * den) for c in p)


def _pgcd(p, q):
    """Primitive gcd of two nonzero integer polynomials."""
    p, q = _primitive(p), _primitive(q)
    if len(p) < len(q):
        p, q = q, p
    while q:
        r = _prem(p, q)
        p, q = q, (_primitive(r) if r else ())
    return p


def _pexquo(p, q):
    """Exact quotient p/q; by Gauss's lemma integral when q is primitive."""
    p = list(p)
    lead = q[-1]
    out = [0] * (len(p) - len(q) + 1)
    for k in range(len(out) - 1, -1, -1):
        c, r = divmod(p[k + len(q) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[k] = c
        if c:
            for i, x in enumerate(q):
                p[k + i] -= c * x
    if any(p):
        raise ArithmeticError("inexact polynomial division")
    return tuple(out)


def _peval(p, v):
    acc = 0
    for c in reversed(p):
        acc = acc * v + c
    return acc


def _poly_str(p, denom=1):
    """Print an integer polynomial (optionally over a constant denominator)."""
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        coeff = Fraction(c, denom)
        sign = "-" if coeff < 0 else "+"
        coeff = abs(coeff)
        mono = "" if k == 0 else ("a" if k == 1 else f"a^{k}")
        if not mono:
            body = str(coeff)
        elif coeff == 1:
            body = mono
        else:
            body = f"{coeff}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


def _single_term(p):
    return sum(1 for c in p if c) == 1


class Scalar:
    """Element of Q(a) in canonical form.  Immutable."""

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(1,), *, _canonical=False):
        if _canonical:
            self.num = num
            self.den = den
            return
        if isinstance(num, int):
            num = (num,)
        if isinstance(den, int):
            den = (den,)
        num, den = _trim(num), _trim(den)
        if not den:
            raise ScalarZeroDivisionError(message="zero denominator")
        self.num, self.den = _normalize(num, den)

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_fraction(cls, q) -> Scalar:
        q = Fraction(q)
        if q.denominator == 1:
            return _from_int(q.numerator)
        return cls((q.numerator,), (q.denominator,), _canonical=True)

    @classmethod
    def parse(cls, text: str) -> Scalar:
        return parse_scalar(text)

    # -- predicates ---------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    def degree(self) -> int:
        """max(deg num, deg den), the usual height of a rational function."""
        return max(len(self.num), len(self.den)) - 1

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == (1,) and other.den == (1,):
            return Scalar(_padd(self.num, other.num), (1,), _canonical=True)
        if self.den == other.den:
            return Scalar(_padd(self.num, other.num), self.den)
        return Scalar(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return Scalar(_pneg(self.num), self.den, _canonical=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return ZERO
        if self.den == (1,) and other.den == (1,):
            return Scalar(_pmul(self.num, other.num), (1,), _canonical=True)
        return Scalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if not self.num:
            raise ScalarZeroDivisionError(self)
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ScalarZeroDivisionError(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- evaluation ---------------------------------------------------------

    def eval(self, v) -> Fraction:
        """Exact substitution a := v for a rational v."""
        v = Fraction(v)
        d = _peval(self.den, v)
        if d == 0:
            raise PoleError(self, v)
        return Fraction(_peval(self.num, v)) / d

    def subs(self, v) -> Scalar:
        return Scalar.from_fraction(self.eval(v))

    # -- printing -----------------------------------------------------------

    def __str__(self):
        if len(self.den) == 1:
            return _poly_str(self.num, self.den[0])
        num = _poly_str(self.num)
        if not _single_term(self.num):
            num = f"({num})"
        den = _poly_str(self.den)
        if not (_single_term(self.den) and self.den[-1] == 1):
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"Scalar('{self}')"


def _normalize(num, den):
    if not num:
        return (), (1,)
    if den == (1,):
        return num, den
    if len(den) > 1 and len(num) > 0:
        g = _pgcd(num, den)
        if len(g) > 1:
            num, den = _pexquo(num, g), _pexquo(den, g)
    c = gcd(_content(num), _content(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


_SMALL = {}


def _from_int(n: int) -> Scalar:
    s = _SMALL.get(n)
    if s is None:
        s = Scalar((n,) if n else (), (1,), _canonical=True)
        if -64 <= n <= 64:
            _SMALL[n] = s
    return s


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return _from_int(x)
    if isinstance(x, Rational):
        return Scalar.from_fraction(x)
    return NotImplemented


def as_scalar(x) -> Scalar:
    """Coerce an int, Fraction, scalar string, or Scalar to a Scalar."""
    if isinstance(x, str):
        return parse_scalar(x)
    s = _coerce(x)
    if s is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a scalar")
    return s


ZERO = _from_int(0)
ONE = _from_int(1)
A = Scalar((0, 1), (1,), _canonical=True)


# -- parser -----------------------------------------------------------------

class _Parser:
    """Recursive descent over

        expr   := ['+'|'-'] term (('+'|'-') term)*
        term   := factor (('*'|'/') factor)*
        factor := primary ('^' uint)?
        primary:= integer | 'a' | '(' expr ')'

    which accepts every string of the documented scalar grammar.
    """

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ScalarSyntaxError(msg, self.text, self.pos)

    def skip(self):
        t = self.text
        while self.pos < len(t) and t[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self):
        if not self.peek():
            self.error("empty scalar")
        value = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return value

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek() in ("*", "/"):
            op = self.text[self.pos]
            self.pos += 1
            start = self.pos
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if not rhs:
                    self.pos = start
                    raise ScalarZeroDivisionError(message=f"zero denominator at byte {start} in {self.text!r}")
                value = value / rhs
        return value

    def factor(self):
        base = self.primary()
        if self.peek() == "^":
            self.pos += 1
            self.skip()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                self.error("expected exponent")
            base = base ** int(self.text[start:self.pos])
        return base

    def primary(self):
        c = self.peek()
        if c == "(":
            self.pos += 1
            value = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return value
        if c == "a":
            self.pos += 1
            return A
        if c.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return _from_int(int(self.text[start:self.pos]))
        self.error(f"unexpected {c!r}" if c else "unexpected end of input")


def parse_scalar(text: str) -> Scalar:
    return _Parser(text).parse()
