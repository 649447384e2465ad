"""Exact rationals, dense univariate polynomials over Q, and the cyclotomic fields Q(zeta_n).

Rationals are :class:`fractions.Fraction`.  Polynomials are tuples of
Fractions in ascending degree with trailing zeros stripped; the zero
polynomial is the empty tuple.  A :class:`Cyclotomic` stores the unique
representative of degree < phi(n) modulo the n-th cyclotomic polynomial.
"""

import cmath
import math
import re
from fractions import Fraction
from functools import lru_cache

from .errors import DivisionByZero, NotDivisible, OrderMismatch, ParseError

Rational = Fraction

# --------------------------------------------------------------------------
# polynomials over Q (CycPoly)
# --------------------------------------------------------------------------


def poly(coeffs):
    """Normalize an iterable of numbers into a CycPoly."""
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_degree(p):
    return len(p) - 1 if p else -math.inf


def poly_add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return poly(out)


def poly_neg(p):
    return tuple(-c for c in p)


def poly_sub(p, q):
    return poly_add(p, poly_neg(q))


def poly_mul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] += a * b
    return poly(out)


def poly_scale(p, c):
    c = Fraction(c)
    if c == 0:
        return ()
    return tuple(a * c for a in p)


def poly_divmod(p, q):
    if not q:
        raise DivisionByZero("polynomial division by zero")
    rem = list(p)
    dq = len(q) - 1
    lead = q[-1]
    if len(rem) <= dq:
        return (), poly(rem)
    quot = [Fraction(0)] * (len(rem) - dq)
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        c = c / lead
        quot[k - dq] = c
        for i, b in enumerate(q):
            rem[k - dq + i] -= c * b
    return poly(quot), poly(rem[:dq])


def poly_monic(p):
    if not p:
        return p
    return poly_scale(p, 1 / p[-1])


def poly_gcd(p, q):
    """Monic gcd (the gcd of two zero polynomials is zero)."""
    while q:
        p, q = q, poly_divmod(p, q)[1]
    return poly_monic(p)


def poly_xgcd(p, q):
    """Return (g, s, t) with s*p + t*q = g, g monic."""
    r0, r1 = p, q
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        quo, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, poly_sub(s0, poly_mul(quo, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(quo, t1))
    if not r0:
        return (), (), ()
    inv = 1 / r0[-1]
    return poly_scale(r0, inv), poly_scale(s0, inv), poly_scale(t0, inv)


def poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_compose_power(p, k):
    """p(x) -> p(x^k)."""
    if k == 1 or not p:
        return p
    out = [Fraction(0)] * ((len(p) - 1) * k + 1)
    for i, c in enumerate(p):
        out[i * k] = c
    return tuple(out)


# --------------------------------------------------------------------------
# cyclotomic polynomials and reduction tables
# --------------------------------------------------------------------------


def _divisors(n):
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Phi_n by exact division of x^n - 1 by the Phi_d with d | n, d < n."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    p = poly([-1] + [0] * (n - 1) + [1])
    for d in _divisors(n)[:-1]:
        p, rem = poly_divmod(p, cyclotomic_polynomial(d))
        assert not rem
    return p


def euler_phi(n):
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n):
    # x^k mod Phi_n for 0 <= k < n, as dense integer rows of length phi(n)
    phi_poly = cyclotomic_polynomial(n)
    deg = len(phi_poly) - 1
    rows = []
    for k in range(n):
        if k < deg:
            row = [0] * deg
            row[k] = 1
        else:
            _, rem = poly_divmod(poly([0] * k + [1]), phi_poly)
            row = [int(c) for c in rem] + [0] * (deg - len(rem))
        rows.append(tuple(row))
    return tuple(rows)


def _reduce(n, coeffs):
    """Dense representative of sum c_k x^k in Q(zeta_n), length phi(n)."""
    table = _power_table(n)
    deg = len(table[0])
    out = [Fraction(0)] * deg
    for k, c in enumerate(coeffs):
        if not c:
            continue
        row = table[k % n]
        if k % n < deg:
            out[k % n] += c
        else:
            for i, v in enumerate(row):
                if v:
                    out[i] += c * v
    return tuple(out)


# --------------------------------------------------------------------------
# Cyclotomic
# --------------------------------------------------------------------------


class Cyclotomic:
    """An element of Q(zeta_n) in canonical power-basis form."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order, coeffs):
        # trusted constructor: coeffs must already be canonical
        self.order = order
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def make(cls, order, raw):
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        return cls(order, _reduce(order, [Fraction(c) for c in raw]))

    @classmethod
    def rational(cls, order, value):
        deg = euler_phi(order)
        coeffs = [Fraction(0)] * deg
        coeffs[0] = Fraction(value)
        return cls(order, tuple(coeffs))

    @classmethod
    def zero(cls, order):
        return cls.rational(order, 0)

    @classmethod
    def one(cls, order):
        return cls.rational(order, 1)

    @classmethod
    def zeta(cls, order, power=1):
        power %= order
        return cls(order, _reduce(order, [0] * power + [1]))

    # -- predicates -------------------------------------------------------

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def sort_key(self):
        return self.coeffs

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise OrderMismatch(
                    f"orders differ: {self.order} vs {other.order}",
                    left=self.order, right=other.order,
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return Cyclotomic(self.order, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) == 1:
            return Cyclotomic(self.order, (a[0] * b[0],))
        prod = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
        return Cyclotomic(self.order, _reduce(self.order, prod))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero in Q(zeta_%d)" % self.order)
        if self.is_rational():
            return Cyclotomic.rational(self.order, 1 / self.coeffs[0])
        g, s, _ = poly_xgcd(poly(self.coeffs), cyclotomic_polynomial(self.order))
        # Phi_n is irreducible, so g is the constant 1
        assert g == (1,)
        return Cyclotomic.make(self.order, s)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        acc = Cyclotomic.one(self.order)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def embed(self, target_order):
        """Image under zeta_n -> zeta_m^(m/n)."""
        if target_order % self.order:
            raise NotDivisible(
                f"{self.order} does not divide {target_order}",
                order=self.order, target=target_order,
            )
        if target_order == self.order:
            return self
        step = target_order // self.order
        raw = [0] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            raw[i * step] = c
        return Cyclotomic(target_order, _reduce(target_order, raw))

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            if other.order == self.order:
                return self.coeffs == other.coeffs
            m = math.lcm(self.order, other.order)
            return self.embed(m).coeffs == other.embed(m).coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        # consistent with __eq__ among values of one order and with rationals
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.order, self.coeffs))
        return self._hash

    # -- output -----------------------------------------------------------

    def to_complex(self):
        z = cmath.exp(2j * math.pi / self.order)
        return sum((float(c) * z**i for i, c in enumerate(self.coeffs) if c), 0j)

    def __str__(self):
        return format_cyclotomic(self)

    def __repr__(self):
        return f"Cyclotomic({self.order}, {format_cyclotomic(self)!r})"


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_cyclotomic(a, symbol="z"):
    """Serialize in the cyclotomic expression grammar, descending powers."""
    terms = []
    for k in range(len(a.coeffs) - 1, -1, -1):
        c = a.coeffs[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            atom = symbol if k == 1 else f"{symbol}^{k}"
            body = atom if mag == 1 else f"{format_rational(mag)}*{atom}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# functional aliases -------------------------------------------------------


def cyc_make(order, raw):
    return Cyclotomic.make(order, raw)


def cyc_add(a, b):
    return a + b


def cyc_mul(a, b):
    return a * b


def cyc_neg(a):
    return -a


def cyc_inv(a):
    return a.inverse()


def cyc_embed(a, target_order):
    return a.embed(target_order)


def cyc_to_complex(a):
    return a.to_complex()


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(1) if m.group(1) is not None else m.start(2)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append((m.group(2), m.group(2), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            self.fail(f"expected {kind!r}, found {self.describe(tok)}")
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], self.text)

    @staticmethod
    def describe(tok):
        return "end of input" if tok[0] == "end" else repr(str(tok[1]))

    def rational(self):
        num = self.take("int")[1]
        if self.peek()[0] == "/" and self.tokens[self.i + 1][0] == "int":
            self.take("/")
            tok = self.take("int")
            if tok[1] == 0:
                self.fail("zero denominator", tok)
            return Fraction(num, tok[1])
        return Fraction(num)


class _CycParser(_Parser):
    def __init__(self, text, order):
        super().__init__(text)
        self.order = order

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.describe(self.peek())}")
        return value

    def expr(self):
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        tok = self.peek()
        if tok[0] == "int":
            save = self.i
            q = self.rational()
            if self.peek()[0] == "*":
                self.take("*")
                return self.atom() * q
            self.i = save
        return self.atom()

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            return Cyclotomic.rational(self.order, self.rational())
        if tok[0] == "z":
            self.take()
            k = 1
            if self.peek()[0] == "^":
                self.take("^")
                k = self.take("int")[1]
            return Cyclotomic.zeta(self.order, k)
        if tok[0] == "(":
            self.take("(")
            value = self.expr()
            self.take(")")
            return value
        self.fail(f"unexpected {self.describe(tok)}")


def parse_cyclotomic(text, order):
    """Parse a rational polynomial expression in ``z`` (= zeta_order)."""
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}", 0, str(text))
    return _CycParser(text, order).parse()
