"""Motivic weights: rational functions in t = L^(1/r) over Q, plus infinity.

A finite weight is stored as a reduced fraction num/den of polynomials in t
(den monic), together with the root index r.  The representation is made
canonical by shrinking r as far as the exponents allow, so structural
equality is value equality and weights are hashable.
"""

import math
import re
from fractions import Fraction

from .errors import (
    IndeterminateZeroTimesInfinity,
    InfiniteArithmetic,
    NotAPerfectPower,
    NotAPolynomial,
    ParseError,
    PoleAtPoint,
)
from .exactnum import (
    _Parser,
    format_rational,
    poly,
    poly_add,
    poly_compose_power,
    poly_degree,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_mul,
    poly_neg,
    poly_scale,
)

NEG_INF = -math.inf
POS_INF = math.inf


def _exponent_gcd(p):
    g = 0
    for i, c in enumerate(p):
        if c:
            g = math.gcd(g, i)
    return g


def _compress(p, k):
    return tuple(p[i] for i in range(0, len(p), k))


class MotivicWeight:
    __slots__ = ("r", "num", "den", "infinite")

    def __init__(self, num=(), den=(Fraction(1),), r=1, infinite=False):
        # callers outside this module should use the constructors below
        self.r = r
        self.num = num
        self.den = den
        self.infinite = infinite

    @classmethod
    def fraction(cls, num, den, r=1):
        num, den = poly(num), poly(den)
        if not den:
            raise PoleAtPoint("zero denominator")
        if not num:
            return cls((), (Fraction(1),), 1)
        g = poly_gcd(num, den)
        if len(g) > 1:
            num, _ = poly_divmod(num, g)
            den, _ = poly_divmod(den, g)
        lead = den[-1]
        num, den = poly_scale(num, 1 / lead), poly_scale(den, 1 / lead)
        k = math.gcd(r, _exponent_gcd(num), _exponent_gcd(den))
        if k > 1:
            num, den, r = _compress(num, k), _compress(den, k), r // k
        return cls(num, den, r)

    @classmethod
    def constant(cls, c):
        return cls.fraction((Fraction(c),), (Fraction(1),), 1)

    @classmethod
    def L_power(cls, q):
        q = Fraction(q)
        r, p = q.denominator, q.numerator
        if p >= 0:
            return cls.fraction([0] * p + [1], [1], r)
        return cls.fraction([1], [0] * (-p) + [1], r)

    @classmethod
    def polynomial(cls, coeffs):
        """From a map exponent -> coefficient, exponents rational and >= 0."""
        coeffs = {Fraction(e): Fraction(c) for e, c in dict(coeffs).items()}
        r = math.lcm(1, *(e.denominator for e in coeffs))
        out = {}
        for e, c in coeffs.items():
            if e < 0:
                raise ValueError("negative exponent in polynomial")
            k = int(e * r)
            out[k] = out.get(k, 0) + c
        dense = [out.get(i, 0) for i in range(max(out, default=-1) + 1)]
        return cls.fraction(dense, [1], r)

    # -- predicates -------------------------------------------------------

    def is_zero(self):
        return not self.infinite and not self.num

    def is_polynomial(self):
        return not self.infinite and self.den == (1,)

    # -- arithmetic -------------------------------------------------------

    def _rescaled(self, r):
        k = r // self.r
        return poly_compose_power(self.num, k), poly_compose_power(self.den, k)

    @staticmethod
    def _lift(x):
        if isinstance(x, MotivicWeight):
            return x
        if isinstance(x, (int, Fraction)):
            return MotivicWeight.constant(x)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.infinite or other.infinite:
            return INFINITY
        r = math.lcm(self.r, other.r)
        (a, b), (c, d) = self._rescaled(r), other._rescaled(r)
        return MotivicWeight.fraction(poly_add(poly_mul(a, d), poly_mul(c, b)), poly_mul(b, d), r)

    __radd__ = __add__

    def __neg__(self):
        if self.infinite:
            raise InfiniteArithmetic("negation of infinity")
        return MotivicWeight(poly_neg(self.num), self.den, self.r)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if other.infinite:
            raise InfiniteArithmetic("subtraction of infinity")
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.infinite or other.infinite:
            if self.is_zero() or other.is_zero():
                raise IndeterminateZeroTimesInfinity("0 * infinity is undefined")
            return INFINITY
        r = math.lcm(self.r, other.r)
        (a, b), (c, d) = self._rescaled(r), other._rescaled(r)
        return MotivicWeight.fraction(poly_mul(a, c), poly_mul(b, d), r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.infinite or other.infinite:
            raise InfiniteArithmetic("division involving infinity")
        if other.is_zero():
            raise PoleAtPoint("division by the zero weight")
        r = math.lcm(self.r, other.r)
        (a, b), (c, d) = self._rescaled(r), other._rescaled(r)
        return MotivicWeight.fraction(poly_mul(a, d), poly_mul(b, c), r)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, k):
        if self.infinite:
            if k <= 0:
                raise InfiniteArithmetic("non-positive power of infinity")
            return INFINITY
        if k < 0:
            return ONE / (self ** (-k))
        acc = ONE
        for _ in range(k):
            acc = acc * self
        return acc

    # -- comparison -------------------------------------------------------

    def _canon(self):
        return ("inf",) if self.infinite else (self.r, self.num, self.den)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._canon() == other._canon()

    def __hash__(self):
        return hash(self._canon())

    # -- invariants -------------------------------------------------------

    def dim(self):
        if self.infinite:
            return POS_INF
        if not self.num:
            return NEG_INF
        return Fraction(poly_degree(self.num) - poly_degree(self.den), self.r)

    def evaluate(self, L_value):
        if self.infinite:
            raise InfiniteArithmetic("cannot evaluate infinity")
        t = rational_root(Fraction(L_value), self.r)
        d = poly_eval(self.den, t)
        if d == 0:
            raise PoleAtPoint(f"denominator vanishes at L = {format_rational(L_value)}")
        return Fraction(poly_eval(self.num, t)) / d

    def poly_coeffs(self):
        if self.infinite or self.den != (1,):
            raise NotAPolynomial(f"{self} is not a polynomial in L^(1/{self.r})")
        return {Fraction(i, self.r): c for i, c in enumerate(self.num) if c}

    # -- output -----------------------------------------------------------

    def __str__(self):
        return format_weight(self)

    def __repr__(self):
        return f"MotivicWeight({format_weight(self)!r})"


INFINITY = MotivicWeight(infinite=True)
ZERO = MotivicWeight.constant(0)
ONE = MotivicWeight.constant(1)
L = MotivicWeight.L_power(1)


def _integer_root(n, k):
    if n < 0:
        return None
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x**k == n else None


def rational_root(q, r):
    """The nonnegative rational r-th root of q, if it exists."""
    if r == 1:
        return q
    a, b = _integer_root(q.numerator, r), _integer_root(q.denominator, r)
    if a is None or b is None:
        raise NotAPerfectPower(f"{format_rational(q)} is not a perfect {r}-th power")
    return Fraction(a, b)


def _format_poly(p, r):
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        e = Fraction(i, r)
        mag = abs(c)
        if e == 0:
            body = format_rational(mag)
        else:
            atom = "L" if e == 1 else (f"L^{e.numerator}" if e.denominator == 1 else f"L^({e.numerator}/{e.denominator})")
            body = atom if mag == 1 else f"{format_rational(mag)}*{atom}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _needs_parens(text):
    return " " in text or text.startswith("-")


def format_weight(w):
    """Serialize as ``P(L)`` or ``P(L)/Q(L)`` with descending exponents."""
    if w.infinite:
        return "infinity"
    num = _format_poly(w.num, w.r)
    if w.den == (1,):
        return num
    den = _format_poly(w.den, w.r)
    if _needs_parens(num):
        num = f"({num})"
    if _needs_parens(den) or "*" in den:
        den = f"({den})"
    return f"{num}/{den}"


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


class _WeightParser(_Parser):
    """expr := ['-'] term (('+'|'-') term)*; term := power (('*'|'/') power)*;
    power := atom ['^' exponent]; atom := rational | 'L' | '(' expr ')';
    exponent := ['-'] int | '(' ['-'] int ['/' int] ')'."""

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.describe(self.peek())}")
        return value

    def expr(self):
        neg = False
        if self.peek()[0] in ("+", "-"):
            neg = self.take()[0] == "-"
        acc = self.term()
        if neg:
            acc = -acc
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.power()
        while self.peek()[0] in ("*", "/"):
            op = self.take()
            rhs = self.power()
            if op[0] == "/":
                if rhs.is_zero():
                    self.fail("division by zero", op)
                acc = acc / rhs
            else:
                acc = acc * rhs
        return acc

    def power(self):
        tok = self.peek()
        if tok[0] == "L":
            self.take()
            e = self.exponent() if self.peek()[0] == "^" else Fraction(1)
            return MotivicWeight.L_power(e)
        base = self.atom()
        if self.peek()[0] == "^":
            tok = self.peek()
            e = self.exponent()
            if e.denominator != 1:
                self.fail("fractional powers are only allowed on L", tok)
            if base.is_zero() and e < 0:
                self.fail("division by zero", tok)
            return base ** int(e)
        return base

    def exponent(self):
        self.take("^")
        if self.peek()[0] == "(":
            self.take("(")
            sign = -1 if self.peek()[0] == "-" and self.take() else 1
            q = self.rational()
            self.take(")")
            return sign * q
        sign = -1 if self.peek()[0] == "-" and self.take() else 1
        return sign * Fraction(self.take("int")[1])

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            return MotivicWeight.constant(self.rational())
        if tok[0] == "(":
            self.take("(")
            value = self.expr()
            self.take(")")
            return value
        self.fail(f"unexpected {self.describe(tok)}")


def parse_weight(text):
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}", 0, str(text))
    if re.fullmatch(r"\s*(infinity|inf)\s*", text, re.I):
        return INFINITY
    return _WeightParser(text).parse()


# --------------------------------------------------------------------------
# functional interface
# --------------------------------------------------------------------------


def w_from_L_power(q):
    return MotivicWeight.L_power(q)


def w_add(a, b):
    return a + b


def w_mul(a, b):
    return a * b


def w_dim(a):
    return a.dim()


def w_eval(a, L_value):
    return a.evaluate(L_value)


def w_poly_coeffs(a):
    return a.poly_coeffs()


def stringy_factor(e):
    """Closed form of sum_{s >= 1} L^(-(e+1)s) (L - 1) = (L - 1)/(L^(e+1) - 1).

    Infinite when e <= -1, where the series diverges.
    """
    q = Fraction(e) + 1
    if q <= 0:
        return INFINITY
    r, p = q.denominator, q.numerator
    num = [-1] + [0] * (r - 1) + [1]
    den = [-1] + [0] * (p - 1) + [1]
    return MotivicWeight.fraction(num, den, r)
