"""Exact scalars: arbitrary-precision rationals and small prime fields.

Rationals are ``fractions.Fraction`` values (always canonical: positive
denominator, reduced).  Elements of F_p are plain ints in ``[0, p)``; the
prime travels with the container (matrix, polynomial) rather than with each
element.  A :class:`RationalField` / :class:`PrimeField` object bundles the
scalar operations so containers can be written once for both fields.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, ParseError

Rational = Fraction

MAX_PRIME = 97


def is_small_odd_prime(p: int) -> bool:
    if p < 3 or p > MAX_PRIME or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """The rationals.  Scalars are ``Fraction`` values."""

    name = "rational"
    is_fp = False
    p = None

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def coerce(x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise FieldMismatch(f"not a rational scalar: {x!r}")

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def div(a, b):
        if b == 0:
            raise DivisionByZero("rational division by zero")
        return a / b

    @staticmethod
    def inv(a):
        if a == 0:
            raise DivisionByZero("rational division by zero")
        return 1 / a

    @staticmethod
    def parse(s: str) -> Fraction:
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational scalar {s!r}: {exc}") from None

    @staticmethod
    def format(x) -> str:
        return str(x)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")


class PrimeField:
    """F_p for an odd prime p <= 97.  Scalars are ints in [0, p)."""

    name = "fp"
    is_fp = True

    def __init__(self, p: int):
        if not is_small_odd_prime(p):
            raise ValueError(f"p must be an odd prime <= {MAX_PRIME}, got {p}")
        self.p = p
        self.zero = 0
        self.one = 1

    def coerce(self, x) -> int:
        if isinstance(x, bool) or not isinstance(x, int):
            raise FieldMismatch(f"not an F_{self.p} scalar: {x!r}")
        return x % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def div(self, a, b):
        return a * fp_inverse(b, self.p) % self.p

    def inv(self, a):
        return fp_inverse(a, self.p)

    def parse(self, s: str) -> int:
        try:
            v = int(s.strip())
        except ValueError:
            raise ParseError(f"bad F_{self.p} scalar {s!r}") from None
        return v % self.p

    def format(self, x) -> str:
        return str(x)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))


QQ = RationalField()

_fp_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    field = _fp_cache.get(p)
    if field is None:
        field = _fp_cache[p] = PrimeField(p)
    return field


def same_field(a, b):
    if a != b:
        raise FieldMismatch(f"field mismatch: {a!r} vs {b!r}")
    return a


def rational_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    """Exact rational arithmetic; result always in canonical form."""
    a, b = QQ.coerce(a), QQ.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return QQ.div(a, b)
    raise ValueError(f"unknown op {op!r}")


def fp_inverse(a: int, p: int) -> int:
    """Multiplicative inverse in F_p."""
    a %= p
    if a == 0:
        raise DivisionByZero(f"zero is not invertible in F_{p}")
    return pow(a, -1, p)


def rational_reconstruct(x: float, denominator_bound: int) -> Fraction:
    """Best rational approximation of ``x`` with denominator <= bound.

    Continued-fraction rounding: returns the fraction closest to ``x``
    among all with denominator up to the bound.  Callers must verify the
    candidate exactly downstream; nothing about the result is certified.
    """
    if denominator_bound < 1:
        raise ValueError("denominator_bound must be >= 1")
    return Fraction(x).limit_denominator(denominator_bound)
