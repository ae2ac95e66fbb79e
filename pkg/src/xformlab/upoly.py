"""Univariate polynomials over an exact field and the factorization-pattern
predicate that decides X-formability.

A monic polynomial has the X-formable pattern when it is a product of
pairwise distinct monic irreducible quadratics (each to the first power)
and distinct linear factors each raised to the power 1 or 2.  Over the
reals this is decided without any real factorization: square-free
exponents plus a Sturm real-rootedness check of the doubled part are
equivalent to the pattern.  Over F_p the complete factorization is cheap
and decides it directly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import numroots
from .errors import (
    DivisionByZero,
    FieldMismatch,
    NotSquarefree,
    ParseError,
    RootSearchExhausted,
)
from .exactnum import GF, QQ, same_field


class Polynomial:
    """Dense univariate polynomial; coefficients ascending by degree."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = [field.coerce(c) for c in coeffs]
        while coeffs and coeffs[-1] == field.zero:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def one(cls, field):
        return cls(field, [field.one])

    @classmethod
    def x(cls, field):
        return cls(field, [field.zero, field.one])

    @classmethod
    def constant(cls, field, c):
        return cls(field, [c])

    @classmethod
    def from_roots(cls, field, roots):
        f = cls.one(field)
        for r in roots:
            f = f * cls(field, [field.neg(field.coerce(r)), field.one])
        return f

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        f = same_field(self.field, other.field)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(f, [f.add(self.coeff(k), other.coeff(k)) for k in range(n)])

    def __sub__(self, other):
        f = same_field(self.field, other.field)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(f, [f.sub(self.coeff(k), other.coeff(k)) for k in range(n)])

    def __neg__(self):
        f = self.field
        return Polynomial(f, [f.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        f = same_field(self.field, other.field)
        if self.is_zero or other.is_zero:
            return Polynomial.zero(f)
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == f.zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Polynomial(f, out)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c):
        f = self.field
        c = f.coerce(c)
        return Polynomial(f, [f.mul(c, a) for a in self.coeffs])

    def __divmod__(self, other):
        return poly_divrem(self, other)

    def __floordiv__(self, other):
        return poly_divrem(self, other)[0]

    def __mod__(self, other):
        return poly_divrem(self, other)[1]

    def __call__(self, x):
        f = self.field
        x = f.coerce(x)
        v = f.zero
        for c in reversed(self.coeffs):
            v = f.add(f.mul(v, x), c)
        return v

    def derivative(self) -> "Polynomial":
        f = self.field
        out = []
        for k in range(1, len(self.coeffs)):
            out.append(f.mul(f.coerce(k) if f.is_fp else Fraction(k), self.coeffs[k]))
        return Polynomial(f, out)

    def monic(self) -> "Polynomial":
        if self.is_zero or self.is_monic:
            return self
        inv = self.field.inv(self.lead)
        return self.scale(inv)

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """f(inner(X)) by Horner."""
        f = same_field(self.field, inner.field)
        result = Polynomial.zero(f)
        for c in reversed(self.coeffs):
            result = result * inner + Polynomial.constant(f, c)
        return result

    def divides(self, other: "Polynomial") -> bool:
        return poly_divrem(other, self)[1].is_zero

    def to_json_list(self) -> list[str]:
        return [self.field.format(c) for c in self.coeffs]

    @classmethod
    def from_json_list(cls, data, field) -> "Polynomial":
        if not isinstance(data, list):
            raise ParseError("polynomial JSON must be a list of scalar strings")
        coeffs = []
        for k, s in enumerate(data):
            if not isinstance(s, str):
                raise ParseError(f"polynomial coefficient {k} must be a string")
            coeffs.append(field.parse(s))
        return cls(field, coeffs)

    def __repr__(self):
        if self.is_zero:
            return "Polynomial(0)"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c == self.field.zero:
                continue
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"{c}*X" if c != self.field.one else "X")
            else:
                terms.append(f"{c}*X^{k}" if c != self.field.one else f"X^{k}")
        return "Polynomial(" + " + ".join(terms) + f" over {self.field!r})"


def poly_divrem(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Exact division with remainder: a = q*b + r, deg r < deg b."""
    f = same_field(a.field, b.field)
    if b.is_zero:
        raise DivisionByZero("polynomial division by zero")
    if a.degree < b.degree:
        return Polynomial.zero(f), a
    rem = list(a.coeffs)
    db = b.degree
    inv_lead = f.inv(b.lead)
    q = [f.zero] * (len(rem) - db)
    for i in range(len(rem) - db - 1, -1, -1):
        c = f.mul(rem[i + db], inv_lead)
        if c == f.zero:
            continue
        q[i] = c
        for j in range(db + 1):
            rem[i + j] = f.sub(rem[i + j], f.mul(c, b.coeffs[j]))
    return Polynomial(f, q), Polynomial(f, rem[:db])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    same_field(a.field, b.field)
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, poly_divrem(a, b)[1]
    return a.monic()


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero or b.is_zero:
        return Polynomial.zero(same_field(a.field, b.field))
    return ((a * b) // poly_gcd(a, b)).monic()


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """f = unit * prod(g_i ** i); the g_i monic, squarefree, pairwise coprime."""

    unit: object
    parts: tuple  # of (Polynomial, int), exponents strictly increasing
    field: object

    def reconstruct(self) -> Polynomial:
        f = Polynomial.constant(self.field, self.unit)
        for g, e in self.parts:
            f = f * g**e
        return f

    def part(self, exponent: int) -> Optional[Polynomial]:
        for g, e in self.parts:
            if e == exponent:
                return g
        return None

    def max_exponent(self) -> int:
        return max((e for _, e in self.parts), default=0)


def yun_squarefree(f: Polynomial) -> SquarefreeDecomposition:
    """Square-free decomposition over the rationals (Yun's algorithm)."""
    if f.field != QQ:
        raise FieldMismatch("yun_squarefree needs rational coefficients")
    if f.is_zero:
        raise ValueError("zero polynomial")
    unit = f.lead
    w = f.monic()
    parts = []
    if w.degree >= 1:
        g = poly_gcd(w, w.derivative())
        if g.degree == 0:
            parts.append((w, 1))
        else:
            y = w.derivative() // g
            w = w // g
            i = 1
            while True:
                z = y - w.derivative()
                if z.is_zero:
                    if w.degree > 0:
                        parts.append((w.monic(), i))
                    break
                h = poly_gcd(w, z)
                if h.degree > 0:
                    parts.append((h, i))
                w = w // h
                y = z // h
                i += 1
    return SquarefreeDecomposition(unit, tuple(parts), QQ)


def _fp_pth_root(f: Polynomial) -> Polynomial:
    p = f.field.p
    out = []
    for k, c in enumerate(f.coeffs):
        if k % p == 0:
            out.append(c)  # c ** (1/p) == c in F_p
        elif c != 0:
            raise ValueError("not a p-th power")
    return Polynomial(f.field, out)


def fp_squarefree(f: Polynomial) -> SquarefreeDecomposition:
    """Square-free decomposition in characteristic p."""
    field = f.field
    if not field.is_fp:
        raise FieldMismatch("fp_squarefree needs F_p coefficients")
    if f.is_zero:
        raise ValueError("zero polynomial")
    p = field.p
    unit = f.lead
    m = f.monic()
    parts: list[tuple[Polynomial, int]] = []
    if m.degree >= 1:
        deriv = m.derivative()
        if deriv.is_zero:
            c = m
        else:
            c = poly_gcd(m, deriv)
            w = m // c
            i = 1
            while w.degree > 0:
                y = poly_gcd(w, c)
                z = w // y
                if z.degree > 0:
                    parts.append((z, i))
                w = y
                c = c // y
                i += 1
        if c.degree > 0:
            for g, e in fp_squarefree(_fp_pth_root(c)).parts:
                parts.append((g, e * p))
    parts.sort(key=lambda ge: ge[1])
    return SquarefreeDecomposition(unit, tuple(parts), field)


def squarefree_decomposition(f: Polynomial) -> SquarefreeDecomposition:
    return fp_squarefree(f) if f.field.is_fp else yun_squarefree(f)


# ---------------------------------------------------------------------------
# Sturm chains


def _primitive_scale(f: Polynomial) -> Polynomial:
    """Multiply by a positive rational so coefficients become coprime ints."""
    if f.is_zero:
        return f
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    num = 0
    for c in f.coeffs:
        num = math.gcd(num, abs(c.numerator * den // c.denominator))
    return f.scale(Fraction(den, num))


def sturm_count(f: Polynomial) -> int:
    """Number of distinct real roots of a squarefree rational polynomial."""
    if f.field != QQ:
        raise FieldMismatch("sturm_count needs rational coefficients")
    if f.is_zero:
        raise ValueError("zero polynomial")
    if f.degree == 0:
        return 0
    if poly_gcd(f, f.derivative()).degree != 0:
        raise NotSquarefree("input has a repeated factor")
    chain = [_primitive_scale(f), _primitive_scale(f.derivative())]
    while chain[-1].degree > 0:
        r = poly_divrem(chain[-2], chain[-1])[1]
        if r.is_zero:
            break
        chain.append(_primitive_scale(-r))
    if chain[-1].is_zero:
        chain.pop()

    def variations(signs):
        signs = [s for s in signs if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)

    def sgn(x):
        return (x > 0) - (x < 0)

    at_minus = [sgn(g.lead) * (-1) ** g.degree for g in chain]
    at_plus = [sgn(g.lead) for g in chain]
    return variations(at_minus) - variations(at_plus)


# ---------------------------------------------------------------------------
# Rational roots and quadratic splitting (numeric candidates, exact checks)


def _integer_form(f: Polynomial) -> list[int]:
    """Coefficients of the primitive integer multiple of f."""
    g = _primitive_scale(f)
    return [int(c) for c in g.coeffs]

def _bounded_divisors(n: int, *, prime_bound: int = 100000) -> Optional[list[int]]:
    """All positive divisors of n, or None when factoring exceeds the budget."""
    n = abs(n)
    if n == 0:
        raise ValueError("no divisors of 0")
    factors = {}
    d = 2
    while d * d <= n and d <= prime_bound:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        if n > prime_bound * prime_bound and not _is_probable_prime(n):
            return None
        factors[n] = factors.get(n, 0) + 1
    divs = [1]
    for prime, e in factors.items():
        divs = [d * prime**k for d in divs for k in range(e + 1)]
        if len(divs) > 20000:
            return None
    return sorted(divs)


def _is_probable_prime(n: int) -> bool:
    # deterministic Miller-Rabin for n < 3.3e24
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _near_real(re: Fraction, im: Fraction) -> bool:
    return abs(im) < Fraction(1, 10**7) * max(Fraction(1), abs(re))


def _squarefree_rational_roots(g: Polynomial) -> list[Fraction]:
    """All rational roots of a squarefree rational polynomial, certified."""
    roots = []
    if g.coeff(0) == 0:
        roots.append(Fraction(0))
        g = g // Polynomial(QQ, [0, 1])
    if g.degree < 1:
        return roots
    ints = _integer_form(g)
    lead_bound = abs(ints[-1])
    for re, im in numroots.root_candidates(list(g.coeffs)):
        if not _near_real(re, im):
            continue
        cand = re.limit_denominator(lead_bound)
        if cand not in roots and g(cand) == 0:
            roots.append(cand)
            g = g // Polynomial(QQ, [-cand, 1])
    # certify the residual has no rational roots left (and catch any the
    # numeric pass missed) by the bounded divisor search
    while g.degree >= 1:
        ints = _integer_form(g)
        d0 = _bounded_divisors(ints[0])
        dl = _bounded_divisors(ints[-1])
        if d0 is None or dl is None or len(d0) * len(dl) > 100000:
            raise RootSearchExhausted(
                "could not certify completeness of the rational root search",
                residual=g,
            )
        found = None
        for num, den in itertools.product(d0, dl):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if g(cand) == 0:
                    found = cand
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        g = g // Polynomial(QQ, [-found, 1])
    return roots


def rational_roots(f: Polynomial) -> list[tuple[Fraction, int]]:
    """All rational roots with exact multiplicities, sorted by root.

    Strategy: numeric candidates on each squarefree part, rational
    reconstruction, exact division checks; completeness certified by a
    bounded divisor search on the residual.  Raises RootSearchExhausted
    (carrying the residual) when the budget is blown.
    """
    if f.field != QQ:
        raise FieldMismatch("rational_roots needs rational coefficients")
    if f.is_zero:
        raise ValueError("zero polynomial")
    out = []
    for g, e in yun_squarefree(f).parts:
        out.extend((r, e) for r in _squarefree_rational_roots(g))
    out.sort(key=lambda re_: re_[0])
    return out


@dataclass(frozen=True)
class QuadraticSplitFailure:
    """The input (presumably or provably) has an irreducible factor of
    degree >= 3, so no splitting into rational quadratics exists."""

    proven: bool
    reason: str


def _try_quadratic(f: Polynomial, b: Fraction, c: Fraction):
    q = Polynomial(QQ, [c, b, 1])
    quo, rem = poly_divrem(f, q)
    return q if rem.is_zero else None, quo


def _pair_real_candidates(h, reals, lead_bound):
    """Backtracking search pairing numeric real roots into exact quadratic
    factors of h.  Returns a list of quadratics or None."""
    if h.degree == 0:
        return []
    if len(reals) < 2:
        return None
    r0 = reals[0]
    for i in range(1, len(reals)):
        r1 = reals[i]
        b = (-(r0 + r1)).limit_denominator(lead_bound)
        c = (r0 * r1).limit_denominator(lead_bound)
        q, quo = _try_quadratic(h, b, c)
        if q is None:
            continue
        rest = _pair_real_candidates(quo, reals[1:i] + reals[i + 1 :], lead_bound)
        if rest is not None:
            return [q] + rest
    return None


def quadratic_split(
    f: Polynomial,
) -> Union[list[Polynomial], QuadraticSplitFailure]:
    """Split a squarefree rational polynomial with no rational roots into
    monic quadratic factors, each verified by exact division.

    Complex conjugate candidate pairs are reconstructed first; leftover
    real-irrational candidates are paired by backtracking (this also covers
    factors like X^2 - 2 whose roots are real).  A failed double-precision
    pass is retried once at high precision before giving up.
    """
    if f.field != QQ:
        raise FieldMismatch("quadratic_split needs rational coefficients")
    if f.is_zero:
        raise ValueError("zero polynomial")
    f = f.monic()
    if f.degree == 0:
        return []
    if f.degree % 2 == 1:
        return QuadraticSplitFailure(
            proven=True,
            reason="odd degree: some irreducible factor has odd degree >= 3",
        )
    if poly_gcd(f, f.derivative()).degree != 0:
        raise NotSquarefree("input has a repeated factor")
    if f.degree == 2:
        return [f]

    lead_bound = abs(_integer_form(f)[-1])

    def attempt(candidate_fn):
        quads = []
        h = f
        for re, im in candidate_fn(list(f.coeffs)):
            if _near_real(re, im) or im < 0:
                continue
            b = (-2 * re).limit_denominator(lead_bound)
            c = (re * re + im * im).limit_denominator(lead_bound)
            q, quo = _try_quadratic(h, b, c)
            if q is not None and q not in quads:
                quads.append(q)
                h = quo
        if h.degree > 0:
            reals = sorted(
                re for re, im in candidate_fn(list(h.coeffs)) if _near_real(re, im)
            )
            rest = _pair_real_candidates(h, reals, lead_bound)
            if rest is None:
                return None
            quads.extend(rest)
        return quads

    result = attempt(numroots.root_candidates)
    if result is None:
        result = attempt(numroots.root_candidates_hp)
    if result is None:
        return QuadraticSplitFailure(
            proven=False,
            reason="no verified splitting into quadratics was found",
        )
    check = Polynomial.one(QQ)
    for q in result:
        check = check * q
    assert check == f, "verified factors stopped multiplying back, this is a bug"
    return sorted(result, key=lambda q: q.coeffs)


# ---------------------------------------------------------------------------
# Factorization over F_p

_SIEVE_LIMIT = 300000
_irreducible_cache: dict[tuple[int, int], list] = {}


def _fp_monic_irreducibles(p: int, d: int) -> list[Polynomial]:
    """All monic irreducible polynomials of degree d over F_p (sieved)."""
    key = (p, d)
    cached = _irreducible_cache.get(key)
    if cached is not None:
        return cached
    field = GF(p)
    out = []
    if d == 1:
        out = [Polynomial(field, [a, 1]) for a in range(p)]
    else:
        lower = []
        for dd in range(2, d // 2 + 1):
            lower.extend(_fp_monic_irreducibles(p, dd))
        for tail in itertools.product(range(p), repeat=d):
            cand = Polynomial(field, list(tail) + [1])
            if any(cand(a) == 0 for a in range(p)):
                continue
            if any(g.divides(cand) for g in lower):
                continue
            out.append(cand)
    _irreducible_cache[key] = out
    return out


def _fp_powmod_xq(f: Polynomial, q: int) -> Polynomial:
    """X^q mod f by square-and-multiply."""
    field = f.field
    result = Polynomial.one(field)
    base = Polynomial.x(field) % f
    while q:
        if q & 1:
            result = (result * base) % f
        base = (base * base) % f
        q >>= 1
    return result


def _fp_equal_degree_split(f: Polynomial, d: int, rng) -> list[Polynomial]:
    """Cantor-Zassenhaus splitting of a squarefree product of degree-d
    irreducibles (odd p)."""
    field = f.field
    p = field.p
    if f.degree == d:
        return [f.monic()]
    exp = (p**d - 1) // 2
    while True:
        r = Polynomial(field, [rng.randrange(p) for _ in range(f.degree)])
        if r.degree < 1:
            continue
        g = poly_gcd(f, r)
        if not 0 < g.degree < f.degree:
            t = Polynomial.one(field)
            base = r % f
            e = exp
            while e:
                if e & 1:
                    t = (t * base) % f
                base = (base * base) % f
                e >>= 1
            g = poly_gcd(f, t - Polynomial.one(field))
            if not 0 < g.degree < f.degree:
                continue
        out = []
        for piece in (g, f // g):
            out.extend(_fp_equal_degree_split(piece.monic(), d, rng))
        return out


def _fp_factor_distinct_degree(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Deterministic-seed DDF + EDF fallback for large p**d enumerations."""
    import random

    rng = random.Random(20260810)
    field = f.field
    p = field.p
    out = []
    for g, e in fp_squarefree(f).parts:
        g = g.monic()
        h = Polynomial.x(field) % g
        d = 0
        while g.degree > 0:
            d += 1
            if 2 * d > g.degree:
                out.append((g, e))
                break
            # h = X^(p^d) mod g
            hp = h
            # raise previous power to the p-th power mod g
            t = Polynomial.one(field)
            base = hp
            ee = p
            while ee:
                if ee & 1:
                    t = (t * base) % g
                base = (base * base) % g
                ee >>= 1
            h = t
            w = poly_gcd(g, h - Polynomial.x(field))
            if w.degree > 0:
                for q in _fp_equal_degree_split(w, d, rng):
                    out.append((q, e))
                g = g // w
                h = h % g
    return out


def fp_factor(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Complete factorization over F_p into monic irreducibles.

    Trial division against sieved irreducibles in increasing degree; for
    parameter ranges where the sieve would be too large, a distinct-degree
    decomposition with seeded equal-degree splitting takes over.
    """
    field = f.field
    if not field.is_fp:
        raise FieldMismatch("fp_factor needs F_p coefficients")
    if f.is_zero:
        raise ValueError("zero polynomial")
    p = field.p
    g = f.monic()
    out = []
    for a in range(p):
        e = 0
        lin = Polynomial(field, [-a % p, 1])
        while g.degree >= 1 and g(a) == 0:
            g = g // lin
            e += 1
        if e:
            out.append((lin, e))
    d = 2
    while 2 * d <= g.degree:
        if p**d > _SIEVE_LIMIT:
            out.extend(_fp_factor_distinct_degree(g))
            g = Polynomial.one(field)
            break
        for cand in _fp_monic_irreducibles(p, d):
            e = 0
            while cand.divides(g):
                g = g // cand
                e += 1
            if e:
                out.append((cand, e))
            if g.degree < 2 * d:
                break
        d += 1
    if g.degree >= 1:
        out.append((g, 1))
    out.sort(key=lambda qe: (qe[0].degree, qe[0].coeffs))
    return out


# ---------------------------------------------------------------------------
# The factorization-pattern predicate

VIEW_REAL = "real"
VIEW_COMPLEX = "complex"


def fp_view(p: int) -> str:
    return f"fp:{p}"


def normalize_view(view: str, field) -> str:
    """Validate a view label against the coefficient field."""
    if view in (VIEW_REAL, VIEW_COMPLEX):
        if field.is_fp:
            raise FieldMismatch(f"{view} view needs rational coefficients")
        return view
    if view == "fp" or view.startswith("fp:"):
        if not field.is_fp:
            raise FieldMismatch("fp view needs F_p coefficients")
        if view == "fp":
            return fp_view(field.p)
        p = int(view.split(":", 1)[1])
        if p != field.p:
            raise FieldMismatch(f"view {view} does not match field F_{field.p}")
        return view
    raise ValueError(f"unknown view {view!r}")


@dataclass(frozen=True)
class PropertyPReport:
    """Verdict of the X-formable factorization pattern for one view."""

    holds: bool
    view: str
    violation: Optional[str] = None

    def to_json_dict(self):
        return {"holds": self.holds, "view": self.view, "violation": self.violation}


def verifies_property_p(f: Polynomial, view: str) -> PropertyPReport:
    """Decide the X-formable factorization pattern of a monic polynomial.

    complex view: every root multiplicity <= 2, i.e. no square-free part
    with exponent >= 3.  real view: additionally the doubled part must be
    real-rooted (Sturm count equals its degree).  fp view: the complete
    factorization must contain only linear factors with exponent <= 2 and
    quadratic factors with exponent exactly 1.
    """
    view = normalize_view(view, f.field)
    if not f.is_monic or f.degree < 1:
        raise ValueError("input must be monic of degree >= 1")
    if view.startswith("fp:"):
        for q, e in fp_factor(f):
            if q.degree >= 3:
                return PropertyPReport(
                    False, view, f"irreducible factor of degree {q.degree}"
                )
            if q.degree == 2 and e >= 2:
                return PropertyPReport(
                    False, view, f"repeated quadratic factor (exponent {e})"
                )
            if q.degree == 1 and e >= 3:
                return PropertyPReport(
                    False, view, f"linear factor with exponent {e} >= 3"
                )
        return PropertyPReport(True, view)

    decomp = yun_squarefree(f)
    for g, e in decomp.parts:
        if e >= 3:
            return PropertyPReport(False, view, f"square-free part with exponent {e}")
    if view == VIEW_REAL:
        g2 = decomp.part(2)
        if g2 is not None and sturm_count(g2) != g2.degree:
            return PropertyPReport(
                False, view, "doubled part is not a product of real linear factors"
            )
    return PropertyPReport(True, view)


def quadratic_discriminant(q: Polynomial) -> Fraction:
    """b^2 - 4ac of a quadratic."""
    if q.degree != 2:
        raise ValueError("not a quadratic")
    a, b, c = q.coeff(2), q.coeff(1), q.coeff(0)
    return b * b - 4 * a * c
