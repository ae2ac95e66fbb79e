"""Dense exact square matrices over the rationals or F_p.

Matrices are immutable.  The arithmetic inner loops (multiplication, row
reduction, the division-free characteristic polynomial) live in the kernel
backend; everything here stays backend-agnostic.  The characteristic
polynomial uses the Berkowitz scheme, which needs no divisions and so works
unchanged in characteristic p; the minimal polynomial is the least common
multiple of the annihilators of the standard basis vectors, found from
their Krylov sequences.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional

from . import kernels
from .errors import FieldMismatch, ParseError, Singular, SizeMismatch
from .exactnum import GF, QQ, same_field
from .upoly import Polynomial, poly_lcm


class Matrix:
    """Immutable n-by-n matrix with exact entries."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field, rows: Iterable[Iterable]):
        rows = [[field.coerce(x) for x in row] for row in rows]
        n = len(rows)
        if n == 0:
            raise ValueError("empty matrix")
        for row in rows:
            if len(row) != n:
                raise SizeMismatch(f"expected square matrix, got row of len {len(row)}")
        self.field = field
        self.n = n
        self.rows = tuple(tuple(row) for row in rows)

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, field, n: int) -> "Matrix":
        z = field.zero
        return cls(field, [[z] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, field, entries) -> "Matrix":
        entries = [field.coerce(e) for e in entries]
        n = len(entries)
        z = field.zero
        return cls(
            field, [[entries[i] if i == j else z for j in range(n)] for i in range(n)]
        )

    @classmethod
    def from_rows(cls, field, rows) -> "Matrix":
        return cls(field, rows)

    @classmethod
    def companion(cls, poly: Polynomial) -> "Matrix":
        """Companion matrix: subdiagonal ones, last column -a_i."""
        if not poly.is_monic or poly.degree < 1:
            raise ValueError("companion matrix needs a monic polynomial of degree >= 1")
        f = poly.field
        d = poly.degree
        rows = [[f.zero] * d for _ in range(d)]
        for i in range(1, d):
            rows[i][i - 1] = f.one
        for i in range(d):
            rows[i][d - 1] = f.neg(poly.coeff(i))
        return cls(f, rows)

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def row_lists(self) -> list[list]:
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def _check(self, other: "Matrix"):
        same_field(self.field, other.field)
        if self.n != other.n:
            raise SizeMismatch(f"size mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        f = self.field
        return Matrix(
            f,
            [
                [f.add(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        f = self.field
        return Matrix(
            f,
            [
                [f.sub(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __neg__(self) -> "Matrix":
        f = self.field
        return Matrix(f, [[f.neg(a) for a in row] for row in self.rows])

    def __mul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.field.is_fp:
            rows = kernels.fp_mat_mul(self.row_lists(), other.row_lists(), self.field.p)
        else:
            rows = kernels.qq_mat_mul(self.row_lists(), other.row_lists())
        return Matrix(self.field, rows)

    def scale(self, c) -> "Matrix":
        f = self.field
        c = f.coerce(c)
        return Matrix(f, [[f.mul(c, a) for a in row] for row in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows)))

    def matvec(self, v):
        f = self.field
        out = []
        for row in self.rows:
            s = f.zero
            for a, x in zip(row, v):
                s = f.add(s, f.mul(a, x))
            out.append(s)
        return out

    def is_zero_matrix(self) -> bool:
        z = self.field.zero
        return all(a == z for row in self.rows for a in row)

    def to_json_dict(self) -> dict:
        d = {"field": self.field.name}
        if self.field.is_fp:
            d["p"] = self.field.p
        d["rows"] = [[self.field.format(a) for a in row] for row in self.rows]
        return d

    @classmethod
    def from_json_dict(cls, data) -> "Matrix":
        if not isinstance(data, dict):
            raise ParseError("matrix JSON must be an object")
        kind = data.get("field")
        if kind == "rational":
            field = QQ
        elif kind == "fp":
            p = data.get("p")
            if not isinstance(p, int):
                raise ParseError("fp matrix JSON needs an integer 'p'")
            field = GF(p)
        else:
            raise ParseError(f"unknown field tag {kind!r}")
        rows = data.get("rows")
        if not isinstance(rows, list) or not rows:
            raise ParseError("matrix JSON needs a non-empty 'rows' list")
        n = len(rows)
        parsed = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != n:
                raise ParseError(f"row {i}: expected {n} entries")
            out = []
            for j, s in enumerate(row):
                if not isinstance(s, str):
                    raise ParseError(f"entry ({i},{j}) must be a string")
                try:
                    out.append(field.parse(s))
                except ParseError as exc:
                    raise ParseError(f"entry ({i},{j}): {exc}") from None
            parsed.append(out)
        return cls(field, parsed)

    def __repr__(self):
        body = "; ".join(
            " ".join(self.field.format(a) for a in row) for row in self.rows
        )
        return f"Matrix({self.field!r}, [{body}])"


def mat_arith(a: Matrix, b: Matrix, op: str) -> Matrix:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def _rref(field, rows):
    if field.is_fp:
        return kernels.fp_rref(rows, field.p)
    return kernels.qq_rref(rows)


def rref(rows, field):
    """Reduced row echelon form of a rectangular row list."""
    return _rref(field, rows)


def nullspace(a: Matrix) -> list[tuple]:
    """Exact basis of the right kernel (empty iff invertible)."""
    f = a.field
    reduced, pivots = _rref(f, a.row_lists())
    pivot_set = set(pivots)
    basis = []
    for free in range(a.n):
        if free in pivot_set:
            continue
        v = [f.zero] * a.n
        v[free] = f.one
        for r, c in enumerate(pivots):
            v[c] = f.neg(reduced[r][free])
        basis.append(tuple(v))
    return basis


def mat_inverse(a: Matrix) -> Matrix:
    f = a.field
    n = a.n
    ident = Matrix.identity(f, n)
    aug = [list(ra) + list(ri) for ra, ri in zip(a.rows, ident.rows)]
    reduced, pivots = _rref(f, aug)
    if pivots != list(range(n)):
        raise Singular("matrix is not invertible")
    return Matrix(f, [row[n:] for row in reduced])


def solve_columns(a_cols: list, b_cols: list, field) -> Optional[list[list]]:
    """Solve A X = B where A, B are given by columns; None if inconsistent.

    A need not be square; when the system is underdetermined the free
    variables are set to zero.  Column count of the result matches B.
    """
    if not a_cols:
        return None
    n = len(a_cols[0])
    k = len(a_cols)
    aug = [
        [a_cols[j][i] for j in range(k)] + [col[i] for col in b_cols]
        for i in range(n)
    ]
    reduced, pivots = _rref(field, aug)
    if any(c >= k for c in pivots):
        return None
    out = []
    for t in range(len(b_cols)):
        x = [field.zero] * k
        for r, c in enumerate(pivots):
            x[c] = reduced[r][k + t]
        out.append(x)
    return out


def charpoly(a: Matrix) -> Polynomial:
    """Monic characteristic polynomial (division-free Berkowitz)."""
    if a.field.is_fp:
        coeffs = kernels.fp_berkowitz(a.row_lists(), a.field.p)
    else:
        coeffs = kernels.qq_berkowitz(a.row_lists())
    return Polynomial(a.field, coeffs)


def vector_annihilator(a: Matrix, v) -> Polynomial:
    """Least-degree monic g with g(A) v = 0, from the Krylov sequence of v."""
    f = a.field
    v = [f.coerce(x) for x in v]
    krylov = [tuple(v)]
    while True:
        w = a.matvec(krylov[-1])
        sol = solve_columns(krylov, [w], f)
        if sol is not None:
            x = sol[0]
            k = len(krylov)
            coeffs = [f.neg(c) for c in x] + [f.one]
            return Polynomial(f, coeffs)
        krylov.append(tuple(w))


def minpoly(a: Matrix) -> Polynomial:
    """Monic minimal polynomial: lcm of standard-basis annihilators."""
    f = a.field
    result = Polynomial.one(f)
    for i in range(a.n):
        e = [f.zero] * a.n
        e[i] = f.one
        result = poly_lcm(result, vector_annihilator(a, e))
        if result.degree == a.n:
            break
    return result


def apply_poly(f: Polynomial, a: Matrix) -> Matrix:
    """Evaluate a polynomial at a matrix by Horner's rule."""
    same_field(f.field, a.field)
    result = Matrix.zero(a.field, a.n)
    ident = Matrix.identity(a.field, a.n)
    for c in reversed(f.coeffs):
        result = result * a + ident.scale(c)
    return result


def is_x_shape(a: Matrix) -> bool:
    """True iff entries vanish off the diagonal and anti-diagonal."""
    n = a.n
    z = a.field.zero
    for i in range(n):
        for j in range(n):
            if j != i and j != n - 1 - i and a.rows[i][j] != z:
                return False
    return True


def inf_norm(a: Matrix) -> Fraction:
    """Largest absolute value of an entry (rational matrices only)."""
    if a.field.is_fp:
        raise FieldMismatch("inf_norm is defined for rational matrices")
    return max(abs(x) for row in a.rows for x in row)


def conjugate(p: Matrix, b: Matrix) -> Matrix:
    """P B P^{-1}."""
    p._check(b)
    return p * b * mat_inverse(p)
