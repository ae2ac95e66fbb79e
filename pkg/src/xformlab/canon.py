"""Canonical decompositions and the X-formability classifier/constructor.

A matrix is X-formable exactly when its minimal polynomial is a product of
pairwise distinct monic irreducible quadratics and distinct linear factors
with exponent at most 2; equivalently, when it is similar to a
block-diagonal matrix with all blocks of size at most 2.  The constructor
here makes that equivalence effective: split the space along a coprime
factorization of the minimal polynomial, reduce each invariant piece to
1x1/2x2 blocks (Jordan chains for linear-power pieces, cyclic pairs for
irreducible-quadratic pieces), then interleave coordinates so the paired
block-diagonal form lands on the diagonal and anti-diagonal.

The Frobenius normal form is computed without any factorization: extract a
maximal-annihilator Krylov block, split off an exact invariant complement
(a Sylvester-type linear solve, always consistent by the cyclic
decomposition theorem), and recurse on the quotient action.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import (
    FieldMismatch,
    NotCoprime,
    NotMinpolyFactorization,
    ParseError,
    ReducibleQuadratic,
    WrongMinpoly,
)
from .exactnum import GF, QQ, same_field
from .matrixcore import (
    Matrix,
    apply_poly,
    charpoly,
    conjugate,
    is_x_shape,
    mat_inverse,
    minpoly,
    nullspace,
    rref,
    solve_columns,
    vector_annihilator,
)
from .upoly import (
    Polynomial,
    PropertyPReport,
    fp_factor,
    poly_gcd,
    quadratic_discriminant,
    quadratic_split,
    QuadraticSplitFailure,
    rational_roots,
    verifies_property_p,
    yun_squarefree,
)

# ---------------------------------------------------------------------------
# Block specifications


@dataclass(frozen=True)
class JordanBlock:
    lam: object
    size: int

    def __post_init__(self):
        if self.size not in (1, 2, 3):
            raise ValueError("Jordan block size must be 1, 2 or 3")

    def matrix(self, field) -> Matrix:
        lam = field.coerce(self.lam)
        rows = [[field.zero] * self.size for _ in range(self.size)]
        for i in range(self.size):
            rows[i][i] = lam
            if i + 1 < self.size:
                rows[i][i + 1] = field.one
        return Matrix(field, rows)


@dataclass(frozen=True)
class CompanionBlock:
    poly: Polynomial

    def matrix(self, field) -> Matrix:
        same_field(field, self.poly.field)
        return Matrix.companion(self.poly)


@dataclass(frozen=True)
class RawBlock:
    block: Matrix

    def matrix(self, field) -> Matrix:
        same_field(field, self.block.field)
        return self.block


Block = Union[JordanBlock, CompanionBlock, RawBlock]


def _block_size(b: Block) -> int:
    if isinstance(b, JordanBlock):
        return b.size
    if isinstance(b, CompanionBlock):
        return b.poly.degree
    return b.block.n


@dataclass(frozen=True)
class BlockSpec:
    """Ordered diagonal blocks plus an optional conjugator."""

    field: object
    blocks: tuple
    conjugator: Optional[Matrix] = None

    @property
    def total_size(self) -> int:
        return sum(_block_size(b) for b in self.blocks)

    def block_offsets(self) -> list[int]:
        offsets, pos = [], 0
        for b in self.blocks:
            offsets.append(pos)
            pos += _block_size(b)
        return offsets

    def diagonal_matrix(self) -> Matrix:
        n = self.total_size
        f = self.field
        rows = [[f.zero] * n for _ in range(n)]
        pos = 0
        for b in self.blocks:
            m = b.matrix(f)
            for i in range(m.n):
                for j in range(m.n):
                    rows[pos + i][pos + j] = m.rows[i][j]
            pos += m.n
        return Matrix(f, rows)

    def assemble(self) -> Matrix:
        d = self.diagonal_matrix()
        if self.conjugator is None:
            return d
        return conjugate(self.conjugator, d)

    def to_json_dict(self) -> dict:
        blocks = []
        for b in self.blocks:
            if isinstance(b, JordanBlock):
                blocks.append(
                    {
                        "kind": "jordan",
                        "lambda": self.field.format(self.field.coerce(b.lam)),
                        "size": b.size,
                    }
                )
            elif isinstance(b, CompanionBlock):
                blocks.append({"kind": "companion", "poly": b.poly.to_json_list()})
            else:
                blocks.append({"kind": "raw", "rows": b.block.to_json_dict()["rows"]})
        return {
            "field": self.field.name,
            **({"p": self.field.p} if self.field.is_fp else {}),
            "blocks": blocks,
            "conjugator": None
            if self.conjugator is None
            else self.conjugator.to_json_dict(),
        }

    @classmethod
    def from_json_dict(cls, data) -> "BlockSpec":
        if not isinstance(data, dict):
            raise ParseError("block spec JSON must be an object")
        kind = data.get("field", "rational")
        if kind == "rational":
            field = QQ
        elif kind == "fp":
            p = data.get("p")
            if not isinstance(p, int):
                raise ParseError("fp block spec needs an integer 'p'")
            field = GF(p)
        else:
            raise ParseError(f"unknown field tag {kind!r}")
        raw_blocks = data.get("blocks")
        if not isinstance(raw_blocks, list) or not raw_blocks:
            raise ParseError("block spec needs a non-empty 'blocks' list")
        blocks: list[Block] = []
        for i, rb in enumerate(raw_blocks):
            if not isinstance(rb, dict) or "kind" not in rb:
                raise ParseError(f"block {i}: expected an object with 'kind'")
            if rb["kind"] == "jordan":
                try:
                    lam = field.parse(rb["lambda"])
                    size = int(rb["size"])
                except (KeyError, TypeError, ValueError) as exc:
                    raise ParseError(f"block {i}: {exc}") from None
                blocks.append(JordanBlock(lam, size))
            elif rb["kind"] == "companion":
                poly = Polynomial.from_json_list(rb.get("poly"), field)
                if not poly.is_monic or poly.degree < 1:
                    raise ParseError(f"block {i}: companion polynomial must be monic")
                blocks.append(CompanionBlock(poly))
            elif rb["kind"] == "raw":
                m = Matrix.from_json_dict(
                    {
                        "field": field.name,
                        **({"p": field.p} if field.is_fp else {}),
                        "rows": rb.get("rows"),
                    }
                )
                blocks.append(RawBlock(m))
            else:
                raise ParseError(f"block {i}: unknown kind {rb['kind']!r}")
        conj = data.get("conjugator")
        conjugator = None if conj is None else Matrix.from_json_dict(conj)
        if conjugator is not None:
            same_field(conjugator.field, field)
        return cls(field, tuple(blocks), conjugator)


# ---------------------------------------------------------------------------
# Classifier


def classify_xformable(a: Matrix, view: str) -> PropertyPReport:
    """X-formability verdict of a matrix over the requested view."""
    return verifies_property_p(minpoly(a), view)


# ---------------------------------------------------------------------------
# Kernel-lemma splitting


def _columns_matrix(field, cols) -> Matrix:
    n = len(cols[0])
    return Matrix(field, [[cols[j][i] for j in range(len(cols))] for i in range(n)])


def kernel_lemma_split(a: Matrix, factors: list[Polynomial]) -> list[list[tuple]]:
    """Bases of Ker f_i(A) for a coprime factorization of the minimal
    polynomial; the space is the direct sum of these invariant subspaces."""
    f = a.field
    for poly in factors:
        same_field(f, poly.field)
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if poly_gcd(factors[i], factors[j]).degree != 0:
                raise NotCoprime(f"factors {i} and {j} share a common divisor")
    product = Polynomial.one(f)
    for poly in factors:
        product = product * poly
    if product.monic() != minpoly(a):
        raise NotMinpolyFactorization(
            "product of the factors is not the minimal polynomial"
        )
    bases = [nullspace(apply_poly(poly, a)) for poly in factors]
    if sum(len(b) for b in bases) != a.n:
        raise AssertionError("kernel dimensions do not sum to n, this is a bug")
    return bases


def restriction_matrix(a: Matrix, basis: list[tuple]) -> Matrix:
    """Matrix of the action of A on an invariant subspace, in the given basis."""
    f = a.field
    images = [a.matvec(v) for v in basis]
    sols = solve_columns(list(basis), images, f)
    if sols is None:
        raise ValueError("subspace is not invariant under the matrix")
    k = len(basis)
    return Matrix(f, [[sols[j][i] for j in range(k)] for i in range(k)])


# ---------------------------------------------------------------------------
# Small-block reductions on an invariant piece


def _std_basis(field, k, i):
    v = [field.zero] * k
    v[i] = field.one
    return tuple(v)


def _independent(field, chosen: list[tuple], v: tuple) -> bool:
    rows = [list(c) for c in chosen] + [list(v)]
    _, pivots = rref(rows, field)
    return len(pivots) == len(rows)


def jordan_chains_small(a: Matrix, lam, e: int) -> list[tuple[int, list[tuple]]]:
    """Split a space on which (A - lam)^e = 0 (e = 1 or 2, exact) into
    Jordan chains of length at most 2.

    Returns (block size, basis columns) pairs: 2-chains are (Nu, u) with
    N = A - lam*I, built by lifting a complement of Ker N; leftover kernel
    vectors give 1-blocks.
    """
    f = a.field
    lam = f.coerce(lam)
    if e not in (1, 2):
        raise WrongMinpoly("chain length must be 1 or 2")
    shifted = Polynomial(f, [f.neg(lam), f.one])
    if minpoly(a) != shifted**e:
        raise WrongMinpoly(f"minimal polynomial of the piece is not (X - {lam})^{e}")
    k = a.n
    if e == 1:
        return [(1, [_std_basis(f, k, i)]) for i in range(k)]
    nm = a - Matrix.identity(f, k).scale(lam)
    ker = nullspace(nm)
    lifts: list[tuple] = []
    r = k - len(ker)
    for i in range(k):
        if len(lifts) == r:
            break
        cand = _std_basis(f, k, i)
        if _independent(f, list(ker) + lifts, cand):
            lifts.append(cand)
    blocks = []
    images = [tuple(nm.matvec(u)) for u in lifts]
    for u, nu in zip(lifts, images):
        blocks.append((2, [nu, u]))
    for w in ker:
        if _independent(f, images, w):
            blocks.append((1, [w]))
            images.append(w)
    total = sum(size for size, _ in blocks)
    assert total == k, "chain construction lost dimensions, this is a bug"
    return blocks


def _is_rational_square(x: Fraction) -> bool:
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d


def is_irreducible_quadratic(q: Polynomial) -> bool:
    """No roots in the coefficient field (rational: discriminant is not a
    rational square; F_p: no evaluation vanishes)."""
    if q.degree != 2 or not q.is_monic:
        return False
    if q.field.is_fp:
        return all(q(a) != 0 for a in range(q.field.p))
    return not _is_rational_square(quadratic_discriminant(q))


def quad_cyclic_split(a: Matrix, q: Polynomial) -> list[list[tuple]]:
    """Split a space whose minimal polynomial is an irreducible quadratic q
    into cyclic planes (v, Av); in that basis the action is a direct sum of
    companion blocks of q.  Greedy choice, lowest standard index first."""
    f = same_field(a.field, q.field)
    if not is_irreducible_quadratic(q):
        raise ReducibleQuadratic(f"{q!r} is not an irreducible monic quadratic")
    if minpoly(a) != q:
        raise WrongMinpoly("minimal polynomial of the piece is not the quadratic")
    k = a.n
    pairs = []
    chosen: list[tuple] = []
    for i in range(k):
        if len(chosen) == k:
            break
        v = _std_basis(f, k, i)
        if not _independent(f, chosen, v):
            continue
        av = tuple(a.matvec(v))
        pairs.append([v, av])
        chosen.extend([v, av])
    rows = [list(c) for c in chosen]
    _, pivots = rref(rows, f)
    assert len(pivots) == k, "cyclic pairs failed to span, this is a bug"
    return pairs


# ---------------------------------------------------------------------------
# The interleaving permutation


def xshape_permutation(n: int) -> tuple[int, ...]:
    """1-based coordinate order sending paired block-diagonal form to
    X-shape: odd positions ascending, then even positions descending."""
    if n < 1:
        raise ValueError("n must be >= 1")
    odds = list(range(1, n + 1, 2))
    evens = list(range(n - (n % 2), 0, -2))
    return tuple(odds + evens)


def permutation_matrix(field, perm: tuple[int, ...]) -> Matrix:
    n = len(perm)
    rows = [[field.zero] * n for _ in range(n)]
    for j, s in enumerate(perm):
        rows[s - 1][j] = field.one
    return Matrix(field, rows)


# ---------------------------------------------------------------------------
# Frobenius normal form


@dataclass(frozen=True)
class FrobeniusForm:
    """Invariant factor chain R_1 | ... | R_t and the change of basis.

    ``transform`` holds the new basis as columns: conjugating the companion
    block diagonal by it reproduces the input, A = T . diag(C(R_i)) . T^-1.
    """

    invariant_factors: tuple
    transform: Matrix

    def block_diagonal(self) -> Matrix:
        f = self.transform.field
        n = self.transform.n
        rows = [[f.zero] * n for _ in range(n)]
        pos = 0
        for r in self.invariant_factors:
            c = Matrix.companion(r)
            for i in range(c.n):
                for j in range(c.n):
                    rows[pos + i][pos + j] = c.rows[i][j]
            pos += c.n
        return Matrix(f, rows)

    def to_json_dict(self) -> dict:
        return {
            "invariant_factors": [r.to_json_list() for r in self.invariant_factors],
            "transform": self.transform.to_json_dict(),
        }


def _lcm_split(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Coprime f1 | f, g1 | g with f1*g1 = lcm(f, g)."""
    h = poly_gcd(f, g)
    f1 = (f // h).monic()
    g1 = g.monic()
    d = poly_gcd(f1, g1)
    while d.degree > 0:
        g1 = (g1 // d).monic()
        f1 = (f1 * d).monic()
        d = poly_gcd(f1, g1)
    return f1, g1


def _maximal_vector(a: Matrix) -> tuple[tuple, Polynomial]:
    """A vector whose annihilator is the minimal polynomial, built by
    combining standard basis vectors through coprime lcm splittings."""
    f = a.field
    best = _std_basis(f, a.n, 0)
    best_ann = vector_annihilator(a, best)
    for i in range(1, a.n):
        if best_ann.degree == a.n:
            break
        e = _std_basis(f, a.n, i)
        ann = vector_annihilator(a, e)
        if (best_ann % ann).is_zero:
            continue
        f1, g1 = _lcm_split(best_ann, ann)
        u = apply_poly(best_ann // f1, a).matvec(best)
        w = apply_poly(ann // g1, a).matvec(e)
        best = tuple(f.add(x, y) for x, y in zip(u, w))
        best_ann = vector_annihilator(a, best)
        assert best_ann == (f1 * g1).monic(), "lcm combination failed, this is a bug"
    return best, best_ann


def _krylov_columns(a: Matrix, v: tuple, d: int) -> list[tuple]:
    cols = [tuple(v)]
    for _ in range(d - 1):
        cols.append(tuple(a.matvec(cols[-1])))
    return cols


def _solve_sylvester(c_rows, d_rows, m_rows, field):
    """Z with C Z - Z D = -M; free variables pinned to zero."""
    dd = len(c_rows)
    mm = len(d_rows)
    size = dd * mm
    aug = []
    for i in range(dd):
        for j in range(mm):
            row = [field.zero] * (size + 1)
            for k in range(dd):
                row[k * mm + j] = field.add(row[k * mm + j], c_rows[i][k])
            for k in range(mm):
                row[i * mm + k] = field.sub(row[i * mm + k], d_rows[k][j])
            row[size] = field.neg(m_rows[i][j])
            aug.append(row)
    reduced, pivots = rref(aug, field)
    if any(c >= size for c in pivots):
        raise AssertionError("invariant complement solve inconsistent, this is a bug")
    flat = [field.zero] * size
    for r, c in enumerate(pivots):
        flat[c] = reduced[r][size]
    return [[flat[i * mm + j] for j in range(mm)] for i in range(dd)]


def frobenius_form(a: Matrix) -> FrobeniusForm:
    """Frobenius normal form with an explicit exact transform.

    Extract a maximal Krylov block, complete to a basis, cancel the
    coupling against the quotient action with a Sylvester-type solve (this
    realizes an invariant complement), then recurse on the quotient.
    """
    f = a.field
    n = a.n
    v, pi = _maximal_vector(a)
    d = pi.degree
    kry = _krylov_columns(a, v, d)
    if d == n:
        t = _columns_matrix(f, kry)
        return FrobeniusForm((pi,), t)
    completion: list[tuple] = []
    for i in range(n):
        if len(kry) + len(completion) == n:
            break
        cand = _std_basis(f, n, i)
        if _independent(f, kry + completion, cand):
            completion.append(cand)
    t0 = _columns_matrix(f, kry + completion)
    a1 = mat_inverse(t0) * a * t0
    m = n - d
    c_rows = [[a1.rows[i][j] for j in range(d)] for i in range(d)]
    m_rows = [[a1.rows[i][d + j] for j in range(m)] for i in range(d)]
    d_rows = [[a1.rows[d + i][d + j] for j in range(m)] for i in range(m)]
    assert all(
        a1.rows[d + i][j] == f.zero for i in range(m) for j in range(d)
    ), "Krylov block is not invariant, this is a bug"
    z = _solve_sylvester(c_rows, d_rows, m_rows, f)
    # complement basis: b_j + sum_i z[i][j] * krylov_i
    comp_cols = []
    for j in range(m):
        col = list(completion[j])
        for i in range(d):
            if z[i][j] != f.zero:
                col = [f.add(x, f.mul(z[i][j], k)) for x, k in zip(col, kry[i])]
        comp_cols.append(tuple(col))
    quotient = Matrix(f, d_rows)
    sub = frobenius_form(quotient)
    # the chain ends with pi, so the complement columns (recombined by the
    # sub-transform) come first and the maximal Krylov columns last
    s = sub.transform
    final_cols = []
    for j in range(m):
        col = [f.zero] * n
        for i in range(m):
            if s.rows[i][j] != f.zero:
                col = [f.add(x, f.mul(s.rows[i][j], y)) for x, y in zip(col, comp_cols[i])]
        final_cols.append(tuple(col))
    final_cols.extend(kry)
    factors = tuple(sub.invariant_factors) + (pi,)
    for r1, r2 in zip(factors, factors[1:]):
        assert (r2 % r1).is_zero, "invariant factor chain broke, this is a bug"
    return FrobeniusForm(factors, _columns_matrix(f, final_cols))


# ---------------------------------------------------------------------------
# The constructor


@dataclass(frozen=True)
class XFormCertificate:
    """A = P X P^{-1} with X an X-shape matrix, both checks re-verified."""

    p: Matrix
    x: Matrix
    a_reconstructed: bool
    x_shape_ok: bool

    def to_json_dict(self) -> dict:
        return {
            "P": self.p.to_json_dict(),
            "X": self.x.to_json_dict(),
            "checks": {
                "reconstructed": self.a_reconstructed,
                "x_shape": self.x_shape_ok,
            },
        }


@dataclass(frozen=True)
class NotXFormable:
    report: PropertyPReport


@dataclass(frozen=True)
class NotConstructibleExactly:
    """The pattern holds over the view, but the block data needed for an
    exact similarity is not available in the entry field."""

    report: PropertyPReport
    detail: str


DecomposeResult = Union[XFormCertificate, NotXFormable, NotConstructibleExactly]


def _construction_pieces(pi: Polynomial, report: PropertyPReport):
    """Coprime minimal-polynomial pieces with their block recipes, or a
    NotConstructibleExactly verdict when the entry field cannot express the
    required factors."""
    field = pi.field
    pieces = []
    if field.is_fp:
        for q, e in fp_factor(pi):
            if q.degree == 1:
                lam = field.neg(q.coeff(0))
                pieces.append(("jordan", lam, e, q**e))
            else:
                pieces.append(("quad", q, 1, q))
    else:
        for g, e in yun_squarefree(pi).parts:
            h = g
            for lam, _ in rational_roots(g):
                pieces.append(("jordan", lam, e, Polynomial(QQ, [-lam, 1]) ** e))
                h = h // Polynomial(QQ, [-lam, 1])
            if h.degree > 0:
                if e >= 2:
                    return NotConstructibleExactly(
                        report,
                        "doubled factor "
                        + repr(h)
                        + " has no rational roots; the required eigenvalue data "
                        "is irrational, so no exact similarity exists over the "
                        "entries",
                    )
                split = quadratic_split(h)
                if isinstance(split, QuadraticSplitFailure):
                    return NotConstructibleExactly(
                        report,
                        f"factor {h!r} does not split into rational quadratics "
                        f"({split.reason}); no exact similarity exists over the "
                        "entries",
                    )
                for q in split:
                    pieces.append(("quad", q, 1, q))
    pieces.sort(
        key=lambda piece: (0, piece[1], ())
        if piece[0] == "jordan"
        else (1, 0, piece[1].coeffs)
    )
    return pieces


def xform_decompose(a: Matrix, view: str) -> DecomposeResult:
    """Classify, and on success construct a verified X-form certificate.

    Deterministic by construction: pieces are processed linear factors
    first (ascending), then quadratics (ascending coefficients); greedy
    choices always take the lowest standard basis index.
    """
    pi = minpoly(a)
    report = verifies_property_p(pi, view)
    if not report.holds:
        return NotXFormable(report)
    f = a.field
    pieces = _construction_pieces(pi, report)
    if isinstance(pieces, NotConstructibleExactly):
        return pieces
    factor_polys = [piece[3] for piece in pieces]
    bases = kernel_lemma_split(a, factor_polys)
    two_blocks = []  # (2x2 block, [global col, global col])
    one_blocks = []  # (lambda, [global col])
    for piece, basis in zip(pieces, bases):
        restr = restriction_matrix(a, basis)

        def to_global(local, basis_cols=basis):
            return tuple(_dot_basis(f, basis_cols, local, i) for i in range(a.n))

        if piece[0] == "jordan":
            _, lam, e, _poly = piece
            for size, local_cols in jordan_chains_small(restr, lam, e):
                global_cols = [to_global(c) for c in local_cols]
                if size == 2:
                    two_blocks.append((JordanBlock(lam, 2).matrix(f), global_cols))
                else:
                    one_blocks.append((lam, global_cols))
        else:
            _, q, _e, _poly = piece
            cq = Matrix.companion(q)
            for pair in quad_cyclic_split(restr, q):
                two_blocks.append((cq, [to_global(c) for c in pair]))
    # 2x2 blocks first so every pair occupies an (odd, even) coordinate slot
    cols = []
    n = a.n
    rows = [[f.zero] * n for _ in range(n)]
    pos = 0
    for block, pair in two_blocks:
        cols.extend(pair)
        for i in range(2):
            for j in range(2):
                rows[pos + i][pos + j] = block.rows[i][j]
        pos += 2
    for lam, single in one_blocks:
        cols.extend(single)
        rows[pos][pos] = f.coerce(lam)
        pos += 1
    basis_matrix = _columns_matrix(f, cols)
    block_diag = Matrix(f, rows)
    assert a * basis_matrix == basis_matrix * block_diag, (
        "block-diagonal reduction failed to verify, this is a bug"
    )
    perm = permutation_matrix(f, xshape_permutation(n))
    p_cert = basis_matrix * perm
    p_inv = mat_inverse(p_cert)
    x = p_inv * a * p_cert
    reconstructed = p_cert * x * p_inv == a
    return XFormCertificate(p_cert, x, reconstructed, is_x_shape(x))


def _dot_basis(field, basis_cols, local, i):
    s = field.zero
    for coef, vec in zip(local, basis_cols):
        s = field.add(s, field.mul(coef, vec[i]))
    return s
