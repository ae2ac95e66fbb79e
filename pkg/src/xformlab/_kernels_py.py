"""Pure-Python reference kernels for the dense exact linear algebra loops.

Rational matrices are lists of row lists of ``Fraction``; F_p matrices are
lists of row lists of ints in ``[0, p)``.  The compiled backend in
``_xkernels`` implements the same six functions with the same contracts.
"""

from fractions import Fraction

BACKEND = "python"

_ZERO = Fraction(0)
_ONE = Fraction(1)


def qq_mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if k else 0
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(m):
            s = _ZERO
            for t in range(k):
                s += ai[t] * b[t][j]
            row.append(s)
        out.append(row)
    return out


def qq_rref(rows):
    """Reduced row echelon form.  Returns (new rows, pivot column list)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                mr = m[r]
                m[i] = [x - f * y for x, y in zip(m[i], mr)]
        pivots.append(c)
        r += 1
    return m, pivots


def qq_berkowitz(a):
    """Characteristic polynomial coefficients, ascending degree (monic)."""
    n = len(a)
    poly = [_ONE, -a[0][0]]
    for k in range(1, n):
        d = a[k][k]
        row = a[k][:k]
        col = [a[i][k] for i in range(k)]
        sub = [a[i][:k] for i in range(k)]
        t = [_ONE, -d]
        u = col
        for j in range(k):
            s = _ZERO
            for i in range(k):
                s += row[i] * u[i]
            t.append(-s)
            if j < k - 1:
                u = [sum((sub[i][x] * u[x] for x in range(k)), _ZERO) for i in range(k)]
        new = []
        for i in range(k + 2):
            s = _ZERO
            for j in range(len(poly)):
                ti = i - j
                if 0 <= ti < len(t):
                    s += t[ti] * poly[j]
            new.append(s)
        poly = new
    poly.reverse()
    return poly


def fp_mat_mul(a, b, p):
    n, k = len(a), len(b)
    m = len(b[0]) if k else 0
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(m):
            s = 0
            for t in range(k):
                s += ai[t] * b[t][j]
            row.append(s % p)
        out.append(row)
    return out


def fp_rref(rows, p):
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if m[i][c] % p != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] % p != 0:
                f = m[i][c]
                mr = m[r]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], mr)]
        pivots.append(c)
        r += 1
    return m, pivots


def fp_berkowitz(a, p):
    n = len(a)
    poly = [1, (-a[0][0]) % p]
    for k in range(1, n):
        d = a[k][k]
        row = a[k][:k]
        col = [a[i][k] for i in range(k)]
        sub = [a[i][:k] for i in range(k)]
        t = [1, (-d) % p]
        u = col
        for j in range(k):
            s = 0
            for i in range(k):
                s += row[i] * u[i]
            t.append((-s) % p)
            if j < k - 1:
                u = [sum(sub[i][x] * u[x] for x in range(k)) % p for i in range(k)]
        new = []
        for i in range(k + 2):
            s = 0
            for j in range(len(poly)):
                ti = i - j
                if 0 <= ti < len(t):
                    s += t[ti] * poly[j]
            new.append(s % p)
        poly = new
    poly.reverse()
    return poly
