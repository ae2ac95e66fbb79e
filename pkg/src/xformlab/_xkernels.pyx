# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same contracts as ``_kernels_py``.

Rational work runs on raw (numerator, denominator) integer pairs with
explicit gcd normalization, skipping Fraction's per-operation dispatch;
F_p work runs on C integer buffers (p <= 97, so no overflow anywhere).
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

from fractions import Fraction
from math import gcd

BACKEND = "cython"

cdef object _FR = Fraction


cdef inline object _mk(object num, object den):
    # num/den already reduced, den > 0
    f = _FR.__new__(_FR)
    f._numerator = num
    f._denominator = den
    return f


cdef inline tuple _qadd(object an, object ad, object bn, object bd):
    cdef object n = an * bd + bn * ad
    cdef object d = ad * bd
    g = gcd(n, d)
    if g != 1:
        n //= g
        d //= g
    return (n, d)


cdef inline tuple _qsub(object an, object ad, object bn, object bd):
    cdef object n = an * bd - bn * ad
    cdef object d = ad * bd
    g = gcd(n, d)
    if g != 1:
        n //= g
        d //= g
    return (n, d)


cdef inline tuple _qmul(object an, object ad, object bn, object bd):
    cdef object n = an * bn
    cdef object d = ad * bd
    g = gcd(n, d)
    if g != 1:
        n //= g
        d //= g
    return (n, d)


cdef inline tuple _qdiv(object an, object ad, object bn, object bd):
    cdef object n = an * bd
    cdef object d = ad * bn
    if d < 0:
        n = -n
        d = -d
    g = gcd(n, d)
    if g != 1:
        n //= g
        d //= g
    return (n, d)


cdef void _flatten(list rows, Py_ssize_t nc, list N, list D) except *:
    cdef Py_ssize_t i, j
    cdef list row
    for i in range(len(rows)):
        row = rows[i]
        for j in range(nc):
            x = row[j]
            N.append(x._numerator)
            D.append(x._denominator)


def qq_mat_mul(list a, list b):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t k = len(b)
    cdef Py_ssize_t m = len(b[0]) if k else 0
    cdef list AN = [], AD = [], BN = [], BD = []
    _flatten(a, k, AN, AD)
    _flatten(b, m, BN, BD)
    cdef list out = []
    cdef Py_ssize_t i, j, t
    cdef object sn, sd, tn, td, g
    for i in range(n):
        row = []
        for j in range(m):
            sn = 0
            sd = 1
            for t in range(k):
                tn = AN[i * k + t] * BN[t * m + j]
                if tn == 0:
                    continue
                td = AD[i * k + t] * BD[t * m + j]
                sn = sn * td + tn * sd
                sd = sd * td
                g = gcd(sn, sd)
                if g != 1:
                    sn //= g
                    sd //= g
            row.append(_mk(sn, sd))
        out.append(row)
    return out


def qq_rref(list rows):
    cdef Py_ssize_t nr = len(rows)
    cdef Py_ssize_t nc = len(rows[0]) if nr else 0
    cdef list N = [], D = []
    _flatten(rows, nc, N, D)
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, j, pr, base, rbase
    cdef object pn, pd, fn, fd, t
    for c in range(nc):
        if r == nr:
            break
        pr = -1
        for i in range(r, nr):
            if N[i * nc + c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(nc):
                t = N[r * nc + j]
                N[r * nc + j] = N[pr * nc + j]
                N[pr * nc + j] = t
                t = D[r * nc + j]
                D[r * nc + j] = D[pr * nc + j]
                D[pr * nc + j] = t
        rbase = r * nc
        pn = N[rbase + c]
        pd = D[rbase + c]
        if pn != pd:
            for j in range(c, nc):
                N[rbase + j], D[rbase + j] = _qdiv(
                    N[rbase + j], D[rbase + j], pn, pd
                )
        for i in range(nr):
            if i == r:
                continue
            base = i * nc
            fn = N[base + c]
            if fn == 0:
                continue
            fd = D[base + c]
            for j in range(c, nc):
                if N[rbase + j] == 0:
                    continue
                tn, td = _qmul(fn, fd, N[rbase + j], D[rbase + j])
                N[base + j], D[base + j] = _qsub(N[base + j], D[base + j], tn, td)
        pivots.append(c)
        r += 1
    cdef list out = []
    for i in range(nr):
        out.append([_mk(N[i * nc + j], D[i * nc + j]) for j in range(nc)])
    return out, pivots


def qq_berkowitz(list a):
    cdef Py_ssize_t n = len(a)
    cdef list AN = [], AD = []
    _flatten(a, n, AN, AD)
    # descending coefficient lists of (num, den) pairs
    cdef list PN = [1, -AN[0]], PD = [1, AD[0]]
    cdef list TN, TD, UN, UD, VN, VD, NN, ND
    cdef Py_ssize_t k, i, j, x
    cdef object sn, sd, tn, td, g
    for k in range(1, n):
        TN = [1, -AN[k * n + k]]
        TD = [1, AD[k * n + k]]
        UN = [AN[i * n + k] for i in range(k)]
        UD = [AD[i * n + k] for i in range(k)]
        for j in range(k):
            sn = 0
            sd = 1
            for i in range(k):
                tn, td = _qmul(AN[k * n + i], AD[k * n + i], UN[i], UD[i])
                sn, sd = _qadd(sn, sd, tn, td)
            TN.append(-sn)
            TD.append(sd)
            if j < k - 1:
                VN = []
                VD = []
                for i in range(k):
                    sn = 0
                    sd = 1
                    for x in range(k):
                        tn, td = _qmul(AN[i * n + x], AD[i * n + x], UN[x], UD[x])
                        sn, sd = _qadd(sn, sd, tn, td)
                    VN.append(sn)
                    VD.append(sd)
                UN = VN
                UD = VD
        NN = []
        ND = []
        for i in range(k + 2):
            sn = 0
            sd = 1
            for j in range(len(PN)):
                x = i - j
                if 0 <= x < len(TN):
                    tn, td = _qmul(TN[x], TD[x], PN[j], PD[j])
                    sn, sd = _qadd(sn, sd, tn, td)
            NN.append(sn)
            ND.append(sd)
        PN = NN
        PD = ND
    cdef list out = []
    for i in range(len(PN) - 1, -1, -1):
        out.append(_mk(PN[i], PD[i]))
    return out


# ---------------------------------------------------------------------------
# F_p kernels on C buffers


cdef inline long long _inv_mod(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    return t % p if t >= 0 else (t % p + p) % p


cdef long long* _fp_flatten(list rows, Py_ssize_t nr, Py_ssize_t nc, long long p) except NULL:
    cdef long long* buf = <long long*> PyMem_Malloc(nr * nc * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef list row
    for i in range(nr):
        row = rows[i]
        for j in range(nc):
            buf[i * nc + j] = (<long long> row[j]) % p
    return buf


def fp_mat_mul(list a, list b, long long p):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t k = len(b)
    cdef Py_ssize_t m = len(b[0]) if k else 0
    cdef long long* A = _fp_flatten(a, n, k, p)
    cdef long long* B = _fp_flatten(b, k, m, p)
    cdef list out = []
    cdef Py_ssize_t i, j, t
    cdef long long s
    try:
        for i in range(n):
            row = []
            for j in range(m):
                s = 0
                for t in range(k):
                    s += A[i * k + t] * B[t * m + j]
                row.append(s % p)
            out.append(row)
    finally:
        PyMem_Free(A)
        PyMem_Free(B)
    return out


def fp_rref(list rows, long long p):
    cdef Py_ssize_t nr = len(rows)
    cdef Py_ssize_t nc = len(rows[0]) if nr else 0
    cdef long long* M = _fp_flatten(rows, nr, nc, p)
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef long long inv, f, tmp
    try:
        for c in range(nc):
            if r == nr:
                break
            pr = -1
            for i in range(r, nr):
                if M[i * nc + c] != 0:
                    pr = i
                    break
            if pr < 0:
                continue
            if pr != r:
                for j in range(nc):
                    tmp = M[r * nc + j]
                    M[r * nc + j] = M[pr * nc + j]
                    M[pr * nc + j] = tmp
            inv = _inv_mod(M[r * nc + c], p)
            if inv != 1:
                for j in range(c, nc):
                    M[r * nc + j] = M[r * nc + j] * inv % p
            for i in range(nr):
                if i == r:
                    continue
                f = M[i * nc + c]
                if f == 0:
                    continue
                for j in range(c, nc):
                    M[i * nc + j] = (M[i * nc + j] - f * M[r * nc + j]) % p
                    if M[i * nc + j] < 0:
                        M[i * nc + j] += p
            pivots.append(c)
            r += 1
        out = [[M[i * nc + j] for j in range(nc)] for i in range(nr)]
    finally:
        PyMem_Free(M)
    return out, pivots


def fp_berkowitz(list a, long long p):
    cdef Py_ssize_t n = len(a)
    cdef long long* A = _fp_flatten(a, n, n, p)
    cdef long long* poly = <long long*> PyMem_Malloc((n + 2) * sizeof(long long))
    cdef long long* newp = <long long*> PyMem_Malloc((n + 2) * sizeof(long long))
    cdef long long* t = <long long*> PyMem_Malloc((n + 2) * sizeof(long long))
    cdef long long* u = <long long*> PyMem_Malloc(n * sizeof(long long))
    cdef long long* u2 = <long long*> PyMem_Malloc(n * sizeof(long long))
    if poly == NULL or newp == NULL or t == NULL or u == NULL or u2 == NULL:
        raise MemoryError()
    cdef Py_ssize_t plen = 2, k, i, j, x
    cdef long long s
    cdef long long* swp
    try:
        poly[0] = 1
        poly[1] = (p - A[0]) % p
        for k in range(1, n):
            t[0] = 1
            t[1] = (p - A[k * n + k]) % p
            for i in range(k):
                u[i] = A[i * n + k]
            for j in range(k):
                s = 0
                for i in range(k):
                    s += A[k * n + i] * u[i]
                t[j + 2] = (p - s % p) % p
                if j < k - 1:
                    for i in range(k):
                        s = 0
                        for x in range(k):
                            s += A[i * n + x] * u[x]
                        u2[i] = s % p
                    swp = u
                    u = u2
                    u2 = swp
            for i in range(k + 2):
                s = 0
                for j in range(plen):
                    x = i - j
                    if 0 <= x <= k + 1:
                        s += t[x] * poly[j]
                newp[i] = s % p
            swp = poly
            poly = newp
            newp = swp
            plen = k + 2
        out = [poly[plen - 1 - i] for i in range(plen)]
    finally:
        PyMem_Free(A)
        PyMem_Free(poly)
        PyMem_Free(newp)
        PyMem_Free(t)
        PyMem_Free(u)
        PyMem_Free(u2)
    return out
