"""Numeric root candidates via Aberth-Ehrlich simultaneous iteration.

Nothing here is trusted: every candidate produced by this module must be
verified by exact arithmetic in the caller.  Roots come back as exact
``(re, im)`` Fraction pairs so reconstruction never round-trips through
floats again.  The double-precision pass is the default; a high-precision
pass (mpmath) backs it up when exact verification of candidates fails.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

MAX_ITER = 200
TOL = 1e-12


def _horner(coeffs, z):
    v = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        v = v * z + c
    return v


def _aberth(coeffs, make_point, tol, max_iter):
    """Generic Aberth iteration; ``coeffs`` ascending, leading != 0."""
    n = len(coeffs) - 1
    deriv = [coeffs[k] * k for k in range(1, n + 1)]
    lead = coeffs[-1]
    radius = 1.0 + max(abs(complex(c / lead)) for c in coeffs[:-1])
    zs = []
    for attempt in range(4):
        zs = [
            make_point(
                radius
                * (0.8 + 0.1 * attempt)
                * cmath.exp(2j * cmath.pi * (k + 0.35 + 0.17 * attempt) / n)
            )
            for k in range(n)
        ]
        for _ in range(max_iter):
            moved = 0.0
            for i in range(n):
                z = zs[i]
                pv = _horner(coeffs, z)
                dv = _horner(deriv, z)
                if dv == 0:
                    zs[i] = z + make_point(tol + abs(z) * 1e-6)
                    moved = 1.0
                    continue
                w = pv / dv
                s = sum(1 / (z - zs[j]) for j in range(n) if j != i and zs[j] != z)
                denom = 1 - w * s
                if denom == 0:
                    zs[i] = z + make_point(tol + abs(z) * 1e-6)
                    moved = 1.0
                    continue
                corr = w / denom
                zs[i] = z - corr
                moved = max(moved, float(abs(corr)) / max(1.0, float(abs(z))))
            if moved < tol:
                return zs
        # stagnation: restart with perturbed initial points
    return zs


def root_candidates(coeffs: list[Fraction]) -> list[tuple[Fraction, Fraction]]:
    """Double-precision root approximations as exact (re, im) pairs."""
    if len(coeffs) < 2:
        return []
    scale = max(abs(c) for c in coeffs)
    fl = [float(c / scale) for c in coeffs]
    zs = _aberth(fl, complex, TOL, MAX_ITER)
    return [(Fraction(z.real), Fraction(z.imag)) for z in zs]


def root_candidates_hp(
    coeffs: list[Fraction], digits: int = 50
) -> list[tuple[Fraction, Fraction]]:
    """High-precision retry of the same iteration."""
    if len(coeffs) < 2:
        return []
    import mpmath
    from mpmath.libmp import to_rational

    def exact(x) -> Fraction:
        n, d = to_rational(x._mpf_)
        return Fraction(int(n), int(d))

    with mpmath.workdps(digits):
        cs = [mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator) for c in coeffs]
        zs = _aberth(cs, mpmath.mpc, 10.0 ** (-digits + 8), 4 * MAX_ITER)
        return [(exact(z.real), exact(z.imag)) for z in zs]
