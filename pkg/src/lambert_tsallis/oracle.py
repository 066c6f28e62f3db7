"""Brute-force root oracles used to cross-check the W_q pipeline.

Nothing here imports the W_q evaluator or the trinomial solver; the checks
are only meaningful while that stays true.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .errors import NoConvergence

__all__ = [
    "Bracket",
    "bisect",
    "scan_real_roots",
    "poly_roots_all",
    "rational_reduction",
    "trinomial_positive_roots",
]

GRID_N = 10_000
XTOL = 1e-13


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"bracket needs lo < hi, got [{self.lo}, {self.hi}]")
        if self.f_lo * self.f_hi > 0:
            raise ValueError("bracket endpoints must not share a sign")


def bisect(f: Callable[[float], float], br: Bracket, xtol: float = XTOL, max_iter: int = 400) -> float:
    """Plain bisection until ``hi - lo <= xtol * max(1, |x|)``."""
    lo, hi, flo = br.lo, br.hi, br.f_lo
    if flo == 0.0:
        return lo
    if br.f_hi == 0.0:
        return hi
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= xtol * max(1.0, abs(mid)) or mid in (lo, hi):
            return mid
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _eval_grid(f, xs: np.ndarray) -> np.ndarray:
    try:
        with np.errstate(all="ignore"):
            ys = np.asarray(f(xs), dtype=float)
        if ys.shape == xs.shape:
            return ys
    except (TypeError, ValueError):
        pass
    return np.array([float(f(float(x))) for x in xs])


def _scan_once(f, lo: float, hi: float, n: int, xtol: float) -> list[float]:
    xs = np.linspace(lo, hi, int(n) + 1)
    ys = _eval_grid(f, xs)
    roots = []
    finite = np.isfinite(ys)
    for i in range(len(xs) - 1):
        if not (finite[i] and finite[i + 1]):
            continue
        y0, y1 = ys[i], ys[i + 1]
        if y0 == 0.0:
            roots.append(float(xs[i]))
        elif y0 * y1 < 0.0:
            br = Bracket(float(xs[i]), float(xs[i + 1]), float(y0), float(y1))
            roots.append(bisect(lambda x: float(f(x)), br, xtol))
    if finite[-1] and ys[-1] == 0.0:
        roots.append(float(xs[-1]))
    return roots


def scan_real_roots(f: Callable, lo: float, hi: float, grid_n: int = GRID_N, *,
                    adaptive: bool = True, xtol: float = XTOL) -> list[float]:
    """Sign-change scan of ``f`` on ``[lo, hi]`` followed by bisection.

    The grid is doubled until the number of roots found is the same for two
    consecutive refinements. Roots closer together than the final grid
    spacing, and roots of even multiplicity, can still be missed.

    >>> [round(r, 10) for r in scan_real_roots(lambda x: x * x - 5 * x + 6, 0, 10, 1000)]
    [2.0, 3.0]
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if grid_n < 2:
        raise ValueError("grid_n must be at least 2")
    n = int(grid_n)
    roots = _scan_once(f, lo, hi, n, xtol)
    if not adaptive:
        return roots
    stable = 0
    for _ in range(8):
        n *= 2
        finer = _scan_once(f, lo, hi, n, xtol)
        stable = stable + 1 if len(finer) == len(roots) else 0
        roots = finer
        if stable >= 2:
            break
    return roots


def poly_roots_all(coeffs: Sequence[complex], *, max_iter: int = 500, tol: float = 1e-10) -> np.ndarray:
    """All complex roots by Durand-Kerner (Weierstrass) simultaneous iteration.

    ``coeffs`` are ordered highest degree first, as in ``numpy.polyval``.
    Starting points sit on a circle of radius given by the Fujiwara bound,
    rotated by a fixed irrational offset so no start is real.

    Raises
    ------
    NoConvergence
        If after ``max_iter`` sweeps some root still has residual above
        ``tol`` times ``sum |c_k| |x|**k``.
    """
    c = np.asarray(coeffs, dtype=complex)
    if c.ndim != 1 or c.size < 2:
        raise ValueError("need at least a degree-1 polynomial")
    if c[0] == 0:
        raise ValueError("leading coefficient must be nonzero")
    n = c.size - 1
    if n > 64:
        raise ValueError(f"degree {n} exceeds 64")
    mon = c / c[0]
    ratios = [abs(mon[k]) ** (1.0 / k) for k in range(1, n + 1)]
    ratios[-1] = abs(mon[-1] / 2.0) ** (1.0 / n)
    radius = 2.0 * max(ratios) or 1.0
    z = radius * np.exp(1j * (2.0 * np.pi * np.arange(n) / n + 0.4))

    absc = np.abs(c)

    def scale(x):
        return np.polyval(absc, np.abs(x))

    for _ in range(max_iter):
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        delta = np.polyval(mon, z) / diff.prod(axis=1)
        z = z - delta
        if np.all(np.abs(delta) <= 1e-15 * np.maximum(1.0, np.abs(z))):
            break
    res = np.abs(np.polyval(c, z))
    if np.any(res > tol * scale(z)):
        raise NoConvergence(f"Durand-Kerner did not converge (max residual {res.max():.3e})")
    return z


def rational_reduction(alpha: float, beta: float, max_den: int = 12):
    """Common denominator ``d`` with ``alpha = p/d`` and ``beta = s/d``.

    Returns ``(d, p, s)`` or ``None`` when an exponent is not a rational
    with denominator ``<= max_den`` (to 1e-12).
    """
    fa = Fraction(alpha).limit_denominator(max_den)
    fb = Fraction(beta).limit_denominator(max_den)
    if abs(float(fa) - alpha) > 1e-12 or abs(float(fb) - beta) > 1e-12:
        return None
    d = math.lcm(fa.denominator, fb.denominator)
    return d, int(fa * d), int(fb * d)


def trinomial_positive_roots(a: float, alpha: float, b: float, beta: float, c: float, *,
                             max_den: int = 12) -> list[float] | None:
    """Positive real roots of ``a x**alpha + b x**beta + c`` through the
    polynomial in ``u = x**(1/d)``; ``None`` if the exponents are not rational
    with a small denominator."""
    red = rational_reduction(alpha, beta, max_den)
    if red is None:
        return None
    d, p, s = red
    shift = min(p, s, 0)
    deg = max(p, s, 0) - shift
    if deg < 1 or deg > 64:
        return None
    coeffs = np.zeros(deg + 1, dtype=complex)
    for coef, e in ((a, p), (b, s), (c, 0)):
        coeffs[deg - (e - shift)] += coef
    nz = np.flatnonzero(coeffs)
    coeffs = coeffs[nz[0]:]
    if coeffs.size < 2:
        return []
    us = poly_roots_all(coeffs)
    out = []
    for u in us:
        if u.real > 0 and abs(u.imag) <= 1e-7 * max(1.0, abs(u)):
            out.append(float(u.real) ** d)
    return sorted(out)
