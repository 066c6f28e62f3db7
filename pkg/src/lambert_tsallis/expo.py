"""Exponential equations reduced to fractional trinomials.

Fermat-type ``A**x + B**x = C**x``: with ``y = e**x`` it reads
``y**ln(A/C) + y**ln(B/C) - 1 = 0``.

Fibonacci-type ``phi**x - phibar**x = y sqrt(5)`` (``phibar = 1/phi``): with
``s = e**x`` it reads ``s**ln(phi) - s**ln(phibar) - y sqrt(5) = 0``.

Both solvers take ``log`` of the trinomial root straight from the W_q
formula (``Log(m)/(beta-alpha)``), so ``e**x`` is never formed and large
exponents cannot overflow. Roots are verified in ``x``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext

from .errors import DegenerateABError, NoSolution, RangeError
from .trinomial import (
    IMAG_TOL,
    Formula,
    RootRecord,
    RootSet,
    Trinomial,
    dedupe,
    formula_candidates,
)

__all__ = [
    "PHI",
    "PHIBAR",
    "FERMAT_TOL",
    "FIBONACCI_TOL",
    "Y_ZERO_NOTE",
    "FermatProblem",
    "FibonacciQuery",
    "SweepRow",
    "solve_fermat",
    "solve_fibonacci",
    "fibonacci_number",
    "fibonacci_sweep",
]

SQRT5 = math.sqrt(5.0)
PHI = (1.0 + SQRT5) / 2.0
PHIBAR = (SQRT5 - 1.0) / 2.0
FERMAT_TOL = 1e-10
FIBONACCI_TOL = 1e-9
Y_ZERO_NOTE = ("y=0: returned x=0 by direct substitution; the W_q formula has "
               "no finite value here because W_q(0)=0")


@dataclass(frozen=True)
class FermatProblem:
    A: float
    B: float
    C: float

    def __post_init__(self):
        for name in "ABC":
            v = float(getattr(self, name))
            if not (math.isfinite(v) and v > 0.0):
                raise ValueError(f"{name} must be positive and finite, got {v!r}")
            object.__setattr__(self, name, v)

    def lhs(self, x: complex) -> complex:
        """``(A/C)**x + (B/C)**x - 1``."""
        return (cmath.exp(x * math.log(self.A / self.C))
                + cmath.exp(x * math.log(self.B / self.C)) - 1.0)


@dataclass(frozen=True)
class FibonacciQuery:
    y: float
    phi: float = PHI
    phibar: float = PHIBAR

    def __post_init__(self):
        if not math.isfinite(float(self.y)):
            raise ValueError(f"y must be finite, got {self.y!r}")
        object.__setattr__(self, "y", float(self.y))

    def lhs(self, x: complex) -> complex:
        """``phi**x - phibar**x - y sqrt(5)``."""
        return (cmath.exp(x * math.log(self.phi)) - cmath.exp(x * math.log(self.phibar))
                - self.y * SQRT5)


def _record(x: complex, res: float, formula: Formula, branch) -> RootRecord:
    real = abs(x.imag) <= IMAG_TOL * max(1.0, abs(x.real))
    return RootRecord(x, res, formula, branch, real)


def _collect(t: Trinomial, formulas, lhs, tol_of, complex_branches):
    warnings: list[str] = []
    records = []
    for formula in formulas:
        for cand in formula_candidates(t, formula, complex_branches=complex_branches,
                                       warnings=warnings):
            x = cand.log_x
            if not cmath.isfinite(x):
                continue
            if x.imag != 0.0 and abs(x.imag) <= IMAG_TOL * max(1.0, abs(x.real)):
                xr = complex(x.real, 0.0)
                if abs(lhs(xr)) <= tol_of(xr):
                    x = xr
            res = abs(lhs(x))
            if res <= tol_of(x):
                records.append(_record(x, res, cand.formula, cand.branch))
    return RootSet(dedupe(records), warnings)


def solve_fermat(A, B=None, C=None, *, complex_branches: bool = True) -> RootSet:
    """Solve ``A**x + B**x = C**x`` for x.

    Accepts a :class:`FermatProblem` or three positive numbers. Every
    returned x satisfies ``|(A/C)**x + (B/C)**x - 1| <= 1e-10`` (scaled by the
    larger term when that exceeds one).

    Raises
    ------
    NoSolution
        ``A == C`` or ``B == C``: the other term would have to vanish.
    DegenerateABError
        ``A == B == C``.
    """
    p = A if isinstance(A, FermatProblem) else FermatProblem(A, B, C)

    def tol_of(x: complex) -> float:
        big = max(abs(cmath.exp(x * math.log(p.A / p.C))), abs(cmath.exp(x * math.log(p.B / p.C))))
        return FERMAT_TOL * max(1.0, big)

    if p.A == p.B:
        if p.A == p.C:
            raise DegenerateABError("A = B = C: 2 = 1 after division")
        x = complex(math.log(2.0) / math.log(p.C / p.A), 0.0)
        res = abs(p.lhs(x))
        recs = [_record(x, res, Formula.SPECIAL, None)] if res <= tol_of(x) else []
        return RootSet(recs, ["A = B: solved as x = ln 2 / ln(C/A)"])
    if p.A == p.C or p.B == p.C:
        raise NoSolution("A = C or B = C forces the remaining term to zero")

    t = Trinomial(1.0, math.log(p.A / p.C), 1.0, math.log(p.B / p.C), -1.0)
    return _collect(t, (Formula.X1, Formula.X2), p.lhs, tol_of, complex_branches)


def solve_fibonacci(y, *, complex_branches: bool = True) -> RootSet:
    """Solve ``phi**x - phibar**x = y sqrt(5)`` for x.

    ``y > 0`` uses formula X1 first, ``y < 0`` formula X2 first (both are
    evaluated; the preferred one wins ties). ``y = 0`` returns ``x = 0``
    directly with a warning, since the W_q route degenerates there.
    """
    fq = y if isinstance(y, FibonacciQuery) else FibonacciQuery(y)
    yv = fq.y
    if yv == 0.0:
        return RootSet([_record(0j, abs(fq.lhs(0j)), Formula.SPECIAL, None)], [Y_ZERO_NOTE])
    tol = FIBONACCI_TOL * max(1.0, abs(yv) * SQRT5)
    t = Trinomial(1.0, math.log(fq.phi), -1.0, math.log(fq.phibar), -yv * SQRT5)
    order = (Formula.X1, Formula.X2) if yv > 0 else (Formula.X2, Formula.X1)
    return _collect(t, order, fq.lhs, lambda x: tol, complex_branches)


def fibonacci_number(n: int) -> int:
    """n-th Fibonacci number from Binet's form, evaluated with 50 digits.

    >>> fibonacci_number(10)
    55
    """
    if isinstance(n, bool) or not isinstance(n, int) or n != int(n):
        raise TypeError("n must be an integer")
    if n < 0 or n > 92:
        raise RangeError(f"n must lie in [0, 92], got {n}")
    with localcontext() as ctx:
        ctx.prec = 50
        s5 = Decimal(5).sqrt()
        phi = (1 + s5) / 2
        psi = (1 - s5) / 2
        return int(((phi ** n - psi ** n) / s5).to_integral_value())


@dataclass(frozen=True)
class SweepRow:
    y: int
    x: float | None
    ok: bool
    note: str = ""


def fibonacci_sweep(y_min: int, y_max: int, *, include_zero: bool = True) -> list[SweepRow]:
    """Real solution x for every integer y in ``[y_min, y_max]``, ascending.

    A failing row is flagged (``ok=False``) instead of aborting the sweep.
    """
    if y_min > y_max:
        raise ValueError(f"y_min={y_min} exceeds y_max={y_max}")
    rows = []
    for y in range(int(y_min), int(y_max) + 1):
        if y == 0 and not include_zero:
            continue
        try:
            rs = solve_fibonacci(y, complex_branches=False)
            real = rs.real_roots()
            if not real:
                rs = solve_fibonacci(y)
                real = rs.real_roots()
            if real:
                rows.append(SweepRow(y, real[0], True, "; ".join(rs.warnings)))
            else:
                rows.append(SweepRow(y, None, False, "no verified real root"))
        except Exception as exc:  # noqa: BLE001 - rows record failures
            rows.append(SweepRow(y, None, False, f"{type(exc).__name__}: {exc}"))
    return rows
