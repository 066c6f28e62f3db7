"""Roots of the fractional trinomial ``a x**alpha + b x**beta + c = 0``.

Dividing by ``a x**alpha`` turns the equation into a q-exponential one,

    x**alpha * exp_0((b/a) x**(beta-alpha)) = -c/a,

and raising both sides to ``r = (beta-alpha)/alpha`` (power rule
``exp_q(z)**r = exp_{1-(1-q)/r}(r z)``) gives the Lambert-Tsallis form

    u exp_q(u) = (b/a) r (-c/a)**r,   u = (b/a) r x**(beta-alpha),
    q = 1 - alpha/(beta-alpha).

So ``x = [(a/b)(alpha/(beta-alpha)) W_q(...)]**(1/(beta-alpha))`` (formula
``X1``). ``X2`` is the same with ``(a, alpha)`` and ``(b, beta)`` swapped.

Every W_q value that the real branches or the complex enumeration produce is
mapped to a candidate root and kept only if it passes the residual test, so
a returned root is always a root under principal powers.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Sequence

from .errors import (
    DegenerateError,
    DomainError,
    EmptyResult,
    NoConvergence,
    NoRootFound,
    NoSolution,
    BranchUnavailable,
)
from .qdeform import clog, cpow
from .wq_core import (
    PRINCIPAL,
    SECONDARY,
    BranchLabel,
    wq_eval_complex,
    wq_eval_real,
)

__all__ = [
    "ROOT_TOL",
    "IMAG_TOL",
    "Trinomial",
    "Formula",
    "RootRecord",
    "RootSet",
    "Candidate",
    "formula_candidates",
    "solve_trinomial",
    "solve_degenerate",
    "residual",
]

ROOT_TOL = 1e-8
IMAG_TOL = 1e-9
DEDUPE_TOL = 1e-8
_TINY_Z = 1e-280


@dataclass(frozen=True)
class Trinomial:
    """Coefficients of ``a x**alpha + b x**beta + c``."""

    a: float
    alpha: float
    b: float
    beta: float
    c: float

    def __post_init__(self):
        for name in ("a", "alpha", "b", "beta", "c"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v!r}")
            object.__setattr__(self, name, v)
        if self.a == 0.0 and self.b == 0.0:
            raise ValueError("a and b cannot both be zero")

    @property
    def is_degenerate(self) -> bool:
        return (self.alpha == self.beta or self.a == 0.0 or self.b == 0.0
                or self.c == 0.0 or self.alpha == 0.0 or self.beta == 0.0)

    def swapped(self) -> Trinomial:
        return Trinomial(self.b, self.beta, self.a, self.alpha, self.c)

    def scale(self, x: complex) -> float:
        """Magnitude scale ``|a| M**alpha + |b| M**beta + |c|``, ``M = max(1, |x|)``."""
        m = max(1.0, abs(x))
        return abs(self.a) * m ** self.alpha + abs(self.b) * m ** self.beta + abs(self.c)

    def __call__(self, x: complex) -> complex:
        return self.a * _term(x, self.alpha) + self.b * _term(x, self.beta) + self.c


def _term(x: complex, p: float) -> complex:
    if x == 0:
        if p > 0:
            return 0j
        if p == 0:
            return 1 + 0j
        raise DomainError(f"0**{p} is undefined")
    return cpow(x, p)


def residual(t: Trinomial | Sequence[float], x: complex) -> float:
    """``|a x**alpha + b x**beta + c|`` with principal powers.

    Raises ``DomainError`` for ``x = 0`` against a negative exponent.
    """
    t = _as_trinomial(t)
    if x == 0:
        total = t.c
        for coef, p in ((t.a, t.alpha), (t.b, t.beta)):
            if coef != 0.0:
                total += coef * _term(0j, p)
        return abs(total)
    return abs(t(x))


class Formula(str, Enum):
    X1 = "x1"
    X2 = "x2"
    SPECIAL = "special"


@dataclass(frozen=True)
class RootRecord:
    x: complex
    residual: float
    formula: Formula
    wq_branch: BranchLabel | None
    is_real: bool

    @property
    def value(self) -> float | complex:
        return self.x.real if self.is_real else self.x


@dataclass
class RootSet(Sequence):
    """Verified roots, ordered real-first then by real part."""

    roots: list[RootRecord] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def __len__(self):
        return len(self.roots)

    def __getitem__(self, i):
        return self.roots[i]

    def __iter__(self) -> Iterator[RootRecord]:
        return iter(self.roots)

    def real_roots(self) -> list[float]:
        return sorted(r.x.real for r in self.roots if r.is_real)

    def require(self) -> RootSet:
        if not self.roots:
            raise NoRootFound("no candidate passed residual verification")
        return self


@dataclass(frozen=True)
class Candidate:
    """One W_q value pushed through a formula.

    ``log_x`` is ``Log(m)/(beta-alpha)`` where ``m`` is the bracketed factor,
    so the trinomial root is ``exp(log_x)``. Callers solving for ``log x``
    (the exponential equations) use ``log_x`` directly and never form ``x``.
    """

    formula: Formula
    branch: BranchLabel
    q: float
    z: complex
    w: complex
    log_x: complex


def _as_trinomial(t) -> Trinomial:
    return t if isinstance(t, Trinomial) else Trinomial(*t)


def _wq_values(q: float, z: complex, complex_branches: bool, warnings: list[str]):
    out: list[tuple[BranchLabel, complex]] = []
    real_arg = isinstance(z, float)
    if real_arg:
        for br in (PRINCIPAL, SECONDARY):
            try:
                out.append((br, wq_eval_real(q, z, br).w))
            except (DomainError, BranchUnavailable):
                pass
            except (NoConvergence, OverflowError) as exc:
                warnings.append(f"real {br} W_q skipped: {exc}")
    if complex_branches:
        try:
            out.extend((r.branch, r.w) for r in wq_eval_complex(q, z))
        except EmptyResult as exc:
            warnings.append(str(exc))
    return out


def formula_candidates(t: Trinomial | Sequence[float], formula: Formula = Formula.X1, *,
                       complex_branches: bool = True,
                       warnings: list[str] | None = None) -> list[Candidate]:
    """W_q candidates of one formula (unverified).

    The W_q argument is real when ``-c/a > 0``; then both real branches are
    tried first. ``complex_branches=False`` skips the seed-grid enumeration.
    """
    t = _as_trinomial(t)
    if warnings is None:
        warnings = []
    if formula is Formula.X1:
        a, al, b, be = t.a, t.alpha, t.b, t.beta
    elif formula is Formula.X2:
        a, al, b, be = t.b, t.beta, t.a, t.alpha
    else:
        raise ValueError(f"no W_q formula for {formula}")
    c = t.c
    d = be - al
    r = d / al
    q = 1.0 - al / d
    k = -c / a
    try:
        if k > 0:
            z = (b / a) * r * k ** r
        else:
            z = (b / a) * r * cpow(k, r)
    except OverflowError:
        z = math.inf
    if not cmath.isfinite(z):
        warnings.append(f"{formula.value}: W_q argument overflows")
        return []

    coef = (a / b) * (al / d)
    out = []
    if abs(z) < _TINY_Z:
        # W_q(z) = z (1 + O(z)) on the principal branch, so Log(coef W) can be
        # formed from Log z without ever materializing z
        log_z = clog(complex((b / a) * r)) + r * clog(complex(k))
        log_m = _wrap(clog(complex(coef)) + log_z)
        if cmath.isfinite(log_m):
            out.append(Candidate(formula, PRINCIPAL, q, z, z, log_m / d))
        if z == 0:
            return out
    for branch, w in _wq_values(q, z, complex_branches, warnings):
        m = coef * w
        if m == 0:
            continue
        out.append(Candidate(formula, branch, q, z, w, clog(m) / d))
    return out


def _wrap(v: complex) -> complex:
    """Shift the imaginary part into (-pi, pi]."""
    im = math.remainder(v.imag, 2.0 * math.pi)
    if im == -math.pi:
        im = math.pi
    return complex(v.real, im)


def _is_real(x: complex) -> bool:
    return abs(x.imag) <= IMAG_TOL * max(1.0, abs(x.real))


def _sort_key(rec: RootRecord):
    return (0.0 if rec.is_real else abs(rec.x.imag), rec.x.real, rec.x.imag)


def dedupe(records: list[RootRecord]) -> list[RootRecord]:
    """Drop records within ``1e-8 max(1, |x|)`` of an earlier one, then sort."""
    kept: list[RootRecord] = []
    for rec in records:
        if not any(abs(rec.x - k.x) <= DEDUPE_TOL * max(1.0, abs(k.x)) for k in kept):
            kept.append(rec)
    return sorted(kept, key=_sort_key)


def solve_trinomial(t: Trinomial | Sequence[float], *,
                    formulas: Sequence[Formula] = (Formula.X1, Formula.X2),
                    complex_branches: bool = True,
                    strict: bool = False) -> RootSet:
    """Verified roots of ``a x**alpha + b x**beta + c = 0``.

    Degenerate inputs (``alpha == beta``, a zero coefficient or a zero
    exponent) are routed to :func:`solve_degenerate`.

    Parameters
    ----------
    t : Trinomial or (a, alpha, b, beta, c)
    formulas : which of X1 / X2 to evaluate.
    complex_branches : enumerate complex W_q values as well as real branches.
    strict : raise ``NoRootFound`` instead of returning an empty set.

    Examples
    --------
    >>> rs = solve_trinomial((1.0, 2.0, 1.0, 1.0, -6.0))
    >>> [round(x, 12) for x in rs.real_roots()]
    [-3.0, 2.0]
    """
    t = _as_trinomial(t)
    if t.is_degenerate:
        rs = solve_degenerate(t)
        if strict:
            rs.require()
        return rs
    warnings: list[str] = []
    records = []
    for formula in formulas:
        for cand in formula_candidates(t, formula, complex_branches=complex_branches,
                                       warnings=warnings):
            rec = _verify(t, cmath.exp(cand.log_x), cand.formula, cand.branch)
            if rec is not None:
                records.append(rec)
    rs = RootSet(dedupe(records), warnings)
    if strict:
        rs.require()
    return rs


def _verify(t: Trinomial, x: complex, formula: Formula, branch: BranchLabel | None):
    if not cmath.isfinite(x):
        return None
    try:
        res = residual(t, x)
    except DomainError:
        return None
    real = _is_real(x)
    if real and x.imag != 0.0:
        xr = complex(x.real, 0.0)
        rr = residual(t, xr)
        if rr <= ROOT_TOL * t.scale(xr):
            x, res = xr, rr
    if not res <= ROOT_TOL * t.scale(x):
        return None
    return RootRecord(x, res, formula, branch, real)


def solve_degenerate(t: Trinomial | Sequence[float]) -> RootSet:
    """Cases the W_q formulas cannot express.

    Terms with equal exponents are merged and ``x**0`` terms fold into the
    constant, leaving one of:

    * no power term: ``NoSolution`` (or ``DegenerateError`` if ``0 = 0``);
    * ``k x**e + C = 0``: ``x = (-C/k)**(1/e)`` (principal), or ``x = 0``
      when ``C = 0`` and ``e > 0``;
    * ``k1 x**e1 + k2 x**e2 = 0``: ``x = 0`` when both exponents are positive,
      plus ``x = (-k2/k1)**(1/(e1-e2))``.
    """
    t = _as_trinomial(t)
    if not t.is_degenerate:
        raise DegenerateError("trinomial is not degenerate; use solve_trinomial")
    const = t.c
    terms: dict[float, float] = {}
    for coef, p in ((t.a, t.alpha), (t.b, t.beta)):
        if coef == 0.0:
            continue
        if p == 0.0:
            const += coef
        else:
            terms[p] = terms.get(p, 0.0) + coef
    terms = {p: k for p, k in terms.items() if k != 0.0}

    cands: list[complex] = []
    if not terms:
        if const == 0.0:
            raise DegenerateError("every x satisfies the equation")
        raise NoSolution(f"reduced equation reads {const} = 0")
    if len(terms) == 1:
        (e, k), = terms.items()
        if const == 0.0:
            if e > 0:
                cands.append(0j)
            else:
                raise NoSolution(f"{k} x**{e} = 0 has no solution")
        else:
            cands.append(cpow(-const / k, 1.0 / e))
    else:
        (e1, k1), (e2, k2) = terms.items()
        if const != 0.0:
            raise DegenerateError("two power terms and a constant: not degenerate")
        if min(e1, e2) > 0:
            cands.append(0j)
        cands.append(cpow(-k2 / k1, 1.0 / (e1 - e2)))

    records = [rec for x in cands
               if (rec := _verify(t, x, Formula.SPECIAL, None)) is not None]
    return RootSet(dedupe(records))
