"""Lambert-Tsallis W_q function: the inverse of ``w -> w * exp_q(w)``.

Real branches
-------------
For ``q < 2`` the map ``g(w) = w exp_q(w)`` has a single critical point at
``w_b = 1/(q-2)``. The *principal* branch is the part of ``g`` on
``w >= w_b`` (it contains ``w = 0``), the *secondary* branch the part on
``w <= w_b``. For ``q >= 2`` the map is monotone and only the principal
branch exists.

==========  ===========================  ===========================
q           principal w-range            secondary w-range
==========  ===========================  ===========================
q < 1       [w_b, inf)                   [-1/(1-q), w_b]
q == 1      [-1, inf)                    (-inf, -1]
1 < q < 2   [w_b, 1/(q-1))               (-inf, w_b]
q == 2      (-inf, 1)                    --
q > 2       (-inf, 1/(q-1))              --
==========  ===========================  ===========================
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import BranchUnavailable, DomainError, EmptyResult, NoConvergence, UnsupportedQ
from .qdeform import (
    DOMAIN_EPS,
    QValue,
    _exp_q_array,
    as_qvalue,
    exp_q,
    exp_q_real,
    principal,
)

__all__ = [
    "MAX_ITER",
    "RESIDUAL_TOL",
    "BranchKind",
    "BranchLabel",
    "PRINCIPAL",
    "SECONDARY",
    "complex_seed",
    "WqResult",
    "BranchPoint",
    "branch_point",
    "wq_closed_form",
    "wq_eval_real",
    "wq_eval_complex",
    "wq",
]

MAX_ITER = 100
RESIDUAL_TOL = 1e-12
SEED_RADII = (0.25, 1.0, 4.0)
SEED_ANGLES = 16
DEDUPE_TOL = 1e-8
_EPS = np.finfo(float).eps


class BranchKind(str, Enum):
    PRINCIPAL = "principal"
    SECONDARY = "secondary"
    COMPLEX_SEED = "complex_seed"


@dataclass(frozen=True)
class BranchLabel:
    kind: BranchKind
    index: int | None = None

    def __str__(self):
        if self.kind is BranchKind.COMPLEX_SEED:
            return f"complex_seed[{self.index}]"
        return self.kind.value


PRINCIPAL = BranchLabel(BranchKind.PRINCIPAL)
SECONDARY = BranchLabel(BranchKind.SECONDARY)


def complex_seed(index: int) -> BranchLabel:
    return BranchLabel(BranchKind.COMPLEX_SEED, int(index))


@dataclass(frozen=True)
class WqResult:
    """One evaluation of W_q.

    Attributes
    ----------
    w : complex
        The value, with ``w * exp_q(w) ~= z``.
    branch : BranchLabel
    iterations : int
        Iterations spent (0 for closed forms and exact shortcuts).
    residual : float
        ``|w exp_q(w) - z|``.
    """

    w: complex
    branch: BranchLabel
    iterations: int
    residual: float


@dataclass(frozen=True)
class BranchPoint:
    z_b: float
    w_b: float
    exists: bool


def branch_point(q) -> BranchPoint:
    """Branch point ``(z_b, w_b)`` with ``w_b = 1/(q-2)``.

    ``exists`` is False for ``q >= 2`` (the base ``1/(2-q)`` of the
    q-exponential at ``w_b`` is not positive) or when ``z_b`` overflows.
    """
    qv = as_qvalue(q)
    if qv.q >= 2.0:
        return BranchPoint(math.nan, math.nan, False)
    w_b = 1.0 / (qv.q - 2.0)
    try:
        z_b = w_b * exp_q_real(qv, w_b)
    except (OverflowError, DomainError):
        return BranchPoint(math.nan, math.nan, False)
    if not math.isfinite(z_b):
        return BranchPoint(math.nan, math.nan, False)
    return BranchPoint(z_b, w_b, True)


def _residual(qv: QValue, w: complex, z: complex) -> float:
    try:
        return abs(w * exp_q(qv, w) - z)
    except OverflowError:
        return math.inf


def _real_g(qv: QValue, w: float) -> float:
    return w * exp_q_real(qv, w)


# --------------------------------------------------------------------------
# closed forms
# --------------------------------------------------------------------------

def _cubic_real_roots(b: float, c: float, d: float) -> list[float]:
    """Real roots of the monic cubic ``t^3 + b t^2 + c t + d``, ascending.

    Uses the trigonometric/hyperbolic forms of the depressed cubic. A
    discriminant that rounding pushes just past zero is clamped so a double
    root is still reported twice.
    """
    shift = b / 3.0
    p = c - b * b / 3.0
    qq = 2.0 * b ** 3 / 27.0 - b * c / 3.0 + d
    if p == 0.0:
        roots = [math.copysign(abs(qq) ** (1.0 / 3.0), -qq)]
    elif p < 0.0:
        m = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * qq / (p * m)
        if abs(arg) <= 1.0 + 1e-12:
            theta = math.acos(max(-1.0, min(1.0, arg))) / 3.0
            roots = [m * math.cos(theta - 2.0 * math.pi * k / 3.0) for k in range(3)]
        else:
            roots = [-math.copysign(m, qq) * math.cosh(math.acosh(abs(arg)) / 3.0)]
    else:
        m = 2.0 * math.sqrt(p / 3.0)
        roots = [-m * math.sinh(math.asinh(3.0 * qq / (p * m)) / 3.0)]
    out = []
    for t in roots:
        x = t - shift
        # one Newton polish on the undepressed cubic
        fx = ((x + b) * x + c) * x + d
        dfx = (3.0 * x + 2.0 * b) * x + c
        if dfx != 0.0:
            x2 = x - fx / dfx
            if abs(((x2 + b) * x2 + c) * x2 + d) < abs(fx):
                x = x2
        out.append(x)
    return sorted(out)


_CLOSED_FORM_Q = {0.5: "1/2", 4.0 / 3.0: "4/3", 1.5: "3/2", 2.0: "2"}


def _closed_form_key(q: float) -> float:
    for key in _CLOSED_FORM_Q:
        if abs(q - key) <= 1e-15:
            return key
    raise UnsupportedQ(f"no closed form for q={q}; supported: 1/2, 4/3, 3/2, 2")


def wq_closed_form(q, z: float, branch: BranchLabel = PRINCIPAL) -> WqResult:
    """Algebraic W_q for q in {1/2, 4/3, 3/2, 2}.

    Each case solves the polynomial that ``w exp_q(w) = z`` becomes:

    * q = 2:   ``w = z/(z+1)``, z > -1
    * q = 3/2: ``z (1 - w/2)^2 = w``, principal ``w = 2z/((z+1) + sqrt(2z+1))``
      (the rationalised form of ``[2(z+1) - 2 sqrt(2z+1)]/z``), z >= -1/2
    * q = 1/2: ``w^3 + 4w^2 + 4w - 4z = 0``, z >= -8/27
    * q = 4/3: ``z w^3 - 9z w^2 + 27(z+1) w - 27z = 0``, z >= 0

    Secondary branches exist for q in {1/2, 4/3, 3/2} on ``z_b <= z < 0``
    (``<= 0`` for q = 1/2).
    """
    qv = as_qvalue(q)
    key = _closed_form_key(qv.q)
    z = float(z)
    if not math.isfinite(z):
        raise DomainError(f"z must be finite, got {z!r}")
    secondary = branch == SECONDARY
    if branch not in (PRINCIPAL, SECONDARY):
        raise BranchUnavailable(f"closed forms cover real branches only, got {branch}")

    if key == 2.0:
        if secondary:
            raise BranchUnavailable("W_2 has no finite branch point")
        if z <= -1.0:
            raise DomainError(f"W_2 is defined for z > -1, got {z}")
        w = z / (z + 1.0)
        return WqResult(complex(w), PRINCIPAL, 0, _residual(qv, w, z))

    bp = branch_point(qv)
    if secondary:
        upper_ok = z <= 0.0 if key == 0.5 else z < 0.0
        if not (z >= bp.z_b - DOMAIN_EPS and upper_ok):
            raise DomainError(f"secondary W_{_CLOSED_FORM_Q[key]} needs {bp.z_b} <= z < 0, got {z}")
    else:
        lower = 0.0 if key == 4.0 / 3.0 else bp.z_b
        if z < lower - DOMAIN_EPS:
            raise DomainError(f"principal W_{_CLOSED_FORM_Q[key]} needs z >= {lower}, got {z}")
    z = max(z, bp.z_b)

    if key == 1.5:
        s = math.sqrt(max(2.0 * z + 1.0, 0.0))
        if secondary:
            w = 2.0 * ((z + 1.0) + s) / z
        else:
            w = 2.0 * z / ((z + 1.0) + s)
    elif z == 0.0 and not secondary:
        w = 0.0
    else:
        if key == 0.5:
            roots = _cubic_real_roots(4.0, 4.0, -4.0 * z)
            admissible = [r for r in roots if 1.0 + 0.5 * r >= -DOMAIN_EPS]
        else:
            roots = _cubic_real_roots(-9.0, 27.0 * (z + 1.0) / z, -27.0)
            admissible = [r for r in roots if 1.0 - r / 3.0 >= -DOMAIN_EPS]
        if secondary:
            side = [r for r in admissible if r <= bp.w_b + 1e-7 * max(1.0, abs(bp.w_b))]
            w = min(side) if side else bp.w_b
        else:
            side = [r for r in admissible if r >= bp.w_b - 1e-7 * max(1.0, abs(bp.w_b))]
            w = max(side) if side else bp.w_b
    label = SECONDARY if secondary else PRINCIPAL
    return WqResult(complex(w), label, 0, _residual(qv, w, z))


# --------------------------------------------------------------------------
# real iteration
# --------------------------------------------------------------------------

def _split_mid(lo: float, hi: float) -> float:
    """Bracket midpoint; geometric when the bracket spans many decades."""
    if lo * hi > 0.0:
        a, b = abs(lo), abs(hi)
        if max(a, b) > 4.0 * min(a, b):
            return math.copysign(math.sqrt(a) * math.sqrt(b), lo)
    return 0.5 * (lo + hi)


def _real_derivs(qv: QValue, w: float):
    """Return ``(E, g', g'')`` for ``g(w) = w E(w)``, ``E = exp_q(w)``.

    With base ``B = 1 + (1-q) w``: ``E^q = E/B``, ``g' = E (B + w)/B`` and
    ``g'' = 2E/B + q w E/B^2``.
    """
    E = exp_q_real(qv, w)
    if qv.is_classical:
        return E, E * (1.0 + w), E * (2.0 + w)
    B = 1.0 + qv.one_minus_q * w
    if B <= 0.0:
        return E, math.nan, math.nan
    return E, E * (B + w) / B, 2.0 * E / B + qv.q * w * E / (B * B)


def _expand(qv: QValue, start: float, keep_going) -> float:
    w = start
    while keep_going(_real_g(qv, w)):
        w *= 2.0
        if abs(w) > 1e300:
            raise OverflowError(f"W_q value beyond double range (q={qv.q})")
    return w


def _real_bracket(qv: QValue, z: float, branch: BranchLabel, bp: BranchPoint):
    """Return ``(lo, hi, exact)``; ``exact`` short-circuits when not None."""
    om = qv.one_minus_q
    q = qv.q
    if branch == PRINCIPAL:
        if bp.exists and z < bp.z_b:
            if z >= bp.z_b - DOMAIN_EPS * max(1.0, abs(bp.z_b)):
                return bp.w_b, bp.w_b, bp.w_b
            raise DomainError(f"principal W_q(z) needs z >= z_b = {bp.z_b} for q={q}, got {z}")
        if bp.exists and z == bp.z_b:
            return bp.w_b, bp.w_b, bp.w_b
        if q == 2.0 and z <= -1.0:
            raise DomainError(f"principal W_2(z) needs z > -1, got {z}")
        if z == 0.0:
            return 0.0, 0.0, 0.0
        if z > 0.0:
            hi = z
            if om < 0.0 and not qv.is_classical:
                hi = min(hi, 1.0 / (q - 1.0))
            return 0.0, hi, None
        if bp.exists:
            return bp.w_b, 0.0, None
        lo = _expand(qv, -1.0, lambda g: g > z)
        return lo, 0.0, None

    if branch != SECONDARY:
        raise BranchUnavailable(f"real evaluation supports principal/secondary, got {branch}")
    if not bp.exists:
        raise BranchUnavailable(f"no finite branch point for q={q}")
    slack = DOMAIN_EPS * max(1.0, abs(bp.z_b))
    if z < bp.z_b - slack:
        raise DomainError(f"secondary W_q(z) needs z >= z_b = {bp.z_b} for q={q}, got {z}")
    if z <= bp.z_b:
        return bp.w_b, bp.w_b, bp.w_b
    finite_left = om > 0.0 and not qv.is_classical
    if z > 0.0 or (z == 0.0 and not finite_left):
        raise DomainError(f"secondary W_q(z) needs z_b <= z < 0 for q={q}, got {z}")
    if finite_left:
        w_c = -1.0 / om
        if z == 0.0:
            return w_c, w_c, w_c
        return w_c, bp.w_b, None
    lo = _expand(qv, 2.0 * bp.w_b, lambda g: g < z)
    return lo, bp.w_b, None


def _principal_guess(z: float) -> float:
    if abs(z) <= 1.0 and z != -1.0:
        return z / (1.0 + z)
    if z > math.e:
        lz = math.log(z)
        return lz - math.log(lz)
    return math.nan


def _ulp_polish(qv: QValue, z: float, w: float, res: float, reach: int = 8):
    """Best of the doubles within ``reach`` ulps of ``w``; the stopping rule
    leaves a few ulps of slack, which matters where g is very steep."""
    for direction in (math.inf, -math.inf):
        cand = w
        for _ in range(reach):
            cand = math.nextafter(cand, direction)
            try:
                r = abs(_real_g(qv, cand) - z)
            except (DomainError, OverflowError):
                break
            if r < res:
                w, res = cand, r
    return w, res


def wq_eval_real(q, z: float, branch: BranchLabel = PRINCIPAL, *,
                 tol: float = RESIDUAL_TOL, max_iter: int = MAX_ITER) -> WqResult:
    """Real W_q on the principal or secondary branch.

    Halley iteration on ``f(w) = w exp_q(w) - z`` safeguarded by a bracket
    that pins the requested branch; any step leaving the bracket is replaced
    by a (possibly geometric) bisection.

    Raises
    ------
    DomainError
        ``z`` outside the branch's real domain.
    BranchUnavailable
        Secondary branch requested for ``q >= 2``.
    NoConvergence
        Iteration budget exhausted or residual above ``tol * max(1, |z|)``.
    """
    qv = as_qvalue(q)
    z = float(z)
    if not math.isfinite(z):
        raise DomainError(f"z must be finite, got {z!r}")
    bp = branch_point(qv)
    lo, hi, exact = _real_bracket(qv, z, branch, bp)
    label = SECONDARY if branch == SECONDARY else PRINCIPAL
    if exact is not None:
        return WqResult(complex(exact), label, 0, abs(_real_g(qv, exact) - z))

    sign = 1.0 if label == PRINCIPAL else -1.0
    if label == PRINCIPAL:
        w = _principal_guess(z)
    else:
        w = 2.0 * bp.w_b - _principal_guess(z)
    if not (lo < w < hi):
        w = _split_mid(lo, hi)

    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        E, d1, d2 = _real_derivs(qv, w)
        f = w * E - z
        if f == 0.0:
            converged = True
            break
        if sign * f < 0.0:
            lo = w
        else:
            hi = w
        step = math.nan
        if d1 != 0.0 and math.isfinite(d1):
            denom = d1 - f * d2 / (2.0 * d1)
            step = f / denom if denom != 0.0 else f / d1
        w_new = w - step
        if not (lo < w_new < hi):
            w_new = _split_mid(lo, hi)
        done = abs(w_new - w) <= 4.0 * _EPS * abs(w) or hi - lo <= 4.0 * _EPS * max(abs(lo), abs(hi))
        w = w_new
        if done:
            converged = True
            break
    res = abs(_real_g(qv, w) - z)
    if converged and res > tol * max(1.0, abs(z)):
        w, res = _ulp_polish(qv, z, w, res)
    if not converged or res > tol * max(1.0, abs(z)):
        why = ("iteration budget exhausted" if not converged else
               "w is pinned to double resolution but g(w) is too steep there "
               "to meet the residual tolerance")
        raise NoConvergence(
            f"W_q real iteration failed ({why}): q={qv.q}, z={z}, branch={label}, "
            f"iterations={it}, residual={res:.3e}")
    return WqResult(complex(w), label, it, res)


# --------------------------------------------------------------------------
# complex enumeration
# --------------------------------------------------------------------------

def _F_dF(qv: QValue, w: np.ndarray, z: complex):
    E = _exp_q_array(qv.one_minus_q, w)
    with np.errstate(all="ignore"):
        F = w * E - z
        if qv.is_classical:
            dF = E * (1.0 + w)
        else:
            B = principal(1.0 + qv.one_minus_q * w)
            dF = E * (B + w) / B
    return F, dF


def _cut_project(qv: QValue, w: np.ndarray, trial: np.ndarray) -> np.ndarray:
    """Stop steps that jump across the cut of the principal power.

    The base ``B = 1 + (1-q) w`` has its cut on the negative real axis. A step
    whose segment crosses that half-line lands on the other side of a
    discontinuity; it is pulled back onto the cut (``Im w = 0``), where the
    principal power is continuous with the ``Im B > 0`` side.
    """
    if qv.is_classical:
        return trial
    om = qv.one_minus_q
    bw = 1.0 + om * w
    bt = 1.0 + om * trial
    flips = (bw.imag >= 0.0) != (bt.imag >= 0.0)
    if not flips.any():
        return trial
    with np.errstate(all="ignore"):
        t = bw.imag / (bw.imag - bt.imag)
        x_cross = bw.real + t * (bt.real - bw.real)
    hit = flips & (x_cross < 0.0)
    return np.where(hit, trial.real + 0j, trial)


def _seeds(qv: QValue, z: complex) -> np.ndarray:
    R = max(1.0, abs(z))
    ang = np.exp(2j * np.pi * np.arange(SEED_ANGLES) / SEED_ANGLES)
    grid = np.concatenate([r * R * ang for r in SEED_RADII])
    extra = None
    if z.imag == 0.0:
        try:
            extra = wq_eval_real(qv, z.real, PRINCIPAL).w
        except (DomainError, NoConvergence, OverflowError):
            extra = None
    if extra is None:
        if abs(z) <= 1.0 and z != -1.0:
            extra = z / (1.0 + z)
        elif abs(z) > math.e:
            lz = cmath.log(z)
            extra = lz - cmath.log(lz)
        else:
            extra = 0.5 * z
    return np.concatenate([[extra], grid, _pole_seeds(qv, z), _far_seeds(qv, z)])


def _principal_ks(centre: float, half_width: float, cap: int) -> list[int]:
    """Integers k with ``|centre + 2 pi k| <= half_width``, smallest first."""
    k_lo = math.ceil((-half_width - centre) / (2.0 * math.pi))
    k_hi = math.floor((half_width - centre) / (2.0 * math.pi))
    return sorted(range(k_lo, k_hi + 1), key=abs)[:cap]


def _far_seeds(qv: QValue, z: complex) -> np.ndarray:
    """Large-|w| seeds for q < 1 and q > 2.

    With ``u = (1-q) w`` and ``p = 1/(1-q)``, ``w exp_q(w) ~ u**(1+p)/(1-q)``
    once ``|u| >> 1``, so ``Log u = (Log((1-q) z) + 2 pi i k)/(1+p)``. Just
    above q = 2 the exponent ``1+p`` is tiny and the solution can sit far
    beyond the radial grid.
    """
    om = qv.one_minus_q
    if qv.is_classical or z == 0 or not (om > 0.0 or qv.q > 2.0):
        return np.empty(0, dtype=complex)
    e = 1.0 + 1.0 / om
    Lz = cmath.log(om * z)
    out = []
    for k in _principal_ks(Lz.imag, math.pi * abs(e), POLE_SEEDS_MAX):
        L = (Lz + 2j * math.pi * k) / e
        if L.real > 700.0 or L.real < 0.0:
            continue
        out.append(cmath.exp(L) / om)
    return np.array(out, dtype=complex)


POLE_SEEDS_MAX = 8


def _pole_seeds(qv: QValue, z: complex) -> np.ndarray:
    """Seeds next to the pole ``w_p = 1/(q-1)`` of exp_q, for q > 1.

    Near the pole ``w exp_q(w) ~ w_p B**(-1/(q-1))`` with ``B = 1 + (1-q) w``,
    so ``B_k = exp((q-1) (Log(w_p/z) + 2 pi i k))`` for every k whose
    ``Log B_k`` stays on the principal sheet. For large ``|z|`` these are
    the only solutions and the radial grid never gets close to them.
    """
    if qv.one_minus_q >= 0.0 or qv.is_classical or z == 0:
        return np.empty(0, dtype=complex)
    s = qv.q - 1.0
    w_p = 1.0 / s
    L = cmath.log(w_p / z)
    out = []
    for k in _principal_ks(L.imag, math.pi / s, POLE_SEEDS_MAX):
        try:
            B = cmath.exp(s * (L + 2j * math.pi * k))
        except OverflowError:
            continue
        if abs(B) < 1.0:
            out.append(w_p * (1.0 - B))
    return np.array(out, dtype=complex)


def wq_eval_complex(q, z, *, tol: float = RESIDUAL_TOL, max_iter: int = MAX_ITER) -> list[WqResult]:
    """All solutions of ``w exp_q(w) = z`` reachable from a fixed seed grid.

    Damped Newton runs from ``radii x angles`` seeds (radii 0.25, 1, 4 times
    ``max(1, |z|)``, 16 angles) plus one seed at the real principal value or
    a Lambert-style estimate, plus asymptotic seeds next to the pole of
    exp_q (q > 1) and far out (q < 1 or q > 2). Converged points within
    ``1e-8 max(1, |w|)`` of each other are merged. Results are labelled
    ``complex_seed[k]`` in ascending ``|w|``.

    Raises
    ------
    EmptyResult
        If no seed converges. Besides genuine misses this happens when the
        only solutions sit so close to the pole (q > 2, large ``|z|``) that
        no double-precision w meets the residual tolerance.
    """
    qv = as_qvalue(q)
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"z must be finite, got {z!r}")
    zscale = max(1.0, abs(z))
    accept = tol * zscale

    W = _seeds(qv, z)
    n = W.size
    runaway = 1e12 * max(zscale, float(np.abs(W).max()))
    iters = np.zeros(n, dtype=int)
    done = np.zeros(n, dtype=bool)
    alive = np.ones(n, dtype=bool)
    F, dF = _F_dF(qv, W, z)
    absF = np.abs(F)
    alive &= np.isfinite(absF)

    for k in range(1, max_iter + 1):
        act = np.flatnonzero(alive & ~done)
        if act.size == 0:
            break
        w, f, df, af = W[act], F[act], dF[act], absF[act]
        with np.errstate(all="ignore"):
            step = f / df
            ok = np.isfinite(step)
            cap = 2.0 * np.maximum(1.0, np.abs(w))
            big = np.abs(step) > cap
            step = np.where(big, step * cap / np.where(big, np.abs(step), 1.0), step)
        trial = _cut_project(qv, w, w - step)
        Ft, dFt = _F_dF(qv, trial, z)
        aFt = np.abs(Ft)
        for _ in range(12):
            worse = ok & ~(aFt < af) & (af > accept)
            if not worse.any():
                break
            step = np.where(worse, 0.5 * step, step)
            idx = np.flatnonzero(worse)
            t2 = _cut_project(qv, w[idx], w[idx] - step[idx])
            f2, d2 = _F_dF(qv, t2, z)
            trial[idx], Ft[idx], dFt[idx], aFt[idx] = t2, f2, d2, np.abs(f2)
        stalled = ~(aFt < af) & (af > accept)
        W[act], F[act], dF[act], absF[act] = trial, Ft, dFt, aFt
        iters[act] = k
        small = np.abs(step) <= 1e-15 * np.maximum(1.0, np.abs(trial))
        tiny = aFt <= 1e-3 * accept
        # inside tolerance and no longer improving: rounding noise floor
        floor = ~(aFt < 0.5 * af)
        conv = ok & (small | tiny | floor) & (aFt <= accept)
        dead = ~ok | stalled | ~np.isfinite(aFt) | (np.abs(trial) > runaway)
        done[act[conv]] = True
        alive[act[dead & ~conv]] = False

    idx = np.flatnonzero(done & alive)
    order = idx[np.lexsort((W[idx].imag, W[idx].real, np.abs(W[idx])))]
    clusters: list[list[int]] = []
    for i in order:
        w = W[i]
        for cl in clusters:
            if abs(w - W[cl[0]]) <= DEDUPE_TOL * max(1.0, abs(W[cl[0]])):
                cl.append(i)
                break
        else:
            clusters.append([i])

    picked = []
    for cl in clusters:
        i = min(cl, key=lambda j: absF[j])
        w = complex(W[i])
        res = _residual(qv, w, z)
        if abs(w.imag) <= 1e-10 * max(1.0, abs(w)):
            wr = complex(w.real, 0.0)
            rr = _residual(qv, wr, z)
            if rr <= max(res, 0.5 * accept):
                w, res = wr, rr
        if res <= accept:
            picked.append((w, res, int(iters[i])))
    if not picked:
        raise EmptyResult(f"no seed converged for q={qv.q}, z={z}")
    picked.sort(key=lambda t: (abs(t[0]), t[0].real, t[0].imag))
    return [WqResult(w, complex_seed(k), it, res) for k, (w, res, it) in enumerate(picked)]


def wq(q, z, branch: BranchLabel | str = PRINCIPAL):
    """Convenience front end: real branches by name, ``"all"`` for the list."""
    if isinstance(branch, str):
        if branch == "all":
            return wq_eval_complex(q, z)
        branch = {"principal": PRINCIPAL, "secondary": SECONDARY}[branch]
    return wq_eval_real(q, z, branch)
