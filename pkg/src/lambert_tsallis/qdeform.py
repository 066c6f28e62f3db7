"""Tsallis q-deformed exponential and logarithm.

All complex powers are principal: ``base**p == exp(p * Log(base))`` with
``arg(base)`` in ``(-pi, pi]``. A negative zero imaginary part is treated as
``+0`` so the negative real axis always takes ``arg = +pi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ZeroPowerError

__all__ = [
    "Q_UNITY_EPS",
    "DOMAIN_EPS",
    "QValue",
    "as_qvalue",
    "exp_q",
    "exp_q_real",
    "qpow_transform",
    "ln_q",
    "principal",
    "clog",
    "clog1p",
    "cpow",
]

Q_UNITY_EPS = 1e-12
DOMAIN_EPS = 1e-14


@dataclass(frozen=True)
class QValue:
    """Deformation parameter ``q`` with its cached complement ``1 - q``."""

    q: float
    one_minus_q: float = field(init=False, repr=False)

    def __post_init__(self):
        q = float(self.q)
        if not math.isfinite(q):
            raise ValueError(f"q must be finite, got {self.q!r}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "one_minus_q", 1.0 - q)

    @property
    def is_classical(self) -> bool:
        """True when ``|1 - q|`` is small enough to use the ordinary exponential."""
        return abs(self.one_minus_q) < Q_UNITY_EPS

    @property
    def exponent(self) -> float:
        """The power ``1/(1-q)``; infinite in the classical limit."""
        return math.inf if self.is_classical else 1.0 / self.one_minus_q

    @property
    def branch_point(self):
        from .wq_core import branch_point

        return branch_point(self)

    def __float__(self):
        return self.q


def as_qvalue(q) -> QValue:
    return q if isinstance(q, QValue) else QValue(q)


def principal(x):
    """Replace ``-0.0`` imaginary parts by ``+0.0`` (scalar or array)."""
    if isinstance(x, np.ndarray):
        return np.where(x.imag == 0.0, x.real + 0j, x)
    x = complex(x)
    if x.imag == 0.0:
        return complex(x.real, 0.0)
    return x


def clog(x):
    """Principal complex logarithm, scalar or array."""
    if isinstance(x, np.ndarray):
        x = principal(x.astype(complex))
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.log(np.abs(x)) + 1j * np.arctan2(x.imag, x.real)
    x = principal(x)
    if x == 0:
        return complex(-math.inf, 0.0)
    return complex(math.log(abs(x)), math.atan2(x.imag, x.real))


def clog1p(x):
    """Principal ``Log(1 + x)`` accurate for small ``|x|`` (numpy's complex
    ``log1p`` drops the real part below ~1e-16)."""
    x = principal(np.asarray(x, dtype=complex))
    xr, xi = x.real, x.imag
    u = 1.0 + xr
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        small = np.hypot(xr, xi) < 0.5
        re_small = 0.5 * np.log1p(2.0 * xr + xr * xr + xi * xi)
        re_other = np.log(np.hypot(u, xi))
        out = np.where(small, re_small, re_other) + 1j * np.arctan2(xi, u)
    return out if out.ndim else complex(out)


def cpow(base, p: float):
    """Principal power ``base**p`` for real ``p`` (scalar or array)."""
    scalar = np.ndim(base) == 0
    base = principal(np.asarray(base, dtype=complex))
    with np.errstate(all="ignore"):
        lg = clog(base)
        mag = np.exp(p * lg.real)
        out = mag * np.exp(1j * p * lg.imag)
        out = np.where(base == 0, 0.0 if p > 0 else (1.0 if p == 0 else np.inf), out)
    return complex(out) if scalar else out


def _exp_q_array(one_minus_q: float, z: np.ndarray) -> np.ndarray:
    """Non-raising vectorised exp_q; overflow shows up as inf/nan."""
    with np.errstate(all="ignore"):
        if abs(one_minus_q) < Q_UNITY_EPS:
            return np.exp(z)
        p = 1.0 / one_minus_q
        x = one_minus_q * z
        lg = clog1p(x)
        out = np.exp(p * lg.real) * np.exp(1j * p * lg.imag)
        zero_base = (x.real == -1.0) & (x.imag == 0.0)
        if np.any(zero_base):
            out = np.where(zero_base, 0.0 if p > 0 else np.inf, out)
    return out


def exp_q(q, z):
    """Tsallis q-exponential ``[1 + (1-q) z]**(1/(1-q))``, principal power.

    Parameters
    ----------
    q : float or QValue
        Deformation parameter; ``|1-q| < Q_UNITY_EPS`` gives ``exp(z)``.
    z : complex scalar or array

    Returns
    -------
    complex or ndarray of complex

    Raises
    ------
    OverflowError
        If the result exceeds double range for a finite argument.
    """
    qv = as_qvalue(q)
    scalar = np.ndim(z) == 0
    zz = np.atleast_1d(np.asarray(z, dtype=complex))
    real_mask = (zz.imag == 0.0) & (1.0 + qv.one_minus_q * zz.real > 0.0)
    out = _exp_q_array(qv.one_minus_q, zz)
    if np.any(real_mask):
        # real sub-domain goes through the same arithmetic as exp_q_real
        out = np.where(real_mask, _exp_q_real_array(qv.one_minus_q, zz.real) + 0j, out)
    bad = ~np.isfinite(out) & np.isfinite(zz)
    if np.any(bad):
        raise OverflowError(f"exp_q overflow for q={qv.q}")
    return complex(out[0]) if scalar else out


def _exp_q_real_array(one_minus_q: float, w):
    with np.errstate(all="ignore"):
        if abs(one_minus_q) < Q_UNITY_EPS:
            return np.exp(w)
        return np.exp(np.log1p(one_minus_q * w) / one_minus_q)


def exp_q_real(q, w: float) -> float:
    """Real q-exponential on ``1 + (1-q) w >= 0``.

    Raises ``DomainError`` below ``-DOMAIN_EPS`` instead of applying the Tsallis
    cutoff; raises ``OverflowError`` when the value leaves double range.
    """
    qv = as_qvalue(q)
    w = float(w)
    om = qv.one_minus_q
    if qv.is_classical:
        return math.exp(w)
    x = om * w
    if 1.0 + x < -DOMAIN_EPS:
        raise DomainError(f"1+(1-q)w = {1.0 + x!r} < 0 for q={qv.q}, w={w}; use the complex path")
    if x <= -1.0:
        if om > 0:
            return 0.0
        raise OverflowError(f"exp_q diverges at the base zero for q={qv.q}")
    val = float(_exp_q_real_array(om, np.float64(w)))
    if not math.isfinite(val):
        raise OverflowError(f"exp_q_real overflow for q={qv.q}, w={w}")
    return val


def qpow_transform(q, r: float) -> QValue:
    """Deformation of a powered q-exponential: ``exp_q(z)**r == exp_{q'}(r z)``
    with ``q' = 1 - (1-q)/r``."""
    if r == 0:
        raise ZeroPowerError("power rule undefined for r = 0")
    qv = as_qvalue(q)
    return QValue(1.0 - qv.one_minus_q / r)


def ln_q(q, x: float) -> float:
    """q-logarithm ``(x**(1-q) - 1)/(1-q)``, inverse of ``exp_q_real``."""
    if not x > 0:
        raise DomainError(f"ln_q requires x > 0, got {x!r}")
    qv = as_qvalue(q)
    if qv.is_classical:
        return math.log(x)
    om = qv.one_minus_q
    return math.expm1(om * math.log(x)) / om
