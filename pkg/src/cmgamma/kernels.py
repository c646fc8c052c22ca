"""Gamma-ratio families and their Laplace kernel representations.

Each family describes a function f(z) built from a ratio of gamma factors.
On its domain, every alternating-sign log-derivative has an integral form

    (-1)^n (ln f)^(n)(z) = integral_0^inf t^(n-1) w(t, z) K(t) / (1 - e^-t) dt

with a nonnegative kernel K and an exponential weight w.  The same
quantity equals a short signed combination of polygamma values at shifted
arguments.  Both evaluation routes are exposed here; they share only the
table of (coefficient, shifted argument) pairs that defines the family,
and are otherwise computed by independent machinery (adaptive quadrature
versus recurrence-plus-series), which is what makes cross-checking them
meaningful.

Families
--------
TwoParam(a, b)        f(z) = G(z+1) G(z-a-b+1) / (G(z-a+1) G(z-b+1)),  z > a+b-1
MultiParam(a_1..a_k)  f(z) = G(z+1)^(k-1) G(z-A+1) / prod G(z-a_i+1),  z > A-1,
                      A = sum a_i
Majorized(a, b)       f(z) = prod G(z-a_i) / prod G(z-b_i),            z > max
Symmetric(a)          f(z) = G(z+a) G(z-a) / G(z)^2,                   z > a

where G is the gamma function.  Parameters are nonnegative reals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import specfun
from .errors import DomainError, UsageError
from .quad import QuadOptions, integrate_half_line

__all__ = [
    "TwoParam",
    "MultiParam",
    "Majorized",
    "Symmetric",
    "RatioFamily",
    "LogDerivResult",
    "N_MAX_ORDER",
    "domain_lower_bound",
    "kernel_value",
    "log_f",
    "log_deriv_quadrature",
    "log_deriv_polygamma",
]

# Highest supported log-derivative order.
N_MAX_ORDER = 12

# Relative scale assumed for roundoff of one polygamma term; feeds the
# error estimate of the series path.
_POLY_EPS = 1e-13


def _clean_params(values, name: str) -> tuple[float, ...]:
    try:
        tup = tuple(float(v) for v in values)
    except TypeError:
        raise UsageError(f"{name} must be a sequence of reals") from None
    if not tup:
        raise UsageError(f"{name} must be nonempty")
    if any(not math.isfinite(v) or v < 0.0 for v in tup):
        raise DomainError(f"{name} entries must be finite and >= 0, got {values!r}")
    return tup


def _clean_scalar(value, name: str) -> float:
    v = float(value)
    if not math.isfinite(v) or v < 0.0:
        raise DomainError(f"{name} must be finite and >= 0, got {value!r}")
    return v


@dataclass(frozen=True)
class TwoParam:
    """f(z) = G(z+1) G(z-a-b+1) / (G(z-a+1) G(z-b+1)) for z > a+b-1."""

    a: float
    b: float

    def __post_init__(self):
        object.__setattr__(self, "a", _clean_scalar(self.a, "a"))
        object.__setattr__(self, "b", _clean_scalar(self.b, "b"))

    kind = "two-param"

    def lower_bound(self) -> float:
        return self.a + self.b - 1.0

    def shifted_args(self, z):
        a, b = self.a, self.b
        return ((1.0, z + 1.0), (1.0, z - a - b + 1.0),
                (-1.0, z - a + 1.0), (-1.0, z - b + 1.0))

    def kernel(self, t):
        # (1 - e^-at)(1 - e^-bt), exact product of nonnegatives
        return np.expm1(-self.a * t) * np.expm1(-self.b * t)

    def kernel_scale(self, t):
        return np.abs(self.kernel(t))

    def params_dict(self):
        return {"a": self.a, "b": self.b}


@dataclass(frozen=True)
class MultiParam:
    """f(z) = G(z+1)^(k-1) G(z-A+1) / prod_i G(z-a_i+1), A = sum a_i, z > A-1."""

    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", _clean_params(self.a, "a"))

    kind = "multi-param"

    @property
    def abar(self) -> float:
        return float(sum(self.a))

    def lower_bound(self) -> float:
        return self.abar - 1.0

    def shifted_args(self, z):
        k = len(self.a)
        terms = [(float(k - 1), z + 1.0), (1.0, z - self.abar + 1.0)]
        terms.extend((-1.0, z - ai + 1.0) for ai in self.a)
        return tuple(terms)

    def kernel(self, t):
        # (k-1) + e^(At) - sum e^(a_i t); zero identically when fewer than
        # two entries are positive.
        scalar = np.ndim(t) == 0
        t = np.atleast_1d(np.asarray(t, dtype=float))
        if sum(1 for ai in self.a if ai > 0.0) <= 1:
            out = np.zeros_like(t)
            return float(out[0]) if scalar else out
        abar = self.abar
        with np.errstate(over="ignore"):
            small = abar * t <= 700.0
            ts = np.where(small, t, 0.0)
            out = np.expm1(abar * ts) - sum(np.expm1(ai * ts) for ai in self.a)
            out = np.asarray(out, dtype=float)
            if not small.all():
                tb = t[~small]
                b2 = 1.0 - sum(np.exp((ai - abar) * tb) for ai in self.a)
                big = len(self.a) - 1.0 + np.exp(abar * tb) * b2
                out[~small] = np.where(np.isnan(big), np.inf, big)
        return float(out[0]) if scalar else out

    def kernel_scale(self, t):
        t = np.asarray(t, dtype=float)
        with np.errstate(over="ignore"):
            s = np.abs(np.expm1(np.minimum(self.abar * t, 705.0)))
            s = s + sum(np.abs(np.expm1(ai * t)) for ai in self.a)
        return s if t.ndim else float(s)

    def params_dict(self):
        return {"a": list(self.a)}


@dataclass(frozen=True)
class Majorized:
    """f(z) = prod G(z-a_i) / prod G(z-b_i) for z > max(entries).

    Nonnegativity of the kernel requires the b entries to be weakly
    submajorized by the a entries (checked by the certification module,
    not at construction, so diagnostic scans can run on violating pairs).
    """

    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", _clean_params(self.a, "a"))
        object.__setattr__(self, "b", _clean_params(self.b, "b"))
        if len(self.a) != len(self.b):
            raise UsageError(
                f"a and b must have equal length, got {len(self.a)} and {len(self.b)}")

    kind = "majorized"

    def lower_bound(self) -> float:
        return max(max(self.a), max(self.b))

    def shifted_args(self, z):
        terms = [(1.0, z - ai) for ai in self.a]
        terms.extend((-1.0, z - bi) for bi in self.b)
        return tuple(terms)

    def _merged_exponents(self):
        coefs: dict[float, float] = {}
        for ai in self.a:
            coefs[ai] = coefs.get(ai, 0.0) + 1.0
        for bi in self.b:
            coefs[bi] = coefs.get(bi, 0.0) - 1.0
        return sorted(((e, c) for e, c in coefs.items() if c != 0.0))

    def kernel(self, t):
        # sum e^(a_i t) - sum e^(b_i t), with exactly cancelling exponents
        # merged away first so the overflow branch has a defined sign.
        scalar = np.ndim(t) == 0
        t = np.atleast_1d(np.asarray(t, dtype=float))
        terms = self._merged_exponents()
        if not terms:
            out = np.zeros_like(t)
            return float(out[0]) if scalar else out
        top, top_coef = terms[-1]
        with np.errstate(over="ignore"):
            small = top * t <= 700.0
            ts = np.where(small, t, 0.0)
            out = sum(c * np.expm1(e * ts) for e, c in terms)
            out = np.asarray(out, dtype=float)
            if not small.all():
                out[~small] = math.copysign(math.inf, top_coef)
        return float(out[0]) if scalar else out

    def kernel_scale(self, t):
        t = np.asarray(t, dtype=float)
        with np.errstate(over="ignore"):
            s = sum(np.abs(np.expm1(np.minimum(e * t, 705.0)))
                    for e in (*self.a, *self.b))
        return s if t.ndim else float(s)

    def params_dict(self):
        return {"a": list(self.a), "b": list(self.b)}


@dataclass(frozen=True)
class Symmetric:
    """f(z) = G(z+a) G(z-a) / G(z)^2 for z > a."""

    a: float

    def __post_init__(self):
        object.__setattr__(self, "a", _clean_scalar(self.a, "a"))

    kind = "symmetric"

    def lower_bound(self) -> float:
        return self.a

    def shifted_args(self, z):
        return ((1.0, z + self.a), (1.0, z - self.a), (-2.0, z))

    def kernel(self, t):
        # (e^at - 1)(1 - e^-at)
        with np.errstate(over="ignore"):
            return np.expm1(self.a * t) * -np.expm1(-self.a * t)

    def kernel_scale(self, t):
        return np.abs(self.kernel(t))

    def params_dict(self):
        return {"a": self.a}


RatioFamily = Union[TwoParam, MultiParam, Majorized, Symmetric]

_FAMILIES = (TwoParam, MultiParam, Majorized, Symmetric)


def _check_family(fam) -> None:
    if not isinstance(fam, _FAMILIES):
        raise UsageError(f"not a ratio family: {fam!r}")


def _check_z(fam, z) -> None:
    bound = fam.lower_bound()
    arr = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"z must be finite, got {z!r}")
    if np.any(arr <= bound):
        raise DomainError(
            f"z must exceed the domain lower bound {bound!r} for {fam!r}, got {z!r}")


@dataclass(frozen=True)
class LogDerivResult:
    """One evaluation of (-1)^n (ln f)^(n)(z) by a named route."""

    order: int
    z: float
    signed_value: float
    path: str
    err_estimate: float


def domain_lower_bound(fam: RatioFamily) -> float:
    """Infimum of the z-domain on which the family is defined."""
    _check_family(fam)
    return fam.lower_bound()


def kernel_value(fam: RatioFamily, t):
    """Kernel factor K(t) of the family's Laplace representation, t >= 0.

    Computed in a scaled form so that large arguments never overflow
    intermediates; a value of +inf means the kernel is genuinely unbounded
    there (it grows exponentially for the unbounded families).
    """
    _check_family(fam)
    arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0.0):
        raise DomainError(f"t must be finite and >= 0, got {t!r}")
    return fam.kernel(t)


def log_f(fam: RatioFamily, z):
    """ln f(z) as a signed combination of log-gamma values; z above the bound."""
    _check_family(fam)
    _check_z(fam, z)
    res = None
    for coef, arg in fam.shifted_args(np.asarray(z, dtype=float) if np.ndim(z) else z):
        term = coef * specfun.log_gamma(arg)
        res = term if res is None else res + term
    return res


def log_deriv_polygamma(fam: RatioFamily, z, n: int) -> LogDerivResult:
    """(-1)^n (ln f)^(n)(z) via the polygamma series route.

    The value is the signed combination sum_j c_j psi^(n-1)(arg_j) times
    (-1)^n, evaluated with the recurrence-plus-series functions of
    :mod:`cmgamma.specfun`.  The error estimate is a conservative roundoff
    model proportional to the sum of term magnitudes, which is what limits
    accuracy when the combination cancels heavily.
    """
    _check_family(fam)
    _validate_order(n)
    _check_z(fam, z)
    z = float(z)
    acc = 0.0
    mag = 0.0
    for coef, arg in fam.shifted_args(z):
        if coef == 0.0:
            continue
        val = specfun.digamma(arg) if n == 1 else specfun.polygamma(n - 1, arg)
        acc += coef * val
        mag += abs(coef * val)
    sign = 1.0 if n % 2 == 0 else -1.0
    return LogDerivResult(order=n, z=z, signed_value=sign * acc,
                          path="polygamma", err_estimate=_POLY_EPS * mag)


def log_deriv_quadrature(fam: RatioFamily, z, n: int,
                         opts: QuadOptions | None = None) -> LogDerivResult:
    """(-1)^n (ln f)^(n)(z) via the Laplace integral route.

    The integrand combines weight and kernel into a signed sum of decaying
    exponentials whose coefficients cancel at t = 0; it is evaluated with
    ``expm1`` relative to the slowest exponent, which avoids both the
    cancellation near 0 and any overflow at large t.  Non-convergence of
    the adaptive rule propagates as :class:`~cmgamma.errors.ConvergenceError`.
    """
    _check_family(fam)
    _validate_order(n)
    _check_z(fam, z)
    z = float(z)

    merged: dict[float, float] = {}
    for coef, arg in fam.shifted_args(z):
        merged[arg] = merged.get(arg, 0.0) + coef
    terms = sorted((mu, c) for mu, c in merged.items() if c != 0.0)
    if not terms:
        return LogDerivResult(order=n, z=z, signed_value=0.0,
                              path="quadrature", err_estimate=0.0)
    mu0 = terms[0][0]
    nus = np.array([mu - mu0 for mu, _ in terms])
    coefs = np.array([c for _, c in terms])
    pol = n - 1

    def integrand(t):
        t = np.asarray(t, dtype=float)
        acc = np.zeros_like(t)
        for nu, c in zip(nus, coefs):
            if nu > 0.0:
                acc += c * np.expm1(-nu * t)
        num = np.exp(-mu0 * t) * acc
        if pol:
            num = num * t ** pol
        return num / -np.expm1(-t)

    decay = z - fam.lower_bound()
    res = integrate_half_line(integrand, decay, opts)
    return LogDerivResult(order=n, z=z, signed_value=res.value,
                          path="quadrature", err_estimate=res.err_estimate)


def _validate_order(n) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise UsageError(f"derivative order must be an integer, got {n!r}")
    if n < 1 or n > N_MAX_ORDER:
        raise UsageError(
            f"derivative order must be in [1, {N_MAX_ORDER}], got {n}")
