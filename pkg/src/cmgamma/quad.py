"""Adaptive quadrature on the open half line (0, inf).

The integrators here target Laplace-type integrands: finite at 0+,
eventually dominated by an exponential ``exp(-decay_rate * t)``.  The half
line is split at a configurable point.  Each side uses a tanh-sinh
(double-exponential) rule whose nodes cluster toward, but never touch, the
interval endpoints, so integrands may be singular in a removable way at 0
and are simply never sampled there.  The unbounded side is first mapped to
(0, 1] with ``u = exp(-decay_rate (t - split))``; under that substitution a
pure exponential tail becomes a constant, and slower polynomial factors
turn into integrable logarithmic endpoint behavior that the
double-exponential rule absorbs.  Nodes past the point where the mapped
weight underflows contribute nothing, which truncates the tail
automatically at the tolerance scale.

Integrands must accept numpy arrays (nodes are evaluated in level-sized
batches).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError, UsageError

__all__ = ["QuadOptions", "QuadResult", "integrate_half_line"]

# Largest |tau| used by the double-exponential rule.  At this abscissa the
# endpoint offset is ~1e-262: still a normal double, never rounding a node
# onto the endpoint itself.
_TAU_MAX = 5.95

_EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class QuadOptions:
    """Tolerances and refinement limits for the half-line integrator."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    split_point: float = 1.0
    max_levels: int = 12

    def validate(self) -> None:
        if not (math.isfinite(self.rel_tol) and self.rel_tol > 0):
            raise UsageError(f"rel_tol must be positive, got {self.rel_tol!r}")
        if not (math.isfinite(self.abs_tol) and self.abs_tol >= 0):
            raise UsageError(f"abs_tol must be nonnegative, got {self.abs_tol!r}")
        if not (math.isfinite(self.split_point) and self.split_point > 0):
            raise UsageError(
                f"split_point must be positive, got {self.split_point!r}")
        if self.max_levels < 2:
            raise UsageError(f"max_levels must be >= 2, got {self.max_levels!r}")


@dataclass(frozen=True)
class QuadResult:
    """Value, error estimate, and evaluation count of one integration."""

    value: float
    err_estimate: float
    evaluations: int


def _de_nodes(h: float, odd_only: bool):
    """Abscissas tau > 0 plus weights/offsets of the double-exponential rule.

    Returns (delta, weight_factor) for the positive tau values, plus the
    center weight when odd_only is False.  delta is the node's distance to
    the nearer endpoint expressed as a fraction of the half width; the
    weight factor is per unit half-width.
    """
    if odd_only:
        taus = np.arange(1.0, _TAU_MAX / h, 2.0) * h
    else:
        taus = np.arange(1.0, _TAU_MAX / h, 1.0) * h
    g = 0.5 * math.pi * np.sinh(taus)
    q = np.exp(-2.0 * g)
    delta = 2.0 * q / (1.0 + q)
    weight = 0.5 * math.pi * np.cosh(taus) * 4.0 * q / (1.0 + q) ** 2
    return delta, weight


def _tanh_sinh_open(f: Callable, a: float, b: float, rel_tol: float,
                    abs_tol: float, max_levels: int):
    """Tanh-sinh rule on the open interval (a, b), never sampling a or b."""
    d = 0.5 * (b - a)
    c = a + d
    evals = 0

    def eval_batch(delta):
        nonlocal evals
        x_lo = a + d * delta
        x_hi = b - d * delta
        vals_lo = np.asarray(f(x_lo), dtype=float)
        vals_hi = np.asarray(f(x_hi), dtype=float)
        evals += 2 * delta.size
        for x, v in ((x_lo, vals_lo), (x_hi, vals_hi)):
            bad = ~np.isfinite(v)
            if bad.any():
                raise DomainError(
                    f"integrand not finite at node x={x[bad][0]!r}")
        return vals_lo, vals_hi

    # level 0, h = 1
    delta, weight = _de_nodes(1.0, odd_only=False)
    lo, hi = eval_batch(delta)
    center = np.asarray(f(np.array([c])), dtype=float)
    evals += 1
    if not np.isfinite(center[0]):
        raise DomainError(f"integrand not finite at node x={c!r}")
    total = 0.5 * math.pi * center[0] + float(np.dot(weight, lo + hi))
    value = d * total
    prev = value
    err = math.inf

    h = 1.0
    for level in range(1, max_levels + 1):
        h *= 0.5
        delta, weight = _de_nodes(h, odd_only=True)
        lo, hi = eval_batch(delta)
        value = 0.5 * prev + d * h * float(np.dot(weight, lo + hi))
        err = abs(value - prev)
        tol = max(rel_tol * abs(value), abs_tol)
        if err <= tol and (level >= 2 or err == 0.0):
            return value, max(err, _EPS * abs(value)), evals, True
        prev = value
    return value, err, evals, False


def integrate_half_line(f: Callable, decay_rate: float,
                        opts: QuadOptions | None = None) -> QuadResult:
    """Integrate f over (0, inf) for integrands with exponential decay.

    Parameters
    ----------
    f : callable
        Vectorized integrand; must be finite on (0, inf) including the
        limit t -> 0+.  It is never evaluated at t = 0.
    decay_rate : float
        Positive rate r such that ``f(t) = O(exp(-r t))`` as t -> inf,
        possibly times a polynomial.  Used to map the tail; a conservative
        (small) value is safe.
    opts : QuadOptions, optional
        Tolerances and refinement limits.

    Returns
    -------
    QuadResult
        value, err_estimate, and the number of integrand evaluations.

    Raises
    ------
    UsageError
        If ``decay_rate <= 0`` or options are invalid.
    ConvergenceError
        If either side fails to converge within ``max_levels``; the
        exception carries the best value and error estimate found.
    DomainError
        If the integrand returns a non-finite value at a node.
    """
    if opts is None:
        opts = QuadOptions()
    opts.validate()
    if not (math.isfinite(decay_rate) and decay_rate > 0.0):
        raise UsageError(
            f"decay_rate must be positive and finite, got {decay_rate!r}")

    s = opts.split_point
    lam = decay_rate

    val_a, err_a, ev_a, ok_a = _tanh_sinh_open(
        f, 0.0, s, opts.rel_tol, 0.5 * opts.abs_tol, opts.max_levels)

    def mapped_tail(u):
        t = s - np.log(u) / lam
        vals = np.asarray(f(t), dtype=float)
        bad = ~np.isfinite(vals)
        if bad.any():
            raise DomainError(f"integrand not finite at node x={t[bad][0]!r}")
        return vals / (lam * u)

    val_b, err_b, ev_b, ok_b = _tanh_sinh_open(
        mapped_tail, 0.0, 1.0, opts.rel_tol, 0.5 * opts.abs_tol,
        opts.max_levels)

    value = val_a + val_b
    err = err_a + err_b
    evals = ev_a + ev_b
    if not (ok_a and ok_b):
        raise ConvergenceError(
            f"no convergence within {opts.max_levels} refinement levels "
            f"(best value {value!r}, err estimate {err!r})",
            value=value, err_estimate=err, evaluations=evals)
    return QuadResult(value=value, err_estimate=err, evaluations=evals)
