"""Registry of gamma-function inequalities with log-space margins.

Each registered case turns one inequality into a margin function:

* claims of the form LHS >= RHS report ``margin = ln LHS - ln RHS``;
* claims of the form LHS <= RHS report ``margin = ln RHS - ln LHS``;

so a nonnegative margin always means "holds", and two-sided statements
appear as separate ``_LB`` / ``_UB`` cases.  Margins are computed through
``log_gamma`` throughout, never through raw gamma ratios, so points deep
inside a domain cannot overflow.  A record "holds" when its margin clears
``-HOLDS_TOL``, a slack that absorbs roundoff on equality boundaries.

Cases carry ``kind="claim"`` or ``kind="baseline"``: baselines are known
reference bounds registered for tightness comparison and are only
meaningful on their own stated domains.

Drivers: :func:`margin` (one point), :func:`sweep` (a point grid, with
out-of-domain points skipped), and :func:`tightness_compare` (rank the
right-hand sides of bounds sharing one left-hand expression).

Parameters are passed as a flat sequence of reals.  Cases whose
parameters are entry lists (``MULTI_GE1``, ``MAJOR_GE1``) read the flat
sequence as the concatenated lists; for ``MAJOR_GE1`` the two lists must
have equal length, so the flat vector splits evenly in half.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

from .cm_certify import weak_submajorization_failure
from .errors import DomainError, UsageError
from .kernels import Majorized, MultiParam, Symmetric, TwoParam, log_f
from .specfun import log_beta, log_gamma as _lg, reflection_product

__all__ = [
    "HOLDS_TOL",
    "InequalityCase",
    "SweepRecord",
    "TightnessResult",
    "registry_list",
    "get_case",
    "margin",
    "sweep",
    "tightness_compare",
]

HOLDS_TOL = 1e-9

_LN2 = math.log(2.0)
_LNPI = math.log(math.pi)
_LN2PI = math.log(2.0 * math.pi)


@dataclass(frozen=True)
class InequalityCase:
    """One inequality: identity, domain, and log-space margin.

    ``direction`` is the claim as written ("ge": LHS >= RHS, "le":
    LHS <= RHS); the margin is oriented so nonnegative always means the
    claim holds.  ``lhs_key`` labels the left-hand expression; cases
    sharing a key (and direction, and parameter layout) can be ranked by
    :func:`tightness_compare`.  ``source`` states the inequality in plain
    text.
    """

    id: str
    kind: str
    direction: str
    param_kinds: tuple
    param_names: tuple
    point_names: tuple
    lhs_key: str
    source: str
    _check_params: object = field(repr=False)
    _point_rules: tuple = field(repr=False)
    _sides_fn: object = field(repr=False)
    _sampler_fn: object = field(repr=False)

    # -- parameter plumbing ------------------------------------------------

    def split_params(self, params) -> tuple:
        """Flat parameter sequence -> per-name values (lists kept whole)."""
        if isinstance(params, (str, bytes)):
            raise UsageError(f"{self.id}: params must be a sequence of reals")
        try:
            flat = tuple(float(v) for v in params)
        except (TypeError, ValueError) as exc:
            raise UsageError(
                f"{self.id}: params must be a flat sequence of reals") from exc
        kinds = self.param_kinds
        if "v" not in kinds:
            if len(flat) != len(kinds):
                raise UsageError(
                    f"{self.id} takes {len(kinds)} parameter(s) "
                    f"{'/'.join(self.param_names)}, got {len(flat)}")
            return flat
        if kinds == ("v",):
            if not flat:
                raise UsageError(f"{self.id} needs at least one entry")
            return (flat,)
        # two entry lists, flattened back to back
        if not flat or len(flat) % 2:
            raise UsageError(
                f"{self.id} takes two equal-length entry lists flattened "
                f"together, got {len(flat)} value(s)")
        half = len(flat) // 2
        return (flat[:half], flat[half:])

    def params_ok(self, params):
        """None when the parameters are admissible, else the reason."""
        return self._check_params(self.split_params(params))

    # -- domain ------------------------------------------------------------

    def _columns(self, pts):
        arr = np.asarray(pts, dtype=float)
        if arr.ndim == 1:
            arr = arr[:, None] if len(self.point_names) == 1 else arr[None, :]
        if arr.ndim != 2 or arr.shape[1] != len(self.point_names):
            raise UsageError(
                f"{self.id} points have {len(self.point_names)} "
                f"coordinate(s) {'/'.join(self.point_names)}")
        return tuple(arr[:, j] for j in range(arr.shape[1]))

    def domain_mask(self, params, pts) -> np.ndarray:
        """Vectorized domain predicate; never errors on point values."""
        split = self.split_params(params)
        reason = self._check_params(split)
        if reason is not None:
            raise DomainError(f"{self.id}: {reason}")
        cols = self._columns(pts)
        mask = np.ones(cols[0].shape, dtype=bool)
        for col in cols:
            mask &= np.isfinite(col)
        with np.errstate(all="ignore"):
            for _, rule in self._point_rules:
                mask &= np.asarray(rule(split, cols), dtype=bool)
        return mask

    def domain_violation(self, params, point):
        """None when (params, point) is in the domain, else the first
        violated constraint, stated."""
        split = self.split_params(params)
        reason = self._check_params(split)
        if reason is not None:
            return reason
        cols = self._columns([point])
        if not all(math.isfinite(c[0]) for c in cols):
            return "point coordinates must be finite"
        with np.errstate(all="ignore"):
            for text, rule in self._point_rules:
                if not bool(np.asarray(rule(split, cols), dtype=bool)[0]):
                    return f"requires {text}"
        return None

    # -- evaluation ---------------------------------------------------------

    def sides(self, params, pts):
        """(lhs_log, rhs_log) arrays at in-domain points (not re-checked)."""
        split = self.split_params(params)
        cols = self._columns(pts)
        lhs, rhs = self._sides_fn(split, cols)
        return np.asarray(lhs, dtype=float), np.asarray(rhs, dtype=float)

    def margin_values(self, params, pts) -> np.ndarray:
        lhs, rhs = self.sides(params, pts)
        return lhs - rhs if self.direction == "ge" else rhs - lhs

    def sample_points(self, rng, params, n: int) -> np.ndarray:
        """Draw n in-domain points, shape (n, len(point_names))."""
        split = self.split_params(params)
        reason = self._check_params(split)
        if reason is not None:
            raise DomainError(f"{self.id}: {reason}")
        if n < 1:
            raise UsageError(f"sample count must be >= 1, got {n!r}")
        pts = self._sampler_fn(rng, split, int(n))
        return np.asarray(pts, dtype=float).reshape(n, len(self.point_names))


@dataclass(frozen=True)
class SweepRecord:
    """Margin of one case at one in-domain point."""

    id: str
    params: tuple
    point: tuple
    lhs_log: float
    rhs_log: float
    margin: float
    holds: bool

    def to_dict(self) -> dict:
        return {"id": self.id, "params": list(self.params),
                "point": list(self.point), "lhs_log": self.lhs_log,
                "rhs_log": self.rhs_log, "margin": self.margin,
                "holds": self.holds}


@dataclass(frozen=True)
class TightnessResult:
    """Bounds sharing one LHS, ranked tightest first at a single point."""

    lhs_key: str
    direction: str
    params: tuple
    point: tuple
    lhs_log: float
    entries: tuple  # ((id, rhs_log, rhs), ...) tightest first

    @property
    def tightest_id(self) -> str:
        return self.entries[0][0]

    def to_dict(self) -> dict:
        return {"lhs_key": self.lhs_key, "direction": self.direction,
                "params": list(self.params), "point": list(self.point),
                "lhs_log": self.lhs_log, "tightest": self.tightest_id,
                "entries": [{"id": i, "rhs_log": rl, "rhs": r}
                            for i, rl, r in self.entries]}


# -- parameter validation helpers -------------------------------------------

def _finite(*vals) -> bool:
    return all(math.isfinite(v) for v in vals)


def _scalars(*rules):
    """Combine (text, pred(values...)) rules into one params checker."""
    def check(split):
        if not _finite(*split):
            return "parameters must be finite"
        for text, pred in rules:
            if not pred(*split):
                return f"requires {text}"
        return None
    return check


def _entry_list_check(split):
    (a,) = split
    if not _finite(*a):
        return "entries must be finite"
    if any(v < 0 for v in a):
        return "requires every entry >= 0"
    return None


def _major_check(split):
    a, b = split
    if not (_finite(*a) and _finite(*b)):
        return "entries must be finite"
    if any(v < 0 for v in a) or any(v < 0 for v in b):
        return "requires every entry >= 0"
    fail = weak_submajorization_failure(a, b)
    if fail is not None:
        k, sb, sa = fail
        return (f"requires decreasing-order partial sums of b to stay "
                f"within those of a; top-{k} sums are {sb!r} > {sa!r}")
    ta, tb = math.fsum(a), math.fsum(b)
    if abs(ta - tb) > 1e-12 * max(1.0, abs(ta)):
        return f"requires equal totals, got sum(a)={ta!r}, sum(b)={tb!r}"
    return None


# -- point samplers ----------------------------------------------------------

def _spread(rng, n, lo=-3.0, hi=2.0):
    # log-uniform offsets: dense near a boundary, sparse far from it
    return 10.0 ** rng.uniform(lo, hi, size=n)


def _z_above(bound_fn):
    def sampler(rng, s, n):
        return (bound_fn(s) + _spread(rng, n))[:, None]
    return sampler


def _pair_above(bound_fn, diag_frac=0.0):
    def sampler(rng, s, n):
        x = bound_fn(s) + _spread(rng, n)
        gap = _spread(rng, n)
        if diag_frac > 0.0:
            gap[rng.random(n) < diag_frac] = 0.0
        return np.column_stack([x, x + gap])
    return sampler


def _boxed(lo, hi, dim):
    def sampler(rng, s, n):
        return 10.0 ** rng.uniform(lo, hi, size=(n, dim))
    return sampler


# -- shared side expressions --------------------------------------------------

def _zeros(c):
    return np.zeros_like(c[0])


def _binom_core_lhs(a, b, z):
    # ln of Gamma(z-a-b+1) / (Gamma(z-a+1) Gamma(z-b+1))
    return _lg(z - a - b + 1.0) - _lg(z - a + 1.0) - _lg(z - b + 1.0)


def _gamma_square_lhs(a, z):
    # ln of Gamma(z) Gamma(z-2a) / Gamma(z-a)^2
    return _lg(z) + _lg(z - 2.0 * a) - 2.0 * _lg(z - a)


def _build_registry():
    cases = []

    def add(**kw):
        cases.append(InequalityCase(**kw))

    # ---- ratio families are >= 1 on their domains --------------------------

    add(id="INQ1", kind="claim", direction="ge",
        param_kinds=("s", "s"), param_names=("a", "b"), point_names=("z",),
        lhs_key="two-param-ratio",
        source="Gamma(z+1)Gamma(z-a-b+1) / (Gamma(z-a+1)Gamma(z-b+1)) >= 1 "
               "for z > a+b-1, a,b >= 0",
        _check_params=_scalars(("a >= 0 and b >= 0",
                                lambda a, b: a >= 0 and b >= 0)),
        _point_rules=(("z > a+b-1",
                       lambda s, c: c[0] > s[0] + s[1] - 1.0),),
        _sides_fn=lambda s, c: (log_f(TwoParam(s[0], s[1]), c[0]), _zeros(c)),
        _sampler_fn=_z_above(lambda s: s[0] + s[1] - 1.0))

    add(id="MULTI_GE1", kind="claim", direction="ge",
        param_kinds=("v",), param_names=("a[]",), point_names=("z",),
        lhs_key="multi-ratio",
        source="Gamma(z+1)^(k-1) Gamma(z-abar+1) / prod Gamma(z-a_i+1) >= 1 "
               "for z > abar-1, entries a_i >= 0, abar = sum a_i",
        _check_params=_entry_list_check,
        _point_rules=(("z > abar-1",
                       lambda s, c: c[0] > math.fsum(s[0]) - 1.0),),
        _sides_fn=lambda s, c: (log_f(MultiParam(s[0]), c[0]), _zeros(c)),
        _sampler_fn=_z_above(lambda s: math.fsum(s[0]) - 1.0))

    add(id="MAJOR_GE1", kind="claim", direction="ge",
        param_kinds=("v", "v"), param_names=("a[]", "b[]"),
        point_names=("z",), lhs_key="major-ratio",
        source="prod Gamma(z-a_i) / prod Gamma(z-b_i) >= 1 for "
               "z > max(entries), when the decreasing-order partial sums "
               "of b never exceed those of a and the totals are equal",
        _check_params=_major_check,
        _point_rules=(("z > max(a, b)",
                       lambda s, c: c[0] > max(max(s[0]), max(s[1]))),),
        _sides_fn=lambda s, c: (log_f(Majorized(s[0], s[1]), c[0]),
                                _zeros(c)),
        _sampler_fn=_z_above(lambda s: max(max(s[0]), max(s[1]))))

    # ---- two-variable mean comparisons -------------------------------------

    add(id="MEAN2", kind="claim", direction="ge",
        param_kinds=(), param_names=(), point_names=("x", "y"),
        lhs_key="mean2-shift-ratio",
        source="Gamma(x+1)Gamma(y+1) / Gamma((x+y)/2+1)^2 >= 1 "
               "for x,y >= 0",
        _check_params=_scalars(),
        _point_rules=(("x >= 0", lambda s, c: c[0] >= 0.0),
                      ("y >= 0", lambda s, c: c[1] >= 0.0)),
        _sides_fn=lambda s, c: (
            _lg(c[0] + 1.0) + _lg(c[1] + 1.0)
            - 2.0 * _lg((c[0] + c[1]) / 2.0 + 1.0),
            _zeros(c)),
        _sampler_fn=_boxed(-2.0, 1.5, 2))

    add(id="MEAN2_RATIO", kind="claim", direction="ge",
        param_kinds=(), param_names=(), point_names=("x", "y"),
        lhs_key="mean2-ratio",
        source="Gamma(x)Gamma(y) / Gamma((x+y)/2)^2 >= (x+y)^2 / (4xy) "
               "for x,y > 0",
        _check_params=_scalars(),
        _point_rules=(("x > 0", lambda s, c: c[0] > 0.0),
                      ("y > 0", lambda s, c: c[1] > 0.0)),
        _sides_fn=lambda s, c: (
            _lg(c[0]) + _lg(c[1]) - 2.0 * _lg((c[0] + c[1]) / 2.0),
            2.0 * np.log(0.5 * (c[0] + c[1])) - np.log(c[0]) - np.log(c[1])),
        _sampler_fn=_boxed(-2.0, 1.5, 2))

    # ---- symmetric-shift family and its sandwiches --------------------------

    add(id="SYM_GE1", kind="claim", direction="ge",
        param_kinds=("s",), param_names=("a",), point_names=("z",),
        lhs_key="sym-ratio",
        source="Gamma(z+a)Gamma(z-a) / Gamma(z)^2 >= 1 for z > a >= 0",
        _check_params=_scalars(("a >= 0", lambda a: a >= 0)),
        _point_rules=(("z > a", lambda s, c: c[0] > s[0]),),
        _sides_fn=lambda s, c: (log_f(Symmetric(s[0]), c[0]), _zeros(c)),
        _sampler_fn=_z_above(lambda s: s[0]))

    add(id="INQ3_LB", kind="claim", direction="ge",
        param_kinds=("s",), param_names=("a",), point_names=("z",),
        lhs_key="sym-shift1-ratio",
        source="Gamma(z+a+1)Gamma(z-a+1) / Gamma(z+1)^2 >= 1 "
               "for z >= 0, 0 <= a < 1",
        _check_params=_scalars(("0 <= a < 1", lambda a: 0 <= a < 1)),
        _point_rules=(("z >= 0", lambda s, c: c[0] >= 0.0),),
        _sides_fn=lambda s, c: (
            _lg(c[0] + s[0] + 1.0) + _lg(c[0] - s[0] + 1.0)
            - 2.0 * _lg(c[0] + 1.0),
            _zeros(c)),
        _sampler_fn=_z_above(lambda s: 0.0))

    add(id="INQ3_UB", kind="claim", direction="le",
        param_kinds=("s",), param_names=("a",), point_names=("z",),
        lhs_key="sym-shift1-ratio",
        source="Gamma(z+a+1)Gamma(z-a+1) / Gamma(z+1)^2 <= "
               "Gamma(1-a)Gamma(1+a) for z >= 0, 0 <= a < 1 "
               "(equality at z = 0)",
        _check_params=_scalars(("0 <= a < 1", lambda a: 0 <= a < 1)),
        _point_rules=(("z >= 0", lambda s, c: c[0] >= 0.0),),
        _sides_fn=lambda s, c: (
            _lg(c[0] + s[0] + 1.0) + _lg(c[0] - s[0] + 1.0)
            - 2.0 * _lg(c[0] + 1.0),
            np.full_like(c[0], _lg(1.0 - s[0]) + _lg(1.0 + s[0]))),
        _sampler_fn=_z_above(lambda s: 0.0))

    add(id="SYM_SANDWICH_LB", kind="claim", direction="ge",
        param_kinds=("s",), param_names=("a",), point_names=("z",),
        lhs_key="sym-ratio",
        source="Gamma(z+a)Gamma(z-a) / Gamma(z)^2 >= z^2 / (z^2 - a^2) "
               "for z > a, 0 < a < 1",
        _check_params=_scalars(("0 < a < 1", lambda a: 0 < a < 1)),
        _point_rules=(("z > a", lambda s, c: c[0] > s[0]),),
        _sides_fn=lambda s, c: (
            log_f(Symmetric(s[0]), c[0]),
            2.0 * np.log(c[0]) - np.log(c[0] - s[0]) - np.log(c[0] + s[0])),
        _sampler_fn=_z_above(lambda s: s[0]))

    add(id="SYM_SANDWICH_UB", kind="claim", direction="le",
        param_kinds=("s",), param_names=("a",), point_names=("z",),
        lhs_key="sym-ratio",
        source="Gamma(z+a)Gamma(z-a) / Gamma(z)^2 <= "
               "pi a z^2 / (sin(pi a) (z^2 - a^2)) for z > a, 0 < a < 1",
        _check_params=_scalars(("0 < a < 1", lambda a: 0 < a < 1)),
        _point_rules=(("z > a", lambda s, c: c[0] > s[0]),),
        _sides_fn=lambda s, c: (
            log_f(Symmetric(s[0]), c[0]),
            np.log(reflection_product(s[0])) + 2.0 * np.log(c[0])
            - np.log(c[0] - s[0]) - np.log(c[0] + s[0])),
        _sampler_fn=_z_above(lambda s: s[0]))

    add(id="HALF_SANDWICH_LB", kind="claim", direction="ge",
        param_kinds=(), param_names=(), point_names=("z",),
        lhs_key="half-ratio",
        source="Gamma(z+1/2)Gamma(z-1/2) / Gamma(z)^2 >= 4z^2 / (4z^2 - 1) "
               "for z > 1/2",
        _check_params=_scalars(),
        _point_rules=(("z > 1/2", lambda s, c: c[0] > 0.5),),
        _sides_fn=lambda s, c: (
            log_f(Symmetric(0.5), c[0]),
            2.0 * np.log(2.0 * c[0]) - np.log(2.0 * c[0] - 1.0)
            - np.log(2.0 * c[0] + 1.0)),
        _sampler_fn=_z_above(lambda s: 0.5))

    add(id="HALF_SANDWICH_UB", kind="claim", direction="le",
        param_kinds=(), param_names=(), point_names=("z",),
        lhs_key="half-ratio",
        source="Gamma(z+1/2)Gamma(z-1/2) / Gamma(z)^2 <= "
               "2 pi z^2 / (4z^2 - 1) for z > 1/2",
        _check_params=_scalars(),
        _point_rules=(("z > 1/2", lambda s, c: c[0] > 0.5),),
        _sides_fn=lambda s, c: (
            log_f(Symmetric(0.5), c[0]),
            _LN2PI + 2.0 * np.log(c[0]) - np.log(2.0 * c[0] - 1.0)
            - np.log(2.0 * c[0] + 1.0)),
        _sampler_fn=_z_above(lambda s: 0.5))

    add(id="WALLIS_LB", kind="claim", direction="ge",
        param_kinds=(), param_names=(), point_names=("z",),
        lhs_key="wallis-ratio",
        source="Gamma(z+1/2) / Gamma(z+1) >= sqrt(2 / (2z+1)) for z >= 0",
        _check_params=_scalars(),
        _point_rules=(("z >= 0", lambda s, c: c[0] >= 0.0),),
        _sides_fn=lambda s, c: (
            _lg(c[0] + 0.5) - _lg(c[0] + 1.0),
            0.5 * (_LN2 - np.log(2.0 * c[0] + 1.0))),
        _sampler_fn=_z_above(lambda s: 0.0))

    add(id="WALLIS_UB", kind="claim", direction="le",
        param_kinds=(), param_names=(), point_names=("z",),
        lhs_key="wallis-ratio",
        source="Gamma(z+1/2) / Gamma(z+1) <= sqrt(pi / (2z+1)) for z >= 0",
        _check_params=_scalars(),
        _point_rules=(("z >= 0", lambda s, c: c[0] >= 0.0),),
        _sides_fn=lambda s, c: (
            _lg(c[0] + 0.5) - _lg(c[0] + 1.0),
            0.5 * (_LNPI - np.log(2.0 * c[0] + 1.0))),
        _sampler_fn=_z_above(lambda s: 0.0))

    add(id="WALLIS_SHIFT_LB", kind="claim", direction="ge",
        param_kinds=(), param_names=(), point_names=("z",),
        lhs_key="wallis-shift-ratio",
        source="Gamma(z+1/2) / Gamma(z) >= sqrt(2 z^2 / (2z+1)) for z > 0",
        _check_params=_scalars(),
        _point_rules=(("z > 0", lambda s, c: c[0] > 0.0),),
        _sides_fn=lambda s, c: (
            _lg(c[0] + 0.5) - _lg(c[0]),
            0.5 * (_LN2 + 2.0 * np.log(c[0]) - np.log(2.0 * c[0] + 1.0))),
        _sampler_fn=_z_above(lambda s: 0.0))

    add(id="WALLIS_SHIFT_UB", kind="claim", direction="le",
        param_kinds=(), param_names=(), point_names=("z",),
        lhs_key="wallis-shift-ratio",
        source="Gamma(z+1/2) / Gamma(z) <= sqrt(pi z^2 / (2z+1)) for z > 0",
        _check_params=_scalars(),
        _point_rules=(("z > 0", lambda s, c: c[0] > 0.0),),
        _sides_fn=lambda s, c: (
            _lg(c[0] + 0.5) - _lg(c[0]),
            0.5 * (_LNPI + 2.0 * np.log(c[0]) - np.log(2.0 * c[0] + 1.0))),
        _sampler_fn=_z_above(lambda s: 0.0))

    # ---- the two-variable product bound and its consequences ----------------

    add(id="H_OMEGA", kind="claim", direction="ge",
        param_kinds=("s", "s"), param_names=("a", "b"),
        point_names=("x", "y"), lhs_key="h-product",
        source="f(x)/f(y) >= 1 where "
               "f(t) = Gamma(t+1)Gamma(t-a-b+1) / (Gamma(t-a+1)Gamma(t-b+1)), "
               "on 0 < a <= b < a+b <= x <= y (equality on the diagonal)",
        _check_params=_scalars(("a > 0 and b > 0",
                                lambda a, b: a > 0 and b > 0)),
        _point_rules=(("x >= a+b", lambda s, c: c[0] >= s[0] + s[1]),
                      ("y >= x", lambda s, c: c[1] >= c[0])),
        _sides_fn=lambda s, c: (
            log_f(TwoParam(s[0], s[1]), c[0])
            - log_f(TwoParam(s[0], s[1]), c[1]),
            _zeros(c)),
        _sampler_fn=_pair_above(lambda s: s[0] + s[1], diag_frac=0.15))

    add(id="G_LE1", kind="claim", direction="le",
        param_kinds=("s", "s"), param_names=("a", "b"), point_names=("z",),
        lhs_key="two-param-recip",
        source="Gamma(z-a+1)Gamma(z-b+1) / (Gamma(z+1)Gamma(z-a-b+1)) <= 1 "
               "for z >= a+b, a,b > 0",
        _check_params=_scalars(("a > 0 and b > 0",
                                lambda a, b: a > 0 and b > 0)),
        _point_rules=(("z >= a+b", lambda s, c: c[0] >= s[0] + s[1]),),
        _sides_fn=lambda s, c: (-log_f(TwoParam(s[0], s[1]), c[0]),
                                _zeros(c)),
        _sampler_fn=_z_above(lambda s: s[0] + s[1]))

    add(id="PSI_XY", kind="claim", direction="le",
        param_kinds=("s",), param_names=("a",), point_names=("x", "y"),
        lhs_key="psi-ratio",
        source="Gamma(x+1)Gamma(y-a+1) / (Gamma(y+1)Gamma(x-a+1)) <= 1 "
               "for y > x > a > 0",
        _check_params=_scalars(("a > 0", lambda a: a > 0)),
        _point_rules=(("x > a", lambda s, c: c[0] > s[0]),
                      ("y > x", lambda s, c: c[1] > c[0])),
        _sides_fn=lambda s, c: (
            _lg(c[0] + 1.0) + _lg(c[1] - s[0] + 1.0)
            - _lg(c[1] + 1.0) - _lg(c[0] - s[0] + 1.0),
            _zeros(c)),
        _sampler_fn=_pair_above(lambda s: s[0]))

    add(id="PSI_XY_AB", kind="claim", direction="le",
        param_kinds=("s", "s"), param_names=("a", "b"),
        point_names=("x", "y"), lhs_key="psi-sum-ratio",
        source="Gamma(x+1)Gamma(y-a-b+1) / (Gamma(y+1)Gamma(x-a-b+1)) <= 1 "
               "for y > x > a+b, a,b > 0",
        _check_params=_scalars(("a > 0 and b > 0",
                                lambda a, b: a > 0 and b > 0)),
        _point_rules=(("x > a+b", lambda s, c: c[0] > s[0] + s[1]),
                      ("y > x", lambda s, c: c[1] > c[0])),
        _sides_fn=lambda s, c: (
            _lg(c[0] + 1.0) + _lg(c[1] - (s[0] + s[1]) + 1.0)
            - _lg(c[1] + 1.0) - _lg(c[0] - (s[0] + s[1]) + 1.0),
            _zeros(c)),
        _sampler_fn=_pair_above(lambda s: s[0] + s[1]))

    # ---- binomial / beta-function consequences ------------------------------

    add(id="INQ51", kind="claim", direction="ge",
        param_kinds=(), param_names=(), point_names=("a", "b"),
        lhs_key="binom-central",
        source="Gamma(a+b+1) / (Gamma(a+1)Gamma(b+1)) >= 1 for a,b >= 0",
        _check_params=_scalars(),
        _point_rules=(("a >= 0", lambda s, c: c[0] >= 0.0),
                      ("b >= 0", lambda s, c: c[1] >= 0.0)),
        _sides_fn=lambda s, c: (
            _lg(c[0] + c[1] + 1.0) - _lg(c[0] + 1.0) - _lg(c[1] + 1.0),
            _zeros(c)),
        _sampler_fn=lambda rng, s, n: rng.uniform(0.0, 10.0, size=(n, 2)))

    add(id="INQ53", kind="claim", direction="ge",
        param_kinds=(), param_names=(), point_names=("a", "b"),
        lhs_key="inv-beta",
        source="Gamma(a+b) / (Gamma(a)Gamma(b)) >= ab / (a+b) for a,b > 0",
        _check_params=_scalars(),
        _point_rules=(("a > 0", lambda s, c: c[0] > 0.0),
                      ("b > 0", lambda s, c: c[1] > 0.0)),
        _sides_fn=lambda s, c: (
            -log_beta(c[0], c[1]),
            np.log(c[0]) + np.log(c[1]) - np.log(c[0] + c[1])),
        _sampler_fn=_boxed(-2.0, 1.0, 2))

    add(id="BETA_UB", kind="claim", direction="le",
        param_kinds=(), param_names=(), point_names=("a", "b"),
        lhs_key="beta",
        source="B(a,b) <= (a+b) / (ab) for a,b > 0",
        _check_params=_scalars(),
        _point_rules=(("a > 0", lambda s, c: c[0] > 0.0),
                      ("b > 0", lambda s, c: c[1] > 0.0)),
        _sides_fn=lambda s, c: (
            log_beta(c[0], c[1]),
            np.log(c[0] + c[1]) - np.log(c[0]) - np.log(c[1])),
        _sampler_fn=_boxed(-2.0, 1.0, 2))

    add(id="BETA_UB_SHIFT_A", kind="claim", direction="le",
        param_kinds=(), param_names=(), point_names=("a", "b"),
        lhs_key="beta-ashift",
        source="B(a+1,b) <= 1/b for a,b > 0",
        _check_params=_scalars(),
        _point_rules=(("a > 0", lambda s, c: c[0] > 0.0),
                      ("b > 0", lambda s, c: c[1] > 0.0)),
        _sides_fn=lambda s, c: (log_beta(c[0] + 1.0, c[1]),
                                -np.log(c[1])),
        _sampler_fn=_boxed(-2.0, 1.0, 2))

    add(id="BETA_UB_SHIFT_B", kind="claim", direction="le",
        param_kinds=(), param_names=(), point_names=("a", "b"),
        lhs_key="beta-bshift",
        source="B(a,b+1) <= 1/a for a,b > 0",
        _check_params=_scalars(),
        _point_rules=(("a > 0", lambda s, c: c[0] > 0.0),
                      ("b > 0", lambda s, c: c[1] > 0.0)),
        _sides_fn=lambda s, c: (log_beta(c[0], c[1] + 1.0),
                                -np.log(c[0])),
        _sampler_fn=_boxed(-2.0, 1.0, 2))

    add(id="BETA_UB_DRAGOMIR", kind="baseline", direction="le",
        param_kinds=(), param_names=(), point_names=("a", "b"),
        lhs_key="beta",
        source="B(a,b) <= 1 / (ab) for 0 < a,b <= 1 (reference bound)",
        _check_params=_scalars(),
        _point_rules=(("0 < a <= 1", lambda s, c: (c[0] > 0.0) & (c[0] <= 1.0)),
                      ("0 < b <= 1", lambda s, c: (c[1] > 0.0) & (c[1] <= 1.0))),
        _sides_fn=lambda s, c: (log_beta(c[0], c[1]),
                                -np.log(c[0]) - np.log(c[1])),
        _sampler_fn=_boxed(-3.0, 0.0, 2))

    # ---- duplication-type consequences --------------------------------------

    add(id="INQ54", kind="claim", direction="ge",
        param_kinds=(), param_names=(), point_names=("a",),
        lhs_key="central-binom",
        source="Gamma(2a+1) / Gamma(a+1)^2 >= 1 for a >= 0",
        _check_params=_scalars(),
        _point_rules=(("a >= 0", lambda s, c: c[0] >= 0.0),),
        _sides_fn=lambda s, c: (_lg(2.0 * c[0] + 1.0) - 2.0 * _lg(c[0] + 1.0),
                                _zeros(c)),
        _sampler_fn=_z_above(lambda s: 0.0))

    add(id="INQ55", kind="claim", direction="ge",
        param_kinds=(), param_names=(), point_names=("a",),
        lhs_key="dup-recip",
        source="Gamma(2a) / Gamma(a)^2 >= a/2 for a > 0",
        _check_params=_scalars(),
        _point_rules=(("a > 0", lambda s, c: c[0] > 0.0),),
        _sides_fn=lambda s, c: (_lg(2.0 * c[0]) - 2.0 * _lg(c[0]),
                                np.log(c[0]) - _LN2),
        _sampler_fn=_z_above(lambda s: 0.0))

    add(id="DUP_SANDWICH_LB", kind="claim", direction="ge",
        param_kinds=(), param_names=(), point_names=("a",),
        lhs_key="dup-ratio",
        source="Gamma(a)^2 / Gamma(2a) >= (2a - a^2) / a^2 for 0 < a <= 1",
        _check_params=_scalars(),
        _point_rules=(("0 < a <= 1",
                       lambda s, c: (c[0] > 0.0) & (c[0] <= 1.0)),),
        _sides_fn=lambda s, c: (2.0 * _lg(c[0]) - _lg(2.0 * c[0]),
                                np.log(2.0 - c[0]) - np.log(c[0])),
        _sampler_fn=lambda rng, s, n: (10.0 ** rng.uniform(-3.0, 0.0, n))[:, None])

    add(id="DUP_SANDWICH_UB", kind="claim", direction="le",
        param_kinds=(), param_names=(), point_names=("a",),
        lhs_key="dup-ratio",
        source="Gamma(a)^2 / Gamma(2a) <= 2/a for 0 < a <= 1",
        _check_params=_scalars(),
        _point_rules=(("0 < a <= 1",
                       lambda s, c: (c[0] > 0.0) & (c[0] <= 1.0)),),
        _sides_fn=lambda s, c: (2.0 * _lg(c[0]) - _lg(2.0 * c[0]),
                                _LN2 - np.log(c[0])),
        _sampler_fn=lambda rng, s, n: (10.0 ** rng.uniform(-3.0, 0.0, n))[:, None])

    # ---- binomial-coefficient core on the unit interval and beyond ----------

    add(id="INQ56", kind="claim", direction="ge",
        param_kinds=("s", "s"), param_names=("a", "b"), point_names=("z",),
        lhs_key="binom-core",
        source="Gamma(z-a-b+1) / (Gamma(z-a+1)Gamma(z-b+1)) >= 1/Gamma(z+1) "
               "for a,b > 0 and a+b <= z <= 1",
        _check_params=_scalars(("a > 0 and b > 0",
                                lambda a, b: a > 0 and b > 0)),
        _point_rules=(("z >= a+b", lambda s, c: c[0] >= s[0] + s[1]),
                      ("z <= 1", lambda s, c: c[0] <= 1.0)),
        _sides_fn=lambda s, c: (_binom_core_lhs(s[0], s[1], c[0]),
                                -_lg(c[0] + 1.0)),
        _sampler_fn=lambda rng, s, n: _unit_window(rng, s, n))

    add(id="INQ56_RECIP", kind="claim", direction="ge",
        param_kinds=(), param_names=(), point_names=("z",),
        lhs_key="recip-gamma",
        source="1/Gamma(z+1) >= 1 for 0 < z <= 1",
        _check_params=_scalars(),
        _point_rules=(("0 < z <= 1",
                       lambda s, c: (c[0] > 0.0) & (c[0] <= 1.0)),),
        _sides_fn=lambda s, c: (-_lg(c[0] + 1.0), _zeros(c)),
        _sampler_fn=lambda rng, s, n: rng.uniform(1e-9, 1.0, (n, 1)))

    add(id="INQ57_LB", kind="claim", direction="ge",
        param_kinds=("s", "s"), param_names=("a", "b"), point_names=("z",),
        lhs_key="binom-core",
        source="Gamma(z-a-b+1) / (Gamma(z-a+1)Gamma(z-b+1)) >= 1/Gamma(z+1) "
               "for z >= a+b, a,b > 0",
        _check_params=_scalars(("a > 0 and b > 0",
                                lambda a, b: a > 0 and b > 0)),
        _point_rules=(("z >= a+b", lambda s, c: c[0] >= s[0] + s[1]),),
        _sides_fn=lambda s, c: (_binom_core_lhs(s[0], s[1], c[0]),
                                -_lg(c[0] + 1.0)),
        _sampler_fn=_z_above(lambda s: s[0] + s[1]))

    add(id="INQ57_UB", kind="claim", direction="le",
        param_kinds=("s", "s"), param_names=("a", "b"), point_names=("z",),
        lhs_key="binom-core",
        source="Gamma(z-a-b+1) / (Gamma(z-a+1)Gamma(z-b+1)) <= "
               "Gamma(a+b+1) / (Gamma(a+1)Gamma(b+1)Gamma(z+1)) "
               "for z >= a+b, a,b > 0 (equality at z = a+b)",
        _check_params=_scalars(("a > 0 and b > 0",
                                lambda a, b: a > 0 and b > 0)),
        _point_rules=(("z >= a+b", lambda s, c: c[0] >= s[0] + s[1]),),
        _sides_fn=lambda s, c: (
            _binom_core_lhs(s[0], s[1], c[0]),
            -_lg(c[0] + 1.0) + _lg(s[0] + s[1] + 1.0)
            - _lg(s[0] + 1.0) - _lg(s[1] + 1.0)),
        _sampler_fn=_z_above(lambda s: s[0] + s[1]))

    # ---- the squared-shift ratio and reference lower bounds -----------------

    add(id="INQ58", kind="claim", direction="ge",
        param_kinds=("s",), param_names=("a",), point_names=("z",),
        lhs_key="gamma-square-ratio",
        source="Gamma(z)Gamma(z-2a) / Gamma(z-a)^2 >= 1 + a^2 / (z(z-2a)) "
               "for z > 2a, z > 0, a >= 0",
        _check_params=_scalars(("a >= 0", lambda a: a >= 0)),
        _point_rules=(("z > 2a", lambda s, c: c[0] > 2.0 * s[0]),
                      ("z > 0", lambda s, c: c[0] > 0.0)),
        _sides_fn=lambda s, c: (
            _gamma_square_lhs(s[0], c[0]),
            2.0 * np.log(c[0] - s[0]) - np.log(c[0])
            - np.log(c[0] - 2.0 * s[0])),
        _sampler_fn=_z_above(lambda s: 2.0 * s[0]))

    add(id="INQ58_BASE_RATIO", kind="baseline", direction="ge",
        param_kinds=("s",), param_names=("a",), point_names=("z",),
        lhs_key="gamma-square-ratio",
        source="Gamma(z)Gamma(z-2a) / Gamma(z-a)^2 >= (a^2 + z) / z "
               "for z > 2a, z > 0 (reference bound)",
        _check_params=_scalars(("a >= 0", lambda a: a >= 0)),
        _point_rules=(("z > 2a", lambda s, c: c[0] > 2.0 * s[0]),
                      ("z > 0", lambda s, c: c[0] > 0.0)),
        _sides_fn=lambda s, c: (
            _gamma_square_lhs(s[0], c[0]),
            np.log(s[0] * s[0] + c[0]) - np.log(c[0])),
        _sampler_fn=_z_above(lambda s: 2.0 * s[0]))

    add(id="INQ58_BASE_SHIFT", kind="baseline", direction="ge",
        param_kinds=("s",), param_names=("a",), point_names=("z",),
        lhs_key="gamma-square-ratio",
        source="Gamma(z)Gamma(z-2a) / Gamma(z-a)^2 >= "
               "1 + a^2 (z-2) / (z-a-1)^2 for z > 2, z > 2a, a > 0 "
               "(reference bound)",
        _check_params=_scalars(("a > 0", lambda a: a > 0)),
        _point_rules=(("z > 2", lambda s, c: c[0] > 2.0),
                      ("z > 2a", lambda s, c: c[0] > 2.0 * s[0])),
        _sides_fn=lambda s, c: (
            _gamma_square_lhs(s[0], c[0]),
            np.log1p(s[0] * s[0] * (c[0] - 2.0)
                     / (c[0] - s[0] - 1.0) ** 2)),
        _sampler_fn=_z_above(lambda s: max(2.0, 2.0 * s[0])))

    return tuple(cases)


def _unit_window(rng, s, n):
    # z between a+b and 1; empty when a+b >= 1
    lo = s[0] + s[1]
    if lo >= 1.0:
        raise DomainError(
            f"INQ56: domain is empty unless a+b < 1, got a+b={lo!r}")
    return rng.uniform(lo, 1.0, (n, 1))


_CASES = _build_registry()
_BY_ID = MappingProxyType({case.id: case for case in _CASES})


def registry_list() -> tuple:
    """All registered cases in stable order."""
    return _CASES


def get_case(case_id: str) -> InequalityCase:
    try:
        return _BY_ID[case_id]
    except KeyError:
        raise UsageError(f"unknown inequality id {case_id!r}") from None


def margin(case_id: str, params, point) -> float:
    """Oriented log-space margin of one case at one point.

    Raises a domain error naming the violated constraint when the point
    (or parameter set) falls outside the case's stated domain.
    """
    case = get_case(case_id)
    violation = case.domain_violation(params, point)
    if violation is not None:
        raise DomainError(
            f"{case.id}: {violation} (params={list(map(float, params))!r}, "
            f"point={point!r})")
    return float(case.margin_values(params, [point])[0])


def sweep(case_id: str, params, grid) -> list:
    """Evaluate one case over a grid of points.

    Points outside the domain are skipped; the skipped count is
    ``len(grid) - len(records)``.  Records are sorted by point.
    """
    case = get_case(case_id)
    pts = []
    for g in grid:
        tup = (float(g),) if np.ndim(g) == 0 else tuple(float(v) for v in g)
        if len(tup) != len(case.point_names):
            raise UsageError(
                f"{case.id} points have {len(case.point_names)} "
                f"coordinate(s) {'/'.join(case.point_names)}, got {tup!r}")
        pts.append(tup)
    flat_params = tuple(float(v) for v in params)
    if not pts:
        return []
    arr = np.asarray(pts, dtype=float)
    mask = case.domain_mask(flat_params, arr)
    kept = sorted(tuple(p) for p in arr[mask])
    if not kept:
        return []
    lhs, rhs = case.sides(flat_params, np.asarray(kept))
    margins = lhs - rhs if case.direction == "ge" else rhs - lhs
    return [
        SweepRecord(id=case.id, params=flat_params,
                    point=tuple(float(v) for v in p),
                    lhs_log=float(lh), rhs_log=float(rh), margin=float(m),
                    holds=bool(m >= -HOLDS_TOL))
        for p, lh, rh, m in zip(kept, lhs, rhs, margins)
    ]


def tightness_compare(ids, params, point) -> TightnessResult:
    """Rank bounds that share one LHS expression at a single point.

    All ids must agree on ``lhs_key``, direction, and parameter layout,
    and the point must lie in every case's domain.  For >= claims the
    largest RHS is the tightest lower bound; for <= claims the smallest
    RHS is the tightest upper bound.
    """
    ids = list(ids)
    if len(ids) < 2:
        raise UsageError("tightness comparison needs at least two ids")
    cases = [get_case(i) for i in ids]
    head = cases[0]
    for case in cases[1:]:
        if case.lhs_key != head.lhs_key:
            raise UsageError(
                f"{case.id} and {head.id} bound different expressions "
                f"({case.lhs_key!r} vs {head.lhs_key!r})")
        if case.direction != head.direction:
            raise UsageError(
                f"{case.id} and {head.id} bound in opposite directions")
        if case.param_names != head.param_names:
            raise UsageError(
                f"{case.id} and {head.id} take different parameters")
    flat_params = tuple(float(v) for v in params)
    for case in cases:
        violation = case.domain_violation(flat_params, point)
        if violation is not None:
            raise DomainError(
                f"{case.id}: {violation} (params={list(flat_params)!r}, "
                f"point={point!r})")
    entries = []
    lhs_log = None
    for case in cases:
        lhs, rhs = case.sides(flat_params, [point])
        lhs_log = float(lhs[0])
        with np.errstate(over="ignore"):
            entries.append((case.id, float(rhs[0]),
                            float(np.exp(rhs[0]))))
    reverse = head.direction == "ge"
    entries.sort(key=lambda e: e[1], reverse=reverse)
    tup = (float(point),) if np.ndim(point) == 0 else tuple(
        float(v) for v in point)
    return TightnessResult(lhs_key=head.lhs_key, direction=head.direction,
                           params=flat_params, point=tup, lhs_log=lhs_log,
                           entries=tuple(entries))
