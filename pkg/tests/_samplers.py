"""Random parameter draws for every registered inequality.

Each draw returns the flat parameter tuple the case expects, spread over
several orders of magnitude, with boundary values (exact zeros, equal
pairs) hit with small probability so closed-boundary cases exercise
their equality edges.  Majorized pairs are built by Robin Hood transfers
(move mass from a larger entry to a smaller one), which preserve the
total and keep the transformed vector weakly submajorized by the
original.
"""

import numpy as np


def _mag(rng, lo=-3.0, hi=1.0, size=None):
    return 10.0 ** rng.uniform(lo, hi, size=size)


def _nonneg(rng):
    # a >= 0, exactly zero ~10% of the time
    return 0.0 if rng.random() < 0.1 else float(_mag(rng))


def _pos(rng):
    return float(_mag(rng))


def _unit_open(rng):
    # 0 <= a < 1
    return 0.0 if rng.random() < 0.1 else float(rng.uniform(0.0, 1.0 - 1e-9))


def _unit_strict(rng):
    # 0 < a < 1
    return float(rng.uniform(1e-9, 1.0 - 1e-9))


def _pair_nonneg(rng):
    return (_nonneg(rng), _nonneg(rng))


def _pair_pos(rng):
    return (_pos(rng), _pos(rng))


def _pair_unit_sum(rng):
    # a, b > 0 with a + b < 1
    total = rng.uniform(0.02, 0.98)
    frac = rng.uniform(0.05, 0.95)
    return (float(total * frac), float(total * (1.0 - frac)))


def _entry_list(rng):
    k = int(rng.integers(1, 6))
    vals = _mag(rng, -2.0, 1.0, size=k)
    vals[rng.random(k) < 0.1] = 0.0
    return tuple(float(v) for v in vals)


def _major_pair(rng):
    k = int(rng.integers(2, 6))
    a = _mag(rng, -2.0, 1.0, size=k)
    b = a.copy()
    for _ in range(4):
        i, j = rng.integers(0, k, size=2)
        if b[i] == b[j]:
            continue
        if b[i] < b[j]:
            i, j = j, i
        delta = rng.uniform(0.0, 0.5) * (b[i] - b[j])
        b[i] -= delta
        b[j] += delta
    return tuple(float(v) for v in a) + tuple(float(v) for v in b)


PARAM_DRAWS = {
    "INQ1": _pair_nonneg,
    "MULTI_GE1": _entry_list,
    "MAJOR_GE1": _major_pair,
    "SYM_GE1": _nonneg,
    "INQ3_LB": _unit_open,
    "INQ3_UB": _unit_open,
    "SYM_SANDWICH_LB": _unit_strict,
    "SYM_SANDWICH_UB": _unit_strict,
    "H_OMEGA": _pair_pos,
    "G_LE1": _pair_pos,
    "PSI_XY": _pos,
    "PSI_XY_AB": _pair_pos,
    "INQ56": _pair_unit_sum,
    "INQ57_LB": _pair_pos,
    "INQ57_UB": _pair_pos,
    "INQ58": _nonneg,
    "INQ58_BASE_RATIO": _nonneg,
    "INQ58_BASE_SHIFT": _pos,
}


def draw_params(rng, case):
    """One random parameter tuple valid for ``case`` (empty if none)."""
    fn = PARAM_DRAWS.get(case.id)
    if fn is None:
        return ()
    out = fn(rng)
    return out if isinstance(out, tuple) else (out,)
