"""Shared oracle helpers: high-precision reference values via mpmath.

All reference computations run at 40 decimal digits and are rounded to
float only at the comparison boundary, so oracle error is never part of
a test tolerance.
"""

import mpmath
import pytest

mpmath.mp.dps = 40


def mp_log_gamma(x) -> float:
    return float(mpmath.loggamma(mpmath.mpf(repr(float(x)))))


def mp_digamma(x) -> float:
    return float(mpmath.digamma(mpmath.mpf(repr(float(x)))))


def mp_polygamma(n, x) -> float:
    return float(mpmath.polygamma(int(n), mpmath.mpf(repr(float(x)))))


def mp_log_beta(a, b) -> float:
    a = mpmath.mpf(repr(float(a)))
    b = mpmath.mpf(repr(float(b)))
    return float(mpmath.loggamma(a) + mpmath.loggamma(b)
                 - mpmath.loggamma(a + b))


def mp_quad_half_line(f, decay=1.0) -> float:
    # reference integral over (0, inf); f must accept mpf
    return float(mpmath.quad(f, [0, 1, 5, mpmath.inf]))


@pytest.fixture(scope="session")
def oracle():
    class Oracle:
        log_gamma = staticmethod(mp_log_gamma)
        digamma = staticmethod(mp_digamma)
        polygamma = staticmethod(mp_polygamma)
        log_beta = staticmethod(mp_log_beta)
        quad_half_line = staticmethod(mp_quad_half_line)
    return Oracle
