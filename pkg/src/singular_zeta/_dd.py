"""Vectorised double-double arithmetic.

A real double-double number is a pair ``(hi, lo)`` of float64 arrays with
``|lo| <= ulp(hi)/2``; a complex one is a pair of real double-doubles.  Only
the handful of operations needed by the cancelling power series in
:mod:`singular_zeta.specfun` are provided.
"""

from __future__ import annotations

import numpy as np

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a, b):
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def _split(a):
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def add(a, b):
    """Accurate double-double addition."""
    s1, s2 = two_sum(a[0], b[0])
    t1, t2 = two_sum(a[1], b[1])
    s2 = s2 + t1
    s1, s2 = quick_two_sum(s1, s2)
    s2 = s2 + t2
    return quick_two_sum(s1, s2)


def neg(a):
    return -a[0], -a[1]


def mul(a, b):
    p, e = two_prod(a[0], b[0])
    e = e + (a[0] * b[1] + a[1] * b[0])
    return quick_two_sum(p, e)


def mul_d(a, d):
    p, e = two_prod(a[0], d)
    e = e + a[1] * d
    return quick_two_sum(p, e)


def div(a, b):
    """Double-double division ``a / b``."""
    q1 = a[0] / b[0]
    r = add(a, neg(mul((q1, np.zeros_like(q1)), b)))
    q2 = r[0] / b[0]
    r = add(r, neg(mul((q2, np.zeros_like(q2)), b)))
    q3 = r[0] / b[0]
    q1, q2 = quick_two_sum(q1, q2)
    return add((q1, q2), (q3, np.zeros_like(q3)))


def from_float(x):
    x = np.asarray(x, dtype=float)
    return x, np.zeros_like(x)


# complex double-double: ((re_hi, re_lo), (im_hi, im_lo))

def c_from_complex(z):
    z = np.asarray(z, dtype=complex)
    return from_float(z.real), from_float(z.imag)


def c_add(a, b):
    return add(a[0], b[0]), add(a[1], b[1])


def c_mul(a, b):
    re = add(mul(a[0], b[0]), neg(mul(a[1], b[1])))
    im = add(mul(a[0], b[1]), mul(a[1], b[0]))
    return re, im


def c_div_real(a, d):
    """Divide a complex double-double by a real double-double."""
    return div(a[0], d), div(a[1], d)


def c_to_complex(a):
    return (a[0][0] + a[0][1]) + 1j * (a[1][0] + a[1][1])


def c_abs_hi(a):
    return np.hypot(a[0][0], a[1][0])
