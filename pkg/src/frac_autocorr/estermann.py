"""The Estermann function E(s; h/k), its sine/cosine parts, and G_0, G_1.

The single authoritative evaluation path is the Hurwitz-zeta double sum

    E(s; h/k) = k^{-2s} sum_{1<=j,l<=k} e^{2 pi i j l h / k} z(s, j/k) z(s, l/k),

valid on the whole plane minus s = 1.  The functional equations are used
only as checks, never as the evaluation route.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import PoleError
from .specfun import EULER_GAMMA, LOG_2PI, PI, gamma_fn, hurwitz_zeta, riemann_zeta
from .vasyunin import modular_inverse, vasyunin_cot

_MAX_K = 512


@dataclass(frozen=True)
class EstermannPoint:
    s: complex
    h: int
    k: int

    def __post_init__(self):
        if self.k < 1 or math.gcd(self.h, self.k) != 1:
            raise ValueError("EstermannPoint requires coprime h, k with k >= 1")


@dataclass(frozen=True)
class LaurentData:
    """Singular part at ``location``: list of (order, coefficient) pairs
    with strictly increasing orders (order -n is the (s-s0)^{-n} term)."""

    location: complex
    coefficients: tuple


@functools.lru_cache(maxsize=4096)
def _hurwitz_row(s: complex, k: int) -> tuple:
    return tuple(hurwitz_zeta(s, j / k) for j in range(1, k + 1))


def estermann(s: complex | float, h: int, k: int) -> complex:
    """E(s; h/k) via the Hurwitz double sum; k = 1 gives zeta(s)^2."""
    s = complex(s)
    if s == 1:
        raise PoleError("Estermann double pole at s=1", location=1.0 + 0.0j)
    if k < 1 or math.gcd(h, k) != 1:
        raise ValueError("estermann requires coprime h, k with k >= 1")
    if k > _MAX_K:
        raise ValueError(f"estermann limited to k <= {_MAX_K}")
    if k == 1:
        z = riemann_zeta(s)
        return z * z
    zv = np.array(_hurwitz_row(s, k), dtype=np.complex128)
    j = np.arange(1, k + 1, dtype=np.int64)
    idx = (np.outer(j, j) * (h % k)) % k
    roots = np.exp(2j * PI * np.arange(k) / k)
    double = (roots[idx] * np.outer(zv, zv)).sum()
    return complex(cmath.exp(-2.0 * s * math.log(k)) * double)


def esin(s: complex | float, h: int, k: int) -> complex:
    """Esin(s; h/k) = (E(s;h/k) - E(s;-h/k)) / 2i; entire, the value at the
    removable point s = 1 is recovered by symmetric epsilon offsets."""
    s = complex(s)
    if s == 1:
        def g(eps: float) -> complex:
            return 0.5 * (esin(1.0 + eps, h, k) + esin(1.0 - eps, h, k))

        e = 1e-2
        return (4.0 * g(e / 2.0) - g(e)) / 3.0
    a = estermann(s, h, k)
    b = estermann(s, -h, k)
    return (a - b) / 2j


def ecos(s: complex | float, h: int, k: int) -> complex:
    """Ecos(s; h/k) = (E(s;h/k) + E(s;-h/k)) / 2."""
    s = complex(s)
    if s == 1:
        raise PoleError("Ecos double pole at s=1", location=1.0 + 0.0j)
    return 0.5 * (estermann(s, h, k) + estermann(s, -h, k))


def g0(s: complex | float, h: int, k: int) -> complex:
    """G_0(s; h/k) = cos(pi s/2) Ecos - sin(pi s/2) Esin."""
    s = complex(s)
    if s == 1:
        raise PoleError("G_0 simple pole at s=1", location=1.0 + 0.0j)
    return cmath.cos(PI * s / 2.0) * ecos(s, h, k) - cmath.sin(PI * s / 2.0) * esin(
        s, h, k
    )


def g1(s: complex | float, h: int, k: int) -> complex:
    """G_1(s; h/k) = (2 pi)^{-s} Gamma(s) G_0(s+2; h/k); poles at 0, -1, -2, ..."""
    s = complex(s)
    if s.imag == 0.0 and s.real <= 0.25 and abs(s.real - round(s.real)) < 1e-12:
        laurent = None
        if round(s.real) == -1:
            v = vasyunin_cot(h, k)
            c = PI * PI / k
            laurent = LaurentData(
                location=-1.0 + 0.0j,
                coefficients=(
                    (-2, complex(c)),
                    (-1, complex(c * (1.0 + EULER_GAMMA - 2.0 * math.log(k) - LOG_2PI - PI * v))),
                ),
            )
        elif round(s.real) == -2:
            laurent = LaurentData(
                location=-2.0 + 0.0j, coefficients=((-1, complex(PI * PI / 2.0)),)
            )
        raise PoleError(f"G_1 pole at s={s}", location=s, laurent=laurent)
    return cmath.exp(-s * LOG_2PI) * gamma_fn(s) * g0(s + 2.0, h, k)


def g1_residue_polynomial(h: int, k: int, t: float) -> float:
    """Sum of the residue contributions of G_1 t^{-s} at s = -2 and s = -1:
    (pi^2/2) t^2 - (pi^2/k) t (log t + pi V(h,k) + 2 log k + log 2pi - gamma - 1)."""
    if t <= 0:
        raise ValueError("g1_residue_polynomial requires t > 0")
    v = vasyunin_cot(h, k)
    return 0.5 * PI * PI * t * t - PI * PI / k * t * (
        math.log(t) + PI * v + 2.0 * math.log(k) + LOG_2PI - EULER_GAMMA - 1.0
    )


def _chi(s: complex, k: int) -> complex:
    """2 (2 pi)^{2s-2} Gamma^2(1-s) k^{1-2s}."""
    g = gamma_fn(1.0 - s)
    return 2.0 * cmath.exp((2.0 * s - 2.0) * LOG_2PI) * g * g * k ** (1.0 - 2.0 * s)


def functional_equation_residual(which: str, s: complex | float, h: int, k: int) -> float:
    """|LHS - RHS| / (1 + |LHS|) for the selected functional equation."""
    s = complex(s)
    hbar = modular_inverse(h, k)
    if which == "E":
        lhs = estermann(s, h, k)
        rhs = _chi(s, k) * (
            estermann(1.0 - s, hbar, k)
            - cmath.cos(PI * s) * estermann(1.0 - s, -hbar, k)
        )
    elif which == "Esin":
        lhs = esin(s, h, k)
        rhs = _chi(s, k) * (1.0 + cmath.cos(PI * s)) * esin(1.0 - s, hbar, k)
    elif which == "Ecos":
        lhs = ecos(s, h, k)
        rhs = _chi(s, k) * (1.0 - cmath.cos(PI * s)) * ecos(1.0 - s, hbar, k)
    elif which == "G0":
        lhs = g0(s, h, k)
        rhs = _chi(s, k) * cmath.sin(PI * s) * g0(1.0 - s, hbar, k)
    elif which == "G1":
        lhs = g1(s, h, k)
        rhs = (
            k ** (-2.0 * s - 3.0)
            * (s + 2.0)
            * (s + 3.0)
            / (s * (s + 1.0))
            * g1(-s - 3.0, hbar, k)
        )
    else:
        raise ValueError(f"unknown functional equation {which!r}")
    return abs(lhs - rhs) / (1.0 + abs(lhs))


def esin_tilde(s: complex | float, h: int, k: int) -> complex:
    """sin(pi s/2) Gamma(s) (2 pi / k)^{-s} Esin(s; h/k), the symmetric form."""
    s = complex(s)
    return (
        cmath.sin(PI * s / 2.0)
        * gamma_fn(s)
        * cmath.exp(-s * math.log(2.0 * PI / k))
        * esin(s, h, k)
    )


def ecos_tilde(s: complex | float, h: int, k: int) -> complex:
    """cos(pi s/2) Gamma(s) (2 pi / k)^{-s} Ecos(s; h/k)."""
    s = complex(s)
    return (
        cmath.cos(PI * s / 2.0)
        * gamma_fn(s)
        * cmath.exp(-s * math.log(2.0 * PI / k))
        * ecos(s, h, k)
    )


def laurent_coefficient(f, s0: complex, order: int, eps: float = 1e-2, m: int = 24) -> complex:
    """Coefficient of (s - s0)^order by a discrete Cauchy integral on an
    eps-circle, Richardson-extrapolated over eps and eps/2."""

    def ring(e: float) -> complex:
        total = 0.0 + 0.0j
        for j in range(m):
            w = cmath.exp(2j * PI * j / m)
            total += f(s0 + e * w) * w ** (-order)
        return total / m * e ** (-order)

    c1, c2 = ring(eps), ring(eps / 2.0)
    # leading alias decays like eps; one Richardson step removes it
    return 2.0 * c2 - c1


def estermann_series(s: complex | float, h: int, k: int, n_terms: int) -> complex:
    """Truncated Dirichlet series sum tau(n) e^{2 pi i n h/k} n^{-s} (Re s > 1)."""
    from .phi import divisor_sieve

    s = complex(s)
    tau = divisor_sieve(n_terms)[1:].astype(np.float64)
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    phase = np.exp((2j * PI * (h % k)) * (np.arange(1, n_terms + 1, dtype=np.int64) % k) / k)
    return complex((tau * phase * n ** (-s)).sum())
