"""Vasyunin cotangent sums V(p, q) and the related trigonometric sums.

Three independent evaluation routes are exposed (cotangent definition,
half-range B_1 form, digamma form) so that they can be played against each
other; a direct O(q) sum with a shared cotangent table per q is fast enough
for all desk-scale sweeps.
"""

from __future__ import annotations

import functools
import math

import numpy as np

from .errors import NonCoprimeError
from .specfun import EULER_GAMMA, PI, cot_pi_frac_table, digamma


def modular_inverse(p: int, q: int) -> int:
    """The inverse of p mod q in [1, q]; q = 1 returns 1."""
    if q < 1:
        raise ValueError("modulus must be positive")
    if q == 1:
        return 1
    if math.gcd(p, q) != 1:
        raise NonCoprimeError(f"{p} is not invertible mod {q}")
    r = pow(p % q, -1, q)
    return r if r != 0 else q


def _require_coprime(p: int, q: int) -> None:
    if q < 1:
        raise ValueError("q must be positive")
    if math.gcd(p, q) != 1:
        raise NonCoprimeError(
            f"gcd({p}, {q}) != 1; use vasyunin_noncoprime for general pairs"
        )


@functools.lru_cache(maxsize=1024)
def _cot_table(q: int) -> np.ndarray:
    return cot_pi_frac_table(q)


@functools.lru_cache(maxsize=1024)
def _psi_table(q: int) -> np.ndarray:
    """psi(k/q) for k = 1 .. q-1."""
    return np.array([digamma(k / q) for k in range(1, q)])


def vasyunin_cot(p: int, q: int) -> float:
    """V(p, q) = sum_{k<q} {kp/q} cot(k pi / q); V(p, 1) = 0."""
    _require_coprime(p, q)
    if q == 1:
        return 0.0
    k = np.arange(1, q, dtype=np.int64)
    r = (k * (p % q)) % q
    return math.fsum((r / q) * _cot_table(q))


def vasyunin_b1cot(p: int, q: int) -> float:
    """V(p, q) through the half-range form 2 sum_{k<q/2} B_1(kp/q) cot(k pi/q)."""
    _require_coprime(p, q)
    if q <= 2:
        return 0.0
    half = (q - 1) // 2 if q % 2 else q // 2 - 1
    k = np.arange(1, half + 1, dtype=np.int64)
    r = (k * (p % q)) % q
    b1 = r / q - 0.5  # r = 0 impossible for k < q/2 with gcd(p, q) = 1
    return 2.0 * math.fsum(b1 * _cot_table(q)[: half])


def vasyunin_psi(p: int, q: int, form: str = "b1") -> float:
    """V(p, q) through the digamma representation.

    form="b1":   -(2/pi) sum B_1(kp/q) psi(k/q)
    form="frac": -(2/pi) sum {kp/q} psi(k/q) - (q/pi)(log q + gamma) + gamma/pi

    The gamma/pi term is the k = q contribution of the digamma sum identity
    sum_{k<=q} psi(k/q) = -q(log q + gamma), which the half-open sum misses.
    """
    _require_coprime(p, q)
    if q == 1:
        return 0.0
    k = np.arange(1, q, dtype=np.int64)
    r = (k * (p % q)) % q
    psi = _psi_table(q)
    if form == "b1":
        b1 = np.where(r == 0, 0.0, r / q - 0.5)
        return -(2.0 / PI) * math.fsum(b1 * psi)
    if form == "frac":
        return (
            -(2.0 / PI) * math.fsum((r / q) * psi)
            - (q / PI) * (math.log(q) + EULER_GAMMA)
            + EULER_GAMMA / PI
        )
    raise ValueError(f"unknown form {form!r}")


def vasyunin_noncoprime(a: int, b: int, form: str = "b1") -> float:
    """sum_{m<b} B_1(ma/b) psi(m/b) for arbitrary positive a, b.

    Equals -(pi d / 2) V(a/d, b/d) with d = gcd(a, b).  form="frac" gives
    the companion sum_{m<b} {ma/b} psi(m/b), which carries the extra
    -(b/2)(log b + gamma) + (d/2)(log d + gamma) correction.
    """
    if a < 1 or b < 1:
        raise ValueError("vasyunin_noncoprime requires positive integers")
    if b == 1:
        return 0.0
    m = np.arange(1, b, dtype=np.int64)
    r = (m * (a % b)) % b
    psi = _psi_table(b)
    if form == "b1":
        b1 = np.where(r == 0, 0.0, r / b - 0.5)
        return math.fsum(b1 * psi)
    if form == "frac":
        return math.fsum((r / b) * psi)
    raise ValueError(f"unknown form {form!r}")


def trig_kl_sum(p: int, q: int) -> complex:
    """sum_{1<=k,l<=q} k l e^{2 pi i k l p / q} by direct double sum (q <= 512)."""
    _require_coprime(p, q)
    if q > 512:
        raise ValueError("trig_kl_sum: direct double sum limited to q <= 512")
    k = np.arange(1, q + 1, dtype=np.int64)
    kl = np.outer(k, k)
    idx = (kl * (p % q)) % q
    roots = np.exp(2j * PI * np.arange(q) / q)
    return complex((kl * roots[idx]).sum())


def centered_trig_sum(p: int, q: int) -> complex:
    """sum_{1<=k,l<=q} (1/2 - k/q)(1/2 - l/q) e^{2 pi i k l p / q}."""
    _require_coprime(p, q)
    if q > 512:
        raise ValueError("centered_trig_sum: direct double sum limited to q <= 512")
    k = np.arange(1, q + 1, dtype=np.int64)
    w = 0.5 - k / q
    idx = (np.outer(k, k) * (p % q)) % q
    roots = np.exp(2j * PI * np.arange(q) / q)
    return complex((np.outer(w, w) * roots[idx]).sum())


def v_row(q: int) -> list[tuple[int, float]]:
    """(p, V(p, q)) for all coprime 1 <= p <= q, reusing one cot table."""
    if q == 1:
        return [(1, 0.0)]
    out = []
    ct = _cot_table(q)
    k = np.arange(1, q, dtype=np.int64)
    for p in range(1, q + 1):
        if math.gcd(p, q) != 1:
            continue
        r = (k * p) % q
        out.append((p, float(math.fsum((r / q) * ct))))
    return out
