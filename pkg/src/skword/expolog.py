"""Truncated p-adic exponential and normalized logarithm at precision p^N.

exp_trunc(A, m) sums p^(mk) A^k / k! with every term handled exactly: the
p-part of k! is pulled out of the denominator and the remaining unit is
inverted mod p^N.  The truncation index is computed upfront from (m, N, p)
via v_p(k!) <= (k-1)/(p-1), which makes the term-valuation lower bound
mk - (k-1)/(p-1) strictly increasing, so everything past the cutoff
vanishes mod p^N.

nlog(g, m) writes g = I + p^m B with B the canonical integer lift and sums
(-1)^(k+1) p^(m(k-1)) B^k / k.  At finite precision the series trace is
only divisible by p^(N-m) (det g = 1 holds mod p^N, not exactly), while B
itself is only determined mod p^(N-m); nlog therefore returns the
trace-zero representative of that fiber, fixed up on the last diagonal
entry.  exp_trunc only depends on its argument mod p^(N-m), so the round
trip exp_trunc(nlog(g, m), m) = g stays exact mod p^N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from random import Random

from .errors import LevelTooLow
from .group import GroupElement, identity, level, random_in_gamma
from .lie import LieElement
from .matops import identity_mat, mat_mul, mat_trace
from .modring import RingParams, factorial_valuation, invert_int, valuation_int


def exp_cutoff(m: int, n_prec: int, p: int) -> int:
    """Least K with m*k - v_p(k!) >= N for every k >= K."""
    k = 1
    while m * k * (p - 1) - (k - 1) < n_prec * (p - 1):
        k += 1
    return k


def log_cutoff(m: int, n_prec: int, p: int) -> int:
    """Least K with m*(k-1) - v_p(k) >= N for every k >= K.

    Uses v_p(k) <= floor(log_p k); the bound m(k-1) - floor(log_p k) gains
    at least m - 1 >= 0 per step, so the first crossing is final.
    """
    k = 1
    bound = 0
    while True:
        # floor(log_p k) by repeated division keeps everything integral
        q, flog = k, 0
        while q >= p:
            q //= p
            flog += 1
        bound = m * (k - 1) - flog
        if bound >= n_prec:
            return k
        k += 1


def exp_trunc(a: LieElement, m: int) -> GroupElement:
    """The truncated exponential of p^m * a; lands in level >= m."""
    params = a.params
    if not 1 <= m <= params.N:
        raise ValueError(f"need 1 <= m <= {params.N}, got {m}")
    p, n_prec, mod = params.p, params.N, params.modulus
    dim = a.dim
    cut = exp_cutoff(m, n_prec, p)
    acc = list(identity_mat(dim))
    power = identity_mat(dim)
    for k in range(1, cut):
        power = mat_mul(power, a.entries, dim, mod)
        v = factorial_valuation(k, p)
        e = m * k - v
        if e >= n_prec:
            continue
        unit = math.factorial(k) // p**v
        coeff = p**e * invert_int(unit, params) % mod
        for idx, x in enumerate(power):
            acc[idx] = (acc[idx] + coeff * x) % mod
    return GroupElement(tuple(acc), dim, params)


def _nlog_series(g: GroupElement, m: int) -> tuple[int, ...]:
    """Raw truncated series of the normalized logarithm (no trace fixup)."""
    params = g.params
    p, n_prec, mod = params.p, params.N, params.modulus
    dim = g.dim
    pm = p**m
    b = tuple(
        ((x - (1 if i % (dim + 1) == 0 else 0)) % mod) // pm
        for i, x in enumerate(g.entries)
    )
    cut = log_cutoff(m, n_prec, p)
    acc = [0] * (dim * dim)
    power = identity_mat(dim)
    for k in range(1, cut):
        power = mat_mul(power, b, dim, mod)
        v = valuation_int(k, params) if k % p == 0 else 0
        e = m * (k - 1) - v
        if e >= n_prec:
            continue
        unit = k // p**v
        coeff = p**e * invert_int(unit, params) % mod
        if k % 2 == 0:
            coeff = -coeff % mod
        for idx, x in enumerate(power):
            acc[idx] = (acc[idx] + coeff * x) % mod
    return tuple(acc)


def nlog(g: GroupElement, m: int) -> LieElement:
    """Normalized logarithm: the trace-zero A with exp_trunc(A, m) = g.

    Requires level(g) >= m >= 1.  The raw series trace is divisible by
    p^(N-m) (checked); subtracting it from the last diagonal entry moves A
    within the fiber of exp_trunc, so the round trip is unaffected.
    """
    params = g.params
    if m < 1:
        raise LevelTooLow("need m >= 1")
    if m > params.N:
        raise LevelTooLow(f"m = {m} exceeds precision N = {params.N}")
    if level(g) < m:
        raise LevelTooLow(f"element has level {level(g)} < {m}")
    dim = g.dim
    mod = params.modulus
    acc = list(_nlog_series(g, m))
    t = sum(acc[i * (dim + 1)] for i in range(dim)) % mod
    assert t % params.p ** (params.N - m) == 0, "normalized log trace bound violated"
    last = dim * dim - 1
    acc[last] = (acc[last] - t) % mod
    return LieElement(tuple(acc), dim, params)


def random_lie(params: RingParams, dim: int, rng: Random) -> LieElement:
    """Random trace-zero matrix: free entries, last diagonal balances."""
    mod = params.modulus
    m = [rng.randrange(mod) for _ in range(dim * dim)]
    diag = sum(m[i * (dim + 1)] for i in range(dim - 1))
    m[dim * dim - 1] = (-diag) % mod
    return LieElement(tuple(m), dim, params)


@dataclass
class WeigelReport:
    """Outcome of the surjectivity check exp(p^m L_0) = Gamma_m at finite
    precision, over elements sampled both with and without exp."""

    p: int
    N: int
    dim: int
    m: int
    samples: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_weigel(
    params: RingParams, dim: int, m: int, samples: int, rng: Random
) -> WeigelReport:
    """For sampled g with level >= m: nlog is trace-zero, the raw series
    trace is divisible by p^(N-m), and exp_trunc(nlog(g, m), m) = g exactly.

    Elements are sampled two ways: det-corrected I + p^m R (no exp
    anywhere, so the surjectivity check is not circular) and exp images.
    """
    report = WeigelReport(params.p, params.N, dim, m, samples)
    mod = params.modulus
    span = params.p ** (params.N - m)
    for idx in range(samples):
        direct = random_in_gamma(params, dim, m, rng)
        exp_img = exp_trunc(random_lie(params, dim, rng), m)
        for tag, g in (("direct", direct), ("exp", exp_img)):
            raw = _nlog_series(g, m)
            raw_trace = mat_trace(raw, dim, mod)
            if raw_trace % span != 0:
                report.failures.append(f"{idx}/{tag}: raw trace {raw_trace}")
                continue
            a = nlog(g, m)
            if mat_trace(a.entries, dim, mod) != 0:
                report.failures.append(f"{idx}/{tag}: nlog trace nonzero")
                continue
            if exp_trunc(a, m).entries != g.entries:
                report.failures.append(f"{idx}/{tag}: round trip broke")
    return report


def identity_at(params: RingParams, dim: int) -> GroupElement:
    return identity(params, dim)
