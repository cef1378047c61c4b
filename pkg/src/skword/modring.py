"""Exact arithmetic in Z/p^N Z for an odd prime p.

Residues are canonical integers in [0, p^N).  All intermediate arithmetic
is done on unbounded Python integers and reduced at the boundary, so there
is no internal precision bookkeeping anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotAUnit


def is_prime(n: int) -> bool:
    """Trial-division primality check; fine at desk scale."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RingParams:
    """The ring Z/p^N Z: an odd prime p and a precision exponent N >= 1.

    p = 2 is rejected outright: the exponential/logarithm series used
    downstream only converge for odd p.
    """

    p: int
    N: int
    modulus: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.p == 2:
            raise ValueError("p = 2 is not supported (series need an odd prime)")
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"p must be an odd prime >= 3, got {self.p}")
        if self.N < 1:
            raise ValueError(f"N must be >= 1, got {self.N}")
        object.__setattr__(self, "modulus", self.p**self.N)

    def with_precision(self, n: int) -> "RingParams":
        return RingParams(self.p, n)


@dataclass(frozen=True, slots=True)
class Residue:
    """A canonical representative of Z/p^N Z."""

    value: int
    params: RingParams

    def __add__(self, other: "Residue") -> "Residue":
        _check_same(self, other)
        return Residue((self.value + other.value) % self.params.modulus, self.params)

    def __sub__(self, other: "Residue") -> "Residue":
        _check_same(self, other)
        return Residue((self.value - other.value) % self.params.modulus, self.params)

    def __mul__(self, other: "Residue") -> "Residue":
        _check_same(self, other)
        return Residue((self.value * other.value) % self.params.modulus, self.params)

    def __neg__(self) -> "Residue":
        return Residue((-self.value) % self.params.modulus, self.params)


def _check_same(a: Residue, b: Residue) -> None:
    if a.params != b.params:
        raise ValueError(f"mixed rings: {a.params} vs {b.params}")


def reduce(x: int, params: RingParams) -> Residue:
    """Canonical representative of x in [0, p^N)."""
    return Residue(x % params.modulus, params)


def invert(a: Residue) -> Residue:
    """Multiplicative inverse of a unit; raises NotAUnit when p | a."""
    if a.value % a.params.p == 0:
        raise NotAUnit(f"{a.value} is divisible by {a.params.p}")
    return Residue(pow(a.value, -1, a.params.modulus), a.params)


def invert_int(x: int, params: RingParams) -> int:
    """Inverse of the integer x mod p^N; raises NotAUnit when p | x."""
    if x % params.p == 0:
        raise NotAUnit(f"{x} is divisible by {params.p}")
    return pow(x, -1, params.modulus)


def valuation(a: Residue) -> int:
    """Largest m <= N with p^m | a; v(0) = N by convention."""
    return valuation_int(a.value, a.params)


def valuation_int(x: int, params: RingParams) -> int:
    x %= params.modulus
    if x == 0:
        return params.N
    v = 0
    p = params.p
    while x % p == 0:
        x //= p
        v += 1
    return v


def factorial_valuation(k: int, p: int) -> int:
    """v_p(k!) by Legendre's formula."""
    if k < 0:
        raise ValueError("k must be >= 0")
    v = 0
    q = p
    while q <= k:
        v += k // q
        q *= p
    return v
