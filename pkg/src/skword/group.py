"""The finite groups SL_dim(Z/p^N Z) and their congruence filtration.

level(g) is the largest m with g = I mod p^m, i.e. the depth of g in the
filtration by kernels of the reduction maps; project(g, n) is reduction to
precision n.  Elements are immutable and hash by their canonical entries,
which is what the BFS layers key on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random

from .errors import BadPrecision, DimensionMismatch, LevelTooLow
from .matops import (
    Mat,
    identity_mat,
    int_det,
    mat_inv_mod,
    mat_mul,
    minor_det,
)
from .modring import RingParams, invert_int, valuation_int


@dataclass(frozen=True, slots=True)
class GroupElement:
    """A dim x dim matrix over Z/p^N Z with determinant 1."""

    entries: Mat
    dim: int
    params: RingParams

    def rows(self) -> list[list[int]]:
        d = self.dim
        return [list(self.entries[i * d : (i + 1) * d]) for i in range(d)]

    def is_identity(self) -> bool:
        return self.entries == identity_mat(self.dim)


def group_element(rows, params: RingParams) -> GroupElement:
    """Validating constructor: reduces entries and checks det = 1 mod p^N."""
    flat = tuple(int(x) % params.modulus for row in rows for x in row)
    dim = len(rows)
    if len(flat) != dim * dim:
        raise DimensionMismatch("matrix is not square")
    if int_det(flat, dim) % params.modulus != 1:
        raise ValueError("determinant is not 1 mod p^N")
    return GroupElement(flat, dim, params)


def identity(params: RingParams, dim: int) -> GroupElement:
    return GroupElement(identity_mat(dim), dim, params)


def _check_compatible(g: GroupElement, h: GroupElement) -> None:
    if g.params != h.params or g.dim != h.dim:
        raise DimensionMismatch(
            f"incompatible elements: dim {g.dim}/{h.dim}, params {g.params}/{h.params}"
        )


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    _check_compatible(g, h)
    return GroupElement(
        mat_mul(g.entries, h.entries, g.dim, g.params.modulus), g.dim, g.params
    )


def inverse(g: GroupElement) -> GroupElement:
    inv = mat_inv_mod(g.entries, g.dim, g.params.p, g.params.N)
    if inv is None:
        raise ValueError("element is singular mod p; not a group element")
    return GroupElement(inv, g.dim, g.params)


def commutator(g: GroupElement, h: GroupElement) -> GroupElement:
    """{g, h} = (hg)^-1 g h = g^-1 h^-1 g h."""
    _check_compatible(g, h)
    return multiply(inverse(multiply(h, g)), multiply(g, h))


def level(g: GroupElement) -> int:
    """Largest m with g = I mod p^m; N for the identity."""
    params = g.params
    d = g.dim
    best = params.N
    for i in range(d):
        for j in range(d):
            x = g.entries[i * d + j] - (1 if i == j else 0)
            v = valuation_int(x, params)
            if v < best:
                best = v
                if best == 0:
                    return 0
    return best


def project(g: GroupElement, n: int) -> GroupElement:
    """Entrywise reduction mod p^n; a group homomorphism."""
    if not 1 <= n <= g.params.N:
        raise BadPrecision(f"need 1 <= n <= {g.params.N}, got {n}")
    if n == g.params.N:
        return g
    sub = g.params.with_precision(n)
    return GroupElement(tuple(x % sub.modulus for x in g.entries), g.dim, sub)


@dataclass(frozen=True)
class GenSet:
    """An ordered generating tuple; letter k names elements[k-1]."""

    elements: tuple[GroupElement, ...]
    _steps: dict = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self) -> None:
        if not self.elements:
            raise ValueError("generating set is empty")
        first = self.elements[0]
        for g in self.elements[1:]:
            _check_compatible(first, g)
        object.__setattr__(self, "_steps", None)

    @property
    def params(self) -> RingParams:
        return self.elements[0].params

    @property
    def dim(self) -> int:
        return self.elements[0].dim

    def identity(self) -> GroupElement:
        return identity(self.params, self.dim)

    def step_matrices(self) -> dict[int, Mat]:
        """Letter -> matrix map for letters 1..m and -1..-m."""
        if self._steps is None:
            steps: dict[int, Mat] = {}
            for idx, g in enumerate(self.elements, start=1):
                steps[idx] = g.entries
                steps[-idx] = inverse(g).entries
            object.__setattr__(self, "_steps", steps)
        return self._steps

    def project(self, n: int) -> "GenSet":
        return GenSet(tuple(project(g, n) for g in self.elements))


def random_element(params: RingParams, dim: int, rng: Random) -> GroupElement:
    """Uniform-enough sampler: lower unipotent * upper unipotent * torus."""
    mod = params.modulus
    low = list(identity_mat(dim))
    up = list(identity_mat(dim))
    for i in range(dim):
        for j in range(dim):
            if i > j:
                low[i * dim + j] = rng.randrange(mod)
            elif i < j:
                up[i * dim + j] = rng.randrange(mod)
    torus = list(identity_mat(dim))
    prod = 1
    for i in range(dim - 1):
        u = rng.randrange(mod)
        while u % params.p == 0:
            u = rng.randrange(mod)
        torus[i * dim + i] = u
        prod = prod * u % mod
    torus[dim * dim - 1] = invert_int(prod, params)
    m = mat_mul(mat_mul(tuple(low), tuple(up), dim, mod), tuple(torus), dim, mod)
    return GroupElement(m, dim, params)


def random_in_gamma(params: RingParams, dim: int, m: int, rng: Random) -> GroupElement:
    """Sample level >= m by det-correcting I + p^m R; independent of exp.

    The last diagonal entry x is solved from det = cof * x + rest = 1,
    where cof = 1 mod p^m is a unit, so the correction keeps level >= m.
    """
    if m < 1:
        raise LevelTooLow("need m >= 1")
    if m >= params.N:
        return identity(params, dim)
    mod = params.modulus
    pm = params.p**m
    span = params.p ** (params.N - m)
    mat = list(identity_mat(dim))
    for i in range(dim):
        for j in range(dim):
            mat[i * dim + j] = (mat[i * dim + j] + pm * rng.randrange(span)) % mod
    last = dim * dim - 1
    cof = minor_det(tuple(mat), dim, dim - 1, dim - 1) % mod
    mat[last] = 0
    rest = int_det(tuple(mat), dim) % mod
    mat[last] = (1 - rest) * invert_int(cof, params) % mod
    g = GroupElement(tuple(mat), dim, params)
    assert level(g) >= m
    return g
