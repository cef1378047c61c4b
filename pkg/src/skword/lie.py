"""The type-A Chevalley Lie algebra over Z/p^N Z: trace-zero matrices.

The Chevalley basis is concrete here: e_s for the root s = e_i - e_j is the
elementary matrix E_ij, and the simple co-root h_r is E_rr - E_(r+1)(r+1).
Structure constants are never tabulated; brackets come straight from the
matrix model, so they are exact by construction.

decompose_brackets realizes strong perfectness constructively: the diagonal
part of A is one bracket [x', x''] over the simple roots, and each covered
class X with witness h contributes [h, y'] with y' = sum a_s / (h, s) e_s.
Pairings certified as units mod p are invertible mod p^N, so the whole
reconstruction is exact at full precision.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CertificateMismatch, DimensionMismatch
from .matops import Mat, mat_mul, mat_sub, zero_mat
from .modring import RingParams, invert_int
from .rootsys import CoveringCertificate, Root, dot


@dataclass(frozen=True, slots=True)
class LieElement:
    """A dim x dim matrix over Z/p^N Z with trace 0."""

    entries: Mat
    dim: int
    params: RingParams

    def rows(self) -> list[list[int]]:
        d = self.dim
        return [list(self.entries[i * d : (i + 1) * d]) for i in range(d)]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)


def lie_element(rows, params: RingParams) -> LieElement:
    """Validating constructor: reduces entries and checks trace = 0 mod p^N."""
    flat = tuple(int(x) % params.modulus for row in rows for x in row)
    dim = len(rows)
    if len(flat) != dim * dim:
        raise DimensionMismatch("matrix is not square")
    if sum(flat[i * dim + i] for i in range(dim)) % params.modulus != 0:
        raise ValueError("trace is not 0 mod p^N")
    return LieElement(flat, dim, params)


def zero(params: RingParams, dim: int) -> LieElement:
    return LieElement(zero_mat(dim), dim, params)


def elementary(params: RingParams, dim: int, i: int, j: int, coeff: int = 1) -> LieElement:
    """coeff * E_ij for i != j (a root vector)."""
    if i == j:
        raise ValueError("use cartan coordinates for diagonal elements")
    m = [0] * (dim * dim)
    m[i * dim + j] = coeff % params.modulus
    return LieElement(tuple(m), dim, params)


def bracket(a: LieElement, b: LieElement) -> LieElement:
    if a.params != b.params or a.dim != b.dim:
        raise DimensionMismatch("bracket operands over different rings")
    mod = a.params.modulus
    ab = mat_mul(a.entries, b.entries, a.dim, mod)
    ba = mat_mul(b.entries, a.entries, a.dim, mod)
    return LieElement(mat_sub(ab, ba, mod), a.dim, a.params)


def root_key(i: int, j: int, dim: int) -> Root:
    """The root e_i - e_j as an integer coordinate vector."""
    v = [0] * dim
    v[i] = 1
    v[j] = -1
    return tuple(v)


def _root_position(s: Root) -> tuple[int, int]:
    i = s.index(1)
    j = s.index(-1)
    return i, j


@dataclass(frozen=True)
class ChevalleyCoords:
    """Coordinates over the Chevalley basis: root coefficients keyed by the
    root vector, plus coefficients over the simple co-roots."""

    phi: dict[Root, int]
    cartan: tuple[int, ...]
    dim: int
    params: RingParams


def to_coords(a: LieElement) -> ChevalleyCoords:
    d = a.dim
    phi = {}
    for i in range(d):
        for j in range(d):
            if i != j:
                phi[root_key(i, j, d)] = a.entries[i * d + j]
    mod = a.params.modulus
    cartan = []
    acc = 0
    for r in range(d - 1):
        acc = (acc + a.entries[r * d + r]) % mod
        cartan.append(acc)
    return ChevalleyCoords(phi, tuple(cartan), d, a.params)


def from_coords(c: ChevalleyCoords) -> LieElement:
    d = c.dim
    mod = c.params.modulus
    m = [0] * (d * d)
    for s, coeff in c.phi.items():
        i, j = _root_position(s)
        m[i * d + j] = coeff % mod
    prev = 0
    for r in range(d - 1):
        m[r * d + r] = (c.cartan[r] - prev) % mod
        prev = c.cartan[r]
    m[(d - 1) * d + (d - 1)] = (-c.cartan[d - 2]) % mod if d >= 2 else 0
    return LieElement(tuple(m), d, c.params)


def diagonal_witness(h: tuple[int, ...], params: RingParams) -> LieElement:
    """diag(h) as a Lie element; h must have zero coordinate sum."""
    d = len(h)
    if sum(h) % params.modulus != 0:
        raise ValueError("witness does not have zero coordinate sum")
    m = [0] * (d * d)
    for i, x in enumerate(h):
        m[i * d + i] = x % params.modulus
    return LieElement(tuple(m), d, params)


def strong_perfectness_r(cert: CoveringCertificate) -> int:
    """Brackets needed per element: one for the Cartan part plus one per
    covered class."""
    return cert.k + 1


def decompose_brackets(
    a: LieElement, cert: CoveringCertificate
) -> list[tuple[LieElement, LieElement]]:
    """Write a as a sum of at most cert.k + 1 brackets, exactly over Z/p^N Z.

    The certificate must be a verified type-A certificate for rank dim - 1
    at the same prime.
    """
    d = a.dim
    params = a.params
    if cert.type_label != "A" or cert.rank != d - 1 or cert.p != params.p:
        raise CertificateMismatch(
            f"certificate {cert.type_label}_{cert.rank}@{cert.p} does not fit "
            f"sl_{d} over p={params.p}"
        )
    mod = params.modulus
    coords = to_coords(a)
    pairs: list[tuple[LieElement, LieElement]] = []

    if any(x % mod != 0 for x in coords.cartan):
        x_left = [0] * (d * d)
        x_right = [0] * (d * d)
        for r in range(d - 1):
            x_left[r * d + (r + 1)] = coords.cartan[r]
            x_right[(r + 1) * d + r] = 1
        pairs.append(
            (
                LieElement(tuple(x_left), d, params),
                LieElement(tuple(x_right), d, params),
            )
        )

    for cls, h in zip(cert.classes, cert.witnesses):
        y = [0] * (d * d)
        nonzero = False
        for s in cls:
            coeff = coords.phi[s]
            if coeff % mod == 0:
                continue
            nonzero = True
            i, j = _root_position(s)
            y[i * d + j] = coeff * invert_int(dot(h, s), params) % mod
        if nonzero:
            pairs.append((diagonal_witness(h, params), LieElement(tuple(y), d, params)))
    return pairs
