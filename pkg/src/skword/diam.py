"""Exact Cayley-graph oracles: distances, diameters, chain diameters.

These are the ground truth the synthesis layer is compared against.  BFS
enumerates the full quotient at precision n, so everything here is exact;
the size cap keeps accidental huge enumerations from running away.

chain_diameter(S, n, j1, j2) is the least l such that every coset h*Gamma_j2
with h in Gamma_j1 meets the radius-l ball: computed as the max over cosets
of the min distance inside the coset, with cosets keyed exactly by
(h - I)/p^j1 mod p^(j2-j1).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NotGenerating, TooLarge
from .group import GenSet
from .matops import Mat, identity_mat, mat_mul
from .sk import _ordered_steps, sl_order


@dataclass
class DistanceTable:
    """Exact shortest-path distances from the identity at precision n."""

    gens: GenSet
    n: int
    dist: dict[Mat, int]
    complete: bool
    expected_order: int

    @property
    def closure_size(self) -> int:
        return len(self.dist)


def bfs_distances(gens: GenSet, n: int, *, cap: int = 10**8) -> DistanceTable:
    """Exact distances over S union S^-1; TooLarge when |G_n| exceeds the
    cap.  A proper-subgroup closure is returned as a partial table with
    complete=False rather than raised."""
    params = gens.params
    if not 1 <= n <= params.N:
        raise ValueError(f"need 1 <= n <= {params.N}")
    p, dim = params.p, gens.dim
    expected = sl_order(p, n, dim)
    if expected > cap:
        raise TooLarge(f"|G_{n}| = {expected} exceeds cap {cap}")
    mod = p**n
    steps = [mat for _, mat in _ordered_steps(gens, n)]
    ident = identity_mat(dim)
    dist: dict[Mat, int] = {ident: 0}
    frontier = deque([ident])
    while frontier:
        cur = frontier.popleft()
        d = dist[cur] + 1
        for mat in steps:
            nxt = mat_mul(cur, mat, dim, mod)
            if nxt not in dist:
                dist[nxt] = d
                frontier.append(nxt)
    return DistanceTable(gens, n, dist, len(dist) == expected, expected)


def exact_diameter(gens: GenSet, n: int, *, table: DistanceTable | None = None) -> int:
    """Max distance over the whole group; NotGenerating if S does not
    generate the precision-n quotient."""
    if table is None:
        table = bfs_distances(gens, n)
    if not table.complete:
        raise NotGenerating(
            f"closure {table.closure_size} < |G_{table.n}| = {table.expected_order}"
        )
    return max(table.dist.values())


def chain_diameter(
    gens: GenSet,
    n: int,
    j1: int,
    j2: int,
    *,
    table: DistanceTable | None = None,
) -> int:
    """diam(Gamma_j1 / Gamma_j2 ; S) computed from the exact table."""
    if not 0 <= j1 <= j2 <= n:
        raise ValueError(f"need 0 <= j1 <= j2 <= {n}")
    if j1 == j2:
        return 0
    if table is None:
        table = bfs_distances(gens, n)
    if not table.complete:
        raise NotGenerating("generating set does not generate at this precision")
    params = gens.params
    p, dim = params.p, gens.dim
    mod = p**n
    pj1 = p**j1
    span = p ** (j2 - j1)
    best: dict[Mat, int] = {}
    for key, d in table.dist.items():
        deltas = []
        for i, x in enumerate(key):
            delta = (x - (1 if i % (dim + 1) == 0 else 0)) % mod
            if delta % pj1 != 0:
                deltas = None
                break
            deltas.append((delta // pj1) % span)
        if deltas is None:
            continue
        ck = tuple(deltas)
        prev = best.get(ck)
        if prev is None or d < prev:
            best[ck] = d
    # [Gamma_j1 : Gamma_j2]; the quotient is all of G_j2 when j1 = 0
    low = 1 if j1 == 0 else sl_order(p, j1, dim)
    cosets = sl_order(p, j2, dim) // low
    if len(best) != cosets:
        raise AssertionError(f"saw {len(best)} cosets, expected {cosets}")
    return max(best.values())


def check_subadditivity(
    gens: GenSet,
    n: int,
    chain: tuple[int, int, int],
    *,
    table: DistanceTable | None = None,
) -> bool:
    """diam(G_j0/G_j2) <= diam(G_j0/G_j1) + diam(G_j1/G_j2) on exact values."""
    j0, j1, j2 = chain
    if not j0 <= j1 <= j2:
        raise ValueError("chain must be ordered")
    if table is None:
        table = bfs_distances(gens, n)
    whole = chain_diameter(gens, n, j0, j2, table=table)
    upper = chain_diameter(gens, n, j0, j1, table=table)
    lower = chain_diameter(gens, n, j1, j2, table=table)
    return whole <= upper + lower


def save_distances(table: DistanceTable, path: str) -> None:
    """One "element-key distance" line per element, sorted by key."""
    with open(path, "w", encoding="ascii") as fh:
        for key in sorted(table.dist):
            fh.write(",".join(str(x) for x in key) + f" {table.dist[key]}\n")
