"""Irreducible root systems A-G in integer lattices, with covering certificates.

A subset X of the root system is *covered* by an integer vector h when every
pairing (h, s), s in X, is a unit mod p; a k-covering certificate is a
partition of the whole system into k covered classes together with its
witnesses.  Pairings are exact integer dot products throughout.

Embeddings are chosen so that every coordinate is an integer:

* A_l lives in Z^(l+1) as e_i - e_j; witnesses are zero-sum vectors so they
  land in the trace-zero diagonal of sl_(l+1).
* B/C/D use the standard +-e_i +- e_j patterns.
* G_2 uses coefficients over the two simple roots as coordinates.
* F_4 lists the sixteen (+-1,+-1,+-1,+-1) vectors in place of the half-sum
  roots, and E_6/E_7/E_8 double their half-sum roots the same way.  Scaling
  a single root by 2 multiplies its pairings by a unit, so coveredness is
  unchanged, and all arithmetic stays in Z.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from random import Random

from .errors import CoveringUnavailable, InvalidType
from .modring import is_prime

Root = tuple[int, ...]


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    roots: frozenset[Root]
    simple_roots: tuple[Root, ...]
    embed_dim: int


@dataclass(frozen=True)
class CoveringCertificate:
    """A verified partition of the roots into unit-paired classes.

    r = k + 1 is the bracket count realized by the constructive
    decomposition: one bracket for the Cartan part plus one per class.
    """

    type_label: str
    rank: int
    p: int
    k: int
    classes: tuple[tuple[Root, ...], ...]
    witnesses: tuple[tuple[int, ...], ...]
    pairing_sets: tuple[frozenset[int], ...]

    @property
    def r(self) -> int:
        return self.k + 1


def root_count(type_label: str, rank: int) -> int:
    """Classical root counts, used as an independent oracle on build()."""
    l = rank
    return {
        "A": l * (l + 1),
        "B": 2 * l * l,
        "C": 2 * l * l,
        "D": 2 * l * (l - 1),
        "E": {6: 72, 7: 126, 8: 240}.get(l, 0),
        "F": 48,
        "G": 12,
    }[type_label]


def dot(u: tuple[int, ...], v: tuple[int, ...]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _unit_vec(dim: int, i: int, scale: int = 1) -> Root:
    v = [0] * dim
    v[i] = scale
    return tuple(v)


def _pm_pairs(dim: int, scale_i: int = 1, scale_j: int = 1):
    """All +-e_i +- e_j with i < j (four sign choices)."""
    out = []
    for i, j in itertools.combinations(range(dim), 2):
        for si in (scale_i, -scale_i):
            for sj in (scale_j, -scale_j):
                v = [0] * dim
                v[i] = si
                v[j] = sj
                out.append(tuple(v))
    return out


def build(type_label: str, rank: int) -> RootSystem:
    """Construct the root system; InvalidType on a bad (type, rank) pair."""
    l = rank
    t = type_label
    if t == "A":
        if l < 1:
            raise InvalidType("type A needs rank >= 1")
        dim = l + 1
        roots = [
            tuple((1 if k == i else -1 if k == j else 0) for k in range(dim))
            for i in range(dim)
            for j in range(dim)
            if i != j
        ]
        simple = tuple(
            tuple((1 if k == i else -1 if k == i + 1 else 0) for k in range(dim))
            for i in range(l)
        )
    elif t == "B":
        if l < 2:
            raise InvalidType("type B needs rank >= 2")
        dim = l
        roots = [_unit_vec(dim, i, s) for i in range(dim) for s in (1, -1)]
        roots += _pm_pairs(dim)
        simple = tuple(
            tuple((1 if k == i else -1 if k == i + 1 else 0) for k in range(dim))
            for i in range(l - 1)
        ) + (_unit_vec(dim, l - 1),)
    elif t == "C":
        if l < 2:
            raise InvalidType("type C needs rank >= 2")
        dim = l
        roots = [_unit_vec(dim, i, 2 * s) for i in range(dim) for s in (1, -1)]
        roots += _pm_pairs(dim)
        simple = tuple(
            tuple((1 if k == i else -1 if k == i + 1 else 0) for k in range(dim))
            for i in range(l - 1)
        ) + (_unit_vec(dim, l - 1, 2),)
    elif t == "D":
        if l < 3:
            raise InvalidType("type D needs rank >= 3")
        dim = l
        roots = _pm_pairs(dim)
        last = [0] * dim
        last[l - 2] = 1
        last[l - 1] = 1
        simple = tuple(
            tuple((1 if k == i else -1 if k == i + 1 else 0) for k in range(dim))
            for i in range(l - 1)
        ) + (tuple(last),)
    elif t == "G":
        if l != 2:
            raise InvalidType("type G needs rank 2")
        dim = 2
        pos = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)]
        roots = pos + [(-a, -b) for a, b in pos]
        simple = ((1, 0), (0, 1))
    elif t == "F":
        if l != 4:
            raise InvalidType("type F needs rank 4")
        dim = 4
        roots = [_unit_vec(dim, i, s) for i in range(dim) for s in (1, -1)]
        roots += _pm_pairs(dim)
        roots += [tuple(signs) for signs in itertools.product((1, -1), repeat=4)]
        simple = (
            (0, 1, -1, 0),
            (0, 0, 1, -1),
            (0, 0, 0, 1),
            (1, -1, -1, -1),
        )
    elif t == "E":
        if l not in (6, 7, 8):
            raise InvalidType("type E needs rank 6, 7 or 8")
        dim = 8
        if l == 8:
            roots = _pm_pairs(dim)
            roots += [
                signs
                for signs in itertools.product((1, -1), repeat=8)
                if signs.count(-1) % 2 == 0
            ]
        elif l == 7:
            roots = _pm_pairs(6)
            roots = [r + (0, 0) for r in roots]
            roots += [(0,) * 6 + (1, -1), (0,) * 6 + (-1, 1)]
            roots += [
                signs + (e, -e)
                for signs in itertools.product((1, -1), repeat=6)
                for e in (1, -1)
                if signs.count(-1) % 2 == 1
            ]
        else:
            roots = _pm_pairs(5)
            roots = [r + (0, 0, 0) for r in roots]
            roots += [
                signs + (-s, -s, s)
                for signs in itertools.product((1, -1), repeat=5)
                for s in (1, -1)
                if signs.count(-1) % 2 == (0 if s == 1 else 1)
            ]
        half = (1, -1, -1, -1, -1, -1, -1, 1)
        chain = [
            (1, 1, 0, 0, 0, 0, 0, 0),
            (-1, 1, 0, 0, 0, 0, 0, 0),
            (0, -1, 1, 0, 0, 0, 0, 0),
            (0, 0, -1, 1, 0, 0, 0, 0),
            (0, 0, 0, -1, 1, 0, 0, 0),
            (0, 0, 0, 0, -1, 1, 0, 0),
            (0, 0, 0, 0, 0, -1, 1, 0),
        ]
        simple = (half,) + tuple(chain[: l - 1])
    else:
        raise InvalidType(f"unknown type {type_label!r}")

    root_set = frozenset(roots)
    if len(root_set) != root_count(t, l):
        raise AssertionError(
            f"{t}{l}: built {len(root_set)} roots, expected {root_count(t, l)}"
        )
    return RootSystem(t, l, root_set, simple, dim)


def _sorted_roots(roots) -> tuple[Root, ...]:
    return tuple(sorted(roots))


# ---------------------------------------------------------------------------
# certificates


def pairing_values(roots, witness) -> frozenset[int]:
    return frozenset(dot(witness, s) for s in roots)


def _symmetric_multiset(n: int, p: int) -> list[int] | None:
    """n integers, pairwise distinct mod p, with exact integer sum 0.

    Uses 0, +-1, +-2, ... which needs n <= p (n odd) or n <= p - 1 (n even);
    beyond that no n integers can be pairwise distinct mod p anyway when
    n > p, so None signals a genuine obstruction for the single-witness
    recipes.
    """
    if n % 2 == 1:
        half = (n - 1) // 2
        if half > (p - 1) // 2:
            return None
        vals = [0]
        for t in range(1, half + 1):
            vals += [t, -t]
        return vals
    half = n // 2
    if half > (p - 1) // 2:
        return None
    vals = []
    for t in range(1, half + 1):
        vals += [t, -t]
    return vals


def paper_recipe(rs: RootSystem) -> tuple[tuple[int, ...], ...] | None:
    """The witness tuple the source recipes prescribe for this type, or None.

    The recipe may still fail to cover at small p (the certifier checks);
    E_6/E_7 carry no explicit recipe and return None.
    """
    ones = (1,) * rs.embed_dim
    if rs.type_label == "G":
        return (ones,)
    if rs.type_label == "F":
        return (ones, (0, 1, 2, -2))
    if rs.type_label == "E" and rs.rank == 8:
        return (ones, (0, 1, 2, -2, 3, -3, 4, -4))
    return None


def recipe_witnesses(rs: RootSystem, p: int) -> tuple[tuple[int, ...], ...] | None:
    """Type-specific recipe witnesses at this p, or None when inapplicable."""
    if rs.type_label == "A":
        lam = _symmetric_multiset(rs.rank + 1, p)
        return (tuple(lam),) if lam is not None else None
    if rs.type_label in ("B", "C", "D"):
        lam = _symmetric_multiset(rs.rank, p)
        if lam is None:
            return None
        return ((1,) * rs.embed_dim, tuple(lam))
    return paper_recipe(rs)


def assign_classes(
    rs: RootSystem, witnesses, p: int
) -> tuple[tuple[Root, ...], ...] | None:
    """Greedy class assignment: each root joins the first witness that pairs
    to a unit; None when some root is covered by no witness."""
    classes: list[list[Root]] = [[] for _ in witnesses]
    for s in _sorted_roots(rs.roots):
        for idx, h in enumerate(witnesses):
            if dot(h, s) % p != 0:
                classes[idx].append(s)
                break
        else:
            return None
    return tuple(tuple(c) for c in classes)


def _certificate_from_parts(rs, classes, witnesses, p) -> CoveringCertificate | None:
    keep = [(c, h) for c, h in zip(classes, witnesses) if c]
    classes = tuple(tuple(c) for c, _ in keep)
    wits = tuple(tuple(h) for _, h in keep)
    cert = CoveringCertificate(
        type_label=rs.type_label,
        rank=rs.rank,
        p=p,
        k=len(classes),
        classes=classes,
        witnesses=wits,
        pairing_sets=tuple(pairing_values(c, h) for c, h in zip(classes, wits)),
    )
    return cert if verify_certificate(rs, cert, p) else None


def _make_certificate(rs, witnesses, p) -> CoveringCertificate | None:
    classes = assign_classes(rs, witnesses, p)
    if classes is None:
        return None
    return _certificate_from_parts(rs, classes, witnesses, p)


def _lift_symmetric(res: int, p: int) -> int:
    """Residue -> integer representative in [-(p-1)/2, (p-1)/2]."""
    res %= p
    return res if res <= (p - 1) // 2 else res - p


def _search_single_witness(rs: RootSystem, p: int, node_cap: int) -> tuple[int, ...] | None:
    """Exhaustive (up to scaling) search for one h covering all roots.

    Unit-ness of (h, s) only depends on h mod p, and scaling h by a unit
    preserves it, so candidates run over projective representatives.  For
    type A the witness must also have zero coordinate sum.
    """
    edim = rs.embed_dim
    roots = _sorted_roots(rs.roots)
    zero_sum = rs.type_label == "A"
    count = 0
    for first in range(edim):
        prefix = (0,) * first + (1,)
        for rest in itertools.product(range(p), repeat=edim - first - 1):
            count += 1
            if count > node_cap:
                return None
            h = prefix + rest
            if zero_sum and sum(h) % p != 0:
                continue
            if all(dot(h, s) % p != 0 for s in roots):
                lifted = tuple(_lift_symmetric(x, p) for x in h)
                if zero_sum:
                    # re-balance the integer lift to an exact zero sum
                    lifted = _rebalance_zero_sum(lifted, p)
                    if lifted is None:
                        continue
                return lifted
    return None


def _rebalance_zero_sum(vec: tuple[int, ...], p: int) -> tuple[int, ...] | None:
    """Shift entries by multiples of p to force an exact integer sum of 0."""
    total = sum(vec)
    if total % p != 0:
        return None
    vals = list(vec)
    steps = total // p
    i = 0
    while steps != 0 and i < len(vals):
        move = -p if steps > 0 else p
        vals[i] += move
        steps += 1 if steps < 0 else -1
        i += 1
    return tuple(vals) if sum(vals) == 0 else None


def _support2_pair_decision(rs: RootSystem, p: int):
    """Complete decision for B/C/D: is there a witness pair (mu, nu) with
    every class-1 pairing in {+-1, +-2} and nu covering the rest mod p?

    Every root touches at most two coordinates and the patterns are
    symmetric under coordinate permutations, so a solution is a set of
    rank-many pairwise-compatible symbols (mu_i, nu_i).  Within a
    nu-color class all difference roots force mu windows of width <= 2;
    negated color classes reflect each other through sums and translate
    jointly, and the self-negated classes are anchored near 0, so
    |mu| <= 8 loses no solutions.  A None return is therefore a proof
    that no such pair exists.
    """
    if rs.type_label not in ("B", "C", "D"):
        return None
    l = rs.rank
    D = (1, -1, 2, -2)
    symbols = []
    for mu in range(-8, 9):
        for nu in range(p):
            if rs.type_label == "B" and not (mu in D or nu != 0):
                continue
            if rs.type_label == "C" and not (2 * mu in D or nu != 0):
                continue
            symbols.append((mu, nu))
    n = len(symbols)
    adj: list[set[int]] = [set() for _ in range(n)]
    for a in range(n):
        ma, na = symbols[a]
        for b in range(a + 1, n):
            mb, nb = symbols[b]
            if (ma - mb in D or (na - nb) % p != 0) and (
                ma + mb in D or (na + nb) % p != 0
            ):
                adj[a].add(b)
                adj[b].add(a)

    chosen: list[int] = []

    def expand(cand: set[int]) -> bool:
        if len(chosen) == l:
            return True
        if len(chosen) + len(cand) < l:
            return False
        for v in sorted(cand):
            cand = cand - {v}
            if len(chosen) + 1 + len(cand & adj[v]) >= l:
                chosen.append(v)
                if expand(cand & adj[v]):
                    return True
                chosen.pop()
            if len(chosen) + len(cand) < l:
                return False
        return False

    if not expand(set(range(n))):
        return None
    mu = tuple(symbols[v][0] for v in chosen)
    nu = tuple(_lift_symmetric(symbols[v][1], p) for v in chosen)
    return mu, nu


def _search_pair_small_first(rs: RootSystem, p: int, node_cap: int):
    """Backtracking search for a pair (mu, nu): mu integer-valued with all
    class-1 pairings in {+-1, +-2}, nu covering the rest mod p.

    Complete over mu entries in [-2, 2] and nu entries mod p when the node
    cap is not hit; used for the types whose roots have wide support.
    """
    edim = rs.embed_dim
    roots = _sorted_roots(rs.roots)
    by_support: list[list[Root]] = [[] for _ in range(edim)]
    for s in roots:
        top = max(i for i, x in enumerate(s) if x != 0)
        by_support[top].append(s)

    mu = [0] * edim
    nu = [0] * edim
    nodes = 0

    def ok(depth: int) -> bool:
        for s in by_support[depth]:
            a = sum(mu[i] * s[i] for i in range(depth + 1))
            if a in (1, -1, 2, -2):
                continue
            b = sum(nu[i] * s[i] for i in range(depth + 1)) % p
            if b == 0:
                return False
        return True

    mu_vals = (0, 1, -1, 2, -2)
    nu_vals = tuple(range(p))

    def rec(depth: int) -> bool:
        nonlocal nodes
        if depth == edim:
            return True
        for mv in mu_vals:
            mu[depth] = mv
            for nv in nu_vals:
                nodes += 1
                if nodes > node_cap:
                    return False
                nu[depth] = nv
                if ok(depth) and rec(depth + 1):
                    return True
        mu[depth] = 0
        nu[depth] = 0
        return False

    if rec(0):
        return tuple(mu), tuple(_lift_symmetric(x, p) for x in nu)
    return None


def _search_pair_random(rs: RootSystem, p: int, rng: Random, attempt_cap: int):
    """Randomized pair search: both witnesses drawn with entries in
    [-(p-1)/2, (p-1)/2]; succeeds when every root pairs to a unit with at
    least one of them."""
    edim = rs.embed_dim
    roots = _sorted_roots(rs.roots)
    half = (p - 1) // 2
    for _ in range(attempt_cap):
        ha = tuple(rng.randint(-half, half) for _ in range(edim))
        hb = tuple(rng.randint(-half, half) for _ in range(edim))
        if all(dot(ha, s) % p != 0 or dot(hb, s) % p != 0 for s in roots):
            return ha, hb
    return None


_TARGET_K = {"A": 1, "G": 1, "B": 2, "C": 2, "D": 2, "F": 2, "E": 2}


def certify_cover(
    rs: RootSystem,
    p: int,
    *,
    seed: int = 0,
    attempt_cap: int = 10**6,
    cache_path: str | None = None,
) -> CoveringCertificate:
    """Produce a verified covering certificate for (type, rank, p).

    Tries the source recipe for the type first, then falls back to bounded
    searches with the same number of classes as the recipe shape (1 for
    A/G, 2 otherwise).  Raises CoveringUnavailable when nothing is found,
    which signals that p is below the usable threshold for this type.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")

    if cache_path is not None:
        for cert in load_certificates(cache_path):
            if (
                cert.type_label == rs.type_label
                and cert.rank == rs.rank
                and cert.p == p
                and verify_certificate(rs, cert, p)
            ):
                return cert

    cert = _certify_uncached(rs, p, seed, attempt_cap)
    if cache_path is not None:
        append_certificate(cert, cache_path)
    return cert


def _certify_uncached(rs, p, seed, attempt_cap) -> CoveringCertificate:
    target_k = _TARGET_K[rs.type_label]

    wits = recipe_witnesses(rs, p)
    if wits is not None:
        cert = _make_certificate(rs, wits, p)
        if cert is not None and cert.k <= target_k:
            return cert

    if target_k == 1:
        if rs.type_label == "A" and rs.rank + 1 > p:
            # l+1 coordinates can never be pairwise distinct mod p
            raise CoveringUnavailable(
                f"A_{rs.rank} needs {rs.rank + 1} distinct residues mod {p}"
            )
        h = _search_single_witness(rs, p, attempt_cap)
        if h is not None:
            cert = _make_certificate(rs, (h,), p)
            if cert is not None:
                return cert
        raise CoveringUnavailable(
            f"{rs.type_label}_{rs.rank} has no 1-covering mod {p} (exhaustive)"
        )

    if rs.type_label in ("B", "C", "D"):
        pair = _support2_pair_decision(rs, p)
    else:
        pair = _search_pair_small_first(rs, p, min(attempt_cap, 300_000))
    if pair is not None:
        # class 1 holds exactly the roots whose first pairing is +-1 or +-2,
        # so its recorded pairing set stays inside {+-1, +-2}
        mu, nu = pair
        cls1 = [s for s in _sorted_roots(rs.roots) if dot(mu, s) in (1, -1, 2, -2)]
        cls2 = [s for s in _sorted_roots(rs.roots) if s not in set(cls1)]
        cert = _certificate_from_parts(rs, (cls1, cls2), (mu, nu), p)
        if cert is not None:
            return cert
    pair = _search_pair_random(rs, p, Random(seed), attempt_cap)
    if pair is not None:
        cert = _make_certificate(rs, pair, p)
        if cert is not None:
            return cert
    raise CoveringUnavailable(
        f"{rs.type_label}_{rs.rank} mod {p}: no 2-covering within the search bound"
    )


def verify_certificate(rs: RootSystem, cert: CoveringCertificate, p: int) -> bool:
    """Pure recheck: exact partition, every pairing a unit mod p, pairing
    sets as recorded, and zero-sum witnesses for type A."""
    if cert.k != len(cert.classes) or cert.k != len(cert.witnesses):
        return False
    seen: list[Root] = []
    for cls in cert.classes:
        seen.extend(cls)
    if len(seen) != len(rs.roots) or set(seen) != rs.roots:
        return False
    for cls, h, pset in zip(cert.classes, cert.witnesses, cert.pairing_sets):
        if len(h) != rs.embed_dim:
            return False
        if rs.type_label == "A" and sum(h) != 0:
            return False
        vals = set()
        for s in cls:
            v = dot(h, s)
            if v % p == 0:
                return False
            vals.add(v)
        if frozenset(vals) != pset:
            return False
    return True


# ---------------------------------------------------------------------------
# certificate files: plain structured text, decimal integers


def _format_vec(v) -> str:
    return " ".join(str(x) for x in v)


def append_certificate(cert: CoveringCertificate, path: str) -> None:
    with open(path, "a", encoding="ascii") as fh:
        fh.write(format_certificate(cert))


def format_certificate(cert: CoveringCertificate) -> str:
    lines = [f"certificate {cert.type_label} {cert.rank} {cert.p} {cert.k}"]
    for cls, h, pset in zip(cert.classes, cert.witnesses, cert.pairing_sets):
        lines.append(f"witness {_format_vec(h)}")
        lines.append(f"pairings {_format_vec(sorted(pset))}")
        lines.append(f"class {len(cls)}")
        for s in cls:
            lines.append(f"root {_format_vec(s)}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def load_certificates(path: str) -> list[CoveringCertificate]:
    try:
        with open(path, encoding="ascii") as fh:
            tokens = [line.split() for line in fh if line.strip()]
    except FileNotFoundError:
        return []
    certs = []
    i = 0
    while i < len(tokens):
        head = tokens[i]
        if head[0] != "certificate":
            raise ValueError(f"bad certificate file near line {i + 1}")
        t, rank, p, k = head[1], int(head[2]), int(head[3]), int(head[4])
        i += 1
        classes, wits, psets = [], [], []
        for _ in range(k):
            assert tokens[i][0] == "witness"
            wits.append(tuple(int(x) for x in tokens[i][1:]))
            i += 1
            assert tokens[i][0] == "pairings"
            psets.append(frozenset(int(x) for x in tokens[i][1:]))
            i += 1
            assert tokens[i][0] == "class"
            size = int(tokens[i][1])
            i += 1
            cls = []
            for _ in range(size):
                assert tokens[i][0] == "root"
                cls.append(tuple(int(x) for x in tokens[i][1:]))
                i += 1
            classes.append(tuple(cls))
        assert tokens[i][0] == "end"
        i += 1
        certs.append(
            CoveringCertificate(t, rank, p, k, tuple(classes), tuple(wits), tuple(psets))
        )
    return certs
