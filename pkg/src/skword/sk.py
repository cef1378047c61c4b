"""Short-word synthesis: base tables, commutator decomposition, layering.

The pipeline refines a base-table approximation (exact mod p^2, found by
BFS) layer by layer: a residual z at level m >= 2 is written as a product
of at most r commutators of elements at levels ceil(m/2) and floor(m/2)
(sk_prime), each of which is synthesized recursively; the commutator of
the approximants agrees with the commutator of the exact components one
layer deeper than the residual, which is what lets the correction words
stay short.  Per-layer unreduced lengths obey L(m) <= 4r * L(ceil(m/2))
with L(1) bounded by the base-table diameter.

The recursion here is the layered form: a single left-to-right walk over
layers 2..n-1 keeps one global residual and corrects it in place.  The
textbook recursive formulation (re-expanding every subcall at full depth)
is kept as sk_literal for cross-checking at tiny n; it computes the same
congruences at exponential cost.
"""

from __future__ import annotations

import hashlib
import math
from collections import deque
from dataclasses import dataclass, field

from .errors import BadParams, BadPrecision, LevelTooLow, NotGenerating
from .expolog import exp_trunc, nlog
from .group import GenSet, GroupElement, inverse, level, multiply, project
from .lie import decompose_brackets
from .matops import Mat, identity_mat, mat_inv_mod, mat_mul
from .rootsys import CoveringCertificate, root_count
from .words import Word, comm_word, word_concat


def sl_order(p: int, n: int, dim: int) -> int:
    """|SL_dim(Z/p^n Z)| = p^((n-1)(dim^2-1)) * |SL_dim(F_p)|."""
    field_order = p ** (dim * (dim - 1) // 2)
    for i in range(2, dim + 1):
        field_order *= p**i - 1
    return p ** ((n - 1) * (dim * dim - 1)) * field_order


@dataclass
class BaseTable:
    """Shortest words for every element of the precision-2 quotient.

    Entries map the canonical matrix key to (distance, letter, parent key);
    words are reconstructed by walking parents.  Ties between equal-length
    words break toward the lexicographically smallest letter sequence under
    the order 1 < -1 < 2 < -2 < ...
    """

    gens: GenSet
    precision: int
    entries: dict[Mat, tuple[int, int, Mat | None]]
    max_len: int
    order: int

    @property
    def p(self) -> int:
        return self.gens.params.p

    def key_of(self, g: GroupElement) -> Mat:
        mod = self.p**self.precision
        return tuple(x % mod for x in g.entries)

    def word_for_key(self, key: Mat) -> Word:
        letters: list[int] = []
        cur = key
        while True:
            dist, letter, parent = self.entries[cur]
            if parent is None:
                break
            letters.append(letter)
            cur = parent
        letters.reverse()
        return tuple(letters)

    def word(self, g: GroupElement) -> Word:
        return self.word_for_key(self.key_of(g))


def _ordered_steps(gens: GenSet, prec: int) -> list[tuple[int, Mat]]:
    """Steps at the given precision in the tie-break order 1, -1, 2, -2, ..."""
    steps: list[tuple[int, Mat]] = []
    dim = gens.dim
    p = gens.params.p
    mod = p**prec
    for idx, g in enumerate(gens.elements, start=1):
        fwd = tuple(x % mod for x in g.entries)
        inv = mat_inv_mod(fwd, dim, p, prec)
        steps.append((idx, fwd))
        steps.append((-idx, inv))
    return steps


def build_base_table(gens: GenSet) -> BaseTable:
    """BFS over the precision-2 quotient; NotGenerating when the closure is
    a proper subgroup."""
    params = gens.params
    prec = min(2, params.N)
    p, dim = params.p, gens.dim
    mod = p**prec
    expected = sl_order(p, prec, dim)
    steps = _ordered_steps(gens, prec)
    ident = identity_mat(dim)
    entries: dict[Mat, tuple[int, int, Mat | None]] = {ident: (0, 0, None)}
    frontier = deque([ident])
    max_len = 0
    while frontier:
        cur = frontier.popleft()
        d = entries[cur][0] + 1
        for letter, mat in steps:
            nxt = mat_mul(cur, mat, dim, mod)
            if nxt not in entries:
                entries[nxt] = (d, letter, cur)
                frontier.append(nxt)
                if d > max_len:
                    max_len = d
    if len(entries) != expected:
        raise NotGenerating(
            f"closure has {len(entries)} elements; |G_{prec}| = {expected}"
        )
    return BaseTable(gens, prec, entries, max_len, expected)


def sk_prime(
    g: GroupElement, n: int, cert: CoveringCertificate
) -> list[tuple[GroupElement, GroupElement]]:
    """Decompose g in Gamma_n as a product of <= r commutators of elements
    at levels ceil(n/2) and floor(n/2), exact mod p^(n+1).

    Takes the normalized log, splits it into certified bracket pairs, and
    exponentiates the halves back.
    """
    if n < 2:
        raise LevelTooLow(f"need n >= 2, got {n}")
    if level(g) < n:
        raise LevelTooLow(f"element has level {level(g)} < {n}")
    i = (n + 1) // 2
    j = n // 2
    a = nlog(g, n)
    return [
        (exp_trunc(left, i), exp_trunc(right, j))
        for left, right in decompose_brackets(a, cert)
    ]


@dataclass
class SKStats:
    """Length accounting for one synthesis run."""

    n: int
    r: int
    c2: int
    per_layer: dict[int, int] = field(default_factory=dict)
    layer_max: dict[int, int] = field(default_factory=dict)
    total_unreduced: int = 0
    reduced_len: int = 0
    bound: float = 0.0
    sk_prime_calls: int = 0
    base_lookups: int = 0


class _Synth:
    """Shared state for one synthesis run: full-precision step matrices,
    cached base-word evaluations, and per-layer length maxima.

    Word values are threaded alongside the words themselves (the value of a
    commutator word is the commutator of the component values), so nothing
    is ever re-evaluated letter by letter.
    """

    def __init__(self, gens: GenSet, table: BaseTable, cert: CoveringCertificate):
        self.gens = gens
        self.table = table
        self.cert = cert
        self.params = gens.params
        self.dim = gens.dim
        self.mod = self.params.modulus
        self.steps = gens.step_matrices()
        self.value_cache: dict[Mat, Mat] = {}
        self.stats: SKStats | None = None

    def _record(self, layer: int, unreduced: int) -> None:
        prev = self.stats.layer_max.get(layer, -1)
        if unreduced > prev:
            self.stats.layer_max[layer] = unreduced

    def base(self, x: GroupElement) -> tuple[Word, int, Mat]:
        key = self.table.key_of(x)
        word = self.table.word_for_key(key)
        value = self.value_cache.get(key)
        if value is None:
            value = identity_mat(self.dim)
            for letter in word:
                value = mat_mul(value, self.steps[letter], self.dim, self.mod)
            self.value_cache[key] = value
        self.stats.base_lookups += 1
        self._record(1, len(word))
        return word, len(word), value

    def layer(self, x: GroupElement, m: int) -> tuple[Word, int, Mat]:
        """Word w with evaluate(w) = x mod p^(m+1); returns (word,
        unreduced letter count, exact full-precision value)."""
        if m <= 1:
            return self.base(x)
        pairs = sk_prime(x, m, self.cert)
        self.stats.sk_prime_calls += 1
        i = (m + 1) // 2
        j = m // 2
        word: Word = ()
        unreduced = 0
        value = identity_mat(self.dim)
        for xk, yk in pairs:
            u, un_u, val_u = self.layer(xk, i)
            v, un_v, val_v = self.layer(yk, j)
            word = word_concat(word, comm_word(u, v))
            unreduced += 2 * (un_u + un_v)
            value = mat_mul(value, self._comm(val_u, val_v), self.dim, self.mod)
        self._record(m, unreduced)
        return word, unreduced, value

    def _comm(self, a: Mat, b: Mat) -> Mat:
        ba = mat_mul(b, a, self.dim, self.mod)
        inv = mat_inv_mod(ba, self.dim, self.params.p, self.params.N)
        return mat_mul(inv, mat_mul(a, b, self.dim, self.mod), self.dim, self.mod)


def layer_word(
    x: GroupElement,
    m: int,
    gens: GenSet,
    table: BaseTable,
    cert: CoveringCertificate,
) -> Word:
    """Word agreeing with x mod p^(m+1); base-table lookup for m <= 1,
    recursive commutator synthesis above."""
    if m < 1:
        raise LevelTooLow(f"need m >= 1, got {m}")
    if level(x) < m:
        raise LevelTooLow(f"element has level {level(x)} < {m}")
    synth = _Synth(gens, table, cert)
    synth.stats = SKStats(n=m, r=cert.r, c2=table.max_len)
    word, _, _ = synth.layer(x, m)
    return word


def sk_approx(
    g: GroupElement,
    gens: GenSet,
    n: int,
    table: BaseTable,
    cert: CoveringCertificate,
) -> tuple[Word, SKStats]:
    """Synthesize a word w with evaluate(w) = g mod p^n.

    Walks layers m = 2..n-1 keeping the residual evaluate(w)^-1 g exact;
    each layer's correction comes from sk_prime plus recursion.  Stats
    record per-layer unreduced lengths and the bound C_2 * n^(1 + d_2(r)).
    """
    params = g.params
    if not 1 <= n <= params.N:
        raise BadPrecision(f"need 1 <= n <= {params.N}, got {n}")
    synth = _Synth(gens, table, cert)
    r = cert.r
    stats = SKStats(n=n, r=r, c2=table.max_len)
    stats.bound = diam_bound(n, 2, r, table.max_len)
    synth.stats = stats

    word, unreduced, value = synth.base(g)
    stats.per_layer[1] = unreduced
    stats.total_unreduced = unreduced

    for m in range(2, n):
        residual = multiply(
            GroupElement(
                mat_inv_mod(value, synth.dim, params.p, params.N), synth.dim, params
            ),
            g,
        )
        if residual.is_identity():
            stats.per_layer[m] = 0
            continue
        if level(residual) < m:
            raise AssertionError(f"residual level {level(residual)} below layer {m}")
        corr, un_corr, corr_value = synth.layer(residual, m)
        word = word_concat(word, corr)
        value = mat_mul(value, corr_value, synth.dim, synth.mod)
        stats.per_layer[m] = un_corr
        stats.total_unreduced += un_corr

    stats.reduced_len = len(word)
    if project(GroupElement(value, synth.dim, params), min(n, params.N)).entries != (
        project(g, min(n, params.N)).entries
    ):
        raise AssertionError("synthesized word does not match its target")
    return word, stats


def sk_literal(
    g: GroupElement,
    gens: GenSet,
    n: int,
    table: BaseTable,
    cert: CoveringCertificate,
) -> Word:
    """Textbook recursive synthesis, exponential in n; cross-check only.

    SK(g, n) = SK(g, n-1) followed by commutators of recursively
    synthesized components of the residual.
    """
    from .words import word_evaluate

    if n <= 2:
        return table.word(g)
    w0 = sk_literal(g, gens, n - 1, table, cert)
    z = multiply(inverse(word_evaluate(w0, gens)), g)
    if z.is_identity():
        return w0
    word = w0
    for xk, yk in sk_prime(z, n - 1, cert):
        wk = sk_literal(xk, gens, n - 1, table, cert)
        wk2 = sk_literal(yk, gens, n - 1, table, cert)
        word = word_concat(word, comm_word(wk, wk2))
    return word


def d_exponent(i: int, r: int) -> float:
    """log(4r) / (log 2i - log(i+1)); decreasing in i toward 2 + log2(r)."""
    if i < 2 or r < 1:
        raise BadParams(f"need i >= 2 and r >= 1, got i={i}, r={r}")
    return math.log(4 * r) / (math.log(2 * i) - math.log(i + 1))


def diam_bound(n: int, i: int, r: int, c_i: float) -> float:
    """The layered-synthesis length bound C_i * n^(1 + d_i(r))."""
    if n < 1:
        raise BadParams(f"need n >= 1, got {n}")
    return c_i * n ** (1 + d_exponent(i, r))


def default_C_bound(p: int, i: int, type_label: str, rank: int) -> int:
    """Crude diameter bound p^(i * dim L) with dim L = |roots| + rank."""
    if i < 0:
        raise BadParams("need i >= 0")
    if i == 0:
        return 1
    return p ** (i * (root_count(type_label, rank) + rank))


# ---------------------------------------------------------------------------
# base-table persistence: "p gens_hash" header, then "key word" lines


def gens_hash(gens: GenSet) -> str:
    params = gens.params
    blob = f"{params.p} {params.N} {gens.dim}|" + "|".join(
        ",".join(str(x) for x in g.entries) for g in gens.elements
    )
    return hashlib.sha256(blob.encode("ascii")).hexdigest()[:16]


def save_base_table(table: BaseTable, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{table.p} {gens_hash(table.gens)}\n")
        for key in sorted(table.entries):
            word = table.word_for_key(key)
            key_txt = ",".join(str(x) for x in key)
            word_txt = " ".join(str(x) for x in word)
            fh.write(f"{key_txt} {word_txt}".rstrip() + "\n")


def load_base_table_words(path: str) -> tuple[str, dict[Mat, Word]]:
    """Read back (gens_hash, key -> word); the caller checks the hash."""
    with open(path, encoding="ascii") as fh:
        header = fh.readline().split()
        stored_hash = header[1]
        words: dict[Mat, Word] = {}
        for line in fh:
            toks = line.split()
            if not toks:
                continue
            key = tuple(int(x) for x in toks[0].split(","))
            words[key] = tuple(int(x) for x in toks[1:])
    return stored_hash, words
