"""Command-line harness: certificates, synthesis, diameters, verification.

Output is one "key=value ..." record per line with a stable key order, so
runs diff cleanly against stored fixtures.  Every record echoes the seed
and the full parameter set needed to reproduce it.

File formats
------------
matrix file:    "p N dim" header, then dim rows of dim decimal entries
generator file: "p N dim" header, a line with the count m, then m blocks
                of dim rows each
word output:    space-separated signed generator indices, e.g. "1 -2 1 1"
"""

from __future__ import annotations

import argparse
import sys
import time
from random import Random

from .diam import bfs_distances, chain_diameter, check_subadditivity, exact_diameter
from .errors import SkwordError
from .expolog import exp_trunc, random_lie, verify_weigel
from .group import (
    GenSet,
    GroupElement,
    commutator,
    group_element,
    identity,
    level,
    multiply,
    random_element,
    random_in_gamma,
)
from .lie import bracket
from .modring import RingParams
from .rootsys import build, certify_cover
from .sk import (
    build_base_table,
    d_exponent,
    default_C_bound,
    diam_bound,
    sk_approx,
    sk_prime,
)
from .words import format_word, word_evaluate

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_DOMAIN_ERROR = 3


def read_matrix_file(path: str) -> GroupElement:
    with open(path, encoding="ascii") as fh:
        p, n, dim = (int(x) for x in fh.readline().split())
        params = RingParams(p, n)
        rows = [[int(x) for x in fh.readline().split()] for _ in range(dim)]
    return group_element(rows, params)


def write_matrix_file(g: GroupElement, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{g.params.p} {g.params.N} {g.dim}\n")
        for row in g.rows():
            fh.write(" ".join(str(x) for x in row) + "\n")


def read_gens_file(path: str) -> GenSet:
    with open(path, encoding="ascii") as fh:
        p, n, dim = (int(x) for x in fh.readline().split())
        params = RingParams(p, n)
        count = int(fh.readline())
        gens = []
        for _ in range(count):
            rows = [[int(x) for x in fh.readline().split()] for _ in range(dim)]
            gens.append(group_element(rows, params))
    return GenSet(tuple(gens))


def write_gens_file(gens: GenSet, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        params = gens.params
        fh.write(f"{params.p} {params.N} {gens.dim}\n")
        fh.write(f"{len(gens.elements)}\n")
        for g in gens.elements:
            for row in g.rows():
                fh.write(" ".join(str(x) for x in row) + "\n")


def _record(pairs: list[tuple[str, object]]) -> str:
    return " ".join(f"{k}={v}" for k, v in pairs)


def cmd_certify(args) -> int:
    rs = build(args.type, args.rank)
    cert = certify_cover(
        rs, args.p, seed=args.seed, cache_path=args.cache
    )
    pairs: list[tuple[str, object]] = [
        ("cmd", "certify"),
        ("type", args.type),
        ("rank", args.rank),
        ("p", args.p),
        ("seed", args.seed),
        ("k", cert.k),
        ("r", cert.r),
    ]
    for idx, (cls, wit, pset) in enumerate(
        zip(cert.classes, cert.witnesses, cert.pairing_sets), start=1
    ):
        pairs.append((f"class{idx}_size", len(cls)))
        pairs.append((f"witness{idx}", ",".join(str(x) for x in wit)))
        pairs.append((f"pairings{idx}", ",".join(str(x) for x in sorted(pset))))
    print(_record(pairs))
    return EXIT_OK


def cmd_sk(args) -> int:
    gens = read_gens_file(args.gens)
    g = read_matrix_file(args.element)
    if g.params != gens.params or g.dim != gens.dim:
        raise SkwordError("element and generators live over different rings")
    table = build_base_table(gens)
    cert = certify_cover(build("A", gens.dim - 1), gens.params.p, seed=args.seed)
    t0 = time.time()
    word, stats = sk_approx(g, gens, args.n, table, cert)
    elapsed = time.time() - t0
    check = word_evaluate(word, gens)
    ok = (
        check.entries == g.entries
        if args.n == gens.params.N
        else all(
            (a - b) % gens.params.p**args.n == 0
            for a, b in zip(check.entries, g.entries)
        )
    )
    layers = ";".join(f"{m}:{stats.per_layer[m]}" for m in sorted(stats.per_layer))
    print(
        _record(
            [
                ("cmd", "sk"),
                ("p", gens.params.p),
                ("N", gens.params.N),
                ("n", args.n),
                ("seed", args.seed),
                ("r", stats.r),
                ("c2", stats.c2),
                ("reduced_len", stats.reduced_len),
                ("unreduced_len", stats.total_unreduced),
                ("bound", f"{stats.bound:.4f}"),
                ("layers", layers),
                ("ok", int(ok)),
                ("wall", f"{elapsed:.3f}"),
                ("word", '"' + format_word(word) + '"'),
            ]
        )
    )
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_diam(args) -> int:
    gens = read_gens_file(args.gens)
    t0 = time.time()
    table = bfs_distances(gens, args.n, cap=args.cap)
    diameter = exact_diameter(gens, args.n, table=table)
    print(
        _record(
            [
                ("cmd", "diam"),
                ("p", gens.params.p),
                ("n", args.n),
                ("seed", args.seed),
                ("order", table.closure_size),
                ("diameter", diameter),
                ("wall", f"{time.time() - t0:.3f}"),
            ]
        )
    )
    return EXIT_OK


def cmd_bound(args) -> int:
    d = d_exponent(args.i, args.r)
    c = default_C_bound(args.p, args.i, args.type, args.rank)
    print(
        _record(
            [
                ("cmd", "bound"),
                ("i", args.i),
                ("r", args.r),
                ("n", args.n),
                ("p", args.p),
                ("type", args.type),
                ("rank", args.rank),
                ("d", f"{d:.4f}"),
                ("c_bound", c),
                ("bound", f"{diam_bound(args.n, args.i, args.r, c):.6e}"),
            ]
        )
    )
    return EXIT_OK


def _suite_expolog(args, rng: Random) -> int:
    params = RingParams(args.p, args.N)
    failures = 0
    checked = 0
    for m in range(1, params.N + 1):
        rep = verify_weigel(params, args.rank + 1, m, args.samples, rng)
        failures += len(rep.failures)
        checked += rep.samples
    return _suite_report("expolog", args, checked, failures)


def _suite_commutator(args, rng: Random) -> int:
    params = RingParams(args.p, args.N)
    dim = args.rank + 1
    failures = 0
    for _ in range(args.samples):
        i = rng.randint(1, params.N - 2)
        j = rng.randint(1, params.N - 1 - i)
        a = random_lie(params, dim, rng)
        b = random_lie(params, dim, rng)
        got = commutator(exp_trunc(a, i), exp_trunc(b, j))
        lead = bracket(a, b)
        pij = params.p ** (i + j)
        mod = params.p ** (i + j + 1)
        for idx, x in enumerate(got.entries):
            ident = 1 if idx % (dim + 1) == 0 else 0
            if (x - ident - pij * lead.entries[idx]) % mod != 0:
                failures += 1
                break
    return _suite_report("commutator", args, args.samples, failures)


def _suite_skprime(args, rng: Random) -> int:
    params = RingParams(args.p, args.N)
    dim = args.rank + 1
    cert = certify_cover(build("A", args.rank), params.p, seed=args.seed)
    failures = 0
    for _ in range(args.samples):
        n = rng.randint(2, params.N - 1)
        g = random_in_gamma(params, dim, n, rng)
        pairs = sk_prime(g, n, cert)
        prod = identity(params, dim)
        lo_i, lo_j = (n + 1) // 2, n // 2
        ok = True
        for x, y in pairs:
            ok = ok and level(x) >= lo_i and level(y) >= lo_j
            prod = multiply(prod, commutator(x, y))
        mod = params.p ** (n + 1)
        ok = ok and all((a - b) % mod == 0 for a, b in zip(prod.entries, g.entries))
        if not ok:
            failures += 1
    return _suite_report("skprime", args, args.samples, failures)


def _suite_subadd(args, rng: Random) -> int:
    params = RingParams(args.p, args.N)
    failures = 0
    checked = 0
    sets_done = 0
    while sets_done < args.samples:
        gens = GenSet(
            tuple(random_element(params, args.rank + 1, rng) for _ in range(2))
        )
        table = bfs_distances(gens, params.N)
        if not table.complete:
            continue
        sets_done += 1
        n = params.N
        for j0 in range(n + 1):
            for j1 in range(j0, n + 1):
                for j2 in range(j1, n + 1):
                    checked += 1
                    if not check_subadditivity(gens, n, (j0, j1, j2), table=table):
                        failures += 1
    return _suite_report("subadd", args, checked, failures)


def _suite_report(suite: str, args, checked: int, failures: int) -> int:
    print(
        _record(
            [
                ("cmd", "verify"),
                ("suite", suite),
                ("p", args.p),
                ("N", args.N),
                ("rank", args.rank),
                ("samples", checked),
                ("seed", args.seed),
                ("failures", failures),
            ]
        )
    )
    return EXIT_OK if failures == 0 else EXIT_CHECK_FAILED


def cmd_verify(args) -> int:
    rng = Random(args.seed)
    suites = {
        "expolog": _suite_expolog,
        "commutator": _suite_commutator,
        "skprime": _suite_skprime,
        "subadd": _suite_subadd,
    }
    return suites[args.suite](args, rng)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skword",
        description="Exact short-word synthesis and diameter tools for SL_n(Z/p^N Z)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("certify", help="compute a covering certificate")
    c.add_argument("--type", required=True, choices=list("ABCDEFG"))
    c.add_argument("--rank", required=True, type=int)
    c.add_argument("--p", required=True, type=int)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--cache", default=None, help="certificate cache file")
    c.set_defaults(func=cmd_certify)

    s = sub.add_parser("sk", help="synthesize a word for an element")
    s.add_argument("--gens", required=True, help="generator file")
    s.add_argument("--element", required=True, help="matrix file")
    s.add_argument("--n", required=True, type=int, help="target precision")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_sk)

    d = sub.add_parser("diam", help="exact Cayley diameter by BFS")
    d.add_argument("--gens", required=True)
    d.add_argument("--n", required=True, type=int)
    d.add_argument("--cap", type=int, default=10**8)
    d.add_argument("--seed", type=int, default=0)
    d.set_defaults(func=cmd_diam)

    v = sub.add_parser("verify", help="run a property suite")
    v.add_argument(
        "--suite",
        required=True,
        choices=["expolog", "commutator", "skprime", "subadd"],
    )
    v.add_argument("--p", type=int, default=3)
    v.add_argument("--N", type=int, default=4)
    v.add_argument("--rank", type=int, default=1)
    v.add_argument("--samples", type=int, default=200)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bound", help="evaluate the length-bound formulas")
    b.add_argument("--i", required=True, type=int)
    b.add_argument("--r", required=True, type=int)
    b.add_argument("--n", required=True, type=int)
    b.add_argument("--p", required=True, type=int)
    b.add_argument("--type", default="A", choices=list("ABCDEFG"))
    b.add_argument("--rank", default=1, type=int)
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(func=cmd_bound)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SkwordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
