import pytest
from random import Random

from skword.errors import CertificateMismatch
from skword.expolog import random_lie
from skword.lie import (
    bracket,
    decompose_brackets,
    diagonal_witness,
    elementary,
    from_coords,
    lie_element,
    root_key,
    strong_perfectness_r,
    to_coords,
)
from skword.matops import mat_add
from skword.modring import RingParams
from skword.rootsys import build, certify_cover


def lie_sum(a, b):
    return lie_element(
        [
            [x + y for x, y in zip(ra, rb)]
            for ra, rb in zip(a.rows(), b.rows())
        ],
        a.params,
    )


def test_sl2_e_f_h():
    P = RingParams(5, 3)
    e = elementary(P, 2, 0, 1)
    f = elementary(P, 2, 1, 0)
    h = lie_element([[1, 0], [0, -1]], P)
    assert bracket(e, f).entries == h.entries
    assert bracket(h, h).is_zero()


def test_bracket_alternating_and_jacobi(rng):
    P = RingParams(3, 4)
    for _ in range(200):
        a = random_lie(P, 3, rng)
        b = random_lie(P, 3, rng)
        c = random_lie(P, 3, rng)
        assert bracket(a, a).is_zero()
        jac = lie_sum(
            lie_sum(bracket(a, bracket(b, c)), bracket(b, bracket(c, a))),
            bracket(c, bracket(a, b)),
        )
        assert jac.is_zero()


def test_trace_validation():
    P = RingParams(3, 2)
    with pytest.raises(ValueError):
        lie_element([[1, 0], [0, 1]], P)


def test_coords_examples():
    P = RingParams(7, 2)
    e = elementary(P, 2, 0, 1)
    c = to_coords(e)
    assert c.phi[root_key(0, 1, 2)] == 1
    assert c.phi[root_key(1, 0, 2)] == 0
    assert c.cartan == (0,)
    h = lie_element([[1, 0], [0, -1]], P)
    ch = to_coords(h)
    assert ch.cartan == (1,)
    assert all(v == 0 for v in ch.phi.values())


def test_coords_roundtrip(rng):
    for p, n, dim in [(3, 3, 2), (5, 2, 3), (7, 2, 4)]:
        P = RingParams(p, n)
        for _ in range(200):
            a = random_lie(P, dim, rng)
            assert from_coords(to_coords(a)).entries == a.entries


def test_simple_root_cross_brackets_vanish():
    # [e_r, e_(-s)] = 0 for distinct simple roots r, s, up to rank 8
    P = RingParams(3, 2)
    for dim in range(2, 10):
        for r in range(dim - 1):
            for s in range(dim - 1):
                if r == s:
                    continue
                er = elementary(P, dim, r, r + 1)
                fs = elementary(P, dim, s + 1, s)
                assert bracket(er, fs).is_zero()


def test_decompose_examples():
    P = RingParams(5, 4)
    cert = certify_cover(build("A", 1), 5)
    h = lie_element([[1, 0], [0, -1]], P)
    pairs = decompose_brackets(h, cert)
    assert len(pairs) == 1
    left, right = pairs[0]
    assert left.entries == elementary(P, 2, 0, 1).entries
    assert right.entries == elementary(P, 2, 1, 0).entries
    from skword.lie import zero

    assert decompose_brackets(zero(P, 2), cert) == []


def test_decompose_random_exact(rng):
    cases = [(5, 2, 1), (5, 6, 1), (3, 3, 2), (5, 2, 2), (7, 3, 3)]
    for p, n, rank in cases:
        P = RingParams(p, n)
        cert = certify_cover(build("A", rank), p)
        r = strong_perfectness_r(cert)
        assert r == cert.k + 1
        for _ in range(150):
            a = random_lie(P, rank + 1, rng)
            pairs = decompose_brackets(a, cert)
            assert len(pairs) <= r
            acc = None
            for left, right in pairs:
                term = bracket(left, right)
                acc = term if acc is None else lie_sum(acc, term)
            got = acc.entries if acc is not None else (0,) * (rank + 1) ** 2
            assert got == a.entries


def test_decompose_mismatch():
    P = RingParams(5, 2)
    cert = certify_cover(build("A", 1), 5)
    a = random_lie(RingParams(5, 2), 3, Random(1))
    with pytest.raises(CertificateMismatch):
        decompose_brackets(a, cert)
    cert7 = certify_cover(build("A", 1), 7)
    b = random_lie(P, 2, Random(1))
    with pytest.raises(CertificateMismatch):
        decompose_brackets(b, cert7)


def test_strong_perfectness_values():
    assert strong_perfectness_r(certify_cover(build("A", 1), 5)) == 2
    assert strong_perfectness_r(certify_cover(build("B", 4), 5)) == 3
    assert strong_perfectness_r(certify_cover(build("E", 8), 23)) == 3


def test_diagonal_witness_checks_zero_sum():
    P = RingParams(5, 2)
    with pytest.raises(ValueError):
        diagonal_witness((1, 1), P)
    d = diagonal_witness((1, -1), P)
    assert d.rows() == [[1, 0], [0, 24]]
