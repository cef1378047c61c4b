import pytest
from fractions import Fraction

from skword.errors import CoveringUnavailable, InvalidType
from skword.matops import rational_solve
from skword.rootsys import (
    CoveringCertificate,
    _support2_pair_decision,
    assign_classes,
    build,
    certify_cover,
    dot,
    format_certificate,
    load_certificates,
    pairing_values,
    recipe_witnesses,
    root_count,
    verify_certificate,
)

ALL_TYPES = [
    ("A", 1),
    ("A", 2),
    ("A", 4),
    ("B", 2),
    ("B", 4),
    ("B", 8),
    ("C", 2),
    ("C", 5),
    ("D", 3),
    ("D", 6),
    ("G", 2),
    ("F", 4),
    ("E", 6),
    ("E", 7),
    ("E", 8),
]


@pytest.mark.parametrize("type_label,rank", ALL_TYPES)
def test_root_counts(type_label, rank):
    rs = build(type_label, rank)
    assert len(rs.roots) == root_count(type_label, rank)
    assert all(any(x != 0 for x in s) for s in rs.roots)
    # closed under negation
    assert all(tuple(-x for x in s) in rs.roots for s in rs.roots)


def test_small_counts_by_formula():
    assert len(build("A", 1).roots) == 2
    assert len(build("B", 2).roots) == 8
    assert len(build("E", 8).roots) == 240


@pytest.mark.parametrize("type_label,rank", ALL_TYPES)
def test_simple_roots_span_with_uniform_sign(type_label, rank):
    rs = build(type_label, rank)
    cols = [list(a) for a in rs.simple_roots]
    assert len(rs.simple_roots) == rank
    for s in sorted(rs.roots):
        sol = rational_solve(cols, list(s))
        assert sol is not None, s
        assert all(c.denominator == 1 for c in sol), (s, sol)
        signs = {1 if c > 0 else -1 for c in sol if c != 0}
        assert len(signs) == 1, (s, sol)


def test_invalid_types():
    for bad in [("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E", 5), ("F", 3), ("G", 3), ("H", 2)]:
        with pytest.raises(InvalidType):
            build(*bad)


def test_certify_b4_p5():
    cert = certify_cover(build("B", 4), 5)
    assert cert.k == 2 and cert.r == 3
    assert cert.pairing_sets[0] <= {1, -1, 2, -2}
    assert cert.witnesses[0] == (1, 1, 1, 1)


def test_certify_g2():
    cert = certify_cover(build("G", 2), 7)
    assert cert.k == 1
    assert cert.pairing_sets[0] <= {v for a in range(1, 6) for v in (a, -a)}
    for p in (3, 5):
        with pytest.raises(CoveringUnavailable):
            certify_cover(build("G", 2), p)


def test_certify_e8():
    rs = build("E", 8)
    cert = certify_cover(rs, 23)
    assert cert.k == 2
    assert cert.witnesses == ((1,) * 8, (0, 1, 2, -2, 3, -3, 4, -4))
    assert cert.pairing_sets[0] <= {v for a in (2, 4, 8) for v in (a, -a)}
    assert max(abs(v) for v in cert.pairing_sets[1]) == 19
    # the recipe collapses at p = 19: 19 lies in the balanced pairing set
    wits = recipe_witnesses(rs, 19)
    assert assign_classes(rs, wits, 19) is None
    classes23 = assign_classes(rs, wits, 23)
    balanced_vals = pairing_values(classes23[1], wits[1])
    assert 19 in balanced_vals
    # certify still succeeds at 19 through the fallback search
    cert19 = certify_cover(rs, 19)
    assert cert19.k == 2 and verify_certificate(rs, cert19, 19)


def test_certify_f4():
    rs = build("F", 4)
    # the stated recipe only covers from p = 7 up: at p = 5 the balanced
    # class contains a +-5 pairing (split {1,2} vs {0,-2})
    wits = recipe_witnesses(rs, 5)
    assert assign_classes(rs, wits, 5) is None
    balanced = [s for s in rs.roots if dot(wits[0], s) % 5 == 0]
    assert 5 in {abs(v) for v in pairing_values(balanced, wits[1])}
    cert5 = certify_cover(rs, 5)
    assert cert5.k == 2 and verify_certificate(rs, cert5, 5)
    cert7 = certify_cover(rs, 7)
    assert cert7.witnesses == ((1, 1, 1, 1), (0, 1, 2, -2))
    assert cert7.pairing_sets[0] <= {1, -1, 2, -2, 4, -4}


def test_certify_type_a():
    for p, rank in [(3, 1), (3, 2), (5, 3), (7, 4)]:
        rs = build("A", rank)
        cert = certify_cover(rs, p)
        assert cert.k == 1 and cert.r == 2
        assert all(sum(w) == 0 for w in cert.witnesses)
    with pytest.raises(CoveringUnavailable):
        certify_cover(build("A", 3), 3)  # 4 residues needed mod 3


@pytest.mark.parametrize("p", [5, 7, 11])
@pytest.mark.parametrize("type_label", ["B", "C", "D"])
def test_bcd_coverings(type_label, p):
    lo = 3 if type_label == "D" else 2
    for rank in range(lo, 9):
        if 2 * (p - 1) < rank:
            continue
        rs = build(type_label, rank)
        cert = certify_cover(rs, p)
        assert cert.k == 2
        assert verify_certificate(rs, cert, p)
        if (type_label, rank, p) in [("B", 8, 5), ("C", 8, 5)]:
            # no 2-covering with a {+-1,+-2}-valued class exists here; the
            # complete support-2 decision proves it
            assert _support2_pair_decision(rs, p) is None
            assert not (cert.pairing_sets[0] <= {1, -1, 2, -2})
        else:
            assert cert.pairing_sets[0] <= {1, -1, 2, -2}


def test_verify_catches_mutations():
    rs = build("B", 4)
    cert = certify_cover(rs, 5)
    assert verify_certificate(rs, cert, 5)
    # wrong prime: 2 divides a pairing value
    assert not verify_certificate(rs, cert, 2)
    # move a root across classes so a zero pairing appears
    moved = CoveringCertificate(
        cert.type_label,
        cert.rank,
        cert.p,
        cert.k,
        (cert.classes[0] + (cert.classes[1][0],), cert.classes[1][1:]),
        cert.witnesses,
        cert.pairing_sets,
    )
    assert not verify_certificate(rs, moved, 5)
    # drop a root entirely
    dropped = CoveringCertificate(
        cert.type_label,
        cert.rank,
        cert.p,
        cert.k,
        (cert.classes[0][1:], cert.classes[1]),
        cert.witnesses,
        cert.pairing_sets,
    )
    assert not verify_certificate(rs, dropped, 5)


def test_certificate_file_roundtrip(tmp_path):
    path = str(tmp_path / "certs.txt")
    rs = build("B", 4)
    cert = certify_cover(rs, 5, cache_path=path)
    loaded = load_certificates(path)
    assert loaded == [cert]
    # a second call hits the cache and returns the identical certificate
    again = certify_cover(rs, 5, cache_path=path)
    assert again == cert
    assert format_certificate(cert).startswith("certificate B 4 5 2\n")
