from itertools import permutations
from random import Random

from skword.matops import (
    from_rows,
    identity_mat,
    int_det,
    mat_inv_mod,
    mat_mul,
    minor_det,
    rational_solve,
)


def naive_det(a, dim):
    """Leibniz expansion; exponential but an independent oracle."""
    total = 0
    for perm in permutations(range(dim)):
        sign = 1
        seen = list(perm)
        for i in range(dim):
            while seen[i] != i:
                j = seen[i]
                seen[i], seen[j] = seen[j], seen[i]
                sign = -sign
        term = sign
        for i in range(dim):
            term *= a[i * dim + perm[i]]
        total += term
    return total


def test_det_matches_leibniz():
    rnd = Random(5)
    for dim in (1, 2, 3, 4, 5):
        for _ in range(60):
            a = tuple(rnd.randint(-9, 9) for _ in range(dim * dim))
            assert int_det(a, dim) == naive_det(a, dim)


def test_det_singular_and_swaps():
    a = from_rows([[0, 1, 2], [0, 2, 4], [1, 0, 0]])
    assert int_det(a, 3) == naive_det(a, 3) == 0
    b = from_rows([[0, 1], [1, 0]])
    assert int_det(b, 2) == -1


def test_minor_det():
    a = from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert minor_det(a, 3, 2, 2) == 1 * 5 - 2 * 4


def test_inverse_mod_prime_power():
    rnd = Random(11)
    for p, n in [(3, 1), (3, 4), (5, 6), (7, 3)]:
        mod = p**n
        for dim in (2, 3):
            found = 0
            while found < 25:
                a = tuple(rnd.randrange(mod) for _ in range(dim * dim))
                if int_det(a, dim) % p == 0:
                    continue
                found += 1
                inv = mat_inv_mod(a, dim, p, n)
                assert mat_mul(a, inv, dim, mod) == identity_mat(dim)


def test_inverse_of_singular_is_none():
    assert mat_inv_mod((1, 1, 1, 1), 2, 5, 3) is None


def test_rational_solve_roundtrip():
    cols = [[1, 0, 2], [0, 1, 1]]
    target = [3, 4, 10]
    sol = rational_solve(cols, target)
    assert sol == [3, 4]
    assert rational_solve(cols, [1, 0, 0]) is None
