import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skword.errors import NotAUnit
from skword.modring import (
    RingParams,
    factorial_valuation,
    invert,
    is_prime,
    reduce,
    valuation,
)

PARAMS = st.sampled_from([RingParams(p, n) for p in (3, 5, 7) for n in range(1, 7)])


def test_reduce_examples():
    assert reduce(10, RingParams(3, 2)).value == 1
    assert reduce(-1, RingParams(5, 2)).value == 24
    assert reduce(0, RingParams(7, 3)).value == 0


def test_invert_examples():
    nine = RingParams(3, 2)
    assert invert(reduce(2, nine)).value == 5
    assert invert(reduce(1, RingParams(7, 4))).value == 1
    with pytest.raises(NotAUnit):
        invert(reduce(3, nine))


def test_valuation_examples():
    assert valuation(reduce(18, RingParams(3, 3))) == 2
    assert valuation(reduce(0, RingParams(5, 4))) == 4
    assert valuation(reduce(7, RingParams(3, 3))) == 0


def test_factorial_valuation():
    assert factorial_valuation(6, 3) == 2  # 720 = 3^2 * 80
    assert factorial_valuation(0, 5) == 0
    assert factorial_valuation(25, 5) == 6  # 5 + 1
    # Legendre's formula agrees with digit sums
    for k in range(100):
        for p in (3, 5, 7):
            digits = []
            q = k
            while q:
                digits.append(q % p)
                q //= p
            assert factorial_valuation(k, p) == (k - sum(digits)) // (p - 1)


def test_params_validation():
    with pytest.raises(ValueError):
        RingParams(2, 3)
    with pytest.raises(ValueError):
        RingParams(9, 2)
    with pytest.raises(ValueError):
        RingParams(5, 0)
    assert not is_prime(1)


@given(PARAMS, st.integers(), st.integers())
def test_ring_homomorphism(params, x, y):
    assert (reduce(x, params) + reduce(y, params)).value == reduce(x + y, params).value
    assert (reduce(x, params) * reduce(y, params)).value == reduce(x * y, params).value
    assert (-reduce(x, params)).value == reduce(-x, params).value


@given(PARAMS, st.integers(), st.integers(), st.integers())
def test_ring_axioms(params, x, y, z):
    a, b, c = (reduce(v, params) for v in (x, y, z))
    assert ((a + b) + c).value == (a + (b + c)).value
    assert (a * (b + c)).value == (a * b + a * c).value
    assert (a * b).value == (b * a).value


@given(PARAMS, st.integers())
def test_valuation_of_products(params, x):
    a = reduce(x, params)
    b = reduce(x * params.p, params)
    assert valuation(b) >= min(valuation(a) + 1, params.N)


@settings(max_examples=30)
@given(st.sampled_from([(p, n) for p in (3, 5, 7) for n in range(1, 7)]), st.randoms(use_true_random=False))
def test_unit_inversion_samples(pn, rnd):
    params = RingParams(*pn)
    for _ in range(50):
        v = rnd.randrange(1, params.modulus)
        if v % params.p == 0:
            continue
        a = reduce(v, params)
        assert (invert(a) * a).value == 1


def test_valuation_product_rule(rng):
    for p, n in [(3, 4), (5, 3), (7, 2)]:
        params = RingParams(p, n)
        for _ in range(300):
            a = reduce(rng.randrange(params.modulus), params)
            b = reduce(rng.randrange(params.modulus), params)
            assert valuation(a * b) == min(valuation(a) + valuation(b), params.N)
