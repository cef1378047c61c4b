"""Shared fixtures: standard generating sets and seeded RNGs."""

import pytest
from random import Random

from skword.group import GenSet, group_element
from skword.modring import RingParams


def unipotent_pair(p: int, N: int) -> GenSet:
    """The standard upper/lower unipotent generators of SL_2(Z/p^N Z)."""
    params = RingParams(p, N)
    return GenSet(
        (
            group_element([[1, 1], [0, 1]], params),
            group_element([[1, 0], [1, 1]], params),
        )
    )


@pytest.fixture
def rng() -> Random:
    return Random(0xC0FFEE)


@pytest.fixture
def sl2_z27() -> GenSet:
    return unipotent_pair(3, 3)


@pytest.fixture
def sl2_z5_6() -> GenSet:
    return unipotent_pair(5, 6)
